//! The structured-text definition of a graded algebra instance:
//! canonical JSON with exact rational entries as numerator/denominator
//! pairs, an optional designated base, and an optional construction
//! provenance that must reconstruct to an identical table.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::{tensor_product, GradedAlgebra};
use crate::constructions::{
    group_algebra, group_algebra_on_grade_group, quaternion_algebra, twisted_group_algebra,
    Cocycle,
};
use crate::error::Error;
use crate::grade_group::GradeGroup;
use crate::groups;
use crate::k0::K0Shape;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BasisEntry {
    pub name: String,
    pub degree: Vec<i64>,
}

/// How a file was constructed; reconstruction must reproduce the table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// group algebra of a named finite group
    GroupAlgebra { group: String },
    /// group algebra of the grade group itself
    GradeGroupAlgebra,
    /// twisted group algebra of the grade group, cocycle on the element
    /// enumeration order
    Twisted { cocycle: Vec<Vec<(i64, i64)>> },
    Quaternion { a: i64, b: i64 },
    Tensor { left: Box<AlgebraFile>, right: Box<AlgebraFile> },
    Opposite { inner: Box<AlgebraFile> },
    MatrixShift { inner: Box<AlgebraFile>, shifts: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: String,
    pub grade_group: GradeGroup,
    pub basis: Vec<BasisEntry>,
    /// sparse [i, j, k, numerator, denominator], lexicographic in (i,j,k)
    pub structure: Vec<(usize, usize, usize, i64, i64)>,
    pub unit: Vec<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

fn scalar_to_pair(s: &Scalar) -> Result<(i64, i64), Error> {
    let (n, d) = s.to_ratio();
    let n = n.to_i64().ok_or_else(|| {
        Error::Unsupported("file coefficients are capped at 64 bits".into())
    })?;
    let d = d.to_i64().ok_or_else(|| {
        Error::Unsupported("file coefficients are capped at 64 bits".into())
    })?;
    Ok((n, d))
}

pub fn parse_field(text: &str) -> Result<FieldSpec, Error> {
    if text == "Q" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(p) = text.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad field designator {text:?}")))?;
        return FieldSpec::prime(p);
    }
    Err(Error::Parse(format!(
        "bad field designator {text:?} (expected \"Q\" or \"F<p>\")"
    )))
}

impl AlgebraFile {
    pub fn from_algebra(
        a: &GradedAlgebra,
        name: Option<String>,
        provenance: Option<Provenance>,
    ) -> Result<AlgebraFile, Error> {
        let mut structure = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let mut entries: Vec<(usize, Scalar)> = a
                    .basis_product(i, j)
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .cloned()
                    .collect();
                entries.sort_by_key(|(k, _)| *k);
                for (k, c) in entries {
                    let (n, d) = scalar_to_pair(&c)?;
                    structure.push((i, j, k, n, d));
                }
            }
        }
        let unit: Result<Vec<(i64, i64)>, Error> =
            a.unit_vec().iter().map(scalar_to_pair).collect();
        Ok(AlgebraFile {
            name,
            field: a.field.to_string(),
            grade_group: a.group.clone(),
            basis: a
                .degrees()
                .iter()
                .zip(a.names())
                .map(|(d, n)| BasisEntry { name: n.clone(), degree: d.coords().to_vec() })
                .collect(),
            structure,
            unit: unit?,
            base: a.base_indices().map(|b| b.to_vec()),
            provenance,
        })
    }

    /// Builds and validates the algebra; when provenance is present the
    /// reconstruction must produce an identical table.
    pub fn to_algebra(&self) -> Result<GradedAlgebra, Error> {
        let a = self.to_algebra_unchecked()?;
        let report = a.validate();
        if !report.ok() {
            return Err(Error::InvalidAlgebra(report.violations.join("; ")));
        }
        if let Some(p) = &self.provenance {
            let rebuilt = p.reconstruct(a.field, &a.group)?;
            if !a.same_table(&rebuilt) {
                return Err(Error::Parse(
                    "provenance does not reconstruct to the stated table".into(),
                ));
            }
        }
        Ok(a)
    }

    fn to_algebra_unchecked(&self) -> Result<GradedAlgebra, Error> {
        let field = parse_field(&self.field)?;
        let n = self.basis.len();
        let degrees = self
            .basis
            .iter()
            .map(|b| self.grade_group.element(b.degree.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let names = self.basis.iter().map(|b| b.name.clone()).collect();
        let mut table = vec![vec![Vec::new(); n]; n];
        for &(i, j, k, num, den) in &self.structure {
            if i >= n || j >= n || k >= n {
                return Err(Error::Parse(format!(
                    "structure index ({i},{j},{k}) out of range"
                )));
            }
            let c = field.from_ratio(num, den)?;
            if c.is_zero() {
                continue;
            }
            table[i][j].push((k, c));
        }
        let unit = self
            .unit
            .iter()
            .map(|&(num, den)| field.from_ratio(num, den))
            .collect::<Result<Vec<_>, _>>()?;
        GradedAlgebra::new(
            field,
            self.grade_group.clone(),
            degrees,
            names,
            table,
            unit,
            self.base.clone(),
        )
    }

    /// Canonical serialization: 2-space pretty JSON plus a newline, with
    /// structure entries sorted lexicographically.
    pub fn to_canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.structure.sort();
        let mut s = serde_json::to_string_pretty(&copy).expect("serializable");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<AlgebraFile, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The designated base elements, from the index list.
    pub fn base_elements(&self, a: &GradedAlgebra) -> Option<Vec<Vec<Scalar>>> {
        self.base
            .as_ref()
            .map(|idxs| idxs.iter().map(|&i| a.basis_vec(i)).collect())
    }

    /// The supported K0 shape derived from the provenance: a shifted
    /// matrix algebra over a division-shaped inner file.
    pub fn k0_shape(&self) -> Result<Option<K0Shape>, Error> {
        match &self.provenance {
            Some(Provenance::MatrixShift { inner, shifts }) => {
                let d = inner.to_algebra()?;
                let shifts = shifts
                    .iter()
                    .map(|c| d.group.element(c.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Some(K0Shape::MatrixOverDivision { division: d, shifts }))
            }
            _ => Ok(None),
        }
    }

    /// The designated base derived from the structure: explicit indices
    /// when present, or the scalar matrices of a matrix-shift file.
    pub fn derived_base(&self, a: &GradedAlgebra) -> Result<Option<Vec<Vec<Scalar>>>, Error> {
        if let Some(b) = self.base_elements(a) {
            return Ok(Some(b));
        }
        if let Some(Provenance::MatrixShift { inner, shifts }) = &self.provenance {
            let d = inner.to_algebra()?;
            let n = shifts.len();
            let base = (0..d.dim())
                .map(|h| crate::azumaya::scalar_matrix_embedding(&d, n, &d.basis_vec(h)))
                .collect();
            return Ok(Some(base));
        }
        Ok(None)
    }
}

impl Provenance {
    pub fn reconstruct(&self, field: FieldSpec, group: &GradeGroup) -> Result<GradedAlgebra, Error> {
        match self {
            Provenance::GroupAlgebra { group: name } => {
                let g = groups::by_name(name)
                    .ok_or_else(|| Error::Parse(format!("unknown group {name:?}")))?;
                group_algebra(field, &g)
            }
            Provenance::GradeGroupAlgebra => group_algebra_on_grade_group(field, group),
            Provenance::Twisted { cocycle } => {
                let table = cocycle
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|&(n, d)| field.from_ratio(n, d))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                twisted_group_algebra(field, &Cocycle::new(group, table)?)
            }
            Provenance::Quaternion { a, b } => quaternion_algebra(field, *a, *b),
            Provenance::Tensor { left, right } => {
                tensor_product(&left.to_algebra()?, &right.to_algebra()?)
            }
            Provenance::Opposite { inner } => Ok(inner.to_algebra()?.opposite()),
            Provenance::MatrixShift { inner, shifts } => {
                let d = inner.to_algebra()?;
                let shifts = shifts
                    .iter()
                    .map(|c| d.group.element(c.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                d.matrix_shift(&shifts)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::quaternion_algebra as quat;

    #[test]
    fn round_trip_is_byte_identical_for_the_corpus() {
        for e in crate::corpus::corpus() {
            let file = AlgebraFile::from_algebra(&e.algebra, Some(e.name.into()), None).unwrap();
            let text = file.to_canonical_json();
            let reparsed = AlgebraFile::parse(&text).unwrap();
            assert_eq!(text, reparsed.to_canonical_json(), "{} round trip", e.name);
            let a2 = reparsed.to_algebra().unwrap();
            assert!(a2.same_table(&e.algebra), "{} table fidelity", e.name);
        }
    }

    #[test]
    fn provenance_reconstruction_is_checked() {
        let q = quat(FieldSpec::Rational, -1, -1).unwrap();
        let good = AlgebraFile::from_algebra(
            &q,
            None,
            Some(Provenance::Quaternion { a: -1, b: -1 }),
        )
        .unwrap();
        assert!(good.to_algebra().is_ok());
        let bad = AlgebraFile::from_algebra(
            &q,
            None,
            Some(Provenance::Quaternion { a: 1, b: 1 }),
        )
        .unwrap();
        assert!(matches!(bad.to_algebra(), Err(Error::Parse(_))));
    }

    #[test]
    fn matrix_shift_provenance_supplies_shape_and_base() {
        let g = GradeGroup::cyclic(2);
        let r = group_algebra_on_grade_group(FieldSpec::Rational, &g).unwrap();
        let inner = AlgebraFile::from_algebra(&r, None, Some(Provenance::GradeGroupAlgebra)).unwrap();
        let m = r.matrix_shift(&[g.zero(), g.element(vec![1]).unwrap()]).unwrap();
        let file = AlgebraFile::from_algebra(
            &m,
            Some("matrix-q-z2-01".into()),
            Some(Provenance::MatrixShift { inner: Box::new(inner), shifts: vec![vec![0], vec![1]] }),
        )
        .unwrap();
        let a = file.to_algebra().unwrap();
        assert!(file.k0_shape().unwrap().is_some());
        let base = file.derived_base(&a).unwrap().unwrap();
        assert_eq!(base.len(), 2);
        assert!(crate::algebra::validate_designated_base(&a, &base).is_ok());
    }

    #[test]
    fn parse_errors_carry_diagnostics() {
        assert!(matches!(AlgebraFile::parse("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_field("F6"), Err(Error::NotPrime(6))));
        assert!(matches!(parse_field("R"), Err(Error::Parse(_))));
    }
}
