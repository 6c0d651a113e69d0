//! Tensor products (over the ground field and over a designated central
//! graded subfield) and quotients by graded two-sided ideals.

use crate::error::Error;
use crate::grade_group::{self, GroupElement};
use crate::matrix::Echelon;
use crate::scalar::Scalar;

use super::{GradedAlgebra, GradedSubspace, SparseVec};

/// Tensor product over the ground field: degrees add, structure
/// constants multiply componentwise.
pub fn tensor_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, Error> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    if a.group != b.group {
        return Err(Error::GroupMismatch);
    }
    let na = a.dim();
    let nb = b.dim();
    let dim = na * nb;
    let idx = |i: usize, j: usize| i * nb + j;
    let mut degrees = Vec::with_capacity(dim);
    let mut names = Vec::with_capacity(dim);
    for i in 0..na {
        for j in 0..nb {
            degrees.push(grade_group::add(&a.degrees()[i], &b.degrees()[j])?);
            names.push(format!("{}⊗{}", a.names()[i], b.names()[j]));
        }
    }
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    let mut entry: SparseVec = Vec::new();
                    for (m, c1) in a.basis_product(i, k) {
                        for (n2, c2) in b.basis_product(j, l) {
                            entry.push((idx(*m, *n2), c1.mul(c2)));
                        }
                    }
                    table[idx(i, j)][idx(k, l)] = entry;
                }
            }
        }
    }
    let mut unit = vec![a.field.zero(); dim];
    for (i, ci) in a.unit_vec().iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (j, cj) in b.unit_vec().iter().enumerate() {
            if !cj.is_zero() {
                unit[idx(i, j)] = ci.mul(cj);
            }
        }
    }
    GradedAlgebra::new(a.field, a.group.clone(), degrees, names, table, unit, None)
}

/// Section-based projection onto a quotient by a homogeneous subspace.
pub struct QuotientMap {
    ech: Echelon,
    keep: Vec<usize>,
    ambient_dim: usize,
}

impl QuotientMap {
    /// Coordinates of the class of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ech.reduce(v.to_vec());
        self.keep.iter().map(|&i| r[i].clone()).collect()
    }

    /// The canonical section: quotient coordinates back into the ambient
    /// space (supported on non-pivot basis vectors).
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let field = self.ech.field;
        let mut v = vec![field.zero(); self.ambient_dim];
        for (slot, &i) in self.keep.iter().enumerate() {
            v[i] = q[slot].clone();
        }
        v
    }
}

/// Quotient of an algebra by a two-sided ideal spanned by homogeneous
/// vectors. The subspace is verified to be a two-sided ideal.
pub fn quotient_by_homogeneous_subspace(
    a: &GradedAlgebra,
    ideal: &GradedSubspace,
) -> Result<(GradedAlgebra, QuotientMap), Error> {
    let n = a.dim();
    let mut ech = Echelon::new(a.field, n);
    for (_, v) in &ideal.basis {
        if !a.is_homogeneous(v) {
            return Err(Error::NotHomogeneous);
        }
        ech.insert(v.clone());
    }
    for (_, v) in &ideal.basis {
        for i in 0..n {
            let b = a.basis_vec(i);
            if !ech.contains(&a.mul_vecs(&b, v)) || !ech.contains(&a.mul_vecs(v, &b)) {
                return Err(Error::InvalidAlgebra(
                    "subspace is not a two-sided ideal".into(),
                ));
            }
        }
    }
    if ech.rank() == n {
        return Err(Error::InvalidAlgebra("quotient by the whole algebra".into()));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !ech.pivots.contains(i)).collect();
    let map = QuotientMap { ech, keep: keep.clone(), ambient_dim: n };
    let m = keep.len();
    let mut table = vec![vec![Vec::new(); m]; m];
    for (i2, &i) in keep.iter().enumerate() {
        for (j2, &j) in keep.iter().enumerate() {
            let prod = a.mul_vecs(&a.basis_vec(i), &a.basis_vec(j));
            let q = map.project(&prod);
            table[i2][j2] = q
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    let unit = map.project(a.unit_vec());
    let qa = GradedAlgebra::new(
        a.field,
        a.group.clone(),
        keep.iter().map(|&i| a.degrees()[i].clone()).collect(),
        keep.iter().map(|&i| a.names()[i].clone()).collect(),
        table,
        unit,
        None,
    )?;
    Ok((qa, map))
}

/// Tensor product over a central span: the quotient of the ground-field
/// tensor by the balancing relations (r a) ⊗ b - a ⊗ (r b), for paired
/// central homogeneous elements r of the two factors.
pub fn tensor_over_central_pairs(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    pairs: &[(Vec<Scalar>, Vec<Scalar>)],
) -> Result<(GradedAlgebra, QuotientMap), Error> {
    for (ra, rb) in pairs {
        if !a.is_central(ra) || !b.is_central(rb) {
            return Err(Error::InvalidBase("pair element is not central".into()));
        }
    }
    let t0 = tensor_product(a, b)?;
    let nb = b.dim();
    let idx = |i: usize, j: usize| i * nb + j;
    let mut gens: Vec<(GroupElement, Vec<Scalar>)> = Vec::new();
    for (ra, rb) in pairs {
        for i in 0..a.dim() {
            let rai = a.mul_vecs(ra, &a.basis_vec(i));
            for j in 0..b.dim() {
                let rbj = b.mul_vecs(rb, &b.basis_vec(j));
                let mut v = t0.zero_vec();
                for (m, c) in rai.iter().enumerate() {
                    if !c.is_zero() {
                        v[idx(m, j)] = v[idx(m, j)].add(c);
                    }
                }
                for (m, c) in rbj.iter().enumerate() {
                    if !c.is_zero() {
                        v[idx(i, m)] = v[idx(i, m)].sub(c);
                    }
                }
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let deg = t0.degree_of(&v)?.ok_or(Error::NotHomogeneous)?;
                gens.push((deg, v));
            }
        }
    }
    let (qa, map) = quotient_by_homogeneous_subspace(&t0, &GradedSubspace { basis: gens })?;
    Ok((qa, map))
}

/// Tensor product over a designated central graded subfield spanned by
/// paired basis subsets of the two factors: the quotient of the
/// ground-field tensor by the balancing relations
/// (r a) ⊗ b - a ⊗ (r b).
pub fn tensor_over_base(
    a: &GradedAlgebra,
    a_base: &[usize],
    b: &GradedAlgebra,
    b_base: &[usize],
) -> Result<(GradedAlgebra, QuotientMap), Error> {
    if a_base.len() != b_base.len() {
        return Err(Error::InvalidBase("base index lists differ in length".into()));
    }
    // the paired spans must carry the same structure
    for (h, (&ia, &ib)) in a_base.iter().zip(b_base).enumerate() {
        if a.degrees()[ia] != b.degrees()[ib] {
            return Err(Error::InvalidBase(format!(
                "base elements {h} have different degrees"
            )));
        }
        if !a.is_central(&a.basis_vec(ia)) || !b.is_central(&b.basis_vec(ib)) {
            return Err(Error::InvalidBase(format!(
                "base element {h} is not central in both factors"
            )));
        }
    }
    for (&ia, &ib) in a_base.iter().zip(b_base) {
        for (&ja, &jb) in a_base.iter().zip(b_base) {
            let pa = normalize_on(a.basis_product(ia, ja), a_base);
            let pb = normalize_on(b.basis_product(ib, jb), b_base);
            match (pa, pb) {
                (Some(va), Some(vb)) if va == vb => {}
                _ => {
                    return Err(Error::InvalidBase(
                        "paired base subsets have different structure constants".into(),
                    ))
                }
            }
        }
    }
    let pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = a_base
        .iter()
        .zip(b_base)
        .map(|(&ia, &ib)| (a.basis_vec(ia), b.basis_vec(ib)))
        .collect();
    tensor_over_central_pairs(a, b, &pairs)
}

/// Structure constants restricted to a designated subset, in subset
/// coordinates; None when the product leaves the span.
fn normalize_on(entry: &SparseVec, subset: &[usize]) -> Option<Vec<(usize, Scalar)>> {
    let mut out = Vec::new();
    for (k, c) in entry {
        if c.is_zero() {
            continue;
        }
        match subset.iter().position(|&s| s == *k) {
            Some(pos) => out.push((pos, c.clone())),
            None => return None,
        }
    }
    out.sort_by_key(|(k, _)| *k);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra_on_grade_group, quaternion_algebra};
    use crate::grade_group::GradeGroup;
    use crate::scalar::FieldSpec;

    #[test]
    fn tensor_with_ground_field_is_identity() {
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let k = GradedAlgebra::ground_field(FieldSpec::Rational, &GradeGroup::klein());
        let t = tensor_product(&q, &k).unwrap();
        assert!(t.validate().ok());
        assert_eq!(t.dim(), 4);
        assert_eq!(t.degrees(), q.degrees());
        // identical structure constants under the index identification
        for i in 0..4 {
            for j in 0..4 {
                let mut lhs = t.basis_product(i, j).clone();
                let mut rhs = q.basis_product(i, j).clone();
                lhs.sort_by_key(|(k, _)| *k);
                rhs.sort_by_key(|(k, _)| *k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn group_algebra_tensor_square() {
        let g = GradeGroup::cyclic(2);
        let a = group_algebra_on_grade_group(FieldSpec::Rational, &g).unwrap();
        let t = tensor_product(&a, &a).unwrap();
        assert!(t.validate().ok());
        assert_eq!(t.dim(), 4);
        let supp = t.support();
        assert_eq!(supp.len(), 2);
    }

    #[test]
    fn quaternion_tensor_square_is_simple_with_scalar_center() {
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let t = tensor_product(&q, &q).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(t.validate().ok());
        assert!(crate::algebra::is_graded_simple(&t).unwrap().verdict.is_true());
        assert_eq!(crate::algebra::center(&t).dim(), 1);
    }

    #[test]
    fn quotient_by_nilpotent_ideal() {
        // upper triangular 2x2 over Q, Z-graded with deg E12 = 1
        let ut = crate::constructions::upper_triangular_2x2(FieldSpec::Rational);
        let e12 = ut.basis_vec(1);
        let ideal = crate::algebra::graded_ideal_closure(&ut, &[e12]).unwrap();
        assert_eq!(ideal.dim(), 1);
        let (q, map) = quotient_by_homogeneous_subspace(&ut, &ideal).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.validate().ok());
        assert!(q.is_commutative());
        let _ = map;
    }

    #[test]
    fn tensor_over_base_collapses_scalars() {
        // Q[Z2] ⊗_{Q[Z2]} Q[Z2] has rank 1 over the base, so dimension 2
        let g = GradeGroup::cyclic(2);
        let r = group_algebra_on_grade_group(FieldSpec::Rational, &g).unwrap();
        let base: Vec<usize> = (0..2).collect();
        let (t, _) = tensor_over_base(&r, &base, &r, &base).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.validate().ok());
    }
}
