//! Finite-dimensional graded algebras presented by a homogeneous basis
//! with a degree map and structure constants.

mod build;
mod predicates;
mod structure;

pub use build::{
    quotient_by_homogeneous_subspace, tensor_over_base, tensor_over_central_pairs, tensor_product,
    QuotientMap,
};
pub use predicates::{
    is_graded_central_simple, is_graded_division_ring, is_graded_field, is_graded_simple,
    invertible_support, validate_designated_base, DivisionCheck, EnumerationCaps, SimpleCheck,
    SupportCheck,
};
pub use structure::{
    block_count, center, graded_ideal_closure, graded_radical_part, jacobson_radical,
    min_poly, split_central_idempotents, SubalgebraView,
};

use crate::error::Error;
use crate::grade_group::{self, GradeGroup, GroupElement};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// Sparse coefficient vector: (basis index, nonzero coefficient).
pub type SparseVec = Vec<(usize, Scalar)>;

/// A graded algebra over an exact field: homogeneous basis b_1..b_n with
/// deg(b_i) in the grade group, products b_i b_j = sum_k c_ij^k b_k, a
/// distinguished unit vector, and an optional designated central graded
/// subfield spanned by a subset of the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    pub field: FieldSpec,
    pub group: GradeGroup,
    degrees: Vec<GroupElement>,
    names: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    unit: Vec<Scalar>,
    base: Option<Vec<usize>>,
}

/// An element tied to its parent algebra's basis; the homogeneous
/// decomposition of any element is unique (direct-sum property).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    pub coeffs: Vec<Scalar>,
}

impl GradedAlgebra {
    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<AlgebraElement, Error> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        for c in &coeffs {
            if c.field() != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(AlgebraElement { coeffs })
    }
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, a: &GradedAlgebra, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coeffs: a.mul_vecs(&self.coeffs, &other.coeffs) }
    }

    pub fn degree(&self, a: &GradedAlgebra) -> Result<Option<GroupElement>, Error> {
        a.degree_of(&self.coeffs)
    }

    pub fn homogeneous_parts(&self, a: &GradedAlgebra) -> Vec<(GroupElement, AlgebraElement)> {
        a.homogeneous_components(&self.coeffs)
            .into_iter()
            .map(|(d, v)| (d, AlgebraElement { coeffs: v }))
            .collect()
    }
}

/// A subspace with a homogeneous basis, grouped by degree.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    pub basis: Vec<(GroupElement, Vec<Scalar>)>,
}

impl GradedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.basis.iter().map(|(_, v)| v)
    }
}

/// Outcome of `validate`; `violations` names each failed invariant, the
/// first entry being the first violated triple found.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GradedAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldSpec,
        group: GradeGroup,
        degrees: Vec<GroupElement>,
        names: Vec<String>,
        table: Vec<Vec<SparseVec>>,
        unit: Vec<Scalar>,
        base: Option<Vec<usize>>,
    ) -> Result<GradedAlgebra, Error> {
        let n = degrees.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("the zero algebra has no unit".into()));
        }
        if names.len() != n || unit.len() != n || table.len() != n {
            return Err(Error::Shape("basis, names, unit and table sizes disagree".into()));
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::Shape("structure table is not square".into()));
            }
            for entry in row {
                for (k, c) in entry {
                    if *k >= n {
                        return Err(Error::Shape(format!("structure index {k} out of range")));
                    }
                    if c.field() != field {
                        return Err(Error::FieldMismatch);
                    }
                }
            }
        }
        for d in &degrees {
            if d.group() != &group {
                return Err(Error::GroupMismatch);
            }
        }
        for c in &unit {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        if let Some(b) = &base {
            if b.iter().any(|&i| i >= n) {
                return Err(Error::Shape("base index out of range".into()));
            }
        }
        Ok(GradedAlgebra { field, group, degrees, names, table, unit, base })
    }

    /// The ground field as a 1-dimensional algebra, trivially graded.
    pub fn ground_field(field: FieldSpec, group: &GradeGroup) -> GradedAlgebra {
        GradedAlgebra::new(
            field,
            group.clone(),
            vec![group.zero()],
            vec!["1".into()],
            vec![vec![vec![(0, field.one())]]],
            vec![field.one()],
            Some(vec![0]),
        )
        .expect("ground field is well-formed")
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit_vec(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn base_indices(&self) -> Option<&[usize]> {
        self.base.as_deref()
    }

    pub fn with_base(mut self, base: Option<Vec<usize>>) -> GradedAlgebra {
        self.base = base;
        self
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn mul_vecs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, t) in &self.table[i][j] {
                    out[*k] = out[*k].add(&c.mul(t));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by x on the basis.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(self.field, n, n);
        for j in 0..n {
            let col = self.mul_vecs(x, &self.basis_vec(j));
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by x on the basis.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(self.field, n, n);
        for j in 0..n {
            let col = self.mul_vecs(&self.basis_vec(j), x);
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.mul_vecs(&self.basis_vec(i), &self.basis_vec(j));
                let ji = self.mul_vecs(&self.basis_vec(j), &self.basis_vec(i));
                if ij != ji {
                    return false;
                }
            }
        }
        true
    }

    /// Invertibility of x, decided by bijectivity of left multiplication
    /// (a one-sided inverse is two-sided in a finite-dimensional unital
    /// algebra).
    pub fn is_invertible(&self, x: &[Scalar]) -> bool {
        self.left_mul_matrix(x).rank() == self.dim()
    }

    pub fn inverse_of(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let t = self.left_mul_matrix(x).solve(&self.unit)?;
        debug_assert_eq!(self.mul_vecs(&t, x), self.unit);
        Some(t)
    }

    /// Support: degrees with a nonzero component, sorted by coordinates.
    pub fn support(&self) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = Vec::new();
        for d in &self.degrees {
            if !out.contains(d) {
                out.push(d.clone());
            }
        }
        out.sort_by_key(|d| d.coords().to_vec());
        out
    }

    pub fn component_indices(&self, degree: &GroupElement) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.degrees[i] == degree).collect()
    }

    pub fn component_dim(&self, degree: &GroupElement) -> usize {
        self.component_indices(degree).len()
    }

    /// Splits x into homogeneous parts; re-summing them recovers x.
    pub fn homogeneous_components(&self, x: &[Scalar]) -> Vec<(GroupElement, Vec<Scalar>)> {
        let mut out: Vec<(GroupElement, Vec<Scalar>)> = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = &self.degrees[i];
            match out.iter_mut().find(|(g, _)| g == d) {
                Some((_, v)) => v[i] = c.clone(),
                None => {
                    let mut v = self.zero_vec();
                    v[i] = c.clone();
                    out.push((d.clone(), v));
                }
            }
        }
        out.sort_by_key(|(g, _)| g.coords().to_vec());
        out
    }

    /// Degree of a nonzero homogeneous element; Err for mixed degrees.
    pub fn degree_of(&self, x: &[Scalar]) -> Result<Option<GroupElement>, Error> {
        let comps = self.homogeneous_components(x);
        match comps.len() {
            0 => Ok(None),
            1 => Ok(Some(comps[0].0.clone())),
            _ => Err(Error::NotHomogeneous),
        }
    }

    pub fn is_homogeneous(&self, x: &[Scalar]) -> bool {
        self.homogeneous_components(x).len() <= 1
    }

    /// Checks every structural invariant; the report lists violations in
    /// discovery order (grading closure first, then associativity, then
    /// unit laws).
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.dim();
        'closure: for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.table[i][j] {
                    if c.is_zero() {
                        continue;
                    }
                    let want = match grade_group::add(&self.degrees[i], &self.degrees[j]) {
                        Ok(d) => d,
                        Err(_) => {
                            violations.push("degree arithmetic failed".into());
                            break 'closure;
                        }
                    };
                    if self.degrees[*k] != want {
                        violations.push(format!(
                            "grading closure fails at ({}, {}, {}): deg {} != deg {} + deg {}",
                            self.names[i], self.names[j], self.names[*k],
                            self.degrees[*k], self.degrees[i], self.degrees[j]
                        ));
                        break 'closure;
                    }
                }
            }
        }
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.mul_vecs(&self.basis_vec(i), &self.basis_vec(j));
                    let left = self.mul_vecs(&ij, &self.basis_vec(k));
                    let jk = self.mul_vecs(&self.basis_vec(j), &self.basis_vec(k));
                    let right = self.mul_vecs(&self.basis_vec(i), &jk);
                    if left != right {
                        violations.push(format!(
                            "associativity fails at ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        if self.unit.iter().all(|c| c.is_zero()) {
            violations.push("unit vector is zero".into());
        } else {
            match self.degree_of(&self.unit) {
                Ok(Some(d)) if d.is_zero() => {}
                _ => violations.push("unit is not homogeneous of degree zero".into()),
            }
            for i in 0..n {
                let b = self.basis_vec(i);
                if self.mul_vecs(&self.unit, &b) != b || self.mul_vecs(&b, &self.unit) != b {
                    violations.push(format!("unit law fails at {}", self.names[i]));
                    break;
                }
            }
        }
        ValidationReport { violations }
    }

    /// The opposite algebra: products reversed, degrees unchanged (the
    /// grade group is abelian).
    pub fn opposite(&self) -> GradedAlgebra {
        let n = self.dim();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[j][i].clone()).collect())
            .collect();
        GradedAlgebra {
            field: self.field,
            group: self.group.clone(),
            degrees: self.degrees.clone(),
            names: self.names.clone(),
            table,
            unit: self.unit.clone(),
            base: self.base.clone(),
        }
    }

    /// The shifted matrix algebra on basis x*E_rc with
    /// deg(x*E_rc) = deg(x) - shift_r + shift_c.
    pub fn matrix_shift(&self, shifts: &[GroupElement]) -> Result<GradedAlgebra, Error> {
        let nn = shifts.len();
        if nn == 0 {
            return Err(Error::Shape("matrix shift needs at least one row".into()));
        }
        for s in shifts {
            if s.group() != &self.group {
                return Err(Error::GroupMismatch);
            }
        }
        let d = self.dim();
        let dim = nn * nn * d;
        // basis layout: index = (r * nn + c) * d + a
        let idx = |r: usize, c: usize, a: usize| (r * nn + c) * d + a;
        let mut degrees = Vec::with_capacity(dim);
        let mut names = Vec::with_capacity(dim);
        for r in 0..nn {
            for c in 0..nn {
                for a in 0..d {
                    let deg = grade_group::sub(
                        &grade_group::add(&self.degrees[a], &shifts[c])?,
                        &shifts[r],
                    )?;
                    degrees.push(deg);
                    let prefix = if self.names[a] == "1" {
                        String::new()
                    } else {
                        self.names[a].clone()
                    };
                    names.push(format!("{}E{}{}", prefix, r + 1, c + 1));
                }
            }
        }
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for r in 0..nn {
            for c in 0..nn {
                for a in 0..d {
                    for r2 in 0..nn {
                        for c2 in 0..nn {
                            if c != r2 {
                                continue;
                            }
                            for b in 0..d {
                                let prod: SparseVec = self.table[a][b]
                                    .iter()
                                    .map(|(k, s)| (idx(r, c2, *k), s.clone()))
                                    .collect();
                                table[idx(r, c, a)][idx(r2, c2, b)] = prod;
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![self.field.zero(); dim];
        for r in 0..nn {
            for (a, c) in self.unit.iter().enumerate() {
                unit[idx(r, r, a)] = c.clone();
            }
        }
        GradedAlgebra::new(self.field, self.group.clone(), degrees, names, table, unit, None)
    }

    /// Reindexes the grading through an injective homomorphism into
    /// another group, given by the images of the current degrees.
    pub fn regrade(
        &self,
        target: &GradeGroup,
        map: impl Fn(&GroupElement) -> Result<GroupElement, Error>,
    ) -> Result<GradedAlgebra, Error> {
        let degrees: Result<Vec<GroupElement>, Error> = self.degrees.iter().map(|d| map(d)).collect();
        let degrees = degrees?;
        for d in &degrees {
            if d.group() != target {
                return Err(Error::GroupMismatch);
            }
        }
        let out = GradedAlgebra {
            field: self.field,
            group: target.clone(),
            degrees,
            names: self.names.clone(),
            table: self.table.clone(),
            unit: self.unit.clone(),
            base: self.base.clone(),
        };
        let report = out.validate();
        if !report.ok() {
            return Err(Error::InvalidAlgebra(report.violations.join("; ")));
        }
        Ok(out)
    }

    pub fn permute_basis(&self, perm: &[usize]) -> Result<GradedAlgebra, Error> {
        let n = self.dim();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Shape("not a permutation".into()));
            }
            seen[p] = true;
        }
        if perm.len() != n {
            return Err(Error::Shape("not a permutation".into()));
        }
        // inverse: where each old index lands
        let mut inv = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let degrees = perm.iter().map(|&o| self.degrees[o].clone()).collect();
        let names = perm.iter().map(|&o| self.names[o].clone()).collect();
        let unit = perm.iter().map(|&o| self.unit[o].clone()).collect();
        let table = perm
            .iter()
            .map(|&oi| {
                perm.iter()
                    .map(|&oj| {
                        self.table[oi][oj]
                            .iter()
                            .map(|(k, c)| (inv[*k], c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let base = self.base.as_ref().map(|b| b.iter().map(|&o| inv[o]).collect());
        GradedAlgebra::new(self.field, self.group.clone(), degrees, names, table, unit, base)
    }

    /// Structure-constant tables agree entry by entry (same basis order).
    pub fn same_table(&self, other: &GradedAlgebra) -> bool {
        if self.dim() != other.dim() || self.field != other.field || self.group != other.group {
            return false;
        }
        if self.degrees != other.degrees || self.unit != other.unit {
            return false;
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let mut a = self.table[i][j].clone();
                let mut b = other.table[i][j].clone();
                a.retain(|(_, c)| !c.is_zero());
                b.retain(|(_, c)| !c.is_zero());
                a.sort_by_key(|(k, _)| *k);
                b.sort_by_key(|(k, _)| *k);
                if a != b {
                    return false;
                }
            }
        }
        true
    }

    /// Extracts the degree-zero component as a standalone algebra
    /// (products of degree-zero basis elements stay in degree zero).
    pub fn degree_zero_part(&self) -> Result<GradedAlgebra, Error> {
        self.subalgebra_on(&self.component_indices(&self.group.zero()))
    }

    /// Subalgebra spanned by a subset of basis elements; the subset must
    /// be closed under multiplication and contain the unit.
    pub fn subalgebra_on(&self, indices: &[usize]) -> Result<GradedAlgebra, Error> {
        let pos: std::collections::HashMap<usize, usize> =
            indices.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let m = indices.len();
        if m == 0 {
            return Err(Error::InvalidAlgebra("empty subalgebra".into()));
        }
        let mut table = vec![vec![Vec::new(); m]; m];
        for (i2, &i) in indices.iter().enumerate() {
            for (j2, &j) in indices.iter().enumerate() {
                let mut entry = Vec::new();
                for (k, c) in &self.table[i][j] {
                    if c.is_zero() {
                        continue;
                    }
                    match pos.get(k) {
                        Some(&k2) => entry.push((k2, c.clone())),
                        None => {
                            return Err(Error::InvalidAlgebra(
                                "subset is not closed under multiplication".into(),
                            ))
                        }
                    }
                }
                table[i2][j2] = entry;
            }
        }
        let mut unit = vec![self.field.zero(); m];
        for (i, c) in self.unit.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match pos.get(&i) {
                Some(&i2) => unit[i2] = c.clone(),
                None => {
                    return Err(Error::InvalidAlgebra("unit not supported on the subset".into()))
                }
            }
        }
        GradedAlgebra::new(
            self.field,
            self.group.clone(),
            indices.iter().map(|&i| self.degrees[i].clone()).collect(),
            indices.iter().map(|&i| self.names[i].clone()).collect(),
            table,
            unit,
            None,
        )
    }

    /// Forgets the grading: same table, all degrees zero.
    pub fn ungraded(&self) -> GradedAlgebra {
        let trivial = GradeGroup::trivial();
        GradedAlgebra {
            field: self.field,
            group: trivial.clone(),
            degrees: vec![trivial.zero(); self.dim()],
            names: self.names.clone(),
            table: self.table.clone(),
            unit: self.unit.clone(),
            base: self.base.clone(),
        }
    }
}
