//! Structure theory: graded ideal closures, the center, Jacobson
//! radicals in characteristic zero and p, and block counting / central
//! idempotent splitting for commutative algebras.

use crate::error::Error;
use crate::grade_group::GroupElement;
use crate::matrix::{Echelon, Matrix};
use crate::poly::{factor, Polynomial};
use crate::scalar::{FieldSpec, Scalar};

use super::{GradedAlgebra, GradedSubspace};

/// Smallest two-sided ideal containing the given homogeneous elements,
/// by saturating under one-sided multiplication by basis elements. The
/// result carries a homogeneous basis.
pub fn graded_ideal_closure(
    a: &GradedAlgebra,
    gens: &[Vec<Scalar>],
) -> Result<GradedSubspace, Error> {
    for g in gens {
        if !a.is_homogeneous(g) {
            return Err(Error::NotHomogeneous);
        }
    }
    let n = a.dim();
    let mut ech = Echelon::new(a.field, n);
    let mut work: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        if ech.insert(g.clone()) {
            work.push(g.clone());
        }
    }
    while let Some(v) = work.pop() {
        if ech.rank() == n {
            break;
        }
        for i in 0..n {
            let b = a.basis_vec(i);
            for prod in [a.mul_vecs(&b, &v), a.mul_vecs(&v, &b)] {
                if ech.insert(prod.clone()) {
                    work.push(prod);
                }
            }
        }
    }
    subspace_from_homogeneous_rows(a, ech.rows.clone())
}

fn subspace_from_homogeneous_rows(
    a: &GradedAlgebra,
    rows: Vec<Vec<Scalar>>,
) -> Result<GradedSubspace, Error> {
    let mut basis = Vec::new();
    for r in rows {
        let deg = a.degree_of(&r)?.ok_or(Error::NotHomogeneous)?;
        basis.push((deg, r));
    }
    basis.sort_by_key(|(g, _)| g.coords().to_vec());
    Ok(GradedSubspace { basis })
}

/// The center with a homogeneous basis, computed component by component.
/// The ungraded kernel dimension must match the sum over components
/// (the center of an algebra graded by a group is graded).
pub fn center(a: &GradedAlgebra) -> GradedSubspace {
    let n = a.dim();
    // stacked commutator system: (L_b - R_b) x = 0 for every basis b
    let mut rows = Vec::new();
    for b in 0..n {
        let l = a.left_mul_matrix(&a.basis_vec(b));
        let r = a.right_mul_matrix(&a.basis_vec(b));
        for i in 0..n {
            rows.push((0..n).map(|j| l.get(i, j).sub(r.get(i, j))).collect::<Vec<Scalar>>());
        }
    }
    let big = Matrix::from_rows(a.field, rows);
    let kernel = big.kernel_basis();
    // homogeneous basis: restrict to each component
    let mut basis: Vec<(GroupElement, Vec<Scalar>)> = Vec::new();
    for deg in a.support() {
        let idxs = a.component_indices(&deg);
        let mut ech = Echelon::new(a.field, n);
        for v in &kernel {
            let mut proj = a.zero_vec();
            for &i in &idxs {
                proj[i] = v[i].clone();
            }
            // the projection of a central element is central; keep the
            // independent ones
            if a.is_central(&proj) {
                ech.insert(proj);
            }
        }
        for row in ech.rows {
            basis.push((deg.clone(), row));
        }
    }
    assert_eq!(
        basis.len(),
        kernel.len(),
        "center must decompose into homogeneous components"
    );
    basis.sort_by_key(|(g, _)| g.coords().to_vec());
    GradedSubspace { basis }
}

impl GradedAlgebra {
    pub fn is_central(&self, x: &[Scalar]) -> bool {
        for i in 0..self.dim() {
            let b = self.basis_vec(i);
            if self.mul_vecs(x, &b) != self.mul_vecs(&b, x) {
                return false;
            }
        }
        true
    }

    /// x^e by repeated squaring.
    pub fn power(&self, x: &[Scalar], e: u64) -> Vec<Scalar> {
        let mut acc = self.unit_vec().to_vec();
        let mut base = x.to_vec();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_vecs(&acc, &base);
            }
            base = self.mul_vecs(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Jacobson radical as a plain (not necessarily homogeneous) subspace.
/// Characteristic zero: kernel of the trace form x -> tr(L_{x b_j}).
/// Characteristic p: the characteristic-polynomial-coefficient chain of
/// Friedl and Ronyai.
pub fn jacobson_radical(a: &GradedAlgebra) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    match a.field {
        FieldSpec::Rational => {
            let trace = |x: &[Scalar]| -> Scalar {
                let l = a.left_mul_matrix(x);
                let mut t = a.field.zero();
                for i in 0..n {
                    t = t.add(l.get(i, i));
                }
                t
            };
            let mut rows = Vec::new();
            for j in 0..n {
                let bj = a.basis_vec(j);
                rows.push(
                    (0..n)
                        .map(|i| trace(&a.mul_vecs(&a.basis_vec(i), &bj)))
                        .collect::<Vec<Scalar>>(),
                );
            }
            Matrix::from_rows(a.field, rows).kernel_basis()
        }
        FieldSpec::Prime(p) => {
            // chain V_0 ⊇ V_1 ⊇ ... ⊇ V_l = J(A), where V_s cuts down by
            // the coefficient of t^{n - p^s} in charpoly(L_{x y})
            let mut l = 0u32;
            while (p as u128).pow(l + 1) <= n as u128 {
                l += 1;
            }
            let mut basis: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vec(i)).collect();
            for s in 0..=l {
                if basis.is_empty() {
                    break;
                }
                let m = (p as usize).pow(s);
                let coeff_index = n - m;
                let mut rows: Vec<Vec<Scalar>> = Vec::new();
                for y in &basis {
                    let row: Vec<Scalar> = basis
                        .iter()
                        .map(|v| {
                            let prod = a.mul_vecs(v, y);
                            let cp = a.left_mul_matrix(&prod).charpoly();
                            cp[coeff_index].clone()
                        })
                        .collect();
                    rows.push(row);
                }
                let kernel = Matrix::from_rows(a.field, rows).kernel_basis();
                // kernel coordinates are with respect to the current basis
                basis = kernel
                    .into_iter()
                    .map(|lambda| {
                        let mut v = a.zero_vec();
                        for (t, c) in lambda.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            for (i, b) in basis[t].iter().enumerate() {
                                v[i] = v[i].add(&c.mul(b));
                            }
                        }
                        v
                    })
                    .collect();
            }
            basis
        }
    }
}

/// The largest graded ideal inside J(A): the sum over degrees of
/// J(A) ∩ A_γ.
pub fn graded_radical_part(a: &GradedAlgebra) -> GradedSubspace {
    let j = jacobson_radical(a);
    let n = a.dim();
    let jech = Echelon::from_rows(a.field, n, j.iter().cloned());
    let mut basis: Vec<(GroupElement, Vec<Scalar>)> = Vec::new();
    for deg in a.support() {
        let idxs = a.component_indices(&deg);
        // J ∩ A_γ: lambda over J basis with all coordinates outside the
        // component vanishing
        if jech.rank() == 0 {
            continue;
        }
        let outside: Vec<usize> = (0..n).filter(|i| !idxs.contains(i)).collect();
        let constraint = Matrix::from_fn(a.field, outside.len(), jech.rank(), |r, c| {
            jech.rows[c][outside[r]].clone()
        });
        for lambda in constraint.kernel_basis() {
            let mut v = a.zero_vec();
            for (t, c) in lambda.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, b) in jech.rows[t].iter().enumerate() {
                    v[i] = v[i].add(&c.mul(b));
                }
            }
            basis.push((deg.clone(), v));
        }
    }
    // independent homogeneous vectors only
    let mut ech = Echelon::new(a.field, n);
    let mut out = Vec::new();
    for (deg, v) in basis {
        if ech.insert(v.clone()) {
            out.push((deg, v));
        }
    }
    out.sort_by_key(|(g, _)| g.coords().to_vec());
    GradedSubspace { basis: out }
}

/// Minimal polynomial of x, monic.
pub fn min_poly(a: &GradedAlgebra, x: &[Scalar]) -> Polynomial {
    let n = a.dim();
    let mut powers: Vec<Vec<Scalar>> = vec![a.unit_vec().to_vec()];
    let mut ech = Echelon::from_rows(a.field, n, powers.clone());
    loop {
        let next = a.mul_vecs(powers.last().unwrap(), x);
        if ech.contains(&next) {
            powers.push(next);
            break;
        }
        ech.insert(next.clone());
        powers.push(next);
    }
    let k = powers.len() - 1;
    // solve sum_{i<k} lambda_i x^i = -x^k
    let m = Matrix::from_fn(a.field, n, k, |r, c| powers[c][r].clone());
    let rhs: Vec<Scalar> = powers[k].iter().map(|c| c.neg()).collect();
    let lambda = m.solve(&rhs).expect("dependency exists");
    let mut coeffs = lambda;
    coeffs.push(a.field.one());
    Polynomial::new(a.field, coeffs)
}

/// Coordinates of a subalgebra presented by basis vectors inside a
/// parent algebra.
pub struct SubalgebraView {
    pub algebra: GradedAlgebra,
    rows: Vec<Vec<Scalar>>,
    parent_dim: usize,
}

impl SubalgebraView {
    /// Builds the standalone (trivially graded) algebra on a subspace of
    /// `parent` that is closed under multiplication with the given unit.
    pub fn new(
        parent: &GradedAlgebra,
        rows: Vec<Vec<Scalar>>,
        unit: &[Scalar],
    ) -> Result<SubalgebraView, Error> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidAlgebra("empty subspace".into()));
        }
        let n = parent.dim();
        let coord = Matrix::from_fn(parent.field, n, m, |r, c| rows[c][r].clone());
        let solve = |v: &[Scalar]| -> Result<Vec<Scalar>, Error> {
            coord.solve(v).ok_or_else(|| {
                Error::InvalidAlgebra("subspace is not closed under multiplication".into())
            })
        };
        let mut table = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in 0..m {
                let prod = parent.mul_vecs(&rows[i], &rows[j]);
                let lam = solve(&prod)?;
                table[i][j] = lam
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        let unit_l = solve(unit)?;
        let trivial = crate::grade_group::GradeGroup::trivial();
        let algebra = GradedAlgebra::new(
            parent.field,
            trivial.clone(),
            vec![trivial.zero(); m],
            (0..m).map(|i| format!("z{i}")).collect(),
            table,
            unit_l,
            None,
        )?;
        Ok(SubalgebraView { algebra, rows, parent_dim: n })
    }

    pub fn to_parent(&self, local: &[Scalar]) -> Vec<Scalar> {
        let field = self.algebra.field;
        let mut v = vec![field.zero(); self.parent_dim];
        for (t, c) in local.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, b) in self.rows[t].iter().enumerate() {
                v[i] = v[i].add(&c.mul(b));
            }
        }
        v
    }
}

/// Number of simple blocks of a commutative algebra modulo its radical.
pub fn block_count(c: &GradedAlgebra) -> Result<usize, Error> {
    let cu = c.ungraded();
    let j = jacobson_radical(&cu);
    let etale = if j.is_empty() {
        cu
    } else {
        let sub = GradedSubspace {
            basis: j.iter().map(|v| (cu.group.zero(), v.clone())).collect(),
        };
        super::quotient_by_homogeneous_subspace(&cu, &sub)?.0
    };
    etale_block_count(&etale)
}

fn etale_block_count(q: &GradedAlgebra) -> Result<usize, Error> {
    match q.field {
        FieldSpec::Prime(p) => {
            // dimension of the Frobenius-fixed subalgebra
            let n = q.dim();
            let mut f = Matrix::zero(q.field, n, n);
            for i in 0..n {
                let bp = q.power(&q.basis_vec(i), p);
                for (r, c) in bp.into_iter().enumerate() {
                    f.set(r, i, c);
                }
            }
            let fi = Matrix::from_fn(q.field, n, n, |r, c| {
                if r == c {
                    f.get(r, c).sub(&q.field.one())
                } else {
                    f.get(r, c).clone()
                }
            });
            Ok(fi.kernel_basis().len())
        }
        FieldSpec::Rational => {
            let (_, mu) = primitive_element(q)?;
            let fac = factor(&mu)?;
            Ok(fac.factors.len())
        }
    }
}

/// A primitive element of an etale commutative algebra over Q, with its
/// minimal polynomial of full degree. Deterministic grid search over
/// x(t) = sum t^j b_j.
fn primitive_element(q: &GradedAlgebra) -> Result<(Vec<Scalar>, Polynomial), Error> {
    let n = q.dim();
    let bound = n * n * (n.max(2) - 1) / 2 + 2;
    for t in 0..bound {
        let ts = q.field.from_i64(t as i64);
        let mut x = q.zero_vec();
        let mut power = q.field.one();
        for j in 0..n {
            let b = q.basis_vec(j);
            for (i, c) in b.iter().enumerate() {
                x[i] = x[i].add(&c.mul(&power));
            }
            power = power.mul(&ts);
        }
        let mu = min_poly(q, &x);
        if mu.degree() == Some(n) {
            return Ok((x, mu));
        }
    }
    Err(Error::Undetermined(
        "no primitive element found; input is not etale".into(),
    ))
}

/// Primitive idempotents of a commutative algebra (not necessarily
/// semisimple): split the etale quotient, lift through the radical, and
/// recurse into the factors.
pub fn split_central_idempotents(c: &GradedAlgebra) -> Result<Vec<Vec<Scalar>>, Error> {
    assert!(c.is_commutative(), "idempotent splitting needs a commutative algebra");
    let cu = c.ungraded();
    let rows: Vec<Vec<Scalar>> = (0..cu.dim()).map(|i| cu.basis_vec(i)).collect();
    split_block(&cu, rows, cu.unit_vec().to_vec())
}

fn split_block(
    parent: &GradedAlgebra,
    rows: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
) -> Result<Vec<Vec<Scalar>>, Error> {
    let view = SubalgebraView::new(parent, rows.clone(), &unit)?;
    let c = &view.algebra;
    let j = jacobson_radical(c);
    let (etale, to_c): (GradedAlgebra, Box<dyn Fn(&[Scalar]) -> Vec<Scalar>>) = if j.is_empty() {
        (c.clone(), Box::new(|v: &[Scalar]| v.to_vec()))
    } else {
        let sub = GradedSubspace {
            basis: j.iter().map(|v| (c.group.zero(), v.clone())).collect(),
        };
        let (qa, qmap) = super::quotient_by_homogeneous_subspace(c, &sub)?;
        (qa, Box::new(move |v: &[Scalar]| qmap.lift(v)))
    };
    match etale_nontrivial_idempotent(&etale)? {
        None => Ok(vec![unit]),
        Some(eq) => {
            // lift to the block through the radical: Newton iteration
            let mut e = to_c(&eq);
            for _ in 0..64 {
                let e2 = c.mul_vecs(&e, &e);
                if e2 == e {
                    break;
                }
                // 3e^2 - 2e^3
                let e3 = c.mul_vecs(&e2, &e);
                let three = c.field.from_i64(3);
                let two = c.field.from_i64(2);
                e = e2
                    .iter()
                    .zip(&e3)
                    .map(|(a, b)| a.mul(&three).sub(&b.mul(&two)))
                    .collect();
            }
            assert_eq!(c.mul_vecs(&e, &e), e, "idempotent lifting converged");
            let e_parent = view.to_parent(&e);
            let unit_minus_e: Vec<Scalar> =
                unit.iter().zip(&e_parent).map(|(a, b)| a.sub(b)).collect();
            let mut out = Vec::new();
            for piece in [e_parent, unit_minus_e] {
                let mut ech = Echelon::new(parent.field, parent.dim());
                for r in &rows {
                    ech.insert(parent.mul_vecs(&piece, r));
                }
                let sub_rows: Vec<Vec<Scalar>> = ech.rows.clone();
                out.extend(split_block(parent, sub_rows, piece)?);
            }
            Ok(out)
        }
    }
}

/// A nontrivial idempotent of an etale commutative algebra, or None when
/// it is a field.
fn etale_nontrivial_idempotent(q: &GradedAlgebra) -> Result<Option<Vec<Scalar>>, Error> {
    let n = q.dim();
    if n == 1 {
        return Ok(None);
    }
    match q.field {
        FieldSpec::Prime(p) => {
            let mut f = Matrix::zero(q.field, n, n);
            for i in 0..n {
                let bp = q.power(&q.basis_vec(i), p);
                for (r, c) in bp.into_iter().enumerate() {
                    f.set(r, i, c);
                }
            }
            let fi = Matrix::from_fn(q.field, n, n, |r, c| {
                if r == c {
                    f.get(r, c).sub(&q.field.one())
                } else {
                    f.get(r, c).clone()
                }
            });
            let fixed = fi.kernel_basis();
            if fixed.len() == 1 {
                return Ok(None);
            }
            // a non-scalar Frobenius-fixed element has squarefree minimal
            // polynomial splitting into distinct linear factors
            let unit_ech =
                Echelon::from_rows(q.field, n, std::iter::once(q.unit_vec().to_vec()));
            let v = fixed
                .iter()
                .find(|v| !unit_ech.contains(v))
                .expect("fixed space exceeds scalars");
            let mu = min_poly(q, v);
            let fac = factor(&mu)?;
            assert!(fac.factors.len() >= 2, "non-scalar fixed element splits");
            assert!(fac.factors.iter().all(|(f0, m)| f0.degree() == Some(1) && *m == 1));
            // Lagrange idempotent for the first root
            let root = fac.factors[0].0.coeff(0).neg();
            let mut e = q.unit_vec().to_vec();
            let mut denom = q.field.one();
            for (f0, _) in &fac.factors[1..] {
                let other_root = f0.coeff(0).neg();
                // e *= (v - other)/(root - other)
                let mut shifted = v.to_vec();
                for (i, c) in q.unit_vec().iter().enumerate() {
                    shifted[i] = shifted[i].sub(&c.mul(&other_root));
                }
                e = q.mul_vecs(&e, &shifted);
                denom = denom.mul(&root.sub(&other_root));
            }
            let di = denom.inv().expect("distinct roots");
            Ok(Some(e.iter().map(|c| c.mul(&di)).collect()))
        }
        FieldSpec::Rational => {
            let (x, mu) = primitive_element(q)?;
            let fac = factor(&mu)?;
            if fac.factors.len() == 1 {
                return Ok(None);
            }
            let f1 = &fac.factors[0].0;
            let h = mu.divrem(f1).0;
            // u h + w f1 = 1; e = (u h)(x)
            let (g, u, _) = ext_gcd(&h, f1);
            assert_eq!(g.degree(), Some(0));
            let ginv = g.coeff(0).inv().expect("coprime");
            let uh = u.scale(&ginv).mul(&h);
            Ok(Some(eval_poly_at(q, &uh, &x)))
        }
    }
}

fn eval_poly_at(a: &GradedAlgebra, p: &Polynomial, x: &[Scalar]) -> Vec<Scalar> {
    let mut acc = a.zero_vec();
    for c in p.coeffs.iter().rev() {
        acc = a.mul_vecs(&acc, x);
        for (i, u) in a.unit_vec().iter().enumerate() {
            acc[i] = acc[i].add(&c.mul(u));
        }
    }
    acc
}

/// Extended gcd over a field: returns (g, s, t) with s a + t b = g.
pub fn ext_gcd(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
    let field = a.field;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Polynomial::one(field), Polynomial::zero(field));
    let (mut t0, mut t1) = (Polynomial::zero(field), Polynomial::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quotient_by_homogeneous_subspace;
    use crate::constructions::{
        diagonal_algebra, group_algebra, group_algebra_on_grade_group, quaternion_algebra,
        upper_triangular_2x2,
    };
    use crate::grade_group::GradeGroup;
    use crate::groups::symmetric3;

    #[test]
    fn ideal_closure_examples() {
        // gens = {1} gives the whole algebra
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let whole = graded_ideal_closure(&q, &[q.unit_vec().to_vec()]).unwrap();
        assert_eq!(whole.dim(), 4);
        // i is invertible, so it also generates everything
        let from_i = graded_ideal_closure(&q, &[q.basis_vec(1)]).unwrap();
        assert_eq!(from_i.dim(), 4);
        // E12 in the upper triangular algebra spans a 1-dimensional ideal
        let ut = upper_triangular_2x2(FieldSpec::Rational);
        let ideal = graded_ideal_closure(&ut, &[ut.basis_vec(1)]).unwrap();
        assert_eq!(ideal.dim(), 1);
        // non-homogeneous generators are rejected
        let mixed = vec![
            FieldSpec::Rational.one(),
            FieldSpec::Rational.one(),
            FieldSpec::Rational.zero(),
            FieldSpec::Rational.zero(),
        ];
        assert!(matches!(
            graded_ideal_closure(&q, &[mixed]),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn center_examples() {
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let z = center(&q);
        assert_eq!(z.dim(), 1);
        assert!(z.basis[0].0.is_zero());

        // M2(Q) trivially graded: center is the scalars
        let g = GradeGroup::trivial();
        let k = GradedAlgebra::ground_field(FieldSpec::Rational, &g);
        let m2 = k.matrix_shift(&[g.zero(), g.zero()]).unwrap();
        assert_eq!(center(&m2).dim(), 1);

        // Q[Z2] is commutative: center is everything
        let a = group_algebra_on_grade_group(FieldSpec::Rational, &GradeGroup::cyclic(2)).unwrap();
        assert_eq!(center(&a).dim(), 2);
    }

    #[test]
    fn radical_examples() {
        // M2(Q): semisimple
        let g = GradeGroup::trivial();
        let k = GradedAlgebra::ground_field(FieldSpec::Rational, &g);
        let m2 = k.matrix_shift(&[g.zero(), g.zero()]).unwrap();
        assert!(jacobson_radical(&m2).is_empty());

        // upper triangular: radical is E12
        let ut = upper_triangular_2x2(FieldSpec::Rational);
        assert_eq!(jacobson_radical(&ut).len(), 1);

        // F2[Z2]: radical is spanned by 1 + g
        let f2 = FieldSpec::prime(2).unwrap();
        let a = group_algebra_on_grade_group(f2, &GradeGroup::cyclic(2)).unwrap();
        let j = jacobson_radical(&a);
        assert_eq!(j.len(), 1);
        assert_eq!(j[0], vec![f2.one(), f2.one()]);
    }

    #[test]
    fn radical_of_f2z4_is_augmentation_like() {
        // F2[Z4] = F2[x]/(x-1)^4 is local with a 3-dimensional radical
        let f2 = FieldSpec::prime(2).unwrap();
        let a = group_algebra_on_grade_group(f2, &GradeGroup::cyclic(4)).unwrap();
        let j = jacobson_radical(&a);
        assert_eq!(j.len(), 3);
        // oracle: x in J iff the ideal generated by x is nilpotent
        let jech = crate::matrix::Echelon::from_rows(f2, 4, j.iter().cloned());
        for mask in 1..16usize {
            let v: Vec<Scalar> = (0..4)
                .map(|i| f2.from_i64(((mask >> i) & 1) as i64))
                .collect();
            let in_j = jech.contains(&v);
            // nilpotency of the principal ideal: v^k = 0 for some k
            // (commutative algebra, so the ideal is nilpotent iff v is)
            let mut p = v.clone();
            let mut nil = false;
            for _ in 0..5 {
                p = a.mul_vecs(&p, &p);
                if p.iter().all(|c| c.is_zero()) {
                    nil = true;
                    break;
                }
            }
            assert_eq!(in_j, nil, "mask {mask}");
        }
    }

    #[test]
    fn graded_radical_part_examples() {
        // F2[Z2]: J is spanned by 1+g, which mixes degrees, so the graded
        // part vanishes
        let f2 = FieldSpec::prime(2).unwrap();
        let a = group_algebra_on_grade_group(f2, &GradeGroup::cyclic(2)).unwrap();
        assert!(graded_radical_part(&a).is_zero());

        // upper triangular: J itself is homogeneous
        let ut = upper_triangular_2x2(FieldSpec::Rational);
        assert_eq!(graded_radical_part(&ut).dim(), 1);

        // semisimple input: zero
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        assert!(graded_radical_part(&q).is_zero());
    }

    #[test]
    fn block_counts_match_wedderburn_data() {
        // hand-verified: Q[S3] = Q + Q + M2(Q)
        let qs3 = group_algebra(FieldSpec::Rational, &symmetric3()).unwrap();
        let z = center(&qs3);
        let view = SubalgebraView::new(
            &qs3,
            z.vectors().cloned().collect(),
            qs3.unit_vec(),
        )
        .unwrap();
        assert_eq!(block_count(&view.algebra).unwrap(), 3);

        // Q[Z2] = Q x Q
        let qz2 = group_algebra_on_grade_group(FieldSpec::Rational, &GradeGroup::cyclic(2)).unwrap();
        assert_eq!(block_count(&qz2).unwrap(), 2);

        // the quaternions are a single block; center is Q
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let z = center(&q);
        let view =
            SubalgebraView::new(&q, z.vectors().cloned().collect(), q.unit_vec()).unwrap();
        assert_eq!(block_count(&view.algebra).unwrap(), 1);
    }

    #[test]
    fn idempotent_splitting_of_qz2() {
        let qz2 =
            group_algebra_on_grade_group(FieldSpec::Rational, &GradeGroup::cyclic(2)).unwrap();
        let idems = split_central_idempotents(&qz2).unwrap();
        assert_eq!(idems.len(), 2);
        let field = FieldSpec::Rational;
        let mut sum = qz2.zero_vec();
        for e in &idems {
            assert_eq!(qz2.mul_vecs(e, e), *e, "idempotent");
            for (i, c) in e.iter().enumerate() {
                sum[i] = sum[i].add(c);
            }
        }
        assert_eq!(sum, qz2.unit_vec().to_vec());
        // orthogonal: e0 e1 = 0
        let prod = qz2.mul_vecs(&idems[0], &idems[1]);
        assert!(prod.iter().all(|c| c.is_zero()));
        let half = field.from_ratio(1, 2).unwrap();
        assert!(idems.iter().any(|e| e[0] == half));
    }

    #[test]
    fn idempotent_splitting_of_semisimple_diagonal() {
        let f2 = FieldSpec::prime(2).unwrap();
        let d = diagonal_algebra(f2, 3);
        let idems = split_central_idempotents(&d).unwrap();
        assert_eq!(idems.len(), 3);
    }

    #[test]
    fn idempotent_splitting_lifts_through_the_radical() {
        // F2[Z6] = F2[Z2] (x) F2[Z3]: two blocks, nonzero radical, so the
        // quotient idempotents must be Newton-lifted
        let f2 = FieldSpec::prime(2).unwrap();
        let c = group_algebra_on_grade_group(f2, &GradeGroup::cyclic(6)).unwrap();
        assert_eq!(jacobson_radical(&c).len(), 3);
        let idems = split_central_idempotents(&c).unwrap();
        assert_eq!(idems.len(), 2);
        let mut sum = c.zero_vec();
        for e in &idems {
            assert_eq!(c.mul_vecs(e, e), *e);
            for (i, x) in e.iter().enumerate() {
                sum[i] = sum[i].add(x);
            }
        }
        assert_eq!(sum, c.unit_vec().to_vec());
        assert!(c.mul_vecs(&idems[0], &idems[1]).iter().all(|x| x.is_zero()));

        // characteristic zero with a radical: dual numbers joined with a
        // field factor
        let q = FieldSpec::Rational;
        let g = GradeGroup::trivial();
        let e = |k: usize| vec![(k, q.one())];
        // basis u, eps, f with u^2 = u, u eps = eps u = eps, eps^2 = 0,
        // f^2 = f, cross products zero; unit = u + f
        let table = vec![
            vec![e(0), e(1), vec![]],
            vec![e(1), vec![], vec![]],
            vec![vec![], vec![], e(2)],
        ];
        let c0 = GradedAlgebra::new(
            q,
            g.clone(),
            vec![g.zero(); 3],
            vec!["u".into(), "eps".into(), "f".into()],
            table,
            vec![q.one(), q.zero(), q.one()],
            None,
        )
        .unwrap();
        assert!(c0.validate().ok());
        assert_eq!(jacobson_radical(&c0).len(), 1);
        let idems = split_central_idempotents(&c0).unwrap();
        assert_eq!(idems.len(), 2);
        for e0 in &idems {
            assert_eq!(c0.mul_vecs(e0, e0), *e0);
        }
    }

    #[test]
    fn min_poly_examples() {
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        // i has minimal polynomial x^2 + 1
        let mu = min_poly(&q, &q.basis_vec(1));
        assert_eq!(mu, Polynomial::from_i64(FieldSpec::Rational, &[1, 0, 1]));
        // the unit has minimal polynomial x - 1
        let mu = min_poly(&q, q.unit_vec());
        assert_eq!(mu, Polynomial::from_i64(FieldSpec::Rational, &[-1, 1]));
    }

    #[test]
    fn quotient_of_group_algebra_by_radical() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = group_algebra_on_grade_group(f2, &GradeGroup::cyclic(2)).unwrap();
        let au = a.ungraded();
        let j = jacobson_radical(&au);
        let sub = GradedSubspace {
            basis: j.iter().map(|v| (au.group.zero(), v.clone())).collect(),
        };
        let (q, _) = quotient_by_homogeneous_subspace(&au, &sub).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(jacobson_radical(&q).is_empty());
    }
}
