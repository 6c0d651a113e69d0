//! The explicit equivalence maps between modules over A and over the
//! shifted matrix algebra M_n(A)(d): builds
//! A^n(-d) ⊗_{M_n(A)(d)} A^n(d) and A^n(d) ⊗_A A^n(-d) as graded
//! quotients and checks that the four structure maps compose to
//! identities and preserve degrees.

use crate::algebra::GradedAlgebra;
use crate::error::Error;
use crate::grade_group::{self, GroupElement};
use crate::matrix::{Echelon, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct MoritaReport {
    /// θ ∘ σ = id on A
    pub collapse_identity: bool,
    /// σ ∘ θ = id on A^n(-d) ⊗_M A^n(d)
    pub expand_identity: bool,
    /// θ' ∘ σ' = id on M_n(A)(d)
    pub matrix_collapse_identity: bool,
    /// σ' ∘ θ' = id on A^n(d) ⊗_A A^n(-d)
    pub matrix_expand_identity: bool,
    pub degree_preserving: bool,
}

impl MoritaReport {
    pub fn ok(&self) -> bool {
        self.collapse_identity
            && self.expand_identity
            && self.matrix_collapse_identity
            && self.matrix_expand_identity
            && self.degree_preserving
    }
}

/// A quotient of a graded coordinate space by a span of homogeneous
/// vectors, with degrees carried per coordinate.
struct GradedQuotient {
    ech: Echelon,
    keep: Vec<usize>,
    degrees: Vec<GroupElement>,
}

impl GradedQuotient {
    fn new(
        field: crate::scalar::FieldSpec,
        ambient_degrees: &[GroupElement],
        gens: Vec<Vec<Scalar>>,
    ) -> GradedQuotient {
        let dim = ambient_degrees.len();
        let mut ech = Echelon::new(field, dim);
        for g in gens {
            ech.insert(g);
        }
        let keep: Vec<usize> = (0..dim).filter(|i| !ech.pivots.contains(i)).collect();
        let degrees = keep.iter().map(|&i| ambient_degrees[i].clone()).collect();
        GradedQuotient { ech, keep, degrees }
    }

    fn dim(&self) -> usize {
        self.keep.len()
    }

    fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ech.reduce(v.to_vec());
        self.keep.iter().map(|&i| r[i].clone()).collect()
    }
}

/// Checks the four explicit maps for A and M_n(A)(d).
pub fn verify_morita_identities(
    a: &GradedAlgebra,
    shifts: &[GroupElement],
) -> Result<MoritaReport, Error> {
    let n = shifts.len();
    if n == 0 {
        return Err(Error::Shape("at least one shift required".into()));
    }
    let m_alg = a.matrix_shift(shifts)?;
    let da = a.dim();
    let field = a.field;
    let module_dim = n * da;
    // X = A^n(-d): elementary (slot i, basis b) has degree deg(b) + δ_i
    // Y = A^n(d):  elementary (slot j, basis b) has degree deg(b) - δ_j
    let x_deg = |slot: usize, b: usize| grade_group::add(&a.degrees()[b], &shifts[slot]);
    let y_deg = |slot: usize, b: usize| grade_group::sub(&a.degrees()[b], &shifts[slot]);
    let xi = |slot: usize, b: usize| slot * da + b;

    // ---- T1 = X ⊗_M Y ----
    let t1_amb = module_dim * module_dim;
    let mut t1_degrees = Vec::with_capacity(t1_amb);
    for i in 0..n {
        for b in 0..da {
            for j in 0..n {
                for b2 in 0..da {
                    t1_degrees.push(grade_group::add(&x_deg(i, b)?, &y_deg(j, b2)?)?);
                }
            }
        }
    }
    let t1_index = |x: usize, y: usize| x * module_dim + y;
    let mut t1_gens: Vec<Vec<Scalar>> = Vec::new();
    // balancing (x·μ) ⊗ y - x ⊗ (μ·y) over the basis of M = (r, c, av)
    for i in 0..n {
        for b in 0..da {
            for r in 0..n {
                for c in 0..n {
                    for av in 0..da {
                        for j in 0..n {
                            for b2 in 0..da {
                                if i != r && c != j {
                                    continue;
                                }
                                let mut g = vec![field.zero(); t1_amb];
                                let mut nonzero = false;
                                if i == r {
                                    // (x·μ) lands in slot c with value b·av
                                    for (t, s) in a.basis_product(b, av) {
                                        if s.is_zero() {
                                            continue;
                                        }
                                        nonzero = true;
                                        let pos = t1_index(xi(c, *t), xi(j, b2));
                                        g[pos] = g[pos].add(s);
                                    }
                                }
                                if c == j {
                                    // (μ·y) lands in slot r with value av·b2
                                    for (t, s) in a.basis_product(av, b2) {
                                        if s.is_zero() {
                                            continue;
                                        }
                                        nonzero = true;
                                        let pos = t1_index(xi(i, b), xi(r, *t));
                                        g[pos] = g[pos].sub(s);
                                    }
                                }
                                if nonzero {
                                    t1_gens.push(g);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let t1 = GradedQuotient::new(field, &t1_degrees, t1_gens.clone());

    // θ on the ambient space: x ⊗ y -> Σ x_t y_t
    let mut theta_amb = Matrix::zero(field, da, t1_amb);
    for i in 0..n {
        for b in 0..da {
            for j in 0..n {
                for b2 in 0..da {
                    if i != j {
                        continue;
                    }
                    let col = t1_index(xi(i, b), xi(j, b2));
                    for (t, s) in a.basis_product(b, b2) {
                        theta_amb.set(*t, col, theta_amb.get(*t, col).add(s));
                    }
                }
            }
        }
    }
    // well-definedness: θ kills the balancing subspace
    for g in &t1_gens {
        let img = theta_amb.mul_vec(g);
        if img.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidAlgebra(
                "collapse map does not factor through the tensor relations".into(),
            ));
        }
    }
    // θ̄: quotient coordinates -> A
    let theta = Matrix::from_fn(field, da, t1.dim(), |r, c| {
        theta_amb.get(r, t1.keep[c]).clone()
    });
    // σ: A -> T1, b -> (b, 0, ..) ⊗ e_1
    let mut sigma = Matrix::zero(field, t1.dim(), da);
    for b in 0..da {
        let mut amb = vec![field.zero(); t1_amb];
        for (t, s) in a.unit_vec().iter().enumerate() {
            if !s.is_zero() {
                amb[t1_index(xi(0, b), xi(0, t))] = s.clone();
            }
        }
        let q = t1.project(&amb);
        for (r, s) in q.into_iter().enumerate() {
            sigma.set(r, b, s);
        }
    }
    let collapse_identity = theta.mul(&sigma) == Matrix::identity(field, da);
    let expand_identity = sigma.mul(&theta) == Matrix::identity(field, t1.dim());

    // ---- T2 = Y ⊗_A X ----
    let mut t2_degrees = Vec::with_capacity(t1_amb);
    for i in 0..n {
        for b in 0..da {
            for j in 0..n {
                for b2 in 0..da {
                    t2_degrees.push(grade_group::add(&y_deg(i, b)?, &x_deg(j, b2)?)?);
                }
            }
        }
    }
    let t2_index = |y: usize, x: usize| y * module_dim + x;
    let mut t2_gens: Vec<Vec<Scalar>> = Vec::new();
    // balancing (y·s) ⊗ x - y ⊗ (s·x) over the basis s of A
    for i in 0..n {
        for b in 0..da {
            for s in 0..da {
                for j in 0..n {
                    for b2 in 0..da {
                        let mut g = vec![field.zero(); t1_amb];
                        let mut nonzero = false;
                        for (t, c) in a.basis_product(b, s) {
                            if c.is_zero() {
                                continue;
                            }
                            nonzero = true;
                            let pos = t2_index(xi(i, *t), xi(j, b2));
                            g[pos] = g[pos].add(c);
                        }
                        for (t, c) in a.basis_product(s, b2) {
                            if c.is_zero() {
                                continue;
                            }
                            nonzero = true;
                            let pos = t2_index(xi(i, b), xi(j, *t));
                            g[pos] = g[pos].sub(c);
                        }
                        if nonzero {
                            t2_gens.push(g);
                        }
                    }
                }
            }
        }
    }
    let t2 = GradedQuotient::new(field, &t2_degrees, t2_gens.clone());

    // θ': y ⊗ x -> the matrix (y_r x_c)
    let md = m_alg.dim();
    let midx = |r: usize, c: usize, t: usize| (r * n + c) * da + t;
    let mut theta2_amb = Matrix::zero(field, md, t1_amb);
    for i in 0..n {
        for b in 0..da {
            for j in 0..n {
                for b2 in 0..da {
                    let col = t2_index(xi(i, b), xi(j, b2));
                    for (t, s) in a.basis_product(b, b2) {
                        let row = midx(i, j, *t);
                        theta2_amb.set(row, col, theta2_amb.get(row, col).add(s));
                    }
                }
            }
        }
    }
    for g in &t2_gens {
        let img = theta2_amb.mul_vec(g);
        if img.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidAlgebra(
                "matrix collapse map does not factor through the tensor relations".into(),
            ));
        }
    }
    let theta2 = Matrix::from_fn(field, md, t2.dim(), |r, c| {
        theta2_amb.get(r, t2.keep[c]).clone()
    });
    // σ': μ at (r, c) with value av -> (av in slot r) ⊗ (unit in slot c)
    let mut sigma2 = Matrix::zero(field, t2.dim(), md);
    for r in 0..n {
        for c in 0..n {
            for av in 0..da {
                let col = midx(r, c, av);
                let mut amb = vec![field.zero(); t1_amb];
                for (t, s) in a.unit_vec().iter().enumerate() {
                    if !s.is_zero() {
                        amb[t2_index(xi(r, av), xi(c, t))] = s.clone();
                    }
                }
                let q = t2.project(&amb);
                for (row, s) in q.into_iter().enumerate() {
                    sigma2.set(row, col, s);
                }
            }
        }
    }
    let matrix_collapse_identity = theta2.mul(&sigma2) == Matrix::identity(field, md);
    let matrix_expand_identity = sigma2.mul(&theta2) == Matrix::identity(field, t2.dim());

    // degree preservation of all four maps
    let degree_preserving = map_degree_preserving(&theta, &t1.degrees, a.degrees())
        && map_degree_preserving(&sigma, a.degrees(), &t1.degrees)
        && map_degree_preserving(&theta2, &t2.degrees, m_alg.degrees())
        && map_degree_preserving(&sigma2, m_alg.degrees(), &t2.degrees);

    Ok(MoritaReport {
        collapse_identity,
        expand_identity,
        matrix_collapse_identity,
        matrix_expand_identity,
        degree_preserving,
    })
}

/// Columns indexed by source coordinates, rows by target coordinates:
/// every nonzero entry must connect equal degrees.
fn map_degree_preserving(
    m: &Matrix,
    source_degrees: &[GroupElement],
    target_degrees: &[GroupElement],
) -> bool {
    for c in 0..m.cols {
        for r in 0..m.rows {
            if !m.get(r, c).is_zero() && target_degrees[r] != source_degrees[c] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra_on_grade_group, quaternion_algebra};
    use crate::grade_group::GradeGroup;
    use crate::scalar::FieldSpec;

    #[test]
    fn scalar_base_case() {
        let g = GradeGroup::trivial();
        let k = GradedAlgebra::ground_field(FieldSpec::Rational, &g);
        let rep = verify_morita_identities(&k, &[g.zero()]).unwrap();
        assert!(rep.ok());
    }

    #[test]
    fn twisted_f3z2_with_mixed_shifts() {
        let f3 = FieldSpec::prime(3).unwrap();
        let g = GradeGroup::cyclic(2);
        let a = group_algebra_on_grade_group(f3, &g).unwrap();
        let rep =
            verify_morita_identities(&a, &[g.zero(), g.element(vec![1]).unwrap()]).unwrap();
        assert!(rep.ok());
    }

    #[test]
    fn quaternions_with_diagonal_shift() {
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let g = GradeGroup::klein();
        let rep = verify_morita_identities(
            &q,
            &[g.zero(), g.element(vec![1, 1]).unwrap()],
        )
        .unwrap();
        assert!(rep.ok());
    }
}
