//! Builders for the standing examples: group algebras, twisted group
//! algebras from 2-cocycles, quaternion algebras with their Z2 x Z2
//! grading, and small test fixtures.

use crate::algebra::GradedAlgebra;
use crate::error::Error;
use crate::grade_group::{self, GradeGroup, GroupElement};
use crate::groups::FiniteGroup;
use crate::scalar::{FieldSpec, Scalar};

/// A normalized 2-cocycle on a finite abelian grade group, tabulated on
/// the element enumeration order.
#[derive(Clone, Debug)]
pub struct Cocycle {
    pub group: GradeGroup,
    pub elements: Vec<GroupElement>,
    pub table: Vec<Vec<Scalar>>,
}

impl Cocycle {
    /// Validates the cocycle identity
    /// a(x,y) a(x+y,z) = a(y,z) a(x,y+z) and normalizes so that
    /// a(0,.) = a(.,0) = 1 (dividing by a(0,0) is a coboundary change).
    pub fn new(group: &GradeGroup, table: Vec<Vec<Scalar>>) -> Result<Cocycle, Error> {
        let elements = group.elements()?;
        let n = elements.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("cocycle table must be square of the group order".into()));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    return Err(Error::InvalidCocycle(i, j, 0));
                }
            }
        }
        let index_of = |g: &GroupElement| elements.iter().position(|e| e == g).unwrap();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let xy = index_of(&grade_group::add(&elements[x], &elements[y])?);
                    let yz = index_of(&grade_group::add(&elements[y], &elements[z])?);
                    let lhs = table[x][y].mul(&table[xy][z]);
                    let rhs = table[y][z].mul(&table[x][yz]);
                    if lhs != rhs {
                        return Err(Error::InvalidCocycle(x, y, z));
                    }
                }
            }
        }
        let zero = index_of(&group.zero());
        let c0 = table[zero][zero].clone();
        let c0_inv = c0.inv().ok_or(Error::DivisionByZero)?;
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.mul(&c0_inv)).collect())
            .collect();
        Ok(Cocycle { group: group.clone(), elements, table })
    }

    /// The trivial cocycle (constant 1).
    pub fn trivial(field: FieldSpec, group: &GradeGroup) -> Result<Cocycle, Error> {
        let n = group.elements()?.len();
        Cocycle::new(group, vec![vec![field.one(); n]; n])
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.table[i][j]
    }
}

/// Twisted group algebra: basis u_g for g in the group, with
/// u_g u_h = a(g, h) u_{g+h} and deg(u_g) = g.
pub fn twisted_group_algebra(field: FieldSpec, cocycle: &Cocycle) -> Result<GradedAlgebra, Error> {
    let elements = &cocycle.elements;
    let n = elements.len();
    let index_of = |g: &GroupElement| elements.iter().position(|e| e == g).unwrap();
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let k = index_of(&grade_group::add(&elements[i], &elements[j])?);
            table[i][j] = vec![(k, cocycle.value(i, j).clone())];
        }
    }
    let zero = index_of(&cocycle.group.zero());
    let mut unit = vec![field.zero(); n];
    unit[zero] = field.one();
    let names = elements.iter().map(|e| format!("u{e}")).collect();
    GradedAlgebra::new(
        field,
        cocycle.group.clone(),
        elements.clone(),
        names,
        table,
        unit,
        Some(vec![zero]),
    )
}

/// Plain group algebra of a finite grade group, graded by itself.
pub fn group_algebra_on_grade_group(
    field: FieldSpec,
    group: &GradeGroup,
) -> Result<GradedAlgebra, Error> {
    twisted_group_algebra(field, &Cocycle::trivial(field, group)?)
}

/// Group algebra of a finite group: graded by its canonical form when
/// abelian, trivially graded otherwise.
pub fn group_algebra(field: FieldSpec, g: &FiniteGroup) -> Result<GradedAlgebra, Error> {
    g.validate()?;
    let n = g.order();
    let (grade_group, degrees) = if g.is_abelian() {
        g.abelian_decomposition()?
    } else {
        let trivial = GradeGroup::trivial();
        let z = trivial.zero();
        (trivial, vec![z; n])
    };
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = vec![(g.mul(i, j), field.one())];
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[g.identity] = field.one();
    GradedAlgebra::new(
        field,
        grade_group,
        degrees,
        g.names.clone(),
        table,
        unit,
        Some(vec![g.identity]),
    )
}

/// Quaternion algebra (a, b / k): basis 1, i, j, k with i^2 = a,
/// j^2 = b, ij = k = -ji, graded by Z2 x Z2 with degrees
/// (0,0), (1,0), (0,1), (1,1). Characteristic 2 is unsupported.
pub fn quaternion_algebra(field: FieldSpec, a: i64, b: i64) -> Result<GradedAlgebra, Error> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("quaternion algebras need characteristic != 2".into()));
    }
    let sa = field.from_i64(a);
    let sb = field.from_i64(b);
    if sa.is_zero() || sb.is_zero() {
        return Err(Error::InvalidAlgebra("quaternion parameters must be nonzero".into()));
    }
    let g = GradeGroup::klein();
    let degrees = vec![
        g.zero(),
        g.element(vec![1, 0])?,
        g.element(vec![0, 1])?,
        g.element(vec![1, 1])?,
    ];
    let one = field.one();
    let ab = sa.mul(&sb);
    // rows/cols in basis order [1, i, j, k]
    let entry = |k: usize, c: &Scalar| vec![(k, c.clone())];
    let table = vec![
        vec![entry(0, &one), entry(1, &one), entry(2, &one), entry(3, &one)],
        vec![
            entry(1, &one),
            entry(0, &sa),
            entry(3, &one),
            entry(2, &sa),
        ],
        vec![
            entry(2, &one),
            entry(3, &one.neg()),
            entry(0, &sb),
            entry(1, &sb.neg()),
        ],
        vec![
            entry(3, &one),
            entry(2, &sa.neg()),
            entry(1, &sb),
            entry(0, &ab.neg()),
        ],
    ];
    let unit = vec![one.clone(), field.zero(), field.zero(), field.zero()];
    GradedAlgebra::new(
        field,
        g,
        degrees,
        vec!["1".into(), "i".into(), "j".into(), "k".into()],
        table,
        unit,
        Some(vec![0]),
    )
}

/// Upper-triangular 2x2 matrices over k, Z-graded with deg E12 = 1.
/// Basis order: E11, E12, E22.
pub fn upper_triangular_2x2(field: FieldSpec) -> GradedAlgebra {
    let g = GradeGroup::integers();
    let zero = g.zero();
    let one = g.element(vec![1]).unwrap();
    let degrees = vec![zero.clone(), one, zero];
    let e = |k: usize| vec![(k, field.one())];
    let table = vec![
        vec![e(0), e(1), vec![]],
        vec![vec![], vec![], e(1)],
        vec![vec![], vec![], e(2)],
    ];
    let unit = vec![field.one(), field.zero(), field.one()];
    GradedAlgebra::new(
        field,
        g,
        degrees,
        vec!["E11".into(), "E12".into(), "E22".into()],
        table,
        unit,
        None,
    )
    .expect("upper triangular fixture is well-formed")
}

/// k x ... x k (n factors), trivially graded.
pub fn diagonal_algebra(field: FieldSpec, n: usize) -> GradedAlgebra {
    let g = GradeGroup::trivial();
    let degrees = vec![g.zero(); n];
    let mut table = vec![vec![Vec::new(); n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        row[i] = vec![(i, field.one())];
    }
    let unit = vec![field.one(); n];
    GradedAlgebra::new(
        field,
        g,
        degrees,
        (0..n).map(|i| format!("e{i}")).collect(),
        table,
        unit,
        None,
    )
    .expect("diagonal fixture is well-formed")
}

/// The cocycle giving the quaternion algebra (a, b / k) as a twisted
/// group algebra over Z2 x Z2 (element order: (0,0),(0,1),(1,0),(1,1)).
pub fn quaternion_cocycle(field: FieldSpec, a: i64, b: i64) -> Result<Cocycle, Error> {
    let g = GradeGroup::klein();
    let elements = g.elements()?;
    let sa = field.from_i64(a);
    let sb = field.from_i64(b);
    let one = field.one();
    // u_(1,0) = i, u_(0,1) = j, u_(1,1) = ij: alpha(x, y) from the
    // multiplication table of 1, i, j, ij
    let n = elements.len();
    let mut table = vec![vec![one.clone(); n]; n];
    let idx = |x: i64, y: i64| {
        elements
            .iter()
            .position(|e| e.coords() == [x, y])
            .expect("klein element")
    };
    let i_ = idx(1, 0);
    let j_ = idx(0, 1);
    let k_ = idx(1, 1);
    // i*i = a, i*j = k, i*k = a j
    table[i_][i_] = sa.clone();
    table[i_][k_] = sa.clone();
    // j*i = -k, j*j = b, j*k = -b i
    table[j_][i_] = one.neg();
    table[j_][j_] = sb.clone();
    table[j_][k_] = sb.neg();
    // k*i = -a j, k*j = b i, k*k = -a b
    table[k_][i_] = sa.neg();
    table[k_][j_] = sb.clone();
    table[k_][k_] = sa.mul(&sb).neg();
    Cocycle::new(&g, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_graded_division_ring, is_graded_field, EnumerationCaps};
    use crate::groups::{cyclic, symmetric3};

    #[test]
    fn trivial_cocycle_gives_group_algebra() {
        let g = GradeGroup::cyclic(3);
        let f2 = FieldSpec::prime(2).unwrap();
        let a = group_algebra_on_grade_group(f2, &g).unwrap();
        assert!(a.validate().ok());
        assert_eq!(a.dim(), 3);
        assert!(is_graded_field(&a, &EnumerationCaps::default()).verdict.is_true());
    }

    #[test]
    fn quaternions_match_their_cocycle() {
        let q = quaternion_algebra(FieldSpec::Rational, -1, -1).unwrap();
        let c = quaternion_cocycle(FieldSpec::Rational, -1, -1).unwrap();
        let t = twisted_group_algebra(FieldSpec::Rational, &c).unwrap();
        assert!(t.validate().ok());
        // align bases: twisted order is (0,0),(0,1),(1,0),(1,1) =
        // 1, j, i, k; permute to 1, i, j, k
        let perm = t.permute_basis(&[0, 2, 1, 3]).unwrap();
        assert_eq!(perm.degrees(), q.degrees());
        for i in 0..4 {
            for j in 0..4 {
                let mut lhs = perm.basis_product(i, j).clone();
                let mut rhs = q.basis_product(i, j).clone();
                lhs.sort_by_key(|(k, _)| *k);
                rhs.sort_by_key(|(k, _)| *k);
                assert_eq!(lhs, rhs, "products differ at ({i},{j})");
            }
        }
    }

    #[test]
    fn twisted_f3z2_is_the_nine_element_field() {
        // x^2 = -1 is irreducible over F_3, so the twist is a graded field
        let f3 = FieldSpec::prime(3).unwrap();
        let g = GradeGroup::cyclic(2);
        let mut table = vec![vec![f3.one(); 2]; 2];
        table[1][1] = f3.from_i64(-1);
        let c = Cocycle::new(&g, table).unwrap();
        let a = twisted_group_algebra(f3, &c).unwrap();
        assert!(a.validate().ok());
        assert!(is_graded_field(&a, &EnumerationCaps::default()).verdict.is_true());
        // ungraded: every nonzero element invertible (9 elements, field)
        for x0 in 0..3i64 {
            for x1 in 0..3i64 {
                if x0 == 0 && x1 == 0 {
                    continue;
                }
                let v = vec![f3.from_i64(x0), f3.from_i64(x1)];
                assert!(a.is_invertible(&v));
            }
        }
    }

    #[test]
    fn invalid_cocycle_is_rejected_with_triple() {
        let g = GradeGroup::cyclic(2);
        let f5 = FieldSpec::prime(5).unwrap();
        let mut table = vec![vec![f5.one(); 2]; 2];
        table[0][1] = f5.from_i64(2); // breaks a(0,.) structure
        match Cocycle::new(&g, table) {
            Err(Error::InvalidCocycle(_, _, _)) => {}
            other => panic!("expected cocycle failure, got {other:?}"),
        }
    }

    #[test]
    fn group_algebra_of_s3_is_trivially_graded() {
        let a = group_algebra(FieldSpec::Rational, &symmetric3()).unwrap();
        assert!(a.validate().ok());
        assert_eq!(a.dim(), 6);
        assert_eq!(a.support().len(), 1);
    }

    #[test]
    fn group_algebra_of_cyclic_is_graded_by_itself() {
        let a = group_algebra(FieldSpec::Rational, &cyclic(4)).unwrap();
        assert!(a.validate().ok());
        assert_eq!(a.support().len(), 4);
        assert!(is_graded_field(&a, &EnumerationCaps::default()).verdict.is_true());
    }

    #[test]
    fn split_quaternions_divide_gradedly_but_not_ungraded() {
        let q = quaternion_algebra(FieldSpec::Rational, 1, 1).unwrap();
        assert!(q.validate().ok());
        // every homogeneous component is an invertible line, so the
        // graded division property holds
        let dc = is_graded_division_ring(&q, &EnumerationCaps::default());
        assert!(dc.verdict.is_true());
        // but (1+i)(1-i) = 0, so the ungraded algebra is split
        let field = FieldSpec::Rational;
        let one_plus_i = vec![field.one(), field.one(), field.zero(), field.zero()];
        assert!(!q.is_invertible(&one_plus_i));
    }

    #[test]
    fn characteristic_two_quaternions_rejected() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            quaternion_algebra(f2, 1, 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn quaternions_over_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        let q = quaternion_algebra(f5, -1, -1).unwrap();
        assert!(q.validate().ok());
        // 1-dimensional components with invertible basis elements: a
        // graded division ring even though it splits ungraded
        assert!(is_graded_division_ring(&q, &EnumerationCaps::default()).verdict.is_true());
    }
}
