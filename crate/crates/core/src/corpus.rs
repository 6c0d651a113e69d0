//! The built-in instance corpus: the standing examples exercised by the
//! test suites and the batch runner.

use crate::algebra::GradedAlgebra;
use crate::azumaya::scalar_matrix_embedding;
use crate::constructions::{
    group_algebra, group_algebra_on_grade_group, quaternion_algebra, twisted_group_algebra,
    upper_triangular_2x2, Cocycle,
};
use crate::error::Error;
use crate::grade_group::GradeGroup;
use crate::groups;
use crate::k0::K0Shape;
use crate::scalar::{FieldSpec, Scalar};

/// A corpus member: the algebra, its designated central graded subfield
/// (when one is part of the instance), its supported K0 shape, and its
/// rank over the base.
pub struct CorpusEntry {
    pub name: &'static str,
    pub algebra: GradedAlgebra,
    pub base: Option<Vec<Vec<Scalar>>>,
    pub shape: Option<K0Shape>,
    pub rank_over_base: Option<u64>,
}

fn f(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

/// The nine-element field as a twist of F3[Z2] by x^2 = -1.
pub fn twisted_f3_z2() -> Result<GradedAlgebra, Error> {
    let f3 = f(3);
    let g = GradeGroup::cyclic(2);
    let mut table = vec![vec![f3.one(); 2]; 2];
    table[1][1] = f3.from_i64(-1);
    twisted_group_algebra(f3, &Cocycle::new(&g, table)?)
}

/// M2 over a division-shaped algebra with shifts (0, 1) in Z2, plus the
/// scalar base and the transport shape.
pub fn matrix_01_over(d: &GradedAlgebra) -> Result<(GradedAlgebra, Vec<Vec<Scalar>>, K0Shape), Error> {
    let g = d.group.clone();
    let shifts = vec![g.zero(), g.element(vec![1])?];
    let m = d.matrix_shift(&shifts)?;
    let base = (0..d.dim())
        .map(|h| scalar_matrix_embedding(d, 2, &d.basis_vec(h)))
        .collect();
    let shape = K0Shape::MatrixOverDivision { division: d.clone(), shifts };
    Ok((m, base, shape))
}

pub fn corpus() -> Vec<CorpusEntry> {
    let q = FieldSpec::Rational;
    let klein = GradeGroup::klein();
    let z2 = GradeGroup::cyclic(2);
    let mut entries = Vec::new();

    let hq = quaternion_algebra(q, -1, -1).expect("quaternions");
    entries.push(CorpusEntry {
        name: "quaternions-q",
        base: Some(vec![hq.basis_vec(0)]),
        shape: Some(K0Shape::Division(hq.clone())),
        rank_over_base: Some(4),
        algebra: hq,
    });

    let sq = quaternion_algebra(q, 1, 1).expect("split quaternions");
    entries.push(CorpusEntry {
        name: "split-quaternions-q",
        base: Some(vec![sq.basis_vec(0)]),
        shape: Some(K0Shape::Division(sq.clone())),
        rank_over_base: Some(4),
        algebra: sq,
    });

    let q5 = quaternion_algebra(f(5), -1, -1).expect("quaternions mod 5");
    entries.push(CorpusEntry {
        name: "quaternions-f5",
        base: Some(vec![q5.basis_vec(0)]),
        shape: Some(K0Shape::Division(q5.clone())),
        rank_over_base: Some(4),
        algebra: q5,
    });

    let q3 = quaternion_algebra(f(3), -1, -1).expect("quaternions mod 3");
    entries.push(CorpusEntry {
        name: "quaternions-f3",
        base: Some(vec![q3.basis_vec(0)]),
        shape: Some(K0Shape::Division(q3.clone())),
        rank_over_base: Some(4),
        algebra: q3,
    });

    let rk = GradedAlgebra::ground_field(q, &klein);
    entries.push(CorpusEntry {
        name: "rationals-klein",
        base: Some(vec![rk.basis_vec(0)]),
        shape: Some(K0Shape::Division(rk.clone())),
        rank_over_base: Some(1),
        algebra: rk,
    });

    let qz2 = group_algebra_on_grade_group(q, &z2).expect("Q[Z2]");
    entries.push(CorpusEntry {
        name: "group-algebra-q-z2",
        base: Some((0..2).map(|i| qz2.basis_vec(i)).collect()),
        shape: Some(K0Shape::Division(qz2.clone())),
        rank_over_base: Some(1),
        algebra: qz2.clone(),
    });

    for (name, p) in [("group-algebra-f2-z2", 2u64), ("group-algebra-f5-z2", 5)] {
        let a = group_algebra_on_grade_group(f(p), &z2).expect("group algebra");
        entries.push(CorpusEntry {
            name,
            base: Some((0..2).map(|i| a.basis_vec(i)).collect()),
            shape: Some(K0Shape::Division(a.clone())),
            rank_over_base: Some(1),
            algebra: a,
        });
    }

    let t9 = twisted_f3_z2().expect("twisted F3[Z2]");
    entries.push(CorpusEntry {
        name: "twisted-f3-z2",
        base: Some((0..2).map(|i| t9.basis_vec(i)).collect()),
        shape: Some(K0Shape::Division(t9.clone())),
        rank_over_base: Some(1),
        algebra: t9,
    });

    let (m, base, shape) = matrix_01_over(&qz2).expect("M2(Q[Z2])(0,1)");
    entries.push(CorpusEntry {
        name: "matrix-q-z2-01",
        base: Some(base),
        shape: Some(shape),
        rank_over_base: Some(4),
        algebra: m,
    });

    entries.push(CorpusEntry {
        name: "upper-triangular-q",
        base: None,
        shape: None,
        rank_over_base: None,
        algebra: upper_triangular_2x2(q),
    });

    entries.push(CorpusEntry {
        name: "group-algebra-q-s3",
        base: None,
        shape: None,
        rank_over_base: None,
        algebra: group_algebra(q, &groups::symmetric3()).expect("Q[S3]"),
    });

    entries
}

pub fn by_name(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// Pairs (A graded central simple, B graded simple) over F2/F3 with a
/// shared grade group, small enough for the exhaustive homogeneous
/// ideal-closure oracle (dimension at most 6 per factor).
pub fn tensor_pair_corpus() -> Vec<(&'static str, GradedAlgebra, GradedAlgebra)> {
    let z2 = GradeGroup::cyclic(2);
    let klein = GradeGroup::klein();
    let embed_first = |a: &GradedAlgebra| {
        a.regrade(&klein, |d| klein.element(vec![d.coords()[0], 0]))
            .expect("Z2 embeds on the first coordinate")
    };
    let mut out = Vec::new();

    // Z2 family over F2
    let f2 = f(2);
    let kf2 = GradedAlgebra::ground_field(f2, &z2);
    let m2_f2_01 = kf2
        .matrix_shift(&[z2.zero(), z2.element(vec![1]).unwrap()])
        .unwrap();
    let m2_f2_triv = kf2.matrix_shift(&[z2.zero(), z2.zero()]).unwrap();
    let f2z2 = group_algebra_on_grade_group(f2, &z2).unwrap();
    out.push(("m2f2(0,1) x f2[z2]", m2_f2_01.clone(), f2z2.clone()));
    out.push(("m2f2(0,1) x m2f2(0,1)", m2_f2_01.clone(), m2_f2_01.clone()));
    out.push(("m2f2 x f2[z2]", m2_f2_triv.clone(), f2z2.clone()));
    out.push(("m2f2(0,1) x f2", m2_f2_01.clone(), kf2.clone()));

    // Z2 family over F3
    let f3 = f(3);
    let kf3 = GradedAlgebra::ground_field(f3, &z2);
    let m2_f3_01 = kf3
        .matrix_shift(&[z2.zero(), z2.element(vec![1]).unwrap()])
        .unwrap();
    let f3z2 = group_algebra_on_grade_group(f3, &z2).unwrap();
    let t9 = twisted_f3_z2().unwrap();
    out.push(("m2f3(0,1) x f3[z2]", m2_f3_01.clone(), f3z2.clone()));
    out.push(("m2f3(0,1) x twisted-f3z2", m2_f3_01.clone(), t9.clone()));
    out.push(("m2f3(0,1) x m2f3(0,1)", m2_f3_01.clone(), m2_f3_01.clone()));

    // Klein family over F3
    let q3 = quaternion_algebra(f3, -1, -1).unwrap();
    let q3_split = quaternion_algebra(f3, 1, 1).unwrap();
    out.push(("quat-f3 x quat-f3", q3.clone(), q3.clone()));
    out.push(("quat-f3 x split-quat-f3", q3.clone(), q3_split.clone()));
    out.push(("quat-f3 x f3[z2]-embedded", q3.clone(), embed_first(&f3z2)));
    out.push(("quat-f3 x twisted-embedded", q3.clone(), embed_first(&t9)));

    out
}

/// Small F2/F3 algebras (dimension at most 6) for the exhaustive
/// structural oracles.
pub fn small_finite_field_corpus() -> Vec<(&'static str, GradedAlgebra)> {
    let z2 = GradeGroup::cyclic(2);
    let f2 = f(2);
    let f3 = f(3);
    let mut out: Vec<(&'static str, GradedAlgebra)> = vec![
        ("f2[z2]", group_algebra_on_grade_group(f2, &z2).unwrap()),
        ("f3[z2]", group_algebra_on_grade_group(f3, &z2).unwrap()),
        ("f2[z3]", group_algebra_on_grade_group(f2, &GradeGroup::cyclic(3)).unwrap()),
        ("f2[z4]", group_algebra_on_grade_group(f2, &GradeGroup::cyclic(4)).unwrap()),
        ("f3[z3]", group_algebra_on_grade_group(f3, &GradeGroup::cyclic(3)).unwrap()),
        ("twisted-f3z2", twisted_f3_z2().unwrap()),
        ("quat-f3", quaternion_algebra(f3, -1, -1).unwrap()),
        ("upper-triangular-f2", upper_triangular_2x2(f2)),
        ("upper-triangular-f3", upper_triangular_2x2(f3)),
        ("f2[s3]", group_algebra(f2, &groups::symmetric3()).unwrap()),
        ("f3[s3]", group_algebra(f3, &groups::symmetric3()).unwrap()),
    ];
    let kf2 = GradedAlgebra::ground_field(f2, &z2);
    out.push((
        "m2f2(0,1)",
        kf2.matrix_shift(&[z2.zero(), z2.element(vec![1]).unwrap()]).unwrap(),
    ));
    out
}
