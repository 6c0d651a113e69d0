//! Exact computations with finite-dimensional algebras graded by
//! finitely generated abelian groups: structural predicates (graded
//! simple / central / division / field / Azumaya), constructions
//! (tensor products, opposites, shifted matrix algebras, shifted free
//! modules), and graded K0 with kernel/cokernel torsion reports.

pub mod algebra;
pub mod azumaya;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod file;
pub mod grade_group;
pub mod groups;
pub mod int_matrix;
pub mod k0;
pub mod matrix;
pub mod modules;
pub mod morita;
pub mod poly;
pub mod scalar;

pub use algebra::GradedAlgebra;
pub use error::{Error, Verdict};
pub use grade_group::{GradeGroup, GroupElement, Subgroup};
pub use scalar::{FieldSpec, Scalar};
