//! Error and verdict types shared across the crate.

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("mismatched grade groups")]
    GroupMismatch,
    #[error("mismatched coefficient fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("singular matrix: column {witness} depends on earlier columns")]
    Singular { witness: usize },
    #[error("infinite index: subgroup does not have finite index")]
    InfiniteIndex,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid cocycle at triple ({0}, {1}, {2})")]
    InvalidCocycle(usize, usize, usize),
    #[error("no designated base subalgebra")]
    NoDesignatedBase,
    #[error("designated base is invalid: {0}")]
    InvalidBase(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),
    #[error("undetermined: {0}")]
    Undetermined(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Three-valued outcome of a decision procedure. `Undetermined` always
/// carries a human-readable reason; it is never a silent guess.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Undetermined(String),
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Verdict::False)
    }

    pub fn is_determined(&self) -> bool {
        !matches!(self, Verdict::Undetermined(_))
    }

    /// Logical conjunction; `False` dominates `Undetermined`.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::Undetermined(r), _) | (_, Verdict::Undetermined(r)) => {
                Verdict::Undetermined(r)
            }
            _ => Verdict::True,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::True => write!(f, "true"),
            Verdict::False => write!(f, "false"),
            Verdict::Undetermined(r) => write!(f, "undetermined ({r})"),
        }
    }
}
