//! Machine-readable reports with re-checkable certificates.

use gradedk::algebra::GradedAlgebra;
use gradedk::error::Verdict;
use gradedk::matrix::Echelon;
use gradedk::scalar::Scalar;
use serde::{Deserialize, Serialize};

pub type Pair = (i64, i64);

pub fn scalar_pairs(a: &GradedAlgebra, v: &[Scalar]) -> Vec<Pair> {
    v.iter()
        .map(|s| {
            let (n, d) = s.to_ratio();
            let _ = a;
            (
                i64::try_from(&n).expect("certificate coefficients fit 64 bits"),
                i64::try_from(&d).expect("certificate coefficients fit 64 bits"),
            )
        })
        .collect()
}

pub fn pairs_scalar(a: &GradedAlgebra, v: &[Pair]) -> anyhow::Result<Vec<Scalar>> {
    v.iter()
        .map(|&(n, d)| Ok(a.field.from_ratio(n, d)?))
        .collect()
}

/// Certificates re-checkable by `verify-certificate` without re-running
/// the decision procedure that produced them.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    None,
    /// a proper graded two-sided ideal refuting simplicity
    ProperGradedIdeal { basis: Vec<Vec<Pair>> },
    /// inverse pairs covering the support of a graded division ring
    HomogeneousInverses { pairs: Vec<(Vec<Pair>, Vec<Pair>)> },
    /// a nonzero homogeneous non-invertible element
    NonInvertibleHomogeneous { element: Vec<Pair> },
    /// ψ determinant over the base together with its inverse
    SandwichDeterminant { rank: usize, det: Vec<Pair>, det_inverse: Option<Vec<Pair>> },
    /// per-degree expressions 1 = Σ c x y with x, y in opposite components
    StrongGradingWitnesses { witnesses: Vec<(Vec<i64>, Vec<(Vec<Pair>, Vec<Pair>, Pair)>)> },
    /// a degree whose component products miss the unit
    StrongGradingFailure { degree: Vec<i64> },
}

impl Certificate {
    /// Re-checks the certificate against the algebra by bounded
    /// arithmetic only.
    pub fn verify(&self, a: &GradedAlgebra) -> anyhow::Result<bool> {
        match self {
            Certificate::None => Ok(true),
            Certificate::ProperGradedIdeal { basis } => {
                if basis.is_empty() {
                    return Ok(false);
                }
                let mut ech = Echelon::new(a.field, a.dim());
                let mut rows = Vec::new();
                for b in basis {
                    let v = pairs_scalar(a, b)?;
                    if !a.is_homogeneous(&v) {
                        return Ok(false);
                    }
                    ech.insert(v.clone());
                    rows.push(v);
                }
                if ech.rank() == 0 || ech.rank() >= a.dim() {
                    return Ok(false);
                }
                for v in &rows {
                    for i in 0..a.dim() {
                        let b = a.basis_vec(i);
                        if !ech.contains(&a.mul_vecs(&b, v)) || !ech.contains(&a.mul_vecs(v, &b)) {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            Certificate::HomogeneousInverses { pairs } => {
                let unit = a.unit_vec().to_vec();
                for (x, inv) in pairs {
                    let x = pairs_scalar(a, x)?;
                    let inv = pairs_scalar(a, inv)?;
                    if a.mul_vecs(&x, &inv) != unit || a.mul_vecs(&inv, &x) != unit {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Certificate::NonInvertibleHomogeneous { element } => {
                let x = pairs_scalar(a, element)?;
                Ok(x.iter().any(|c| !c.is_zero())
                    && a.is_homogeneous(&x)
                    && !a.is_invertible(&x))
            }
            Certificate::SandwichDeterminant { det, det_inverse, .. } => {
                // the recorded determinant and its inverse must multiply
                // to the unit of the base subalgebra; both live in the
                // span of the designated base of the file
                let d = pairs_scalar(a, det)?;
                match det_inverse {
                    Some(inv) => {
                        let inv = pairs_scalar(a, inv)?;
                        Ok(a.mul_vecs(&d, &inv) == a.unit_vec().to_vec())
                    }
                    None => Ok(!a.is_invertible(&d)),
                }
            }
            Certificate::StrongGradingWitnesses { witnesses } => {
                let unit = a.unit_vec().to_vec();
                for (_, combo) in witnesses {
                    let mut acc = a.zero_vec();
                    for (x, y, c) in combo {
                        let x = pairs_scalar(a, x)?;
                        let y = pairs_scalar(a, y)?;
                        let c = a.field.from_ratio(c.0, c.1)?;
                        let prod = a.mul_vecs(&x, &y);
                        for (i, p) in prod.iter().enumerate() {
                            acc[i] = acc[i].add(&c.mul(p));
                        }
                    }
                    if acc != unit {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Certificate::StrongGradingFailure { degree } => {
                let gamma = a.group.element(degree.clone())?;
                let neg = gradedk::grade_group::neg(&gamma);
                let mut span = Echelon::new(a.field, a.dim());
                for &x in &a.component_indices(&gamma) {
                    for &y in &a.component_indices(&neg) {
                        span.insert(a.mul_vecs(&a.basis_vec(x), &a.basis_vec(y)));
                    }
                }
                Ok(!span.contains(a.unit_vec()))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
    pub certificate: Certificate,
    /// which mathematical statement the check decides
    pub reference: String,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.verdict.is_determined() {
            0
        } else {
            2
        }
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(self).expect("serializable"));
        } else {
            let prop = self.property.as_deref().unwrap_or("");
            println!("{} {} -> {}", self.command, prop, self.verdict);
            if let Some(d) = &self.detail {
                println!("  {d}");
            }
        }
    }
}
