//! Dense exact linear algebra over ℚ and 𝔽_p.

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.field, self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() && !v[k].is_zero() {
                        acc = acc.add(&a.mul(&v[k]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.field, self.cols, (0..self.rows).map(|i| self.row(i).to_vec())).rank()
    }

    /// Basis of the right kernel {x : Mx = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        // Echelonize the rows, then back-substitute free columns.
        let ech = Echelon::from_rows(self.field, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()));
        let pivot_cols: Vec<usize> = ech.pivots.clone();
        let is_pivot = |c: usize| pivot_cols.contains(&c);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot(free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            // rows are in echelon form with normalized pivots
            for (r, &pc) in ech.pivots.iter().enumerate().rev() {
                // v[pc] = -sum_{c>pc} row[c] * v[c]
                let mut acc = self.field.zero();
                let row = &ech.rows[r];
                for c in pc + 1..self.cols {
                    if !row[c].is_zero() && !v[c].is_zero() {
                        acc = acc.add(&row[c].mul(&v[c]));
                    }
                }
                v[pc] = acc.neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves Mx = b; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut ech = Echelon::new(self.field, self.cols + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            ech.insert(row);
        }
        // Inconsistent iff a pivot lands in the augmented column.
        if ech.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[r];
            let mut acc = row[self.cols].clone();
            for c in pc + 1..self.cols {
                if !row[c].is_zero() && !x[c].is_zero() {
                    acc = acc.sub(&row[c].mul(&x[c]));
                }
            }
            x[pc] = acc;
        }
        Some(x)
    }

    /// Exact inverse; on failure reports a witness dependent column.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut ech = Echelon::new(self.field, n);
        for j in 0..n {
            if !ech.insert(self.col(j)) {
                return Err(Error::Singular { witness: j });
            }
        }
        // Gauss-Jordan on [M | I].
        let mut aug = Matrix::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        for col in 0..n {
            let piv = (col..n).find(|&r| !aug.get(r, col).is_zero()).expect("nonsingular");
            if piv != col {
                for j in 0..2 * n {
                    let a = aug.get(piv, j).clone();
                    let b = aug.get(col, j).clone();
                    aug.set(piv, j, b);
                    aug.set(col, j, a);
                }
            }
            let inv = aug.get(col, col).inv().expect("pivot nonzero");
            for j in 0..2 * n {
                let v = aug.get(col, j).mul(&inv);
                aug.set(col, j, v);
            }
            for r in 0..n {
                if r == col || aug.get(r, col).is_zero() {
                    continue;
                }
                let factor = aug.get(r, col).clone();
                for j in 0..2 * n {
                    let v = aug.get(r, j).sub(&factor.mul(aug.get(col, j)));
                    aug.set(r, j, v);
                }
            }
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| aug.get(i, j + n).clone()))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let piv = match (col..n).find(|&r| !m.get(r, col).is_zero()) {
                Some(p) => p,
                None => return self.field.zero(),
            };
            if piv != col {
                det = det.neg();
                for j in 0..n {
                    let a = m.get(piv, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(piv, j, b);
                    m.set(col, j, a);
                }
            }
            let pv = m.get(col, col).clone();
            det = det.mul(&pv);
            let inv = pv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).mul(&inv);
                for j in col..n {
                    let v = m.get(r, j).sub(&factor.mul(m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Characteristic polynomial coefficients, constant term first, via
    /// Hessenberg reduction (works over any exact field).
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return vec![f.one()];
        }
        let mut h = self.clone();
        // Reduce to upper Hessenberg by similarity transforms.
        for col in 0..n.saturating_sub(2) {
            let piv = (col + 1..n).find(|&r| !h.get(r, col).is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            if piv != col + 1 {
                // swap rows and the matching columns
                for j in 0..n {
                    let a = h.get(piv, j).clone();
                    let b = h.get(col + 1, j).clone();
                    h.set(piv, j, b);
                    h.set(col + 1, j, a);
                }
                for i in 0..n {
                    let a = h.get(i, piv).clone();
                    let b = h.get(i, col + 1).clone();
                    h.set(i, piv, b);
                    h.set(i, col + 1, a);
                }
            }
            let inv = h.get(col + 1, col).inv().expect("pivot nonzero");
            for r in col + 2..n {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let factor = h.get(r, col).mul(&inv);
                for j in 0..n {
                    let v = h.get(r, j).sub(&factor.mul(h.get(col + 1, j)));
                    h.set(r, j, v);
                }
                for i in 0..n {
                    let v = h.get(i, col + 1).add(&factor.mul(h.get(i, r)));
                    h.set(i, col + 1, v);
                }
            }
        }
        // charpoly of leading k-by-k Hessenberg blocks, p_0 = 1.
        // p_k(t) = (t - h[k-1][k-1]) p_{k-1}(t)
        //          - sum_{i=1..k-1} h[k-1-i][k-1] (prod subdiag) p_{k-1-i}(t)
        let mut polys: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for k in 1..=n {
            let mut p = poly_shift_mul(&polys[k - 1], &h.get(k - 1, k - 1).neg(), f);
            let mut subprod = f.one();
            for i in 1..k {
                subprod = subprod.mul(h.get(k - i, k - i - 1));
                if subprod.is_zero() {
                    break;
                }
                let coeff = h.get(k - 1 - i, k - 1).mul(&subprod);
                if coeff.is_zero() {
                    continue;
                }
                let term = poly_scale(&polys[k - 1 - i], &coeff, f);
                p = poly_sub(&p, &term, f);
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

fn poly_scale(p: &[Scalar], c: &Scalar, f: FieldSpec) -> Vec<Scalar> {
    let _ = f;
    p.iter().map(|a| a.mul(c)).collect()
}

fn poly_sub(a: &[Scalar], b: &[Scalar], f: FieldSpec) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            x.sub(&y)
        })
        .collect()
}

/// (t + c) * p, coefficients constant-first.
fn poly_shift_mul(p: &[Scalar], c: &Scalar, f: FieldSpec) -> Vec<Scalar> {
    let mut out = vec![f.zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].add(a);
        out[i] = out[i].add(&a.mul(c));
    }
    out
}

/// Incremental row-echelon store with normalized pivots; the workhorse
/// behind spans, membership tests and quotient constructions.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub field: FieldSpec,
    pub dim: usize,
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, dim: usize) -> Echelon {
        Echelon { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(
        field: FieldSpec,
        dim: usize,
        rows: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Echelon {
        let mut e = Echelon::new(field, dim);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows (eliminating pivot coordinates).
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for c in p..self.dim {
                if !row[c].is_zero() {
                    v[c] = v[c].sub(&factor.mul(&row[c]));
                }
            }
        }
        v
    }

    /// Like `reduce` but also returns the coefficients used against each
    /// stored row, so that v = sum coeff_i * row_i + remainder.
    pub fn reduce_with_coeffs(&self, mut v: Vec<Scalar>) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut coeffs = vec![self.field.zero(); self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            coeffs[i] = factor.clone();
            for c in p..self.dim {
                if !row[c].is_zero() {
                    v[c] = v[c].sub(&factor.mul(&row[c]));
                }
            }
        }
        (v, coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|s| s.is_zero())
    }

    /// Inserts a vector; returns true when the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let v = self.reduce(v);
        let pivot = match v.iter().position(|s| !s.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[pivot].inv().expect("nonzero scalar invertible");
        let mut v: Vec<Scalar> = v.iter().map(|s| s.mul(&inv)).collect();
        // Back-eliminate so stored rows stay fully reduced.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for c in pivot..self.dim {
                if !v[c].is_zero() {
                    row[c] = row[c].sub(&factor.mul(&v[c]));
                }
            }
        }
        std::mem::swap(&mut v, {
            // insert keeping pivot order
            let pos = self.pivots.iter().position(|&p| p > pivot).unwrap_or(self.rows.len());
            self.rows.insert(pos, Vec::new());
            self.pivots.insert(pos, pivot);
            &mut self.rows[pos]
        });
        true
    }

    /// The span as row vectors.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.rank() == other.rank() && self.is_subspace_of(other)
    }
}
