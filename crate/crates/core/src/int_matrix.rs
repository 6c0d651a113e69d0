//! Exact integer linear algebra: Hermite and Smith normal forms,
//! kernels, and finitely generated lattice quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + self.get(i, k) * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let piv = (k + 1..n).find(|&r| !m.get(r, k).is_zero());
                match piv {
                    Some(p) => {
                        m.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }
}

/// Row-style Hermite normal form: returns the canonical echelonized
/// basis of the row lattice (zero rows dropped). Pivots are positive and
/// entries above each pivot are reduced into [0, pivot).
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut w = m.clone();
    let rows = w.rows;
    let cols = w.cols;
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        // Euclidean elimination below pivot_row in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !w.get(r, col).is_zero() {
                    best = match best {
                        None => Some(r),
                        Some(b) => {
                            if w.get(r, col).abs() < w.get(b, col).abs() {
                                Some(r)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let b = match best {
                None => break,
                Some(b) => b,
            };
            w.swap_rows(pivot_row, b);
            if w.get(pivot_row, col).is_negative() {
                w.negate_row(pivot_row);
            }
            let mut done = true;
            let p = w.get(pivot_row, col).clone();
            for r in pivot_row + 1..rows {
                if w.get(r, col).is_zero() {
                    continue;
                }
                let q = -(w.get(r, col).div_floor(&p));
                w.add_row(r, pivot_row, &q);
                if !w.get(r, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if w.get(pivot_row, col).is_zero() {
            continue;
        }
        // Reduce entries above the pivot.
        let p = w.get(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = -(w.get(r, col).div_floor(&p));
            if !q.is_zero() {
                w.add_row(r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    IntMatrix::from_rows((0..pivot_row).map(|i| w.row(i)).collect())
}

/// Pivot column of each HNF row.
pub fn hnf_pivots(h: &IntMatrix) -> Vec<usize> {
    (0..h.rows)
        .map(|i| (0..h.cols).find(|&j| !h.get(i, j).is_zero()).expect("HNF rows nonzero"))
        .collect()
}

/// Canonical representative of `v` modulo the row lattice of an HNF basis.
pub fn hnf_reduce(h: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    let pivots = hnf_pivots(h);
    let mut v = v.to_vec();
    for (r, &p) in pivots.iter().enumerate() {
        let q = v[p].div_floor(h.get(r, p));
        if !q.is_zero() {
            for j in 0..h.cols {
                let nv = &v[j] - &q * h.get(r, j);
                v[j] = nv;
            }
        }
    }
    v
}

pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

/// Smith normal form with unimodular transforms: U * m * V = D, with D
/// diagonal and d1 | d2 | ...
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let rows = d.rows;
    let cols = d.cols;
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    diagonalize(&mut d, &mut u, &mut v);
    // Enforce the divisibility chain; each perturbation replaces d_i by
    // gcd(d_i, d_{i+1}) after re-diagonalizing, so this terminates.
    let n = rows.min(cols);
    loop {
        let mut bad = None;
        for i in 0..n.saturating_sub(1) {
            let a = d.get(i, i);
            let b = d.get(i + 1, i + 1);
            if !a.is_zero() && !b.is_zero() && !(b % a).is_zero() {
                bad = Some(i);
                break;
            }
        }
        match bad {
            None => break,
            Some(i) => {
                d.add_col(i, i + 1, &BigInt::one());
                v.add_col(i, i + 1, &BigInt::one());
                diagonalize(&mut d, &mut u, &mut v);
            }
        }
    }
    Snf { u, d, v }
}

fn diagonalize(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix) {
    let rows = d.rows;
    let cols = d.cols;
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // Smallest nonzero pivot in the remaining block.
        let mut piv: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d.get(i, j).is_zero() {
                    piv = match piv {
                        None => Some((i, j)),
                        Some((pi, pj)) => {
                            if d.get(i, j).abs() < d.get(pi, pj).abs() {
                                Some((i, j))
                            } else {
                                Some((pi, pj))
                            }
                        }
                    };
                }
            }
        }
        let (pi, pj) = match piv {
            None => break,
            Some(p) => p,
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        // Clear row and column t with Euclidean steps.
        let mut clean = false;
        while !clean {
            clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -(d.get(i, t).div_floor(d.get(t, t)));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    // remainder strictly smaller than pivot: swap up, retry
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -(d.get(t, j).div_floor(d.get(t, t)));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
}

impl Snf {
    /// Nonzero diagonal entries d1 | d2 | ...
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Basis of the integer kernel {x : m x = 0} (x as column vectors).
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    // m = U^-1 D V^-1, so m x = 0 iff D (V^-1 x) = 0 iff V^-1 x supported
    // on zero-diagonal coordinates; kernel basis = columns of V beyond r.
    (r..m.cols).map(|j| snf.v.col(j)).collect()
}

/// The quotient of two lattices sub ⊆ sup in Z^n, as (free_rank,
/// invariant factors > 1). Panics if sub is not contained in sup.
pub fn lattice_quotient(sup: &[Vec<BigInt>], sub: &[Vec<BigInt>], ambient: usize) -> (usize, Vec<BigInt>) {
    let sup_h = hermite_normal_form(&IntMatrix::from_rows(
        sup.iter().cloned().chain(std::iter::once(vec![BigInt::zero(); ambient])).collect(),
    ));
    let rank_sup = sup_h.rows;
    // Express each sub generator in the HNF basis of sup.
    let pivots = hnf_pivots(&sup_h);
    let mut coords = Vec::new();
    for g in sub {
        let mut v = g.clone();
        let mut coeff = vec![BigInt::zero(); rank_sup];
        for (r, &p) in pivots.iter().enumerate() {
            let q = v[p].div_floor(sup_h.get(r, p));
            let rem = &v[p] - &q * sup_h.get(r, p);
            assert!(rem.is_zero(), "sublattice generator not in superlattice");
            coeff[r] = q.clone();
            for j in 0..ambient {
                let nv = &v[j] - &q * sup_h.get(r, j);
                v[j] = nv;
            }
        }
        assert!(v.iter().all(|x| x.is_zero()), "sublattice generator not in superlattice");
        coords.push(coeff);
    }
    if rank_sup == 0 {
        return (0, Vec::new());
    }
    if coords.is_empty() {
        coords.push(vec![BigInt::zero(); rank_sup]);
    }
    let rel = IntMatrix::from_rows(coords);
    let snf = smith_normal_form(&rel);
    let factors: Vec<BigInt> =
        snf.invariant_factors().into_iter().filter(|f| f > &BigInt::one()).collect();
    let free_rank = rank_sup - snf.rank();
    (free_rank, factors)
}

/// Cokernel Z^rows / column-lattice(m) as (free_rank, invariant factors > 1).
pub fn cokernel(m: &IntMatrix) -> (usize, Vec<BigInt>) {
    let snf = smith_normal_form(m);
    let factors: Vec<BigInt> =
        snf.invariant_factors().into_iter().filter(|f| f > &BigInt::one()).collect();
    (m.rows - snf.rank(), factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_diag_2_3() {
        // row/column reduction by hand gives invariant factors [1, 6]
        let m = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        let f: Vec<i64> = snf.invariant_factors().iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(f, vec![1, 6]);
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
    }

    #[test]
    fn snf_of_zero_matrix() {
        let m = IntMatrix::zero(2, 3);
        let snf = smith_normal_form(&m);
        assert!(snf.invariant_factors().is_empty());
    }

    #[test]
    fn snf_of_ones_row() {
        // hand reduction: [1 1 1 1] -> diag(1), kernel rank 3
        let m = IntMatrix::from_i64_rows(&[vec![1, 1, 1, 1]]);
        let snf = smith_normal_form(&m);
        let f: Vec<i64> = snf.invariant_factors().iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(f, vec![1]);
        assert_eq!(integer_kernel(&m).len(), 3);
        for k in integer_kernel(&m) {
            assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn hnf_reduction_is_canonical() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 1], vec![0, 3]]);
        let h = hermite_normal_form(&m);
        // index of the lattice is det = 6
        assert_eq!(h.det(), BigInt::from(6));
        let v = hnf_reduce(&h, &[BigInt::from(5), BigInt::from(7)]);
        // representative lies in the fundamental box
        assert!(v[0] >= BigInt::zero() && v[0] < BigInt::from(2));
    }

    #[test]
    fn lattice_quotient_z_mod_2z() {
        let sup = vec![vec![BigInt::from(1)]];
        let sub = vec![vec![BigInt::from(2)]];
        let (free, factors) = lattice_quotient(&sup, &sub, 1);
        assert_eq!(free, 0);
        assert_eq!(factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn snf_divisibility_chain_random() {
        for seed in 0..60i64 {
            let rows = 2 + (seed % 3) as usize;
            let cols = 2 + (seed % 2) as usize;
            let m = IntMatrix::from_rows(
                (0..rows)
                    .map(|i| {
                        (0..cols)
                            .map(|j| BigInt::from((seed * 37 + i as i64 * 11 + j as i64 * 29) % 7 - 3))
                            .collect()
                    })
                    .collect(),
            );
            let snf = smith_normal_form(&m);
            assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d, "UmV = D for seed {seed}");
            assert_eq!(snf.u.det().abs(), BigInt::one());
            assert_eq!(snf.v.det().abs(), BigInt::one());
            let f = snf.invariant_factors();
            for w in f.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain for seed {seed}");
            }
            // off-diagonal entries are zero
            for i in 0..snf.d.rows {
                for j in 0..snf.d.cols {
                    if i != j {
                        assert!(snf.d.get(i, j).is_zero());
                    }
                }
            }
        }
    }
}
