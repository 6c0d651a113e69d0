//! Finite groups given by Cayley tables: named constructors, center and
//! commutator subgroups, and canonical decomposition of abelian groups.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::grade_group::{GradeGroup, GroupElement};
use crate::int_matrix::{smith_normal_form, IntMatrix};

/// A finite group: order, Cayley table (table[i][j] = index of g_i g_j),
/// identity index, display names.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub names: Vec<String>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order())
            .find(|&j| self.mul(i, j) == self.identity)
            .expect("every element has an inverse")
    }

    /// Latin square, identity, inverses, associativity on all triples.
    pub fn validate(&self) -> Result<(), Error> {
        let n = self.order();
        if n == 0 || n > 24 {
            return Err(Error::Unsupported(format!(
                "finite groups are supported up to order 24 (got {n})"
            )));
        }
        for row in &self.table {
            if row.len() != n {
                return Err(Error::Shape("Cayley table is not square".into()));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || seen[v] {
                    return Err(Error::InvalidAlgebra("Cayley table is not a Latin square".into()));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let v = self.table[i][j];
                if seen[v] {
                    return Err(Error::InvalidAlgebra("Cayley table is not a Latin square".into()));
                }
                seen[v] = true;
            }
        }
        for i in 0..n {
            if self.mul(self.identity, i) != i || self.mul(i, self.identity) != i {
                return Err(Error::InvalidAlgebra("identity law fails".into()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            if !(0..n).any(|j| self.mul(i, j) == self.identity) {
                return Err(Error::InvalidAlgebra("inverse law fails".into()));
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Subgroup generated by all commutators g^-1 h^-1 g h.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        for g in 0..n {
            for h in 0..n {
                let c = self.mul(
                    self.mul(self.inverse(g), self.inverse(h)),
                    self.mul(g, h),
                );
                if !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        self.subgroup_closure(&gens)
    }

    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut elems = vec![self.identity];
        let mut work = vec![self.identity];
        while let Some(x) = work.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !elems.contains(&y) {
                        elems.push(y);
                        work.push(y);
                    }
                }
            }
        }
        elems.sort();
        elems
    }

    /// Canonical form of an abelian group and the degree of each element
    /// in it, from the Smith form of the multiplication relations.
    pub fn abelian_decomposition(&self) -> Result<(GradeGroup, Vec<GroupElement>), Error> {
        if !self.is_abelian() {
            return Err(Error::Unsupported("group is not abelian".into()));
        }
        let n = self.order();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![BigInt::zero(); n];
                row[i] += 1;
                row[j] += 1;
                row[self.mul(i, j)] -= 1;
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let m = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&m);
        // the quotient Z^n / rowspace is computed by x -> x V; coordinates
        // with invariant factor 1 vanish, the rest are Z/d_t
        let keep: Vec<(usize, i64)> = (0..n)
            .filter_map(|t| {
                let d = snf.d.get(t, t).to_i64().expect("small invariant factor");
                if d >= 2 {
                    Some((t, d))
                } else {
                    None
                }
            })
            .collect();
        let torsion: Vec<i64> = keep.iter().map(|&(_, d)| d).collect();
        let gg = GradeGroup::new(0, torsion)?;
        let mut degrees = Vec::with_capacity(n);
        for i in 0..n {
            let coords: Vec<i64> = keep
                .iter()
                .map(|&(t, _)| {
                    // (e_i V)_t
                    snf.v.get(i, t).to_i64().expect("small coordinate")
                })
                .collect();
            degrees.push(gg.element(coords)?);
        }
        // sanity: degree map is a homomorphism
        for i in 0..n {
            for j in 0..n {
                let sum = crate::grade_group::add(&degrees[i], &degrees[j])?;
                assert_eq!(sum, degrees[self.mul(i, j)], "degree map respects products");
            }
        }
        Ok((gg, degrees))
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup {
        name: format!("C{n}"),
        table,
        identity: 0,
        names: (0..n).map(|i| format!("g{i}")).collect(),
    }
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let na = a.order();
    let nb = b.order();
    let idx = |i: usize, j: usize| i * nb + j;
    let mut table = vec![vec![0; na * nb]; na * nb];
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    table[idx(i, j)][idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
                }
            }
        }
    }
    let mut names = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            names.push(format!("({},{})", a.names[i], b.names[j]));
        }
    }
    FiniteGroup {
        name: format!("{}x{}", a.name, b.name),
        table,
        identity: idx(a.identity, b.identity),
        names,
    }
}

pub fn klein_four() -> FiniteGroup {
    let mut g = direct_product(&cyclic(2), &cyclic(2));
    g.name = "C2xC2".into();
    g
}

/// Dihedral group of order 2n: r^i s^e with s r = r^-1 s.
pub fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let idx = |i: usize, e: usize| e * n + i;
    let mut table = vec![vec![0; order]; order];
    for i in 0..n {
        for e in 0..2 {
            for j in 0..n {
                for f in 0..2 {
                    let rot = if e == 0 { (i + j) % n } else { (i + n - j % n) % n };
                    table[idx(i, e)][idx(j, f)] = idx(rot, (e + f) % 2);
                }
            }
        }
    }
    let mut names = Vec::new();
    for e in 0..2 {
        for i in 0..n {
            names.push(if e == 0 { format!("r{i}") } else { format!("r{i}s") });
        }
    }
    FiniteGroup { name: format!("D{n}"), table, identity: 0, names }
}

pub fn symmetric3() -> FiniteGroup {
    let mut g = dihedral(3);
    g.name = "S3".into();
    g
}

/// The quaternion group of order 8: {±1, ±i, ±j, ±k}.
pub fn quaternion8() -> FiniteGroup {
    // element = axis * 2 + sign, axis in {1, i, j, k}
    // axis multiplication with signs
    const AXIS: [[usize; 4]; 4] = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ];
    const SIGN: [[usize; 4]; 4] = [
        [0, 0, 0, 0],
        [0, 1, 0, 1],
        [0, 1, 1, 0],
        [0, 0, 1, 1],
    ];
    let idx = |axis: usize, sign: usize| axis * 2 + sign;
    let mut table = vec![vec![0; 8]; 8];
    for a1 in 0..4 {
        for s1 in 0..2 {
            for a2 in 0..4 {
                for s2 in 0..2 {
                    let axis = AXIS[a1][a2];
                    let sign = (s1 + s2 + SIGN[a1][a2]) % 2;
                    table[idx(a1, s1)][idx(a2, s2)] = idx(axis, sign);
                }
            }
        }
    }
    let base = ["1", "i", "j", "k"];
    let mut names = Vec::new();
    for a in 0..4 {
        for s in 0..2 {
            names.push(if s == 0 { base[a].to_string() } else { format!("-{}", base[a]) });
        }
    }
    FiniteGroup { name: "Q8".into(), table, identity: 0, names }
}

/// The alternating group on four letters, via its even permutations.
pub fn alternating4() -> FiniteGroup {
    fn permutations() -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut items = vec![0, 1, 2, 3];
        permute(&mut items, 0, &mut out);
        out.retain(|p| parity(p) == 0);
        out.sort();
        out
    }
    fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }
    fn parity(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    }
    let perms = permutations();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
        // (p ∘ q)(x) = p(q(x))
        (0..4).map(|x| p[q[x]]).collect()
    };
    let n = perms.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let pq = compose(&perms[i], &perms[j]);
            table[i][j] = perms.iter().position(|p| *p == pq).unwrap();
        }
    }
    let identity = perms.iter().position(|p| *p == vec![0, 1, 2, 3]).unwrap();
    let names = perms.iter().map(|p| format!("{:?}", p)).collect();
    FiniteGroup { name: "A4".into(), table, identity, names }
}

/// The named groups of order <= 12 exercised by the group-ring checks.
pub fn standard_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=12).map(cyclic).collect();
    out.push(klein_four());
    out.push(symmetric3());
    out.push(dihedral(4));
    out.push(quaternion8());
    out.push(alternating4());
    out.push(dihedral(6));
    out
}

pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let lower = name.to_lowercase();
    if let Some(n) = lower.strip_prefix('c') {
        if let Ok(n) = n.parse::<usize>() {
            if n >= 1 {
                return Some(cyclic(n));
            }
        }
    }
    match lower.as_str() {
        "klein" | "c2xc2" | "v4" => Some(klein_four()),
        "s3" => Some(symmetric3()),
        "d4" => Some(dihedral(4)),
        "d6" => Some(dihedral(6)),
        "q8" => Some(quaternion8()),
        "a4" => Some(alternating4()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_standard_groups_validate() {
        for g in standard_groups() {
            g.validate().unwrap_or_else(|e| panic!("{} invalid: {e}", g.name));
        }
    }

    #[test]
    fn s3_center_and_commutator() {
        // commutator closure gives the alternating subgroup of order 3
        let s3 = symmetric3();
        assert_eq!(s3.center().len(), 1);
        assert_eq!(s3.commutator_subgroup().len(), 3);
    }

    #[test]
    fn q8_center_and_commutator() {
        let q8 = quaternion8();
        assert_eq!(q8.center().len(), 2);
        assert_eq!(q8.commutator_subgroup().len(), 2);
    }

    #[test]
    fn abelian_groups_have_trivial_commutator() {
        for g in [cyclic(6), klein_four(), cyclic(12)] {
            assert_eq!(g.center().len(), g.order());
            assert_eq!(g.commutator_subgroup().len(), 1);
        }
    }

    #[test]
    fn a4_commutator_is_klein() {
        let a4 = alternating4();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.commutator_subgroup().len(), 4);
    }

    #[test]
    fn d6_commutator_has_order_3() {
        let d6 = dihedral(6);
        assert_eq!(d6.order(), 12);
        assert_eq!(d6.commutator_subgroup().len(), 3);
        assert_eq!(d6.center().len(), 2);
    }

    #[test]
    fn abelian_decomposition_of_klein_and_cyclic() {
        let (gg, degs) = klein_four().abelian_decomposition().unwrap();
        assert_eq!(gg.order(), Some(4));
        assert_eq!(gg.torsion, vec![2, 2]);
        // degrees are pairwise distinct
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(degs[i], degs[j]);
            }
        }
        let (gg, degs) = cyclic(6).abelian_decomposition().unwrap();
        assert_eq!(gg.order(), Some(6));
        let mut seen: Vec<&crate::grade_group::GroupElement> = Vec::new();
        for d in &degs {
            assert!(!seen.contains(&d));
            seen.push(d);
        }
    }
}
