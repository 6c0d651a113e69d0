//! Finitely generated abelian groups Z^f x Z_{n_1} x ... x Z_{n_t}:
//! the home of every degree in the system. Subgroups, membership and
//! coset enumeration reduce to integer-lattice computations.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::int_matrix::{hermite_normal_form, hnf_pivots, hnf_reduce, IntMatrix};

/// Z^f x Z_{n_1} x ... x Z_{n_t}; torsion orders are >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradeGroup {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl GradeGroup {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<GradeGroup, Error> {
        if torsion.iter().any(|&n| n < 2) {
            return Err(Error::Parse("torsion orders must be >= 2".into()));
        }
        Ok(GradeGroup { free_rank, torsion })
    }

    pub fn trivial() -> GradeGroup {
        GradeGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn cyclic(n: i64) -> GradeGroup {
        GradeGroup::new(0, vec![n]).expect("order >= 2")
    }

    pub fn integers() -> GradeGroup {
        GradeGroup { free_rank: 1, torsion: Vec::new() }
    }

    /// Z_2 x Z_2, the grading of the quaternion constructions.
    pub fn klein() -> GradeGroup {
        GradeGroup { free_rank: 0, torsion: vec![2, 2] }
    }

    pub fn ncoords(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        Some(self.torsion.iter().map(|&n| n as u64).product())
    }

    /// Reduces raw coordinates into canonical form.
    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement, Error> {
        if coords.len() != self.ncoords() {
            return Err(Error::Shape(format!(
                "expected {} coordinates, got {}",
                self.ncoords(),
                coords.len()
            )));
        }
        let mut c = coords;
        for (i, &n) in self.torsion.iter().enumerate() {
            let j = self.free_rank + i;
            c[j] = c[j].rem_euclid(n);
        }
        Ok(GroupElement { group: self.clone(), coords: c })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { group: self.clone(), coords: vec![0; self.ncoords()] }
    }

    /// All elements of a finite group, in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElement>, Error> {
        if !self.is_finite() {
            return Err(Error::InfiniteIndex);
        }
        let mut out = vec![self.zero()];
        for (i, &n) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for e in &out {
                for v in 0..n {
                    let mut c = e.coords.clone();
                    c[self.free_rank + i] = v;
                    next.push(GroupElement { group: self.clone(), coords: c });
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// The relation lattice of the presentation Z^ncoords -> group.
    fn relation_rows(&self) -> Vec<Vec<BigInt>> {
        let n = self.ncoords();
        self.torsion
            .iter()
            .enumerate()
            .map(|(i, &ord)| {
                let mut row = vec![BigInt::zero(); n];
                row[self.free_rank + i] = BigInt::from(ord);
                row
            })
            .collect()
    }
}

impl std::fmt::Display for GradeGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for _ in 0..self.free_rank {
            parts.push("Z".into());
        }
        for n in &self.torsion {
            parts.push(format!("Z{n}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("x"))
        }
    }
}

/// An element of a [`GradeGroup`]; torsion coordinates stay reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: GradeGroup,
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn lift(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coords.len() == 1 {
            write!(f, "{}", self.coords[0])
        } else {
            let inner: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", inner.join(","))
        }
    }
}

pub fn add(a: &GroupElement, b: &GroupElement) -> Result<GroupElement, Error> {
    if a.group != b.group {
        return Err(Error::GroupMismatch);
    }
    let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
    a.group.element(coords)
}

pub fn neg(a: &GroupElement) -> GroupElement {
    let coords = a.coords.iter().map(|&x| -x).collect();
    a.group.element(coords).expect("negation preserves shape")
}

pub fn sub(a: &GroupElement, b: &GroupElement) -> Result<GroupElement, Error> {
    add(a, &neg(b))
}

/// A subgroup, canonicalized as the Hermite form of the lattice spanned
/// by generator lifts and the torsion relations.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: GradeGroup,
    generators: Vec<GroupElement>,
    hnf: IntMatrix,
}

impl Subgroup {
    pub fn from_generators(parent: &GradeGroup, gens: &[GroupElement]) -> Result<Subgroup, Error> {
        for g in gens {
            if g.group != *parent {
                return Err(Error::GroupMismatch);
            }
        }
        let mut rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.lift()).collect();
        rows.extend(parent.relation_rows());
        if rows.is_empty() {
            rows.push(vec![BigInt::zero(); parent.ncoords()]);
        }
        let hnf = hermite_normal_form(&IntMatrix::from_rows(rows));
        Ok(Subgroup { parent: parent.clone(), generators: gens.to_vec(), hnf })
    }

    pub fn trivial(parent: &GradeGroup) -> Subgroup {
        Subgroup::from_generators(parent, &[]).expect("empty generator list")
    }

    pub fn parent(&self) -> &GradeGroup {
        &self.parent
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Canonical lattice basis rows (includes the torsion relations).
    pub fn canonical_basis(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool, Error> {
        if x.group != self.parent {
            return Err(Error::GroupMismatch);
        }
        let r = hnf_reduce(&self.hnf, &x.lift());
        Ok(r.iter().all(|c| c.is_zero()))
    }

    /// [Gamma : S]; None when infinite.
    pub fn index(&self) -> Option<u64> {
        let n = self.parent.ncoords();
        if self.hnf.rows < n {
            return None;
        }
        let mut idx = BigInt::from(1);
        for i in 0..n {
            idx *= self.hnf.get(i, i);
        }
        idx.abs().to_u64()
    }

    /// Canonical coset representative of x modulo this subgroup.
    pub fn reduce(&self, x: &GroupElement) -> Result<GroupElement, Error> {
        if x.group != self.parent {
            return Err(Error::GroupMismatch);
        }
        let r = hnf_reduce(&self.hnf, &x.lift());
        let coords: Vec<i64> = r.iter().map(|c| c.to_i64().expect("small coordinates")).collect();
        self.parent.element(coords)
    }
}

/// Coset enumeration for finite-index subgroups.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub parent: GradeGroup,
    pub subgroup: Subgroup,
    pub representatives: Vec<GroupElement>,
}

pub fn coset_space(parent: &GradeGroup, subgroup: &Subgroup) -> Result<CosetSpace, Error> {
    if subgroup.parent != *parent {
        return Err(Error::GroupMismatch);
    }
    let n = parent.ncoords();
    if subgroup.hnf.rows < n {
        return Err(Error::InfiniteIndex);
    }
    let pivots = hnf_pivots(&subgroup.hnf);
    debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
    // Fundamental box: 0 <= x_i < pivot_i.
    let mut reps: Vec<Vec<i64>> = vec![vec![]];
    for i in 0..n {
        let d = subgroup.hnf.get(i, i).to_i64().expect("small pivot");
        let mut next = Vec::with_capacity(reps.len() * d as usize);
        for r in &reps {
            for v in 0..d {
                let mut c = r.clone();
                c.push(v);
                next.push(c);
            }
        }
        reps = next;
    }
    let representatives: Result<Vec<GroupElement>, Error> =
        reps.into_iter().map(|c| parent.element(c)).collect();
    Ok(CosetSpace { parent: parent.clone(), subgroup: subgroup.clone(), representatives: representatives? })
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Index of the coset of x among the representatives.
    pub fn coset_index(&self, x: &GroupElement) -> Result<usize, Error> {
        let r = self.subgroup.reduce(x)?;
        self.representatives
            .iter()
            .position(|c| *c == r)
            .ok_or_else(|| Error::Shape("coset representative not enumerated".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2z2() -> GradeGroup {
        GradeGroup::klein()
    }

    #[test]
    fn add_reduces_torsion() {
        let g = z2z2();
        let a = g.element(vec![1, 0]).unwrap();
        let b = g.element(vec![0, 1]).unwrap();
        assert_eq!(add(&a, &b).unwrap(), g.element(vec![1, 1]).unwrap());

        let z4 = GradeGroup::cyclic(4);
        let three = z4.element(vec![3]).unwrap();
        assert_eq!(add(&three, &three).unwrap(), z4.element(vec![2]).unwrap());

        let z = GradeGroup::integers();
        let five = z.element(vec![5]).unwrap();
        assert_eq!(add(&five, &neg(&five)).unwrap(), z.zero());
    }

    #[test]
    fn add_rejects_mismatched_parents() {
        let a = z2z2().element(vec![1, 0]).unwrap();
        let b = GradeGroup::cyclic(2).element(vec![1]).unwrap();
        assert!(matches!(add(&a, &b), Err(Error::GroupMismatch)));
    }

    #[test]
    fn membership_examples() {
        let z = GradeGroup::integers();
        let two = z.element(vec![2]).unwrap();
        let s = Subgroup::from_generators(&z, &[two]).unwrap();
        assert!(s.contains(&z.element(vec![4]).unwrap()).unwrap());
        assert!(!s.contains(&z.element(vec![3]).unwrap()).unwrap());

        let g = z2z2();
        let diag = g.element(vec![1, 1]).unwrap();
        let s = Subgroup::from_generators(&g, &[diag]).unwrap();
        assert!(!s.contains(&g.element(vec![1, 0]).unwrap()).unwrap());

        let z4 = GradeGroup::cyclic(4);
        let t = Subgroup::trivial(&z4);
        assert!(t.contains(&z4.zero()).unwrap());
        assert!(!t.contains(&z4.element(vec![2]).unwrap()).unwrap());
    }

    #[test]
    fn canonical_basis_generates_the_same_subgroup() {
        let g = GradeGroup::new(1, vec![4]).unwrap();
        let gens = vec![g.element(vec![2, 1]).unwrap(), g.element(vec![0, 2]).unwrap()];
        let s = Subgroup::from_generators(&g, &gens).unwrap();
        // mutual membership: generators lie in the canonical lattice and
        // canonical rows reduce to elements of the generated subgroup
        for gen in &gens {
            assert!(s.contains(gen).unwrap());
        }
        for i in 0..s.canonical_basis().rows {
            let row: Vec<i64> = (0..s.canonical_basis().cols)
                .map(|j| s.canonical_basis().get(i, j).to_i64().unwrap())
                .collect();
            let el = g.element(row).unwrap();
            // brute force: el must be an integer combination of gens + relations
            let mut found = el.is_zero();
            'search: for a in -8i64..=8 {
                for b in -8i64..=8 {
                    let mut acc = g.zero();
                    for _ in 0..a.abs() {
                        acc = add(&acc, &if a >= 0 { gens[0].clone() } else { neg(&gens[0]) }).unwrap();
                    }
                    for _ in 0..b.abs() {
                        acc = add(&acc, &if b >= 0 { gens[1].clone() } else { neg(&gens[1]) }).unwrap();
                    }
                    if acc == el {
                        found = true;
                        break 'search;
                    }
                }
            }
            assert!(found, "canonical row {i} not generated");
        }
    }

    #[test]
    fn coset_examples() {
        let g = z2z2();
        let cs = coset_space(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(cs.len(), 4);

        let diag = Subgroup::from_generators(&g, &[g.element(vec![1, 1]).unwrap()]).unwrap();
        let cs = coset_space(&g, &diag).unwrap();
        assert_eq!(cs.len(), 2);

        let z = GradeGroup::integers();
        let evens = Subgroup::from_generators(&z, &[z.element(vec![2]).unwrap()]).unwrap();
        let cs = coset_space(&z, &evens).unwrap();
        assert_eq!(cs.len(), 2);
    }

    #[test]
    fn infinite_index_is_reported() {
        let z = GradeGroup::integers();
        let t = Subgroup::trivial(&z);
        assert_eq!(t.index(), None);
        assert!(matches!(coset_space(&z, &t), Err(Error::InfiniteIndex)));
    }

    #[test]
    fn lagrange_by_enumeration() {
        // |Gamma| = |S| * [Gamma:S] for every cyclic subgroup, |Gamma| <= 64
        let groups = [
            GradeGroup::new(0, vec![2, 2]).unwrap(),
            GradeGroup::new(0, vec![4, 2]).unwrap(),
            GradeGroup::new(0, vec![12]).unwrap(),
            GradeGroup::new(0, vec![2, 2, 2]).unwrap(),
            GradeGroup::new(0, vec![8, 8]).unwrap(),
        ];
        for g in &groups {
            let order = g.order().unwrap();
            for gen in g.elements().unwrap() {
                let s = Subgroup::from_generators(g, &[gen.clone()]).unwrap();
                let index = s.index().unwrap();
                let size = g
                    .elements()
                    .unwrap()
                    .iter()
                    .filter(|e| s.contains(e).unwrap())
                    .count() as u64;
                assert_eq!(order, size * index, "group {g}, generator {gen}");
            }
        }
    }

    #[test]
    fn cosets_partition_the_group() {
        let g = GradeGroup::new(0, vec![4, 2]).unwrap();
        let s = Subgroup::from_generators(&g, &[g.element(vec![2, 0]).unwrap()]).unwrap();
        let cs = coset_space(&g, &s).unwrap();
        for e in g.elements().unwrap() {
            let matches: Vec<usize> = cs
                .representatives
                .iter()
                .enumerate()
                .filter(|(_, r)| {
                    let diff = sub(&e, r).unwrap();
                    s.contains(&diff).unwrap()
                })
                .map(|(i, _)| i)
                .collect();
            assert_eq!(matches.len(), 1, "element {e} lies in exactly one coset");
            assert_eq!(matches[0], cs.coset_index(&e).unwrap());
        }
    }
}
