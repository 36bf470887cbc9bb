//! Brute-force ground truth for finite rings: enumeration, unit groups and
//! exponent lattices by exhaustion. Meant for tests and cross-checks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::finitezalg::{CompactForm, ExplicitAlgebra};
use crate::intlat::{snf, IntegerLattice, ZVec};

pub const MAX_ELEMENTS: usize = 1_000_000;
pub const MAX_ELEMENT_ORDER: usize = 10_000;
/// Bound on the number of additive generators of an enumerable ring.
const D: usize = 20;

/// Relation lattice of `gens` in the finite group they generate, found by a
/// breadth-first closure. Fails once more than `cap` elements have been
/// seen.
///
/// Collisions in the closure give relations; they are folded in only after
/// the group is known, stopping once the lattice has index `|G|`.
pub fn closure_relations<T: Ord + Clone>(
    gens: &[T],
    one: T,
    mul: impl Fn(&T, &T) -> T,
    cap: usize,
) -> Result<(IntegerLattice, usize)> {
    let k = gens.len();
    let mut id: BTreeMap<T, usize> = BTreeMap::new();
    let mut exps: Vec<Vec<i64>> = vec![vec![0; k]];
    let mut elems = vec![one.clone()];
    let mut collisions: Vec<(usize, usize, usize)> = Vec::new();
    id.insert(one, 0);
    let mut next = 0;
    while next < elems.len() {
        let x = elems[next].clone();
        for (i, g) in gens.iter().enumerate() {
            let y = mul(&x, g);
            match id.get(&y) {
                Some(&j) => collisions.push((next, i, j)),
                None => {
                    if elems.len() >= cap {
                        return Err(Error::OracleCapExceeded(format!("group closure exceeds {cap} elements")));
                    }
                    let mut e = exps[next].clone();
                    e[i] += 1;
                    id.insert(y.clone(), elems.len());
                    exps.push(e);
                    elems.push(y);
                }
            }
        }
        next += 1;
    }
    let n = BigInt::from(elems.len());
    let mut rel = IntegerLattice::zero(k);
    for (x, i, y) in collisions {
        let d: ZVec = (0..k).map(|t| BigInt::from(exps[x][t] + i64::from(t == i) - exps[y][t])).collect();
        if !rel.contains(&d) {
            rel = rel.add_vectors(&[d]);
            if rel.index().as_ref() == Some(&n) {
                break;
            }
        }
    }
    Ok((rel, elems.len()))
}

/// A finite ring with elements indexed by mixed-radix integers over the
/// invariant factors of its additive group.
#[derive(Clone, Debug)]
pub struct FiniteRingTable {
    compact: CompactForm,
    moduli: Vec<u64>,
    table: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
    size: usize,
}

pub fn enumerate_ring(r: &ExplicitAlgebra) -> Result<FiniteRingTable> {
    let compact = r.compact();
    let Some(card) = compact.cardinality() else {
        return Err(Error::Unsupported(String::from("the ring is infinite")));
    };
    let size = match card.to_usize() {
        Some(s) if s <= MAX_ELEMENTS => s,
        _ => return Err(Error::OracleCapExceeded(format!("{card} elements"))),
    };
    let moduli: Vec<u64> = compact.moduli.iter().map(|m| m.to_u64().unwrap_or(u64::MAX)).collect();
    let to_u64 = |v: &ZVec| -> Vec<u64> { v.iter().map(|c| c.to_u64().unwrap_or(0)).collect() };
    let table = compact.table.iter().map(|row| row.iter().map(to_u64).collect()).collect();
    let one = to_u64(&compact.one);
    Ok(FiniteRingTable { compact, moduli, table, one, size })
}

impl FiniteRingTable {
    pub fn len(&self) -> usize {
        self.size
    }
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }
    pub fn dim(&self) -> usize {
        self.moduli.len()
    }
    pub fn one(&self) -> Vec<u64> {
        self.one.clone()
    }
    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = idx as u64 % m;
                idx /= m as usize;
                c
            })
            .collect()
    }
    pub fn index(&self, y: &[u64]) -> usize {
        let mut idx = 0usize;
        for (c, &m) in y.iter().zip(&self.moduli).rev() {
            idx = idx * m as usize + *c as usize;
        }
        idx
    }
    /// Compact coordinates of an algebra element.
    pub fn from_algebra(&self, v: &[BigInt]) -> Vec<u64> {
        self.compact.to_compact(v).iter().map(|c| c.to_u64().unwrap_or(0)).collect()
    }
    pub fn to_algebra(&self, y: &[u64]) -> ZVec {
        let y: ZVec = y.iter().map(|&c| BigInt::from(c)).collect();
        self.compact.from_compact(&y)
    }
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.dim();
        // moduli are at most the cap, so each product of three residues fits
        // in a u64 and a u128 accumulator never overflows
        let mut acc = vec![0u128; d];
        for i in 0..d {
            if a[i] == 0 {
                continue;
            }
            for j in 0..d {
                if b[j] == 0 {
                    continue;
                }
                let ab = (a[i] * b[j]) as u128;
                for (o, &c) in acc.iter_mut().zip(&self.table[i][j]) {
                    *o += ab * c as u128;
                }
            }
        }
        acc.into_iter().zip(&self.moduli).map(|(x, &m)| (x % m as u128) as u64).collect()
    }
    fn decode(&self, mut idx: usize) -> [u64; D] {
        let mut x = [0u64; D];
        for (t, &m) in self.moduli.iter().enumerate() {
            x[t] = idx as u64 % m;
            idx /= m as usize;
        }
        x
    }
    /// Images of the additive generators under multiplication by `a`.
    fn mul_matrix(&self, a: usize) -> Vec<[u64; D]> {
        let d = self.dim();
        let y = self.decode(a);
        (0..d)
            .map(|i| {
                let mut acc = [0u128; D];
                for j in 0..d {
                    if y[j] != 0 {
                        for (o, &c) in acc[..d].iter_mut().zip(&self.table[i][j]) {
                            *o += y[j] as u128 * c as u128;
                        }
                    }
                }
                let mut row = [0u64; D];
                for t in 0..d {
                    row[t] = (acc[t] % self.moduli[t] as u128) as u64;
                }
                row
            })
            .collect()
    }
    /// `x * a` where `rows = mul_matrix(a)`.
    fn apply(&self, rows: &[[u64; D]], x: usize) -> usize {
        let d = self.dim();
        let x = self.decode(x);
        let mut acc = [0u128; D];
        for i in 0..d {
            if x[i] != 0 {
                for t in 0..d {
                    acc[t] += x[i] as u128 * rows[i][t] as u128;
                }
            }
        }
        self.encode(&acc)
    }
    /// Product of two elements given by index.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let d = self.dim();
        let (x, y) = (self.decode(a), self.decode(b));
        let mut acc = [0u128; D];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                if y[j] == 0 {
                    continue;
                }
                let ab = (x[i] * y[j]) as u128;
                for (o, &c) in acc[..d].iter_mut().zip(&self.table[i][j]) {
                    *o += ab * c as u128;
                }
            }
        }
        self.encode(&acc)
    }
    fn encode(&self, acc: &[u128; D]) -> usize {
        let mut idx = 0usize;
        for t in (0..self.dim()).rev() {
            let m = self.moduli[t];
            idx = idx * m as usize + (acc[t] % m as u128) as usize;
        }
        idx
    }
    /// Indices of the subgroup generated by the given units.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut h = Subgroup::new(self);
        for &g in gens {
            h.extend(self, g);
        }
        h.members
    }
    /// Relation lattice of the given units and the order of the group they
    /// generate.
    pub fn relations(&self, gens: &[usize]) -> (IntegerLattice, usize) {
        let mut h = Subgroup::new(self);
        let rows: Vec<ZVec> = gens.iter().map(|&g| h.extend(self, g)).collect();
        let k = gens.len();
        let rows = rows.into_iter().map(|mut r| {
            r.resize(k, BigInt::from(0));
            r
        });
        (IntegerLattice::new(k, rows.collect()), h.members.len())
    }
    /// Multiplicative order of `a`, or `None` if `a` is not a unit.
    pub fn unit_order(&self, a: &[u64]) -> Result<Option<usize>> {
        let mut x = a.to_vec();
        let mut seen = BTreeSet::new();
        for k in 1..=MAX_ELEMENT_ORDER.max(self.size) {
            if x == self.one {
                return Ok(Some(k));
            }
            if !seen.insert(x.clone()) {
                return Ok(None);
            }
            x = self.mul(&x, a);
        }
        Err(Error::OracleCapExceeded(String::from("element order")))
    }
    pub fn units(&self) -> Result<Vec<Vec<u64>>> {
        Ok(self.unit_orders()?.into_iter().map(|(i, _)| self.element(i)).collect())
    }
    /// Indices of all units with their orders, in index order.
    ///
    /// Walks the powers of each element not yet classified. A power that is
    /// a known non-unit settles the walk early; a walk that returns to one
    /// classifies every power along with its order.
    fn unit_orders(&self) -> Result<Vec<(usize, usize)>> {
        const UNKNOWN: u32 = 0;
        const NON_UNIT: u32 = u32::MAX;
        let one = self.index(&self.one);
        // order for units, NON_UNIT otherwise
        let mut class = vec![UNKNOWN; self.size];
        let mut stamp = vec![u32::MAX; self.size];
        let mut path = Vec::new();
        for start in 0..self.size {
            if class[start] != UNKNOWN {
                continue;
            }
            path.clear();
            // most walks end after a step or two; build the matrix lazily
            let mut rows = None;
            let mut xi = start;
            let unit = loop {
                if xi == one {
                    path.push(xi);
                    break true;
                }
                if class[xi] == NON_UNIT || stamp[xi] == start as u32 {
                    break false;
                }
                if path.len() >= MAX_ELEMENT_ORDER.max(self.size) {
                    return Err(Error::OracleCapExceeded(String::from("element order")));
                }
                stamp[xi] = start as u32;
                path.push(xi);
                xi = if path.len() < 2 {
                    self.mul_index(xi, start)
                } else {
                    self.apply(rows.get_or_insert_with(|| self.mul_matrix(start)), xi)
                };
            };
            if unit {
                let k = path.len();
                for (j, &p) in path.iter().enumerate() {
                    class[p] = (k / gcd(j + 1, k)) as u32;
                }
            } else {
                for &p in &path {
                    class[p] = NON_UNIT;
                }
            }
        }
        Ok((0..self.size).filter(|&i| class[i] != NON_UNIT).map(|i| (i, class[i] as usize)).collect())
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A subgroup grown one generator at a time as a union of cosets. Every
/// member remembers the coset it was created in, which recovers its
/// exponents in the generators.
struct Subgroup {
    members: Vec<usize>,
    pos: Vec<u32>,
    /// For each member after the identity: the member of the previous
    /// subgroup it was multiplied from, and the power of the new generator.
    parent: Vec<(u32, u32)>,
    /// First member index contributed by each generator.
    blocks: Vec<usize>,
}

impl Subgroup {
    const ABSENT: u32 = u32::MAX;

    fn new(t: &FiniteRingTable) -> Self {
        let one = t.index(&t.one);
        let mut pos = vec![Self::ABSENT; t.size];
        pos[one] = 0;
        Subgroup { members: vec![one], pos, parent: vec![(0, 0)], blocks: Vec::new() }
    }

    fn exponents(&self, mut m: usize, k: usize) -> ZVec {
        let mut e = vec![BigInt::from(0); k];
        while m != 0 {
            let g = self.blocks.partition_point(|&b| b <= m) - 1;
            let (h, j) = self.parent[m];
            e[g] += j;
            m = h as usize;
        }
        e
    }

    /// Adds `u` as the next generator and returns the relation `J e_u - e(u^J)`
    /// for the least `J` with `u^J` in the old subgroup, over the generators
    /// added so far.
    fn extend(&mut self, t: &FiniteRingTable, u: usize) -> ZVec {
        let k = self.blocks.len() + 1;
        self.blocks.push(self.members.len());
        let old = self.members.len();
        let mut rep = u;
        let mut j = 1u32;
        while self.pos[rep] == Self::ABSENT || self.pos[rep] as usize >= old {
            let rows = t.mul_matrix(rep);
            for h in 0..old {
                let y = t.apply(&rows, self.members[h]);
                self.pos[y] = self.members.len() as u32;
                self.parent.push((h as u32, j));
                self.members.push(y);
            }
            rep = t.mul_index(rep, u);
            j += 1;
        }
        let mut rel = self.exponents(self.pos[rep] as usize, k);
        for x in rel.iter_mut() {
            *x = -core::mem::take(x);
        }
        rel[k - 1] += j;
        rel
    }
}

/// The unit group found by exhaustion.
#[derive(Clone, Debug)]
pub struct BruteUnitGroup {
    pub units: Vec<Vec<u64>>,
    /// A generating set grown greedily, in compact coordinates.
    pub generators: Vec<Vec<u64>>,
    pub relations: IntegerLattice,
    pub invariant_factors: Vec<BigInt>,
}

pub fn brute_unit_group(t: &FiniteRingTable) -> Result<BruteUnitGroup> {
    let mut by_order = t.unit_orders()?;
    let units: Vec<Vec<u64>> = by_order.iter().map(|&(i, _)| t.element(i)).collect();
    by_order.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let mut h = Subgroup::new(t);
    let mut gens: Vec<usize> = Vec::new();
    let mut rows = Vec::new();
    for (u, _) in by_order {
        if h.members.len() == units.len() {
            break;
        }
        if h.pos[u] == Subgroup::ABSENT {
            rows.push(h.extend(t, u));
            gens.push(u);
        }
    }
    let k = gens.len();
    for r in rows.iter_mut() {
        r.resize(k, BigInt::from(0));
    }
    let relations = IntegerLattice::new(k, rows);
    let generators: Vec<Vec<u64>> = gens.iter().map(|&g| t.element(g)).collect();
    let invariant_factors = if generators.is_empty() {
        Vec::new()
    } else {
        snf(&relations.matrix()).invariant_factors()
    };
    Ok(BruteUnitGroup { units, generators, relations, invariant_factors })
}

/// Exponent lattice of algebra elements by closing the group they generate.
pub fn brute_explattice(t: &FiniteRingTable, units: &[ZVec]) -> Result<IntegerLattice> {
    let gens: Vec<Vec<u64>> = units.iter().map(|u| t.from_algebra(u)).collect();
    for g in &gens {
        if t.unit_order(g)?.is_none() {
            return Err(Error::NotAUnit(format!("{g:?}")));
        }
    }
    let idx: Vec<usize> = gens.iter().map(|g| t.index(g)).collect();
    Ok(t.relations(&idx).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{algebra, el};

    #[test]
    fn cardinalities() {
        let r = algebra(&["x^2+x+1", "y^2+y+1", "8"], &["x", "y"]);
        assert_eq!(enumerate_ring(&r).unwrap().len(), 4096);
        assert_eq!(enumerate_ring(&algebra(&["6", "x"], &["x"])).unwrap().len(), 6);
        assert_eq!(enumerate_ring(&algebra(&["x^2+x+1", "5"], &["x"])).unwrap().len(), 25);
        assert!(enumerate_ring(&algebra(&["x^2"], &["x"])).is_err());
    }

    #[test]
    fn brute_unit_groups() {
        let z8 = enumerate_ring(&algebra(&["8", "x"], &["x"])).unwrap();
        let g = brute_unit_group(&z8).unwrap();
        assert_eq!(g.units.len(), 4);
        assert_eq!(g.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
        let f25 = enumerate_ring(&algebra(&["x^2+x+1", "5"], &["x"])).unwrap();
        assert_eq!(brute_unit_group(&f25).unwrap().invariant_factors, vec![BigInt::from(24)]);
        let r = enumerate_ring(&algebra(&["x^2", "4"], &["x"])).unwrap();
        let g = brute_unit_group(&r).unwrap();
        assert_eq!(g.units.len(), 8);
        assert_eq!(g.units.len() * 2, r.len());
    }

    #[test]
    fn coset_relations_match_closure() {
        use rand::Rng;
        let mut rng = crate::Context::new(0).rng(3);
        for gens in [["x^2+x+1", "y^2", "4"], ["x^3+x+1", "y-1", "6"], ["x^2", "y^2+y+1", "8"]] {
            let r = algebra(&gens, &["x", "y"]);
            let t = enumerate_ring(&r).unwrap();
            let units: Vec<usize> = t.unit_orders().unwrap().into_iter().map(|(i, _)| i).collect();
            for _ in 0..10 {
                let k = rng.gen_range(1..=4);
                let g: Vec<usize> = (0..k).map(|_| units[rng.gen_range(0..units.len())]).collect();
                let (bfs, n) = closure_relations(&g, t.index(&t.one()), |a, b| t.mul_index(*a, *b), MAX_ELEMENTS).unwrap();
                assert_eq!(t.relations(&g), (bfs, n));
                assert_eq!(t.subgroup(&g).len(), n);
            }
            let brute = brute_unit_group(&t).unwrap();
            let g: Vec<usize> = brute.generators.iter().map(|u| t.index(u)).collect();
            assert_eq!(t.relations(&g), (brute.relations.clone(), units.len()));
        }
    }

    #[test]
    fn brute_lattices() {
        let r = algebra(&["x^2", "4*x", "2*y", "8", "y^2", "x*y"], &["x", "y"]);
        let t = enumerate_ring(&r).unwrap();
        let us = [el(&r, "1+x"), el(&r, "3+y"), el(&r, "3")];
        let _ = brute_explattice(&t, &us).unwrap();
        let z7 = enumerate_ring(&algebra(&["7", "x"], &["x"])).unwrap();
        let l = brute_explattice(&z7, &[el(&algebra(&["7", "x"], &["x"]), "3")]).unwrap();
        assert_eq!(l, IntegerLattice::from_i64(1, &[&[6]]));
        let one = brute_explattice(&z7, &[el(&algebra(&["7", "x"], &["x"]), "1")]).unwrap();
        assert_eq!(one, IntegerLattice::full(1));
    }
}
