//! Unit groups of finite Z-algebras.
//!
//! The reduced case splits off the positive-characteristic minimal primes,
//! which are maximal with finite residue fields, from the torsion-free part
//! `R/J`. The units of `R/J` are glued one number-field component at a time
//! through the finite rings in which neighbouring components meet. Units of
//! a non-reduced ring are lifts of the reduced units together with
//! generators of `1 + Rad(0)`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::decompose::{ideal_product, intersect_all, minimal_primes, nilradical, torsion_split, Nilradical, PrimeComponent, Residue};
use crate::error::{internal, Error, Result};
use crate::explat::{explattice, Completeness};
use crate::finitezalg::ExplicitAlgebra;
use crate::intlat::{snf, solve_left, IntMat, IntegerLattice, ZVec};
use crate::nfunits::{finite_field_unit_gen, order_units, NumberFieldOrder, Provenance};
use crate::Context;

/// Generators of a unit group, as representatives in `R`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub generators: Vec<ZVec>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct UnitGroupDescription {
    pub generators: Vec<ZVec>,
    /// Free rank of the group.
    pub rank: usize,
    /// `k_1 | k_2 | ... | k_u`, all greater than one.
    pub invariant_factors: Vec<BigInt>,
    /// Exponent lattice of `generators`.
    pub relation_lattice: IntegerLattice,
    pub provenance: Provenance,
    pub completeness: Completeness,
}

/// How generators of `1 + Rad(0)` are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RadicalMethod {
    /// `1 + t n` over Macaulay terms `t` and products `n` of fewer than `s`
    /// nilradical generators, `s` the nilpotency index.
    #[default]
    Direct,
    /// `1 + t f` over Macaulay terms `t` and single generators `f` only.
    /// Incomplete when the nilradical meets the integers: for `Z/8` it
    /// yields just `3`.
    TermMultiples,
    /// `1 + b` for a Z-basis `b` of every power `Rad(0)^i`.
    Layers,
}

/// `x` with `x ≡ g (mod a)` and `x ≡ h (mod b)`, given `g - h ∈ a + b`.
fn crt_pair(r: &ExplicitAlgebra, a: &IntegerLattice, b: &IntegerLattice, g: &[BigInt], h: &[BigInt]) -> Option<ZVec> {
    let diff = r.sub(g, h);
    let na = a.basis().len();
    let mut stacked = a.basis().to_vec();
    stacked.extend(b.basis().iter().cloned());
    let c = solve_left(&IntMat::new(r.dim(), stacked.clone()), &diff)?;
    let mut x = g.to_vec();
    for (ci, row) in c[..na].iter().zip(&stacked[..na]) {
        for (o, y) in x.iter_mut().zip(row) {
            *o -= ci * y;
        }
    }
    Some(x)
}

/// Glues generators `gs` of `(R/prev)^×` and `hs` of `(R/p)^×` into
/// generators of `(R/(prev ∩ p))^×` through the finite ring `R/(prev + p)`.
fn glue(
    r: &ExplicitAlgebra,
    prev: &IntegerLattice,
    gs: &[ZVec],
    p: &IntegerLattice,
    hs: &[ZVec],
    ctx: &Context,
) -> Result<Vec<ZVec>> {
    let j = prev.sum(p);
    let oj = r.quotient(&j);
    let (a, b) = (gs.len(), hs.len());
    let lat = if j == IntegerLattice::full(r.dim()) {
        IntegerLattice::full(a + b)
    } else {
        let mut tuple: Vec<ZVec> = gs.iter().map(|g| oj.canon(g)).collect();
        for h in hs {
            tuple.push(oj.inverse(h).ok_or_else(|| Error::Internal(String::from("component unit is not a unit modulo J")))?);
        }
        explattice(&oj, &tuple, ctx)?.lattice
    };
    let left = r.quotient(prev);
    let right = r.quotient(p);
    let meet = r.quotient(&prev.intersect(p));
    let mut out = Vec::new();
    for v in lat.basis() {
        ctx.check()?;
        let g = left.power_product(gs, &v[..a])?;
        let h = right.power_product(hs, &v[a..])?;
        if !oj.eq(&g, &h) {
            return internal("glued components disagree modulo J");
        }
        let x = crt_pair(r, prev, p, &g, &h).ok_or_else(|| Error::Internal(String::from("components are not glueable")))?;
        let x = meet.canon(&x);
        if !meet.eq(&x, &meet.one()) && !out.contains(&x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Units of the order `R / (p_1 ∩ ... ∩ p_m)` for characteristic-zero
/// primes `p_i`, as representatives in `R`.
pub fn units_order(r: &ExplicitAlgebra, primes: &[&PrimeComponent], ctx: &Context) -> Result<GeneratorSet> {
    let mut provenance = Provenance::Exact;
    let mut prev: Option<IntegerLattice> = None;
    let mut gens: Vec<ZVec> = Vec::new();
    for p in primes {
        if p.characteristic != 0 {
            return Err(Error::HasTorsion(String::from("order component of positive characteristic")));
        }
        let o = NumberFieldOrder::from_prime(r, p, ctx)?;
        let data = order_units(&o, ctx)?;
        provenance = provenance.meet(data.provenance);
        let hs: Vec<ZVec> = data.generators().iter().map(|u| o.lift(u)).collect();
        match prev {
            None => {
                gens = hs;
                prev = Some(p.lattice.clone());
            }
            Some(l) => {
                gens = glue(r, &l, &gens, &p.lattice, &hs, ctx)?;
                prev = Some(l.intersect(&p.lattice));
            }
        }
    }
    if let Some(l) = &prev {
        let q = r.quotient(l);
        gens.retain(|g| !q.eq(g, &q.one()));
    }
    Ok(GeneratorSet { generators: gens, provenance })
}

fn require_reduced(r: &ExplicitAlgebra, primes: &[PrimeComponent], ctx: &Context) -> Result<()> {
    if !nilradical(r, primes, ctx)?.is_zero(r) {
        return Err(Error::NotReduced(String::from("the nilradical is nonzero")));
    }
    Ok(())
}

/// Units of a reduced ring all of whose minimal primes have characteristic
/// zero.
pub fn units_torsion_free_reduced(r: &ExplicitAlgebra, ctx: &Context) -> Result<GeneratorSet> {
    let primes = minimal_primes(r, ctx)?;
    require_reduced(r, &primes, ctx)?;
    if primes.iter().any(|p| p.characteristic != 0) {
        return Err(Error::HasTorsion(String::from("a minimal prime has positive characteristic")));
    }
    let refs: Vec<&PrimeComponent> = primes.iter().collect();
    units_order(r, &refs, ctx)
}

/// `e u + (1 - e)`.
fn embed_block(r: &ExplicitAlgebra, e: &[BigInt], u: &[BigInt]) -> ZVec {
    r.add(&r.mul(e, u), &r.sub(&r.one(), e))
}

/// Units of `R` modulo the intersection of `primes`, which must be the
/// minimal primes of that quotient.
fn reduced_units_from_primes(r: &ExplicitAlgebra, primes: &[PrimeComponent], ctx: &Context) -> Result<GeneratorSet> {
    let lattices: Vec<&IntegerLattice> = primes.iter().map(|p| &p.lattice).collect();
    let rr = r.quotient(&intersect_all(r, &lattices));
    let split = torsion_split(&rr, primes)?;
    let mut gens = Vec::new();
    for (k, &i) in split.maximal.iter().enumerate() {
        let Residue::FiniteField(ff) = &primes[i].residue else {
            return internal("positive-characteristic prime without a finite residue field");
        };
        let g = finite_field_unit_gen(&rr, ff, ctx)?;
        let u = embed_block(&rr, &split.idempotents[k], &g);
        if !rr.eq(&u, &rr.one()) {
            gens.push(u);
        }
    }
    let mut provenance = Provenance::Exact;
    if split.torsion_free.is_some() {
        let refs: Vec<&PrimeComponent> = split.char_zero.iter().map(|&i| &primes[i]).collect();
        let part = units_order(&rr, &refs, ctx)?;
        provenance = part.provenance;
        let e = split.idempotents.last().expect("idempotent for J");
        for h in &part.generators {
            gens.push(embed_block(&rr, e, h));
        }
    }
    Ok(GeneratorSet { generators: gens, provenance })
}

/// Units of a reduced ring.
pub fn units_reduced(r: &ExplicitAlgebra, ctx: &Context) -> Result<GeneratorSet> {
    let primes = minimal_primes(r, ctx)?;
    require_reduced(r, &primes, ctx)?;
    reduced_units_from_primes(r, &primes, ctx)
}

fn push_unipotent(r: &ExplicitAlgebra, out: &mut Vec<ZVec>, n: &[BigInt]) {
    if r.is_zero(n) {
        return;
    }
    let u = r.add(&r.one(), n);
    if !out.iter().any(|v| r.eq(v, &u)) {
        out.push(u);
    }
}

fn term_multiples(r: &ExplicitAlgebra, out: &mut Vec<ZVec>, n: &[BigInt]) {
    for k in 0..r.dim() {
        let mut t = r.zero();
        t[k] = BigInt::one();
        push_unipotent(r, out, &r.mul(&t, n));
    }
}

/// `1 + NF(t f)` over the Macaulay terms `t` and the generators `f` of the
/// nilradical, without repetitions or the identity.
pub fn one_plus_radical_gens(r: &ExplicitAlgebra, nil: &Nilradical) -> Vec<ZVec> {
    let mut out = Vec::new();
    for f in &nil.generators {
        term_multiples(r, &mut out, &r.from_poly(f));
    }
    out
}

/// Like [`one_plus_radical_gens`] but with `f` running over all products of
/// fewer than `s` generators, so that the products of degree `j` times the
/// terms span `Rad(0)^j` as a Z-module.
pub fn one_plus_radical_products(r: &ExplicitAlgebra, nil: &Nilradical) -> Vec<ZVec> {
    let fs: Vec<ZVec> = nil.generators.iter().map(|f| r.from_poly(f)).collect();
    let mut out = Vec::new();
    let mut layer = fs.clone();
    for _ in 1..nil.index {
        for n in &layer {
            term_multiples(r, &mut out, n);
        }
        let mut next: Vec<ZVec> = Vec::new();
        for n in &layer {
            for f in &fs {
                let m = r.mul(n, f);
                if !r.is_zero(&m) && !next.contains(&m) {
                    next.push(m);
                }
            }
        }
        layer = next;
    }
    out
}

/// `1 + b` for a Z-basis `b` of each power of the nilradical.
pub fn radical_layer_gens(r: &ExplicitAlgebra, nil: &Nilradical) -> Vec<ZVec> {
    let mut out = Vec::new();
    let mut power = nil.lattice.clone();
    for _ in 1..nil.index {
        for b in power.basis() {
            push_unipotent(r, &mut out, b);
        }
        power = ideal_product(r, &power, &nil.lattice);
    }
    out
}

/// Free rank and invariant factors of `Z^k / L`.
pub fn structure_of(lattice: &IntegerLattice) -> (usize, Vec<BigInt>) {
    let k = lattice.dim();
    if lattice.is_zero() {
        return (k, Vec::new());
    }
    let s = snf(&lattice.matrix());
    (k - s.rank(), s.invariant_factors())
}

/// Rank and invariant factors of the group generated by `gens`.
pub fn unit_group_structure(r: &ExplicitAlgebra, gens: &[ZVec], ctx: &Context) -> Result<(usize, Vec<BigInt>)> {
    if gens.is_empty() {
        return Ok((0, Vec::new()));
    }
    Ok(structure_of(&explattice(r, gens, ctx)?.lattice))
}

fn describe(r: &ExplicitAlgebra, generators: Vec<ZVec>, provenance: Provenance, ctx: &Context) -> Result<UnitGroupDescription> {
    let (relation_lattice, completeness) = if generators.is_empty() {
        (IntegerLattice::zero(0), Completeness::Certified)
    } else {
        let res = explattice(r, &generators, ctx)?;
        (res.lattice, res.completeness)
    };
    let (rank, invariant_factors) = structure_of(&relation_lattice);
    Ok(UnitGroupDescription { generators, rank, invariant_factors, relation_lattice, provenance, completeness })
}

/// The unit group of `R`.
pub fn units(r: &ExplicitAlgebra, ctx: &Context) -> Result<UnitGroupDescription> {
    units_with(r, RadicalMethod::default(), ctx)
}

pub fn units_with(r: &ExplicitAlgebra, method: RadicalMethod, ctx: &Context) -> Result<UnitGroupDescription> {
    let primes = minimal_primes(r, ctx)?;
    let nil = nilradical(r, &primes, ctx)?;
    let reduced = reduced_units_from_primes(r, &primes, ctx)?;
    let mut gens: Vec<ZVec> = reduced.generators.iter().map(|g| r.canon(g)).collect();
    let radical = match method {
        RadicalMethod::Direct => one_plus_radical_products(r, &nil),
        RadicalMethod::TermMultiples => one_plus_radical_gens(r, &nil),
        RadicalMethod::Layers => radical_layer_gens(r, &nil),
    };
    for u in radical {
        if !gens.iter().any(|g| r.eq(g, &u)) {
            gens.push(u);
        }
    }
    let one = r.one();
    gens.retain(|g| !r.eq(g, &one));
    describe(r, gens, reduced.provenance, ctx)
}

/// Drops generators that are products of the others, last ones first.
pub fn prune(desc: &UnitGroupDescription) -> UnitGroupDescription {
    let mut gens = desc.generators.clone();
    let mut lat = desc.relation_lattice.clone();
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let g = lat.basis().iter().fold(BigInt::zero(), |acc, v| acc.gcd(&v[i]));
        if g.is_one() {
            let keep: Vec<usize> = (0..gens.len()).filter(|&k| k != i).collect();
            lat = lat.restrict_to(&keep);
            gens.remove(i);
        }
    }
    let (rank, invariant_factors) = structure_of(&lat);
    UnitGroupDescription {
        generators: gens,
        rank,
        invariant_factors,
        relation_lattice: lat,
        provenance: desc.provenance,
        completeness: desc.completeness,
    }
}

/// Whether `u` lies in the subgroup generated by `gens`: some relation of
/// `(gens, u)` has last exponent one.
pub fn in_subgroup(r: &ExplicitAlgebra, gens: &[ZVec], u: &[BigInt], ctx: &Context) -> Result<bool> {
    let mut tuple = gens.to_vec();
    tuple.push(u.to_vec());
    let lat = explattice(r, &tuple, ctx)?.lattice;
    let k = gens.len();
    Ok(lat.basis().iter().fold(BigInt::zero(), |acc, v| acc.gcd(&v[k])).is_one())
}

/// Whether two tuples of units generate the same subgroup.
pub fn same_subgroup(r: &ExplicitAlgebra, a: &[ZVec], b: &[ZVec], ctx: &Context) -> Result<bool> {
    for u in b {
        if !in_subgroup(r, a, u, ctx)? {
            return Ok(false);
        }
    }
    for u in a {
        if !in_subgroup(r, b, u, ctx)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
