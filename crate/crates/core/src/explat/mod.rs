//! Exponent lattices: all `a` with `f_1^{a_1} ... f_k^{a_k} = 1`.
//!
//! For an algebra `R` that is finitely generated as a Z-module the lattice
//! is assembled from the rational algebra `Q ⊗ R`, the algebras `R / pR`
//! and a lifting step from `R / p^j R` to `R / p^{j+1} R`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::RngCore;

use crate::arith::{factor_integer, Fp, QQ};
use crate::context::Context;
use crate::decompose::zerodim_decompose;
use crate::error::{Error, Result};
use crate::fieldalg::{mod_p_algebra, rational_algebra, FieldAlgebra};
use crate::finitezalg::ExplicitAlgebra;
use crate::intlat::{left_kernel, IntMat, IntegerLattice, ZVec};
use crate::nfunits::field_unit_relations;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// The lattice is provably the full exponent lattice.
    Certified,
    /// Every vector is a verified relation, but completeness rests on a
    /// numerical rank for units of infinite order.
    Heuristic,
}

impl Completeness {
    pub fn as_str(self) -> &'static str {
        match self {
            Completeness::Certified => "certified",
            Completeness::Heuristic => "heuristic",
        }
    }
    pub fn meet(self, other: Completeness) -> Completeness {
        if self == Completeness::Certified { other } else { self }
    }
}

/// One intermediate lattice, for verbose output.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub label: String,
    pub lattice: IntegerLattice,
}

#[derive(Clone, Debug)]
pub struct ExpLatticeResult {
    pub lattice: IntegerLattice,
    pub completeness: Completeness,
    pub trace: Vec<TraceStep>,
}

fn step(trace: &mut Vec<TraceStep>, label: String, lattice: &IntegerLattice) {
    trace.push(TraceStep { label, lattice: lattice.clone() });
}

/// `{ y B : y ∈ Y }` for the rows `B` of `basis`.
fn combine(y: &IntegerLattice, basis: &[ZVec], k: usize) -> IntegerLattice {
    if y.is_zero() || basis.is_empty() {
        return IntegerLattice::zero(k);
    }
    y.map(&IntMat::new(k, basis.to_vec()))
}

// ---------------------------------------------------------------------------
// finite fields and zero-dimensional F_p-algebras

fn field_pow(f: &FieldAlgebra<Fp>, a: &[u64], e: &BigInt) -> Vec<u64> {
    f.pow(a, &e.to_biguint().unwrap_or_default())
}

fn element_by_index(f: &FieldAlgebra<Fp>, mut i: u64) -> Vec<u64> {
    let p = f.field.p;
    let mut v = vec![0u64; f.dim()];
    for c in v.iter_mut() {
        *c = i % p;
        i /= p;
    }
    // coordinates are in the algebra basis, which need not start with one
    let mut out = f.zero();
    for (j, c) in v.iter().enumerate() {
        if *c != 0 {
            out = f.add(&out, &f.scale(&f.basis(j), c));
        }
    }
    out
}

/// The first element in a fixed enumeration of `F` that generates `F^×`.
pub fn deterministic_primitive_root(f: &FieldAlgebra<Fp>) -> Vec<u64> {
    let q = num_traits::pow(BigInt::from(f.field.p), f.dim());
    let qm1 = &q - 1u32;
    let primes: Vec<BigInt> = factor_integer(&qm1).into_iter().map(|(l, _)| l).collect();
    let one = f.one();
    let mut i = 1u64;
    loop {
        let g = element_by_index(f, i);
        if !f.is_zero(&g) && primes.iter().all(|l| field_pow(f, &g, &(&qm1 / l)) != one) {
            return g;
        }
        i += 1;
    }
}

/// Discrete logarithm of `h` to base `g` of order `l` (prime), by baby-step
/// giant-step.
fn dlog_prime_order(f: &FieldAlgebra<Fp>, g: &[u64], h: &[u64], l: &BigInt) -> Option<BigInt> {
    let one = f.one();
    if h == one.as_slice() {
        return Some(BigInt::zero());
    }
    let m = l.sqrt() + 1u32;
    let m_u = m.to_u64()?;
    let mut table = BTreeMap::new();
    let mut x = one.clone();
    for j in 0..m_u {
        table.entry(x.clone()).or_insert(j);
        x = f.mul(&x, g);
    }
    // giant step g^{-m}
    let ginv = f.inverse(g)?;
    let step = field_pow(f, &ginv, &m);
    let mut y = h.to_vec();
    for i in 0..=m_u {
        if let Some(j) = table.get(&y) {
            return Some((BigInt::from(i) * &m + BigInt::from(*j)).mod_floor(l));
        }
        y = f.mul(&y, &step);
    }
    None
}

/// `log_g h` modulo `q - 1` by Pohlig-Hellman.
pub fn discrete_log(f: &FieldAlgebra<Fp>, g: &[u64], h: &[u64]) -> Option<BigInt> {
    let q = num_traits::pow(BigInt::from(f.field.p), f.dim());
    let n = &q - 1u32;
    let mut residues = Vec::new();
    for (l, e) in factor_integer(&n) {
        let le = num_traits::pow(l.clone(), e as usize);
        let cof = &n / &le;
        let gl = field_pow(f, g, &cof);
        let hl = field_pow(f, h, &cof);
        // gamma has order l
        let gamma = field_pow(f, &gl, &(&le / &l));
        let mut x = BigInt::zero();
        let mut lk = BigInt::one();
        let ginv = f.inverse(&gl)?;
        for _ in 0..e {
            let t = f.mul(&hl, &field_pow(f, &ginv, &x));
            let hk = field_pow(f, &t, &(&le / (&lk * &l)));
            let d = dlog_prime_order(f, &gamma, &hk, &l)?;
            x += &d * &lk;
            lk *= &l;
        }
        residues.push((x, le));
    }
    // CRT
    let mut acc = BigInt::zero();
    let mut modulus = BigInt::one();
    for (r, m) in residues {
        let e = modulus.extended_gcd(&m);
        let t = ((&r - &acc) * &e.x).mod_floor(&m);
        acc += &modulus * t;
        modulus *= &m;
        acc = acc.mod_floor(&modulus);
    }
    Some(acc)
}

/// Exponent lattice of nonzero elements of a finite field.
pub fn explattice_finite_field(f: &FieldAlgebra<Fp>, units: &[Vec<u64>]) -> Result<IntegerLattice> {
    let k = units.len();
    if units.iter().any(|u| f.is_zero(u)) {
        return Err(Error::NotAUnit(String::from("zero in a finite field")));
    }
    let q = num_traits::pow(BigInt::from(f.field.p), f.dim());
    let g = deterministic_primitive_root(f);
    let mut rows = Vec::with_capacity(k);
    for u in units {
        let l = discrete_log(f, &g, u).ok_or_else(|| Error::Internal(String::from("discrete logarithm failed")))?;
        rows.push(vec![l]);
    }
    let target = IntegerLattice::scaled_identity(1, &(&q - 1u32));
    Ok(IntegerLattice::preimage(&rows, 1, &target))
}

fn to_int_rows_fp(rows: &[Vec<u64>]) -> Vec<ZVec> {
    rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
}

/// Exponent lattice of units of a finite-dimensional `F_p`-algebra.
pub fn explattice_zerodim_fp(a: &FieldAlgebra<Fp>, units: &[Vec<u64>], rng: &mut dyn RngCore) -> Result<IntegerLattice> {
    let k = units.len();
    let f = a.field;
    let mut lattice = IntegerLattice::full(k);
    for comp in zerodim_decompose(a, rng)? {
        let images: Vec<Vec<u64>> = units.iter().map(|u| comp.residue_map.apply(&f, u)).collect();
        let mut lat = explattice_finite_field(&comp.residue_field, &images)?;
        // unipotent filtration e + N ⊇ e + N^2 ⊇ ...
        let powers = a.ideal_powers(&comp.nilradical);
        for next in powers.iter().skip(1) {
            if comp.nilradical.rank() == 0 || lat.is_zero() {
                break;
            }
            let basis = lat.basis().to_vec();
            let mut rows = Vec::with_capacity(basis.len());
            for b in &basis {
                let e: Vec<BigInt> = b.clone();
                let w = a.power_product(units, &e).ok_or_else(|| Error::NotAUnit(String::from("local unit")))?;
                let w = a.mul(&w, &comp.idempotent);
                let n = a.sub(&w, &comp.idempotent);
                rows.push(next.quotient_coords(&f, &n));
            }
            let width = a.dim() - next.rank();
            let y = IntegerLattice::preimage(&to_int_rows_fp(&rows), width, &IntegerLattice::scaled_identity(width, &BigInt::from(f.p)));
            lat = combine(&y, &basis, k);
        }
        lattice = lattice.intersect(&lat);
    }
    Ok(lattice)
}

// ---------------------------------------------------------------------------
// zero-dimensional Q-algebras

fn truncated_log(a: &FieldAlgebra<QQ>, n: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.zero();
    let mut pw = n.to_vec();
    let mut k = 1i64;
    while !a.is_zero(&pw) {
        let c = BigRational::new(BigInt::from(if k % 2 == 1 { 1 } else { -1 }), BigInt::from(k));
        out = a.add(&out, &a.scale(&pw, &c));
        pw = a.mul(&pw, n);
        k += 1;
    }
    out
}

/// Integer row kernel of a rational matrix.
fn rational_kernel(rows: &[Vec<BigRational>], ncols: usize) -> IntegerLattice {
    let m = rows.len();
    let mut den = BigInt::one();
    for r in rows {
        for c in r {
            den = den.lcm(c.denom());
        }
    }
    let ints: Vec<ZVec> = rows.iter().map(|r| r.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect()).collect();
    if ncols == 0 {
        return IntegerLattice::full(m);
    }
    IntegerLattice::new(m, left_kernel(&IntMat::new(ncols, ints)).rows)
}

/// Exponent lattice of units of a finite-dimensional Q-algebra whose
/// residue fields' units are algebraic integers.
pub fn explattice_zerodim_q(a: &FieldAlgebra<QQ>, units: &[Vec<BigRational>], rng: &mut dyn RngCore) -> Result<(IntegerLattice, Completeness)> {
    let k = units.len();
    let mut lattice = IntegerLattice::full(k);
    let mut completeness = Completeness::Certified;
    for comp in zerodim_decompose(a, rng)? {
        let images: Vec<Vec<BigRational>> = units.iter().map(|u| comp.residue_map.apply(&QQ, u)).collect();
        let rel = field_unit_relations(&comp.residue_field, &images, rng)?;
        if rel.heuristic {
            completeness = Completeness::Heuristic;
        }
        let mut lat = rel.lattice;
        if comp.nilradical.rank() > 0 && !lat.is_zero() {
            let basis = lat.basis().to_vec();
            let mut logs = Vec::with_capacity(basis.len());
            for b in &basis {
                let w = a.power_product(units, b).ok_or_else(|| Error::NotAUnit(String::from("local unit")))?;
                let w = a.mul(&w, &comp.idempotent);
                let n = a.sub(&w, &comp.idempotent);
                logs.push(truncated_log(a, &n));
            }
            let y = rational_kernel(&logs, a.dim());
            lat = combine(&y, &basis, k);
        }
        lattice = lattice.intersect(&lat);
    }
    Ok((lattice, completeness))
}

// ---------------------------------------------------------------------------
// algebras over Z

fn check_units(r: &ExplicitAlgebra, units: &[ZVec]) -> Result<()> {
    for u in units {
        if !r.is_unit(u) {
            return Err(Error::NotAUnit(r.display(u)));
        }
    }
    Ok(())
}

/// One lifting step: from a basis of the exponent lattice in `R / p^j R`
/// to the lattice in `R / p^{j+1} R`. Returns the solution space of the
/// linear condition and the lifted lattice.
pub fn lift_lattice_step(
    r: &ExplicitAlgebra,
    p: &BigInt,
    j: u32,
    lattice: &IntegerLattice,
    units: &[ZVec],
) -> Result<(IntegerLattice, IntegerLattice)> {
    let k = units.len();
    let pj = num_traits::pow(p.clone(), j as usize);
    let next = r.quotient_by_integer(&(&pj * p));
    let basis = lattice.basis().to_vec();
    let one = next.one();
    let mut h = Vec::with_capacity(basis.len());
    for b in &basis {
        let w = next.power_product(units, b)?;
        let d = next.sub(&w, &one);
        let hs = next
            .divide_exact(&d, &pj)
            .ok_or_else(|| Error::Internal(format!("{} is not divisible by {pj}", next.display(&d))))?;
        h.push(hs);
    }
    // p^j * sum y_s h_s = 0, i.e. sum y_s h_s is killed by p^j
    let ann = next.annihilator_of_integer(&pj);
    let sol = IntegerLattice::preimage(&h, r.dim(), &ann);
    let lifted = combine(&sol, &basis, k);
    Ok((sol, lifted))
}

fn explattice_prime_power(
    r: &ExplicitAlgebra,
    p: &BigInt,
    e: u32,
    units: &[ZVec],
    ctx: &Context,
    trace: &mut Vec<TraceStep>,
) -> Result<IntegerLattice> {
    let pu = p.to_u64().ok_or_else(|| Error::Unsupported(format!("prime {p} does not fit into 64 bits")))?;
    let ext = mod_p_algebra(r, pu);
    let f = ext.algebra.field;
    let images: Vec<Vec<u64>> = units.iter().map(|u| ext.image(u, |c| f.reduce_big(c))).collect();
    let mut rng = ctx.rng(0xe0 + pu);
    let mut lat = explattice_zerodim_fp(&ext.algebra, &images, &mut rng)?;
    step(trace, format!("modulo {p}"), &lat);
    for j in 1..e {
        ctx.check()?;
        let (sol, lifted) = lift_lattice_step(r, p, j, &lat, units)?;
        step(trace, format!("solution space lifting {p}^{j} to {p}^{}", j + 1), &sol);
        debug_assert!(lat.contains_lattice(&lifted));
        lat = lifted;
        step(trace, format!("modulo {p}^{}", j + 1), &lat);
    }
    Ok(lat)
}

/// The exponent lattice of units of an algebra that is finitely generated
/// as a Z-module.
pub fn explattice(r: &ExplicitAlgebra, units: &[ZVec], ctx: &Context) -> Result<ExpLatticeResult> {
    check_units(r, units)?;
    let mut trace = Vec::new();
    let (lattice, completeness) = explattice_inner(r, units, ctx, &mut trace)?;
    Ok(ExpLatticeResult { lattice, completeness, trace })
}

fn explattice_inner(
    r: &ExplicitAlgebra,
    units: &[ZVec],
    ctx: &Context,
    trace: &mut Vec<TraceStep>,
) -> Result<(IntegerLattice, Completeness)> {
    let k = units.len();
    ctx.check()?;
    let ms = r.module_structure();
    if ms.rank > 0 {
        let ext = rational_algebra(r);
        let images: Vec<Vec<BigRational>> = units.iter().map(|u| ext.image(u, |c| BigRational::from_integer(c.clone()))).collect();
        let mut rng = ctx.rng(0xe1);
        let (lam, comp) = explattice_zerodim_q(&ext.algebra, &images, &mut rng)?;
        step(trace, String::from("over Q"), &lam);
        let tau = ms.torsion_exponent;
        if tau.is_one() {
            return Ok((lam, comp));
        }
        let sub = r.quotient_by_integer(&tau);
        let (m, _) = explattice_inner(&sub, units, ctx, trace)?;
        let out = lam.intersect(&m);
        step(trace, String::from("intersection"), &out);
        return Ok((out, comp));
    }
    let q = r.characteristic();
    if q.is_one() {
        return Ok((IntegerLattice::full(k), Completeness::Certified));
    }
    let mut out = IntegerLattice::full(k);
    for (p, e) in factor_integer(&q) {
        let m = explattice_prime_power(r, &p, e, units, ctx, trace)?;
        out = out.intersect(&m);
    }
    Ok((out, Completeness::Certified))
}

/// Checks that every basis vector of `lattice` is a relation.
pub fn verify_relations(r: &ExplicitAlgebra, units: &[ZVec], lattice: &IntegerLattice) -> Result<bool> {
    let one = r.one();
    for b in lattice.basis() {
        if !r.eq(&r.power_product(units, b)?, &one) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
