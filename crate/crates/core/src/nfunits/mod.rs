//! Unit groups of the integral building blocks: multiplicative generators of
//! finite fields, and torsion plus fundamental units of orders in number
//! fields of small degree.
//!
//! Orders are handled by providers: rank zero (torsion only, any degree),
//! real quadratic (continued fractions) and a bounded search for degrees
//! three to six. Results record which provider produced them.

mod embed;
mod lll;
mod quadratic;
mod relations;
mod search;

pub use embed::{poly_roots, root_of_unity_exponent, Embeddings};
pub use lll::lll_reduce;
pub use relations::{field_unit_relations, FieldRelations};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
#[allow(unused_imports)] // float methods come from std in tests
use num_traits::Float;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::arith::{euler_phi, factor_integer, factor_u64, QQ};
use crate::context::Context;
use crate::decompose::{FiniteFieldResidue, PrimeComponent};
use crate::error::{internal, Error, Result};
use crate::fieldalg::FieldAlgebra;
use crate::finitezalg::{CompactForm, ExplicitAlgebra};
use crate::intlat::{IntMat, IntegerLattice, ZVec};

/// How much of a unit group result is proven.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// The generators provably generate the full unit group.
    Exact,
    /// Generated by elements found in a coefficient box; saturated at small
    /// primes but not proven to be the whole group.
    BoundedSearch,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Exact => "exact",
            Provenance::BoundedSearch => "bounded_search",
        }
    }
    /// The weaker of two results.
    pub fn meet(self, other: Provenance) -> Provenance {
        if self == Provenance::Exact { other } else { self }
    }
}

/// The order `O = R / P` of a characteristic-zero prime `P`, with integer
/// coordinates `Z^d` and its fraction field.
#[derive(Clone, Debug)]
pub struct NumberFieldOrder {
    /// `R / P` in the coordinates of `R`.
    pub order: ExplicitAlgebra,
    pub compact: CompactForm,
    /// `Q ⊗ O` in the compact coordinates.
    pub field: FieldAlgebra<QQ>,
    /// Primitive element, in coordinates of `R`.
    pub theta: ZVec,
    /// Monic integral minimal polynomial of `theta`, constant term first.
    pub minpoly: Vec<BigInt>,
    pub embeddings: Embeddings,
}

fn big_to_q(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

impl NumberFieldOrder {
    /// Builds the order of a characteristic-zero prime and picks a
    /// primitive element among small elements of `R`.
    pub fn new(r: &ExplicitAlgebra, prime: &IntegerLattice, ctx: &Context) -> Result<Self> {
        let order = r.quotient(prime);
        let compact = order.compact();
        if !compact.moduli.iter().all(|m| m.is_zero()) {
            return Err(Error::InvalidInput(String::from("prime has positive characteristic")));
        }
        let d = compact.dim();
        if d == 0 {
            return Err(Error::InvalidInput(String::from("zero ring")));
        }
        let table = compact.table.iter().map(|row| row.iter().map(|v| big_to_q(v)).collect()).collect();
        let field = FieldAlgebra::new(QQ, table, big_to_q(&compact.one));
        let n = r.dim();
        let unit = |i: usize| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::one();
            v
        };
        let mut candidates: Vec<ZVec> = (0..n).map(unit).collect();
        for i in 1..n {
            for j in i + 1..n {
                let mut v = unit(i);
                v[j] = BigInt::one();
                candidates.push(v);
            }
        }
        let mut rng = ctx.rng(0x7e7a);
        for _ in 0..500 {
            candidates.push((0..n).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect());
        }
        for cand in candidates {
            let t = big_to_q(&compact.to_compact(&cand));
            let mu = field.minpoly(&t);
            if mu.deg() == d {
                let minpoly = mu.c.iter().map(|c| c.to_integer()).collect();
                let embeddings = Embeddings::new(&field, &t)?;
                return Ok(NumberFieldOrder { order, compact, field, theta: cand, minpoly, embeddings });
            }
        }
        internal("no primitive element found")
    }

    pub fn from_prime(r: &ExplicitAlgebra, prime: &PrimeComponent, ctx: &Context) -> Result<Self> {
        Self::new(r, &prime.lattice, ctx)
    }

    pub fn degree(&self) -> usize {
        self.compact.dim()
    }
    pub fn signature(&self) -> (usize, usize) {
        (self.embeddings.r1, self.embeddings.r2)
    }
    /// Rank of the unit group.
    pub fn unit_rank(&self) -> usize {
        self.embeddings.r1 + self.embeddings.r2 - 1
    }

    /// Compact coordinates of an element of `R`.
    pub fn coords(&self, v: &[BigInt]) -> ZVec {
        self.compact.to_compact(v)
    }
    /// An element of `R` with the given compact coordinates.
    pub fn lift(&self, y: &[BigInt]) -> ZVec {
        self.order.canon(&self.compact.from_compact(y))
    }
    pub fn to_field(&self, y: &[BigInt]) -> Vec<BigRational> {
        big_to_q(y)
    }
    /// Compact coordinates of a field element, if it lies in the order.
    pub fn from_field(&self, v: &[BigRational]) -> Option<ZVec> {
        v.iter().map(|c| if c.is_integer() { Some(c.to_integer()) } else { None }).collect()
    }

    pub fn one(&self) -> ZVec {
        self.compact.one.clone()
    }
    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        self.compact.mul(a, b)
    }
    pub fn inverse(&self, a: &[BigInt]) -> Option<ZVec> {
        self.field.inverse(&big_to_q(a)).and_then(|v| self.from_field(&v))
    }
    pub fn pow(&self, a: &[BigInt], e: &BigInt) -> Option<ZVec> {
        let base = if e.is_negative() { self.inverse(a)? } else { a.to_vec() };
        let mut acc = self.one();
        let m = e.abs();
        for i in (0..m.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if m.bit(i) {
                acc = self.mul(&acc, &base);
            }
        }
        Some(acc)
    }
    pub fn power_product(&self, us: &[ZVec], e: &[BigInt]) -> Option<ZVec> {
        let mut acc = self.one();
        for (u, k) in us.iter().zip(e) {
            if !k.is_zero() {
                acc = self.mul(&acc, &self.pow(u, k)?);
            }
        }
        Some(acc)
    }
    /// Norm down to Q, the determinant of the multiplication map.
    pub fn norm(&self, a: &[BigInt]) -> BigInt {
        let d = self.degree();
        let rows: Vec<ZVec> = (0..d)
            .map(|j| {
                let mut e = vec![BigInt::zero(); d];
                e[j] = BigInt::one();
                self.mul(a, &e)
            })
            .collect();
        IntMat::new(d, rows).det()
    }
    pub fn is_unit(&self, a: &[BigInt]) -> bool {
        self.norm(a).abs().is_one()
    }

    /// Real coordinates of the basis under the Minkowski embedding, one row
    /// per basis element.
    pub(crate) fn real_basis(&self) -> Vec<Vec<f64>> {
        let d = self.degree();
        (0..d)
            .map(|i| {
                let mut e = vec![BigInt::zero(); d];
                e[i] = BigInt::one();
                self.embeddings.real_vector(&big_to_q(&e))
            })
            .collect()
    }

    /// The element of the order whose Minkowski coordinates are close to
    /// `target`, if the solution is close to integral.
    pub(crate) fn round_real(&self, basis: &[Vec<f64>], target: &[f64]) -> Option<ZVec> {
        let x = embed::solve_real_left(basis, target)?;
        let mut out = Vec::with_capacity(x.len());
        for c in x {
            let r = c.round();
            if !r.is_finite() || (c - r).abs() > 1e-4 || r.abs() > 1e15 {
                return None;
            }
            out.push(BigInt::from(r as i64));
        }
        Some(out)
    }
}

/// Torsion part and fundamental units of an order, in compact coordinates.
#[derive(Clone, Debug)]
pub struct UnitGroupData {
    pub torsion_generator: ZVec,
    pub torsion_order: u64,
    pub fundamental_units: Vec<ZVec>,
    pub provenance: Provenance,
}

impl UnitGroupData {
    /// `[zeta, eps_1, ..., eps_r]`.
    pub fn generators(&self) -> Vec<ZVec> {
        let mut g = vec![self.torsion_generator.clone()];
        g.extend(self.fundamental_units.iter().cloned());
        g
    }
}

fn primes_dividing(m: u64) -> Vec<u64> {
    factor_u64(m).into_iter().map(|(p, _)| p).collect()
}

fn has_exact_order(o: &NumberFieldOrder, z: &[BigInt], m: u64) -> bool {
    let one = o.one();
    if o.pow(z, &BigInt::from(m)).as_deref() != Some(&one[..]) {
        return false;
    }
    primes_dividing(m).into_iter().all(|l| o.pow(z, &BigInt::from(m / l)).as_deref() != Some(&one[..]))
}

/// Generator of the roots of unity of an order, with its order `w`.
pub fn torsion_units(o: &NumberFieldOrder) -> (ZVec, u64) {
    let d = o.degree() as u64;
    let minus_one: ZVec = o.one().iter().map(|c| -c).collect();
    let (r1, r2) = o.signature();
    if r1 > 0 {
        return (minus_one, 2);
    }
    let basis = o.real_basis();
    let mut ms: Vec<u64> = (3..=(2 * d * d + 6)).filter(|&m| m % 2 == 0 && d.is_multiple_of(euler_phi(m))).collect();
    ms.sort_unstable_by(|a, b| b.cmp(a));
    for m in ms {
        let ks: Vec<u64> = (1..m).filter(|k| k.gcd(&m) == 1).collect();
        // the first complex embedding may be normalised to exp(2 pi i / m)
        let combos = ks.len().pow(r2 as u32 - 1);
        for mut c in 0..combos {
            let mut target = Vec::with_capacity(2 * r2);
            for j in 0..r2 {
                let k = if j == 0 {
                    1
                } else {
                    let k = ks[c % ks.len()];
                    c /= ks.len();
                    k
                };
                let t = 2.0 * core::f64::consts::PI * k as f64 / m as f64;
                target.push(libm::cos(t));
                target.push(libm::sin(t));
            }
            if let Some(z) = o.round_real(&basis, &target) {
                if has_exact_order(o, &z, m) {
                    return (z, m);
                }
            }
        }
    }
    (minus_one, 2)
}

/// Torsion and fundamental units of an order.
pub fn order_units(o: &NumberFieldOrder, ctx: &Context) -> Result<UnitGroupData> {
    let (zeta, w) = torsion_units(o);
    let rank = o.unit_rank();
    let d = o.degree();
    if rank == 0 {
        return Ok(UnitGroupData { torsion_generator: zeta, torsion_order: w, fundamental_units: Vec::new(), provenance: Provenance::Exact });
    }
    if d == 2 {
        let eps = quadratic::fundamental_unit(o)?;
        return Ok(UnitGroupData { torsion_generator: zeta, torsion_order: w, fundamental_units: vec![eps], provenance: Provenance::Exact });
    }
    if (3..=6).contains(&d) {
        let units = search::bounded_search(o, &zeta, w, ctx)?;
        return Ok(UnitGroupData { torsion_generator: zeta, torsion_order: w, fundamental_units: units, provenance: Provenance::BoundedSearch });
    }
    Err(Error::UnsupportedOrder(format!("degree {d} with unit rank {rank}")))
}

/// `g` generates the multiplicative group of the field of order `q`.
fn is_primitive(field: &FieldAlgebra<crate::arith::Fp>, g: &[u64], q: &BigInt, primes: &[BigInt]) -> bool {
    if field.is_zero(g) {
        return false;
    }
    let one = field.one();
    let qm1 = q - 1u32;
    primes.iter().all(|l| {
        let e: BigUint = (&qm1 / l).to_biguint().unwrap_or_default();
        field.pow(g, &e) != one
    })
}

/// An element of `R` whose residue generates the multiplicative group of
/// the finite field `R / m`.
pub fn finite_field_unit_gen(r: &ExplicitAlgebra, ff: &FiniteFieldResidue, ctx: &Context) -> Result<ZVec> {
    let q = ff.order();
    let primes: Vec<BigInt> = factor_integer(&(&q - 1u32)).into_iter().map(|(l, _)| l).collect();
    let one = r.one();
    let p = ff.p;
    let bound = p.min(256);
    let shifted = |base: &ZVec, c: u64| r.add(base, &r.scale(&one, &BigInt::from(c)));
    let mut candidates: Vec<ZVec> = (1..bound).map(|c| r.scale(&one, &BigInt::from(c))).collect();
    if ff.degree > 1 {
        for c in 0..bound {
            candidates.push(shifted(&ff.theta, c));
        }
        for i in 1..r.dim() {
            let mut g = r.zero();
            g[i] = BigInt::one();
            for c in 0..bound {
                candidates.push(shifted(&g, c));
            }
        }
    }
    for cand in candidates {
        ctx.check()?;
        if is_primitive(&ff.field, &ff.image(&cand), &q, &primes) {
            return Ok(r.canon(&cand));
        }
    }
    let mut rng = ctx.rng(0xf1e1d);
    for _ in 0..100_000 {
        ctx.check()?;
        let cand: ZVec = (0..r.dim()).map(|_| BigInt::from(rng.gen_range(0..p))).collect();
        if is_primitive(&ff.field, &ff.image(&cand), &q, &primes) {
            return Ok(r.canon(&cand));
        }
    }
    internal("no primitive root found")
}

#[cfg(test)]
mod tests;
