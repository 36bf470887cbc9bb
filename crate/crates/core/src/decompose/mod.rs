//! Minimal primes, nilradical and idempotent decompositions of finite
//! Z-algebras, and splitting of zero-dimensional algebras over a field.

mod zerodim;

pub use zerodim::{zerodim_decompose, LocalComponent};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::arith::factor_integer;
use crate::arith::{Fp, QQ, ZZ};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::fieldalg::{mod_p_algebra, rational_algebra, FieldAlgebra, LinearMap, ScalarExtension, SplitHelper};
use crate::finitezalg::ExplicitAlgebra;
use crate::grobner::strong_groebner;
use crate::intlat::{left_kernel, solve_left, IntMat, IntegerLattice, ZVec};
use crate::linalg::Mat;
use crate::poly::{Ideal, Polynomial, TermOrdering};
use crate::upoly::{factor_fp, factor_q, UPoly};

/// Where univariate factorization happens.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Rationals,
    Prime(u64),
}

/// Factors an integer polynomial (coefficients low to high) over Q or F_p.
/// Factors over Q are primitive with positive leading coefficient; factors
/// over F_p are monic with coefficients in `[0, p)`.
pub fn factor_univariate(coeffs: &[BigInt], domain: Domain, ctx: &Context) -> Vec<(Vec<BigInt>, usize)> {
    match domain {
        Domain::Rationals => {
            let f = UPoly::from_coeffs(&QQ, coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect());
            factor_q(&f)
                .into_iter()
                .map(|(g, m)| {
                    let den = g.c.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                    let ints: Vec<BigInt> = g.c.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
                    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
                    (ints.iter().map(|c| c / &content).collect(), m)
                })
                .collect()
        }
        Domain::Prime(p) => {
            let fp = Fp::new(p);
            let f = UPoly::from_coeffs(&fp, coeffs.iter().map(|c| fp.reduce_big(c)).collect());
            let mut rng = ctx.rng(0x7ac7);
            factor_fp(&fp, &f, &mut rng)
                .into_iter()
                .map(|(g, m)| (g.c.iter().map(|&c| BigInt::from(c)).collect(), m))
                .collect()
        }
    }
}

/// Residue field of a characteristic-zero prime: a number field with the
/// projection from integer coordinates of the algebra.
#[derive(Clone, Debug)]
pub struct NumberFieldResidue {
    pub field: FieldAlgebra<QQ>,
    pub map: LinearMap<QQ>,
}

/// Residue field of a maximal ideal of characteristic `p`.
#[derive(Clone, Debug)]
pub struct FiniteFieldResidue {
    pub p: u64,
    pub degree: usize,
    /// Minimal polynomial of `theta` over F_p.
    pub modulus: UPoly<u64>,
    /// An element of the algebra whose residue generates the field over F_p.
    pub theta: ZVec,
    pub field: FieldAlgebra<Fp>,
    pub map: LinearMap<Fp>,
}

#[derive(Clone, Debug)]
pub enum Residue {
    NumberField(NumberFieldResidue),
    FiniteField(FiniteFieldResidue),
}

/// A minimal prime of an algebra `R`, stored as an ideal lattice of `R`.
#[derive(Clone, Debug)]
pub struct PrimeComponent {
    pub lattice: IntegerLattice,
    /// Zero or the prime `p` with `p ∈ P`.
    pub characteristic: u64,
    pub residue: Residue,
}

impl NumberFieldResidue {
    pub fn image(&self, v: &[BigInt]) -> Vec<BigRational> {
        let w: Vec<BigRational> = v.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        self.map.apply(&QQ, &w)
    }
}

impl FiniteFieldResidue {
    pub fn image(&self, v: &[BigInt]) -> Vec<u64> {
        let f = &self.field.field;
        let w: Vec<u64> = v.iter().map(|c| f.reduce_big(c)).collect();
        self.map.apply(f, &w)
    }
    /// Number of elements of the field.
    pub fn order(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.degree)
    }
}

impl PrimeComponent {
    /// The prime as an ideal of the polynomial ring, given by a reduced
    /// strong Gröbner basis.
    pub fn ideal(&self, r: &ExplicitAlgebra, ctx: &Context) -> Result<Ideal<ZZ>> {
        lattice_ideal(r, &self.lattice, ctx)
    }
    pub fn degree(&self) -> usize {
        match &self.residue {
            Residue::NumberField(nf) => nf.field.dim(),
            Residue::FiniteField(ff) => ff.degree,
        }
    }
}

/// The ideal of `Z[x]` of an ideal lattice, via a reduced strong basis.
pub fn lattice_ideal(r: &ExplicitAlgebra, j: &IntegerLattice, ctx: &Context) -> Result<Ideal<ZZ>> {
    let gb = strong_groebner(&r.ideal_to_polys(j), ctx)?;
    Ok(gb.to_ideal())
}

/// Integer vectors `v` with `v M = 0` for a rational matrix with `n` rows.
fn rational_left_kernel(m: &Mat<BigRational>, n: usize, ncols: usize) -> IntegerLattice {
    if ncols == 0 {
        return IntegerLattice::full(n);
    }
    let mut scale = vec![BigInt::one(); ncols];
    for row in m {
        for (s, c) in scale.iter_mut().zip(row) {
            *s = s.lcm(c.denom());
        }
    }
    let rows = m
        .iter()
        .map(|row| row.iter().zip(&scale).map(|(c, s)| (c * BigRational::from_integer(s.clone())).to_integer()).collect())
        .collect();
    IntegerLattice::new(n, left_kernel(&IntMat::new(ncols, rows)).rows)
}

fn char_zero_primes(r: &ExplicitAlgebra, ctx: &Context) -> Result<Vec<PrimeComponent>> {
    let ScalarExtension { algebra, map, .. } = rational_algebra(r);
    if algebra.dim() == 0 {
        return Ok(Vec::new());
    }
    let nil = algebra.nilradical();
    let (red, proj) = algebra.quotient(&nil);
    let to_red = map.then(&QQ, &proj);
    let mut rng = ctx.rng(0xc0);
    let mut out = Vec::new();
    for comp in red.split_reduced(&mut rng)? {
        ctx.check()?;
        let full = to_red.then(&QQ, &comp.map);
        let lattice = rational_left_kernel(&full.m, r.dim(), full.out_dim);
        out.push(PrimeComponent {
            lattice,
            characteristic: 0,
            residue: Residue::NumberField(NumberFieldResidue { field: comp.field, map: full }),
        });
    }
    Ok(out)
}

fn to_prime_u64(p: &BigInt) -> Result<u64> {
    p.to_u64().ok_or_else(|| Error::Unsupported(format!("prime {p} does not fit into 64 bits")))
}

/// Elements of `R` tried first when looking for a field generator: the
/// module generators, then small sums of two of them.
fn small_elements(r: &ExplicitAlgebra) -> impl Iterator<Item = ZVec> + '_ {
    let n = r.dim();
    let unit = move |i: usize| {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        v
    };
    (1..n).map(unit).chain((1..n).flat_map(move |i| {
        (i + 1..n).map(move |j| {
            let mut v = unit(i);
            v[j] = BigInt::one();
            v
        })
    }))
}

fn finite_field_residue(
    r: &ExplicitAlgebra,
    p: u64,
    field: FieldAlgebra<Fp>,
    map: LinearMap<Fp>,
    ctx: &Context,
) -> Result<FiniteFieldResidue> {
    let f = field.field;
    let d = field.dim();
    let image = |v: &[BigInt]| map.apply(&f, &v.iter().map(|c| f.reduce_big(c)).collect::<Vec<u64>>());
    let mut rng = ctx.rng(0xff00 + p);
    let mut found = None;
    if d == 1 {
        found = Some(r.one());
    } else {
        for v in small_elements(r) {
            if field.minpoly(&image(&v)).deg() == d {
                found = Some(v);
                break;
            }
        }
        let mut tries = 0;
        while found.is_none() && tries < 1000 {
            let v: ZVec = (0..r.dim()).map(|_| BigInt::from(rng.gen_range(0..p.min(1 << 20)))).collect();
            if field.minpoly(&image(&v)).deg() == d {
                found = Some(v);
            }
            tries += 1;
        }
    }
    let Some(theta) = found else {
        return Err(Error::Internal(String::from("no generator of the residue field found")));
    };
    let modulus = field.minpoly(&image(&theta));
    Ok(FiniteFieldResidue { p, degree: d, modulus, theta, field, map })
}

fn char_p_maximal_ideals(r: &ExplicitAlgebra, p: u64, ctx: &Context) -> Result<Vec<PrimeComponent>> {
    let ScalarExtension { algebra, map, .. } = mod_p_algebra(r, p);
    let f = algebra.field;
    if algebra.dim() == 0 {
        return Ok(Vec::new());
    }
    let nil = algebra.nilradical();
    let (red, proj) = algebra.quotient(&nil);
    let to_red = map.then(&f, &proj);
    let mut rng = ctx.rng(0xd0 + p);
    let mut out = Vec::new();
    let target_of = |d: usize| IntegerLattice::scaled_identity(d, &BigInt::from(p));
    for comp in red.split_reduced(&mut rng)? {
        ctx.check()?;
        let full = to_red.then(&f, &comp.map);
        let d = full.out_dim;
        let rows: Vec<ZVec> = full.m.iter().map(|row| row.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let lattice = IntegerLattice::preimage(&rows, d, &target_of(d));
        let residue = finite_field_residue(r, p, comp.field, full, ctx)?;
        out.push(PrimeComponent { lattice, characteristic: p, residue: Residue::FiniteField(residue) });
    }
    Ok(out)
}

/// All minimal primes of `R`: characteristic-zero primes first, then the
/// maximal ideals of positive characteristic that contain none of them,
/// ordered by characteristic.
pub fn minimal_primes(r: &ExplicitAlgebra, ctx: &Context) -> Result<Vec<PrimeComponent>> {
    let ms = r.module_structure();
    let mut out = char_zero_primes(r, ctx)?;
    let q = if ms.rank > 0 { ms.torsion_exponent.clone() } else { r.characteristic() };
    if q.is_zero() || q.is_one() {
        return Ok(out);
    }
    let n0 = out.len();
    for (p, _) in factor_integer(&q) {
        let p = to_prime_u64(&p)?;
        for m in char_p_maximal_ideals(r, p, ctx)? {
            if out[..n0].iter().all(|c| !m.lattice.contains_lattice(&c.lattice)) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// The lattice of the product ideal `A B` (both containing the syzygies).
pub fn ideal_product(r: &ExplicitAlgebra, a: &IntegerLattice, b: &IntegerLattice) -> IntegerLattice {
    let mut gens = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            gens.push(r.mul(x, y));
        }
    }
    r.syzygies().add_vectors(&gens)
}

/// `Rad(0)` of an algebra with its nilpotency index.
#[derive(Clone, Debug)]
pub struct Nilradical {
    pub lattice: IntegerLattice,
    /// Least `s` with `Rad(0)^s = 0`; one for reduced algebras.
    pub index: usize,
    /// Polynomials whose residues generate `Rad(0)` as an ideal.
    pub generators: Vec<Polynomial<ZZ>>,
}

impl Nilradical {
    pub fn is_zero(&self, r: &ExplicitAlgebra) -> bool {
        self.lattice == *r.syzygies()
    }
}

/// Intersection of the given ideal lattices, the whole ring for none.
pub fn intersect_all(r: &ExplicitAlgebra, ls: &[&IntegerLattice]) -> IntegerLattice {
    let mut it = ls.iter();
    match it.next() {
        None => IntegerLattice::full(r.dim()),
        Some(first) => it.fold((*first).clone(), |acc, l| acc.intersect(l)),
    }
}

/// The nilradical as the intersection of the minimal primes.
pub fn nilradical(r: &ExplicitAlgebra, primes: &[PrimeComponent], ctx: &Context) -> Result<Nilradical> {
    let ls: Vec<&IntegerLattice> = primes.iter().map(|c| &c.lattice).collect();
    let rad = intersect_all(r, &ls);
    let syz = r.syzygies();
    // each strict step down the chain of powers drops a free rank or a
    // prime factor of the torsion, so the chain has bounded length
    let ms = r.module_structure();
    let bound = ms.rank + ms.invariant_factors.iter().map(|d| d.bits() as usize).sum::<usize>() + 1;
    let mut index = 1;
    let mut power = rad.clone();
    while !syz.contains_lattice(&power) {
        ctx.check()?;
        power = ideal_product(r, &power, &rad);
        index += 1;
        if index > bound {
            return Err(Error::Internal(String::from("nilpotency index exceeds the module length")));
        }
    }
    let mut generators = Vec::new();
    if !syz.contains_lattice(&rad) {
        for g in lattice_ideal(r, &rad, ctx)?.generators {
            if !r.is_zero(&r.from_poly(&g)) {
                generators.push(g);
            }
        }
    }
    Ok(Nilradical { lattice: rad, index, generators })
}

/// Orthogonal idempotents `e_i` with `e_i ≡ 1 (mod J_i)` and
/// `e_i ≡ 0 (mod J_k)` for `k ≠ i`, for pairwise comaximal ideal lattices.
pub fn crt_orthogonal_idempotents(r: &ExplicitAlgebra, ideals: &[IntegerLattice]) -> Result<Vec<ZVec>> {
    if ideals.len() <= 1 {
        return Ok(vec![r.one(); ideals.len()]);
    }
    let one = r.one();
    let mut out = Vec::new();
    for i in 0..ideals.len() {
        let others: Vec<&IntegerLattice> = ideals.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, l)| l).collect();
        let rest = intersect_all(r, &others);
        let a = ideals[i].basis().len();
        let mut stacked = ideals[i].basis().to_vec();
        stacked.extend(rest.basis().iter().cloned());
        let Some(x) = solve_left(&IntMat::new(r.dim(), stacked.clone()), &one) else {
            return Err(Error::NotComaximal(format!("ideal {} against the others", i + 1)));
        };
        let mut e = r.zero();
        for (c, row) in x[a..].iter().zip(&stacked[a..]) {
            for (o, y) in e.iter_mut().zip(row) {
                *o += c * y;
            }
        }
        out.push(r.canon(&e));
    }
    Ok(out)
}

/// The splitting `R ≅ R/J × R/m_1 × ... × R/m_s` of a reduced algebra,
/// where `J` is the intersection of the characteristic-zero primes and the
/// `m_i` are the minimal primes of positive characteristic.
#[derive(Clone, Debug)]
pub struct TorsionSplit {
    /// Indices into the prime list of the positive-characteristic primes.
    pub maximal: Vec<usize>,
    /// Indices of the characteristic-zero primes.
    pub char_zero: Vec<usize>,
    /// `J`, absent when there are no characteristic-zero primes.
    pub torsion_free: Option<IntegerLattice>,
    /// Idempotents for `m_1, ..., m_s` followed by the one for `J`.
    pub idempotents: Vec<ZVec>,
}

pub fn torsion_split(r: &ExplicitAlgebra, primes: &[PrimeComponent]) -> Result<TorsionSplit> {
    let char_zero: Vec<usize> = (0..primes.len()).filter(|&i| primes[i].characteristic == 0).collect();
    let maximal: Vec<usize> = (0..primes.len()).filter(|&i| primes[i].characteristic != 0).collect();
    let torsion_free = if char_zero.is_empty() {
        None
    } else {
        let ls: Vec<&IntegerLattice> = char_zero.iter().map(|&i| &primes[i].lattice).collect();
        Some(intersect_all(r, &ls))
    };
    let mut ideals: Vec<IntegerLattice> = maximal.iter().map(|&i| primes[i].lattice.clone()).collect();
    if let Some(j) = &torsion_free {
        ideals.push(j.clone());
    }
    let idempotents = crt_orthogonal_idempotents(r, &ideals)?;
    Ok(TorsionSplit { maximal, char_zero, torsion_free, idempotents })
}

/// Primitive idempotents of `Q ⊗ R` for a reduced `Q ⊗ R`.
pub struct RationalIdempotents {
    pub extension: ScalarExtension<QQ>,
    pub elements: Vec<Vec<BigRational>>,
}

pub fn primitive_idempotents_q(r: &ExplicitAlgebra, ctx: &Context) -> Result<RationalIdempotents> {
    let ext = rational_algebra(r);
    if ext.algebra.nilradical().rank() > 0 {
        return Err(Error::InvalidInput(String::from("the rational algebra is not reduced")));
    }
    let mut rng = ctx.rng(0xe1);
    let elements = ext.algebra.split_reduced(&mut rng)?.into_iter().map(|c| c.idempotent).collect();
    Ok(RationalIdempotents { extension: ext, elements })
}

impl RationalIdempotents {
    /// An element of `Q ⊗ R` written in the module generators of `R`.
    pub fn to_poly(&self, r: &ExplicitAlgebra, v: &[BigRational]) -> Polynomial<QQ> {
        rational_poly(r, &self.extension, v)
    }
}

pub fn rational_poly(r: &ExplicitAlgebra, ext: &ScalarExtension<QQ>, v: &[BigRational]) -> Polynomial<QQ> {
    let nv = r.presentation().ideal.nvars;
    let terms = ext
        .basis_coords
        .iter()
        .zip(v)
        .map(|(&k, c)| (r.generators()[k].clone(), c.clone()))
        .collect();
    Polynomial::from_terms(&QQ, nv, TermOrdering::DegRevLex, terms)
}

/// `Q ⊗ R` image of an element of `R`.
pub fn rational_image(ext: &ScalarExtension<QQ>, v: &[BigInt]) -> Vec<BigRational> {
    ext.image(v, |c| BigRational::from_integer(c.clone()))
}

/// Checks `e_i^2 = e_i`, `e_i e_j = 0` and `sum e_i = 1`.
pub fn is_idempotent_set<F: crate::arith::Field>(alg: &FieldAlgebra<F>, es: &[Vec<F::El>]) -> bool {
    let mut sum = alg.zero();
    for (i, e) in es.iter().enumerate() {
        if alg.mul(e, e) != *e {
            return false;
        }
        for f in &es[i + 1..] {
            if !alg.is_zero(&alg.mul(e, f)) {
                return false;
            }
        }
        sum = alg.add(&sum, e);
    }
    sum == alg.one()
}

#[cfg(test)]
mod tests;
