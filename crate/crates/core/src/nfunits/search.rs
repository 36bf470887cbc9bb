//! Units of orders of degree three to six found in a coefficient box,
//! reduced to a basis modulo torsion and saturated at small primes.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
#[allow(unused_imports)] // float methods come from std in tests
use num_traits::Float;
use num_traits::{One, Zero};

use super::NumberFieldOrder;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::intlat::{snf, solve_left, IntegerLattice, ZVec};

/// Largest box half-width tried for each degree.
pub fn box_bound(d: usize) -> i64 {
    match d {
        0..=4 => 32,
        5 => 8,
        _ => 4,
    }
}

pub const SATURATION_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Modulo-torsion bookkeeping for a list of units.
struct Basis<'a> {
    o: &'a NumberFieldOrder,
    zeta: &'a ZVec,
    w: u64,
    units: Vec<ZVec>,
    logs: Vec<Vec<f64>>,
}

impl<'a> Basis<'a> {
    fn log(&self, u: &ZVec) -> Vec<f64> {
        let (r1, r2) = self.o.signature();
        let v = self.o.embeddings.log_vector(&self.o.to_field(u));
        // drop the last place: the weighted logs of a unit sum to zero
        (0..r1 + r2 - 1).map(|j| if j < r1 { v[j] } else { 2.0 * v[j] }).collect()
    }

    fn is_torsion(&self, x: &ZVec) -> bool {
        self.o.pow(x, &BigInt::from(self.w)).as_deref() == Some(&self.o.one()[..])
    }

    /// Coordinates of `l` in terms of the current logs, by least squares.
    fn coords(&self, l: &[f64]) -> Option<(Vec<f64>, f64)> {
        let k = self.logs.len();
        if k == 0 {
            return Some((Vec::new(), l.iter().map(|x| x * x).sum::<f64>().sqrt()));
        }
        let gram: Vec<Vec<f64>> = (0..k).map(|i| (0..k).map(|j| dot(&self.logs[i], &self.logs[j])).collect()).collect();
        let rhs: Vec<f64> = (0..k).map(|i| dot(&self.logs[i], l)).collect();
        let c = super::embed::solve_real_left(&gram, &rhs)?;
        let mut resid = l.to_vec();
        for (ci, li) in c.iter().zip(&self.logs) {
            for (r, x) in resid.iter_mut().zip(li) {
                *r -= ci * x;
            }
        }
        Some((c, dot(&resid, &resid).sqrt()))
    }

    fn rebuild(&mut self, gens: Vec<ZVec>, rel: IntegerLattice) -> Result<()> {
        let exps = complement_basis(&rel.saturation());
        let mut units = Vec::with_capacity(exps.len());
        for e in exps {
            units.push(self.o.power_product(&gens, &e).ok_or_else(|| Error::Internal(alloc::string::String::from("unit lost its inverse")))?);
        }
        self.logs = units.iter().map(|u| self.log(u)).collect();
        self.units = units;
        Ok(())
    }

    /// Adds a unit to the group generated so far.
    fn add(&mut self, u: ZVec) -> Result<bool> {
        let l = self.log(&u);
        let scale = 1.0 + dot(&l, &l).sqrt();
        let Some((c, resid)) = self.coords(&l) else {
            return Ok(false);
        };
        if resid > 1e-7 * scale {
            self.units.push(u);
            self.logs.push(l);
            return Ok(true);
        }
        for den in 1..=1000i64 {
            let df = den as f64;
            let scaled: Vec<f64> = c.iter().map(|x| x * df).collect();
            if scaled.iter().all(|x| (x - x.round()).abs() < 1e-6 * df.max(1.0) * scale) {
                if den == 1 {
                    return Ok(false);
                }
                let mut rel = vec![BigInt::from(den)];
                rel.extend(scaled.iter().map(|x| BigInt::from(-(x.round() as i64))));
                let mut gens = vec![u];
                gens.extend(self.units.iter().cloned());
                let prod = self.o.power_product(&gens, &rel);
                if !prod.is_some_and(|p| self.is_torsion(&p)) {
                    return Ok(false);
                }
                let k = gens.len();
                self.rebuild(gens, IntegerLattice::new(k, vec![rel]))?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Looks for an `l`-th power among `zeta^a0 * prod b_i^a_i` and, if
    /// found, enlarges the basis by its root.
    fn saturate_once(&mut self, l: u64) -> Result<bool> {
        let k = self.units.len();
        let basis = self.o.real_basis();
        let (r1, r2) = self.o.signature();
        let total = (l as usize).pow(k as u32 + 1);
        for idx in 0..total {
            let mut a = Vec::with_capacity(k + 1);
            let mut t = idx;
            for _ in 0..=k {
                a.push((t % l as usize) as i64);
                t /= l as usize;
            }
            if a[1..].iter().all(|&x| x == 0) {
                continue;
            }
            let mut gens = vec![self.zeta.clone()];
            gens.extend(self.units.iter().cloned());
            let e: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
            let Some(x) = self.o.power_product(&gens, &e) else { continue };
            if let Some(y) = self.lth_root(&x, l, &basis, r1, r2) {
                let mut rel: Vec<BigInt> = a[1..].iter().map(|&x| BigInt::from(x)).collect();
                rel.push(BigInt::from(-(l as i64)));
                let mut g = self.units.clone();
                g.push(y);
                self.rebuild(g, IntegerLattice::new(k + 1, vec![rel]))?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn lth_root(&self, x: &ZVec, l: u64, basis: &[Vec<f64>], r1: usize, r2: usize) -> Option<ZVec> {
        let emb = self.o.embeddings.embed(&self.o.to_field(x));
        let lf = l as f64;
        // branches per place
        let mut choices: Vec<Vec<Complex64>> = Vec::new();
        for (j, z) in emb.iter().enumerate() {
            if j < r1 {
                let re = z.re;
                if l.is_multiple_of(2) {
                    if re <= 0.0 {
                        return None;
                    }
                    let r = libm::pow(re, 1.0 / lf);
                    choices.push(vec![Complex64::new(r, 0.0), Complex64::new(-r, 0.0)]);
                } else {
                    let r = libm::pow(re.abs(), 1.0 / lf);
                    choices.push(vec![Complex64::new(if re < 0.0 { -r } else { r }, 0.0)]);
                }
            } else {
                let base = z.powf(1.0 / lf);
                let rot = Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI / lf);
                let mut v = Vec::with_capacity(l as usize);
                let mut cur = base;
                for _ in 0..l {
                    v.push(cur);
                    cur *= rot;
                }
                choices.push(v);
            }
        }
        let combos: usize = choices.iter().map(|c| c.len()).product();
        let lb = BigInt::from(l);
        for mut idx in 0..combos {
            let mut target = Vec::with_capacity(r1 + 2 * r2);
            for (j, c) in choices.iter().enumerate() {
                let z = c[idx % c.len()];
                idx /= c.len();
                target.push(z.re);
                if j >= r1 {
                    target.push(z.im);
                }
            }
            if let Some(y) = self.o.round_real(basis, &target) {
                if self.o.pow(&y, &lb).as_deref() == Some(&x[..]) {
                    return Some(y);
                }
            }
        }
        None
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Given a saturated lattice `L ⊆ Z^k`, rows completing a basis of `L` to a
/// basis of `Z^k`; their images span `Z^k / L`.
pub(crate) fn complement_basis(lat: &IntegerLattice) -> Vec<ZVec> {
    let k = lat.dim();
    let unit = |i: usize| {
        let mut e = vec![BigInt::zero(); k];
        e[i] = BigInt::one();
        e
    };
    if lat.is_zero() {
        return (0..k).map(unit).collect();
    }
    let s = snf(&lat.matrix());
    let t = s.rank();
    // row i of V^{-1} solves x V = e_i
    (t..k).map(|i| solve_left(&s.v, &unit(i)).expect("unimodular")).collect()
}

fn enumerate_box(o: &NumberFieldOrder, bound: i64, ctx: &Context, out: &mut Vec<(f64, ZVec)>) -> Result<()> {
    let d = o.degree();
    let (r1, r2) = o.signature();
    let places = r1 + r2;
    let basis_emb: Vec<Vec<Complex64>> = (0..d)
        .map(|i| {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::one();
            o.embeddings.embed(&o.to_field(&e))
        })
        .collect();
    let mut a = vec![-bound; d];
    let mut count = 0u64;
    loop {
        count += 1;
        if count.is_multiple_of(65536) {
            ctx.check()?;
        }
        // first nonzero coordinate positive
        if let Some(first) = a.iter().find(|&&x| x != 0) {
            if *first > 0 {
                let mut logn = 0.0f64;
                let mut height = 0.0;
                for j in 0..places {
                    let mut z = Complex64::new(0.0, 0.0);
                    for i in 0..d {
                        if a[i] != 0 {
                            z += basis_emb[i][j] * a[i] as f64;
                        }
                    }
                    let m = if j < r1 { 1.0 } else { 2.0 };
                    let lz = z.norm().ln();
                    logn += m * lz;
                    height += m * lz.abs();
                }
                if logn.abs() < 1e-6 && height > 1e-6 {
                    let v: ZVec = a.iter().map(|&x| BigInt::from(x)).collect();
                    if o.is_unit(&v) {
                        out.push((height, v));
                    }
                }
            }
        }
        let mut i = 0;
        while i < d && a[i] == bound {
            a[i] = -bound;
            i += 1;
        }
        if i == d {
            break;
        }
        a[i] += 1;
    }
    Ok(())
}

/// Fundamental units of an order of degree three to six, modulo the
/// torsion generator `zeta` of order `w`.
pub fn bounded_search(o: &NumberFieldOrder, zeta: &ZVec, w: u64, ctx: &Context) -> Result<Vec<ZVec>> {
    let rank = o.unit_rank();
    let max = box_bound(o.degree());
    let mut basis = Basis { o, zeta, w, units: Vec::new(), logs: Vec::new() };
    let mut bound = 1;
    loop {
        let mut found = Vec::new();
        enumerate_box(o, bound, ctx, &mut found)?;
        found.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(core::cmp::Ordering::Equal).then_with(|| x.1.cmp(&y.1)));
        for (_, u) in found {
            basis.add(u)?;
        }
        if basis.units.len() == rank || bound >= max {
            break;
        }
        bound = (bound * 2).min(max);
    }
    if basis.units.len() < rank {
        return Err(Error::UnsupportedOrder(alloc::format!(
            "found {} of {} independent units with coefficients up to {}",
            basis.units.len(),
            rank,
            max
        )));
    }
    for l in SATURATION_PRIMES {
        while basis.saturate_once(l)? {
            ctx.check()?;
        }
    }
    Ok(basis.units)
}
