//! Univariate polynomials over a field, with factorisation over prime
//! fields and over the rationals.

mod factor_fp;
mod factor_q;

pub use factor_fp::*;
pub use factor_q::*;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::arith::Field;

/// Coefficients are stored from the constant term upwards with no
/// trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UPoly<E> {
    pub c: Vec<E>,
}

impl<E: Clone + fmt::Display> UPoly<E> {
    pub fn from_coeffs<F: Field<El = E>>(f: &F, c: Vec<E>) -> Self {
        let mut p = UPoly { c };
        p.trim(f);
        p
    }
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }
    pub fn constant<F: Field<El = E>>(f: &F, a: E) -> Self {
        Self::from_coeffs(f, vec![a])
    }
    pub fn one<F: Field<El = E>>(f: &F) -> Self {
        Self::constant(f, f.one())
    }
    /// The monomial `t`.
    pub fn x<F: Field<El = E>>(f: &F) -> Self {
        UPoly { c: vec![f.zero(), f.one()] }
    }
    fn trim<F: Field<El = E>>(&mut self, f: &F) {
        while self.c.last().is_some_and(|x| f.is_zero(x)) {
            self.c.pop();
        }
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    /// Degree; zero for the zero polynomial.
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
    pub fn lc(&self) -> Option<&E> {
        self.c.last()
    }
    pub fn is_one<F: Field<El = E>>(&self, f: &F) -> bool {
        self.c.len() == 1 && f.is_one(&self.c[0])
    }
    pub fn coeff<F: Field<El = E>>(&self, f: &F, i: usize) -> E {
        self.c.get(i).cloned().unwrap_or_else(|| f.zero())
    }
    pub fn add<F: Field<El = E>>(&self, f: &F, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs(f, (0..n).map(|i| f.add(&self.coeff(f, i), &o.coeff(f, i))).collect())
    }
    pub fn sub<F: Field<El = E>>(&self, f: &F, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs(f, (0..n).map(|i| f.sub(&self.coeff(f, i), &o.coeff(f, i))).collect())
    }
    pub fn scale<F: Field<El = E>>(&self, f: &F, a: &E) -> Self {
        Self::from_coeffs(f, self.c.iter().map(|x| f.mul(x, a)).collect())
    }
    pub fn mul<F: Field<El = E>>(&self, f: &F, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![f.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::from_coeffs(f, out)
    }
    pub fn monic<F: Field<El = E>>(&self, f: &F) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(l) => self.scale(f, &f.inv(l)),
        }
    }
    pub fn divrem<F: Field<El = E>>(&self, f: &F, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.c.clone();
        let dd = d.deg();
        if r.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let inv = f.inv(d.lc().unwrap());
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = f.mul(&r[k + dd], &inv);
            if f.is_zero(&coef) {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] = f.sub(&r[k + j], &f.mul(&coef, b));
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Self::from_coeffs(f, q), Self::from_coeffs(f, r))
    }
    pub fn rem<F: Field<El = E>>(&self, f: &F, d: &Self) -> Self {
        self.divrem(f, d).1
    }
    pub fn div_exact<F: Field<El = E>>(&self, f: &F, d: &Self) -> Self {
        let (q, r) = self.divrem(f, d);
        debug_assert!(r.is_zero());
        q
    }
    /// Monic gcd.
    pub fn gcd<F: Field<El = E>>(&self, f: &F, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }
    /// `(g, s, t)` with `g = s self + t o` monic.
    pub fn xgcd<F: Field<El = E>>(&self, f: &F, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = s0.sub(f, &q.mul(f, &s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = t0.sub(f, &q.mul(f, &t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(&l);
                (r0.scale(f, &inv), s0.scale(f, &inv), t0.scale(f, &inv))
            }
        }
    }
    pub fn derivative<F: Field<El = E>>(&self, f: &F) -> Self {
        Self::from_coeffs(
            f,
            self.c.iter().enumerate().skip(1).map(|(i, a)| f.mul(a, &f.from_i64(i as i64))).collect(),
        )
    }
    pub fn eval<F: Field<El = E>>(&self, f: &F, x: &E) -> E {
        self.c.iter().rev().fold(f.zero(), |acc, a| f.add(&f.mul(&acc, x), a))
    }
    /// `self^e mod m`.
    pub fn pow_mod<F: Field<El = E>>(&self, f: &F, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(f).rem(f, m);
        let base = self.rem(f, m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = result.mul(f, &result).rem(f, m);
            if e.bit(i) {
                result = result.mul(f, &base).rem(f, m);
            }
        }
        result
    }
    pub fn display<F: Field<El = E>>(&self, _f: &F, var: &str) -> alloc::string::String {
        use alloc::string::ToString;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = alloc::string::String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            let t = a.to_string();
            if t == "0" {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            match i {
                0 => s.push_str(&t),
                _ => {
                    if t != "1" {
                        s.push_str(&t);
                        s.push('*');
                    }
                    s.push_str(var);
                    if i > 1 {
                        s.push('^');
                        s.push_str(&i.to_string());
                    }
                }
            }
        }
        s
    }
}

/// Square-free decomposition over a field of characteristic zero: pairs
/// `(g_i, i)` with `f = lc * prod g_i^i` and the `g_i` monic, square-free and
/// pairwise coprime.
pub fn squarefree_char0<F: Field>(f: &F, p: &UPoly<F::El>) -> Vec<(UPoly<F::El>, usize)> {
    let mut out = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let a = p.monic(f);
    let d = a.derivative(f);
    let mut b = a.gcd(f, &d);
    let mut c = a.div_exact(f, &b);
    let mut i = 1;
    while c.deg() > 0 {
        let y = c.gcd(f, &b);
        let z = c.div_exact(f, &y);
        if z.deg() > 0 {
            out.push((z, i));
        }
        b = b.div_exact(f, &y);
        c = y;
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QQ;
    use num_rational::BigRational;

    fn qp(c: &[i64]) -> UPoly<BigRational> {
        UPoly::from_coeffs(&QQ, c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn division_and_gcd() {
        let f = QQ;
        let a = qp(&[-1, 0, 1]); // t^2 - 1
        let b = qp(&[1, 1]);
        let (q, r) = a.divrem(&f, &b);
        assert_eq!(q, qp(&[-1, 1]));
        assert!(r.is_zero());
        let (g, s, t) = a.xgcd(&f, &qp(&[1, 2, 1]));
        assert_eq!(g, qp(&[1, 1]));
        assert_eq!(s.mul(&f, &a).add(&f, &t.mul(&f, &qp(&[1, 2, 1]))), g);
    }

    #[test]
    fn squarefree_parts() {
        // (t+1)^2 (t-2)
        let p = qp(&[1, 1]).mul(&QQ, &qp(&[1, 1])).mul(&QQ, &qp(&[-2, 1]));
        let sf = squarefree_char0(&QQ, &p);
        assert_eq!(sf, vec![(qp(&[-2, 1]), 1), (qp(&[1, 1]), 2)]);
    }
}
