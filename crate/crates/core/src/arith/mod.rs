//! Coefficient domains: the integers, the rationals and prime fields.

mod integer;

pub use integer::*;

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with its arithmetic supplied by a context value.
pub trait Ring: Clone + fmt::Debug + PartialEq {
    type El: Clone + fmt::Debug + fmt::Display + Eq + Ord;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn from_int(&self, n: &BigInt) -> Self::El;
    /// Characteristic; zero for Z and Q.
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::El) -> bool {
        *a == self.one()
    }
    /// Used only for sign-aware printing.
    fn is_negative(&self, _a: &Self::El) -> bool {
        false
    }
    fn from_i64(&self, n: i64) -> Self::El {
        self.from_int(&BigInt::from(n))
    }
}

/// A ring with a division algorithm. Z uses floor division, so remainders
/// by `b` lie in `[0, |b|)`; in a field every remainder is zero.
pub trait EuclideanRing: Ring {
    fn div_rem(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El);
    /// `(g, s, t)` with `g = s a + t b` and `g` normalised.
    fn xgcd(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El, Self::El);
    /// A unit `u` such that `u a` is the normal representative of `a`.
    fn normal_unit(&self, a: &Self::El) -> Self::El;
    fn is_unit(&self, a: &Self::El) -> bool;

    /// `Some(a / b)` when `b` divides `a`.
    fn divides(&self, b: &Self::El, a: &Self::El) -> Option<Self::El> {
        if self.is_zero(b) {
            return if self.is_zero(a) { Some(self.zero()) } else { None };
        }
        let (q, r) = self.div_rem(a, b);
        if self.is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

pub trait Field: EuclideanRing {
    fn inv(&self, a: &Self::El) -> Self::El;

    fn div(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.mul(a, &self.inv(b))
    }
}

/// The integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ZZ;

impl Ring for ZZ {
    type El = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
}

impl EuclideanRing for ZZ {
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // floor division with a non-negative remainder for either sign of b
        let (mut q, mut r) = a.div_mod_floor(b);
        if r.is_negative() {
            r += b.abs();
            q += if b.is_negative() { 1 } else { -1 };
        }
        (q, r)
    }
    fn xgcd(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
        xgcd(a, b)
    }
    fn normal_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct QQ;

impl Ring for QQ {
    type El = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

impl EuclideanRing for QQ {
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn xgcd(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational, BigRational) {
        field_xgcd(self, a, b)
    }
    fn normal_unit(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            BigRational::one()
        } else {
            a.recip()
        }
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
}

impl Field for QQ {
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// The prime field with `p` elements, `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2 && is_prime_u64(p));
        Fp { p }
    }
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod_u64(a, e, self.p)
    }
    pub fn reduce_big(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        u64::try_from(m).unwrap_or(0)
    }
    pub fn reduce_ratio(&self, q: &BigRational) -> Option<u64> {
        let d = self.reduce_big(q.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_big(q.numer()), &self.inv(&d)))
    }
}

impl Ring for Fp {
    type El = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        (s % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod_u64(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        self.reduce_big(n)
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl EuclideanRing for Fp {
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.div(a, b), 0)
    }
    fn xgcd(&self, a: &u64, b: &u64) -> (u64, u64, u64) {
        field_xgcd(self, a, b)
    }
    fn normal_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.inv(a)
        }
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
}

impl Field for Fp {
    fn inv(&self, a: &u64) -> u64 {
        inv_mod_u64(*a, self.p).expect("inverse of zero in a prime field")
    }
}

fn field_xgcd<F: Field>(f: &F, a: &F::El, b: &F::El) -> (F::El, F::El, F::El) {
    if !f.is_zero(a) {
        (f.one(), f.inv(a), f.zero())
    } else if !f.is_zero(b) {
        (f.one(), f.zero(), f.inv(b))
    } else {
        (f.zero(), f.zero(), f.zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_remainders_are_non_negative() {
        let z = ZZ;
        for (a, b) in [(7, 3), (-7, 3), (7, -3), (-7, -3), (6, -3)] {
            let (q, r) = z.div_rem(&BigInt::from(a), &BigInt::from(b));
            assert!(!r.is_negative() && r < BigInt::from(b).abs());
            assert_eq!(q * BigInt::from(b) + r, BigInt::from(a));
        }
    }

    #[test]
    fn prime_field_basics() {
        let f = Fp::new(7);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.reduce_ratio(&BigRational::new(1.into(), 3.into())), Some(5));
    }
}
