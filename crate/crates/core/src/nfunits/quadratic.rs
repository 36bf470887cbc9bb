//! Fundamental units of real quadratic orders by continued fractions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::NumberFieldOrder;
use crate::error::{internal, Error, Result};
use crate::intlat::{solve_left, IntMat, ZVec};

/// `{1, theta}` with `theta^2 = s + t theta`, in compact coordinates.
struct QuadraticBasis {
    one: ZVec,
    theta: ZVec,
    s: BigInt,
    t: BigInt,
}

fn quadratic_basis(o: &NumberFieldOrder) -> Result<QuadraticBasis> {
    let one = o.one();
    let (g, x, y) = {
        let e = one[0].extended_gcd(&one[1]);
        (e.gcd, e.x, e.y)
    };
    if !g.abs().is_one() {
        return internal("the identity is not primitive");
    }
    // det [[a, b], [-y, x]] = a x + b y = g
    let mut theta = vec![-y, x];
    if g.is_negative() {
        theta = theta.into_iter().map(|c| -c).collect();
    }
    let sq = o.mul(&theta, &theta);
    let m = IntMat::new(2, vec![one.clone(), theta.clone()]);
    let Some(st) = solve_left(&m, &sq) else {
        return internal("basis does not span the order");
    };
    Ok(QuadraticBasis { one, theta, s: st[0].clone(), t: st[1].clone() })
}

fn norm(b: &QuadraticBasis, a: &BigInt, c: &BigInt) -> BigInt {
    a * a + a * c * &b.t - &b.s * c * c
}

/// The unit `eps > 1` generating the units of a real quadratic order modulo
/// `±1`, in compact coordinates.
pub fn fundamental_unit(o: &NumberFieldOrder) -> Result<ZVec> {
    let b = quadratic_basis(o)?;
    let disc = &b.t * &b.t + BigInt::from(4) * &b.s;
    if !disc.is_positive() {
        return Err(Error::InvalidInput(alloc::string::String::from("not a real quadratic order")));
    }
    let root = disc.sqrt();
    if &root * &root == disc {
        return internal("discriminant is a square");
    }
    let to_elem = |a: &BigInt, c: &BigInt| -> ZVec { (0..2).map(|i| a * &b.one[i] + c * &b.theta[i]).collect() };
    // small coefficients first: the continued fraction criterion can miss
    // the unit in tiny discriminants
    let mut found: Vec<(BigInt, BigInt)> = Vec::new();
    let small = if root < BigInt::from(100_000) { 3i64 } else { 0 };
    for c in 1..=small {
        let c = BigInt::from(c);
        let bound = (&root + BigInt::from(2)) * &c + b.t.abs() * &c + BigInt::from(2);
        let mut a = -bound.clone();
        while a <= bound {
            if norm(&b, &a, &c).abs().is_one() {
                found.push((a.clone(), c.clone()));
            }
            a += 1;
        }
    }
    // continued fraction of x = -theta' = (-t + sqrt(D)) / 2
    let cf = || -> Option<(BigInt, BigInt)> {
        let mut pp = -b.t.clone();
        let mut qq = BigInt::from(2);
        let (mut p1, mut p2) = (BigInt::one(), BigInt::zero());
        let (mut q1, mut q2) = (BigInt::zero(), BigInt::one());
        for _ in 0..1_000_000 {
            let a = if qq.is_positive() {
                (&pp + &root).div_floor(&qq)
            } else {
                (&pp + &root + 1u32).div_floor(&qq)
            };
            let pn = &a * &p1 + &p2;
            let qn = &a * &q1 + &q2;
            p2 = core::mem::replace(&mut p1, pn);
            q2 = core::mem::replace(&mut q1, qn);
            if q1.is_positive() && norm(&b, &p1, &q1).abs().is_one() {
                return Some((p1, q1));
            }
            pp = &a * &qq - &pp;
            qq = (&disc - &pp * &pp) / &qq;
        }
        None
    };
    found.extend(cf());
    let size = |u: &ZVec| o.embeddings.log_vector(&o.to_field(u))[0].abs();
    let eps = found
        .iter()
        .map(|(a, c)| to_elem(a, c))
        .filter(|u| size(u) > 1e-9)
        .min_by(|u, v| size(u).partial_cmp(&size(v)).unwrap_or(core::cmp::Ordering::Equal))
        .ok_or_else(|| Error::UnsupportedOrder(alloc::string::String::from("continued fraction did not close")))?;
    // normalise to the unit larger than one in the first real embedding
    let mut eps = eps;
    let v = o.embeddings.embed(&o.to_field(&eps));
    if v[0].re.abs() < 1.0 {
        eps = o.inverse(&eps).ok_or_else(|| Error::Internal(alloc::string::String::from("unit without inverse")))?;
    }
    let v = o.embeddings.embed(&o.to_field(&eps));
    if v[0].re < 0.0 {
        eps = eps.into_iter().map(|x| -x).collect();
    }
    Ok(eps)
}
