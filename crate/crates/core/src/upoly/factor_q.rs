use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;

use super::{factor_fp, squarefree_char0, UPoly};
use crate::arith::{is_prime_u64, lcm, Fp, QQ};

type QPoly = UPoly<BigRational>;
type ZPoly = Vec<BigInt>;

/// Monic irreducible factors over Q with multiplicities, sorted by degree.
pub fn factor_q(a: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree_char0(&QQ, a) {
        for h in factor_squarefree_q(&g) {
            out.push((h, m));
        }
    }
    out.sort_by(|x, y| (x.0.deg(), &x.0.c).cmp(&(y.0.deg(), &y.0.c)));
    out
}

pub fn is_irreducible_q(a: &QPoly) -> bool {
    let fs = factor_q(a);
    fs.len() == 1 && fs[0].1 == 1
}

fn factor_squarefree_q(g: &QPoly) -> Vec<QPoly> {
    let g = g.monic(&QQ);
    let n = g.deg();
    if n <= 1 {
        return vec![g];
    }
    let d = g.c.iter().fold(BigInt::one(), |acc, c| lcm(&acc, c.denom()));
    // h(t) = d^n g(t / d) is monic with integer coefficients
    let h: ZPoly = (0..=n)
        .map(|i| (g.c[i].clone() * BigRational::from_integer(d.pow((n - i) as u32))).to_integer())
        .collect();
    factor_monic_squarefree_z(&h)
        .into_iter()
        .map(|k| {
            let m = k.len() - 1;
            let c = k
                .iter()
                .enumerate()
                .map(|(i, a)| BigRational::new(a.clone(), d.pow((m - i) as u32)))
                .collect();
            QPoly::from_coeffs(&QQ, c)
        })
        .collect()
}

fn to_fp(f: &Fp, a: &[BigInt]) -> UPoly<u64> {
    UPoly::from_coeffs(f, a.iter().map(|x| f.reduce_big(x)).collect())
}

fn from_fp(a: &UPoly<u64>) -> ZPoly {
    a.c.iter().map(|&x| BigInt::from(x)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn zscale(a: &[BigInt], k: &BigInt) -> ZPoly {
    a.iter().map(|x| x * k).collect()
}

fn symmetric_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Exact division by a monic integer polynomial, if it divides.
fn zdiv_monic(a: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return if a.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, b) in d.iter().enumerate() {
            r[k + j] -= &c * b;
        }
        q[k] = c;
    }
    if r.iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

/// Lift `h = g0 h0 (mod p)` with `g0`, `h0` monic and coprime to a
/// factorisation modulo `p^k`.
fn hensel_two(f: &Fp, h: &[BigInt], g0: &UPoly<u64>, h0: &UPoly<u64>, k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = g0.xgcd(f, h0);
    debug_assert!(one.is_one(f));
    let p = BigInt::from(f.p);
    let mut g = from_fp(g0);
    let mut hh = from_fp(h0);
    let mut pj = p.clone();
    for _ in 1..k {
        let prod = zmul(&g, &hh);
        let diff: ZPoly = (0..h.len())
            .map(|i| &h[i] - prod.get(i).cloned().unwrap_or_default())
            .collect();
        if diff.iter().all(Zero::is_zero) {
            break;
        }
        let e: ZPoly = diff.iter().map(|x| x / &pj).collect();
        let e = to_fp(f, &e);
        let (q, r) = e.mul(f, &t).divrem(f, g0);
        let dh = e.mul(f, &s).add(f, &q.mul(f, h0));
        g = zadd(&g, &zscale(&from_fp(&r), &pj));
        hh = zadd(&hh, &zscale(&from_fp(&dh), &pj));
        pj *= &p;
    }
    (g, hh)
}

fn hensel_multi(f: &Fp, h: &[BigInt], factors: &[UPoly<u64>], k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![h.to_vec()];
    }
    let rest = factors[1..].iter().fold(UPoly::one(f), |acc, x| acc.mul(f, x));
    let (g, r) = hensel_two(f, h, &factors[0], &rest, k);
    let mut out = vec![g];
    out.extend(hensel_multi(f, &r, &factors[1..], k));
    out
}

/// Irreducible factors over Z of a monic square-free integer polynomial
/// (coefficients from the constant term upwards).
pub fn factor_monic_squarefree_z(h: &[BigInt]) -> Vec<ZPoly> {
    let n = h.len() - 1;
    if n <= 1 {
        return vec![h.to_vec()];
    }
    let deriv: ZPoly = h.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(Fp, Vec<UPoly<u64>>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 6 {
        if is_prime_u64(p) && !(&h[n] % p).is_zero() {
            let f = Fp::new(p);
            let hp = to_fp(&f, h);
            if hp.deg() == n && hp.gcd(&f, &to_fp(&f, &deriv)).is_one(&f) {
                tried += 1;
                let fs: Vec<UPoly<u64>> = factor_fp(&f, &hp, &mut rng).into_iter().map(|(g, _)| g).collect();
                if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
                    best = Some((f, fs));
                }
                if best.as_ref().unwrap().1.len() == 1 {
                    break;
                }
            }
        }
        p += 2;
    }
    let (f, local) = best.expect("no good prime");
    if local.len() == 1 {
        return vec![h.to_vec()];
    }
    let norm1: BigInt = h.iter().map(|x| x.abs()).sum();
    let bound = (BigInt::one() << n) * norm1 * 2u32 + 1u32;
    let pb = BigInt::from(f.p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_multi(&f, h, &local, k);
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut target = h.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = false;
        for subset in subsets(&remaining, s) {
            let mut g = vec![BigInt::one()];
            for &i in &subset {
                g = symmetric_mod(&zmul(&g, &lifted[i]), &pk);
            }
            if let Some(q) = zdiv_monic(&target, &g) {
                out.push(g);
                target = q;
                remaining.retain(|i| !subset.contains(i));
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if target.len() > 1 {
        out.push(target);
    }
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(&QQ, c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn swinnerton_dyer_style_split() {
        // t^4 - 10 t^2 + 1 is irreducible but splits modulo every prime
        assert!(is_irreducible_q(&qp(&[1, 0, -10, 0, 1])));
        // (t^2 + t + 1)(t^2 - t + 1) = t^4 + t^2 + 1
        let fs = factor_q(&qp(&[1, 0, 1, 0, 1]));
        assert_eq!(fs, vec![(qp(&[1, -1, 1]), 1), (qp(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn rational_coefficients_and_multiplicity() {
        // (t - 1/2)^2 (t^2 - 2)
        let a = QPoly::from_coeffs(&QQ, vec![BigRational::new((-1).into(), 2.into()), BigRational::one()]);
        let p = a.mul(&QQ, &a).mul(&QQ, &qp(&[-2, 0, 1]));
        let fs = factor_q(&p);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], (a, 2));
        assert_eq!(fs[1], (qp(&[-2, 0, 1]), 1));
    }

    #[test]
    fn cyclotomic_product() {
        // t^12 - 1 has six cyclotomic factors
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let fs = factor_q(&qp(&c));
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
    }
}
