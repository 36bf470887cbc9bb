use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::{Rng, RngCore};

use super::UPoly;
use crate::arith::{Fp, Ring};

type P = UPoly<u64>;

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients.
pub fn factor_fp(f: &Fp, a: &P, rng: &mut dyn RngCore) -> Vec<(P, usize)> {
    let mut out = Vec::new();
    if a.deg() == 0 {
        return out;
    }
    for (g, m) in squarefree_fp(f, &a.monic(f)) {
        for (h, d) in distinct_degree(f, &g) {
            for fac in equal_degree(f, &h, d, rng) {
                out.push((fac, m));
            }
        }
    }
    out.sort_by(|x, y| (x.0.deg(), &x.0.c).cmp(&(y.0.deg(), &y.0.c)));
    out
}

/// Distinct roots in `F_p`, ascending.
pub fn roots_fp(f: &Fp, a: &P, rng: &mut dyn RngCore) -> Vec<u64> {
    let mut r: Vec<u64> = factor_fp(f, a, rng)
        .into_iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, _)| f.neg(&g.c[0]))
        .collect();
    r.sort_unstable();
    r
}

pub fn is_irreducible_fp(f: &Fp, a: &P, rng: &mut dyn RngCore) -> bool {
    let fs = factor_fp(f, a, rng);
    fs.len() == 1 && fs[0].1 == 1
}

fn pth_root(f: &Fp, a: &P) -> P {
    let p = f.p as usize;
    P::from_coeffs(f, a.c.iter().step_by(p).cloned().collect())
}

fn squarefree_fp(f: &Fp, a: &P) -> Vec<(P, usize)> {
    let mut out = Vec::new();
    let p = f.p as usize;
    let d = a.derivative(f);
    if d.is_zero() {
        if a.deg() == 0 {
            return out;
        }
        for (g, m) in squarefree_fp(f, &pth_root(f, a)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = a.gcd(f, &d);
    let mut w = a.div_exact(f, &c);
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(f, &c);
        let fac = w.div_exact(f, &y);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(f, &w);
        i += 1;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_fp(f, &pth_root(f, &c)) {
            out.push((g, m * p));
        }
    }
    // merge equal factors that arrive through both branches
    let mut merged: Vec<(P, usize)> = Vec::new();
    for (g, m) in out {
        if let Some(e) = merged.iter_mut().find(|(h, _)| *h == g) {
            e.1 += m;
        } else {
            merged.push((g, m));
        }
    }
    merged
}

fn distinct_degree(f: &Fp, a: &P) -> Vec<(P, usize)> {
    let mut out = Vec::new();
    let mut rest = a.clone();
    let x = P::x(f);
    let mut h = x.clone();
    let p = BigUint::from(f.p);
    let mut i = 1;
    while rest.deg() >= 2 * i {
        h = h.pow_mod(f, &p, &rest);
        let g = h.sub(f, &x).gcd(f, &rest);
        if g.deg() > 0 {
            rest = rest.div_exact(f, &g);
            h = h.rem(f, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &Fp, a: &P, d: usize, rng: &mut dyn RngCore) -> Vec<P> {
    if a.deg() == d {
        return vec![a.clone()];
    }
    let n = a.deg();
    loop {
        let r = P::from_coeffs(f, (0..n).map(|_| rng.gen_range(0..f.p)).collect());
        if r.deg() == 0 {
            continue;
        }
        let b = if f.p == 2 {
            // trace map r + r^2 + ... + r^(2^(d-1))
            let mut t = r.rem(f, a);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(f, &t).rem(f, a);
                acc = acc.add(f, &t);
            }
            acc
        } else {
            let e = (BigUint::from(f.p).pow(d as u32) - 1u32) / 2u32;
            r.pow_mod(f, &e, a).sub(f, &P::one(f))
        };
        let g = b.gcd(f, a);
        if g.deg() > 0 && g.deg() < n {
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &a.div_exact(f, &g), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn p(f: &Fp, c: &[u64]) -> P {
        P::from_coeffs(f, c.to_vec())
    }

    #[test]
    fn factors_multiply_back() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for prime in [2u64, 3, 5, 7, 101] {
            let f = Fp::new(prime);
            // (t^2+1)^3 (t+1)^2 t^5 (t^3+t+1)
            let mut a = p(&f, &[1]);
            for _ in 0..3 {
                a = a.mul(&f, &p(&f, &[1, 0, 1]));
            }
            for _ in 0..2 {
                a = a.mul(&f, &p(&f, &[1, 1]));
            }
            for _ in 0..5 {
                a = a.mul(&f, &p(&f, &[0, 1]));
            }
            a = a.mul(&f, &p(&f, &[1, 1, 0, 1]));
            let fs = factor_fp(&f, &a, &mut rng);
            let mut back = p(&f, &[1]);
            for (g, m) in &fs {
                assert!(is_irreducible_fp(&f, g, &mut rng) || g.deg() == 1);
                for _ in 0..*m {
                    back = back.mul(&f, g);
                }
            }
            assert_eq!(back, a, "p = {prime}");
        }
    }

    #[test]
    fn roots_of_cyclotomic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let f = Fp::new(7);
        assert_eq!(roots_fp(&f, &p(&f, &[1, 1, 1]), &mut rng), vec![2, 4]);
        let f = Fp::new(2);
        assert!(roots_fp(&f, &p(&f, &[1, 1, 1]), &mut rng).is_empty());
    }
}
