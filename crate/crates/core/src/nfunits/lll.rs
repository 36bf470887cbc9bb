//! Floating-point LLL reduction of row bases with integer entries.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // float methods come from std in tests
use num_traits::Float;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram_schmidt(b: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>, Vec<f64>) {
    let n = b.len();
    let mut bs: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut mu = vec![vec![0.0; n]; n];
    let mut norms = vec![0.0; n];
    for i in 0..n {
        let mut v = b[i].clone();
        for j in 0..i {
            mu[i][j] = if norms[j] > 0.0 { dot(&b[i], &bs[j]) / norms[j] } else { 0.0 };
            for (x, y) in v.iter_mut().zip(&bs[j]) {
                *x -= mu[i][j] * y;
            }
        }
        norms[i] = dot(&v, &v);
        bs.push(v);
    }
    (bs, mu, norms)
}

/// LLL with `delta = 0.99`. Rows must have integral entries that fit
/// exactly into an `f64`; the result again has integral entries.
pub fn lll_reduce(mut b: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    let delta = 0.99;
    let (_, mut mu, mut norms) = gram_schmidt(&b);
    let mut k = 1;
    let mut guard = 0usize;
    while k < n && guard < 100_000 {
        guard += 1;
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if q != 0.0 {
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= q * y;
                }
                for l in 0..=j {
                    let m = if l == j { 1.0 } else { mu[j][l] };
                    mu[k][l] -= q * m;
                }
            }
        }
        if norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            let gs = gram_schmidt(&b);
            mu = gs.1;
            norms = gs.2;
            k = (k - 1).max(1);
        }
    }
    b
}
