//! Floating-point embeddings of number fields. Only used to *find*
//! candidates (roots of unity, relations, roots); every candidate is checked
//! with exact arithmetic afterwards.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
#[allow(unused_imports)] // float methods come from std in tests
use num_traits::Float;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore};

use crate::arith::QQ;
use crate::error::{internal, Result};
use crate::fieldalg::FieldAlgebra;
use crate::linalg;

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Roots of a monic polynomial (coefficients low to high, leading one
/// omitted or included) by Aberth iteration followed by Newton polishing.
pub fn poly_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last() == Some(&0.0) {
        c.pop();
    }
    let n = c.len() - 1;
    let lead = c[n];
    let c: Vec<f64> = c.iter().map(|x| x / lead).collect();
    if n == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(1.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + c[k];
        }
        (p, dp)
    };
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = 2.0 * core::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(0.5 * bound, t)
        })
        .collect();
    for _ in 0..800 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*zi);
            if dp.norm() > 0.0 {
                *zi -= p / dp;
            }
        }
    }
    z
}

/// Solves `x A = b` for a square real matrix by Gaussian elimination.
pub fn solve_real_left(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = a.len();
    // transpose so that we solve A^T x = b
    let mut m: Vec<Vec<f64>> = (0..n).map(|i| {
        let mut row: Vec<f64> = (0..n).map(|j| a[j][i]).collect();
        row.push(b[i]);
        row
    }).collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap_or(core::cmp::Ordering::Equal))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        for i in 0..n {
            if i != col {
                let fct = m[i][col] / m[col][col];
                if fct != 0.0 {
                    for j in col..=n {
                        m[i][j] -= fct * m[col][j];
                    }
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n] / m[i][i]).collect())
}

/// The archimedean embeddings of a number field given as a
/// finite-dimensional algebra over Q.
#[derive(Clone, Debug)]
pub struct Embeddings {
    pub r1: usize,
    pub r2: usize,
    /// Images of the primitive element: real ones first (descending), then one from
    /// each complex-conjugate pair (positive imaginary part).
    roots: Vec<Complex64>,
    /// `v -> ` coordinates in the power basis of the primitive element.
    to_power: Vec<Vec<BigRational>>,
}

impl Embeddings {
    /// Uses `theta`, which must generate the field.
    pub fn new(field: &FieldAlgebra<QQ>, theta: &[BigRational]) -> Result<Self> {
        let d = field.dim();
        let mu = field.minpoly(theta);
        if mu.deg() != d {
            return internal("element does not generate the field");
        }
        let mut powers = Vec::with_capacity(d);
        let mut p = field.one();
        for _ in 0..d {
            powers.push(p.clone());
            p = field.mul(&p, theta);
        }
        let Some(to_power) = linalg::inverse(&QQ, &powers) else {
            return internal("power basis is singular");
        };
        let coeffs: Vec<f64> = mu.c.iter().map(to_f64).collect();
        let mut real = Vec::new();
        let mut cplx = Vec::new();
        for z in poly_roots(&coeffs) {
            if z.im.abs() <= 1e-7 * (1.0 + z.norm()) {
                real.push(Complex64::new(z.re, 0.0));
            } else if z.im > 0.0 {
                cplx.push(z);
            }
        }
        if real.len() + 2 * cplx.len() != d {
            return internal("root classification failed");
        }
        real.sort_by(|a, b| b.re.partial_cmp(&a.re).unwrap_or(core::cmp::Ordering::Equal));
        let (r1, r2) = (real.len(), cplx.len());
        real.extend(cplx);
        Ok(Embeddings { r1, r2, roots: real, to_power })
    }

    /// Picks a primitive element: basis vectors first, then random small
    /// combinations.
    pub fn for_field(field: &FieldAlgebra<QQ>, rng: &mut dyn RngCore) -> Result<Self> {
        let d = field.dim();
        for i in 0..d {
            let b = field.basis(i);
            if field.minpoly(&b).deg() == d {
                return Self::new(field, &b);
            }
        }
        for _ in 0..200 {
            let v: Vec<BigRational> = (0..d).map(|_| BigRational::from_integer(rng.gen_range(-4i64..=4).into())).collect();
            if field.minpoly(&v).deg() == d {
                return Self::new(field, &v);
            }
        }
        internal("no primitive element found")
    }

    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// `sigma_j(v)` for each embedding.
    pub fn embed(&self, v: &[BigRational]) -> Vec<Complex64> {
        let y = linalg::vec_mat(&QQ, v, &self.to_power, self.to_power.len());
        let yf: Vec<f64> = y.iter().map(to_f64).collect();
        self.roots
            .iter()
            .map(|&a| {
                let mut acc = Complex64::new(0.0, 0.0);
                for c in yf.iter().rev() {
                    acc = acc * a + c;
                }
                acc
            })
            .collect()
    }

    /// `log |sigma_j(v)|`, complex places counted once.
    pub fn log_vector(&self, v: &[BigRational]) -> Vec<f64> {
        self.embed(v).iter().map(|z| z.norm().ln()).collect()
    }

    /// Real coordinates `(sigma_1, ..., sigma_r1, Re tau_1, Im tau_1, ...)`.
    pub fn real_vector(&self, v: &[BigRational]) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.r1 + 2 * self.r2);
        for (j, z) in self.embed(v).into_iter().enumerate() {
            out.push(z.re);
            if j >= self.r1 {
                out.push(z.im);
            }
        }
        out
    }
}

/// `lcm` of all `m` with `phi(m) <= d`: every root of unity in a field of
/// degree `d` has order dividing it.
pub fn root_of_unity_exponent(d: usize) -> u64 {
    let mut l = 1u64;
    for m in 1..=(2 * d * d + 6) as u64 {
        if crate::arith::euler_phi(m) as usize <= d {
            l = num_integer::lcm(l, m);
        }
    }
    l
}
