//! Dense linear algebra over a field.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Field;

pub type Mat<E> = Vec<Vec<E>>;

pub fn zeros<F: Field>(f: &F, r: usize, c: usize) -> Mat<F::El> {
    vec![vec![f.zero(); c]; r]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::El> {
    let mut m = zeros(f, n, n);
    for (i, r) in m.iter_mut().enumerate() {
        r[i] = f.one();
    }
    m
}

pub fn transpose<E: Clone>(m: &[Vec<E>], ncols: usize) -> Mat<E> {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &[Vec<F::El>], b: &[Vec<F::El>], bcols: usize) -> Mat<F::El> {
    a.iter()
        .map(|r| {
            let mut out = vec![f.zero(); bcols];
            for (x, br) in r.iter().zip(b) {
                if f.is_zero(x) {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(br) {
                    *o = f.add(o, &f.mul(x, y));
                }
            }
            out
        })
        .collect()
}

/// `M v` for a column vector `v`.
pub fn mat_vec<F: Field>(f: &F, m: &[Vec<F::El>], v: &[F::El]) -> Vec<F::El> {
    m.iter().map(|r| dot(f, r, v)).collect()
}

/// `x M` for a row vector `x`.
pub fn vec_mat<F: Field>(f: &F, x: &[F::El], m: &[Vec<F::El>], ncols: usize) -> Vec<F::El> {
    let mut out = vec![f.zero(); ncols];
    for (a, r) in x.iter().zip(m) {
        if f.is_zero(a) {
            continue;
        }
        for (o, y) in out.iter_mut().zip(r) {
            *o = f.add(o, &f.mul(a, y));
        }
    }
    out
}

pub fn dot<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> F::El {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
}

pub fn axpy<F: Field>(f: &F, dst: &mut [F::El], c: &F::El, src: &[F::El]) {
    // dst += c * src
    if f.is_zero(c) {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !f.is_zero(s) {
            *d = f.add(d, &f.mul(c, s));
        }
    }
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::El]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

/// Reduced row echelon form in place; zero rows are dropped and the pivot
/// columns returned.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::El>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..m.len() {
            if i != r && !f.is_zero(&m[i][c]) {
                let c0 = f.neg(&m[i][c]);
                let (pivot_row, row) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                axpy(f, row, &c0, pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::El>], ncols: usize) -> usize {
    let mut a = m.to_vec();
    rref(f, &mut a, ncols).len()
}

/// Basis of `{v : M v = 0}`.
pub fn right_kernel<F: Field>(f: &F, m: &[Vec<F::El>], ncols: usize) -> Mat<F::El> {
    let mut a = m.to_vec();
    let pivots = rref(f, &mut a, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (row, &pc) in a.iter().zip(&pivots) {
            v[pc] = f.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

/// Basis of `{x : x M = 0}`.
pub fn left_kernel<F: Field>(f: &F, m: &[Vec<F::El>], ncols: usize) -> Mat<F::El> {
    right_kernel(f, &transpose(m, ncols), m.len())
}

/// Some `x` with `M x = b`.
pub fn solve_right<F: Field>(f: &F, m: &[Vec<F::El>], ncols: usize, b: &[F::El]) -> Option<Vec<F::El>> {
    let mut aug: Mat<F::El> = m.iter().zip(b).map(|(r, x)| {
        let mut r = r.clone();
        r.push(x.clone());
        r
    }).collect();
    let pivots = rref(f, &mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![f.zero(); ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Some `x` with `x B = target`.
pub fn solve_left<F: Field>(f: &F, b: &[Vec<F::El>], ncols: usize, target: &[F::El]) -> Option<Vec<F::El>> {
    solve_right(f, &transpose(b, ncols), b.len(), target)
}

pub fn inverse<F: Field>(f: &F, m: &[Vec<F::El>]) -> Option<Mat<F::El>> {
    let n = m.len();
    let mut aug: Mat<F::El> = m.iter().enumerate().map(|(i, r)| {
        let mut r = r.clone();
        r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
        r
    }).collect();
    let pivots = rref(f, &mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A subspace of `F^n` kept in reduced echelon form. Its non-pivot
/// coordinates give a canonical complement: [`Subspace::quotient_coords`]
/// maps `F^n` onto `F^n / W` with those coordinates.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    pub dim: usize,
    pub rows: Mat<F::El>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(f: &F, dim: usize, gens: Mat<F::El>) -> Self {
        let mut rows = gens;
        let pivots = rref(f, &mut rows, dim);
        Subspace { dim, rows, pivots }
    }
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn reduce(&self, f: &F, v: &[F::El]) -> Vec<F::El> {
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&w[c]) {
                let c0 = f.neg(&w[c]);
                axpy(f, &mut w, &c0, row);
            }
        }
        w
    }
    pub fn contains(&self, f: &F, v: &[F::El]) -> bool {
        is_zero_vec(f, &self.reduce(f, v))
    }
    pub fn complement(&self) -> Vec<usize> {
        (0..self.dim).filter(|c| !self.pivots.contains(c)).collect()
    }
    pub fn quotient_coords(&self, f: &F, v: &[F::El]) -> Vec<F::El> {
        let w = self.reduce(f, v);
        self.complement().into_iter().map(|c| w[c].clone()).collect()
    }
    pub fn sum(&self, f: &F, other: &Subspace<F>) -> Subspace<F> {
        let mut gens = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        Subspace::new(f, self.dim, gens)
    }
    pub fn intersect(&self, f: &F, other: &Subspace<F>) -> Subspace<F> {
        let k = self.rank();
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        let ker = left_kernel(f, &stacked, self.dim);
        let gens = ker.iter().map(|z| vec_mat(f, &z[..k], &self.rows, self.dim)).collect();
        Subspace::new(f, self.dim, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fp, QQ};
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Mat<BigRational> {
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
    }

    #[test]
    fn kernel_inverse_solve() {
        let f = QQ;
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = right_kernel(&f, &m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&f, &mat_vec(&f, &m, v)));
        }
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(mat_mul(&f, &a, &inv, 2), identity(&f, 2));
        let x = solve_right(&f, &a, 2, &q(&[&[3, 2]])[0]).unwrap();
        assert_eq!(x, q(&[&[1, 1]])[0]);
    }

    #[test]
    fn subspace_ops_mod_p() {
        let f = Fp::new(3);
        let a = Subspace::new(&f, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::new(&f, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.intersect(&f, &b).rank(), 1);
        assert_eq!(a.sum(&f, &b).rank(), 3);
        assert_eq!(a.quotient_coords(&f, &[2, 1, 2]), vec![2]);
    }
}
