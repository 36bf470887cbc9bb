//! Integer matrices and lattices: Hermite and Smith normal forms, kernels,
//! membership, intersection and linear systems over Z and Z/m.

mod lattice;

pub use lattice::*;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::xgcd;

pub type ZVec = Vec<BigInt>;

/// A dense integer matrix stored by rows. `ncols` is kept explicitly so
/// that matrices without rows still know their width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    pub ncols: usize,
    pub rows: Vec<ZVec>,
}

impl IntMat {
    pub fn new(ncols: usize, rows: Vec<ZVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        IntMat { ncols, rows }
    }
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMat { ncols, rows: vec![vec![BigInt::zero(); ncols]; nrows] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        IntMat::new(ncols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.ncols, other.nrows());
        let mut out = IntMat::zeros(self.nrows(), other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (k, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }
    /// Row vector times matrix.
    pub fn left_mul(&self, x: &[BigInt]) -> ZVec {
        let mut out = vec![BigInt::zero(); self.ncols];
        for (a, r) in x.iter().zip(&self.rows) {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(r) {
                *o += a * b;
            }
        }
        out
    }
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }
    /// Determinant of a square matrix by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.nrows();
        assert_eq!(n, self.ncols);
        let mut m = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &m[n - 1][n - 1]
    }
}

pub(crate) fn row_axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    // dst -= q * src
    if q.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn combine_rows(rows: &mut [ZVec], r: usize, i: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
    // (row_r, row_i) <- (s row_r + t row_i, u row_r + v row_i)
    let n = rows[r].len();
    for k in 0..n {
        let (a, b) = (&rows[r][k], &rows[i][k]);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let na = s * a + t * b;
        let nb = u * a + v * b;
        rows[r][k] = na;
        rows[i][k] = nb;
    }
}

/// Row-style Hermite normal form `U A = H`.
///
/// `H` is in echelon form with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`. The first `rank` rows of `H` are nonzero; the
/// remaining rows of `U` span the left kernel of `A`.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMat,
    pub u: Option<IntMat>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn hnf_full(a: &IntMat, track: bool) -> Hnf {
    let m = a.nrows();
    let n = a.ncols;
    let mut h = a.rows.clone();
    let mut u = if track { Some(IntMat::identity(m).rows) } else { None };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h[i][c].is_zero() {
                continue;
            }
            if h[r][c].is_zero() {
                h.swap(r, i);
                if let Some(u) = u.as_mut() {
                    u.swap(r, i);
                }
                continue;
            }
            let (a0, b0) = (h[r][c].clone(), h[i][c].clone());
            if (&b0 % &a0).is_zero() {
                let q = &b0 / &a0;
                let (top, bottom) = h.split_at_mut(i);
                row_axpy(&mut bottom[0], &q, &top[r]);
                if let Some(u) = u.as_mut() {
                    let (top, bottom) = u.split_at_mut(i);
                    row_axpy(&mut bottom[0], &q, &top[r]);
                }
            } else {
                let (g, s, t) = xgcd(&a0, &b0);
                let uu = -(&b0 / &g);
                let vv = &a0 / &g;
                combine_rows(&mut h, r, i, &s, &t, &uu, &vv);
                if let Some(u) = u.as_mut() {
                    combine_rows(u, r, i, &s, &t, &uu, &vv);
                }
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_mut() {
                for x in u[r].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        for k in 0..r {
            let q = h[k][c].div_floor(&h[r][c]);
            if q.is_zero() {
                continue;
            }
            let (top, bottom) = h.split_at_mut(r);
            row_axpy(&mut top[k], &q, &bottom[0]);
            if let Some(u) = u.as_mut() {
                let (top, bottom) = u.split_at_mut(r);
                row_axpy(&mut top[k], &q, &bottom[0]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h: IntMat::new(n, h), u: u.map(|rows| IntMat::new(m, rows)), rank: r, pivots }
}

/// Nonzero rows of the Hermite normal form.
pub fn hnf(a: &IntMat) -> IntMat {
    let mut res = hnf_full(a, false);
    res.h.rows.truncate(res.rank);
    res.h
}

/// Hermite normal form together with the unimodular transform `U`.
pub fn hnf_with_transform(a: &IntMat) -> (IntMat, IntMat) {
    let res = hnf_full(a, true);
    (res.h, res.u.unwrap())
}

/// Smith normal form `U A V = S` with `U`, `V` unimodular, `S` diagonal,
/// non-negative, and each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMat,
    pub v: IntMat,
    pub s: IntMat,
    /// The `min(rows, cols)` diagonal entries of `S`.
    pub diag: Vec<BigInt>,
}

impl Snf {
    /// Diagonal entries greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

fn swap_cols(m: &mut [ZVec], a: usize, b: usize) {
    for r in m.iter_mut() {
        r.swap(a, b);
    }
}

fn col_axpy(m: &mut [ZVec], dst: usize, q: &BigInt, src: usize) {
    for r in m.iter_mut() {
        if !r[src].is_zero() {
            let t = q * &r[src];
            r[dst] -= t;
        }
    }
}

pub fn snf(a: &IntMat) -> Snf {
    let m = a.nrows();
    let n = a.ncols;
    let mut s = a.rows.clone();
    let mut u = IntMat::identity(m).rows;
    let mut v = IntMat::identity(n).rows;
    let k = m.min(n);
    'outer: for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !s[i][j].is_zero() && best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break 'outer };
            s.swap(t, bi);
            u.swap(t, bi);
            swap_cols(&mut s, t, bj);
            swap_cols(&mut v, t, bj);
            let mut clean = true;
            for i in t + 1..m {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = &s[i][t] / &s[t][t];
                let (top, bottom) = s.split_at_mut(i);
                row_axpy(&mut bottom[0], &q, &top[t]);
                let (top, bottom) = u.split_at_mut(i);
                row_axpy(&mut bottom[0], &q, &top[t]);
                if !s[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = &s[t][j] / &s[t][t];
                col_axpy(&mut s, j, &q, t);
                col_axpy(&mut v, j, &q, t);
                if !s[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = s[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&s[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let one = -BigInt::one();
                    let (top, bottom) = s.split_at_mut(i);
                    row_axpy(&mut top[t], &one, &bottom[0]);
                    let (top, bottom) = u.split_at_mut(i);
                    row_axpy(&mut top[t], &one, &bottom[0]);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            for x in s[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let diag = (0..k).map(|i| s[i][i].clone()).collect();
    Snf { u: IntMat::new(m, u), v: IntMat::new(n, v), s: IntMat::new(n, s), diag }
}

/// Basis (in Hermite form) of `{v in Z^n : A v = 0}`.
pub fn int_kernel(a: &IntMat) -> IntMat {
    left_kernel(&a.transpose())
}

/// Basis (in Hermite form) of `{x in Z^m : x A = 0}`.
pub fn left_kernel(a: &IntMat) -> IntMat {
    let m = a.nrows();
    let res = hnf_full(a, true);
    let u = res.u.unwrap();
    let rows: Vec<ZVec> = u.rows.into_iter().skip(res.rank).collect();
    hnf(&IntMat::new(m, rows))
}

/// Some `x` with `x B = target`, if the system is solvable over Z.
pub fn solve_left(b: &IntMat, target: &[BigInt]) -> Option<ZVec> {
    assert_eq!(b.ncols, target.len());
    let res = hnf_full(b, true);
    let h = &res.h;
    let mut y = vec![BigInt::zero(); b.nrows()];
    let mut rest: ZVec = target.to_vec();
    for (i, &c) in res.pivots.iter().enumerate() {
        let (q, r) = rest[c].div_mod_floor(&h.rows[i][c]);
        if !r.is_zero() {
            return None;
        }
        row_axpy(&mut rest, &q, &h.rows[i]);
        y[i] = q;
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(res.u.unwrap().left_mul(&y))
}

/// Solutions of `A y = b (mod m)` for `y in Z^c`: a particular solution
/// and the lattice of homogeneous solutions (which contains `m Z^c`).
pub fn solve_linear_mod(a: &IntMat, b: &[BigInt], m: &BigInt) -> Option<(ZVec, IntegerLattice)> {
    let r = a.nrows();
    let c = a.ncols;
    assert_eq!(b.len(), r);
    let cols = a.transpose();
    let homogeneous = IntegerLattice::preimage(&cols.rows, r, &IntegerLattice::scaled_identity(r, m));
    let mut stacked = cols.rows.clone();
    stacked.extend(IntMat::identity(r).rows.into_iter().map(|row| row.into_iter().map(|x| x * m).collect()));
    let sol = solve_left(&IntMat::new(r, stacked), b)?;
    Some((sol[..c].to_vec(), homogeneous))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64(rows)
    }

    #[test]
    fn hnf_worked_example() {
        let h = hnf(&m(&[&[2, 0, 2], &[0, 2, 0], &[-2, 0, 2]]));
        assert_eq!(h, m(&[&[2, 0, 2], &[0, 2, 0], &[0, 0, 4]]));
    }

    #[test]
    fn snf_of_diagonal() {
        let s = snf(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.u.mul(&m(&[&[2, 0], &[0, 3]])).mul(&s.v), s.s);
    }

    #[test]
    fn snf_rank_deficient() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = snf(&a);
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.s);
        assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let k = int_kernel(&a);
        assert_eq!(k, m(&[&[1, -2, 1]]));
        let x = solve_left(&m(&[&[2, 0], &[0, 3]]), &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(x, vec![BigInt::from(2), BigInt::from(3)]);
        assert!(solve_left(&m(&[&[2, 0], &[0, 3]]), &[BigInt::from(1), BigInt::from(0)]).is_none());
    }

    #[test]
    fn linear_congruences() {
        // x + y = 1 mod 2 with the three h-vectors of the mod 8 example
        let a = m(&[&[0, 1, 1], &[1, 0, 1]]);
        let (sol, hom) = solve_linear_mod(&a, &[BigInt::from(1), BigInt::from(0)], &BigInt::from(2)).unwrap();
        assert!(hom.contains(&[BigInt::from(1), BigInt::from(1), BigInt::from(1)]));
        let prod = a.mul(&IntMat::new(1, sol.iter().map(|x| vec![x.clone()]).collect()));
        assert!(prod.rows[0][0].is_odd() && prod.rows[1][0].is_even());
        assert_eq!(det_of(&hom), BigInt::from(4));
    }

    fn det_of(l: &IntegerLattice) -> BigInt {
        l.matrix().det().abs()
    }

    #[test]
    fn determinant() {
        assert_eq!(m(&[&[2, 1], &[1, 3]]).det(), BigInt::from(5));
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 7]]).det(), BigInt::from(-7));
    }
}
