use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{hnf_full, left_kernel, row_axpy, IntMat, ZVec};

/// A subgroup of `Z^dim`, stored by its Hermite basis. Two lattices are equal
/// exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<ZVec>,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    pub fn new(dim: usize, gens: Vec<ZVec>) -> Self {
        let res = hnf_full(&IntMat::new(dim, gens), false);
        let mut rows = res.h.rows;
        rows.truncate(res.rank);
        IntegerLattice { dim, basis: rows, pivots: res.pivots }
    }

    pub fn zero(dim: usize) -> Self {
        IntegerLattice { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Self::scaled_identity(dim, &BigInt::one())
    }

    pub fn scaled_identity(dim: usize, m: &BigInt) -> Self {
        if m.is_zero() {
            return Self::zero(dim);
        }
        let mut rows = IntMat::zeros(dim, dim).rows;
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = num_traits::Signed::abs(m);
        }
        IntegerLattice { dim, basis: rows, pivots: (0..dim).collect() }
    }

    pub fn from_i64(dim: usize, gens: &[&[i64]]) -> Self {
        Self::new(dim, gens.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[ZVec] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn matrix(&self) -> IntMat {
        IntMat::new(self.dim, self.basis.clone())
    }
    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Index `[Z^dim : L]`, or `None` for lattices of smaller rank.
    pub fn index(&self) -> Option<BigInt> {
        if !self.is_full_rank() {
            return None;
        }
        Some(self.basis.iter().enumerate().map(|(i, r)| r[i].clone()).product())
    }

    /// The canonical coset representative of `v + L`: entries at pivot
    /// positions lie in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> ZVec {
        let mut w = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let q = w[c].div_floor(&row[c]);
            row_axpy(&mut w, &q, row);
        }
        w
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<ZVec> {
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = w[c].div_mod_floor(&row[c]);
            if !r.is_zero() {
                return None;
            }
            row_axpy(&mut w, &q, row);
            coords.push(q);
        }
        if w.iter().all(Zero::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.basis.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &IntegerLattice) -> IntegerLattice {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::new(self.dim, gens)
    }

    pub fn add_vectors(&self, vs: &[ZVec]) -> IntegerLattice {
        let mut gens = self.basis.clone();
        gens.extend(vs.iter().cloned());
        Self::new(self.dim, gens)
    }

    pub fn intersect(&self, other: &IntegerLattice) -> IntegerLattice {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.dim);
        }
        let k = self.rank();
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let ker = left_kernel(&IntMat::new(self.dim, stacked));
        let b = self.matrix();
        let gens = ker.rows.iter().map(|z| b.left_mul(&z[..k])).collect();
        Self::new(self.dim, gens)
    }

    /// `{y in Z^m : sum_s y_s rows_s in target}` for `m = rows.len()`.
    pub fn preimage(rows: &[ZVec], width: usize, target: &IntegerLattice) -> IntegerLattice {
        let m = rows.len();
        let mut stacked = rows.to_vec();
        stacked.extend(target.basis.iter().cloned());
        let ker = left_kernel(&IntMat::new(width, stacked));
        Self::new(m, ker.rows.into_iter().map(|z| z[..m].to_vec()).collect())
    }

    /// `Q L ∩ Z^dim`.
    pub fn saturation(&self) -> IntegerLattice {
        if self.is_zero() {
            return self.clone();
        }
        let orth = super::int_kernel(&self.matrix());
        if orth.nrows() == 0 {
            return Self::full(self.dim);
        }
        Self::new(self.dim, super::int_kernel(&orth).rows)
    }

    /// Image under `v -> v M` for an integer matrix `M` with `dim` rows.
    pub fn map(&self, m: &IntMat) -> IntegerLattice {
        Self::new(m.ncols, self.basis.iter().map(|r| m.left_mul(r)).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntegerLattice {
        Self::new(self.dim, self.basis.iter().map(|r| r.iter().map(|x| x * k).collect()).collect())
    }

    /// The lattice restricted to the coordinates `keep`, intersected first
    /// with the subspace where every other coordinate vanishes.
    pub fn restrict_to(&self, keep: &[usize]) -> IntegerLattice {
        let drop: Vec<usize> = (0..self.dim).filter(|i| !keep.contains(i)).collect();
        let mut sub = self.clone();
        if !drop.is_empty() {
            let mut gens = Vec::new();
            for i in 0..self.dim {
                if keep.contains(&i) {
                    let mut e = vec![BigInt::zero(); self.dim];
                    e[i] = BigInt::one();
                    gens.push(e);
                }
            }
            sub = self.intersect(&Self::new(self.dim, gens));
        }
        Self::new(keep.len(), sub.basis.iter().map(|r| keep.iter().map(|&i| r[i].clone()).collect()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> ZVec {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn membership_and_reduction() {
        let l = IntegerLattice::from_i64(3, &[&[2, 0, 2], &[0, 2, 0], &[-2, 0, 2]]);
        assert!(l.contains(&v(&[0, 0, 4])));
        assert!(!l.contains(&v(&[0, 0, 2])));
        assert_eq!(l.index(), Some(BigInt::from(16)));
        assert_eq!(l.reduce(&v(&[3, 5, -1])), v(&[1, 1, 1]));
    }

    #[test]
    fn intersection_of_coprime_scalings() {
        let a = IntegerLattice::scaled_identity(2, &BigInt::from(2));
        let b = IntegerLattice::scaled_identity(2, &BigInt::from(3));
        assert_eq!(a.intersect(&b), IntegerLattice::scaled_identity(2, &BigInt::from(6)));
        assert_eq!(a.sum(&b), IntegerLattice::full(2));
    }

    #[test]
    fn saturation_and_preimage() {
        let l = IntegerLattice::from_i64(2, &[&[2, 4]]);
        assert_eq!(l.saturation(), IntegerLattice::from_i64(2, &[&[1, 2]]));
        let target = IntegerLattice::scaled_identity(1, &BigInt::from(4));
        let pre = IntegerLattice::preimage(&[v(&[2]), v(&[1])], 1, &target);
        assert!(pre.contains(&v(&[1, 2])) && pre.contains(&v(&[2, 0])) && !pre.contains(&v(&[1, 0])));
    }

    #[test]
    fn restriction() {
        let l = IntegerLattice::from_i64(3, &[&[1, 1, 0], &[0, 2, 1]]);
        // vectors with third coordinate zero: multiples of (1,1,0)
        assert_eq!(l.restrict_to(&[0, 1]), IntegerLattice::from_i64(2, &[&[1, 1]]));
    }

    proptest! {
        #[test]
        fn hermite_basis_is_canonical(rows in proptest::collection::vec(proptest::collection::vec(-20i64..20, 3), 1..5),
                                      mix in proptest::collection::vec(-3i64..4, 4)) {
            let gens: Vec<ZVec> = rows.iter().map(|r| v(r)).collect();
            let l = IntegerLattice::new(3, gens.clone());
            // adding a combination of generators changes nothing
            let mut comb = v(&[0, 0, 0]);
            for (g, k) in gens.iter().zip(&mix) {
                for (c, x) in comb.iter_mut().zip(g) {
                    *c += x * k;
                }
            }
            let mut more = gens.clone();
            more.push(comb.clone());
            more.reverse();
            prop_assert_eq!(IntegerLattice::new(3, more), l.clone());
            prop_assert!(l.contains(&comb));
            prop_assert_eq!(l.intersect(&l), l.clone());
            prop_assert!(l.reduce(&comb).iter().all(Zero::is_zero));
        }
    }
}
