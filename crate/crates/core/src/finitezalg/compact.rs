use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExplicitAlgebra;
use crate::intlat::{snf, solve_left, IntMat, ZVec};

/// The additive group of an algebra in Smith coordinates:
/// `R ≅ Z/d_1 ⊕ ... ⊕ Z/d_k` (with `d_i = 0` meaning a free summand), and
/// multiplication transported to those coordinates.
#[derive(Clone, Debug)]
pub struct CompactForm {
    pub moduli: Vec<BigInt>,
    to: IntMat,
    from: Vec<ZVec>,
    pub table: Vec<Vec<ZVec>>,
    pub one: ZVec,
}

impl CompactForm {
    pub fn new(alg: &ExplicitAlgebra) -> Self {
        let n = alg.dim();
        let syz = alg.syzygies();
        let (v, diag) = if syz.is_zero() {
            (IntMat::identity(n), Vec::new())
        } else {
            let s = snf(&syz.matrix());
            (s.v, s.diag)
        };
        let r = diag.len();
        let mut keep = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..n {
            if i < r {
                if !diag[i].is_one() {
                    keep.push(i);
                    moduli.push(diag[i].clone());
                }
            } else {
                keep.push(i);
                moduli.push(BigInt::zero());
            }
        }
        let to = IntMat::new(keep.len(), v.rows.iter().map(|row| keep.iter().map(|&j| row[j].clone()).collect()).collect());
        let from: Vec<ZVec> = keep
            .iter()
            .map(|&j| {
                let mut e = vec![BigInt::zero(); n];
                e[j] = BigInt::one();
                solve_left(&v, &e).expect("unimodular transform")
            })
            .collect();
        let mut cf = CompactForm { moduli, to, from, table: Vec::new(), one: Vec::new() };
        let k = cf.moduli.len();
        let mut table = vec![vec![Vec::new(); k]; k];
        for a in 0..k {
            for b in a..k {
                let p = cf.to_compact(&alg.mul(&cf.from[a], &cf.from[b]));
                table[b][a] = p.clone();
                table[a][b] = p;
            }
        }
        cf.table = table;
        cf.one = cf.to_compact(&alg.one());
        cf
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|d| !d.is_zero())
    }

    /// Number of elements, or `None` if infinite.
    pub fn cardinality(&self) -> Option<BigInt> {
        if self.is_finite() {
            Some(self.moduli.iter().product())
        } else {
            None
        }
    }

    pub fn reduce(&self, y: &[BigInt]) -> ZVec {
        y.iter()
            .zip(&self.moduli)
            .map(|(x, d)| if d.is_zero() { x.clone() } else { x.mod_floor(d) })
            .collect()
    }

    pub fn to_compact(&self, v: &[BigInt]) -> ZVec {
        self.reduce(&self.to.left_mul(v))
    }

    pub fn from_compact(&self, y: &[BigInt]) -> ZVec {
        let n = self.from.first().map_or(0, |r| r.len());
        let mut out = vec![BigInt::zero(); n];
        for (c, row) in y.iter().zip(&self.from) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        let k = self.dim();
        let mut out = vec![BigInt::zero(); k];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.table[i][j]) {
                    *o += &xy * c;
                }
            }
        }
        self.reduce(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::algebra;
    use super::*;

    #[test]
    fn compact_coordinates_round_trip() {
        let a = algebra(&["x^2+x+1", "y^2+y+1", "8"], &["x", "y"]);
        let c = a.compact();
        assert_eq!(c.cardinality(), Some(BigInt::from(4096)));
        let x = a.var_image(0).clone();
        let y = a.var_image(1).clone();
        let xy = a.mul(&x, &y);
        let cx = c.to_compact(&x);
        let cy = c.to_compact(&y);
        assert_eq!(c.mul(&cx, &cy), c.to_compact(&xy));
        assert!(a.eq(&c.from_compact(&cx), &x));
        let t = algebra(&["x^3", "6*x^2", "y^2+y+1"], &["x", "y"]).compact();
        assert_eq!(t.moduli.iter().filter(|d| d.is_zero()).count(), 4);
        assert_eq!(t.moduli.len(), 6);
    }
}
