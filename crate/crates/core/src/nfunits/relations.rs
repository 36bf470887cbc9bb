//! Multiplicative relations between units of a number field.
//!
//! Relations modulo torsion are found by LLL on scaled log embeddings and
//! each candidate is checked exactly. The torsion relations among the
//! resulting roots of unity come from a finite closure.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
#[allow(unused_imports)] // float methods come from std in tests
use num_traits::Float;
use rand::RngCore;

use super::embed::{root_of_unity_exponent, Embeddings};
use super::lll::lll_reduce;
use crate::arith::QQ;
use crate::error::{Error, Result};
use crate::fieldalg::FieldAlgebra;
use crate::intlat::{IntMat, IntegerLattice, ZVec};
use crate::oracle::closure_relations;

/// The exponent lattice of a tuple of field units.
#[derive(Clone, Debug)]
pub struct FieldRelations {
    pub lattice: IntegerLattice,
    /// True when some unit has infinite order, so completeness rests on the
    /// numerical rank of the log embedding.
    pub heuristic: bool,
}

fn is_torsion(field: &FieldAlgebra<QQ>, x: &[BigRational], w: &BigUint) -> bool {
    field.pow(x, w) == field.one()
}

fn same_lattice(a: &IntegerLattice, b: &IntegerLattice) -> bool {
    a.contains_lattice(b) && b.contains_lattice(a)
}

/// Numerical rank of a real matrix (rows).
fn numeric_rank(rows: &[Vec<f64>], tol: f64) -> usize {
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).max_by(|&i, &j| m[i][c].abs().partial_cmp(&m[j][c].abs()).unwrap_or(core::cmp::Ordering::Equal)) else {
            break;
        };
        if m[p][c].abs() <= tol {
            continue;
        }
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            let f = m[i][c] / m[rank][c];
            for j in c..ncols {
                m[i][j] -= f * m[rank][j];
            }
        }
        rank += 1;
    }
    rank
}

/// Relations among `units`, which must be algebraic integers with inverses
/// that are algebraic integers too.
pub fn field_unit_relations(field: &FieldAlgebra<QQ>, units: &[Vec<BigRational>], rng: &mut dyn RngCore) -> Result<FieldRelations> {
    let k = units.len();
    if k == 0 {
        return Ok(FieldRelations { lattice: IntegerLattice::zero(0), heuristic: false });
    }
    let d = field.dim();
    let w = BigUint::from(root_of_unity_exponent(d));
    let mut heuristic = false;
    let modulo_torsion = if units.iter().all(|u| is_torsion(field, u, &w)) {
        IntegerLattice::full(k)
    } else {
        heuristic = true;
        let emb = Embeddings::for_field(field, rng)?;
        let weights: Vec<f64> = (0..emb.count()).map(|j| if j < emb.r1 { 1.0 } else { 2.0 }).collect();
        let logs: Vec<Vec<f64>> = units
            .iter()
            .map(|u| emb.log_vector(u).iter().zip(&weights).map(|(l, w)| l * w).collect())
            .collect();
        let expected = k - numeric_rank(&logs, 1e-8);
        let check = |a: &[BigInt]| -> bool {
            match field.power_product(units, a) {
                Some(x) => is_torsion(field, &x, &w),
                None => false,
            }
        };
        let mut prev: Option<IntegerLattice> = None;
        let mut found = IntegerLattice::zero(k);
        for bits in [16, 24, 32, 40] {
            let c = (1u64 << bits) as f64;
            let rows: Vec<Vec<f64>> = (0..k)
                .map(|i| {
                    let mut row = vec![0.0; k];
                    row[i] = 1.0;
                    row.extend(logs[i].iter().map(|l| (l * c).round()));
                    row
                })
                .collect();
            let mut level = IntegerLattice::zero(k);
            for row in lll_reduce(rows) {
                let a = &row[..k];
                if a.iter().all(|x| *x == 0.0) || a.iter().any(|x| x.abs() > 1e6) {
                    continue;
                }
                let resid: f64 = (0..logs[0].len())
                    .map(|j| (0..k).map(|i| a[i] * logs[i][j]).sum::<f64>().abs())
                    .fold(0.0, f64::max);
                if resid > 1e-4 {
                    continue;
                }
                let av: ZVec = a.iter().map(|x| BigInt::from(*x as i64)).collect();
                if check(&av) {
                    level = level.add_vectors(&[av]);
                }
            }
            found = found.sum(&level).saturation();
            if found.rank() == expected && prev.as_ref().is_some_and(|p| same_lattice(p, &found)) {
                break;
            }
            prev = Some(found.clone());
        }
        found
    };
    // torsion relations among the roots of unity spanned by the basis
    let basis: Vec<ZVec> = modulo_torsion.basis().to_vec();
    if basis.is_empty() {
        return Ok(FieldRelations { lattice: IntegerLattice::zero(k), heuristic });
    }
    let mut zetas = Vec::with_capacity(basis.len());
    for b in &basis {
        zetas.push(field.power_product(units, b).ok_or_else(|| Error::NotAUnit(alloc::string::String::from("field element")))?);
    }
    let (tors, _) = closure_relations(&zetas, field.one(), |a, b| field.mul(a, b), 1 << 20)?;
    let m = IntMat::new(k, basis);
    let lattice = if tors.is_zero() { IntegerLattice::zero(k) } else { tors.map(&m) };
    Ok(FieldRelations { lattice, heuristic })
}
