use alloc::vec::Vec;

use rand::RngCore;

use crate::arith::Field;
use crate::error::{internal, Result};
use crate::fieldalg::{FieldAlgebra, LinearMap, SplitHelper};
use crate::linalg::{left_kernel, Subspace};

/// One local factor `e A` of a zero-dimensional algebra `A`.
#[derive(Clone, Debug)]
pub struct LocalComponent<F: Field> {
    /// Primitive idempotent of `A` cutting out the factor.
    pub idempotent: Vec<F::El>,
    /// The maximal ideal of `A` belonging to the factor.
    pub maximal_ideal: Subspace<F>,
    pub residue_field: FieldAlgebra<F>,
    /// Projection `A -> A / maximal_ideal`.
    pub residue_map: LinearMap<F>,
    /// Nilpotent elements of `e A`.
    pub nilradical: Subspace<F>,
}

/// Lifts an idempotent modulo a nil ideal by iterating `e -> 3e^2 - 2e^3`.
fn lift_idempotent<F: Field>(a: &FieldAlgebra<F>, mut e: Vec<F::El>) -> Vec<F::El> {
    let f = &a.field;
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    for _ in 0..64 {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return e;
        }
        let e3 = a.mul(&e2, &e);
        e = a.sub(&a.scale(&e2, &three), &a.scale(&e3, &two));
    }
    e
}

/// Local factors of a zero-dimensional algebra over a field.
pub fn zerodim_decompose<F: Field>(a: &FieldAlgebra<F>, rng: &mut dyn RngCore) -> Result<Vec<LocalComponent<F>>>
where
    FieldAlgebra<F>: SplitHelper<F>,
{
    let f = &a.field;
    let nil = a.nilradical();
    let (red, proj) = a.quotient(&nil);
    let mut out = Vec::new();
    for comp in red.split_reduced(rng)? {
        let Some(pre) = proj.lift(f, &comp.idempotent) else {
            return internal("idempotent does not lift");
        };
        let e = lift_idempotent(a, pre);
        let residue_map = proj.then(f, &comp.map);
        let maximal_ideal = Subspace::new(f, a.dim(), left_kernel(f, &residue_map.m, residue_map.out_dim));
        let local_nil = nil.rows.iter().map(|v| a.mul(&e, v)).collect();
        out.push(LocalComponent {
            idempotent: e,
            maximal_ideal,
            residue_field: comp.field,
            residue_map,
            nilradical: Subspace::new(f, a.dim(), local_nil),
        });
    }
    Ok(out)
}
