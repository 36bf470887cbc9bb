use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{strong_groebner, StrongGroebnerBasis};
use crate::arith::{EuclideanRing, ZZ};
use crate::context::Context;
use crate::error::Result;
use crate::poly::{Ideal, Monomial, Polynomial, TermOrdering};

/// The generator `q >= 0` of `I ∩ Z`, read off a strong basis.
pub fn ideal_meet_z(gb: &StrongGroebnerBasis<ZZ>) -> BigInt {
    gb.elements
        .iter()
        .find(|g| g.is_constant())
        .map_or_else(BigInt::zero, |g| g.lc().clone())
}

pub fn ideal_sum<R: EuclideanRing>(a: &Ideal<R>, b: &Ideal<R>) -> Ideal<R> {
    let mut gens = a.generators.clone();
    gens.extend(b.generators.iter().cloned());
    Ideal::new(&a.ring, a.nvars, a.ordering, gens)
}

/// `I ∩ J` via `t I + (1 - t) J` and elimination of `t`.
pub fn ideal_intersection<R: EuclideanRing>(a: &Ideal<R>, b: &Ideal<R>, ctx: &Context) -> Result<Ideal<R>> {
    let n = a.nvars;
    let r = &a.ring;
    let elim = TermOrdering::Elimination(1);
    let map: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(r, n + 1, elim, 0);
    let one_minus_t = Polynomial::constant(r, n + 1, elim, r.one()).sub(&t);
    let mut gens = Vec::new();
    for g in &a.generators {
        gens.push(g.embed(n + 1, &map, elim).mul(&t));
    }
    for g in &b.generators {
        gens.push(g.embed(n + 1, &map, elim).mul(&one_minus_t));
    }
    let gb = strong_groebner(&Ideal::new(r, n + 1, elim, gens), ctx)?;
    let kept = gb
        .elements
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.0[0] == 0))
        .map(|g| {
            let terms = g.into_terms().into_iter().map(|(m, c)| (Monomial(m.0[1..].to_vec()), c)).collect();
            Polynomial::from_terms(r, n, a.ordering, terms)
        })
        .collect();
    Ok(Ideal::new(r, n, a.ordering, kept))
}

/// `I : <c>` for a nonzero integer `c`.
pub fn colon_by_integer(ideal: &Ideal<ZZ>, c: &BigInt, ctx: &Context) -> Result<Ideal<ZZ>> {
    let principal = Ideal::new(
        &ZZ,
        ideal.nvars,
        ideal.ordering,
        vec![Polynomial::constant(&ZZ, ideal.nvars, ideal.ordering, c.clone())],
    );
    let meet = ideal_intersection(ideal, &principal, ctx)?;
    let gens = meet
        .generators
        .iter()
        .map(|g| {
            let terms = g.terms().iter().map(|(m, a)| (m.clone(), a / c)).collect();
            Polynomial::from_terms(&ZZ, ideal.nvars, ideal.ordering, terms)
        })
        .collect();
    Ok(Ideal::new(&ZZ, ideal.nvars, ideal.ordering, gens))
}

/// `I : <c>^∞` together with the least `k` such that `I : c^k` is already
/// the saturation.
pub fn saturate_by_integer(ideal: &Ideal<ZZ>, c: &BigInt, ctx: &Context) -> Result<(StrongGroebnerBasis<ZZ>, u32)> {
    let mut cur = strong_groebner(ideal, ctx)?;
    let mut k = 0;
    loop {
        let next = strong_groebner(&colon_by_integer(&cur.to_ideal(), c, ctx)?, ctx)?;
        if next == cur {
            return Ok((cur, k));
        }
        cur = next;
        k += 1;
    }
}

/// `I Q[x] ∩ Z[x]`, computed as `I : D^∞` for `D` the least common multiple
/// of the leading coefficients of a strong basis.
pub fn contract_from_q(ideal: &Ideal<ZZ>, ctx: &Context) -> Result<StrongGroebnerBasis<ZZ>> {
    let gb = strong_groebner(ideal, ctx)?;
    let d = gb.elements.iter().fold(BigInt::one(), |acc, g| crate::arith::lcm(&acc, g.lc()));
    if d.is_one() || gb.is_unit_ideal() {
        return Ok(gb);
    }
    if gb.elements.iter().any(|g| g.is_constant()) {
        // I contains a nonzero integer, so its rational extension is everything
        let one = Polynomial::constant(&ZZ, ideal.nvars, ideal.ordering, BigInt::one());
        return strong_groebner(&Ideal::new(&ZZ, ideal.nvars, ideal.ordering, vec![one]), ctx);
    }
    Ok(saturate_by_integer(&gb.to_ideal(), &d, ctx)?.0)
}

/// Equality of ideals by comparing reduced strong bases.
pub fn ideals_equal<R: EuclideanRing>(a: &Ideal<R>, b: &Ideal<R>, ctx: &Context) -> Result<bool> {
    Ok(strong_groebner(a, ctx)? == strong_groebner(b, ctx)?)
}

/// `a ⊆ b`.
pub fn ideal_contained<R: EuclideanRing>(a: &Ideal<R>, b: &Ideal<R>, ctx: &Context) -> Result<bool> {
    let gb = strong_groebner(b, ctx)?;
    Ok(a.generators.iter().all(|g| gb.contains(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use alloc::string::{String, ToString};

    fn ideal(gens: &[&str], vars: &[&str]) -> Ideal<ZZ> {
        let n: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let g = gens.iter().map(|s| parse_polynomial(s, &n, 1, 0).unwrap()).collect();
        Ideal::new(&ZZ, n.len(), TermOrdering::DegRevLex, g)
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let ctx = Context::new(0);
        let i = ideal_intersection(&ideal(&["x"], &["x", "y"]), &ideal(&["y"], &["x", "y"]), &ctx).unwrap();
        assert!(ideals_equal(&i, &ideal(&["x*y"], &["x", "y"]), &ctx).unwrap());
        let j = ideal_intersection(&ideal(&["4"], &["x"]), &ideal(&["6", "x"], &["x"]), &ctx).unwrap();
        assert!(ideals_equal(&j, &ideal(&["12", "4*x"], &["x"]), &ctx).unwrap());
    }

    #[test]
    fn colon_and_saturation_by_integers() {
        let ctx = Context::new(0);
        let i = ideal(&["4*x", "x^2"], &["x"]);
        let c = colon_by_integer(&i, &BigInt::from(2), &ctx).unwrap();
        assert!(ideals_equal(&c, &ideal(&["2*x", "x^2"], &["x"]), &ctx).unwrap());
        let (s, k) = saturate_by_integer(&i, &BigInt::from(2), &ctx).unwrap();
        assert!(ideals_equal(&s.to_ideal(), &ideal(&["x"], &["x"]), &ctx).unwrap());
        assert_eq!(k, 2);
    }

    #[test]
    fn contraction_from_the_rationals() {
        let ctx = Context::new(0);
        let gb = contract_from_q(&ideal(&["2*x^2 + 2", "3*x*y"], &["x", "y"]), &ctx).unwrap();
        assert!(ideals_equal(&gb.to_ideal(), &ideal(&["x^2 + 1", "y"], &["x", "y"]), &ctx).unwrap());
    }
}
