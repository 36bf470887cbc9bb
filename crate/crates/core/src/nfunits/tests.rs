use super::*;
use crate::decompose::{minimal_primes, Residue};
use crate::testutil::{algebra, el};

fn ctx() -> Context<'static> {
    Context::new(0)
}

/// The order of the single characteristic-zero prime with the given index.
fn order_of(r: &ExplicitAlgebra, pick: impl Fn(&ExplicitAlgebra, &PrimeComponent) -> bool) -> NumberFieldOrder {
    let ps = minimal_primes(r, &ctx()).unwrap();
    let p = ps.iter().find(|p| p.characteristic == 0 && pick(r, p)).expect("prime");
    NumberFieldOrder::from_prime(r, p, &ctx()).unwrap()
}

fn domain(gens: &[&str], vars: &[&str]) -> (ExplicitAlgebra, NumberFieldOrder) {
    let r = algebra(gens, vars);
    let o = order_of(&r, |_, _| true);
    (r, o)
}

#[test]
fn torsion_of_small_orders() {
    let (r, o) = domain(&["y^2+y+1"], &["y"]);
    let (z, w) = torsion_units(&o);
    assert_eq!(w, 6);
    let lifted = o.lift(&z);
    assert!(lifted == el(&r, "y+1") || lifted == el(&r, "-y"));
    let (_, o) = domain(&["y^2+1"], &["y"]);
    assert_eq!(torsion_units(&o).1, 4);
    let (r, o) = domain(&["x"], &["x"]);
    let (z, w) = torsion_units(&o);
    assert_eq!((o.lift(&z), w), (el(&r, "-1"), 2));
    let data = order_units(&o, &ctx()).unwrap();
    assert!(data.fundamental_units.is_empty());
    assert_eq!(data.provenance, Provenance::Exact);
}

#[test]
fn primitive_elements() {
    let r = algebra(&["3*x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"], &["x", "y", "z"]);
    let o = order_of(&r, |_, p| p.degree() == 4);
    assert_eq!(o.minpoly, vec![1, 0, -1, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    assert_eq!(o.signature(), (0, 2));
    let o2 = order_of(&r, |_, p| p.degree() == 2);
    assert_eq!(o2.minpoly, vec![1, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
}

#[test]
fn real_quadratic_units() {
    let (r, o) = domain(&["x^2-2"], &["x"]);
    let data = order_units(&o, &ctx()).unwrap();
    assert_eq!(data.provenance, Provenance::Exact);
    assert_eq!(o.lift(&data.fundamental_units[0]), el(&r, "x+1"));
    let (r, o) = domain(&["x^2-x-1"], &["x"]);
    let eps = o.lift(&order_units(&o, &ctx()).unwrap().fundamental_units[0]);
    assert!(eps == el(&r, "x") || eps == el(&r, "x-1") || eps == el(&r, "-x+1") || eps == el(&r, "-x"));
}

/// Smallest positive `b` with `a^2 - d b^2 = ±1`, up to `limit`.
fn pell_brute(d: i128, limit: i128) -> Option<(i128, i128)> {
    for b in 1..=limit {
        let t = d * b * b;
        let a = (t as f64).sqrt().round() as i128;
        for a in [a - 1, a, a + 1] {
            if a > 0 && (a * a - t).abs() == 1 {
                return Some((a, b));
            }
        }
    }
    None
}

#[test]
fn continued_fraction_matches_exhaustive_search() {
    for d in 2..200i128 {
        let s = (d as f64).sqrt() as i128;
        if s * s == d || (s + 1) * (s + 1) == d {
            continue;
        }
        let g = alloc::format!("x^2-{d}");
        let (r, o) = domain(&[&g], &["x"]);
        let eps = o.lift(&order_units(&o, &ctx()).unwrap().fundamental_units[0]);
        let a: i128 = (&eps[0]).try_into().unwrap_or(i128::MAX);
        let b: i128 = (&eps[1]).try_into().unwrap_or(i128::MAX);
        assert_eq!(r.dim(), 2);
        let limit = b.abs().min(20_000);
        match pell_brute(d, limit) {
            Some(found) => assert_eq!((a.abs(), b.abs()), found, "d = {d}"),
            None => assert!(b.abs() > 20_000, "d = {d}"),
        }
    }
}

#[test]
fn cyclotomic_degree_four_by_search() {
    let r = algebra(&["3*x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"], &["x", "y", "z"]);
    let o = order_of(&r, |_, p| p.degree() == 4);
    let data = order_units(&o, &ctx()).unwrap();
    assert_eq!(data.torsion_order, 12);
    assert_eq!(data.provenance, Provenance::BoundedSearch);
    assert_eq!(data.fundamental_units.len(), 1);
    let u = &data.fundamental_units[0];
    assert!(o.is_unit(u));
    assert!(o.pow(u, &BigInt::from(12)) != Some(o.one()));
}

#[test]
fn pure_cubic() {
    let (r, o) = domain(&["x^3-2"], &["x"]);
    let data = order_units(&o, &ctx()).unwrap();
    let u = o.lift(&data.fundamental_units[0]);
    let candidates = ["x-1", "-x+1", "x^2+x+1", "-x^2-x-1"];
    assert!(candidates.iter().any(|c| el(&r, c) == u), "{}", r.display(&u));
}

#[test]
fn relations_between_field_units() {
    let (r, o) = domain(&["x^2-2"], &["x"]);
    let us: Vec<_> = ["x+1", "2*x+3", "-1"].iter().map(|s| o.to_field(&o.coords(&el(&r, s)))).collect();
    let rel = field_unit_relations(&o.field, &us, &mut ctx().rng(3)).unwrap();
    assert!(rel.heuristic);
    assert_eq!(rel.lattice, IntegerLattice::from_i64(3, &[&[2, -1, 0], &[0, 0, 2]]));
    let (r, o) = domain(&["y^2+y+1"], &["y"]);
    let us: Vec<_> = ["y", "-1"].iter().map(|s| o.to_field(&o.coords(&el(&r, s)))).collect();
    let rel = field_unit_relations(&o.field, &us, &mut ctx().rng(3)).unwrap();
    assert!(!rel.heuristic);
    assert_eq!(rel.lattice, IntegerLattice::from_i64(2, &[&[3, 0], &[0, 2]]));
}

#[test]
fn finite_field_generators() {
    let r = algebra(&["7", "x"], &["x"]);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    let Residue::FiniteField(ff) = &ps[0].residue else { panic!() };
    assert_eq!(finite_field_unit_gen(&r, ff, &ctx()).unwrap(), el(&r, "3"));
    let r = algebra(&["2", "x"], &["x"]);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    let Residue::FiniteField(ff) = &ps[0].residue else { panic!() };
    assert_eq!(finite_field_unit_gen(&r, ff, &ctx()).unwrap(), el(&r, "1"));
    let r = algebra(&["3*x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"], &["x", "y", "z"]);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    let p = ps.iter().find(|p| p.characteristic == 3).unwrap();
    let Residue::FiniteField(ff) = &p.residue else { panic!() };
    let g = finite_field_unit_gen(&r, ff, &ctx()).unwrap();
    let q = ff.order();
    let primes: Vec<BigInt> = factor_integer(&(&q - 1u32)).into_iter().map(|(l, _)| l).collect();
    assert!(is_primitive(&ff.field, &ff.image(&g), &q, &primes));
    assert!(is_primitive(&ff.field, &ff.image(&el(&r, "y+1")), &q, &primes));
}
