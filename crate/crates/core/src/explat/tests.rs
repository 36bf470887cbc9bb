use super::*;
use crate::oracle::{brute_explattice, enumerate_ring};
use crate::testutil::{algebra, el};
use rand::Rng;

fn ctx() -> Context<'static> {
    Context::new(0)
}

fn lat(k: usize, rows: &[&[i64]]) -> IntegerLattice {
    IntegerLattice::from_i64(k, rows)
}

fn units(r: &ExplicitAlgebra, s: &[&str]) -> Vec<ZVec> {
    s.iter().map(|x| el(r, x)).collect()
}

#[test]
fn mod_eight_lifting() {
    let r = algebra(&["x^2+x+1", "y^2+y+1", "8"], &["x", "y"]);
    let us = units(&r, &["2*x+1", "4*y+1", "-2*y-1"]);
    let res = explattice(&r, &us, &ctx()).unwrap();
    assert_eq!(res.lattice, lat(3, &[&[0, 2, 0], &[2, 0, 2], &[-2, 0, 2]]));
    assert_eq!(res.completeness, Completeness::Certified);
    let first = res.trace.iter().find(|s| s.label.starts_with("solution space lifting 2^1")).unwrap();
    assert_eq!(first.lattice, lat(3, &[&[0, 1, 0], &[2, 0, 0], &[0, 0, 2]]));
    assert!(verify_relations(&r, &us, &res.lattice).unwrap());
    let t = enumerate_ring(&r).unwrap();
    assert_eq!(brute_explattice(&t, &us).unwrap(), res.lattice);
}

#[test]
fn lifting_step_directly() {
    let r = algebra(&["x^2+x+1", "y^2+y+1", "8"], &["x", "y"]);
    let us = units(&r, &["2*x+1", "4*y+1", "-2*y-1"]);
    let two = BigInt::from(2);
    let (m1, l2) = lift_lattice_step(&r, &two, 1, &IntegerLattice::full(3), &us).unwrap();
    assert_eq!(m1, lat(3, &[&[0, 1, 0], &[2, 0, 0], &[0, 0, 2]]));
    let (_, l3) = lift_lattice_step(&r, &two, 2, &l2, &us).unwrap();
    assert_eq!(l3, lat(3, &[&[0, 2, 0], &[2, 0, 2], &[-2, 0, 2]]));
    // a lattice that is already valid one level up is unchanged
    let (_, again) = lift_lattice_step(&r, &two, 2, &l3, &us).unwrap();
    assert_eq!(again, l3);
}

#[test]
fn nilpotent_example_with_rank() {
    let r = algebra(&["x^2+x+1", "y^2+y+1", "6*z^2", "z^3"], &["x", "y", "z"]);
    let us = units(&r, &["-x*y*z-x*z+1", "y+1", "x*y+x+y+1"]);
    let res = explattice(&r, &us, &ctx()).unwrap();
    let by_label = |l: &str| res.trace.iter().find(|s| s.label == l).unwrap().lattice.clone();
    assert_eq!(by_label("over Q"), lat(3, &[&[0, 6, 0], &[0, 0, 3]]));
    assert_eq!(by_label("modulo 2"), lat(3, &[&[4, 0, 0], &[0, 3, 0], &[0, 0, 3]]));
    assert_eq!(by_label("modulo 3"), lat(3, &[&[3, 0, 0], &[0, 6, 0], &[0, 0, 3]]));
    assert_eq!(res.lattice, lat(3, &[&[0, 6, 0], &[0, 0, 3]]));
    assert_eq!(res.completeness, Completeness::Certified);
}

#[test]
fn finite_field_of_four() {
    let r = algebra(&["z^2+z+1", "2"], &["z"]);
    let res = explattice(&r, &units(&r, &["z+1", "z"]), &ctx()).unwrap();
    assert_eq!(res.lattice, lat(2, &[&[1, 1], &[3, 0]]));
    let ones = explattice(&r, &units(&r, &["1", "1", "1"]), &ctx()).unwrap();
    assert_eq!(ones.lattice, IntegerLattice::full(3));
}

#[test]
fn infinite_order_units() {
    let r = algebra(&["x^2-2"], &["x"]);
    let res = explattice(&r, &units(&r, &["x+1", "2*x+3", "-1"]), &ctx()).unwrap();
    assert_eq!(res.lattice, lat(3, &[&[2, -1, 0], &[0, 0, 2]]));
    assert_eq!(res.completeness, Completeness::Heuristic);
    assert!(matches!(explattice(&r, &units(&r, &["x"]), &ctx()), Err(Error::NotAUnit(_))));
}

#[test]
fn discrete_logs_in_prime_field() {
    let r = algebra(&["7", "x"], &["x"]);
    let us = units(&r, &["3", "2", "6"]);
    let res = explattice(&r, &us, &ctx()).unwrap();
    // log_3: 3 -> 1, 2 -> 2, 6 -> 3 modulo 6
    let expected = IntegerLattice::preimage(&[vec![1.into()], vec![2.into()], vec![3.into()]], 1, &IntegerLattice::scaled_identity(1, &BigInt::from(6)));
    assert_eq!(res.lattice, expected);
}

#[test]
fn random_finite_rings_match_brute_force() {
    let mut rng = ctx().rng(99);
    let shapes: [&[&str]; 4] = [
        &["x^2+x+1", "y^2+y+1"],
        &["x^2", "y^2+1"],
        &["x^2-x", "y^2"],
        &["x^3+x+1", "y-x^2"],
    ];
    for case in 0..12 {
        let m = [4, 6, 8, 9, 12, 5][case % 6];
        let mut gens: Vec<String> = shapes[case % 4].iter().map(|s| String::from(*s)).collect();
        gens.push(format!("{m}"));
        let gs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let r = algebra(&gs, &["x", "y"]);
        let t = enumerate_ring(&r).unwrap();
        let mut us = Vec::new();
        while us.len() < 3 {
            let v: ZVec = (0..r.dim()).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect();
            if r.is_unit(&v) {
                us.push(v);
            }
        }
        let res = explattice(&r, &us, &ctx()).unwrap();
        assert_eq!(res.lattice, brute_explattice(&t, &us).unwrap(), "case {case}");
    }
}
