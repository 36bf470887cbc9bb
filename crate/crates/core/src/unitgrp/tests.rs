use super::*;
use crate::oracle::{brute_unit_group, closure_relations, enumerate_ring, FiniteRingTable};
use crate::testutil::{algebra, el};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use rand::Rng;

fn ctx() -> Context<'static> {
    Context::new(0)
}

fn els(r: &ExplicitAlgebra, s: &[&str]) -> Vec<ZVec> {
    s.iter().map(|x| el(r, x)).collect()
}

fn all_units(r: &ExplicitAlgebra, gens: &[ZVec]) -> bool {
    gens.iter().all(|g| r.is_unit(g))
}

/// The set of table indices reached from `gens` by multiplication.
fn generated(t: &FiniteRingTable, gens: &[ZVec]) -> BTreeSet<usize> {
    let idx: Vec<usize> = gens.iter().map(|g| t.index(&t.from_algebra(g))).collect();
    let mut seen = BTreeSet::new();
    let one = t.index(&t.one());
    seen.insert(one);
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for &g in &idx {
            let y = t.mul_index(x, g);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

#[test]
fn torsion_free_three_copies() {
    let r = algebra(&["x^2+x+1", "y^2+y+1", "z^2+z+1"], &["x", "y", "z"]);
    let g = units_torsion_free_reduced(&r, &ctx()).unwrap();
    assert!(all_units(&r, &g.generators));
    let known = els(&r, &["z+1", "-y*z-y", "x*z+x+z+1"]);
    assert!(same_subgroup(&r, &g.generators, &known, &ctx()).unwrap());
    assert_eq!(unit_group_structure(&r, &g.generators, &ctx()).unwrap().0, 0);
}

#[test]
fn torsion_free_domain_and_errors() {
    let r = algebra(&["y^2+y+1"], &["y"]);
    let g = units_torsion_free_reduced(&r, &ctx()).unwrap();
    assert!(same_subgroup(&r, &g.generators, &els(&r, &["y+1"]), &ctx()).unwrap());
    assert_eq!(unit_group_structure(&r, &g.generators, &ctx()).unwrap(), (0, vec![BigInt::from(6)]));
    let bad = algebra(&["x^2", "y^2+1"], &["x", "y"]);
    assert!(matches!(units_torsion_free_reduced(&bad, &ctx()), Err(Error::NotReduced(_))));
    assert!(matches!(units_reduced(&bad, &ctx()), Err(Error::NotReduced(_))));
    let tors = algebra(&["x^2+x+1", "5"], &["x"]);
    assert!(matches!(units_torsion_free_reduced(&tors, &ctx()), Err(Error::HasTorsion(_))));
}

#[test]
fn reduced_with_torsion() {
    let r = algebra(&["3*x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"], &["x", "y", "z"]);
    let g = units_reduced(&r, &ctx()).unwrap();
    assert_eq!(g.provenance, Provenance::BoundedSearch);
    assert!(all_units(&r, &g.generators));
    let known = els(
        &r,
        &[
            "9*y*z^2+x*y-17*y*z-15*z^2+x+9*y+15*z",
            "15*y*z+9*z^2-15*y-17*z+9",
            "-56*y*z-32*z^2+56*y+65*z-32",
            "-x+1",
        ],
    );
    assert!(all_units(&r, &known));
    assert!(same_subgroup(&r, &g.generators, &known, &ctx()).unwrap());
}

#[test]
fn finite_field_of_25() {
    let r = algebra(&["x^2+x+1", "5"], &["x"]);
    let g = units_reduced(&r, &ctx()).unwrap();
    assert_eq!(g.generators.len(), 1);
    let d = units(&r, &ctx()).unwrap();
    assert_eq!((d.rank, d.invariant_factors.clone()), (0, vec![BigInt::from(24)]));
    assert_eq!(d.completeness, Completeness::Certified);
}

#[test]
fn radical_generators() {
    let r = algebra(&["x^3", "6*x^2", "y^2+y+1"], &["x", "y"]);
    let primes = minimal_primes(&r, &ctx()).unwrap();
    let nil = nilradical(&r, &primes, &ctx()).unwrap();
    let mut got: Vec<String> = one_plus_radical_gens(&r, &nil).iter().map(|u| r.display(u)).collect();
    let mut want: Vec<String> = els(&r, &["1+x", "1+x^2", "1+x*y", "1+x^2*y"]).iter().map(|u| r.display(u)).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    let mut products: Vec<String> = one_plus_radical_products(&r, &nil).iter().map(|u| r.display(u)).collect();
    products.sort();
    assert_eq!(products, want);
    let reduced = algebra(&["x^2-2"], &["x"]);
    let p = minimal_primes(&reduced, &ctx()).unwrap();
    assert!(one_plus_radical_gens(&reduced, &nilradical(&reduced, &p, &ctx()).unwrap()).is_empty());
}

#[test]
fn non_reduced_example() {
    let r = algebra(&["x^3", "6*x^2", "y^2+y+1"], &["x", "y"]);
    let d = units(&r, &ctx()).unwrap();
    assert!(all_units(&r, &d.generators));
    let known = els(&r, &["1+y", "1+x", "1+x^2", "1+x*y", "1+x^2*y"]);
    assert!(same_subgroup(&r, &d.generators, &known, &ctx()).unwrap());
    let layers = units_with(&r, RadicalMethod::Layers, &ctx()).unwrap();
    assert!(same_subgroup(&r, &d.generators, &layers.generators, &ctx()).unwrap());
    // 1 + x and 1 + xy are free, the torsion is mu_6 times the x^2 layer
    assert_eq!(d.rank, 2);
    let pruned = prune(&d);
    assert!(same_subgroup(&r, &d.generators, &pruned.generators, &ctx()).unwrap());
    assert_eq!((pruned.rank, &pruned.invariant_factors), (d.rank, &d.invariant_factors));
}

#[test]
fn small_nilpotent_ring() {
    let r = algebra(&["x^2", "4"], &["x"]);
    let d = units(&r, &ctx()).unwrap();
    let t = enumerate_ring(&r).unwrap();
    let brute = brute_unit_group(&t).unwrap();
    assert_eq!(brute.units.len(), 8);
    assert_eq!(generated(&t, &d.generators).len(), 8);
    assert_eq!(d.invariant_factors, brute.invariant_factors);
}

#[test]
fn single_term_multiples_miss_integer_nilpotents() {
    let r = algebra(&["8", "x"], &["x"]);
    let t = enumerate_ring(&r).unwrap();
    let literal = units_with(&r, RadicalMethod::TermMultiples, &ctx()).unwrap();
    assert_eq!(generated(&t, &literal.generators).len(), 2);
    let d = units(&r, &ctx()).unwrap();
    assert_eq!(generated(&t, &d.generators).len(), 4);
    assert_eq!(d.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
}

#[test]
fn membership() {
    let r = algebra(&["x^2-2"], &["x"]);
    let gens = els(&r, &["x+1"]);
    assert!(in_subgroup(&r, &gens, &el(&r, "2*x+3"), &ctx()).unwrap());
    assert!(!in_subgroup(&r, &gens, &el(&r, "-1"), &ctx()).unwrap());
    assert!(in_subgroup(&r, &[], &r.one(), &ctx()).unwrap());
}

#[test]
fn structure_from_lattices() {
    assert_eq!(structure_of(&IntegerLattice::from_i64(2, &[&[2, 0], &[0, 3]])), (0, vec![BigInt::from(6)]));
    assert_eq!(structure_of(&IntegerLattice::from_i64(3, &[&[2, 2, 0]])), (2, vec![BigInt::from(2)]));
    assert_eq!(structure_of(&IntegerLattice::zero(2)), (2, vec![]));
}

#[test]
fn random_finite_rings_match_oracle() {
    let mut rng = ctx().rng(5);
    let fs = ["x^2+1", "x^2+x+1", "x^2", "x^3+x+1", "x^2-x", "x^3-x"];
    let gs = ["y^2+y+1", "y^2", "y-1", "y^2+1", "y^3"];
    let mut case = 0;
    while case < 10 {
        let f = fs[rng.gen_range(0..fs.len())];
        let g = gs[rng.gen_range(0..gs.len())];
        let m = rng.gen_range(4..=12).to_string();
        let r = algebra(&[f, g, &m], &["x", "y"]);
        if r.compact().cardinality().unwrap() > BigInt::from(20_000) {
            continue;
        }
        case += 1;
        let t = enumerate_ring(&r).unwrap();
        let brute = brute_unit_group(&t).unwrap();
        for method in [RadicalMethod::Direct, RadicalMethod::Layers] {
            let d = units_with(&r, method, &ctx()).unwrap();
            let msg = format!("case {case}: {f}, {g}, {m}, {method:?}");
            assert!(all_units(&r, &d.generators), "{msg}");
            assert_eq!(generated(&t, &d.generators).len(), brute.units.len(), "{msg}");
            assert_eq!((d.rank, &d.invariant_factors), (0, &brute.invariant_factors), "{msg}");
            let (lat, _) = closure_relations(
                &d.generators.iter().map(|u| t.index(&t.from_algebra(u))).collect::<Vec<_>>(),
                t.index(&t.one()),
                |a, b| t.mul_index(*a, *b),
                1_000_000,
            )
            .unwrap();
            assert_eq!(lat, d.relation_lattice, "{msg}");
        }
    }
}
