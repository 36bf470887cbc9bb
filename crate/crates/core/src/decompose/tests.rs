use super::*;
use crate::grobner::{ideal_sum, ideals_equal};
use crate::testutil::{algebra, el, ideal};
use num_traits::Signed;

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn ctx() -> Context<'static> {
    Context::new(0)
}

/// Each expected ideal equals exactly one computed prime.
fn assert_primes(r: &ExplicitAlgebra, primes: &[PrimeComponent], expected: &[Ideal<ZZ>]) {
    assert_eq!(primes.len(), expected.len());
    for e in expected {
        let hits = primes
            .iter()
            .filter(|p| ideals_equal(&p.ideal(r, &ctx()).unwrap(), e, &ctx()).unwrap())
            .count();
        assert_eq!(hits, 1, "{:?}", e.generators.iter().map(|g| g.display(r.var_names())).collect::<Vec<_>>());
    }
}

#[test]
fn univariate_factorizations() {
    let c = ctx();
    assert_eq!(factor_univariate(&ints(&[1, 1, 1]), Domain::Rationals, &c), vec![(ints(&[1, 1, 1]), 1)]);
    assert_eq!(factor_univariate(&ints(&[1, 1, 1]), Domain::Prime(3), &c), vec![(ints(&[2, 1]), 2)]);
    let f = factor_univariate(&ints(&[-1, 0, 1]), Domain::Rationals, &c);
    assert_eq!(f.len(), 2);
    assert!(f.iter().all(|(g, m)| g.len() == 2 && *m == 1 && g[0].abs().is_one()));
}

#[test]
fn two_cyclotomic_copies() {
    let vars = ["x", "y"];
    let r = algebra(&["x^2+x+1", "y^2+y+1"], &vars);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    assert_primes(&r, &ps, &[ideal(&["x-y", "y^2+y+1"], &vars), ideal(&["x+y+1", "y^2+y+1"], &vars)]);
    assert!(ps.iter().all(|p| p.characteristic == 0 && p.degree() == 2));
    let sum = ideal_sum(&ps[0].ideal(&r, &ctx()).unwrap(), &ps[1].ideal(&r, &ctx()).unwrap());
    assert!(ideals_equal(&sum, &ideal(&["x+2", "y+2", "3"], &vars), &ctx()).unwrap());
    let nil = nilradical(&r, &ps, &ctx()).unwrap();
    assert!(nil.is_zero(&r) && nil.index == 1 && nil.generators.is_empty());
}

#[test]
fn primes_with_torsion() {
    let vars = ["x", "y", "z"];
    let r = algebra(&["3*x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"], &vars);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    assert_primes(
        &r,
        &ps,
        &[
            ideal(&["z-1", "x", "y^2+1"], &vars),
            ideal(&["x", "z^2+z+1", "y^2+z"], &vars),
            ideal(&["3", "z-1", "x+y", "y^2+1"], &vars),
        ],
    );
    let split = torsion_split(&r, &ps).unwrap();
    assert_eq!(split.maximal.len(), 1);
    assert_eq!(split.idempotents[0], el(&r, "x*y+y^2+z"));
    assert_eq!(split.idempotents[1], el(&r, "-x*y+1"));
    let Residue::FiniteField(ff) = &ps[split.maximal[0]].residue else { panic!() };
    assert_eq!((ff.p, ff.degree), (3, 2));
    assert!(nilradical(&r, &ps, &ctx()).unwrap().is_zero(&r));
}

#[test]
fn three_cyclotomic_copies_and_rational_idempotents() {
    let vars = ["x", "y", "z"];
    let r = algebra(&["x^2+x+1", "y^2+y+1", "z^2+z+1"], &vars);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    assert_primes(
        &r,
        &ps,
        &[
            ideal(&["y-z", "x+z+1", "z^2+z+1"], &vars),
            ideal(&["y-z", "x-z", "z^2+z+1"], &vars),
            ideal(&["y+z+1", "x+z+1", "z^2+z+1"], &vars),
            ideal(&["y+z+1", "x-z", "z^2+z+1"], &vars),
        ],
    );
    let idem = primitive_idempotents_q(&r, &ctx()).unwrap();
    let mut shown: Vec<String> = idem.elements.iter().map(|e| idem.to_poly(&r, e).display(r.var_names())).collect();
    shown.sort();
    let mut expected = vec![
        "1/3*x*y + 1/3*x*z - 1/3*y*z + 1/3*x + 1/3",
        "-1/3*x*y - 1/3*x*z - 1/3*y*z - 1/3*x - 1/3*y - 1/3*z",
        "-1/3*x*y + 1/3*x*z + 1/3*y*z + 1/3*z + 1/3",
        "1/3*x*y - 1/3*x*z + 1/3*y*z + 1/3*y + 1/3",
    ];
    expected.sort();
    assert_eq!(shown, expected);
    assert!(is_idempotent_set(&idem.extension.algebra, &idem.elements));
}

#[test]
fn nilradical_and_index() {
    let r = algebra(&["x^3", "6*x^2", "y^2+y+1"], &["x", "y"]);
    let ps = minimal_primes(&r, &ctx()).unwrap();
    let nil = nilradical(&r, &ps, &ctx()).unwrap();
    assert_eq!(nil.index, 3);
    let shown: Vec<String> = nil.generators.iter().map(|g| g.display(r.var_names())).collect();
    assert_eq!(shown, vec!["x"]);
    let r2 = algebra(&["x^2"], &["x"]);
    let n2 = nilradical(&r2, &minimal_primes(&r2, &ctx()).unwrap(), &ctx()).unwrap();
    assert_eq!(n2.index, 2);
    // every prime contains the ideal and none contains another
    for (i, a) in ps.iter().enumerate() {
        assert!(a.lattice.contains_lattice(r.syzygies()));
        for (j, b) in ps.iter().enumerate() {
            assert!(i == j || !a.lattice.contains_lattice(&b.lattice));
        }
    }
}

#[test]
fn crt_for_z_mod_6() {
    let r = algebra(&["6", "x"], &["x"]);
    let two = r.integer_ideal(&BigInt::from(2));
    let three = r.integer_ideal(&BigInt::from(3));
    let es = crt_orthogonal_idempotents(&r, &[two.clone(), three]).unwrap();
    assert_eq!(es, vec![ints(&[3]), ints(&[4])]);
    assert!(matches!(crt_orthogonal_idempotents(&r, &[two.clone(), two]), Err(Error::NotComaximal(_))));
}

#[test]
fn local_components_over_q_and_f2() {
    let r = algebra(&["x^2+x+1", "y^2+y+1", "6*z^2", "z^3"], &["x", "y", "z"]);
    let q = rational_algebra(&r);
    let mut rng = ctx().rng(1);
    let comps = zerodim_decompose(&q.algebra, &mut rng).unwrap();
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c.nilradical.rank() > 0));
    let es: Vec<_> = comps.iter().map(|c| c.idempotent.clone()).collect();
    assert!(is_idempotent_set(&q.algebra, &es));
    let f2 = mod_p_algebra(&algebra(&["x^2+x+1", "y^2+y+1"], &["x", "y"]), 2);
    let comps2 = zerodim_decompose(&f2.algebra, &mut rng).unwrap();
    assert_eq!(comps2.len(), 2);
    assert!(comps2.iter().all(|c| c.residue_field.dim() == 2));
}
