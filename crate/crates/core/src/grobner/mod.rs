//! Strong Gröbner bases over Euclidean domains (Z and fields) and the ideal
//! operations built on them.

mod ops;

pub use ops::*;

use alloc::vec::Vec;

use crate::arith::EuclideanRing;
use crate::context::Context;
use crate::error::Result;
use crate::poly::{Ideal, Monomial, Polynomial, TermOrdering};

/// A reduced strong Gröbner basis: every leading term of the ideal is a
/// multiple of a single basis leading term. Leading coefficients are positive
/// over Z and one over a field; elements are sorted by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGroebnerBasis<R: EuclideanRing> {
    pub ring: R,
    pub nvars: usize,
    pub ordering: TermOrdering,
    pub elements: Vec<Polynomial<R>>,
}

impl<R: EuclideanRing> StrongGroebnerBasis<R> {
    pub fn reduce(&self, f: &Polynomial<R>) -> Polynomial<R> {
        normal_form(f, &self.elements)
    }
    pub fn contains(&self, f: &Polynomial<R>) -> bool {
        self.reduce(f).is_zero()
    }
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && self.ring.is_unit(g.lc()))
    }
    pub fn to_ideal(&self) -> Ideal<R> {
        Ideal::new(&self.ring, self.nvars, self.ordering, self.elements.clone())
    }
}

fn normalize<R: EuclideanRing>(f: Polynomial<R>) -> Polynomial<R> {
    if f.is_zero() {
        return f;
    }
    let u = f.ring.normal_unit(f.lc());
    if f.ring.is_one(&u) {
        f
    } else {
        f.scale(&u)
    }
}

/// Full normal form: every term is reduced, and a coefficient that cannot be
/// removed is brought into `[0, d)` where `d` is the least leading
/// coefficient among basis elements whose leading monomial divides the term.
/// With respect to a strong Gröbner basis the result is canonical.
pub fn normal_form<R: EuclideanRing>(f: &Polynomial<R>, basis: &[Polynomial<R>]) -> Polynomial<R> {
    let r = &f.ring;
    let mut rem = f.clone();
    let mut done: Vec<(Monomial, R::El)> = Vec::new();
    while let Some((t, c)) = rem.leading_term().cloned() {
        let divisors: Vec<&Polynomial<R>> = basis.iter().filter(|g| g.lm().divides(&t)).collect();
        if divisors.is_empty() {
            done.push((t.clone(), c.clone()));
            rem = rem.sub(&Polynomial::monomial(r, f.ordering, t, c));
            continue;
        }
        if let Some(g) = divisors.iter().find(|g| r.divides(g.lc(), &c).is_some()) {
            let q = r.divides(g.lc(), &c).unwrap();
            rem = rem.sub(&g.mul_term(&g.lm().quotient(&t), &q));
            continue;
        }
        // smallest leading coefficient; over a strong basis it generates the
        // ideal of all leading coefficients at t
        let g = divisors.iter().min_by(|a, b| a.lc().cmp(b.lc())).unwrap();
        let (q, rr) = r.div_rem(&c, g.lc());
        if !r.is_zero(&q) {
            rem = rem.sub(&g.mul_term(&g.lm().quotient(&t), &q));
        }
        if !r.is_zero(&rr) {
            done.push((t.clone(), rr.clone()));
            rem = rem.sub(&Polynomial::monomial(r, f.ordering, t, rr));
        }
    }
    Polynomial::from_terms(r, f.nvars, f.ordering, done)
}

fn el_lcm<R: EuclideanRing>(r: &R, a: &R::El, b: &R::El) -> R::El {
    let (g, _, _) = r.xgcd(a, b);
    let (q, _) = r.div_rem(&r.mul(a, b), &g);
    q
}

/// Computes the reduced strong Gröbner basis of an ideal.
pub fn strong_groebner<R: EuclideanRing>(ideal: &Ideal<R>, ctx: &Context) -> Result<StrongGroebnerBasis<R>> {
    let r = &ideal.ring;
    let mut basis: Vec<Polynomial<R>> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let push = |basis: &mut Vec<Polynomial<R>>, pairs: &mut Vec<(usize, usize, Monomial)>, h: Polynomial<R>| {
        let h = normalize(h);
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let coprime_monic = r.is_unit(g.lc())
                && r.is_unit(h.lc())
                && g.lm().0.iter().zip(&h.lm().0).all(|(a, b)| *a == 0 || *b == 0);
            if !coprime_monic {
                pairs.push((i, k, g.lm().lcm(h.lm())));
            }
        }
        basis.push(h);
    };
    for g in &ideal.generators {
        ctx.check()?;
        let h = normal_form(&g.with_ordering(ideal.ordering), &basis);
        if !h.is_zero() {
            push(&mut basis, &mut pairs, h);
        }
    }
    while !pairs.is_empty() {
        ctx.check()?;
        let best = (0..pairs.len())
            .min_by(|&a, &b| ideal.ordering.cmp(&pairs[a].2, &pairs[b].2))
            .unwrap();
        let (i, j, t) = pairs.swap_remove(best);
        let (gi, gj) = (&basis[i], &basis[j]);
        let (ci, cj) = (gi.lc().clone(), gj.lc().clone());
        let l = el_lcm(r, &ci, &cj);
        let si = gi.mul_term(&gi.lm().quotient(&t), &r.div_rem(&l, &ci).0);
        let sj = gj.mul_term(&gj.lm().quotient(&t), &r.div_rem(&l, &cj).0);
        let mut new = Vec::new();
        new.push(si.sub(&sj));
        if r.divides(&ci, &cj).is_none() && r.divides(&cj, &ci).is_none() {
            let (_, a, b) = r.xgcd(&ci, &cj);
            let gp = gi.mul_term(&gi.lm().quotient(&t), &a).add(&gj.mul_term(&gj.lm().quotient(&t), &b));
            new.push(gp);
        }
        for p in new {
            let h = normal_form(&p, &basis);
            if !h.is_zero() {
                push(&mut basis, &mut pairs, h);
            }
        }
    }
    Ok(reduce_basis(r, ideal.nvars, ideal.ordering, basis))
}

fn reduce_basis<R: EuclideanRing>(
    r: &R,
    nvars: usize,
    ordering: TermOrdering,
    mut basis: Vec<Polynomial<R>>,
) -> StrongGroebnerBasis<R> {
    basis.sort_by(|a, b| ordering.cmp(a.lm(), b.lm()).then_with(|| a.lc().cmp(b.lc())));
    let mut keep: Vec<Polynomial<R>> = Vec::new();
    for g in basis {
        let redundant = keep
            .iter()
            .any(|k| k.lm().divides(g.lm()) && r.divides(k.lc(), g.lc()).is_some());
        if !redundant {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let g = &keep[i];
        let others: Vec<Polynomial<R>> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let (lm, lc) = g.leading_term().unwrap().clone();
        let head = Polynomial::monomial(r, ordering, lm, lc);
        let tail = normal_form(&g.sub(&head), &others);
        out.push(normalize(head.add(&tail)));
    }
    out.sort_by(|a, b| ordering.cmp(a.lm(), b.lm()));
    StrongGroebnerBasis { ring: r.clone(), nvars, ordering, elements: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fp, Ring, ZZ};
    use crate::poly::parse_polynomial;
    use alloc::string::{String, ToString};
    use alloc::vec;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn ideal(gens: &[&str], vars: &[&str]) -> Ideal<ZZ> {
        let n = names(vars);
        let g = gens.iter().map(|s| parse_polynomial(s, &n, 1, 0).unwrap()).collect();
        Ideal::new(&ZZ, n.len(), TermOrdering::DegRevLex, g)
    }

    fn show(g: &StrongGroebnerBasis<ZZ>, vars: &[&str]) -> Vec<String> {
        g.elements.iter().map(|p| p.display(&names(vars))).collect()
    }

    #[test]
    fn gcd_polynomials_appear_over_z() {
        let g = strong_groebner(&ideal(&["2*x", "3*y"], &["x", "y"]), &Context::new(0)).unwrap();
        assert_eq!(show(&g, &["x", "y"]), vec!["3*y", "2*x", "x*y"]);
        let g = strong_groebner(&ideal(&["2*x", "3*x"], &["x"]), &Context::new(0)).unwrap();
        assert_eq!(show(&g, &["x"]), vec!["x"]);
    }

    #[test]
    fn mod_eight_example_basis() {
        let vars = ["x", "y"];
        let g = strong_groebner(&ideal(&["x^2+x+1", "y^2+y+1", "8"], &vars), &Context::new(0)).unwrap();
        assert_eq!(show(&g, &vars), vec!["8", "y^2 + y + 1", "x^2 + x + 1"]);
        assert_eq!(ideal_meet_z(&g), num_bigint::BigInt::from(8));
    }

    #[test]
    fn torsion_in_degree_two() {
        let vars = ["z"];
        let g = strong_groebner(&ideal(&["6*z^2", "z^3"], &vars), &Context::new(0)).unwrap();
        assert_eq!(show(&g, &vars), vec!["6*z^2", "z^3"]);
        let nf = g.reduce(&parse_polynomial("13*z^2 + z^4 + 5", &names(&vars), 1, 0).unwrap());
        assert_eq!(nf.display(&names(&vars)), "z^2 + 5");
    }

    #[test]
    fn small_example_with_integer_collapse() {
        let vars = ["x", "y", "z"];
        let g = strong_groebner(&ideal(&["x^2", "y^2", "z^2", "x*z+y*z", "x*y", "2*x-y", "3*z"], &vars), &Context::new(0))
            .unwrap();
        // the generators are already a reduced strong basis
        let mut got = show(&g, &vars);
        got.sort();
        let mut want: Vec<String> = ["x^2", "y^2", "z^2", "x*z + y*z", "x*y", "2*x - y", "3*z"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn field_coefficients() {
        let f = Fp::new(5);
        let n = names(&["x", "y"]);
        let gens: Vec<Polynomial<Fp>> = ["x^2 + y", "x*y + 1"]
            .iter()
            .map(|s| parse_polynomial(s, &n, 1, 0).unwrap().map_ring(&f, |c| f.reduce_big(c)))
            .collect();
        let g = strong_groebner(&Ideal::new(&f, 2, TermOrdering::DegRevLex, gens), &Context::new(0)).unwrap();
        for e in &g.elements {
            assert!(f.is_one(e.lc()));
        }
        // y^3 = -1 lies in the ideal: x^2 = -y, x*y = -1 => x^2 y^2 = 1 = -y^3
        let y3 = parse_polynomial("y^3 + 1", &n, 1, 0).unwrap().map_ring(&f, |c| f.reduce_big(c));
        assert!(g.contains(&y3));
    }
}
