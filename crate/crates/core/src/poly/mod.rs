//! Sparse multivariate polynomials with a choice of term ordering.

mod parse;

pub use parse::*;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::arith::Ring;

/// Exponent vector of a power product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
    /// `other / self`; requires `self | other`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
    /// Pure power `x_i^k` with `k > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
    pub fn display(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (e, name) in self.0.iter().zip(names) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(alloc::format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Admissible orderings on power products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TermOrdering {
    /// Graded reverse lexicographic in the given variable order.
    #[default]
    DegRevLex,
    Lex,
    /// Block ordering: the first `k` variables, compared by degrevlex,
    /// dominate the rest, which break ties by degrevlex.
    Elimination(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl TermOrdering {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrdering::DegRevLex => degrevlex(&a.0, &b.0),
            TermOrdering::Lex => a.0.cmp(&b.0),
            TermOrdering::Elimination(k) => {
                let k = (*k).min(a.0.len());
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// A polynomial over `R`. Terms are kept sorted in decreasing order for
/// the polynomial's ordering, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<R: Ring> {
    pub ring: R,
    pub nvars: usize,
    pub ordering: TermOrdering,
    terms: Vec<(Monomial, R::El)>,
}

impl<R: Ring> Polynomial<R> {
    pub fn zero(ring: &R, nvars: usize, ordering: TermOrdering) -> Self {
        Polynomial { ring: ring.clone(), nvars, ordering, terms: Vec::new() }
    }

    pub fn constant(ring: &R, nvars: usize, ordering: TermOrdering, c: R::El) -> Self {
        Self::from_terms(ring, nvars, ordering, vec![(Monomial::one(nvars), c)])
    }

    pub fn var(ring: &R, nvars: usize, ordering: TermOrdering, i: usize) -> Self {
        Self::from_terms(ring, nvars, ordering, vec![(Monomial::var(nvars, i), ring.one())])
    }

    pub fn monomial(ring: &R, ordering: TermOrdering, m: Monomial, c: R::El) -> Self {
        let n = m.0.len();
        Self::from_terms(ring, n, ordering, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, combining repeats.
    pub fn from_terms(ring: &R, nvars: usize, ordering: TermOrdering, mut terms: Vec<(Monomial, R::El)>) -> Self {
        terms.sort_by(|a, b| ordering.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, R::El)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !ring.is_zero(c));
        Polynomial { ring: ring.clone(), nvars, ordering, terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, R::El)] {
        &self.terms
    }
    pub fn into_terms(self) -> Vec<(Monomial, R::El)> {
        self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn leading_term(&self) -> Option<&(Monomial, R::El)> {
        self.terms.first()
    }
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
    pub fn lc(&self) -> &R::El {
        &self.terms[0].1
    }
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }
    pub fn constant_value(&self) -> Option<R::El> {
        match self.terms.as_slice() {
            [] => Some(self.ring.zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }
    pub fn coefficient(&self, m: &Monomial) -> R::El {
        self.terms.iter().find(|(t, _)| t == m).map_or_else(|| self.ring.zero(), |(_, c)| c.clone())
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => self.ordering.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { r.neg(c) } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (m, a) = &self.terms[i];
                    let b = &other.terms[j].1;
                    let c = if negate { r.sub(a, b) } else { r.add(a, b) };
                    if !r.is_zero(&c) {
                        out.push((m.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: r.clone(), nvars: self.nvars, ordering: self.ordering, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }
    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }
    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.ring.neg(c))).collect();
        Polynomial { terms, ..self.clone_empty() }
    }
    fn clone_empty(&self) -> Self {
        Polynomial { ring: self.ring.clone(), nvars: self.nvars, ordering: self.ordering, terms: Vec::new() }
    }
    pub fn scale(&self, c: &R::El) -> Self {
        let r = &self.ring;
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), r.mul(a, c)))
            .filter(|(_, a)| !r.is_zero(a))
            .collect();
        Polynomial { terms, ..self.clone_empty() }
    }
    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &R::El) -> Self {
        let r = &self.ring;
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), r.mul(a, c)))
            .filter(|(_, a)| !r.is_zero(a))
            .collect();
        Polynomial { terms, ..self.clone_empty() }
    }
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = self.clone_empty();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c));
        }
        acc
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.ring, self.nvars, self.ordering, self.ring.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn with_ordering(&self, ordering: TermOrdering) -> Self {
        Self::from_terms(&self.ring, self.nvars, ordering, self.terms.clone())
    }
    /// Change coefficient ring termwise.
    pub fn map_ring<S: Ring>(&self, s: &S, f: impl Fn(&R::El) -> S::El) -> Polynomial<S> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Polynomial::from_terms(s, self.nvars, self.ordering, terms)
    }
    /// Reinterpret in a larger ring of variables: variable `i` becomes
    /// variable `map[i]` of `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize], ordering: TermOrdering) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Self::from_terms(&self.ring, nvars, ordering, terms)
    }

    /// Canonical text form with terms in decreasing degrevlex order.
    pub fn display(&self, names: &[String]) -> String {
        let p = if self.ordering == TermOrdering::DegRevLex {
            self.clone()
        } else {
            self.with_ordering(TermOrdering::DegRevLex)
        };
        if p.is_zero() {
            return "0".to_string();
        }
        let r = &p.ring;
        let mut s = String::new();
        for (k, (m, c)) in p.terms.iter().enumerate() {
            let neg = r.is_negative(c);
            let mag = if neg { r.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let cs = mag.to_string();
            if m.is_one() {
                s.push_str(&cs);
            } else {
                if cs != "1" {
                    s.push_str(&cs);
                    s.push('*');
                }
                s.push_str(&m.display(names));
            }
        }
        s
    }
}

/// Generators of an ideal in a polynomial ring over `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<R: Ring> {
    pub ring: R,
    pub nvars: usize,
    pub ordering: TermOrdering,
    pub generators: Vec<Polynomial<R>>,
}

impl<R: Ring> Ideal<R> {
    pub fn new(ring: &R, nvars: usize, ordering: TermOrdering, generators: Vec<Polynomial<R>>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_ordering(ordering)).collect();
        Ideal { ring: ring.clone(), nvars, ordering, generators }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ZZ;
    use num_bigint::BigInt;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn degrevlex_orders_like_the_textbook() {
        let o = TermOrdering::DegRevLex;
        // x^2 > x*y > y^2 > x*z > y*z > z^2 in three variables
        let chain = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&Monomial(w[0].to_vec()), &Monomial(w[1].to_vec())), Ordering::Greater);
        }
        let lex = TermOrdering::Lex;
        assert_eq!(lex.cmp(&Monomial(vec![1, 0, 0]), &Monomial(vec![0, 5, 5])), Ordering::Greater);
        let el = TermOrdering::Elimination(1);
        assert_eq!(el.cmp(&Monomial(vec![1, 0, 0]), &Monomial(vec![0, 5, 5])), Ordering::Greater);
        assert_eq!(el.cmp(&Monomial(vec![0, 1, 0]), &Monomial(vec![0, 0, 2])), Ordering::Less);
    }

    #[test]
    fn arithmetic_and_display() {
        let n = names(&["x", "y"]);
        let z = ZZ;
        let x = Polynomial::var(&z, 2, TermOrdering::DegRevLex, 0);
        let y = Polynomial::var(&z, 2, TermOrdering::DegRevLex, 1);
        let one = Polynomial::constant(&z, 2, TermOrdering::DegRevLex, BigInt::from(1));
        let p = x.add(&one).mul(&y.sub(&one));
        assert_eq!(p.display(&n), "x*y - x + y - 1");
        assert_eq!(p.pow(2).lc(), &BigInt::from(1));
        assert_eq!(x.sub(&x).display(&n), "0");
        assert_eq!(one.scale(&BigInt::from(-2)).display(&n), "-2");
    }
}
