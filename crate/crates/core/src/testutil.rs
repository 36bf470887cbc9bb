use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::ZZ;
use crate::finitezalg::ExplicitAlgebra;
use crate::intlat::ZVec;
use crate::poly::{parse_polynomial, Ideal, Polynomial, TermOrdering};
use crate::Context;

pub fn names(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

pub fn poly(s: &str, vars: &[String]) -> Polynomial<ZZ> {
    parse_polynomial(s, vars, 1, 0).unwrap()
}

pub fn ideal(gens: &[&str], vars: &[&str]) -> Ideal<ZZ> {
    let n = names(vars);
    Ideal::new(&ZZ, n.len(), TermOrdering::DegRevLex, gens.iter().map(|s| poly(s, &n)).collect())
}

pub fn algebra(gens: &[&str], vars: &[&str]) -> ExplicitAlgebra {
    ExplicitAlgebra::from_ideal(&ideal(gens, vars), &names(vars), &Context::new(0)).unwrap()
}

pub fn el(a: &ExplicitAlgebra, s: &str) -> ZVec {
    a.from_poly(&poly(s, a.var_names()))
}
