use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Polynomial, TermOrdering};
use crate::arith::ZZ;
use crate::error::{Error, Result};

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    names: &'a [String],
}

impl Scanner<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.col0 + self.pos + 1, msg: msg.to_string() })
    }
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }
    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }
    fn nat(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }
    fn ident(&mut self) -> Option<String> {
        if !self.peek().is_some_and(|c| c.is_alphabetic()) {
            return None;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }
    fn factor(&mut self, exps: &mut [u32]) -> Result<bool> {
        let start = self.pos;
        let Some(name) = self.ident() else { return Ok(false) };
        let Some(idx) = self.names.iter().position(|n| *n == name) else {
            self.pos = start;
            return self.err(&alloc::format!("unknown variable '{name}'"));
        };
        self.ws();
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.ws();
            match self.nat().and_then(|n| u32::try_from(n).ok()) {
                Some(k) => e = k,
                None => return self.err("expected exponent after '^'"),
            }
        }
        exps[idx] += e;
        Ok(true)
    }
    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut exps = vec![0u32; self.names.len()];
        let mut coeff = BigInt::one();
        let mut need_factor = false;
        if let Some(c) = self.nat() {
            coeff = c;
            self.ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.ws();
                need_factor = true;
            }
        } else {
            need_factor = true;
        }
        let mut any = false;
        loop {
            self.ws();
            if self.factor(&mut exps)? {
                any = true;
                self.ws();
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.ws();
                    if !self.peek().is_some_and(|c| c.is_alphabetic()) {
                        return self.err("expected variable after '*'");
                    }
                }
            } else {
                break;
            }
        }
        if need_factor && !any {
            return self.err("expected a term");
        }
        Ok((Monomial(exps), coeff))
    }
}

/// Parses a polynomial with integer coefficients over the named variables.
///
/// Terms are sums and differences of an optional natural coefficient times
/// power products such as `3*x^2*y` or `3x^2y`; a leading `-` negates the
/// first term. `line` and `col0` locate the text in its source file for
/// error messages.
pub fn parse_polynomial(text: &str, names: &[String], line: usize, col0: usize) -> Result<Polynomial<ZZ>> {
    let mut s = Scanner { chars: text.chars().collect(), pos: 0, line, col0, names };
    let n = names.len();
    let mut terms = Vec::new();
    s.ws();
    let mut negate = false;
    if s.peek() == Some('-') {
        negate = true;
        s.pos += 1;
        s.ws();
    }
    loop {
        let (m, c) = s.term()?;
        terms.push((m, if negate { -c } else { c }));
        s.ws();
        match s.peek() {
            None => break,
            Some('+') => negate = false,
            Some('-') => negate = true,
            Some(_) => return s.err("expected '+', '-' or end of polynomial"),
        }
        s.pos += 1;
        s.ws();
    }
    Ok(Polynomial::from_terms(&ZZ, n, TermOrdering::DegRevLex, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn accepts_both_product_styles() {
        let a = parse_polynomial("-x*y*z - x*z + 1", &names(), 1, 0).unwrap();
        let b = parse_polynomial("-  xy", &names(), 1, 0);
        assert!(b.is_err());
        assert_eq!(a.display(&names()), "-x*y*z - x*z + 1");
        let c = parse_polynomial("6z^2 + 2x - y", &names(), 1, 0).unwrap();
        assert_eq!(c.display(&names()), "6*z^2 + 2*x - y");
        let d = parse_polynomial("3x^2y", &names(), 1, 0).unwrap();
        assert_eq!(d.display(&names()), "3*x^2*y");
        assert_eq!(parse_polynomial("8", &names(), 1, 0).unwrap().display(&names()), "8");
    }

    #[test]
    fn reports_position() {
        match parse_polynomial("x + + y", &names(), 4, 2) {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(col, 7);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("x + w", &names(), 1, 0).is_err());
        assert!(parse_polynomial("x^", &names(), 1, 0).is_err());
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(terms in proptest::collection::vec(
            (-50i64..50, 0u32..3, 0u32..3, 0u32..3), 0..6)) {
            let t = terms.into_iter().map(|(c, a, b, d)| (Monomial(vec![a, b, d]), BigInt::from(c))).collect();
            let p = Polynomial::from_terms(&ZZ, 3, TermOrdering::DegRevLex, t);
            let text = p.display(&names());
            let q = parse_polynomial(&text, &names(), 1, 0).unwrap();
            prop_assert_eq!(q, p);
        }
    }
}
