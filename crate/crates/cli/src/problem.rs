//! Line-oriented problem files.
//!
//! ```text
//! # comments run to the end of the line
//! vars: x, y
//! ideal:
//!   x^2 + x + 1
//!   y^2 + y + 1, 8
//! elements:
//!   2*x + 1
//! ```
//!
//! An `explicit:` section replaces `ideal:`. Its `vars` name the module
//! generators other than `1`; each line is either a product `a*b = <linear>`
//! or a linear relation `<linear> = <linear>`.

use fzalg_core::arith::ZZ;
use fzalg_core::finitezalg::ExplicitAlgebra;
use fzalg_core::intlat::ZVec;
use fzalg_core::poly::{parse_polynomial, Ideal, Polynomial, TermOrdering};
use fzalg_core::{Context, Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    pub ideal: Option<Vec<Located>>,
    pub elements: Vec<Located>,
    pub explicit: Option<Vec<Located>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Vars,
    Ideal,
    Elements,
    Explicit,
}

fn parse_err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, col, msg: msg.into() })
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `text` (starting at 1-based column `col`) on commas, keeping the
/// column of every piece.
fn split_items(text: &str, line: usize, col: usize, out: &mut Vec<Located>) {
    let mut start = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let t = piece.trim();
        if !t.is_empty() {
            out.push(Located { text: t.to_string(), line, col: col + text[..start].chars().count() + lead });
        }
        start += piece.len() + 1;
    }
}

impl ProblemFile {
    pub fn parse(src: &str) -> Result<Self> {
        let mut pf = ProblemFile::default();
        let mut section: Option<Section> = None;
        let mut seen_vars = false;
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let indent = body.len() - body.trim_start().len();
            let mut rest = body.trim_start();
            let mut col = indent + 1;
            if let Some((head, tail)) = rest.split_once(':') {
                let h = head.trim();
                let next = match h {
                    "vars" => Some(Section::Vars),
                    "ideal" => Some(Section::Ideal),
                    "elements" => Some(Section::Elements),
                    "explicit" => Some(Section::Explicit),
                    _ if is_ident(h) => return parse_err(line, col, format!("unknown section `{h}`")),
                    _ => None,
                };
                if let Some(s) = next {
                    let repeated = match s {
                        Section::Vars => seen_vars,
                        Section::Ideal => pf.ideal.is_some(),
                        Section::Explicit => pf.explicit.is_some(),
                        Section::Elements => false,
                    };
                    if repeated {
                        return parse_err(line, col, format!("section `{h}` given twice"));
                    }
                    match s {
                        Section::Vars => seen_vars = true,
                        Section::Ideal => pf.ideal = Some(Vec::new()),
                        Section::Explicit => pf.explicit = Some(Vec::new()),
                        Section::Elements => {}
                    }
                    section = Some(s);
                    col += head.len() + 1;
                    rest = tail;
                    if rest.trim().is_empty() {
                        continue;
                    }
                }
            }
            match section {
                None => return parse_err(line, col, "content before the first section"),
                Some(Section::Vars) => {
                    for item in rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                        if !is_ident(item) {
                            return parse_err(line, col, format!("invalid variable name `{item}`"));
                        }
                        if pf.vars.iter().any(|v| v == item) {
                            return parse_err(line, col, format!("variable `{item}` declared twice"));
                        }
                        pf.vars.push(item.to_string());
                    }
                }
                Some(Section::Ideal) => split_items(rest, line, col, pf.ideal.as_mut().expect("ideal section")),
                Some(Section::Elements) => split_items(rest, line, col, &mut pf.elements),
                Some(Section::Explicit) => {
                    let t = rest.trim();
                    let lead = rest.len() - rest.trim_start().len();
                    pf.explicit.as_mut().expect("explicit section").push(Located { text: t.to_string(), line, col: col + lead });
                }
            }
        }
        if pf.vars.is_empty() && pf.explicit.is_none() {
            return parse_err(1, 1, "missing `vars:` section");
        }
        match (&pf.ideal, &pf.explicit) {
            (Some(_), Some(_)) => parse_err(1, 1, "give either `ideal:` or `explicit:`, not both"),
            (None, None) => parse_err(1, 1, "missing `ideal:` or `explicit:` section"),
            _ => Ok(pf),
        }
    }

    fn poly(&self, item: &Located) -> Result<Polynomial<ZZ>> {
        parse_polynomial(&item.text, &self.vars, item.line, item.col - 1)
    }

    pub fn ideal_polys(&self) -> Result<Vec<Polynomial<ZZ>>> {
        self.ideal.iter().flatten().map(|it| self.poly(it)).collect()
    }

    /// The algebra described by the file.
    pub fn algebra(&self, ctx: &Context) -> Result<ExplicitAlgebra> {
        if let Some(lines) = &self.explicit {
            return self.explicit_algebra(lines);
        }
        let ideal = Ideal::new(&ZZ, self.vars.len(), TermOrdering::DegRevLex, self.ideal_polys()?);
        ExplicitAlgebra::from_ideal(&ideal, &self.vars, ctx)
    }

    pub fn elements(&self, r: &ExplicitAlgebra) -> Result<Vec<ZVec>> {
        self.elements.iter().map(|it| Ok(r.from_poly(&self.poly(it)?))).collect()
    }

    fn linear(&self, p: &Polynomial<ZZ>, item: &Located) -> Result<ZVec> {
        let n = self.vars.len();
        let mut v = vec![BigInt::zero(); n + 1];
        for (m, c) in p.terms() {
            if m.is_one() {
                v[0] += c;
            } else if let Some((i, 1)) = m.pure_power() {
                v[i + 1] += c;
            } else {
                return parse_err(item.line, item.col, "explicit relations must be linear in the generators");
            }
        }
        Ok(v)
    }

    fn explicit_algebra(&self, lines: &[Located]) -> Result<ExplicitAlgebra> {
        let mut syz = Vec::new();
        let mut products = Vec::new();
        for it in lines {
            let Some((lhs, rhs)) = it.text.split_once('=') else {
                return parse_err(it.line, it.col, "expected `lhs = rhs`");
            };
            let l = parse_polynomial(lhs, &self.vars, it.line, it.col - 1)?;
            let r = parse_polynomial(rhs, &self.vars, it.line, it.col + lhs.chars().count())?;
            let rv = self.linear(&r, it)?;
            let product = match l.terms() {
                [(m, c)] if c.is_one() && m.degree() == 2 => Some(m.clone()),
                _ => None,
            };
            match product {
                Some(m) => {
                    let idx: Vec<usize> = m.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize)).collect();
                    products.push((idx[0], idx[1], rv));
                }
                None => {
                    let lv = self.linear(&l, it)?;
                    syz.push(lv.iter().zip(&rv).map(|(a, b)| a - b).collect());
                }
            }
        }
        ExplicitAlgebra::from_explicit(&self.vars, syz, &products)
    }
}
