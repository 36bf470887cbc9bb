//! Report structures and their text rendering.

use std::fmt::Write as _;

use fzalg_core::intlat::IntegerLattice;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

/// An integer as a JSON number when it fits, as a string otherwise.
pub fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => Value::from(k),
        None => Value::from(n.to_string()),
    }
}

pub fn lattice_rows(l: &IntegerLattice) -> Vec<Vec<Value>> {
    l.basis().iter().map(|r| r.iter().map(big).collect()).collect()
}

pub fn rows_text(rows: &[Vec<Value>]) -> String {
    if rows.is_empty() {
        return "(zero lattice)".into();
    }
    rows.iter()
        .map(|r| format!("({})", r.iter().map(|v| v.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Serialize, Debug)]
pub struct Input {
    pub file: String,
    pub vars: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ideal: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub explicit: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct Provenance {
    pub unit_provider: String,
    pub lattice_completeness: String,
}

#[derive(Serialize, Debug)]
pub struct PrimeReport {
    pub generators: Vec<String>,
    pub characteristic: u64,
    pub residue_degree: usize,
}

#[derive(Serialize, Debug)]
pub struct StepReport {
    pub label: String,
    pub lattice_basis: Vec<Vec<Value>>,
}

#[derive(Serialize, Debug)]
pub struct CheckReport {
    pub status: String,
    pub detail: String,
}

impl CheckReport {
    pub fn skipped(why: &str) -> Self {
        CheckReport { status: "skipped".into(), detail: why.into() }
    }
}

#[derive(Serialize, Debug, Default)]
pub struct ResultBody {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_basis: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion_exponent: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<PrimeReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilradical: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_idempotents: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StepReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckReport>,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub command: String,
    pub input: Input,
    pub result: ResultBody,
    pub timing_ms: u64,
    pub seed: u64,
}

fn list(out: &mut String, title: &str, items: &[String]) {
    let _ = writeln!(out, "{title}:");
    if items.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for it in items {
        let _ = writeln!(out, "  {it}");
    }
}

fn values(vs: &[Value]) -> String {
    vs.iter().map(|v| v.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(", ")
}

impl Report {
    pub fn to_text(&self) -> String {
        let r = &self.result;
        let mut out = String::new();
        if let (Some(k), Some(t)) = (r.module_rank, &r.torsion_exponent) {
            let _ = writeln!(out, "additive rank {k}, torsion exponent {}", values(std::slice::from_ref(t)));
        }
        if let Some(g) = &r.generators {
            list(&mut out, "unit generators", g);
        }
        if let Some(k) = r.rank {
            let f = r.invariant_factors.as_deref().unwrap_or(&[]);
            let _ = writeln!(out, "rank {k}, invariant factors [{}]", values(f));
        } else if let Some(f) = &r.invariant_factors {
            let _ = writeln!(out, "additive invariant factors [{}]", values(f));
        }
        if let Some(b) = &r.lattice_basis {
            let rows: Vec<String> = b.iter().map(|row| format!("({})", values(row))).collect();
            list(&mut out, "lattice basis", &rows);
        }
        if let Some(ps) = &r.primes {
            let _ = writeln!(out, "minimal primes:");
            for (i, p) in ps.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  p{}: <{}>  characteristic {}, residue degree {}",
                    i + 1,
                    p.generators.join(", "),
                    p.characteristic,
                    p.residue_degree
                );
            }
        }
        if let Some(n) = &r.nilradical {
            list(&mut out, "nilradical generators", n);
        }
        if let Some(s) = r.nilpotency_index {
            let _ = writeln!(out, "nilpotency index {s}");
        }
        if let Some(e) = &r.idempotents {
            list(&mut out, "idempotents", e);
        }
        if let Some(e) = &r.rational_idempotents {
            list(&mut out, "primitive idempotents over Q", e);
        }
        if let Some(p) = &r.provenance {
            let _ = writeln!(out, "unit provider: {}, lattice: {}", p.unit_provider, p.lattice_completeness);
        }
        if let Some(c) = &r.check {
            let _ = writeln!(out, "check {}: {}", c.status, c.detail);
        }
        let _ = writeln!(out, "time {} ms, seed {}", self.timing_ms, self.seed);
        out
    }
}
