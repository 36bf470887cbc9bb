//! Front end for `fzalg-core`: problem files, command dispatch and reports.

pub mod problem;
pub mod report;

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use fzalg_core::decompose::{
    minimal_primes, nilradical, primitive_idempotents_q, rational_poly, torsion_split, PrimeComponent,
};
use fzalg_core::explat::{explattice, verify_relations, Completeness};
use fzalg_core::finitezalg::ExplicitAlgebra;
use fzalg_core::intlat::IntegerLattice;
use fzalg_core::oracle::{brute_explattice, brute_unit_group, enumerate_ring};
use fzalg_core::unitgrp::{units, UnitGroupDescription};
use fzalg_core::{Context, Error, Result};

use problem::ProblemFile;
use report::{big, lattice_rows, CheckReport, Input, PrimeReport, Provenance, Report, ResultBody, StepReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Units,
    Structure,
    Explattice,
    MinimalPrimes,
    Idempotents,
    Nilradical,
    Decompose,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Units => "units",
            Command::Structure => "structure",
            Command::Explattice => "explattice",
            Command::MinimalPrimes => "minimal-primes",
            Command::Idempotents => "idempotents",
            Command::Nilradical => "nilradical",
            Command::Decompose => "decompose",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "fzalg", version, about = "Unit groups and exponent lattices of finite Z-algebras")]
pub struct Args {
    pub command: Command,
    /// Problem file with `vars:`, `ideal:` or `explicit:`, and `elements:` sections.
    pub file: std::path::PathBuf,
    /// Emit a JSON report on standard output.
    #[arg(long)]
    pub json: bool,
    /// Seed for all randomised steps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Re-verify the result by exhaustion when the ring is finite.
    #[arg(long)]
    pub check: bool,
    /// Abort the computation after this many seconds.
    #[arg(long, default_value_t = 300)]
    pub timeout: u64,
    /// Print intermediate lattices and progress on standard error.
    #[arg(long)]
    pub verbose: bool,
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::NotModuleFinite(_) => 3,
        Error::UnsupportedOrder(_) => 4,
        Error::OracleCapExceeded(_) => 5,
        _ => 1,
    }
}

static STOP: AtomicBool = AtomicBool::new(false);
const GRACE: Duration = Duration::from_secs(2);

/// Runs one invocation; returns the text to print and the exit status.
pub fn run(args: &Args) -> (String, i32) {
    let src = match std::fs::read_to_string(&args.file) {
        Ok(s) => s,
        Err(e) => return (format!("error: cannot read {}: {e}\n", args.file.display()), 2),
    };
    let limit = Duration::from_secs(args.timeout);
    let secs = args.timeout;
    std::thread::spawn(move || {
        std::thread::sleep(limit);
        STOP.store(true, Ordering::Relaxed);
        // long kernel computations only poll the flag between steps
        std::thread::sleep(GRACE);
        eprintln!("error: timed out after {secs} s");
        std::process::exit(1);
    });
    let ctx = Context::with_stop(args.seed, &STOP);
    let start = Instant::now();
    match execute(args, &src, &ctx) {
        Ok((input, result)) => {
            let report = Report {
                command: args.command.name().to_string(),
                input,
                result,
                timing_ms: start.elapsed().as_millis() as u64,
                seed: args.seed,
            };
            let failed = report.result.check.as_ref().is_some_and(|c| c.status == "failed");
            let text = if args.json {
                serde_json::to_string_pretty(&report).expect("report serialises") + "\n"
            } else {
                report.to_text()
            };
            (text, if failed { 1 } else { 0 })
        }
        Err(Error::Cancelled) => (format!("error: timed out after {} s\n", args.timeout), 1),
        Err(e) => (format!("error: {e}\n"), exit_code(&e)),
    }
}

fn progress(args: &Args, msg: &str) {
    if args.verbose {
        eprintln!("[fzalg] {msg}");
    }
}

fn execute(args: &Args, src: &str, ctx: &Context) -> Result<(Input, ResultBody)> {
    let pf = ProblemFile::parse(src)?;
    if args.command == Command::Explattice && pf.elements.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, msg: "explattice needs an `elements:` section".into() });
    }
    let input = Input {
        file: args.file.display().to_string(),
        vars: pf.vars.clone(),
        ideal: pf.ideal.iter().flatten().map(|l| l.text.clone()).collect(),
        explicit: pf.explicit.iter().flatten().map(|l| l.text.clone()).collect(),
        elements: pf.elements.iter().map(|l| l.text.clone()).collect(),
    };
    progress(args, "building the explicit algebra");
    let r = pf.algebra(ctx)?;
    let elements = pf.elements(&r)?;
    let ms = r.module_structure();
    let mut body = ResultBody {
        module_rank: Some(ms.rank),
        torsion_exponent: Some(big(&ms.torsion_exponent)),
        ..ResultBody::default()
    };
    match args.command {
        Command::Units | Command::Structure => {
            progress(args, "computing the unit group");
            let d = units(&r, ctx)?;
            if args.command == Command::Units {
                body.generators = Some(d.generators.iter().map(|g| r.display(g)).collect());
                body.lattice_basis = Some(lattice_rows(&d.relation_lattice));
            }
            body.rank = Some(d.rank);
            body.invariant_factors = Some(d.invariant_factors.iter().map(big).collect());
            body.provenance = Some(Provenance {
                unit_provider: d.provenance.as_str().to_string(),
                lattice_completeness: d.completeness.as_str().to_string(),
            });
            if args.check {
                body.check = Some(check_units(&r, &d)?);
            }
        }
        Command::Explattice => {
            progress(args, "computing the exponent lattice");
            let res = explattice(&r, &elements, ctx)?;
            if args.verbose {
                for s in &res.trace {
                    eprintln!("[fzalg] {}: {}", s.label, report::rows_text(&lattice_rows(&s.lattice)));
                }
                body.trace = Some(
                    res.trace.iter().map(|s| StepReport { label: s.label.clone(), lattice_basis: lattice_rows(&s.lattice) }).collect(),
                );
            }
            body.lattice_basis = Some(lattice_rows(&res.lattice));
            body.provenance = Some(Provenance {
                unit_provider: "exact".to_string(),
                lattice_completeness: res.completeness.as_str().to_string(),
            });
            if args.check {
                body.check = Some(check_lattice(&r, &elements, &res.lattice, res.completeness)?);
            }
        }
        Command::MinimalPrimes => {
            let ps = minimal_primes(&r, ctx)?;
            body.primes = Some(prime_reports(&r, &ps, ctx)?);
        }
        Command::Nilradical => {
            let ps = minimal_primes(&r, ctx)?;
            let nil = nilradical(&r, &ps, ctx)?;
            body.nilradical = Some(nil.generators.iter().map(|g| g.display(r.var_names())).collect());
            body.nilpotency_index = Some(nil.index);
        }
        Command::Idempotents => idempotents_into(&r, ctx, &mut body)?,
        Command::Decompose => {
            let ps = minimal_primes(&r, ctx)?;
            let nil = nilradical(&r, &ps, ctx)?;
            body.invariant_factors = Some(ms.invariant_factors.iter().map(big).collect());
            body.primes = Some(prime_reports(&r, &ps, ctx)?);
            body.nilradical = Some(nil.generators.iter().map(|g| g.display(r.var_names())).collect());
            body.nilpotency_index = Some(nil.index);
            idempotents_into(&r, ctx, &mut body)?;
        }
    }
    Ok((input, body))
}

fn prime_reports(r: &ExplicitAlgebra, ps: &[PrimeComponent], ctx: &Context) -> Result<Vec<PrimeReport>> {
    ps.iter()
        .map(|p| {
            Ok(PrimeReport {
                generators: p.ideal(r, ctx)?.generators.iter().map(|g| g.display(r.var_names())).collect(),
                characteristic: p.characteristic,
                residue_degree: p.degree(),
            })
        })
        .collect()
}

/// Integral idempotents splitting `R/Rad(0)` into its finite-field factors
/// and the torsion-free part, and the primitive idempotents of `Q ⊗ R`.
fn idempotents_into(r: &ExplicitAlgebra, ctx: &Context, body: &mut ResultBody) -> Result<()> {
    let ps = minimal_primes(r, ctx)?;
    let nil = nilradical(r, &ps, ctx)?;
    let rr = r.quotient(&nil.lattice);
    let split = torsion_split(&rr, &ps)?;
    body.idempotents = Some(split.idempotents.iter().map(|e| r.display(e)).collect());
    if r.module_structure().rank > 0 {
        if let Ok(q) = primitive_idempotents_q(r, ctx) {
            body.rational_idempotents =
                Some(q.elements.iter().map(|e| rational_poly(r, &q.extension, e).display(r.var_names())).collect());
        }
    }
    Ok(())
}

fn check_units(r: &ExplicitAlgebra, d: &UnitGroupDescription) -> Result<CheckReport> {
    if r.module_structure().rank > 0 {
        return Ok(CheckReport::skipped("the ring is infinite"));
    }
    let t = enumerate_ring(r)?;
    let brute = brute_unit_group(&t)?;
    let idx: Vec<usize> = d.generators.iter().map(|g| t.index(&t.from_algebra(g))).collect();
    let (lat, reached) = t.relations(&idx);
    let ok = reached == brute.units.len() && lat == d.relation_lattice && brute.invariant_factors == d.invariant_factors;
    Ok(CheckReport {
        status: if ok { "passed" } else { "failed" }.into(),
        detail: format!("{} units by exhaustion, {} generated", brute.units.len(), reached),
    })
}

fn check_lattice(r: &ExplicitAlgebra, us: &[fzalg_core::intlat::ZVec], lat: &IntegerLattice, c: Completeness) -> Result<CheckReport> {
    if r.module_structure().rank > 0 {
        let ok = verify_relations(r, us, lat)?;
        let note = if c == Completeness::Certified { "relations verified" } else { "relations verified, completeness heuristic" };
        return Ok(CheckReport { status: if ok { "passed" } else { "failed" }.into(), detail: note.into() });
    }
    let t = enumerate_ring(r)?;
    let brute = brute_explattice(&t, us)?;
    Ok(CheckReport {
        status: if brute == *lat { "passed" } else { "failed" }.into(),
        detail: format!("compared with exhaustion over {} elements", t.len()),
    })
}
