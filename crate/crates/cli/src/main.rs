mod file;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use algebroid::decide::{
    assert_preconditions, decide_irreducible_with, is_tropism, monomial_witness, value_semigroup, verify_certificate,
    Certificate, DecideConfig, DecisionReport, Irreducibility,
};
use algebroid::groebner::Ideal;
use algebroid::localalg::{initial_ideal, intersection_number};
use algebroid::polyring::{TermOrder, WeightVec};
use algebroid::semigroups::Semigroup;
use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use file::IdealFile;

/// Irreducibility certificates and value semigroups for algebroid curves.
#[derive(Parser)]
#[command(name = "algebroid", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide irreducibility. Exit 0 irreducible, 1 reducible, 2 error.
    Decide {
        path: PathBuf,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
        /// Re-check the certificate before reporting.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 4096)]
        trunc_cap: usize,
        #[arg(long, default_value_t = 256)]
        iter_cap: usize,
        /// Replace the characteristic declared in the file.
        #[arg(long)]
        char_override: Option<u64>,
    },
    /// Value semigroup of a prime curve: weights, minimal generators, conductor.
    Semigroup { path: PathBuf },
    /// Intersection number int(f; I).
    Int {
        path: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Generators of the initial ideal in_w(I).
    Initial {
        path: PathBuf,
        #[arg(long)]
        weights: String,
    },
    /// Whether in_w(I) is monomial-free. Exit 0 yes, 1 no.
    Tropism {
        path: PathBuf,
        #[arg(long)]
        weights: String,
    },
    /// Check a JSON certificate or decision report. Exit 0 pass, 1 fail.
    Verify { path: PathBuf },
}

fn load(path: &Path, char_override: Option<u64>) -> Result<Ideal> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut f = IdealFile::parse(&text)?;
    if let Some(p) = char_override {
        f.ring.char = p;
    }
    Ok(f.ideal()?)
}

fn weights(text: &str) -> Result<WeightVec> {
    text.parse().map_err(|e| anyhow!("{e}"))
}

fn print_report(r: &DecisionReport) {
    let c = &r.certificate;
    let verdict = match r.verdict {
        Irreducibility::Irreducible => "irreducible",
        Irreducibility::Reducible => "reducible",
    };
    println!("verdict: {verdict}");
    println!("ring: {} over {}", c.ring.vars.join(", "), field_name(c));
    println!("ideal:");
    for g in &c.generators {
        println!("  {g}");
    }
    for s in &c.transcript {
        println!("adjoined: {} = {}", s.var, s.poly);
    }
    if let Some(w) = &c.data.tropism {
        println!("tropism: {w}");
    }
    if let (Some(w), Some(m)) = (&c.data.weights, &c.data.witness) {
        println!("witness: {m} in in_{w}(I)");
    }
    if let Some(rays) = &c.data.rays {
        let shown: Vec<String> = rays.iter().map(|r| r.to_string()).collect();
        println!("tropisms: {}", shown.join(" "));
    }
    println!(
        "stats: {} outer, {} inner, {} parametric tests, precision {}",
        r.stats.outer_iterations, r.stats.inner_steps, r.stats.parametric_tests, r.stats.max_precision
    );
}

fn field_name(c: &Certificate) -> String {
    let base = match c.ring.char {
        0 => "Q".to_string(),
        p => format!("F_{p}"),
    };
    match &c.ring.ext {
        Some(e) => format!("{base}[{}]/({})", e.name, e.modulus),
        None => base,
    }
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Decide {
            path,
            json,
            verify,
            trunc_cap,
            iter_cap,
            char_override,
        } => {
            let ideal = assert_preconditions(&load(&path, char_override)?)?;
            let report = decide_irreducible_with(&ideal, &DecideConfig { trunc_cap, iter_cap })?;
            if verify {
                verify_certificate(&report.certificate).map_err(|e| anyhow!("certificate rejected: {e}"))?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report(&report);
                if verify {
                    println!("certificate: verified");
                }
            }
            Ok(match report.verdict {
                Irreducibility::Irreducible => 0,
                Irreducibility::Reducible => 1,
            })
        }
        Cmd::Semigroup { path } => {
            let ideal = assert_preconditions(&load(&path, None)?)?;
            let (_, w, steps) = value_semigroup(&ideal)?;
            for (v, p) in &steps {
                println!("adjoined: {v} = {p}");
            }
            let s = Semigroup::new(&w)?;
            let gens: Vec<String> = s.minimal_generators().iter().map(u64::to_string).collect();
            println!("weights: {w}");
            println!("generators: {}", gens.join(", "));
            println!("conductor: {}", s.conductor()?);
            Ok(0)
        }
        Cmd::Int { path, poly } => {
            let ideal = load(&path, None)?;
            let f = ideal.ring().parse(&poly)?;
            println!("{}", intersection_number(&f, &ideal)?);
            Ok(0)
        }
        Cmd::Initial { path, weights: w } => {
            let ideal = load(&path, None)?;
            let init = initial_ideal(&ideal, &weights(&w)?)?;
            for g in init.groebner(&TermOrder::DegRevLex).iter() {
                println!("{g}");
            }
            Ok(0)
        }
        Cmd::Tropism { path, weights: w } => {
            let ideal = load(&path, None)?;
            let w = weights(&w)?;
            if is_tropism(&ideal, &w)? {
                println!("true");
                return Ok(0);
            }
            println!("false");
            if !w.has_infinite() {
                if let Some(m) = monomial_witness(&ideal, &w)? {
                    println!("witness: {}", ideal.ring().monomial(m));
                }
            }
            Ok(1)
        }
        Cmd::Verify { path } => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let cert: Certificate = match value.get("certificate") {
                Some(c) => serde_json::from_value(c.clone())?,
                None => serde_json::from_value(value)?,
            };
            match verify_certificate(&cert) {
                Ok(()) => {
                    println!("pass");
                    Ok(0)
                }
                Err(e) => {
                    println!("fail: {e}");
                    Ok(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
