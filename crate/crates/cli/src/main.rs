//! `sptcrank`: spt counts, crank tables, identity checks and bijections.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use identity_lab::tables::{marked_rows, pair_rows, vector_rows};
use identity_lab::{run_checks, Lab, LabError, CATALOG};
use partition_enum::gf::spt_generating_function;
use partition_enum::{enumerate_partitions, Family, SptVariant};
use serde_json::{json, Value};
use series_core::Exec;
use spt_cranks::{crank_bar, d_n, enumerate_marked, phi, psi, SptFamily};

use output::{big, lab_value, Format, Table};

#[derive(Parser)]
#[command(name = "sptcrank", version, about = "Spt-cranks of overpartitions: tables, checks and bijections")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Run everything on the current thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smallest-parts counts for 1 ≤ n ≤ n-max.
    Spt {
        #[arg(long, default_value = "sptbar")]
        variant: SptVariant,
        #[arg(long)]
        n_max: usize,
    },
    /// Two-variable table entries (m, n, value), or residue-class sums with --classes.
    Table {
        family: Family,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        classes: Option<u32>,
    },
    /// Run checks from the catalog.
    Verify {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        #[arg(long, visible_alias = "n-max")]
        order: Option<usize>,
        /// Report per-check wall time (JSON metadata, stderr otherwise).
        #[arg(long)]
        timings: bool,
    },
    /// Walk one of the bijections.
    Bijection {
        #[command(subcommand)]
        which: Bijection,
    },
    /// Worked-example tables, one object per row.
    Enumerate {
        kind: Objects,
        n: u32,
        /// sbar, sbar1, sbar2 or s2bar; for marked objects only the parity matters.
        #[arg(long, default_value = "sbar")]
        family: SptFamily,
        /// Moduli for the residue columns.
        #[arg(long = "mod", value_parser = clap::value_parser!(u32).range(1..))]
        moduli: Vec<u32>,
    },
    /// List the available checks.
    Catalog,
}

#[derive(Subcommand)]
enum Bijection {
    /// Marked overpartitions of n and their images.
    Phi { n: u32 },
    /// Partitions of `size` into distinct parts > n and their images.
    Psi {
        n: u32,
        #[arg(long)]
        size: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Objects {
    Vectors,
    Pairs,
    Marked,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        match e {
            LabError::UnknownCheck(_) | LabError::UnknownComponent { .. } | LabError::ZeroOrder => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<spt_cranks::CrankError> for Failure {
    fn from(e: spt_cranks::CrankError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let lab = Lab::new(if cli.sequential { Exec::Sequential } else { Exec::default() });
    let (table, ok) = match run(cli.command, &lab) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            return ExitCode::FAILURE;
        }
    };
    let mut out = io::stdout().lock();
    if let Err(e) = table.write(cli.format, &mut out).and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(command: Command, lab: &Lab) -> Result<(Table, bool), Failure> {
    Ok(match command {
        Command::Spt { variant, n_max } => (spt(variant, n_max), true),
        Command::Table { family, n_max, classes } => (table(family, n_max, classes, lab)?, true),
        Command::Verify { ids, all, order, timings } => verify(ids, all, order, timings, lab)?,
        Command::Bijection { which: Bijection::Phi { n } } => (bijection_phi(n)?, true),
        Command::Bijection { which: Bijection::Psi { n, size } } => (bijection_psi(n, size)?, true),
        Command::Enumerate { kind, n, family, moduli } => (enumerate(kind, n, family, &moduli)?, true),
        Command::Catalog => (catalog(), true),
    })
}

fn spt(variant: SptVariant, n_max: usize) -> Table {
    let mut t = Table::new("spt", &["n", "value"]);
    let gf = spt_generating_function(variant, n_max).to_integers().expect("integer series");
    for (n, c) in gf.iter().enumerate().take(n_max + 1).skip(1) {
        t.push(vec![json!(n), big(c)]);
    }
    t
}

fn table(family: Family, n_max: usize, classes: Option<u32>, lab: &Lab) -> Result<Table, Failure> {
    let tab = lab.table(family, n_max)?;
    Ok(match classes {
        None => {
            let mut t = Table::new("table", &["m", "n", "value"]);
            for (m, n, c) in tab.entries().filter(|&(_, n, c)| n <= n_max && c.sign() != num_bigint::Sign::NoSign) {
                t.push(vec![json!(m), json!(n), big(c)]);
            }
            t
        }
        Some(k) => {
            let mut t = Table::new("table", &["k", "t", "n", "value"]);
            for n in 0..=n_max {
                for r in 0..k {
                    t.push(vec![json!(r), json!(k), json!(n), big(&tab.class_sum(r, k, n))]);
                }
            }
            t
        }
    })
}

fn verify(
    ids: Vec<String>,
    all: bool,
    order: Option<usize>,
    timings: bool,
    lab: &Lab,
) -> Result<(Table, bool), Failure> {
    let ids: Vec<&str> = if all {
        CATALOG.iter().map(|s| s.id).collect()
    } else if ids.is_empty() {
        return Err(Failure::Usage("give check ids or --all".into()));
    } else {
        ids.iter().map(String::as_str).collect()
    };
    let reports = run_checks(&ids, order, lab)?;
    let mut t =
        Table::new("verify", &["check_id", "order_checked", "status", "witness_n", "witness_m", "expected", "got"]);
    for r in &reports {
        let w = r.witness.as_ref();
        t.push(vec![
            json!(r.check_id),
            json!(r.order_checked),
            json!(r.status.to_string()),
            w.map_or(Value::Null, |w| json!(w.n)),
            w.and_then(|w| w.m).map_or(Value::Null, |m| json!(m)),
            w.map_or(Value::Null, |w| lab_value(&w.expected)),
            w.map_or(Value::Null, |w| lab_value(&w.got)),
        ]);
    }
    t.text = Some(reports.iter().map(|r| r.to_string()).collect());
    if timings {
        let ms: serde_json::Map<String, Value> =
            reports.iter().map(|r| (r.check_id.clone(), json!(r.elapsed.as_secs_f64() * 1e3))).collect();
        for r in &reports {
            eprintln!("{} {:.3} ms", r.check_id, r.elapsed.as_secs_f64() * 1e3);
        }
        t.metadata = Some(json!({ "elapsed_ms": ms }));
    }
    let ok = reports.iter().all(|r| r.passed());
    Ok((t, ok))
}

fn bijection_phi(n: u32) -> Result<Table, Failure> {
    let mut t = Table::new("bijection", &["pi", "j", "pi1", "pi2", "nu", "k", "kbar", "sptcrank", "image", "crank"]);
    for m in enumerate_marked(n, None) {
        let image = phi(&m)?;
        t.push(vec![
            json!(m.overpartition().to_string()),
            json!(m.j()),
            json!(m.pi1().to_string()),
            json!(m.pi2().to_string()),
            json!(m.pi1().nu()),
            json!(m.k_pi2()),
            json!(m.kbar()),
            json!(m.sptcrank()),
            json!(image.to_string()),
            json!(crank_bar(&image)?),
        ]);
    }
    Ok(t)
}

fn bijection_psi(n: u32, size: u32) -> Result<Table, Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    let mut t = Table::new("bijection", &["partition", "image"]);
    for p in enumerate_partitions(size, &d_n(n)) {
        t.push(vec![json!(p.to_string()), json!(psi(n, &p)?.to_string())]);
    }
    Ok(t)
}

fn enumerate(kind: Objects, n: u32, family: SptFamily, moduli: &[u32]) -> Result<Table, Failure> {
    let rows = match kind {
        Objects::Vectors => vector_rows(n, family, moduli),
        Objects::Pairs => pair_rows(n, family, moduli)?,
        Objects::Marked => marked_rows(n, family.smallest_parity(), moduli),
    };
    let mut t = Table::new("enumerate", &["row"]);
    for r in rows {
        t.push(vec![json!(r.trim_end())]);
    }
    Ok(t)
}

fn catalog() -> Table {
    let mut t = Table::new("catalog", &["id", "kind", "default_order", "order_meaning", "description"]);
    for s in CATALOG {
        t.push(vec![
            json!(s.id),
            json!(s.kind.name()),
            json!(s.default_order),
            json!(s.kind.order_meaning()),
            json!(s.description),
        ]);
    }
    t.text = Some(
        CATALOG
            .iter()
            .map(|s| format!("{:<16} {:<14} {:>4}  {}", s.id, s.kind.name(), s.default_order, s.description))
            .collect(),
    );
    t
}
