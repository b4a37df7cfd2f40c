//! `ringlab`: analyze finite rings, list their maximal left denominator sets,
//! verify the registry of characterizations and run the brute-force oracles.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ringlab::classify::classification_report;
use ringlab::io::{
    catalog_names, catalog_source, emit_profile, emit_report, emit_verdicts, load_table_file,
    parse_ring_expr, Format,
};
use ringlab::localization::{
    build_fraction_ring, exhaustive_denominator_sets, fraction_isomorphism_defect, localize,
    max_denominator_sets, maximal_by_inclusion,
};
use ringlab::ring::construct;
use ringlab::theorems::{verify_all, verify_theorem};
use ringlab::{Bounds, Error, FiniteRing, RingExpr, Subset};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Left localizations of finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: text or record.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    #[arg(long, global = true, default_value_t = 4096)]
    max_order: usize,

    #[arg(long, global = true, default_value_t = 16)]
    oracle_max_order: usize,

    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_ideals: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classification report.
    Analyze { source: String },
    /// Print the maximal left denominator sets.
    Maxden {
        source: String,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Check registry entries on one ring.
    Verify {
        source: String,
        #[command(flatten)]
        which: Which,
    },
    /// Run every registry entry on every catalog ring.
    VerifyCatalog,
    /// Compare the fraction construction with R/ass(S) for every denominator set.
    Oracle { source: String },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Which {
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

enum Failure {
    Error(Error),
    /// Some verdict failed or an oracle comparison disagreed.
    Disagreement,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = String::new();
    let result = run(&cli, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                ref b if b.is_bound() => 3,
                Error::InvariantViolation(_) => 1,
                _ => 2,
            })
        }
    }
}

/// A ring expression, a bare catalog name, or a table file path.
fn resolve_source(src: &str) -> Result<RingExpr, Error> {
    match parse_ring_expr(src) {
        Ok(expr) => Ok(expr),
        Err(parse_err) => {
            if catalog_source(src).is_ok() {
                Ok(RingExpr::Catalog(src.to_string()))
            } else if Path::new(src).is_file() {
                load_table_file(src)
            } else {
                Err(parse_err)
            }
        }
    }
}

fn load(src: &str, bounds: &Bounds) -> Result<FiniteRing, Error> {
    construct(&resolve_source(src)?, bounds)
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let format: Format = cli.format.parse()?;
    let bounds = Bounds {
        max_order: cli.max_order,
        oracle_max_order: cli.oracle_max_order,
        max_ideals: cli.max_ideals,
        ..Bounds::default()
    };
    match &cli.command {
        Command::Analyze { source } => {
            let ring = load(source, &bounds)?;
            out.push_str(&emit_report(&classification_report(&ring, &bounds)?, format));
            Ok(())
        }
        Command::Maxden { source, oracle } => {
            let ring = load(source, &bounds)?;
            let profile = max_denominator_sets(&ring, &bounds)?;
            out.push_str(&emit_profile(ring.label(), &profile, format));
            if *oracle {
                let all = exhaustive_denominator_sets(&ring, &bounds)?;
                let refs: Vec<&Subset> = all.iter().collect();
                let mut maximal: Vec<Subset> = maximal_by_inclusion(&refs)
                    .into_iter()
                    .map(|i| all[i].clone())
                    .collect();
                maximal.sort();
                let mut saturated: Vec<Subset> =
                    profile.records.iter().map(|r| r.set.clone()).collect();
                saturated.sort();
                let only_oracle: Vec<&Subset> =
                    maximal.iter().filter(|s| !saturated.contains(s)).collect();
                let only_saturated: Vec<&Subset> =
                    saturated.iter().filter(|s| !maximal.contains(s)).collect();
                let diffs = only_oracle.len() + only_saturated.len();
                match format {
                    Format::Record => {
                        let _ = writeln!(out, "oracle.count = {}", all.len());
                        let _ = writeln!(out, "oracle.maximal.count = {}", maximal.len());
                        for (i, s) in maximal.iter().enumerate() {
                            let _ = writeln!(out, "oracle.maximal.{} = {s}", i + 1);
                        }
                        let _ = writeln!(out, "oracle.diff = {diffs}");
                    }
                    Format::Text => {
                        let _ = writeln!(
                            out,
                            "  exhaustive oracle: {} denominator set(s), {} maximal",
                            all.len(),
                            maximal.len()
                        );
                        for s in &only_oracle {
                            let _ = writeln!(out, "  only in oracle: {s}");
                        }
                        for s in &only_saturated {
                            let _ = writeln!(out, "  only in saturation route: {s}");
                        }
                        let _ = writeln!(out, "  oracle diff: {diffs}");
                    }
                }
                if diffs > 0 {
                    return Err(Failure::Disagreement);
                }
            }
            Ok(())
        }
        Command::Verify { source, which } => {
            let ring = load(source, &bounds)?;
            let verdicts = match &which.theorem {
                Some(id) => vec![verify_theorem(&ring, id, &bounds)?],
                None => verify_all(&ring, &bounds)?,
            };
            out.push_str(&emit_verdicts(&verdicts, format));
            if verdicts.iter().all(|v| v.pass) {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
        Command::VerifyCatalog => {
            let mut failed = 0;
            let mut total = 0;
            for name in catalog_names() {
                let ring = construct(&RingExpr::Catalog(name.to_string()), &bounds)?;
                let verdicts = verify_all(&ring, &bounds)?;
                total += verdicts.len();
                failed += verdicts.iter().filter(|v| !v.pass).count();
                if format == Format::Record {
                    let _ = writeln!(out, "ring = {name}");
                }
                out.push_str(&emit_verdicts(&verdicts, format));
            }
            match format {
                Format::Record => {
                    let _ = writeln!(out, "verdicts.count = {total}");
                    let _ = writeln!(out, "verdicts.failed = {failed}");
                }
                Format::Text => {
                    let _ = writeln!(out, "{total} verdicts, {failed} failed");
                }
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
        Command::Oracle { source } => {
            let ring = load(source, &bounds)?;
            let sets = if ring.order() <= bounds.oracle_max_order {
                exhaustive_denominator_sets(&ring, &bounds)?
            } else {
                max_denominator_sets(&ring, &bounds)?
                    .records
                    .into_iter()
                    .map(|r| r.set)
                    .collect()
            };
            let mut diffs = 0;
            for (i, set) in sets.iter().enumerate() {
                let frac = build_fraction_ring(&ring, set, &bounds)?;
                let view = localize(&ring, set)?;
                let defect = fraction_isomorphism_defect(&frac, &view);
                diffs += usize::from(defect.is_some());
                match format {
                    Format::Record => {
                        let k = format!("oracle.{}", i + 1);
                        let _ = writeln!(out, "{k}.S = {set}");
                        let _ = writeln!(out, "{k}.order = {}", frac.ring.order());
                        let _ = writeln!(out, "{k}.ok = {}", defect.is_none());
                    }
                    Format::Text => {
                        let status = match &defect {
                            None => "ok".to_string(),
                            Some(why) => format!("MISMATCH: {why}"),
                        };
                        let _ = writeln!(
                            out,
                            "S = {set}: fractions {} / R/ass(S) {}: {status}",
                            frac.ring.order(),
                            view.den.quotient.order()
                        );
                    }
                }
            }
            match format {
                Format::Record => {
                    let _ = writeln!(out, "oracle.count = {}", sets.len());
                    let _ = writeln!(out, "oracle.diff = {diffs}");
                }
                Format::Text => {
                    let _ = writeln!(out, "{} denominator set(s), {diffs} mismatch(es)", sets.len());
                }
            }
            if diffs == 0 {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for name in catalog_names() {
                        let src = catalog_source(name)?;
                        let shown = if src.contains('\n') { "(table)" } else { src };
                        let _ = writeln!(out, "{name}\t{shown}");
                    }
                }
                CatalogAction::Show { name } => {
                    let src = catalog_source(name)?;
                    let ring = construct(&RingExpr::Catalog(name.clone()), &bounds)?;
                    if src.contains('\n') {
                        out.push_str(src);
                    } else {
                        let _ = writeln!(out, "{src}");
                    }
                    let _ = writeln!(out, "# order {}", ring.order());
                }
            }
            Ok(())
        }
    }
}
