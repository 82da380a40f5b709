use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use grr_census::bounds::{evaluate, Exponent};
use grr_census::scenario::ScenarioSummary;
use grr_census::suites::{verify_suite, Status, SuiteRecord, VerificationReport, SUITES};
use grr_census::{
    build_scenarios, exhaustive_census, monte_carlo_census, parse_manifest, unlabeled_census, CensusRecord, Manifest,
    Method, Mode, Proportion, Strategy,
};
use grr_core::{load_group, HalfInt};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "grrcensus", version, about = "Cayley graph censuses and bound verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Graph,
    Digraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMethod {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliStrategy {
    Full,
    Aut,
    GraphAut,
}

#[derive(Subcommand)]
enum Command {
    /// Count DRRs/GRRs and normal Cayley (di)graphs of one group.
    Census {
        /// Builtin descriptor or path to a .gtab file.
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "graph")]
        mode: CliMode,
        #[arg(long, value_enum, default_value = "exhaustive")]
        method: CliMethod,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON record here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification suite over a corpus; exits 1 on any failure.
    Verify {
        /// Suite id, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// Corpus manifest; defaults to the bundled one.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Build transitive overgroups of the regular representation.
    Scenarios {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        strategy: CliStrategy,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Evaluate the asymptotic proportion bounds at one order.
    Bounds {
        #[arg(long)]
        r: u64,
        /// c(R), as an integer, `N/2`, or `N.5`.
        #[arg(long, value_parser = parse_half)]
        c: HalfInt,
        #[arg(long)]
        csv: bool,
    },
    /// Count isomorphism classes of Cayley graphs and GRR classes.
    Unlabeled {
        #[arg(long)]
        group: String,
        #[arg(long)]
        csv: bool,
    },
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    let bad = || format!("expected an integer or half-integer, got {s:?}");
    if let Some(n) = s.strip_suffix("/2") {
        return n.trim().parse::<i64>().map(HalfInt).map_err(|_| bad());
    }
    if let Some(n) = s.strip_suffix(".5") {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let twice = if s.starts_with('-') { 2 * n - 1 } else { 2 * n + 1 };
        return Ok(HalfInt(twice));
    }
    let n = s.strip_suffix(".0").unwrap_or(s);
    n.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad())
}

/// Whether every check passed; errors map to exit code 2 instead.
struct Outcome {
    passed: bool,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn to_csv<T: Serialize>(rows: &[T]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?)
}

#[derive(Serialize)]
struct CensusRow<'a> {
    group: &'a str,
    order: usize,
    mode: Mode,
    method: Method,
    total: u64,
    drr_or_grr: u64,
    normal: u64,
    non_regular: u64,
    proportion: f64,
    half_width: Option<f64>,
    seed: Option<u64>,
    elapsed_ms: f64,
}

impl<'a> From<&'a CensusRecord> for CensusRow<'a> {
    fn from(r: &'a CensusRecord) -> Self {
        CensusRow {
            group: &r.group,
            order: r.order,
            mode: r.mode,
            method: r.method,
            total: r.total,
            drr_or_grr: r.counts.drr_or_grr,
            normal: r.counts.normal,
            non_regular: r.counts.non_regular,
            proportion: r.proportion.value(),
            half_width: match r.proportion {
                Proportion::Estimate { half_width, .. } => Some(half_width),
                Proportion::Exact { .. } => None,
            },
            seed: r.seed,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

#[derive(Serialize)]
struct ScenarioRow<'a> {
    group: &'a str,
    strategy: String,
    label: &'a str,
    overgroup_order: &'a str,
    core_order: usize,
    quotient_order: usize,
    h_orbits: usize,
    kappa: usize,
    transitive: bool,
    proper: bool,
    r_maximal: Option<bool>,
    quotient_grr_eligible: bool,
    degenerate: bool,
}

#[derive(Serialize)]
struct BoundRow {
    r: u64,
    c_r: f64,
    bound: &'static str,
    exponent: f64,
    count_exponent: f64,
    vacuous: bool,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Census { group, mode, method, samples, seed, jobs, out, csv } => {
            let g = load_group(&group)?;
            let mode = match mode {
                CliMode::Graph => Mode::Graph,
                CliMode::Digraph => Mode::Digraph,
            };
            let rec = match method {
                CliMethod::Exhaustive => exhaustive_census(&g, mode, jobs)?,
                CliMethod::Sample => monte_carlo_census(&g, mode, samples, seed, jobs)?,
            };
            let text = if csv { to_csv(&[CensusRow::from(&rec)])? } else { serde_json::to_string_pretty(&rec)? + "\n" };
            emit(out.as_deref(), &text)?;
            Ok(Outcome { passed: true })
        }
        Command::Verify { suite, max_order, corpus, out, csv } => {
            let manifest = match &corpus {
                Some(p) => {
                    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    parse_manifest(&text)?
                }
                None => Manifest::default_corpus(),
            };
            let groups = manifest.load(max_order)?;
            let ids: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut report = VerificationReport::default();
            for id in ids {
                report.records.extend(verify_suite(id, max_order, &groups)?.records);
            }
            let text = if csv { to_csv::<SuiteRecord>(&report.records)? } else { report.to_json_lines() };
            emit(out.as_deref(), &text)?;
            eprintln!(
                "{} records: {} pass, {} fail, {} degenerate",
                report.records.len(),
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Degenerate)
            );
            Ok(Outcome { passed: report.passed() })
        }
        Command::Scenarios { group, strategy, out, csv } => {
            let g = load_group(&group)?;
            let strategy = match strategy {
                CliStrategy::Full => Strategy::Full,
                CliStrategy::Aut => Strategy::Aut,
                CliStrategy::GraphAut => Strategy::GraphAut,
            };
            let scenarios = build_scenarios(&g, strategy)?;
            let summaries: Vec<ScenarioSummary> = scenarios.iter().map(|s| ScenarioSummary::new(&g, s)).collect();
            let text = if csv {
                let rows: Vec<ScenarioRow> = summaries
                    .iter()
                    .map(|s| ScenarioRow {
                        group: &s.group,
                        strategy: s.strategy.to_string(),
                        label: &s.label,
                        overgroup_order: &s.overgroup_order,
                        core_order: s.core.len(),
                        quotient_order: s.quotient_order,
                        h_orbits: s.h_orbits.len(),
                        kappa: s.kappa,
                        transitive: s.flags.transitive,
                        proper: s.flags.proper,
                        r_maximal: s.flags.r_maximal,
                        quotient_grr_eligible: s.flags.quotient_grr_eligible,
                        degenerate: s.flags.degenerate,
                    })
                    .collect();
                to_csv(&rows)?
            } else {
                summaries.iter().map(|s| serde_json::to_string(s).map(|l| l + "\n")).collect::<Result<String, _>>()?
            };
            emit(out.as_deref(), &text)?;
            Ok(Outcome { passed: true })
        }
        Command::Bounds { r, c, csv } => {
            let Some(t) = evaluate(r, c) else { bail!("bounds need r >= 3, got {r}") };
            let text = if csv {
                let row = |bound, e: &Exponent| BoundRow {
                    r,
                    c_r: t.c_r,
                    bound,
                    exponent: e.exponent,
                    count_exponent: e.count_exponent,
                    vacuous: e.vacuous,
                };
                to_csv(&[
                    row("grr_proportion", &t.grr_proportion),
                    row("unlabeled_ratio", &t.unlabeled_ratio),
                    row("normal_proportion", &t.normal_proportion),
                ])?
            } else {
                serde_json::to_string_pretty(&t)? + "\n"
            };
            emit(None, &text)?;
            Ok(Outcome { passed: true })
        }
        Command::Unlabeled { group, csv } => {
            let g = load_group(&group)?;
            let u = unlabeled_census(&g)?;
            let text = if csv { to_csv(&[&u])? } else { serde_json::to_string_pretty(&u)? + "\n" };
            emit(None, &text)?;
            Ok(Outcome { passed: true })
        }
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
    match run(cli) {
        Ok(Outcome { passed: true }) => ExitCode::SUCCESS,
        Ok(Outcome { passed: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
