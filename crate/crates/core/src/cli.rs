//! Command-line front end: `construct`, `pipeline` and `verify`.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 contract failure, 4 infeasible.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::gf;
use crate::constructions::{
    bipartite_sum, brown, cayley_sum, er_polarity, h_graph, h_star, norm_graph, norm_graph_degree, AbelianGroup,
};
use crate::error::{Error, Infeasibility, Result};
use crate::graph::Graph;
use crate::numtheory::{bose_chowla, quotient_set};
use crate::regularize::{
    pipeline_c4, pipeline_k2t, pipeline_k33, pipeline_kst, LogStep, PipelineOptions, DEFAULT_HAMILTON_BUDGET,
};
use crate::verify::VerificationReport;

#[derive(Debug, Parser)]
#[command(name = "rexlab", version, about = "Build and verify regular F-free graphs")]
pub struct Cli {
    /// Seed for the randomized Hamilton-cycle search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node-expansion budget per Hamilton-cycle search.
    #[arg(long, global = true, env = "REXLAB_BUDGET", default_value_t = DEFAULT_HAMILTON_BUDGET)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one graph family and check its contract.
    Construct(ConstructArgs),
    /// Run an end-to-end regular construction at a given vertex count.
    Pipeline(PipelineArgs),
    /// Read an edge-list file and report on it.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    BipartiteC4,
    BipartiteK2t,
    H,
    HStar,
    Brown,
    Norm,
    ErParsons,
    CayleySum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolarityPart {
    Er,
    R1,
    R2,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Edge-list output file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON report file (printed to stdout when absent).
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Include dense adjacency and Laplacian spectra in the report.
    #[arg(long)]
    pub spectra: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub t: Option<u64>,
    /// Side length M of a bipartite sum graph.
    #[arg(long)]
    pub m: Option<u64>,
    /// Number of difference-set elements to use (default: all).
    #[arg(long)]
    pub k: Option<usize>,
    /// Keep loops at absolute points (norm, cayley-sum).
    #[arg(long)]
    pub loops: bool,
    /// Cyclic orders of the group, e.g. `4,6`.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<u64>,
    /// Connection set as mixed-radix element indices, e.g. `1,5,7`.
    #[arg(long, value_delimiter = ',')]
    pub elements: Vec<usize>,
    /// Which polarity graph to emit.
    #[arg(long, value_enum, default_value_t = PolarityPart::Er)]
    pub part: PolarityPart,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PipelineFamily {
    C4,
    K2t,
    K33,
    Kst,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    #[arg(value_enum)]
    pub family: PipelineFamily,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub t: Option<u64>,
    /// Largest number of prime powers in a decomposition.
    #[arg(long, default_value_t = crate::numtheory::MAX_PARTS)]
    pub max_parts: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// K_{s,t}-freeness query; repeatable.
    #[arg(long, num_args = 2, value_names = ["S", "T"], action = clap::ArgAction::Append)]
    pub free: Vec<usize>,
    #[arg(long)]
    pub spectra: bool,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContractCheck {
    pub check: String,
    pub passed: bool,
}

/// JSON document written by every command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandReport {
    pub schema: u32,
    pub command: String,
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub contract: Vec<ContractCheck>,
    pub verification: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub construction_log: Vec<LogStep>,
    pub infeasibility: Option<Infeasibility>,
}

impl CommandReport {
    fn new(command: &str, family: Option<String>) -> Self {
        CommandReport {
            schema: crate::verify::REPORT_SCHEMA,
            command: command.to_string(),
            family,
            contract: Vec::new(),
            verification: None,
            construction_log: Vec::new(),
            infeasibility: None,
        }
    }

    fn check(&mut self, check: impl Into<String>, passed: bool) {
        self.contract.push(ContractCheck {
            check: check.into(),
            passed,
        });
    }

    pub fn contract_holds(&self) -> bool {
        self.contract.iter().all(|c| c.passed)
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| Error::invalid(format!("{family} needs --{flag}")))
}

fn family_name(f: Family) -> String {
    f.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn factorial(s: usize) -> usize {
    (1..=s).product()
}

fn write_edge_list(g: &Graph, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    g.write_edge_list(&mut w)?;
    w.flush()?;
    Ok(())
}

fn emit(report: &CommandReport, path: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let json = serde_json::to_string_pretty(report).expect("report serializes");
    match path {
        Some(p) => std::fs::write(p, json + "\n")?,
        None => writeln!(stdout, "{json}")?,
    }
    Ok(())
}

/// Builds the requested family and records its contract checks; the freeness query is
/// the one the family is claimed to satisfy.
fn build_family(a: &ConstructArgs, report: &mut CommandReport) -> Result<(Graph, (usize, usize))> {
    let name = family_name(a.family);
    let name = name.as_str();
    Ok(match a.family {
        Family::BipartiteC4 => {
            let p = need(a.p, "p", name)?;
            let m = need(a.m, "m", name)?;
            let set = bose_chowla(p, &gf(p, 2)?)?;
            let k = a.k.unwrap_or(set.len()).min(set.len());
            let g = bipartite_sum(m, &set.elements()[..k], &set)?;
            report.check(format!("{k}-regular"), g.degrees().iter().all(|&d| d == k));
            (g, (2, 2))
        }
        Family::BipartiteK2t => {
            let p = need(a.p, "p", name)?;
            let t = need(a.t, "t", name)?;
            let m = need(a.m, "m", name)?;
            let set = quotient_set(p, t, &gf(p, 2)?)?;
            let k = a.k.unwrap_or(set.len()).min(set.len());
            let g = bipartite_sum(m, &set.elements()[..k], &set)?;
            report.check(format!("{k}-regular"), g.degrees().iter().all(|&d| d == k));
            (g, (2, 2 * t as usize + 1))
        }
        Family::H => {
            let (p, t) = (need(a.p, "p", name)?, need(a.t, "t", name)?);
            let g = h_graph(p, t)?;
            let low = g.degrees().iter().filter(|&&d| d as u64 == p - 2).count();
            let high = g.degrees().iter().filter(|&&d| d as u64 == p - 1).count();
            report.check(format!("{} vertices of degree {}", p - 1, p - 2), low as u64 == p - 1);
            report.check(format!("all other vertices of degree {}", p - 1), low + high == g.n());
            (g, (2, t as usize + 1))
        }
        Family::HStar => {
            let (p, t) = (need(a.p, "p", name)?, need(a.t, "t", name)?);
            let g = h_star(p, t)?;
            report.check(format!("{} vertices", p * (p - 1) / t + 1), g.n() as u64 == p * (p - 1) / t + 1);
            report.check(format!("{}-regular", p - 1), g.degrees().iter().all(|&d| d as u64 == p - 1));
            (g, (2, 2 * t as usize + 1))
        }
        Family::Brown => {
            let p = need(a.p, "p", name)?;
            let g = brown(p)?;
            report.check(format!("{}-regular", p * p - p), g.degrees().iter().all(|&d| d as u64 == p * p - p));
            (g, (3, 3))
        }
        Family::Norm => {
            let (p, s) = (need(a.p, "p", name)?, need(a.s, "s", name)?);
            let g = norm_graph(p, s, a.loops)?;
            let d = norm_graph_degree(p, s) as usize;
            report.check(format!("{d} absolute points"), g.absolute_points().len() == d);
            let ok = (0..g.n()).all(|v| {
                let expected = if a.loops || g.absolute_points().binary_search(&v).is_err() { d } else { d - 1 };
                g.degree(v) == expected
            });
            report.check(format!("loop-inclusive degree {d}"), ok);
            (g, (s as usize, factorial(s as usize) + 1))
        }
        Family::ErParsons => {
            let q = need(a.q.or(a.p), "q", name)?;
            let pg = er_polarity(q)?;
            match a.part {
                PolarityPart::Er => {
                    report.check(format!("{} absolute points", q + 1), pg.er.absolute_points().len() as u64 == q + 1);
                    (pg.er, (2, 2))
                }
                PolarityPart::R1 => {
                    let d = (q as usize - 1) / 2;
                    report.check(format!("{d}-regular"), pg.r1.degrees().iter().all(|&x| x == d));
                    (pg.r1, (2, 2))
                }
                PolarityPart::R2 => {
                    let d = (q as usize + 1) / 2;
                    report.check(format!("{d}-regular"), pg.r2.degrees().iter().all(|&x| x == d));
                    (pg.r2, (2, 2))
                }
            }
        }
        Family::CayleySum => {
            if a.orders.is_empty() {
                return Err(Error::invalid("cayley-sum needs --orders"));
            }
            let group = AbelianGroup::new(a.orders.clone())?;
            if let Some(&bad) = a.elements.iter().find(|&&e| e >= group.order()) {
                return Err(Error::invalid(format!("element index {bad} outside the group")));
            }
            let mut conn = a.elements.clone();
            conn.sort_unstable();
            conn.dedup();
            let g = cayley_sum(&group, &conn, a.loops)?;
            if a.loops {
                report.check(
                    format!("loop-inclusive degree {}", conn.len()),
                    g.degrees().iter().all(|&d| d == conn.len()),
                );
            }
            (g, (2, 2))
        }
    })
}

pub fn cmd_construct(a: &ConstructArgs, stdout: &mut dyn Write) -> Result<CommandReport> {
    let mut report = CommandReport::new("construct", Some(family_name(a.family)));
    let (g, (s, t)) = build_family(a, &mut report)?;
    let verification = VerificationReport::build(&g, &[(s, t)], a.output.spectra)?;
    if a.family != Family::CayleySum {
        report.check(format!("K_{{{s},{t}}}-free"), verification.is_free(s, t) == Some(true));
    }
    report.verification = Some(verification);
    if let Some(path) = &a.output.out {
        write_edge_list(&g, path)?;
    }
    emit(&report, a.output.report.as_deref(), stdout)?;
    Ok(report)
}

pub fn cmd_pipeline(a: &PipelineArgs, opts: &PipelineOptions, stdout: &mut dyn Write) -> Result<CommandReport> {
    let family = match a.family {
        PipelineFamily::C4 => "c4",
        PipelineFamily::K2t => "k2t",
        PipelineFamily::K33 => "k33",
        PipelineFamily::Kst => "kst",
    };
    let mut report = CommandReport::new("pipeline", Some(family.to_string()));
    let opts = PipelineOptions {
        max_parts: a.max_parts,
        ..*opts
    };
    let run = match a.family {
        PipelineFamily::C4 => pipeline_c4(a.n, &opts).map(|r| (r, (2, 2))),
        PipelineFamily::K2t => {
            let t = need(a.t, "t", "k2t")?;
            pipeline_k2t(a.n, t, &opts).map(|r| (r, (2, 2 * t as usize + 1)))
        }
        PipelineFamily::K33 => pipeline_k33(a.n, &opts).map(|r| (r, (3, 3))),
        PipelineFamily::Kst => {
            let s = need(a.s, "s", "kst")?;
            let t = need(a.t, "t", "kst")?;
            pipeline_kst(a.n, s, t, &opts).map(|r| (r, (s as usize, t as usize)))
        }
    };
    let (result, (s, t)) = match run {
        Ok(r) => r,
        Err(Error::Infeasible(inf)) => {
            report.infeasibility = Some(inf.clone());
            emit(&report, a.output.report.as_deref(), stdout)?;
            return Err(Error::Infeasible(inf));
        }
        Err(e) => return Err(e),
    };
    let verification = VerificationReport::build(&result.graph, &[(s, t)], a.output.spectra)?.with_bound(result.target_bound);
    report.check(format!("{}-regular", result.degree), verification.regular_degree == Some(result.degree));
    report.check(format!("K_{{{s},{t}}}-free"), verification.is_free(s, t) == Some(true));
    report.verification = Some(verification);
    report.construction_log = result.construction_log;
    if let Some(path) = &a.output.out {
        write_edge_list(&result.graph, path)?;
    }
    emit(&report, a.output.report.as_deref(), stdout)?;
    Ok(report)
}

pub fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<CommandReport> {
    let g = Graph::read_edge_list(BufReader::new(File::open(&a.file)?))?;
    let queries: Vec<(usize, usize)> = a.free.chunks(2).map(|c| (c[0], c[1])).collect();
    let mut report = CommandReport::new("verify", None);
    report.verification = Some(VerificationReport::build(&g, &queries, a.spectra)?);
    emit(&report, a.report.as_deref(), stdout)?;
    Ok(report)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let opts = PipelineOptions {
        hamilton_budget: cli.budget,
        seed: cli.seed,
        ..PipelineOptions::default()
    };
    let mut stdout = std::io::stdout().lock();
    let outcome = match &cli.command {
        Command::Construct(a) => cmd_construct(a, &mut stdout),
        Command::Pipeline(a) => cmd_pipeline(a, &opts, &mut stdout),
        Command::Verify(a) => cmd_verify(a, &mut stdout),
    };
    match outcome {
        Ok(report) if report.contract_holds() => 0,
        Ok(report) => {
            for c in report.contract.iter().filter(|c| !c.passed) {
                eprintln!("contract check failed: {}", c.check);
            }
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
