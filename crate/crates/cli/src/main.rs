//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 on mathematical
//! inconsistencies (a failed invariant, certificate, or audit).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use syzygy_cli::input::{read_problem_file, resolve_chart, validate, Problem};
use syzygy_cli::report::{analyze, print_human, to_json, AnalyzeOptions};
use syzygy_core::germ::{build_records_auto, build_records_in_chart};
use syzygy_core::milnor::{milnor_hilbert, stabilized_tjurina};
use syzygy_core::syzygy::{audit_inequalities, split_basis, syzygy_basis, transversality_reason};

#[derive(Parser)]
#[command(
    name = "syzygy",
    about = "Graded Jacobian syzygies of projective hypersurfaces with isolated singularities",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full pipeline: Hilbert functions, local invariants,
    /// dimension tables, basis splitting, defects, and the inequality audit.
    Analyze {
        input: PathBuf,
        /// Degree range "a..b" for the tables (default 0..nN-2n-1).
        #[arg(long, value_parser = parse_range)]
        m_range: Option<(i64, i64)>,
        /// Chart variable (name or index) for the splitting projection.
        #[arg(long)]
        chart: Option<String>,
        /// Seed for the transversal-coordinates search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the Hilbert function of the Milnor algebra.
    Hilbert {
        input: PathBuf,
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Print a basis of the degree-m syzygies.
    Syzygies {
        input: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Split a degree-m syzygy basis against the singular subscheme.
    Split {
        input: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        chart: Option<String>,
    },
    /// Local invariants (mu, tau, weighted homogeneity) of one point,
    /// 1-based in the order of the input file.
    Local {
        input: PathBuf,
        #[arg(long)]
        point: usize,
        #[arg(long)]
        chart: Option<String>,
    },
    /// Check the dimension inequalities over a degree range.
    Audit {
        input: PathBuf,
        #[arg(long, value_parser = parse_range)]
        m_range: Option<(i64, i64)>,
    },
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like 0..4, got '{s}'"))?;
    let lo: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start '{a}'"))?;
    let hi: i64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end '{b}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Input(String),
    Math(String),
}

fn load(path: &std::path::Path) -> Result<Problem, Failure> {
    let input = read_problem_file(path).map_err(Failure::Input)?;
    validate(&input).map_err(Failure::Input)
}

fn chart_index(problem: &Problem, chart: &Option<String>) -> Result<usize, Failure> {
    match chart {
        None => Ok(0),
        Some(arg) => resolve_chart(&problem.names, arg).map_err(Failure::Input),
    }
}

fn env_max_degree() -> Result<Option<i64>, Failure> {
    match std::env::var("SYZYGY_MAX_DEGREE") {
        Err(_) => Ok(None),
        Ok(s) => s.trim().parse::<i64>().map(Some).map_err(|_| {
            Failure::Input(format!("SYZYGY_MAX_DEGREE must be an integer, got '{s}'"))
        }),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Analyze {
            input,
            m_range,
            chart,
            seed,
            json,
        } => {
            let problem = load(&input)?;
            let opts = AnalyzeOptions {
                chart: chart_index(&problem, &chart)?,
                seed,
                m_range,
                max_degree: env_max_degree()?,
            };
            let report = analyze(&problem, &opts).map_err(Failure::Math)?;
            print_human(&report);
            if let Some(path) = json {
                std::fs::write(&path, to_json(&report))
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            if report.certificates.ok {
                Ok(())
            } else {
                Err(Failure::Math(
                    "analysis found inconsistencies (see report)".into(),
                ))
            }
        }
        Cmd::Hilbert { input, k_max } => {
            let problem = load(&input)?;
            let h = &problem.hypersurface;
            let (tau, from) = stabilized_tjurina(h).map_err(|e| Failure::Math(e.to_string()))?;
            let k = k_max.unwrap_or(from + h.n());
            let table = milnor_hilbert(h, k);
            let values: Vec<String> = table.values().iter().map(usize::to_string).collect();
            println!("{} ...", values.join(" "));
            println!("stable value {tau} from degree {from}");
            Ok(())
        }
        Cmd::Syzygies { input, degree } => {
            let problem = load(&input)?;
            let names: Vec<&str> = problem.names.iter().map(String::as_str).collect();
            let basis = syzygy_basis(&problem.hypersurface, degree);
            println!("dim AR_{degree} = {}", basis.len());
            for s in &basis {
                let parts: Vec<String> = s
                    .components()
                    .iter()
                    .map(|c| c.to_expression(&names))
                    .collect();
                println!("({})", parts.join(", "));
            }
            Ok(())
        }
        Cmd::Split {
            input,
            degree,
            chart,
        } => {
            let problem = load(&input)?;
            let chart = chart_index(&problem, &chart)?;
            let names: Vec<&str> = problem.names.iter().map(String::as_str).collect();
            if let Some(reason) =
                transversality_reason(&problem.hypersurface, chart, &problem.points)
            {
                return Err(Failure::Input(format!(
                    "transversality check failed: {reason}; \
                     use `analyze` (which searches for transversal coordinates) \
                     or pick another chart"
                )));
            }
            let records = build_records_in_chart(&problem.hypersurface, &problem.points, chart)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let result = split_basis(&problem.hypersurface, degree, &records, chart)
                .map_err(|e| Failure::Input(e.to_string()))?;
            println!(
                "dims (all, kernel, essential) = ({}, {}, {}); koszul rank {}; kernel {} the koszul span",
                result.dims.all,
                result.dims.koszul,
                result.dims.essential,
                result.koszul_rank,
                if result.kernel_matches_koszul {
                    "matches"
                } else {
                    "strictly exceeds"
                }
            );
            println!("koszul basis:");
            for s in &result.koszul_basis {
                let parts: Vec<String> = s
                    .components()
                    .iter()
                    .map(|c| c.to_expression(&names))
                    .collect();
                println!("  ({})", parts.join(", "));
            }
            println!("essential representatives:");
            for s in &result.essential_representatives {
                let parts: Vec<String> = s
                    .components()
                    .iter()
                    .map(|c| c.to_expression(&names))
                    .collect();
                println!("  ({})", parts.join(", "));
            }
            Ok(())
        }
        Cmd::Local {
            input,
            point,
            chart,
        } => {
            let problem = load(&input)?;
            if point == 0 || point > problem.points.len() {
                return Err(Failure::Input(format!(
                    "point index {point} out of range (points are numbered 1..={})",
                    problem.points.len()
                )));
            }
            let preferred = match &chart {
                None => 0,
                Some(arg) => resolve_chart(&problem.names, arg).map_err(Failure::Input)?,
            };
            let records = build_records_auto(&problem.hypersurface, &problem.points, preferred)
                .map_err(|e| Failure::Math(e.to_string()))?;
            let r = &records[point - 1];
            println!(
                "mu={} tau={} WH={}",
                r.mu(),
                r.tau(),
                if r.is_weighted_homogeneous() {
                    "yes"
                } else {
                    "no"
                }
            );
            Ok(())
        }
        Cmd::Audit { input, m_range } => {
            let problem = load(&input)?;
            let h = &problem.hypersurface;
            let records = build_records_auto(h, &problem.points, 0)
                .map_err(|e| Failure::Math(e.to_string()))?;
            if !records.iter().all(|r| r.is_weighted_homogeneous()) {
                println!("audit not applicable: a singularity is not weighted homogeneous");
                return Ok(());
            }
            let n = h.n() as i64;
            let top = n * h.degree() as i64 - 2 * n - 1;
            let (lo, hi) = m_range.unwrap_or((0, top));
            let report = audit_inequalities(h, &records, lo..=hi)
                .map_err(|e| Failure::Math(e.to_string()))?;
            println!("mu = {}, tau = {}", report.mu, report.tau);
            for row in &report.rows {
                println!(
                    "m={}: essential {} + dual {} = {} <= {}; milnor lhs {} <= {}{}",
                    row.m,
                    row.essential,
                    row.essential_dual,
                    row.pair_sum,
                    report.mu,
                    row.milnor_bound_lhs,
                    report.mu,
                    row.half_bound
                        .map(|(e, b)| format!("; small-degree bound {e} <= {b}"))
                        .unwrap_or_default()
                );
            }
            if report.violations.is_empty() {
                println!("all inequalities hold");
                Ok(())
            } else {
                for v in &report.violations {
                    eprintln!("VIOLATION: {v}");
                }
                Err(Failure::Math("inequality audit failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("mathematical inconsistency: {msg}");
            ExitCode::from(2)
        }
    }
}
