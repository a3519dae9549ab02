mod complex;
mod config;
mod output;

use clap::{Parser, Subcommand};
use complex::parse_complex;
use config::{Format, SuiteConfig};
use modxi::identities::{list_identities, run_suite, validate, Budgets, CheckParams, IdentityId, IdentityReport, ZRule};
use modxi::C64;
use output::{write_reports, Tally};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_USAGE: u8 = 2;
const ENV_PANELS: &str = "MODXI_MAX_PANELS";
const ENV_INTERVALS: &str = "MODXI_MAX_INTERVALS";

#[derive(Parser)]
#[command(name = "modxi", version, about = "Certify modular-type transformations by evaluating every member independently")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the identity registry.
    List,
    /// Check one identity over a grid of alpha and z values.
    Run {
        #[arg(long)]
        id: String,
        /// Comma-separated list; defaults to the identity's default point.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
        /// Comma-separated complex values such as 0.3 or 0.2-0.1i.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        z: Vec<String>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Include wall times in JSON records.
        #[arg(long)]
        timings: bool,
    },
    /// Validate a suite config and print it in normalized form.
    Config { config: PathBuf },
    /// Run every entry of a suite config.
    Suite {
        config: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        timings: bool,
    },
}

struct Usage(String);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.cmd {
        Cmd::List => cmd_list(),
        Cmd::Run { id, alpha, z, tol, format, out, jobs, timings } => {
            cmd_run(&id, &alpha, &z, tol, format, out.as_deref(), jobs, timings)
        }
        Cmd::Config { config } => cmd_config(&config),
        Cmd::Suite { config, format, out, jobs, timings } => cmd_suite(&config, format, out, jobs, timings),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn strip_text(r: ZRule) -> &'static str {
    match r {
        ZRule::ZeroOnly => "z = 0",
        ZRule::NonZeroStrip => "-1 < Re z < 1, z != 0",
        ZRule::Strip => "-1 < Re z < 1",
        ZRule::RightHalfStrip => "0 < Re z < 1",
        ZRule::BesselOrder => "z = nu real, |nu| < 1/2",
    }
}

fn cmd_list() -> Result<u8, Usage> {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{:<22} {:<24} {:<8} {:<18} {:<14} {}", "ID", "STRIP", "TOL", "ALPHA SLOT", "DEFAULT", "DESCRIPTION");
    for i in list_identities() {
        let flag = if i.exploratory { " [exploratory]" } else { "" };
        let _ = writeln!(
            out,
            "{:<22} {:<24} {:<8.0e} {:<18} {:<14} {}{flag}",
            i.id.name(),
            strip_text(i.z_rule),
            i.default_tol,
            i.alpha_role,
            format!("a={} z={}", i.default_alpha, i.default_z),
            i.description
        );
        let _ = writeln!(out, "{:<22} members: {}", "", i.members.join(", "));
    }
    Ok(0)
}

fn env_budgets(base: Budgets) -> Result<Budgets, Usage> {
    let read = |name: &str, cur: usize| -> Result<usize, Usage> {
        match std::env::var(name) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Usage(format!("{name} must be a positive integer, got '{v}'"))),
            Err(_) => Ok(cur),
        }
    };
    Ok(Budgets { max_panels: read(ENV_PANELS, base.max_panels)?, max_intervals: read(ENV_INTERVALS, base.max_intervals)? })
}

fn grid_for(
    id: IdentityId,
    alphas: &[f64],
    zs: &[C64],
    tol: Option<f64>,
    budgets: Budgets,
) -> Result<Vec<(IdentityId, CheckParams)>, Usage> {
    let info = id.info();
    let alphas = if alphas.is_empty() { vec![info.default_alpha] } else { alphas.to_vec() };
    let zs = if zs.is_empty() { vec![C64::new(info.default_z, 0.0)] } else { zs.to_vec() };
    let mut grid = Vec::new();
    for &a in &alphas {
        for &z in &zs {
            let p = CheckParams { alpha: a, z, tol, budgets, parallel: true };
            validate(id, &p).map_err(|e| Usage(e.to_string()))?;
            grid.push((id, p));
        }
    }
    Ok(grid)
}

fn execute(grid: &[(IdentityId, CheckParams)], jobs: Option<usize>) -> Result<Vec<IdentityReport>, Usage> {
    let jobs = jobs.unwrap_or(0);
    let parallel = jobs != 1;
    let grid: Vec<_> = grid.iter().map(|(id, p)| (*id, CheckParams { parallel, ..*p })).collect();
    let run = || run_suite(&grid, parallel);
    #[cfg(feature = "parallel")]
    let results = if jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Usage(format!("cannot start {jobs} workers: {e}")))?
            .install(run)
    } else {
        run()
    };
    #[cfg(not(feature = "parallel"))]
    let results = run();
    // entries were validated up front, so an error here is a usage error too
    results.into_iter().map(|r| r.map_err(|e| Usage(e.to_string()))).collect()
}

fn emit(reports: &[IdentityReport], format: Format, out: Option<&Path>, timings: bool) -> Result<(), Usage> {
    let res = match out {
        Some(p) => {
            let f = File::create(p).map_err(|e| Usage(format!("cannot write {}: {e}", p.display())))?;
            write_reports(BufWriter::new(f), format, reports, timings)
        }
        None => write_reports(io::stdout().lock(), format, reports, timings),
    };
    res.map_err(|e| Usage(format!("cannot write report: {e}")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_run(
    id: &str,
    alphas: &[f64],
    zs: &[String],
    tol: Option<f64>,
    format: Format,
    out: Option<&Path>,
    jobs: Option<usize>,
    timings: bool,
) -> Result<u8, Usage> {
    let id: IdentityId = id.parse().map_err(|e: modxi::identities::UnknownId| Usage(e.to_string()))?;
    let zs = zs.iter().map(|s| parse_complex(s).map_err(|e| Usage(e.to_string()))).collect::<Result<Vec<_>, _>>()?;
    let budgets = env_budgets(Budgets::default())?;
    let grid = grid_for(id, alphas, &zs, tol, budgets)?;
    let reports = execute(&grid, jobs)?;
    emit(&reports, format, out, timings)?;
    for r in &reports {
        if let Some(f) = &r.failure {
            eprintln!("{} alpha={}: {f}", r.id, r.params.alpha);
        }
    }
    let t = Tally::of(&reports);
    eprintln!("{}", t.summary());
    Ok(t.exit_code())
}

fn cmd_config(path: &Path) -> Result<u8, Usage> {
    let cfg = SuiteConfig::load(path).map_err(|e| Usage(e.to_string()))?;
    for e in &cfg.entries {
        let zs: Vec<C64> = e.z.iter().map(|z| z.0).collect();
        grid_for(e.id, &e.alpha, &zs, e.tol, cfg.budgets)?;
    }
    print!("{}", cfg.to_toml());
    Ok(0)
}

fn cmd_suite(path: &Path, format: Option<Format>, out: Option<PathBuf>, jobs: Option<usize>, timings: bool) -> Result<u8, Usage> {
    let cfg = SuiteConfig::load(path).map_err(|e| Usage(e.to_string()))?;
    let budgets = env_budgets(cfg.budgets)?;
    let mut grid = Vec::new();
    for e in &cfg.entries {
        let zs: Vec<C64> = e.z.iter().map(|z| z.0).collect();
        grid.extend(grid_for(e.id, &e.alpha, &zs, e.tol, budgets)?);
    }
    let reports = execute(&grid, jobs.or(cfg.jobs))?;
    let format = format.unwrap_or(cfg.format);
    let out = out.or(cfg.out.clone());
    emit(&reports, format, out.as_deref(), timings)?;
    let t = Tally::of(&reports);
    eprintln!("{}", t.summary());
    Ok(t.exit_code())
}
