//! `brq`: experiment CLI for the spectral quotient-operator library.
//!
//! Subcommands: kernel, approx, localize, saturate, besov, maximal, verify.
//! Exit codes: 0 success / all checks pass, 1 failed check or I/O error,
//! 2 invalid input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bessel_riesz::acceptance;
use bessel_riesz::approx::{
    besov_ratio, equivalence_curve, geometric_grid, localization_slope,
    muckenhoupt_wheeden_check, rate_fit, saturation_curve, CurveResult, TestFunction,
};
use bessel_riesz::grid::{make_grid, GridSpec};
use bessel_riesz::kernels::{decay_check, extract_kernel};
use bessel_riesz::symbols::SymbolSpec;

#[derive(Parser)]
#[command(
    name = "brq",
    version,
    about = "Quotient-operator experiments: kernels, approximation rates, localization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GridArgs {
    /// Points per axis (power of two, >= 8)
    #[arg(long, default_value_t = 4096)]
    n: usize,
    /// Torus side length
    #[arg(long, default_value_t = 64.0)]
    length: f64,
    /// Dimension (1..=3)
    #[arg(long, default_value_t = 1)]
    dim: usize,
}

impl GridArgs {
    fn build(&self) -> Result<GridSpec, bessel_riesz::Error> {
        make_grid(self.dim, self.n, self.length)
    }
}

#[derive(Args, Debug, Clone)]
struct MuArgs {
    /// Geometric mu range, syntax lo:hi
    #[arg(long, default_value = "2:128")]
    mu: String,
    /// Number of geometric steps (default: ratio sqrt(2))
    #[arg(long)]
    mu_steps: Option<usize>,
}

impl MuArgs {
    fn build(&self) -> Result<Vec<f64>, String> {
        let (lo, hi) = self
            .mu
            .split_once(':')
            .ok_or_else(|| format!("mu range must be lo:hi, got '{}'", self.mu))?;
        let lo: f64 = lo.parse().map_err(|e| format!("bad mu lower bound: {e}"))?;
        let hi: f64 = hi.parse().map_err(|e| format!("bad mu upper bound: {e}"))?;
        if !(lo > 0.0 && hi >= lo) {
            return Err(format!("mu range must satisfy 0 < lo <= hi, got {lo}:{hi}"));
        }
        match self.mu_steps {
            None => Ok(geometric_grid(lo, hi, 2.0f64.sqrt())),
            Some(steps) if steps >= 2 => {
                let ratio = (hi / lo).powf(1.0 / (steps as f64 - 1.0));
                if ratio <= 1.0 {
                    return Err("mu-steps too large for the range".into());
                }
                Ok(geometric_grid(lo, hi, ratio))
            }
            Some(_) => Err("mu-steps must be at least 2".into()),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
enum FunctionKind {
    Gaussian,
    Bump,
    Indicator,
    Tent,
    Band,
    Annular,
    Zero,
}

#[derive(Args, Debug, Clone)]
struct FunctionArgs {
    /// Test field
    #[arg(long, value_enum, default_value_t = FunctionKind::Gaussian)]
    function: FunctionKind,
    /// Center (gaussian/bump/tent/annular)
    #[arg(long, default_value_t = 0.0)]
    center: f64,
    /// Width / halfwidth (gaussian/bump/tent)
    #[arg(long, default_value_t = 1.0)]
    width: f64,
    /// Indicator support [lo, hi)
    #[arg(long, default_value_t = 0.0)]
    box_lo: f64,
    #[arg(long, default_value_t = 1.0)]
    box_hi: f64,
    /// Band-limited noise seed
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Band-limited noise cutoff frequency
    #[arg(long, default_value_t = 10.0)]
    cutoff: f64,
    /// Annular support [inner, outer]
    #[arg(long, default_value_t = 2.0)]
    inner: f64,
    #[arg(long, default_value_t = 4.0)]
    outer: f64,
    /// Subtract the mean after sampling
    #[arg(long, default_value_t = false)]
    zero_mean: bool,
}

impl FunctionArgs {
    fn build(&self) -> TestFunction {
        match self.function {
            FunctionKind::Gaussian => TestFunction::Gaussian {
                center: self.center,
                width: self.width,
            },
            FunctionKind::Bump => TestFunction::Bump {
                center: self.center,
                width: self.width,
            },
            FunctionKind::Indicator => TestFunction::Indicator {
                lo: self.box_lo,
                hi: self.box_hi,
            },
            FunctionKind::Tent => TestFunction::Tent {
                center: self.center,
                halfwidth: self.width,
            },
            FunctionKind::Band => TestFunction::RandomBandLimited {
                seed: self.seed,
                cutoff: self.cutoff,
            },
            FunctionKind::Annular => TestFunction::Annular {
                center: self.center,
                inner: self.inner,
                outer: self.outer,
            },
            FunctionKind::Zero => TestFunction::Zero,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum SymbolArg {
    Quotient,
    Complement,
    Bessel,
    Remainder,
}

#[derive(Subcommand)]
enum Command {
    /// Extract a symbol's kernel, report decay diagnostics, export radial CSV
    Kernel {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = SymbolArg::Quotient)]
        symbol: SymbolArg,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Scale parameter mu of the symbol
        #[arg(long, default_value_t = 16.0)]
        mu: f64,
        /// Also extract the dyadic band kernels
        #[arg(long, default_value_t = false)]
        dyadic: bool,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = false)]
        dump_config: bool,
    },
    /// Error-vs-modulus equivalence curve over a mu grid
    Approx {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = false)]
        dump_config: bool,
    },
    /// Pointwise decay at a point where the field vanishes
    Localize {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Vanishing radius of the annular test field (must be positive)
        #[arg(long, default_value_t = 2.0)]
        delta: f64,
        /// Outer support radius of the annular field
        #[arg(long, default_value_t = 4.0)]
        outer: f64,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = false)]
        dump_config: bool,
    },
    /// Saturation experiment: mu * err(mu) against the gradient norm
    Saturate {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = false)]
        dump_config: bool,
    },
    /// Besov-seminorm characterization ratio
    Besov {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, default_value_t = 0.5)]
        s: f64,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, default_value_t = 512.0)]
        mu_max: f64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = false)]
        dump_config: bool,
    },
    /// Modulus of the Riesz potential vs the truncated maximal function
    Maximal {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = false)]
        dump_config: bool,
    },
    /// Run the acceptance suite (or one named sub-suite)
    Verify {
        /// Suite: special, twopath, equivalence, envelope, rates, saturation,
        /// decay, hormander, localization, besov, maximal, ksp, kfunctional, all
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn write_output(path: &str, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("writing {path}: {e}"))
}

fn emit_curve(
    curve: &CurveResult,
    out: Option<&str>,
    label: &str,
) -> Result<(), String> {
    println!("{label}");
    for name in curve.series_names() {
        let vals = curve.series(name).unwrap();
        let first = vals.first().copied().unwrap_or(0.0);
        let last = vals.last().copied().unwrap_or(0.0);
        println!("  {name}: first {first:.6e}, last {last:.6e}");
    }
    if let Some(fit) = curve.fit() {
        println!(
            "  fit[{}] over mu in [{}, {}]: slope {:.4}, residual {:.2e}",
            fit.series, fit.window.0, fit.window.1, fit.slope, fit.residual
        );
    }
    if let Some(path) = out {
        write_output(path, &curve.to_csv())?;
        println!("  csv -> {path}");
    }
    Ok(())
}

enum RunError {
    Invalid(String),
    Io(String),
}

impl From<bessel_riesz::Error> for RunError {
    fn from(e: bessel_riesz::Error) -> Self {
        RunError::Invalid(e.to_string())
    }
}

fn run(cli: Cli) -> Result<bool, RunError> {
    match cli.command {
        Command::Kernel {
            grid,
            symbol,
            alpha,
            mu,
            dyadic,
            out,
            dump_config,
        } => {
            if dump_config {
                println!(
                    "config: kernel symbol={symbol:?} alpha={alpha} mu={mu} dyadic={dyadic} {grid:?}"
                );
            }
            let g = grid.build()?;
            let spec = match symbol {
                SymbolArg::Quotient => SymbolSpec::quotient(alpha, mu)?,
                SymbolArg::Complement => SymbolSpec::complement(alpha, mu)?,
                SymbolArg::Bessel => SymbolSpec::bessel_potential(alpha, mu)?,
                SymbolArg::Remainder => SymbolSpec::remainder(mu)?,
            };
            let profile = extract_kernel(&spec, g, dyadic)?;
            println!(
                "kernel: {} radial bins, value at origin {:.6e}",
                profile.bins.len(),
                profile.value_at_zero
            );
            if matches!(symbol, SymbolArg::Quotient | SymbolArg::Complement) {
                match decay_check(&profile, alpha, mu) {
                    Ok(report) => {
                        println!("  compensated sup Q = {:.6e}", report.sup_q);
                        if let Some(slope) = report.far_slope {
                            println!("  far-field log-log slope = {slope:.4}");
                        }
                    }
                    Err(e) => println!("  decay diagnostics unavailable: {e}"),
                }
            }
            if let Some(gap) = profile.dyadic_reconstruction_gap() {
                println!("  dyadic reconstruction gap = {gap:.3e}");
            }
            if let Some(path) = out {
                write_output(&path, &profile.to_csv()).map_err(RunError::Io)?;
                println!("  csv -> {path}");
            }
            Ok(true)
        }
        Command::Approx {
            grid,
            mu,
            function,
            alpha,
            p,
            out,
            dump_config,
        } => {
            if dump_config {
                println!("config: approx alpha={alpha} p={p} {function:?} {grid:?} {mu:?}");
            }
            let g = grid.build()?;
            let mu_grid = mu.build().map_err(RunError::Invalid)?;
            let field = function.build().sample(g)?;
            let field = if function.zero_mean { field.zero_mean() } else { field };
            let mut curve = equivalence_curve(&field, alpha, p, &mu_grid)?;
            if mu_grid.len() >= 4 && curve.series("err").unwrap().iter().all(|v| *v > 0.0) {
                let window = (mu_grid[mu_grid.len() / 4], mu_grid[mu_grid.len() - 1]);
                let fit = rate_fit(&curve, "err", window)?;
                curve.set_fit(fit);
            }
            emit_curve(&curve, out.as_deref(), "approx curve (err, omega, ratio)")
                .map_err(RunError::Io)?;
            Ok(true)
        }
        Command::Localize {
            grid,
            mu,
            alpha,
            delta,
            outer,
            p,
            out,
            dump_config,
        } => {
            if delta <= 0.0 {
                return Err(RunError::Invalid(format!(
                    "vanishing radius delta must be positive, got {delta}"
                )));
            }
            if outer <= delta {
                return Err(RunError::Invalid(format!(
                    "outer radius must exceed delta, got {outer} <= {delta}"
                )));
            }
            if dump_config {
                println!(
                    "config: localize alpha={alpha} delta={delta} outer={outer} p={p} {grid:?} {mu:?}"
                );
            }
            let g = grid.build()?;
            let mu_grid = mu.build().map_err(RunError::Invalid)?;
            let field = TestFunction::Annular {
                center: 0.0,
                inner: delta,
                outer,
            }
            .sample(g)?;
            let curve = localization_slope(&field, alpha, &[0.0], &mu_grid, p)?;
            emit_curve(&curve, out.as_deref(), "localization curve |E f(x0)|")
                .map_err(RunError::Io)?;
            Ok(true)
        }
        Command::Saturate {
            grid,
            mu,
            function,
            p,
            out,
            dump_config,
        } => {
            if dump_config {
                println!("config: saturate p={p} {function:?} {grid:?} {mu:?}");
            }
            let g = grid.build()?;
            let mu_grid = mu.build().map_err(RunError::Invalid)?;
            let field = function.build().sample(g)?;
            let curve = saturation_curve(&field, p, &mu_grid)?;
            emit_curve(&curve, out.as_deref(), "saturation curve mu * err(mu)")
                .map_err(RunError::Io)?;
            Ok(true)
        }
        Command::Besov {
            grid,
            function,
            s,
            p,
            q,
            mu_max,
            out,
            dump_config,
        } => {
            if dump_config {
                println!("config: besov s={s} p={p} q={q} mu_max={mu_max} {function:?} {grid:?}");
            }
            let g = grid.build()?;
            let field = function.build().sample(g)?;
            let report = besov_ratio(&field, s, p, q, mu_max)?;
            println!("besov characterization (s={s}, p={p}, q={q}, mu_max={mu_max})");
            println!("  seminorm side (t-integral):  {:.6e}", report.lhs);
            println!("  error side (mu-integral):    {:.6e}", report.rhs);
            println!("  ratio rhs/lhs:               {:.6}", report.ratio);
            println!(
                "  truncation defects:          {:.3}% / {:.3}%",
                report.lhs_defect * 100.0,
                report.rhs_defect * 100.0
            );
            if report.lhs_defect >= 0.05 || report.rhs_defect >= 0.05 {
                println!("  note: defect exceeds 5%; no equivalence claim at this mu_max");
            }
            if let Some(path) = out {
                let csv = format!(
                    "quantity,value\nlhs,{:.14e}\nrhs,{:.14e}\nratio,{:.14e}\nlhs_defect,{:.14e}\nrhs_defect,{:.14e}\n",
                    report.lhs, report.rhs, report.ratio, report.lhs_defect, report.rhs_defect
                );
                write_output(&path, &csv).map_err(RunError::Io)?;
                println!("  csv -> {path}");
            }
            Ok(true)
        }
        Command::Maximal {
            grid,
            mu,
            function,
            p,
            out,
            dump_config,
        } => {
            if dump_config {
                println!("config: maximal p={p} {function:?} {grid:?} {mu:?}");
            }
            let g = grid.build()?;
            let mu_grid = mu.build().map_err(RunError::Invalid)?;
            let field = function.build().sample(g)?.zero_mean();
            let curve = muckenhoupt_wheeden_check(&field, p, &mu_grid)?;
            emit_curve(
                &curve,
                out.as_deref(),
                "maximal-function domination (lhs, rhs, ratio)",
            )
            .map_err(RunError::Io)?;
            Ok(true)
        }
        Command::Verify { suite } => {
            let Some(reports) = acceptance::run_suite(&suite) else {
                return Err(RunError::Invalid(format!(
                    "unknown suite '{suite}'; known: {}",
                    acceptance::SUITES
                        .iter()
                        .map(|(n, _)| *n)
                        .collect::<Vec<_>>()
                        .join(", ")
                )));
            };
            let mut all_ok = true;
            for report in &reports {
                println!("{}", report.summary_line());
                for line in &report.details {
                    println!("    {line}");
                }
                all_ok &= report.passed;
            }
            println!(
                "verify: {}/{} criteria passed",
                reports.iter().filter(|r| r.passed).count(),
                reports.len()
            );
            Ok(all_ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(RunError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(RunError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
