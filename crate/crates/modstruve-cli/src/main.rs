//! Command-line front end: point evaluation, bound tables, grid-sweep
//! verification with JSON/CSV reports, and report summarization.
//!
//! Exit codes: 0 pass, 1 violations, 2 config error, 3 evaluator failure.

use clap::{Parser, Subcommand, ValueEnum};
use modstruve::bounds::{catalogue, registry, CasePoint};
use modstruve::verify::{records_to_csv, render_summary, SweepReport};
use modstruve::{
    run_verification, struve_closed_form, struve_l, struve_l_prime, struve_l_quad, struve_norm,
    AccuracySpec, Error, GridSpec, QuadratureSpec, Scale, VerifyConfig,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "modstruve",
    version,
    about = "Modified Struve function evaluation and inequality verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Function {
    /// L_nu(x)
    StruveL,
    /// L'_nu(x)
    StruveLPrime,
    /// 2^nu Gamma(nu+3/2) x^{-nu} L_nu(x)
    StruveNorm,
    /// I_nu(x)
    BesselI,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EvalMethod {
    Series,
    Quad,
    Closed,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, value_enum, default_value = "series")]
        method: EvalMethod,
    },
    /// Tabulate every applicable bound at a point, with margins
    Bounds {
        #[arg(long, required_unless_present = "list")]
        nu: Option<f64>,
        #[arg(long, required_unless_present = "list")]
        x: Option<f64>,
        /// Second argument for two-point bounds (default 2x)
        #[arg(long)]
        y: Option<f64>,
        /// Second order for two-order bounds (default nu+1)
        #[arg(long)]
        mu: Option<f64>,
        /// Dump the case catalogue as JSON instead of evaluating
        #[arg(long)]
        list: bool,
    },
    /// Sweep the catalogue and property suite over a grid
    Verify {
        /// Case names to run (repeatable); defaults to the whole catalogue
        #[arg(long = "case")]
        cases: Vec<String>,
        /// Invert the relation of a case (negative control; repeatable)
        #[arg(long = "flip")]
        flip: Vec<String>,
        /// Grid spec: nu=MIN:MAX:STEPS,x=MIN:MAX:STEPS[:log|lin]
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Skip the monotonicity/convexity property suite
        #[arg(long)]
        no_properties: bool,
    },
    /// Summarize a JSON report
    Report {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn parse_grid(spec: &str) -> Result<GridSpec, String> {
    let mut grid = GridSpec::default();
    for part in spec.split(',') {
        let (axis, rest) = part
            .split_once('=')
            .ok_or_else(|| format!("grid segment `{part}` is not AXIS=MIN:MAX:STEPS"))?;
        let fields: Vec<&str> = rest.split(':').collect();
        if fields.len() < 3 {
            return Err(format!("grid segment `{part}` needs MIN:MAX:STEPS"));
        }
        let min: f64 = fields[0]
            .parse()
            .map_err(|e| format!("bad min in `{part}`: {e}"))?;
        let max: f64 = fields[1]
            .parse()
            .map_err(|e| format!("bad max in `{part}`: {e}"))?;
        let steps: usize = fields[2]
            .parse()
            .map_err(|e| format!("bad steps in `{part}`: {e}"))?;
        match axis {
            "nu" => {
                if fields.len() > 3 {
                    return Err("nu axis takes no scale flag".into());
                }
                grid.nu_min = min;
                grid.nu_max = max;
                grid.nu_steps = steps;
            }
            "x" => {
                grid.x_min = min;
                grid.x_max = max;
                grid.x_steps = steps;
                if let Some(&scale) = fields.get(3) {
                    grid.x_scale = match scale {
                        "log" => Scale::Log,
                        "lin" => Scale::Linear,
                        other => return Err(format!("unknown x scale `{other}`")),
                    };
                }
            }
            other => return Err(format!("unknown grid axis `{other}`")),
        }
    }
    Ok(grid)
}

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_EVAL: u8 = 3;

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Config(_) | Error::Domain(_) => EXIT_CONFIG,
        _ => EXIT_EVAL,
    }
}

fn cmd_eval(function: Function, nu: f64, x: f64, method: EvalMethod) -> ExitCode {
    let budget = AccuracySpec::default();
    let result = match (function, method) {
        (Function::StruveL, EvalMethod::Series) => struve_l(nu, x, &budget),
        (Function::StruveL, EvalMethod::Quad) => struve_l_quad(nu, x, &QuadratureSpec::default()),
        (Function::StruveL, EvalMethod::Closed) => struve_closed_form(nu, x),
        (Function::StruveLPrime, EvalMethod::Series) => struve_l_prime(nu, x, &budget),
        (Function::StruveNorm, EvalMethod::Series) => struve_norm(nu, x, &budget),
        (Function::BesselI, EvalMethod::Series) => modstruve::bessel_i(nu, x, &budget),
        _ => return fail(EXIT_CONFIG, "that function supports only --method series"),
    };
    match result {
        Ok(e) => {
            println!(
                "value = {}\nabs_error_est = {:e}\nterms_used = {}\nmethod = {:?}",
                e.value, e.abs_error_est, e.terms_used, e.method
            );
            ExitCode::SUCCESS
        }
        Err(e) => fail(error_code(&e), e),
    }
}

fn cmd_bounds(
    nu: Option<f64>,
    x: Option<f64>,
    y: Option<f64>,
    mu: Option<f64>,
    list: bool,
) -> ExitCode {
    if list {
        match serde_json::to_string_pretty(&catalogue()) {
            Ok(s) => {
                println!("{s}");
                return ExitCode::SUCCESS;
            }
            Err(e) => return fail(EXIT_EVAL, e),
        }
    }
    let (nu, x) = (nu.expect("clap enforces"), x.expect("clap enforces"));
    let budget = AccuracySpec::default();
    let y = y.unwrap_or(2.0 * x);
    let mu = mu.unwrap_or(nu + 1.0);
    println!(
        "{:<22} {:<12} {:>13} {:>22} {:>22} {:>13}  ok",
        "case", "citation", "direction", "lhs", "rhs", "margin"
    );
    for case in registry() {
        let point = if case.applicability.needs_second_order {
            CasePoint::with_mu(nu, mu, x)
        } else if case.applicability.needs_second_point {
            CasePoint::with_y(nu, x, y)
        } else {
            CasePoint::simple(nu, x)
        };
        match case.evaluate(&point, &budget) {
            Ok(r) => println!(
                "{:<22} {:<12} {:>13} {:>22} {:>22} {:>13.6e}  {}",
                r.case,
                case.citation,
                format!("{:?}", r.expected).to_lowercase(),
                r.lhs,
                r.rhs,
                r.margin,
                if r.satisfied { "yes" } else { "NO" }
            ),
            Err(Error::Domain(_)) => {} // case does not apply at this point
            Err(e) => println!("{:<22} {:<12} skipped: {e}", case.name, case.citation),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    cases: Vec<String>,
    flip: Vec<String>,
    grid: Option<String>,
    out: Option<PathBuf>,
    format: Format,
    no_properties: bool,
) -> ExitCode {
    let grid = match grid.as_deref().map(parse_grid).transpose() {
        Ok(g) => g.unwrap_or_default(),
        Err(e) => return fail(EXIT_CONFIG, e),
    };
    let config = VerifyConfig {
        cases: if cases.is_empty() { None } else { Some(cases) },
        flip,
        grid,
        properties: !no_properties,
    };
    let run = match run_verification(&config) {
        Ok(r) => r,
        Err(e) => return fail(error_code(&e), e),
    };
    let payload = match format {
        Format::Json => match serde_json::to_string_pretty(&run.report) {
            Ok(s) => s,
            Err(e) => return fail(EXIT_EVAL, e),
        },
        Format::Csv => records_to_csv(&run.records),
    };
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, &payload) {
            return fail(EXIT_CONFIG, format!("cannot write {}: {e}", path.display()));
        }
        eprintln!("report written to {}", path.display());
    } else {
        println!("{payload}");
    }
    let violations: usize = run.report.cases.iter().map(|c| c.violations.len()).sum();
    let failed_properties = run.report.properties.iter().filter(|p| !p.pass).count();
    eprintln!(
        "{} cases, {} violations, {} failed properties, {} evaluator errors ({:.2}s)",
        run.report.cases.len(),
        violations,
        failed_properties,
        run.report.eval_errors.len(),
        run.report.wall_time
    );
    if !run.report.eval_errors.is_empty() {
        ExitCode::from(EXIT_EVAL)
    } else if !run.report.pass {
        ExitCode::from(EXIT_VIOLATIONS)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_report(input: PathBuf) -> ExitCode {
    let text = match std::fs::read_to_string(&input) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_CONFIG, format!("cannot read {}: {e}", input.display())),
    };
    let report: SweepReport = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_CONFIG, format!("not a report: {e}")),
    };
    print!("{}", render_summary(&report));
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            function,
            nu,
            x,
            method,
        } => cmd_eval(function, nu, x, method),
        Command::Bounds { nu, x, y, mu, list } => cmd_bounds(nu, x, y, mu, list),
        Command::Verify {
            cases,
            flip,
            grid,
            out,
            format,
            no_properties,
        } => cmd_verify(cases, flip, grid, out, format, no_properties),
        Command::Report { input } => cmd_report(input),
    }
}
