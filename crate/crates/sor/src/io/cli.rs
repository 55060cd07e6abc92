//! Command-line interface.
//!
//! Exit codes: 0 = success, 2 = valid run with a negative answer
//! (e.g. the surface is not a surface of revolution), 1 = usage or
//! validation errors.

use crate::algebra::poly::{Poly, Var};
use crate::algebra::rat::Rat;
use crate::algebra::uni::UniPoly;
use crate::io::format::format_poly;
use crate::io::parse::parse_poly;
use crate::io::report::{
    axis_out, classification_out, diagnostics_out, param_out, profile_out, tubular_out, Report,
};
use crate::rationality::{
    classify, count_components, p2_param_linear, param_inverse, parametrize_surface,
    profile_split, profile_to_p2, tracing_index, tubularize, validate_param, CurveParam,
    Evidence, P2Curve,
};
use crate::recognition::{detect, AxisReport, ImplicitSurface};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "sor", about = "Exact recognition and parametrization of surfaces of revolution", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Polynomial expression, e.g. "y^2 - 2*x*z"
    #[arg(long)]
    poly: Option<String>,
    /// File containing one polynomial expression
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// Seed for the deterministic sample-point walk
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum number of sample points
    #[arg(long, default_value_t = 64)]
    max_samples: usize,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct ParamArg {
    /// Curve parametrization "p(t),r(t),q(t)" with shared denominator q
    #[arg(long)]
    param: Option<String>,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Decide whether the surface is a surface of revolution
    Detect(InputArgs),
    /// Detect and report the profile curve and its plane curve
    Profile(InputArgs),
    /// Build the tubular surface of a parametrized plane curve
    Tubularize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        param: ParamArg,
    },
    /// Parametrize an x-axis surface of revolution through its tube
    Parametrize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        param: ParamArg,
        /// Sum-of-squares witness "a(t),b(t)" with a² + b² = m
        #[arg(long)]
        sos: Option<String>,
    },
    /// Classify rationality of the surface
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        param: ParamArg,
        /// Caller-supplied genus of the plane curve
        #[arg(long)]
        genus_p2: Option<i64>,
    },
    /// Validate a plane-curve parametrization against a curve in (x, s)
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        param: ParamArg,
    },
}

#[derive(Debug)]
struct Failure(String);

type CmdResult = Result<(Report, i32), Failure>;

fn load_poly(input: &InputArgs) -> Result<Poly<Rat>, Failure> {
    let text = match (&input.poly, &input.file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure(format!("cannot read {}: {}", path.display(), e)))?,
        _ => {
            return Err(Failure(
                "provide exactly one of --poly or --file".to_string(),
            ))
        }
    };
    parse_poly(text.trim()).map_err(|e| Failure(format!("parse error: {}", e)))
}

fn parse_uni(text: &str) -> Result<UniPoly, Failure> {
    let p = parse_poly(text.trim()).map_err(|e| Failure(format!("parse error: {}", e)))?;
    p.univariate_in(Var::T)
        .ok_or_else(|| Failure(format!("'{}' must be univariate in t", text.trim())))
}

fn parse_param(arg: &ParamArg) -> Result<Option<CurveParam>, Failure> {
    let Some(text) = &arg.param else {
        return Ok(None);
    };
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure(
            "--param expects three comma-separated components p,r,q".to_string(),
        ));
    }
    let p = parse_uni(parts[0])?;
    let r = parse_uni(parts[1])?;
    let q = parse_uni(parts[2])?;
    if crate::algebra::uni::is_zero(&q) {
        return Err(Failure("--param denominator must be non-zero".to_string()));
    }
    Ok(Some(CurveParam::new(p, r, q)))
}

fn parse_sos(text: &str) -> Result<(UniPoly, UniPoly), Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure(
            "--sos expects two comma-separated components a,b".to_string(),
        ));
    }
    Ok((parse_uni(parts[0])?, parse_uni(parts[1])?))
}

fn detect_report(command: &str, input: &InputArgs) -> CmdResult {
    let f = load_poly(input)?;
    let surface = ImplicitSurface::new(f).map_err(|e| Failure(e.to_string()))?;
    let (verdict, diags) = detect(&surface, input.seed, input.max_samples);
    let mut report;
    let code;
    match verdict {
        AxisReport::NotSor { reason } => {
            report = Report::new(command, "NotSOR");
            report.reason = Some(reason);
            code = 2;
        }
        AxisReport::Sor { axis, profile } => {
            report = Report::new(command, "SOR");
            report.axis = Some(axis_out(&axis));
            report.profile = Some(profile_out(&profile));
            report.p2 = Some(format_poly(&profile_to_p2(&profile).q));
            code = 0;
        }
        AxisReport::MultiAxis {
            symmetry_basis,
            representative,
            profile,
        } => {
            report = Report::new(command, "MultiAxis");
            report.axis = Some(axis_out(&representative));
            report.symmetry_dimension = Some(symmetry_basis.len());
            report.profile = Some(profile_out(&profile));
            report.p2 = Some(format_poly(&profile_to_p2(&profile).q));
            code = 0;
        }
    }
    report.diagnostics = Some(diagnostics_out(&diags));
    Ok((report, code))
}

fn tubularize_report(input: &InputArgs, param: &ParamArg) -> CmdResult {
    let param = parse_param(param)?
        .ok_or_else(|| Failure("--param is required".to_string()))?;
    let _ = input;
    let td = tubularize(&param).map_err(|e| Failure(e.to_string()))?;
    let mut report = Report::new("tubularize", "Tubularized");
    report.tubular = Some(tubular_out(&td));
    Ok((report, 0))
}

fn parametrize_report(
    input: &InputArgs,
    param: &ParamArg,
    sos: &Option<String>,
) -> CmdResult {
    let fhat = load_poly(input)?;
    let param = parse_param(param)?
        .ok_or_else(|| Failure("--param is required".to_string()))?;
    let sos = sos.as_deref().map(parse_sos).transpose()?;
    let td = tubularize(&param).map_err(|e| Failure(e.to_string()))?;
    let sp = parametrize_surface(&fhat, &td, sos.as_ref().map(|(a, b)| (a, b)))
        .map_err(|e| Failure(e.to_string()))?;
    let mut report = Report::new("parametrize", "Parametrized");
    report.tubular = Some(tubular_out(&td));
    report.parametrization = Some(param_out(&sp));
    Ok((report, 0))
}

fn classify_report(
    input: &InputArgs,
    param: &ParamArg,
    genus_p2: Option<i64>,
) -> CmdResult {
    let f = load_poly(input)?;
    let surface = ImplicitSurface::new(f).map_err(|e| Failure(e.to_string()))?;
    let (verdict, diags) = detect(&surface, input.seed, input.max_samples);
    let profile = match verdict {
        AxisReport::NotSor { reason } => {
            let mut report = Report::new("classify", "NotSOR");
            report.reason = Some(reason);
            report.diagnostics = Some(diagnostics_out(&diags));
            return Ok((report, 2));
        }
        AxisReport::Sor { profile, .. } => profile,
        AxisReport::MultiAxis { profile, .. } => profile,
    };
    let p2 = profile_to_p2(&profile);
    let split = profile_split(&profile);
    let supplied = parse_param(param)?;
    let curve_param = match supplied {
        Some(p) => {
            if !validate_param(&p2, &p) {
                return Err(Failure(
                    "--param does not satisfy the plane-curve equation".to_string(),
                ));
            }
            Some(p)
        }
        None => p2_param_linear(&p2).filter(|p| validate_param(&p2, p)),
    };
    let mut components = None;
    let mut tubular = None;
    if let Some(cp) = &curve_param {
        if let Ok(td) = tubularize(cp) {
            components = Some(count_components(&td));
            tubular = Some(tubular_out(&td));
        }
    }
    let evidence = Evidence {
        profile_reducible: Some(split.is_some()),
        p2_param_present: curve_param.is_some(),
        components,
        genus_p2,
    };
    let classification = classify(evidence).map_err(|e| Failure(e.to_string()))?;
    let mut report = Report::new("classify", "Classified");
    report.profile = Some(profile_out(&profile));
    report.p2 = Some(format_poly(&p2.q));
    report.tubular = tubular;
    report.classification = Some(classification_out(&classification));
    report.diagnostics = Some(diagnostics_out(&diags));
    Ok((report, 0))
}

fn verify_report(input: &InputArgs, param: &ParamArg) -> CmdResult {
    let q = load_poly(input)?;
    let curve = P2Curve {
        q: q.primitive_normalized(),
    };
    let param = parse_param(param)?
        .ok_or_else(|| Failure("--param is required".to_string()))?;
    let valid = validate_param(&curve, &param);
    let mut report;
    let code;
    if valid {
        let index = tracing_index(&param).map_err(|e| Failure(e.to_string()))?;
        let proper = index == 1;
        report = Report::new("verify", if proper { "ValidProper" } else { "ValidImproper" });
        if proper {
            if let Ok(Some(phi)) = param_inverse(&param) {
                report.reason = Some(format!(
                    "inverse: {}",
                    crate::io::format::format_ratfunc(&phi)
                ));
            }
        } else {
            report.reason = Some(format!("tracing index {}", index));
        }
        code = 0;
    } else {
        report = Report::new("verify", "Invalid");
        report.reason = Some("parametrization does not lie on the curve".to_string());
        code = 2;
    }
    Ok((report, code))
}

/// Executes the parsed command; returns the report and exit code.
fn execute(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Detect(input) => detect_report("detect", input),
        Command::Profile(input) => detect_report("profile", input),
        Command::Tubularize { input, param } => tubularize_report(input, param),
        Command::Parametrize { input, param, sos } => parametrize_report(input, param, sos),
        Command::Classify {
            input,
            param,
            genus_p2,
        } => classify_report(input, param, *genus_p2),
        Command::Verify { input, param } => verify_report(input, param),
    }
}

fn wants_json(cli: &Cli) -> bool {
    match &cli.command {
        Command::Detect(i) | Command::Profile(i) => i.json,
        Command::Tubularize { input, .. }
        | Command::Parametrize { input, .. }
        | Command::Classify { input, .. }
        | Command::Verify { input, .. } => input.json,
    }
}

pub fn run() {
    let cli = Cli::parse();
    let json = wants_json(&cli);
    match execute(cli) {
        Ok((report, code)) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            std::process::exit(code);
        }
        Err(Failure(msg)) => {
            eprintln!("error: {}", msg);
            std::process::exit(1);
        }
    }
}
