//! Command-line front end: prints transition matrices in text, JSON or LaTeX,
//! expands skew Hall-Littlewood functions, runs the verification suites, and
//! streams tableau-like objects as JSON lines.
//!
//! Exit codes: 0 on success, 1 when a verification check fails (or an internal
//! invariant breaks), 2 on usage or input errors.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qtrans::ctab::{
    enumerate_sct, enumerate_ssct, sct_des_comp, sct_des_set, ssct_asc_set, ssct_sum_asc,
};
use qtrans::indexset::{Composition, SkewShape};
use qtrans::tableaux::{
    asc_comp, des_set, enumerate_ssyt, enumerate_syt, espec_cells, phi_poly, psi_poly, qasc_comp,
    qspecial_cells, special_cells, StarVariant, StarredTableau,
};
use qtrans::transition::{expand_skew, transition_matrix, Basis, BuildOptions};
use qtrans::verify::{run_suite, SUITE_NAMES};
use qtrans::{Error, Result};

const DEFAULT_MAX_N: usize = 7;
const DEFAULT_MAX_N_HEAVY: usize = 5;

#[derive(Parser)]
#[command(
    name = "qtrans",
    version,
    about = "Exact transition matrices between symmetric and quasisymmetric bases with a Hall-Littlewood parameter t"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the transition matrix between two bases at a given degree.
    Matrix(MatrixArgs),
    /// Expand a straight or skew Hall-Littlewood function in F or M terms.
    Expand(ExpandArgs),
    /// Run verification suites and print one line per check.
    Verify(VerifyArgs),
    /// Stream combinatorial objects for a shape as JSON, one per line.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct MatrixArgs {
    /// Source basis: one of m, s, P, Q, M, F, G, S, K (case matters).
    #[arg(long)]
    from: String,
    /// Target basis, same codes as --from.
    #[arg(long)]
    to: String,
    /// Degree: indices are partitions or compositions of this size.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the degree cap for this invocation (defaults: 7, or 5 for the
    /// Schur / Hall-Littlewood pairs; also settable via QTRANS_MAX_N and
    /// QTRANS_MAX_N_HEAVY).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct ExpandArgs {
    /// Which family to expand: P or Q.
    #[arg(long)]
    function: String,
    /// Shape in dotted form, e.g. "3.2" or "3.2/1".
    #[arg(long)]
    shape: String,
    /// Target basis: F or M.
    #[arg(long)]
    basis: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the cell-count cap (default 7, or QTRANS_MAX_N).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(SUITE_NAMES))]
    suite: String,
    /// Largest degree the parameterized suites sweep.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Objects {
    /// Standard tableaux with descent and special-cell statistics.
    Syt,
    /// Semistandard tableaux with their weight polynomials.
    Ssyt,
    /// Semistandard composition tableaux (requires --content).
    Ssct,
    /// Standard composition tableaux with descent statistics.
    Sct,
    /// Standard tableaux with every choice of starred cells.
    Starred,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    objects: Objects,
    /// Shape: dotted partition or skew shape for tableaux, dotted composition
    /// for composition tableaux.
    #[arg(long)]
    shape: String,
    /// Content composition (ssyt: optional filter; ssct: required).
    #[arg(long)]
    content: Option<String>,
    /// Largest entry for ssyt (default: the content size if --content is
    /// given, otherwise the number of cells).
    #[arg(long)]
    max_entry: Option<usize>,
    /// Star variant for --objects starred: P or Q.
    #[arg(long, default_value = "P")]
    variant: String,
    /// Override the size cap (default 7, or QTRANS_MAX_N).
    #[arg(long)]
    max_n: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Matrix(args) => cmd_matrix(args),
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

fn env_cap(name: &str, default: usize) -> usize {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn parse_basis(text: &str) -> Result<Basis> {
    text.parse()
}

/// Expands digit shorthand like "211" to "2.1.1" (sizes up to 9 only), with a
/// warning; dotted input passes through untouched.
fn normalize_parts(text: &str) -> Result<String> {
    let t = text.trim();
    if t.len() <= 1 || t.contains('.') || !t.chars().all(|c| c.is_ascii_digit()) {
        return Ok(t.to_string());
    }
    let total: u32 = t.chars().map(|c| c.to_digit(10).unwrap()).sum();
    if total > 9 {
        return Err(Error::Parse(format!(
            "`{t}` is ambiguous without dots (digit shorthand covers sizes up to 9); \
             write the parts as e.g. 3.2.1"
        )));
    }
    let dotted = t
        .chars()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(".");
    eprintln!("warning: reading `{t}` as single-digit parts `{dotted}`");
    Ok(dotted)
}

fn parse_skew_arg(text: &str) -> Result<SkewShape> {
    let normalized = match text.split_once('/') {
        Some((outer, inner)) => format!("{}/{}", normalize_parts(outer)?, normalize_parts(inner)?),
        None => normalize_parts(text)?,
    };
    SkewShape::parse(&normalized)
}

fn parse_comp_arg(text: &str) -> Result<Composition> {
    Composition::parse_dotted(&normalize_parts(text)?)
}

fn cmd_matrix(args: MatrixArgs) -> Result<ExitCode> {
    let from = parse_basis(&args.from)?;
    let to = parse_basis(&args.to)?;
    let heavy = matches!(
        (from, to),
        (Basis::Schur, Basis::HallLittlewoodP) | (Basis::HallLittlewoodP, Basis::Schur)
    );
    let cap = args.max_n.unwrap_or_else(|| {
        if heavy {
            env_cap("QTRANS_MAX_N_HEAVY", DEFAULT_MAX_N_HEAVY)
        } else {
            env_cap("QTRANS_MAX_N", DEFAULT_MAX_N)
        }
    });
    if args.n > cap {
        return Err(Error::CapExceeded(format!(
            "n = {} exceeds the cap {cap} for M({from},{to}); raise it with --max-n or the {} environment variable",
            args.n,
            if heavy { "QTRANS_MAX_N_HEAVY" } else { "QTRANS_MAX_N" },
        )));
    }
    let opts = BuildOptions {
        // An explicit --max-n is informed consent for the exponential corner.
        force: args.max_n.is_some(),
        ..BuildOptions::default()
    };
    let m = transition_matrix(from, to, args.n, &opts)?;
    match args.format {
        Format::Text => println!("{}", m.to_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&m).map_err(|e| Error::Internal(e.to_string()))?
        ),
        Format::Latex => println!("{}", m.to_latex()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(args: ExpandArgs) -> Result<ExitCode> {
    let function = match args.function.as_str() {
        "P" => Basis::HallLittlewoodP,
        "Q" => Basis::HallLittlewoodQ,
        other => {
            return Err(Error::Invalid(format!(
                "--function must be P or Q, got `{other}`"
            )))
        }
    };
    let basis = match args.basis.as_str() {
        "F" => Basis::Fundamental,
        "M" => Basis::QuasiMonomial,
        other => {
            return Err(Error::Invalid(format!(
                "--basis must be F or M, got `{other}`"
            )))
        }
    };
    let shape = parse_skew_arg(&args.shape)?;
    let cap = args.max_n.unwrap_or_else(|| env_cap("QTRANS_MAX_N", DEFAULT_MAX_N));
    if shape.n_cells() > cap {
        return Err(Error::CapExceeded(format!(
            "shape {shape} has {} cells, above the cap {cap}; raise it with --max-n or QTRANS_MAX_N",
            shape.n_cells(),
        )));
    }
    let exp = expand_skew(function, &shape, basis)?;
    match args.format {
        Format::Text => println!("{}", exp.to_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&exp).map_err(|e| Error::Internal(e.to_string()))?
        ),
        Format::Latex => {
            return Err(Error::Invalid(
                "expansions support --format text or json".into(),
            ))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let checks = run_suite(&args.suite, args.max_n)?;
    let mut passed = 0usize;
    for c in &checks {
        if c.passed {
            passed += 1;
            println!("PASS {}", c.name);
        } else {
            println!("FAIL {}", c.name);
            println!("     {}", c.detail);
        }
    }
    println!("{passed}/{} checks passed", checks.len());
    if passed == checks.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode> {
    let cap = args.max_n.unwrap_or_else(|| env_cap("QTRANS_MAX_N", DEFAULT_MAX_N));
    let guard = |cells: usize, what: &str| -> Result<()> {
        if cells > cap {
            Err(Error::CapExceeded(format!(
                "{what} has size {cells}, above the cap {cap}; raise it with --max-n or QTRANS_MAX_N"
            )))
        } else {
            Ok(())
        }
    };
    match args.objects {
        Objects::Syt => {
            let shape = parse_skew_arg(&args.shape)?;
            guard(shape.n_cells(), "shape")?;
            for t in enumerate_syt(&shape)? {
                let special: Vec<_> = special_cells(&t)
                    .into_iter()
                    .map(|(c, w)| json!({"cell": [c.0, c.1], "weight": w}))
                    .collect();
                let line = json!({
                    "shape": shape.to_string(),
                    "rows": t.rows(),
                    "des": des_set(&t)?,
                    "special": special,
                    "espec": espec_cells(&t)?,
                });
                println!("{line}");
            }
        }
        Objects::Ssyt => {
            let shape = parse_skew_arg(&args.shape)?;
            guard(shape.n_cells(), "shape")?;
            let content = args.content.as_deref().map(parse_comp_arg).transpose()?;
            let max_entry = args
                .max_entry
                .unwrap_or_else(|| content.as_ref().map_or(shape.n_cells(), |c| c.len()));
            for t in enumerate_ssyt(&shape, max_entry, content.as_ref())? {
                let line = json!({
                    "shape": shape.to_string(),
                    "rows": t.rows(),
                    "content": t.content(),
                    "psi": psi_poly(&t),
                    "phi": phi_poly(&t),
                });
                println!("{line}");
            }
        }
        Objects::Ssct => {
            let shape = parse_comp_arg(&args.shape)?;
            guard(shape.size(), "shape")?;
            let content = args
                .content
                .as_deref()
                .map(parse_comp_arg)
                .transpose()?
                .ok_or_else(|| {
                    Error::Invalid("--objects ssct requires --content".into())
                })?;
            for t in enumerate_ssct(&shape, &content)? {
                let line = json!({
                    "shape": shape.parts(),
                    "rows": t.rows(),
                    "content": t.content(),
                    "asc": ssct_asc_set(&t),
                    "asc_sum": ssct_sum_asc(&t),
                });
                println!("{line}");
            }
        }
        Objects::Sct => {
            let shape = parse_comp_arg(&args.shape)?;
            guard(shape.size(), "shape")?;
            for t in enumerate_sct(&shape)? {
                let line = json!({
                    "shape": shape.parts(),
                    "rows": t.rows(),
                    "des": sct_des_set(&t)?,
                    "des_composition": sct_des_comp(&t)?.parts(),
                });
                println!("{line}");
            }
        }
        Objects::Starred => {
            let shape = parse_skew_arg(&args.shape)?;
            guard(shape.n_cells(), "shape")?;
            let variant = match args.variant.as_str() {
                "P" => StarVariant::P,
                "Q" => StarVariant::Q,
                other => {
                    return Err(Error::Invalid(format!(
                        "--variant must be P or Q, got `{other}`"
                    )))
                }
            };
            for t in enumerate_syt(&shape)? {
                let starrable: Vec<_> = match variant {
                    StarVariant::P => special_cells(&t).into_iter().map(|(c, _)| c).collect(),
                    StarVariant::Q => qspecial_cells(&t).into_iter().map(|(c, _)| c).collect(),
                };
                for mask in 0usize..1 << starrable.len() {
                    let stars: BTreeSet<_> = starrable
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, c)| *c)
                        .collect();
                    let st = StarredTableau::new(t.clone(), stars, variant)?;
                    let ascents = match variant {
                        StarVariant::P => asc_comp(&st)?,
                        StarVariant::Q => qasc_comp(&st)?,
                    };
                    let line = json!({
                        "shape": shape.to_string(),
                        "rows": st.tableau().rows(),
                        "variant": args.variant,
                        "stars": st.stars(),
                        "sign": st.sign(),
                        "tstat": st.tstat(),
                        "ascents": ascents.parts(),
                    });
                    println!("{line}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
