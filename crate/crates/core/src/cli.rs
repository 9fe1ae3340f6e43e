//! Command-line interface.
//!
//! Exit status is 0 on success, 1 when `verify` finds a failing law, and 2
//! for malformed arguments or unreadable input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construct::{
    classic_instructions, curve_len, dragon_fold, dragon_unfold, stream_prefix, Instructions,
};
use crate::geometry::{curve_to_path, Heading, Point};
use crate::laws::{
    run_suite, CaseGenerator, LawId, LawReport, Mutant, Operators, SuiteConfig, MAX_EXHAUSTIVE_LEN,
};
use crate::paperfold::{creases, MAX_FOLDS};
use crate::render::{path_to_svg, CornerStyle, RenderOptions};
use crate::turn::Curve;

/// Longest instruction list `generate` accepts; the curve has `2^n - 1` turns.
pub const MAX_GENERATE_ORDER: usize = MAX_FOLDS as usize;

/// Longest stream prefix `stream` and `generate --method stream` accept.
pub const MAX_STREAM_COUNT: usize = 1 << MAX_FOLDS;

#[derive(Debug, Parser)]
#[command(name = "dragoncurve", version, about = "Generate, render and verify Heighway dragon curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a curve with one of the constructions.
    Generate(GenerateArgs),
    /// Check the algebraic laws relating the two constructions.
    Verify(VerifyArgs),
    /// Draw a turns file as SVG.
    Render(RenderArgs),
    /// Print the first turns of the infinite dragon stream.
    Stream(StreamArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Unfold,
    Fold,
    Paperfold,
    Stream,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Turns,
    /// CSV, one `x,y` line per point.
    Points,
    /// JSON array of `[x,y]` pairs.
    PointsJson,
    Svg,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    method: Method,
    /// Classic order; shorthand for `--rots` with N copies of C.
    #[arg(long, value_name = "N")]
    order: Option<usize>,
    /// Instruction string over C/A (case-insensitive).
    #[arg(long, value_name = "STR")]
    rots: Option<String>,
    /// Prefix length, for `--method stream` only.
    #[arg(long, value_name = "M")]
    count: Option<usize>,
    #[arg(long, value_enum, default_value = "turns")]
    format: Format,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Law id, or `all`.
    #[arg(long, default_value = "all", value_name = "ID")]
    law: String,
    #[arg(long, default_value_t = 12, value_name = "N")]
    max_len: usize,
    #[arg(long, default_value_t = 1000, value_name = "K")]
    cases: u64,
    #[arg(long, default_value_t = 42, value_name = "S")]
    seed: u64,
    #[arg(long)]
    json: bool,
    /// Run against a deliberately broken operator table.
    #[arg(long, hide = true, value_name = "NAME")]
    mutant: Option<String>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, default_value_t = 10.0)]
    scale: f64,
    #[arg(long, default_value_t = 10.0)]
    margin: f64,
    #[arg(long, default_value_t = 1.0)]
    stroke: f64,
    #[arg(long)]
    rounded: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StreamArgs {
    #[arg(long, value_name = "M")]
    count: usize,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Failure modes of a command, mapped to exit statuses.
enum Failure {
    Usage(String),
    LawsFailed,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Render(a) => render(a, out),
        Command::Stream(a) => stream(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::LawsFailed) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn emit(bytes: &[u8], dest: Option<&FsPath>, out: &mut dyn Write) -> Result<(), Failure> {
    match dest {
        Some(p) => std::fs::write(p, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(bytes)?),
    }
}

fn check_order(n: usize) -> Result<usize, Failure> {
    if n > MAX_GENERATE_ORDER {
        return Err(Failure::Usage(format!("order {n} exceeds the maximum of {MAX_GENERATE_ORDER}")));
    }
    Ok(n)
}

fn check_count(m: usize) -> Result<usize, Failure> {
    if m > MAX_STREAM_COUNT {
        return Err(Failure::Usage(format!("count {m} exceeds the maximum of {MAX_STREAM_COUNT}")));
    }
    Ok(m)
}

fn instructions(a: &GenerateArgs) -> Result<Instructions, Failure> {
    match (a.order, &a.rots) {
        (Some(n), None) => Ok(classic_instructions(check_order(n)?)),
        (None, Some(s)) => {
            let rs: Instructions = s.parse()?;
            check_order(rs.len())?;
            Ok(rs)
        }
        _ => Err(Failure::Usage("exactly one of --order and --rots is required".into())),
    }
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if a.count.is_some() && a.method != Method::Stream {
        return Err(Failure::Usage("--count applies only to --method stream".into()));
    }
    let curve = match a.method {
        Method::Unfold => dragon_unfold(&instructions(&a)?),
        Method::Fold => dragon_fold(&instructions(&a)?),
        Method::Paperfold => match (a.order, &a.rots) {
            (Some(n), None) => creases(check_order(n)? as u32)?,
            _ => return Err(Failure::Usage("--method paperfold takes --order only".into())),
        },
        Method::Stream => match (a.order, a.count, &a.rots) {
            (Some(n), None, None) => stream_prefix(curve_len(check_order(n)?)),
            (None, Some(m), None) => stream_prefix(check_count(m)?),
            _ => return Err(Failure::Usage("--method stream takes exactly one of --order and --count".into())),
        },
    };
    let bytes = format_curve(&curve, a.format)?;
    emit(bytes.as_bytes(), a.out.as_deref(), out)
}

fn format_curve(curve: &Curve, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Turns => curve.to_line(),
        Format::Points => curve_to_path(curve, Point::ORIGIN, Heading::East).to_csv(),
        Format::PointsJson => {
            let mut s = curve_to_path(curve, Point::ORIGIN, Heading::East).to_json();
            s.push('\n');
            s
        }
        Format::Svg => path_to_svg(
            &curve_to_path(curve, Point::ORIGIN, Heading::East),
            &RenderOptions::default(),
        )?,
    })
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    seed: u64,
    passed: bool,
    reports: &'a [LawReport],
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let laws = if a.law == "all" {
        LawId::ALL.to_vec()
    } else {
        vec![a.law.parse::<LawId>().map_err(Failure::Usage)?]
    };
    if a.max_len > MAX_EXHAUSTIVE_LEN {
        return Err(Failure::Usage(format!(
            "--max-len {} exceeds the maximum of {MAX_EXHAUSTIVE_LEN}",
            a.max_len
        )));
    }
    let ops = match &a.mutant {
        Some(m) => Operators::mutant(m.parse::<Mutant>().map_err(Failure::Usage)?),
        None => Operators::REFERENCE,
    };
    let cfg = SuiteConfig {
        laws,
        cases: a.cases,
        max_len: a.max_len,
        gen: CaseGenerator { seed: a.seed, ..CaseGenerator::default() },
        ops,
    };
    let reports = run_suite(&cfg);
    let passed = reports.iter().all(LawReport::passed);

    if a.json {
        let doc = SuiteJson { seed: a.seed, passed, reports: &reports };
        let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
        s.push('\n');
        out.write_all(s.as_bytes())?;
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        if failed == 0 {
            writeln!(out, "all {} laws passed (seed {})", reports.len(), a.seed)?;
        } else {
            writeln!(out, "{failed} of {} laws FAILED (seed {})", reports.len(), a.seed)?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::LawsFailed)
    }
}

fn render(a: RenderArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| Failure::Usage(format!("{}: {e}", a.input.display())))?;
    let curve: Curve = text.parse()?;
    let opts = RenderOptions {
        scale: a.scale,
        margin: a.margin,
        stroke_width: a.stroke,
        corner_style: if a.rounded { CornerStyle::Rounded } else { CornerStyle::Miter },
    };
    let svg = path_to_svg(&curve_to_path(&curve, Point::ORIGIN, Heading::East), &opts)?;
    emit(svg.as_bytes(), a.out.as_deref(), out)
}

fn stream(a: StreamArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let curve = stream_prefix(check_count(a.count)?);
    emit(curve.to_line().as_bytes(), a.out.as_deref(), out)
}
