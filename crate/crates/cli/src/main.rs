mod cache;
mod text;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use magickit::liealg::{build_sp6, psi};
use magickit::triple::{classify_detailed, classify_hyperplane, classify_severi_hyperplane, phi};
use magickit::verify::run_suite;
use magickit::{
    catalog, AlgebraTag, CalibrationConstants, FreudenthalVector, JordanElement, JordanRank, Scalar, Suite,
    VerificationReport, VerifyOptions,
};

#[derive(Parser, Debug)]
#[command(name = "magickit", version, about = "Exact computations on Freudenthal triple systems and the magic square")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Recompute calibration constants instead of reading the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Include wall-clock timings in verification reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the catalog tables.
    Tables {
        /// Restrict the F-geometry chart to one row (1-4).
        #[arg(long)]
        row: Option<u8>,
        /// Restrict to one algebra dimension (1, 2, 4 or 8).
        #[arg(long)]
        m: Option<i64>,
    },
    /// Rank of a point of J3(A).
    ClassifyJordan { file: PathBuf },
    /// Orbit of a point of Z2(A).
    ClassifyTriple { file: PathBuf },
    /// Type of a hyperplane section, given a covector on Z2(A) or on J3(A).
    ClassifyHyperplane { file: PathBuf },
    /// Evaluate phi on P, or on {"z": .., "P": ..}.
    Phi {
        #[arg(long, value_parser = parse_tag)]
        algebra: AlgebraTag,
        file: PathBuf,
    },
    /// Evaluate psi on {"u": .., "A": .., "v": ..}.
    Psi {
        #[arg(long, value_parser = parse_tag)]
        algebra: AlgebraTag,
        file: PathBuf,
    },
    /// Solve for the normalization constants and store them in the cache.
    Calibrate {
        #[arg(long, value_parser = parse_tag)]
        algebra: AlgebraTag,
    },
    /// Run randomized exact verification suites.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: SuiteChoice,
        #[arg(long, value_parser = parse_tag)]
        algebra: Option<AlgebraTag>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
    },
}

#[derive(Clone, Copy, Debug)]
enum SuiteChoice {
    One(Suite),
    All,
}

fn parse_tag(s: &str) -> Result<AlgebraTag, String> {
    s.parse().map_err(|_| format!("unknown algebra `{s}` (expected Zero, R, C, H or O)"))
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    s.parse().map(SuiteChoice::One).map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}` (expected one of {}, all)", names.join(", "))
    })
}

/// Errors that map to exit code 2.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<magickit::Error> for InputError {
    fn from(e: magickit::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

struct Ctx {
    format: Format,
    no_cache: bool,
    timing: bool,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> CliResult<()> {
        match self.format {
            Format::Json => {
                let s = serde_json::to_string_pretty(value).map_err(|e| InputError(e.to_string()))?;
                println!("{s}");
            }
            Format::Text => print!("{}", text()),
        }
        Ok(())
    }

    fn calibration(&self, tag: AlgebraTag) -> CliResult<CalibrationConstants> {
        Ok(cache::load(tag, self.no_cache)?)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn check_tag(expected: AlgebraTag, found: AlgebraTag) -> CliResult<()> {
    if expected == found {
        Ok(())
    } else {
        Err(InputError(format!("--algebra {expected} but the input is over {found}")))
    }
}

#[derive(Serialize)]
struct JordanReport {
    tag: AlgebraTag,
    rank: JordanRank,
    det: Scalar,
}

#[derive(Deserialize)]
struct PhiPoint {
    z: Scalar,
    #[serde(rename = "P")]
    p: JordanElement,
}

#[derive(Deserialize)]
struct PsiInput {
    u: Scalar,
    #[serde(rename = "A")]
    a: FreudenthalVector,
    v: Scalar,
}

fn classify_hyperplane_file(ctx: &Ctx, path: &Path) -> CliResult<()> {
    let raw: Value = read_json(path)?;
    let parse_err = |e: serde_json::Error| InputError(format!("{}: {e}", path.display()));
    if raw.get("d").is_some() {
        let h: JordanElement = serde_json::from_value(raw).map_err(parse_err)?;
        let section = classify_severi_hyperplane(&magickit::JordanDual(h))?;
        let out = serde_json::json!({ "section": section });
        return ctx.emit(&out, || format!("{section:?}\n"));
    }
    let h: FreudenthalVector = serde_json::from_value(raw).map_err(parse_err)?;
    let cal = ctx.calibration(h.tag())?;
    let kind = classify_hyperplane(&cal, h.tag(), &h.coords())?;
    let out = serde_json::json!({ "type": kind });
    ctx.emit(&out, || format!("{kind:?}\n"))
}

fn verify(ctx: &Ctx, choice: SuiteChoice, tag: Option<AlgebraTag>, opts: VerifyOptions) -> CliResult<bool> {
    let suites: Vec<Suite> = match choice {
        SuiteChoice::One(s) => vec![s],
        SuiteChoice::All => Suite::ALL.to_vec(),
    };
    // The catalog tables do not depend on the algebra; its orbit-dimension cross-check runs over R by default.
    let tag = match (tag, choice) {
        (Some(t), _) => t,
        (None, SuiteChoice::One(Suite::Catalog)) => AlgebraTag::R,
        (None, _) => return Err(InputError("--algebra is required for this suite".into())),
    };
    let needs_cal = suites.iter().any(|s| s.needs_calibration() || *s == Suite::Catalog);
    let cal = if needs_cal { Some(ctx.calibration(tag)?) } else { None };
    let needs_basis = suites.iter().filter(|s| matches!(s, Suite::Omega | Suite::Quartic | Suite::Sp6 | Suite::Moment)).count();
    let basis = match (&cal, needs_basis) {
        (Some(c), n) if n > 1 => Some(build_sp6(c, tag)?),
        _ => None,
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in suites {
        let start = Instant::now();
        let mut rep = run_suite(suite, tag, cal.as_ref(), basis.as_ref(), &opts)?;
        if ctx.timing {
            rep.elapsed_ms = Some(start.elapsed().as_millis());
        }
        reports.push(rep);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    match choice {
        SuiteChoice::One(_) => ctx.emit(&reports[0], || text::reports(&reports))?,
        SuiteChoice::All => ctx.emit(&reports, || text::reports(&reports))?,
    }
    Ok(passed)
}

/// Returns `Ok(false)` when a verification ran and failed.
fn run(cli: Cli) -> CliResult<bool> {
    let ctx = Ctx { format: cli.format, no_cache: cli.no_cache, timing: cli.timing };
    match cli.command {
        Command::Tables { row, m } => {
            let dump = catalog::dump(row, m)?;
            ctx.emit(&dump, || text::catalog(&dump))?;
        }
        Command::ClassifyJordan { file } => {
            let p: JordanElement = read_json(&file)?;
            let rep = JordanReport { tag: p.tag(), rank: p.rank_classify(), det: p.det() };
            ctx.emit(&rep, || format!("{:?} (det {})\n", rep.rank, rep.det))?;
        }
        Command::ClassifyTriple { file } => {
            let w: FreudenthalVector = read_json(&file)?;
            let cal = ctx.calibration(w.tag())?;
            let c = classify_detailed(&cal, &w);
            ctx.emit(&c, || format!("{:?} (Q = {})\n", c.label, c.q))?;
        }
        Command::ClassifyHyperplane { file } => classify_hyperplane_file(&ctx, &file)?,
        Command::Phi { algebra, file } => {
            let raw: Value = read_json(&file)?;
            let parse_err = |e: serde_json::Error| InputError(format!("{}: {e}", file.display()));
            let (z, p) = if raw.get("P").is_some() {
                let pt: PhiPoint = serde_json::from_value(raw).map_err(parse_err)?;
                (pt.z, pt.p)
            } else {
                (Scalar::ONE, serde_json::from_value(raw).map_err(parse_err)?)
            };
            check_tag(algebra, p.tag())?;
            let w = phi(&z, &p);
            ctx.emit(&w, || text::vector(&w))?;
        }
        Command::Psi { algebra, file } => {
            let input: PsiInput = read_json(&file)?;
            check_tag(algebra, input.a.tag())?;
            let cal = ctx.calibration(algebra)?;
            let basis = build_sp6(&cal, algebra)?;
            let image = psi(&cal, &basis, &input.u, &input.a, &input.v)?;
            ctx.emit(&image, || text::psi(&image))?;
        }
        Command::Calibrate { algebra } => {
            let cal = cache::recalibrate(algebra)?;
            ctx.emit(&cal, || text::calibration(&cal))?;
        }
        Command::Verify { suite, algebra, trials, seed, coeff_bound } => {
            return verify(&ctx, suite, algebra, VerifyOptions { trials, seed, coeff_bound });
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
