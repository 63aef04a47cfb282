//! The `planar` command line.
//!
//! Exit status: 0 on success, 2 when a sweep records any mismatch between a
//! criterion and the oracles, 1 on usage or runtime errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::builder::StyledStr;
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use crate::criteria::Family;
use crate::dopoly::parse::{parse_elem, parse_poly};
use crate::dopoly::{bent_check, char_sum, is_planar_bruteforce, is_planar_quadform};
use crate::error::{Error, Result};
use crate::field::{build_field, FieldCtx};
use crate::sweep::{render_report, run_sweep, Mode, OracleChoice, ReportFormat, SweepReport, SweepSpec};

#[derive(Parser, Debug)]
#[command(name = "planar", version, about = "Planarity sweeps for Dembowski-Ostrom polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sweep a coefficient family, comparing its criterion with the oracles.
    Sweep(SweepArgs),
    /// Sweep (A, B, r) for the zero-avoidance criterion over F_{q^3}.
    PropAb(PropAbArgs),
    /// Decide planarity of one polynomial.
    Planarity(PolyArgs),
    /// Exact character sum S(b) of c·f.
    Charsum(CharsumArgs),
    /// Print the field construction.
    FieldInfo(FieldArgs),
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long)]
    n: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Cubic1,
    Cubic2,
    Quartic,
    Monomial,
    Custom,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleArg {
    Quadform,
    Bruteforce,
    Both,
}

impl From<OracleArg> for OracleChoice {
    fn from(o: OracleArg) -> Self {
        match o {
            OracleArg::Quadform => OracleChoice::Quadform,
            OracleArg::Bruteforce => OracleChoice::Bruteforce,
            OracleArg::Both => OracleChoice::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Report path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit only the summary lines.
    #[arg(long)]
    counts_only: bool,
}

#[derive(Args, Debug)]
struct SelectionArgs {
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeArg,
    /// Number of pairs in sample mode.
    #[arg(long, default_value_t = 1000)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl SelectionArgs {
    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Sample => Mode::Sample { count: self.count, seed: self.seed },
        }
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// DO template in the placeholders a, b (custom family).
    #[arg(long)]
    template: Option<String>,
    #[arg(long, value_enum, default_value = "quadform")]
    oracle: OracleArg,
    /// Run the oracle on every quartic pair.
    #[arg(long)]
    full_oracle: bool,
    #[command(flatten)]
    select: SelectionArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct PropAbArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[command(flatten)]
    select: SelectionArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Polynomial such as "x^{q^2+1} + g^4 x^{q+1} + g x^2".
    #[arg(long)]
    poly: String,
    #[arg(long, value_enum, default_value = "both")]
    oracle: OracleArg,
}

#[derive(Args, Debug)]
struct CharsumArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    poly: String,
    /// Linear shift b in S(b) = Σ ψ(c f(t) - b t).
    #[arg(long, default_value = "0")]
    b: String,
    /// Multiplier c.
    #[arg(long, default_value = "1")]
    c: String,
    /// Also test |S(b)|^2 = q^n for every b.
    #[arg(long)]
    bent: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return 0;
            }
            if e.kind() != ErrorKind::MissingSubcommand && e.kind() != ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprintln!("\n{}", usage_for(args.get(1)));
            }
            return 1;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Usage line of the subcommand named by `name`, or of the program.
fn usage_for(name: Option<&OsString>) -> StyledStr {
    let mut cmd = Cli::command();
    cmd.build();
    let sub = name.and_then(|n| n.to_str()).and_then(|n| cmd.find_subcommand_mut(n).map(|c| c.render_usage()));
    sub.unwrap_or_else(|| cmd.render_usage())
}

fn field(args: &FieldArgs) -> Result<FieldCtx> {
    build_field(args.p, args.m, args.n)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Sweep(a) => {
            let family = match a.family {
                FamilyArg::Cubic1 => Family::Cubic1,
                FamilyArg::Cubic2 => Family::Cubic2,
                FamilyArg::Quartic => Family::Quartic,
                FamilyArg::Monomial => Family::Monomial,
                FamilyArg::Custom => Family::Custom {
                    template: a
                        .template
                        .clone()
                        .ok_or_else(|| Error::Spec("--family custom needs --template".into()))?,
                },
            };
            let spec = SweepSpec {
                p: a.field.p,
                m: a.field.m,
                n: a.field.n,
                family,
                mode: a.select.mode(),
                oracle: a.oracle.into(),
                workers: a.select.workers,
                full_oracle: a.full_oracle,
                counts_only: a.output.counts_only,
            };
            finish(&run_sweep(&spec)?, &a.output)
        }
        Command::PropAb(a) => {
            let mut spec = SweepSpec::new(a.p, a.m, 3, Family::PropAb);
            spec.oracle = OracleChoice::Bruteforce;
            spec.mode = a.select.mode();
            spec.workers = a.select.workers;
            spec.counts_only = a.output.counts_only;
            finish(&run_sweep(&spec)?, &a.output)
        }
        Command::Planarity(a) => {
            let ctx = field(&a.field)?;
            let f = parse_poly(&ctx, &a.poly)?;
            let mut out = std::io::stdout().lock();
            let oracle: OracleChoice = a.oracle.into();
            let mut verdicts = Vec::new();
            if oracle != OracleChoice::Bruteforce {
                verdicts.push(("quadform", is_planar_quadform(&ctx, &f)));
            }
            if oracle != OracleChoice::Quadform {
                verdicts.push(("bruteforce", is_planar_bruteforce(&ctx, &f)));
            }
            for (name, v) in &verdicts {
                let witness = v.witness.map_or_else(|| "-".into(), |c| ctx.display(c));
                writeln!(out, "{name}: planar={} witness={witness}", v.planar).map_err(stdout_err)?;
            }
            let planar = verdicts[0].1.planar;
            if verdicts.iter().any(|(_, v)| v.planar != planar) {
                writeln!(out, "oracles disagree").map_err(stdout_err)?;
                return Ok(2);
            }
            writeln!(out, "planar={planar}").map_err(stdout_err)?;
            Ok(0)
        }
        Command::Charsum(a) => {
            let ctx = field(&a.field)?;
            let c = parse_elem(&ctx, &a.c)?;
            if c.is_zero() {
                return Err(Error::InvalidParameter("c must be nonzero".into()));
            }
            let f = parse_poly(&ctx, &a.poly)?.scaled(&ctx, c);
            let b = parse_elem(&ctx, &a.b)?;
            let s = char_sum(&ctx, &f, b);
            let mut out = std::io::stdout().lock();
            writeln!(out, "S = {s}").map_err(stdout_err)?;
            writeln!(out, "|S|^2 = {}", s.norm_sq()).map_err(stdout_err)?;
            writeln!(out, "|S|^2 == q^n: {}", s.norm_sq().equals_integer(ctx.order() as i64)).map_err(stdout_err)?;
            if a.bent {
                writeln!(out, "bent: {}", bent_check(&ctx, &f)).map_err(stdout_err)?;
            }
            Ok(0)
        }
        Command::FieldInfo(a) => {
            let ctx = field(&a)?;
            let mut out = std::io::stdout().lock();
            let w = |out: &mut std::io::StdoutLock, s: String| writeln!(out, "{s}").map_err(stdout_err);
            w(&mut out, format!("p = {}, m = {}, n = {}, q = {}", ctx.p(), ctx.m(), ctx.n(), ctx.q()))?;
            w(&mut out, format!("order = {}", ctx.order()))?;
            w(&mut out, format!("modulus (constant term first) = {:?}", ctx.modulus()))?;
            w(&mut out, format!("generator = {:?}", ctx.coeffs(ctx.generator())))?;
            w(&mut out, format!("tables = {}", ctx.has_tables()))?;
            for k in (1..=ctx.n()).filter(|k| ctx.n() % k == 0) {
                let sub = ctx.subfield(k)?;
                w(&mut out, format!("subfield F_q^{k}: order {}", sub.order()))?;
            }
            Ok(0)
        }
    }
}

fn stdout_err(source: std::io::Error) -> Error {
    Error::Io { path: PathBuf::from("<stdout>"), source }
}

fn finish(report: &SweepReport, output: &OutputArgs) -> Result<i32> {
    let format = match output.format {
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Json => ReportFormat::Json,
    };
    match &output.out {
        Some(path) => crate::sweep::emit_report(report, format, path)?,
        None => {
            let body = render_report(report, format)?;
            std::io::stdout().lock().write_all(body.as_bytes()).map_err(stdout_err)?;
        }
    }
    let s = &report.summary;
    eprintln!(
        "{} {}: examined={} planar={} criterion_satisfied={} mismatches={} ({:.2}s, {:.0}/s)",
        report.spec.family,
        format_args!("p={} m={} n={}", report.spec.p, report.spec.m, report.spec.n),
        s.examined,
        s.planar,
        s.criterion_satisfied,
        s.mismatches,
        report.timing.seconds,
        report.timing.pairs_per_second,
    );
    Ok(if report.has_mismatches() { 2 } else { 0 })
}
