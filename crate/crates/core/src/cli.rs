//! Command-line front end.
//!
//! Exit codes: 0 on success (and on `ExactMatch` for `verify`), 1 on usage
//! errors, 2 when `verify` finds a mismatch.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::claims::MatrixKind;
use crate::error::{Error, Result};
use crate::graph::{ExportFormat, PowerGraph};
use crate::group::{GroupSpec, PrimePair};
use crate::linalg::char_poly_exact;
use crate::roots::{decimal_precision, spectrum_from_charpoly};
use crate::verify::{counterexample_suite, factored, sweep, ClaimFamily, SweepParam, Verdict};

pub const PRECISION_ENV: &str = "POWERSPEC_PRECISION";
pub const DEFAULT_DIGITS: u32 = 6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// `cyclic:n`, `dihedral:n` or `d2pq:p,q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSelector(pub GroupSpec);

impl FromStr for GroupSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.split_once(':').ok_or_else(|| {
            Error::Usage(format!(
                "expected cyclic:n, dihedral:n or d2pq:p,q, got {s:?}"
            ))
        })?;
        let parse_n = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Usage(format!("not a positive integer: {t:?}")))
        };
        let spec = match kind {
            "cyclic" | "z" => GroupSpec::cyclic(parse_n(arg)?),
            "dihedral" | "d" => GroupSpec::dihedral(parse_n(arg)?),
            "d2pq" => {
                let pp: PrimePair = arg
                    .parse()
                    .map_err(|e: Error| Error::Usage(e.to_string()))?;
                GroupSpec::dihedral(pp.pq())
            }
            other => return Err(Error::Usage(format!("unknown group kind {other:?}"))),
        };
        spec.map(GroupSelector)
            .map_err(|e| Error::Usage(e.to_string()))
    }
}

impl fmt::Display for GroupSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Adjacency,
    Laplacian,
    Signless,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Adjacency => MatrixKind::Adjacency,
            KindArg::Laplacian => MatrixKind::Laplacian,
            KindArg::Signless => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    AdjD2pq,
    LapD2pq,
    SlapD2pq,
    PrimePower,
    ZnDnMap,
}

impl From<Theorem> for ClaimFamily {
    fn from(t: Theorem) -> Self {
        match t {
            Theorem::AdjD2pq => ClaimFamily::AdjD2pq,
            Theorem::LapD2pq => ClaimFamily::LapD2pq,
            Theorem::SlapD2pq => ClaimFamily::SlapD2pq,
            Theorem::PrimePower => ClaimFamily::PrimePower,
            Theorem::ZnDnMap => ClaimFamily::ZnDnMap,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "powerspec",
    about = "Spectra of power graphs of cyclic and dihedral groups"
)]
pub struct Cli {
    /// Decimal digits for isolated roots (default 6, or $POWERSPEC_PRECISION).
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Append a generation timestamp to text output.
    #[arg(long, global = true)]
    pub stamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Replace an existing output file.
    #[arg(long)]
    pub overwrite: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the power graph and export it as DOT or JSON.
    Build {
        group: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: OutputFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the exact characteristic polynomial (ascending coefficients).
    Charpoly {
        group: String,
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: KindArg,
        /// Factored human-readable form instead of coefficients.
        #[arg(long)]
        pretty: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the exact spectrum: integer eigenvalues, then isolated roots.
    Spectrum {
        group: String,
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a closed-form claim against the exact polynomial.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reproduce the D_12 counterexamples (or check D_2n for another n).
    Counterexample {
        #[arg(default_value = "dihedral:6")]
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify a claim family over a parameter range and emit a CSV summary.
    Sweep {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Inclusive range of n, e.g. `3..15`.
        #[arg(long)]
        range: Option<String>,
        /// Prime pairs, e.g. `2,3 2,5 3,5`.
        #[arg(long, num_args = 1..)]
        pairs: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<Vec<u64>> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| Error::Usage(format!("bad range bound {t:?}")))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            Ok((a..=b).collect())
        }
        None => Ok(vec![parse(s)?]),
    }
}

fn precision_digits(flag: Option<u32>) -> Result<u32> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Usage(format!(
                "{PRECISION_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_DIGITS),
    }
}

struct Ctx {
    digits: u32,
    precision: BigRational,
    stamp: bool,
}

impl Ctx {
    fn finish_text(&self, mut s: String) -> String {
        if !s.ends_with('\n') {
            s.push('\n');
        }
        if self.stamp {
            let secs = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            s.push_str(&format!("# generated at unix time {secs}\n"));
        }
        s
    }
}

fn emit(text: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    match &output.out {
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Usage(format!("cannot write output: {e}"))),
        Some(path) => {
            if path.exists() && !output.overwrite {
                return Err(Error::Usage(format!(
                    "{} exists; pass --overwrite to replace it",
                    path.display()
                )));
            }
            std::fs::write(path, text)
                .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
        }
    }
}

fn group_arg(s: &str) -> Result<GroupSpec> {
    s.parse::<GroupSelector>().map(|g| g.0)
}

fn unsupported(cmd: &str, f: OutputFormat) -> Error {
    Error::Usage(format!("{cmd} does not support --format {f:?}").to_lowercase())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let digits = precision_digits(cli.precision)?;
    // Roots are refined past the printed digits so rounding the midpoint is reliable.
    let ctx = Ctx {
        digits,
        precision: decimal_precision(digits + 3),
        stamp: cli.stamp,
    };
    match cli.command {
        Command::Build {
            group,
            format,
            output,
        } => cmd_build(&group, format, &output, stdout),
        Command::Charpoly {
            group,
            kind,
            pretty,
            format,
            output,
        } => cmd_charpoly(&ctx, &group, kind.into(), pretty, format, &output, stdout),
        Command::Spectrum {
            group,
            kind,
            format,
            output,
        } => cmd_spectrum(&ctx, &group, kind.into(), format, &output, stdout),
        Command::Verify {
            theorem,
            p,
            q,
            n,
            format,
            output,
        } => cmd_verify(&ctx, theorem.into(), p, q, n, format, &output, stdout),
        Command::Counterexample {
            group,
            format,
            output,
        } => cmd_counterexample(&ctx, &group, format, &output, stdout),
        Command::Sweep {
            theorem,
            range,
            pairs,
            output,
        } => cmd_sweep(
            &ctx,
            theorem.into(),
            range.as_deref(),
            &pairs,
            &output,
            stdout,
            stderr,
        ),
    }
}

fn cmd_build(
    group: &str,
    format: OutputFormat,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let g = PowerGraph::build(group_arg(group)?);
    let fmt = match format {
        OutputFormat::Dot => ExportFormat::Dot,
        OutputFormat::Json => ExportFormat::Json,
        other => return Err(unsupported("build", other)),
    };
    let mut text = g.export(fmt);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    emit(&text, output, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_charpoly(
    ctx: &Ctx,
    group: &str,
    kind: MatrixKind,
    pretty: bool,
    format: OutputFormat,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let spec = group_arg(group)?;
    let poly = char_poly_exact(&PowerGraph::build(spec).matrix(kind));
    let text = match format {
        OutputFormat::Text if pretty => ctx.finish_text(factored(&poly)),
        OutputFormat::Text => {
            let cs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            ctx.finish_text(format!("[{}]", cs.join(", ")))
        }
        OutputFormat::Json => {
            let v = serde_json::json!({ "group": spec, "kind": kind, "coefficients": poly });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        other => return Err(unsupported("charpoly", other)),
    };
    emit(&text, output, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_spectrum(
    ctx: &Ctx,
    group: &str,
    kind: MatrixKind,
    format: OutputFormat,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let spec = group_arg(group)?;
    let poly = char_poly_exact(&PowerGraph::build(spec).matrix(kind));
    let spectrum = spectrum_from_charpoly(&poly, &ctx.precision)?;
    let text = match format {
        OutputFormat::Text => ctx.finish_text(spectrum.to_text_with(ctx.digits as usize)),
        OutputFormat::Json => {
            let v =
                serde_json::json!({ "group": spec, "kind": kind, "spectrum": spectrum.to_json() });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        other => return Err(unsupported("spectrum", other)),
    };
    emit(&text, output, stdout)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    ctx: &Ctx,
    family: ClaimFamily,
    p: Option<u64>,
    q: Option<u64>,
    n: Option<u64>,
    format: OutputFormat,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let param = if family.takes_pairs() {
        match (p, q) {
            (Some(p), Some(q)) => {
                SweepParam::Pair(PrimePair::new(p, q).map_err(|e| Error::Usage(e.to_string()))?)
            }
            _ => return Err(Error::Usage(format!("{} needs --p and --q", family.name()))),
        }
    } else {
        SweepParam::Order(n.ok_or_else(|| Error::Usage(format!("{} needs --n", family.name())))?)
    };
    let report = family
        .verify(param, &ctx.precision)
        .map_err(|e| Error::Usage(e.to_string()))?;
    let text = match format {
        OutputFormat::Text => ctx.finish_text(report.to_text()),
        OutputFormat::Json => report.to_json() + "\n",
        other => return Err(unsupported("verify", other)),
    };
    emit(&text, output, stdout)?;
    Ok(match report.verdict {
        Verdict::ExactMatch => EXIT_OK,
        Verdict::Mismatch => EXIT_MISMATCH,
    })
}

fn cmd_counterexample(
    ctx: &Ctx,
    group: &str,
    format: OutputFormat,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let spec = group_arg(group)?;
    if spec.kind != crate::group::GroupKind::Dihedral {
        return Err(Error::Usage("counterexample needs a dihedral group".into()));
    }
    let reports =
        counterexample_suite(spec.n, &ctx.precision).map_err(|e| Error::Usage(e.to_string()))?;
    let text = match format {
        OutputFormat::Text => {
            let blocks: Vec<String> = reports.iter().map(|r| r.to_text()).collect();
            ctx.finish_text(blocks.join("\n\n"))
        }
        OutputFormat::Json => serde_json::to_string_pretty(&reports).expect("json") + "\n",
        other => return Err(unsupported("counterexample", other)),
    };
    emit(&text, output, stdout)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    ctx: &Ctx,
    family: ClaimFamily,
    range: Option<&str>,
    pairs: &[String],
    output: &OutputArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let params: Vec<SweepParam> = if family.takes_pairs() {
        if range.is_some() {
            return Err(Error::Usage(format!(
                "{} takes --pairs, not --range",
                family.name()
            )));
        }
        pairs
            .iter()
            .flat_map(|s| s.split_whitespace())
            .map(|s| {
                s.parse::<PrimePair>()
                    .map(SweepParam::Pair)
                    .map_err(|e| Error::Usage(e.to_string()))
            })
            .collect::<Result<_>>()?
    } else {
        if !pairs.is_empty() {
            return Err(Error::Usage(format!(
                "{} takes --range, not --pairs",
                family.name()
            )));
        }
        let r = range.ok_or_else(|| Error::Usage(format!("{} needs --range", family.name())))?;
        parse_range(r)?.into_iter().map(SweepParam::Order).collect()
    };
    let table = sweep(family, &params, &ctx.precision).map_err(|e| Error::Usage(e.to_string()))?;
    for (param, why) in &table.skipped {
        let _ = writeln!(stderr, "skipped {param}: {why}");
    }
    emit(&table.to_csv(), output, stdout)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["powerspec"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn selectors() {
        assert_eq!(
            "dihedral:6".parse::<GroupSelector>().unwrap().0,
            GroupSpec::dihedral(6).unwrap()
        );
        assert_eq!(
            "d2pq:3,5".parse::<GroupSelector>().unwrap().0,
            GroupSpec::dihedral(15).unwrap()
        );
        assert_eq!(
            "cyclic:7".parse::<GroupSelector>().unwrap().0,
            GroupSpec::cyclic(7).unwrap()
        );
        for bad in [
            "dihedral", "d2pq:3,3", "d2pq:4,5", "klein:4", "cyclic:0", "cyclic:x",
        ] {
            assert!(
                matches!(bad.parse::<GroupSelector>(), Err(Error::Usage(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6").unwrap(), [3, 4, 5, 6]);
        assert_eq!(parse_range("3..=4").unwrap(), [3, 4]);
        assert_eq!(parse_range("9").unwrap(), [9]);
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn laplacian_spectrum_text() {
        let (code, out, _) = run_str(&["spectrum", "dihedral:6", "--kind", "laplacian"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 ×1, 1 ×6, 3 ×1, 5 ×1, 6 ×2, 12 ×1\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&["spectrum", "d2pq:4,5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "lap-d2pq", "--p", "2"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["verify", "lap-d2pq", "--p", "2", "--q", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["build", "dihedral:6", "--format", "csv"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            run_str(&["verify", "lap-d2pq", "--p", "2", "--q", "3"]).0,
            EXIT_OK
        );
        let (code, out, _) = run_str(&["verify", "adj-d2pq", "--p", "2", "--q", "3"]);
        assert_eq!(code, EXIT_MISMATCH);
        assert!(
            out.contains("coefficient λ^3: claimed -4, oracle -16"),
            "{out}"
        );
    }

    #[test]
    fn charpoly_ascending() {
        let (code, out, _) = run_str(&["charpoly", "cyclic:3"]);
        assert_eq!(code, 0);
        // K3: λ^3 - 3λ - 2
        assert_eq!(out, "[-2, -3, 0, 1]\n");
        let (_, out, _) = run_str(&["charpoly", "dihedral:6", "--kind", "laplacian", "--pretty"]);
        assert_eq!(out, "λ(λ - 1)^6(λ - 3)(λ - 5)(λ - 6)^2(λ - 12)\n");
    }
}
