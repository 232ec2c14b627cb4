//! The `hkr` command line: inspect spaces, print pairing matrices, apply
//! integral transforms and run the verification suites.
//!
//! Exit codes: 0 success (every check passed), 1 a check failed, 2 usage
//! error, malformed record or unwritable report.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::builder::PossibleValuesParser;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use hkr_core::characteristic::{chern_character, todd_class};
use hkr_core::records::{class_from_record, class_to_record, BundleSpec, ClassRecord, KernelSpec, SpaceSpec};
use hkr_core::verify::{self, Options, Status, Suite, VerificationReport};
use hkr_core::{HHClass, Matrix, Pairing, SpaceModel};

#[derive(Debug, Parser)]
#[command(name = "hkr", version, about = "Exact Hochschild homology of small smooth projective varieties")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairingArg {
    Mukai,
    Shk,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the basis, bidegrees, HH degrees and characteristic classes of a space.
    Spaces {
        /// Space record, e.g. `P2`, `E`, `P1xE` or `{"kind":"curve","genus":2}`.
        #[arg(long)]
        space: String,
        /// Optional bundle record, e.g. `O(2)`, `T` or `{"kind":"sum","parts":[...]}`.
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Print the Gram matrix of a pairing on the monomial basis.
    Pairing {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum)]
        pairing: PairingArg,
    },
    /// Apply the transform of a kernel on `space × target`.
    Transform {
        /// Source space record.
        #[arg(long)]
        space: String,
        /// Target space record; defaults to the source.
        #[arg(long)]
        target: Option<String>,
        /// Kernel record: `identity`, `{"kind":"line_bundle","a":1,"b":0}`, ...
        #[arg(long)]
        kernel: String,
        /// Input class as a JSON object `{"basis name": "p/q"}`; without it the
        /// full transform matrix is printed.
        #[arg(long)]
        input: Option<String>,
    },
    /// Run verification suites and optionally write a JSON report.
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(["theorem1", "prop1", "prop2", "prop3", "theorem2", "theorem3", "quiver", "all"]))]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Path of the JSON report.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall-clock time per check (the report is then not byte-stable).
        #[arg(long)]
        timings: bool,
        /// Print only the summary line.
        #[arg(long)]
        quiet: bool,
    },
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Spaces { space, bundle } => {
            let x = space.parse::<SpaceSpec>()?.build()?;
            print_space(&x, bundle.as_deref(), out)?;
            Ok(0)
        }
        Command::Pairing { space, pairing } => {
            let x = space.parse::<SpaceSpec>()?.build()?;
            let p = match pairing {
                PairingArg::Mukai => Pairing::Mukai,
                PairingArg::Shk => Pairing::Shklyarov,
            };
            writeln!(out, "{} pairing on {}", p.name(), x.label())?;
            let names = basis_names(&x);
            write_table(out, &names, &names, &p.gram_matrix(&x))?;
            Ok(0)
        }
        Command::Transform { space, target, kernel, input } => {
            let x = space.parse::<SpaceSpec>()?.build()?;
            let y = match target {
                Some(t) => t.parse::<SpaceSpec>()?.build()?,
                None => x.clone(),
            };
            let k = kernel.parse::<KernelSpec>()?.build(&x, &y)?;
            match input {
                Some(json) => {
                    let record: ClassRecord = serde_json::from_str(&json)?;
                    let class = HHClass::new(&x, class_from_record(x.ring(), &record)?)?;
                    let image = k.convolve(&class)?;
                    writeln!(out, "{}", serde_json::to_string(&class_to_record(image.value()))?)?;
                }
                None => {
                    writeln!(out, "kernel {} on {}", k.label(), k.product().label())?;
                    writeln!(out, "ch = {}", k.ch())?;
                    writeln!(out, "transform matrix (row i is the image of basis element i)")?;
                    write_table(out, &basis_names(&x), &basis_names(&y), &k.transform_matrix())?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite, seed, json, timings, quiet } => {
            let suites = Suite::parse_selection(&suite)?;
            let report = verify::run(&suites, Options { seed, timings });
            finish_verify(&report, json.as_deref(), quiet, out)
        }
    }
}

/// Prints the per-check lines, writes the JSON report and returns the exit
/// code of the run.
pub fn finish_verify(report: &VerificationReport, json: Option<&Path>, quiet: bool, out: &mut dyn Write) -> CliResult<i32> {
    if !quiet {
        for c in &report.checks {
            let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {} ({} instances)", c.name, c.instances)?;
            if let Some(w) = &c.witness {
                writeln!(out, "     input: {}", w.input)?;
                writeln!(out, "     lhs:   {}", w.lhs)?;
                writeln!(out, "     rhs:   {}", w.rhs)?;
            }
        }
    }
    let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
    writeln!(
        out,
        "{} checks, {} failed, seed {}: {}",
        report.checks.len(),
        failed,
        report.seed,
        if report.passed { "all passed" } else { "FAILED" }
    )?;
    if let Some(path) = json {
        std::fs::write(path, report.to_json()).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(report.exit_code())
}

fn basis_names(x: &SpaceModel) -> Vec<String> {
    x.ring().basis().iter().map(|m| m.name.clone()).collect()
}

fn write_table(out: &mut dyn Write, rows: &[String], cols: &[String], m: &Matrix) -> std::io::Result<()> {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|c| c.to_string()).collect()).collect();
    let label_w = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols.len()).map(|j| cells.iter().map(|r| r[j].chars().count()).chain([cols[j].chars().count()]).max().unwrap_or(0)).collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
    write!(out, "{}", pad("", label_w))?;
    for (c, w) in cols.iter().zip(&widths) {
        write!(out, "  {}", pad(c, *w))?;
    }
    writeln!(out)?;
    for (r, row) in rows.iter().zip(&cells) {
        write!(out, "{}", pad(r, label_w))?;
        for (c, w) in row.iter().zip(&widths) {
            write!(out, "  {}", pad(c, *w))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn print_space(x: &SpaceModel, bundle: Option<&str>, out: &mut dyn Write) -> CliResult<()> {
    writeln!(out, "space {} (dimension {}, {} basis elements)", x.label(), x.n(), x.ring().dim())?;
    writeln!(out, "basis  bidegree  hh")?;
    for m in x.ring().basis() {
        writeln!(out, "{:<6} {:<9} {}", m.name, format!("({},{})", m.form, m.coh), m.hh_degree())?;
    }
    writeln!(out, "td(T)  = {}", x.todd())?;
    writeln!(out, "ch(T)  = {}", x.tangent_ch())?;
    writeln!(out, "ch(K)  = {}", x.canonical_ch())?;
    writeln!(out, "ch(S)  = {}", x.serre_ch())?;
    writeln!(out, "chi(O) = {}", x.todd().integrate())?;
    if let Some(spec) = bundle {
        let b = spec.parse::<BundleSpec>()?.build(x)?;
        let ch = chern_character(&b, x.ring())?;
        writeln!(out, "bundle {spec} of rank {}", b.rank())?;
        writeln!(out, "ch(E)  = {ch}")?;
        writeln!(out, "td(E)  = {}", todd_class(&b, x.ring())?)?;
        writeln!(out, "chi(E) = {}", ch.mul(x.todd())?.integrate())?;
    }
    Ok(())
}
