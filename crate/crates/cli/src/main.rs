//! Command-line interface: export the row-count sequences, print truth
//! tables, reproduce the published summary table, report asymptotics, and
//! run the full cross-validation suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3
//! capacity exceeded.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kleene_tables::asymptotics::{self, Label};
use kleene_tables::logic::{enumerate_trees, Assignment};
use kleene_tables::oracle::CaseLabel;
use kleene_tables::recurrence::{self, SequenceTable};
use kleene_tables::verify::{self, VerifyOptions};
use kleene_tables::Error;

/// Convolution-backed sequences run in quadratic time; exports stop here.
const MAX_CONV_HORIZON: usize = 1_000;
/// Closed-form sequences only need a running product.
const MAX_CLOSED_HORIZON: usize = 50_000;
/// Full truth-table output grows like 12^n; the hard ceiling matches the
/// row-scan oracle cap.
const MAX_TRUTHTABLE_N: usize = 9;

#[derive(Parser)]
#[command(
    name = "kleene-tables",
    version,
    about = "Counts of 3-valued truth table rows over all bracketed implication chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export one sequence for n = 1..=N
    Seq {
        /// Which sequence to export
        name: SeqName,
        /// Largest n to include
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the cross-validation suite and report PASS/FAIL per check
    Verify {
        /// Enumerate all truth tables up to this n
        #[arg(long, default_value_t = 8)]
        exhaustive: usize,
        /// Check identities and series coefficients up to this n
        #[arg(long, default_value_t = 50)]
        identities: usize,
        /// Require exact/estimate ratios within 1% at this n
        #[arg(long, default_value_t = 500)]
        asympt: usize,
    },
    /// Print the t/f/u/g row-count table for n = 1..=N
    Table {
        #[arg(long, default_value_t = 9)]
        n: usize,
    },
    /// Emit every truth table row for n variables: formula, assignment, value
    Truthtable {
        #[arg(long)]
        n: usize,
        /// Soft cap on n; rows grow twelvefold per variable
        #[arg(long, default_value_t = 5)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Growth constants, estimates and exact/estimate ratios
    Asympt {
        /// A sequence label (g, t, f, u, t1..t5, u1..u3) or "compare2v"
        target: String,
        /// Values of n to report, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = [100, 500])]
        n: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeqName {
    Catalan,
    G,
    T,
    F,
    U,
    T1,
    T2,
    T3,
    T4,
    T5,
    U1,
    U2,
    U3,
}

impl SeqName {
    fn case(self) -> Option<CaseLabel> {
        match self {
            SeqName::T1 => Some(CaseLabel::T1),
            SeqName::T2 => Some(CaseLabel::T2),
            SeqName::T3 => Some(CaseLabel::T3),
            SeqName::T4 => Some(CaseLabel::T4),
            SeqName::T5 => Some(CaseLabel::T5),
            SeqName::U1 => Some(CaseLabel::U1),
            SeqName::U2 => Some(CaseLabel::U2),
            SeqName::U3 => Some(CaseLabel::U3),
            _ => None,
        }
    }

    fn source(self) -> &'static str {
        match self {
            SeqName::Catalan | SeqName::G | SeqName::U => "closed-form",
            _ => "recurrence",
        }
    }

    fn cap(self) -> usize {
        match self {
            SeqName::Catalan | SeqName::G | SeqName::U => MAX_CLOSED_HORIZON,
            _ => MAX_CONV_HORIZON,
        }
    }

    fn table(self, horizon: usize) -> Result<SequenceTable, Error> {
        if horizon > self.cap() {
            return Err(Error::Capacity(format!(
                "this sequence exports up to n = {}, got {horizon}",
                self.cap()
            )));
        }
        match self {
            SeqName::Catalan => recurrence::catalan_seq(horizon),
            SeqName::G => recurrence::g_closed_seq(horizon),
            SeqName::U => recurrence::u_closed_seq(horizon),
            SeqName::T => Ok(recurrence::sequences(horizon)?.t),
            SeqName::F => recurrence::f_seq(horizon),
            _ => {
                let label = self.case().expect("remaining names are cases");
                let seqs = recurrence::sequences(horizon)?;
                let (left, right) = label.factors();
                recurrence::convolve(label.name(), seqs.base(left), seqs.base(right))
            }
        }
    }
}

#[derive(Serialize)]
struct ExportRecord {
    sequence: &'static str,
    n: usize,
    value: String,
    source: &'static str,
}

#[derive(Serialize)]
struct TruthTableRow {
    formula: String,
    assignment: String,
    value: u8,
}

enum AppError {
    Core(Error),
    Io(io::Error),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Core(Error::Input(_)) => 2,
            AppError::Core(Error::Capacity(_)) => 3,
            AppError::Core(Error::Domain(_)) => 1,
            AppError::Io(_) => 1,
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> AppError {
        AppError::Core(e)
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> AppError {
        AppError::Io(e)
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Core(e) => e.fmt(f),
            AppError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Seq {
            name,
            n,
            format,
            out,
        } => cmd_seq(name, n, format, out.as_deref()),
        Command::Verify {
            exhaustive,
            identities,
            asympt,
        } => cmd_verify(exhaustive, identities, asympt),
        Command::Table { n } => cmd_table(n),
        Command::Truthtable {
            n,
            limit,
            format,
            out,
        } => cmd_truthtable(n, limit, format, out.as_deref()),
        Command::Asympt { target, n } => cmd_asympt(&target, &n),
    }
}

/// Either stdout or a file; everything is written through one buffered
/// writer so output order is single-sourced.
fn open_sink(out: Option<&std::path::Path>) -> Result<Box<dyn Write>, AppError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn cmd_seq(
    name: SeqName,
    n: usize,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, AppError> {
    let table = name.table(n)?;
    let mut sink = open_sink(out)?;
    match format {
        Format::Csv => {
            writeln!(sink, "n,value")?;
            for (n, value) in table.iter() {
                writeln!(sink, "{n},{value}")?;
            }
        }
        Format::Json => {
            let records: Vec<ExportRecord> = table
                .iter()
                .map(|(n, value)| ExportRecord {
                    sequence: table.name(),
                    n,
                    value: value.to_string(),
                    source: name.source(),
                })
                .collect();
            serde_json::to_writer_pretty(&mut sink, &records).map_err(io::Error::from)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(exhaustive: usize, identities: usize, asympt: usize) -> Result<ExitCode, AppError> {
    let options = VerifyOptions {
        exhaustive_n: exhaustive,
        identity_horizon: identities,
        asymptotics_n: asympt,
    };
    let results = verify::run(&options)?;
    for r in &results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {}", r.name, r.detail);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        println!("all {} checks passed", results.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failed} of {} checks failed", results.len());
        Ok(ExitCode::from(1))
    }
}

fn cmd_table(n: usize) -> Result<ExitCode, AppError> {
    if n > MAX_CONV_HORIZON {
        return Err(Error::Capacity(format!(
            "the table prints up to n = {MAX_CONV_HORIZON}, got {n}"
        ))
        .into());
    }
    let seqs = recurrence::sequences(n)?;
    let rows: [(&str, Vec<String>); 5] = [
        ("n", (1..=n).map(|i| i.to_string()).collect()),
        ("t", seqs.t.values().iter().map(|v| v.to_string()).collect()),
        ("f", seqs.f.values().iter().map(|v| v.to_string()).collect()),
        ("u", seqs.u.values().iter().map(|v| v.to_string()).collect()),
        ("g", seqs.g.values().iter().map(|v| v.to_string()).collect()),
    ];
    let widths: Vec<usize> = (0..n)
        .map(|col| {
            rows.iter()
                .map(|(_, cells)| cells[col].len())
                .max()
                .unwrap()
        })
        .collect();
    let mut sink = BufWriter::new(io::stdout());
    for (label, cells) in &rows {
        write!(sink, "{label}")?;
        for (cell, width) in cells.iter().zip(&widths) {
            write!(sink, "  {cell:>width$}")?;
        }
        writeln!(sink)?;
    }
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_truthtable(
    n: usize,
    limit: usize,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, AppError> {
    if limit > MAX_TRUTHTABLE_N {
        return Err(Error::Capacity(format!(
            "truth table output is capped at n = {MAX_TRUTHTABLE_N}, got --limit {limit}"
        ))
        .into());
    }
    if n > limit {
        return Err(Error::Capacity(format!(
            "truth tables for n = {n} exceed the limit {limit}; raise --limit if you mean it"
        ))
        .into());
    }
    let trees = enumerate_trees(n)?;
    let mut sink = open_sink(out)?;
    let assignments: Vec<Assignment> = Assignment::enumerate(n).collect();
    match format {
        Format::Csv => {
            writeln!(sink, "formula,assignment,value")?;
            for tree in &trees {
                let formula = tree.render();
                for assignment in &assignments {
                    let value = tree.eval(assignment)?;
                    writeln!(sink, "{formula},{},{value}", assignment.digits())?;
                }
            }
        }
        Format::Json => {
            // Streamed by hand so huge tables never sit in memory whole.
            writeln!(sink, "[")?;
            let total = trees.len() * assignments.len();
            let mut written = 0usize;
            for tree in &trees {
                let formula = tree.render();
                for assignment in &assignments {
                    let row = TruthTableRow {
                        formula: formula.clone(),
                        assignment: assignment.digits(),
                        value: tree.eval(assignment)?.digit(),
                    };
                    let line = serde_json::to_string(&row).map_err(io::Error::from)?;
                    written += 1;
                    let comma = if written < total { "," } else { "" };
                    writeln!(sink, "  {line}{comma}")?;
                }
            }
            writeln!(sink, "]")?;
        }
    }
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

/// Scientific notation from a base-10 log, safe far past f64 overflow.
fn sci_from_log10(log10: f64) -> String {
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    // Rounding the mantissa to 6 places can carry it up to exactly 10.
    if format!("{mantissa:.6}").starts_with("10") {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    format!("{mantissa:.6}e{}", exponent as i64)
}

fn cmd_asympt(target: &str, ns: &[usize]) -> Result<ExitCode, AppError> {
    if target == "compare2v" {
        for row in asymptotics::two_valued_comparison() {
            println!(
                "{}: {} -> {} decrease {:.3}% (constants {:.10} -> {:.10})",
                row.label,
                row.two_valued_form,
                asymptotics::constant(row.label).exact_form,
                row.percent_decrease,
                row.two_valued,
                row.three_valued,
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    let label = Label::parse(target).ok_or_else(|| {
        Error::Input(format!(
            "unknown label {target:?}; expected one of g, t, f, u, t1..t5, u1..u3, compare2v"
        ))
    })?;
    let constant = asymptotics::constant(label);
    println!(
        "sequence {}: constant {} ~ {:.12}, estimate c * 3 * 12^(n-1) / sqrt(pi n^3)",
        label, constant.exact_form, constant.value
    );
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    for report in asymptotics::convergence_report(label, &ns)? {
        println!(
            "n = {}: exact = {} estimate = {} ratio = {:.6}",
            report.n,
            report.exact,
            sci_from_log10(report.estimate_log10),
            report.ratio
        );
    }
    Ok(ExitCode::SUCCESS)
}
