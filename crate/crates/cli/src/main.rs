use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use censym::decomposition::MinimaDecomposition;
use censym::oracle::{enumerate_class, ClassSpec, OracleError, OracleLimits, Subclass, ORACLE_ENV};
use censym::series::{build_named_series, build_table, oracle_table, series_table, DescentTable, Family, NamedSeries};
use censym::verify::{run_suite, Suite, VerifyError};
use censym::{phi, phi_inverse, BijectionError, LatticePath, Permutation, SeriesError};

#[derive(Parser)]
#[command(name = "censym", version, about = "Centrosymmetric pattern-avoiding permutations and Dyck prefixes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Descent and minima statistics of a permutation.
    PermStats {
        perm: String,
        #[arg(long, value_enum, default_value_t = StatsFormat::Json)]
        format: StatsFormat,
    },
    /// Image of a member of C_2n(123) as a Dyck prefix.
    Phi { perm: String },
    /// Member of C_2n(123) for a Dyck prefix given as a U/D string.
    PhiInv { path: String },
    /// List the members of a permutation class.
    Enumerate {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        centro: bool,
        /// Pattern to avoid, e.g. 123 or 132.
        #[arg(long)]
        avoid: Option<String>,
        #[arg(long, value_parser = ["k", "ck", "g", "composite"])]
        subclass: Option<String>,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
    },
    /// Descent table of a family.
    Table {
        #[arg(long, value_parser = ["q", "r", "v", "k", "ck", "g", "t"])]
        family: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Source::Recurrence)]
        source: Source,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Coefficients of a closed-form generating function.
    Series {
        #[arg(long, value_parser = ["Q", "R", "E", "V", "K", "CK", "S", "T"])]
        name: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = StatsFormat::Json)]
        format: StatsFormat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = ["perm", "path", "bijection", "series", "all"], default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Recurrence,
    Series,
    Oracle,
}

/// Failure categories, one per exit status.
enum Failure {
    Verification,
    Usage(String),
    Data(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Data(_) => 3,
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<BijectionError> for Failure {
    fn from(e: BijectionError) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Oracle(e) => e.into(),
            SeriesError::UnknownName { .. } => Failure::Usage(e.to_string()),
            other => Failure::Data(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(()) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            print!("{out}");
            match &failure {
                Failure::Usage(m) | Failure::Data(m) => eprintln!("error: {m}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(failure.code())
        }
    }
}

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    text.parse().map_err(|e| Failure::Data(format!("{e}")))
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::PermStats { perm, format: StatsFormat::Json } => {
            let p = parse_perm(&perm)?;
            let tiny = MinimaDecomposition::new(&p).ok().map(|d| d.tiny_minima());
            let stats = json!({
                "n": p.len(),
                "centrosymmetric": p.is_centrosymmetric(),
                "descents": p.descent_set(),
                "des": p.descent_count(),
                "ltr_minima": p.ltr_minima(),
                "tiny_minima": tiny,
                "right_components": p.right_connected_components().len(),
            });
            out.push_str(&format!("{stats}\n"));
        }
        Command::Phi { perm } => {
            let p = parse_perm(&perm)?;
            out.push_str(&format!("{}\n", phi(&p)?));
        }
        Command::PhiInv { path } => {
            let path: LatticePath = path.parse().map_err(|e| Failure::Data(format!("{e}")))?;
            out.push_str(&format!("{}\n", phi_inverse(&path)?));
        }
        Command::Enumerate {
            len,
            centro,
            avoid,
            subclass,
            format,
        } => {
            let mut spec = if centro { ClassSpec::centro(len) } else { ClassSpec::all(len) };
            if let Some(pattern) = avoid {
                let pattern = Permutation::from_digits(&pattern)
                    .or_else(|_| pattern.parse())
                    .map_err(|e| Failure::Usage(format!("--avoid: {e}")))?;
                spec = spec.avoiding(pattern);
            }
            if let Some(name) = subclass {
                let sub: Subclass = name.parse()?;
                spec = spec.with_subclass(sub);
            }
            let members = enumerate_class(&spec, OracleLimits::from_env(OracleLimits::TARGETED))?;
            write_members(out, len, &members, format);
        }
        Command::Table {
            family,
            max_n,
            source,
            format,
        } => {
            let family: Family = family.parse()?;
            let table = match source {
                Source::Recurrence => build_table(family, max_n)?,
                Source::Series => series_table(family, max_n)?,
                Source::Oracle => oracle_table(family, max_n, OracleLimits::from_env(OracleLimits::TARGETED))?,
            };
            match format {
                TableFormat::Csv => out.push_str(&table.to_csv()),
                TableFormat::Json => {
                    let source = match source {
                        Source::Recurrence => "recurrence",
                        Source::Series => "series",
                        Source::Oracle => "oracle",
                    };
                    let value = json!({
                        "family": family.to_string(),
                        "source": source,
                        "max_n": max_n,
                        "rows": rows_json(&table),
                    });
                    out.push_str(&format!("{value}\n"));
                }
            }
        }
        Command::Series {
            name,
            order,
            format: StatsFormat::Json,
        } => {
            let which: NamedSeries = name.parse()?;
            let rows = build_named_series(which, order)?.to_integer_rows()?;
            let coeffs: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let value = json!({ "name": which.to_string(), "order": order, "coeffs": coeffs });
            out.push_str(&format!("{value}\n"));
        }
        Command::Verify { suite, max_n } => {
            let suite: Suite = suite.parse().map_err(|e: VerifyError| Failure::Usage(e.to_string()))?;
            let limits = OracleLimits::from_env(OracleLimits::EXHAUSTIVE);
            if 2 * max_n > limits.max_centro_len {
                return Err(Failure::Usage(format!(
                    "--max-n {max_n} needs length {} but the cap is {} (raise {ORACLE_ENV} to override)",
                    2 * max_n,
                    limits.max_centro_len
                )));
            }
            let report = run_suite(suite, max_n, limits).map_err(|e| match e {
                VerifyError::Oracle(e) => Failure::from(e),
                other => Failure::Data(other.to_string()),
            })?;
            for check in &report.checks {
                match &check.counterexample {
                    None => out.push_str(&format!("ok    [{}] {} ({} cases)\n", check.suite, check.name, check.checked)),
                    Some(c) => out.push_str(&format!(
                        "FAIL  [{}] {} (after {} cases): {c}\n",
                        check.suite, check.name, check.checked
                    )),
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed()).count();
            out.push_str(&format!("{} checks, {failed} failed\n", report.checks.len()));
            if !report.notes.is_empty() {
                out.push_str("\nnotes:\n");
                for note in &report.notes {
                    out.push_str(&format!("  {note}\n"));
                }
            }
            if !report.discrepancies.is_empty() {
                out.push_str("\nknown discrepancies in printed closed forms (not failures):\n");
                for d in &report.discrepancies {
                    out.push_str(&format!("  {d}\n"));
                }
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn rows_json(table: &DescentTable) -> Value {
    table
        .rows()
        .iter()
        .map(|r| r.iter().map(|c| Value::String(c.to_string())).collect::<Vec<_>>())
        .collect()
}

fn write_members(out: &mut String, len: usize, members: &[Permutation], format: ListFormat) {
    match format {
        ListFormat::Lines => {
            for p in members {
                out.push_str(&format!("{p}\n"));
            }
        }
        ListFormat::Csv => {
            for p in members {
                let cells: Vec<String> = p.values().iter().map(ToString::to_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        ListFormat::Json => {
            let value = json!({
                "len": len,
                "count": members.len(),
                "members": members.iter().map(|p| p.values().to_vec()).collect::<Vec<_>>(),
            });
            out.push_str(&format!("{value}\n"));
        }
    }
}
