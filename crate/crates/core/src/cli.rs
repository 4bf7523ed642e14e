//! Command-line front end. Kept in the library so it can be driven in-process.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::counting::{census_a, census_d, sporadic_checks, CensusReport};
use crate::partitions::Partition;
use crate::selftest;
use crate::spin::{enumerate_xn, spin_springer, SpinError, SpinPartition, SpinRecord};
use crate::springer::{
    parse_character, springer_map, to_symbol, CaseFamily, GroupCase, Mapping, SpringerError,
    SpringerTable,
};
use crate::symbols::{DefectSet, Family};
use crate::unipotent::MarkedPartition;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when an input is well formed but outside the image.
pub const EXIT_LOGICAL: i32 = 1;
/// Exit status for unparsable or invalid input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "springer",
    about = "Generalized Springer correspondence, combinatorially"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    A,
    D,
    Sporadic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Symbols of a given rank
    #[command(subcommand)]
    Symbols(SymbolsCmd),
    /// Unipotent classes of outer components in characteristic 2
    #[command(subcommand)]
    Springer(SpringerCmd),
    /// The Spin_n correspondence on X_n
    #[command(subcommand)]
    Spin(SpinCmd),
    /// Class counts in outer components
    Count {
        #[arg(long, value_enum)]
        family: CountFamily,
        /// Size parameter; ignored for `sporadic`
        #[arg(long, default_value_t = 0)]
        m: u64,
    },
    /// Run the internal invariant suites
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
}

#[derive(Debug, Subcommand)]
enum SymbolsCmd {
    Enumerate {
        #[arg(long)]
        rho: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_defects)]
        defects: DefectSet,
        /// Group the symbols into similarity classes
        #[arg(long)]
        classes: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
enum SpringerCmd {
    /// Image of one pair (class, character)
    Map {
        #[arg(long = "case", value_parser = parse_case)]
        family: CaseFamily,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        class: String,
        #[arg(long = "char", default_value = "")]
        chi: String,
    },
    /// Every pair of one case
    Table {
        #[arg(long = "case", value_parser = parse_case)]
        family: CaseFamily,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
enum SpinCmd {
    Map {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn parse_defects(s: &str) -> Result<DefectSet, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_case(s: &str) -> Result<CaseFamily, String> {
    s.parse().map_err(|e: SpringerError| e.to_string())
}

/// Failure of one command, carrying its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<SpringerError> for Failure {
    fn from(e: SpringerError) -> Self {
        let code = match e {
            SpringerError::NotInImage(_)
            | SpringerError::NotInjective(_)
            | SpringerError::BasisCountMismatch { .. }
            | SpringerError::RankMismatch { .. } => EXIT_LOGICAL,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SpinError> for Failure {
    fn from(e: SpinError) -> Self {
        let code = match e {
            SpinError::NotInXn { .. } => EXIT_USAGE,
            SpinError::NotInImage { .. } => EXIT_LOGICAL,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: EXIT_LOGICAL,
            message: e.to_string(),
        }
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure {
        code: EXIT_LOGICAL,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Symbols(SymbolsCmd::Enumerate {
            rho,
            s,
            n,
            defects,
            classes,
            format,
        }) => symbols_enumerate(rho, s, n, defects, classes, format, out),
        Command::Springer(SpringerCmd::Map {
            family,
            n,
            class,
            chi,
        }) => {
            let case = GroupCase::new(family, n);
            let mp: MarkedPartition = class
                .parse()
                .map_err(|e| Failure::usage(format!("class {class:?}: {e}")))?;
            let chi = parse_character(case, &mp, &chi)?;
            let symbol = to_symbol(case, &mp, &chi)?;
            let label = springer_map(case, &mp, &chi)?;
            let mapping = Mapping {
                class: mp,
                chi,
                symbol,
                label,
            };
            json_line(out, &mapping.to_record(case))
        }
        Command::Springer(SpringerCmd::Table { family, n, format }) => {
            let case = GroupCase::new(family, n);
            let table = SpringerTable::build(case)?;
            for row in table.rows() {
                match format {
                    Format::Json => json_line(out, &row.to_record(case))?,
                    Format::Text => writeln!(
                        out,
                        "{} {} -> {} d={} {}",
                        row.class,
                        if row.chi.is_empty() {
                            "ε".to_string()
                        } else {
                            row.chi.to_string()
                        },
                        row.symbol,
                        row.label.defect,
                        row.label.bipartition
                    )?,
                }
            }
            Ok(())
        }
        Command::Spin(SpinCmd::Map { n, partition }) => {
            let p: Partition = partition
                .parse()
                .map_err(|e| Failure::usage(format!("partition {partition:?}: {e}")))?;
            if p.size() != n {
                return Err(Failure::usage(format!(
                    "partition {p} has size {}, expected {n}",
                    p.size()
                )));
            }
            let lambda = SpinPartition::new(p)?;
            json_line(out, &SpinRecord::new(&lambda, &spin_springer(&lambda)))
        }
        Command::Spin(SpinCmd::Table { n, format }) => {
            for lambda in enumerate_xn(n as i64) {
                let label = spin_springer(&lambda);
                match format {
                    Format::Json => json_line(out, &SpinRecord::new(&lambda, &label))?,
                    Format::Text => writeln!(
                        out,
                        "{} -> t={} {}",
                        lambda.partition(),
                        label.t,
                        label.bipartition
                    )?,
                }
            }
            Ok(())
        }
        Command::Count { family, m } => {
            let rows: Vec<CensusReport> = match family {
                CountFamily::A => vec![census_a(m)],
                CountFamily::D => vec![census_d(m)],
                CountFamily::Sporadic => sporadic_checks(),
            };
            for r in &rows {
                json_line(out, r)?;
            }
            Ok(())
        }
        Command::Selftest { max_n } => {
            let results = selftest::run_all(max_n);
            for r in &results {
                writeln!(out, "{r}")?;
            }
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure {
                    code: EXIT_LOGICAL,
                    message: "selftest failed".to_string(),
                })
            }
        }
    }
}

#[derive(Serialize)]
struct SymbolRecord {
    symbol: String,
    n: i64,
    defect: i64,
    bipartition: String,
}

fn symbols_enumerate(
    rho: u32,
    s: u32,
    n: i64,
    defects: DefectSet,
    classes: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let family = Family::new(rho, s, defects).map_err(Failure::usage)?;
    if classes {
        let classes = family.similarity_classes(n).map_err(Failure::usage)?;
        for class in &classes {
            match format {
                Format::Json => json_line(out, &class.to_record())?,
                Format::Text => {
                    let members: Vec<String> =
                        class.members().iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", members.join(","))?;
                }
            }
        }
        return Ok(());
    }
    for sym in family.enumerate(n) {
        match format {
            Format::Text => writeln!(out, "{sym}")?,
            Format::Json => {
                let (defect, bp) = family
                    .params
                    .staircase_from_symbol(&sym)
                    .map_err(Failure::usage)?;
                json_line(
                    out,
                    &SymbolRecord {
                        symbol: sym.to_string(),
                        n,
                        defect,
                        bipartition: bp.to_string(),
                    },
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["springer"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn symbol_classes_text() {
        let (code, out, _) = call(&[
            "symbols",
            "enumerate",
            "--rho",
            "4",
            "--s",
            "1",
            "--n",
            "1",
            "--defects",
            "odd",
            "--classes",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "(1;),(;1)\n(0,4;2)\n");
    }

    #[test]
    fn map_and_errors() {
        let (code, out, _) = call(&[
            "springer", "map", "--case", "sp", "--n", "2", "--class", "(4)", "--char", "1",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("\"case\":\"sp\"") && out.contains("\"defect\":-1"));
        let (code, out, _) = call(&[
            "springer", "map", "--case", "o-outer", "--n", "3", "--class", "(11)(4)", "--char", "1",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("\"char\":\"01\""));
        let (code, _, _) = call(&[
            "springer", "map", "--case", "sp", "--n", "2", "--class", "(4)", "--char", "11",
        ]);
        assert_eq!(code, 2);
        let (code, _, err) = call(&[
            "springer", "map", "--case", "sp", "--n", "2", "--class", "(12)", "--char", "",
        ]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
        let (code, _, _) = call(&[
            "springer", "map", "--case", "bogus", "--n", "2", "--class", "(1)",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn spin_and_count() {
        let (code, out, _) = call(&["spin", "map", "--n", "4", "--partition", "1,3"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"t\":0") && out.contains("\"bipartition\":\"1|\""));
        let (code, _, _) = call(&["spin", "map", "--n", "2", "--partition", "1,1"]);
        assert_eq!(code, 2);
        let (code, out, _) = call(&["count", "--family", "sporadic"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
    }
}
