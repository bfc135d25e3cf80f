//! Command-line frontend: triangle emission, identity sweeps, generating
//! function expansion, and offline cross-checks against OEIS b-files.
//!
//! Exit codes: 0 = verified/success, 1 = a mathematical mismatch was found,
//! 2 = usage or I/O error. All numeric output is exact (decimal integers or
//! `p/q` fractions); nothing is ever rounded.

mod bfile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use eulerian2::exact::Tables;
use eulerian2::gf;
use eulerian2::identity::{self, IdentityId, IdentityReport, RunAllBounds};
use eulerian2::{Int, Rat};

#[derive(Parser)]
#[command(
    name = "eulerian2",
    version,
    about = "Second-order Eulerian numbers: exact tables, generating function, identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 1..K of the second-order Eulerian triangle
    Table {
        /// Last row to print (rows are 1-based)
        #[arg(long = "max-n", value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: GridFormat,
    },
    /// Run one identity verification sweep, or all of them
    Check {
        /// Identity name (see --list) or "all"
        identity: String,
        /// Override the n-like sweep bound of the selected identity
        #[arg(long = "max-n")]
        max_n: Option<i64>,
        /// Override the m-like sweep bound of the selected identity
        #[arg(long = "max-m")]
        max_m: Option<i64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: ReportFormat,
        /// List the available identity names and exit
        #[arg(long)]
        list: bool,
    },
    /// Expand the generating function and print its EGF coefficient grid
    Gf {
        /// x-degree bound of the truncation box
        #[arg(long = "box-n")]
        box_n: usize,
        /// t-degree bound of the truncation box
        #[arg(long = "box-t")]
        box_t: usize,
        /// Also print the recurrence value and a match column per cell
        #[arg(long)]
        compare: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: GridFormat,
    },
    /// Cross-check computed triangle rows against an OEIS b-file
    Oeis {
        /// Path to the reference b-file (row-major triangle values)
        #[arg(long)]
        file: PathBuf,
        /// Compare at most this many rows
        #[arg(long = "max-rows", value_parser = clap::value_parser!(i64).range(1..))]
        max_rows: Option<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GridFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Plain,
    Json,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table { max_n, format } => cmd_table(max_n, format),
        Command::Check {
            identity,
            max_n,
            max_m,
            format,
            list,
        } => cmd_check(&identity, max_n, max_m, format, list),
        Command::Gf {
            box_n,
            box_t,
            compare,
            format,
        } => cmd_gf(box_n, box_t, compare, format),
        Command::Oeis { file, max_rows } => cmd_oeis(&file, max_rows),
    }
}

/// Exact decimal string for an integer-valued rational, `p/q` otherwise.
fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn print_string_grid(rows: &[Vec<String>], format: GridFormat) {
    match format {
        GridFormat::Plain => {
            let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..columns)
                .map(|j| {
                    rows.iter()
                        .filter_map(|row| row.get(j))
                        .map(String::len)
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in rows {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(j, cell)| format!("{cell:>width$}", width = widths[j]))
                    .collect();
                println!("{}", line.join(" "));
            }
        }
        GridFormat::Csv => {
            for row in rows {
                println!("{}", row.join(","));
            }
        }
        GridFormat::Json => {
            println!("{}", serde_json::Value::from(rows.to_vec()));
        }
    }
}

fn cmd_table(max_n: i64, format: GridFormat) -> ExitCode {
    let mut tables = Tables::new();
    let rows: Vec<Vec<String>> = (1..=max_n)
        .map(|n| {
            tables
                .triangle_row(n)
                .iter()
                .map(Int::to_string)
                .collect()
        })
        .collect();
    print_string_grid(&rows, format);
    ExitCode::SUCCESS
}

fn report_json(report: &IdentityReport) -> serde_json::Value {
    let range: serde_json::Map<String, serde_json::Value> = report
        .range()
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let counterexample = report.counterexample().map(|cx| {
        let params: serde_json::Map<String, serde_json::Value> = cx
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "params": params,
            "lhs": rat_str(&cx.lhs),
            "rhs": rat_str(&cx.rhs),
        })
    });
    json!({
        "identity": report.identity().name(),
        "description": report.identity().description(),
        "range": range,
        "passed": report.passed(),
        "informational": report.identity().is_informational(),
        "counterexample": counterexample,
    })
}

fn print_report(report: &IdentityReport, format: ReportFormat) {
    match format {
        ReportFormat::Json => println!("{}", report_json(report)),
        ReportFormat::Plain => {
            let status = if report.passed() {
                "PASS"
            } else if report.identity().is_informational() {
                "INFO"
            } else {
                "FAIL"
            };
            let range: Vec<String> = report
                .range()
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!(
                "{status} {:<18} [{}] {}",
                report.identity().name(),
                range.join(", "),
                report.identity().description()
            );
            if let Some(cx) = report.counterexample() {
                let params: Vec<String> =
                    cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let note = if report.identity().is_informational() {
                    " (informational)"
                } else {
                    ""
                };
                println!(
                    "     counterexample at {}: lhs = {}, rhs = {}{note}",
                    params.join(", "),
                    rat_str(&cx.lhs),
                    rat_str(&cx.rhs)
                );
            }
        }
    }
}

fn cmd_check(
    identity: &str,
    max_n: Option<i64>,
    max_m: Option<i64>,
    format: ReportFormat,
    list: bool,
) -> ExitCode {
    if list {
        for id in IdentityId::ALL {
            println!("{:<18} {}", id.name(), id.description());
        }
        return ExitCode::SUCCESS;
    }
    let ids: Vec<IdentityId> = if identity == "all" {
        IdentityId::ALL.to_vec()
    } else {
        match IdentityId::from_name(identity) {
            Some(id) => vec![id],
            None => {
                let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.name()).collect();
                eprintln!(
                    "error: unknown identity {identity:?}; expected \"all\" or one of: {}",
                    names.join(", ")
                );
                return ExitCode::from(EXIT_USAGE);
            }
        }
    };
    let mut bounds = RunAllBounds::default();
    for &id in &ids {
        bounds.set_bounds_for(id, max_n, max_m);
    }
    let mut tables = Tables::new();
    let mut mismatch = false;
    for &id in &ids {
        let report = identity::run_check(&mut tables, id, &bounds);
        if !report.passed() && !report.identity().is_informational() {
            mismatch = true;
        }
        print_report(&report, format);
    }
    if mismatch {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_gf(box_n: usize, box_t: usize, compare: bool, format: GridFormat) -> ExitCode {
    let g = gf::gf_rhs(box_n, box_t);
    if !compare {
        let rows: Vec<Vec<String>> = (0..=box_n)
            .map(|n| (0..=box_t).map(|m| rat_str(&g.egf_coeff(n, m))).collect())
            .collect();
        print_string_grid(&rows, format);
        return ExitCode::SUCCESS;
    }
    let mut tables = Tables::new();
    let mut rows: Vec<Vec<String>> = vec![vec![
        "n".into(),
        "m".into(),
        "gf".into(),
        "recurrence".into(),
        "match".into(),
    ]];
    let mut mismatch = false;
    for n in 0..=box_n {
        for m in 0..=box_t {
            let from_gf = g.egf_coeff(n, m);
            let from_rec = Rat::from_integer(tables.eulerian2_rec(n as i64, m as i64));
            let ok = from_gf == from_rec;
            mismatch |= !ok;
            rows.push(vec![
                n.to_string(),
                m.to_string(),
                rat_str(&from_gf),
                rat_str(&from_rec),
                if ok { "yes".into() } else { "no".into() },
            ]);
        }
    }
    print_string_grid(&rows, format);
    if mismatch {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_oeis(file: &std::path::Path, max_rows: Option<i64>) -> ExitCode {
    let data = match bfile::parse_bfile(file) {
        Ok(data) => data,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let label = data.sequence_id.as_deref().unwrap_or("reference");
    if data.values.is_empty() {
        println!("warning: 0 values compared (reference file is empty)");
        return ExitCode::SUCCESS;
    }
    let mut tables = Tables::new();
    let mut position = 0usize;
    let mut row = 1i64;
    'rows: while position < data.values.len() {
        if let Some(limit) = max_rows {
            if row > limit {
                break 'rows;
            }
        }
        for (column, computed) in tables.triangle_row(row).iter().enumerate() {
            if position >= data.values.len() {
                break 'rows;
            }
            let reference = &data.values[position];
            if computed != reference {
                println!(
                    "mismatch at {label} index {} (row {row}, entry {}): computed {computed}, reference {reference}",
                    position + 1,
                    column + 1,
                );
                return ExitCode::from(EXIT_MISMATCH);
            }
            position += 1;
        }
        row += 1;
    }
    println!(
        "{label}: {position} values compared (through row {}): all match",
        row - 1
    );
    ExitCode::SUCCESS
}
