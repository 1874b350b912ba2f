//! Library side of the `jtqes` executable: argument handling, sweeps and
//! result records.

pub mod args;
pub mod commands;
pub mod error;
pub mod sweep;

use args::{Cli, Command, CommonArgs, Format};
use clap::Parser;
use commands::CellOutput;
use error::CliError;
use numeric_core::rational::{rational_string, to_f64};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::time::Instant;
use sweep::Field;

pub const SCHEMA_VERSION: &str = "1.0";

fn run_cell(cmd: &Command, a: &CommonArgs) -> Result<CellOutput, CliError> {
    match cmd {
        Command::Juddian(_) => commands::juddian(a),
        Command::Spectrum(_) => commands::spectrum(a),
        Command::AlgebraCheck(_) => commands::algebra_check(a),
        Command::ComparePrinted(_) => commands::compare_printed(a),
        Command::Presets(_) => Ok(commands::presets()),
    }
}

fn opt_rat(r: &Option<numeric_core::Rational>) -> Value {
    r.as_ref().map_or(Value::Null, |r| Value::String(rational_string(r)))
}

fn echo_inputs(a: &CommonArgs) -> Value {
    json!({
        "k": opt_rat(&a.k),
        "j": opt_rat(&a.j),
        "mu": opt_rat(&a.mu),
        "kappa": a.kappa.as_ref().map(|k| match numeric_core::parse_rational(k) {
            Ok(r) => rational_string(&r),
            Err(_) => k.clone(),
        }),
        "kappa_max": opt_rat(&a.kappa_max),
        "eta": opt_rat(&a.eta),
        "rho": opt_rat(&a.rho),
        "G": opt_rat(&a.g),
        "case": a.case,
        "label": a.label,
        "ordering": a.ordering.map(|o| format!("{o:?}")),
        "window": a.window,
        "tol": opt_rat(&a.tol),
        "draws": a.draws,
        "seed": a.seed,
        "oracle": !a.no_oracle,
        "sweep": a.sweep,
    })
}

fn error_json(e: &CliError) -> Value {
    json!({ "code": e.code, "message": e.message })
}

/// The finished record, its CSV rendering and the exit code.
pub struct Outcome {
    pub record: Value,
    pub csv: String,
    pub code: i32,
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if !header.is_empty() {
        w.write_record(header).expect("in-memory write");
    }
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let a = cmd.args();
    let axes = sweep::grid(a)?;
    let mut record = Map::new();
    record.insert("schema_version".into(), json!(SCHEMA_VERSION));
    record.insert("command".into(), json!(cmd.name()));
    record.insert("inputs".into(), echo_inputs(a));
    let (code, csv) = if axes.is_empty() || matches!(cmd, Command::Presets(_)) {
        let out = run_cell(cmd, a)?;
        record.insert("output".into(), out.json);
        record.insert("notes".into(), json!(out.notes));
        let header: Vec<String> = out.csv_header.iter().map(|s| s.to_string()).collect();
        (out.status, csv_text(&header, &out.csv_rows))
    } else {
        let cells = sweep::cells(&axes);
        let results: Vec<(Vec<(Field, numeric_core::Rational)>, Result<CellOutput, CliError>)> = cells
            .into_par_iter()
            .map(|cell| {
                let mut args = a.clone();
                args.kappa = a.kappa.clone().filter(|k| !k.contains(':'));
                for (f, v) in &cell {
                    f.apply(&mut args, v);
                }
                let r = run_cell(cmd, &args);
                (cell, r)
            })
            .collect();
        let mut code = 0;
        let mut header: Vec<String> = axes.iter().map(|(f, _)| format!("sweep_{}", f.name())).collect();
        let mut have_header = false;
        let mut rows = Vec::new();
        let mut out_cells = Vec::new();
        for (cell, r) in results {
            let at: Map<String, Value> =
                cell.iter().map(|(f, v)| (f.name().to_string(), json!(rational_string(v)))).collect();
            let prefix: Vec<String> = cell.iter().map(|(_, v)| format!("{}", to_f64(v))).collect();
            match r {
                Ok(out) => {
                    if code == 0 {
                        code = out.status;
                    }
                    if !have_header {
                        header.extend(out.csv_header.iter().map(|s| s.to_string()));
                        have_header = true;
                    }
                    for row in &out.csv_rows {
                        rows.push(prefix.iter().cloned().chain(row.iter().cloned()).collect());
                    }
                    out_cells.push(json!({ "at": at, "output": out.json, "notes": out.notes }));
                }
                Err(e) => {
                    if code == 0 {
                        code = e.code;
                    }
                    out_cells.push(json!({ "at": at, "error": error_json(&e) }));
                }
            }
        }
        record.insert("cells".into(), Value::Array(out_cells));
        (code, csv_text(&header, &rows))
    };
    record.insert("timing".into(), json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 }));
    Ok(Outcome { record: Value::Object(record), csv, code })
}

fn emit(text: &str, a: &CommonArgs) -> Result<(), CliError> {
    match &a.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parse, run, write; returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let a = cli.command.args().clone();
    let result = execute(&cli.command);
    let (text, code) = match result {
        Ok(o) => {
            let text = match a.format {
                Format::Json => serde_json::to_string_pretty(&o.record).expect("serializable") + "\n",
                Format::Csv => o.csv,
            };
            (text, o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let rec = json!({
                "schema_version": SCHEMA_VERSION,
                "command": cli.command.name(),
                "inputs": echo_inputs(&a),
                "error": error_json(&e),
            });
            let text = match a.format {
                Format::Json => serde_json::to_string_pretty(&rec).expect("serializable") + "\n",
                Format::Csv => String::new(),
            };
            (text, e.code)
        }
    };
    if let Err(e) = emit(&text, &a) {
        eprintln!("error: {e}");
        return e.code;
    }
    code
}
