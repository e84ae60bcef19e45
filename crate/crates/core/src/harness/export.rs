//! Plot-ready CSV traces and JSON summaries.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::engine::RunRecord;
use crate::error::{Error, Result};
use crate::problem::Problem;

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Config(format!("csv: {other:?}")),
    }
}

/// `iter,best,worst`, one row per completed iteration, reported convention.
pub fn write_convergence_csv<W: Write>(record: &RunRecord, problem: &dyn Problem, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["iter", "best", "worst"]).map_err(csv_error)?;
    for (i, (b, wst)) in record.best_per_iter.iter().zip(&record.worst_per_iter).enumerate() {
        w.write_record(&[
            (i + 1).to_string(),
            problem.report(*b).to_string(),
            problem.report(*wst).to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// `step,x1..xn,f` for the traced agent (recorded after rotation and after
/// excursion).
pub fn write_trajectory_csv<W: Write>(record: &RunRecord, problem: &dyn Problem, out: W) -> Result<()> {
    let n = problem.space().dim();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["step".to_string()];
    header.extend((1..=n).map(|i| format!("x{i}")));
    header.push("f".into());
    w.write_record(&header).map_err(csv_error)?;
    for (step, p) in record.trajectory.iter().enumerate() {
        let mut row = vec![(step + 1).to_string()];
        row.extend(p.x.iter().map(f64::to_string));
        row.push(problem.report(p.value).to_string());
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Write `convergence.csv` and `trajectory.csv` for one run into `dir`.
pub fn write_traces(record: &RunRecord, problem: &dyn Problem, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    write_convergence_csv(record, problem, std::fs::File::create(dir.join("convergence.csv"))?)?;
    write_trajectory_csv(record, problem, std::fs::File::create(dir.join("trajectory.csv"))?)?;
    Ok(())
}
