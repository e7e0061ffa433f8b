//! Plot-data emission: split a sweep CSV into per-curve two-column files and
//! write a gnuplot script referencing them. No rendering happens here.

use std::path::{Path, PathBuf};

use crate::{Error, Result};

/// Write `<stem>.<column>.dat` files (rate, value) for every non-empty CSV
/// column plus `<stem>.gp`, a log-log gnuplot script. Returns the paths
/// written. Columns that are entirely empty are skipped and noted in the
/// script's comments. Byte-identical output for identical input.
pub fn emit_plot_data(csv: &str, stem: &Path) -> Result<Vec<PathBuf>> {
    let mut lines = csv.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Config("empty CSV".into()))?;
    let columns: Vec<&str> = header.split(',').collect();
    if columns.first() != Some(&"r") {
        return Err(Error::Config(format!(
            "malformed CSV: first column must be r, got \"{}\"",
            columns.first().unwrap_or(&"")
        )));
    }
    let mut rows: Vec<Vec<&str>> = Vec::new();
    for (i, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != columns.len() {
            return Err(Error::Config(format!(
                "malformed CSV: row {} has {} cells, header has {}",
                i + 2,
                cells.len(),
                columns.len()
            )));
        }
        rows.push(cells);
    }

    let stem_name = stem
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sweep".into());
    let mut written = Vec::new();
    let mut curves: Vec<(String, PathBuf)> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();

    for (ci, &col) in columns.iter().enumerate().skip(1) {
        // plot value curves; standard errors and counts are metadata
        let base = col.split(':').next().unwrap_or(col);
        if !matches!(base, "exact" | "asymptotic" | "mc_mean" | "rel_err_asym") {
            continue;
        }
        let mut body = String::new();
        let mut any = false;
        for cells in &rows {
            if cells[ci].is_empty() {
                continue;
            }
            any = true;
            body.push_str(cells[0]);
            body.push(' ');
            body.push_str(cells[ci]);
            body.push('\n');
        }
        if !any {
            skipped.push(col.to_string());
            continue;
        }
        let safe = col.replace([':', '/'], "_");
        let path = stem.with_extension(format!("{safe}.dat"));
        std::fs::write(&path, body)?;
        curves.push((col.to_string(), path.clone()));
        written.push(path);
    }

    let mut script = String::new();
    script.push_str("# plot script for ");
    script.push_str(&stem_name);
    script.push_str("\n# mean cover time vs resetting rate, log-log axes\n");
    for s in &skipped {
        script.push_str(&format!("# column \"{s}\" was empty (refused) and is omitted\n"));
    }
    script.push_str("set logscale xy\nset xlabel \"resetting rate r\"\nset ylabel \"mean cover time\"\nset key left top\n");
    let mct_curves: Vec<&(String, PathBuf)> = curves
        .iter()
        .filter(|(name, _)| !name.starts_with("rel_err"))
        .collect();
    if !mct_curves.is_empty() {
        script.push_str("plot ");
        let parts: Vec<String> = mct_curves
            .iter()
            .map(|(name, path)| {
                format!(
                    "\"{}\" using 1:2 with linespoints title \"{}\"",
                    path.file_name().unwrap().to_string_lossy(),
                    name
                )
            })
            .collect();
        script.push_str(&parts.join(", \\\n     "));
        script.push('\n');
    }
    let rel_curves: Vec<&(String, PathBuf)> = curves
        .iter()
        .filter(|(name, _)| name.starts_with("rel_err"))
        .collect();
    if !rel_curves.is_empty() {
        script.push_str("\n# relative error of the frequent-resetting asymptote\n");
        script.push_str("# pause -1\nset ylabel \"relative error\"\nplot ");
        let parts: Vec<String> = rel_curves
            .iter()
            .map(|(name, path)| {
                format!(
                    "\"{}\" using 1:2 with linespoints title \"{}\"",
                    path.file_name().unwrap().to_string_lossy(),
                    name
                )
            })
            .collect();
        script.push_str(&parts.join(", \\\n     "));
        script.push('\n');
    }
    let script_path = stem.with_extension("gp");
    std::fs::write(&script_path, script)?;
    written.push(script_path);
    Ok(written)
}
