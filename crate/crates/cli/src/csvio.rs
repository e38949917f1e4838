//! Trajectory CSV writing and reading. Floats are printed with 17
//! significant digits, which round-trips f64 exactly.

use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::solver::Slice;

pub const HEADER: &str = "t,x,re_psi0,im_psi0,re_psi1,im_psi1,re_psi2,im_psi2,re_psi3,im_psi3";

fn fmt(v: f64) -> String {
    // 17 significant digits: shortest representation that is always exact
    format!("{v:.16e}")
}

/// One data line in the written format (no trailing newline).
pub fn format_row(t: f64, x: f64, psi: &[Complex64; 4]) -> String {
    let mut row = format!("{},{}", fmt(t), fmt(x));
    for comp in psi {
        row.push(',');
        row.push_str(&fmt(comp.re));
        row.push(',');
        row.push_str(&fmt(comp.im));
    }
    row
}

pub fn write_trajectory(path: &Path, slices: &[Slice], dx: f64) -> std::io::Result<()> {
    let mut w = BufWriter::new(std::fs::File::create(path)?);
    writeln!(w, "{HEADER}")?;
    for slice in slices {
        for (j, psi) in slice.psi.iter().enumerate() {
            let x = j as f64 * dx;
            writeln!(w, "{}", format_row(slice.t, x, psi))?;
        }
    }
    w.flush()
}

/// One parsed trajectory row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub t: f64,
    pub x: f64,
    pub psi: [Complex64; 4],
}

pub fn read_trajectory(path: &Path) -> std::io::Result<Vec<Row>> {
    let r = BufReader::new(std::fs::File::open(path)?);
    let mut rows = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        if lineno == 0 {
            if line != HEADER {
                return Err(std::io::Error::new(
                    std::io::ErrorKind::InvalidData,
                    format!("unexpected CSV header: {line}"),
                ));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<f64> = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| {
                std::io::Error::new(
                    std::io::ErrorKind::InvalidData,
                    format!("line {}: {e}", lineno + 1),
                )
            })?;
        if fields.len() != 10 {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!(
                    "line {}: expected 10 fields, got {}",
                    lineno + 1,
                    fields.len()
                ),
            ));
        }
        rows.push(Row {
            t: fields[0],
            x: fields[1],
            psi: [
                Complex64::new(fields[2], fields[3]),
                Complex64::new(fields[4], fields[5]),
                Complex64::new(fields[6], fields[7]),
                Complex64::new(fields[8], fields[9]),
            ],
        });
    }
    Ok(rows)
}
