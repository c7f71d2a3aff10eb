//! Rendering helpers shared by every subcommand: four-decimal half-up
//! text values, aligned tables, CSV, and versioned JSON.

use std::io::Write;

/// Four decimals with half-up rounding, mirroring the reference tables.
pub fn fmt4(v: f64) -> String {
    if v.is_nan() {
        return "NA".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "Inf" } else { "-Inf" }.to_string();
    }
    let scaled = v * 10_000.0;
    let rounded = if v >= 0.0 {
        (scaled + 0.5).floor()
    } else {
        (scaled - 0.5).ceil()
    };
    format!("{:.4}", rounded / 10_000.0)
}

pub fn fmt4_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), fmt4)
}

/// Full-precision float for machine-readable output; round-trips to the
/// same bits.
pub fn fmt_full(v: f64) -> String {
    if v.is_finite() {
        format!("{v}")
    } else if v.is_nan() {
        "NA".to_string()
    } else if v > 0.0 {
        "Inf".to_string()
    } else {
        "-Inf".to_string()
    }
}

pub fn fmt_full_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), fmt_full)
}

/// Right-align every column to its widest cell, two spaces between
/// columns.
pub fn write_table<W: Write>(
    out: &mut W,
    header: &[&str],
    rows: &[Vec<String>],
) -> std::io::Result<()> {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        debug_assert_eq!(row.len(), cols);
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut line = String::new();
    for (i, (h, w)) in header.iter().zip(&widths).enumerate() {
        if i > 0 {
            line.push_str("  ");
        }
        line.push_str(&format!("{h:>w$}"));
    }
    writeln!(out, "{line}")?;
    for row in rows {
        line.clear();
        for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:>w$}"));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(
    out: &mut W,
    header: &[&str],
    rows: &[Vec<String>],
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(into_io)?;
    for row in rows {
        w.write_record(row).map_err(into_io)?;
    }
    w.flush()
}

fn into_io(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}
