//! Human-readable tables: integers right-aligned, reals with six decimals.

use std::fmt::Write;

use specdist::linalg::{IntSymMatrix, SymMatrix};

pub fn fixed(x: f64) -> String {
    // avoid printing "-0.000000"
    let s = format!("{x:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn table(cells: Vec<Vec<String>>) -> String {
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn int_matrix(m: &IntSymMatrix) -> String {
    table(
        m.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.to_string()).collect())
            .collect(),
    )
}

pub fn real_matrix(m: &SymMatrix) -> String {
    table(
        m.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(fixed).collect())
            .collect(),
    )
}
