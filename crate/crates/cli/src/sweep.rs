//! Tabulation of cyclotomic spectral data over a conductor range.

use std::io::Write;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;
use specdist::numtheory::factorize;
use specdist::spectral::sd_cyclotomic;

use crate::range::ConductorRange;
use crate::CliError;

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "phi",
    "rad",
    "sd",
    "sd_rad",
    "lambda_min",
    "lambda_max",
    "abs_disc",
    "hp_bound",
    "yg_bound",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: u64,
    pub phi_n: u64,
    pub rad_n: u64,
    pub sd: f64,
    pub sd_of_rad: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub abs_disc: BigUint,
    pub hong_pan_bound: f64,
    pub yu_gu_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Twelve significant digits in scientific notation.
pub fn render_float(x: f64) -> String {
    format!("{x:.11e}")
}

pub fn compute_row(n: u64) -> Result<SweepRow, CliError> {
    let fac = factorize(n)?;
    let rad = fac.radical();
    let report = sd_cyclotomic(n)?;
    let sd_of_rad = if rad == n {
        report.sd
    } else {
        sd_cyclotomic(rad)?.sd
    };
    Ok(SweepRow {
        n,
        phi_n: fac.phi(),
        rad_n: rad,
        sd: report.sd,
        sd_of_rad,
        lambda_min: report.eigenvalues.min(),
        lambda_max: report.eigenvalues.max(),
        abs_disc: report.abs_disc.unwrap_or_default(),
        hong_pan_bound: report.hong_pan_bound,
        yu_gu_bound: report.yu_gu_bound,
    })
}

/// One row per conductor, ordered by `n` whatever the worker count.
pub fn sweep(range: ConductorRange, jobs: usize) -> Result<Vec<SweepRow>, CliError> {
    if range.is_empty() {
        return Ok(Vec::new());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let conductors: Vec<u64> = range.iter().collect();
    pool.install(|| conductors.par_iter().map(|&n| compute_row(n)).collect())
}

impl SweepRow {
    fn fields(&self) -> [String; 10] {
        [
            self.n.to_string(),
            self.phi_n.to_string(),
            self.rad_n.to_string(),
            render_float(self.sd),
            render_float(self.sd_of_rad),
            render_float(self.lambda_min),
            render_float(self.lambda_max),
            self.abs_disc.to_string(),
            render_float(self.hong_pan_bound),
            render_float(self.yu_gu_bound),
        ]
    }
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.fields())?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    phi_n: u64,
    rad_n: u64,
    sd: Box<RawValue>,
    sd_of_rad: Box<RawValue>,
    lambda_min: Box<RawValue>,
    lambda_max: Box<RawValue>,
    abs_disc: Box<RawValue>,
    hong_pan_bound: Box<RawValue>,
    yu_gu_bound: Box<RawValue>,
}

fn raw(s: String) -> Result<Box<RawValue>, CliError> {
    Ok(RawValue::from_string(s)?)
}

pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> Result<(), CliError> {
    let json_rows = rows
        .iter()
        .map(|r| {
            Ok(JsonRow {
                n: r.n,
                phi_n: r.phi_n,
                rad_n: r.rad_n,
                sd: raw(render_float(r.sd))?,
                sd_of_rad: raw(render_float(r.sd_of_rad))?,
                lambda_min: raw(render_float(r.lambda_min))?,
                lambda_max: raw(render_float(r.lambda_max))?,
                abs_disc: raw(r.abs_disc.to_string())?,
                hong_pan_bound: raw(render_float(r.hong_pan_bound))?,
                yu_gu_bound: raw(render_float(r.yu_gu_bound))?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    serde_json::to_writer_pretty(&mut out, &json_rows)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn write_rows<W: Write>(rows: &[SweepRow], format: Format, out: W) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(rows, out),
        Format::Json => write_json(rows, out),
    }
}
