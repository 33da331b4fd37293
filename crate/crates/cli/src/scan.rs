//! Scan rows: the tabular data behind the scan and plot subcommands.

use rayon::prelude::*;
use serde::Serialize;

use sphere_weyl::decimal::{format_rational, weyl_node_decimal};
use sphere_weyl::exact::{Integer, Rational};
use sphere_weyl::spectrum::{counting_closed_form, distinct_eigenvalue, multiplicity, SphereDim};
use sphere_weyl::weyl::{compare_n_vs_w_next_node, compare_w_vs_n_at_node, crossing_in_interval};
use sphere_weyl::Error;

/// One row per eigenvalue index: exact integers and signs, plus correctly
/// rounded decimals for the Weyl value and the crossing midpoint.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub k: u64,
    pub v_k: String,
    pub mult: String,
    #[serde(rename = "N")]
    pub count: String,
    pub w: String,
    pub sign_node: i8,
    pub sign_next: i8,
    pub crossing_mid: Option<String>,
}

/// Header pinned by the CSV schema.
pub const CSV_HEADER: &str = "n,k,v_k,mult,N,w,sign_node,sign_next,crossing_mid";

fn build_row(dim: SphereDim, k: u64, tol: &Rational, digits: u32) -> Result<ScanRow, Error> {
    let crossing_mid = crossing_in_interval(dim, k, tol)?.map(|record| {
        let mid = (&record.enclosure_lo + &record.enclosure_hi)
            / Rational::from_integer(Integer::from(2));
        format_rational(&mid, digits)
    });
    Ok(ScanRow {
        n: dim.get(),
        k,
        v_k: distinct_eigenvalue(dim, k).to_string(),
        mult: multiplicity(dim, k).to_string(),
        count: counting_closed_form(dim, k).to_string(),
        w: weyl_node_decimal(dim, k, digits),
        sign_node: compare_w_vs_n_at_node(dim, k).as_i8(),
        sign_next: compare_n_vs_w_next_node(dim, k).as_i8(),
        crossing_mid,
    })
}

/// Builds all rows for `k = 0..=k_max`.  Rows are independent, so the work
/// is split across the current rayon pool; ordering and values do not
/// depend on the thread count.
pub fn scan_rows(
    dim: SphereDim,
    k_max: u64,
    tol: &Rational,
    digits: u32,
) -> Result<Vec<ScanRow>, Error> {
    (0..=k_max)
        .into_par_iter()
        .map(|k| build_row(dim, k, tol, digits))
        .collect()
}

pub fn rows_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 48 + CSV_HEADER.len() + 1);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.k,
            r.v_k,
            r.mult,
            r.count,
            r.w,
            r.sign_node,
            r.sign_next,
            r.crossing_mid.as_deref().unwrap_or("")
        ));
    }
    out
}

pub fn rows_to_json(rows: &[ScanRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}
