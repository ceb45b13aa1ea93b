//! Command bodies. Each returns the exact bytes of its output files so the
//! caller can write them atomically.

use std::fmt::Write;

use anyhow::{bail, Result};

use rim_core::irregularity::DEGREES;
use rim_core::{
    doi_sweep, range_at_bearing, AsymmetryReport, ConnectivityGraph, IrregularityPattern,
    PathLossParams, PatternConfig, Purpose, RadioParams, RngStream, Scenario, StreamId, SweepRow,
    Weibull,
};

use crate::format::num;
use crate::svg;

/// Node id whose pattern stream the standalone `pattern` and `contour`
/// commands use; `rim pattern --seed S` prints the pattern node 0 would get
/// in a scenario seeded with `S`.
pub const STANDALONE_NODE: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternArgs {
    pub seed: u64,
    pub doi: f64,
    pub a: f64,
    pub b: f64,
}

impl PatternArgs {
    pub fn generate(&self) -> Result<IrregularityPattern> {
        let config = PatternConfig {
            doi: self.doi,
            weibull: Weibull::new(self.a, self.b)?,
            ..Default::default()
        };
        let mut stream = RngStream::new(
            self.seed,
            StreamId::derive(STANDALONE_NODE, Purpose::Pattern),
        );
        Ok(IrregularityPattern::generate(&mut stream, &config)?)
    }
}

pub fn pattern_csv(pattern: &IrregularityPattern) -> String {
    let mut out = String::from("degree,k\n");
    for (deg, k) in pattern.coefficients().iter().enumerate() {
        let _ = writeln!(out, "{deg},{}", num(*k));
    }
    out
}

pub struct Contour {
    pub csv: String,
    pub svg: String,
}

pub fn contour(
    pattern: &IrregularityPattern,
    radio: &RadioParams,
    params: &PathLossParams,
) -> Result<Contour> {
    let sensitivity = radio.rx_sensitivity_dbm;
    let reference = range_at_bearing(
        &IrregularityPattern::isotropic(),
        radio,
        sensitivity,
        params,
        0.0,
    )?;
    let mut csv = String::from("degree,k,range_m\n");
    let mut ranges = Vec::with_capacity(DEGREES);
    for deg in 0..DEGREES {
        let theta = deg as f64;
        let range = range_at_bearing(pattern, radio, sensitivity, params, theta)?;
        let _ = writeln!(csv, "{deg},{},{}", num(pattern.k_at(theta)?), num(range));
        ranges.push(range);
    }
    Ok(Contour {
        csv,
        svg: svg::polar_contour(&ranges, reference),
    })
}

pub fn edges_csv(graph: &ConnectivityGraph) -> String {
    let mut out = String::from("src,dst,prx_dbm,audible\n");
    for e in graph.edges() {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            e.src,
            e.dst,
            num(e.received_power_dbm),
            u8::from(e.audible)
        );
    }
    out
}

pub fn summary_line(r: &AsymmetryReport) -> String {
    format!(
        "pairs={} symmetric={} asymmetric={} disconnected={} asym_fraction={:.6}",
        r.total_pairs,
        r.symmetric_links,
        r.asymmetric_links,
        r.disconnected_pairs,
        r.asymmetry_fraction
    )
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("doi,mean_asym,std,reps\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            num(r.doi),
            num(r.mean_asymmetry),
            num(r.std),
            r.replications
        );
    }
    out
}

pub fn sweep(scenario: &Scenario, doi_list: &[f64], reps: u32) -> Result<Vec<SweepRow>> {
    if doi_list.is_empty() {
        bail!("--doi-list must name at least one value");
    }
    if let Some(bad) = doi_list.iter().find(|d| !(**d >= 0.0 && d.is_finite())) {
        bail!("doi values must be non-negative, got {bad}");
    }
    Ok(doi_sweep(scenario, doi_list, reps)?)
}
