//! Multi-node scenarios, directed connectivity and link asymmetry.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::Position;
use crate::irregularity::{IrregularityPattern, PatternConfig, DEFAULT_MAX_ATTEMPTS};
use crate::propagation::{received_power_dbm, PathLossParams, RadioParams};
use crate::rng::{Purpose, RngStream, StreamId, Weibull};

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: u64,
    pub position: Position,
    pub radio: RadioParams,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub nodes: Vec<Node>,
    pub pathloss: PathLossParams,
    pub doi: f64,
    pub weibull: Weibull,
    pub master_seed: u64,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        if self.nodes.len() < 2 {
            return Err(Error::InvalidScenario(format!(
                "need at least 2 nodes, got {}",
                self.nodes.len()
            )));
        }
        if !(self.doi >= 0.0 && self.doi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "doi",
                value: self.doi,
                reason: "must be non-negative and finite",
            });
        }
        let mut ids = BTreeSet::new();
        for n in &self.nodes {
            if !ids.insert(n.id) {
                return Err(Error::InvalidScenario(format!(
                    "duplicate node id {}",
                    n.id
                )));
            }
        }
        for (i, a) in self.nodes.iter().enumerate() {
            for b in &self.nodes[i + 1..] {
                if a.position == b.position {
                    return Err(Error::InvalidScenario(format!(
                        "nodes {} and {} share position ({}, {})",
                        a.id, b.id, a.position.x, a.position.y
                    )));
                }
            }
        }
        Ok(())
    }

    fn pattern_config(&self) -> PatternConfig {
        PatternConfig {
            doi: self.doi,
            weibull: self.weibull,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }

    /// Generate the pattern of every node, in node order.
    pub fn generate_patterns(&self) -> Result<Vec<IrregularityPattern>> {
        let config = self.pattern_config();
        self.nodes
            .par_iter()
            .map(|n| {
                let mut stream =
                    RngStream::new(self.master_seed, StreamId::derive(n.id, Purpose::Pattern));
                IrregularityPattern::generate(&mut stream, &config).map_err(|e| Error::Node {
                    node_id: n.id,
                    source: Box::new(e),
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub src: u64,
    pub dst: u64,
    pub received_power_dbm: f64,
    pub audible: bool,
}

/// Directed audibility between every ordered pair of distinct nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivityGraph {
    /// Sorted by `(src, dst)`.
    edges: Vec<Edge>,
    patterns: BTreeMap<u64, IrregularityPattern>,
}

impl ConnectivityGraph {
    pub fn build(scenario: &Scenario) -> Result<Self> {
        scenario.validate()?;
        let patterns = scenario.generate_patterns()?;

        let mut order: Vec<usize> = (0..scenario.nodes.len()).collect();
        order.sort_by_key(|&i| scenario.nodes[i].id);
        let pairs: Vec<(usize, usize)> = order
            .iter()
            .flat_map(|&s| order.iter().filter(move |&&d| d != s).map(move |&d| (s, d)))
            .collect();

        let edges = pairs
            .par_iter()
            .map(|&(s, d)| {
                let (tx, rx) = (&scenario.nodes[s], &scenario.nodes[d]);
                let prx = received_power_dbm(
                    tx.position,
                    &patterns[s],
                    &tx.radio,
                    rx.position,
                    &rx.radio,
                    &scenario.pathloss,
                )?;
                Ok(Edge {
                    src: tx.id,
                    dst: rx.id,
                    received_power_dbm: prx,
                    audible: prx >= rx.radio.rx_sensitivity_dbm,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let patterns = scenario.nodes.iter().map(|n| n.id).zip(patterns).collect();
        Ok(ConnectivityGraph { edges, patterns })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, src: u64, dst: u64) -> Option<&Edge> {
        self.edges
            .binary_search_by(|e| (e.src, e.dst).cmp(&(src, dst)))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn patterns(&self) -> &BTreeMap<u64, IrregularityPattern> {
        &self.patterns
    }

    pub fn asymmetry_report(&self) -> AsymmetryReport {
        let mut report = AsymmetryReport::default();
        for e in self.edges.iter().filter(|e| e.src < e.dst) {
            let back = self
                .edge(e.dst, e.src)
                .expect("every ordered pair has an edge");
            report.total_pairs += 1;
            match (e.audible, back.audible) {
                (true, true) => report.symmetric_links += 1,
                (false, false) => report.disconnected_pairs += 1,
                _ => report.asymmetric_links += 1,
            }
        }
        let connected = report.symmetric_links + report.asymmetric_links;
        report.asymmetry_fraction = if connected == 0 {
            0.0
        } else {
            report.asymmetric_links as f64 / connected as f64
        };
        report
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AsymmetryReport {
    pub total_pairs: usize,
    /// Audible in both directions.
    pub symmetric_links: usize,
    /// Audible in exactly one direction.
    pub asymmetric_links: usize,
    pub disconnected_pairs: usize,
    /// `asymmetric / (symmetric + asymmetric)`, or 0 with no connected pairs.
    pub asymmetry_fraction: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub doi: f64,
    pub mean_asymmetry: f64,
    /// Sample standard deviation over replications; 0 for one replication.
    pub std: f64,
    pub replications: u32,
}

impl SweepRow {
    pub fn standard_error(&self) -> f64 {
        self.std / f64::from(self.replications).sqrt()
    }
}

/// Mean link asymmetry for each DOI value over independently seeded
/// replications. Replication `r` uses master seed `base.master_seed + r`;
/// node placement and radios are held fixed.
pub fn doi_sweep(base: &Scenario, doi_values: &[f64], replications: u32) -> Result<Vec<SweepRow>> {
    if doi_values.is_empty() {
        return Err(Error::InvalidScenario("doi list is empty".into()));
    }
    if replications == 0 {
        return Err(Error::InvalidParameter {
            name: "replications",
            value: 0.0,
            reason: "must be at least 1",
        });
    }
    base.validate()?;

    doi_values
        .iter()
        .map(|&doi| {
            let fractions = (0..replications)
                .into_par_iter()
                .map(|r| {
                    let scenario = Scenario {
                        doi,
                        master_seed: base.master_seed.wrapping_add(u64::from(r)),
                        ..base.clone()
                    };
                    ConnectivityGraph::build(&scenario)
                        .map(|g| g.asymmetry_report().asymmetry_fraction)
                        .map_err(|e| Error::Sweep {
                            doi,
                            replication: r,
                            source: Box::new(e),
                        })
                })
                .collect::<Result<Vec<f64>>>()?;
            let n = fractions.len() as f64;
            let mean = fractions.iter().sum::<f64>() / n;
            let std = if fractions.len() > 1 {
                (fractions.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
            } else {
                0.0
            };
            Ok(SweepRow {
                doi,
                mean_asymmetry: mean,
                std,
                replications,
            })
        })
        .collect()
}
