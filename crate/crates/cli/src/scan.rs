//! The census scan pipeline: for every input graph, compute `gamma(G)` and
//! `gamma_t(G x K_2)` exactly, classify prism perfection, and aggregate
//! order-independent counters.
//!
//! Per-graph work is embarrassingly parallel; records are collected back in
//! input order, so reports are identical regardless of the worker count.

use crate::graph6::Graph6Record;
use domprism_core::{
    domination::{domination_number_with, total_domination_number_with},
    prism, Bipartiteness, DominationError, Graph, SolverOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// An exact nonnegative rational, kept reduced. Ordering compares by
/// cross-multiplication, so `6/4` equals `3/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "ratio denominator must be positive");
        let g = gcd(num.max(1), den);
        Ratio { num: num / g, den: den / g }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecidedRecord {
    pub gamma: usize,
    pub gamma_t_prism: usize,
    /// `gamma_t(prism) == 2 gamma`.
    pub perfect: bool,
    /// `2 gamma - gamma_t(prism)`; zero exactly for perfect graphs.
    pub deficit: usize,
    /// `gamma_t(prism) / gamma` as an exact rational.
    pub ratio: Ratio,
    /// Value obtained from the bipartite shortcut rather than a full solve.
    pub via_shortcut: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RecordResult {
    Decided(DecidedRecord),
    /// Solver budget ran out; bounds bracket the unknown value.
    Undecided { lower_bound: usize, upper_bound: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    /// 0-based position in the input stream.
    pub index: usize,
    pub g6: String,
    pub n: usize,
    #[serde(flatten)]
    pub result: RecordResult,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MinRatioRecord {
    pub ratio: Ratio,
    pub index: usize,
    pub g6: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanReport {
    pub total: usize,
    pub perfect: usize,
    pub non_perfect: usize,
    pub undecided: usize,
    pub min_ratio: Option<MinRatioRecord>,
    /// deficit value -> number of graphs attaining it (decided records only)
    pub histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Worker threads; must be at least 1.
    pub jobs: usize,
    /// Per-solve node budget; `None` uses the solver default.
    pub budget: Option<u64>,
    /// Trust `gamma_t(prism) = 2 gamma` for bipartite inputs instead of
    /// solving the prism. A 1% audit sample is always recomputed in full and
    /// compared.
    pub bipartite_shortcut: bool,
    /// Seed for picking the audit sample (deterministic per index).
    pub audit_seed: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { jobs: 1, budget: None, bipartite_shortcut: false, audit_seed: 0xd0_b1_5c }
    }
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(
        "bipartite shortcut audit mismatch at index {index} ({g6}): \
         shortcut said {shortcut}, full solve said {full}"
    )]
    AuditMismatch { index: usize, g6: String, shortcut: usize, full: usize },
    #[error("graph at index {index} ({g6}): {source}")]
    Graph { index: usize, g6: String, source: DominationError },
}

/// Scans parsed records and aggregates a report. Records come back in input
/// order; aggregates do not depend on `jobs`.
pub fn scan_records(
    records: &[Graph6Record],
    options: &ScanOptions,
) -> Result<(Vec<ScanRecord>, ScanReport), ScanError> {
    assert!(options.jobs >= 1, "at least one worker required");
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build()?;
    let scanned: Vec<Result<ScanRecord, ScanError>> = pool.install(|| {
        records
            .par_iter()
            .enumerate()
            .map(|(index, record)| scan_one(index, record, options))
            .collect()
    });
    let mut out = Vec::with_capacity(scanned.len());
    for record in scanned {
        out.push(record?);
    }
    let report = aggregate(&out);
    Ok((out, report))
}

fn scan_one(
    index: usize,
    record: &Graph6Record,
    options: &ScanOptions,
) -> Result<ScanRecord, ScanError> {
    let g = &record.graph;
    let solver = SolverOptions { budget: options.budget, incumbent: None };
    let fail = |source| ScanError::Graph { index, g6: record.text.clone(), source };

    let gamma = match domination_number_with(g, &solver) {
        Ok(r) => r.value,
        Err(DominationError::Undecided { lower_bound, upper_bound }) => {
            return Ok(ScanRecord {
                index,
                g6: record.text.clone(),
                n: g.order(),
                result: RecordResult::Undecided { lower_bound, upper_bound },
            })
        }
        Err(e) => return Err(fail(e)),
    };

    let is_bipartite = matches!(g.bipartition(), Bipartiteness::Bipartite(_));
    let audited = options.bipartite_shortcut
        && is_bipartite
        && ChaCha8Rng::seed_from_u64(options.audit_seed ^ index as u64).gen_range(0..100u32) == 0;
    let shortcut_taken = options.bipartite_shortcut && is_bipartite && !audited;

    let gamma_t_prism = if shortcut_taken {
        2 * gamma
    } else {
        let pr = prism(g).map_err(|e| fail(DominationError::Graph(e)))?;
        let full = match total_domination_number_with(&pr, &solver) {
            Ok(r) => r.value,
            Err(DominationError::Undecided { lower_bound, upper_bound }) => {
                return Ok(ScanRecord {
                    index,
                    g6: record.text.clone(),
                    n: g.order(),
                    result: RecordResult::Undecided { lower_bound, upper_bound },
                })
            }
            Err(e) => return Err(fail(e)),
        };
        if audited && full != 2 * gamma {
            return Err(ScanError::AuditMismatch {
                index,
                g6: record.text.clone(),
                shortcut: 2 * gamma,
                full,
            });
        }
        full
    };

    Ok(ScanRecord {
        index,
        g6: record.text.clone(),
        n: g.order(),
        result: RecordResult::Decided(DecidedRecord {
            gamma,
            gamma_t_prism,
            perfect: gamma_t_prism == 2 * gamma,
            deficit: 2 * gamma - gamma_t_prism,
            ratio: Ratio::new(gamma_t_prism as u64, gamma as u64),
            via_shortcut: shortcut_taken,
        }),
    })
}

fn aggregate(records: &[ScanRecord]) -> ScanReport {
    let mut report = ScanReport {
        total: records.len(),
        perfect: 0,
        non_perfect: 0,
        undecided: 0,
        min_ratio: None,
        histogram: BTreeMap::new(),
    };
    for record in records {
        match &record.result {
            RecordResult::Decided(d) => {
                if d.perfect {
                    report.perfect += 1;
                } else {
                    report.non_perfect += 1;
                }
                *report.histogram.entry(d.deficit).or_insert(0) += 1;
                let better = report.min_ratio.as_ref().is_none_or(|m| d.ratio < m.ratio);
                if better {
                    report.min_ratio = Some(MinRatioRecord {
                        ratio: d.ratio,
                        index: record.index,
                        g6: record.g6.clone(),
                    });
                }
            }
            RecordResult::Undecided { .. } => report.undecided += 1,
        }
    }
    report
}

/// Scans an in-memory corpus of graphs.
pub fn scan_graphs(
    graphs: &[Graph],
    options: &ScanOptions,
) -> Result<(Vec<ScanRecord>, ScanReport), ScanError> {
    let records: Vec<Graph6Record> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| Graph6Record {
            line_number: i + 1,
            text: crate::graph6::encode_graph6(g).expect("corpus graphs fit the encoder"),
            graph: g.clone(),
        })
        .collect();
    scan_records(&records, options)
}

pub const CSV_HEADER: &str = "index,g6,n,gamma,gammat_prism,perfect,deficit,ratio_num,ratio_den";

/// One CSV row per record; undecided records carry empty numeric fields and
/// the word `undecided` in the perfect column.
pub fn record_to_csv(record: &ScanRecord) -> String {
    match &record.result {
        RecordResult::Decided(d) => format!(
            "{},{},{},{},{},{},{},{},{}",
            record.index,
            record.g6,
            record.n,
            d.gamma,
            d.gamma_t_prism,
            d.perfect,
            d.deficit,
            d.ratio.num,
            d.ratio.den,
        ),
        RecordResult::Undecided { .. } => {
            format!("{},{},{},,,undecided,,,", record.index, record.g6, record.n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::connected_graphs;
    use crate::graph6::parse_stream;

    #[test]
    fn ratio_arithmetic() {
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert!(Ratio::new(3, 2) < Ratio::new(2, 1));
        assert!(Ratio::new(5, 3) > Ratio::new(3, 2));
        assert_eq!(Ratio::new(4, 2).to_string(), "2/1");
    }

    #[test]
    fn smoke_scan_k2() {
        // gamma(K_2) = 1, gamma_t(C_4) = 2: perfect
        let records = parse_stream("A_\n").unwrap();
        let (rows, report) = scan_records(&records, &ScanOptions::default()).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.perfect, 1);
        assert_eq!(report.non_perfect, 0);
        match &rows[0].result {
            RecordResult::Decided(d) => {
                assert_eq!((d.gamma, d.gamma_t_prism), (1, 2));
                assert_eq!(d.ratio, Ratio::new(2, 1));
            }
            _ => panic!("decided"),
        }
    }

    #[test]
    fn c7_is_not_prism_perfect() {
        let c7 = domprism_core::cycle(7).unwrap();
        let (rows, report) = scan_graphs(&[c7], &ScanOptions::default()).unwrap();
        assert_eq!(report.non_perfect, 1);
        match &rows[0].result {
            RecordResult::Decided(d) => {
                assert_eq!((d.gamma, d.gamma_t_prism, d.deficit), (3, 5, 1));
                assert_eq!(d.ratio, Ratio::new(5, 3));
            }
            _ => panic!("decided"),
        }
    }

    #[test]
    fn reports_are_job_count_independent() {
        let graphs = connected_graphs(6);
        let base = scan_graphs(&graphs, &ScanOptions { jobs: 1, ..Default::default() }).unwrap();
        let four = scan_graphs(&graphs, &ScanOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(base.1, four.1);
        assert_eq!(base.0.len(), four.0.len());
        for (a, b) in base.0.iter().zip(&four.0) {
            assert_eq!(record_to_csv(a), record_to_csv(b));
        }
    }

    #[test]
    fn bipartite_shortcut_matches_full_scan() {
        let graphs = connected_graphs(6);
        let full = scan_graphs(&graphs, &ScanOptions::default()).unwrap();
        let short = scan_graphs(
            &graphs,
            &ScanOptions { bipartite_shortcut: true, ..Default::default() },
        )
        .unwrap();
        assert_eq!(full.1, short.1);
        assert!(short.0.iter().any(|r| matches!(
            &r.result,
            RecordResult::Decided(d) if d.via_shortcut
        )));
    }

    #[test]
    fn tiny_budget_yields_undecided_not_wrong() {
        let q5 = domprism_core::hypercube(5).unwrap();
        let opts = ScanOptions { budget: Some(1), ..Default::default() };
        let (rows, report) = scan_graphs(&[q5], &opts).unwrap();
        assert_eq!(report.undecided, 1);
        assert_eq!(report.perfect + report.non_perfect, 0);
        assert!(matches!(rows[0].result, RecordResult::Undecided { .. }));
        assert!(record_to_csv(&rows[0]).contains("undecided"));
    }

    #[test]
    fn csv_layout_is_stable() {
        let records = parse_stream("A_\n").unwrap();
        let (rows, _) = scan_records(&records, &ScanOptions::default()).unwrap();
        assert_eq!(record_to_csv(&rows[0]), "0,A_,2,1,2,true,0,2,1");
    }
}
