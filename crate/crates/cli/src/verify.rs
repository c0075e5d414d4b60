//! Verification suites: each suite recomputes one of the paper-level claims
//! from scratch (both sides solved independently) and reports expected
//! versus computed values with timings.

use crate::gen::{all_trees, connected_graphs};
use crate::random::{random_connected, random_connected_bipartite};
use crate::scan::{scan_graphs, Ratio, ScanOptions};
use domprism_core::{
    cartesian_product, chained_five_cycles, claim_b_witness, complete, cycle, domination,
    doubled_code_dominating_set, hamming_perfect_code, hypercube, is_dominating,
    is_total_dominating, layer_isomorphism_check, onh, path, prism, prop1_witness,
    transversal_number, transversal_to_dominating, Graph, SolverOptions, VertexSet,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

pub const SUITE_NAMES: &[&str] = &[
    "hypercube-table",
    "hypercube-identity",
    "infinite-families",
    "bipartite-prism",
    "corollary1",
    "cycles-prop1",
    "gk-theorem2",
    "ratio-problem",
    "spot-products",
    "onh-structure",
];

// fixed seeds so suite runs are reproducible
const SEED_BIPARTITE_PRISM: u64 = 0x7031;
const SEED_COROLLARY1: u64 = 0x7032;
const SEED_ONH_STRUCTURE: u64 = 0x7033;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown suite {0:?}; known suites: {}", SUITE_NAMES.join(", "))]
pub struct UnknownSuite(pub String);

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Worker threads for the corpus-scanning suites.
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { jobs: 1 }
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn push<E: std::fmt::Display, C: std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: E,
        compute: impl FnOnce() -> C,
    ) {
        let start = Instant::now();
        let computed = compute().to_string();
        let expected = expected.to_string();
        self.0.push(CheckResult {
            name: name.into(),
            pass: expected == computed,
            expected,
            computed,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
}

fn gamma(g: &Graph) -> usize {
    domination::domination_number(g).expect("solver finished").value
}

fn gamma_t(g: &Graph) -> usize {
    domination::total_domination_number(g).expect("solver finished").value
}

pub fn run_suite(name: &str, options: &SuiteOptions) -> Result<SuiteReport, UnknownSuite> {
    let mut checks = Checks::new();
    match name {
        "hypercube-table" => hypercube_table(&mut checks),
        "hypercube-identity" => hypercube_identity(&mut checks),
        "infinite-families" => infinite_families(&mut checks),
        "bipartite-prism" => bipartite_prism(&mut checks),
        "corollary1" => corollary1(&mut checks),
        "cycles-prop1" => cycles_prop1(&mut checks),
        "gk-theorem2" => gk_theorem2(&mut checks),
        "ratio-problem" => ratio_problem(&mut checks, options),
        "spot-products" => spot_products(&mut checks),
        "onh-structure" => onh_structure(&mut checks),
        other => return Err(UnknownSuite(other.to_string())),
    }
    Ok(SuiteReport { suite: name.to_string(), checks: checks.0 })
}

/// gamma(Q_n) for n = 1..7 against the published table. Q_7 is seeded with
/// the Hamming-code incumbent and closes at the search root.
fn hypercube_table(checks: &mut Checks) {
    for (n, expected) in [(1, 1), (2, 2), (3, 2), (4, 4), (5, 7), (6, 12)] {
        checks.push(format!("gamma(Q_{n})"), expected, || gamma(&hypercube(n).unwrap()));
    }
    checks.push("gamma(Q_7)", 16, || {
        let q7 = hypercube(7).unwrap();
        let opts = SolverOptions {
            budget: None,
            incumbent: Some(hamming_perfect_code(3).unwrap()),
        };
        domination::domination_number_with(&q7, &opts).expect("solver finished").value
    });
}

/// gamma_t(Q_{n+1}) = 2 gamma(Q_n) for n = 1..5, both sides solved
/// independently.
fn hypercube_identity(checks: &mut Checks) {
    for n in 1..=5 {
        let left = gamma_t(&hypercube(n + 1).unwrap());
        checks.push(
            format!("gamma_t(Q_{}) = 2 gamma(Q_{n})", n + 1),
            2 * gamma(&hypercube(n).unwrap()),
            || left,
        );
    }
}

/// Perfect codes in Q_{2^k - 1} and their doubled versions in Q_{2^k}:
/// sizes, the partition property, domination certificates, and exact
/// matches where the solve is in reach.
fn infinite_families(checks: &mut Checks) {
    for k in 1..=3u32 {
        let n = (1usize << k) - 1;
        let q = hypercube(n).unwrap();
        let code = hamming_perfect_code(k as usize).unwrap();
        let expected_size = 1usize << (n - k as usize);
        checks.push(format!("|code(Q_{n})| = 2^{}", n - k as usize), expected_size, || code.len());
        checks.push(format!("code(Q_{n}) closed neighborhoods partition V"), true, || {
            let mut covered = VertexSet::new(q.order());
            for c in code.iter() {
                let ball = q.closed_neighborhood(c);
                if !ball.is_disjoint_from(&covered) {
                    return false;
                }
                covered.union_with(&ball);
            }
            covered.len() == q.order()
        });
        checks.push(format!("gamma(Q_{n}) = {expected_size}"), expected_size, || {
            let opts = SolverOptions { budget: None, incumbent: Some(code.clone()) };
            domination::domination_number_with(&q, &opts).expect("solver finished").value
        });

        let doubled = doubled_code_dominating_set(k as usize).unwrap();
        let even = 1usize << k;
        let q_even = hypercube(even).unwrap();
        let expected_doubled = 1usize << (even - k as usize);
        checks.push(format!("|doubled code(Q_{even})| = 2^{}", even - k as usize),
            expected_doubled, || doubled.len());
        checks.push(format!("doubled code dominates Q_{even}"), true, || {
            is_dominating(&q_even, &doubled)
        });
        if even <= 4 {
            // exact solves stay at desk scale; gamma(Q_8) = 32 is certified
            // only as an upper bound by the construction above
            checks.push(format!("gamma(Q_{even}) = {expected_doubled}"), expected_doubled, || {
                gamma(&q_even)
            });
        }
    }
}

/// Theorem on bipartite prisms: gamma_t(G x K_2) = 2 gamma(G) on 500 random
/// connected bipartite graphs of order <= 10 plus every tree of order <= 9.
fn bipartite_prism(checks: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_BIPARTITE_PRISM);
    let sample: Vec<Graph> =
        (0..500).map(|_| random_connected_bipartite(&mut rng, 1, 10)).collect();
    checks.push("gamma_t(prism) = 2 gamma on 500 random bipartite", "500/500", || {
        tally(&sample, |g| gamma_t(&prism(g).unwrap()) == 2 * gamma(g))
    });
    let trees: Vec<Graph> = (1..=9).flat_map(all_trees).collect();
    let total = trees.len();
    checks.push(
        format!("gamma_t(prism) = 2 gamma on all {total} trees of order <= 9"),
        format!("{total}/{total}"),
        || tally(&trees, |g| gamma_t(&prism(g).unwrap()) == 2 * gamma(g)),
    );
}

/// Corollary: on bipartite prisms the total, paired and total restrained
/// domination numbers coincide. 100 random connected bipartite graphs of
/// order <= 8.
fn corollary1(checks: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_COROLLARY1);
    let sample: Vec<Graph> =
        (0..100).map(|_| random_connected_bipartite(&mut rng, 1, 8)).collect();
    checks.push("gamma_t = gamma_pr = gamma_tr on 100 random bipartite prisms", "100/100", || {
        tally(&sample, |g| {
            let pr = prism(g).unwrap();
            let t = gamma_t(&pr);
            let p = domination::paired_domination_number(&pr).expect("search finished").value;
            let r = domination::total_restrained_domination_number(&pr)
                .expect("search finished")
                .value;
            t == p && p == r
        })
    });
}

/// Odd cycles break the identity by exactly one:
/// gamma_t(C_{6k+1} x K_2) = 4k + 1 = 2 gamma(C_{6k+1}) - 1.
fn cycles_prop1(checks: &mut Checks) {
    for k in 1..=3 {
        let n = 6 * k + 1;
        let c = cycle(n).unwrap();
        checks.push(format!("gamma(C_{n})"), 2 * k + 1, || gamma(&c));
        checks.push(format!("gamma_t(prism(C_{n}))"), 4 * k + 1, || gamma_t(&prism(&c).unwrap()));
        checks.push(format!("prop1 witness(k={k}) certified, size {}", 4 * k + 1), true, || {
            let w = prop1_witness(k).unwrap();
            w.len() == 4 * k + 1 && is_total_dominating(&prism(&c).unwrap(), &w)
        });
    }
}

/// The chained five-cycle family: gamma(G_k) = 2k, gamma_t(prism) = 3k
/// (k = 1 realized by C_7 with 3 and 5), so 2 gamma - gamma_t(prism) = k.
fn gk_theorem2(checks: &mut Checks) {
    for k in 1..=4 {
        let g = chained_five_cycles(k).unwrap();
        let expected_gamma = if k == 1 { 3 } else { 2 * k };
        let expected_total = if k == 1 { 5 } else { 3 * k };
        checks.push(format!("gamma(G_{k})"), expected_gamma, || gamma(&g));
        checks.push(format!("gamma_t(prism(G_{k}))"), expected_total, || {
            gamma_t(&prism(&g).unwrap())
        });
        checks.push(format!("2 gamma(G_{k}) - gamma_t(prism(G_{k})) = {k}"), k, || {
            2 * gamma(&g) - gamma_t(&prism(&g).unwrap())
        });
    }
    for k in 2..=6 {
        checks.push(format!("claim B witness(k={k}) certified, size {}", 3 * k), true, || {
            let g = chained_five_cycles(k).unwrap();
            let w = claim_b_witness(k).unwrap();
            w.len() == 3 * k && is_total_dominating(&prism(&g).unwrap(), &w)
        });
    }
}

/// The sharpness question for gamma_t(G x K_2) >= 3/2 gamma(G): scans every
/// connected graph of order <= 8 for a counterexample and confirms the
/// chained five-cycle family attains the bound exactly.
fn ratio_problem(checks: &mut Checks, options: &SuiteOptions) {
    let scan_opts = ScanOptions { jobs: options.jobs, ..Default::default() };
    let three_halves = Ratio::new(3, 2);
    let mut min_seen: Option<(Ratio, usize, String)> = None;
    for order in 1..=8 {
        let corpus = connected_graphs(order);
        let (_, report) = scan_graphs(&corpus, &scan_opts).expect("scan finished");
        if let Some(m) = report.min_ratio {
            let better = min_seen.as_ref().is_none_or(|(r, _, _)| m.ratio < *r);
            if better {
                min_seen = Some((m.ratio, order, m.g6));
            }
        }
    }
    let (min_ratio, order, g6) = min_seen.expect("corpora are nonempty");
    checks.push(
        format!("min gamma_t(prism)/gamma over connected order <= 8 is >= 3/2 (min {min_ratio} at order {order}, {g6})"),
        true,
        || min_ratio >= three_halves,
    );
    for k in [2, 4] {
        checks.push(format!("G_{k} attains the ratio 3/2 exactly"), "3/2", || {
            let g = chained_five_cycles(k).unwrap();
            Ratio::new(gamma_t(&prism(&g).unwrap()) as u64, gamma(&g) as u64)
        });
    }
}

/// The small Cartesian products at the end of the paper, with the paper's
/// edge-counted paths spelled out by order: its P_3 is the path on 4
/// vertices (gamma = 2) and the partner factors are K_3, the 3-vertex path,
/// K_4 and the 4-vertex path.
fn spot_products(checks: &mut Checks) {
    let p4 = path(4).unwrap();
    let partners: [(&str, Graph); 4] = [
        ("K3", complete(3).unwrap()),
        ("P3", path(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("P4", path(4).unwrap()),
    ];
    checks.push("gamma(P4) (the paper's P_3)", 2, || gamma(&p4));
    for ((name, h), expected) in partners.iter().zip([4, 4, 4, 6]) {
        checks.push(format!("gamma_t(P4 x {name})"), expected, || {
            gamma_t(&cartesian_product(&p4, h).unwrap())
        });
    }
}

/// Structural laws of the open neighborhood hypergraph: component counts on
/// 200 random connected graphs, the partner-map isomorphism between the two
/// prism components, equal component transversal numbers summing to
/// gamma_t(prism), and the transversal-to-dominating projection.
fn onh_structure(checks: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_ONH_STRUCTURE);
    let general: Vec<Graph> = (0..100).map(|_| random_connected(&mut rng, 2, 9)).collect();
    let bipartite: Vec<Graph> =
        (0..100).map(|_| random_connected_bipartite(&mut rng, 2, 9)).collect();

    checks.push("ONH component count law on 200 random connected graphs", "200/200", || {
        let mut sample = general.clone();
        sample.extend(bipartite.iter().cloned());
        tally(&sample, |g| {
            let expected = match g.bipartition() {
                domprism_core::Bipartiteness::Bipartite(_) => 2,
                domprism_core::Bipartiteness::OddCycle(_) => 1,
            };
            onh(g).unwrap().components().len() == expected
        })
    });

    checks.push("partner map is an ONH isomorphism on 100 bipartite graphs", "100/100", || {
        tally(&bipartite, |g| layer_isomorphism_check(g).unwrap())
    });

    checks.push("prism ONH components have equal tau summing to gamma_t", "100/100", || {
        tally(&bipartite, |g| {
            let pr = prism(g).unwrap();
            let h = onh(&pr).unwrap();
            let comps = h.components();
            if comps.len() != 2 {
                return false;
            }
            let taus: Vec<usize> = comps
                .iter()
                .map(|c| {
                    transversal_number(&c.sub, None)
                        .expect("no empty edges")
                        .solved()
                        .expect("desk scale")
                        .value
                })
                .collect();
            taus[0] == taus[1] && taus[0] + taus[1] == gamma_t(&pr)
        })
    });

    checks.push("transversal projection dominates on 100 bipartite graphs", "100/100", || {
        tally(&bipartite, |g| {
            let pr = prism(g).unwrap();
            let parts = pr.bipartition_or_err().unwrap();
            let h = onh(&pr).unwrap();
            let x_comp = h
                .components()
                .into_iter()
                .find(|c| c.vertices == parts.x)
                .expect("X side is one component");
            let tau_x = transversal_number(&x_comp.sub, None)
                .expect("no empty edges")
                .solved()
                .expect("desk scale")
                .clone();
            let mut t_x = VertexSet::new(pr.order());
            for v in tau_x.witness.iter() {
                t_x.insert(x_comp.back_map[v]);
            }
            let projected = transversal_to_dominating(g, &t_x).unwrap();
            is_dominating(g, &projected)
                && projected.len() <= t_x.len()
                && gamma(g) <= tau_x.value
        })
    });
}

/// Applies a predicate across a sample and renders "passed/total"; the
/// first failing graph is appended for diagnosis.
fn tally(sample: &[Graph], predicate: impl Fn(&Graph) -> bool) -> String {
    let mut passed = 0;
    let mut first_failure = None;
    for g in sample {
        if predicate(g) {
            passed += 1;
        } else if first_failure.is_none() {
            first_failure = Some(crate::graph6::encode_graph6(g).unwrap_or_default());
        }
    }
    match first_failure {
        None => format!("{passed}/{}", sample.len()),
        Some(g6) => format!("{passed}/{} (first failure: {g6})", sample.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("bogus", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn spot_products_pass() {
        let report = run_suite("spot-products", &SuiteOptions::default()).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.checks.len(), 5);
    }

    #[test]
    fn cycles_prop1_passes() {
        let report = run_suite("cycles-prop1", &SuiteOptions::default()).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn hypercube_identity_small() {
        // full identity suite is exercised by the acceptance tests; smoke
        // the shape here
        let report = run_suite("hypercube-identity", &SuiteOptions::default()).unwrap();
        assert_eq!(report.checks.len(), 5);
        assert!(report.all_pass(), "{report:?}");
    }
}
