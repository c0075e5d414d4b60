//! The four domination invariants and their certificate checkers.
//!
//! Plain and total domination route through the exact transversal solver
//! (`gamma(G) = tau(CNH)`, `gamma_t(G) = tau(ONH)`). Paired and total
//! restrained domination have no transversal reformulation and use a direct
//! increasing-size search with certificate pruning. [`brute_force_minimum`]
//! is the independent oracle: plain lexicographic enumeration by cardinality
//! with no pruning beyond the certificate itself.

use crate::graph::{prism, Graph, GraphError};
use crate::hypergraph::{cnh, onh, HypergraphError};
use crate::transversal::{transversal_number_with, SolveOutcome, SolveStats, SolverOptions};
use crate::vertex_set::VertexSet;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominationKind {
    Plain,
    Total,
    Paired,
    TotalRestrained,
}

impl DominationKind {
    pub const ALL: [DominationKind; 4] = [
        DominationKind::Plain,
        DominationKind::Total,
        DominationKind::Paired,
        DominationKind::TotalRestrained,
    ];

    /// The kind's certificate checker.
    pub fn check(&self, g: &Graph, s: &VertexSet) -> bool {
        match self {
            DominationKind::Plain => is_dominating(g, s),
            DominationKind::Total => is_total_dominating(g, s),
            DominationKind::Paired => is_paired_dominating(g, s),
            DominationKind::TotalRestrained => is_total_restrained_dominating(g, s),
        }
    }
}

impl std::fmt::Display for DominationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DominationKind::Plain => "gamma",
            DominationKind::Total => "gamma_t",
            DominationKind::Paired => "gamma_pr",
            DominationKind::TotalRestrained => "gamma_tr",
        };
        write!(f, "{name}")
    }
}

/// How an [`InvariantResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    TransversalReduction,
    DirectSearch,
    Construction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub kind: DominationKind,
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub stats: SolveStats,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("graph has an isolated vertex ({0}); invariant undefined")]
    IsolatedVertex(usize),
    #[error("node budget exhausted: value in [{lower_bound}, {upper_bound}]")]
    Undecided { lower_bound: usize, upper_bound: usize },
    #[error("no {kind} set exists up to size {cap}")]
    NoSuchSet { kind: DominationKind, cap: usize },
    #[error("the given set is not a dominating set")]
    NotDominating,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<HypergraphError> for DominationError {
    fn from(e: HypergraphError) -> Self {
        match e {
            HypergraphError::IsolatedVertex(v) => DominationError::IsolatedVertex(v),
            HypergraphError::Graph(g) => DominationError::Graph(g),
            // ONH/CNH edges of an isolate-free graph are never empty
            HypergraphError::EmptyEdge(_) | HypergraphError::NotATransversal => {
                unreachable!("neighborhood hypergraphs of isolate-free graphs have no empty edge")
            }
        }
    }
}

/// True iff every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    let mut covered = s.clone();
    for v in s.iter() {
        covered.union_with(g.neighbors(v));
    }
    covered.len() == g.order()
}

/// True iff every vertex of the graph (members of `s` included) has a
/// neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    let mut covered = VertexSet::new(g.order());
    for v in s.iter() {
        covered.union_with(g.neighbors(v));
    }
    covered.len() == g.order()
}

/// True iff the subgraph induced by `s` has a perfect matching.
///
/// Recursive elimination: match the smallest unmatched vertex against each
/// of its neighbors inside `s` and backtrack. Correct for general graphs;
/// intended for the small candidate sets that arise here.
pub fn has_perfect_matching(g: &Graph, s: &VertexSet) -> bool {
    if s.len() % 2 != 0 {
        return false;
    }
    fn solve(g: &Graph, unmatched: &mut VertexSet) -> bool {
        let v = match unmatched.first() {
            Some(v) => v,
            None => return true,
        };
        unmatched.remove(v);
        let candidates: Vec<usize> =
            g.neighbors(v).intersection(unmatched).iter().collect();
        for u in candidates {
            unmatched.remove(u);
            if solve(g, unmatched) {
                unmatched.insert(u);
                unmatched.insert(v);
                return true;
            }
            unmatched.insert(u);
        }
        unmatched.insert(v);
        false
    }
    solve(g, &mut s.clone())
}

/// True iff `s` totally dominates the graph and `G[s]` contains a perfect
/// matching (not necessarily induced).
pub fn is_paired_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_total_dominating(g, s) && has_perfect_matching(g, s)
}

/// True iff `s` is total dominating and the complement induces no isolated
/// vertex (every vertex outside `s` has a neighbor outside `s`).
pub fn is_total_restrained_dominating(g: &Graph, s: &VertexSet) -> bool {
    if !is_total_dominating(g, s) {
        return false;
    }
    g.vertices()
        .filter(|&v| !s.contains(v))
        .all(|v| !g.neighbors(v).is_subset_of(s))
}

fn solve_via_transversal(
    g: &Graph,
    kind: DominationKind,
    h: crate::hypergraph::Hypergraph,
    options: &SolverOptions,
) -> Result<InvariantResult, DominationError> {
    match transversal_number_with(&h, options)? {
        SolveOutcome::Solved(r) => {
            debug_assert!(kind.check(g, &r.witness));
            Ok(InvariantResult {
                kind,
                value: r.value,
                witness: r.witness,
                method: Method::TransversalReduction,
                stats: r.stats,
            })
        }
        SolveOutcome::Undecided { lower_bound, upper_bound, .. } => {
            Err(DominationError::Undecided { lower_bound, upper_bound })
        }
    }
}

/// Exact domination number via the closed neighborhood hypergraph.
pub fn domination_number(g: &Graph) -> Result<InvariantResult, DominationError> {
    domination_number_with(g, &SolverOptions::default())
}

pub fn domination_number_with(
    g: &Graph,
    options: &SolverOptions,
) -> Result<InvariantResult, DominationError> {
    solve_via_transversal(g, DominationKind::Plain, cnh(g), options)
}

/// Exact total domination number via the open neighborhood hypergraph,
/// solved component-wise.
pub fn total_domination_number(g: &Graph) -> Result<InvariantResult, DominationError> {
    total_domination_number_with(g, &SolverOptions::default())
}

pub fn total_domination_number_with(
    g: &Graph,
    options: &SolverOptions,
) -> Result<InvariantResult, DominationError> {
    solve_via_transversal(g, DominationKind::Total, onh(g)?, options)
}

/// Exact paired-domination number. Starts at the total domination floor,
/// rounded up to even, and steps by two.
pub fn paired_domination_number(g: &Graph) -> Result<InvariantResult, DominationError> {
    let gamma_t = total_domination_number(g)?;
    let mut stats = gamma_t.stats.clone();
    let start = gamma_t.value + gamma_t.value % 2;
    let mut size = start;
    while size <= g.order() {
        if let Some(witness) = search_exact_size(g, size, DominationKind::Paired, &mut stats) {
            return Ok(InvariantResult {
                kind: DominationKind::Paired,
                value: size,
                witness,
                method: Method::DirectSearch,
                stats,
            });
        }
        size += 2;
    }
    Err(DominationError::NoSuchSet { kind: DominationKind::Paired, cap: g.order() })
}

/// Exact total restrained domination number, floored at the total
/// domination number. Reports explicit nonexistence when no set of any size
/// up to `n(G)` qualifies.
pub fn total_restrained_domination_number(
    g: &Graph,
) -> Result<InvariantResult, DominationError> {
    let gamma_t = total_domination_number(g)?;
    let mut stats = gamma_t.stats.clone();
    for size in gamma_t.value..=g.order() {
        if let Some(witness) =
            search_exact_size(g, size, DominationKind::TotalRestrained, &mut stats)
        {
            return Ok(InvariantResult {
                kind: DominationKind::TotalRestrained,
                value: size,
                witness,
                method: Method::DirectSearch,
                stats,
            });
        }
    }
    Err(DominationError::NoSuchSet { kind: DominationKind::TotalRestrained, cap: g.order() })
}

/// Branch-and-bound over candidate sets of exactly `size` vertices, in
/// lexicographic order. Prunes branches that can no longer totally dominate
/// the graph (sound for both paired and restrained certificates, which
/// require total domination); the full certificate runs at the leaves.
fn search_exact_size(
    g: &Graph,
    size: usize,
    kind: DominationKind,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    let n = g.order();
    // suffix[i] = {i, ..., n-1}
    let mut suffix: Vec<VertexSet> = Vec::with_capacity(n + 1);
    suffix.push(VertexSet::full(n));
    for i in 0..n {
        let mut next = suffix[i].clone();
        next.remove(i);
        suffix.push(next);
    }
    let max_degree = g.max_degree();

    fn descend(
        g: &Graph,
        kind: DominationKind,
        chosen: &mut VertexSet,
        covered: &VertexSet,
        start: usize,
        remaining: usize,
        suffix: &[VertexSet],
        max_degree: usize,
        stats: &mut SolveStats,
    ) -> bool {
        stats.nodes += 1;
        let n = g.order();
        if remaining == 0 {
            return kind.check(g, chosen);
        }
        let uncovered = n - covered.len();
        if uncovered > remaining * max_degree {
            stats.bound_prunes += 1;
            return false;
        }
        // every still-uncovered vertex must have a potential dominator left
        for v in 0..n {
            if !covered.contains(v)
                && !g.neighbors(v).intersects(chosen)
                && !g.neighbors(v).intersects(&suffix[start])
            {
                stats.bound_prunes += 1;
                return false;
            }
        }
        for v in start..=(n - remaining) {
            chosen.insert(v);
            let mut next_covered = covered.clone();
            next_covered.union_with(g.neighbors(v));
            if descend(g, kind, chosen, &next_covered, v + 1, remaining - 1, suffix, max_degree, stats)
            {
                return true;
            }
            chosen.remove(v);
        }
        false
    }

    if size > n {
        return None;
    }
    let mut chosen = VertexSet::new(n);
    let covered = VertexSet::new(n);
    descend(g, kind, &mut chosen, &covered, 0, size, &suffix, max_degree, stats)
        .then_some(chosen)
}

/// Doubles a dominating set of `G` across the prism: returns
/// `{(v,0), (v,1) : v in D}` in the prism labeling. The result is a total
/// dominating (and paired-dominating) set of `prism(G)` of size `2|D|`.
pub fn doubling_construction(g: &Graph, d: &VertexSet) -> Result<VertexSet, DominationError> {
    if !is_dominating(g, d) {
        return Err(DominationError::NotDominating);
    }
    let doubled_order = prism(g)?.order();
    let mut out = VertexSet::new(doubled_order);
    for v in d.iter() {
        out.insert(2 * v);
        out.insert(2 * v + 1);
    }
    Ok(out)
}

/// Independent oracle: exhaustive search over subsets in increasing
/// cardinality (lexicographic within each size) using the kind's
/// certificate checker. The first hit is the minimum.
pub fn brute_force_minimum(
    g: &Graph,
    kind: DominationKind,
    cap: Option<usize>,
) -> Result<InvariantResult, DominationError> {
    let n = g.order();
    let cap = cap.unwrap_or(n).min(n);
    let mut stats = SolveStats::default();

    fn enumerate(
        g: &Graph,
        kind: DominationKind,
        chosen: &mut VertexSet,
        start: usize,
        remaining: usize,
        stats: &mut SolveStats,
    ) -> bool {
        if remaining == 0 {
            stats.nodes += 1;
            return kind.check(g, chosen);
        }
        let n = g.order();
        for v in start..=(n - remaining) {
            chosen.insert(v);
            if enumerate(g, kind, chosen, v + 1, remaining - 1, stats) {
                return true;
            }
            chosen.remove(v);
        }
        false
    }

    for size in 0..=cap {
        let mut chosen = VertexSet::new(n);
        if enumerate(g, kind, &mut chosen, 0, size, &mut stats) {
            return Ok(InvariantResult {
                kind,
                value: size,
                witness: chosen,
                method: Method::DirectSearch,
                stats,
            });
        }
    }
    Err(DominationError::NoSuchSet { kind, cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, hypercube, path};
    use crate::graph::make_graph;

    #[test]
    fn dominating_certificates() {
        let k1 = make_graph(1, &[]).unwrap();
        assert!(is_dominating(&k1, &VertexSet::from_indices(1, &[0])));

        let c7 = cycle(7).unwrap();
        assert!(!is_dominating(&c7, &VertexSet::from_indices(7, &[0, 3])));
        assert!(is_dominating(&c7, &VertexSet::from_indices(7, &[0, 3, 5])));

        // closed neighborhoods of an antipodal pair cover Q_3
        let q3 = hypercube(3).unwrap();
        assert!(is_dominating(&q3, &VertexSet::from_indices(8, &[0, 7])));
        // ... but antipodal vertices are non-adjacent, so not totally
        assert!(!is_total_dominating(&q3, &VertexSet::from_indices(8, &[0, 7])));
    }

    #[test]
    fn total_dominating_certificates() {
        let k2 = make_graph(2, &[(0, 1)]).unwrap();
        assert!(is_total_dominating(&k2, &VertexSet::from_indices(2, &[0, 1])));
        let c4 = cycle(4).unwrap();
        assert!(is_total_dominating(&c4, &VertexSet::from_indices(4, &[0, 1])));
        assert!(!is_total_dominating(&c4, &VertexSet::from_indices(4, &[0])));
    }

    #[test]
    fn paired_certificates() {
        let k2 = make_graph(2, &[(0, 1)]).unwrap();
        assert!(is_paired_dominating(&k2, &VertexSet::from_indices(2, &[0, 1])));

        // odd cardinality can never pair up
        let c5 = cycle(5).unwrap();
        assert!(!is_paired_dominating(&c5, &VertexSet::from_indices(5, &[0, 1, 2])));

        // both copies of the middle vertex of P_3 pair across the prism
        let pr = prism(&path(3).unwrap()).unwrap();
        assert!(is_paired_dominating(&pr, &VertexSet::from_indices(6, &[2, 3])));
    }

    #[test]
    fn restrained_certificates() {
        let c4 = cycle(4).unwrap();
        assert!(is_total_restrained_dominating(&c4, &VertexSet::from_indices(4, &[0, 1])));
        let p3 = path(3).unwrap();
        // vertex 2 would be isolated outside {0, 1}
        assert!(!is_total_restrained_dominating(&p3, &VertexSet::from_indices(3, &[0, 1])));
    }

    #[test]
    fn perfect_matching_checker() {
        let p3 = path(3).unwrap();
        assert!(has_perfect_matching(&p3, &VertexSet::new(3)));
        assert!(!has_perfect_matching(&p3, &VertexSet::from_indices(3, &[0, 2])));
        let c5 = cycle(5).unwrap();
        assert!(!has_perfect_matching(&c5, &VertexSet::full(5)));
        let c6 = cycle(6).unwrap();
        assert!(has_perfect_matching(&c6, &VertexSet::full(6)));
        // matching need not be induced
        let paw = make_graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(has_perfect_matching(&paw, &VertexSet::full(4)));
    }

    #[test]
    fn small_invariant_values() {
        // frozen against an independent brute-force oracle
        let c7 = cycle(7).unwrap();
        assert_eq!(domination_number(&c7).unwrap().value, 3);
        assert_eq!(total_domination_number(&c7).unwrap().value, 4);
        assert_eq!(paired_domination_number(&c7).unwrap().value, 4);
        assert_eq!(total_restrained_domination_number(&c7).unwrap().value, 5);

        let c4 = cycle(4).unwrap();
        assert_eq!(total_restrained_domination_number(&c4).unwrap().value, 2);

        let p3 = path(3).unwrap();
        assert_eq!(domination_number(&p3).unwrap().value, 1);
        assert_eq!(domination_number(&p3).unwrap().witness.to_vec(), vec![1]);
        assert_eq!(total_restrained_domination_number(&p3).unwrap().value, 3);

        let k2 = make_graph(2, &[(0, 1)]).unwrap();
        assert_eq!(paired_domination_number(&k2).unwrap().value, 2);
    }

    #[test]
    fn hypercube_paired_equals_total() {
        // gamma_t(Q_3) = gamma_pr(Q_3) = gamma_tr(Q_3) = 4
        let q3 = hypercube(3).unwrap();
        assert_eq!(total_domination_number(&q3).unwrap().value, 4);
        assert_eq!(paired_domination_number(&q3).unwrap().value, 4);
        assert_eq!(total_restrained_domination_number(&q3).unwrap().value, 4);
        // prism(Q_3) = Q_4: gamma_tr = gamma_t = 4
        let q4 = hypercube(4).unwrap();
        assert_eq!(total_domination_number(&q4).unwrap().value, 4);
        assert_eq!(total_restrained_domination_number(&q4).unwrap().value, 4);
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = make_graph(2, &[]).unwrap();
        assert_eq!(
            total_domination_number(&g),
            Err(DominationError::IsolatedVertex(0))
        );
        // plain domination is still defined
        assert_eq!(domination_number(&g).unwrap().value, 2);
    }

    #[test]
    fn doubling_produces_total_dominating_sets() {
        let k1 = make_graph(1, &[]).unwrap();
        let d = VertexSet::from_indices(1, &[0]);
        let doubled = doubling_construction(&k1, &d).unwrap();
        assert_eq!(doubled.to_vec(), vec![0, 1]);
        assert!(is_total_dominating(&prism(&k1).unwrap(), &doubled));

        let c7 = cycle(7).unwrap();
        let d = VertexSet::from_indices(7, &[0, 3, 5]);
        let doubled = doubling_construction(&c7, &d).unwrap();
        let pr = prism(&c7).unwrap();
        assert_eq!(doubled.len(), 6);
        assert!(is_total_dominating(&pr, &doubled));
        assert!(is_paired_dominating(&pr, &doubled));

        let not_dom = VertexSet::from_indices(7, &[0]);
        assert_eq!(
            doubling_construction(&c7, &not_dom),
            Err(DominationError::NotDominating)
        );
    }

    #[test]
    fn brute_force_matches_known_values() {
        let p3 = path(3).unwrap();
        let r = brute_force_minimum(&p3, DominationKind::Plain, None).unwrap();
        assert_eq!((r.value, r.witness.to_vec()), (1, vec![1]));

        let c7 = cycle(7).unwrap();
        assert_eq!(brute_force_minimum(&c7, DominationKind::Total, None).unwrap().value, 4);

        let q3 = hypercube(3).unwrap();
        assert_eq!(brute_force_minimum(&q3, DominationKind::Plain, None).unwrap().value, 2);
    }

    #[test]
    fn brute_force_cap_is_honest() {
        let c7 = cycle(7).unwrap();
        assert_eq!(
            brute_force_minimum(&c7, DominationKind::Plain, Some(2)),
            Err(DominationError::NoSuchSet { kind: DominationKind::Plain, cap: 2 })
        );
    }

    #[test]
    fn observation_chains_hold_on_small_graphs() {
        // gamma <= gamma_t <= gamma_pr and gamma_t <= gamma_tr
        for g in [cycle(5).unwrap(), cycle(6).unwrap(), path(5).unwrap(), hypercube(3).unwrap()] {
            let gamma = domination_number(&g).unwrap().value;
            let gamma_t = total_domination_number(&g).unwrap().value;
            let gamma_pr = paired_domination_number(&g).unwrap().value;
            let gamma_tr = total_restrained_domination_number(&g).unwrap().value;
            assert!(gamma <= gamma_t && gamma_t <= gamma_pr);
            assert!(gamma_t <= gamma_tr);
            // trivial degree bound
            assert!(gamma_t * g.max_degree() >= g.order());
        }
    }

    #[test]
    fn stars_take_everything_for_restrained() {
        let star = make_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(total_restrained_domination_number(&star).unwrap().value, 4);
    }

    #[test]
    fn witnesses_pass_their_certificates() {
        for g in [cycle(6).unwrap(), cycle(7).unwrap(), hypercube(3).unwrap()] {
            for kind in DominationKind::ALL {
                let r = match kind {
                    DominationKind::Plain => domination_number(&g).unwrap(),
                    DominationKind::Total => total_domination_number(&g).unwrap(),
                    DominationKind::Paired => paired_domination_number(&g).unwrap(),
                    DominationKind::TotalRestrained => {
                        total_restrained_domination_number(&g).unwrap()
                    }
                };
                assert!(kind.check(&g, &r.witness), "{kind} witness invalid");
                assert_eq!(r.witness.len(), r.value);
            }
        }
    }
}
