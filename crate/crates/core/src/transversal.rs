//! Exact minimum-transversal solver: depth-first branch and bound over
//! hyperedges with set-cover reductions and a disjoint-edge packing bound.
//!
//! The search is deterministic: ties break on the smallest vertex index,
//! node counts are reproducible, and independent hypergraph components are
//! solved separately (the transversal number is additive over components).

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::vertex_set::VertexSet;

/// Nodes explored before the solver gives up with an undecided outcome.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Search-tree nodes explored.
    pub nodes: u64,
    /// Times a strictly better transversal replaced the incumbent.
    pub incumbent_updates: u64,
    /// Subtrees cut by the packing lower bound.
    pub bound_prunes: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.incumbent_updates += other.incumbent_updates;
        self.bound_prunes += other.bound_prunes;
    }
}

/// An exact minimum transversal: no transversal of size `value - 1` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalResult {
    pub value: usize,
    pub witness: VertexSet,
    pub stats: SolveStats,
}

/// Outcome of a bounded solve. `Undecided` is returned when the node budget
/// runs out; it carries the best bounds found, never a silent wrong answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(TransversalResult),
    Undecided {
        lower_bound: usize,
        upper_bound: usize,
        witness: VertexSet,
        stats: SolveStats,
    },
}

impl SolveOutcome {
    pub fn solved(&self) -> Option<&TransversalResult> {
        match self {
            SolveOutcome::Solved(r) => Some(r),
            SolveOutcome::Undecided { .. } => None,
        }
    }

    pub fn into_solved(self) -> Option<TransversalResult> {
        match self {
            SolveOutcome::Solved(r) => Some(r),
            SolveOutcome::Undecided { .. } => None,
        }
    }

    pub fn is_solved(&self) -> bool {
        matches!(self, SolveOutcome::Solved(_))
    }
}

/// Knobs for [`transversal_number_with`].
#[derive(Debug, Clone, Default)]
pub struct SolverOptions {
    /// Node budget; `None` means [`DEFAULT_NODE_BUDGET`].
    pub budget: Option<u64>,
    /// A known transversal used to seed the incumbent (e.g. a constructed
    /// code). Ignored if it is not actually a transversal.
    pub incumbent: Option<VertexSet>,
}

/// Exact minimum transversal with witness, solved per component and summed.
pub fn transversal_number(
    h: &Hypergraph,
    budget: Option<u64>,
) -> Result<SolveOutcome, HypergraphError> {
    transversal_number_with(h, &SolverOptions { budget, incumbent: None })
}

pub fn transversal_number_with(
    h: &Hypergraph,
    options: &SolverOptions,
) -> Result<SolveOutcome, HypergraphError> {
    if let Some(i) = h.empty_edge() {
        return Err(HypergraphError::EmptyEdge(i));
    }
    let budget = options.budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let seed = options.incumbent.as_ref().filter(|t| h.is_transversal(t));

    let mut total_value = 0;
    let mut total_lb = 0;
    let mut witness = VertexSet::new(h.universe_size());
    let mut upper = VertexSet::new(h.universe_size());
    let mut stats = SolveStats::default();
    let mut remaining = budget;
    let mut exhausted = false;

    for comp in h.components() {
        if comp.sub.num_edges() == 0 {
            continue;
        }
        let comp_seed = seed.map(|t| {
            let mut local = VertexSet::new(comp.sub.universe_size());
            for (i, &v) in comp.back_map.iter().enumerate() {
                if t.contains(v) {
                    local.insert(i);
                }
            }
            local
        });
        let mut search = Search::new(&comp.sub, remaining, comp_seed)?;
        if exhausted {
            // budget already gone: only record this component's root bounds
            total_lb += search.root_lower_bound();
            for v in search.incumbent.iter() {
                upper.insert(comp.back_map[v]);
            }
            continue;
        }
        let solved = search.run();
        stats.absorb(&search.stats);
        remaining = remaining.saturating_sub(search.stats.nodes);
        for v in search.incumbent.iter() {
            let mapped = comp.back_map[v];
            upper.insert(mapped);
            if solved {
                witness.insert(mapped);
            }
        }
        if solved {
            total_value += search.incumbent.len();
            total_lb += search.incumbent.len();
        } else {
            exhausted = true;
            total_lb += search.proven_lower_bound;
        }
    }

    if exhausted {
        Ok(SolveOutcome::Undecided {
            lower_bound: total_lb,
            upper_bound: upper.len(),
            witness: upper,
            stats,
        })
    } else {
        Ok(SolveOutcome::Solved(TransversalResult { value: total_value, witness, stats }))
    }
}

/// How often (in tree depth) the packing bound is rebuilt from scratch;
/// in between it is the parent packing filtered down to unhit edges.
const PACKING_RECOMPUTE_DEPTH: usize = 4;

struct Search {
    budget: u64,
    stats: SolveStats,
    incumbent: VertexSet,
    proven_lower_bound: usize,
    exhausted: bool,
    universe: usize,
    initial_edges: Option<Vec<VertexSet>>,
}

impl Search {
    fn new(
        h: &Hypergraph,
        budget: u64,
        seed: Option<VertexSet>,
    ) -> Result<Self, HypergraphError> {
        let greedy = h.greedy_transversal()?;
        let incumbent = match seed {
            Some(s) if s.len() < greedy.len() => s,
            _ => greedy,
        };
        Ok(Search {
            budget,
            stats: SolveStats::default(),
            incumbent,
            proven_lower_bound: h.packing_lower_bound(),
            exhausted: false,
            universe: h.universe_size(),
            initial_edges: Some(h.edges().to_vec()),
        })
    }

    fn root_lower_bound(&self) -> usize {
        self.proven_lower_bound
    }

    /// Runs the search to completion; returns false when the budget ran out
    /// (`incumbent` then is only an upper bound).
    fn run(&mut self) -> bool {
        let edges = self.initial_edges.take().expect("search already ran");
        let packing = greedy_packing(&edges);
        let mut chosen = VertexSet::new(self.universe);
        self.node(edges, &mut chosen, packing, 0);
        !self.exhausted
    }

    fn node(
        &mut self,
        mut edges: Vec<VertexSet>,
        chosen: &mut VertexSet,
        mut packing: Vec<VertexSet>,
        depth: usize,
    ) {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            self.exhausted = true;
            return;
        }

        let forced = match apply_reductions(&mut edges, chosen) {
            Feasibility::Infeasible { forced } => {
                for v in forced {
                    chosen.remove(v);
                }
                return;
            }
            Feasibility::Reduced { forced } => forced,
        };

        if edges.is_empty() {
            if chosen.len() < self.incumbent.len() {
                self.incumbent = chosen.clone();
                self.stats.incumbent_updates += 1;
            }
            for v in forced {
                chosen.remove(v);
            }
            return;
        }

        // lower bound: disjoint packing, rebuilt periodically, otherwise the
        // inherited packing filtered down to edges still unhit
        if depth % PACKING_RECOMPUTE_DEPTH == 0 {
            packing = greedy_packing(&edges);
        } else {
            packing.retain(|e| e.is_disjoint_from(chosen));
        }
        let bound = chosen.len() + packing.len().max(1);
        if bound >= self.incumbent.len() {
            self.stats.bound_prunes += 1;
            for v in forced {
                chosen.remove(v);
            }
            return;
        }

        // branch on the shortest edge, vertices by decreasing degree
        let branch_edge = edges
            .iter()
            .enumerate()
            .min_by_key(|(i, e)| (e.len(), *i))
            .map(|(_, e)| e.clone())
            .unwrap();
        let mut branch_vertices: Vec<(usize, usize)> = branch_edge
            .iter()
            .map(|v| {
                let degree = edges.iter().filter(|e| e.contains(v)).count();
                (v, degree)
            })
            .collect();
        branch_vertices.sort_by_key(|&(v, degree)| (usize::MAX - degree, v));

        let mut excluded: Vec<usize> = Vec::new();
        for (v, _) in branch_vertices {
            let mut child_edges = Vec::with_capacity(edges.len());
            let mut dead = false;
            for e in &edges {
                if e.contains(v) {
                    continue;
                }
                let mut e = e.clone();
                for &x in &excluded {
                    e.remove(x);
                }
                if e.is_empty() {
                    // every vertex of this edge is already ruled out
                    dead = true;
                    break;
                }
                child_edges.push(e);
            }
            if !dead {
                let child_packing: Vec<VertexSet> =
                    packing.iter().filter(|e| !e.contains(v)).cloned().collect();
                chosen.insert(v);
                self.node(child_edges, chosen, child_packing, depth + 1);
                chosen.remove(v);
                if self.exhausted {
                    break;
                }
            }
            excluded.push(v);
        }

        for v in forced {
            chosen.remove(v);
        }
    }
}

/// Greedy pairwise-disjoint edge family, smallest edges first, ties by
/// position.
fn greedy_packing(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| (edges[i].len(), i));
    let mut packing: Vec<VertexSet> = Vec::new();
    for i in order {
        if packing.iter().all(|p| p.is_disjoint_from(&edges[i])) {
            packing.push(edges[i].clone());
        }
    }
    packing
}

enum Feasibility {
    /// An edge lost all its vertices: no transversal extends this node.
    Infeasible { forced: Vec<usize> },
    /// Fixpoint reached; `forced` lists vertices added to the transversal by
    /// unit-edge reduction (caller must undo them on exit).
    Reduced { forced: Vec<usize> },
}

/// Applies the safe set-cover reductions until fixpoint:
/// unit edges force their vertex, hit edges are dropped, superset edges are
/// dropped, and a vertex whose incident edges are a subset of another
/// vertex's is deleted (ties keep the smaller index).
fn apply_reductions(edges: &mut Vec<VertexSet>, chosen: &mut VertexSet) -> Feasibility {
    let mut forced = Vec::new();
    loop {
        let mut changed = false;

        // unit edges force their vertex into the transversal
        loop {
            let mut unit = None;
            for e in edges.iter() {
                if e.is_empty() {
                    return Feasibility::Infeasible { forced };
                }
                if e.len() == 1 {
                    unit = e.first();
                    break;
                }
            }
            match unit {
                Some(v) => {
                    chosen.insert(v);
                    forced.push(v);
                    edges.retain(|e| !e.contains(v));
                    changed = true;
                }
                None => break,
            }
        }

        // drop edges that are supersets of another edge (equal: keep first)
        let snapshot = edges.clone();
        let mut keep = vec![true; snapshot.len()];
        for i in 0..snapshot.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..snapshot.len() {
                if i == j || !keep[j] {
                    continue;
                }
                if snapshot[j].is_subset_of(&snapshot[i]) && (snapshot[j] != snapshot[i] || j < i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        if keep.iter().any(|&k| !k) {
            let mut idx = 0;
            edges.retain(|_| {
                idx += 1;
                keep[idx - 1]
            });
            changed = true;
        }

        // delete vertices whose incident edge set is dominated
        let mut active = VertexSet::new(chosen.universe_size());
        for e in edges.iter() {
            active.union_with(e);
        }
        let m = edges.len();
        let mut incidence: Vec<(usize, VertexSet)> = active
            .iter()
            .map(|v| {
                let mut inc = VertexSet::new(m);
                for (i, e) in edges.iter().enumerate() {
                    if e.contains(v) {
                        inc.insert(i);
                    }
                }
                (v, inc)
            })
            .collect();
        let mut removed = Vec::new();
        for a in 0..incidence.len() {
            if incidence[a].1.is_empty() {
                continue;
            }
            for b in 0..incidence.len() {
                if a == b || incidence[b].1.is_empty() {
                    continue;
                }
                let u = incidence[a].0;
                let v = incidence[b].0;
                let dominated = incidence[a].1.is_subset_of(&incidence[b].1)
                    && (incidence[a].1 != incidence[b].1 || u > v);
                if dominated {
                    removed.push(u);
                    incidence[a].1 = VertexSet::new(m);
                    break;
                }
            }
        }
        if !removed.is_empty() {
            for e in edges.iter_mut() {
                for &v in &removed {
                    e.remove(v);
                }
            }
            changed = true;
        }

        if !changed {
            return Feasibility::Reduced { forced };
        }
    }
}
