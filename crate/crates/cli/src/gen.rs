//! Isomorph-free generation of small graphs: canonical labeling by
//! individualization-refinement, plus exhaustive enumeration by vertex
//! extension with canonical deduplication.
//!
//! Connected counts self-validate the generator: 1, 1, 2, 6, 21, 112, 853,
//! 11117 connected graphs of orders 1..=8.

use crate::graph6::encode_graph6;
use domprism_core::graph::{make_graph, Graph};
use std::collections::HashSet;

/// Largest order the in-process generator supports; bigger corpora must be
/// supplied as graph6 files.
pub const MAX_GEN_ORDER: usize = 8;

/// A canonically relabeled copy of `g`: isomorphic graphs map to identical
/// labeled graphs.
pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.order();
    let mut best: Option<Vec<u8>> = None;
    let mut best_perm: Vec<usize> = (0..n).collect();
    let mut color = vec![0usize; n];
    refine(g, &mut color);
    search(g, &color, &mut best, &mut best_perm);

    // relabel: vertex at position i of the best ordering becomes vertex i
    let perm = best_perm;
    let mut edges = Vec::with_capacity(g.edge_count());
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(perm[i], perm[j]) {
                edges.push((i, j));
            }
        }
    }
    make_graph(n, &edges).expect("relabeling preserves validity")
}

/// graph6 token of the canonical relabeling; equal tokens mean isomorphic
/// graphs.
pub fn canonical_g6(g: &Graph) -> String {
    encode_graph6(&canonical_graph(g)).expect("generator graphs stay within encoding range")
}

/// Iterated color refinement: a vertex's new color is the rank of
/// (old color, sorted multiset of neighbor colors). Stops at a fixpoint.
fn refine(g: &Graph, color: &mut [usize]) {
    let n = g.order();
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nbr.sort_unstable();
                (color[v], nbr)
            })
            .collect();
        let mut ranks: Vec<(usize, Vec<usize>)> = signatures.clone();
        ranks.sort();
        ranks.dedup();
        let mut changed = false;
        for v in 0..n {
            let sig = std::mem::take(&mut signatures[v]);
            let rank = ranks.binary_search(&sig).expect("own signature present");
            if color[v] != rank {
                changed = true;
            }
            color[v] = rank;
        }
        if !changed {
            return;
        }
    }
}

/// Explores all orderings consistent with the refined partition,
/// individualizing one vertex of the first non-singleton cell at a time,
/// and keeps the lexicographically smallest adjacency bitstring.
fn search(g: &Graph, color: &[usize], best: &mut Option<Vec<u8>>, best_perm: &mut Vec<usize>) {
    let n = g.order();
    let mut cell_size = vec![0usize; n];
    for v in 0..n {
        cell_size[color[v]] += 1;
    }
    let target = (0..n)
        .filter(|&v| cell_size[color[v]] > 1)
        .min_by_key(|&v| (color[v], v));

    match target {
        None => {
            // discrete: ordering is determined by the colors
            let mut perm = vec![0usize; n];
            for v in 0..n {
                perm[color[v]] = v;
            }
            let bits = adjacency_bits(g, &perm);
            if best.as_ref().is_none_or(|b| bits < *b) {
                *best = Some(bits);
                *best_perm = perm;
            }
        }
        Some(pivot) => {
            let cell = color[pivot];
            for v in 0..n {
                if color[v] != cell {
                    continue;
                }
                let mut child: Vec<usize> =
                    color.iter().map(|&c| if c < cell { c } else { c + 1 }).collect();
                child[v] = cell;
                refine(g, &mut child);
                search(g, &child, best, best_perm);
            }
        }
    }
}

/// Upper-triangle bitstring of `g` relabeled by `perm`, packed MSB-first in
/// graph6 column order.
fn adjacency_bits(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let mut bits = vec![0u8; (n * (n - 1) / 2).div_ceil(8)];
    let mut index = 0;
    for col in 1..n {
        for row in 0..col {
            if g.has_edge(perm[row], perm[col]) {
                bits[index / 8] |= 1 << (7 - index % 8);
            }
            index += 1;
        }
    }
    bits
}

/// All non-isomorphic graphs of the given order (canonical representatives,
/// sorted by canonical token), built by extending every smaller graph with
/// one new vertex in all possible ways.
pub fn all_graphs(order: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_GEN_ORDER).contains(&order),
        "generator supports orders 1..={MAX_GEN_ORDER}"
    );
    let mut current = vec![make_graph(1, &[]).unwrap()];
    for n in 2..=order {
        let mut seen = HashSet::new();
        let mut next: Vec<(String, Graph)> = Vec::new();
        for g in &current {
            let base_edges = g.edges();
            for mask in 0u32..(1 << (n - 1)) {
                let mut edges = base_edges.clone();
                for b in 0..n - 1 {
                    if mask >> b & 1 == 1 {
                        edges.push((b, n - 1));
                    }
                }
                let candidate = make_graph(n, &edges).unwrap();
                let canon = canonical_graph(&candidate);
                let token = encode_graph6(&canon).unwrap();
                if seen.insert(token.clone()) {
                    next.push((token, canon));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        current = next.into_iter().map(|(_, g)| g).collect();
    }
    current
}

/// All non-isomorphic connected graphs of the given order.
pub fn connected_graphs(order: usize) -> Vec<Graph> {
    all_graphs(order).into_iter().filter(|g| g.is_connected()).collect()
}

/// All non-isomorphic trees of the given order, by leaf attachment.
pub fn all_trees(order: usize) -> Vec<Graph> {
    assert!(order >= 1, "trees need at least one vertex");
    let mut current = vec![make_graph(1, &[]).unwrap()];
    for n in 2..=order {
        let mut seen = HashSet::new();
        let mut next: Vec<(String, Graph)> = Vec::new();
        for t in &current {
            for attach in 0..n - 1 {
                let mut edges = t.edges();
                edges.push((attach, n - 1));
                let candidate = make_graph(n, &edges).unwrap();
                let canon = canonical_graph(&candidate);
                let token = encode_graph6(&canon).unwrap();
                if seen.insert(token.clone()) {
                    next.push((token, canon));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        current = next.into_iter().map(|(_, g)| g).collect();
    }
    current
}
