//! Neighborhood hypergraphs and the bipartite-prism transversal
//! correspondences.
//!
//! The open neighborhood hypergraph (ONH) of a graph has one hyperedge
//! `N(w)` per vertex `w`; the closed variant (CNH) uses `N[w]`. Transversals
//! of these hypergraphs are total dominating sets and dominating sets of the
//! underlying graph, which is how the exact solver in
//! [`crate::transversal`] computes both invariants.

use crate::graph::{prism, Graph, GraphError};
use crate::vertex_set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("ONH has an empty edge: vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("hypergraph has an empty edge (index {0}): no transversal exists")]
    EmptyEdge(usize),
    #[error("the given set is not a transversal of the X-side component")]
    NotATransversal,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A vertex universe together with a list of hyperedges.
///
/// `origins[i]`, when present, names the graph vertex whose neighborhood
/// produced edge `i`. Duplicate edges are kept as built; the solver collapses
/// them by reduction, but multiset comparisons (layer isomorphism) see the
/// original multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    universe: usize,
    edges: Vec<VertexSet>,
    origins: Option<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(universe: usize, edges: Vec<VertexSet>) -> Self {
        assert!(edges.iter().all(|e| e.universe_size() == universe));
        Hypergraph { universe, edges, origins: None }
    }

    pub fn with_origins(universe: usize, edges: Vec<VertexSet>, origins: Vec<usize>) -> Self {
        assert_eq!(edges.len(), origins.len());
        let mut h = Hypergraph::new(universe, edges);
        h.origins = Some(origins);
        h
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Origin vertex of edge `i`, when the hypergraph was built from
    /// neighborhoods.
    pub fn edge_origin(&self, i: usize) -> Option<usize> {
        self.origins.as_ref().map(|o| o[i])
    }

    /// Index of the first empty hyperedge, if any.
    pub fn empty_edge(&self) -> Option<usize> {
        self.edges.iter().position(|e| e.is_empty())
    }

    /// True iff `t` meets every hyperedge.
    pub fn is_transversal(&self, t: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(t))
    }

    /// Max-coverage greedy transversal: repeatedly pick the vertex hitting
    /// the most unhit edges, smallest index on ties. Always valid, never
    /// below `tau`.
    pub fn greedy_transversal(&self) -> Result<VertexSet, HypergraphError> {
        if let Some(i) = self.empty_edge() {
            return Err(HypergraphError::EmptyEdge(i));
        }
        let mut chosen = VertexSet::new(self.universe);
        let mut unhit: Vec<&VertexSet> = self.edges.iter().collect();
        while !unhit.is_empty() {
            let mut coverage = vec![0usize; self.universe];
            for e in &unhit {
                for v in e.iter() {
                    coverage[v] += 1;
                }
            }
            let best = (0..self.universe).max_by_key(|&v| (coverage[v], usize::MAX - v)).unwrap();
            chosen.insert(best);
            unhit.retain(|e| !e.contains(best));
        }
        Ok(chosen)
    }

    /// Size of a greedily built pairwise-disjoint edge family; a lower bound
    /// for the transversal number. Edges are considered smallest-first, ties
    /// by index.
    pub fn packing_lower_bound(&self) -> usize {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by_key(|&i| (self.edges[i].len(), i));
        let mut taken = VertexSet::new(self.universe);
        let mut count = 0;
        for i in order {
            if self.edges[i].is_disjoint_from(&taken) && !self.edges[i].is_empty() {
                taken.union_with(&self.edges[i]);
                count += 1;
            }
        }
        count
    }

    /// Connected components, where two vertices connect iff some hyperedge
    /// contains both. Vertices in no edge form singleton components.
    /// Components are ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<HypergraphComponent> {
        // union-find over the universe
        let mut parent: Vec<usize> = (0..self.universe).collect();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            let mut root = v;
            while parent[root] != root {
                root = parent[root];
            }
            let mut w = v;
            while parent[w] != root {
                let next = parent[w];
                parent[w] = root;
                w = next;
            }
            root
        }
        for e in &self.edges {
            let mut members = e.iter();
            if let Some(first) = members.next() {
                let r = find(&mut parent, first);
                for v in members {
                    let rv = find(&mut parent, v);
                    parent[rv.max(r)] = rv.min(r);
                }
            }
        }
        let mut roots: Vec<usize> = (0..self.universe).map(|v| find(&mut parent, v)).collect();
        let mut seen = Vec::new();
        let mut index_of = vec![usize::MAX; self.universe];
        for v in 0..self.universe {
            let r = roots[v];
            if index_of[r] == usize::MAX {
                index_of[r] = seen.len();
                seen.push(r);
            }
            roots[v] = index_of[r];
        }

        let mut comps: Vec<HypergraphComponent> = seen
            .iter()
            .map(|_| HypergraphComponent {
                vertices: VertexSet::new(self.universe),
                sub: Hypergraph::new(0, Vec::new()),
                back_map: Vec::new(),
            })
            .collect();
        for v in 0..self.universe {
            comps[roots[v]].vertices.insert(v);
            comps[roots[v]].back_map.push(v);
        }
        // reindex each component's vertices and edges
        let mut local = vec![usize::MAX; self.universe];
        for comp in &mut comps {
            for (i, &v) in comp.back_map.iter().enumerate() {
                local[v] = i;
            }
            let size = comp.back_map.len();
            let mut edges = Vec::new();
            let mut origins = Vec::new();
            for (i, e) in self.edges.iter().enumerate() {
                if let Some(first) = e.first() {
                    if comp.vertices.contains(first) {
                        let mut sub_edge = VertexSet::new(size);
                        for v in e.iter() {
                            sub_edge.insert(local[v]);
                        }
                        edges.push(sub_edge);
                        if let Some(o) = self.edge_origin(i) {
                            origins.push(o);
                        }
                    }
                }
            }
            comp.sub = if origins.len() == edges.len() && self.origins.is_some() {
                Hypergraph::with_origins(size, edges, origins)
            } else {
                Hypergraph::new(size, edges)
            };
        }
        comps
    }
}

/// One connected piece of a hypergraph: its vertex set in the parent
/// indexing, the reindexed sub-hypergraph, and the map from sub indices back
/// to parent indices.
#[derive(Debug, Clone)]
pub struct HypergraphComponent {
    pub vertices: VertexSet,
    pub sub: Hypergraph,
    pub back_map: Vec<usize>,
}

/// Open neighborhood hypergraph: one edge `N(w)` per vertex `w`, tagged with
/// origin `w`. Errors if some vertex is isolated (its edge would be empty).
pub fn onh(g: &Graph) -> Result<Hypergraph, HypergraphError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(HypergraphError::IsolatedVertex(v));
    }
    let edges: Vec<VertexSet> = g.vertices().map(|w| g.neighbors(w).clone()).collect();
    let origins: Vec<usize> = g.vertices().collect();
    Ok(Hypergraph::with_origins(g.order(), edges, origins))
}

/// Closed neighborhood hypergraph: one edge `N[w]` per vertex `w`.
pub fn cnh(g: &Graph) -> Hypergraph {
    let edges: Vec<VertexSet> = g.vertices().map(|w| g.closed_neighborhood(w)).collect();
    let origins: Vec<usize> = g.vertices().collect();
    Hypergraph::with_origins(g.order(), edges, origins)
}

/// Checks that the two sides of the ONH of `prism(G)` are isomorphic under
/// the partner map: applying `x -> partner(x)` to every hyperedge lying in
/// partite set `X` must reproduce exactly the multiset of hyperedges lying
/// in `Y`, and conversely.
pub fn layer_isomorphism_check(g: &Graph) -> Result<bool, HypergraphError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(HypergraphError::IsolatedVertex(v));
    }
    g.bipartition_or_err()?;
    let pr = prism(g)?;
    let parts = pr.bipartition_or_err()?;
    let h = onh(&pr)?;

    let mut x_edges = Vec::new();
    let mut y_edges = Vec::new();
    for e in h.edges() {
        let sorted = e.to_vec();
        if e.is_subset_of(&parts.x) {
            x_edges.push(sorted);
        } else if e.is_subset_of(&parts.y) {
            y_edges.push(sorted);
        } else {
            // an ONH edge of a bipartite graph lies inside one partite set
            return Ok(false);
        }
    }
    if x_edges.len() != y_edges.len() {
        return Ok(false);
    }
    let mut mapped: Vec<Vec<usize>> = x_edges
        .iter()
        .map(|e| {
            let mut f: Vec<usize> = e.iter().map(|&v| pr.partner(v).unwrap()).collect();
            f.sort_unstable();
            f
        })
        .collect();
    mapped.sort();
    y_edges.sort();
    Ok(mapped == y_edges)
}

/// Projects a transversal of the `X`-side component of `onh(prism(G))` down
/// to a dominating set of `G`: layer-1 vertices map to themselves, layer-2
/// vertices to their partners. The result never exceeds the input in size.
pub fn transversal_to_dominating(
    g: &Graph,
    t_x: &VertexSet,
) -> Result<VertexSet, HypergraphError> {
    g.bipartition_or_err()?;
    let pr = prism(g)?;
    let parts = pr.bipartition_or_err()?;
    let h = onh(&pr)?;
    // T_X must be a transversal of the edges lying inside X
    if !t_x.is_subset_of(&parts.x) {
        return Err(HypergraphError::NotATransversal);
    }
    for e in h.edges() {
        if e.is_subset_of(&parts.x) && !e.intersects(t_x) {
            return Err(HypergraphError::NotATransversal);
        }
    }
    // layer-1 vertices keep their G-name; layer-2 vertices map to their
    // partner's, which is the same base vertex
    let mut out = VertexSet::new(g.order());
    let labeling = pr.product_labeling().unwrap();
    for v in t_x.iter() {
        let (base, _layer) = labeling.factors(v);
        out.insert(base);
    }
    Ok(out)
}
