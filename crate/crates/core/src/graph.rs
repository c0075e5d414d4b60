//! Simple undirected graphs with bitset adjacency, Cartesian products and
//! prisms, bipartition testing and connectivity.
//!
//! Graphs are immutable after construction and cheap to share across
//! threads; every operation in this module is a pure function.

use crate::vertex_set::VertexSet;
use thiserror::Error;

/// Largest supported vertex count (covers hypercubes up to `Q_12`).
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("edge endpoint {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("instance too large: {vertices} vertices exceeds capacity {MAX_VERTICES}")]
    TooLarge { vertices: usize },
    #[error("graph is not tagged as a prism")]
    NotAPrism,
    #[error("graph is not bipartite")]
    NotBipartite,
}

/// The fixed indexing of a Cartesian product: vertex `(g, h)` of
/// `G \u{25a1} H` gets index `g * n(H) + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductLabeling {
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductLabeling {
    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }

    #[inline]
    pub fn factors(&self, index: usize) -> (usize, usize) {
        (index / self.right_order, index % self.right_order)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and loop-free by construction. Graphs produced by
/// [`cartesian_product`] or [`prism`] carry their [`ProductLabeling`] so that
/// layer/partner queries remain available.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    product: Option<ProductLabeling>,
}

/// Structural equality: order and adjacency (product tags are provenance,
/// not structure).
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Builds a graph from an unordered edge list. Duplicate edges collapse
/// silently; self-loops and out-of-range endpoints are errors.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { vertices: n });
    }
    let mut adj = vec![VertexSet::new(n); n];
    for &(u, v) in edges {
        if u >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Ok(Graph { n, adj, product: None })
}

impl Graph {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|s| !s.is_empty())
    }

    /// Smallest isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v].is_empty())
    }

    /// The product labeling, when this graph was built as a product.
    pub fn product_labeling(&self) -> Option<ProductLabeling> {
        self.product
    }

    /// For a prism vertex `v`, the cross-matching neighbor `v̄` in the other
    /// layer. Errors unless the graph was built by [`prism`] (or is a product
    /// with a `K_2` right factor).
    pub fn partner(&self, v: usize) -> Result<usize, GraphError> {
        match self.product {
            Some(labeling) if labeling.right_order == 2 => {
                if v >= self.n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
                }
                Ok(v ^ 1)
            }
            _ => Err(GraphError::NotAPrism),
        }
    }

    /// Layer (0 or 1) of a prism vertex.
    pub fn prism_layer(&self, v: usize) -> Result<usize, GraphError> {
        match self.product {
            Some(labeling) if labeling.right_order == 2 => Ok(v % 2),
            _ => Err(GraphError::NotAPrism),
        }
    }

    /// Maximal connected pieces, ordered by smallest contained vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut component = VertexSet::new(self.n);
            let mut queue = vec![start];
            component.insert(start);
            seen.insert(start);
            while let Some(v) = queue.pop() {
                for u in self.adj[v].iter() {
                    if component.insert(u) {
                        seen.insert(u);
                        queue.push(u);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Two-colors the graph, or returns an odd cycle.
    ///
    /// Components are colored independently; the smallest vertex of each
    /// component goes to side `x`.
    pub fn bipartition(&self) -> Bipartiteness {
        let mut color = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.adj[v].iter() {
                    if color[u] == usize::MAX {
                        color[u] = color[v] ^ 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return Bipartiteness::OddCycle(odd_cycle(&parent, v, u));
                    }
                }
            }
        }
        let mut x = VertexSet::new(self.n);
        let mut y = VertexSet::new(self.n);
        for v in 0..self.n {
            if color[v] == 0 {
                x.insert(v);
            } else {
                y.insert(v);
            }
        }
        Bipartiteness::Bipartite(Bipartition { x, y })
    }

    /// The two partite sets, or a [`GraphError::NotBipartite`] error.
    pub fn bipartition_or_err(&self) -> Result<Bipartition, GraphError> {
        match self.bipartition() {
            Bipartiteness::Bipartite(b) => Ok(b),
            Bipartiteness::OddCycle(_) => Err(GraphError::NotBipartite),
        }
    }
}

/// A valid two-coloring: `x` and `y` partition the vertices and no edge runs
/// inside either side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl Bipartition {
    /// The side containing `v`; `0` for `x`, `1` for `y`.
    pub fn side_of(&self, v: usize) -> usize {
        usize::from(self.y.contains(v))
    }
}

/// Outcome of a two-coloring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// Vertices of an odd cycle, in order (closing edge implied).
    OddCycle(Vec<usize>),
}

/// Reconstructs an odd cycle from the BFS forest once the in-class edge
/// `(v, u)` is found: walk both endpoints to their lowest common ancestor.
fn odd_cycle(parent: &[usize], v: usize, u: usize) -> Vec<usize> {
    let path_to_root = |mut w: usize| {
        let mut path = vec![w];
        while parent[w] != usize::MAX {
            w = parent[w];
            path.push(w);
        }
        path
    };
    let pv = path_to_root(v);
    let pu = path_to_root(u);
    // trim the shared tail above the LCA
    let mut i = pv.len();
    let mut j = pu.len();
    while i > 1 && j > 1 && pv[i - 2] == pu[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle = pv[..i].to_vec();
    cycle.reverse();
    cycle.extend(pu[..j - 1].iter().copied());
    cycle
}

/// Cartesian product `G \u{25a1} H` under the fixed labeling
/// `(g, h) -> g * n(H) + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n.saturating_mul(h.n);
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { vertices: n });
    }
    let labeling = ProductLabeling { left_order: g.n, right_order: h.n };
    let mut adj = vec![VertexSet::new(n); n];
    for gv in 0..g.n {
        for hv in 0..h.n {
            let idx = labeling.index(gv, hv);
            for hu in h.adj[hv].iter() {
                adj[idx].insert(labeling.index(gv, hu));
            }
            for gu in g.adj[gv].iter() {
                adj[idx].insert(labeling.index(gu, hv));
            }
        }
    }
    Ok(Graph { n, adj, product: Some(labeling) })
}

/// The prism `G \u{25a1} K_2`: two copies of `G` joined by the perfect
/// matching `{(v,0)(v,1)}`. Vertex `(v, layer)` gets index `2v + layer`.
pub fn prism(g: &Graph) -> Result<Graph, GraphError> {
    let k2 = make_graph(2, &[(0, 1)])?;
    cartesian_product(g, &k2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pathn(n: usize) -> Graph {
        make_graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cyclen(n: usize) -> Graph {
        make_graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn make_graph_basics() {
        let k1 = make_graph(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        let p3 = pathn(3);
        let degrees: Vec<_> = p3.vertices().map(|v| p3.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 1]);

        let c4 = cyclen(4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(make_graph(0, &[]), Err(GraphError::EmptyGraph));
        assert_eq!(
            make_graph(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })
        );
        assert_eq!(make_graph(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        // duplicates collapse silently
        let g = make_graph(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn adjacency_is_symmetric_and_loop_free() {
        let g = make_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        for u in g.vertices() {
            assert!(!g.has_edge(u, u));
            for v in g.vertices() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn product_of_k2_k2_is_c4() {
        let k2 = make_graph(2, &[(0, 1)]).unwrap();
        let q2 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(q2.order(), 4);
        assert_eq!(q2.edge_count(), 4);
        assert!(q2.vertices().all(|v| q2.degree(v) == 2));
    }

    #[test]
    fn product_edge_count_law() {
        // |E(G x H)| = n(G) |E(H)| + n(H) |E(G)|
        let p3 = pathn(3);
        let grid = cartesian_product(&p3, &p3).unwrap();
        assert_eq!(grid.order(), 9);
        assert_eq!(grid.edge_count(), 12);

        let c7 = cyclen(7);
        let pr = prism(&c7).unwrap();
        assert_eq!(pr.order(), 14);
        assert!(pr.vertices().all(|v| pr.degree(v) == 3));
    }

    #[test]
    fn product_commutes_under_swap_relabeling() {
        let p3 = pathn(3);
        let c4 = cyclen(4);
        let gh = cartesian_product(&p3, &c4).unwrap();
        let hg = cartesian_product(&c4, &p3).unwrap();
        let lab_gh = gh.product_labeling().unwrap();
        let lab_hg = hg.product_labeling().unwrap();
        for a in gh.vertices() {
            for b in gh.vertices() {
                let (g1, h1) = lab_gh.factors(a);
                let (g2, h2) = lab_gh.factors(b);
                let a2 = lab_hg.index(h1, g1);
                let b2 = lab_hg.index(h2, g2);
                assert_eq!(gh.has_edge(a, b), hg.has_edge(a2, b2));
            }
        }
    }

    #[test]
    fn prism_order_and_size() {
        let c5 = cyclen(5);
        let pr = prism(&c5).unwrap();
        assert_eq!(pr.order(), 2 * c5.order());
        assert_eq!(pr.edge_count(), 2 * c5.edge_count() + c5.order());
    }

    #[test]
    fn prism_of_k1_is_k2() {
        let k1 = make_graph(1, &[]).unwrap();
        let pr = prism(&k1).unwrap();
        assert_eq!(pr.order(), 2);
        assert!(pr.has_edge(0, 1));
    }

    #[test]
    fn partner_is_cross_matching_involution() {
        let p3 = pathn(3);
        let pr = prism(&p3).unwrap();
        // vertex (1,0) has index 2, partner (1,1) has index 3
        assert_eq!(pr.partner(2).unwrap(), 3);
        for v in pr.vertices() {
            let p = pr.partner(v).unwrap();
            assert!(pr.has_edge(v, p));
            assert_eq!(pr.partner(p).unwrap(), v);
            assert_ne!(pr.prism_layer(v).unwrap(), pr.prism_layer(p).unwrap());
        }
        assert_eq!(p3.partner(0), Err(GraphError::NotAPrism));
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let c4 = cyclen(4);
        match c4.bipartition() {
            Bipartiteness::Bipartite(b) => {
                assert_eq!(b.x.to_vec(), vec![0, 2]);
                assert_eq!(b.y.to_vec(), vec![1, 3]);
            }
            Bipartiteness::OddCycle(_) => panic!("C4 is bipartite"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_an_odd_cycle() {
        for n in [5, 7, 9] {
            let g = cyclen(n);
            match g.bipartition() {
                Bipartiteness::OddCycle(cycle) => {
                    assert_eq!(cycle.len() % 2, 1);
                    assert!(cycle.len() >= 3);
                    for i in 0..cycle.len() {
                        assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                    }
                }
                Bipartiteness::Bipartite(_) => panic!("odd cycle is not bipartite"),
            }
        }
    }

    #[test]
    fn bipartition_of_prism_meets_both_layers() {
        let p4 = pathn(4);
        let pr = prism(&p4).unwrap();
        let b = pr.bipartition_or_err().unwrap();
        let layer0 = VertexSet::from_indices(8, &[0, 2, 4, 6]);
        let layer1 = VertexSet::from_indices(8, &[1, 3, 5, 7]);
        assert_eq!(b.x.intersection_len(&layer0), b.y.intersection_len(&layer1));
        assert_eq!(b.x.intersection_len(&layer1), b.y.intersection_len(&layer0));
        // partner swaps partite sets
        for v in pr.vertices() {
            assert_ne!(b.side_of(v), b.side_of(pr.partner(v).unwrap()));
        }
    }

    #[test]
    fn components_split_and_merge() {
        let g = make_graph(3, &[(1, 2)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0]);
        assert_eq!(comps[1].to_vec(), vec![1, 2]);

        let two_c5 = make_graph(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 8), (8, 9), (9, 5)],
        )
        .unwrap();
        let comps = two_c5.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 5));
    }

    #[test]
    fn capacity_guard() {
        let big = make_graph(60, &(0..59).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let sq = cartesian_product(&big, &big).unwrap();
        assert_eq!(sq.order(), 3600);
        assert!(matches!(
            cartesian_product(&sq, &big),
            Err(GraphError::TooLarge { .. })
        ));
        assert!(matches!(make_graph(5000, &[]), Err(GraphError::TooLarge { .. })));
    }
}
