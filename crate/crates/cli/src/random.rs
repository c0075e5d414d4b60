//! Seeded random graph samplers backing the verification suites. Everything
//! draws from a caller-provided `ChaCha8Rng`, so suite runs are reproducible.

use domprism_core::graph::{make_graph, Graph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    make_graph(n, &edges).unwrap()
}

/// Random connected graph with order drawn from `min_order..=max_order`.
pub fn random_connected(rng: &mut ChaCha8Rng, min_order: usize, max_order: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_order..=max_order);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random isolate-free graph (not necessarily connected) of order at least 2.
pub fn random_isolate_free(rng: &mut ChaCha8Rng, min_order: usize, max_order: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_order.max(2)..=max_order);
        let p = rng.gen_range(0.15..0.9);
        let g = random_graph(rng, n, p);
        if g.is_isolate_free() {
            return g;
        }
    }
}

/// Random connected bipartite graph of order `min_order..=max_order`: a
/// random split into two sides, random cross edges, rejection-sampled for
/// connectivity. For order 1 this is `K_1`.
pub fn random_connected_bipartite(
    rng: &mut ChaCha8Rng,
    min_order: usize,
    max_order: usize,
) -> Graph {
    loop {
        let n = rng.gen_range(min_order..=max_order);
        if n == 1 {
            return make_graph(1, &[]).unwrap();
        }
        let left = rng.gen_range(1..n);
        let p = rng.gen_range(0.3..0.95);
        let mut edges = Vec::new();
        for u in 0..left {
            for v in left..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = make_graph(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use domprism_core::Bipartiteness;
    use rand::SeedableRng;

    #[test]
    fn samplers_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_connected(&mut rng, 2, 9);
            assert!(g.is_connected());
            assert!((2..=9).contains(&g.order()));

            let b = random_connected_bipartite(&mut rng, 1, 10);
            assert!(b.is_connected());
            assert!(matches!(b.bipartition(), Bipartiteness::Bipartite(_)));

            let f = random_isolate_free(&mut rng, 2, 9);
            assert!(f.is_isolate_free());
        }
    }

    #[test]
    fn same_seed_same_graphs() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            assert_eq!(random_connected(&mut a, 2, 8), random_connected(&mut b, 2, 8));
        }
    }
}
