//! Named graph families and the explicit witness constructions: hypercubes,
//! cycles, paths, complete graphs, the chained five-cycle family, Hamming
//! perfect codes and the prism witness sets.
//!
//! All vertices are 0-based; the 1-based names used in proofs shift down by
//! one here.

use crate::domination::{doubling_construction, is_total_dominating};
use crate::graph::{make_graph, prism, Graph, GraphError};
use crate::vertex_set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires parameter >= {min}, got {parameter}")]
    ParameterOutOfRange { family: &'static str, parameter: usize, min: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The graph families the toolkit knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `Q_n`, the n-fold Cartesian power of `K_2`.
    Hypercube,
    /// `C_n`, n >= 3.
    Cycle,
    /// `P_n` on n vertices.
    Path,
    /// `K_n`.
    Complete,
    /// `G_k`: k five-cycles chained by bridge edges (`C_7` for k = 1).
    ChainedFiveCycles,
}

/// A family plus its integer parameter, e.g. `(Hypercube, 5)` for `Q_5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: FamilyKind,
    pub parameter: usize,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self.family {
            FamilyKind::Hypercube => hypercube(self.parameter),
            FamilyKind::Cycle => cycle(self.parameter),
            FamilyKind::Path => path(self.parameter),
            FamilyKind::Complete => complete(self.parameter),
            FamilyKind::ChainedFiveCycles => chained_five_cycles(self.parameter),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let letter = match self.family {
            FamilyKind::Hypercube => 'Q',
            FamilyKind::Cycle => 'C',
            FamilyKind::Path => 'P',
            FamilyKind::Complete => 'K',
            FamilyKind::ChainedFiveCycles => 'G',
        };
        write!(f, "{letter}{}", self.parameter)
    }
}

/// The hypercube `Q_n`, built by repeated prisms so the labeling agrees with
/// [`prism`]: vertex indices are coordinate bit-strings and `u ~ v` iff they
/// differ in exactly one bit.
pub fn hypercube(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::ParameterOutOfRange { family: "hypercube", parameter: n, min: 1 });
    }
    let mut g = make_graph(1, &[])?;
    for _ in 0..n {
        g = prism(&g)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::ParameterOutOfRange { family: "cycle", parameter: n, min: 3 });
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(make_graph(n, &edges)?)
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::ParameterOutOfRange { family: "path", parameter: n, min: 1 });
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(make_graph(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::ParameterOutOfRange { family: "complete", parameter: n, min: 1 });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(make_graph(n, &edges)?)
}

/// The family `G_k` separating total prism domination from `2 gamma`:
/// `C_7` for k = 1; for k >= 2, k five-cycles `F_i` on vertices
/// `5i..5i+5` (cyclically 0-1-3-4-2-0 inside each block) joined by the
/// bridge edges `(5j-1, 5j)`. Order `5k`, size `6k - 1`, connected.
pub fn chained_five_cycles(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::ParameterOutOfRange {
            family: "chained_five_cycles",
            parameter: k,
            min: 1,
        });
    }
    if k == 1 {
        return cycle(7);
    }
    let mut edges = Vec::new();
    for block in 0..k {
        let b = 5 * block;
        // paper's 5-cycle v1 v2 v4 v5 v3 v1, shifted to 0-based
        edges.extend([(b, b + 1), (b + 1, b + 3), (b + 3, b + 4), (b + 4, b + 2), (b + 2, b)]);
    }
    for j in 1..k {
        edges.push((5 * j - 1, 5 * j));
    }
    Ok(make_graph(5 * k, &edges)?)
}

/// The Hamming-code vertex set inside `Q_{2^k - 1}`: vertices whose set
/// coordinates XOR to zero under the check matrix whose column `j` is the
/// binary expansion of `j + 1` (least-significant bit first). The closed
/// neighborhoods of its members partition the hypercube.
pub fn hamming_perfect_code(k: usize) -> Result<VertexSet, FamilyError> {
    if k < 1 {
        return Err(FamilyError::ParameterOutOfRange {
            family: "hamming_perfect_code",
            parameter: k,
            min: 1,
        });
    }
    let n = (1usize << k) - 1;
    let order = hypercube(n)?.order();
    let mut code = VertexSet::new(order);
    for v in 0..order {
        let mut syndrome = 0usize;
        for j in 0..n {
            if v >> j & 1 == 1 {
                syndrome ^= j + 1;
            }
        }
        if syndrome == 0 {
            code.insert(v);
        }
    }
    debug_assert_eq!(code.len(), 1 << (n - k));
    Ok(code)
}

/// The Hamming code of `Q_{2^k - 1}` doubled across the new coordinate: a
/// dominating set of `Q_{2^k}` of size `2^(2^k - k)`.
pub fn doubled_code_dominating_set(k: usize) -> Result<VertexSet, FamilyError> {
    let code = hamming_perfect_code(k)?;
    let base = hypercube((1 << k) - 1)?;
    Ok(doubling_construction(&base, &code).expect("a perfect code is a dominating set"))
}

/// The total dominating set of `prism(C_{6k+1})` of size `4k + 1`:
/// `{u_{6i+1}, u_{6i+2}, v_{6i+4}, v_{6i+5} : 0 <= i < k}` together with
/// `u_{6k+1}` (1-based cycle names; the layer-2 pair is indexed by the loop
/// variable). Certified against the total-domination predicate before it is
/// returned.
pub fn prop1_witness(k: usize) -> Result<VertexSet, FamilyError> {
    if k < 1 {
        return Err(FamilyError::ParameterOutOfRange {
            family: "prop1_witness",
            parameter: k,
            min: 1,
        });
    }
    let g = cycle(6 * k + 1)?;
    let pr = prism(&g)?;
    let mut witness = VertexSet::new(pr.order());
    // u_j -> 2(j-1), v_j -> 2(j-1) + 1
    for i in 0..k {
        witness.insert(2 * (6 * i));
        witness.insert(2 * (6 * i + 1));
        witness.insert(2 * (6 * i + 3) + 1);
        witness.insert(2 * (6 * i + 4) + 1);
    }
    witness.insert(2 * (6 * k));
    assert_eq!(witness.len(), 4 * k + 1);
    assert!(is_total_dominating(&pr, &witness), "prop1 witness failed its certificate");
    Ok(witness)
}

/// The total dominating set `D` of `prism(G_k)` of size `3k` (k >= 2), with
/// three vertices in every block. Certified before return.
pub fn claim_b_witness(k: usize) -> Result<VertexSet, FamilyError> {
    if k < 2 {
        return Err(FamilyError::ParameterOutOfRange {
            family: "claim_b_witness",
            parameter: k,
            min: 2,
        });
    }
    let g = chained_five_cycles(k)?;
    let pr = prism(&g)?;
    let mut witness = VertexSet::new(pr.order());
    // x_j -> 2(j-1), y_j -> 2(j-1) + 1
    let x = |j: usize| 2 * (j - 1);
    let y = |j: usize| 2 * (j - 1) + 1;
    for i in 1..=k / 2 {
        witness.insert(x(10 * (i - 1) + 1));
        witness.insert(x(10 * (i - 1) + 2));
        witness.insert(x(10 * i));
        witness.insert(y(10 * (i - 1) + 5));
        witness.insert(y(10 * (i - 1) + 6));
        witness.insert(y(10 * (i - 1) + 7));
    }
    if k % 2 == 0 {
        witness.insert(x(5 * k - 1));
        witness.remove(y(5 * k - 3));
    } else {
        witness.insert(x(5 * k - 4));
        witness.insert(y(5 * k - 1));
        witness.insert(y(5 * k));
    }
    assert_eq!(witness.len(), 3 * k);
    assert!(is_total_dominating(&pr, &witness), "claim B witness failed its certificate");
    Ok(witness)
}
