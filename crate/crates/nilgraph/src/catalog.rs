//! Named graphs and matrices used by the reproduction driver and the
//! acceptance suite.

use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::weighted::WeightedGraph;

/// Six vertices: coherent pairs {v1,v2} and {v3,v4}, singletons v5 and v6;
/// the quotient graph has a self-loop at the first pair.
pub fn figure1() -> Graph {
    Graph::new(
        &["v1", "v2", "v3", "v4", "v5", "v6"],
        &[
            ("v1", "v5"),
            ("v2", "v5"),
            ("v3", "v6"),
            ("v4", "v6"),
            ("v1", "v2"),
            ("v5", "v6"),
        ],
    )
    .expect("static graph")
}

pub fn k2() -> Graph {
    Graph::new(&["v1", "v2"], &[("v1", "v2")]).expect("static graph")
}

pub fn k2_weighted(n: u64) -> WeightedGraph {
    WeightedGraph::new(k2(), vec![n]).expect("positive weight")
}

pub fn path4() -> Graph {
    Graph::new(
        &["v1", "v2", "v3", "v4"],
        &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")],
    )
    .expect("static graph")
}

/// Two disjoint edges plus an isolated vertex; Hirsch number six after
/// stripping the isolated vertex.
pub fn two_edges_plus_isolated() -> Graph {
    Graph::new(
        &["v1", "v2", "v3", "v4", "v5"],
        &[("v1", "v2"), ("v3", "v4")],
    )
    .expect("static graph")
}

/// Nine vertices in three columns: pairs {v1,v2}, {v3,v4}, {v5,v6} attached
/// to the spine v7 - v8 - v9. The smallest graph whose group loses the
/// R-infinity property while suitable weighted versions regain it.
pub fn counterexample_graph() -> Graph {
    Graph::new(
        &["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"],
        &[
            ("v1", "v7"),
            ("v2", "v7"),
            ("v3", "v8"),
            ("v4", "v8"),
            ("v5", "v9"),
            ("v6", "v9"),
            ("v7", "v8"),
            ("v8", "v9"),
        ],
    )
    .expect("static graph")
}

/// Weight n on the spine edge {v7, v8}, weight 1 elsewhere.
pub fn counterexample_weighted(n: u64) -> WeightedGraph {
    let g = counterexample_graph();
    let weights: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let pair = (g.label(i), g.label(j));
            if pair == ("v7", "v8") {
                n
            } else {
                1
            }
        })
        .collect();
    WeightedGraph::new(g, weights).expect("positive weights")
}

/// The 9x9 vertex-quotient matrix of the finite-R automorphism of the
/// counterexample group, in the basis v1 < ... < v9.
pub fn counterexample_b() -> IntMatrix {
    IntMatrix::from_i64(&[
        &[0, 0, 0, 0, 2, 1, 0, 0, 0],
        &[0, 0, 0, 0, 1, 1, 0, 0, 0],
        &[0, 0, 2, 1, 0, 0, 0, 0, 0],
        &[0, 0, 1, 1, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, 0, -1],
        &[0, 0, 0, 0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 0, 0, 0, 1, 0, 0],
    ])
}

/// The matrix induced by `counterexample_b` on the commutator subgroup, in
/// the edge basis e1 < ... < e8 (e1..e6 the pair edges, e7 = {v7,v8},
/// e8 = {v8,v9}).
pub fn counterexample_c() -> IntMatrix {
    IntMatrix::from_i64(&[
        &[0, 0, 0, 0, -2, -1, 0, 0],
        &[0, 0, 0, 0, -1, -1, 0, 0],
        &[0, 0, -2, -1, 0, 0, 0, 0],
        &[0, 0, -1, -1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, -1],
        &[0, 0, 0, 0, 0, 0, 1, 0],
    ])
}
