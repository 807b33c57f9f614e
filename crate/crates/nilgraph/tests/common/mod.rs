//! Shared helpers for the integration suites: independent oracles and
//! random object generators. Nothing here calls back into the code paths it
//! is used to check.
//!
//! Each test target compiles this module separately, so not every item is
//! used by every target.
#![allow(dead_code)]

use nilgraph::graph::Graph;
use nilgraph::group::GroupElement;
use nilgraph::matrix::IntMatrix;
use nilgraph::scalar::Int;
use nilgraph::weighted::WeightedGraph;
use rand::rngs::StdRng;
use rand::Rng;

/// Element of the 3x3 unitriangular matrix model of the weight-n group on
/// one edge: (x, y, z) stands for rows (1, n*x, z), (0, 1, y), (0, 0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UT3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

pub fn ut3_mul(n: i64, a: UT3, b: UT3) -> UT3 {
    UT3 {
        x: a.x + b.x,
        y: a.y + b.y,
        z: a.z + b.z + n * a.x * b.y,
    }
}

/// Normal form (z1, z2, t) corresponds to the matrix with x = z1, y = z2,
/// z = n*z1*z2 + t.
pub fn ut3_of(n: i64, e: &GroupElement) -> UT3 {
    let z1 = i64::try_from(&e.z[0]).unwrap();
    let z2 = i64::try_from(&e.z[1]).unwrap();
    let t = i64::try_from(&e.t[0]).unwrap();
    UT3 {
        x: z1,
        y: z2,
        z: n * z1 * z2 + t,
    }
}

pub fn random_element(rng: &mut StdRng, n: usize, m: usize, span: i64) -> GroupElement {
    let z: Vec<i64> = (0..n).map(|_| rng.gen_range(-span..=span)).collect();
    let t: Vec<i64> = (0..m).map(|_| rng.gen_range(-span..=span)).collect();
    GroupElement::from_i64(&z, &t)
}

pub fn random_int_matrix(rng: &mut StdRng, rows: usize, cols: usize, span: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-span..=span)))
}

/// Random unimodular matrix: a product of elementary row operations.
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if n > 1 {
            while j == i {
                j = rng.gen_range(0..n);
            }
        }
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                // r_i += t * r_j
                let t = Int::from(rng.gen_range(-2..=2i64));
                for c in 0..n {
                    let v = m.get(i, c) + &t * m.get(j, c);
                    m.set(i, c, v);
                }
            }
            1 if n > 1 => m.swap_rows(i, j),
            _ => {
                for c in 0..n {
                    let v = -m.get(i, c).clone();
                    m.set(i, c, v);
                }
            }
        }
    }
    m
}

/// Random simple graph on up to `max_n` vertices with zero-padded labels so
/// the lexicographic order matches the numeric one.
pub fn random_graph(rng: &mut StdRng, max_n: usize, edge_prob: f64) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let labels: Vec<String> = (0..n).map(|i| format!("w{i:02}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::new(&labels, &pairs).unwrap()
}

pub fn random_weighted_graph(
    rng: &mut StdRng,
    max_n: usize,
    edge_prob: f64,
    max_w: u64,
) -> WeightedGraph {
    let g = random_graph(rng, max_n, edge_prob);
    let weights: Vec<u64> = (0..g.edge_count())
        .map(|_| rng.gen_range(1..=max_w))
        .collect();
    WeightedGraph::new(g, weights).unwrap()
}

/// Random member of the graded automorphism group of the graph's Lie ring:
/// a product of a basis permutation, per-component unimodular blocks and
/// unipotent elementary maps along strict preorder pairs.
pub fn random_valid_graded_map(
    rng: &mut StdRng,
    wa: &nilgraph::weighted::WeightedAnalysis,
) -> IntMatrix {
    let a = &wa.analysis;
    let n = a.graph.vertex_count();
    let sigmas = nilgraph::graph::automorphism_sigmas(&a.graph, 12).unwrap();
    let sigma = &sigmas[rng.gen_range(0..sigmas.len())];
    let p = a.orders.vertex_perm_matrix(sigma);

    let blocks: Vec<IntMatrix> = a
        .components
        .classes
        .iter()
        .map(|c| random_unimodular(rng, c.len(), 4))
        .collect();
    let diag = IntMatrix::block_diagonal(&blocks);

    // strict preorder pairs admit unipotent generators
    let mut unip = IntMatrix::identity(n);
    let strict: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..n).map(move |w| (v, w)))
        .filter(|&(v, w)| {
            v != w && a.graph.vertex_precedes(v, w) && !a.graph.vertex_precedes(w, v)
        })
        .collect();
    if !strict.is_empty() {
        for _ in 0..rng.gen_range(0..3) {
            let (v, w) = strict[rng.gen_range(0..strict.len())];
            let t = Int::from(rng.gen_range(-2..=2i64));
            // image of w gains t copies of v
            let cur = unip.get(a.orders.vertex_pos[v], a.orders.vertex_pos[w]) + &t;
            unip.set(a.orders.vertex_pos[v], a.orders.vertex_pos[w], cur);
        }
    }
    p.mul(&diag).unwrap().mul(&unip).unwrap()
}
