//! Edge weight functions, class-level determinant divisors, the weight-
//! constrained automorphism group, and the weight construction that pins an
//! edge of the quotient.

use num_integer::Integer as _;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphAnalysis, GraphAutomorphism};
use crate::matrix::IntMatrix;
use crate::scalar::Int;
use crate::snf;

/// A finite simple graph with a strictly positive integer weight on each
/// edge, indexed like `graph.edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} edges",
                weights.len(),
                graph.edge_count()
            )));
        }
        if let Some(e) = weights.iter().position(|&w| w == 0) {
            let (a, b) = graph.edge_labels(e);
            return Err(Error::InvalidWeight(a, b));
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// All weights equal to one.
    pub fn unweighted(graph: Graph) -> Self {
        let weights = vec![1; graph.edge_count()];
        WeightedGraph { graph, weights }
    }

    pub fn weight(&self, e: usize) -> u64 {
        self.weights[e]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Product of all edge weights; the index of the unweighted group inside
    /// the weighted one.
    pub fn weight_product(&self) -> Int {
        let mut p = Int::one();
        for &w in &self.weights {
            p *= Int::from(w);
        }
        p
    }

    /// Diagonal matrix D(k) over the ordered edge basis.
    pub fn weight_matrix(&self, orders: &crate::graph::Orders) -> IntMatrix {
        let entries: Vec<Int> = orders
            .edge_order
            .iter()
            .map(|&e| Int::from(self.weights[e]))
            .collect();
        IntMatrix::diagonal(&entries)
    }
}

/// Everything needed downstream, weights included.
#[derive(Clone, Debug)]
pub struct WeightedAnalysis {
    pub analysis: GraphAnalysis,
    pub weighted: WeightedGraph,
}

impl WeightedAnalysis {
    pub fn new(weighted: WeightedGraph) -> Self {
        let analysis = GraphAnalysis::new(weighted.graph.clone());
        WeightedAnalysis { analysis, weighted }
    }
}

/// d_l of an edge class: gcd over all size-l subsets of the class of the
/// product of their weights. Equals the l-th determinant divisor of the
/// diagonal weight matrix of the class.
pub fn class_determinant_divisors(
    wg: &WeightedGraph,
    class_members: &[usize],
    l: usize,
) -> Result<Int> {
    if l == 0 || l > class_members.len() {
        return Err(Error::IndexOutOfRange(format!(
            "d_{l} of an edge class of size {}",
            class_members.len()
        )));
    }
    let mut g = Int::from(0);
    for subset in combinations(class_members.len(), l) {
        let mut prod = Int::one();
        for &i in &subset {
            prod *= Int::from(wg.weight(class_members[i]));
        }
        g = g.gcd(&prod);
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Full determinant-divisor profile (d_1, ..., d_{|class|}) of a class.
pub fn class_d_profile(wg: &WeightedGraph, class_members: &[usize]) -> Result<Vec<Int>> {
    (1..=class_members.len())
        .map(|l| class_determinant_divisors(wg, class_members, l))
        .collect()
}

/// Same profile via the generic determinant divisors of D(k|class); an
/// independent cross-check of the combinatorial path.
pub fn class_d_profile_via_matrix(wg: &WeightedGraph, class_members: &[usize]) -> Result<Vec<Int>> {
    let entries: Vec<Int> = class_members
        .iter()
        .map(|&e| Int::from(wg.weight(e)))
        .collect();
    let d = IntMatrix::diagonal(&entries);
    (1..=class_members.len())
        .map(|l| snf::determinant_divisors(&d, l))
        .collect()
}

/// The subgroup of graph automorphisms preserving every class-level
/// determinant divisor: the necessary condition a weight function imposes on
/// automorphisms of the associated group.
pub fn weighted_automorphism_group(
    wa: &WeightedAnalysis,
    bound: usize,
) -> Result<Vec<GraphAutomorphism>> {
    let a = &wa.analysis;
    let profiles: Vec<Vec<Int>> = a
        .edge_classes
        .classes
        .iter()
        .map(|c| class_d_profile(&wa.weighted, c))
        .collect::<Result<_>>()?;
    let all = a.automorphisms(bound)?;
    Ok(all
        .into_iter()
        .filter(|aut| {
            a.edge_classes
                .classes
                .iter()
                .enumerate()
                .all(|(mu, members)| {
                    let image_class = a.edge_classes.class_of[aut.sigma_e[members[0]]];
                    profiles[mu] == profiles[image_class]
                })
        })
        .collect())
}

/// Weight function that pins an edge: weight m on e0, weight 1 elsewhere.
/// The endpoints of e0 must lie in singleton coherent components, so that
/// the class of e0 is a singleton and the pin survives every admissible
/// automorphism.
pub fn counterexample_weights(g: &Graph, e0: usize, m: u64) -> Result<WeightedGraph> {
    if m < 2 {
        return Err(Error::WeightTooSmall(m));
    }
    let analysis = GraphAnalysis::new(g.clone());
    let (v, w) = g.edge(e0);
    let p = &analysis.components;
    if p.classes[p.class_of[v]].len() != 1 || p.classes[p.class_of[w]].len() != 1 {
        return Err(Error::InvalidInput(format!(
            "edge {{{}, {}}} does not have both endpoints in singleton coherent components",
            g.label(v),
            g.label(w)
        )));
    }
    let weights: Vec<u64> = (0..g.edge_count())
        .map(|e| if e == e0 { m } else { 1 })
        .collect();
    WeightedGraph::new(g.clone(), weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::scalar::int;

    fn path4() -> Graph {
        Graph::new(
            &["v1", "v2", "v3", "v4"],
            &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")],
        )
        .unwrap()
    }

    #[test]
    fn class_divisor_examples() {
        let g = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let wg = WeightedGraph::new(g, vec![7]).unwrap();
        assert_eq!(class_determinant_divisors(&wg, &[0], 1).unwrap(), int(7));

        let g = Graph::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        let wg = WeightedGraph::new(g, vec![2, 6]).unwrap();
        assert_eq!(class_determinant_divisors(&wg, &[0, 1], 1).unwrap(), int(2));
        assert_eq!(
            class_determinant_divisors(&wg, &[0, 1], 2).unwrap(),
            int(12)
        );
        assert!(class_determinant_divisors(&wg, &[0, 1], 3).is_err());
        assert!(class_determinant_divisors(&wg, &[0, 1], 0).is_err());

        let wg1 = WeightedGraph::unweighted(wg.graph.clone());
        assert_eq!(class_d_profile(&wg1, &[0, 1]).unwrap(), vec![int(1), int(1)]);
    }

    #[test]
    fn profile_matches_matrix_path() {
        let g = Graph::new(&["a", "b", "c", "d"], &[("a", "d"), ("b", "d"), ("c", "d")]).unwrap();
        let wg = WeightedGraph::new(g, vec![4, 6, 10]).unwrap();
        assert_eq!(
            class_d_profile(&wg, &[0, 1, 2]).unwrap(),
            class_d_profile_via_matrix(&wg, &[0, 1, 2]).unwrap()
        );
    }

    #[test]
    fn all_ones_weights_keep_the_full_group() {
        let wa = WeightedAnalysis::new(WeightedGraph::unweighted(path4()));
        let weighted = weighted_automorphism_group(&wa, 12).unwrap();
        let full = wa.analysis.automorphisms(12).unwrap();
        assert_eq!(weighted.len(), full.len());
    }

    #[test]
    fn k2_any_weight_keeps_order_two() {
        let g = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let wa = WeightedAnalysis::new(WeightedGraph::new(g, vec![5]).unwrap());
        assert_eq!(weighted_automorphism_group(&wa, 12).unwrap().len(), 2);
    }

    #[test]
    fn counterexample_weight_construction() {
        let g = path4();
        // middle edge {v2, v3}: all components are singletons
        let v2 = g.vertex_index("v2").unwrap();
        let v3 = g.vertex_index("v3").unwrap();
        let e = g.edge_index(v2, v3).unwrap();
        let wg = counterexample_weights(&g, e, 3).unwrap();
        assert_eq!(wg.weight(e), 3);
        assert_eq!(wg.weight_product(), int(3));

        // K2: endpoints share a size-2 class
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(counterexample_weights(&k2, 0, 2).is_err());
        assert!(counterexample_weights(&g, e, 1).is_err());
    }

    #[test]
    fn zero_weight_rejected() {
        let g = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(WeightedGraph::new(g, vec![0]).is_err());
    }

    #[test]
    fn weighted_group_is_closed() {
        let g = Graph::new(
            &["c", "l1", "l2", "l3"],
            &[("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap();
        let full = graph::automorphism_sigmas(&g, 12).unwrap();
        assert_eq!(full.len(), 6);
        let wg = WeightedGraph::new(g, vec![2, 2, 3]).unwrap();
        let wa = WeightedAnalysis::new(wg);
        let auts = weighted_automorphism_group(&wa, 12).unwrap();
        // the single class maps to itself, so its profile is automatically
        // preserved and the full group survives
        assert_eq!(auts.len(), 6);
        let sigmas: std::collections::BTreeSet<Vec<usize>> =
            auts.iter().map(|a| a.sigma.clone()).collect();
        for a in &auts {
            for b in &auts {
                let composed: Vec<usize> =
                    (0..a.sigma.len()).map(|v| a.sigma[b.sigma[v]]).collect();
                assert!(sigmas.contains(&composed));
            }
        }
    }
}
