//! Finite simple graphs and the combinatorics attached to them: vertex and
//! edge preorders, coherent components, edge classes, the quotient graph,
//! admissible total orders and automorphism enumeration.
//!
//! Vertex labels are opaque strings; every construction breaks ties
//! lexicographically on labels so all outputs are deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::Int;

/// Default cap on |V| for automorphism enumeration.
pub const DEFAULT_AUT_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Build a graph from labels and label pairs. Labels are sorted
    /// lexicographically; edges are normalized and sorted.
    pub fn new<S: AsRef<str>>(vertices: &[S], edge_pairs: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        labels.sort();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate vertex label".into()));
        }
        let index = |s: &str| -> Result<usize> {
            labels
                .binary_search_by(|l| l.as_str().cmp(s))
                .map_err(|_| Error::UnknownVertex(s.to_owned()))
        };
        let mut edges = Vec::with_capacity(edge_pairs.len());
        for (a, b) in edge_pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let (i, j) = (index(a)?, index(b)?);
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at '{a}'")));
            }
            edges.push((i.min(j), i.max(j)));
        }
        edges.sort();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate edge".into()));
        }
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for &(i, j) in &edges {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(Graph { labels, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownVertex(label.to_owned()))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_labels(&self, e: usize) -> (String, String) {
        let (i, j) = self.edges[e];
        (self.labels[i].clone(), self.labels[j].clone())
    }

    pub fn edge_index(&self, v: usize, w: usize) -> Option<usize> {
        let key = (v.min(w), v.max(w));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_edge(&self, v: usize, w: usize) -> bool {
        self.edge_index(v, w).is_some()
    }

    pub fn open_neighborhood(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Open and closed neighborhoods by label.
    pub fn neighborhoods(&self, label: &str) -> Result<(BTreeSet<String>, BTreeSet<String>)> {
        let v = self.vertex_index(label)?;
        let open: BTreeSet<String> = self.adj[v].iter().map(|&w| self.labels[w].clone()).collect();
        let mut closed = open.clone();
        closed.insert(label.to_owned());
        Ok((open, closed))
    }

    /// Vertex preorder: v precedes w iff the open neighborhood of v is
    /// contained in the closed neighborhood of w.
    pub fn vertex_precedes(&self, v: usize, w: usize) -> bool {
        self.adj[v].iter().all(|&x| x == w || self.adj[w].contains(&x))
    }

    /// Induced edge preorder on unordered pairs.
    pub fn edge_precedes(&self, e: usize, f: usize) -> bool {
        let (v, w) = self.edges[e];
        let (x, y) = self.edges[f];
        (self.vertex_precedes(v, x) && self.vertex_precedes(w, y))
            || (self.vertex_precedes(v, y) && self.vertex_precedes(w, x))
    }

    /// Degree-zero vertices together with the induced subgraph on the rest.
    pub fn isolated_vertices(&self) -> (Vec<String>, Graph) {
        let iso: Vec<String> = (0..self.vertex_count())
            .filter(|&v| self.adj[v].is_empty())
            .map(|v| self.labels[v].clone())
            .collect();
        let keep: Vec<String> = (0..self.vertex_count())
            .filter(|&v| !self.adj[v].is_empty())
            .map(|v| self.labels[v].clone())
            .collect();
        let pairs: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect();
        let stripped = Graph::new(&keep, &pairs).expect("induced subgraph is valid");
        (iso, stripped)
    }

    /// DOT rendering; `weights` (when given) are per-edge labels.
    pub fn to_dot(&self, weights: Option<&[u64]>) -> String {
        let mut out = String::from("graph {\n");
        for l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for (e, &(i, j)) in self.edges.iter().enumerate() {
            let label = match weights {
                Some(w) => format!(" [label=\"{}\"]", w[e]),
                None => String::new(),
            };
            out.push_str(&format!(
                "  \"{}\" -- \"{}\"{};\n",
                self.labels[i], self.labels[j], label
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Coherent components of the vertex set, listed in a fixed admissible order
/// (topological in the induced partial order, lexicographic tie-breaks).
///
/// The same structure holds edge classes, with edge indices as elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentPartition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Reflexive partial order on class indices.
    pub prec: Vec<Vec<bool>>,
}

pub type EdgeClassPartition = CoherentPartition;

impl CoherentPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_transposition_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Elements lying in singleton classes.
    pub fn singleton_elements(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect()
    }
}

/// Order classes topologically w.r.t. the strict part of `prec`, breaking
/// ties by the smallest member. Panics on a directed cycle, which the
/// construction rules out.
fn topo_order_classes(classes: &[Vec<usize>], prec: &[Vec<bool>]) -> Vec<usize> {
    let k = classes.len();
    let mut indeg = vec![0usize; k];
    for a in 0..k {
        for b in 0..k {
            if a != b && prec[a][b] {
                indeg[b] += 1;
            }
        }
    }
    let mut ready: BTreeSet<(usize, usize)> = (0..k)
        .filter(|&c| indeg[c] == 0)
        .map(|c| (classes[c][0], c))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(&(key, c)) = ready.iter().next() {
        ready.remove(&(key, c));
        order.push(c);
        for b in 0..k {
            if b != c && prec[c][b] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.insert((classes[b][0], b));
                }
            }
        }
    }
    assert_eq!(order.len(), k, "preorder quotient must be acyclic");
    order
}

fn partition_by_preorder(n: usize, precedes: impl Fn(usize, usize) -> bool) -> CoherentPartition {
    let mut prec_el = vec![vec![false; n]; n];
    for v in 0..n {
        for w in 0..n {
            prec_el[v][w] = precedes(v, w);
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![v];
        class_of[v] = id;
        for w in v + 1..n {
            if class_of[w] == usize::MAX && prec_el[v][w] && prec_el[w][v] {
                class_of[w] = id;
                members.push(w);
            }
        }
        classes.push(members);
    }
    let k = classes.len();
    let mut prec = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            prec[a][b] = prec_el[classes[a][0]][classes[b][0]];
        }
    }
    // antisymmetry holds by construction on classes; assert rather than trust
    for a in 0..k {
        for b in 0..k {
            if a != b {
                assert!(!(prec[a][b] && prec[b][a]), "class order not antisymmetric");
            }
        }
    }
    let order = topo_order_classes(&classes, &prec);
    let classes_sorted: Vec<Vec<usize>> = order.iter().map(|&c| classes[c].clone()).collect();
    let mut prec_sorted = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            prec_sorted[a][b] = prec[order[a]][order[b]];
        }
    }
    let mut class_of_sorted = vec![0usize; n];
    for (idx, members) in classes_sorted.iter().enumerate() {
        for &v in members {
            class_of_sorted[v] = idx;
        }
    }
    CoherentPartition {
        classes: classes_sorted,
        class_of: class_of_sorted,
        prec: prec_sorted,
    }
}

/// Coherent components: equivalence classes of mutual vertex preorder.
pub fn coherent_components(g: &Graph) -> CoherentPartition {
    partition_by_preorder(g.vertex_count(), |v, w| g.vertex_precedes(v, w))
}

/// Edge classes: equivalence classes of mutual edge preorder.
pub fn edge_classes(g: &Graph, _p: &CoherentPartition) -> EdgeClassPartition {
    partition_by_preorder(g.edge_count(), |e, f| g.edge_precedes(e, f))
}

/// Quotient graph: coherent components with multiplicities, edges induced by
/// the graph; self-loops are allowed (an internal edge of a class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub sizes: Vec<usize>,
    /// Unordered class pairs (a <= b), sorted; a == b encodes a loop.
    pub qedges: Vec<(usize, usize)>,
}

pub fn quotient_graph(g: &Graph, p: &CoherentPartition) -> QuotientGraph {
    let mut qedges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(v, w) in g.edges() {
        let (a, b) = (p.class_of[v], p.class_of[w]);
        qedges.insert((a.min(b), a.max(b)));
    }
    QuotientGraph {
        sizes: p.sizes(),
        qedges: qedges.into_iter().collect(),
    }
}

impl QuotientGraph {
    pub fn has_loop_at(&self, class: usize) -> bool {
        self.qedges.binary_search(&(class, class)).is_ok()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (i, s) in self.sizes.iter().enumerate() {
            out.push_str(&format!(
                "  \"L{}\" [label=\"L{} (size {})\"];\n",
                i + 1,
                i + 1,
                s
            ));
        }
        for &(a, b) in &self.qedges {
            out.push_str(&format!("  \"L{}\" -- \"L{}\";\n", a + 1, b + 1));
        }
        out.push_str("}\n");
        out
    }

    /// All size- and edge-preserving permutations of the classes. Used to
    /// test surjectivity of the induced map from graph automorphisms.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let k = self.sizes.len();
        let qset: BTreeSet<(usize, usize)> = self.qedges.iter().copied().collect();
        let mut result = Vec::new();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut accept = |p: &[usize]| {
            for i in 0..k {
                if self.sizes[p[i]] != self.sizes[i] {
                    return false;
                }
            }
            for &(a, b) in &self.qedges {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                if !qset.contains(&(x, y)) {
                    return false;
                }
            }
            true
        };
        permute_filtered(&mut perm, 0, &mut accept, &mut result);
        result.sort();
        result
    }
}

fn permute_filtered(
    perm: &mut Vec<usize>,
    k: usize,
    accept: &mut impl FnMut(&[usize]) -> bool,
    out: &mut Vec<Vec<usize>>,
) {
    if k == perm.len() {
        if accept(perm) {
            out.push(perm.clone());
        }
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_filtered(perm, k + 1, accept, out);
        perm.swap(k, i);
    }
}

/// The identification of edge classes with quotient-graph edges: for each
/// edge class in order, the corresponding quotient edge.
pub fn edge_class_to_quotient_edge(
    g: &Graph,
    p: &CoherentPartition,
    m: &EdgeClassPartition,
) -> Vec<(usize, usize)> {
    m.classes
        .iter()
        .map(|class| {
            let (v, w) = g.edge(class[0]);
            let (a, b) = (p.class_of[v], p.class_of[w]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Admissible total orders on vertices and edges: class-contiguous
/// refinements of the topological class orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orders {
    /// position -> vertex index
    pub vertex_order: Vec<usize>,
    /// vertex index -> position
    pub vertex_pos: Vec<usize>,
    /// position -> edge index
    pub edge_order: Vec<usize>,
    /// edge index -> position
    pub edge_pos: Vec<usize>,
}

impl Orders {
    /// Endpoints of edge e as (smaller, larger) under the vertex order.
    pub fn oriented_edge(&self, g: &Graph, e: usize) -> (usize, usize) {
        let (v, w) = g.edge(e);
        if self.vertex_pos[v] < self.vertex_pos[w] {
            (v, w)
        } else {
            (w, v)
        }
    }

    /// Matrix of the basis permutation e_pos(v) -> e_pos(sigma(v)).
    pub fn vertex_perm_matrix(&self, sigma: &[usize]) -> IntMatrix {
        let n = self.vertex_order.len();
        let perm: Vec<usize> = (0..n)
            .map(|pos| self.vertex_pos[sigma[self.vertex_order[pos]]])
            .collect();
        IntMatrix::permutation(&perm)
    }

    pub fn edge_perm_matrix(&self, sigma_e: &[usize]) -> IntMatrix {
        let m = self.edge_order.len();
        let perm: Vec<usize> = (0..m)
            .map(|pos| self.edge_pos[sigma_e[self.edge_order[pos]]])
            .collect();
        IntMatrix::permutation(&perm)
    }

    /// D(epsilon) in the ordered edge basis.
    pub fn epsilon_matrix(&self, epsilon: &[i8]) -> IntMatrix {
        let entries: Vec<Int> = self
            .edge_order
            .iter()
            .map(|&e| Int::from(epsilon[e] as i64))
            .collect();
        IntMatrix::diagonal(&entries)
    }
}

pub fn admissible_orders(p: &CoherentPartition, m: &EdgeClassPartition) -> Orders {
    let vertex_order: Vec<usize> = p.classes.iter().flatten().copied().collect();
    let edge_order: Vec<usize> = m.classes.iter().flatten().copied().collect();
    let mut vertex_pos = vec![0usize; vertex_order.len()];
    for (pos, &v) in vertex_order.iter().enumerate() {
        vertex_pos[v] = pos;
    }
    let mut edge_pos = vec![0usize; edge_order.len()];
    for (pos, &e) in edge_order.iter().enumerate() {
        edge_pos[e] = pos;
    }
    Orders {
        vertex_order,
        vertex_pos,
        edge_order,
        edge_pos,
    }
}

/// Check that a proposed class order (a permutation of class indices)
/// linearizes the partial order: i comes before j whenever class i strictly
/// precedes class j.
pub fn validate_class_order(p: &CoherentPartition, order: &[usize]) -> Result<()> {
    if order.len() != p.class_count() {
        return Err(Error::InadmissibleOrder("wrong number of classes".into()));
    }
    let mut pos = vec![usize::MAX; order.len()];
    for (i, &c) in order.iter().enumerate() {
        if c >= order.len() || pos[c] != usize::MAX {
            return Err(Error::InadmissibleOrder(
                "not a permutation of the classes".into(),
            ));
        }
        pos[c] = i;
    }
    for a in 0..p.class_count() {
        for b in 0..p.class_count() {
            if a != b && p.prec[a][b] && pos[a] > pos[b] {
                return Err(Error::InadmissibleOrder(format!(
                    "class {a} precedes class {b} but is placed after it"
                )));
            }
        }
    }
    Ok(())
}

/// A graph automorphism with its induced data: edge permutation, inversion
/// signs w.r.t. the fixed vertex order, and the induced permutation of the
/// coherent components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAutomorphism {
    pub sigma: Vec<usize>,
    pub sigma_e: Vec<usize>,
    pub epsilon: Vec<i8>,
    pub p_sigma: Vec<usize>,
}

impl GraphAutomorphism {
    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycle notation on vertex labels, identity rendered as "id".
    pub fn cycles(&self, g: &Graph) -> String {
        let n = self.sigma.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.sigma[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.sigma[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.sigma[v];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|&v| g.label(v).to_owned())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

/// Enumerate all edge-preserving vertex permutations by backtracking with
/// degree pruning. Fails if |V| exceeds `bound`.
pub fn automorphism_sigmas(g: &Graph, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::EnumerationBound(n, bound));
    }
    let mut result = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(g, 0, &mut image, &mut used, &mut result);
    result.sort();
    Ok(result)
}

fn backtrack(
    g: &Graph,
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = g.vertex_count();
    if v == n {
        out.push(image.clone());
        return;
    }
    'cand: for c in 0..n {
        if used[c] || g.degree(c) != g.degree(v) {
            continue;
        }
        for u in 0..v {
            if g.is_edge(u, v) != g.is_edge(image[u], c) {
                continue 'cand;
            }
        }
        image[v] = c;
        used[c] = true;
        backtrack(g, v + 1, image, used, out);
        image[v] = usize::MAX;
        used[c] = false;
    }
}

/// Induced data of a vertex permutation: edge permutation, inversion signs
/// and the induced class permutation. Errors when sigma does not preserve
/// the edge set.
pub fn induced_edge_data(
    g: &Graph,
    p: &CoherentPartition,
    orders: &Orders,
    sigma: &[usize],
) -> Result<GraphAutomorphism> {
    let mut sigma_e = Vec::with_capacity(g.edge_count());
    let mut epsilon = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let (v, w) = orders.oriented_edge(g, e);
        let (sv, sw) = (sigma[v], sigma[w]);
        let f = g
            .edge_index(sv, sw)
            .ok_or_else(|| Error::NotAnAutomorphism(g.label(v).to_owned(), g.label(w).to_owned()))?;
        sigma_e.push(f);
        epsilon.push(if orders.vertex_pos[sv] > orders.vertex_pos[sw] {
            -1
        } else {
            1
        });
    }
    let mut p_sigma = vec![usize::MAX; p.class_count()];
    for (class, members) in p.classes.iter().enumerate() {
        let target = p.class_of[sigma[members[0]]];
        for &v in members {
            if p.class_of[sigma[v]] != target {
                return Err(Error::NotAnAutomorphism(
                    g.label(v).to_owned(),
                    g.label(sigma[v]).to_owned(),
                ));
            }
        }
        p_sigma[class] = target;
    }
    Ok(GraphAutomorphism {
        sigma: sigma.to_vec(),
        sigma_e,
        epsilon,
        p_sigma,
    })
}

/// Bundle of everything the later stages need: the graph, its partitions,
/// the quotient graph and the canonical admissible orders.
#[derive(Clone, Debug)]
pub struct GraphAnalysis {
    pub graph: Graph,
    pub components: CoherentPartition,
    pub edge_classes: EdgeClassPartition,
    pub quotient: QuotientGraph,
    pub orders: Orders,
}

impl GraphAnalysis {
    pub fn new(graph: Graph) -> Self {
        let components = coherent_components(&graph);
        let eclasses = edge_classes(&graph, &components);
        let quotient = quotient_graph(&graph, &components);
        let orders = admissible_orders(&components, &eclasses);
        GraphAnalysis {
            graph,
            components,
            edge_classes: eclasses,
            quotient,
            orders,
        }
    }

    /// Complete automorphism group with induced data, canonically sorted.
    pub fn automorphisms(&self, bound: usize) -> Result<Vec<GraphAutomorphism>> {
        automorphism_sigmas(&self.graph, bound)?
            .into_iter()
            .map(|sigma| induced_edge_data(&self.graph, &self.components, &self.orders, &sigma))
            .collect()
    }

    /// Hirsch number of the associated group: |V| + |E|.
    pub fn hirsch_number(&self) -> usize {
        self.graph.vertex_count() + self.graph.edge_count()
    }
}
