//! The degree-(1,2) graded Lie rings attached to graphs and to 2-step
//! presentations: brackets, matrices induced on the central part by
//! degree-one maps, membership in the graded automorphism group, the
//! weighted integrality gate, and isomorphism checking over Q(sqrt(d)).

use crate::error::{Error, Result};
use crate::group::{pair_count, pair_index, TwoStepPresentation};
use crate::matrix::{IntMatrix, Matrix, QuadMatrix, RatMatrix};
use crate::scalar::{check_square_free, FieldScalar, Int, Rat};
use crate::weighted::{weighted_automorphism_group, WeightedAnalysis};
use num_traits::{One, Zero};

/// Which basis the degree-2 coordinates refer to.
///
/// For the group of a weighted graph the central part carries two natural
/// lattice bases: the edge powers e^{k(e)} spanning the commutator subgroup
/// (`EdgePower`) and the edges themselves spanning its isolator (`Edge`).
/// The two are related by conjugation with the diagonal weight matrix.
/// `GenericY` tags the y-basis of an abstract presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    Edge,
    EdgePower,
    GenericY,
}

/// A 2-step graded Lie ring, recorded as its bracket table: one row per
/// generator pair (i, j), i < j, holding the degree-2 coordinates of
/// [x_i, x_j]. Degree-2 elements bracket to zero with everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLie2 {
    pub deg1: usize,
    pub deg2: usize,
    pub chart: Chart,
    /// pair_count(deg1) x deg2.
    pub table: IntMatrix,
}

impl GradedLie2 {
    /// Lie ring of the group of a weighted graph. In the `Edge` chart the
    /// bracket of an adjacent ordered pair is k(e) times the edge basis
    /// vector; in the `EdgePower` chart it is the basis vector itself.
    pub fn from_graph(wa: &WeightedAnalysis, chart: Chart) -> Self {
        assert!(chart != Chart::GenericY, "graph Lie rings use edge charts");
        let g = &wa.analysis.graph;
        let orders = &wa.analysis.orders;
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut table = IntMatrix::zeros(pair_count(n), m);
        for e in 0..m {
            let (v, w) = orders.oriented_edge(g, e);
            let (i, j) = (orders.vertex_pos[v], orders.vertex_pos[w]);
            let value = match chart {
                Chart::Edge => Int::from(wa.weighted.weight(e)),
                _ => Int::one(),
            };
            table.set(pair_index(n, i.min(j), i.max(j)), orders.edge_pos[e], value);
        }
        GradedLie2 {
            deg1: n,
            deg2: m,
            chart,
            table,
        }
    }

    /// Lie ring of a presentation: the y-basis is taken as the degree-2
    /// basis and the structure constants as the bracket table.
    pub fn from_presentation(p: &TwoStepPresentation) -> Self {
        GradedLie2 {
            deg1: p.rank_x(),
            deg2: p.rank_y(),
            chart: Chart::GenericY,
            table: p.structure_constants().clone(),
        }
    }

    /// Bilinear antisymmetric expansion of [u, w] through the table.
    pub fn bracket<S: FieldScalar>(&self, u: &[S], w: &[S]) -> Result<Vec<S>> {
        if u.len() != self.deg1 || w.len() != self.deg1 {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of lengths {} and {} in degree {}",
                u.len(),
                w.len(),
                self.deg1
            )));
        }
        let mut out = vec![S::f_zero(); self.deg2];
        for i in 0..self.deg1 {
            for j in i + 1..self.deg1 {
                let coeff = u[i].f_mul(&w[j]).f_sub(&u[j].f_mul(&w[i]));
                if coeff.f_is_zero() {
                    continue;
                }
                let row = pair_index(self.deg1, i, j);
                for l in 0..self.deg2 {
                    let entry = self.table.get(row, l);
                    if entry.is_zero() {
                        continue;
                    }
                    out[l] = out[l].f_add(&coeff.f_mul(&S::f_from_int(entry)));
                }
            }
        }
        Ok(out)
    }
}

/// Raw minor matrix of a degree-one map on the edge-power basis: column e
/// holds the edge coordinates of [B v, B w] for the ordered edge e = (v, w).
/// This is the matrix induced on the central part in the `EdgePower` chart.
pub fn induced_deg2_int(wa: &WeightedAnalysis, b: &IntMatrix) -> Result<IntMatrix> {
    let g = &wa.analysis.graph;
    let orders = &wa.analysis.orders;
    let n = g.vertex_count();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "degree-one map must be {n}x{n}"
        )));
    }
    let m = g.edge_count();
    let mut c = IntMatrix::zeros(m, m);
    for e in 0..m {
        let (v, w) = orders.oriented_edge(g, e);
        let (col_v, col_w) = (orders.vertex_pos[v], orders.vertex_pos[w]);
        for f in 0..m {
            let (p, q) = orders.oriented_edge(g, f);
            let (row_p, row_q) = (orders.vertex_pos[p], orders.vertex_pos[q]);
            let minor = b.get(row_p, col_v) * b.get(row_q, col_w)
                - b.get(row_q, col_v) * b.get(row_p, col_w);
            c.set(orders.edge_pos[f], orders.edge_pos[e], minor);
        }
    }
    Ok(c)
}

/// Matrix induced on degree 2 by a rational degree-one map, in the requested
/// chart: raw minors for `EdgePower`, conjugated by D(k) for `Edge`.
pub fn induced_deg2_matrix(
    wa: &WeightedAnalysis,
    b: &RatMatrix,
    chart: Chart,
) -> Result<RatMatrix> {
    if chart == Chart::GenericY {
        return Err(Error::InvalidInput(
            "induced degree-2 matrices are only defined for graph charts".into(),
        ));
    }
    let g = &wa.analysis.graph;
    let orders = &wa.analysis.orders;
    let n = g.vertex_count();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "degree-one map must be {n}x{n}"
        )));
    }
    let m = g.edge_count();
    let mut c = RatMatrix::zeros_field(m, m);
    for e in 0..m {
        let (v, w) = orders.oriented_edge(g, e);
        let (cv, cw) = (orders.vertex_pos[v], orders.vertex_pos[w]);
        for f in 0..m {
            let (p, q) = orders.oriented_edge(g, f);
            let (rp, rq) = (orders.vertex_pos[p], orders.vertex_pos[q]);
            let minor = b.get(rp, cv) * b.get(rq, cw) - b.get(rq, cv) * b.get(rp, cw);
            c.set(orders.edge_pos[f], orders.edge_pos[e], minor);
        }
    }
    match chart {
        Chart::EdgePower => Ok(c),
        Chart::Edge => {
            let k: Vec<Rat> = orders
                .edge_order
                .iter()
                .map(|&e| Rat::from_integer(Int::from(wa.weighted.weight(e))))
                .collect();
            let mut conj = RatMatrix::zeros_field(m, m);
            for r in 0..m {
                for s in 0..m {
                    let v = &k[r] * c.get(r, s) / &k[s];
                    conj.set(r, s, v);
                }
            }
            Ok(conj)
        }
        Chart::GenericY => unreachable!(),
    }
}

/// Gate a candidate degree-one map: it must be unimodular, every
/// non-adjacent pair must map onto a vanishing bracket, and the induced
/// central matrix must be unimodular. Returns that matrix (edge-power
/// chart) on success.
pub fn check_graded_endomorphism(wa: &WeightedAnalysis, b: &IntMatrix) -> Result<IntMatrix> {
    let g = &wa.analysis.graph;
    let orders = &wa.analysis.orders;
    let n = g.vertex_count();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "degree-one map must be {n}x{n}"
        )));
    }
    if !b.is_unimodular()? {
        return Err(Error::NotUnimodular(b.det()?.to_string()));
    }
    for v in 0..n {
        for w in v + 1..n {
            if g.is_edge(v, w) {
                continue;
            }
            let (cv, cw) = (orders.vertex_pos[v], orders.vertex_pos[w]);
            for f in 0..g.edge_count() {
                let (p, q) = orders.oriented_edge(g, f);
                let (rp, rq) = (orders.vertex_pos[p], orders.vertex_pos[q]);
                let minor = b.get(rp, cv) * b.get(rq, cw) - b.get(rq, cv) * b.get(rp, cw);
                if !minor.is_zero() {
                    return Err(Error::BracketViolation(
                        g.label(v).to_owned(),
                        g.label(w).to_owned(),
                    ));
                }
            }
        }
    }
    let c = induced_deg2_int(wa, b)?;
    if !c.is_unimodular()? {
        return Err(Error::CentralNotUnimodular);
    }
    Ok(c)
}

/// Result of the weighted integrality gate: the conjugate D(k) C D(k)^-1
/// over Q and whether it is integral.
#[derive(Clone, Debug)]
pub struct IntegralityCheck {
    pub ok: bool,
    pub conjugate: RatMatrix,
    /// First non-integral entry (row, col) in edge-order positions.
    pub violation: Option<(usize, usize)>,
}

/// Conjugate a central matrix from the edge-power chart to the edge chart
/// and test integrality. Unimodularity is preserved by conjugation, so
/// integrality alone decides the gate.
pub fn weighted_integrality(wa: &WeightedAnalysis, c: &IntMatrix) -> Result<IntegralityCheck> {
    let m = wa.analysis.graph.edge_count();
    if c.rows() != m || c.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "central matrix must be {m}x{m}"
        )));
    }
    let orders = &wa.analysis.orders;
    let k: Vec<Rat> = orders
        .edge_order
        .iter()
        .map(|&e| Rat::from_integer(Int::from(wa.weighted.weight(e))))
        .collect();
    let mut conj = RatMatrix::zeros_field(m, m);
    let mut violation = None;
    for r in 0..m {
        for s in 0..m {
            let v = Rat::from_integer(c.get(r, s).clone()) * &k[r] / &k[s];
            if violation.is_none() && !v.is_integer() {
                violation = Some((r, s));
            }
            conj.set(r, s, v);
        }
    }
    Ok(IntegralityCheck {
        ok: violation.is_none(),
        conjugate: conj,
        violation,
    })
}

/// Membership outcome for the graded automorphism group shape test.
#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    /// Induced permutation of the coherent components (unique when member).
    pub p_sigma: Option<Vec<usize>>,
    /// One vertex permutation realizing the factorization.
    pub witness_sigma: Option<Vec<usize>>,
}

/// Decide whether a rational matrix factors as P(sigma) times an invertible
/// block matrix whose (I, J) block vanishes unless component I precedes
/// component J. With `respect_weights`, sigma ranges over the subgroup
/// preserving the class determinant divisors.
pub fn g_gamma_membership(
    wa: &WeightedAnalysis,
    m: &RatMatrix,
    respect_weights: bool,
    bound: usize,
) -> Result<Membership> {
    let a = &wa.analysis;
    let n = a.graph.vertex_count();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!("matrix must be {n}x{n}")));
    }
    let auts = if respect_weights {
        weighted_automorphism_group(wa, bound)?
    } else {
        a.automorphisms(bound)?
    };
    let sizes = a.components.sizes();
    let mut offsets = vec![0usize; sizes.len() + 1];
    for (i, s) in sizes.iter().enumerate() {
        offsets[i + 1] = offsets[i] + s;
    }
    let mut found: Option<(Vec<usize>, Vec<usize>)> = None;
    for aut in &auts {
        let p = a.orders.vertex_perm_matrix(&aut.sigma);
        // P(sigma)^-1 = P(sigma)^T for a permutation matrix
        let u = p.transpose().to_rat().mul_field(m)?;
        if block_shape_ok(&u, &offsets, &a.components.prec)? {
            match &found {
                None => found = Some((aut.sigma.clone(), aut.p_sigma.clone())),
                Some((_, p_prev)) => {
                    // the induced component permutation is unique
                    assert_eq!(
                        p_prev, &aut.p_sigma,
                        "two admissible factorizations induced different component permutations"
                    );
                }
            }
        }
    }
    Ok(match found {
        Some((sigma, p_sigma)) => Membership {
            member: true,
            p_sigma: Some(p_sigma),
            witness_sigma: Some(sigma),
        },
        None => Membership {
            member: false,
            p_sigma: None,
            witness_sigma: None,
        },
    })
}

fn block_shape_ok(u: &RatMatrix, offsets: &[usize], prec: &[Vec<bool>]) -> Result<bool> {
    let k = offsets.len() - 1;
    for bi in 0..k {
        for bj in 0..k {
            if bi == bj {
                let idx: Vec<usize> = (offsets[bi]..offsets[bi + 1]).collect();
                if u.submatrix(&idx, &idx).det_field()?.is_zero() {
                    return Ok(false);
                }
            } else if !prec[bi][bj] {
                for r in offsets[bi]..offsets[bi + 1] {
                    for c in offsets[bj]..offsets[bj + 1] {
                        if !u.get(r, c).is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Decide whether a degree-one map over Q(sqrt(d)) extends to a graded
/// isomorphism src -> dst: the map must be invertible, the bracket images
/// must induce a well-defined degree-2 map, and that map must be bijective.
///
/// `map` sends the i-th src generator to the column-i combination of dst
/// generators. Only algebras whose degree-2 part is spanned by brackets are
/// recognized; otherwise no induced map exists and the answer is false.
pub fn quad_ext_iso_check(
    src: &GradedLie2,
    dst: &GradedLie2,
    map: &QuadMatrix,
    d: i64,
) -> Result<bool> {
    check_square_free(d)?;
    if src.deg1 != dst.deg1 || map.rows() != dst.deg1 || map.cols() != src.deg1 {
        return Err(Error::DimensionMismatch(format!(
            "degree-one map must be {}x{} with equal degree-1 dimensions",
            dst.deg1, src.deg1
        )));
    }
    if src.deg2 != dst.deg2 {
        return Ok(false);
    }
    if map.det_field()?.f_is_zero() {
        return Ok(false);
    }
    let pairs = pair_count(src.deg1);
    // S: src bracket coordinates per pair; W: dst bracket of the images
    let s = Matrix::from_fn(src.deg2, pairs, |r, c| {
        crate::scalar::QuadExt::f_from_int(src.table.get(c, r))
    });
    let mut w = QuadMatrix::zeros_field(dst.deg2, pairs);
    for i in 0..src.deg1 {
        for j in i + 1..src.deg1 {
            let img = dst.bracket(&map.col(i), &map.col(j))?;
            let idx = pair_index(src.deg1, i, j);
            for r in 0..dst.deg2 {
                w.set(r, idx, img[r].clone());
            }
        }
    }
    // solve T2 * S = W row by row; the solution is unique exactly when the
    // src brackets span degree 2
    if s.rank() < src.deg2 {
        return Ok(false);
    }
    let st = s.transpose();
    let mut t2 = QuadMatrix::zeros_field(src.deg2, src.deg2);
    for r in 0..src.deg2 {
        match st.solve(&w.row(r))? {
            None => return Ok(false),
            Some(x) => {
                for (cidx, v) in x.into_iter().enumerate() {
                    t2.set(r, cidx, v);
                }
            }
        }
    }
    if t2.mul_field(&s)? != w {
        return Ok(false);
    }
    Ok(!t2.det_field()?.f_is_zero())
}
