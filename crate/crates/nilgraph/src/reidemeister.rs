//! Twisted-conjugacy analysis: validating candidate automorphisms of the
//! graph groups, the eigenvalue-1 finiteness verdict, nilpotency-index
//! bounds, the three-way classifier, certification of the R-infinity
//! property for weighted graphs, and the search for automorphisms with
//! finitely many twisted conjugacy classes.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphAnalysis, GraphAutomorphism, DEFAULT_AUT_BOUND};
use crate::io::graph_hash;
use crate::lie::{check_graded_endomorphism, weighted_integrality};
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;
use crate::scalar::{Int, Rat};
use crate::weighted::{weighted_automorphism_group, WeightedAnalysis};

/// Default cap on the polynomial family used by the witness search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 3;

/// A validated automorphism of the group of a weighted graph, recorded by
/// its action on the vertex quotient (B) and on the commutator subgroup in
/// the edge-power basis (C).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismPair {
    pub b: IntMatrix,
    pub c: IntMatrix,
}

/// Finiteness verdict for the twisted conjugacy classes of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RVerdict {
    pub finite: bool,
    /// When infinite: an integer eigenvector of blockdiag(B, C) with
    /// eigenvalue 1.
    pub eigen_one_witness: Option<Vec<Int>>,
}

/// Gate a candidate vertex-quotient matrix through the graded-endomorphism
/// check and the weighted integrality check; on success both induced
/// matrices are returned.
pub fn validate_automorphism(wa: &WeightedAnalysis, b: &IntMatrix) -> Result<AutomorphismPair> {
    let c = check_graded_endomorphism(wa, b)?;
    let gate = weighted_integrality(wa, &c)?;
    if let Some((r, s)) = gate.violation {
        let g = &wa.analysis.graph;
        let orders = &wa.analysis.orders;
        let (ra, rb) = g.edge_labels(orders.edge_order[r]);
        let (ca, cb) = g.edge_labels(orders.edge_order[s]);
        return Err(Error::IntegralityViolation(
            format!("{{{ra}, {rb}}}"),
            format!("{{{ca}, {cb}}}"),
            gate.conjugate.get(r, s).to_string(),
        ));
    }
    Ok(AutomorphismPair {
        b: b.clone(),
        c,
    })
}

/// The twisted conjugacy classes of the automorphism are finite exactly
/// when neither induced matrix has eigenvalue 1.
pub fn r_verdict(pair: &AutomorphismPair) -> Result<RVerdict> {
    let b1 = pair.b.has_eigenvalue_one()?;
    let c1 = pair.c.has_eigenvalue_one()?;
    if !b1 && !c1 {
        return Ok(RVerdict {
            finite: true,
            eigen_one_witness: None,
        });
    }
    let n = pair.b.rows();
    let m = pair.c.rows();
    let block = IntMatrix::from_fn(n + m, n + m, |i, j| {
        if i < n && j < n {
            pair.b.get(i, j).clone()
        } else if i >= n && j >= n {
            pair.c.get(i - n, j - n).clone()
        } else {
            Int::zero()
        }
    });
    let shifted = block.sub(&IntMatrix::identity(n + m))?.to_rat();
    let kernel = shifted.kernel();
    let witness = kernel.first().map(|v| primitive_integer_vector(v));
    Ok(RVerdict {
        finite: false,
        eigen_one_witness: witness,
    })
}

fn primitive_integer_vector(v: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<Int> = v
        .iter()
        .map(|x| (x * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = Int::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Lower and upper bounds for the least nilpotency class at which the
/// associated free partially commutative groups acquire the R-infinity
/// property, read off the quotient graph.
pub fn nilpotency_bounds(a: &GraphAnalysis) -> Result<(u64, u64)> {
    if a.quotient.qedges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let mut xi = u64::MAX;
    let mut cap_xi = u64::MAX;
    for &(l1, l2) in &a.quotient.qedges {
        let (s1, s2) = (a.quotient.sizes[l1] as u64, a.quotient.sizes[l2] as u64);
        let (lo, hi) = if l1 == l2 {
            (2 * s1, 2 * s1)
        } else {
            (s1 + s2, (2 * s1 + s2).max(s1 + 2 * s2))
        };
        xi = xi.min(lo);
        cap_xi = cap_xi.min(hi);
    }
    Ok((xi, cap_xi))
}

/// The three cases of the classifier, decided from the subgraph induced on
/// the vertices lying in singleton coherent components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MainCase {
    /// No edge joins two singleton components: the unweighted group does
    /// NOT have the R-infinity property.
    NoRInfinity,
    /// Some such edge exists but the graph is not transposition-free: for
    /// every m >= 2 a weight function makes the property hold for an
    /// index-m overgroup.
    WeightsExist,
    /// The graph is transposition-free with at least one edge: the
    /// unweighted group has the R-infinity property.
    RInfinityCertified,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub case: MainCase,
    /// Vertices in singleton coherent components.
    pub gamma0_vertices: Vec<String>,
    /// Edges with both endpoints among those vertices.
    pub e0_edges: Vec<(String, String)>,
}

pub fn classify_main_theorem(a: &GraphAnalysis) -> Classification {
    let g = &a.graph;
    let singles: Vec<usize> = a.components.singleton_elements();
    let single_set: std::collections::BTreeSet<usize> = singles.iter().copied().collect();
    let e0: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (v, w) = g.edge(e);
            single_set.contains(&v) && single_set.contains(&w)
        })
        .collect();
    let case = if e0.is_empty() {
        MainCase::NoRInfinity
    } else if a.components.is_transposition_free() {
        MainCase::RInfinityCertified
    } else {
        MainCase::WeightsExist
    };
    Classification {
        case,
        gamma0_vertices: singles.iter().map(|&v| g.label(v).to_owned()).collect(),
        e0_edges: e0.iter().map(|&e| g.edge_labels(e)).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    /// All coherent components are singletons and the graph has edges.
    TranspositionFree,
    /// Every weight-compatible automorphism fixes a distinguished edge with
    /// singleton endpoints.
    PinnedEdge,
    /// Negative certificate: the lower nilpotency bound is at least 4, so
    /// the 2-step quotient cannot have the property.
    Bounds,
}

/// Transcript of one automorphism checked during certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaTranscript {
    /// Vertex images aligned with the sorted vertex labels.
    pub images: Vec<String>,
    pub cycles: String,
    pub e0_image: (String, String),
    pub fixes_e0: bool,
}

/// Machine-checkable evidence bundle; every claim can be recomputed from
/// the graph alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RInftyCertificate {
    pub kind: CertificateKind,
    pub graph_hash: String,
    pub pinned_edge: Option<(String, String)>,
    pub aut_order: Option<usize>,
    pub transcripts: Vec<SigmaTranscript>,
    pub xi_lower_bound: Option<u64>,
    pub singleton_classes: Option<Vec<String>>,
}

fn transcript_for(
    wa: &WeightedAnalysis,
    aut: &GraphAutomorphism,
    e0: usize,
) -> SigmaTranscript {
    let g = &wa.analysis.graph;
    let img = aut.sigma_e[e0];
    SigmaTranscript {
        images: aut.sigma.iter().map(|&v| g.label(v).to_owned()).collect(),
        cycles: aut.cycles(g),
        e0_image: g.edge_labels(img),
        fixes_e0: img == e0,
    }
}

/// Certify that the group of the weighted graph has the R-infinity
/// property, by exhibiting an edge with singleton endpoints that every
/// weight-compatible automorphism fixes. Fails when no candidate edge
/// exists or when some automorphism moves every candidate.
pub fn certify_weighted_rinfty(wa: &WeightedAnalysis, bound: usize) -> Result<RInftyCertificate> {
    let g = &wa.analysis.graph;
    let p = &wa.analysis.components;
    let candidates: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (v, w) = g.edge(e);
            p.classes[p.class_of[v]].len() == 1 && p.classes[p.class_of[w]].len() == 1
        })
        .collect();
    if candidates.is_empty() {
        return Err(Error::NoPinnableEdge);
    }
    let auts = weighted_automorphism_group(wa, bound)?;
    let mut first_violation: Option<(usize, &GraphAutomorphism)> = None;
    for &e0 in &candidates {
        match auts.iter().find(|aut| aut.sigma_e[e0] != e0) {
            None => {
                let transcripts: Vec<SigmaTranscript> =
                    auts.iter().map(|aut| transcript_for(wa, aut, e0)).collect();
                return Ok(RInftyCertificate {
                    kind: CertificateKind::PinnedEdge,
                    graph_hash: graph_hash(&wa.weighted),
                    pinned_edge: Some(g.edge_labels(e0)),
                    aut_order: Some(auts.len()),
                    transcripts,
                    xi_lower_bound: None,
                    singleton_classes: None,
                });
            }
            Some(aut) => {
                if first_violation.is_none() {
                    first_violation = Some((e0, aut));
                }
            }
        }
    }
    let (e0, aut) = first_violation.expect("candidates nonempty");
    let (a, b) = g.edge_labels(e0);
    let (ia, ib) = g.edge_labels(aut.sigma_e[e0]);
    Err(Error::PinnedEdgeMoved {
        sigma: aut.cycles(g),
        e0_a: a,
        e0_b: b,
        img_a: ia,
        img_b: ib,
    })
}

/// Certificate for a transposition-free graph with edges (positive), or a
/// bounds certificate (negative) when every component has size at least 2.
pub fn certify_graph_shape(wa: &WeightedAnalysis) -> Result<RInftyCertificate> {
    let a = &wa.analysis;
    if a.components.is_transposition_free() && a.graph.edge_count() > 0 {
        return Ok(RInftyCertificate {
            kind: CertificateKind::TranspositionFree,
            graph_hash: graph_hash(&wa.weighted),
            pinned_edge: None,
            aut_order: None,
            transcripts: vec![],
            xi_lower_bound: None,
            singleton_classes: Some(
                a.components
                    .singleton_elements()
                    .iter()
                    .map(|&v| a.graph.label(v).to_owned())
                    .collect(),
            ),
        });
    }
    let (xi, _) = nilpotency_bounds(a)?;
    if xi >= 4 {
        return Ok(RInftyCertificate {
            kind: CertificateKind::Bounds,
            graph_hash: graph_hash(&wa.weighted),
            pinned_edge: None,
            aut_order: None,
            transcripts: vec![],
            xi_lower_bound: Some(xi),
            singleton_classes: None,
        });
    }
    Err(Error::InvalidInput(
        "graph is neither transposition-free nor bounded below by 4".into(),
    ))
}

/// Re-run every check recorded in a certificate against the graph.
pub fn verify_certificate(wa: &WeightedAnalysis, cert: &RInftyCertificate) -> Result<()> {
    let mismatch = |msg: String| Err(Error::CertificateMismatch(msg));
    if cert.graph_hash != graph_hash(&wa.weighted) {
        return mismatch("graph hash differs".into());
    }
    match cert.kind {
        CertificateKind::TranspositionFree => {
            if !wa.analysis.components.is_transposition_free() {
                return mismatch("graph is not transposition-free".into());
            }
            if wa.analysis.graph.edge_count() == 0 {
                return mismatch("graph has no edges".into());
            }
            Ok(())
        }
        CertificateKind::Bounds => {
            let (xi, _) = nilpotency_bounds(&wa.analysis)?;
            if cert.xi_lower_bound != Some(xi) {
                return mismatch(format!("recorded lower bound differs from recomputed {xi}"));
            }
            if xi < 4 {
                return mismatch("recomputed lower bound is below 4".into());
            }
            Ok(())
        }
        CertificateKind::PinnedEdge => {
            let g = &wa.analysis.graph;
            let Some((ea, eb)) = &cert.pinned_edge else {
                return mismatch("pinned-edge certificate without a pinned edge".into());
            };
            let v = g.vertex_index(ea)?;
            let w = g.vertex_index(eb)?;
            let e0 = g
                .edge_index(v, w)
                .ok_or_else(|| Error::CertificateMismatch("pinned pair is not an edge".into()))?;
            let p = &wa.analysis.components;
            if p.classes[p.class_of[v]].len() != 1 || p.classes[p.class_of[w]].len() != 1 {
                return mismatch("pinned edge endpoints are not singleton components".into());
            }
            let auts = weighted_automorphism_group(wa, DEFAULT_AUT_BOUND)?;
            if cert.aut_order != Some(auts.len()) {
                return mismatch(format!(
                    "certificate lists {:?} automorphisms, enumeration found {}",
                    cert.aut_order,
                    auts.len()
                ));
            }
            let recomputed: Vec<SigmaTranscript> = auts
                .iter()
                .map(|aut| transcript_for(wa, aut, e0))
                .collect();
            if recomputed != cert.transcripts {
                return mismatch("transcripts do not reproduce bit-exactly".into());
            }
            if let Some(t) = recomputed.iter().find(|t| !t.fixes_e0) {
                return mismatch(format!("automorphism {} moves the pinned edge", t.cycles));
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Finite-R witness search
// ---------------------------------------------------------------------------

/// Polynomial family for the block construction: monic of the requested
/// degree, root product -1, no root at +-1, and no two roots multiplying to
/// 1. Conditions are enforced exactly through resultants.
pub fn witness_polynomial_pool(degree: usize, budget: u64) -> Vec<IntPoly> {
    assert!(degree >= 2);
    let mut pool = Vec::new();
    for m in 1..=budget as i64 {
        // x^d - m x^{d-1} + c0 with c0 chosen so the roots multiply to -1
        let c0: i64 = if degree.is_multiple_of(2) { -1 } else { 1 };
        let mut coeffs = vec![0i64; degree + 1];
        coeffs[0] = c0;
        coeffs[degree - 1] = -m;
        coeffs[degree] = 1;
        let p = IntPoly::from_i64(&coeffs);
        let one = Int::one();
        if p.eval(&one).is_zero() || p.eval(&(-one)).is_zero() {
            continue;
        }
        match p.resultant(&p.reverse()) {
            Ok(r) if !r.is_zero() => pool.push(p),
            _ => {}
        }
    }
    pool
}

/// Candidate generator of the witness search: P(sigma) times a block
/// diagonal with a companion block per non-singleton component and a sign
/// per singleton component. Candidates are produced in a fixed canonical
/// order.
pub fn witness_candidates(
    wa: &WeightedAnalysis,
    budget: u64,
    bound: usize,
) -> Result<Vec<(Vec<usize>, IntMatrix)>> {
    let a = &wa.analysis;
    let sizes = a.components.sizes();
    let auts = weighted_automorphism_group(wa, bound)?;

    // per-component block choices in canonical order
    let mut choices: Vec<Vec<IntMatrix>> = Vec::with_capacity(sizes.len());
    let mut choice_polys: Vec<Vec<Option<IntPoly>>> = Vec::with_capacity(sizes.len());
    for &s in &sizes {
        if s == 1 {
            choices.push(vec![
                IntMatrix::from_i64(&[&[-1]]),
                IntMatrix::from_i64(&[&[1]]),
            ]);
            choice_polys.push(vec![None, None]);
        } else {
            let pool = witness_polynomial_pool(s, budget);
            let mats: Vec<IntMatrix> = pool
                .iter()
                .map(|p| p.companion().expect("pool polynomials are monic"))
                .collect();
            choice_polys.push(pool.into_iter().map(Some).collect());
            choices.push(mats);
        }
    }
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(vec![]);
    }

    let mut out = Vec::new();
    let mut counter = vec![0usize; sizes.len()];
    'outer: loop {
        // cross-compatibility: no two chosen polynomials may have roots
        // multiplying to 1
        let chosen: Vec<&IntPoly> = counter
            .iter()
            .enumerate()
            .filter_map(|(c, &i)| choice_polys[c][i].as_ref())
            .collect();
        let mut compatible = true;
        'compat: for x in 0..chosen.len() {
            for y in x + 1..chosen.len() {
                if chosen[x] == chosen[y] {
                    continue;
                }
                let r = chosen[x].resultant(&chosen[y].reverse())?;
                if r.is_zero() {
                    compatible = false;
                    break 'compat;
                }
            }
        }
        if compatible {
            let blocks: Vec<IntMatrix> = counter
                .iter()
                .enumerate()
                .map(|(c, &i)| choices[c][i].clone())
                .collect();
            let diag = IntMatrix::block_diagonal(&blocks);
            for aut in &auts {
                let b = a.orders.vertex_perm_matrix(&aut.sigma).mul(&diag)?;
                out.push((aut.sigma.clone(), b));
            }
        }
        // advance the mixed-radix counter
        for c in 0..counter.len() {
            counter[c] += 1;
            if counter[c] < choices[c].len() {
                continue 'outer;
            }
            counter[c] = 0;
        }
        break;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// First candidate that validated with a finite verdict.
    pub witness: Option<(AutomorphismPair, RVerdict)>,
    /// Vertex permutation used by the witness.
    pub witness_sigma: Option<Vec<usize>>,
    pub candidates_generated: usize,
    /// Candidates that passed validation (screened-out ones are not
    /// validated at all).
    pub candidates_valid: usize,
    /// True when the whole candidate space was examined without a hit.
    pub exhausted: bool,
}

/// Search for an automorphism with finitely many twisted conjugacy classes
/// among the canonical candidates. Absence of a witness is a report, not an
/// error: the search space is the block construction, not all of Aut.
pub fn finite_r_witness_search(
    wa: &WeightedAnalysis,
    budget: u64,
    bound: usize,
) -> Result<SearchOutcome> {
    let candidates = witness_candidates(wa, budget, bound)?;
    let generated = candidates.len();
    let mut valid = 0usize;
    for (sigma, b) in candidates {
        // cheap screen: an eigenvalue 1 on the vertex quotient already
        // forces an infinite verdict, so skip the full validation
        if b.has_eigenvalue_one()? {
            continue;
        }
        let pair = match validate_automorphism(wa, &b) {
            Ok(p) => p,
            Err(_) => continue,
        };
        valid += 1;
        let verdict = r_verdict(&pair)?;
        if verdict.finite {
            return Ok(SearchOutcome {
                witness: Some((pair, verdict)),
                witness_sigma: Some(sigma),
                candidates_generated: generated,
                candidates_valid: valid,
                exhausted: false,
            });
        }
    }
    Ok(SearchOutcome {
        witness: None,
        witness_sigma: None,
        candidates_generated: generated,
        candidates_valid: valid,
        exhausted: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::weighted::{counterexample_weights, WeightedGraph};

    fn k2() -> WeightedAnalysis {
        let g = Graph::new(&["v1", "v2"], &[("v1", "v2")]).unwrap();
        WeightedAnalysis::new(WeightedGraph::unweighted(g))
    }

    fn path4() -> WeightedAnalysis {
        let g = Graph::new(
            &["v1", "v2", "v3", "v4"],
            &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")],
        )
        .unwrap();
        WeightedAnalysis::new(WeightedGraph::unweighted(g))
    }

    #[test]
    fn identity_is_valid_and_infinite() {
        for wa in [k2(), path4()] {
            let n = wa.analysis.graph.vertex_count();
            let pair = validate_automorphism(&wa, &IntMatrix::identity(n)).unwrap();
            let verdict = r_verdict(&pair).unwrap();
            assert!(!verdict.finite);
            let w = verdict.eigen_one_witness.unwrap();
            assert!(w.iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn heisenberg_fibonacci_is_finite() {
        let wa = k2();
        let b = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        let pair = validate_automorphism(&wa, &b).unwrap();
        assert_eq!(pair.c, IntMatrix::from_i64(&[&[-1]]));
        assert!(r_verdict(&pair).unwrap().finite);
    }

    #[test]
    fn bounds_examples() {
        // K2: one loop at a size-2 component
        assert_eq!(nilpotency_bounds(&k2().analysis).unwrap(), (4, 4));
        // path on 4 vertices: all components singletons
        assert_eq!(nilpotency_bounds(&path4().analysis).unwrap(), (2, 3));
        // no edges: error
        let g = Graph::new(&["a", "b"], &[]).unwrap();
        let wa = WeightedAnalysis::new(WeightedGraph::unweighted(g));
        assert!(matches!(
            nilpotency_bounds(&wa.analysis),
            Err(Error::EmptyEdgeSet)
        ));
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(classify_main_theorem(&k2().analysis).case, MainCase::NoRInfinity);
        assert_eq!(
            classify_main_theorem(&path4().analysis).case,
            MainCase::RInfinityCertified
        );
    }

    #[test]
    fn k2_search_finds_finite_witness() {
        let wa = k2();
        let outcome = finite_r_witness_search(&wa, DEFAULT_SEARCH_BUDGET, 12).unwrap();
        let (pair, verdict) = outcome.witness.expect("witness expected");
        assert!(verdict.finite);
        assert_eq!(pair.c, IntMatrix::from_i64(&[&[-1]]));
        assert_eq!(pair.b.char_poly().unwrap(), IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn path4_search_exhausts() {
        let wa = path4();
        let outcome = finite_r_witness_search(&wa, DEFAULT_SEARCH_BUDGET, 12).unwrap();
        assert!(outcome.witness.is_none());
        assert!(outcome.exhausted);
        assert!(outcome.candidates_generated > 0);
    }

    #[test]
    fn path4_pinned_edge_certificate() {
        // the middle edge of the path has singleton endpoints and is fixed
        // by both automorphisms
        let wa = path4();
        let cert = certify_weighted_rinfty(&wa, 12).unwrap();
        assert_eq!(cert.kind, CertificateKind::PinnedEdge);
        assert_eq!(
            cert.pinned_edge,
            Some(("v2".to_string(), "v3".to_string()))
        );
        assert_eq!(cert.aut_order, Some(2));
        verify_certificate(&wa, &cert).unwrap();
        // tampering is detected
        let mut bad = cert.clone();
        bad.transcripts[0].fixes_e0 = !bad.transcripts[0].fixes_e0;
        assert!(verify_certificate(&wa, &bad).is_err());
    }

    #[test]
    fn k2_has_no_pinnable_edge() {
        let wa = k2();
        assert!(matches!(
            certify_weighted_rinfty(&wa, 12),
            Err(Error::NoPinnableEdge)
        ));
    }

    #[test]
    fn shape_certificates() {
        let wa = path4();
        let cert = certify_graph_shape(&wa).unwrap();
        assert_eq!(cert.kind, CertificateKind::TranspositionFree);
        verify_certificate(&wa, &cert).unwrap();

        let wa = k2();
        let cert = certify_graph_shape(&wa).unwrap();
        assert_eq!(cert.kind, CertificateKind::Bounds);
        assert_eq!(cert.xi_lower_bound, Some(4));
        verify_certificate(&wa, &cert).unwrap();
    }

    #[test]
    fn weighted_path_certificate_roundtrip_json() {
        let g = path4().analysis.graph.clone();
        let v2 = g.vertex_index("v2").unwrap();
        let v3 = g.vertex_index("v3").unwrap();
        let e = g.edge_index(v2, v3).unwrap();
        let wg = counterexample_weights(&g, e, 5).unwrap();
        let wa = WeightedAnalysis::new(wg);
        let cert = certify_weighted_rinfty(&wa, 12).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: RInftyCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(cert, back);
        verify_certificate(&wa, &back).unwrap();
    }

    #[test]
    fn polynomial_pool_respects_constraints() {
        for d in 2..=4usize {
            for p in witness_polynomial_pool(d, 5) {
                assert!(p.is_monic());
                assert_eq!(p.degree(), Some(d));
                assert!(!p.eval(&Int::one()).is_zero());
                assert!(!p.eval(&Int::from(-1)).is_zero());
                assert!(!p.resultant(&p.reverse()).unwrap().is_zero());
                // root product is -1: constant term is -(+1)^d
                let c0 = p.constant_term();
                let prod = if d % 2 == 0 { c0.clone() } else { -c0.clone() };
                assert_eq!(prod, Int::from(-1));
            }
        }
    }
}
