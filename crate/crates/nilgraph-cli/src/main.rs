//! Command-line front end: graph analysis, automorphism checking,
//! twisted-conjugacy verdicts, certification and the reproduction driver.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilgraph::catalog;
use nilgraph::graph::{GraphAnalysis, DEFAULT_AUT_BOUND};
use nilgraph::group::{
    check_presentation_automorphism, group_h, group_h_automorphism, presentation_from_graph,
    structural_subgroups, GroupElement,
};
use nilgraph::io::{
    graph_hash, int_matrix_from_json, int_matrix_to_json, weighted_graph_from_json,
    weighted_graph_to_canonical_json,
};
use nilgraph::lie::{quad_ext_iso_check, Chart, GradedLie2};
use nilgraph::matrix::{IntMatrix, Matrix};
use nilgraph::poly::IntPoly;
use nilgraph::reidemeister::{
    certify_graph_shape, certify_weighted_rinfty, classify_main_theorem, finite_r_witness_search,
    nilpotency_bounds, r_verdict, validate_automorphism, verify_certificate, CertificateKind,
    MainCase, RVerdict, DEFAULT_SEARCH_BUDGET,
};
use nilgraph::scalar::{rat, FieldScalar, QuadExt};
use nilgraph::snf::smith_normal_form;
use nilgraph::weighted::{class_d_profile, weighted_automorphism_group, WeightedAnalysis};

#[derive(Parser)]
#[command(
    name = "nilgraph",
    about = "2-step nilpotent groups of edge-weighted graphs: exact analysis and twisted-conjugacy certification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderSeed {
    /// Canonical orders: topological on classes, lexicographic tie-breaks.
    Lexicographic,
}

#[derive(Args)]
struct CommonOpts {
    /// Emit machine-readable JSON instead of a textual report.
    #[arg(long, global = true)]
    json: bool,
    /// Tie-breaking rule for the admissible total orders.
    #[arg(long, value_enum, default_value = "lexicographic", global = true)]
    order_seed: OrderSeed,
}

#[derive(Subcommand)]
enum Command {
    /// Coherent components, edge classes, quotient graph, orders, Hirsch number.
    Analyze {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
        /// Also print DOT renderings.
        #[arg(long)]
        dot: bool,
    },
    /// Quotient graph only.
    Quotient {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        dot: bool,
    },
    /// Graph automorphisms and the weight-compatible subgroup.
    Aut {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Validate a vertex-quotient matrix as a group automorphism and report
    /// the induced central matrix and the twisted-conjugacy verdict.
    Check {
        graph: String,
        matrix: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Twisted-conjugacy finiteness verdict for a validated matrix.
    Rinf {
        graph: String,
        matrix: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Lower/upper bounds for the critical nilpotency class.
    Bounds {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Classify the graph and certify the R-infinity property when possible.
    Certify {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Search for an automorphism with finitely many twisted conjugacy classes.
    Search {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
        /// Size of the polynomial family for companion blocks.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        matrix: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Re-run a named built-in scenario and print its checks.
    Reproduce {
        /// One of: figure1, heisenberg, main-counterexample, remark-quadext,
        /// remark-H-finiteR, path4
        id: String,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &str) -> Result<WeightedAnalysis, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let wg = weighted_graph_from_json(&text).map_err(|e| e.to_string())?;
    Ok(WeightedAnalysis::new(wg))
}

fn load_matrix(path: &str) -> Result<IntMatrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    int_matrix_from_json(&text).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Analyze { graph, common, dot } => cmd_analyze(&graph, common.json, dot),
        Command::Quotient { graph, common, dot } => cmd_quotient(&graph, common.json, dot),
        Command::Aut { graph, common } => cmd_aut(&graph, common.json),
        Command::Check {
            graph,
            matrix,
            common,
        } => cmd_check(&graph, &matrix, common.json, true),
        Command::Rinf {
            graph,
            matrix,
            common,
        } => cmd_check(&graph, &matrix, common.json, false),
        Command::Bounds { graph, common } => cmd_bounds(&graph, common.json),
        Command::Certify { graph, common } => cmd_certify(&graph, common.json),
        Command::Search {
            graph,
            common,
            budget,
        } => cmd_search(&graph, common.json, budget),
        Command::Snf { matrix, common } => cmd_snf(&matrix, common.json),
        Command::Reproduce { id, common } => cmd_reproduce(&id, common.json),
    }
}

fn class_labels(a: &GraphAnalysis, members: &[usize]) -> Vec<String> {
    members
        .iter()
        .map(|&v| a.graph.label(v).to_owned())
        .collect()
}

fn edge_class_labels(a: &GraphAnalysis, members: &[usize]) -> Vec<(String, String)> {
    members.iter().map(|&e| a.graph.edge_labels(e)).collect()
}

fn cmd_analyze(path: &str, as_json: bool, dot: bool) -> Result<ExitCode, String> {
    let wa = load_graph(path)?;
    let a = &wa.analysis;
    let relations: Vec<(usize, usize)> = (0..a.components.class_count())
        .flat_map(|x| (0..a.components.class_count()).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && a.components.prec[x][y])
        .collect();
    let (iso, _) = a.graph.isolated_vertices();
    if as_json {
        let out = json!({
            "graph": serde_json::from_str::<serde_json::Value>(
                &weighted_graph_to_canonical_json(&wa.weighted)).unwrap(),
            "coherent_components": a.components.classes.iter()
                .map(|c| class_labels(a, c)).collect::<Vec<_>>(),
            "component_relations": relations.iter()
                .map(|&(x, y)| json!([x + 1, y + 1])).collect::<Vec<_>>(),
            "edge_classes": a.edge_classes.classes.iter()
                .map(|c| edge_class_labels(a, c)).collect::<Vec<_>>(),
            "quotient": {
                "sizes": a.quotient.sizes,
                "edges": a.quotient.qedges.iter()
                    .map(|&(x, y)| json!([x + 1, y + 1])).collect::<Vec<_>>(),
            },
            "vertex_order": a.orders.vertex_order.iter()
                .map(|&v| a.graph.label(v)).collect::<Vec<_>>(),
            "edge_order": a.orders.edge_order.iter()
                .map(|&e| a.graph.edge_labels(e)).collect::<Vec<_>>(),
            "isolated_vertices": iso,
            "hirsch_number": a.hirsch_number(),
            "graph_hash": graph_hash(&wa.weighted),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "graph: {} vertices, {} edges",
        a.graph.vertex_count(),
        a.graph.edge_count()
    );
    println!("coherent components:");
    for (i, c) in a.components.classes.iter().enumerate() {
        println!(
            "  L{} = {{{}}}  (size {})",
            i + 1,
            class_labels(a, c).join(", "),
            c.len()
        );
    }
    if relations.is_empty() {
        println!("component order: trivial");
    } else {
        let rel: Vec<String> = relations
            .iter()
            .map(|&(x, y)| format!("L{} < L{}", x + 1, y + 1))
            .collect();
        println!("component order: {}", rel.join(", "));
    }
    println!("edge classes:");
    for (i, c) in a.edge_classes.classes.iter().enumerate() {
        let pairs: Vec<String> = edge_class_labels(a, c)
            .iter()
            .map(|(x, y)| format!("{{{x}, {y}}}"))
            .collect();
        println!("  M{} = {{{}}}", i + 1, pairs.join(", "));
    }
    println!("quotient graph: sizes {:?}", a.quotient.sizes);
    for &(x, y) in &a.quotient.qedges {
        if x == y {
            println!("  loop at L{}", x + 1);
        } else {
            println!("  L{} -- L{}", x + 1, y + 1);
        }
    }
    let vorder: Vec<&str> = a
        .orders
        .vertex_order
        .iter()
        .map(|&v| a.graph.label(v))
        .collect();
    println!("vertex order: {}", vorder.join(" < "));
    let eorder: Vec<String> = a
        .orders
        .edge_order
        .iter()
        .map(|&e| {
            let (x, y) = a.graph.edge_labels(e);
            format!("{{{x}, {y}}}")
        })
        .collect();
    println!("edge order: {}", eorder.join(" < "));
    println!("isolated vertices: {iso:?}");
    if !iso.is_empty() {
        println!(
            "the group splits off a free abelian factor of rank {}; the rest is the group of the stripped graph",
            iso.len()
        );
    }
    println!("hirsch number: {}", a.hirsch_number());
    if dot {
        println!("--- graph.dot ---");
        print!("{}", a.graph.to_dot(Some(wa.weighted.weights())));
        println!("--- quotient.dot ---");
        print!("{}", a.quotient.to_dot());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_quotient(path: &str, as_json: bool, dot: bool) -> Result<ExitCode, String> {
    let wa = load_graph(path)?;
    let a = &wa.analysis;
    if as_json {
        let out = json!({
            "sizes": a.quotient.sizes,
            "edges": a.quotient.qedges.iter()
                .map(|&(x, y)| json!([x + 1, y + 1])).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    println!("quotient graph: sizes {:?}", a.quotient.sizes);
    for &(x, y) in &a.quotient.qedges {
        if x == y {
            println!("  loop at L{}", x + 1);
        } else {
            println!("  L{} -- L{}", x + 1, y + 1);
        }
    }
    if dot {
        print!("{}", a.quotient.to_dot());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_aut(path: &str, as_json: bool) -> Result<ExitCode, String> {
    let wa = load_graph(path)?;
    let a = &wa.analysis;
    let full = a
        .automorphisms(DEFAULT_AUT_BOUND)
        .map_err(|e| e.to_string())?;
    let weighted =
        weighted_automorphism_group(&wa, DEFAULT_AUT_BOUND).map_err(|e| e.to_string())?;
    let profiles: Vec<Vec<String>> = a
        .edge_classes
        .classes
        .iter()
        .map(|c| {
            class_d_profile(&wa.weighted, c)
                .map(|p| p.iter().map(|d| d.to_string()).collect())
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    if as_json {
        let out = json!({
            "aut_order": full.len(),
            "aut": full.iter().map(|s| s.cycles(&a.graph)).collect::<Vec<_>>(),
            "weighted_aut_order": weighted.len(),
            "weighted_aut": weighted.iter().map(|s| s.cycles(&a.graph)).collect::<Vec<_>>(),
            "class_d_profiles": profiles,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    println!("|Aut(graph)| = {}", full.len());
    for s in &full {
        println!("  {}", s.cycles(&a.graph));
    }
    if wa.weighted.is_unweighted() {
        println!("all weights are 1: the weight-compatible subgroup is the full group");
    } else {
        println!("|Aut(weighted graph)| = {}", weighted.len());
        for s in &weighted {
            println!("  {}", s.cycles(&a.graph));
        }
        println!("determinant-divisor profiles per edge class:");
        for (i, p) in profiles.iter().enumerate() {
            println!("  M{}: ({})", i + 1, p.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_json(v: &RVerdict) -> serde_json::Value {
    json!({
        "finite": v.finite,
        "eigen_one_witness": v.eigen_one_witness.as_ref().map(|w| {
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        }),
    })
}

fn cmd_check(
    graph_path: &str,
    matrix_path: &str,
    as_json: bool,
    full_report: bool,
) -> Result<ExitCode, String> {
    let wa = load_graph(graph_path)?;
    let b = load_matrix(matrix_path)?;
    match validate_automorphism(&wa, &b) {
        Err(e) => {
            if as_json {
                let out = json!({"valid": false, "reason": e.to_string()});
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("invalid: {e}");
            }
            Ok(ExitCode::from(3))
        }
        Ok(pair) => {
            let verdict = r_verdict(&pair).map_err(|e| e.to_string())?;
            if as_json {
                let mut out = json!({
                    "valid": true,
                    "verdict": verdict_json(&verdict),
                });
                if full_report {
                    out["central_matrix"] = int_matrix_to_json(&pair.c);
                    out["char_poly_b"] =
                        json!(pair.b.char_poly().map_err(|e| e.to_string())?.to_string());
                    out["char_poly_c"] =
                        json!(pair.c.char_poly().map_err(|e| e.to_string())?.to_string());
                }
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("valid automorphism");
                if full_report {
                    println!("induced central matrix (edge-power basis): {:?}", pair.c);
                    println!(
                        "char poly of B: {}",
                        pair.b.char_poly().map_err(|e| e.to_string())?
                    );
                    println!(
                        "char poly of C: {}",
                        pair.c.char_poly().map_err(|e| e.to_string())?
                    );
                }
                if verdict.finite {
                    println!("twisted conjugacy classes: FINITE (no eigenvalue 1)");
                } else {
                    println!("twisted conjugacy classes: INFINITE (eigenvalue 1 present)");
                    if let Some(w) = &verdict.eigen_one_witness {
                        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                        println!("eigenvector witness: [{}]", ws.join(", "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_bounds(path: &str, as_json: bool) -> Result<ExitCode, String> {
    let wa = load_graph(path)?;
    let (xi, cap) = nilpotency_bounds(&wa.analysis).map_err(|e| e.to_string())?;
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"xi": xi, "Xi": cap})).unwrap()
        );
    } else {
        println!("critical nilpotency class bounds: {xi} <= c <= {cap}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(path: &str, as_json: bool) -> Result<ExitCode, String> {
    let wa = load_graph(path)?;
    let class = classify_main_theorem(&wa.analysis);
    match class.case {
        MainCase::RInfinityCertified => {
            let cert = certify_graph_shape(&wa).map_err(|e| e.to_string())?;
            verify_certificate(&wa, &cert).map_err(|e| e.to_string())?;
            if as_json {
                let out = json!({
                    "case": "iii",
                    "statement": "the group has the R-infinity property",
                    "certificate": cert,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("case (iii): transposition-free with edges");
                println!("R-infinity property: CERTIFIED (kind: transposition-free)");
            }
            Ok(ExitCode::SUCCESS)
        }
        MainCase::WeightsExist => {
            if wa.weighted.is_unweighted() {
                if as_json {
                    let out = json!({
                        "case": "ii",
                        "statement": "weight functions exist making the property hold",
                        "pinnable_edges": class.e0_edges,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                } else {
                    println!("case (ii): singleton-component edges exist but the graph is not transposition-free");
                    println!("for every m >= 2 a weight function yields an index-m overgroup with the R-infinity property");
                    for (x, y) in &class.e0_edges {
                        println!("  pinnable edge: {{{x}, {y}}}");
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            match certify_weighted_rinfty(&wa, DEFAULT_AUT_BOUND) {
                Ok(cert) => {
                    verify_certificate(&wa, &cert).map_err(|e| e.to_string())?;
                    if as_json {
                        let out = json!({
                            "case": "ii",
                            "statement": "the weighted group has the R-infinity property",
                            "certificate": cert,
                        });
                        println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    } else {
                        let (x, y) = cert.pinned_edge.clone().unwrap();
                        println!("case (ii) with weights: R-infinity CERTIFIED");
                        println!(
                            "pinned edge {{{x}, {y}}} is fixed by all {} weight-compatible automorphisms",
                            cert.aut_order.unwrap()
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    if as_json {
                        let out = json!({"case": "ii", "refusal": e.to_string()});
                        println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    } else {
                        println!("certification refused: {e}");
                    }
                    Ok(ExitCode::from(4))
                }
            }
        }
        MainCase::NoRInfinity => {
            if let Ok(cert) = certify_graph_shape(&wa) {
                if cert.kind == CertificateKind::Bounds {
                    verify_certificate(&wa, &cert).map_err(|e| e.to_string())?;
                    if as_json {
                        let out = json!({
                            "case": "i",
                            "statement": "the group does NOT have the R-infinity property",
                            "certificate": cert,
                        });
                        println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    } else {
                        println!("case (i): no edge joins two singleton components");
                        println!(
                            "R-infinity property: ABSENT (lower nilpotency bound {} >= 4)",
                            cert.xi_lower_bound.unwrap()
                        );
                    }
                    return Ok(ExitCode::SUCCESS);
                }
            }
            let outcome = finite_r_witness_search(&wa, DEFAULT_SEARCH_BUDGET, DEFAULT_AUT_BOUND)
                .map_err(|e| e.to_string())?;
            match outcome.witness {
                Some((pair, _)) => {
                    if as_json {
                        let out = json!({
                            "case": "i",
                            "statement": "the group does NOT have the R-infinity property",
                            "witness_b": int_matrix_to_json(&pair.b),
                            "witness_c": int_matrix_to_json(&pair.c),
                        });
                        println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    } else {
                        println!("case (i): no edge joins two singleton components");
                        println!(
                            "R-infinity property: ABSENT (explicit finite-R automorphism found)"
                        );
                        println!("witness B: {:?}", pair.b);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if as_json {
                        let out = json!({
                            "case": "i",
                            "statement": "inconclusive: witness search exhausted",
                            "candidates": outcome.candidates_generated,
                        });
                        println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    } else {
                        println!(
                            "case (i), but the witness search exhausted {} candidates without a finite verdict",
                            outcome.candidates_generated
                        );
                    }
                    Ok(ExitCode::from(4))
                }
            }
        }
    }
}

fn cmd_search(path: &str, as_json: bool, budget: u64) -> Result<ExitCode, String> {
    let wa = load_graph(path)?;
    let outcome =
        finite_r_witness_search(&wa, budget, DEFAULT_AUT_BOUND).map_err(|e| e.to_string())?;
    match &outcome.witness {
        Some((pair, verdict)) => {
            if as_json {
                let out = json!({
                    "found": true,
                    "b": int_matrix_to_json(&pair.b),
                    "c": int_matrix_to_json(&pair.c),
                    "verdict": verdict_json(verdict),
                    "candidates_generated": outcome.candidates_generated,
                    "candidates_valid": outcome.candidates_valid,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("finite-R automorphism found");
                println!("B = {:?}", pair.b);
                println!("C = {:?}", pair.c);
                println!(
                    "char polys: B: {}; C: {}",
                    pair.b.char_poly().map_err(|e| e.to_string())?,
                    pair.c.char_poly().map_err(|e| e.to_string())?
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            if as_json {
                let out = json!({
                    "found": false,
                    "exhausted": outcome.exhausted,
                    "candidates_generated": outcome.candidates_generated,
                    "candidates_valid": outcome.candidates_valid,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "no finite-R witness among {} candidates ({} valid); consistent with the R-infinity property",
                    outcome.candidates_generated, outcome.candidates_valid
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_snf(path: &str, as_json: bool) -> Result<ExitCode, String> {
    let m = load_matrix(path)?;
    let snf = smith_normal_form(&m);
    let check = snf
        .u
        .mul(&m)
        .and_then(|um| um.mul(&snf.v))
        .map_err(|e| e.to_string())?;
    if check != snf.s {
        return Err("internal error: U*M*V != S".into());
    }
    if as_json {
        let out = json!({
            "s": int_matrix_to_json(&snf.s),
            "u": int_matrix_to_json(&snf.u),
            "v": int_matrix_to_json(&snf.v),
            "diagonal": snf.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("S = {:?}", snf.s);
        println!("U = {:?}", snf.u);
        println!("V = {:?}", snf.v);
        println!("U*M*V = S verified");
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// Reproduction driver
// ---------------------------------------------------------------------------

struct Checker {
    failures: usize,
    results: Vec<(String, bool)>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            failures: 0,
            results: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        println!("{}: {}", name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
        self.results.push((name.to_owned(), ok));
    }

    fn finish(self, as_json: bool) -> ExitCode {
        if as_json {
            let out = json!({
                "checks": self.results.iter()
                    .map(|(n, ok)| json!({"name": n, "pass": ok})).collect::<Vec<_>>(),
                "failures": self.failures,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        if self.failures == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        }
    }
}

fn cmd_reproduce(id: &str, as_json: bool) -> Result<ExitCode, String> {
    let mut c = Checker::new();
    match id {
        "figure1" => reproduce_figure1(&mut c),
        "heisenberg" => reproduce_heisenberg(&mut c),
        "main-counterexample" => reproduce_counterexample(&mut c),
        "remark-quadext" => reproduce_quadext(&mut c),
        "remark-H-finiteR" => reproduce_group_h(&mut c),
        "path4" => reproduce_path4(&mut c),
        other => return Err(format!("unknown scenario '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    Ok(c.finish(as_json))
}

fn reproduce_figure1(c: &mut Checker) -> nilgraph::Result<()> {
    let a = GraphAnalysis::new(catalog::figure1());
    let classes: Vec<Vec<String>> = a
        .components
        .classes
        .iter()
        .map(|m| class_labels(&a, m))
        .collect();
    c.check(
        "coherent components {v1,v2},{v3,v4},{v5},{v6}",
        classes
            == vec![
                vec!["v1".to_string(), "v2".to_string()],
                vec!["v3".to_string(), "v4".to_string()],
                vec!["v5".to_string()],
                vec!["v6".to_string()],
            ],
    );
    let mut strict = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            if x != y && a.components.prec[x][y] {
                strict.push((x + 1, y + 1));
            }
        }
    }
    c.check(
        "component relations L1<L3, L2<L3, L2<L4",
        strict == vec![(1, 3), (2, 3), (2, 4)],
    );
    c.check(
        "quotient graph has exactly one self-loop",
        a.quotient.qedges.iter().filter(|&&(x, y)| x == y).count() == 1,
    );
    let eclasses: std::collections::BTreeSet<Vec<(String, String)>> = a
        .edge_classes
        .classes
        .iter()
        .map(|m| edge_class_labels(&a, m))
        .collect();
    let want: std::collections::BTreeSet<Vec<(String, String)>> = [
        vec![("v1", "v5"), ("v2", "v5")],
        vec![("v3", "v6"), ("v4", "v6")],
        vec![("v1", "v2")],
        vec![("v5", "v6")],
    ]
    .into_iter()
    .map(|v| {
        v.into_iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect()
    })
    .collect();
    c.check("edge classes {e1,e2},{e3,e4},{e5},{e6}", eclasses == want);
    c.check("hirsch number 12", a.hirsch_number() == 12);
    Ok(())
}

fn reproduce_heisenberg(c: &mut Checker) -> nilgraph::Result<()> {
    for n in [1u64, 2, 3] {
        let wg = catalog::k2_weighted(n);
        let wa = WeightedAnalysis::new(wg.clone());
        let p = presentation_from_graph(&wg, &wa.analysis.orders);
        // oracle: 3x3 unitriangular matrices (x, y, z) with top entry n*x
        let mul = |a: (i64, i64, i64), b: (i64, i64, i64)| {
            (a.0 + b.0, a.1 + b.1, a.2 + b.2 + n as i64 * a.0 * b.1)
        };
        let to_mat = |e: &GroupElement| {
            let z1 = i64::try_from(&e.z[0]).unwrap();
            let z2 = i64::try_from(&e.z[1]).unwrap();
            let t = i64::try_from(&e.t[0]).unwrap();
            (z1, z2, n as i64 * z1 * z2 + t)
        };
        let mut state = 0x9e3779b97f4a7c15u64 ^ n;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 21) as i64 - 10
        };
        let mut ok = true;
        for _ in 0..200 {
            let a = GroupElement::from_i64(&[next(), next()], &[next()]);
            let b = GroupElement::from_i64(&[next(), next()], &[next()]);
            let prod = p.multiply(&a, &b)?;
            if to_mat(&prod) != mul(to_mat(&a), to_mat(&b)) {
                ok = false;
                break;
            }
        }
        c.check(
            &format!("n={n}: 200 random products match the matrix model"),
            ok,
        );
        let report = structural_subgroups(&p, Some(&wg))?;
        let torsion_ok = if n == 1 {
            report.abelianization_torsion.is_empty()
        } else {
            report.abelianization_torsion == vec![nilgraph::Int::from(n)]
        };
        c.check(
            &format!("n={n}: abelianization is Z^2 x Z/{n}"),
            report.abelianization_free_rank == 2 && torsion_ok,
        );
        c.check(
            &format!("n={n}: unweighted subgroup has index {n}"),
            report.unweighted_index == Some(nilgraph::Int::from(n))
                && report.gamma2_index_in_sqrt == nilgraph::Int::from(n),
        );
    }
    Ok(())
}

fn reproduce_counterexample(c: &mut Checker) -> nilgraph::Result<()> {
    let wa = WeightedAnalysis::new(nilgraph::weighted::WeightedGraph::unweighted(
        catalog::counterexample_graph(),
    ));
    let auts = wa.analysis.automorphisms(DEFAULT_AUT_BOUND)?;
    println!("|Aut(graph)| = {}", auts.len());
    println!(
        "generators include {}",
        auts.iter()
            .map(|s| s.cycles(&wa.analysis.graph))
            .find(|cy| cy.contains("(v1 v5)"))
            .unwrap_or_default()
    );
    c.check("|Aut(graph)| = 16", auts.len() == 16);
    let b = catalog::counterexample_b();
    let pair = validate_automorphism(&wa, &b)?;
    c.check("9x9 matrix B validates as an automorphism (weights 1)", true);
    println!("induced central matrix C = {:?}", pair.c);
    c.check(
        "induced central matrix equals the displayed 8x8 matrix",
        pair.c == catalog::counterexample_c(),
    );
    let char_b = pair.b.char_poly()?;
    let char_c = pair.c.char_poly()?;
    println!("char(B) = {char_b}");
    println!("char(C) = {char_c}");
    let expect_b = IntPoly::from_i64(&[1, -3, 1])
        .mul(&IntPoly::from_i64(&[1, 0, -3, 0, 1]))
        .mul(&IntPoly::from_i64(&[1, 1]))
        .mul(&IntPoly::from_i64(&[1, 0, 1]));
    let expect_c = IntPoly::from_i64(&[1, 3, 1])
        .mul(&IntPoly::from_i64(&[1, 0, 3, 0, 1]))
        .mul(&IntPoly::from_i64(&[1, 0, 1]));
    c.check(
        "char(B) = (x^2-3x+1)(x^4-3x^2+1)(x+1)(x^2+1)",
        char_b == expect_b,
    );
    c.check(
        "char(C) = (x^2+3x+1)(x^4+3x^2+1)(x^2+1)",
        char_c == expect_c,
    );
    c.check("verdict: finite twisted conjugacy", r_verdict(&pair)?.finite);

    for n in [2u64, 3, 4, 5] {
        let wan = WeightedAnalysis::new(catalog::counterexample_weighted(n));
        let rejected = matches!(
            validate_automorphism(&wan, &b),
            Err(nilgraph::Error::IntegralityViolation(..))
        );
        c.check(
            &format!("weight {n}: B rejected at the integrality gate"),
            rejected,
        );
        let wauts = weighted_automorphism_group(&wan, DEFAULT_AUT_BOUND)?;
        let g = &wan.analysis.graph;
        let e7 = g
            .edge_index(g.vertex_index("v7")?, g.vertex_index("v8")?)
            .expect("spine edge");
        c.check(
            &format!("weight {n}: weight-compatible subgroup has order 8, all fixing {{v7,v8}}"),
            wauts.len() == 8 && wauts.iter().all(|s| s.sigma_e[e7] == e7),
        );
        let cert = certify_weighted_rinfty(&wan, DEFAULT_AUT_BOUND)?;
        verify_certificate(&wan, &cert)?;
        c.check(
            &format!("weight {n}: R-infinity certificate issued and re-verified"),
            true,
        );
        let p = presentation_from_graph(&wan.weighted, &wan.analysis.orders);
        let report = structural_subgroups(&p, Some(&wan.weighted))?;
        c.check(
            &format!("weight {n}: unweighted subgroup has index {n}"),
            report.unweighted_index == Some(nilgraph::Int::from(n)),
        );
    }
    Ok(())
}

fn reproduce_quadext(c: &mut Checker) -> nilgraph::Result<()> {
    let h = group_h();
    let src = GradedLie2::from_presentation(&h);
    let wa = WeightedAnalysis::new(nilgraph::weighted::WeightedGraph::unweighted(
        catalog::path4(),
    ));
    let dst = GradedLie2::from_graph(&wa, Chart::Edge);
    let pos = |l: &str| wa.analysis.orders.vertex_pos[wa.analysis.graph.vertex_index(l).unwrap()];
    let build = |d: i64| {
        let mut map = Matrix::from_fn(4, 4, |_, _| QuadExt::from_int(0));
        let one = QuadExt::from_int(1);
        let s = QuadExt::sqrt_term(rat(1), d);
        map.set(pos("v1"), 0, one.clone());
        map.set(pos("v4"), 0, one.clone());
        map.set(pos("v1"), 1, s.clone());
        map.set(pos("v4"), 1, s.f_neg());
        map.set(pos("v2"), 2, one.clone());
        map.set(pos("v3"), 2, one);
        map.set(pos("v2"), 3, s.clone());
        map.set(pos("v3"), 3, s.f_neg());
        map
    };
    c.check(
        "graded Lie rings become isomorphic over Q(sqrt(2))",
        quad_ext_iso_check(&src, &dst, &build(2), 2)?,
    );
    c.check(
        "the same map fails over Q(sqrt(3))",
        !quad_ext_iso_check(&src, &dst, &build(3), 3)?,
    );
    Ok(())
}

fn reproduce_group_h(c: &mut Checker) -> nilgraph::Result<()> {
    let h = group_h();
    c.check(
        "structure constants match the presentation",
        h.commutator_exponents(0, 2) == vec![nilgraph::Int::from(1), 0.into(), 0.into()]
            && h.commutator_exponents(1, 3) == vec![nilgraph::Int::from(2), 0.into(), 0.into()]
            && h.commutator_exponents(0, 1) == vec![nilgraph::Int::from(0), 0.into(), 0.into()],
    );
    let (b, cm) = group_h_automorphism();
    c.check(
        "explicit automorphism preserves all relations",
        check_presentation_automorphism(&h, &b, &cm).is_ok(),
    );
    let char_b = b.char_poly()?;
    let char_c = cm.char_poly()?;
    let expect_b = IntPoly::from_i64(&[-1, 2, 1]).mul(&IntPoly::from_i64(&[-1, 2, 1]));
    let expect_c = IntPoly::from_i64(&[1, -6, 1]).mul(&IntPoly::from_i64(&[1, 1]));
    c.check("char(B) = (x^2+2x-1)^2", char_b == expect_b);
    c.check("char(C) = (x^2-6x+1)(x+1)", char_c == expect_c);
    c.check(
        "neither matrix has eigenvalue 1: finite twisted conjugacy",
        !b.has_eigenvalue_one()? && !cm.has_eigenvalue_one()?,
    );
    Ok(())
}

fn reproduce_path4(c: &mut Checker) -> nilgraph::Result<()> {
    let wa = WeightedAnalysis::new(nilgraph::weighted::WeightedGraph::unweighted(
        catalog::path4(),
    ));
    let class = classify_main_theorem(&wa.analysis);
    c.check(
        "classifier: case (iii), R-infinity certified",
        class.case == MainCase::RInfinityCertified,
    );
    let (xi, cap) = nilpotency_bounds(&wa.analysis)?;
    c.check("nilpotency bounds (2, 3)", (xi, cap) == (2, 3));
    let outcome = finite_r_witness_search(&wa, DEFAULT_SEARCH_BUDGET, DEFAULT_AUT_BOUND)?;
    c.check(
        "witness search exhausts without a finite hit",
        outcome.witness.is_none() && outcome.exhausted,
    );
    let cert = certify_graph_shape(&wa)?;
    verify_certificate(&wa, &cert)?;
    c.check(
        "transposition-free certificate issued and re-verified",
        cert.kind == CertificateKind::TranspositionFree,
    );
    Ok(())
}
