//! File formats: graph JSON, matrix JSON, presentation JSON, and canonical
//! serialization with content hashing for certificates.
//!
//! Graph schema: {"vertices": ["a", ...], "edges": [["a", "b", weight], ...]}
//! with the weight entry optional (default 1). Matrices are row-major arrays
//! of integers.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::TwoStepPresentation;
use crate::matrix::IntMatrix;
use crate::scalar::Int;
use crate::weighted::WeightedGraph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub fn weighted_graph_from_json(text: &str) -> Result<WeightedGraph> {
    let v: Value = serde_json::from_str(text).map_err(|e| invalid(format!("bad JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| invalid("expected an object"))?;
    let vertices: Vec<String> = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("missing \"vertices\" array"))?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_owned)
                .ok_or_else(|| invalid("vertex labels must be strings"))
        })
        .collect::<Result<_>>()?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut weight_of: Vec<((String, String), u64)> = Vec::new();
    for e in obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("missing \"edges\" array"))?
    {
        let arr = e
            .as_array()
            .ok_or_else(|| invalid("each edge must be an array"))?;
        if arr.len() != 2 && arr.len() != 3 {
            return Err(invalid("each edge must be [a, b] or [a, b, weight]"));
        }
        let a = arr[0]
            .as_str()
            .ok_or_else(|| invalid("edge endpoints must be strings"))?
            .to_owned();
        let b = arr[1]
            .as_str()
            .ok_or_else(|| invalid("edge endpoints must be strings"))?
            .to_owned();
        let w = match arr.get(2) {
            None => 1,
            Some(x) => x
                .as_u64()
                .filter(|&w| w >= 1)
                .ok_or_else(|| Error::InvalidWeight(a.clone(), b.clone()))?,
        };
        weight_of.push(((a.clone(), b.clone()), w));
        pairs.push((a, b));
    }
    let graph = Graph::new(&vertices, &pairs)?;
    let mut weights = vec![1u64; graph.edge_count()];
    for ((a, b), w) in weight_of {
        let i = graph.vertex_index(&a)?;
        let j = graph.vertex_index(&b)?;
        let e = graph.edge_index(i, j).expect("edge was inserted");
        weights[e] = w;
    }
    WeightedGraph::new(graph, weights)
}

/// Canonical JSON: vertices sorted, edges sorted with explicit weights,
/// no whitespace. Parsing this output reproduces it byte for byte.
pub fn weighted_graph_to_canonical_json(wg: &WeightedGraph) -> String {
    let vertices: Vec<Value> = wg.graph.labels().iter().map(|l| json!(l)).collect();
    let edges: Vec<Value> = (0..wg.graph.edge_count())
        .map(|e| {
            let (a, b) = wg.graph.edge_labels(e);
            json!([a, b, wg.weight(e)])
        })
        .collect();
    serde_json::to_string(&json!({"vertices": vertices, "edges": edges}))
        .expect("serializable value")
}

/// SHA-256 of the canonical serialization, hex encoded.
pub fn graph_hash(wg: &WeightedGraph) -> String {
    let mut h = Sha256::new();
    h.update(weighted_graph_to_canonical_json(wg).as_bytes());
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn int_matrix_from_json(text: &str) -> Result<IntMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| invalid(format!("bad JSON: {e}")))?;
    // accept either a bare array of rows or {"matrix": [...]}
    let rows_val = match &v {
        Value::Array(_) => &v,
        Value::Object(o) => o
            .get("matrix")
            .ok_or_else(|| invalid("expected an array of rows or a \"matrix\" field"))?,
        _ => return Err(invalid("expected an array of rows")),
    };
    let rows = rows_val
        .as_array()
        .ok_or_else(|| invalid("matrix must be an array of rows"))?;
    let mut data: Vec<Vec<Int>> = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| invalid("matrix rows must be arrays"))?;
        data.push(
            row.iter()
                .map(|x| {
                    x.as_i64()
                        .map(Int::from)
                        .ok_or_else(|| invalid("matrix entries must be integers"))
                })
                .collect::<Result<_>>()?,
        );
    }
    IntMatrix::from_rows(data)
}

pub fn int_matrix_to_json(m: &IntMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| json!(i64::try_from(m.get(i, j)).expect("desk-scale entry")))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

/// Quadratic-extension matrices: each entry is [a_num, a_den, b_num, b_den, d]
/// meaning (a_num/a_den) + (b_num/b_den) * sqrt(d).
pub fn quad_matrix_from_json(text: &str) -> Result<crate::matrix::QuadMatrix> {
    use crate::scalar::QuadExt;
    let v: Value = serde_json::from_str(text).map_err(|e| invalid(format!("bad JSON: {e}")))?;
    let rows = v
        .as_array()
        .ok_or_else(|| invalid("expected an array of rows"))?;
    let mut data: Vec<Vec<QuadExt>> = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| invalid("matrix rows must be arrays"))?;
        let mut out = Vec::with_capacity(row.len());
        for entry in row {
            let parts = entry
                .as_array()
                .filter(|a| a.len() == 5)
                .ok_or_else(|| invalid("entries must be [a_num, a_den, b_num, b_den, d]"))?;
            let nums: Vec<i64> = parts
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| invalid("entry parts must be integers")))
                .collect::<Result<_>>()?;
            if nums[1] == 0 || nums[3] == 0 {
                return Err(invalid("zero denominator"));
            }
            out.push(QuadExt::new(
                crate::scalar::Rat::new(Int::from(nums[0]), Int::from(nums[1])),
                crate::scalar::Rat::new(Int::from(nums[2]), Int::from(nums[3])),
                nums[4],
            ));
        }
        data.push(out);
    }
    crate::matrix::Matrix::from_rows(data)
}

pub fn quad_matrix_to_json(m: &crate::matrix::QuadMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| {
                        let q = m.get(i, j);
                        json!([
                            i64::try_from(q.a.numer()).expect("desk-scale entry"),
                            i64::try_from(q.a.denom()).expect("desk-scale entry"),
                            i64::try_from(q.b.numer()).expect("desk-scale entry"),
                            i64::try_from(q.b.denom()).expect("desk-scale entry"),
                            q.d
                        ])
                    })
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

/// Presentation schema: {"n": 4, "m": 3, "relations": [[i, j, [e_1..e_m]]]}
/// with 1-based generator indices i < j; unlisted pairs commute.
pub fn presentation_to_json(p: &TwoStepPresentation) -> Value {
    let n = p.rank_x();
    let m = p.rank_y();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let exps = p.commutator_exponents(i, j);
            if exps.iter().all(num_traits::Zero::is_zero) {
                continue;
            }
            let exps_json: Vec<Value> = exps
                .iter()
                .map(|e| json!(i64::try_from(e).expect("desk-scale exponent")))
                .collect();
            relations.push(json!([i + 1, j + 1, exps_json]));
        }
    }
    json!({"n": n, "m": m, "relations": relations})
}

pub fn presentation_from_json(text: &str) -> Result<TwoStepPresentation> {
    let v: Value = serde_json::from_str(text).map_err(|e| invalid(format!("bad JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| invalid("expected an object"))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid("missing \"n\""))? as usize;
    let m = obj
        .get("m")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid("missing \"m\""))? as usize;
    let mut entries: Vec<(usize, usize, usize, i64)> = Vec::new();
    for rel in obj
        .get("relations")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("missing \"relations\" array"))?
    {
        let arr = rel
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| invalid("each relation must be [i, j, exponents]"))?;
        let i = arr[0]
            .as_u64()
            .filter(|&i| i >= 1)
            .ok_or_else(|| invalid("relation indices are 1-based integers"))? as usize
            - 1;
        let j = arr[1]
            .as_u64()
            .filter(|&j| j >= 1)
            .ok_or_else(|| invalid("relation indices are 1-based integers"))? as usize
            - 1;
        let exps = arr[2]
            .as_array()
            .filter(|a| a.len() == m)
            .ok_or_else(|| invalid("exponent vector must have length m"))?;
        for (l, e) in exps.iter().enumerate() {
            let val = e
                .as_i64()
                .ok_or_else(|| invalid("exponents must be integers"))?;
            if val != 0 {
                entries.push((i, j, l, val));
            }
        }
    }
    TwoStepPresentation::from_sparse(n, m, &entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_h;

    #[test]
    fn graph_round_trip_is_canonical() {
        let text = r#"{"vertices": ["b", "a", "c"], "edges": [["c", "a", 3], ["a", "b"]]}"#;
        let wg = weighted_graph_from_json(text).unwrap();
        let canon = weighted_graph_to_canonical_json(&wg);
        let wg2 = weighted_graph_from_json(&canon).unwrap();
        assert_eq!(weighted_graph_to_canonical_json(&wg2), canon);
        assert_eq!(wg, wg2);
        assert_eq!(graph_hash(&wg), graph_hash(&wg2));
    }

    #[test]
    fn graph_json_rejects_bad_input() {
        assert!(weighted_graph_from_json("[]").is_err());
        assert!(weighted_graph_from_json(r#"{"vertices": ["a"], "edges": [["a"]]}"#).is_err());
        assert!(
            weighted_graph_from_json(r#"{"vertices":["a","b"],"edges":[["a","b",0]]}"#).is_err()
        );
    }

    #[test]
    fn matrix_round_trip() {
        let m = int_matrix_from_json("[[1, -2], [3, 4]]").unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, -2], &[3, 4]]));
        let j = int_matrix_to_json(&m);
        assert_eq!(int_matrix_from_json(&j.to_string()).unwrap(), m);
        assert!(int_matrix_from_json("[[1], [2, 3]]").is_err());
    }

    #[test]
    fn quad_matrix_round_trip() {
        let text = "[[[1, 1, 1, 2, 2], [0, 1, 0, 1, 0]]]";
        let m = quad_matrix_from_json(text).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.cols(), 2);
        let j = quad_matrix_to_json(&m);
        assert_eq!(quad_matrix_from_json(&j.to_string()).unwrap(), m);
        assert!(quad_matrix_from_json("[[[1, 0, 0, 1, 2]]]").is_err());
    }

    #[test]
    fn presentation_round_trip() {
        let h = group_h();
        let j = presentation_to_json(&h).to_string();
        let h2 = presentation_from_json(&j).unwrap();
        assert_eq!(h, h2);
    }
}
