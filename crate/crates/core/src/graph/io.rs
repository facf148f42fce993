//! JSON documents for graphs and matrices.
//!
//! Graphs: `{"kind": "multigraph"|"digraph"|"plane", "num_vertices": n,
//! "edges": [[u, v], ...]}`; plane graphs add `"rotations"`, one list per
//! vertex of `[edge_id, end]` pairs in counterclockwise order.
//!
//! Matrices: `{"n": n, "entries": [[...], ...]}`; entries are JSON numbers
//! or decimal strings, and must be strings beyond `2^53 − 1` in magnitude.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

use super::{Digraph, HalfEdge, Matrix, Multigraph, PlaneGraph};

/// Largest integer magnitude written as a bare JSON number.
pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

/// Any graph that can appear in a graph document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDocument {
    Multigraph(Multigraph),
    Digraph(Digraph),
    Plane(PlaneGraph),
}

impl GraphDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            GraphDocument::Multigraph(_) => "multigraph",
            GraphDocument::Digraph(_) => "digraph",
            GraphDocument::Plane(_) => "plane",
        }
    }

    /// The undirected graph underneath a multigraph or plane document.
    pub fn as_multigraph(&self) -> Option<&Multigraph> {
        match self {
            GraphDocument::Multigraph(g) => Some(g),
            GraphDocument::Plane(p) => Some(p.graph()),
            GraphDocument::Digraph(_) => None,
        }
    }
}

impl From<Multigraph> for GraphDocument {
    fn from(g: Multigraph) -> Self {
        GraphDocument::Multigraph(g)
    }
}

impl From<Digraph> for GraphDocument {
    fn from(g: Digraph) -> Self {
        GraphDocument::Digraph(g)
    }
}

impl From<PlaneGraph> for GraphDocument {
    fn from(g: PlaneGraph) -> Self {
        GraphDocument::Plane(g)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    kind: String,
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotations: Option<Vec<Vec<[usize; 2]>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    n: usize,
    entries: Vec<Vec<Value>>,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn read_graph(text: &str) -> Result<GraphDocument> {
    let raw: RawGraph = serde_json::from_str(text).map_err(parse_error)?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
    match (raw.kind.as_str(), raw.rotations) {
        ("multigraph", None) => Ok(Multigraph::new(raw.num_vertices, edges)?.into()),
        ("digraph", None) => Ok(Digraph::new(raw.num_vertices, edges)?.into()),
        ("plane", Some(rots)) => {
            let graph = Multigraph::new(raw.num_vertices, edges)?;
            let mut rotations = Vec::with_capacity(rots.len());
            for (v, rot) in rots.into_iter().enumerate() {
                let mut list = Vec::with_capacity(rot.len());
                for [edge, end] in rot {
                    if end > 1 {
                        return Err(Error::Rotation {
                            vertex: v,
                            message: format!("half-edge [{edge}, {end}] has end outside {{0, 1}}"),
                        });
                    }
                    list.push(HalfEdge::new(edge, end as u8));
                }
                rotations.push(list);
            }
            Ok(PlaneGraph::new(graph, rotations)?.into())
        }
        ("plane", None) => Err(Error::InvalidInput(
            "plane graph document needs \"rotations\"".into(),
        )),
        ("multigraph" | "digraph", Some(_)) => Err(Error::InvalidInput(format!(
            "\"rotations\" is only allowed for kind \"plane\", not {:?}",
            raw.kind
        ))),
        (other, _) => Err(Error::InvalidInput(format!(
            "unknown graph kind {other:?}; expected multigraph, digraph or plane"
        ))),
    }
}

/// Canonical single-line JSON for a graph, newline-terminated.
pub fn write_graph(doc: &GraphDocument) -> String {
    let pairs = |e: &[(usize, usize)]| e.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>();
    let raw = match doc {
        GraphDocument::Multigraph(g) => RawGraph {
            kind: doc.kind().into(),
            num_vertices: g.num_vertices(),
            edges: pairs(g.edges()),
            rotations: None,
        },
        GraphDocument::Digraph(g) => RawGraph {
            kind: doc.kind().into(),
            num_vertices: g.num_vertices(),
            edges: pairs(g.arcs()),
            rotations: None,
        },
        GraphDocument::Plane(p) => RawGraph {
            kind: doc.kind().into(),
            num_vertices: p.graph().num_vertices(),
            edges: pairs(p.graph().edges()),
            rotations: Some(
                p.rotations()
                    .iter()
                    .map(|r| r.iter().map(|h| [h.edge, h.end as usize]).collect())
                    .collect(),
            ),
        },
    };
    let mut s = serde_json::to_string(&raw).expect("graph serializes");
    s.push('\n');
    s
}

fn entry_from_json(v: &Value, row: usize, col: usize) -> Result<BigInt> {
    let bad = |why: &str| Error::InvalidInput(format!("matrix entry ({row}, {col}) = {v}: {why}"));
    match v {
        Value::Number(num) => {
            let x = num.as_i64().ok_or_else(|| bad("not an integer"))?;
            if x.abs() > MAX_SAFE_INTEGER {
                return Err(bad("exceeds 2^53 - 1; write it as a decimal string"));
            }
            Ok(BigInt::from(x))
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| bad("not a decimal integer")),
        _ => Err(bad("expected a number or decimal string")),
    }
}

/// JSON form of an exact integer: a number when it is exactly
/// representable by every consumer, a decimal string otherwise.
pub fn integer_to_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) if v.abs() <= MAX_SAFE_INTEGER => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn read_matrix(text: &str) -> Result<Matrix> {
    let raw: RawMatrix = serde_json::from_str(text).map_err(parse_error)?;
    if raw.entries.len() != raw.n {
        return Err(Error::InvalidInput(format!(
            "matrix declares n = {} but has {} rows",
            raw.n,
            raw.entries.len()
        )));
    }
    let rows = raw
        .entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != raw.n {
                return Err(Error::InvalidInput(format!(
                    "matrix row {i} has {} entries, expected {}",
                    row.len(),
                    raw.n
                )));
            }
            row.iter()
                .enumerate()
                .map(|(j, v)| entry_from_json(v, i, j))
                .collect()
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    Matrix::from_rows(rows)
}

pub fn write_matrix(m: &Matrix) -> String {
    let raw = RawMatrix {
        n: m.dim(),
        entries: m
            .rows()
            .map(|r| r.iter().map(integer_to_json).collect())
            .collect(),
    };
    let mut s = serde_json::to_string(&raw).expect("matrix serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_digraph() {
        let doc =
            read_graph(r#"{"kind":"digraph","num_vertices":2,"edges":[[0,1],[1,0]]}"#).unwrap();
        match doc {
            GraphDocument::Digraph(d) => assert_eq!(d.num_arcs(), 2),
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn round_trip_is_canonical() {
        let fixtures = [
            r#"{"kind":"multigraph","num_vertices":3,"edges":[[0,1],[1,1]]}"#,
            r#"{ "kind" : "digraph", "num_vertices": 1, "edges": [[0, 0]] }"#,
            r#"{"kind":"plane","num_vertices":2,"edges":[[0,1],[0,1]],"rotations":[[[1,0],[0,0]],[[0,1],[1,1]]]}"#,
        ];
        for text in fixtures {
            let doc = read_graph(text).unwrap();
            let canon = write_graph(&doc);
            assert_eq!(read_graph(&canon).unwrap(), doc);
            assert_eq!(write_graph(&read_graph(&canon).unwrap()), canon);
        }
    }

    #[test]
    fn missing_half_edge_names_vertex() {
        let text = r#"{"kind":"plane","num_vertices":2,"edges":[[0,1]],"rotations":[[[0,0]],[]]}"#;
        match read_graph(text) {
            Err(Error::Rotation { vertex, .. }) => assert_eq!(vertex, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_are_positioned() {
        let text = "{\"kind\":\"digraph\",\n\"num_vertices\":2,\n\"edges\":[[0,1]],\n\"colour\":1}";
        match read_graph(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            read_graph(r#"{"kind":"digraph","num_vertices":2,"edges":[[0,5]]}"#),
            Err(Error::InvalidInput(_))
        ));
        assert!(read_graph(r#"{"kind":"tree","num_vertices":1,"edges":[]}"#).is_err());
    }

    #[test]
    fn matrix_big_entries() {
        let text = r#"{"n":2,"entries":[[1,"-123456789012345678901234567890"],["7",0]]}"#;
        let m = read_matrix(text).unwrap();
        assert_eq!(m.get(0, 1).to_string(), "-123456789012345678901234567890");
        assert_eq!(*m.get(1, 0), BigInt::from(7));
        let again = read_matrix(&write_matrix(&m)).unwrap();
        assert_eq!(again, m);
        assert!(write_matrix(&m).contains("\"-123456789012345678901234567890\""));
        // unsafe bare numbers are rejected
        assert!(read_matrix(r#"{"n":1,"entries":[[9007199254740993]]}"#).is_err());
        assert!(read_matrix(r#"{"n":1,"entries":[[1.5]]}"#).is_err());
        assert!(read_matrix(r#"{"n":2,"entries":[[1]]}"#).is_err());
        assert!(read_matrix(r#"{"n":1,"entries":[[1]],"extra":0}"#).is_err());
    }
}
