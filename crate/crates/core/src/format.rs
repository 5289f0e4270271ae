//! The JSON graph interchange format.
//!
//! ```json
//! {"vertices": [{"id": 0, "weight": 0}, {"id": 1, "weight": 0}],
//!  "edges": [[0, 1], [0, 1], [0, 1]],
//!  "exceptional": []}
//! ```
//!
//! Ids are arbitrary integers; vertices are numbered internally in the
//! order they are listed. A loop is an edge with equal ends.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: i64,
    weight: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRecord {
    vertices: Vec<VertexRecord>,
    edges: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    exceptional: Vec<i64>,
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let record: GraphRecord = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut index = HashMap::new();
    let mut weights = Vec::with_capacity(record.vertices.len());
    for (i, v) in record.vertices.iter().enumerate() {
        if v.weight < 0 {
            return Err(Error::InvalidGraph(format!(
                "vertices[{i}].weight: weight {} of vertex {} is negative",
                v.weight, v.id
            )));
        }
        let w = u32::try_from(v.weight).map_err(|_| {
            Error::InvalidGraph(format!("vertices[{i}].weight: weight {} is too large", v.weight))
        })?;
        if index.insert(v.id, i).is_some() {
            return Err(Error::InvalidGraph(format!("vertices[{i}].id: duplicate id {}", v.id)));
        }
        weights.push(w);
    }
    let lookup = |field: String, id: i64| {
        index
            .get(&id)
            .copied()
            .ok_or_else(|| Error::InvalidGraph(format!("{field}: unknown vertex id {id}")))
    };
    let mut edges = Vec::with_capacity(record.edges.len());
    for (i, [a, b]) in record.edges.iter().copied().enumerate() {
        edges.push((lookup(format!("edges[{i}][0]"), a)?, lookup(format!("edges[{i}][1]"), b)?));
    }
    let exceptional = record
        .exceptional
        .iter()
        .enumerate()
        .map(|(i, &id)| lookup(format!("exceptional[{i}]"), id))
        .collect::<Result<Vec<_>>>()?;
    WeightedGraph::with_exceptional(weights, edges, exceptional)
}

/// Serialises with ids equal to internal vertex indices.
pub fn graph_to_json(g: &WeightedGraph) -> String {
    let record = GraphRecord {
        vertices: g
            .weights()
            .iter()
            .enumerate()
            .map(|(i, &w)| VertexRecord {
                id: i as i64,
                weight: w as i64,
            })
            .collect(),
        edges: g.edges().iter().map(|&(a, b)| [a as i64, b as i64]).collect(),
        exceptional: g.exceptional().iter().map(|v| v as i64).collect(),
    };
    serde_json::to_string(&record).expect("graph record serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_theta_with_arbitrary_ids() {
        let g = parse_graph(
            r#"{"vertices":[{"id":7,"weight":0},{"id":3,"weight":0}],
                "edges":[[7,3],[3,7],[7,3]]}"#,
        )
        .unwrap();
        assert_eq!(g.weights(), &[0, 0]);
        assert_eq!(g.edges(), &[(0, 1); 3]);
    }

    #[test]
    fn loops_and_exceptional() {
        let g = parse_graph(
            r#"{"vertices":[{"id":0,"weight":1},{"id":1,"weight":0},{"id":2,"weight":1}],
                "edges":[[0,1],[1,2],[0,0]],"exceptional":[1]}"#,
        )
        .unwrap();
        assert!(g.is_exceptional(1));
        assert_eq!(g.loop_count(0), 1);
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn negative_weight_names_the_field() {
        let err = parse_graph(r#"{"vertices":[{"id":0,"weight":-1}],"edges":[]}"#).unwrap_err();
        assert!(err.to_string().contains("vertices[0].weight"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_graph("{\"vertices\": [\n  {\"id\": 0,, }]}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_ids_rejected() {
        let err = parse_graph(r#"{"vertices":[{"id":0,"weight":2}],"edges":[[0,5]]}"#).unwrap_err();
        assert!(err.to_string().contains("edges[0][1]"), "{err}");
        assert!(parse_graph(r#"{"vertices":[],"edges":[]}"#).is_err());
    }
}
