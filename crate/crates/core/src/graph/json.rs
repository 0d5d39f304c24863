use serde::{Deserialize, Serialize};

use super::SimplicialGraph;
use crate::error::GraphError;

/// Vertex identifiers may be written as JSON strings or integers; they are
/// read back as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Name(String),
    Number(u64),
}

impl VertexId {
    fn into_name(self) -> String {
        match self {
            VertexId::Name(s) => s,
            VertexId::Number(n) => n.to_string(),
        }
    }
}

/// On-disk graph format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<[VertexId; 2]>>,
}

impl TryFrom<GraphJson> for SimplicialGraph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, GraphError> {
        let vertices = raw.vertices.into_iter().map(VertexId::into_name);
        let edges = raw
            .edges
            .into_iter()
            .map(|[a, b]| (a.into_name(), b.into_name()));
        let g = SimplicialGraph::new(vertices, edges)?;
        match raw.orientation {
            None => Ok(g),
            Some(arcs) => {
                let arcs: Vec<(String, String)> = arcs
                    .into_iter()
                    .map(|[t, h]| (t.into_name(), h.into_name()))
                    .collect();
                g.with_orientation(&arcs)
            }
        }
    }
}

impl From<&SimplicialGraph> for GraphJson {
    fn from(g: &SimplicialGraph) -> Self {
        let name = |v: usize| VertexId::Name(g.name(v).to_string());
        GraphJson {
            vertices: g.vertices().iter().cloned().map(VertexId::Name).collect(),
            edges: g.edges().map(|(a, b)| [name(a), name(b)]).collect(),
            orientation: g
                .orientation_arcs()
                .map(|arcs| arcs.into_iter().map(|(t, h)| [name(t), name(h)]).collect()),
        }
    }
}

impl SimplicialGraph {
    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&GraphJson::from(self)).expect("graph serializes")
    }
}
