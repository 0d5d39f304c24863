use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{GraphJson, SimplicialGraph};
use crate::error::GraphError;

/// A vertex map between two graphs.
///
/// Construction only checks that the map is total and lands on target
/// vertices; whether it carries edges to edges is part of what
/// [`validate_cover`] decides and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMorphism {
    source: SimplicialGraph,
    target: SimplicialGraph,
    vertex_map: Vec<usize>,
}

impl GraphMorphism {
    pub fn new(
        source: SimplicialGraph,
        target: SimplicialGraph,
        vertex_map: &BTreeMap<String, String>,
    ) -> Result<Self, GraphError> {
        let mut map = Vec::with_capacity(source.vertex_count());
        for v in source.vertices() {
            let image = vertex_map
                .get(v)
                .ok_or_else(|| GraphError::MorphismIncomplete(v.clone()))?;
            let t = target
                .vertex_index(image)
                .ok_or_else(|| GraphError::UnknownVertex(image.clone()))?;
            map.push(t);
        }
        if let Some(extra) = vertex_map.keys().find(|k| source.vertex_index(k).is_none()) {
            return Err(GraphError::UnknownVertex(extra.clone()));
        }
        Ok(Self {
            source,
            target,
            vertex_map: map,
        })
    }

    /// Builds a morphism from a function on vertex indices.
    pub fn from_fn(
        source: SimplicialGraph,
        target: SimplicialGraph,
        f: impl Fn(usize) -> usize,
    ) -> Result<Self, GraphError> {
        let map: Vec<usize> = (0..source.vertex_count()).map(f).collect();
        if let Some(&bad) = map.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(GraphError::UnknownVertex(format!("#{bad}")));
        }
        Ok(Self {
            source,
            target,
            vertex_map: map,
        })
    }

    pub fn source(&self) -> &SimplicialGraph {
        &self.source
    }

    pub fn target(&self) -> &SimplicialGraph {
        &self.target
    }

    pub fn image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    /// Source vertices over `t`, in source order.
    pub fn fiber(&self, t: usize) -> Vec<usize> {
        (0..self.source.vertex_count())
            .filter(|&v| self.vertex_map[v] == t)
            .collect()
    }

    /// True when every edge is sent to an edge.
    pub fn is_homomorphism(&self) -> bool {
        self.source
            .edges()
            .all(|(a, b)| self.target.has_edge(self.image(a), self.image(b)))
    }

    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let raw: MorphismJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::new(
            raw.source.try_into()?,
            raw.target.try_into()?,
            &raw.vertex_map,
        )
    }

    pub fn to_json_string(&self) -> String {
        let raw = MorphismJson {
            source: GraphJson::from(&self.source),
            target: GraphJson::from(&self.target),
            vertex_map: (0..self.source.vertex_count())
                .map(|v| {
                    (
                        self.source.name(v).to_string(),
                        self.target.name(self.image(v)).to_string(),
                    )
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("morphism serializes")
    }
}

/// On-disk morphism format: `{"source": graph, "target": graph, "vertex_map": {"s": "t"}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub source: GraphJson,
    pub target: GraphJson,
    pub vertex_map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverSide {
    Source,
    Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFailure {
    pub side: CoverSide,
    pub vertex: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverVerdict {
    pub valid: bool,
    pub sheets: usize,
    pub failure: Option<CoverFailure>,
}

/// Decides whether `p` is a `sheets`-sheeted covering map.
///
/// Checks, in order: every source vertex star maps bijectively onto the star
/// of its image; every fiber has exactly `sheets` vertices; every source
/// component maps onto a whole target component. The first failure found is
/// reported.
pub fn validate_cover(p: &GraphMorphism, sheets: usize) -> CoverVerdict {
    let fail = |side, vertex: &str, reason: String| CoverVerdict {
        valid: false,
        sheets,
        failure: Some(CoverFailure {
            side,
            vertex: vertex.to_string(),
            reason,
        }),
    };
    let (src, tgt) = (&p.source, &p.target);
    if sheets == 0 {
        return fail(CoverSide::Target, "", "sheet count must be positive".into());
    }
    for s in 0..src.vertex_count() {
        let ps = p.image(s);
        let mut seen = BTreeSet::new();
        for w in src.neighbors(s) {
            let pw = p.image(w);
            if !tgt.has_edge(ps, pw) {
                return fail(
                    CoverSide::Source,
                    src.name(s),
                    format!(
                        "star not bijective: edge {} is sent to non-edge {{{}, {}}}",
                        src.edge_name((s, w)),
                        tgt.name(ps),
                        tgt.name(pw)
                    ),
                );
            }
            if !seen.insert(pw) {
                return fail(
                    CoverSide::Source,
                    src.name(s),
                    format!(
                        "star not bijective: two edges land on {}",
                        tgt.edge_name((ps, pw))
                    ),
                );
            }
        }
        if seen.len() != tgt.degree(ps) {
            return fail(
                CoverSide::Source,
                src.name(s),
                format!(
                    "star not bijective: valence {} over a vertex of valence {}",
                    seen.len(),
                    tgt.degree(ps)
                ),
            );
        }
    }
    for t in 0..tgt.vertex_count() {
        let size = p.fiber(t).len();
        if size != sheets {
            return fail(
                CoverSide::Target,
                tgt.name(t),
                format!("fiber has {size} vertices, expected {sheets}"),
            );
        }
    }
    let target_components = tgt.components();
    for comp in src.components() {
        let image: BTreeSet<usize> = comp.iter().map(|&v| p.image(v)).collect();
        let whole = target_components
            .iter()
            .any(|tc| tc.len() == image.len() && tc.iter().all(|t| image.contains(t)));
        if !whole {
            return fail(
                CoverSide::Source,
                src.name(comp[0]),
                "component does not map onto a target component".into(),
            );
        }
    }
    CoverVerdict {
        valid: true,
        sheets,
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    fn wrap(k: usize, n: usize) -> GraphMorphism {
        let big = builtin_graph("cycle", &[k * n]).unwrap();
        let small = builtin_graph("cycle", &[n]).unwrap();
        GraphMorphism::from_fn(big, small, |i| i % n).unwrap()
    }

    #[test]
    fn double_cover_of_pentagon() {
        let v = validate_cover(&wrap(2, 5), 2);
        assert!(v.valid, "{v:?}");
        assert!(!validate_cover(&wrap(2, 5), 3).valid);
    }

    #[test]
    fn identity_is_one_sheeted() {
        let k4 = builtin_graph("complete", &[4]).unwrap();
        let id = GraphMorphism::from_fn(k4.clone(), k4, |i| i).unwrap();
        assert!(validate_cover(&id, 1).valid);
    }

    #[test]
    fn constant_map_is_rejected_at_first_vertex() {
        let c5 = builtin_graph("cycle", &[5]).unwrap();
        let constant = GraphMorphism::from_fn(c5.clone(), c5, |_| 0).unwrap();
        let v = validate_cover(&constant, 5);
        assert!(!v.valid);
        let f = v.failure.unwrap();
        assert_eq!((f.side, f.vertex.as_str()), (CoverSide::Source, "0"));
        assert!(f.reason.contains("star"));
    }

    #[test]
    fn wrap_maps_are_covers() {
        for k in 2..=6 {
            for n in 3..=6 {
                assert!(validate_cover(&wrap(k, n), k).valid, "C_{} -> C_{n}", k * n);
            }
        }
    }

    #[test]
    fn disconnected_source_must_cover_componentwise() {
        // two triangles over one triangle is a valid double cover
        let two = SimplicialGraph::new(
            ["0", "1", "2", "3", "4", "5"],
            [
                ("0", "1"),
                ("1", "2"),
                ("0", "2"),
                ("3", "4"),
                ("4", "5"),
                ("3", "5"),
            ],
        )
        .unwrap();
        let k3 = builtin_graph("complete", &[3]).unwrap();
        let p = GraphMorphism::from_fn(two, k3, |i| i % 3).unwrap();
        assert!(validate_cover(&p, 2).valid);
    }

    #[test]
    fn json_round_trip() {
        let m = wrap(2, 3);
        assert_eq!(
            GraphMorphism::from_json_str(&m.to_json_string()).unwrap(),
            m
        );
        let bad = r#"{"source": {"vertices": ["a"], "edges": []}, "target": {"vertices": ["x"], "edges": []}, "vertex_map": {}}"#;
        assert!(matches!(
            GraphMorphism::from_json_str(bad),
            Err(GraphError::MorphismIncomplete(_))
        ));
    }
}
