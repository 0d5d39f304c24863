use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Cube, CubeComplex, CubeLabel, EdgeLabel};
use crate::error::ComplexError;

/// On-disk complex format.
///
/// `cubes` maps a dimension to its labels in index order; `faces` lists the
/// `[lo, hi]` facet indices per direction of every cube of dimension >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub cubes: BTreeMap<usize, Vec<CubeLabel>>,
    pub faces: Vec<FaceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<Vec<EdgeLabelEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceEntry {
    pub dim: usize,
    pub cube: usize,
    pub facets: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeLabelEntry {
    pub edge: usize,
    pub generator: String,
    pub sign: i8,
}

impl From<&CubeComplex> for ComplexJson {
    fn from(x: &CubeComplex) -> Self {
        let mut cubes = BTreeMap::new();
        let mut faces = Vec::new();
        for d in 0..x.cubes.len() {
            cubes.insert(d, x.cubes[d].iter().map(|c| c.label.clone()).collect());
            if d > 0 {
                for (i, c) in x.cubes[d].iter().enumerate() {
                    faces.push(FaceEntry {
                        dim: d,
                        cube: i,
                        facets: c.facets.clone(),
                    });
                }
            }
        }
        let edge_labels = x.edge_labels.as_ref().map(|labels| {
            labels
                .iter()
                .enumerate()
                .map(|(edge, l)| EdgeLabelEntry {
                    edge,
                    generator: l.generator.clone(),
                    sign: l.sign,
                })
                .collect()
        });
        ComplexJson {
            cubes,
            faces,
            edge_labels,
        }
    }
}

impl TryFrom<ComplexJson> for CubeComplex {
    type Error = ComplexError;

    fn try_from(raw: ComplexJson) -> Result<Self, ComplexError> {
        let top = raw.cubes.keys().max().map_or(0, |&d| d + 1);
        let mut cubes: Vec<Vec<Cube>> = (0..top)
            .map(|d| {
                raw.cubes
                    .get(&d)
                    .map(|labels| {
                        labels
                            .iter()
                            .map(|l| Cube {
                                label: l.clone(),
                                facets: Vec::new(),
                            })
                            .collect()
                    })
                    .unwrap_or_default()
            })
            .collect();
        for f in raw.faces {
            let cube = cubes
                .get_mut(f.dim)
                .and_then(|layer| layer.get_mut(f.cube))
                .ok_or_else(|| {
                    ComplexError::Json(format!("face entry for missing {}-cube #{}", f.dim, f.cube))
                })?;
            if !cube.facets.is_empty() {
                return Err(ComplexError::Json(format!(
                    "{}-cube #{} has two face entries",
                    f.dim, f.cube
                )));
            }
            cube.facets = f.facets;
        }
        let edge_labels = match raw.edge_labels {
            None => None,
            Some(entries) => {
                let mut labels: Vec<Option<EdgeLabel>> =
                    vec![None; cubes.get(1).map_or(0, Vec::len)];
                for e in entries {
                    let slot = labels.get_mut(e.edge).ok_or_else(|| {
                        ComplexError::Json(format!("label for missing edge #{}", e.edge))
                    })?;
                    if e.sign != 1 && e.sign != -1 {
                        return Err(ComplexError::Json(format!(
                            "edge #{} has sign {}",
                            e.edge, e.sign
                        )));
                    }
                    *slot = Some(EdgeLabel {
                        generator: e.generator,
                        sign: e.sign,
                    });
                }
                Some(
                    labels
                        .into_iter()
                        .enumerate()
                        .map(|(i, l)| {
                            l.ok_or_else(|| ComplexError::Json(format!("edge #{i} has no label")))
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
        };
        CubeComplex::new(cubes, edge_labels)
    }
}

impl CubeComplex {
    pub fn from_json_str(text: &str) -> Result<Self, ComplexError> {
        let raw: ComplexJson =
            serde_json::from_str(text).map_err(|e| ComplexError::Json(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&ComplexJson::from(self)).expect("complex serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{models, reduced_config_space};
    use crate::graph::builtin_graph;

    #[test]
    fn round_trips() {
        let x = reduced_config_space(&builtin_graph("complete_bipartite", &[3, 3]).unwrap(), 2);
        assert_eq!(CubeComplex::from_json_str(&x.to_json_string()).unwrap(), x);
        let t = models::cube_boundary();
        assert_eq!(CubeComplex::from_json_str(&t.to_json_string()).unwrap(), t);
    }

    #[test]
    fn documented_shape() {
        let x = reduced_config_space(&builtin_graph("path", &[3]).unwrap(), 1);
        let v: serde_json::Value = serde_json::from_str(&x.to_json_string()).unwrap();
        assert_eq!(v["cubes"]["0"][0], serde_json::json!([["0"]]));
        assert_eq!(v["cubes"]["1"][0], serde_json::json!([["0", "1"]]));
        assert_eq!(
            v["faces"][0],
            serde_json::json!({"dim": 1, "cube": 0, "facets": [[0, 1]]})
        );
        assert_eq!(
            v["edge_labels"][1],
            serde_json::json!({"edge": 1, "generator": "1-2", "sign": 1})
        );
    }

    #[test]
    fn rejects_broken_input() {
        assert!(CubeComplex::from_json_str(
            r#"{"cubes": {"0": [[["a"]]]}, "faces": [], "bogus": 1}"#
        )
        .is_err());
        let missing_face = r#"{"cubes": {"0": [[["a"]]], "1": [[["e"]]]}, "faces": []}"#;
        assert!(CubeComplex::from_json_str(missing_face).is_err());
        let out_of_range = r#"{"cubes": {"0": [[["a"]]], "1": [[["e"]]]}, "faces": [{"dim": 1, "cube": 0, "facets": [[0, 4]]}]}"#;
        assert!(CubeComplex::from_json_str(out_of_range).is_err());
    }
}
