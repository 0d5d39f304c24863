use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::salvetti::{salvetti, SalvettiComplex, SignedGenerator};
use crate::complex::{check_link_flag, reduced_config_space, CubeComplex, LinkVertex};
use crate::error::MapsError;
use crate::graph::{delta_graph, SimplicialGraph};

/// A map from a cube complex to a Salvetti complex, given by a generator and
/// sign on every edge.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicalMap {
    source: CubeComplex,
    target: SalvettiComplex,
    assignment: Vec<SignedGenerator>,
}

impl CubicalMap {
    /// Checks that the assignment is total, names target generators, and
    /// agrees on opposite edges of every square.
    pub fn from_parts(
        source: CubeComplex,
        target: SalvettiComplex,
        assignment: Vec<SignedGenerator>,
    ) -> Result<Self, MapsError> {
        if assignment.len() != source.count(1) {
            return Err(MapsError::NotCubical(format!(
                "{} edge assignments for {} edges",
                assignment.len(),
                source.count(1)
            )));
        }
        if let Some((e, s)) = assignment
            .iter()
            .enumerate()
            .find(|(_, s)| s.gen >= target.graph().vertex_count() || (s.sign != 1 && s.sign != -1))
        {
            return Err(MapsError::NotCubical(format!(
                "edge #{e} has invalid image {s:?}"
            )));
        }
        let map = Self {
            source,
            target,
            assignment,
        };
        for sq in 0..map.source.count(2) {
            for dir in 0..2 {
                let [lo, hi] = map.source.cube(2, sq).facets[dir];
                if map.assignment[lo] != map.assignment[hi] {
                    return Err(MapsError::NotCubical(format!(
                        "opposite edges {} and {} of square {} differ",
                        map.source.cube(1, lo).label,
                        map.source.cube(1, hi).label,
                        map.source.cube(2, sq).label
                    )));
                }
            }
        }
        Ok(map)
    }

    /// Reads the assignment off the source's edge labels, matching
    /// generator names against the target's defining graph.
    pub fn from_edge_labels(
        source: CubeComplex,
        target: SalvettiComplex,
    ) -> Result<Self, MapsError> {
        let labels = source
            .edge_labels()
            .ok_or_else(|| MapsError::NotCubical("source edges carry no labels".into()))?;
        let assignment = labels
            .iter()
            .map(|l| {
                let gen = target.graph().vertex_index(&l.generator).ok_or_else(|| {
                    MapsError::NotCubical(format!("unknown generator {}", l.generator))
                })?;
                Ok(SignedGenerator { gen, sign: l.sign })
            })
            .collect::<Result<Vec<_>, MapsError>>()?;
        Self::from_parts(source, target, assignment)
    }

    pub fn source(&self) -> &CubeComplex {
        &self.source
    }

    pub fn target(&self) -> &SalvettiComplex {
        &self.target
    }

    pub fn assignment(&self) -> &[SignedGenerator] {
        &self.assignment
    }

    /// Cubes whose directions do not go to distinct pairwise commuting
    /// generators, as `(dim, cube)`.
    pub fn dimension_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for d in 2..=self.source.dimension().unwrap_or(0) {
            for c in 0..self.source.count(d) {
                let zeros = vec![0; d];
                let gens: Vec<SignedGenerator> = (0..d)
                    .map(|dir| self.assignment[self.source.corner_edge(d, c, &zeros, dir)])
                    .collect();
                if !self.target.link_spans(&gens) {
                    out.push((d, c));
                }
            }
        }
        out
    }

    /// Image of a link vertex: leaving along the edge's orientation gives
    /// the generator's sign, arriving gives the opposite one.
    pub fn link_image(&self, lv: LinkVertex) -> SignedGenerator {
        let s = self.assignment[lv.edge];
        SignedGenerator {
            gen: s.gen,
            sign: if lv.end == 0 { s.sign } else { -s.sign },
        }
    }

    /// Combinatorial local-isometry certificate, checked per vertex.
    pub fn check_local_isometry(&self) -> LocalIsometryReport {
        let links = self.source.all_links();
        let vertices: Vec<VertexCertificate> = (0..self.source.count(0))
            .into_par_iter()
            .map(|v| self.certify_vertex(v, &links[v]))
            .collect();
        let passed = vertices.iter().all(|c| c.violations.is_empty());
        LocalIsometryReport {
            passed,
            vertices_checked: vertices.len(),
            violation_count: vertices.iter().map(|c| c.violations.len()).sum(),
            vertices,
        }
    }

    fn certify_vertex(&self, v: usize, link: &crate::complex::LinkComplex) -> VertexCertificate {
        let (verts, _) = self.source.link_data(v);
        let images: Vec<SignedGenerator> = verts.iter().map(|&lv| self.link_image(lv)).collect();
        let image_names: Vec<String> = images
            .iter()
            .map(|&s| self.target.link_vertex_name(s))
            .collect();
        let mut violations = Vec::new();
        let mut push = |kind, members: &[usize]| {
            violations.push(IsometryViolation {
                kind,
                link_vertices: members.iter().map(|&i| link.vertices[i].clone()).collect(),
                images: members.iter().map(|&i| image_names[i].clone()).collect(),
            })
        };

        for (kind, members) in check_link_flag(link) {
            push(IsometryViolationKind::SourceNotFlag(kind), &members);
        }

        let mut preimages: BTreeMap<SignedGenerator, Vec<usize>> = BTreeMap::new();
        for (i, &s) in images.iter().enumerate() {
            preimages.entry(s).or_default().push(i);
        }
        for members in preimages.values().filter(|m| m.len() > 1) {
            push(IsometryViolationKind::NotInjective, members);
        }

        let mut seen = BTreeSet::new();
        for s in &link.simplices {
            let img: Vec<SignedGenerator> = s.iter().map(|&i| images[i]).collect();
            if !self.target.link_spans(&img) && seen.insert(s.clone()) {
                push(IsometryViolationKind::NotSimplicial, s);
            }
        }

        let adj = link.adjacency();
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                if self.target.link_spans(&[images[a], images[b]]) && !adj[a].contains(&b) {
                    push(IsometryViolationKind::NotFull, &[a, b]);
                }
            }
        }

        VertexCertificate {
            vertex: self.source.cube(0, v).label.to_string(),
            link_map: link.vertices.iter().cloned().zip(image_names).collect(),
            violations,
        }
    }
}

/// The map from the reduced configuration space of `n` points on `g` to
/// the Salvetti complex of the graph of disjoint edge pairs.
pub fn phi_map(g: &SimplicialGraph, n: usize) -> Result<CubicalMap, MapsError> {
    let source = reduced_config_space(g, n);
    phi_map_from_space(g, source, n)
}

/// As [`phi_map`], for a configuration space built by the caller.
pub fn phi_map_from_space(
    g: &SimplicialGraph,
    source: CubeComplex,
    n: usize,
) -> Result<CubicalMap, MapsError> {
    let target = salvetti(&delta_graph(g), n);
    if source.count(1) == 0 {
        return CubicalMap::from_parts(source, target, Vec::new());
    }
    let map = CubicalMap::from_edge_labels(source, target)?;
    if let Some(&(d, c)) = map.dimension_violations().first() {
        return Err(MapsError::NotCubical(format!(
            "{d}-cube {} does not map onto a cube",
            map.source.cube(d, c).label
        )));
    }
    Ok(map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsometryViolationKind {
    /// The source link itself fails the flag condition.
    SourceNotFlag(crate::complex::ViolationKind),
    /// Two link vertices share an image.
    NotInjective,
    /// A link simplex does not map onto a simplex.
    NotSimplicial,
    /// Two image vertices span a target edge that has no source preimage.
    NotFull,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryViolation {
    pub kind: IsometryViolationKind,
    pub link_vertices: Vec<String>,
    pub images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCertificate {
    pub vertex: String,
    /// Link vertex name and its image, for every link vertex.
    pub link_map: Vec<(String, String)>,
    pub violations: Vec<IsometryViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalIsometryReport {
    pub passed: bool,
    pub vertices_checked: usize,
    pub violation_count: usize,
    pub vertices: Vec<VertexCertificate>,
}

impl LocalIsometryReport {
    /// Vertices with at least one violation.
    pub fn failing_vertices(&self) -> impl Iterator<Item = &VertexCertificate> {
        self.vertices.iter().filter(|c| !c.violations.is_empty())
    }
}
