//! Explicit finite cube complexes.
//!
//! A d-cube is stored with its 2d facets: `facets[i] = [lo, hi]` are the
//! (d-1)-cubes obtained by fixing coordinate `i` to 0 or 1, with the
//! remaining coordinates renumbered in order. Complexes validate the cubical
//! identities at construction, so corners, links and boundaries can be read
//! off the face maps alone, including in one-vertex complexes where faces of
//! a cube are identified with each other.

mod config_space;
mod json;
mod link;
pub mod models;
mod surface;

pub use config_space::{reduced_config_space, reduced_config_space_with_budget};
pub use json::ComplexJson;
pub(crate) use link::maximal_cliques;
pub use link::{
    check_flag, check_link_flag, FlagReport, FlagViolation, LinkComplex, LinkVertex, ViolationKind,
};
pub use surface::{identify_surface, SurfaceId};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ComplexError;

/// Canonical cube name: a sorted list of simplices, each one or two names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CubeLabel(pub Vec<Vec<String>>);

impl fmt::Display for CubeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s.join("-"))?;
        }
        write!(f, "}}")
    }
}

impl CubeLabel {
    /// Parses `a,b` or `a b` as a label made of vertex simplices, and
    /// `u-v` tokens as edge simplices; JSON labels are accepted verbatim.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            return serde_json::from_str(text).ok();
        }
        let text = text.trim_start_matches('{').trim_end_matches('}');
        let simplices: Vec<Vec<String>> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.splitn(2, '-').map(str::to_string).collect())
            .collect();
        (!simplices.is_empty()).then_some(CubeLabel(simplices))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cube {
    pub label: CubeLabel,
    pub facets: Vec<[usize; 2]>,
}

/// Generator and orientation sign carried by an edge of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeLabel {
    pub generator: String,
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct CubeComplex {
    cubes: Vec<Vec<Cube>>,
    index: Vec<HashMap<CubeLabel, usize>>,
    edge_labels: Option<Vec<EdgeLabel>>,
}

impl PartialEq for CubeComplex {
    fn eq(&self, other: &Self) -> bool {
        self.cubes == other.cubes && self.edge_labels == other.edge_labels
    }
}

impl CubeComplex {
    /// Validates labels, facet ranges and the cubical identities.
    pub fn new(
        mut cubes: Vec<Vec<Cube>>,
        edge_labels: Option<Vec<EdgeLabel>>,
    ) -> Result<Self, ComplexError> {
        while cubes.last().is_some_and(Vec::is_empty) {
            cubes.pop();
        }
        let mut index = Vec::with_capacity(cubes.len());
        for (d, layer) in cubes.iter().enumerate() {
            let mut map = HashMap::with_capacity(layer.len());
            for (i, cube) in layer.iter().enumerate() {
                if map.insert(cube.label.clone(), i).is_some() {
                    return Err(ComplexError::DuplicateLabel {
                        dim: d,
                        label: cube.label.to_string(),
                    });
                }
                if cube.facets.len() != d {
                    return Err(ComplexError::BadFace {
                        dim: d,
                        cube: i,
                        detail: format!("expected {d} facet pairs, found {}", cube.facets.len()),
                    });
                }
                if d > 0 {
                    let below = cubes[d - 1].len();
                    if let Some(f) = cube.facets.iter().flatten().find(|&&f| f >= below) {
                        return Err(ComplexError::BadFace {
                            dim: d,
                            cube: i,
                            detail: format!("facet index {f} out of range ({below} cubes below)"),
                        });
                    }
                }
            }
            index.push(map);
        }
        if let Some(labels) = &edge_labels {
            let edges = cubes.get(1).map_or(0, Vec::len);
            if labels.len() != edges {
                return Err(ComplexError::BadFace {
                    dim: 1,
                    cube: labels.len().min(edges),
                    detail: format!("{} edge labels for {edges} edges", labels.len()),
                });
            }
        }
        let complex = Self {
            cubes,
            index,
            edge_labels,
        };
        complex.check_cubical_identities()?;
        Ok(complex)
    }

    fn check_cubical_identities(&self) -> Result<(), ComplexError> {
        for d in 2..self.cubes.len() {
            for c in 0..self.cubes[d].len() {
                for j in 1..d {
                    for i in 0..j {
                        for a in 0..2 {
                            for b in 0..2 {
                                let left = self.facet(d - 1, self.facet(d, c, j, b), i, a);
                                let right = self.facet(d - 1, self.facet(d, c, i, a), j - 1, b);
                                if left != right {
                                    return Err(ComplexError::BadFace {
                                        dim: d,
                                        cube: c,
                                        detail: format!(
                                            "faces ({i},{a}) and ({j},{b}) do not meet consistently"
                                        ),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The empty complex.
    pub fn empty() -> Self {
        Self {
            cubes: Vec::new(),
            index: Vec::new(),
            edge_labels: None,
        }
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.cubes.len().checked_sub(1)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cubes.get(dim).map_or(0, Vec::len)
    }

    pub fn cubes(&self, dim: usize) -> &[Cube] {
        self.cubes.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn cube(&self, dim: usize, idx: usize) -> &Cube {
        &self.cubes[dim][idx]
    }

    pub fn find(&self, dim: usize, label: &CubeLabel) -> Option<usize> {
        self.index.get(dim)?.get(label).copied()
    }

    pub fn vertex(&self, label: &CubeLabel) -> Result<usize, ComplexError> {
        self.find(0, label)
            .ok_or_else(|| ComplexError::UnknownVertex(label.to_string()))
    }

    pub fn edge_labels(&self) -> Option<&[EdgeLabel]> {
        self.edge_labels.as_deref()
    }

    /// Facet of the `c`-th `dim`-cube fixing coordinate `dir` to `side`.
    pub fn facet(&self, dim: usize, c: usize, dir: usize, side: usize) -> usize {
        self.cubes[dim][c].facets[dir][side]
    }

    /// Face obtained by fixing the coordinates given as `Some(side)`.
    /// Returns the face's index in dimension `dim - #fixed`.
    pub fn face(&self, dim: usize, c: usize, fixed: &[Option<usize>]) -> usize {
        let (mut d, mut c) = (dim, c);
        for dir in (0..dim).rev() {
            if let Some(side) = fixed[dir] {
                c = self.facet(d, c, dir, side);
                d -= 1;
            }
        }
        c
    }

    /// Vertex at a corner of a cube.
    pub fn corner(&self, dim: usize, c: usize, bits: &[usize]) -> usize {
        let fixed: Vec<Option<usize>> = bits.iter().map(|&b| Some(b)).collect();
        self.face(dim, c, &fixed)
    }

    /// The edge of the cube in direction `dir` passing through corner `bits`.
    pub fn corner_edge(&self, dim: usize, c: usize, bits: &[usize], dir: usize) -> usize {
        let fixed: Vec<Option<usize>> = bits
            .iter()
            .enumerate()
            .map(|(i, &b)| (i != dir).then_some(b))
            .collect();
        self.face(dim, c, &fixed)
    }

    /// Endpoints `(lo, hi)` of an edge.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let [lo, hi] = self.cubes[1][edge].facets[0];
        (lo, hi)
    }

    /// Boundary of a square as four `(edge, sign)` sides, traversed
    /// (0,0) → (1,0) → (1,1) → (0,1) → (0,0); sign +1 means lo → hi.
    pub fn square_boundary(&self, sq: usize) -> [(usize, i8); 4] {
        [
            (self.facet(2, sq, 1, 0), 1),
            (self.facet(2, sq, 0, 1), 1),
            (self.facet(2, sq, 1, 1), -1),
            (self.facet(2, sq, 0, 0), -1),
        ]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.cubes.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cubes
            .iter()
            .enumerate()
            .map(|(d, l)| {
                if d % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    /// Connected components of the 1-skeleton, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.count(0);
        let adj = self.vertex_adjacency();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// For each vertex, `(neighbour, edge)` pairs for every incident edge end.
    pub fn vertex_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.count(0)];
        for e in 0..self.count(1) {
            let (lo, hi) = self.endpoints(e);
            adj[lo].push((hi, e));
            if hi != lo {
                adj[hi].push((lo, e));
            }
        }
        adj
    }
}
