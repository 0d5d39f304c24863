use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CubeComplex;
use crate::error::ComplexError;

/// A direction leaving a vertex: one end of an incident edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkVertex {
    pub edge: usize,
    /// 0 if the vertex is the edge's `lo` end, 1 for `hi`.
    pub end: usize,
}

/// Simplicial link of a vertex, generated by the corner simplices of the
/// cubes incident to it. `simplices` may contain repeats or degenerate
/// entries when the complex is not locally simplicial; those are reported by
/// [`check_link_flag`] rather than hidden.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkComplex {
    pub vertices: Vec<String>,
    pub simplices: Vec<Vec<usize>>,
}

impl LinkComplex {
    /// 1-skeleton adjacency.
    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for s in &self.simplices {
            for (i, &a) in s.iter().enumerate() {
                for &b in &s[i + 1..] {
                    if a != b {
                        adj[a].insert(b);
                        adj[b].insert(a);
                    }
                }
            }
        }
        adj
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency().iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// True when `set` is a face of one of the generating simplices.
    pub fn spans_simplex(&self, set: &[usize]) -> bool {
        self.simplices
            .iter()
            .any(|s| set.iter().all(|v| s.contains(v)))
    }

    /// True when the link is one cycle: a connected graph, every vertex of
    /// valence two, generated by edges alone.
    pub fn is_single_cycle(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || self.simplices.iter().any(|s| s.len() != 2 || s[0] == s[1]) {
            return false;
        }
        let distinct: BTreeSet<&Vec<usize>> = self.simplices.iter().collect();
        if distinct.len() != self.simplices.len() || self.simplices.len() != n {
            return false;
        }
        let adj = self.adjacency();
        if adj.iter().any(|a| a.len() != 2) {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl CubeComplex {
    /// Link vertices at `v`, in (edge, end) order.
    fn link_vertices_at(&self) -> Vec<Vec<LinkVertex>> {
        let mut out = vec![Vec::new(); self.count(0)];
        for e in 0..self.count(1) {
            let (lo, hi) = self.endpoints(e);
            out[lo].push(LinkVertex { edge: e, end: 0 });
            out[hi].push(LinkVertex { edge: e, end: 1 });
        }
        out
    }

    /// Corner simplices of every cube of dimension >= 1, grouped by vertex.
    fn corner_simplices(&self) -> Vec<Vec<Vec<LinkVertex>>> {
        let mut out = vec![Vec::new(); self.count(0)];
        for d in 1..self.cubes.len() {
            for c in 0..self.count(d) {
                for mask in 0..(1usize << d) {
                    let bits: Vec<usize> = (0..d).map(|i| (mask >> i) & 1).collect();
                    let v = self.corner(d, c, &bits);
                    let simplex = (0..d)
                        .map(|dir| LinkVertex {
                            edge: self.corner_edge(d, c, &bits, dir),
                            end: bits[dir],
                        })
                        .collect();
                    out[v].push(simplex);
                }
            }
        }
        out
    }

    fn assemble_link(&self, verts: &[LinkVertex], corners: &[Vec<LinkVertex>]) -> LinkComplex {
        let pos: BTreeMap<LinkVertex, usize> =
            verts.iter().enumerate().map(|(i, &lv)| (lv, i)).collect();
        let simplices = corners
            .iter()
            .filter(|s| s.len() >= 2)
            .map(|s| {
                let mut idx: Vec<usize> = s.iter().map(|lv| pos[lv]).collect();
                idx.sort_unstable();
                idx
            })
            .collect();
        LinkComplex {
            vertices: verts.iter().map(|lv| self.link_vertex_name(*lv)).collect(),
            simplices,
        }
    }

    /// `generator^+` / `generator^-` when the edge is labelled, otherwise
    /// `label@lo` / `label@hi`.
    pub fn link_vertex_name(&self, lv: LinkVertex) -> String {
        match self.edge_labels() {
            Some(labels) => {
                let l = &labels[lv.edge];
                let leaving = (lv.end == 0) == (l.sign > 0);
                format!("{}^{}", l.generator, if leaving { '+' } else { '-' })
            }
            None => format!(
                "{}@{}",
                self.cube(1, lv.edge).label,
                if lv.end == 0 { "lo" } else { "hi" }
            ),
        }
    }

    /// The raw link data at `v`: link vertices and corner simplices.
    pub fn link_data(&self, v: usize) -> (Vec<LinkVertex>, Vec<Vec<LinkVertex>>) {
        let verts = self.link_vertices_at().swap_remove(v);
        let corners = self.corner_simplices().swap_remove(v);
        (verts, corners)
    }

    pub fn vertex_link(&self, v: usize) -> Result<LinkComplex, ComplexError> {
        if v >= self.count(0) {
            return Err(ComplexError::UnknownVertex(format!("#{v}")));
        }
        let (verts, corners) = self.link_data(v);
        Ok(self.assemble_link(&verts, &corners))
    }

    /// Links of all vertices, in vertex order.
    pub fn all_links(&self) -> Vec<LinkComplex> {
        let verts = self.link_vertices_at();
        let corners = self.corner_simplices();
        verts
            .iter()
            .zip(&corners)
            .map(|(v, c)| self.assemble_link(v, c))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A clique of the 1-skeleton that does not span a simplex.
    EmptyClique,
    /// A cube corner meets the same link vertex twice.
    DegenerateSimplex,
    /// Two cube corners give the same link simplex.
    RepeatedSimplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagViolation {
    pub vertex: String,
    pub kind: ViolationKind,
    pub link_vertices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagReport {
    pub passed: bool,
    pub vertices_checked: usize,
    pub violations: Vec<FlagViolation>,
}

impl FlagReport {
    pub fn from_violations(vertices_checked: usize, violations: Vec<FlagViolation>) -> Self {
        Self {
            passed: violations.is_empty(),
            vertices_checked,
            violations,
        }
    }
}

/// Flag check of a single link. Returns `(kind, link vertex indices)` per violation.
pub fn check_link_flag(link: &LinkComplex) -> Vec<(ViolationKind, Vec<usize>)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for s in &link.simplices {
        let distinct: BTreeSet<usize> = s.iter().copied().collect();
        if distinct.len() != s.len() {
            out.push((ViolationKind::DegenerateSimplex, s.clone()));
        } else if !seen.insert(s.clone()) {
            out.push((ViolationKind::RepeatedSimplex, s.clone()));
        }
    }
    let adj = link.adjacency();
    for clique in maximal_cliques(&adj) {
        if clique.len() >= 3 && !link.spans_simplex(&clique) {
            out.push((ViolationKind::EmptyClique, clique));
        }
    }
    out
}

/// Bron–Kerbosch with pivoting; cliques come out sorted.
pub(crate) fn maximal_cliques(adj: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    fn bk(
        adj: &[BTreeSet<usize>],
        r: &mut Vec<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = *p
            .union(&x)
            .max_by_key(|&&u| adj[u].intersection(&p).count())
            .unwrap();
        let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
        for v in candidates {
            r.push(v);
            let np = p.intersection(&adj[v]).copied().collect();
            let nx = x.intersection(&adj[v]).copied().collect();
            bk(adj, r, np, nx, out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(
        adj,
        &mut Vec::new(),
        (0..adj.len()).collect(),
        BTreeSet::new(),
        &mut out,
    );
    out.sort();
    out
}

/// Checks that every vertex link is a flag simplicial complex.
pub fn check_flag(x: &CubeComplex) -> FlagReport {
    let links = x.all_links();
    let violations: Vec<FlagViolation> = links
        .par_iter()
        .enumerate()
        .flat_map_iter(|(v, link)| {
            let vertex = x.cube(0, v).label.to_string();
            check_link_flag(link)
                .into_iter()
                .map(move |(kind, members)| FlagViolation {
                    vertex: vertex.clone(),
                    kind,
                    link_vertices: members.iter().map(|&i| link.vertices[i].clone()).collect(),
                })
        })
        .collect();
    FlagReport::from_violations(links.len(), violations)
}
