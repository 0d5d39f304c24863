use serde::{Deserialize, Serialize};

use crate::complex::{
    check_link_flag, Cube, CubeComplex, CubeLabel, EdgeLabel, FlagReport, FlagViolation,
    LinkComplex,
};
use crate::graph::SimplicialGraph;

/// One-vertex cube complex with a d-cube for every d-clique of the defining
/// graph, enumerated up to `max_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalvettiComplex {
    graph: SimplicialGraph,
    /// `cliques[d]`: sorted d-cliques, each listed in vertex order.
    cliques: Vec<Vec<Vec<usize>>>,
}

/// Signed generator in the link of the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedGenerator {
    pub gen: usize,
    pub sign: i8,
}

pub fn salvetti(d: &SimplicialGraph, max_dim: usize) -> SalvettiComplex {
    let mut cliques = vec![vec![Vec::new()]];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_dim.max(1) {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|c| {
                let start = c.last().map_or(0, |&v| v + 1);
                (start..d.vertex_count())
                    .filter(|&v| c.iter().all(|&u| d.has_edge(u, v)))
                    .map(move |v| {
                        let mut e = c.clone();
                        e.push(v);
                        e
                    })
            })
            .collect();
        if next.is_empty() {
            break;
        }
        cliques.push(next.clone());
        layer = next;
    }
    SalvettiComplex {
        graph: d.clone(),
        cliques,
    }
}

impl SalvettiComplex {
    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cliques.get(dim).map_or(0, Vec::len)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.cliques.iter().map(Vec::len).collect()
    }

    pub fn cliques(&self, dim: usize) -> &[Vec<usize>] {
        self.cliques.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Name of a link vertex: `a^+` or `a^-`.
    pub fn link_vertex_name(&self, s: SignedGenerator) -> String {
        format!(
            "{}^{}",
            self.graph.name(s.gen),
            if s.sign > 0 { '+' } else { '-' }
        )
    }

    /// Whether a set of signed generators spans a simplex of the link:
    /// distinct generators spanning a clique.
    pub fn link_spans(&self, set: &[SignedGenerator]) -> bool {
        set.iter().enumerate().all(|(i, a)| {
            set[i + 1..]
                .iter()
                .all(|b| a.gen != b.gen && self.graph.has_edge(a.gen, b.gen))
        })
    }

    /// The link of the vertex, generated by every maximal clique with every
    /// choice of signs. Link vertex `2g` is `g^+`, `2g + 1` is `g^-`.
    pub fn link(&self) -> LinkComplex {
        let adj: Vec<_> = (0..self.graph.vertex_count())
            .map(|v| self.graph.neighbors(v).collect())
            .collect();
        let mut simplices = Vec::new();
        for clique in crate::complex::maximal_cliques(&adj) {
            for mask in 0..(1usize << clique.len()) {
                let s = clique
                    .iter()
                    .enumerate()
                    .map(|(i, &g)| 2 * g + ((mask >> i) & 1))
                    .collect();
                simplices.push(s);
            }
        }
        let vertices = (0..self.graph.vertex_count())
            .flat_map(|g| {
                [1, -1].map(|sign| self.link_vertex_name(SignedGenerator { gen: g, sign }))
            })
            .collect();
        LinkComplex {
            vertices,
            simplices,
        }
    }

    /// Flag check of the link of the single vertex.
    pub fn check_flag(&self) -> FlagReport {
        let link = self.link();
        let violations = check_link_flag(&link)
            .into_iter()
            .map(|(kind, members)| FlagViolation {
                vertex: "{}".into(),
                kind,
                link_vertices: members.iter().map(|&i| link.vertices[i].clone()).collect(),
            })
            .collect();
        FlagReport::from_violations(1, violations)
    }

    /// The explicit cube complex; every facet of a cube drops one generator
    /// from its clique, on both sides.
    pub fn to_cube_complex(&self) -> CubeComplex {
        let label = |c: &[usize]| {
            CubeLabel(
                c.iter()
                    .map(|&g| vec![self.graph.name(g).to_string()])
                    .collect(),
            )
        };
        let mut cubes: Vec<Vec<Cube>> = Vec::new();
        for (d, layer) in self.cliques.iter().enumerate() {
            let below = if d > 0 {
                Some(&self.cliques[d - 1])
            } else {
                None
            };
            cubes.push(
                layer
                    .iter()
                    .map(|c| {
                        let facets = (0..d)
                            .map(|i| {
                                let mut f = c.clone();
                                f.remove(i);
                                let idx = below
                                    .unwrap()
                                    .binary_search(&f)
                                    .expect("faces of cliques are cliques");
                                [idx, idx]
                            })
                            .collect();
                        Cube {
                            label: label(c),
                            facets,
                        }
                    })
                    .collect(),
            );
        }
        let edge_labels = self.cliques.get(1).map(|l| {
            l.iter()
                .map(|c| EdgeLabel {
                    generator: self.graph.name(c[0]).to_string(),
                    sign: 1,
                })
                .collect()
        });
        CubeComplex::new(cubes, edge_labels).expect("clique complexes are cubical")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::check_flag;
    use crate::graph::builtin_graph;

    #[test]
    fn small_cases() {
        let point = SimplicialGraph::with_vertices(["a"]).unwrap();
        assert_eq!(salvetti(&point, 2).f_vector(), vec![1, 1]);
        let edge = SimplicialGraph::new(["a", "b"], [("a", "b")]).unwrap();
        let t = salvetti(&edge, 2);
        assert_eq!(t.f_vector(), vec![1, 2, 1]);
        assert_eq!(t.to_cube_complex().euler_characteristic(), 0);
        let petersen = builtin_graph("petersen", &[]).unwrap();
        assert_eq!(salvetti(&petersen, 2).f_vector(), vec![1, 10, 15]);
    }

    #[test]
    fn truncation() {
        let k4 = builtin_graph("complete", &[4]).unwrap();
        assert_eq!(salvetti(&k4, 2).f_vector(), vec![1, 4, 6]);
        assert_eq!(salvetti(&k4, 9).f_vector(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn rule_link_agrees_with_explicit_link() {
        let c5 = builtin_graph("cycle", &[5]).unwrap();
        let t = salvetti(&c5, 2);
        assert!(t.check_flag().passed);
        let x = t.to_cube_complex();
        assert!(check_flag(&x).passed);
        let explicit = x.vertex_link(0).unwrap();
        assert_eq!(explicit.edge_count(), t.link().edge_count());
        assert_eq!(t.link().edge_count(), 4 * 5);
    }

    #[test]
    fn truncated_triangle_is_not_flag_but_rule_link_is() {
        let k3 = builtin_graph("complete", &[3]).unwrap();
        assert!(!check_flag(&salvetti(&k3, 2).to_cube_complex()).passed);
        assert!(check_flag(&salvetti(&k3, 3).to_cube_complex()).passed);
        assert!(salvetti(&k3, 2).check_flag().passed);
    }

    #[test]
    fn link_rule() {
        let edge = SimplicialGraph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        let t = salvetti(&edge, 2);
        let s = |gen, sign| SignedGenerator { gen, sign };
        assert!(t.link_spans(&[s(0, 1), s(1, -1)]));
        assert!(!t.link_spans(&[s(0, 1), s(0, -1)]));
        assert!(!t.link_spans(&[s(0, 1), s(2, 1)]));
    }
}
