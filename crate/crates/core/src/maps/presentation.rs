use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::cubical::CubicalMap;
use crate::complex::{CubeComplex, CubeLabel};
use crate::error::{ComplexError, MapsError};
use crate::raag::{is_trivial, normal_form, Letter, RaagPresentation, Word};

/// Presentation of the fundamental group of a connected complex of
/// dimension at most 2, from a breadth-first spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub basepoint: usize,
    /// Non-tree edges, in edge order; letter `i` of a relator is `generators[i]`.
    pub generators: Vec<usize>,
    /// One relator per square, in square order.
    pub relators: Vec<Word>,
    /// `parent[v]`: tree edge towards the basepoint, `None` at the basepoint.
    pub parent: Vec<Option<usize>>,
}

/// Spanning tree from `basepoint` (default: least vertex label), children
/// visited in label order.
pub fn fundamental_group_presentation(
    x: &CubeComplex,
    basepoint: Option<&CubeLabel>,
) -> Result<Presentation, ComplexError> {
    if let Some(d) = x.dimension().filter(|&d| d > 2) {
        return Err(ComplexError::DimensionTooHigh(d));
    }
    let n = x.count(0);
    if n == 0 {
        return Err(ComplexError::UnknownVertex(
            "empty complex has no basepoint".into(),
        ));
    }
    let components = x.components().len();
    if components > 1 {
        return Err(ComplexError::Disconnected(components));
    }
    let base = match basepoint {
        Some(label) => x.vertex(label)?,
        None => (0..n)
            .min_by(|&a, &b| x.cube(0, a).label.cmp(&x.cube(0, b).label))
            .unwrap(),
    };
    let mut adj = x.vertex_adjacency();
    for list in &mut adj {
        list.sort_by(|&(a, e), &(b, f)| {
            x.cube(0, a).label.cmp(&x.cube(0, b).label).then(e.cmp(&f))
        });
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut tree = vec![false; x.count(1)];
    seen[base] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(e);
                tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let generators: Vec<usize> = (0..x.count(1)).filter(|&e| !tree[e]).collect();
    let mut gen_of = vec![usize::MAX; x.count(1)];
    for (i, &e) in generators.iter().enumerate() {
        gen_of[e] = i;
    }
    let relators = (0..x.count(2))
        .map(|sq| {
            let w: Word = x
                .square_boundary(sq)
                .iter()
                .filter(|(e, _)| !tree[*e])
                .map(|&(e, sign)| Letter::new(gen_of[e], sign < 0))
                .collect();
            least_rotation(&w)
        })
        .collect();
    Ok(Presentation {
        basepoint: base,
        generators,
        relators,
        parent,
    })
}

/// The rotation that is lexicographically least.
fn least_rotation(w: &Word) -> Word {
    (0..w.len().max(1)).map(|k| w.rotate(k)).min().unwrap()
}

impl Presentation {
    pub fn generator_names(&self, x: &CubeComplex) -> Vec<String> {
        self.generators
            .iter()
            .map(|&e| x.cube(1, e).label.to_string())
            .collect()
    }

    /// Edge path from the basepoint to `v`, as `(edge, +1 lo->hi | -1)`.
    pub fn tree_path(&self, x: &CubeComplex, v: usize) -> Vec<(usize, i8)> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(e) = self.parent[cur] {
            let (lo, hi) = x.endpoints(e);
            if hi == cur {
                path.push((e, 1));
                cur = lo;
            } else {
                path.push((e, -1));
                cur = hi;
            }
        }
        path.reverse();
        path
    }

    pub fn format_word(&self, x: &CubeComplex, w: &Word) -> String {
        let names = self.generator_names(x);
        w.letters()
            .iter()
            .map(|l| {
                if l.inv {
                    format!("{}^-1", names[l.gen])
                } else {
                    names[l.gen].clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCheck {
    pub square: String,
    pub relator: String,
    pub image: String,
    pub image_normal_form: String,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismReport {
    pub basepoint: String,
    pub generator_count: usize,
    pub relator_count: usize,
    pub all_relators_trivial: bool,
    pub generators: Vec<GeneratorImage>,
    pub relators: Vec<RelatorCheck>,
}

/// Images of the generators of `pres` in the target group, read off the
/// edge labels along each generator loop, and a triviality check of every
/// relator image.
pub fn induced_homomorphism(
    f: &CubicalMap,
    pres: &Presentation,
) -> Result<HomomorphismReport, MapsError> {
    let x = f.source();
    if pres.parent.len() != x.count(0) || pres.relators.len() != x.count(2) {
        return Err(MapsError::NotCubical(
            "presentation does not belong to the map's source".into(),
        ));
    }
    let target = RaagPresentation::new(f.target().graph().clone());
    let letter = |e: usize, dir: i8| {
        let s = f.assignment()[e];
        Letter::new(s.gen, s.sign * dir < 0)
    };
    let path_word = |v: usize| -> Word {
        pres.tree_path(x, v)
            .into_iter()
            .map(|(e, d)| letter(e, d))
            .collect()
    };
    let images: Vec<Word> = pres
        .generators
        .iter()
        .map(|&e| {
            let (lo, hi) = x.endpoints(e);
            let mut w = path_word(lo);
            w.0.push(letter(e, 1));
            w.concat(&path_word(hi).inverse())
        })
        .collect();
    let names = pres.generator_names(x);
    let relators: Vec<RelatorCheck> = pres
        .relators
        .iter()
        .enumerate()
        .map(|(sq, r)| {
            let image: Word = r
                .letters()
                .iter()
                .flat_map(|l| {
                    if l.inv {
                        images[l.gen].inverse().0
                    } else {
                        images[l.gen].0.clone()
                    }
                })
                .collect();
            RelatorCheck {
                square: x.cube(2, sq).label.to_string(),
                relator: pres.format_word(x, r),
                image: target.format_word(&image),
                image_normal_form: target.format_word(&normal_form(&target, &image)),
                trivial: is_trivial(&target, &image),
            }
        })
        .collect();
    Ok(HomomorphismReport {
        basepoint: x.cube(0, pres.basepoint).label.to_string(),
        generator_count: images.len(),
        relator_count: relators.len(),
        all_relators_trivial: relators.iter().all(|r| r.trivial),
        generators: names
            .into_iter()
            .zip(&images)
            .map(|(generator, w)| GeneratorImage {
                generator,
                image: target.format_word(w),
            })
            .collect(),
        relators,
    })
}
