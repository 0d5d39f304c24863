//! Small hand-built complexes used as reference points.

use std::collections::HashMap;

use super::{Cube, CubeComplex, CubeLabel, EdgeLabel};

fn label(s: &str) -> CubeLabel {
    CubeLabel(vec![vec![s.to_string()]])
}

/// The torus as one square with opposite sides identified: one vertex `v`,
/// edges `a` and `b`, square `ab`.
pub fn square_torus() -> CubeComplex {
    let cubes = vec![
        vec![Cube {
            label: label("v"),
            facets: vec![],
        }],
        vec![
            Cube {
                label: label("a"),
                facets: vec![[0, 0]],
            },
            Cube {
                label: label("b"),
                facets: vec![[0, 0]],
            },
        ],
        vec![Cube {
            label: label("ab"),
            facets: vec![[1, 1], [0, 0]],
        }],
    ];
    let edge_labels = vec![
        EdgeLabel {
            generator: "a".into(),
            sign: 1,
        },
        EdgeLabel {
            generator: "b".into(),
            sign: 1,
        },
    ];
    CubeComplex::new(cubes, Some(edge_labels)).expect("torus is a valid complex")
}

/// Faces of the standard `dim`-cube selected by `keep`. Faces are named by
/// strings over `0`, `1`, `*`.
fn standard_cube(dim: usize, keep: impl Fn(&str) -> bool) -> CubeComplex {
    let mut faces: Vec<Vec<String>> = vec![Vec::new(); dim + 1];
    let total = 3usize.pow(dim as u32);
    for mut code in 0..total {
        let mut s = String::new();
        for _ in 0..dim {
            s.push(['0', '1', '*'][code % 3]);
            code /= 3;
        }
        if keep(&s) {
            let d = s.chars().filter(|&c| c == '*').count();
            faces[d].push(s);
        }
    }
    for layer in &mut faces {
        layer.sort();
    }
    let index: Vec<HashMap<&String, usize>> = faces
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let cubes = faces
        .iter()
        .enumerate()
        .map(|(d, layer)| {
            layer
                .iter()
                .map(|s| {
                    let stars: Vec<usize> = s
                        .char_indices()
                        .filter(|&(_, c)| c == '*')
                        .map(|(i, _)| i)
                        .collect();
                    let facets = stars
                        .iter()
                        .map(|&pos| {
                            let mut pair = [0; 2];
                            for (side, ch) in ['0', '1'].into_iter().enumerate() {
                                let mut f: Vec<char> = s.chars().collect();
                                f[pos] = ch;
                                let f: String = f.into_iter().collect();
                                pair[side] = index[d - 1][&f];
                            }
                            pair
                        })
                        .collect();
                    Cube {
                        label: label(s),
                        facets,
                    }
                })
                .collect()
        })
        .collect();
    CubeComplex::new(cubes, None).expect("standard cube faces are consistent")
}

/// Boundary of the 3-cube: 8 vertices, 12 edges, 6 squares.
pub fn cube_boundary() -> CubeComplex {
    standard_cube(3, |s| s != "***")
}

/// The solid 3-cube.
pub fn solid_cube() -> CubeComplex {
    standard_cube(3, |_| true)
}

/// A single square with its boundary.
pub fn square() -> CubeComplex {
    standard_cube(2, |_| true)
}
