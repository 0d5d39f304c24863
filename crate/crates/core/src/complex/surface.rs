use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::CubeComplex;
use crate::error::ComplexError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceId {
    pub is_closed_surface: bool,
    pub euler_characteristic: i64,
    /// Only decided for closed surfaces.
    pub orientable: Option<bool>,
}

/// Recognises closed square surfaces and decides orientability.
pub fn identify_surface(x: &CubeComplex) -> Result<SurfaceId, ComplexError> {
    identify_surface_ordered(x, false)
}

pub(crate) fn identify_surface_ordered(
    x: &CubeComplex,
    reverse: bool,
) -> Result<SurfaceId, ComplexError> {
    let dim = x.dimension().unwrap_or(0);
    if dim > 2 {
        return Err(ComplexError::DimensionTooHigh(dim));
    }
    let chi = x.euler_characteristic();
    let closed = x.count(2) > 0
        && edges_in_two_squares(x)
        && x.all_links().iter().all(|l| l.is_single_cycle());
    if !closed {
        return Ok(SurfaceId {
            is_closed_surface: false,
            euler_characteristic: chi,
            orientable: None,
        });
    }
    Ok(SurfaceId {
        is_closed_surface: true,
        euler_characteristic: chi,
        orientable: Some(orientable(x, reverse)),
    })
}

fn edges_in_two_squares(x: &CubeComplex) -> bool {
    let mut count = vec![0usize; x.count(1)];
    for sq in 0..x.count(2) {
        for (e, _) in x.square_boundary(sq) {
            count[e] += 1;
        }
    }
    count.iter().all(|&c| c == 2)
}

/// Tries to orient every square so that each edge is crossed in opposite
/// directions by its two sides. `reverse` flips the traversal order.
fn orientable(x: &CubeComplex, reverse: bool) -> bool {
    let squares = x.count(2);
    let mut sides: Vec<Vec<(usize, i8)>> = vec![Vec::new(); x.count(1)];
    for sq in 0..squares {
        for (e, sign) in x.square_boundary(sq) {
            sides[e].push((sq, sign));
        }
    }
    let mut orientation: Vec<i8> = vec![0; squares];
    let order: Vec<usize> = if reverse {
        (0..squares).rev().collect()
    } else {
        (0..squares).collect()
    };
    for &start in &order {
        if orientation[start] != 0 {
            continue;
        }
        orientation[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(sq) = queue.pop_front() {
            let mut boundary = x.square_boundary(sq).to_vec();
            if reverse {
                boundary.reverse();
            }
            for (e, _) in boundary {
                let [(s1, g1), (s2, g2)] = [sides[e][0], sides[e][1]];
                // o(s1) * g1 == -o(s2) * g2
                if orientation[s1] != 0 && orientation[s2] != 0 {
                    if orientation[s1] * g1 != -orientation[s2] * g2 {
                        return false;
                    }
                    continue;
                }
                let (known, kg, other, og) = if orientation[s1] != 0 {
                    (s1, g1, s2, g2)
                } else {
                    (s2, g2, s1, g1)
                };
                orientation[other] = -orientation[known] * kg * og;
                queue.push_back(other);
            }
        }
    }
    true
}
