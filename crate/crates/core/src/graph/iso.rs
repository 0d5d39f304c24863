use std::collections::VecDeque;

use super::SimplicialGraph;

/// Brute-force isomorphism search. Returns `map` with `map[v]` the image in
/// `b` of vertex `v` of `a`. Intended for graphs of at most ~20 vertices.
pub fn find_isomorphism(a: &SimplicialGraph, b: &SimplicialGraph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    // Visit high-degree vertices first, then neighbours of already placed ones.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = a.neighbors(v).filter(|&w| placed[w]).count();
                (links, a.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &order, 0, &mut map, &mut used).then_some(map)
}

fn extend(
    a: &SimplicialGraph,
    b: &SimplicialGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..b.vertex_count() {
        if used[cand] || b.degree(cand) != a.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], cand));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &SimplicialGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin_graph, delta_graph};

    #[test]
    fn delta_k5_is_petersen() {
        let d = delta_graph(&builtin_graph("complete", &[5]).unwrap());
        let p = builtin_graph("petersen", &[]).unwrap();
        let map = find_isomorphism(&d, &p).expect("isomorphic");
        for (x, y) in d.edges() {
            assert!(p.has_edge(map[x], map[y]));
        }
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // C_6 versus two disjoint triangles
        let c6 = builtin_graph("cycle", &[6]).unwrap();
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
        assert!(find_isomorphism(&c6, &two).is_none());
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&builtin_graph("petersen", &[]).unwrap()), Some(5));
        assert_eq!(
            girth(&builtin_graph("complete_bipartite", &[3, 3]).unwrap()),
            Some(4)
        );
        assert_eq!(girth(&builtin_graph("path", &[5]).unwrap()), None);
        assert_eq!(girth(&builtin_graph("cycle", &[7]).unwrap()), Some(7));
    }
}
