use std::collections::HashMap;

use super::{Cube, CubeComplex, CubeLabel, EdgeLabel};
use crate::error::ComplexError;
use crate::graph::{EdgeKey, SimplicialGraph};

/// A simplex of the graph as sorted vertex indices (one or two).
type Simplex = Vec<usize>;
type IndexLabel = Vec<Simplex>;

/// The reduced configuration space of `n` points on `g`.
///
/// A d-cube is a set of `n` pairwise disjoint simplices of `g`, exactly `d`
/// of them edges. Directions of a cube are its edges in label order; the
/// `lo` face of a direction replaces that edge by its tail and the `hi` face
/// by its head, so every edge of the complex carries sign +1 for the graph
/// edge it moves along.
pub fn reduced_config_space(g: &SimplicialGraph, n: usize) -> CubeComplex {
    reduced_config_space_with_budget(g, n, usize::MAX).expect("unbounded budget")
}

/// As [`reduced_config_space`], aborting once more than `max_cubes` cubes
/// have been enumerated.
pub fn reduced_config_space_with_budget(
    g: &SimplicialGraph,
    n: usize,
    max_cubes: usize,
) -> Result<CubeComplex, ComplexError> {
    if n == 0 {
        return Ok(CubeComplex::empty());
    }
    let edges = g.edge_list();
    let mut layers: Vec<Vec<IndexLabel>> = Vec::new();
    let mut total = 0usize;
    for d in 0..=n {
        let mut layer = Vec::new();
        let mut chosen = Vec::new();
        disjoint_edge_sets(&edges, d, 0, &mut chosen, &mut |set: &[EdgeKey]| {
            let mut used = vec![false; g.vertex_count()];
            for &(a, b) in set {
                used[a] = true;
                used[b] = true;
            }
            let free: Vec<usize> = (0..g.vertex_count()).filter(|&v| !used[v]).collect();
            for_each_subset(&free, n - d, &mut |verts: &[usize]| {
                let mut label: IndexLabel = set.iter().map(|&(a, b)| vec![a, b]).collect();
                label.extend(verts.iter().map(|&v| vec![v]));
                label.sort_unstable();
                layer.push(label);
            });
        });
        if layer.is_empty() {
            break;
        }
        total = total.saturating_add(layer.len());
        if total > max_cubes {
            return Err(ComplexError::BudgetExceeded(max_cubes));
        }
        layer.sort_unstable();
        layers.push(layer);
    }

    let lookup: Vec<HashMap<&IndexLabel, usize>> = layers
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, lab)| (lab, i)).collect())
        .collect();
    let name = |lab: &IndexLabel| {
        CubeLabel(
            lab.iter()
                .map(|s| s.iter().map(|&v| g.name(v).to_string()).collect())
                .collect(),
        )
    };
    let mut cubes: Vec<Vec<Cube>> = Vec::with_capacity(layers.len());
    for (d, layer) in layers.iter().enumerate() {
        let mut out = Vec::with_capacity(layer.len());
        for lab in layer {
            let mut facets = Vec::with_capacity(d);
            for (pos, s) in lab.iter().enumerate().filter(|(_, s)| s.len() == 2) {
                let (tail, head) = g.tail_head((s[0], s[1]));
                let mut pair = [0; 2];
                for (side, end) in [tail, head].into_iter().enumerate() {
                    let mut f = lab.clone();
                    f[pos] = vec![end];
                    f.sort_unstable();
                    pair[side] = *lookup[d - 1]
                        .get(&f)
                        .expect("every facet of a configuration is a configuration");
                }
                facets.push(pair);
            }
            out.push(Cube {
                label: name(lab),
                facets,
            });
        }
        cubes.push(out);
    }
    let edge_labels = cubes.get(1).map(|_| {
        layers[1]
            .iter()
            .map(|lab| {
                let s = lab.iter().find(|s| s.len() == 2).unwrap();
                EdgeLabel {
                    generator: g.edge_name((s[0], s[1])),
                    sign: 1,
                }
            })
            .collect()
    });
    CubeComplex::new(cubes, edge_labels)
}

fn disjoint_edge_sets(
    edges: &[EdgeKey],
    want: usize,
    from: usize,
    chosen: &mut Vec<EdgeKey>,
    visit: &mut dyn FnMut(&[EdgeKey]),
) {
    if chosen.len() == want {
        visit(chosen);
        return;
    }
    for i in from..edges.len() {
        if edges.len() - i < want - chosen.len() {
            break;
        }
        let e = edges[i];
        if chosen
            .iter()
            .all(|&(a, b)| a != e.0 && a != e.1 && b != e.0 && b != e.1)
        {
            chosen.push(e);
            disjoint_edge_sets(edges, want, i + 1, chosen, visit);
            chosen.pop();
        }
    }
}

fn for_each_subset(items: &[usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        from: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in from..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, visit);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), visit);
}
