//! Planarity testing with witnesses in both directions.
//!
//! Embedding uses path addition (Demoucron, Malgrange, Pertuiset) on each
//! biconnected block; block rotations are concatenated at cut vertices.
//! Non-planar graphs are shrunk edge by edge to a minimal non-planar
//! subgraph, which is necessarily a subdivided K5 or K3,3.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{EdgeKey, SimplicialGraph};

/// Cyclic order of neighbours around every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub order: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<EdgeKey>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarityVerdict {
    Planar(RotationSystem),
    NonPlanar(KuratowskiWitness),
}

impl PlanarityVerdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityVerdict::Planar(_))
    }
}

pub fn is_planar(g: &SimplicialGraph) -> PlanarityVerdict {
    if let Some(rotation) = embed(g) {
        debug_assert!(verify_rotation_system(g, &rotation));
        return PlanarityVerdict::Planar(rotation);
    }
    let witness = kuratowski_subgraph(g);
    debug_assert!(verify_kuratowski(g, &witness));
    PlanarityVerdict::NonPlanar(witness)
}

/// Euler's bound `|E| <= 3|V| - 6`, necessary for planarity when `|V| >= 3`.
pub fn passes_euler_bound(g: &SimplicialGraph) -> bool {
    let (v, e) = (g.vertex_count(), g.edge_count());
    v < 3 || e + 6 <= 3 * v
}

/// Tries to embed `g` in the plane.
pub fn embed(g: &SimplicialGraph) -> Option<RotationSystem> {
    if !passes_euler_bound(g) {
        return None;
    }
    let mut order = vec![Vec::new(); g.vertex_count()];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (a, b) = block[0];
            order[a].push(b);
            order[b].push(a);
            continue;
        }
        let faces = embed_block(&block)?;
        for (v, local) in rotations_from_faces(&faces) {
            order[v].extend(local);
        }
    }
    Some(RotationSystem { order })
}

/// Checks that `rotation` permutes each neighbourhood and that the traced
/// faces satisfy `V - E + F = 2` on every component with an edge.
pub fn verify_rotation_system(g: &SimplicialGraph, rotation: &RotationSystem) -> bool {
    if rotation.order.len() != g.vertex_count() {
        return false;
    }
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); g.vertex_count()];
    for (v, cyc) in rotation.order.iter().enumerate() {
        let as_set: BTreeSet<usize> = cyc.iter().copied().collect();
        if as_set.len() != cyc.len() || as_set != g.neighbors(v).collect() {
            return false;
        }
        for (i, &w) in cyc.iter().enumerate() {
            succ[v].insert(w, cyc[(i + 1) % cyc.len()]);
        }
    }
    let mut comp_of = vec![0; g.vertex_count()];
    let components = g.components();
    for (c, comp) in components.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let mut faces = vec![0usize; components.len()];
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (a, b) in g.edges() {
        for start in [(a, b), (b, a)] {
            if used.contains(&start) {
                continue;
            }
            let mut dart = start;
            loop {
                used.insert(dart);
                let (u, v) = dart;
                dart = (v, succ[v][&u]);
                if dart == start {
                    break;
                }
            }
            faces[comp_of[a]] += 1;
        }
    }
    components.iter().enumerate().all(|(c, comp)| {
        let edges = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        edges == 0 || comp.len() + faces[c] == edges + 2
    })
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &SimplicialGraph) -> Vec<Vec<EdgeKey>> {
    struct State<'a> {
        g: &'a SimplicialGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<EdgeKey>,
        blocks: Vec<Vec<EdgeKey>>,
    }
    fn visit(st: &mut State<'_>, v: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[v] = st.time;
        st.low[v] = st.time;
        let neighbors: Vec<usize> = st.g.neighbors(v).collect();
        for w in neighbors {
            if st.disc[w] == 0 {
                st.stack.push((v, w));
                visit(st, w, Some(v));
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (v, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    st.blocks.push(block);
                }
            } else if Some(w) != parent && st.disc[w] < st.disc[v] {
                st.stack.push((v, w));
                st.low[v] = st.low[v].min(st.disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            visit(&mut st, v, None);
        }
    }
    st.blocks
}

/// Path-addition embedding of a biconnected block with at least two edges.
/// Returns consistently oriented faces, or `None` if the block is non-planar.
fn embed_block(block: &[EdgeKey]) -> Option<Vec<Vec<usize>>> {
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(a, b) in block {
        adj.entry(a).or_default().insert(b);
        adj.entry(b).or_default().insert(a);
    }
    let cycle = find_cycle(&adj)?;
    let mut embedded_v: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut embedded_e: BTreeSet<EdgeKey> = BTreeSet::new();
    for i in 0..cycle.len() {
        embedded_e.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    while embedded_e.len() < block.len() {
        let fragments = fragments(&adj, &embedded_v, &embedded_e);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment while edges remain");
        let path = fragment_path(&adj, &embedded_v, &fragments[fi]);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            embedded_e.insert(key(w[0], w[1]));
        }
        embedded_v.extend(path.iter().copied());
    }
    Some(faces)
}

fn key(a: usize, b: usize) -> EdgeKey {
    (a.min(b), a.max(b))
}

/// A cycle through the first edge: the edge plus a shortest path avoiding it.
fn find_cycle(adj: &BTreeMap<usize, BTreeSet<usize>>) -> Option<Vec<usize>> {
    let a = *adj.keys().next()?;
    let b = *adj[&a].iter().next()?;
    let mut parent: BTreeMap<usize, usize> = BTreeMap::from([(a, a)]);
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            if (v == a && w == b) || parent.contains_key(&w) {
                continue;
            }
            parent.insert(w, v);
            if w == b {
                let mut cycle = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[&cur];
                    cycle.push(cur);
                }
                return Some(cycle);
            }
            queue.push_back(w);
        }
    }
    None
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a single chord edge.
    interior: BTreeSet<usize>,
}

fn fragments(
    adj: &BTreeMap<usize, BTreeSet<usize>>,
    embedded_v: &BTreeSet<usize>,
    embedded_e: &BTreeSet<EdgeKey>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (&a, ns) in adj {
        for &b in ns {
            if a < b
                && embedded_v.contains(&a)
                && embedded_v.contains(&b)
                && !embedded_e.contains(&(a, b))
            {
                out.push(Fragment {
                    attachments: vec![a, b],
                    interior: BTreeSet::new(),
                });
            }
        }
    }
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &v in adj.keys() {
        if embedded_v.contains(&v) || seen.contains(&v) {
            continue;
        }
        let mut interior = BTreeSet::from([v]);
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([v]);
        seen.insert(v);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if embedded_v.contains(&y) {
                    attachments.insert(y);
                } else if seen.insert(y) {
                    interior.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(
    adj: &BTreeMap<usize, BTreeSet<usize>>,
    embedded_v: &BTreeSet<usize>,
    frag: &Fragment,
) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[&start] {
        if frag.interior.contains(&w) {
            parent.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if embedded_v.contains(&y) {
                if y != start {
                    let mut path = vec![y, x];
                    let mut cur = x;
                    while cur != start {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
            } else if frag.interior.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("a fragment of a biconnected block has two attachments")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], *path.last().unwrap());
    let m = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let walk = |from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![face[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % m;
            out.push(face[i]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    let mut f1 = walk(ia, ib);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(ib, ia);
    f2.extend(inner.iter());
    (f1, f2)
}

/// Local rotations from oriented faces: a face passing `u -> v -> w` makes
/// `w` the successor of `u` around `v`.
fn rotations_from_faces(faces: &[Vec<usize>]) -> BTreeMap<usize, Vec<usize>> {
    let mut succ: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for f in faces {
        let m = f.len();
        for i in 0..m {
            let (u, v, w) = (f[i], f[(i + 1) % m], f[(i + 2) % m]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    succ.into_iter()
        .map(|(v, s)| {
            let first = *s.keys().next().unwrap();
            let mut cyc = vec![first];
            let mut cur = s[&first];
            while cur != first {
                cyc.push(cur);
                cur = s[&cur];
            }
            debug_assert_eq!(cyc.len(), s.len());
            (v, cyc)
        })
        .collect()
}

fn kuratowski_subgraph(g: &SimplicialGraph) -> KuratowskiWitness {
    let mut kept: BTreeSet<EdgeKey> = g.edges().collect();
    for e in g.edge_list() {
        kept.remove(&e);
        if embed(&g.spanning_subgraph(kept.iter().copied())).is_some() {
            kept.insert(e);
        }
    }
    let h = g.spanning_subgraph(kept.iter().copied());
    let branch_vertices: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| h.degree(v) >= 3)
        .collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        edges: kept.into_iter().collect(),
    }
}

/// Checks that the witness edges form a subdivision of K5 or K3,3 inside `g`.
pub fn verify_kuratowski(g: &SimplicialGraph, w: &KuratowskiWitness) -> bool {
    if !w
        .edges
        .iter()
        .all(|&(a, b)| a < g.vertex_count() && b < g.vertex_count() && g.has_edge(a, b))
    {
        return false;
    }
    let h = g.spanning_subgraph(w.edges.iter().copied());
    let (want_branch, want_degree) = match w.kind {
        KuratowskiKind::K5 => (5, 4),
        KuratowskiKind::K33 => (6, 3),
    };
    let branch: BTreeSet<usize> = w.branch_vertices.iter().copied().collect();
    if branch.len() != want_branch {
        return false;
    }
    for v in 0..h.vertex_count() {
        let d = h.degree(v);
        let ok = if branch.contains(&v) {
            d == want_degree
        } else {
            d == 0 || d == 2
        };
        if !ok {
            return false;
        }
    }
    // Follow each branch edge through valence-two vertices.
    let mut pairs: BTreeSet<EdgeKey> = BTreeSet::new();
    let mut traversed = 0usize;
    for &b in &branch {
        for first in h.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            let mut len = 1;
            while !branch.contains(&cur) {
                let next = h.neighbors(cur).find(|&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            if cur == b {
                return false;
            }
            if b < cur && !pairs.insert((b, cur)) {
                return false;
            }
            traversed += len;
        }
    }
    // Every path was walked from both ends.
    if traversed != 2 * h.edge_count() {
        return false;
    }
    match w.kind {
        KuratowskiKind::K5 => pairs.len() == 10,
        KuratowskiKind::K33 => {
            if pairs.len() != 9 {
                return false;
            }
            // Bipartition: the branch vertices not adjacent to the first one form its side.
            let first = *branch.iter().next().unwrap();
            let same: BTreeSet<usize> = branch
                .iter()
                .copied()
                .filter(|&x| x != first && !pairs.contains(&(first.min(x), first.max(x))))
                .chain([first])
                .collect();
            same.len() == 3
                && pairs
                    .iter()
                    .all(|&(a, b)| same.contains(&a) != same.contains(&b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin_graph, delta_graph, subdivide};

    fn planar(g: &SimplicialGraph) -> bool {
        match is_planar(g) {
            PlanarityVerdict::Planar(r) => {
                assert!(verify_rotation_system(g, &r));
                true
            }
            PlanarityVerdict::NonPlanar(w) => {
                assert!(verify_kuratowski(g, &w), "{w:?}");
                false
            }
        }
    }

    #[test]
    fn textbook_verdicts() {
        assert!(planar(&builtin_graph("complete", &[4]).unwrap()));
        assert!(!planar(&builtin_graph("complete", &[5]).unwrap()));
        assert!(!planar(
            &builtin_graph("complete_bipartite", &[3, 3]).unwrap()
        ));
        assert!(!planar(&builtin_graph("petersen", &[]).unwrap()));
        assert!(!planar(&delta_graph(
            &builtin_graph("complete", &[5]).unwrap()
        )));
        assert!(planar(
            &builtin_graph("complete_bipartite", &[2, 5]).unwrap()
        ));
        for n in 3..12 {
            assert!(planar(&builtin_graph("cycle", &[n]).unwrap()));
            assert!(planar(&builtin_graph("path", &[n]).unwrap()));
        }
    }

    #[test]
    fn witness_kinds() {
        match is_planar(&builtin_graph("complete", &[5]).unwrap()) {
            PlanarityVerdict::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert_eq!(w.edges.len(), 10);
            }
            _ => panic!("K5 is not planar"),
        }
        match is_planar(&builtin_graph("petersen", &[]).unwrap()) {
            PlanarityVerdict::NonPlanar(w) => assert_eq!(w.kind, KuratowskiKind::K33),
            _ => panic!("Petersen is not planar"),
        }
    }

    #[test]
    fn subdivided_k33_witness_passes_through_subdivision_vertices() {
        let g = subdivide(&builtin_graph("complete_bipartite", &[3, 3]).unwrap(), 3).unwrap();
        match is_planar(&g) {
            PlanarityVerdict::NonPlanar(w) => {
                assert!(verify_kuratowski(&g, &w));
                assert_eq!(w.edges.len(), 27);
            }
            _ => panic!("subdivided K3,3 is not planar"),
        }
    }

    #[test]
    fn disconnected_and_cut_vertices() {
        // two K4s sharing a vertex, plus a pendant path and an isolated vertex
        let g = SimplicialGraph::new(
            ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"],
            [
                ("0", "1"),
                ("0", "2"),
                ("0", "3"),
                ("1", "2"),
                ("1", "3"),
                ("2", "3"),
                ("3", "4"),
                ("3", "5"),
                ("3", "6"),
                ("4", "5"),
                ("4", "6"),
                ("5", "6"),
                ("6", "7"),
                ("7", "8"),
            ],
        )
        .unwrap();
        assert!(planar(&g));
    }

    #[test]
    fn bad_witnesses_are_rejected() {
        let k5 = builtin_graph("complete", &[5]).unwrap();
        let mut w = match is_planar(&k5) {
            PlanarityVerdict::NonPlanar(w) => w,
            _ => unreachable!(),
        };
        w.kind = KuratowskiKind::K33;
        assert!(!verify_kuratowski(&k5, &w));
        let k4 = builtin_graph("complete", &[4]).unwrap();
        let bogus = RotationSystem {
            order: vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
        };
        // All rotations in index order give a non-planar (toroidal) embedding of K4.
        assert!(!verify_rotation_system(&k4, &bogus));
    }
}
