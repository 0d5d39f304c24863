use std::collections::{BTreeMap, HashSet, VecDeque};

use super::reduce::{back_available, delta_reduce, front_available, lex_least};
use super::{Letter, RaagPresentation, Word};

/// Conjugates away letters that can be brought to both ends with opposite
/// signs, until none remain. The result is Δ-reduced.
pub fn cyclic_delta_reduce(p: &RaagPresentation, w: &Word) -> Word {
    let (mut cur, _) = delta_reduce(p, w);
    'outer: loop {
        let back: Vec<usize> = back_available(p, &cur.0).collect();
        for f in front_available(p, &cur.0).collect::<Vec<_>>() {
            let target = cur.0[f].inverse();
            if let Some(&b) = back.iter().find(|&&b| cur.0[b] == target) {
                cur.0.remove(b.max(f));
                cur.0.remove(b.min(f));
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Groups the letters of `w` by connected component of the non-commutation
/// graph on its support, keeping their relative order.
fn factor(p: &RaagPresentation, w: &[Letter]) -> BTreeMap<usize, Vec<Letter>> {
    let support: Vec<usize> = {
        let mut s: Vec<usize> = w.iter().map(|l| l.gen).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let mut root: BTreeMap<usize, usize> = BTreeMap::new();
    for &g in &support {
        if root.contains_key(&g) {
            continue;
        }
        root.insert(g, g);
        let mut queue = VecDeque::from([g]);
        while let Some(x) = queue.pop_front() {
            for &y in &support {
                if !root.contains_key(&y) && !p.commutes(x, y) {
                    root.insert(y, g);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut parts: BTreeMap<usize, Vec<Letter>> = BTreeMap::new();
    for &l in w {
        parts.entry(root[&l.gen]).or_default().push(l);
    }
    parts
}

/// Whether `b` is reachable from `a` by moving a front-available letter to
/// the back, up to commutation. Both must be cyclically Δ-reduced.
fn transposition_orbit_contains(p: &RaagPresentation, a: &[Letter], b: &Word) -> bool {
    let start = lex_least(p, a);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if &cur == b {
            return true;
        }
        for k in front_available(p, &cur.0).collect::<Vec<_>>() {
            let mut next = cur.0.clone();
            let l = next.remove(k);
            next.push(l);
            let next = lex_least(p, &next);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

pub fn conjugate(p: &RaagPresentation, a: &Word, b: &Word) -> bool {
    let ca = cyclic_delta_reduce(p, a);
    let cb = cyclic_delta_reduce(p, b);
    if ca.len() != cb.len() {
        return false;
    }
    let (mut la, mut lb) = (ca.0.clone(), cb.0.clone());
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb {
        return false;
    }
    let fa = factor(p, &ca.0);
    let fb = factor(p, &cb.0);
    if fa.keys().ne(fb.keys()) {
        return false;
    }
    fa.iter().all(|(k, part)| {
        let target = lex_least(p, &fb[k]);
        part.len() == target.len() && transposition_orbit_contains(p, part, &target)
    })
}
