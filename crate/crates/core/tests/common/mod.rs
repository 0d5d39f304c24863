//! Independent oracles: plain string rewriting on packed words, using only
//! the adjacency of the defining graph.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use cubist_core::graph::SimplicialGraph;
use cubist_core::raag::{Letter, RaagPresentation, Word};
use rand::Rng;

/// The four defining graphs on three vertices, up to isomorphism.
pub fn three_vertex_graphs() -> Vec<(&'static str, RaagPresentation)> {
    let g = |edges: &[(&'static str, &'static str)]| {
        RaagPresentation::new(SimplicialGraph::new(["a", "b", "c"], edges.iter().copied()).unwrap())
    };
    vec![
        ("empty", g(&[])),
        ("edge", g(&[("a", "b")])),
        ("path", g(&[("a", "b"), ("b", "c")])),
        ("triangle", g(&[("a", "b"), ("b", "c"), ("a", "c")])),
    ]
}

/// Every word (reduced or not) of length at most `max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..rank)
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Word(v)
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn random_word(rng: &mut impl Rng, rank: usize, len: usize) -> Word {
    (0..len)
        .map(|_| Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5)))
        .collect()
}

/// Letters packed 3 bits each, length in the top byte.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Packed(u64);

impl Packed {
    fn from_word(w: &Word) -> Self {
        assert!(w.len() <= 16);
        let mut bits = (w.len() as u64) << 56;
        for (i, l) in w.letters().iter().enumerate() {
            bits |= ((2 * l.gen + l.inv as usize) as u64) << (3 * i);
        }
        Packed(bits)
    }

    fn len(self) -> usize {
        (self.0 >> 56) as usize
    }

    fn at(self, i: usize) -> usize {
        ((self.0 >> (3 * i)) & 7) as usize
    }

    fn build(codes: &[usize]) -> Self {
        let mut bits = (codes.len() as u64) << 56;
        for (i, &c) in codes.iter().enumerate() {
            bits |= (c as u64) << (3 * i);
        }
        Packed(bits)
    }

    fn codes(self) -> Vec<usize> {
        (0..self.len()).map(|i| self.at(i)).collect()
    }
}

fn commute_codes(g: &SimplicialGraph, x: usize, y: usize) -> bool {
    x / 2 != y / 2 && g.has_edge(x / 2, y / 2)
}

fn inverse_codes(x: usize, y: usize) -> bool {
    x / 2 == y / 2 && x != y
}

/// Words reachable by swapping adjacent commuting letters and deleting
/// adjacent inverse pairs, optionally also by cyclic rotation.
fn closure(
    g: &SimplicialGraph,
    start: Packed,
    rotations: bool,
    stop_at_empty: bool,
) -> HashSet<Packed> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let c = cur.codes();
        if c.is_empty() && stop_at_empty {
            break;
        }
        let mut next = Vec::new();
        for i in 0..c.len().saturating_sub(1) {
            if commute_codes(g, c[i], c[i + 1]) {
                let mut d = c.clone();
                d.swap(i, i + 1);
                next.push(Packed::build(&d));
            }
            if inverse_codes(c[i], c[i + 1]) {
                let mut d = c.clone();
                d.drain(i..i + 2);
                next.push(Packed::build(&d));
            }
        }
        if rotations && c.len() > 1 {
            let mut d = c.clone();
            d.rotate_left(1);
            next.push(Packed::build(&d));
        }
        for n in next {
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Whether the word rewrites to the empty word. Words with nonzero exponent
/// sums are rejected up front: no rewrite changes those sums.
pub fn oracle_is_trivial(p: &RaagPresentation, w: &Word) -> bool {
    if w.abelianization(p.rank()).iter().any(|&e| e != 0) {
        return false;
    }
    closure(p.graph(), Packed::from_word(w), false, true).contains(&Packed::build(&[]))
}

/// Conjugacy class fingerprint: the least word among the shortest words
/// reachable by rotations, commutations and cancellations.
pub fn oracle_conjugacy_key(p: &RaagPresentation, w: &Word) -> (usize, Vec<usize>) {
    let reach = closure(p.graph(), Packed::from_word(w), true, false);
    let min_len = reach.iter().map(|x| x.len()).min().unwrap();
    let best = reach
        .into_iter()
        .filter(|x| x.len() == min_len)
        .map(Packed::codes)
        .min()
        .unwrap();
    (min_len, best)
}

/// Walks the conjugates `g w g^-1` for `|g| <= max_g`, one letter of `g`
/// at a time, identifying elements through `canon`. Returns the targets
/// reached; stops early once all are.
pub fn conjugates_within(
    rank: usize,
    w: &Word,
    max_g: usize,
    canon: impl Fn(&Word) -> Word,
    targets: &HashSet<Word>,
) -> HashSet<Word> {
    let letters: Vec<Letter> = (0..rank)
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    let mut found = HashSet::new();
    let mut seen = HashSet::new();
    let start = canon(w);
    seen.insert(start.clone());
    if targets.contains(&start) {
        found.insert(start);
    }
    let mut layer = vec![canon(w)];
    for _ in 0..max_g {
        if found.len() == targets.len() {
            break;
        }
        let mut next = Vec::new();
        for cur in &layer {
            for &x in &letters {
                let mut v = vec![x];
                v.extend_from_slice(cur.letters());
                v.push(x.inverse());
                let conj = free_cancel(v);
                let key = canon(&conj);
                if seen.insert(key.clone()) {
                    if targets.contains(&key) {
                        found.insert(key.clone());
                    }
                    next.push(key);
                }
            }
        }
        layer = next;
    }
    found
}

fn free_cancel(v: Vec<Letter>) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in v {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

/// The definition read literally: no `u^e ... u^-e` whose interior letters
/// all commute with `u`.
pub fn is_literally_delta_reduced(p: &RaagPresentation, w: &Word) -> bool {
    let l = w.letters();
    for j in 0..l.len() {
        for i in 0..j {
            if l[i].gen == l[j].gen
                && l[i].inv != l[j].inv
                && l[i + 1..j]
                    .iter()
                    .all(|x| x.gen != l[i].gen && p.graph().has_edge(x.gen, l[i].gen))
            {
                return false;
            }
        }
    }
    true
}
