use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::reduce::{is_delta_reduced, is_trivial, normal_form};
use super::{RaagPresentation, Word};
use crate::error::RaagError;

pub const DEFAULT_SEARCH_BUDGET: u128 = 50_000_000;

/// All Δ-reduced words of length at most `max_len`, shortest first, each
/// length in lexicographic order.
pub fn delta_reduced_words(p: &RaagPresentation, max_len: usize) -> Vec<Word> {
    let letters = p.letters();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let mut v = w.0.clone();
                v.push(l);
                let cand = Word(v);
                if is_delta_reduced(p, &cand) {
                    next.push(cand);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSolution {
    pub x: Word,
    pub y: Word,
    pub z: Word,
    pub xy_commute: bool,
    pub xz_commute: bool,
    pub yz_commute: bool,
}

impl SquareSolution {
    pub fn pairwise_commuting(&self) -> bool {
        self.xy_commute && self.xz_commute && self.yz_commute
    }
}

fn commute(p: &RaagPresentation, a: &Word, b: &Word) -> bool {
    is_trivial(p, &Word::commutator(a, b))
}

pub fn search_square_relation(
    p: &RaagPresentation,
    max_len: usize,
) -> Result<Vec<SquareSolution>, RaagError> {
    search_square_relation_with_budget(p, max_len, DEFAULT_SEARCH_BUDGET)
}

/// Every triple of group elements of word length at most `max_len` with
/// `x^2 y^2 = z^2`, one normal-form representative each. The budget caps
/// the number of `(x, y)` pairs examined.
pub fn search_square_relation_with_budget(
    p: &RaagPresentation,
    max_len: usize,
    budget: u128,
) -> Result<Vec<SquareSolution>, RaagError> {
    let letters = 2 * p.rank() as u128;
    let words_bound: u128 = (0..=max_len as u32).fold(0u128, |acc, l| {
        acc.saturating_add(letters.saturating_pow(l))
    });
    let needed = words_bound.saturating_mul(words_bound);
    if needed > budget {
        return Err(RaagError::BudgetExceeded { needed, budget });
    }
    let elements: Vec<Word> = delta_reduced_words(p, max_len)
        .iter()
        .map(|w| normal_form(p, w))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut by_square: HashMap<Word, Vec<&Word>> = HashMap::new();
    for z in &elements {
        by_square
            .entry(normal_form(p, &z.pow(2)))
            .or_default()
            .push(z);
    }
    let mut found: Vec<SquareSolution> = elements
        .par_iter()
        .flat_map_iter(|x| {
            let x2 = x.pow(2);
            let by_square = &by_square;
            elements.iter().flat_map(move |y| {
                let key = normal_form(p, &x2.concat(&y.pow(2)));
                by_square
                    .get(&key)
                    .into_iter()
                    .flatten()
                    .map(move |&z| SquareSolution {
                        x: x.clone(),
                        y: y.clone(),
                        z: z.clone(),
                        xy_commute: commute(p, x, y),
                        xz_commute: commute(p, x, z),
                        yz_commute: commute(p, y, z),
                    })
            })
        })
        .collect();
    found.sort_by(|a, b| (&a.x, &a.y, &a.z).cmp(&(&b.x, &b.y, &b.z)));
    Ok(found)
}
