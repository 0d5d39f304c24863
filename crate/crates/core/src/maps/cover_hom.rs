use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::MapsError;
use crate::graph::{opposite_graph, validate_cover, GraphMorphism};
use crate::raag::{
    delta_reduced_words, is_delta_reduced, is_trivial, normal_form, Letter, RaagPresentation, Word,
};

/// The substitution sending each generator to the product of its lifts.
#[derive(Clone, Debug)]
pub struct CoverHomomorphism {
    pub base: RaagPresentation,
    pub cover: RaagPresentation,
    pub sheets: usize,
    /// Image of every base generator, lifts in source vertex order.
    pub images: Vec<Word>,
}

impl CoverHomomorphism {
    pub fn apply(&self, w: &Word) -> Word {
        w.letters()
            .iter()
            .flat_map(|l| {
                if l.inv {
                    self.images[l.gen].inverse().0
                } else {
                    self.images[l.gen].0.clone()
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverHomReport {
    pub sheets: usize,
    pub images: Vec<(String, String)>,
    pub lifts_commute: bool,
    /// Pairs of lifts of one generator that fail to commute.
    pub noncommuting_lifts: Vec<(String, String)>,
    pub corpus_max_len: usize,
    pub corpus_size: usize,
    pub lengths_multiplied: bool,
    pub all_images_reduced: bool,
    pub non_reduced: Vec<String>,
    pub distinct_normal_forms: bool,
    /// Pairs of distinct base elements with equal images.
    pub collisions: Vec<(String, String)>,
}

impl CoverHomReport {
    pub fn passed(&self) -> bool {
        self.lifts_commute
            && self.lengths_multiplied
            && self.all_images_reduced
            && self.distinct_normal_forms
    }
}

/// Builds the homomorphism from a cover of the opposite of the defining
/// graph of `p`; the covering group is defined by the opposite of the
/// cover's source.
pub fn cover_homomorphism(
    p: &RaagPresentation,
    cover: &GraphMorphism,
    sheets: usize,
) -> Result<CoverHomomorphism, MapsError> {
    let expected = opposite_graph(p.graph());
    if cover.target().vertices() != expected.vertices()
        || cover.target().edge_list() != expected.edge_list()
    {
        return Err(MapsError::TargetMismatch);
    }
    let verdict = validate_cover(cover, sheets);
    if !verdict.valid {
        let detail = verdict
            .failure
            .map(|f| format!("{} {:?}: {}", f.vertex, f.side, f.reason))
            .unwrap_or_default();
        return Err(MapsError::InvalidCover(detail));
    }
    let covering = RaagPresentation::new(opposite_graph(cover.source()));
    let images = (0..p.rank())
        .map(|h| cover.fiber(h).into_iter().map(Letter::pos).collect())
        .collect();
    Ok(CoverHomomorphism {
        base: p.clone(),
        cover: covering,
        sheets,
        images,
    })
}

/// Checks commuting lifts, and over all Δ-reduced words up to `max_len`:
/// length scaling, reducedness of images and distinctness of their normal
/// forms.
pub fn check_cover_homomorphism(j: &CoverHomomorphism, max_len: usize) -> CoverHomReport {
    let (p, q) = (&j.base, &j.cover);
    let mut noncommuting_lifts = Vec::new();
    for img in &j.images {
        for (i, a) in img.letters().iter().enumerate() {
            for b in &img.letters()[i + 1..] {
                let c = Word::commutator(&Word(vec![*a]), &Word(vec![*b]));
                if !is_trivial(q, &c) {
                    noncommuting_lifts.push((q.format_letter(*a), q.format_letter(*b)));
                }
            }
        }
    }
    let corpus = delta_reduced_words(p, max_len);
    let mut lengths_multiplied = true;
    let mut non_reduced = Vec::new();
    let mut by_image: HashMap<Word, Word> = HashMap::new();
    let mut collisions = Vec::new();
    for w in &corpus {
        let img = j.apply(w);
        lengths_multiplied &= img.len() == j.sheets * w.len();
        if !is_delta_reduced(q, &img) {
            non_reduced.push(p.format_word(w));
        }
        let base_nf = normal_form(p, w);
        match by_image.insert(normal_form(q, &img), base_nf.clone()) {
            Some(prev) if prev != base_nf => {
                collisions.push((p.format_word(&prev), p.format_word(&base_nf)))
            }
            _ => {}
        }
    }
    CoverHomReport {
        sheets: j.sheets,
        images: j
            .images
            .iter()
            .enumerate()
            .map(|(h, w)| (p.generator_name(h).to_string(), q.format_word(w)))
            .collect(),
        lifts_commute: noncommuting_lifts.is_empty(),
        noncommuting_lifts,
        corpus_max_len: max_len,
        corpus_size: corpus.len(),
        lengths_multiplied,
        all_images_reduced: non_reduced.is_empty(),
        non_reduced,
        distinct_normal_forms: collisions.is_empty(),
        collisions,
    }
}
