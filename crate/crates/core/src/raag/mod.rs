//! Right-angled Artin groups given by a defining graph.
//!
//! Generators are the vertices of the defining graph, in vertex order, and
//! two generators commute exactly when they are adjacent. Words are stored as
//! generator indices; the presentation converts to and from the textual
//! `a b^-1` syntax.

mod certificate;
mod conjugacy;
mod expression;
mod reduce;
mod search;

pub use certificate::{Move, MoveCertificate};
pub use conjugacy::{conjugate, cyclic_delta_reduce};
pub use expression::{ends_in, Expression, Syllable};
pub use reduce::{
    delta_reduce, free_reduce, identity_certificate, is_delta_reduced, is_trivial, normal_form,
    words_equal, IdentityVerdict,
};
pub use search::{
    delta_reduced_words, search_square_relation, search_square_relation_with_budget, SquareSolution,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::RaagError;
use crate::graph::SimplicialGraph;

/// A signed generator. Ordered by generator first, then `+` before `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Self { gen, inv }
    }

    pub fn pos(gen: usize) -> Self {
        Self { gen, inv: false }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn sign(self) -> i8 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn pow(&self, k: usize) -> Self {
        Self(self.0.repeat(k))
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Exponent sum of each generator.
    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for l in &self.0 {
            v[l.gen] += l.sign() as i64;
        }
        v
    }

    pub fn rotate(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Self(v)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaagPresentation {
    graph: SimplicialGraph,
    commute: Vec<Vec<bool>>,
}

impl RaagPresentation {
    pub fn new(graph: SimplicialGraph) -> Self {
        let n = graph.vertex_count();
        let mut commute = vec![vec![false; n]; n];
        for (a, b) in graph.edges() {
            commute[a][b] = true;
            commute[b][a] = true;
        }
        Self { graph, commute }
    }

    /// Free group on the given generators.
    pub fn free<S: Into<String>>(
        gens: impl IntoIterator<Item = S>,
    ) -> Result<Self, crate::GraphError> {
        Ok(Self::new(SimplicialGraph::with_vertices(gens)?))
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn generator(&self, name: &str) -> Result<usize, RaagError> {
        self.graph
            .vertex_index(name)
            .ok_or_else(|| RaagError::UnknownGenerator(name.to_string()))
    }

    pub fn generator_name(&self, gen: usize) -> &str {
        self.graph.name(gen)
    }

    /// Whether two generators commute by a defining relation.
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.commute[a][b]
    }

    /// All `2 * rank` letters in increasing order.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.rank())
            .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
            .collect()
    }

    /// Parses whitespace-separated letters `a`, `a^-1`, `a^1`.
    pub fn parse_word(&self, text: &str) -> Result<Word, RaagError> {
        text.split_whitespace()
            .map(|tok| self.parse_letter(tok))
            .collect()
    }

    fn parse_letter(&self, tok: &str) -> Result<Letter, RaagError> {
        match tok.rsplit_once('^') {
            None => Ok(Letter::pos(self.generator(tok)?)),
            Some((name, exp)) => {
                let inv = match exp {
                    "-1" => true,
                    "1" | "+1" => false,
                    _ => return Err(RaagError::BadLetter(tok.to_string())),
                };
                if name.is_empty() {
                    return Err(RaagError::BadLetter(tok.to_string()));
                }
                Ok(Letter::new(self.generator(name)?, inv))
            }
        }
    }

    pub fn format_letter(&self, l: Letter) -> String {
        if l.inv {
            format!("{}^-1", self.generator_name(l.gen))
        } else {
            self.generator_name(l.gen).to_string()
        }
    }

    /// Textual form; the empty word formats as the empty string.
    pub fn format_word(&self, w: &Word) -> String {
        w.0.iter()
            .map(|&l| self.format_letter(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> impl fmt::Display + 'a {
        struct D<'a>(&'a RaagPresentation, &'a Word);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.1.is_empty() {
                    f.write_str("1")
                } else {
                    f.write_str(&self.0.format_word(self.1))
                }
            }
        }
        D(self, w)
    }
}
