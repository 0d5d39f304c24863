use serde::{Deserialize, Serialize};

use super::{Letter, RaagPresentation, Word};
use crate::error::RaagError;

/// One elementary rewrite of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Insert `letter letter^-1` before `position`.
    Insertion { position: usize, letter: Letter },
    /// Delete the inverse pair at `position`, `position + 1`.
    Deletion { position: usize },
    /// Swap the commuting letters at `position`, `position + 1`.
    Commutation { position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub start: Word,
    pub end: Word,
    pub moves: Vec<Move>,
}

impl MoveCertificate {
    pub fn new(start: Word) -> Self {
        Self {
            end: start.clone(),
            start,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn count(&self, pred: impl Fn(&Move) -> bool) -> usize {
        self.moves.iter().filter(|m| pred(m)).count()
    }

    /// Applies the moves to `start`, validating each step, and checks the
    /// result against `end`.
    pub fn replay(&self, p: &RaagPresentation) -> Result<Word, RaagError> {
        let mut w = self.start.0.clone();
        for (step, m) in self.moves.iter().enumerate() {
            apply(p, &mut w, *m).map_err(|detail| RaagError::Replay { step, detail })?;
        }
        if w != self.end.0 {
            return Err(RaagError::Replay {
                step: self.moves.len(),
                detail: format!(
                    "ends at {} instead of {}",
                    p.display(&Word(w)),
                    p.display(&self.end)
                ),
            });
        }
        Ok(Word(w))
    }
}

pub(crate) fn apply(p: &RaagPresentation, w: &mut Vec<Letter>, m: Move) -> Result<(), String> {
    match m {
        Move::Insertion { position, letter } => {
            if position > w.len() {
                return Err(format!(
                    "insertion at {position} past the end ({})",
                    w.len()
                ));
            }
            if letter.gen >= p.rank() {
                return Err(format!("unknown generator #{}", letter.gen));
            }
            w.splice(position..position, [letter, letter.inverse()]);
        }
        Move::Deletion { position } => {
            if position + 1 >= w.len() {
                return Err(format!("deletion at {position} past the end ({})", w.len()));
            }
            if w[position].inverse() != w[position + 1] {
                return Err(format!("letters at {position} are not an inverse pair"));
            }
            w.drain(position..position + 2);
        }
        Move::Commutation { position } => {
            if position + 1 >= w.len() {
                return Err(format!(
                    "commutation at {position} past the end ({})",
                    w.len()
                ));
            }
            let (a, b) = (w[position], w[position + 1]);
            if !p.commutes(a.gen, b.gen) {
                return Err(format!(
                    "{} and {} do not commute",
                    p.generator_name(a.gen),
                    p.generator_name(b.gen)
                ));
            }
            w.swap(position, position + 1);
        }
    }
    Ok(())
}
