use serde::{Deserialize, Serialize};

use super::reduce::delta_reduce;
use super::{Letter, RaagPresentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

/// A product of generator powers with nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Expression(pub Vec<Syllable>);

impl Expression {
    /// Groups maximal runs of one generator, amalgamating left to right.
    pub fn from_word(w: &Word) -> Self {
        let mut out: Vec<Syllable> = Vec::new();
        for &l in w.letters() {
            push(
                &mut out,
                Syllable {
                    gen: l.gen,
                    exp: l.sign() as i64,
                },
            );
        }
        Self(out)
    }

    pub fn syllable_length(&self) -> usize {
        self.0.len()
    }

    pub fn to_word(&self) -> Word {
        self.0
            .iter()
            .flat_map(|s| {
                std::iter::repeat_n(Letter::new(s.gen, s.exp < 0), s.exp.unsigned_abs() as usize)
            })
            .collect()
    }

    /// Shuffles syllables together and amalgamates until no two syllables of
    /// one generator are separated only by syllables commuting with it.
    pub fn reduce(&self, p: &RaagPresentation) -> Self {
        let (w, _) = delta_reduce(p, &self.to_word());
        let mut s = Self::from_word(&w).0;
        'outer: loop {
            for i in 0..s.len() {
                for j in i + 1..s.len() {
                    if s[j].gen == s[i].gen {
                        s[i].exp += s[j].exp;
                        s.remove(j);
                        if s[i].exp == 0 {
                            s.remove(i);
                        }
                        continue 'outer;
                    }
                    if !p.commutes(s[j].gen, s[i].gen) {
                        break;
                    }
                }
            }
            return Self(s);
        }
    }

    pub fn format(&self, p: &RaagPresentation) -> String {
        self.0
            .iter()
            .map(|s| format!("{}^{}", p.generator_name(s.gen), s.exp))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn push(out: &mut Vec<Syllable>, s: Syllable) {
    match out.last_mut() {
        Some(last) if last.gen == s.gen => {
            last.exp += s.exp;
            if last.exp == 0 {
                out.pop();
            }
        }
        _ => out.push(s),
    }
}

/// Whether the reduced form of `x` can be shuffled to start with a power of
/// `gen`.
pub fn ends_in(p: &RaagPresentation, x: &Expression, gen: usize) -> bool {
    let r = x.reduce(p);
    for s in &r.0 {
        if s.gen == gen {
            return true;
        }
        if !p.commutes(s.gen, gen) {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn syllables() {
        let p = free(2);
        let x = Expression::from_word(&w(&p, "a a b^-1 b^-1 b^-1 a"));
        assert_eq!(x.format(&p), "a^2 b^-3 a^1");
        assert_eq!(x.syllable_length(), 3);
        assert_eq!(x.to_word(), w(&p, "a a b^-1 b^-1 b^-1 a"));
        assert!(Expression::from_word(&w(&p, "a a^-1")).0.is_empty());
    }

    #[test]
    fn reduction_amalgamates_across_commuting_syllables() {
        let p = edge();
        let x = Expression::from_word(&w(&p, "a b a"));
        assert_eq!(x.reduce(&p).format(&p), "a^2 b^1");
        let y = Expression::from_word(&w(&p, "a b a^-1"));
        assert_eq!(y.reduce(&p).format(&p), "b^1");
        let f = free(2);
        assert_eq!(
            Expression::from_word(&w(&f, "a b a"))
                .reduce(&f)
                .syllable_length(),
            3
        );
    }

    #[test]
    fn ending_letters() {
        let p = edge();
        let x = Expression::from_word(&w(&p, "a b"));
        assert!(ends_in(&p, &x, 0) && ends_in(&p, &x, 1));
        let f = free(2);
        let y = Expression::from_word(&w(&f, "a b"));
        assert!(ends_in(&f, &y, 0));
        assert!(!ends_in(&f, &y, 1));
        assert!(!ends_in(&p, &Expression::default(), 0));
    }
}
