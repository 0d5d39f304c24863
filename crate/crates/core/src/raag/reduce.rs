use super::certificate::{Move, MoveCertificate};
use super::{Letter, RaagPresentation, Word};

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

/// Position `i < j` of a letter cancelling `w[j]`, with everything strictly
/// between commuting with it. Takes the nearest such `i`.
fn partner(p: &RaagPresentation, w: &[Letter], j: usize) -> Option<usize> {
    let u = w[j];
    for i in (0..j).rev() {
        if w[i] == u.inverse() {
            return Some(i);
        }
        if !p.commutes(w[i].gen, u.gen) {
            return None;
        }
    }
    None
}

/// First cancellable pair: smallest `j`, then largest `i`.
fn cancellable_pair(p: &RaagPresentation, w: &[Letter]) -> Option<(usize, usize)> {
    (1..w.len()).find_map(|j| partner(p, w, j).map(|i| (i, j)))
}

pub fn is_delta_reduced(p: &RaagPresentation, w: &Word) -> bool {
    cancellable_pair(p, w.letters()).is_none()
}

/// Removes cancellable pairs one at a time, recording each as commutations
/// carrying the left letter rightwards followed by one deletion.
pub fn delta_reduce(p: &RaagPresentation, w: &Word) -> (Word, MoveCertificate) {
    let mut cert = MoveCertificate::new(w.clone());
    let mut cur = w.0.clone();
    while let Some((i, j)) = cancellable_pair(p, &cur) {
        for k in i..j - 1 {
            cert.moves.push(Move::Commutation { position: k });
        }
        cert.moves.push(Move::Deletion { position: j - 1 });
        cur.remove(j);
        cur.remove(i);
    }
    cert.end = Word(cur.clone());
    (Word(cur), cert)
}

/// Lexicographically least word in the commutation class of a Δ-reduced
/// form of `w`.
pub fn normal_form(p: &RaagPresentation, w: &Word) -> Word {
    let (reduced, _) = delta_reduce(p, w);
    lex_least(p, &reduced.0)
}

pub(crate) fn lex_least(p: &RaagPresentation, w: &[Letter]) -> Word {
    let mut rest: Vec<Letter> = w.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let k = front_available(p, &rest)
            .min_by_key(|&k| rest[k])
            .expect("a nonempty word has an available letter");
        out.push(rest.remove(k));
    }
    Word(out)
}

/// Positions whose letter commutes with every earlier letter; of equal
/// letters only the first qualifies.
pub(crate) fn front_available<'a>(
    p: &'a RaagPresentation,
    w: &'a [Letter],
) -> impl Iterator<Item = usize> + 'a {
    (0..w.len()).filter(move |&k| w[..k].iter().all(|x| p.commutes(x.gen, w[k].gen)))
}

pub(crate) fn back_available<'a>(
    p: &'a RaagPresentation,
    w: &'a [Letter],
) -> impl Iterator<Item = usize> + 'a {
    (0..w.len()).filter(move |&k| w[k + 1..].iter().all(|x| p.commutes(x.gen, w[k].gen)))
}

pub fn words_equal(p: &RaagPresentation, a: &Word, b: &Word) -> bool {
    normal_form(p, a) == normal_form(p, b)
}

pub fn is_trivial(p: &RaagPresentation, w: &Word) -> bool {
    delta_reduce(p, w).0.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityVerdict {
    /// Replay-verified rewrite of the word to the empty word.
    Trivial(MoveCertificate),
    /// The word is not the identity; carries its normal form.
    NonTrivial(Word),
}

pub fn identity_certificate(p: &RaagPresentation, w: &Word) -> IdentityVerdict {
    let (reduced, cert) = delta_reduce(p, w);
    if !reduced.is_empty() {
        return IdentityVerdict::NonTrivial(lex_least(p, &reduced.0));
    }
    cert.replay(p).expect("reduction certificates replay");
    IdentityVerdict::Trivial(cert)
}
