//! Run-length encoding `Δ`, its pseudo-inverses `Δ_α⁻¹`, and the
//! derivatives used to recognise smooth prefixes and smooth factors.

use crate::error::{Error, Result};
use crate::word::{Letter, OrderedAlphabet, Word};

/// `Δ(w)`: the lengths of the maximal runs of `w`. `Δ(ε) = ε`.
pub fn encode(w: &[u32]) -> Word {
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let j = i + w[i..].iter().take_while(|&&x| x == w[i]).count();
        out.push((j - i) as u32);
        i = j;
    }
    Word::from_vec(out)
}

/// `Δ_α⁻¹(u)`: alternating runs `α^{u[0]} β^{u[1]} α^{u[2]} ⋯`.
pub fn decode(u: &[u32], alpha: Letter, beta: Letter) -> Result<Word> {
    if alpha == beta {
        return Err(Error::SameLetters(alpha.get()));
    }
    if u.contains(&0) {
        return Err(Error::ZeroLetter);
    }
    let (out, _) = decode_capped(u, alpha.get(), beta.get(), usize::MAX);
    Ok(Word::from_vec(out))
}

/// Decodes until `cap` letters are produced. The flag reports whether the
/// output was cut short.
pub(crate) fn decode_capped(u: &[u32], alpha: u32, beta: u32, cap: usize) -> (Vec<u32>, bool) {
    let total: usize = u.iter().map(|&x| x as usize).sum();
    let mut out = Vec::with_capacity(total.min(cap));
    let mut cur = alpha;
    for &len in u {
        let room = cap - out.len();
        if (len as usize) >= room {
            out.resize(cap, cur);
            return (out, total > cap);
        }
        out.resize(out.len() + len as usize, cur);
        cur = if cur == alpha { beta } else { alpha };
    }
    (out, false)
}

/// Why a [`DeltaChain`] stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terminal {
    /// The last level has a single letter.
    SingleLetter,
    /// The next level would contain a letter outside the alphabet.
    LeftAlphabet,
    /// The input was empty.
    Empty,
}

/// The iterates `w, Δ(w), Δ²(w), …` up to the stopping rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaChain {
    pub levels: Vec<Word>,
    pub terminal: Terminal,
}

impl DeltaChain {
    /// First letters of every level.
    pub fn heads(&self) -> Word {
        Word::from_vec(self.levels.iter().filter_map(|l| l.first().copied()).collect())
    }
}

pub fn delta_chain(w: &[u32], alphabet: OrderedAlphabet) -> DeltaChain {
    let mut levels = vec![Word::from_vec(w.to_vec())];
    if w.is_empty() {
        return DeltaChain { levels, terminal: Terminal::Empty };
    }
    loop {
        let last = levels.last().unwrap();
        if last.len() == 1 {
            return DeltaChain { levels, terminal: Terminal::SingleLetter };
        }
        let next = encode(last);
        if !alphabet.is_word_over(&next) {
            return DeltaChain { levels, terminal: Terminal::LeftAlphabet };
        }
        levels.push(next);
    }
}

/// `D_r(w)`: `Δ(w)` with its last letter dropped when it is smaller than `b`.
pub fn right_derivative(w: &[u32], alphabet: OrderedAlphabet) -> Word {
    let mut d = encode(w).into_vec();
    let b = alphabet.b();
    match d.as_slice() {
        [] => {}
        [x] if *x < b => d.clear(),
        [.., last] if *last < b => {
            d.pop();
        }
        _ => {}
    }
    Word::from_vec(d)
}

/// True when every `D_r` iterate of `w` is a word over the alphabet.
pub fn is_r_smooth(w: &[u32], alphabet: OrderedAlphabet) -> bool {
    iterate_to_empty(w, alphabet, right_derivative)
}

/// `D(w)`: `Δ(w)` with boundary letters smaller than `b` removed.
pub fn derivative(w: &[u32], alphabet: OrderedAlphabet) -> Word {
    let d = encode(w).into_vec();
    let b = alphabet.b();
    match d.as_slice() {
        [] => Word::empty(),
        [x] if *x < b => Word::empty(),
        [_] => Word::from_vec(d),
        [first, .., last] => {
            let start = usize::from(*first < b);
            let end = d.len() - usize::from(*last < b);
            Word::from_vec(d[start..end].to_vec())
        }
    }
}

/// True when iterating `D` reaches `ε` through words over the alphabet.
pub fn is_smooth_factor(w: &[u32], alphabet: OrderedAlphabet) -> bool {
    iterate_to_empty(w, alphabet, derivative)
}

fn iterate_to_empty(w: &[u32], alphabet: OrderedAlphabet, step: fn(&[u32], OrderedAlphabet) -> Word) -> bool {
    // Each step shrinks the word: Δ only keeps its length on words whose
    // runs all have length 1, and then the trailing 1 < b is removed.
    let mut cur = Word::from_vec(w.to_vec());
    loop {
        if cur.is_empty() {
            return true;
        }
        if !alphabet.is_word_over(&cur) {
            return false;
        }
        cur = step(&cur, alphabet);
    }
}
