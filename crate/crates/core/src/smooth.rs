//! Smooth infinite words: the `Φ` bijection, lazy prefix streams built
//! from directive sequences, Kolakoski fixed points and extremal words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::runlength::{decode_capped, delta_chain, is_r_smooth};
use crate::word::{Letter, OrderedAlphabet, ParityClass, Word};

/// An eventually periodic infinite word `preperiod · period^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectiveSequence {
    preperiod: Word,
    period: Word,
}

impl DirectiveSequence {
    pub fn new(preperiod: Word, period: Word) -> Result<DirectiveSequence> {
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(DirectiveSequence { preperiod, period })
    }

    /// `u[..n-1] · u[n-1]^ω`.
    pub fn repeat_last(prefix: &Word) -> Result<DirectiveSequence> {
        let (&last, init) = prefix.split_last().ok_or(Error::EmptyWord)?;
        DirectiveSequence::new(Word::from_vec(init.to_vec()), Word::from_vec(vec![last]))
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn letter(&self, i: usize) -> u32 {
        match self.preperiod.get(i) {
            Some(&x) => x,
            None => self.period[(i - self.preperiod.len()) % self.period.len()],
        }
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word::from_vec((0..k).map(|i| self.letter(i)).collect())
    }

    /// Smallest prefix length after which the sequence is purely periodic.
    pub fn defining_length(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }

    fn letters(&self) -> impl Iterator<Item = u32> + '_ {
        self.preperiod.iter().chain(self.period.iter()).copied()
    }
}

impl fmt::Display for DirectiveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.preperiod, self.period)
    }
}

impl FromStr for DirectiveSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<DirectiveSequence> {
        let (pre, period) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse { input: s.to_string(), reason: "expected PRE:PERIOD".to_string() })?;
        let period: Word = period.parse()?;
        if period.is_empty() {
            return Err(Error::Parse { input: s.to_string(), reason: "the period must be nonempty".to_string() });
        }
        DirectiveSequence::new(pre.parse()?, period)
    }
}

/// Where a [`PrefixStream`] takes its letters from.
#[derive(Clone, Debug)]
pub enum Source {
    /// `Φ⁻¹` of a directive sequence.
    FromDirective(DirectiveSequence),
    /// The fixed point of `Δ` over `{first, second}` starting with `first`.
    KolakoskiFixpoint { first: Letter, second: Letter },
    /// `Δ_1⁻¹` applied to another stream.
    Delta1Inverse(Box<PrefixStream>),
}

/// A growable prefix of an infinite word. Every materialized letter is final.
#[derive(Clone, Debug)]
pub struct PrefixStream {
    source: Source,
    alphabet: OrderedAlphabet,
    materialized: Vec<u32>,
    // directive letters consumed, Kolakoski runs written, or inner letters decoded
    cursor: usize,
}

impl PrefixStream {
    fn with_source(source: Source, alphabet: OrderedAlphabet) -> PrefixStream {
        PrefixStream { source, alphabet, materialized: Vec::new(), cursor: 0 }
    }

    pub fn alphabet(&self) -> OrderedAlphabet {
        self.alphabet
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    /// The letters produced so far.
    pub fn materialized(&self) -> &[u32] {
        &self.materialized
    }

    /// The first `n` letters.
    pub fn take(&mut self, n: usize) -> &[u32] {
        if self.materialized.len() < n {
            self.grow(n);
        }
        &self.materialized[..n]
    }

    /// The first `n` letters as an owned word.
    pub fn prefix(&mut self, n: usize) -> Word {
        Word::from_vec(self.take(n).to_vec())
    }

    fn grow(&mut self, n: usize) {
        let target = n.max(2 * self.materialized.len()).max(64);
        match &mut self.source {
            Source::FromDirective(d) => {
                let mut k = self.cursor.max(d.defining_length());
                loop {
                    let w = expand(d, k, target, self.alphabet);
                    if w.len() >= target {
                        self.materialized = w;
                        self.cursor = k;
                        return;
                    }
                    k *= 2;
                }
            }
            Source::KolakoskiFixpoint { first, second } => {
                let out = &mut self.materialized;
                while out.len() < target {
                    let r = self.cursor;
                    let letter = if r % 2 == 0 { first.get() } else { second.get() };
                    // Run r starts at position r only while bootstrapping.
                    let count = out.get(r).copied().unwrap_or(letter);
                    out.resize(out.len() + count as usize, letter);
                    self.cursor += 1;
                }
            }
            Source::Delta1Inverse(inner) => {
                let beta = self.alphabet.b();
                while self.materialized.len() < target {
                    let r = self.cursor;
                    let count = inner.take(r + 1)[r];
                    let letter = if r % 2 == 0 { 1 } else { beta };
                    let len = self.materialized.len();
                    self.materialized.resize(len + count as usize, letter);
                    self.cursor += 1;
                }
            }
        }
    }
}

/// Letters of `Φ⁻¹(d)` obtained from the first `k` directive letters,
/// each level cut after `cap + 1` letters.
///
/// A level decoded in full is followed by the complement of its last letter:
/// the run it closes is complete, so the next run must start.
fn expand(d: &DirectiveSequence, k: usize, cap: usize, alphabet: OrderedAlphabet) -> Vec<u32> {
    let mut w = vec![d.letter(k - 1)];
    for j in (0..k - 1).rev() {
        let alpha = d.letter(j);
        let beta = alphabet.complement_of(alpha).expect("directive letters are checked against the alphabet");
        let (mut next, cut) = decode_capped(&w, alpha, beta, cap + 1);
        if !cut {
            let last = *next.last().expect("decoded level is nonempty");
            next.push(if last == alpha { beta } else { alpha });
        }
        w = next;
    }
    w
}

/// `Φ(w)` truncated to the levels of the `Δ` tower of `w`.
pub fn phi(w: &[u32], alphabet: OrderedAlphabet) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_r_smooth(w, alphabet) {
        return Err(Error::NotSmoothPrefix { word: crate::word::render(w), alphabet });
    }
    Ok(delta_chain(w, alphabet).heads())
}

/// The word `w_k` of the nested decoding `Δ⁻¹_{u[0]}(⋯Δ⁻¹_{u[k−2]}(u[k−1]))`.
///
/// Only the innermost letter `u[k−1]` may lie outside the alphabet.
pub fn phi_inverse_prefix(u: &[u32], alphabet: OrderedAlphabet) -> Result<Word> {
    let (&top, lower) = u.split_last().ok_or(Error::EmptyWord)?;
    if top == 0 {
        return Err(Error::ZeroLetter);
    }
    let mut w = vec![top];
    for &alpha in lower.iter().rev() {
        let beta = alphabet.require(alpha)?;
        w = decode_capped(&w, alpha, beta, usize::MAX).0;
    }
    Ok(Word::from_vec(w))
}

pub fn stream_from_directive(d: &DirectiveSequence, alphabet: OrderedAlphabet) -> Result<PrefixStream> {
    for x in d.letters() {
        alphabet.require(x)?;
    }
    Ok(PrefixStream::with_source(Source::FromDirective(d.clone()), alphabet))
}

pub fn kolakoski(first: u32, second: u32) -> Result<PrefixStream> {
    let alphabet = OrderedAlphabet::new(first.min(second), first.max(second)).map_err(|e| match e {
        Error::BadAlphabet(x, _) => Error::SameLetters(x),
        e => e,
    })?;
    let source = Source::KolakoskiFixpoint { first: Letter::new(first)?, second: Letter::new(second)? };
    Ok(PrefixStream::with_source(source, alphabet))
}

/// Directive of the lexicographically smallest smooth word.
pub fn minimal_directive(alphabet: OrderedAlphabet) -> Result<DirectiveSequence> {
    let (a, b) = (alphabet.a(), alphabet.b());
    match alphabet.parity_class() {
        ParityClass::EvenEven => DirectiveSequence::new(Word::from_vec(vec![a]), Word::from_vec(vec![b])),
        ParityClass::OddOdd => DirectiveSequence::new(Word::empty(), Word::from_vec(vec![a, b])),
        class => Err(Error::UnsupportedClass(class)),
    }
}

/// Directive of the lexicographically largest smooth word.
pub fn maximal_directive(alphabet: OrderedAlphabet) -> Result<DirectiveSequence> {
    let (a, b) = (alphabet.a(), alphabet.b());
    match alphabet.parity_class() {
        ParityClass::EvenEven => DirectiveSequence::new(Word::empty(), Word::from_vec(vec![b])),
        ParityClass::OddOdd => DirectiveSequence::new(Word::empty(), Word::from_vec(vec![b, a])),
        class => Err(Error::UnsupportedClass(class)),
    }
}

pub fn minimal_word(alphabet: OrderedAlphabet) -> Result<PrefixStream> {
    stream_from_directive(&minimal_directive(alphabet)?, alphabet)
}

pub fn maximal_word(alphabet: OrderedAlphabet) -> Result<PrefixStream> {
    stream_from_directive(&maximal_directive(alphabet)?, alphabet)
}

/// `Δ_1⁻¹` of a stream over an alphabet `{1, b}`.
pub fn delta1_inverse_stream(s: PrefixStream) -> Result<PrefixStream> {
    let alphabet = s.alphabet();
    if alphabet.a() != 1 {
        return Err(Error::NotInAlphabet { letter: 1, alphabet });
    }
    Ok(PrefixStream::with_source(Source::Delta1Inverse(Box::new(s)), alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runlength::{decode, encode};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn al(a: u32, b: u32) -> OrderedAlphabet {
        OrderedAlphabet::new(a, b).unwrap()
    }

    fn render(s: &[u32]) -> String {
        crate::word::render(s)
    }

    #[test]
    fn phi_examples() {
        let word = w("1333111333133311133313133311133313331113331");
        assert_eq!(phi(&word, al(1, 3)).unwrap(), w("1111313"));
        assert_eq!(phi(&w("3"), al(1, 3)).unwrap(), w("3"));
        let mut k = kolakoski(2, 1).unwrap();
        assert!(phi(k.take(40), al(1, 2)).unwrap().starts_with(&[2, 2]));
        assert!(matches!(phi(&w("111"), al(1, 2)), Err(Error::NotSmoothPrefix { .. })));
        assert_eq!(phi(&[], al(1, 2)), Err(Error::EmptyWord));
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse_prefix(&w("1221"), al(1, 2)).unwrap(), w("1122"));
        assert_eq!(phi_inverse_prefix(&w("3"), al(1, 3)).unwrap(), w("3"));
        assert_eq!(phi_inverse_prefix(&w("13"), al(1, 3)).unwrap(), w("111"));
        // out-of-alphabet letter on top only
        assert_eq!(phi_inverse_prefix(&w("132"), al(1, 3)).unwrap(), w("111333"));
        assert!(phi_inverse_prefix(&w("123"), al(1, 3)).is_err());
    }

    #[test]
    fn deduced_letters_extend_the_pure_recursion() {
        let d = DirectiveSequence::repeat_last(&w("1221")).unwrap();
        let mut s = stream_from_directive(&d, al(1, 2)).unwrap();
        assert_eq!(render(s.take(8)), "11221221");
    }

    #[test]
    fn directive_streams() {
        let d: DirectiveSequence = "2:4".parse().unwrap();
        let mut s = stream_from_directive(&d, al(2, 4)).unwrap();
        assert_eq!(s.take(1), &[2]);

        let d: DirectiveSequence = ":4".parse().unwrap();
        let mut s = stream_from_directive(&d, al(2, 4)).unwrap();
        assert_eq!(render(s.take(4)), "4444");

        let d: DirectiveSequence = ":13".parse().unwrap();
        let mut s = stream_from_directive(&d, al(1, 3)).unwrap();
        let p = s.take(2000).to_vec();
        let heads = phi(&p, al(1, 3)).unwrap();
        assert!(heads.len() >= 6);
        for (i, &x) in heads.iter().enumerate() {
            assert_eq!(x, if i % 2 == 0 { 1 } else { 3 });
        }
    }

    #[test]
    fn directive_letters_must_be_in_the_alphabet() {
        let d: DirectiveSequence = "1:2".parse().unwrap();
        assert!(stream_from_directive(&d, al(1, 3)).is_err());
    }

    #[test]
    fn directive_text_format() {
        let d: DirectiveSequence = "2:4".parse().unwrap();
        assert_eq!(d.to_string(), "2:4");
        assert_eq!(d.prefix(4), w("2444"));
        let d: DirectiveSequence = ":13".parse().unwrap();
        assert_eq!(d.prefix(5), w("13131"));
        let d: DirectiveSequence = "1,12:3".parse().unwrap();
        assert_eq!(d.to_string(), "1,12:3");
        assert!("13".parse::<DirectiveSequence>().is_err());
        assert!("13:".parse::<DirectiveSequence>().is_err());
    }

    #[test]
    fn kolakoski_prefixes() {
        let mut k = kolakoski(2, 1).unwrap();
        assert_eq!(render(k.take(40)), "2211212212211211221211212211211212212211");
        assert_eq!(render(kolakoski(2, 3).unwrap().take(20)), "22332223332233223332");
        assert_eq!(render(kolakoski(3, 1).unwrap().take(20)), "33311133313133311133");
        assert_eq!(render(kolakoski(1, 2).unwrap().take(10)), "1221121221");
        assert!(kolakoski(2, 2).is_err());
    }

    #[test]
    fn kolakoski_is_a_fixed_point() {
        let mut k = kolakoski(2, 1).unwrap();
        let p = k.take(10_000).to_vec();
        let mut runs = encode(&p).into_vec();
        runs.pop();
        assert!(p.starts_with(&runs));
    }

    #[test]
    fn extremal_words() {
        assert_eq!(minimal_directive(al(2, 4)).unwrap().to_string(), "2:4");
        assert_eq!(minimal_directive(al(1, 3)).unwrap().to_string(), ":13");
        assert_eq!(render(maximal_word(al(2, 4)).unwrap().take(2)), "44");
        assert_eq!(minimal_word(al(2, 3)).unwrap_err(), Error::UnsupportedClass(ParityClass::EvenOdd));
        assert!(maximal_word(al(3, 4)).is_err());
    }

    #[test]
    fn delta1_inverse_of_minimal_word() {
        let a = al(1, 3);
        let mut m = minimal_word(a).unwrap();
        let pre = m.take(100).to_vec();
        let expected = decode(&pre, Letter::new(1).unwrap(), Letter::new(3).unwrap()).unwrap();
        let mut s = delta1_inverse_stream(minimal_word(a).unwrap()).unwrap();
        assert_eq!(s.take(expected.len()), &expected[..]);
        assert_eq!(decode(&[1, 3], Letter::new(1).unwrap(), Letter::new(3).unwrap()).unwrap(), w("1333"));

        // Φ(Δ_1⁻¹(m)) = 1 · Φ(m)
        let d: DirectiveSequence = "1:13".parse().unwrap();
        let mut t = stream_from_directive(&d, a).unwrap();
        assert_eq!(s.take(5000), t.take(5000));

        let even = minimal_word(al(2, 4)).unwrap();
        assert!(delta1_inverse_stream(even).is_err());
    }

    #[test]
    fn take_granularity_does_not_matter() {
        let d: DirectiveSequence = "1:13".parse().unwrap();
        let mut big = stream_from_directive(&d, al(1, 3)).unwrap();
        let whole = big.take(3000).to_vec();
        let mut small = stream_from_directive(&d, al(1, 3)).unwrap();
        for n in (1..=3000).step_by(7) {
            assert_eq!(small.take(n), &whole[..n]);
        }
    }
}
