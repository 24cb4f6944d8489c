//! Letters, two-letter alphabets and finite words.
//!
//! Letters are positive integers without an upper bound: run-length images
//! routinely leave the alphabet they were computed from.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A positive integer letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(value: u32) -> Result<Letter> {
        if value == 0 {
            Err(Error::ZeroLetter)
        } else {
            Ok(Letter(value))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parities of the small and the large letter, in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParityClass {
    EvenEven,
    OddOdd,
    EvenOdd,
    OddEven,
}

impl ParityClass {
    pub fn of(a: u32, b: u32) -> ParityClass {
        match (a % 2 == 0, b % 2 == 0) {
            (true, true) => ParityClass::EvenEven,
            (false, false) => ParityClass::OddOdd,
            (true, false) => ParityClass::EvenOdd,
            (false, true) => ParityClass::OddEven,
        }
    }
}

/// A two-letter alphabet `{a < b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedAlphabet {
    small: Letter,
    large: Letter,
}

impl OrderedAlphabet {
    pub fn new(a: u32, b: u32) -> Result<OrderedAlphabet> {
        if a == 0 || b == 0 {
            return Err(Error::ZeroLetter);
        }
        if a >= b {
            return Err(Error::BadAlphabet(a, b));
        }
        Ok(OrderedAlphabet { small: Letter(a), large: Letter(b) })
    }

    /// The smaller letter `a`.
    pub fn a(self) -> u32 {
        self.small.0
    }

    /// The larger letter `b`.
    pub fn b(self) -> u32 {
        self.large.0
    }

    pub fn parity_class(self) -> ParityClass {
        ParityClass::of(self.a(), self.b())
    }

    pub fn contains(self, letter: u32) -> bool {
        letter == self.a() || letter == self.b()
    }

    /// `ā = b` and `b̄ = a`; `None` for letters outside the alphabet.
    pub fn complement_of(self, letter: u32) -> Option<u32> {
        if letter == self.a() {
            Some(self.b())
        } else if letter == self.b() {
            Some(self.a())
        } else {
            None
        }
    }

    pub(crate) fn require(self, letter: u32) -> Result<u32> {
        self.complement_of(letter).ok_or(Error::NotInAlphabet { letter, alphabet: self })
    }

    pub fn is_word_over(self, w: &[u32]) -> bool {
        w.iter().all(|&x| self.contains(x))
    }
}

impl fmt::Display for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a(), self.b())
    }
}

impl FromStr for OrderedAlphabet {
    type Err = Error;

    /// Parses `a,b`, with or without surrounding braces.
    fn from_str(s: &str) -> Result<OrderedAlphabet> {
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(bad("expected two comma-separated letters"));
        }
        let a = parts[0].parse::<u32>().map_err(|_| bad("letter is not an integer"))?;
        let b = parts[1].parse::<u32>().map_err(|_| bad("letter is not an integer"))?;
        OrderedAlphabet::new(a, b)
    }
}

/// A finite word over positive integers, ordered lexicographically
/// (a proper prefix is smaller).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Word> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Caller guarantees every letter is positive.
    pub(crate) fn from_vec(letters: Vec<u32>) -> Word {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn concat(&self, other: &[u32]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn reversed(&self) -> Word {
        reverse(self)
    }

    pub fn runs(&self) -> Vec<Run> {
        runs(self)
    }
}

impl Deref for Word {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<&[u32]> for Word {
    type Error = Error;

    fn try_from(letters: &[u32]) -> Result<Word> {
        Word::new(letters.to_vec())
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(letters: Vec<u32>) -> Result<Word> {
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter is at most 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[u32]) -> fmt::Result {
    if letters.iter().all(|&x| x <= 9) {
        for x in letters {
            write!(f, "{x}")?;
        }
    } else {
        for (i, x) in letters.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

/// Renders a letter slice in the word text format.
pub fn render(letters: &[u32]) -> String {
    let mut s = String::with_capacity(letters.len());
    write_letters(&mut s, letters).expect("writing to a String");
    s
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad("letter is not an integer")))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(|| bad("expected a digit"))).collect::<Result<Vec<_>>>()?
        };
        if letters.contains(&0) {
            return Err(bad("letters must be positive"));
        }
        Ok(Word(letters))
    }
}

/// A maximal block `letter^count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub letter: u32,
    pub start: usize,
    pub count: usize,
}

pub fn runs(w: &[u32]) -> Vec<Run> {
    let mut out: Vec<Run> = Vec::new();
    for (i, &x) in w.iter().enumerate() {
        match out.last_mut() {
            Some(r) if r.letter == x => r.count += 1,
            _ => out.push(Run { letter: x, start: i, count: 1 }),
        }
    }
    out
}

pub fn lex_compare(u: &[u32], v: &[u32]) -> Ordering {
    u.cmp(v)
}

pub fn complement(w: &[u32], alphabet: OrderedAlphabet) -> Result<Word> {
    w.iter().map(|&x| alphabet.require(x)).collect::<Result<Vec<_>>>().map(Word)
}

pub fn reverse(w: &[u32]) -> Word {
    Word(w.iter().rev().copied().collect())
}

/// Distinct factors of length `n`; empty when `n > |w|`.
pub fn factors_of_length(w: &[u32], n: usize) -> BTreeSet<Word> {
    if n > w.len() {
        return BTreeSet::new();
    }
    if n == 0 {
        return BTreeSet::from([Word::empty()]);
    }
    w.windows(n).map(|f| Word(f.to_vec())).collect()
}
