//! Bounded Lyndon check of every directive with a given prefix length.

use crate::error::{Error, Result};
use crate::lyndon::{check_lyndon_prefix, LyndonVerdict};
use crate::smooth::{stream_from_directive, DirectiveSequence};
use crate::word::{OrderedAlphabet, ParityClass, Word};

pub const MAX_SEARCH_DEPTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub prefix: Word,
    pub directive: DirectiveSequence,
    pub verdict: LyndonVerdict,
}

impl SearchOutcome {
    pub fn survives(&self) -> bool {
        !self.verdict.is_violation()
    }
}

/// Continues a finite directive: `b^ω` for even alphabets, alternation for
/// odd ones, the last letter otherwise.
pub fn continue_directive(prefix: &Word, alphabet: OrderedAlphabet) -> Result<DirectiveSequence> {
    let &last = prefix.last().ok_or(Error::EmptyWord)?;
    let period = match alphabet.parity_class() {
        ParityClass::EvenEven => vec![alphabet.b()],
        ParityClass::OddOdd => vec![alphabet.require(last)?, last],
        _ => vec![last],
    };
    DirectiveSequence::new(prefix.clone(), Word::new(period)?)
}

/// Checks every directive prefix of length `depth` that starts with `a`.
pub fn exhaustive_directive_search(
    alphabet: OrderedAlphabet,
    depth: usize,
    budget: usize,
) -> Result<Vec<SearchOutcome>> {
    if depth > MAX_SEARCH_DEPTH {
        return Err(Error::DepthTooLarge(depth));
    }
    if depth == 0 {
        return Err(Error::TooShort { min: 1, got: 0 });
    }
    let (a, b) = (alphabet.a(), alphabet.b());
    let mut out = Vec::with_capacity(1 << (depth - 1));
    for mask in 0..(1u32 << (depth - 1)) {
        let mut letters = vec![a];
        letters.extend((0..depth - 1).map(|i| if mask >> (depth - 2 - i) & 1 == 1 { b } else { a }));
        let prefix = Word::new(letters)?;
        let directive = continue_directive(&prefix, alphabet)?;
        let mut stream = stream_from_directive(&directive, alphabet)?;
        let verdict = check_lyndon_prefix(&mut stream, budget)?;
        out.push(SearchOutcome { prefix, directive, verdict });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(a: u32, b: u32) -> OrderedAlphabet {
        OrderedAlphabet::new(a, b).unwrap()
    }

    #[test]
    fn continuations() {
        let p: Word = "13".parse().unwrap();
        assert_eq!(continue_directive(&p, al(1, 3)).unwrap().prefix(6).to_string(), "131313");
        let p: Word = "11".parse().unwrap();
        assert_eq!(continue_directive(&p, al(1, 3)).unwrap().prefix(6).to_string(), "113131");
        let p: Word = "2".parse().unwrap();
        assert_eq!(continue_directive(&p, al(2, 4)).unwrap().prefix(3).to_string(), "244");
        let p: Word = "12".parse().unwrap();
        assert_eq!(continue_directive(&p, al(1, 2)).unwrap().prefix(3).to_string(), "122");
    }

    #[test]
    fn enumerates_prefixes_starting_with_a() {
        let out = exhaustive_directive_search(al(2, 3), 4, 500).unwrap();
        assert_eq!(out.len(), 8);
        assert!(out.iter().all(|o| o.prefix[0] == 2 && o.prefix.len() == 4));
        assert!(exhaustive_directive_search(al(2, 3), 13, 10).is_err());
        assert!(exhaustive_directive_search(al(2, 3), 0, 10).is_err());
    }

    #[test]
    fn small_survivors() {
        let survivors: Vec<String> = exhaustive_directive_search(al(1, 3), 6, 5000)
            .unwrap()
            .into_iter()
            .filter(SearchOutcome::survives)
            .map(|o| o.prefix.to_string())
            .collect();
        assert_eq!(survivors, ["113131", "131313"]);
    }
}
