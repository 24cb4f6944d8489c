//! Which smooth words are infinite Lyndon words.
//!
//! [`classify`] gives the answer for an alphabet. The rest of the module
//! checks it numerically: [`cases`] holds the case trees with their witness
//! factors, [`verify_case`] expands a case and certifies its witness, and
//! [`exhaustive_directive_search`] runs the bounded check over all short
//! directives.

pub mod cases;
pub mod formula;
mod lemmas;
mod search;
mod verify;

use std::collections::BTreeSet;
use std::fmt;

pub use cases::{
    case_table, descent_pair, family_table, find_case, reference_alphabets, CaseFamily, CaseInstance, CaseSpec,
    Constraint, Continuation, Witness, CASES,
};
pub use lemmas::{verify_parity_lemmas, ParityLemmaReport};
pub use search::{continue_directive, exhaustive_directive_search, SearchOutcome, MAX_SEARCH_DEPTH};
pub use verify::{certified_occurrence, verify_case, CaseReport, Verdict, VerifyOptions};

use crate::error::{Error, Result};
use crate::smooth::{delta1_inverse_stream, minimal_directive, minimal_word, DirectiveSequence, PrefixStream};
use crate::word::{OrderedAlphabet, ParityClass, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LyndonFamily {
    /// The smallest smooth word `m`.
    MinimalWord,
    /// `Δ_1⁻¹(m)`.
    Delta1InverseOfMinimal,
}

impl LyndonFamily {
    /// The directive of the family's word over `alphabet`.
    pub fn directive(self, alphabet: OrderedAlphabet) -> Result<DirectiveSequence> {
        let m = minimal_directive(alphabet)?;
        match self {
            LyndonFamily::MinimalWord => Ok(m),
            LyndonFamily::Delta1InverseOfMinimal => {
                if alphabet.a() != 1 {
                    return Err(Error::NotInAlphabet { letter: 1, alphabet });
                }
                // Φ(Δ_α⁻¹(w)) = α·Φ(w)
                DirectiveSequence::new(Word::new(vec![1])?.concat(m.preperiod()), m.period().clone())
            }
        }
    }

    pub fn stream(self, alphabet: OrderedAlphabet) -> Result<PrefixStream> {
        match self {
            LyndonFamily::MinimalWord => minimal_word(alphabet),
            LyndonFamily::Delta1InverseOfMinimal => delta1_inverse_stream(minimal_word(alphabet)?),
        }
    }
}

impl fmt::Display for LyndonFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LyndonFamily::MinimalWord => "minimal-word",
            LyndonFamily::Delta1InverseOfMinimal => "delta1-inverse-of-minimal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub alphabet: OrderedAlphabet,
    pub lyndon_families: BTreeSet<LyndonFamily>,
}

/// The smooth infinite Lyndon words over `alphabet`.
pub fn classify(alphabet: OrderedAlphabet) -> Classification {
    let lyndon_families = match alphabet.parity_class() {
        ParityClass::EvenEven => BTreeSet::from([LyndonFamily::MinimalWord]),
        ParityClass::OddOdd if alphabet.a() == 1 => {
            BTreeSet::from([LyndonFamily::MinimalWord, LyndonFamily::Delta1InverseOfMinimal])
        }
        _ => BTreeSet::new(),
    };
    Classification { alphabet, lyndon_families }
}

/// Matches search survivors against the families' directives. Returns the
/// families hit and the survivors that match none.
pub fn match_survivors(alphabet: OrderedAlphabet, outcomes: &[SearchOutcome]) -> (BTreeSet<LyndonFamily>, Vec<Word>) {
    let candidates: Vec<(LyndonFamily, DirectiveSequence)> =
        [LyndonFamily::MinimalWord, LyndonFamily::Delta1InverseOfMinimal]
            .into_iter()
            .filter_map(|f| f.directive(alphabet).ok().map(|d| (f, d)))
            .collect();
    let mut hit = BTreeSet::new();
    let mut unmatched = Vec::new();
    for o in outcomes.iter().filter(|o| o.survives()) {
        match candidates.iter().find(|(_, d)| d.prefix(o.prefix.len()) == o.prefix) {
            Some((f, _)) => {
                hit.insert(*f);
            }
            None => unmatched.push(o.prefix.clone()),
        }
    }
    (hit, unmatched)
}
