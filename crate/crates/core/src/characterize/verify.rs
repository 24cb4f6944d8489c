//! Expanding a case's word and certifying its witness.

use std::time::{Duration, Instant};

use super::cases::CaseInstance;
use crate::error::Result;
use crate::lyndon::{check_lyndon_prefix, check_lyndon_word, LyndonVerdict};
use crate::smooth::stream_from_directive;
use crate::word::OrderedAlphabet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub initial_budget: usize,
    /// Largest prefix examined before giving up on a witness.
    pub max_budget: usize,
    /// Prefix length checked for cases that end with a Lyndon word.
    pub lyndon_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { initial_budget: 1 << 10, max_budget: 1 << 22, lyndon_budget: 10_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The witness occurs at a smaller suffix and the bounded check agrees.
    ViolationConfirmed,
    /// No certified occurrence of the witness within the budget.
    WitnessNotFound,
    /// The bounded check found no violation in `n` letters.
    LyndonConsistent(usize),
    /// A case expected to be Lyndon has a smaller suffix.
    LyndonViolated { suffix_index: usize },
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::ViolationConfirmed => "violation-confirmed",
            Verdict::WitnessNotFound => "witness-not-found",
            Verdict::LyndonConsistent(_) => "lyndon-consistent",
            Verdict::LyndonViolated { .. } => "lyndon-violated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub case_id: String,
    pub alphabet: OrderedAlphabet,
    pub claims_violation: bool,
    pub expanded_length: usize,
    pub witness_position: Option<usize>,
    pub check: Option<LyndonVerdict>,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl CaseReport {
    /// True when the verdict is the one the case predicts.
    pub fn matches_claim(&self) -> bool {
        if self.claims_violation {
            self.verdict == Verdict::ViolationConfirmed
        } else {
            matches!(self.verdict, Verdict::LyndonConsistent(_))
        }
    }
}

/// Positions of `pattern` in `text` (Knuth-Morris-Pratt).
fn occurrences<'a>(text: &'a [u32], pattern: &'a [u32]) -> impl Iterator<Item = usize> + 'a {
    let mut fail = vec![0usize; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut q = 0;
    text.iter().enumerate().filter_map(move |(i, &x)| {
        if pattern.is_empty() {
            return None;
        }
        while q > 0 && x != pattern[q] {
            q = fail[q - 1];
        }
        if x == pattern[q] {
            q += 1;
        }
        if q == pattern.len() {
            q = fail[q - 1];
            Some(i + 1 - pattern.len())
        } else {
            None
        }
    })
}

/// True when `w[i..]` is provably smaller than `w` within `w`.
fn suffix_is_smaller(w: &[u32], i: usize) -> bool {
    let lcp = w[i..].iter().zip(w).take_while(|(x, y)| x == y).count();
    i + lcp < w.len() && w[i + lcp] < w[lcp]
}

/// First position `i ≥ 1` where `f` occurs and the suffix starting there is
/// smaller than the word.
pub fn certified_occurrence(w: &[u32], f: &[u32]) -> Option<usize> {
    occurrences(w, f).find(|&i| i >= 1 && suffix_is_smaller(w, i))
}

pub fn verify_case(case: &CaseInstance, options: &VerifyOptions) -> Result<CaseReport> {
    let start = Instant::now();
    let mut stream = stream_from_directive(&case.directive, case.alphabet)?;
    let mut report = CaseReport {
        case_id: case.spec.id.to_string(),
        alphabet: case.alphabet,
        claims_violation: case.spec.claims_violation(),
        expanded_length: 0,
        witness_position: None,
        check: None,
        verdict: Verdict::WitnessNotFound,
        elapsed: Duration::ZERO,
    };
    match &case.witness {
        None => {
            let n = options.lyndon_budget;
            let check = check_lyndon_prefix(&mut stream, n)?;
            report.expanded_length = n;
            report.check = Some(check);
            report.verdict = match check {
                LyndonVerdict::ConsistentUpTo(n) => Verdict::LyndonConsistent(n),
                LyndonVerdict::Violation { suffix_index, .. } => Verdict::LyndonViolated { suffix_index },
            };
        }
        Some(f) => {
            let mut n = options.initial_budget.min(options.max_budget);
            loop {
                let w = stream.take(n);
                report.expanded_length = n;
                if let Some(p) = certified_occurrence(w, f) {
                    let check = check_lyndon_word(w);
                    report.witness_position = Some(p);
                    report.check = Some(check);
                    if check.is_violation() {
                        report.verdict = Verdict::ViolationConfirmed;
                    }
                    break;
                }
                if n >= options.max_budget {
                    break;
                }
                n = (2 * n).min(options.max_budget);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::cases::find_case;
    use super::*;

    fn al(a: u32, b: u32) -> OrderedAlphabet {
        OrderedAlphabet::new(a, b).unwrap()
    }

    #[test]
    fn kmp_finds_overlapping_occurrences() {
        let found: Vec<_> = occurrences(&[1, 1, 1, 2, 1, 1], &[1, 1]).collect();
        assert_eq!(found, [0, 1, 4]);
        assert_eq!(occurrences(&[1, 2], &[]).count(), 0);
        assert_eq!(occurrences(&[1], &[1, 1]).count(), 0);
    }

    #[test]
    fn certification_needs_a_smaller_suffix() {
        // "12" occurs at 2 but the suffix there equals a prefix
        assert_eq!(certified_occurrence(&[1, 2, 1, 2], &[1, 2]), None);
        assert_eq!(certified_occurrence(&[1, 2, 1, 1], &[1]), Some(2));
    }

    #[test]
    fn even_odd_case_one() {
        let case = find_case("even-odd/1").unwrap().instantiate(al(2, 3)).unwrap();
        let r = verify_case(&case, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::ViolationConfirmed);
        assert!(r.matches_claim());
        let mut s = stream_from_directive(&case.directive, case.alphabet).unwrap();
        assert_eq!(s.take(4), &[2, 2, 3, 3]);
        let p = r.witness_position.unwrap();
        assert_eq!(s.take(p + 3)[p..], [2, 2, 2]);
    }

    #[test]
    fn lyndon_cases() {
        for (id, a, b) in [("even/3.lyndon", 2, 4), ("odd-one/1b.5", 1, 3), ("odd-one/11.3", 1, 3)] {
            let case = find_case(id).unwrap().instantiate(al(a, b)).unwrap();
            let r = verify_case(&case, &VerifyOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::LyndonConsistent(10_000), "{id}");
            assert!(r.matches_claim());
        }
    }

    #[test]
    fn budget_cap_reports_missing_witness() {
        let case = find_case("even-odd/1").unwrap().instantiate(al(2, 3)).unwrap();
        let mut case = case.clone();
        case.witness = Some(crate::word::Word::new(vec![3, 3, 3, 3]).unwrap());
        let options = VerifyOptions { max_budget: 4096, ..VerifyOptions::default() };
        let r = verify_case(&case, &options).unwrap();
        assert_eq!(r.verdict, Verdict::WitnessNotFound);
        assert_eq!(r.expanded_length, 4096);
        assert!(!r.matches_claim());
    }
}
