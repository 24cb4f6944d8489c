//! Lyndon words: finite tests, Duval factorization and a bounded check for
//! infinite words given as prefix streams.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::smooth::PrefixStream;
use crate::word::Word;

/// A non-increasing product of Lyndon words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonFactorization {
    pub factors: Vec<Word>,
    /// Number of leading factors that no longer depend on unread letters.
    pub stable: usize,
    /// False when the last factor may still change as the input grows.
    pub complete: bool,
}

impl LyndonFactorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn concatenation(&self) -> Word {
        Word::from_vec(self.factors.iter().flat_map(|f| f.iter().copied()).collect())
    }
}

impl fmt::Display for LyndonFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{x}")?;
        }
        if !self.complete {
            f.write_str("⋯")?;
        }
        Ok(())
    }
}

/// Outcome of the bounded Lyndon check of an infinite word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LyndonVerdict {
    /// The suffix at `suffix_index` is smaller than the word; this is visible
    /// in the first `decided_at` letters.
    Violation { suffix_index: usize, decided_at: usize },
    /// No suffix is provably smaller within the first `n` letters.
    ConsistentUpTo(usize),
}

impl LyndonVerdict {
    pub fn is_violation(self) -> bool {
        matches!(self, LyndonVerdict::Violation { .. })
    }
}

impl fmt::Display for LyndonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LyndonVerdict::Violation { suffix_index, decided_at } => {
                write!(f, "violation at {suffix_index} (decided at {decided_at})")
            }
            LyndonVerdict::ConsistentUpTo(n) => write!(f, "consistent-up-to {n}"),
        }
    }
}

/// Index of the first proper suffix smaller than `w`, if any.
pub fn lyndon_witness(w: &[u32]) -> Result<Option<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..w.len()).find(|&i| w[i..].cmp(w) != Ordering::Greater))
}

pub fn is_lyndon(w: &[u32]) -> Result<bool> {
    Ok(lyndon_witness(w)?.is_none())
}

/// Duval's linear-time factorization. The empty word has no factors.
pub fn duval_factorize(w: &[u32]) -> LyndonFactorization {
    let n = w.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && w[k] <= w[j] {
            k = if w[k] < w[j] { i } else { k + 1 };
            j += 1;
        }
        while i <= k {
            factors.push(Word::from_vec(w[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    let stable = factors.len();
    LyndonFactorization { factors, stable, complete: true }
}

/// Compares every suffix of the finite prefix `w` against `w`.
///
/// The first provably smaller suffix is reported. Suffixes that agree with
/// `w` up to the end of the prefix are undecided and skipped.
pub fn check_lyndon_word(w: &[u32]) -> LyndonVerdict {
    let n = w.len();
    for i in 1..n {
        let lcp = w[i..].iter().zip(w).take_while(|(x, y)| x == y).count();
        if i + lcp < n && w[i + lcp] < w[lcp] {
            return LyndonVerdict::Violation { suffix_index: i, decided_at: i + lcp + 1 };
        }
    }
    LyndonVerdict::ConsistentUpTo(n)
}

/// Default upper bound on the prefix length examined by command-line checks.
pub const DEFAULT_CHECK_CAP: usize = 1_000_000;

/// Bounded Lyndon check of the infinite word behind `s` on its first `n` letters.
pub fn check_lyndon_prefix(s: &mut PrefixStream, n: usize) -> Result<LyndonVerdict> {
    if n < 2 {
        return Err(Error::TooShort { min: 2, got: n });
    }
    Ok(check_lyndon_word(s.take(n)))
}

/// `uv` is Lyndon exactly when `u` and `v` are Lyndon and `u < v`.
pub fn concat_lyndon(u: &[u32], v: &[u32]) -> Result<bool> {
    Ok(is_lyndon(u)? && is_lyndon(v)? && u < v)
}

/// Factorization of `w[..n]` where only the leading factors shared with the
/// factorization of `w[..2n]` are kept. The remaining letters, if any, form
/// one trailing factor that is a prefix of a longer Lyndon factor and is
/// flagged by `complete == false`.
pub fn factorize_with_lookahead(w: &[u32], n: usize) -> LyndonFactorization {
    let n = n.min(w.len());
    let longer = duval_factorize(&w[..(2 * n).min(w.len())]);
    let mut f = duval_factorize(&w[..n]);
    let stable = f.factors.iter().zip(&longer.factors).take_while(|(x, y)| x == y).count();
    if stable < f.factors.len() {
        let tail: Vec<u32> = f.factors.drain(stable..).flat_map(Word::into_vec).collect();
        f.factors.push(Word::from_vec(tail));
    }
    f.stable = stable;
    f.complete = stable == f.factors.len();
    f
}

/// Factorization of the first `n` letters of a stream, compared against the
/// first `2n` letters.
pub fn stream_factorize(s: &mut PrefixStream, n: usize) -> Result<LyndonFactorization> {
    if n == 0 {
        return Err(Error::TooShort { min: 1, got: 0 });
    }
    Ok(factorize_with_lookahead(s.take(2 * n), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smooth::{kolakoski, minimal_word, stream_from_directive};
    use crate::word::OrderedAlphabet;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strings(f: &LyndonFactorization) -> Vec<String> {
        f.factors.iter().map(|x| x.to_string()).collect()
    }

    /// Every way of cutting `w` into Lyndon words that do not increase.
    fn brute_force(w: &[u32]) -> Vec<Vec<Word>> {
        if w.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for cut in 1..=w.len() {
            let head = &w[..cut];
            if !is_lyndon(head).unwrap() {
                continue;
            }
            for mut rest in brute_force(&w[cut..]) {
                if rest.first().is_none_or(|r| r.letters() <= head) {
                    rest.insert(0, Word::new(head.to_vec()).unwrap());
                    out.push(rest);
                }
            }
        }
        out
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&w("11212")).unwrap());
        assert!(!is_lyndon(&w("12112")).unwrap());
        assert_eq!(lyndon_witness(&w("12112")).unwrap(), Some(2));
        assert!(is_lyndon(&w("3")).unwrap());
        assert!(!is_lyndon(&w("11")).unwrap());
        assert_eq!(is_lyndon(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn duval_examples() {
        assert_eq!(strings(&duval_factorize(&w("11212"))), ["11212"]);
        assert_eq!(strings(&duval_factorize(&w("221121"))), ["2", "2", "112", "1"]);
        assert_eq!(strings(&duval_factorize(&w("111"))), ["1", "1", "1"]);
        assert_eq!(duval_factorize(&w("221121")).to_string(), "2·2·112·1");
        assert!(duval_factorize(&[]).is_empty());
        assert_eq!(brute_force(&w("221121")), vec![duval_factorize(&w("221121")).factors]);
    }

    #[test]
    fn duval_matches_brute_force_up_to_length_10() {
        for len in 1..=10 {
            for mask in 0..(1u32 << len) {
                let word: Vec<u32> = (0..len).map(|i| 1 + ((mask >> i) & 1)).collect();
                let all = brute_force(&word);
                assert_eq!(all.len(), 1, "{word:?}");
                assert_eq!(duval_factorize(&word).factors, all[0]);
            }
        }
    }

    #[test]
    fn check_examples() {
        let mut k = kolakoski(2, 1).unwrap();
        assert_eq!(
            check_lyndon_prefix(&mut k, 10).unwrap(),
            LyndonVerdict::Violation { suffix_index: 1, decided_at: 3 }
        );
        let mut m = minimal_word(OrderedAlphabet::new(2, 4).unwrap()).unwrap();
        assert_eq!(check_lyndon_prefix(&mut m, 10_000).unwrap(), LyndonVerdict::ConsistentUpTo(10_000));
        let d = "2:2".parse().unwrap();
        let mut s = stream_from_directive(&d, OrderedAlphabet::new(2, 3).unwrap()).unwrap();
        assert!(crate::word::render(s.take(4)) == "2233");
        assert!(check_lyndon_prefix(&mut s, 1000).unwrap().is_violation());
        assert!(check_lyndon_prefix(&mut s, 1).is_err());
    }

    #[test]
    fn undecided_suffixes_do_not_violate() {
        assert_eq!(check_lyndon_word(&w("1212")), LyndonVerdict::ConsistentUpTo(4));
        assert!(check_lyndon_word(&w("12112")).is_violation());
    }

    #[test]
    fn concat_examples() {
        assert!(concat_lyndon(&w("1"), &w("2")).unwrap());
        assert!(is_lyndon(&w("12")).unwrap());
        assert!(!concat_lyndon(&w("2"), &w("1")).unwrap());
        assert!(concat_lyndon(&w("112"), &w("12")).unwrap());
        for n in 1..=5 {
            assert!(is_lyndon(&w("112").concat(&w("12").power(n))).unwrap());
            assert!(is_lyndon(&w("112").power(n).concat(&w("12"))).unwrap());
        }
    }

    #[test]
    fn stream_factorization() {
        let mut k = kolakoski(2, 1).unwrap();
        let f = stream_factorize(&mut k, 20).unwrap();
        assert_eq!(strings(&f)[..2], ["2", "2"]);
        assert!(f.stable >= 2);
        assert_eq!(f.concatenation().letters(), k.take(20));

        let ones = factorize_with_lookahead(&[1; 10], 5);
        assert_eq!(strings(&ones), ["1"; 5]);
        assert!(ones.complete);

        let mut m = minimal_word(OrderedAlphabet::new(2, 4).unwrap()).unwrap();
        let f = stream_factorize(&mut m, 100).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.stable, 0);
        assert!(!f.complete);
        assert_eq!(f.factors[0].letters(), m.take(100));
    }
}
