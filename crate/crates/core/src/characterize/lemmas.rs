//! Numerical checks of the block-structure lemmas for `m_{1,b}` with `b` odd.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::runlength::decode_capped;
use crate::smooth::minimal_word;
use crate::word::{runs, OrderedAlphabet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityLemmaReport {
    pub alphabet: OrderedAlphabet,
    pub length: usize,
    pub blocks_checked: usize,
    /// Start positions of blocks of `1` at odd positions or blocks of `b` at even ones.
    pub misplaced_blocks: Vec<usize>,
    /// Start positions of complete blocks of `b` longer than one letter.
    pub long_b_blocks: Vec<usize>,
    /// Sampled pairs `(xay, xby')` checked, indexed by the parity of `|x|`.
    pub pairs_checked: [usize; 2],
    pub order_failures: usize,
}

impl ParityLemmaReport {
    pub fn passes(&self) -> bool {
        self.misplaced_blocks.is_empty() && self.long_b_blocks.is_empty() && self.order_failures == 0
    }
}

/// Scans the first `n` letters of `m_{1,b}` and samples `samples` factor
/// pairs of each parity for the order-transfer rule of `Δ_α⁻¹`.
pub fn verify_parity_lemmas(
    alphabet: OrderedAlphabet,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<ParityLemmaReport> {
    let b = alphabet.b();
    if alphabet.a() != 1 || b % 2 == 0 {
        return Err(Error::Constraint { alphabet, constraint: "a = 1, b odd".to_string() });
    }
    let mut m = minimal_word(alphabet)?;
    let w = m.take(n).to_vec();
    let blocks = runs(&w);
    let mut report = ParityLemmaReport {
        alphabet,
        length: n,
        blocks_checked: blocks.len(),
        misplaced_blocks: Vec::new(),
        long_b_blocks: Vec::new(),
        pairs_checked: [0, 0],
        order_failures: 0,
    };
    for (i, r) in blocks.iter().enumerate() {
        if (r.start % 2 == 0) != (r.letter == 1) {
            report.misplaced_blocks.push(r.start);
        }
        let complete = i + 1 < blocks.len();
        if complete && r.letter == b && r.count > 1 {
            report.long_b_blocks.push(r.start);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_len = 64.min(n / 2);
    let mut attempts = 0;
    while report.pairs_checked.iter().any(|&c| c < samples) && attempts < 1000 * samples.max(1) && max_len >= 3 {
        attempts += 1;
        let len = rng.gen_range(3..=max_len);
        let i = rng.gen_range(0..=n - len);
        let j = rng.gen_range(0..=n - len);
        let (u, v) = (&w[i..i + len], &w[j..j + len]);
        let Some(t) = u.iter().zip(v).position(|(x, y)| x != y) else {
            continue;
        };
        // y must be nonempty for the images to be comparable
        if t + 1 >= len || report.pairs_checked[t % 2] >= samples {
            continue;
        }
        let (small, large) = if u[t] < v[t] { (u, v) } else { (v, u) };
        for alpha in [1, b] {
            let beta = if alpha == 1 { b } else { 1 };
            let x = decode_capped(small, alpha, beta, usize::MAX).0;
            let y = decode_capped(large, alpha, beta, usize::MAX).0;
            let predicted = if t % 2 == 0 { beta < alpha } else { alpha < beta };
            if (x < y) != predicted {
                report.order_failures += 1;
            }
        }
        report.pairs_checked[t % 2] += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemmas_hold_on_small_prefixes() {
        for b in [3, 5] {
            let r = verify_parity_lemmas(OrderedAlphabet::new(1, b).unwrap(), 1000, 200, 0).unwrap();
            assert!(r.passes(), "{r:?}");
            assert!(r.blocks_checked > 100);
            assert_eq!(r.pairs_checked, [200, 200]);
        }
    }

    #[test]
    fn even_b_is_rejected() {
        assert!(verify_parity_lemmas(OrderedAlphabet::new(1, 4).unwrap(), 100, 1, 0).is_err());
        assert!(verify_parity_lemmas(OrderedAlphabet::new(3, 5).unwrap(), 100, 1, 0).is_err());
    }
}
