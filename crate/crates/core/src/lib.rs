//! Smooth infinite words over two-letter alphabets of positive integers.
//!
//! * [`word`]: letters, alphabets, finite words and their order.
//! * [`runlength`]: `Δ`, its pseudo-inverses and the derivatives `D_r`, `D`.
//! * [`smooth`]: the bijection `Φ`, directive-driven prefix streams,
//!   Kolakoski words and extremal words.
//! * [`lyndon`]: Lyndon tests, Duval factorization, bounded checks of
//!   infinite words.
//! * [`characterize`]: which smooth words are Lyndon, with machine checks of
//!   every case.
//!
//! ```
//! use smoothwords::{kolakoski, encode, Word};
//!
//! let mut k = kolakoski(2, 1)?;
//! let prefix = Word::try_from(k.take(12))?;
//! assert_eq!(prefix.to_string(), "221121221221");
//! // the word is its own run-length sequence; the last run may be cut short
//! let runs = encode(&prefix);
//! assert_eq!(runs.to_string(), "22112121");
//! assert!(prefix.starts_with(&runs[..runs.len() - 1]));
//! # Ok::<(), smoothwords::Error>(())
//! ```

pub mod characterize;
mod error;
pub mod lyndon;
pub mod runlength;
pub mod smooth;
pub mod word;

pub use error::{Error, Result};
pub use lyndon::{
    check_lyndon_prefix, concat_lyndon, duval_factorize, is_lyndon, lyndon_witness, stream_factorize,
    LyndonFactorization, LyndonVerdict,
};
pub use runlength::{
    decode, delta_chain, derivative, encode, is_r_smooth, is_smooth_factor, right_derivative, DeltaChain, Terminal,
};
pub use smooth::{
    delta1_inverse_stream, kolakoski, maximal_word, minimal_word, phi, phi_inverse_prefix, stream_from_directive,
    DirectiveSequence, PrefixStream,
};
pub use word::{complement, factors_of_length, lex_compare, reverse, Letter, OrderedAlphabet, ParityClass, Word};
