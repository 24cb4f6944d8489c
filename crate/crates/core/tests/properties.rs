use std::cmp::Ordering;

use proptest::prelude::*;
use smoothwords::characterize::{continue_directive, descent_pair};
use smoothwords::lyndon::{check_lyndon_word, factorize_with_lookahead};
use smoothwords::*;

fn al(a: u32, b: u32) -> OrderedAlphabet {
    OrderedAlphabet::new(a, b).unwrap()
}

fn alphabet() -> impl Strategy<Value = OrderedAlphabet> {
    (1u32..8, 1u32..8).prop_filter("distinct", |(a, b)| a != b).prop_map(|(a, b)| al(a.min(b), a.max(b)))
}

fn bits(max: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 0..max)
}

fn over(alphabet: OrderedAlphabet, bits: &[bool]) -> Vec<u32> {
    bits.iter().map(|&x| if x { alphabet.b() } else { alphabet.a() }).collect()
}

fn word_over(max: usize) -> impl Strategy<Value = (OrderedAlphabet, Vec<u32>)> {
    (alphabet(), bits(max)).prop_map(|(al, b)| (al, over(al, &b)))
}

/// A random directive stream over the alphabet, continued by its last letter.
fn stream(alphabet: OrderedAlphabet, bits: &[bool]) -> PrefixStream {
    let mut letters = over(alphabet, bits);
    if letters.is_empty() {
        letters.push(alphabet.a());
    }
    let d = DirectiveSequence::repeat_last(&Word::new(letters).unwrap()).unwrap();
    stream_from_directive(&d, alphabet).unwrap()
}

fn is_prefix(u: &[u32], v: &[u32]) -> bool {
    v.starts_with(u)
}

proptest! {
    #[test]
    fn order_is_total_and_lexicographic(u in prop::collection::vec(1u32..4, 0..8), v in prop::collection::vec(1u32..4, 0..8)) {
        let o = lex_compare(&u, &v);
        prop_assert_eq!(o, u.cmp(&v));
        prop_assert_eq!(o.reverse(), lex_compare(&v, &u));
        prop_assert_eq!(o == Ordering::Equal, u == v);
        if is_prefix(&u, &v) && u != v {
            prop_assert_eq!(o, Ordering::Less);
        }
    }

    #[test]
    fn complement_flips_order((alphabet, u) in word_over(10), v in bits(10)) {
        let v = over(alphabet, &v);
        let (cu, cv) = (complement(&u, alphabet).unwrap(), complement(&v, alphabet).unwrap());
        if !is_prefix(&u, &v) && !is_prefix(&v, &u) {
            prop_assert_eq!(lex_compare(&cu, &cv), lex_compare(&v, &u));
        }
    }

    #[test]
    fn complement_and_reverse_are_involutions((alphabet, u) in word_over(20)) {
        let c = complement(&u, alphabet).unwrap();
        prop_assert_eq!(complement(&c, alphabet).unwrap().into_vec(), u.clone());
        prop_assert_eq!(reverse(&reverse(&u)).into_vec(), u.clone());
    }

    #[test]
    fn encode_decode_round_trip((alphabet, u) in word_over(30)) {
        prop_assume!(!u.is_empty());
        let alpha = u[0];
        let beta = alphabet.complement_of(alpha).unwrap();
        let d = decode(&encode(&u), Letter::new(alpha).unwrap(), Letter::new(beta).unwrap()).unwrap();
        prop_assert_eq!(d.into_vec(), u);
    }

    #[test]
    fn encode_commutes_with_complement_and_reversal((alphabet, u) in word_over(30)) {
        let e = encode(&u);
        prop_assert_eq!(encode(&complement(&u, alphabet).unwrap()), e.clone());
        prop_assert_eq!(encode(&reverse(&u)), e.reversed());
    }

    #[test]
    fn smooth_factors_are_closed_under_mirror_and_complement((alphabet, u) in word_over(16)) {
        let s = is_smooth_factor(&u, alphabet);
        prop_assert_eq!(is_smooth_factor(&reverse(&u), alphabet), s);
        prop_assert_eq!(is_smooth_factor(&complement(&u, alphabet).unwrap(), alphabet), s);
    }

    #[test]
    fn r_smooth_is_prefix_closed((alphabet, u) in word_over(14)) {
        if is_r_smooth(&u, alphabet) {
            for k in 0..u.len() {
                prop_assert!(is_r_smooth(&u[..k], alphabet), "{} prefix of length {}", Word::new(u.clone()).unwrap(), k);
            }
        }
    }

    #[test]
    fn stream_factors_are_smooth_factors(alphabet in alphabet(), d in bits(6), i in 0usize..150, len in 0usize..50) {
        let mut s = stream(alphabet, &d);
        let w = s.take(200).to_vec();
        prop_assert!(is_r_smooth(&w, alphabet));
        let f = &w[i..i + len];
        prop_assert!(is_smooth_factor(f, alphabet));
        for j in 0..f.len() {
            prop_assert!(is_smooth_factor(&f[j..], alphabet));
            prop_assert!(is_smooth_factor(&f[..j], alphabet));
        }
    }

    #[test]
    fn phi_inverts_phi_inverse(alphabet in alphabet(), d in bits(7)) {
        let mut u = over(alphabet, &d);
        u.push(alphabet.b());
        let w = phi_inverse_prefix(&u, alphabet).unwrap();
        prop_assert_eq!(phi(&w, alphabet).unwrap().into_vec(), u.clone());
    }

    #[test]
    fn stream_prefixes_do_not_depend_on_request_order(alphabet in alphabet(), d in bits(6), n in 1usize..400) {
        let mut s = stream(alphabet, &d);
        let mut t = stream(alphabet, &d);
        let small = s.take(n).to_vec();
        let large = t.take(3 * n + 17).to_vec();
        prop_assert_eq!(&large[..n], &small[..]);
        let heads = phi(&large, alphabet).unwrap();
        let directive = over(alphabet, &d);
        let k = heads.len().min(directive.len());
        prop_assert_eq!(&heads[..k], &directive[..k]);
    }

    #[test]
    fn duval_factors_are_lyndon_and_non_increasing(u in prop::collection::vec(1u32..4, 1..40)) {
        let f = duval_factorize(&u);
        prop_assert_eq!(f.concatenation().into_vec(), u.clone());
        for x in &f.factors {
            prop_assert!(is_lyndon(x).unwrap());
        }
        for pair in f.factors.windows(2) {
            prop_assert!(pair[0] >= pair[1]);
        }
        prop_assert_eq!(is_lyndon(&u).unwrap(), f.len() == 1);
    }

    #[test]
    fn lyndon_words_are_strictly_smallest_rotations(u in prop::collection::vec(1u32..4, 1..=10)) {
        let smallest = (1..u.len()).all(|i| {
            let rot: Vec<u32> = u[i..].iter().chain(&u[..i]).copied().collect();
            u < rot
        });
        prop_assert_eq!(is_lyndon(&u).unwrap(), smallest);
    }

    #[test]
    fn lyndon_concatenation(u in prop::collection::vec(1u32..4, 1..8), v in prop::collection::vec(1u32..4, 1..8)) {
        let uv: Vec<u32> = u.iter().chain(&v).copied().collect();
        if concat_lyndon(&u, &v).unwrap() {
            prop_assert!(is_lyndon(&uv).unwrap());
        }
    }

    #[test]
    fn bounded_check_is_monotone(u in prop::collection::vec(1u32..4, 2..60), cut in 2usize..60) {
        let cut = cut.min(u.len());
        if let LyndonVerdict::Violation { .. } = check_lyndon_word(&u[..cut]) {
            prop_assert_eq!(check_lyndon_word(&u), check_lyndon_word(&u[..cut]));
        }
    }

    #[test]
    fn lookahead_factorization_is_a_cut_of_the_prefix(u in prop::collection::vec(1u32..3, 1..60), n in 1usize..30) {
        let f = factorize_with_lookahead(&u, n);
        let n = n.min(u.len());
        prop_assert_eq!(f.concatenation().into_vec(), u[..n].to_vec());
        let full = duval_factorize(&u[..(2 * n).min(u.len())]);
        prop_assert_eq!(&f.factors[..f.stable], &full.factors[..f.stable]);
    }
}

#[test]
fn minimal_words_are_below_random_smooth_words() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for alphabet in [al(2, 4), al(1, 3)] {
        let m = minimal_word(alphabet).unwrap().take(1000).to_vec();
        for _ in 0..200 {
            let d: Vec<bool> = (0..rng.gen_range(1..10)).map(|_| rng.gen()).collect();
            let mut s = stream(alphabet, &d);
            assert!(m.as_slice() <= s.take(1000), "{alphabet}: {d:?}");
        }
    }
}

#[test]
fn exhaustive_lyndon_against_rotations() {
    for len in 1..=6u32 {
        for code in 0..3u32.pow(len) {
            let u: Vec<u32> = (0..len).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
            let smallest = (1..u.len()).all(|i| {
                let rot: Vec<u32> = u[i..].iter().chain(&u[..i]).copied().collect();
                u < rot
            });
            let proper_suffixes = (1..u.len()).all(|i| u[..] < u[i..]);
            assert_eq!(is_lyndon(&u).unwrap(), smallest, "{u:?}");
            assert_eq!(smallest, proper_suffixes, "{u:?}");
        }
    }
}

#[test]
fn descent_pair_prefix_sits_at_the_start() {
    for (alphabet, k) in [(al(2, 4), 2), (al(2, 4), 3), (al(2, 6), 2), (al(2, 6), 3)] {
        let (f, g) = descent_pair(alphabet, k).unwrap();
        let mut letters = vec![alphabet.a()];
        letters.extend(std::iter::repeat(alphabet.b()).take(k));
        letters.push(alphabet.a());
        let d = continue_directive(&Word::new(letters).unwrap(), alphabet).unwrap();
        let mut s = stream_from_directive(&d, alphabet).unwrap();
        assert!(s.take(g.len()) == g.letters(), "{alphabet} k={k}");
        assert!(f < g);
    }
}

#[test]
fn kolakoski_factor_is_smooth() {
    let mut k = kolakoski(2, 1).unwrap();
    let w = k.take(5000).to_vec();
    assert!(is_smooth_factor(&w[1234..1334], al(1, 2)));
    assert!(is_r_smooth(&w, al(1, 2)));
    assert!(!is_smooth_factor(&[1, 1, 1], al(1, 2)));
}
