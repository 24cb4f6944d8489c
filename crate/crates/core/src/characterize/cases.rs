//! The case trees that rule out Lyndon words among smooth words, one table
//! per alphabet family, with directive prefixes and witness factors written
//! in the [formula](super::formula) language.

use std::fmt;

use super::formula::eval_word;
use crate::error::{Error, Result};
use crate::runlength::decode_capped;
use crate::smooth::{phi_inverse_prefix, DirectiveSequence};
use crate::word::{OrderedAlphabet, Word};

/// Alphabet families, each with its own case tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseFamily {
    /// `a` even, `b` odd.
    EvenOdd,
    /// Both letters even.
    Even,
    /// Both letters odd, `a ≠ 1`.
    Odd,
    /// `a = 1`, `b` odd.
    OddWithOne,
    /// `a ≠ 1` odd, `b` even.
    OddEven,
    /// `a = 1`, `b` even: directives starting with `11`.
    OneEven,
    /// `a = 1`, `b = 4n`: directives starting with `1b`.
    AppendixA,
    /// `a = 1`, `b = 2(2n+1)`: directives starting with `1b`.
    AppendixB,
}

impl CaseFamily {
    pub const ALL: [CaseFamily; 8] = [
        CaseFamily::EvenOdd,
        CaseFamily::Even,
        CaseFamily::Odd,
        CaseFamily::OddWithOne,
        CaseFamily::OddEven,
        CaseFamily::OneEven,
        CaseFamily::AppendixA,
        CaseFamily::AppendixB,
    ];

    pub fn holds(self, alphabet: OrderedAlphabet) -> bool {
        let (a, b) = (alphabet.a(), alphabet.b());
        let (ae, be) = (a % 2 == 0, b % 2 == 0);
        match self {
            CaseFamily::EvenOdd => ae && !be,
            CaseFamily::Even => ae && be,
            CaseFamily::Odd => !ae && !be && a != 1,
            CaseFamily::OddWithOne => a == 1 && !be,
            CaseFamily::OddEven => !ae && be && a != 1,
            CaseFamily::OneEven => a == 1 && be,
            CaseFamily::AppendixA => a == 1 && b % 4 == 0,
            CaseFamily::AppendixB => a == 1 && b % 4 == 2,
        }
    }

    pub fn condition(self) -> &'static str {
        match self {
            CaseFamily::EvenOdd => "a even, b odd",
            CaseFamily::Even => "a and b even",
            CaseFamily::Odd => "a and b odd, a != 1",
            CaseFamily::OddWithOne => "a = 1, b odd",
            CaseFamily::OddEven => "a odd, a != 1, b even",
            CaseFamily::OneEven => "a = 1, b even",
            CaseFamily::AppendixA => "a = 1, b = 4n",
            CaseFamily::AppendixB => "a = 1, b = 2(2n+1)",
        }
    }

    /// Families whose tables apply to `alphabet`.
    pub fn for_alphabet(alphabet: OrderedAlphabet) -> Vec<CaseFamily> {
        CaseFamily::ALL.into_iter().filter(|f| f.holds(alphabet)).collect()
    }
}

/// Extra condition on `b` for a subcase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    BEquals(u32),
    BOtherThan(u32),
    /// `b/4` odd and `b ≠ 4`.
    QuarterOddAbove4,
    /// `b/4` even.
    QuarterEven,
}

impl Constraint {
    pub fn holds(self, alphabet: OrderedAlphabet) -> bool {
        let b = alphabet.b();
        match self {
            Constraint::None => true,
            Constraint::BEquals(x) => b == x,
            Constraint::BOtherThan(x) => b != x,
            Constraint::QuarterOddAbove4 => b % 8 == 4 && b != 4,
            Constraint::QuarterEven => b % 8 == 0,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::None => f.write_str("none"),
            Constraint::BEquals(x) => write!(f, "b = {x}"),
            Constraint::BOtherThan(x) => write!(f, "b != {x}"),
            Constraint::QuarterOddAbove4 => f.write_str("b/4 odd, b != 4"),
            Constraint::QuarterEven => f.write_str("b/4 even"),
        }
    }
}

/// How the finite directive of a case continues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Continuation {
    RepeatLast,
    /// The directive formula is the preperiod; this formula is the period.
    Period(&'static str),
}

/// The factor that certifies a violation, or `Lyndon` when the case ends
/// with a Lyndon word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Lyndon,
    Factor(&'static str),
    /// `Φ⁻¹` prefix of a directive formula (the innermost letter may leave
    /// the alphabet).
    PhiInverse(&'static str),
    /// `Δ_a⁻¹(v^{b/2})` with `v = Δ_b^{-(k-2)}(b^b a^b)`.
    EvenDescent {
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub id: &'static str,
    pub family: CaseFamily,
    /// Listed in the tables of both appendix families.
    pub shared: bool,
    pub constraint: Constraint,
    pub directive: &'static str,
    pub continuation: Continuation,
    pub witness: Witness,
}

impl CaseSpec {
    pub fn claims_violation(&self) -> bool {
        self.witness != Witness::Lyndon
    }

    pub fn belongs_to(&self, family: CaseFamily) -> bool {
        self.family == family || (self.shared && family == CaseFamily::AppendixB)
    }

    pub fn applies_to(&self, alphabet: OrderedAlphabet) -> bool {
        let family_ok = self.family.holds(alphabet) || (self.shared && CaseFamily::AppendixB.holds(alphabet));
        family_ok && self.constraint.holds(alphabet)
    }

    pub fn instantiate(&'static self, alphabet: OrderedAlphabet) -> Result<CaseInstance> {
        if !self.applies_to(alphabet) {
            return Err(Error::Constraint {
                alphabet,
                constraint: format!("{} ({}; {})", self.id, self.family.condition(), self.constraint),
            });
        }
        let prefix = eval_word(self.directive, alphabet)?;
        let directive = match self.continuation {
            Continuation::RepeatLast => DirectiveSequence::repeat_last(&prefix)?,
            Continuation::Period(p) => DirectiveSequence::new(prefix, eval_word(p, alphabet)?)?,
        };
        let witness = match self.witness {
            Witness::Lyndon => None,
            Witness::Factor(f) => Some(eval_word(f, alphabet)?),
            Witness::PhiInverse(u) => Some(phi_inverse_prefix(&eval_word(u, alphabet)?, alphabet)?),
            Witness::EvenDescent { k } => Some(descent_pair(alphabet, k)?.0),
        };
        Ok(CaseInstance { spec: self, alphabet, directive, witness })
    }
}

/// A case evaluated at a concrete alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInstance {
    pub spec: &'static CaseSpec,
    pub alphabet: OrderedAlphabet,
    pub directive: DirectiveSequence,
    pub witness: Option<Word>,
}

fn descend(v: &[u32], alpha: u32, beta: u32, times: usize) -> Vec<u32> {
    (0..times).fold(v.to_vec(), |w, _| decode_capped(&w, alpha, beta, usize::MAX).0)
}

/// For an even alphabet and `k ≥ 2`, the words `Δ_a⁻¹(v₁^{b/2})` and
/// `Δ_a⁻¹(v₁^{a/2} v₂^{a/2})` where `v₁ = Δ_b^{-(k-2)}(b^b a^b)` and
/// `v₂ = Δ_b^{-(k-2)}(b^a a^a)`. The first is the witness for directives
/// `a b^k a ⋯`; the second is a prefix of the word itself.
pub fn descent_pair(alphabet: OrderedAlphabet, k: usize) -> Result<(Word, Word)> {
    if !CaseFamily::Even.holds(alphabet) {
        return Err(Error::Constraint { alphabet, constraint: CaseFamily::Even.condition().to_string() });
    }
    if k < 2 {
        return Err(Error::TooShort { min: 2, got: k });
    }
    let (a, b) = (alphabet.a(), alphabet.b());
    let block = |x: u32| {
        let mut v = vec![b; x as usize];
        v.resize(2 * x as usize, a);
        descend(&v, b, a, k - 2)
    };
    let (v1, v2) = (block(b), block(a));
    let f = descend(&v1.repeat(b as usize / 2), a, b, 1);
    let mut g = v1.repeat(a as usize / 2);
    g.extend(v2.repeat(a as usize / 2));
    let g = descend(&g, a, b, 1);
    Ok((Word::from_vec(f), Word::from_vec(g)))
}

const fn case(id: &'static str, family: CaseFamily, directive: &'static str, witness: &'static str) -> CaseSpec {
    CaseSpec {
        id,
        family,
        shared: false,
        constraint: Constraint::None,
        directive,
        continuation: Continuation::RepeatLast,
        witness: Witness::Factor(witness),
    }
}

const fn only(constraint: Constraint, spec: CaseSpec) -> CaseSpec {
    CaseSpec { constraint, ..spec }
}

const fn shared(spec: CaseSpec) -> CaseSpec {
    CaseSpec { shared: true, ..spec }
}

const fn lyndon(id: &'static str, family: CaseFamily, pre: &'static str, period: &'static str) -> CaseSpec {
    CaseSpec {
        id,
        family,
        shared: false,
        constraint: Constraint::None,
        directive: pre,
        continuation: Continuation::Period(period),
        witness: Witness::Lyndon,
    }
}

const fn special(id: &'static str, family: CaseFamily, directive: &'static str, witness: Witness) -> CaseSpec {
    CaseSpec {
        id,
        family,
        shared: false,
        constraint: Constraint::None,
        directive,
        continuation: Continuation::RepeatLast,
        witness,
    }
}

use CaseFamily::{AppendixA as A, AppendixB as B, Even, EvenOdd, Odd, OddEven, OddWithOne, OneEven};
use Constraint::{BEquals, BOtherThan, QuarterEven, QuarterOddAbove4};

const FOUR: Constraint = BEquals(4);
const TWO: Constraint = BEquals(2);
const NOT_TWO: Constraint = BOtherThan(2);

// Recurring witness shapes of the b = 2(2n+1) table.
const B_SPLIT: &str = "1^b(b1^b)^{2n+1}(b1)^{2n+1}";
const B_BLOCKS: &str = "(1^bb)^{2n+1}(1^bb^b)^{2n+1}(1b)^{2n+1}";
const A_SPLIT: &str = "1^b(b1^b)^{b/2}(b1)^{b/2}";
const A_NESTED: &str = "((1^bb)^{b/2}((1^bb^b)^{b/2}(1b)^{b/2})^{b/2})^{b/2}1^b((b1)^{b/2}(b^b1^b)^{b/2})^{b/2}";
const SMALL: &str = "1121121";

pub static CASES: &[CaseSpec] = &[
    case("even-odd/1", EvenOdd, "aaa", "a^b"),
    case("even-odd/2", EvenOdd, "aab", "a^b"),
    case("even-odd/3", EvenOdd, "abaa", "(a^bb^b)^{(b-1)/2}a^b"),
    case("even-odd/4", EvenOdd, "abab", "a^bb^aa"),
    case("even-odd/5", EvenOdd, "abb", "a^bb^aa^a"),
    //
    case("even/1.a", Even, "aaa", "a^b"),
    case("even/1.b", Even, "aab", "a^b"),
    case("even/2.a", Even, "abaa", "(a^bb^b)^{b/2}"),
    case("even/2.b", Even, "abab", "(a^bb^b)^{b/2}"),
    special("even/3.k2", Even, "ab^2a", Witness::EvenDescent { k: 2 }),
    special("even/3.k3", Even, "ab^3a", Witness::EvenDescent { k: 3 }),
    lyndon("even/3.lyndon", Even, "a", "b"),
    //
    case("odd/1.a", Odd, "aaa", "a^b"),
    case("odd/1.b", Odd, "aab", "a^b"),
    case("odd/2.a", Odd, "aba", "a^bb^aa^a"),
    case("odd/2.b", Odd, "abb", "a^bb^aa^a"),
    //
    case("odd-one/1b.1", OddWithOne, "1b111", "1^b(b1)^{(b-1)/2}b1^bb1"),
    case("odd-one/1b.2", OddWithOne, "1b11b11", "1^bb(1^bb^b)^{(b-1)/2}"),
    case("odd-one/1b.3", OddWithOne, "1b11b1b", "1^b"),
    case("odd-one/1b.4", OddWithOne, "1b11bb", "1^b(b1)^{(b-1)/2}b(1^bb)^{(b-1)/2}"),
    lyndon("odd-one/1b.5", OddWithOne, "", "1b"),
    special("odd-one/1b.6", OddWithOne, "1bb", Witness::PhiInverse("1b1")),
    case("odd-one/11.1", OddWithOne, "1111", "1^b"),
    case("odd-one/11.2", OddWithOne, "111b", "1^b"),
    lyndon("odd-one/11.3", OddWithOne, "1", "1b"),
    //
    case("odd-even/1", OddEven, "aaa", "a^b"),
    case("odd-even/2", OddEven, "aab", "a^b"),
    case("odd-even/3", OddEven, "aba", "a^bb^aa^a"),
    case("odd-even/4", OddEven, "abba", "a^bb^aa^a"),
    case("odd-even/5", OddEven, "abbb", "a^bb^aa^a"),
    //
    case("one-even/1", OneEven, "1111", "1^b"),
    case("one-even/2", OneEven, "111b", "1^b"),
    case("one-even/3", OneEven, "11b", "1^b"),
    //
    shared(case("appendixA/1", A, "1b111", "1^bb1^b")),
    case("appendixA/2", A, "1b11b", "(1^bb)^{b/2}1^b"),
    shared(case("appendixA/3", A, "1b1b111", "(1^bb)^{b/2}(1^bb^b)^{b/2}(1b)^{b/2}")),
    case("appendixA/4", A, "1b1b11b", "(1^bb)^{b/2}((1^bb^b)^{b/2}(1b)^{b/2})^{b/2}"),
    case("appendixA/5", A, "1b1b1b", "(1^bb)^{b/2}(1^bb^b)^{b/2}(1b)^{b/2}"),
    case("appendixA/6", A, "1b1bb111", A_SPLIT),
    case("appendixA/7", A, "1b1bb11b", A_SPLIT),
    shared(case("appendixA/8", A, "1b1bb1b", A_SPLIT)),
    case(
        "appendixA/9",
        A,
        "1b1bbb111",
        "(((1^bb)^{b/2}((1^bb^b)^{b/2}(1b)^{b/2})^{b/2})^{b/2}(1^b(b1)^{b/2}b^b(1b)^{b/2})^{b/4})^{b/2}\
         (1^bb)^{b/2}(((1^bb^b)^{b/2}1(b^b1^b)^{b/2}b)^{b/4}(((1^bb^b)^{b/2}(1b)^{b/2})^{b/2}(1^bb)^{b/2})^{b/2})^{b/2}",
    ),
    case("appendixA/10", A, "1b1bbb11b", A_NESTED),
    only(
        QuarterOddAbove4,
        case(
            "appendixA/11.i.a",
            A,
            "1b1bbb1b",
            "(1^bb)(((1^bb^b)^{b/2}(1b)^{b/2})^{b/2}(1^bb)^{b/2})^{b/2}(1^bb^b)^{b/2}",
        ),
    ),
    only(QuarterEven, case("appendixA/11.i.b", A, "1b1bbb1b", A_NESTED)),
    only(FOUR, case("appendixA/11.ii.a", A, "1414441411", "1^4(41^4)^2(41)^2")),
    only(FOUR, case("appendixA/11.ii.b", A, "1414441414", "1^4(41^4)^2(41)^2")),
    only(FOUR, case("appendixA/11.ii.c", A, "141444144", "1^4(41^4)^2(41)^2")),
    case(
        "appendixA/12",
        A,
        "1b1bbbb",
        "((1^bb)^{b/2}((1^bb^b)^{b/2}(1b)^{b/2})^{b/2})^{b/2}1^b(b1)^{b/2}(b^b1^b)^{b/2}",
    ),
    shared(case("appendixA/13", A, "1bb111", "(1^bb^b)^{b/2}1(b^b1^b)^{b/2}")),
    case("appendixA/14", A, "1bb11b", "(1^bb)^{b/2}"),
    case("appendixA/15", A, "1bb1b", "1^bb1^b"),
    shared(case("appendixA/16", A, "1bbb", "1^bb1")),
    //
    case("appendixB/17", B, "1b11b1", "1^bb1^b"),
    only(TWO, case("appendixB/18.n=0", B, "1b11bb", "1^bb1b^b(1b)1^b")),
    only(NOT_TWO, case("appendixB/18.n>0", B, "1b11bb", "1^b(b1)^{2n+1}(b^b1^b)^{2n+1}")),
    only(TWO, case("appendixB/19.i", B, "121211211", SMALL)),
    only(NOT_TWO, case("appendixB/19.ii", B, "1b1b11b11", B_SPLIT)),
    only(TWO, case("appendixB/20.i", B, "121211212", "1121122121")),
    only(NOT_TWO, case("appendixB/20.ii", B, "1b1b11b1b", B_BLOCKS)),
    only(TWO, case("appendixB/21.i.a", B, "1212112211", "11211221211")),
    only(TWO, case("appendixB/21.i.b", B, "1212112212", SMALL)),
    only(TWO, case("appendixB/21.i.c", B, "121211222", SMALL)),
    only(NOT_TWO, case("appendixB/21.ii", B, "1b1b11bb", B_SPLIT)),
    only(TWO, case("appendixB/22.i", B, "12121211", "1121122121")),
    only(NOT_TWO, case("appendixB/22.ii", B, "1b1b1b11", B_SPLIT)),
    only(TWO, case("appendixB/23.i", B, "12121212", SMALL)),
    only(NOT_TWO, case("appendixB/23.ii", B, "1b1b1b1b", B_BLOCKS)),
    only(TWO, case("appendixB/24.i", B, "1212122", SMALL)),
    only(NOT_TWO, case("appendixB/24.ii", B, "1b1b1bb", "1^b(b1^b)^{2n+1}(b)^{2n+1}")),
    only(TWO, case("appendixB/25.i.a", B, "121221111", SMALL)),
    only(TWO, case("appendixB/25.i.b", B, "121221112", SMALL)),
    only(NOT_TWO, case("appendixB/25.ii", B, "1b1bb111", B_SPLIT)),
    only(TWO, case("appendixB/26.i", B, "12122112", SMALL)),
    only(NOT_TWO, case("appendixB/26.ii", B, "1b1bb11b", B_SPLIT)),
    only(
        NOT_TWO,
        case(
            "appendixB/27.i",
            B,
            "1b1bbb",
            "((1^bb)^{2n+1}((1^bb^b)^{2n+1}(1b)^{2n+1})^{2n+1})^{2n+1}1^b(b1)^{2n+1}",
        ),
    ),
    only(TWO, case("appendixB/27.ii.a", B, "12122211", "11211221211212211")),
    only(TWO, case("appendixB/27.ii.b", B, "12122212", "11211221211211")),
    only(TWO, case("appendixB/27.ii.c", B, "1212222", SMALL)),
    case("appendixB/28", B, "1bb11b", "1^bb1^b"),
    case("appendixB/29", B, "1bb1b", "1^bb1"),
];

/// Alphabets at which every table is instantiated.
pub fn reference_alphabets() -> Vec<OrderedAlphabet> {
    [
        (2, 3),
        (2, 5),
        (4, 5),
        (2, 4),
        (2, 6),
        (4, 6),
        (3, 5),
        (5, 7),
        (1, 3),
        (1, 5),
        (3, 4),
        (3, 6),
        (5, 6),
        (1, 2),
        (1, 6),
        (1, 10),
        (1, 4),
        (1, 8),
    ]
    .into_iter()
    .map(|(a, b)| OrderedAlphabet::new(a, b).expect("a < b"))
    .collect()
}

pub fn find_case(id: &str) -> Option<&'static CaseSpec> {
    CASES.iter().find(|c| c.id == id)
}

/// Every case that applies to `alphabet`, across all families.
pub fn case_table(alphabet: OrderedAlphabet) -> Result<Vec<CaseInstance>> {
    CASES.iter().filter(|c| c.applies_to(alphabet)).map(|c| c.instantiate(alphabet)).collect()
}

/// The cases of one family, which must hold for `alphabet`.
pub fn family_table(family: CaseFamily, alphabet: OrderedAlphabet) -> Result<Vec<CaseInstance>> {
    if !family.holds(alphabet) {
        return Err(Error::Constraint { alphabet, constraint: family.condition().to_string() });
    }
    CASES
        .iter()
        .filter(|c| c.belongs_to(family) && c.constraint.holds(alphabet))
        .map(|c| c.instantiate(alphabet))
        .collect()
}
