//! A small language for words with symbolic exponents, such as
//! `(a^bb^b)^{b/2}` or `1^b(b1)^{2n+1}`.
//!
//! Grammar (spaces are ignored):
//!
//! ```text
//! word   := item*
//! item   := atom ('^' count)?
//! atom   := '(' word ')' | letter
//! letter := 'a' | 'b' | digit | '{' arith '}'
//! count  := 'a' | 'b' | 'n' | digit | '{' arith '}'
//! arith  := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*       juxtaposition also multiplies
//! factor := integer | 'a' | 'b' | 'n' | '(' arith ')'
//! ```
//!
//! `n` is defined when `b = 2(2n+1)`. Division must be exact.

use crate::error::{Error, Result};
use crate::word::{OrderedAlphabet, Word};

/// Values of `a`, `b` and, when defined, `n`.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    a: i64,
    b: i64,
    n: Option<i64>,
}

impl Params {
    pub fn new(alphabet: OrderedAlphabet) -> Params {
        let (a, b) = (i64::from(alphabet.a()), i64::from(alphabet.b()));
        let n = (b % 4 == 2).then(|| (b / 2 - 1) / 2);
        Params { a, b, n }
    }
}

/// Evaluates a word formula at the letters of `alphabet`.
pub fn eval_word(formula: &str, alphabet: OrderedAlphabet) -> Result<Word> {
    let mut p = Parser {
        src: formula.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        params: Params::new(alphabet),
        formula,
    };
    let letters = p.word()?;
    if p.pos != p.src.len() {
        return Err(p.fail("unexpected character"));
    }
    Word::new(letters).map_err(|_| p.fail("letters must be positive"))
}

/// Evaluates an integer expression such as `(b-1)/2`.
pub fn eval_int(expr: &str, alphabet: OrderedAlphabet) -> Result<i64> {
    let mut p = Parser {
        src: expr.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        params: Params::new(alphabet),
        formula: expr,
    };
    let v = p.arith()?;
    if p.pos != p.src.len() {
        return Err(p.fail("unexpected character"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: Vec<char>,
    pos: usize,
    params: Params,
    formula: &'a str,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        Error::Formula { formula: self.formula.to_string(), reason: format!("{reason} at offset {}", self.pos) }
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = if c == '(' {
                self.pos += 1;
                let inner = self.word()?;
                self.eat(')')?;
                inner
            } else {
                vec![self.letter()?]
            };
            if self.peek() == Some('^') {
                self.pos += 1;
                let k = self.count()?;
                out.extend(atom.repeat(k));
            } else {
                out.extend(atom);
            }
        }
        Ok(out)
    }

    fn letter(&mut self) -> Result<u32> {
        let v = match self.peek() {
            Some('{') => self.braced()?,
            Some('n') => return Err(self.fail("`n` is not a letter")),
            _ => self.single()?,
        };
        u32::try_from(v).ok().filter(|&x| x > 0).ok_or_else(|| self.fail("letters must be positive"))
    }

    fn count(&mut self) -> Result<usize> {
        let v = match self.peek() {
            Some('{') => self.braced()?,
            _ => self.single()?,
        };
        usize::try_from(v).map_err(|_| self.fail("negative exponent"))
    }

    fn braced(&mut self) -> Result<i64> {
        self.eat('{')?;
        let v = self.arith()?;
        self.eat('}')?;
        Ok(v)
    }

    /// One of `a`, `b`, `n` or a single digit.
    fn single(&mut self) -> Result<i64> {
        let c = self.peek().ok_or_else(|| self.fail("unexpected end"))?;
        let v = match c {
            'a' => self.params.a,
            'b' => self.params.b,
            'n' => self.n()?,
            d if d.is_ascii_digit() => i64::from(d.to_digit(10).unwrap()),
            _ => return Err(self.fail("expected a letter")),
        };
        self.pos += 1;
        Ok(v)
    }

    fn n(&self) -> Result<i64> {
        self.params.n.ok_or_else(|| self.fail("`n` needs b = 2(2n+1)"))
    }

    fn arith(&mut self) -> Result<i64> {
        let mut v = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            v = if op == '+' { v + rhs } else { v - rhs };
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<i64> {
        let mut v = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    v *= self.factor()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if d == 0 || v % d != 0 {
                        return Err(self.fail(&format!("{v} is not divisible by {d}")));
                    }
                    v /= d;
                }
                Some('a' | 'b' | 'n' | '(') => v *= self.factor()?,
                _ => return Ok(v),
            }
        }
    }

    fn factor(&mut self) -> Result<i64> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.arith()?;
                self.eat(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.src[start..self.pos].iter().collect();
                digits.parse().map_err(|_| self.fail("integer too large"))
            }
            _ => self.single(),
        }
    }
}
