use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Normal form `A^a C^c B^b` of an element of `G(beta)`.
///
/// Canonical ranges (`c ∈ [0, n)`, `b ∈ [0, n²)`) are established by
/// [`MacdonaldGroup::normalize`](crate::MacdonaldGroup::normalize); an `Element` does not carry its
/// group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub(crate) a: BigInt,
    pub(crate) c: BigInt,
    pub(crate) b: BigInt,
}

impl Element {
    pub fn identity() -> Self {
        Element {
            a: BigInt::zero(),
            c: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    pub fn a_exp(&self) -> &BigInt {
        &self.a
    }

    pub fn c_exp(&self) -> &BigInt {
        &self.c
    }

    pub fn b_exp(&self) -> &BigInt {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.c.is_zero() && self.b.is_zero()
    }

    pub fn is_torsion(&self) -> bool {
        self.a.is_zero()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        for (letter, e) in [('A', &self.a), ('C', &self.c), ('B', &self.b)] {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Order of an element: infinite exactly off the torsion subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

/// A word in the letters `A`, `B`, `C`; exponents are non-zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(Letter, BigInt)>);

impl Word {
    /// Parses `term (('*' | whitespace) term)*` with `term := letter ('^' '-'? digits)?`.
    ///
    /// The empty string and `"1"` denote the empty word.
    pub fn parse(text: &str) -> Result<Word> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut out = Vec::new();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let syntax = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: msg.to_string(),
        };
        skip_ws(&mut pos);
        if text.trim() == "1" {
            return Ok(Word::default());
        }
        let mut need_term = false;
        while pos < bytes.len() {
            let letter = match bytes[pos] {
                b'A' => Letter::A,
                b'B' => Letter::B,
                b'C' => Letter::C,
                _ => return Err(syntax(pos, "expected one of A, B, C")),
            };
            pos += 1;
            let mut exp = BigInt::one();
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let start = pos;
                if pos < bytes.len() && bytes[pos] == b'-' {
                    pos += 1;
                }
                let digits = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == digits {
                    return Err(syntax(pos, "expected an integer exponent"));
                }
                exp = text[start..pos]
                    .parse()
                    .map_err(|_| syntax(start, "bad exponent"))?;
            }
            if !exp.is_zero() {
                out.push((letter, exp));
            }
            need_term = false;
            let before = pos;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                skip_ws(&mut pos);
                need_term = true;
            } else if pos < bytes.len() && pos == before {
                return Err(syntax(pos, "expected '*' or whitespace between terms"));
            }
        }
        if need_term {
            return Err(syntax(pos, "dangling '*'"));
        }
        Ok(Word(out))
    }
}
