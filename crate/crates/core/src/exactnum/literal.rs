//! The textual form of cyclotomic numbers.
//!
//! A literal is a sum of terms separated by `+` or `-`, each term being
//! `[p[/q]][*][z[^k]]` where `z` stands for ζ_N of the surrounding field.
//! Whitespace is ignored. Examples: `1/2*z^3 - z + 2`, `-1`, `z`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Cyclotomic, CyclotomicField, Rational};
use crate::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&self, message: &str) -> Error {
        Error::Literal { position: self.offset(), message: message.to_string() }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if self.pos == start {
            None
        } else {
            s.parse().ok()
        }
    }
}

impl Cyclotomic {
    /// Parses a literal in the grammar above, with `z` read as ζ of `field`.
    pub fn parse_literal(src: &str, field: &Arc<CyclotomicField>) -> Result<Self> {
        let mut cur = Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        };
        if cur.chars.is_empty() {
            return Err(cur.error("empty literal"));
        }
        let mut terms: Vec<(Rational, i64)> = Vec::new();
        let mut first = true;
        while cur.peek().is_some() {
            let negative = match cur.peek() {
                Some('+') => {
                    cur.bump();
                    false
                }
                Some('-') => {
                    cur.bump();
                    true
                }
                _ if first => false,
                _ => return Err(cur.error("expected `+` or `-`")),
            };
            first = false;
            let (coeff, exp) = parse_term(&mut cur)?;
            terms.push((if negative { -coeff } else { coeff }, exp));
        }
        Ok(Cyclotomic::from_terms(field, &terms))
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(Rational, i64)> {
    let coeff = match cur.digits() {
        Some(p) => {
            if cur.peek() == Some('/') {
                cur.bump();
                let q = cur.digits().ok_or_else(|| cur.error("expected denominator"))?;
                if q.is_zero() {
                    return Err(cur.error("zero denominator"));
                }
                Some(Rational::new(p, q))
            } else {
                Some(Rational::from_integer(p))
            }
        }
        None => None,
    };
    let star = cur.peek() == Some('*');
    if star {
        if coeff.is_none() {
            return Err(cur.error("`*` without a coefficient"));
        }
        cur.bump();
    }
    let exp = if cur.peek() == Some('z') {
        cur.bump();
        if cur.peek() == Some('^') {
            cur.bump();
            let neg = cur.peek() == Some('-');
            if neg {
                cur.bump();
            }
            let k = cur.digits().ok_or_else(|| cur.error("expected exponent"))?;
            let k: i64 = k.try_into().map_err(|_| cur.error("exponent out of range"))?;
            Some(if neg { -k } else { k })
        } else {
            Some(1)
        }
    } else {
        if star {
            return Err(cur.error("expected `z` after `*`"));
        }
        None
    };
    match (coeff, exp) {
        (None, None) => Err(cur.error("expected a number or `z`")),
        (c, e) => Ok((c.unwrap_or_else(Rational::one), e.unwrap_or(0))),
    }
}

impl fmt::Display for Cyclotomic {
    /// Writes the canonical literal, highest power of `z` first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for i in (0..self.field().degree()).rev() {
            let c = &self.numerators()[i];
            if c.is_zero() {
                continue;
            }
            let r = Rational::new(c.clone(), self.denominator().clone());
            let neg = r.is_negative();
            let mag = r.abs();
            match (wrote, neg) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            wrote = true;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn field(n: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(n).unwrap()
    }

    #[test]
    fn parses_examples() {
        let f = field(12);
        let v = Cyclotomic::parse_literal("1/2*z^3 - z + 2", &f).unwrap();
        let expected = Cyclotomic::from_terms(
            &f,
            &[
                (Rational::new(1.into(), 2.into()), 3),
                (Rational::from_integer((-1).into()), 1),
                (Rational::from_integer(2.into()), 0),
            ],
        );
        assert_eq!(v, expected);
        assert_eq!(format!("{v}"), "1/2*z^3 - z + 2");
        assert_eq!(Cyclotomic::parse_literal("-1", &f).unwrap(), Cyclotomic::from_integer(&f, -1));
        assert_eq!(Cyclotomic::parse_literal(" z ", &f).unwrap(), Cyclotomic::zeta_pow(&f, 1));
        assert_eq!(Cyclotomic::parse_literal("z^-1", &f).unwrap(), Cyclotomic::zeta_pow(&f, 11));
        assert_eq!(Cyclotomic::parse_literal("3 z", &f).unwrap(), Cyclotomic::parse_literal("3*z", &f).unwrap());
    }

    #[test]
    fn reduces_high_powers() {
        let f = field(4);
        // z^2 = -1 in Q(i)
        assert_eq!(Cyclotomic::parse_literal("z^2", &f).unwrap(), Cyclotomic::from_integer(&f, -1));
        assert_eq!(format!("{}", Cyclotomic::parse_literal("z^2 + z^6", &f).unwrap()), "-2");
        assert_eq!(format!("{}", Cyclotomic::parse_literal("z - z", &f).unwrap()), "0");
    }

    #[test]
    fn reports_positions() {
        let f = field(3);
        for (src, pos) in [("1 + ", 4), ("2*", 2), ("*z", 0), ("1/0", 3), ("z z", 2), ("", 0), ("1/", 2)] {
            match Cyclotomic::parse_literal(src, &f) {
                Err(Error::Literal { position, .. }) => assert_eq!(position, pos, "{src:?}"),
                other => panic!("{src:?} gave {other:?}"),
            }
        }
    }
}
