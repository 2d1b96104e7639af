//! Recursive-descent parser for word expressions.
//!
//! ```text
//! word := term+
//! term := (gen | '[' word ',' word ']') exp?
//! gen  := 'a' | 'b' | 'x' | 'y' | 'A' | 'B' | 'X' | 'Y'
//! exp  := '^' '-'? digit+
//! ```
//!
//! Uppercase letters denote inverses and whitespace between terms is
//! optional. An exponent after a commutator bracket is accepted as well.

use alloc::vec::Vec;

use super::{Gen, Letter, Word};

/// Largest accepted `|exponent|`; keeps accidental input from exhausting memory.
pub const MAX_EXPONENT: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {expected}")]
    Syntax {
        offset: usize,
        expected: &'static str,
    },
    #[error("unknown generator {found:?} at byte {offset}")]
    UnknownGenerator { offset: usize, found: char },
}

pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let letters = p.word()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(Word::new(letters))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(c) if c.is_alphabetic() => ParseError::UnknownGenerator {
                offset: self.pos,
                found: c,
            },
            _ => ParseError::Syntax {
                offset: self.pos,
                expected,
            },
        }
    }

    fn starts_term(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c == '[' || c.is_alphabetic())
    }

    fn word(&mut self) -> Result<Vec<Letter>, ParseError> {
        if !self.starts_term() {
            return Err(self.unexpected("a generator or '['"));
        }
        let mut letters = Vec::new();
        while self.starts_term() {
            letters.extend(self.term()?);
        }
        Ok(letters)
    }

    fn term(&mut self) -> Result<Vec<Letter>, ParseError> {
        let base = match self.peek() {
            Some('[') => {
                self.bump();
                let u = Word::new(self.word()?);
                self.skip_ws();
                if self.peek() != Some(',') {
                    return Err(self.unexpected("','"));
                }
                self.bump();
                let v = Word::new(self.word()?);
                self.skip_ws();
                if self.peek() != Some(']') {
                    return Err(self.unexpected("']'"));
                }
                self.bump();
                Word::commutator(&u, &v)
            }
            Some(c) => match Gen::from_char(c) {
                Some((gen, inverse)) => {
                    self.bump();
                    Word::letter(Letter::new(gen, inverse))
                }
                None => return Err(self.unexpected("a generator or '['")),
            },
            None => return Err(self.unexpected("a generator or '['")),
        };
        let exp = self.exponent()?;
        Ok(base.pow(exp).into_letters())
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        let negative = self.peek() == Some('-');
        if negative {
            self.bump();
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(ParseError::Syntax {
                offset: self.pos,
                expected: "exponent digits",
            });
        }
        let magnitude: u64 = self.src[start..self.pos]
            .parse()
            .ok()
            .filter(|&m| m <= MAX_EXPONENT)
            .ok_or(ParseError::Syntax {
                offset: start,
                expected: "an exponent of at most 100000",
            })?;
        let m = magnitude as i64;
        Ok(if negative { -m } else { m })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uppercase_is_inverse() {
        let w = parse_word("x y X Y").unwrap();
        assert_eq!(
            w.letters(),
            &[
                Letter::pos(Gen::X),
                Letter::pos(Gen::Y),
                Letter::neg(Gen::X),
                Letter::neg(Gen::Y)
            ]
        );
    }

    #[test]
    fn commutator_sugar() {
        assert_eq!(parse_word("[x,y]").unwrap(), parse_word("x y X Y").unwrap());
        assert_eq!(
            parse_word("[ [x, y] , [x^2,y] ]").unwrap(),
            parse_word("xyXY xxyXXY yxYX yxxYXX").unwrap()
        );
    }

    #[test]
    fn free_cancellation() {
        assert!(parse_word("x X").unwrap().is_empty());
        assert!(parse_word("[x,x]").unwrap().is_empty());
    }

    #[test]
    fn exponents() {
        assert_eq!(parse_word("x^3").unwrap(), parse_word("xxx").unwrap());
        assert_eq!(parse_word("x^-2").unwrap(), parse_word("XX").unwrap());
        assert_eq!(parse_word("X^-2").unwrap(), parse_word("xx").unwrap());
        assert!(parse_word("x^0 y").unwrap() == parse_word("y").unwrap());
        assert_eq!(
            parse_word("[a,b]^2").unwrap(),
            parse_word("abABabAB").unwrap()
        );
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_word("x z"),
            Err(ParseError::UnknownGenerator {
                offset: 2,
                found: 'z'
            })
        );
        assert!(matches!(
            parse_word("[x,y"),
            Err(ParseError::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_word(""),
            Err(ParseError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_word("x^"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_word("x ^ 9999999999999"),
            Err(ParseError::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_word("x, y"),
            Err(ParseError::Syntax { offset: 1, .. })
        ));
    }
}
