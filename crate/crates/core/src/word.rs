//! Words over an indexed alphabet.
//!
//! Letter `0` prints as `a`, letter `1` as `b` and so on; letters past `z`
//! print as `<index>`. The empty word prints as `λ` through [`fmt::Display`]
//! and as the empty string through [`Word::to_letters`].
//!
//! Parsing accepts plain letter strings plus a compact power notation:
//! `a(ba^3)^2ba` is `abaaabaaaba`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = usize;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(x: Letter) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    pub fn validate(&self, sigma: usize) -> Result<()> {
        match self.0.iter().find(|&&x| x >= sigma) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, sigma }),
            None => Ok(()),
        }
    }

    pub fn to_letters(&self) -> String {
        let mut out = String::with_capacity(self.len());
        for &x in &self.0 {
            push_letter(&mut out, x);
        }
        out
    }
}

fn push_letter(out: &mut String, x: Letter) {
    if x < 26 {
        out.push((b'a' + x as u8) as char);
    } else {
        out.push_str(&format!("<{x}>"));
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("λ")
        } else {
            f.write_str(&self.to_letters())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "λ" || s == "eps" {
            return Ok(Word::empty());
        }
        let chars: Vec<char> = s.chars().collect();
        let mut parser = Parser { chars, pos: 0 };
        let word = parser.sequence()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("unexpected character"));
        }
        Ok(word)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            line: 1,
            column: self.pos + 1,
            message: format!("word: {message}"),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut out = Word::empty();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = self.atom()?;
            let atom = if self.peek() == Some('^') {
                self.pos += 1;
                atom.pow(self.number()?)
            } else {
                atom
            };
            out = out.concat(&atom);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sequence()?;
                if self.peek() != Some(')') {
                    return Err(self.error("missing ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('<') => {
                self.pos += 1;
                let x = self.number()?;
                if self.peek() != Some('>') {
                    return Err(self.error("missing '>'"));
                }
                self.pos += 1;
                Ok(Word::letter(x))
            }
            Some(c @ 'a'..='z') => {
                self.pos += 1;
                Ok(Word::letter(c as usize - 'a' as usize))
            }
            _ => Err(self.error("expected a letter, '(' or '<'")),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("number too large"))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_letters())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn power_notation() {
        assert_eq!(w("a(ba^3)^2ba").to_letters(), "abaaabaaaba");
        assert_eq!(w("a^2ba^2"), w("aabaa"));
        assert_eq!(w("(ab)^0"), Word::empty());
        assert_eq!(w("<27>a"), Word::new(vec![27, 0]));
    }

    #[test]
    fn empty_spellings() {
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("λ"), Word::empty());
        assert_eq!(Word::empty().to_string(), "λ");
        assert_eq!(Word::empty().to_letters(), "");
    }

    #[test]
    fn parse_errors_carry_columns() {
        match "ab(c".parse::<Word>() {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!("aB".parse::<Word>().is_err());
        assert!("a^".parse::<Word>().is_err());
    }

    #[test]
    fn validate_alphabet() {
        assert!(w("abc").validate(3).is_ok());
        assert_eq!(
            w("abc").validate(2),
            Err(Error::LetterOutOfRange {
                letter: 2,
                sigma: 2
            })
        );
    }
}
