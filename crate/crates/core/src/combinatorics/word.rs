use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A word over the alphabet `{1, .., n}`. The bound `n` is carried by the
/// callers that need it (crystal colors, enumeration) rather than by the word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// Build a word and check every letter lies in `1..=n`.
    pub fn checked(letters: Vec<u8>, n: u8) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange { letter: l as u32, n: n as u32 });
        }
        Ok(Word(letters))
    }

    /// Parse `"2143512"` (one digit per letter) or `"10,2,11"` (comma
    /// separated, required once a letter exceeds 9). The empty string is the
    /// empty word.
    pub fn parse(s: &str, n: u8) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("not a letter: {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::checked(letters, n)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter `1..=n`.
    pub fn content(&self, n: u8) -> Vec<usize> {
        let mut c = vec![0; n as usize];
        for &l in &self.0 {
            c[l as usize - 1] += 1;
        }
        c
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All `n^m` words of length `m`, in lexicographic order.
    pub fn all(n: u8, m: usize) -> impl Iterator<Item = Word> {
        let total = (n as usize).pow(m as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![0u8; m];
            for slot in v.iter_mut().rev() {
                *slot = (idx % n as usize) as u8 + 1;
                idx /= n as usize;
            }
            Word(v)
        })
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().any(|&l| l > 9) {
            let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(","))
        } else {
            self.0.iter().try_for_each(|l| write!(f, "{l}"))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s, u8::MAX).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_digit_and_comma_forms() {
        assert_eq!(Word::parse("2143512", 5).unwrap().0, vec![2, 1, 4, 3, 5, 1, 2]);
        assert_eq!(Word::parse("10,2,11", 11).unwrap().0, vec![10, 2, 11]);
        assert_eq!(Word::parse("", 3).unwrap(), Word::default());
        assert!(matches!(Word::parse("124", 3), Err(Error::LetterOutOfRange { letter: 4, n: 3 })));
        assert!(Word::parse("1a", 3).is_err());
    }

    #[test]
    fn display_switches_to_commas() {
        assert_eq!(Word(vec![2, 1, 3]).to_string(), "213");
        assert_eq!(Word(vec![10, 2]).to_string(), "10,2");
    }

    #[test]
    fn all_words_counts() {
        assert_eq!(Word::all(3, 3).count(), 27);
        assert_eq!(Word::all(2, 0).collect::<Vec<_>>(), vec![Word::default()]);
        let w: Vec<_> = Word::all(2, 2).collect();
        assert_eq!(w[1].0, vec![1, 2]);
    }
}
