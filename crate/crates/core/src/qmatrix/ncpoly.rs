use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeffs::RationalQ;
use crate::combinatorics::Word;
use crate::error::{Error, Result};

/// The generator `t_{row,col}`. Ordered lexicographically by `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub row: u8,
    pub col: u8,
}

impl Generator {
    pub fn new(row: u8, col: u8) -> Self {
        assert!(row >= 1 && col >= 1, "generator indices start at 1");
        Generator { row, col }
    }

    pub fn checked(row: u8, col: u8, n: u8) -> Result<Self> {
        for x in [row, col] {
            if x == 0 || x > n {
                return Err(Error::LetterOutOfRange { letter: x as u32, n: n as u32 });
            }
        }
        Ok(Generator { row, col })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{},{}]", self.row, self.col)
    }
}

/// A word in the generators. The empty monomial is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub Vec<Generator>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `t_{w_1 u_1} ⋯ t_{w_k u_k}`.
    pub fn from_words(rows: &Word, cols: &Word) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::ShapeMismatch(format!("row word {rows} and column word {cols} differ in length")));
        }
        Ok(Monomial(rows.letters().iter().zip(cols.letters()).map(|(&r, &c)| Generator::new(r, c)).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn row_word(&self) -> Word {
        Word(self.0.iter().map(|g| g.row).collect())
    }

    pub fn col_word(&self) -> Word {
        Word(self.0.iter().map(|g| g.col).collect())
    }

    pub fn row_content(&self, n: u8) -> Vec<usize> {
        self.row_word().content(n)
    }

    pub fn col_content(&self, n: u8) -> Vec<usize> {
        self.col_word().content(n)
    }

    pub fn max_index(&self) -> u8 {
        self.0.iter().map(|g| g.row.max(g.col)).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `t[2,3]*t[1,1]*t[3,2]`; `1` is the empty monomial.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        let bad = || Error::Parse(format!("malformed monomial {s:?}"));
        let mut out = Vec::new();
        for factor in s.split('*') {
            let inner = factor
                .trim()
                .strip_prefix("t[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let row: u8 = a.trim().parse().map_err(|_| bad())?;
            let col: u8 = b.trim().parse().map_err(|_| bad())?;
            if row == 0 || col == 0 {
                return Err(bad());
            }
            out.push(Generator { row, col });
        }
        Ok(Monomial(out))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[u8; 2]> = self.0.iter().map(|g| [g.row, g.col]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[u8; 2]>::deserialize(d)?;
        if pairs.iter().any(|p| p[0] == 0 || p[1] == 0) {
            return Err(serde::de::Error::custom("generator indices start at 1"));
        }
        Ok(Monomial(pairs.into_iter().map(|[r, c]| Generator { row: r, col: c }).collect()))
    }
}

/// A finite linear combination of monomials with nonzero coefficients.
///
/// Values produced by the arithmetic methods are always normalized; raw
/// unnormalized combinations can be built with [`NCPoly::from_raw`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    pub(crate) terms: BTreeMap<Monomial, RationalQ>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::from_monomial(Monomial::one())
    }

    pub fn generator(row: u8, col: u8) -> Self {
        NCPoly::from_monomial(Monomial(vec![Generator::new(row, col)]))
    }

    /// The monomial with coefficient 1, brought to normal form.
    pub fn from_monomial(m: Monomial) -> Self {
        NCPoly::term(m, RationalQ::one())
    }

    pub fn term(m: Monomial, c: RationalQ) -> Self {
        NCPoly::from_raw([(m, c)]).normalize()
    }

    /// Collects terms without rewriting.
    pub fn from_raw(terms: impl IntoIterator<Item = (Monomial, RationalQ)>) -> Self {
        let mut p = NCPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: RationalQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RationalQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RationalQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Monomial::is_sorted)
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RationalQ) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Concatenate monomials and normalize.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut raw = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                raw.add_term(a.concat(b), x * y);
            }
        }
        raw.normalize()
    }

    /// Product of a sequence of factors, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a NCPoly>) -> NCPoly {
        factors.into_iter().fold(NCPoly::one(), |acc, f| acc.mul(f))
    }

    /// Every monomial has the same row content and the same column content.
    pub fn grading(&self, n: u8) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let g = (first.row_content(n), first.col_content(n));
        it.all(|m| m.row_content(n) == g.0 && m.col_content(n) == g.1).then_some(g)
    }

    pub fn max_index(&self) -> u8 {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    /// Specialize `q` to a rational number, returning the commutative image
    /// as a map from sorted generator multisets to values.
    pub fn eval_commutative(
        &self,
        x: &num_rational::BigRational,
    ) -> Result<BTreeMap<Vec<Generator>, num_rational::BigRational>> {
        use num_traits::Zero;
        let mut out: BTreeMap<Vec<Generator>, num_rational::BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = m.0.clone();
            key.sort_unstable();
            *out.entry(key).or_insert_with(num_rational::BigRational::zero) += c.eval(x)?;
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| serde_json::json!({ "monomial": m, "coeff": c.to_string() }))
                .collect(),
        )
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if m.0.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for NCPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
