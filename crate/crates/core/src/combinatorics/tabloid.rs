use std::fmt;

use serde::{Deserialize, Serialize};

use super::rs::insertion_tableau;
use super::tableau::{Partition, Tableau};
use super::word::Word;
use crate::error::{Error, Result};

/// A sequence of column-shaped tableaux. Each column is listed bottom to top
/// and is strictly increasing; nothing is required across columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Tabloid {
    pub columns: Vec<Vec<u8>>,
}

impl Tabloid {
    /// Parse `"15|236"` or `"(15|236)"`, one column per `|`; each column is
    /// a word as accepted by [`Word::parse`].
    pub fn parse(s: &str, n: u8) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let columns = s.split('|').map(|c| Word::parse(c, n).map(|w| w.0)).collect::<Result<Vec<_>>>()?;
        Tabloid::new(columns)
    }

    pub fn new(columns: Vec<Vec<u8>>) -> Result<Self> {
        if columns.iter().any(|c| c.is_empty() || c.windows(2).any(|p| p[0] >= p[1])) {
            return Err(Error::InvalidInput(format!("columns {columns:?} must be nonempty and strictly increasing")));
        }
        Ok(Tabloid { columns })
    }

    /// Column sizes, left to right.
    pub fn shape(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> u8 {
        self.columns.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn content(&self, n: u8) -> Vec<usize> {
        let mut c = vec![0; n as usize];
        for &l in self.columns.iter().flatten() {
            c[l as usize - 1] += 1;
        }
        c
    }

    /// The tableau with the same columns, if the columns already form one.
    pub fn as_tableau(&self) -> Option<Tableau> {
        Tableau::from_columns(&self.columns).ok()
    }
}

impl From<&Tableau> for Tabloid {
    fn from(t: &Tableau) -> Self {
        Tabloid { columns: t.columns() }
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                let cells: Vec<String> = c.iter().map(u8::to_string).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "({})", cols.join("|"))
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tabloid{self}")
    }
}

/// Read the columns left to right, each from top to bottom.
pub fn column_reading(t: &Tabloid) -> Word {
    Word(t.columns.iter().flat_map(|c| c.iter().rev().copied()).collect())
}

/// All strictly increasing columns of size `k` with entries in `1..=n`.
pub fn columns_of_size(k: usize, n: u8) -> Vec<Vec<u8>> {
    fn rec(start: u8, k: usize, n: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if (n - v) as usize + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, k, n, &mut Vec::new(), &mut out);
    out
}

/// All tabloids with the given column sizes and entries in `1..=n`.
pub fn enumerate_tabloids(shape: &[usize], n: u8) -> Vec<Tabloid> {
    let choices: Vec<Vec<Vec<u8>>> = shape.iter().map(|&k| columns_of_size(k, n)).collect();
    let mut out = vec![Tabloid::default()];
    for options in &choices {
        out = out
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |c| {
                    let mut cols = t.columns.clone();
                    cols.push(c.clone());
                    Tabloid { columns: cols }
                })
            })
            .collect();
    }
    out
}

/// Tabloids of shape `σ(λ')` whose column reading inserts to a tableau of
/// shape `λ`. `sigma` is a permutation of `1..=ℓ(λ')` in one-line notation.
pub fn b_sigma_labels(lambda: &Partition, sigma: &[usize], n: u8) -> Result<Vec<Tabloid>> {
    let conj = lambda.conjugate();
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=conj.len()).collect::<Vec<_>>() {
        return Err(Error::InvalidInput(format!("{sigma:?} does not permute the {} columns of {lambda}", conj.len())));
    }
    let shape: Vec<usize> = sigma.iter().map(|&s| conj.parts()[s - 1]).collect();
    Ok(enumerate_tabloids(&shape, n)
        .into_iter()
        .filter(|t| insertion_tableau(&column_reading(t)).shape() == *lambda)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_columns() {
        let t = Tabloid::parse("(15|236)", 6).unwrap();
        assert_eq!(t.columns, vec![vec![1, 5], vec![2, 3, 6]]);
        assert_eq!(Tabloid::parse(&t.to_string(), 6).unwrap(), t);
        assert!(Tabloid::parse("51|2", 6).is_err());
        assert!(Tabloid::parse("1||2", 6).is_err());
    }

    #[test]
    fn column_reading_examples() {
        let t = Tabloid::new(vec![vec![1, 5], vec![2, 3, 6]]).unwrap();
        assert_eq!(column_reading(&t).0, vec![5, 1, 6, 3, 2]);
        assert_eq!(column_reading(&Tabloid::new(vec![vec![1, 3, 4]]).unwrap()).0, vec![4, 3, 1]);
        assert!(column_reading(&Tabloid::default()).is_empty());
    }

    #[test]
    fn enumerate_examples() {
        let a = enumerate_tabloids(&[1], 2);
        assert_eq!(a.iter().map(|t| t.columns.clone()).collect::<Vec<_>>(), vec![vec![vec![1]], vec![vec![2]]]);
        assert_eq!(enumerate_tabloids(&[2], 3).len(), 3);
        let c = enumerate_tabloids(&[2, 1], 2);
        assert_eq!(
            c.iter().map(|t| t.columns.clone()).collect::<Vec<_>>(),
            vec![vec![vec![1, 2], vec![1]], vec![vec![1, 2], vec![2]]]
        );
    }

    #[test]
    fn b_sigma_examples() {
        let l21 = Partition::new(vec![2, 1]).unwrap();
        let id = b_sigma_labels(&l21, &[1, 2], 3).unwrap();
        assert_eq!(id.len(), 8);
        // for sigma = id the labels are exactly the semistandard tableaux
        assert!(id.iter().all(|t| t.as_tableau().is_some()));
        assert_eq!(b_sigma_labels(&l21, &[2, 1], 3).unwrap().len(), 8);
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(b_sigma_labels(&one, &[1], 4).unwrap().len(), 4);
        assert!(b_sigma_labels(&l21, &[1, 1], 3).is_err());
    }

    #[test]
    fn rejects_bad_columns() {
        assert!(Tabloid::new(vec![vec![2, 1]]).is_err());
        assert!(Tabloid::new(vec![vec![]]).is_err());
    }
}
