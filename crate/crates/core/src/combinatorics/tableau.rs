use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::Word;
use crate::error::{Error, Result};

/// A partition: positive parts in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sort arbitrary positive parts into a partition (zeros dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dominance order: `self <= other` iff every partial sum of `self` is at
    /// most the corresponding partial sum of `other` (sizes must agree).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// All partitions of `k` with at most `max_parts` parts, in reverse
    /// lexicographic order (`(k)` first).
    pub fn all(k: usize, max_parts: usize) -> Vec<Partition> {
        fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=rem.min(max_part)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, max_parts, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Young tableau stored bottom row first (French convention). Rows weakly
/// increase left to right, columns strictly increase bottom to top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = Tableau { rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidInput(format!("{t} is not a semistandard tableau")));
        }
        Ok(t)
    }

    /// Columns, each listed bottom to top, must be strictly increasing and
    /// weakly decreasing in length.
    pub fn from_columns(columns: &[Vec<u8>]) -> Result<Self> {
        if columns.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::ShapeMismatch("column lengths must weakly decrease".into()));
        }
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| columns.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
            .collect();
        Tableau::new(rows)
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_semistandard(&self) -> bool {
        let shape_ok = self.rows.iter().all(|r| !r.is_empty())
            && self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        shape_ok && rows_ok && cols_ok
    }

    /// Semistandard with entries exactly `1..=size`, each once.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u8> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Columns, left to right, each bottom to top.
    pub fn columns(&self) -> Vec<Vec<u8>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect()
    }

    /// Column reading: columns left to right, each read top to bottom.
    pub fn column_reading(&self) -> Word {
        Word(self.columns().into_iter().flat_map(|c| c.into_iter().rev()).collect())
    }

    /// Row reading: rows top to bottom, each left to right.
    pub fn row_reading(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn content(&self, n: u8) -> Vec<usize> {
        let mut c = vec![0; n as usize];
        for &l in self.rows.iter().flatten() {
            c[l as usize - 1] += 1;
        }
        c
    }

    pub fn max_entry(&self) -> u8 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Compact label `[11/2]`: rows bottom first separated by `/`, with commas
    /// inside rows once an entry exceeds 9.
    pub fn label(&self) -> String {
        let wide = self.max_entry() > 9;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u8::to_string).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        format!("[{}]", rows.join("/"))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{}", self.label())
    }
}

/// The Yamanouchi tableau of shape `lambda`: row `i` (from the bottom) is
/// filled with the letter `i`.
pub fn yamanouchi_tableau(lambda: &Partition) -> Tableau {
    Tableau {
        rows: lambda.parts().iter().enumerate().map(|(i, &len)| vec![i as u8 + 1; len]).collect(),
    }
}

/// All semistandard tableaux of the given shape with entries in `1..=n`, in
/// lexicographic order of their row lists.
pub fn semistandard_tableaux(shape: &Partition, n: u8) -> Vec<Tableau> {
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<u8>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill_ssyt(&parts, n, 0, 0, &mut rows, &mut out);
    out
}

fn fill_ssyt(parts: &[usize], n: u8, r: usize, c: usize, rows: &mut Vec<Vec<u8>>, out: &mut Vec<Tableau>) {
    if r == parts.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    if c == parts[r] {
        return fill_ssyt(parts, n, r + 1, 0, rows, out);
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let below = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    // the column still needs room for parts.len() - r cells above
    let height_above = parts.iter().skip(r + 1).filter(|&&p| p > c).count() as u8;
    let lo = left.max(below);
    if n < height_above {
        return;
    }
    for v in lo..=n - height_above {
        rows[r].push(v);
        fill_ssyt(parts, n, r, c + 1, rows, out);
        rows[r].pop();
    }
}

/// Semistandard tableaux of the given shape and content.
pub fn semistandard_with_content(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let n = content.len() as u8;
    semistandard_tableaux(shape, n).into_iter().filter(|t| t.content(n) == content).collect()
}

/// All standard tableaux of the given shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let k = shape.size();
    semistandard_with_content(shape, &vec![1; k])
}

/// The standard tableau whose first column holds `1..=λ'_1`, second column
/// the next `λ'_2` values, and so on.
pub fn column_superstandard(shape: &Partition) -> Tableau {
    let mut next = 1u8;
    let columns: Vec<Vec<u8>> = shape
        .conjugate()
        .parts()
        .iter()
        .map(|&h| {
            let col: Vec<u8> = (next..next + h as u8).collect();
            next += h as u8;
            col
        })
        .collect();
    Tableau::from_columns(&columns).expect("superstandard filling is standard")
}
