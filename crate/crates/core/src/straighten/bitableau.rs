use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{yamanouchi_tableau, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::qmatrix::{qminor, NCPoly};

/// A pair of tabloids with identical column sizes: the product of the quantum
/// minors on matching columns (left side gives rows, right side columns).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Bitabloid {
    pub left: Tabloid,
    pub right: Tabloid,
}

impl Bitabloid {
    pub fn new(left: Tabloid, right: Tabloid) -> Result<Self> {
        if left.shape() != right.shape() {
            return Err(Error::ShapeMismatch(format!("{left} and {right} have different column sizes")));
        }
        Ok(Bitabloid { left, right })
    }
}

/// A pair of semistandard tableaux of equal shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitableau {
    pub left: Tableau,
    pub right: Tableau,
}

impl Bitableau {
    pub fn new(left: Tableau, right: Tableau) -> Result<Self> {
        if left.shape() != right.shape() {
            return Err(Error::ShapeMismatch(format!("{left} and {right} have different shapes")));
        }
        Ok(Bitableau { left, right })
    }

    /// `(y_λ | τ)`.
    pub fn quantum(tau: &Tableau) -> Self {
        Bitableau { left: yamanouchi_tableau(&tau.shape()), right: tau.clone() }
    }

    pub fn as_bitabloid(&self) -> Bitabloid {
        Bitabloid { left: Tabloid::from(&self.left), right: Tabloid::from(&self.right) }
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.left.label(), self.right.label())
    }
}

impl fmt::Debug for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as `{"left": rows, "right": rows}`.
impl Serialize for Bitableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({ "left": self.left.rows, "right": self.right.rows }).serialize(s)
    }
}

/// Product of column minors, taken left to right.
pub fn bitabloid_to_ncpoly(b: &Bitabloid) -> Result<NCPoly> {
    if b.left.shape() != b.right.shape() {
        return Err(Error::ShapeMismatch(format!("{} and {} have different column sizes", b.left, b.right)));
    }
    let mut acc = NCPoly::one();
    for (rows, cols) in b.left.columns.iter().zip(&b.right.columns) {
        acc = acc.mul(&qminor(rows, cols)?);
    }
    Ok(acc)
}

pub fn bitableau_to_ncpoly(b: &Bitableau) -> NCPoly {
    bitabloid_to_ncpoly(&b.as_bitabloid()).expect("equal shapes")
}

/// The quantum tableau `(τ) = (y_λ | τ)`.
pub fn quantum_tableau(tau: &Tableau, n: u8) -> Result<NCPoly> {
    check_bounds(tau.rows.len(), tau.max_entry(), n)?;
    Ok(bitableau_to_ncpoly(&Bitableau::quantum(tau)))
}

/// The quantum tabloid `(δ)`: each column of size `k` uses rows `1..=k`.
pub fn quantum_tabloid(delta: &Tabloid, n: u8) -> Result<NCPoly> {
    let height = delta.columns.iter().map(Vec::len).max().unwrap_or(0);
    check_bounds(height, delta.max_entry(), n)?;
    let left = Tabloid { columns: delta.columns.iter().map(|c| (1..=c.len() as u8).collect()).collect() };
    bitabloid_to_ncpoly(&Bitabloid { left, right: delta.clone() })
}

fn check_bounds(height: usize, max_entry: u8, n: u8) -> Result<()> {
    if height > n as usize {
        return Err(Error::InvalidInput(format!("{height} rows exceed n = {n}")));
    }
    if max_entry > n {
        return Err(Error::LetterOutOfRange { letter: max_entry as u32, n: n as u32 });
    }
    Ok(())
}
