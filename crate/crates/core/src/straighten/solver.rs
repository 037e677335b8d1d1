//! Exact linear algebra over `Q(q)` for expansions in a finite family of
//! elements of the quantum matrix algebra.

use std::collections::BTreeSet;

use crate::coeffs::RationalQ;
use crate::error::{Error, Result};
use crate::qmatrix::{Monomial, NCPoly};

/// Solves `p = Σ x_j b_j` for a fixed linearly independent family `b_j`.
///
/// A square invertible submatrix is selected on construction (pivot
/// monomials) and inverted once; solutions are checked against the full
/// family, so elements outside the span are rejected.
#[derive(Debug, Clone)]
pub struct Solver<L> {
    labels: Vec<L>,
    elements: Vec<NCPoly>,
    pivots: Vec<Monomial>,
    inverse: Vec<Vec<RationalQ>>,
}

impl<L: Clone> Solver<L> {
    pub fn new(family: Vec<(L, NCPoly)>) -> Result<Self> {
        let (labels, elements): (Vec<L>, Vec<NCPoly>) = family.into_iter().unzip();
        let (pivots, rank) = pivot_monomials(&elements);
        if rank < elements.len() {
            return Err(Error::Singular(format!("family of {} elements has rank {rank}", elements.len())));
        }
        let square: Vec<Vec<RationalQ>> =
            pivots.iter().map(|m| elements.iter().map(|e| e.coeff(m)).collect()).collect();
        let inverse = invert(square)?;
        Ok(Solver { labels, elements, pivots, inverse })
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Coefficients of `p`, in label order (zeros included).
    pub fn solve(&self, p: &NCPoly) -> Result<Vec<RationalQ>> {
        let rhs: Vec<RationalQ> = self.pivots.iter().map(|m| p.coeff(m)).collect();
        let x: Vec<RationalQ> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(RationalQ::zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect();
        let mut check = p.clone();
        for (c, e) in x.iter().zip(&self.elements) {
            if !c.is_zero() {
                check = check.sub(&e.scale(c));
            }
        }
        if !check.is_zero() {
            return Err(Error::InvalidInput(format!("element is outside the span of the family: residue {check}")));
        }
        Ok(x)
    }
}

/// Rank of a family of elements.
pub fn rank(elements: &[NCPoly]) -> usize {
    pivot_monomials(elements).1
}

/// Row-reduce the monomial × element coefficient matrix, returning one pivot
/// monomial per element that has a pivot, and the rank.
fn pivot_monomials(elements: &[NCPoly]) -> (Vec<Monomial>, usize) {
    let monomials: Vec<Monomial> = elements
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut a: Vec<Vec<RationalQ>> =
        monomials.iter().map(|m| elements.iter().map(|e| e.coeff(m)).collect()).collect();
    let mut used = vec![false; monomials.len()];
    let mut pivots = Vec::new();
    for j in 0..elements.len() {
        let Some(r) = (0..a.len()).find(|&r| !used[r] && !a[r][j].is_zero()) else {
            continue;
        };
        used[r] = true;
        pivots.push(monomials[r].clone());
        let pivot_row = a[r].clone();
        let inv = pivot_row[j].recip().expect("nonzero pivot");
        for (r2, row) in a.iter_mut().enumerate() {
            if r2 == r || row[j].is_zero() {
                continue;
            }
            let factor = &row[j] * &inv;
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(j) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
    }
    let r = pivots.len();
    (pivots, r)
}

/// Gauss–Jordan inverse with first-nonzero pivoting.
pub fn invert(mut a: Vec<Vec<RationalQ>>) -> Result<Vec<Vec<RationalQ>>> {
    let n = a.len();
    let mut inv: Vec<Vec<RationalQ>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { RationalQ::one() } else { RationalQ::zero() }).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
        a.swap(col, p);
        inv.swap(col, p);
        let scale = a[col][col].recip()?;
        for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
            *x = &*x * &scale;
        }
        let (prow, pinv) = (a[col].clone(), inv[col].clone());
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for (x, y) in a[r].iter_mut().zip(&prow) {
                *x = &*x - &(&f * y);
            }
            for (x, y) in inv[r].iter_mut().zip(&pinv) {
                *x = &*x - &(&f * y);
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> RationalQ {
        RationalQ::q_power(k)
    }

    #[test]
    fn invert_two_by_two() {
        let a = vec![vec![RationalQ::one(), q(1)], vec![q(1), RationalQ::one()]];
        let inv = invert(a.clone()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s = (0..2).fold(RationalQ::zero(), |acc, k| &acc + &(&a[i][k] * &inv[k][j]));
                assert_eq!(s, if i == j { RationalQ::one() } else { RationalQ::zero() });
            }
        }
        assert!(invert(vec![vec![q(1), q(2)], vec![q(0), q(1)]]).is_err());
    }

    #[test]
    fn solve_and_reject() {
        let a = NCPoly::generator(1, 1);
        let b = NCPoly::generator(1, 2).add(&a);
        let s = Solver::new(vec![("a", a.clone()), ("b", b.clone())]).unwrap();
        let p = a.scale(&q(2)).add(&b.scale(&q(-1)));
        assert_eq!(s.solve(&p).unwrap(), vec![q(2), q(-1)]);
        assert!(s.solve(&NCPoly::generator(2, 2)).is_err());
        assert!(Solver::new(vec![("a", a.clone()), ("2a", a.scale(&q(1)))]).is_err());
        assert_eq!(rank(&[a.clone(), b, a]), 2);
    }
}
