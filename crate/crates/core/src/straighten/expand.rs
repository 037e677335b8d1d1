use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::bitableau::{bitableau_to_ncpoly, Bitableau};
use super::solver::{rank, Solver};
use crate::coeffs::RationalQ;
use crate::combinatorics::{rs, semistandard_with_content, Partition, Word};
use crate::error::{Error, Result};
use crate::qmatrix::{Generator, Monomial, NCPoly};

/// Left (row) content and right (column) content.
pub type Grading = (Vec<usize>, Vec<usize>);

/// An element written in the bitableau basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitabExpansion {
    pub terms: BTreeMap<Bitableau, RationalQ>,
}

impl BitabExpansion {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &Bitableau) -> RationalQ {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// Every coefficient lies in `Q[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(RationalQ::is_polynomial_in_q)
    }

    /// Rebuild the element from the basis.
    pub fn to_ncpoly(&self) -> NCPoly {
        self.terms
            .iter()
            .fold(NCPoly::zero(), |acc, (b, c)| acc.add(&bitableau_to_ncpoly(b).scale(c)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(b, c)| serde_json::json!({ "left": b.left.rows, "right": b.right.rows, "coeff": c.to_string() }))
                .collect(),
        )
    }
}

/// The label whose coefficient survives at `q = 0`, or `None` when every
/// coefficient vanishes there. More than one survivor, a surviving value
/// other than 1, or a pole at 0 is a theorem violation.
pub fn q_zero_class<L: Clone + std::fmt::Display>(terms: &BTreeMap<L, RationalQ>) -> Result<Option<L>> {
    let mut found: Option<L> = None;
    for (label, c) in terms {
        let v = c
            .value_at_zero()
            .map_err(|_| Error::TheoremViolation(format!("coefficient {c} of {label} has a pole at q = 0")))?;
        if num_traits::Zero::is_zero(&v) {
            continue;
        }
        if !num_traits::One::is_one(&v) {
            return Err(Error::TheoremViolation(format!("{label} survives at q = 0 with value {v}")));
        }
        if let Some(prev) = &found {
            return Err(Error::TheoremViolation(format!("both {prev} and {label} survive at q = 0")));
        }
        found = Some(label.clone());
    }
    Ok(found)
}

/// Sorted monomials with the given row and column contents: the normal-form
/// spanning set of a graded component (one per contingency table).
pub fn graded_monomials(rows: &[usize], cols: &[usize]) -> Vec<Monomial> {
    fn rec(
        r: usize,
        rows: &[usize],
        remaining: &mut Vec<usize>,
        cur: &mut Vec<Generator>,
        out: &mut Vec<Monomial>,
    ) {
        if r == rows.len() {
            if remaining.iter().all(|&x| x == 0) {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        fill_row(r, 0, rows[r], rows, remaining, cur, out);
    }
    fn fill_row(
        r: usize,
        c: usize,
        left: usize,
        rows: &[usize],
        remaining: &mut Vec<usize>,
        cur: &mut Vec<Generator>,
        out: &mut Vec<Monomial>,
    ) {
        if c == remaining.len() {
            if left == 0 {
                rec(r + 1, rows, remaining, cur, out);
            }
            return;
        }
        let max = left.min(remaining[c]);
        for take in 0..=max {
            remaining[c] -= take;
            for _ in 0..take {
                cur.push(Generator { row: r as u8 + 1, col: c as u8 + 1 });
            }
            fill_row(r, c + 1, left - take, rows, remaining, cur, out);
            cur.truncate(cur.len() - take);
            remaining[c] += take;
        }
    }
    let mut out = Vec::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    rec(0, rows, &mut cols.to_vec(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All bitableaux of the grading, over every shape with at most `n` rows.
pub fn graded_bitableaux(grading: &Grading, n: u8) -> Vec<Bitableau> {
    let (rows, cols) = grading;
    let k: usize = rows.iter().sum();
    let mut out = Vec::new();
    for nu in Partition::all(k, n as usize) {
        let lefts = semistandard_with_content(&nu, rows);
        let rights = semistandard_with_content(&nu, cols);
        for l in &lefts {
            for r in &rights {
                out.push(Bitableau { left: l.clone(), right: r.clone() });
            }
        }
    }
    out
}

type Cache = Mutex<HashMap<(u8, Grading), Arc<Solver<Bitableau>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Solver for one graded component, built once and shared.
pub fn graded_solver(grading: &Grading, n: u8) -> Result<Arc<Solver<Bitableau>>> {
    let key = (n, grading.clone());
    if let Some(s) = cache().lock().expect("cache lock").get(&key) {
        return Ok(s.clone());
    }
    let family: Vec<(Bitableau, NCPoly)> =
        graded_bitableaux(grading, n).into_iter().map(|b| { let p = bitableau_to_ncpoly(&b); (b, p) }).collect();
    let solver = Arc::new(Solver::new(family)?);
    cache().lock().expect("cache lock").entry(key).or_insert(solver.clone());
    Ok(solver)
}

/// Outcome of the basis check on one graded component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub dimension: usize,
    pub bitableaux: usize,
    pub rank: usize,
}

impl RankReport {
    pub fn ok(&self) -> bool {
        self.dimension == self.bitableaux && self.rank == self.dimension
    }
}

/// Compare the number of bitableaux, their rank and the number of sorted
/// monomials of a component.
pub fn graded_rank(grading: &Grading, n: u8) -> RankReport {
    let (rows, cols) = grading;
    let elements: Vec<NCPoly> = graded_bitableaux(grading, n).iter().map(bitableau_to_ncpoly).collect();
    RankReport {
        rows: rows.clone(),
        cols: cols.clone(),
        dimension: graded_monomials(rows, cols).len(),
        bitableaux: elements.len(),
        rank: rank(&elements),
    }
}

/// All gradings of total degree `k` for `n × n` matrices.
pub fn gradings(n: u8, k: usize) -> Vec<Grading> {
    let contents = compositions(k, n as usize);
    let mut out = Vec::new();
    for a in &contents {
        for b in &contents {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Weak compositions of `k` into `parts` parts, lexicographically decreasing.
pub fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(k - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Expand a bihomogeneous element in the bitableau basis.
pub fn expand_in_bitableaux(p: &NCPoly, n: u8) -> Result<BitabExpansion> {
    if p.is_zero() {
        return Ok(BitabExpansion::default());
    }
    if p.max_index() > n {
        return Err(Error::LetterOutOfRange { letter: p.max_index() as u32, n: n as u32 });
    }
    let p = if p.is_normal() { p.clone() } else { p.normalize() };
    let grading = p.grading(n).ok_or_else(|| Error::InvalidInput("element is not homogeneous in both weights".into()))?;
    let solver = graded_solver(&grading, n)?;
    let x = solver.solve(&p)?;
    Ok(BitabExpansion {
        terms: solver.labels().iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect(),
    })
}

/// Report comparing the `q = 0` class of `t_{w_1 u_1} ⋯ t_{w_k u_k}` with the
/// Robinson–Schensted prediction.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Report {
    pub input: Theorem1Input,
    pub expansion: serde_json::Value,
    pub q0_class: Option<Bitableau>,
    pub rs_prediction: Option<Bitableau>,
    pub polynomial: bool,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Input {
    pub rows: Word,
    pub cols: Word,
    pub n: u8,
}

/// `(P(w) | P(u))` when `Q(w) = Q(u)`, otherwise nothing.
pub fn rs_prediction(w: &Word, u: &Word) -> Option<Bitableau> {
    let (a, b) = (rs(w), rs(u));
    (a.q == b.q).then_some(Bitableau { left: a.p, right: b.p })
}

pub fn verify_theorem1(w: &Word, u: &Word, n: u8) -> Result<Theorem1Report> {
    let m = Monomial::from_words(w, u)?;
    if m.max_index() > n {
        return Err(Error::LetterOutOfRange { letter: m.max_index() as u32, n: n as u32 });
    }
    let expansion = expand_in_bitableaux(&NCPoly::from_monomial(m), n)?;
    let prediction = rs_prediction(w, u);
    let polynomial = expansion.is_polynomial();
    let (class, error) = match q_zero_class(&expansion.terms) {
        Ok(c) => (c, None),
        Err(e) => (None, Some(e.to_string())),
    };
    let matches = error.is_none() && polynomial && class == prediction;
    Ok(Theorem1Report {
        input: Theorem1Input { rows: w.clone(), cols: u.clone(), n },
        expansion: expansion.to_json(),
        q0_class: class,
        rs_prediction: prediction,
        polynomial,
        matches,
        error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Tableau;

    fn tab(rows: Vec<Vec<u8>>) -> Tableau {
        Tableau::new(rows).unwrap()
    }

    #[test]
    fn graded_monomial_counts() {
        assert_eq!(graded_monomials(&[1, 1], &[1, 1]).len(), 2);
        assert_eq!(graded_monomials(&[1, 1, 1], &[1, 1, 1]).len(), 6);
        assert_eq!(graded_monomials(&[2, 0], &[1, 1]).len(), 1);
        assert!(graded_monomials(&[2], &[1]).is_empty());
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn quantum_tableau_expands_to_itself() {
        let tau = tab(vec![vec![1, 3], vec![2]]);
        let b = Bitableau::quantum(&tau);
        let e = expand_in_bitableaux(&bitableau_to_ncpoly(&b), 3).unwrap();
        assert_eq!(e.terms, BTreeMap::from([(b.clone(), RationalQ::one())]));
        assert_eq!(q_zero_class(&e.terms).unwrap(), Some(b));
    }

    #[test]
    fn row_word_12_col_word_21_has_null_class() {
        let r = verify_theorem1(&Word(vec![1, 2]), &Word(vec![2, 1]), 2).unwrap();
        assert!(r.matches);
        assert_eq!(r.q0_class, None);
    }

    #[test]
    fn degree_two_row_and_column() {
        // t_11 t_12 lies in the span of ([11]|[12]) alone
        let p = NCPoly::from_monomial("t[1,1]*t[1,2]".parse().unwrap());
        let e = expand_in_bitableaux(&p, 2).unwrap();
        assert_eq!(e.to_ncpoly(), p);
        assert!(e.terms.keys().all(|b| b.left.content(2) == vec![2, 0] && b.right.content(2) == vec![1, 1]));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let p = NCPoly::generator(1, 1).add(&NCPoly::generator(1, 2));
        assert!(expand_in_bitableaux(&p, 2).is_err());
    }
}
