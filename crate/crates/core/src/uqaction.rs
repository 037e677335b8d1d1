//! The two commuting actions of `U_q(gl_n)` on the quantum matrix algebra:
//! on column indices (right side) and on row indices (left side), extended
//! to products by the twisted Leibniz rules
//!
//! ```text
//! e_i (PQ) = (e_i P) Q + (q^{-h_i} P)(e_i Q)
//! f_i (PQ) = (f_i P)(q^{h_i} Q) + P (f_i Q)
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeffs::q_int_signed;
use crate::error::{Error, Result};
use crate::qmatrix::{Generator, Monomial, NCPoly};

/// Which indices an operator acts on: `Left` is the row (dagger) action,
/// `Right` the column action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Op {
    E,
    F,
    QEps,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::E => "e",
            Op::F => "f",
            Op::QEps => "q^eps",
        })
    }
}

fn index(g: Generator, side: Side) -> u8 {
    match side {
        Side::Left => g.row,
        Side::Right => g.col,
    }
}

fn with_index(g: Generator, side: Side, v: u8) -> Generator {
    match side {
        Side::Left => Generator { row: v, col: g.col },
        Side::Right => Generator { row: g.row, col: v },
    }
}

/// `#i - #(i+1)` among the chosen indices of `gens`.
fn h_weight(gens: &[Generator], i: u8, side: Side) -> i64 {
    gens.iter()
        .map(|&g| match index(g, side) {
            x if x == i => 1,
            x if x == i + 1 => -1,
            _ => 0,
        })
        .sum()
}

fn check_color(i: u8) -> Result<()> {
    if i == 0 {
        return Err(Error::InvalidInput("operator indices start at 1".into()));
    }
    Ok(())
}

/// `q^{ε_i}`: scales each monomial by `q` to the number of indices equal to `i`.
pub fn act_qeps(i: u8, p: &NCPoly, side: Side) -> Result<NCPoly> {
    check_color(i)?;
    Ok(NCPoly::from_raw(p.terms().map(|(m, c)| {
        let count = m.factors().iter().filter(|&&g| index(g, side) == i).count() as i64;
        (m.clone(), c.mul_q_power(count))
    })))
}

/// `e_i`: an index `i+1` becomes `i`, the prefix contributing `q^{-h_i}`.
pub fn act_e(i: u8, p: &NCPoly, side: Side) -> Result<NCPoly> {
    check_color(i)?;
    let mut raw = Vec::new();
    for (m, c) in p.terms() {
        let f = m.factors();
        for (pos, &g) in f.iter().enumerate() {
            if index(g, side) != i + 1 {
                continue;
            }
            let mut w = f.to_vec();
            w[pos] = with_index(g, side, i);
            raw.push((Monomial(w), c.mul_q_power(-h_weight(&f[..pos], i, side))));
        }
    }
    Ok(NCPoly::from_raw(raw).normalize())
}

/// `f_i`: an index `i` becomes `i+1`, the suffix contributing `q^{h_i}`.
pub fn act_f(i: u8, p: &NCPoly, side: Side) -> Result<NCPoly> {
    check_color(i)?;
    let mut raw = Vec::new();
    for (m, c) in p.terms() {
        let f = m.factors();
        for (pos, &g) in f.iter().enumerate() {
            if index(g, side) != i {
                continue;
            }
            let mut w = f.to_vec();
            w[pos] = with_index(g, side, i + 1);
            raw.push((Monomial(w), c.mul_q_power(h_weight(&f[pos + 1..], i, side))));
        }
    }
    Ok(NCPoly::from_raw(raw).normalize())
}

pub fn act(op: Op, i: u8, p: &NCPoly, side: Side) -> Result<NCPoly> {
    match op {
        Op::E => act_e(i, p, side),
        Op::F => act_f(i, p, side),
        Op::QEps => act_qeps(i, p, side),
    }
}

/// `(q^{h_i} - q^{-h_i}) / (q - q^{-1})` applied monomial by monomial.
fn bracket_h(i: u8, p: &NCPoly, side: Side) -> NCPoly {
    NCPoly::from_raw(p.terms().map(|(m, c)| (m.clone(), c * &q_int_signed(h_weight(m.factors(), i, side)))))
}

/// Check `[e_i, f_j] v = δ_ij [h_i] v` for every `v` in `span`.
pub fn check_module_relations(span: &[NCPoly], i: u8, j: u8, side: Side) -> Result<()> {
    for v in span {
        let lhs = act_e(i, &act_f(j, v, side)?, side)?.sub(&act_f(j, &act_e(i, v, side)?, side)?);
        let rhs = if i == j { bracket_h(i, v, side) } else { NCPoly::zero() };
        if lhs != rhs {
            return Err(Error::TheoremViolation(format!(
                "[e_{i}, f_{j}] on {v} ({side:?}) gives {lhs}, expected {rhs}"
            )));
        }
    }
    Ok(())
}

/// Check that every right operator commutes with every left operator on `p`.
pub fn check_bimodule_commutation(p: &NCPoly, i: u8, j: u8) -> Result<()> {
    for x in [Op::E, Op::F, Op::QEps] {
        for y in [Op::E, Op::F, Op::QEps] {
            let a = act(x, i, &act(y, j, p, Side::Left)?, Side::Right)?;
            let b = act(y, j, &act(x, i, p, Side::Right)?, Side::Left)?;
            if a != b {
                return Err(Error::TheoremViolation(format!(
                    "{x}_{i} (right) and {y}_{j} (left) do not commute on {p}"
                )));
            }
        }
    }
    Ok(())
}

/// The action on the column module basis: `e_i` replaces `i+1` by `i`, `f_i`
/// replaces `i` by `i+1`, and the result is zero when the target letter is
/// already present or the source letter is missing.
pub fn column_module_action(c: &[u8], i: u8, op: Op) -> Option<Vec<u8>> {
    let (from, to) = match op {
        Op::E => (i + 1, i),
        Op::F => (i, i + 1),
        Op::QEps => return Some(c.to_vec()),
    };
    if !c.contains(&from) || c.contains(&to) {
        return None;
    }
    let mut d: Vec<u8> = c.iter().map(|&x| if x == from { to } else { x }).collect();
    d.sort_unstable();
    Some(d)
}

/// Index content on the chosen side, if `p` is a weight vector.
pub fn weight(p: &NCPoly, n: u8, side: Side) -> Option<Vec<usize>> {
    let (rows, cols) = p.grading(n)?;
    Some(match side {
        Side::Left => rows,
        Side::Right => cols,
    })
}
