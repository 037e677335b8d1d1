//! Kashiwara operators on words through the bracketing rule.
//!
//! On the subword of letters `i, i+1`, every adjacent factor `(i+1) i` is
//! cancelled repeatedly until the residue has the form `i^r (i+1)^s`.
//! `raise` turns the leftmost uncancelled `i+1` into `i`; `lower` turns the
//! rightmost uncancelled `i` into `i+1`.

use serde::{Deserialize, Serialize};

use crate::combinatorics::Word;

/// Positions of the uncancelled letters: `i`'s first, then `i+1`'s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

/// Single left-to-right scan: an `i+1` waits on a stack until a later `i`
/// cancels it.
pub fn residue(w: &Word, i: u8) -> Residue {
    let mut lower = Vec::new();
    let mut pending_upper: Vec<usize> = Vec::new();
    for (pos, &l) in w.letters().iter().enumerate() {
        if l == i + 1 {
            pending_upper.push(pos);
        } else if l == i && pending_upper.pop().is_none() {
            lower.push(pos);
        }
    }
    Residue { lower, upper: pending_upper }
}

/// `ê_i`; `None` is the zero result.
pub fn raise(w: &Word, i: u8) -> Option<Word> {
    let res = residue(w, i);
    let &pos = res.upper.first()?;
    let mut v = w.0.clone();
    v[pos] = i;
    Some(Word(v))
}

/// `f̂_i`; `None` is the zero result.
pub fn lower(w: &Word, i: u8) -> Option<Word> {
    let res = residue(w, i);
    let &pos = res.lower.last()?;
    let mut v = w.0.clone();
    v[pos] = i + 1;
    Some(Word(v))
}

/// Distances to the top (`epsilon`) and bottom (`phi`) of the `i`-string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringStats {
    pub epsilon: usize,
    pub phi: usize,
}

pub fn stats(w: &Word, i: u8) -> StringStats {
    let res = residue(w, i);
    StringStats { epsilon: res.upper.len(), phi: res.lower.len() }
}

/// Which tensor factor an operator acts on in `u ⊗ v` (the word `u·v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    Left,
    Right,
}

/// `f̃_i(u ⊗ v)` acts on `v` iff `ε_i(u) < φ_i(v)`.
pub fn tensor_lower(u: StringStats, v: StringStats) -> Factor {
    if u.epsilon < v.phi {
        Factor::Right
    } else {
        Factor::Left
    }
}

/// `ẽ_i(u ⊗ v)` acts on `u` iff `ε_i(u) > φ_i(v)`.
pub fn tensor_raise(u: StringStats, v: StringStats) -> Factor {
    if u.epsilon > v.phi {
        Factor::Left
    } else {
        Factor::Right
    }
}

/// `f̃_i` on `u·v` computed through the tensor product rule.
pub fn lower_via_tensor(u: &Word, v: &Word, i: u8) -> Option<Word> {
    match tensor_lower(stats(u, i), stats(v, i)) {
        Factor::Right => lower(v, i).map(|v2| u.concat(&v2)),
        Factor::Left => lower(u, i).map(|u2| u2.concat(v)),
    }
}

/// `ẽ_i` on `u·v` computed through the tensor product rule.
pub fn raise_via_tensor(u: &Word, v: &Word, i: u8) -> Option<Word> {
    match tensor_raise(stats(u, i), stats(v, i)) {
        Factor::Right => raise(v, i).map(|v2| u.concat(&v2)),
        Factor::Left => raise(u, i).map(|u2| u2.concat(v)),
    }
}

#[cfg(test)]
pub(crate) mod reference {
    //! Literal iterated deletion of `(i+1) i` factors.
    use super::*;

    pub fn residue_by_deletion(w: &Word, i: u8) -> (Vec<usize>, Vec<usize>) {
        let mut alive: Vec<usize> =
            (0..w.len()).filter(|&p| w.0[p] == i || w.0[p] == i + 1).collect();
        loop {
            let mut next = Vec::with_capacity(alive.len());
            let mut k = 0;
            let mut deleted = false;
            while k < alive.len() {
                if k + 1 < alive.len() && w.0[alive[k]] == i + 1 && w.0[alive[k + 1]] == i {
                    k += 2;
                    deleted = true;
                } else {
                    next.push(alive[k]);
                    k += 1;
                }
            }
            alive = next;
            if !deleted {
                break;
            }
        }
        alive.iter().partition(|&&p| w.0[p] == i)
    }
}
