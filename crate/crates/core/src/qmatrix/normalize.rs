//! Rewriting to sorted normal form.
//!
//! Every rule rewrites an adjacent out-of-order pair into words that agree
//! with the input before the pair and are strictly smaller at it, so the
//! lexicographically largest pending word can never be produced again once
//! it is popped. Each word is therefore rewritten at most once.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ncpoly::{Generator, Monomial, NCPoly};
use crate::coeffs::RationalQ;
use crate::error::{Error, Result};

/// Which out-of-order pair gets rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    /// Uniformly random among the out-of-order positions.
    Random(u64),
}

/// Result of rewriting the pair `a b` with `a > b`.
fn rewrite_pair(a: Generator, b: Generator) -> Vec<([Generator; 2], RationalQ)> {
    let q = || RationalQ::q_power(1);
    if a.row == b.row || a.col == b.col {
        // t_il t_ik = q t_ik t_il and t_jk t_ik = q t_ik t_jk
        vec![([b, a], q())]
    } else if a.col < b.col {
        // t_jk t_il = t_il t_jk
        vec![([b, a], RationalQ::one())]
    } else {
        // t_jl t_ik = t_ik t_jl - (q^-1 - q) t_il t_jk
        let (i, j, k, l) = (b.row, a.row, b.col, a.col);
        let c = &RationalQ::q_power(1) - &RationalQ::q_power(-1);
        vec![([b, a], RationalQ::one()), ([Generator { row: i, col: l }, Generator { row: j, col: k }], c)]
    }
}

impl NCPoly {
    /// Rewrite every monomial to sorted normal form.
    pub fn normalize(&self) -> NCPoly {
        self.normalize_with(Strategy::Leftmost, usize::MAX).expect("unbounded budget")
    }

    /// Normalize, failing with [`Error::StepBudget`] after `budget` rewrites.
    pub fn normalize_with(&self, strategy: Strategy, budget: usize) -> Result<NCPoly> {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            Strategy::Leftmost => None,
        };
        let mut pending: BTreeMap<Monomial, RationalQ> = self.terms.clone();
        let mut done = NCPoly::zero();
        let mut steps = 0usize;
        while let Some((m, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            let inversions = m.0.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(k, _)| k);
            let pos = match &mut rng {
                None => inversions.into_iter().next(),
                Some(rng) => {
                    let all: Vec<usize> = inversions.collect();
                    (!all.is_empty()).then(|| all[rng.gen_range(0..all.len())])
                }
            };
            let Some(p) = pos else {
                done.add_term(m, c);
                continue;
            };
            steps += 1;
            if steps > budget {
                return Err(Error::StepBudget(budget));
            }
            for ([x, y], k) in rewrite_pair(m.0[p], m.0[p + 1]) {
                let mut w = m.0.clone();
                w[p] = x;
                w[p + 1] = y;
                let coeff = &c * &k;
                let entry = pending.entry(Monomial(w)).or_default();
                *entry = &*entry + &coeff;
            }
        }
        Ok(done)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn q(k: i64) -> RationalQ {
        RationalQ::q_power(k)
    }

    #[test]
    fn single_relations() {
        let p = NCPoly::from_monomial(mono("t[1,2]*t[1,1]"));
        assert_eq!(p, NCPoly::from_raw([(mono("t[1,1]*t[1,2]"), q(1))]));
        let p = NCPoly::from_monomial(mono("t[2,1]*t[1,1]"));
        assert_eq!(p, NCPoly::from_raw([(mono("t[1,1]*t[2,1]"), q(1))]));
        let p = NCPoly::from_monomial(mono("t[2,1]*t[1,2]"));
        assert_eq!(p, NCPoly::from_raw([(mono("t[1,2]*t[2,1]"), RationalQ::one())]));
        let p = NCPoly::from_monomial(mono("t[2,2]*t[1,1]"));
        let expected = NCPoly::from_raw([
            (mono("t[1,1]*t[2,2]"), RationalQ::one()),
            (mono("t[1,2]*t[2,1]"), &q(1) - &q(-1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn relations_hold_in_sorted_direction() {
        // t_ik t_jl - t_jl t_ik = (q^-1 - q) t_il t_jk
        let lhs = NCPoly::from_monomial(mono("t[1,1]*t[2,2]")).sub(&NCPoly::from_monomial(mono("t[2,2]*t[1,1]")));
        let rhs = NCPoly::from_monomial(mono("t[1,2]*t[2,1]")).scale(&(&q(-1) - &q(1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn equal_generators_are_kept() {
        let p = NCPoly::from_monomial(mono("t[1,1]*t[1,1]"));
        assert_eq!(p.len(), 1);
        assert!(p.is_normal());
    }

    #[test]
    fn budget_is_enforced() {
        let p = NCPoly::from_raw([(mono("t[3,3]*t[2,2]*t[1,1]"), RationalQ::one())]);
        assert!(matches!(p.normalize_with(Strategy::Leftmost, 1), Err(Error::StepBudget(1))));
    }

    #[test]
    fn text_round_trip() {
        let m = mono("t[2,3]*t[1,1]*t[3,2]");
        assert_eq!(m.to_string(), "t[2,3]*t[1,1]*t[3,2]");
        assert!("t[0,1]".parse::<Monomial>().is_err());
        assert!("t[1,1]*x".parse::<Monomial>().is_err());
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, "[[2,3],[1,1],[3,2]]");
    }
}
