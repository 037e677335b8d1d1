//! Straightening in the flag algebra through the column relations: repeated
//! entries vanish, unsorted columns are sorted up to `(-q)^{-ℓ}`, adjacent
//! columns of increasing size are exchanged, and Garnir violations are solved
//! for.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::bitableau::quantum_tableau;
use super::solver::Solver;
use crate::coeffs::RationalQ;
use crate::combinatorics::{semistandard_with_content, Partition, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::qmatrix::{minus_q_power, permutation_length, NCPoly};

/// An element of the flag algebra written on quantum tableaux of one shape.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlagExpansion {
    pub terms: BTreeMap<Tableau, RationalQ>,
}

impl FlagExpansion {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Tableau) -> RationalQ {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(t, c)| serde_json::json!({ "tableau": t.rows, "coeff": c.to_string() }))
                .collect(),
        )
    }
}

type Columns = Vec<Vec<u8>>;

/// A left column and a right column.
pub type ColumnPair = (Vec<u8>, Vec<u8>);

const DEFAULT_BUDGET: usize = 1_000_000;

/// Sort one column: `None` on a repeated entry, otherwise the sorted column
/// and its coefficient.
pub fn sort_column(col: &[u8]) -> Option<(Vec<u8>, RationalQ)> {
    let mut sorted = col.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let w: Vec<usize> = col.iter().map(|x| sorted.binary_search(x).expect("present")).collect();
    Some((sorted, minus_q_power(-(permutation_length(&w) as i64))))
}

fn sort_columns(cols: Columns) -> Option<(Columns, RationalQ)> {
    let mut coeff = RationalQ::one();
    let mut out = Vec::with_capacity(cols.len());
    for c in cols {
        let (s, k) = sort_column(&c)?;
        coeff = &coeff * &k;
        out.push(s);
    }
    Some((out, coeff))
}

/// Shuffles `w ∈ S_l` with `w_1 < ⋯ < w_k` and `w_{k+1} < ⋯ < w_l`, as the
/// pair (first block, second block) of 0-based positions with `ℓ(w)`.
fn shuffles(l: usize, k: usize) -> Vec<(Vec<usize>, Vec<usize>, usize)> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << l) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let first: Vec<usize> = (0..l).filter(|&i| mask & (1 << i) != 0).collect();
        let second: Vec<usize> = (0..l).filter(|&i| mask & (1 << i) == 0).collect();
        let mut w = first.clone();
        w.extend(&second);
        let len = permutation_length(&w);
        out.push((first, second, len));
    }
    out
}

/// Exchange of a column `i` of size `k` followed by a longer sorted column
/// `j` of size `l`, as terms with (unsorted) column pairs of sizes `l`, `k`.
pub fn exchange_terms(i: &[u8], j: &[u8]) -> Vec<(ColumnPair, RationalQ)> {
    let (k, l) = (i.len(), j.len());
    shuffles(l, k)
        .into_iter()
        .map(|(first, second, len)| {
            let mut left = i.to_vec();
            left.extend(second.iter().map(|&p| j[p]));
            let right: Vec<u8> = first.iter().map(|&p| j[p]).collect();
            ((left, right), minus_q_power(len as i64))
        })
        .collect()
}

/// Garnir relation for adjacent columns `c1` (size `a`) and `c2` (size
/// `b ≤ a`) violating row `p` (0-based: `c1[p] > c2[p]`). Returns every term
/// of the vanishing sum; the pair itself is the term with coefficient 1 and
/// comes first.
pub fn garnir_terms(c1: &[u8], c2: &[u8], p: usize) -> Vec<(ColumnPair, RationalQ)> {
    let k = p + 1;
    let i = &c1[..p];
    let mut j: Vec<u8> = c2[..=p].to_vec();
    j.extend_from_slice(&c1[p..]);
    let r = &c2[p + 1..];
    let l = j.len();
    let mut terms: Vec<(ColumnPair, RationalQ)> = shuffles(l, k)
        .into_iter()
        .map(|(first, second, len)| {
            let mut left = i.to_vec();
            left.extend(second.iter().map(|&x| j[x]));
            let mut right: Vec<u8> = first.iter().map(|&x| j[x]).collect();
            right.extend_from_slice(r);
            ((left, right), minus_q_power(len as i64))
        })
        .collect();
    let id = terms.iter().position(|(pair, _)| pair.0 == c1 && pair.1 == c2).expect("identity shuffle");
    terms.swap(0, id);
    terms
}

/// First Garnir violation: leftmost adjacent pair, lowest row.
fn violation(cols: &Columns) -> Option<(usize, usize)> {
    for m in 0..cols.len().saturating_sub(1) {
        let (c1, c2) = (&cols[m], &cols[m + 1]);
        if let Some(p) = (0..c2.len()).find(|&p| c1[p] > c2[p]) {
            return Some((m, p));
        }
    }
    None
}

fn add(map: &mut BTreeMap<Columns, RationalQ>, cols: Columns, c: RationalQ) {
    let e = map.entry(cols).or_default();
    *e = &*e + &c;
}

/// Straighten a tabloid into quantum tableaux.
pub fn straighten_flag(delta: &Tabloid, n: u8) -> Result<FlagExpansion> {
    if delta.max_entry() > n {
        return Err(Error::LetterOutOfRange { letter: delta.max_entry() as u32, n: n as u32 });
    }
    straighten_columns(&delta.columns, DEFAULT_BUDGET)
}

/// Straighten an arbitrary product of columns (entries may repeat or be out
/// of order), failing after `budget` rewriting steps.
pub fn straighten_columns(columns: &[Vec<u8>], budget: usize) -> Result<FlagExpansion> {
    if columns.iter().any(|c| c.is_empty() || c.contains(&0)) {
        return Err(Error::InvalidInput("columns must be nonempty with entries from 1".into()));
    }
    let mut steps = 0usize;
    let mut tick = || {
        steps += 1;
        if steps > budget {
            Err(Error::StepBudget(budget))
        } else {
            Ok(())
        }
    };
    let mut current: BTreeMap<Columns, RationalQ> = BTreeMap::new();
    if let Some((cols, c)) = sort_columns(columns.to_vec()) {
        current.insert(cols, c);
    }
    // bubble column sizes into weakly decreasing order
    let sizes: Vec<usize> = columns.iter().map(Vec::len).collect();
    let mut sizes_now = sizes.clone();
    while let Some(m) = (0..sizes_now.len().saturating_sub(1)).find(|&m| sizes_now[m] < sizes_now[m + 1]) {
        let mut next = BTreeMap::new();
        for (cols, c) in current {
            tick()?;
            for ((left, right), k) in exchange_terms(&cols[m], &cols[m + 1]) {
                let mut new = cols.clone();
                new[m] = left;
                new[m + 1] = right;
                if let Some((sorted, s)) = sort_columns(new) {
                    add(&mut next, sorted, &(&c * &k) * &s);
                }
            }
        }
        current = next;
        sizes_now.swap(m, m + 1);
    }
    // Garnir rewriting; each step lowers the column list lexicographically,
    // so popping the largest pending term handles each term once
    let mut done: BTreeMap<Tableau, RationalQ> = BTreeMap::new();
    while let Some((cols, c)) = current.pop_last() {
        if c.is_zero() {
            continue;
        }
        let Some((m, p)) = violation(&cols) else {
            let t = Tableau::from_columns(&cols).expect("no violation means semistandard");
            let e = done.entry(t).or_default();
            *e = &*e + &c;
            continue;
        };
        tick()?;
        let terms = garnir_terms(&cols[m], &cols[m + 1], p);
        for ((left, right), k) in terms.into_iter().skip(1) {
            let mut new = cols.clone();
            new[m] = left;
            new[m + 1] = right;
            if let Some((sorted, s)) = sort_columns(new) {
                add(&mut current, sorted, -&(&(&c * &k) * &s));
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    Ok(FlagExpansion { terms: done })
}

type FlagCache = Mutex<HashMap<(u8, Partition, Vec<usize>), Arc<Solver<Tableau>>>>;

fn flag_cache() -> &'static FlagCache {
    static CACHE: OnceLock<FlagCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Solver over the quantum tableaux of shape `lambda` and column content
/// `content`.
pub fn quantum_tableau_solver(lambda: &Partition, content: &[usize], n: u8) -> Result<Arc<Solver<Tableau>>> {
    let key = (n, lambda.clone(), content.to_vec());
    if let Some(s) = flag_cache().lock().expect("cache lock").get(&key) {
        return Ok(s.clone());
    }
    let family = semistandard_with_content(lambda, content)
        .into_iter()
        .map(|t| quantum_tableau(&t, n).map(|p| (t, p)))
        .collect::<Result<Vec<_>>>()?;
    let solver = Arc::new(Solver::new(family)?);
    flag_cache().lock().expect("cache lock").entry(key).or_insert(solver.clone());
    Ok(solver)
}

/// Expand `p` on the quantum tableaux of shape `lambda` by exact linear
/// solve; fails if `p` is not in their span.
pub fn expand_in_quantum_tableaux(p: &NCPoly, lambda: &Partition, n: u8) -> Result<FlagExpansion> {
    if p.is_zero() {
        return Ok(FlagExpansion::default());
    }
    let (_, cols) = p.grading(n).ok_or_else(|| Error::InvalidInput("element is not homogeneous".into()))?;
    let solver = quantum_tableau_solver(lambda, &cols, n)?;
    let x = solver.solve(p)?;
    Ok(FlagExpansion { terms: solver.labels().iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{column_reading, insertion_tableau};
    use crate::straighten::quantum_tabloid;

    fn q(k: i64) -> RationalQ {
        RationalQ::q_power(k)
    }

    fn tabloid(cols: Vec<Vec<u8>>) -> Tabloid {
        Tabloid::new(cols).unwrap()
    }

    fn quantum_columns(cols: &[Vec<u8>], n: u8) -> NCPoly {
        // unsorted columns through the sorting rule
        let (sorted, c) = sort_columns(cols.to_vec()).expect("distinct entries");
        quantum_tabloid(&tabloid(sorted), n).unwrap().scale(&c)
    }

    #[test]
    fn straighten_15_236() {
        let e = straighten_flag(&tabloid(vec![vec![1, 5], vec![2, 3, 6]]), 6).unwrap();
        let mut coeffs: Vec<String> = e.terms.values().map(|c| c.to_string()).collect();
        coeffs.sort();
        let mut want: Vec<String> = [
            &RationalQ::one() - &q(2),
            &q(3) - &q(1),
            q(1),
            -q(2),
            -q(4),
        ]
        .iter()
        .map(|c| c.to_string())
        .collect();
        want.sort();
        assert_eq!(coeffs, want);
        let lead = insertion_tableau(&column_reading(&tabloid(vec![vec![1, 5], vec![2, 3, 6]])));
        assert_eq!(lead.rows, vec![vec![1, 2], vec![3, 6], vec![5]]);
        assert_eq!(e.coeff(&lead), &RationalQ::one() - &q(2));
    }

    #[test]
    fn tableau_is_fixed() {
        let t = tabloid(vec![vec![1, 3], vec![2]]);
        let e = straighten_flag(&t, 3).unwrap();
        assert_eq!(e.terms, BTreeMap::from([(t.as_tableau().unwrap(), RationalQ::one())]));
    }

    #[test]
    fn two_cell_example() {
        // (23|1) = q(13|2) - q^2(12|3)
        let e = straighten_flag(&tabloid(vec![vec![2, 3], vec![1]]), 3).unwrap();
        let t = |rows: Vec<Vec<u8>>| Tableau::new(rows).unwrap();
        let expected = BTreeMap::from([(t(vec![vec![1, 2], vec![3]]), q(1)), (t(vec![vec![1, 3], vec![2]]), -q(2))]);
        assert_eq!(e.terms, expected);
    }

    #[test]
    fn sorting_rule() {
        assert!(sort_column(&[1, 1]).is_none());
        assert_eq!(sort_column(&[2, 1]).unwrap(), (vec![1, 2], -q(-1)));
        assert_eq!(sort_column(&[1, 5, 2]).unwrap(), (vec![1, 2, 5], -q(-1)));
        assert_eq!(sort_column(&[3, 2, 1]).unwrap(), (vec![1, 2, 3], -q(-3)));
    }

    #[test]
    fn exchange_is_an_identity_in_the_matrix_algebra() {
        for (i, j) in [(vec![1u8], vec![1u8, 2]), (vec![2], vec![1, 3]), (vec![1, 5], vec![2, 3, 6]), (vec![3], vec![1, 2, 4])] {
            let n = 6;
            let lhs = quantum_columns(&[i.clone(), j.clone()], n);
            let rhs = exchange_terms(&i, &j).into_iter().fold(NCPoly::zero(), |acc, ((a, b), c)| {
                match sort_columns(vec![a.clone(), b.clone()]) {
                    Some(_) => acc.add(&quantum_columns(&[a, b], n).scale(&c)),
                    None => acc,
                }
            });
            assert_eq!(lhs, rhs, "exchange of {i:?} and {j:?}");
        }
    }

    #[test]
    fn garnir_sum_vanishes_in_the_matrix_algebra() {
        let cases: Vec<(Vec<u8>, Vec<u8>, usize)> = vec![
            (vec![2], vec![1], 0),
            (vec![2, 3], vec![1], 0),
            (vec![3, 4], vec![2], 0),
            (vec![1, 4], vec![2, 3], 1),
            (vec![2, 3], vec![1, 4], 0),
            (vec![1, 4, 5], vec![2, 3], 1),
            (vec![2, 4, 5], vec![1, 3], 1),
            (vec![3, 4, 5], vec![1, 2, 6], 0),
        ];
        for (c1, c2, p) in cases {
            assert!(c1[p] > c2[p]);
            let sum = garnir_terms(&c1, &c2, p).into_iter().fold(NCPoly::zero(), |acc, ((a, b), c)| {
                match sort_columns(vec![a.clone(), b.clone()]) {
                    Some(_) => acc.add(&quantum_columns(&[a, b], 6).scale(&c)),
                    None => acc,
                }
            });
            assert!(sum.is_zero(), "{c1:?} {c2:?} row {p}: {sum}");
        }
    }

    #[test]
    fn oracle_agrees_on_15_236() {
        let d = tabloid(vec![vec![1, 5], vec![2, 3, 6]]);
        let p = quantum_tabloid(&d, 6).unwrap();
        let lambda = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(expand_in_quantum_tableaux(&p, &lambda, 6).unwrap(), straighten_flag(&d, 6).unwrap());
    }
}
