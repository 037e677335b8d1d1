//! Schensted row insertion and the Robinson–Schensted correspondence.

use serde::{Deserialize, Serialize};

use super::tableau::Tableau;
use super::word::Word;
use crate::error::{Error, Result};

/// The insertion tableau `p` and the standard recording tableau `q` of a word.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct RsPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Row-insert `letter` into `t`, bumping the leftmost entry strictly greater
/// than the inserted value in each row. Returns the index of the row (from
/// the bottom) where a new cell was created.
pub fn row_insert(t: &mut Tableau, letter: u8) -> usize {
    let mut x = letter;
    for (r, row) in t.rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(pos) => x = std::mem::replace(&mut row[pos], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    t.rows.push(vec![x]);
    t.rows.len() - 1
}

pub fn rs(word: &Word) -> RsPair {
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    for (k, &letter) in word.letters().iter().enumerate() {
        let r = row_insert(&mut p, letter);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(k as u8 + 1);
    }
    RsPair { p, q }
}

pub fn insertion_tableau(word: &Word) -> Tableau {
    let mut p = Tableau::default();
    for &l in word.letters() {
        row_insert(&mut p, l);
    }
    p
}

/// Inverse of [`rs`]: recover the word from `(P, Q)` by reverse bumping.
pub fn rs_inverse(pair: &RsPair) -> Result<Word> {
    if pair.p.shape() != pair.q.shape() || !pair.q.is_standard() || !pair.p.is_semistandard() {
        return Err(Error::ShapeMismatch("P and Q must be a semistandard/standard pair of equal shape".into()));
    }
    let mut p = pair.p.clone();
    let mut q = pair.q.clone();
    let k = p.size();
    let mut letters = vec![0u8; k];
    for step in (1..=k).rev() {
        let r = q.rows.iter().position(|row| row.last() == Some(&(step as u8))).expect("standard Q");
        q.rows[r].pop();
        let mut x = p.rows[r].pop().unwrap();
        if q.rows[r].is_empty() {
            q.rows.pop();
            p.rows.pop();
        }
        for row in p.rows[..r].iter_mut().rev() {
            // rightmost entry strictly smaller than x
            let pos = row.iter().rposition(|&y| y < x).expect("reverse bump");
            x = std::mem::replace(&mut row[pos], x);
        }
        letters[step - 1] = x;
    }
    Ok(Word(letters))
}

/// `w ~ u` iff their insertion tableaux coincide.
pub fn plactic_equiv(w: &Word, u: &Word) -> bool {
    insertion_tableau(w) == insertion_tableau(u)
}

/// Every suffix contains at least as many letters `i` as `i + 1`, for all `i`.
pub fn is_yamanouchi(w: &Word) -> bool {
    let n = w.max_letter() as usize;
    let mut counts = vec![0usize; n + 2];
    for &l in w.letters().iter().rev() {
        let l = l as usize;
        counts[l] += 1;
        if l > 1 && counts[l] > counts[l - 1] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 9).unwrap()
    }

    #[test]
    fn example_2143512() {
        let pair = rs(&w("2143512"));
        assert_eq!(pair.p.rows, vec![vec![1, 1, 2], vec![2, 3, 5], vec![4]]);
        assert_eq!(pair.q.rows, vec![vec![1, 3, 5], vec![2, 4, 7], vec![6]]);
    }

    #[test]
    fn small_examples() {
        assert_eq!(rs(&Word::default()), RsPair::default());
        let pair = rs(&w("213"));
        assert_eq!(pair.p.rows, vec![vec![1, 3], vec![2]]);
        assert_eq!(pair.q.rows, vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn plactic_examples() {
        assert!(plactic_equiv(&w("213"), &w("231")));
        assert!(plactic_equiv(&w("2143512"), &w("2143512")));
        assert!(!plactic_equiv(&w("12"), &w("21")));
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(is_yamanouchi(&w("121")));
        // right factors of 21 are 1 and 21
        assert!(is_yamanouchi(&w("21")));
        assert!(!is_yamanouchi(&w("12")));
        assert!(is_yamanouchi(&Word::default()));
        assert!(is_yamanouchi(&w("211")));
        assert!(!is_yamanouchi(&w("112")));
    }

    #[test]
    fn inverse_round_trip_exhaustive() {
        for m in 0..=4 {
            for word in Word::all(3, m) {
                assert_eq!(rs_inverse(&rs(&word)).unwrap(), word);
            }
        }
    }
}
