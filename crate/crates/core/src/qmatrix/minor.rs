use super::ncpoly::{Generator, Monomial, NCPoly};
use crate::coeffs::RationalQ;
use crate::error::{Error, Result};

/// Number of inversions.
pub fn permutation_length(w: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                count += 1;
            }
        }
    }
    count
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// `(-q)^e`.
pub fn minus_q_power(e: i64) -> RationalQ {
    let p = RationalQ::q_power(e);
    if e.rem_euclid(2) == 1 {
        -p
    } else {
        p
    }
}

/// `Σ_w (-q)^{-ℓ(w)} t_{i_1 j_{w_1}} ⋯ t_{i_k j_{w_k}}`, normalized.
pub fn qminor(rows: &[u8], cols: &[u8]) -> Result<NCPoly> {
    if rows.len() != cols.len() {
        return Err(Error::ShapeMismatch(format!("minor with {} rows and {} columns", rows.len(), cols.len())));
    }
    if rows.iter().chain(cols).any(|&x| x == 0) {
        return Err(Error::InvalidInput("matrix indices start at 1".into()));
    }
    let raw = NCPoly::from_raw(permutations(rows.len()).into_iter().map(|w| {
        let m = Monomial(rows.iter().zip(&w).map(|(&i, &wk)| Generator { row: i, col: cols[wk] }).collect());
        (m, minus_q_power(-(permutation_length(&w) as i64)))
    }));
    Ok(raw.normalize())
}

/// The quantum determinant of the `n × n` generic matrix.
pub fn qdet(n: u8) -> NCPoly {
    let idx: Vec<u8> = (1..=n).collect();
    qminor(&idx, &idx).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(permutation_length(&[0, 1, 2]), 0);
        assert_eq!(permutation_length(&[1, 0]), 1);
        assert_eq!(permutation_length(&[2, 1, 0]), 3);
        let lens: Vec<usize> = permutations(3).iter().map(|w| permutation_length(w)).collect();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn small_minors() {
        assert_eq!(qminor(&[1], &[1]).unwrap(), NCPoly::generator(1, 1));
        let d = qdet(2);
        let expected = NCPoly::from_raw([
            ("t[1,1]*t[2,2]".parse().unwrap(), RationalQ::one()),
            ("t[1,2]*t[2,1]".parse().unwrap(), -RationalQ::q_power(-1)),
        ]);
        assert_eq!(d, expected);
        assert_eq!(qminor(&[1, 2], &[1, 2]).unwrap(), d);
        assert_eq!(qdet(1), NCPoly::generator(1, 1));
        assert!(qminor(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn qdet3_has_six_terms() {
        let d = qdet(3);
        assert_eq!(d.len(), 6);
        for (m, c) in d.terms() {
            let w: Vec<usize> = m.factors().iter().map(|g| g.col as usize - 1).collect();
            assert_eq!(*c, minus_q_power(-(permutation_length(&w) as i64)));
        }
    }
}
