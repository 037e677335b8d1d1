use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::BigRational;
use proptest::prelude::*;

use qplactic::coeffs::RationalQ;
use qplactic::combinatorics::{insertion_tableau, rs, rs_inverse, Word};
use qplactic::crystal::{lower, lower_via_tensor, raise};
use qplactic::qmatrix::{qminor, Generator, Monomial, NCPoly, Strategy as Order};

fn word(n: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max_len).prop_map(Word)
}

fn monomial(n: u8, max_len: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=n, 1..=n), 1..=max_len)
        .prop_map(|v| Monomial(v.into_iter().map(|(r, c)| Generator::new(r, c)).collect()))
}

fn laurent() -> impl Strategy<Value = RationalQ> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 1..=3).prop_map(|ts| RationalQ::from_terms(&ts))
}

/// Knuth class by breadth-first search over elementary Knuth moves.
fn knuth_class(w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        for k in 0..v.len().saturating_sub(2) {
            let (a, b, c) = (v.0[k], v.0[k + 1], v.0[k + 2]);
            let mut moves = Vec::new();
            // y x z = y z x for x < y <= z, in both directions
            if (b < a && a <= c) || (c < a && a <= b) {
                moves.push([a, c, b]);
            }
            // x z y = z x y for x <= y < z, in both directions
            if (a <= c && c < b) || (b <= c && c < a) {
                moves.push([b, a, c]);
            }
            for m in moves {
                let mut u = v.clone();
                u.0[k..k + 3].copy_from_slice(&m);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
    }
    seen
}

/// Ordinary determinant of the commuting minor, as a map like `eval_commutative`.
fn commutative_det(rows: &[u8], cols: &[u8]) -> BTreeMap<Vec<Generator>, BigRational> {
    let k = rows.len();
    let mut out = BTreeMap::new();
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
        let mut key: Vec<Generator> = (0..k).map(|a| Generator::new(rows[a], cols[p[a]])).collect();
        key.sort_unstable();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        *out.entry(key).or_insert_with(|| BigRational::from_integer(0.into())) += BigRational::from_integer(sign.into());
    });
    out.retain(|_, v: &mut BigRational| *v != BigRational::from_integer(0.into()));
    out
}

fn permute(p: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == p.len() {
        f(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, f);
        p.swap(start, i);
    }
}

#[test]
fn knuth_moves_agree_with_insertion() {
    for m in 0..=6 {
        for w in Word::all(3, m) {
            let p = insertion_tableau(&w);
            for u in knuth_class(&w) {
                assert_eq!(insertion_tableau(&u), p, "{w} and {u}");
            }
        }
    }
    // and classes are exactly the fibres of insertion
    let mut fibres: BTreeMap<_, usize> = BTreeMap::new();
    for w in Word::all(3, 5) {
        *fibres.entry(insertion_tableau(&w)).or_default() += 1;
    }
    for (p, size) in fibres {
        assert_eq!(knuth_class(&p.column_reading()).len(), size, "class of {p}");
    }
}

#[test]
fn minors_at_q_one_are_determinants() {
    let one = BigRational::from_integer(1.into());
    for (rows, cols) in [(vec![1, 2], vec![1, 2]), (vec![1, 3], vec![2, 3]), (vec![1, 2, 3], vec![1, 2, 3]), (vec![2, 3, 4], vec![1, 2, 4])] {
        let m = qminor(&rows, &cols).unwrap();
        assert_eq!(m.eval_commutative(&one).unwrap(), commutative_det(&rows, &cols), "{rows:?} {cols:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rs_round_trip(w in word(5, 12)) {
        let pair = rs(&w);
        prop_assert!(pair.p.is_semistandard());
        prop_assert!(pair.q.is_standard());
        prop_assert_eq!(rs_inverse(&pair).unwrap(), w);
    }

    #[test]
    fn column_reading_is_in_the_class(w in word(4, 10)) {
        let p = insertion_tableau(&w);
        prop_assert_eq!(insertion_tableau(&p.column_reading()), p.clone());
        prop_assert_eq!(insertion_tableau(&p.row_reading()), p);
    }

    #[test]
    fn operators_are_partial_inverses(w in word(4, 10), i in 1u8..4) {
        if let Some(v) = lower(&w, i) {
            prop_assert_eq!(raise(&v, i), Some(w.clone()));
            prop_assert_eq!(rs(&v).q, rs(&w).q);
        }
        if let Some(v) = raise(&w, i) {
            prop_assert_eq!(lower(&v, i), Some(w));
        }
    }

    #[test]
    fn tensor_rule(u in word(3, 5), v in word(3, 5), i in 1u8..3) {
        prop_assert_eq!(lower_via_tensor(&u, &v, i), lower(&u.concat(&v), i));
    }

    #[test]
    fn field_operations(a in laurent(), b in laurent()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<RationalQ>().unwrap(), a);
    }

    #[test]
    fn normal_form_is_confluent(m in monomial(3, 5), seed in any::<u64>()) {
        let p = NCPoly::from_raw([(m, RationalQ::one())]);
        let a = p.normalize();
        prop_assert!(a.is_normal());
        prop_assert_eq!(p.normalize_with(Order::Random(seed), usize::MAX).unwrap(), a);
    }

    #[test]
    fn multiplication_respects_relations(a in monomial(3, 3), b in monomial(3, 3)) {
        let pa = NCPoly::from_raw([(a.clone(), RationalQ::one())]);
        let pb = NCPoly::from_raw([(b.clone(), RationalQ::one())]);
        let joint = NCPoly::from_raw([(a.concat(&b), RationalQ::one())]).normalize();
        prop_assert_eq!(pa.normalize().mul(&pb.normalize()), joint);
    }
}
