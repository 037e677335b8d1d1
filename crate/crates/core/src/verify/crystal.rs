use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SuiteReport;
use crate::combinatorics::{
    insertion_tableau, rs, rs_inverse, semistandard_tableaux, standard_tableaux, Partition, RsPair, Tableau, Word,
};
use crate::crystal::{
    component_for_shape, component_shapes, lower, lower_via_tensor, raise, raise_via_tensor, word_graph,
};
use crate::qmatrix::qminor;
use crate::uqaction::{act, column_module_action, Op, Side};

/// The labelled edges of the crystal graph of `V_(2,1)` for `n = 3`.
pub fn crystal_21_edges() -> Vec<(String, u8, String)> {
    [
        ("[11/2]", 1, "[12/2]"),
        ("[11/2]", 2, "[11/3]"),
        ("[11/3]", 1, "[12/3]"),
        ("[12/3]", 1, "[22/3]"),
        ("[22/3]", 2, "[23/3]"),
        ("[12/2]", 2, "[13/2]"),
        ("[13/2]", 2, "[13/3]"),
        ("[13/3]", 1, "[23/3]"),
    ]
    .into_iter()
    .map(|(a, i, b)| (a.to_string(), i, b.to_string()))
    .collect()
}

/// Edges of the column module graph for `k = 2`, `n = 4`.
fn column_graph_edges() -> Vec<(Vec<u8>, u8, Vec<u8>)> {
    vec![
        (vec![1, 2], 2, vec![1, 3]),
        (vec![1, 3], 1, vec![2, 3]),
        (vec![1, 3], 3, vec![1, 4]),
        (vec![1, 4], 1, vec![2, 4]),
        (vec![2, 3], 3, vec![2, 4]),
        (vec![2, 4], 2, vec![3, 4]),
    ]
}

/// Small crystal graphs and operator examples.
pub fn figures() -> SuiteReport {
    let mut report = SuiteReport::new("figures");

    match component_for_shape(&Partition::new(vec![2, 1]).expect("partition"), 3) {
        Ok(g) => {
            let mut got: Vec<(String, u8, String)> =
                g.edge_labels().map(|(s, i, t)| (s.label(), i, t.label())).collect();
            let mut want = crystal_21_edges();
            got.sort();
            want.sort();
            report.check(g.vertices.len() == 8, || format!("V_(2,1): {} vertices", g.vertices.len()));
            report.check(got == want, || format!("V_(2,1): edges {got:?}"));
        }
        Err(e) => report.check(false, || format!("V_(2,1): {e}")),
    }

    match component_for_shape(&Partition::new(vec![2, 2]).expect("partition"), 4) {
        Ok(g) => {
            report.check(g.vertices.len() == 20, || format!("V_(2,2): {} vertices", g.vertices.len()));
            report.check(g.is_connected(), || "V_(2,2): not connected".into());
            report.check(g.colors_form_strings(), || "V_(2,2): colors do not form strings".into());
        }
        Err(e) => report.check(false, || format!("V_(2,2): {e}")),
    }

    // column module graph, both combinatorially and through the action on minors
    let columns = crate::combinatorics::columns_of_size(2, 4);
    let mut got = Vec::new();
    for c in &columns {
        for i in 1..4u8 {
            if let Some(d) = column_module_action(c, i, Op::F) {
                got.push((c.clone(), i, d));
            }
        }
    }
    got.sort();
    let mut want = column_graph_edges();
    want.sort();
    report.check(columns.len() == 6, || format!("column graph: {} vertices", columns.len()));
    report.check(got == want, || format!("column graph: edges {got:?}"));
    for (c, i, d) in &want {
        let lowered = qminor(&[1, 2], c).and_then(|m| act(Op::F, *i, &m, Side::Right));
        let target = qminor(&[1, 2], d);
        report.check(matches!((lowered, target), (Ok(a), Ok(b)) if a == b), || {
            format!("f_{i} on minor {c:?} is not the minor {d:?}")
        });
    }

    let w = Word(vec![2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2]);
    report.check(raise(&w, 1) == Some(Word(vec![2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 1])), || "raise on 21112211112".into());
    report.check(lower(&w, 1) == Some(Word(vec![2, 1, 1, 1, 2, 2, 1, 1, 1, 2, 2])), || "lower on 21112211112".into());
    report
}

fn check_word(report: &mut SuiteReport, w: &Word, n: u8) {
    let pair = rs(w);
    for i in 1..n {
        // inverse pair
        if let Some(v) = lower(w, i) {
            report.check(raise(&v, i).as_ref() == Some(w), || format!("raise(lower({w}, {i})) != {w}"));
            let mut expected = w.content(n);
            expected[i as usize - 1] -= 1;
            expected[i as usize] += 1;
            report.check(v.content(n) == expected, || format!("lower({w}, {i}) has the wrong weight"));
        }
        if let Some(v) = raise(w, i) {
            report.check(lower(&v, i).as_ref() == Some(w), || format!("lower(raise({w}, {i})) != {w}"));
        }
        // insertion intertwines the operators and fixes the recording tableau
        for (name, op) in [("lower", lower as fn(&Word, u8) -> Option<Word>), ("raise", raise)] {
            let on_word = op(w, i).map(|v| rs(&v));
            let on_tableau = op(&pair.p.column_reading(), i).map(|v| insertion_tableau(&v));
            let ok = match (&on_word, &on_tableau) {
                (None, None) => true,
                (Some(a), Some(p)) => a.q == pair.q && &a.p == p,
                _ => false,
            };
            report.check(ok, || format!("{name}_{i} on {w} does not commute with insertion"));
        }
        // tensor rule over every split point
        for cut in 0..=w.len() {
            let (u, v) = (Word(w.0[..cut].to_vec()), Word(w.0[cut..].to_vec()));
            report.check(lower_via_tensor(&u, &v, i) == lower(w, i), || format!("tensor lower_{i} on {u}|{v}"));
            report.check(raise_via_tensor(&u, &v, i) == raise(w, i), || format!("tensor raise_{i} on {u}|{v}"));
        }
    }
}

/// Plactic classes are permuted by the operators: for `w ~ u`, `f̂_i w ~ f̂_i u`.
fn check_plactic_pair(report: &mut SuiteReport, w: &Word, u: &Word, n: u8) {
    for i in 1..n {
        for op in [lower as fn(&Word, u8) -> Option<Word>, raise] {
            let ok = match (op(w, i), op(u, i)) {
                (None, None) => true,
                (Some(a), Some(b)) => insertion_tableau(&a) == insertion_tableau(&b),
                _ => false,
            };
            report.check(ok, || format!("operator {i} separates plactic words {w} and {u}"));
        }
    }
}

fn random_standard(rng: &mut ChaCha8Rng, shape: &Partition) -> Tableau {
    standard_tableaux(shape).choose(rng).expect("a standard tableau exists").clone()
}

/// Crystal identities: exhaustive on words of length at most `k`, plus
/// `samples` random plactic pairs of length `k + 1` to `k + 3`.
pub fn crystal_properties(n: u8, k: usize, seed: u64, samples: usize) -> SuiteReport {
    let mut report = SuiteReport::new("crystal");
    for m in 0..=k {
        for w in Word::all(n, m) {
            check_word(&mut report, &w, n);
        }
        // plactic pairs, exhaustive in each class
        if m >= 2 {
            let mut classes: std::collections::BTreeMap<Tableau, Vec<Word>> = Default::default();
            for w in Word::all(n, m) {
                classes.entry(insertion_tableau(&w)).or_default().push(w);
            }
            for class in classes.values() {
                for u in &class[1..] {
                    check_plactic_pair(&mut report, &class[0], u, n);
                }
            }
        }
        // component decomposition of the tensor power
        if let Ok(g) = word_graph(n, m) {
            let shapes = component_shapes(&g);
            let mut expected: Vec<(Partition, usize)> = Partition::all(m, n as usize)
                .into_iter()
                .map(|nu| {
                    let f = standard_tableaux(&nu).len();
                    (nu, f)
                })
                .collect();
            expected.sort();
            let got: Vec<(Partition, usize)> = shapes.into_iter().collect();
            report.check(got == expected || m == 0, || format!("n={n} m={m}: components {got:?}"));
            for comp in g.connected_components() {
                let shape = insertion_tableau(&g.vertices[comp[0]]).shape();
                report.check(comp.len() == semistandard_tableaux(&shape, n).len(), || {
                    format!("n={n} m={m}: component of {} has {} vertices", g.vertices[comp[0]], comp.len())
                });
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.gen_range(k + 1..=k + 3);
        let w = Word((0..m).map(|_| rng.gen_range(1..=n)).collect());
        check_word(&mut report, &w, n);
        let p = insertion_tableau(&w);
        let q = random_standard(&mut rng, &p.shape());
        match rs_inverse(&RsPair { p, q }) {
            Ok(u) => check_plactic_pair(&mut report, &w, &u, n),
            Err(e) => report.check(false, || format!("rs_inverse for {w}: {e}")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figures_pass() {
        let r = figures();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn small_crystal_suite() {
        let r = crystal_properties(3, 3, 7, 50);
        assert!(r.passed(), "{r}");
    }
}
