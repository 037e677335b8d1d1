use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::SuiteReport;
use crate::coeffs::RationalQ;
use crate::combinatorics::{
    b_sigma_labels, column_reading, column_superstandard, enumerate_tabloids, insertion_tableau, rs,
    semistandard_tableaux, Partition, Tableau, Tabloid, Word,
};
use crate::error::Result;
use crate::qmatrix::{permutations, Monomial, NCPoly};
use crate::straighten::{
    bitabloid_to_ncpoly, expand_in_bitableaux, expand_in_quantum_tableaux, gradings, graded_rank, q_zero_class,
    quantum_tabloid, straighten_flag, verify_theorem1, Bitableau, Bitabloid, FlagExpansion,
};
use crate::uqaction::check_bimodule_commutation;

/// Every monomial `t_{w_1 u_1} ⋯ t_{w_m u_m}` with `m ≤ k` reduces at `q = 0`
/// to the insertion prediction, with polynomial coefficients.
pub fn theorem1(n: u8, k: usize) -> SuiteReport {
    let mut report = SuiteReport::new("theorem1");
    for m in 1..=k {
        let words: Vec<Word> = Word::all(n, m).collect();
        let pairs: Vec<(&Word, &Word)> = words.iter().flat_map(|w| words.iter().map(move |u| (w, u))).collect();
        let results: Vec<Result<bool>> =
            pairs.par_iter().map(|(w, u)| verify_theorem1(w, u, n).map(|r| r.matches)).collect();
        for ((w, u), r) in pairs.iter().zip(results) {
            match r {
                Ok(ok) => report.check(ok, || format!("rows {w} cols {u}: class differs from prediction")),
                Err(e) => report.check(false, || format!("rows {w} cols {u}: {e}")),
            }
        }
    }
    report
}

/// Diagonal monomials `t_{i_1 i_1} ⋯ t_{i_m i_m}` are congruent modulo `q`
/// exactly when their words have the same insertion tableau.
pub fn corollary(n: u8, k: usize) -> SuiteReport {
    let mut report = SuiteReport::new("corollary");
    for m in 1..=k {
        let words: Vec<Word> = Word::all(n, m).collect();
        let classes: Vec<Result<Option<Bitableau>>> = words
            .par_iter()
            .map(|w| {
                let mono = Monomial::from_words(w, w)?;
                q_zero_class(&expand_in_bitableaux(&NCPoly::from_monomial(mono), n)?.terms)
            })
            .collect();
        let classes: Vec<Option<Bitableau>> = classes
            .into_iter()
            .zip(&words)
            .map(|(c, w)| {
                c.unwrap_or_else(|e| {
                    report.failures.push(format!("diagonal {w}: {e}"));
                    None
                })
            })
            .collect();
        let ps: Vec<Tableau> = words.iter().map(insertion_tableau).collect();
        for a in 0..words.len() {
            let expected = Bitableau { left: ps[a].clone(), right: ps[a].clone() };
            report.check(classes[a].as_ref() == Some(&expected), || format!("diagonal {}: wrong class", words[a]));
            for b in a + 1..words.len() {
                let congruent = classes[a].is_some() && classes[a] == classes[b];
                report.check(congruent == (ps[a] == ps[b]), || {
                    format!("{} and {}: congruence {congruent} but plactic {}", words[a], words[b], ps[a] == ps[b])
                });
            }
        }
    }
    report
}

/// Column-size sequences with entries in `1..=n`, at most `max_cols` parts
/// and total at most `max_size`.
fn column_shapes(n: u8, max_cols: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(s) = stack.pop() {
        if !s.is_empty() {
            out.push(s.clone());
        }
        if s.len() == max_cols {
            continue;
        }
        let used: usize = s.iter().sum();
        for c in 1..=(n as usize).min(max_size.saturating_sub(used)) {
            let mut t = s.clone();
            t.push(c);
            stack.push(t);
        }
    }
    out.sort();
    out
}

/// The shape obtained by sorting the column sizes of a tabloid.
fn sorted_shape(t: &Tabloid) -> Partition {
    Partition::from_unsorted(t.shape()).conjugate()
}

/// Flag straightening agrees with the linear solve, and the `q = 0` class of
/// every tabloid is its insertion tableau when the shapes match.
pub fn flag(n: u8, max_cols: usize, max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::new("flag");
    let tabloids: Vec<Tabloid> =
        column_shapes(n, max_cols, max_size).iter().flat_map(|s| enumerate_tabloids(s, n)).collect();
    let outcomes: Vec<std::result::Result<(), String>> = tabloids.par_iter().map(|d| check_tabloid(d, n)).collect();
    for (d, o) in tabloids.iter().zip(outcomes) {
        report.check(o.is_ok(), || format!("{d}: {}", o.unwrap_err()));
    }
    report
}

fn check_tabloid(d: &Tabloid, n: u8) -> std::result::Result<(), String> {
    let lambda = sorted_shape(d);
    let rewritten = straighten_flag(d, n).map_err(|e| e.to_string())?;
    let p = quantum_tabloid(d, n).map_err(|e| e.to_string())?;
    let solved = expand_in_quantum_tableaux(&p, &lambda, n).map_err(|e| e.to_string())?;
    if rewritten != solved {
        return Err("rewriting and linear solve disagree".into());
    }
    if rewritten.terms.keys().any(|t| t.shape() != lambda) {
        return Err("a tableau of the wrong shape appears".into());
    }
    let class = q_zero_class(&rewritten.terms).map_err(|e| e.to_string())?;
    let pw = insertion_tableau(&column_reading(d));
    let expected = (pw.shape() == lambda).then_some(pw);
    if class != expected {
        return Err(format!("class {class:?}, expected {expected:?}"));
    }
    Ok(())
}

/// Values at `q = 0` of the nonzero coefficients.
fn reduction(e: &FlagExpansion) -> Result<BTreeMap<Tableau, BigRational>> {
    let mut out = BTreeMap::new();
    for (t, c) in &e.terms {
        let v = c.value_at_zero()?;
        if !v.is_zero() {
            out.insert(t.clone(), v);
        }
    }
    Ok(out)
}

/// For `λ = (2,1)`: each `B_σ` is a basis of the irreducible component and
/// two tabloids from any `B_σ`, `B_ζ` are congruent modulo `q` exactly when
/// their column readings insert to the same tableau.
pub fn bsigma(n: u8) -> SuiteReport {
    let mut report = SuiteReport::new("bsigma");
    let lambda = Partition::new(vec![2, 1]).expect("partition");
    let r = lambda.conjugate().len();
    let basis = semistandard_tableaux(&lambda, n);
    let mut labelled: Vec<(Tabloid, Tableau, BTreeMap<Tableau, BigRational>)> = Vec::new();
    for sigma in permutations(r) {
        let sigma1: Vec<usize> = sigma.iter().map(|x| x + 1).collect();
        let members = match b_sigma_labels(&lambda, &sigma1, n) {
            Ok(m) => m,
            Err(e) => {
                report.check(false, || format!("sigma {sigma1:?}: {e}"));
                continue;
            }
        };
        report.check(members.len() == basis.len(), || {
            format!("sigma {sigma1:?}: {} members, dimension {}", members.len(), basis.len())
        });
        let mut matrix = Vec::new();
        for d in &members {
            let e = match straighten_flag(d, n) {
                Ok(e) => e,
                Err(err) => {
                    report.check(false, || format!("{d}: {err}"));
                    continue;
                }
            };
            matrix.push(basis.iter().map(|t| e.coeff(t)).collect::<Vec<RationalQ>>());
            match reduction(&e) {
                Ok(red) => labelled.push((d.clone(), insertion_tableau(&column_reading(d)), red)),
                Err(err) => report.check(false, || format!("{d}: {err}")),
            }
        }
        let independent = matrix.len() == basis.len() && crate::straighten::invert(matrix).is_ok();
        report.check(independent, || format!("sigma {sigma1:?}: members are not a basis"));
    }
    for a in 0..labelled.len() {
        for b in a..labelled.len() {
            let (da, pa, ra) = &labelled[a];
            let (db, pb, rb) = &labelled[b];
            report.check((ra == rb) == (pa == pb), || format!("{da} and {db}: congruence disagrees with insertion"));
        }
    }
    report
}

/// Bitabloids `(δ|δ')` of column sizes `σ(λ')` whose column readings share a
/// recording tableau `τ_ν` (column superstandard) with `ν ≤ λ`.
pub fn b_lambda_sigma(lambda: &Partition, sigma: &[usize], n: u8) -> Vec<Bitabloid> {
    let conj = lambda.conjugate();
    let shape: Vec<usize> = sigma.iter().map(|&s| conj.parts()[s - 1]).collect();
    let targets: Vec<Tableau> = Partition::all(lambda.size(), lambda.size())
        .into_iter()
        .filter(|nu| nu.dominated_by(lambda))
        .map(|nu| column_superstandard(&nu))
        .collect();
    let mut by_q: BTreeMap<Tableau, Vec<Tabloid>> = BTreeMap::new();
    for d in enumerate_tabloids(&shape, n) {
        let q = rs(&column_reading(&d)).q;
        if targets.contains(&q) {
            by_q.entry(q).or_default().push(d);
        }
    }
    let mut out = Vec::new();
    for group in by_q.values() {
        for a in group {
            for b in group {
                out.push(Bitabloid { left: a.clone(), right: b.clone() });
            }
        }
    }
    out
}

/// `B_{λ,σ}` is linearly independent with the expected dimension and each
/// element reduces at `q = 0` to the pair of insertion tableaux.
pub fn bimodule_basis(lambda: &Partition, n: u8) -> SuiteReport {
    let mut report = SuiteReport::new("bimodule-basis");
    let dim: usize = Partition::all(lambda.size(), n as usize)
        .into_iter()
        .filter(|nu| nu.dominated_by(lambda))
        .map(|nu| semistandard_tableaux(&nu, n).len().pow(2))
        .sum();
    for sigma in permutations(lambda.conjugate().len()) {
        let sigma1: Vec<usize> = sigma.iter().map(|x| x + 1).collect();
        let family = b_lambda_sigma(lambda, &sigma1, n);
        report.check(family.len() == dim, || format!("{lambda} sigma {sigma1:?}: {} elements, expected {dim}", family.len()));
        let polys: Vec<NCPoly> = family.iter().filter_map(|b| bitabloid_to_ncpoly(b).ok()).collect();
        let rank = crate::straighten::rank(&polys);
        report.check(rank == family.len(), || format!("{lambda} sigma {sigma1:?}: rank {rank} of {}", family.len()));
        for (b, p) in family.iter().zip(&polys) {
            let expected = Bitableau {
                left: insertion_tableau(&column_reading(&b.left)),
                right: insertion_tableau(&column_reading(&b.right)),
            };
            let class = expand_in_bitableaux(p, n).and_then(|e| q_zero_class(&e.terms));
            match class {
                Ok(c) => report.check(c.as_ref() == Some(&expected), || format!("{}|{}: class {c:?}", b.left, b.right)),
                Err(e) => report.check(false, || format!("{}|{}: {e}", b.left, b.right)),
            }
        }
    }
    report
}

fn random_element(rng: &mut ChaCha8Rng, n: u8, max_degree: usize) -> NCPoly {
    let coeffs = [
        RationalQ::one(),
        RationalQ::from_int(-1),
        RationalQ::from_int(2),
        RationalQ::q_power(1),
        RationalQ::q_power(-1),
    ];
    let terms = rng.gen_range(1..=3);
    NCPoly::from_raw((0..terms).map(|_| {
        let deg = rng.gen_range(1..=max_degree);
        let m = Monomial(
            (0..deg)
                .map(|_| crate::qmatrix::Generator::new(rng.gen_range(1..=n), rng.gen_range(1..=n)))
                .collect(),
        );
        (m, coeffs[rng.gen_range(0..coeffs.len())].clone())
    }))
    .normalize()
}

pub(crate) fn random_elements(seed: u64, count: usize, n: u8, max_degree: usize) -> Vec<NCPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_element(&mut rng, n, max_degree)).collect()
}

/// The bimodule statements: left and right actions commute, and the
/// `B_{λ,σ}` families are bases with the predicted classes.
pub fn bimodule(n: u8, seed: u64, samples: usize) -> SuiteReport {
    let mut report = SuiteReport::new("bimodule");
    for lambda in [vec![2], vec![1, 1]] {
        report.merge(bimodule_basis(&Partition::new(lambda).expect("partition"), 2));
    }
    let elements = random_elements(seed, samples, n, 3);
    let results: Vec<Vec<(u8, u8, Result<()>)>> = elements
        .par_iter()
        .map(|p| {
            (1..n)
                .flat_map(|i| (1..n).map(move |j| (i, j)))
                .map(|(i, j)| (i, j, check_bimodule_commutation(p, i, j)))
                .collect()
        })
        .collect();
    for (p, rs) in elements.iter().zip(results) {
        for (i, j, r) in rs {
            report.check_result(r, || format!("{p} at ({i}, {j})"));
        }
    }
    report.suite = "bimodule".into();
    report
}

/// Basis check on every graded component of degree at most `k`.
pub fn basis(n: u8, k: usize) -> SuiteReport {
    let mut report = SuiteReport::new("basis");
    for m in 1..=k {
        let gs = gradings(n, m);
        let reports: Vec<_> = gs.par_iter().map(|g| graded_rank(g, n)).collect();
        for r in reports {
            report.check(r.ok(), || {
                format!("rows {:?} cols {:?}: dim {} bitableaux {} rank {}", r.rows, r.cols, r.dimension, r.bitableaux, r.rank)
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_shape_enumeration() {
        let s = column_shapes(2, 2, 3);
        assert_eq!(s, vec![vec![1], vec![1, 1], vec![1, 2], vec![2], vec![2, 1]]);
    }

    #[test]
    fn b_lambda_sigma_sizes() {
        let two = Partition::new(vec![2]).unwrap();
        assert_eq!(b_lambda_sigma(&two, &[1, 2], 2).len(), 10);
        let col = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(b_lambda_sigma(&col, &[1], 2).len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        assert!(theorem1(2, 2).passed());
        assert!(corollary(2, 2).passed());
        assert!(basis(2, 2).passed());
        let r = bimodule_basis(&Partition::new(vec![2]).unwrap(), 2);
        assert!(r.passed(), "{r}");
    }
}
