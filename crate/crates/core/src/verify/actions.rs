use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::SuiteReport;
use crate::coeffs::RationalQ;
use crate::combinatorics::{columns_of_size, yamanouchi_tableau, Partition};
use crate::qmatrix::{qdet, qminor, Generator, Monomial, NCPoly, Strategy};
use crate::straighten::quantum_tableau;
use crate::uqaction::{act, check_module_relations, column_module_action, weight, Op, Side};

/// The quantum determinant commutes with every generator, for sizes `2..=n`.
pub fn centrality(n: u8) -> SuiteReport {
    let mut report = SuiteReport::new("centrality");
    for m in 2..=n {
        let d = qdet(m);
        for i in 1..=m {
            for j in 1..=m {
                let t = NCPoly::generator(i, j);
                let c = d.mul(&t).sub(&t.mul(&d));
                report.check(c.is_zero(), || format!("qdet({m}) and t[{i},{j}] commute up to {c}"));
            }
        }
    }
    report
}

fn random_monomial(rng: &mut ChaCha8Rng, n: u8, degree: usize) -> Monomial {
    Monomial((0..degree).map(|_| Generator::new(rng.gen_range(1..=n), rng.gen_range(1..=n))).collect())
}

/// A random combination of unsorted monomials, left unnormalized.
fn random_raw(rng: &mut ChaCha8Rng, n: u8, max_degree: usize) -> NCPoly {
    let terms = rng.gen_range(1..=3);
    NCPoly::from_raw((0..terms).map(|_| {
        let d = rng.gen_range(1..=max_degree);
        (random_monomial(rng, n, d), RationalQ::monomial(rng.gen_range(-2..=2), rng.gen_range(-2..=2)))
    }))
}

fn shift(w: &mut [usize], i: u8, op: Op) {
    let (a, b) = (i as usize - 1, i as usize);
    match op {
        Op::E => {
            w[a] += 1;
            w[b] -= 1;
        }
        Op::F => {
            w[a] -= 1;
            w[b] += 1;
        }
        Op::QEps => {}
    }
}

/// Module relations on generator spans and degree-two monomials, highest
/// weight vectors, the column modules, and compatibility of the actions with
/// the defining relations.
pub fn module_relations(n: u8, seed: u64, samples: usize) -> SuiteReport {
    let mut report = SuiteReport::new("module-relations");
    let gens: Vec<NCPoly> = (1..=n).flat_map(|a| (1..=n).map(move |b| NCPoly::generator(a, b))).collect();
    let pairs: Vec<NCPoly> = gens.iter().flat_map(|x| gens.iter().map(move |y| x.mul(y))).collect();
    for side in [Side::Left, Side::Right] {
        for i in 1..n {
            for j in 1..n {
                for (name, span) in [("generators", &gens), ("degree 2", &pairs)] {
                    report.check_result(check_module_relations(span, i, j, side), || {
                        format!("{name} ({side:?}, {i}, {j})")
                    });
                }
            }
        }
    }

    // (y_λ|y_λ) is a highest weight vector on both sides, with string lengths λ_i - λ_{i+1}
    for k in 1..=4 {
        for lambda in Partition::all(k, n as usize) {
            let v = match quantum_tableau(&yamanouchi_tableau(&lambda), n) {
                Ok(v) => v,
                Err(e) => {
                    report.check(false, || format!("{lambda}: {e}"));
                    continue;
                }
            };
            for side in [Side::Left, Side::Right] {
                for i in 1..n {
                    let e = act(Op::E, i, &v, side);
                    report.check(matches!(&e, Ok(p) if p.is_zero()), || format!("e_{i} ({side:?}) on {lambda}"));
                    let part = |r: u8| lambda.parts().get(r as usize - 1).copied().unwrap_or(0);
                    let len = part(i) - part(i + 1);
                    let mut x = v.clone();
                    for step in 0..=len {
                        report.check(x.is_zero() == (step > len), || format!("f_{i} string on {lambda}"));
                        x = act(Op::F, i, &x, side).unwrap_or_else(|_| NCPoly::zero());
                    }
                    report.check(x.is_zero(), || format!("f_{i} string on {lambda} is longer than {len}"));
                }
            }
        }
    }

    // single columns realise the column modules
    for k in 1..=n as usize {
        let rows: Vec<u8> = (1..=k as u8).collect();
        for c in columns_of_size(k, n) {
            for i in 1..n {
                for op in [Op::E, Op::F] {
                    let got = qminor(&rows, &c).and_then(|v| act(op, i, &v, Side::Right));
                    let want = match column_module_action(&c, i, op) {
                        Some(d) => qminor(&rows, &d),
                        None => Ok(NCPoly::zero()),
                    };
                    report.check(matches!((&got, &want), (Ok(a), Ok(b)) if a == b), || {
                        format!("{op}_{i} on column {c:?}")
                    });
                }
            }
        }
    }

    // the actions respect the relations and move weights as expected
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<NCPoly> = (0..samples).map(|_| random_raw(&mut rng, n, 4)).collect();
    let outcomes: Vec<Vec<String>> = inputs
        .par_iter()
        .map(|raw| {
            let mut bad = Vec::new();
            let normal = raw.normalize();
            for side in [Side::Left, Side::Right] {
                for i in 1..n {
                    for op in [Op::E, Op::F, Op::QEps] {
                        let (a, b) = match (act(op, i, raw, side), act(op, i, &normal, side)) {
                            (Ok(a), Ok(b)) => (a, b),
                            _ => {
                                bad.push(format!("{op}_{i} ({side:?}) failed on {raw}"));
                                continue;
                            }
                        };
                        if a.normalize() != b {
                            bad.push(format!("{op}_{i} ({side:?}) depends on the representative of {raw}"));
                        }
                        // a single monomial is a weight vector
                        if raw.len() == 1 && !b.is_zero() {
                            let mut w = weight(raw, n, side).expect("monomial");
                            shift(&mut w, i, op);
                            if weight(&b, n, side) != Some(w) {
                                bad.push(format!("{op}_{i} ({side:?}) on {raw} has the wrong weight"));
                            }
                        }
                    }
                }
            }
            bad
        })
        .collect();
    for bad in outcomes {
        report.cases += 1;
        report.failures.extend(bad);
    }
    report
}

/// Normal forms do not depend on the rewriting order, keep the bigrading,
/// and specialize at `q = 1` to the commutative product.
pub fn rewriting(n: u8, k: usize, seed: u64, samples: usize) -> SuiteReport {
    let mut report = SuiteReport::new("rewriting");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Monomial, u64)> = (0..samples)
        .map(|_| {
            let d = rng.gen_range(1..=k);
            (random_monomial(&mut rng, n, d), rng.gen())
        })
        .collect();
    let one = BigRational::from_integer(1.into());
    let outcomes: Vec<Vec<String>> = cases
        .par_iter()
        .map(|(m, s)| {
            let mut bad = Vec::new();
            let raw = NCPoly::from_raw([(m.clone(), RationalQ::one())]);
            let left = raw.normalize();
            match raw.normalize_with(Strategy::Random(*s), usize::MAX) {
                Ok(r) if r == left => {}
                _ => bad.push(format!("{m}: random order gives a different normal form")),
            }
            if !left.is_normal() {
                bad.push(format!("{m}: result is not sorted"));
            }
            let grading = (m.row_content(n), m.col_content(n));
            if left.terms().any(|(x, _)| (x.row_content(n), x.col_content(n)) != grading) {
                bad.push(format!("{m}: rewriting changes the content"));
            }
            if raw.eval_commutative(&one).ok() != left.eval_commutative(&one).ok() {
                bad.push(format!("{m}: q = 1 image differs"));
            }
            bad
        })
        .collect();
    for bad in outcomes {
        report.cases += 1;
        report.failures.extend(bad);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_action_suites() {
        assert!(centrality(3).passed());
        let r = module_relations(2, 3, 40);
        assert!(r.passed(), "{r}");
        let r = rewriting(3, 4, 3, 40);
        assert!(r.passed(), "{r}");
    }
}
