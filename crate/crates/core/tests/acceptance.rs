//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any of them fails.

use std::time::{Duration, Instant};

use qplactic::coeffs::RationalQ;
use qplactic::combinatorics::{insertion_tableau, Partition, Tableau, Tabloid, Word};
use qplactic::crystal::{component_for_shape, lower, raise};
use qplactic::qmatrix::{Monomial, NCPoly};
use qplactic::straighten::{
    expand_in_bitableaux, expand_in_quantum_tableaux, q_zero_class, quantum_tableau, straighten_flag, Bitableau,
};
use qplactic::uqaction::{act_f, Side};
use qplactic::verify;

type Check = Result<String, String>;

fn rq(s: &str) -> RationalQ {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn tab(rows: Vec<Vec<u8>>) -> Tableau {
    Tableau::new(rows).expect("tableau")
}

fn sorted_strings<'a>(cs: impl Iterator<Item = &'a RationalQ>) -> Vec<String> {
    let mut v: Vec<String> = cs.map(ToString::to_string).collect();
    v.sort();
    v
}

fn expect_multiset<'a>(got: impl Iterator<Item = &'a RationalQ>, want: &[&str]) -> Result<(), String> {
    let got = sorted_strings(got);
    let want_q: Vec<RationalQ> = want.iter().map(|s| rq(s)).collect();
    let want = sorted_strings(want_q.iter());
    if got != want {
        return Err(format!("coefficients {got:?}, expected {want:?}"));
    }
    Ok(())
}

fn suite(r: verify::SuiteReport) -> Result<usize, String> {
    if r.passed() {
        Ok(r.cases)
    } else {
        Err(r.to_string())
    }
}

fn ac1() -> Check {
    let m: Monomial = "t[2,3]*t[1,1]*t[3,2]".parse().map_err(|e| format!("{e}"))?;
    let e = expand_in_bitableaux(&NCPoly::from_monomial(m), 3).map_err(|e| e.to_string())?;
    if e.len() != 6 {
        return Err(format!("{} terms", e.len()));
    }
    expect_multiset(e.terms.values(), &["q^3", "-q^3", "1-q^2+q^4", "q^4", "q^5", "-q^5"])?;
    let class = q_zero_class(&e.terms).map_err(|e| e.to_string())?;
    let want = Bitableau { left: tab(vec![vec![1, 3], vec![2]]), right: tab(vec![vec![1, 2], vec![3]]) };
    if class.as_ref() != Some(&want) {
        return Err(format!("class {class:?}"));
    }
    Ok(format!("6 terms, class {want}"))
}

fn ac2() -> Check {
    let d = Tabloid::new(vec![vec![1, 5], vec![2, 3, 6]]).expect("tabloid");
    let e = straighten_flag(&d, 6).map_err(|e| e.to_string())?;
    if e.len() != 5 {
        return Err(format!("{} terms", e.len()));
    }
    expect_multiset(e.terms.values(), &["1-q^2", "q^3-q", "q", "-q^2", "-q^4"])?;
    let t = tab(vec![vec![1, 2], vec![3, 6], vec![5]]);
    if t != insertion_tableau(&Word(vec![5, 1, 6, 3, 2])) {
        return Err("the leading tableau is not P(51632)".into());
    }
    if e.coeff(&t) != rq("1-q^2") {
        return Err(format!("coefficient of {t} is {}", e.coeff(&t)));
    }
    Ok(format!("5 terms, 1-q^2 on {t}"))
}

fn ac3() -> Check {
    let small = suite(verify::theorem1(2, 4))?;
    let large = suite(verify::theorem1(3, 3))?;
    Ok(format!("{small} pairs for n=2, {large} for n=3"))
}

fn ac4() -> Check {
    Ok(format!("{} cases", suite(verify::corollary(3, 3))?))
}

fn ac5() -> Check {
    Ok(format!("{} commutators", suite(verify::centrality(3))?))
}

fn ac6() -> Check {
    let g = component_for_shape(&Partition::new(vec![2, 1]).expect("partition"), 3).map_err(|e| e.to_string())?;
    let mut got: Vec<(String, u8, String)> = g.edge_labels().map(|(a, i, b)| (a.label(), i, b.label())).collect();
    let mut want = verify::crystal_21_edges();
    got.sort();
    want.sort();
    if g.vertices.len() != 8 || got != want {
        return Err(format!("{} vertices, edges {got:?}", g.vertices.len()));
    }
    let h = component_for_shape(&Partition::new(vec![2, 2]).expect("partition"), 4).map_err(|e| e.to_string())?;
    if h.vertices.len() != 20 || !h.is_connected() {
        return Err(format!("(2,2): {} vertices, connected {}", h.vertices.len(), h.is_connected()));
    }
    Ok("8 vertices and 8 edges; 20 connected vertices".into())
}

fn ac7() -> Check {
    let w = Word(vec![2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2]);
    let up = raise(&w, 1);
    let down = lower(&w, 1);
    if up != Some(Word(vec![2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 1])) {
        return Err(format!("raise gives {up:?}"));
    }
    if down != Some(Word(vec![2, 1, 1, 1, 2, 2, 1, 1, 1, 2, 2])) {
        return Err(format!("lower gives {down:?}"));
    }
    Ok("raise and lower match".into())
}

fn ac8() -> Check {
    let tau = tab(vec![vec![1, 1], vec![3]]);
    let v = quantum_tableau(&tau, 3).and_then(|v| act_f(1, &v, Side::Right)).map_err(|e| e.to_string())?;
    let e = expand_in_quantum_tableaux(&v, &tau.shape(), 3).map_err(|e| e.to_string())?;
    let a = tab(vec![vec![1, 2], vec![3]]);
    let b = tab(vec![vec![1, 3], vec![2]]);
    if e.len() != 2 || e.coeff(&a) != rq("1+q^2") || e.coeff(&b) != rq("-q^3") {
        return Err(format!("expansion {:?}", e.terms));
    }
    Ok(format!("(1+q^2){a} - q^3{b}"))
}

fn ac9() -> Check {
    let mut parts = Vec::new();
    let runs = [
        verify::crystal_properties(3, 5, 1, 1000),
        verify::rewriting(3, 5, 1, 1000),
        verify::module_relations(3, 1, 1000),
        verify::bimodule(3, 1, 1000),
        verify::basis(3, 3),
        verify::bsigma(3),
    ];
    let mut failures = Vec::new();
    for r in runs {
        parts.push(format!("{} {}", r.suite, r.cases));
        if !r.passed() {
            failures.push(r.to_string());
        }
    }
    if failures.is_empty() {
        Ok(parts.join(", "))
    } else {
        Err(failures.join("\n"))
    }
}

fn main() {
    let criteria: [(&str, &str, Duration, fn() -> Check); 9] = [
        ("AC-1", "bitableau expansion of t23 t11 t32", Duration::from_secs(1), ac1),
        ("AC-2", "flag straightening of (15|236)", Duration::from_secs(5), ac2),
        ("AC-3", "q = 0 classes of all small monomials", Duration::from_secs(300), ac3),
        ("AC-4", "diagonal monomials and plactic classes", Duration::from_secs(60), ac4),
        ("AC-5", "centrality of the quantum determinant", Duration::from_secs(10), ac5),
        ("AC-6", "crystal components of (2,1) and (2,2)", Duration::from_secs(1), ac6),
        ("AC-7", "raise and lower on 21112211112", Duration::from_millis(1), ac7),
        ("AC-8", "lowering a quantum tableau", Duration::from_secs(5), ac8),
        ("AC-9", "property suites", Duration::from_secs(600), ac9),
    ];
    let mut failed = 0;
    for (id, what, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; took {elapsed:?}, budget {budget:?}")),
            r => r,
        };
        match result {
            Ok(msg) => println!("PASS {id} {what}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {id} {what}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
