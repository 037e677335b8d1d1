//! Command-line front end. Every command writes deterministic output; the
//! exit code is 0 on success, 1 when a verification fails and 2 on bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::combinatorics::{insertion_tableau, rs, Partition, Tabloid, Word};
use crate::crystal::{component, component_for_shape, word_graph, CrystalGraph};
use crate::error::{Error, Result};
use crate::qmatrix::{qdet, qminor};
use crate::straighten::{straighten_flag, verify_theorem1};
use crate::verify::{self, Config, Suite};

/// Largest alphabet accepted by letter-level commands that take no `-n`.
const MAX_LETTER: u8 = u8::MAX;

#[derive(Parser, Debug)]
#[command(name = "qplactic", version, about = "Quantum straightening, crystal operators and Robinson-Schensted")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads for the verification suites
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest matrix size accepted
    #[arg(long, global = true, default_value_t = 4)]
    max_n: u8,
    /// Largest monomial degree (or word length) accepted
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: usize,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insertion and recording tableaux of a word
    Rs { word: String },
    /// Whether two words have the same insertion tableau
    Plactic { w: String, u: String },
    /// A connected crystal component, or the graph of all words of length m
    Crystal {
        /// Highest weight as comma separated parts, e.g. 2,1
        #[arg(long, conflicts_with_all = ["seed", "word_graph"])]
        shape: Option<String>,
        /// A Yamanouchi word generating the component
        #[arg(long, conflicts_with = "word_graph")]
        seed: Option<String>,
        #[arg(long, requires = "m")]
        word_graph: bool,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short, default_value_t = 3)]
        n: u8,
        /// Emit Graphviz
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// The quantum determinant
    Qdet {
        #[arg(short, default_value_t = 2)]
        n: u8,
    },
    /// A quantum minor with the given row and column sets
    Qminor {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
    },
    /// Expand t_{w1 u1}...t_{wk uk} in bitableaux and compare its q = 0 class
    /// with the insertion prediction
    Straighten {
        rows: String,
        cols: String,
        #[arg(short, default_value_t = 3)]
        n: u8,
    },
    /// Straighten a tabloid such as 15|236 into quantum tableaux
    StraightenFlag {
        tabloid: String,
        #[arg(short, default_value_t = 4)]
        n: u8,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(short)]
        n: Option<u8>,
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Cases drawn by the randomized suites
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

/// Outcome of a command that ran: the text to print and whether a check failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TheoremViolation(_) | Error::Singular(_) | Error::StepBudget(_) | Error::PoleAtZero(_) => 1,
        _ => 2,
    }
}

fn json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn check_n(n: u8, g: &Global) -> Result<()> {
    if n == 0 || n > g.max_n {
        return Err(Error::ResourceLimit(format!("n = {n} outside 1..={} (raise --max-n)", g.max_n)));
    }
    Ok(())
}

fn check_degree(d: usize, g: &Global) -> Result<()> {
    if d > g.max_degree {
        return Err(Error::ResourceLimit(format!("degree {d} exceeds {} (raise --max-degree)", g.max_degree)));
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn render_graph<L: Ord + Clone + std::fmt::Display>(g: &CrystalGraph<L>, dot: bool, as_json: bool) -> String {
    if dot {
        return g.to_dot();
    }
    let labels: Vec<String> = g.vertices.iter().map(ToString::to_string).collect();
    if as_json {
        return json(&serde_json::json!({ "vertices": labels, "edges": g.edges }));
    }
    let mut s = format!("{} vertices, {} edges\n", g.vertices.len(), g.edges.len());
    for (a, i, b) in g.edge_labels() {
        let _ = writeln!(s, "{a} -{i}-> {b}");
    }
    s
}

fn execute(cmd: Command, g: &Global) -> Result<Output> {
    match cmd {
        Command::Rs { word } => {
            let w = Word::parse(&word, MAX_LETTER)?;
            let pair = rs(&w);
            if g.json {
                return Ok(Output::ok(json(&serde_json::json!({ "p": pair.p.rows, "q": pair.q.rows }))));
            }
            Ok(Output::ok(format!("P = {}\nQ = {}\n", pair.p, pair.q)))
        }
        Command::Plactic { w, u } => {
            let (w, u) = (Word::parse(&w, MAX_LETTER)?, Word::parse(&u, MAX_LETTER)?);
            let (p, r) = (insertion_tableau(&w), insertion_tableau(&u));
            let equivalent = p == r;
            if g.json {
                return Ok(Output::ok(json(
                    &serde_json::json!({ "equivalent": equivalent, "p_w": p.rows, "p_u": r.rows }),
                )));
            }
            Ok(Output::ok(format!("{equivalent}\nP({w}) = {p}\nP({u}) = {r}\n")))
        }
        Command::Crystal { shape, seed, word_graph: all_words, m, n, dot } => {
            check_n(n, g)?;
            let text = if all_words {
                let m = m.expect("required by clap");
                check_degree(m, g)?;
                render_graph(&word_graph(n, m)?, dot, g.json)
            } else if let Some(s) = seed {
                let w = Word::parse(&s, n)?;
                check_degree(w.len(), g)?;
                render_graph(&component(&w, n)?, dot, g.json)
            } else {
                let lambda = parse_partition(shape.as_deref().unwrap_or("1"))?;
                check_degree(lambda.size(), g)?;
                render_graph(&component_for_shape(&lambda, n)?, dot, g.json)
            };
            Ok(Output::ok(text))
        }
        Command::Qdet { n } => {
            check_n(n, g)?;
            let d = qdet(n);
            Ok(Output::ok(if g.json { json(&d.to_json()) } else { format!("{d}\n") }))
        }
        Command::Qminor { rows, cols } => {
            let (r, c) = (Word::parse(&rows, MAX_LETTER)?, Word::parse(&cols, MAX_LETTER)?);
            check_degree(r.len(), g)?;
            check_n(r.max_letter().max(c.max_letter()).max(1), g)?;
            let p = qminor(&r.0, &c.0)?;
            Ok(Output::ok(if g.json { json(&p.to_json()) } else { format!("{p}\n") }))
        }
        Command::Straighten { rows, cols, n } => {
            check_n(n, g)?;
            let (w, u) = (Word::parse(&rows, n)?, Word::parse(&cols, n)?);
            check_degree(w.len(), g)?;
            let report = verify_theorem1(&w, &u, n)?;
            let failed = !report.matches;
            if g.json {
                return Ok(Output { text: json(&report), failed });
            }
            let mut s = String::new();
            for term in report.expansion.as_array().into_iter().flatten() {
                let rows_of = |k: &str| -> String {
                    let rows: Vec<Vec<u8>> = serde_json::from_value(term[k].clone()).unwrap_or_default();
                    crate::combinatorics::Tableau { rows }.label()
                };
                let _ = writeln!(s, "{}  ({}|{})", term["coeff"].as_str().unwrap_or(""), rows_of("left"), rows_of("right"));
            }
            let show = |b: &Option<crate::straighten::Bitableau>| b.as_ref().map_or("none".to_string(), |b| b.to_string());
            let _ = writeln!(s, "q=0 class: {}", show(&report.q0_class));
            let _ = writeln!(s, "prediction: {}", show(&report.rs_prediction));
            if let Some(e) = &report.error {
                let _ = writeln!(s, "error: {e}");
            }
            let _ = writeln!(s, "match: {}", report.matches);
            Ok(Output { text: s, failed })
        }
        Command::StraightenFlag { tabloid, n } => {
            check_n(n, g)?;
            let d = Tabloid::parse(&tabloid, n)?;
            check_degree(d.size(), g)?;
            let e = straighten_flag(&d, n)?;
            if g.json {
                return Ok(Output::ok(json(&e.to_json())));
            }
            let mut s = String::new();
            for (t, c) in &e.terms {
                let _ = writeln!(s, "{c}  {t}");
            }
            if e.is_empty() {
                s.push_str("0\n");
            }
            Ok(Output::ok(s))
        }
        Command::Verify { suite, n, k, seed, samples } => {
            if let Some(n) = n {
                check_n(n, g)?;
            }
            if let Some(k) = k {
                check_degree(k, g)?;
            }
            let suite: Suite = suite.parse()?;
            let reports = verify::run(suite, &Config { n, k, seed, samples });
            let failed = reports.iter().any(|r| !r.passed());
            let text = if g.json {
                json(&reports)
            } else {
                reports.iter().map(|r| format!("{r}\n")).collect()
            };
            Ok(Output { text, failed })
        }
    }
}

/// Parse `args` (including the program name), run the command and write its
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let Cli { global, command } = cli;
    let result = match global.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => pool.install(|| execute(command, &global)),
            Err(e) => Err(Error::InvalidInput(e.to_string())),
        },
        None => execute(command, &global),
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            i32::from(o.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["qplactic"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn rs_json() {
        let (code, out) = call(&["rs", "2143512", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["p"], serde_json::json!([[1, 1, 2], [2, 3, 5], [4]]));
        assert_eq!(v["q"], serde_json::json!([[1, 3, 5], [2, 4, 7], [6]]));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["rs", "2x1"]).0, 2);
        assert_eq!(call(&["verify", "nonsense"]).0, 2);
        assert_eq!(call(&["qdet", "-n", "9"]).0, 2);
        assert_eq!(call(&["straighten", "1234567", "1234567", "-n", "4"]).0, 2);
    }

    #[test]
    fn crystal_counts() {
        let (code, out) = call(&["crystal", "--shape", "2,1", "-n", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("8 vertices, 8 edges\n"), "{out}");
        let (_, out) = call(&["crystal", "--word-graph", "-n", "2", "-m", "2"]);
        assert!(out.starts_with("4 vertices, 2 edges\n"));
        let (_, out) = call(&["crystal", "--shape", "2,2", "-n", "4", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 20);
    }

    #[test]
    fn straighten_examples() {
        let (code, out) = call(&["straighten", "213", "312", "-n", "3", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["expansion"].as_array().unwrap().len(), 6);
        assert_eq!(v["match"], true);
        let (code, out) = call(&["straighten", "12", "21", "-n", "2", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["q0_class"].is_null());
    }

    #[test]
    fn verify_small() {
        let (code, out) = call(&["verify", "centrality", "-n", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("PASS centrality"));
    }

    #[test]
    fn output_is_deterministic() {
        let a = call(&["straighten-flag", "15|236", "-n", "6", "--max-n", "6"]);
        let b = call(&["straighten-flag", "15|236", "-n", "6", "--max-n", "6"]);
        assert_eq!(a, b);
        assert_eq!(a.1.lines().count(), 5);
    }
}
