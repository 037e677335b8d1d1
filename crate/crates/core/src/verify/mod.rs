//! Verification suites: exhaustive or seeded randomized checks of the
//! identities linking straightening, crystals and insertion.

mod actions;
mod algebra;
mod crystal;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use actions::{centrality, module_relations, rewriting};
pub use algebra::{basis, bimodule, bsigma, corollary, flag, theorem1, bimodule_basis};
pub use crystal::{crystal_properties, figures, crystal_21_edges};

/// Outcome of one suite. Output depends only on the configuration.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one case.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    /// Record a case whose check returned an error.
    pub fn check_result<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) {
        self.cases += 1;
        if let Err(e) = r {
            self.failures.push(format!("{}: {e}", context()));
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.suite, self.cases)?;
        if !self.passed() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        f.write_str(")")?;
        for fail in self.failures.iter().take(10) {
            write!(f, "\n  {fail}")?;
        }
        if self.failures.len() > 10 {
            write!(f, "\n  ... {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

/// Size parameters shared by the suites; `None` picks each suite's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub n: Option<u8>,
    pub k: Option<usize>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { n: None, k: None, seed: 1, samples: 1000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Corollary,
    Flag,
    BSigma,
    Bimodule,
    Centrality,
    ModuleRelations,
    Figures,
    Crystal,
    Basis,
    Rewriting,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 12] = [
        "theorem1",
        "corollary",
        "flag",
        "bsigma",
        "bimodule",
        "centrality",
        "module-relations",
        "figures",
        "crystal",
        "basis",
        "rewriting",
        "all",
    ];

    const EACH: [Suite; 11] = [
        Suite::Figures,
        Suite::Crystal,
        Suite::Rewriting,
        Suite::Centrality,
        Suite::ModuleRelations,
        Suite::Basis,
        Suite::Theorem1,
        Suite::Corollary,
        Suite::Flag,
        Suite::BSigma,
        Suite::Bimodule,
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem1" => Suite::Theorem1,
            "corollary" => Suite::Corollary,
            "flag" => Suite::Flag,
            "bsigma" => Suite::BSigma,
            "bimodule" => Suite::Bimodule,
            "centrality" => Suite::Centrality,
            "module-relations" => Suite::ModuleRelations,
            "figures" => Suite::Figures,
            "crystal" => Suite::Crystal,
            "basis" => Suite::Basis,
            "rewriting" => Suite::Rewriting,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

/// Run a suite (or all of them) with the given sizes.
pub fn run(suite: Suite, cfg: &Config) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run(s, cfg)).collect(),
        Suite::Theorem1 => {
            let n = cfg.n.unwrap_or(2);
            vec![theorem1(n, cfg.k.unwrap_or(if n >= 3 { 3 } else { 4 }))]
        }
        Suite::Corollary => vec![corollary(cfg.n.unwrap_or(3), cfg.k.unwrap_or(3))],
        Suite::Flag => vec![flag(cfg.n.unwrap_or(4), 3, cfg.k.unwrap_or(6))],
        Suite::BSigma => vec![bsigma(cfg.n.unwrap_or(3))],
        Suite::Bimodule => vec![bimodule(cfg.n.unwrap_or(3), cfg.seed, cfg.samples)],
        Suite::Centrality => vec![centrality(cfg.n.unwrap_or(3))],
        Suite::ModuleRelations => vec![module_relations(cfg.n.unwrap_or(3), cfg.seed, cfg.samples)],
        Suite::Figures => vec![figures()],
        Suite::Crystal => vec![crystal_properties(cfg.n.unwrap_or(3), cfg.k.unwrap_or(5), cfg.seed, cfg.samples)],
        Suite::Basis => vec![basis(cfg.n.unwrap_or(3), cfg.k.unwrap_or(3))],
        Suite::Rewriting => vec![rewriting(cfg.n.unwrap_or(3), cfg.k.unwrap_or(5), cfg.seed, cfg.samples)],
    }
}
