//! Named verification suites.  Each one sweeps a family of exact identities
//! and reports how many checks ran and which failed.

mod affine;
mod parabolic;
mod ring;

use serde_json::{json, Value};

use crate::error::Result;

/// Knobs shared by all suites.  Unset fields fall back to each suite's defaults.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub types: Option<Vec<String>>,
    pub qdeg: Option<i64>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { types: None, qdeg: None, seed: 7 }
    }
}

impl SuiteConfig {
    fn types_or(&self, default: &[&str]) -> Vec<String> {
        self.types.clone().unwrap_or_else(|| default.iter().map(|s| s.to_string()).collect())
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub suite: &'static str,
    pub criterion: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "criterion": self.criterion,
            "passed": self.passed(),
            "checks": self.checks,
            "failures": self.failures.iter().take(20).collect::<Vec<_>>(),
            "failure_count": self.failures.len(),
        })
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn criterion(&self) -> usize;
    fn summary(&self) -> &'static str;
    fn run(&self, cfg: &SuiteConfig) -> Outcome;
}

/// Tally of checks; errors from the library count as failures.
pub(crate) struct Checker {
    checks: usize,
    failures: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn ok<T>(&mut self, ctx: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn finish(self, suite: &dyn Suite) -> Outcome {
        Outcome { suite: suite.name(), criterion: suite.criterion(), checks: self.checks, failures: self.failures }
    }
}

/// All suites, in criterion order.
pub fn registry() -> Vec<Box<dyn Suite>> {
    let mut v: Vec<Box<dyn Suite>> = vec![
        Box::new(parabolic::Examples),
        Box::new(affine::PetersonBorel),
        Box::new(affine::Compare),
        Box::new(affine::Centrality),
        Box::new(affine::Operators),
        Box::new(affine::Positivity),
        Box::new(ring::Chevalley),
        Box::new(parabolic::Parabolic),
        Box::new(parabolic::HighestRoot),
        Box::new(ring::Tilted),
        Box::new(parabolic::LapointeMorse),
    ];
    v.sort_by_key(|s| s.criterion());
    v
}

pub fn find(name: &str) -> Option<Box<dyn Suite>> {
    registry().into_iter().find(|s| s.name() == name)
}
