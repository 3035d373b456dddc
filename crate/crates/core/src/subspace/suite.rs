use serde::Serialize;

use super::laws::{laws, Suite};
use super::sample::{law_rng, Sampler};
use super::space::{MAX_AMBIENT, MIN_AMBIENT};
use crate::error::{Error, Result};

pub const SUBSPACE_WAIVERS: [&str; 2] = [
    "cardinality axiom waived: the rational model is countable",
    "scalars are rationals: the dot product is anisotropic, so U and its orthocomplement meet in 0",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub suite: Suite,
    pub trials: usize,
    pub passed: usize,
    pub counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub ambient_dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub suite: Suite,
    pub all_pass: bool,
    pub laws: Vec<LawReport>,
    pub waivers: Vec<String>,
}

/// Runs every selected law for `trials` samples in `Q^n`. Each law draws
/// from its own stream (see [`law_rng`]), so reports are reproducible.
pub fn run_property_suite(n: usize, trials: usize, seed: u64, suite: Suite) -> Result<SuiteReport> {
    if !(MIN_AMBIENT..=MAX_AMBIENT).contains(&n) {
        return Err(Error::AmbientOutOfRange(n));
    }
    let mut reports = Vec::new();
    for law in laws().iter().filter(|l| suite.selects(l.suite())) {
        let mut sampler = Sampler::new(n, law_rng(seed, law.name()));
        let mut passed = 0;
        let mut counterexample = None;
        for _ in 0..trials {
            match law.check(&mut sampler) {
                Ok(()) => passed += 1,
                Err(w) => {
                    counterexample.get_or_insert(w);
                }
            }
        }
        reports.push(LawReport {
            law: law.name().to_string(),
            suite: law.suite(),
            trials,
            passed,
            counterexample,
        });
    }
    Ok(SuiteReport {
        ambient_dim: n,
        trials,
        seed,
        suite,
        all_pass: reports.iter().all(|r| r.passed == r.trials),
        laws: reports,
        waivers: SUBSPACE_WAIVERS.iter().map(|s| s.to_string()).collect(),
    })
}
