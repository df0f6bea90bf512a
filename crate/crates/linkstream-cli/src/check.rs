//! Randomized cross-checks of the fast enumerators against the
//! brute-force oracles.
//!
//! Each trial derives its own seed from the base seed and the trial index,
//! samples instance parameters from it, generates a random stream, and
//! compares the fast result set against the oracle's. Failures carry the
//! trial seed so an instance can be regenerated exactly.

use std::collections::BTreeSet;

use linkstream::io::{generate_random_duration_stream, generate_random_instant_stream};
use linkstream::oracle::{oracle_maximal_cliques, oracle_maximal_delta_cliques, OracleLimits};
use linkstream::{
    enumerate_maximal_cliques, enumerate_maximal_delta_cliques, transform, Clique, Delta,
    InstantStream, Interval, LinkStream, Result, Time,
};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Trial count, instance size bounds and base seed for a check run.
#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub trials: u64,
    pub max_nodes: usize,
    pub max_links: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { trials: 1000, max_nodes: 6, max_links: 30, seed: 42 }
    }
}

/// One failed trial: the derived seed regenerates the instance.
#[derive(Debug, Clone)]
pub struct Failure {
    pub trial: u64,
    pub seed: u64,
    pub detail: String,
}

/// The seed trial number `trial` runs with; exposed so callers can
/// regenerate individual trial instances.
pub fn trial_seed(cfg: &CheckConfig, trial: u64) -> u64 {
    cfg.seed.wrapping_add(trial)
}

/// The Δ values an instant-stream trial covers: small fixed values plus
/// the full horizon span, deduplicated and capped at the span.
pub fn delta_grid(span: Time) -> BTreeSet<Time> {
    [0, 1, 2, 5, span].into_iter().filter(|&d| d <= span).collect()
}

fn mismatch(fast: &BTreeSet<Clique>, slow: &BTreeSet<Clique>) -> Option<String> {
    if fast == slow {
        return None;
    }
    let missing: Vec<String> = slow.difference(fast).map(ToString::to_string).collect();
    let spurious: Vec<String> = fast.difference(slow).map(ToString::to_string).collect();
    Some(format!(
        "fast set has {} cliques, oracle {}; missing [{}]; spurious [{}]",
        fast.len(),
        slow.len(),
        missing.join(", "),
        spurious.join(", ")
    ))
}

/// Run duration-stream trials. `observe` sees every generated stream with
/// the fast enumerator's results, letting callers layer extra assertions
/// over the same instances.
pub fn run_duration_check(
    cfg: &CheckConfig,
    mut observe: impl FnMut(&LinkStream, &[Clique]),
) -> Result<Vec<Failure>> {
    let limits = OracleLimits { max_nodes: cfg.max_nodes, max_links: cfg.max_links };
    let mut failures = Vec::new();
    for trial in 0..cfg.trials {
        let seed = trial_seed(cfg, trial);
        let stream = random_duration_instance(cfg, seed)?;
        let fast = enumerate_maximal_cliques(&stream);
        observe(&stream, &fast);
        let slow = oracle_maximal_cliques(&stream, limits)?;
        if let Some(detail) =
            mismatch(&fast.iter().cloned().collect(), &slow.into_iter().collect())
        {
            failures.push(Failure { trial, seed, detail });
        }
    }
    Ok(failures)
}

/// Run instant-stream trials over the Δ grid {0, 1, 2, 5, span}. `observe`
/// sees each `(stream, Δ, derived stream, Δ-cliques)` combination.
pub fn run_delta_check(
    cfg: &CheckConfig,
    mut observe: impl FnMut(&InstantStream, Delta, &LinkStream, &[Clique]),
) -> Result<Vec<Failure>> {
    let limits = OracleLimits { max_nodes: cfg.max_nodes, max_links: cfg.max_links };
    let mut failures = Vec::new();
    for trial in 0..cfg.trials {
        let seed = trial_seed(cfg, trial);
        let instant = random_instant_instance(cfg, seed)?;
        for d in delta_grid(instant.horizon().length()) {
            let delta = Delta::new(d)?;
            let derived = transform(&instant, delta)?;
            let fast = enumerate_maximal_delta_cliques(&instant, delta)?;
            observe(&instant, delta, &derived, &fast);
            let slow = oracle_maximal_delta_cliques(&instant, delta, limits)?;
            if let Some(detail) =
                mismatch(&fast.iter().cloned().collect(), &slow.into_iter().collect())
            {
                failures.push(Failure {
                    trial,
                    seed,
                    detail: format!("delta {d}: {detail}"),
                });
            }
        }
    }
    Ok(failures)
}

/// The instance a duration trial with this seed runs on.
pub fn random_duration_instance(cfg: &CheckConfig, seed: u64) -> Result<LinkStream> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=cfg.max_nodes);
    let m = rng.random_range(1..=cfg.max_links);
    let omega = rng.random_range(0..=100);
    generate_random_duration_stream(n, m, Interval::new(0, omega).unwrap(), rng.next_u64())
}

/// The instance a delta trial with this seed runs on.
pub fn random_instant_instance(cfg: &CheckConfig, seed: u64) -> Result<InstantStream> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=cfg.max_nodes);
    let m = rng.random_range(1..=cfg.max_links);
    let omega = rng.random_range(0..=50);
    generate_random_instant_stream(n, m, Interval::new(0, omega).unwrap(), rng.next_u64())
}
