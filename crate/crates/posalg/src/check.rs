//! Seeded randomized property checks: generate instances satisfying a
//! theorem's hypotheses, assert its conclusion exactly, and report the
//! first counterexample if any. The theorems are proved facts, so a
//! failure means an implementation bug; a trial whose generator runs out
//! of budget is reported as exhausted, not as a failure.

use std::str::FromStr;

use num_traits::Zero;

use serde_json::json;

use crate::gen;
use crate::idempot::{check_key_identity, nine_word_span};
use crate::io::mat_to_json;
use crate::report::Report;
use crate::rng::SplitMix64;
use crate::simplex::lp_max_homogeneous;
use crate::spanalg::is_triangularizable;
use crate::{rat, Error, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// Two positive matrices with nonnegative commutator generate a
    /// triangularizable algebra of dimension at most n(n+1)/2.
    ThmOne,
    /// Same bound for a positive matrix with distinct eigenvalues against
    /// several super-commutant partners.
    ThmFinitely,
    /// Comparable positive idempotent pairs: the nine-word span and the
    /// folding identities.
    ThmMain,
    /// The squared-commutator identity for a positive idempotent against
    /// a comparable positive matrix.
    ThmKey,
    /// Finite-dimensional zero lemma: no zero rows and BA = 0 with B >= 0
    /// force B = 0.
    LemmaZeroFd,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ThmOne => "thm_one",
            TheoremId::ThmFinitely => "thm_finitely",
            TheoremId::ThmMain => "thm_main",
            TheoremId::ThmKey => "thm_key",
            TheoremId::LemmaZeroFd => "lemma_zero_fd",
        }
    }

    /// Largest instance size the harness accepts for this theorem.
    fn size_cap(self) -> usize {
        match self {
            // Exact LPs drive the super-commutant sampling.
            TheoremId::ThmFinitely => 8,
            _ => 12,
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "thm_one" => Ok(TheoremId::ThmOne),
            "thm_finitely" => Ok(TheoremId::ThmFinitely),
            "thm_main" => Ok(TheoremId::ThmMain),
            "thm_key" => Ok(TheoremId::ThmKey),
            "lemma_zero_fd" => Ok(TheoremId::LemmaZeroFd),
            other => Err(Error::domain(format!(
                "unknown theorem '{other}'; expected one of thm_one, thm_finitely, thm_main, thm_key, lemma_zero_fd"
            ))),
        }
    }
}

/// Configuration of one randomized run; the same seed always reproduces
/// the identical instance stream.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub theorem: TheoremId,
    pub trials: u64,
    pub seed: u64,
    pub n_lo: usize,
    pub n_hi: usize,
}

impl CheckConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.trials < 1 {
            return Err(Error::domain("trials must be at least 1"));
        }
        if self.n_lo < 2 || self.n_lo > self.n_hi {
            return Err(Error::domain("need 2 <= n_lo <= n_hi"));
        }
        let cap = self.theorem.size_cap();
        if self.n_hi > cap {
            return Err(Error::domain(format!(
                "instance size {} exceeds the cap {} for {}",
                self.n_hi,
                cap,
                self.theorem.as_str()
            )));
        }
        Ok(())
    }
}

/// Per-trial rejection budget; `POSALG_TRIAL_BUDGET` overrides.
fn trial_budget() -> usize {
    std::env::var("POSALG_TRIAL_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200)
}

enum TrialOutcome {
    Pass,
    Exhausted,
    Counterexample(String),
}

/// Runs the configured suite and aggregates pass/fail/exhausted counts in
/// trial order.
pub fn random_check(cfg: &CheckConfig) -> Result<Report, Error> {
    cfg.validate()?;
    let budget = trial_budget();
    let mut rng = SplitMix64::new(cfg.seed);
    let mut passed = 0u64;
    let mut exhausted = 0u64;
    let mut failed = 0u64;
    let mut witness: Option<String> = None;

    for _ in 0..cfg.trials {
        let n = rng.range_usize(cfg.n_lo, cfg.n_hi);
        let outcome = run_trial(cfg.theorem, &mut rng, n, budget)?;
        match outcome {
            TrialOutcome::Pass => passed += 1,
            TrialOutcome::Exhausted => exhausted += 1,
            TrialOutcome::Counterexample(w) => {
                failed += 1;
                if witness.is_none() {
                    witness = Some(w);
                }
            }
        }
    }

    let mut report = Report::new("random_check");
    report.set("theorem", cfg.theorem.as_str());
    report.set("trials", cfg.trials);
    report.set("passed", passed);
    report.set("failed", failed);
    report.set("generation_exhausted", exhausted);
    report.set("seed", cfg.seed);
    report.set("n_lo", cfg.n_lo as u64);
    report.set("n_hi", cfg.n_hi as u64);
    if failed > 0 {
        report.fail(witness.unwrap_or_default());
    }
    Ok(report)
}

fn run_trial(
    theorem: TheoremId,
    rng: &mut SplitMix64,
    n: usize,
    budget: usize,
) -> Result<TrialOutcome, Error> {
    match theorem {
        TheoremId::ThmOne => {
            let (a, b) = gen::positive_commutator_pair(rng, n);
            if !a.commutator(&b)?.is_nonnegative() {
                return Err(Error::internal("generator broke the commutator hypothesis"));
            }
            let report = is_triangularizable(n, &[a.clone(), b.clone()])?;
            let bound = n * (n + 1) / 2;
            if report.pass && report.dim.is_some_and(|d| d <= bound) {
                Ok(TrialOutcome::Pass)
            } else {
                Ok(TrialOutcome::Counterexample(
                    json!({"A": mat_to_json(&a), "B": mat_to_json(&b), "dim": report.dim})
                        .to_string(),
                ))
            }
        }
        TheoremId::ThmFinitely => {
            let Some(a) = gen::distinct_eigenvalue_matrix(rng, n, budget) else {
                return Ok(TrialOutcome::Exhausted);
            };
            let k = 1 + rng.below(3) as usize;
            let partners = gen::supercone_members(rng, &a, k);
            for b in &partners {
                if !a.commutator(b)?.is_nonnegative() {
                    return Err(Error::internal(
                        "cone member broke the commutator hypothesis",
                    ));
                }
            }
            let mut gens = vec![a.clone()];
            gens.extend(partners.iter().cloned());
            let report = is_triangularizable(n, &gens)?;
            let bound = n * (n + 1) / 2;
            if report.pass && report.dim.is_some_and(|d| d <= bound) {
                Ok(TrialOutcome::Pass)
            } else {
                Ok(TrialOutcome::Counterexample(
                    json!({"A": mat_to_json(&a), "k": k, "dim": report.dim}).to_string(),
                ))
            }
        }
        TheoremId::ThmMain => {
            let Some(pair) = gen::comparable_idempotent_pair(rng, n, budget) else {
                return Ok(TrialOutcome::Exhausted);
            };
            let pair = gen::conjugate_pair(rng, &pair);
            let report = nine_word_span(&pair)?;
            if report.pass {
                Ok(TrialOutcome::Pass)
            } else {
                Ok(TrialOutcome::Counterexample(
                    json!({
                        "E": mat_to_json(&pair.e),
                        "F": mat_to_json(&pair.f),
                        "witness": report.witness,
                    })
                    .to_string(),
                ))
            }
        }
        TheoremId::ThmKey => {
            let Some((e, a)) = gen::key_identity_instance(rng, n, budget) else {
                return Ok(TrialOutcome::Exhausted);
            };
            let report = check_key_identity(&e, &a)?;
            if report.pass {
                Ok(TrialOutcome::Pass)
            } else {
                Ok(TrialOutcome::Counterexample(
                    json!({
                        "E": mat_to_json(&e),
                        "A": mat_to_json(&a),
                        "witness": report.witness,
                    })
                    .to_string(),
                ))
            }
        }
        TheoremId::LemmaZeroFd => {
            let a = gen::no_zero_row_matrix(rng, n);
            // Search for a counterexample row vector: b >= 0, b^T A = 0,
            // maximize the coordinate sum capped at 1. A positive optimum
            // would scale into a nonzero B >= 0 with BA = 0.
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(2 * n);
            for j in 0..n {
                let col: Vec<Rat> = (0..n).map(|i| a.at(i, j).clone()).collect();
                rows.push(col.clone());
                rows.push(col.into_iter().map(|x| -x).collect());
            }
            let objective = vec![rat(1); n];
            let sol = lp_max_homogeneous(n, &rows, &objective, &rat(1))?;
            if sol.value.is_zero() {
                Ok(TrialOutcome::Pass)
            } else {
                Ok(TrialOutcome::Counterexample(
                    json!({"A": mat_to_json(&a), "b": sol.point.iter().map(|x| x.to_string()).collect::<Vec<_>>()})
                        .to_string(),
                ))
            }
        }
    }
}
