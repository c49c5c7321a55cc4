//! The claim registry and its runner.

mod collision;
mod dc;
mod qqt;
mod sorkin;

use hoi_core::collision::TritBitFunction;
use hoi_core::densitycube::DensityCubeError;
use hoi_core::qqt::QqtError;
use hoi_core::sampling::{seeded_rng, SampleRng};
use hoi_core::sorkin::SorkinError;
use hoi_core::{NumericsError, C64};
use rayon::prelude::*;
use thiserror::Error;

use crate::report::{ClaimReport, Provenance, Status, Value};
use crate::whitelist::Whitelist;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    All,
    Sorkin,
    Dc,
    Collision,
    Qqt,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// How a claim's tolerance is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    /// The run-wide `--tol`.
    Default,
    Fixed(f64),
    /// Boolean and integer claims.
    Exact,
}

/// Per-claim evaluation context.
pub struct Ctx {
    pub rng: SampleRng,
    pub tol: f64,
}

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Sorkin(#[from] SorkinError),
    #[error(transparent)]
    DensityCube(#[from] DensityCubeError),
    #[error(transparent)]
    Qqt(#[from] QqtError),
}

/// What a claim produced and whether it met its expectation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
}

impl Outcome {
    pub fn close(computed: f64, expected: f64, tol: f64) -> Self {
        Self {
            computed: Value::Real(computed),
            expected: Value::Real(expected),
            pass: (computed - expected).abs() <= tol,
        }
    }

    pub fn flag(computed: bool, expected: bool) -> Self {
        Self {
            computed: Value::Bool(computed),
            expected: Value::Bool(expected),
            pass: computed == expected,
        }
    }

    pub fn count(computed: usize, expected: usize) -> Self {
        Self {
            computed: Value::Count(computed as u64),
            expected: Value::Count(expected as u64),
            pass: computed == expected,
        }
    }

    /// `computed >= bound - tol`.
    pub fn at_least(computed: f64, bound: f64, tol: f64) -> Self {
        Self {
            computed: Value::Real(computed),
            expected: Value::Text(format!(">= {bound}")),
            pass: computed >= bound - tol,
        }
    }

    /// `computed > bound`, strictly.
    pub fn above(computed: f64, bound: f64) -> Self {
        Self {
            computed: Value::Real(computed),
            expected: Value::Text(format!("> {bound}")),
            pass: computed > bound,
        }
    }

    /// Entrywise, `max |computed_i - expected_i| <= tol`.
    pub fn vector(computed: &[C64], expected: &[C64], tol: f64) -> Self {
        let pairs = |zs: &[C64]| Value::Complex(zs.iter().map(|z| [z.re, z.im]).collect());
        let pass = computed.len() == expected.len()
            && computed.iter().zip(expected).all(|(a, b)| (a - b).norm() <= tol);
        Self {
            computed: pairs(computed),
            expected: pairs(expected),
            pass,
        }
    }
}

pub type Eval = fn(&mut Ctx) -> Result<Outcome, ClaimError>;

pub struct Claim {
    pub id: &'static str,
    pub suite: Suite,
    pub description: &'static str,
    pub location: &'static str,
    pub provenance: Provenance,
    pub tolerance: Tolerance,
    pub eval: Eval,
}

/// Every claim, sorted by id.
pub fn registry() -> Vec<Claim> {
    let mut all: Vec<Claim> = [sorkin::claims(), dc::claims(), collision::claims(), qqt::claims()]
        .into_iter()
        .flatten()
        .collect();
    all.sort_by_key(|c| c.id);
    all
}

pub fn find(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}

/// Seed for one claim: FNV-1a over the run seed and the claim id.
pub fn claim_seed(seed: u64, id: &str) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    seed.to_le_bytes()
        .iter()
        .chain(id.as_bytes())
        .fold(OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(PRIME))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub seed: u64,
    pub tol: f64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            tol: DEFAULT_TOL,
        }
    }
}

pub fn run_claim(claim: &Claim, opts: RunOptions, whitelist: &Whitelist) -> ClaimReport {
    let tol = match claim.tolerance {
        Tolerance::Default => opts.tol,
        Tolerance::Fixed(t) => t,
        Tolerance::Exact => 0.0,
    };
    let mut ctx = Ctx {
        rng: seeded_rng(claim_seed(opts.seed, claim.id)),
        tol,
    };
    let (computed, expected, pass) = match (claim.eval)(&mut ctx) {
        Ok(o) => (o.computed, o.expected, o.pass),
        Err(e) => (Value::Text(format!("error: {e}")), Value::Text("no error".into()), false),
    };
    let status = match (pass, whitelist.contains(claim.id)) {
        (true, _) => Status::Pass,
        (false, true) => Status::Discrepancy,
        (false, false) => Status::Fail,
    };
    ClaimReport {
        id: claim.id.to_string(),
        description: claim.description.to_string(),
        paper_location: claim.location.to_string(),
        computed,
        expected,
        provenance: claim.provenance,
        tolerance: tol,
        status,
    }
}

/// Runs every claim of `suite` in parallel; the result is sorted by id.
pub fn run_suite(suite: Suite, opts: RunOptions, whitelist: &Whitelist) -> Vec<ClaimReport> {
    let claims: Vec<Claim> = registry().into_iter().filter(|c| suite.includes(c.suite)).collect();
    let mut reports: Vec<ClaimReport> =
        claims.par_iter().map(|c| run_claim(c, opts, whitelist)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[ClaimReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

fn non_constant_functions() -> impl Iterator<Item = TritBitFunction> {
    TritBitFunction::all().filter(|f| !f.all_equal())
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_prefixed() {
        let all = registry();
        let ids: HashSet<_> = all.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), all.len());
        assert!(all.len() >= 25);
        for c in &all {
            let prefix = match c.suite {
                Suite::Sorkin => "SK-",
                Suite::Dc => "DC-",
                Suite::Collision => "COLL-",
                Suite::Qqt => "QQT-",
                Suite::All => unreachable!(),
            };
            assert!(c.id.starts_with(prefix), "{}", c.id);
        }
    }

    #[test]
    fn claim_seeds_depend_on_both_inputs() {
        assert_ne!(claim_seed(42, "DC-CV"), claim_seed(42, "DC-ORTHO"));
        assert_ne!(claim_seed(42, "DC-CV"), claim_seed(43, "DC-CV"));
        assert_eq!(claim_seed(7, "QQT-I3"), claim_seed(7, "QQT-I3"));
    }

    #[test]
    fn whitelisted_failures_become_discrepancies() {
        let claim = find("COLL-ERR").unwrap();
        let opts = RunOptions::default();
        assert_eq!(run_claim(&claim, opts, &Whitelist::builtin()).status, Status::Discrepancy);
        assert_eq!(run_claim(&claim, opts, &Whitelist::default()).status, Status::Fail);
    }

    #[test]
    fn outcome_helpers() {
        assert!(Outcome::close(1.0, 1.0 + 1e-13, 1e-12).pass);
        assert!(!Outcome::close(1.0, 1.1, 1e-12).pass);
        assert!(Outcome::at_least(-1e-13, 0.0, 1e-12).pass);
        assert!(!Outcome::above(0.05, 0.05).pass);
        assert!(Outcome::count(11, 11).pass);
    }
}
