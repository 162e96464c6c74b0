//! Named verification suites and their reports.
//!
//! Each suite runs a battery of exact checks and records one [`Check`] per
//! identity instance. A check that runs into a size cap or an exhausted
//! isomorphism budget is reported as indeterminate rather than failed.

mod oracle;
mod pool;
mod suites;

use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

pub use oracle::commuting_tuple_sum;
pub use pool::{pool_groups, pool_gsets};

use crate::class_ring::ClassRing;
use crate::error::{Error, Result};
use crate::series::ExponentSign;

pub const SUITES: &[&str] = &[
    "axioms",
    "alpha_zeta",
    "macdonald",
    "wreath_structure",
    "induction",
    "homomorphism",
    "oracle",
    "all",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub parameters: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// 0 when every check passed, 1 on any failure, 3 when the only problems
    /// are indeterminate checks.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::Indeterminate) {
            3
        } else {
            0
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks whose id starts with `prefix`.
    pub fn checks_with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id.starts_with(prefix))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "checks": self.checks,
            "passed": self.passed(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Indeterminate => "INDETERMINATE",
            };
            let _ = writeln!(out, "{tag} {}: {}", c.id, c.statement);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "suite {}: {} passed, {} failed, {} indeterminate",
            self.suite,
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Indeterminate)
        );
        out
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides the per-check truncation orders when set.
    pub trunc: Option<usize>,
    /// Largest wreath or product group a check may build.
    pub max_order: usize,
    pub seed: u64,
    pub sign: ExponentSign,
    /// Number of random cases in randomized batteries.
    pub cases: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            trunc: None,
            max_order: 1500,
            seed: 0,
            sign: ExponentSign::Negative,
            cases: 100,
        }
    }
}

/// Result of a single check body.
pub(crate) enum Outcome {
    Pass,
    Fail(Value),
    Indeterminate(Value),
}

impl Outcome {
    pub(crate) fn expect(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }
}

pub(crate) struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    pub(crate) fn record(
        &mut self,
        id: impl Into<String>,
        statement: impl Into<String>,
        parameters: Value,
        body: impl FnOnce() -> Result<Outcome>,
    ) {
        let (status, witness) = match body() {
            Ok(Outcome::Pass) => (Status::Pass, None),
            Ok(Outcome::Fail(w)) => (Status::Fail, Some(w)),
            Ok(Outcome::Indeterminate(w)) => (Status::Indeterminate, Some(w)),
            Err(e) if e.is_resource_limit() => (Status::Indeterminate, Some(json!({ "error": e.to_string() }))),
            Err(e) => (Status::Fail, Some(json!({ "error": e.to_string() }))),
        };
        self.checks.push(Check {
            id: id.into(),
            statement: statement.into(),
            parameters,
            status,
            witness,
        });
    }
}

/// Runs a named suite with a fresh class ring.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    run_suite_with(name, opts, &ClassRing::default())
}

/// Runs a named suite against an existing class ring, so that class ids are
/// shared with other computations.
pub fn run_suite_with(name: &str, opts: &SuiteOptions, ring: &ClassRing) -> Result<VerificationReport> {
    let mut rec = Recorder::new();
    let selected: Vec<&str> = match name {
        "all" => SUITES.iter().copied().filter(|&s| s != "all").collect(),
        s if SUITES.contains(&s) => vec![s],
        other => return Err(Error::Parse(format!("unknown suite '{other}'; expected one of {}", SUITES.join(", ")))),
    };
    for s in selected {
        match s {
            "axioms" => suites::axioms(opts, &mut rec),
            "alpha_zeta" => suites::alpha_zeta(opts, ring, &mut rec),
            "macdonald" => suites::macdonald(opts, ring, &mut rec),
            "wreath_structure" => suites::wreath_structure(opts, &mut rec),
            "induction" => suites::induction(opts, ring, &mut rec),
            "homomorphism" => suites::homomorphism(opts, ring, &mut rec),
            "oracle" => suites::oracle(opts, ring, &mut rec),
            _ => unreachable!(),
        }
    }
    let mut checks = rec.checks;
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerificationReport {
        suite: name.to_string(),
        checks,
    })
}
