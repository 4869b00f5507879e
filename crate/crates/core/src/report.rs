//! Plain-data reports produced by the coherence suites.
//!
//! Every checker enumerates its full support set and records each violated
//! instance as a [`Failure`] carrying the witness tuple and both sides of
//! the failed equation, so a failure can be reproduced from the report
//! alone. An empty failure list is the definition of a pass.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclotomic::CycNumber;

/// One violated axiom instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    /// Identifier of the axiom or relation that failed, e.g. `"hexagon-B1"`.
    pub axiom: String,
    /// The witness tuple, rendered as integers (group elements, indices,
    /// braid widths — whatever the suite enumerates).
    pub witness: Vec<i64>,
    /// Left-hand scalar of the failed equation, if scalar-valued.
    pub lhs: Option<CycNumber>,
    /// Right-hand scalar of the failed equation, if scalar-valued.
    pub rhs: Option<CycNumber>,
    /// Free-form detail for non-scalar failures (normal forms, dimensions).
    pub detail: String,
}

/// Outcome of one coherence suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    /// Number of instances enumerated (passing and failing).
    pub instances: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one checked instance; a `None` verdict means pass.
    pub fn record(&mut self, failure: Option<Failure>) {
        self.instances += 1;
        if let Some(f) = failure {
            self.failures.push(f);
        }
    }

    /// Convenience for scalar equations: checks `lhs == rhs` and records a
    /// failure with the witness otherwise.
    pub fn check_eq(&mut self, axiom: &str, witness: &[i64], lhs: &CycNumber, rhs: &CycNumber) {
        self.instances += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                axiom: String::from(axiom),
                witness: witness.to_vec(),
                lhs: Some(lhs.clone()),
                rhs: Some(rhs.clone()),
                detail: String::new(),
            });
        }
    }

    /// Merges another suite into this one.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}
