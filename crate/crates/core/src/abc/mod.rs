//! Partitions, explicit constants and verifiers for the ABC inequalities.

mod constants;
mod partition;
mod verify;

pub use constants::{
    a_bar_cap, abc_constants, analyze_block, b_lower_bound, coprime_level, span_dimension,
    step_constant, subsets_coprime, AbcConstants, BlockAnalysis,
};
pub use partition::{
    bm_partition, is_sum_zero, partition_is_valid, split_vanishing_subsums, subsets_by_size,
    vanishing_proper_subsums, BmPartition, MAX_FUNCTIONS,
};
pub use verify::{
    default_radii, verify_abc_first, verify_abc_first_at, verify_abc_second, verify_abc_second_at,
    verify_basic_abc, verify_basic_abc_at, verify_corollaries, verify_corollaries_at,
};

use crate::coeffs::Rational;
use crate::nevanlinna::PiecewiseLinear;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    HypothesisViolated,
    /// An inequality or ledger entry failed although every hypothesis held.
    Violated,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::HypothesisViolated => "HYPOTHESIS_VIOLATED",
            Verdict::Violated => "VIOLATED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// What made it fail, or a short justification.
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, witness: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            witness,
        }
    }
}

/// `lhs <= rhs` on polynomial degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
}

impl DegreeCheck {
    pub fn new(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        DegreeCheck {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn slack(&self) -> i64 {
        self.rhs - self.lhs
    }

    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// `rho -> LHS(rho) - RHS(rho)` for an inequality that holds up to `O(1)`:
/// the inequality is certified when this is eventually non-increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Margin {
    pub name: String,
    pub profile: PiecewiseLinear,
    pub samples: Vec<(Rational, Rational)>,
}

impl Margin {
    pub fn new(name: impl Into<String>, profile: PiecewiseLinear, radii: &[Rational]) -> Self {
        let samples = radii.iter().map(|r| (r.clone(), profile.eval(r))).collect();
        Margin {
            name: name.into(),
            profile,
            samples,
        }
    }

    pub fn asymptotic_slope(&self) -> i64 {
        self.profile.final_slope()
    }

    /// The final slope is at most 0 and the samples past the last
    /// breakpoint never increase.
    pub fn eventually_non_increasing(&self) -> bool {
        let tail_start = self.profile.breakpoints().last().cloned();
        let tail: Vec<&(Rational, Rational)> = self
            .samples
            .iter()
            .filter(|(r, _)| tail_start.as_ref().is_none_or(|t| r >= t))
            .collect();
        self.asymptotic_slope() <= 0
            && tail
                .windows(2)
                .all(|w| w[0].0 >= w[1].0 || w[1].1 <= w[0].1)
    }
}

/// Largest truncation level and smallest `b` over the minimal vanishing
/// blocks; nothing relates the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fallback {
    pub max_a_bar: u64,
    pub min_b: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcReport {
    pub theorem: String,
    pub hypotheses: Vec<Check>,
    pub constants: Option<AbcConstants>,
    pub blocks: Vec<BlockAnalysis>,
    pub degree_checks: Vec<DegreeCheck>,
    /// Exact divisibility and truncation-comparison checks.
    pub ledger: Vec<Check>,
    pub margins: Vec<Margin>,
    pub fallback: Option<Fallback>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl AbcReport {
    pub(crate) fn new(theorem: &str) -> Self {
        AbcReport {
            theorem: theorem.to_string(),
            hypotheses: Vec::new(),
            constants: None,
            blocks: Vec::new(),
            degree_checks: Vec::new(),
            ledger: Vec::new(),
            margins: Vec::new(),
            fallback: None,
            notes: Vec::new(),
            verdict: Verdict::Holds,
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.passed)
    }

    pub fn degree_check(&self, name: &str) -> Option<&DegreeCheck> {
        self.degree_checks.iter().find(|c| c.name == name)
    }

    pub fn margin(&self, name: &str) -> Option<&Margin> {
        self.margins.iter().find(|m| m.name == name)
    }

    pub(crate) fn finish(mut self) -> Self {
        self.verdict = if !self.hypotheses_hold() {
            Verdict::HypothesisViolated
        } else if self.degree_checks.iter().all(DegreeCheck::holds)
            && self.ledger.iter().all(|c| c.passed)
            && self.margins.iter().all(Margin::eventually_non_increasing)
        {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        self
    }
}
