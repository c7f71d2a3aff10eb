//! Bayesian sequential monitoring of the relative risk in two-arm
//! event-count studies.
//!
//! Events arriving from two treatment arms are compared through the
//! conditional binomial likelihood of the arm-A count given the total:
//! with matching odds `z0` and relative risk `gamma`, an arm-A event
//! occurs with probability `theta = gamma / (z0 + gamma)`. The crate
//! computes Bayes factors for one-sided and two-sided hypotheses about
//! `gamma` under conjugate beta priors, runs the standard and modified
//! (no-decision-region) sequential tests with their conditional error
//! reports, solves highest-posterior-density intervals and the
//! equivalent uniformly-most-powerful Bayesian test, and simulates
//! fixed-sample designs and operating characteristics.
//!
//! Entry points:
//! - [`bayes_factor`] with a [`HypothesisCase`], [`PriorSpec`], and
//!   [`Design`]
//! - [`analyze_sequence`] for a full monitoring stream
//! - [`bf_distribution`], [`decision_constants`], [`modified_test`]
//!   for the no-decision-region machinery
//! - [`hpd_interval`] on a [`PosteriorBeta`]
//! - [`umpbt_solution`] for the classical correspondence
//! - [`design_fixed_sample`], [`simulate_trial`],
//!   [`operating_characteristics`] for design work

pub mod bayes;
pub mod decision;
pub mod error;
pub mod hpd;
pub mod priors;
pub mod special_fns;
pub mod trial;
pub mod umpbt;

pub use bayes::{bayes_factor, marginal_log_f, BfResult, HypothesisCase, Observation, Side};
pub use decision::{
    bf_distribution, classify, decision_constants, decision_constants_with, jeffreys_grade,
    modified_test, modified_test_at, modified_test_with, psi, psi_inverse, psi_inverse_with,
    standard_test, BfDistribution, Decision, DecisionConstants, EvidenceGrade, GradeBand,
    ModifiedOutcome, PsiInverseVariant, StandardOutcome, DEFAULT_GRADE_THRESHOLD,
};
pub use error::{Error, Result};
pub use hpd::{hpd_interval, HpdInterval, PosteriorBeta};
pub use priors::{resolve_prior, BetaParams, Design, PriorSpec};
pub use trial::{
    analyze_sequence, design_fixed_sample, operating_characteristics, simulate_trial,
    AnalysisRecord, GroupDataPoint, OcRow, RepOutcome, SimConfig, TestMode, TrialDesign,
};
pub use umpbt::{umpbt_solution, UmpbtSolution};
