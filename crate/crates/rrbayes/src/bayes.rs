//! Marginal likelihoods and Bayes factors for the three hypothesis cases,
//! plus posterior probabilities of H0 and H1.
//!
//! Case 1 tests gamma = 1 against gamma != 1, Case 2 tests gamma = 1
//! against gamma > 1, and Case 3 tests gamma <= 1 against gamma > 1,
//! where gamma is the relative risk and theta0 = 1/(1 + z0) is the
//! allocation probability it induces under the null.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::priors::{BetaParams, Design};
use crate::special_fns::{ln_beta, ln_binom_coeff, ln_inc_beta_pair};

/// Hypothesis pair under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisCase {
    /// gamma = 1 vs gamma != 1.
    Case1,
    /// gamma = 1 vs gamma > 1.
    Case2,
    /// gamma <= 1 vs gamma > 1.
    Case3,
}

/// Which marginal to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    H0,
    H1,
}

/// A single binomial observation: x events in arm A out of m total events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Observation {
    m: u32,
    x: u32,
}

impl Observation {
    pub fn new(m: u32, x: u32) -> Result<Self> {
        if x > m {
            return Err(Error::Validation(format!(
                "observation requires x <= m, got x = {x}, m = {m}"
            )));
        }
        Ok(Self { m, x })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn x(&self) -> u32 {
        self.x
    }
}

/// Bayes factor in favor of H0, with the induced posterior split.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BfResult {
    pub log_bf: f64,
    /// exp(log_bf); +inf when the H1 marginal underflows to zero.
    pub bf: f64,
    pub posterior_h0: f64,
    pub posterior_h1: f64,
    /// Point estimate x/(m - x); None when x = m leaves it undefined.
    pub gamma_hat: Option<f64>,
}

fn check_prior(prior: &BetaParams) -> Result<()> {
    if !(prior.a > 0.0 && prior.b > 0.0) || !prior.a.is_finite() || !prior.b.is_finite() {
        return Err(Error::Domain(format!(
            "prior parameters must be positive and finite, got ({}, {})",
            prior.a, prior.b
        )));
    }
    Ok(())
}

/// Log marginal likelihood of the observation under one side of the test.
///
/// Cases 1 and 2 share the point-mass H0 marginal, a Binomial(m, theta0)
/// pmf. Case 1's H1 marginal is the Beta-Binomial pmf; Cases 2 and 3
/// restrict the Beta prior to one side of theta0, which multiplies the
/// Beta-Binomial term by the posterior tail mass on that side. The two
/// tail logs come from `ln_inc_beta_pair`, so neither loses precision
/// when the posterior concentrates away from theta0.
pub fn marginal_log_f(
    case: HypothesisCase,
    side: Side,
    obs: Observation,
    prior: &BetaParams,
    design: &Design,
) -> Result<f64> {
    check_prior(prior)?;
    let theta0 = design.theta0();
    let (m, x) = (obs.m, obs.x);
    let lc = ln_binom_coeff(m, x);
    let point = lc + x as f64 * theta0.ln() + (m - x) as f64 * (-theta0).ln_1p();
    let log_bb = || {
        lc + ln_beta(prior.a + x as f64, prior.b + (m - x) as f64) - ln_beta(prior.a, prior.b)
    };
    Ok(match (case, side) {
        (HypothesisCase::Case1, Side::H0) | (HypothesisCase::Case2, Side::H0) => point,
        (HypothesisCase::Case1, Side::H1) => log_bb(),
        (HypothesisCase::Case2, Side::H1) | (HypothesisCase::Case3, Side::H1) => {
            let (_, lcomp) =
                ln_inc_beta_pair(theta0, prior.a + x as f64, prior.b + (m - x) as f64);
            log_bb() + lcomp
        }
        (HypothesisCase::Case3, Side::H0) => {
            let (lreg, _) =
                ln_inc_beta_pair(theta0, prior.a + x as f64, prior.b + (m - x) as f64);
            log_bb() + lreg
        }
    })
}

/// Bayes factor B = f0 / f1 together with the posterior probabilities
/// P(H0 | x) = ell B / (1 + ell B) and its complement.
pub fn bayes_factor(
    case: HypothesisCase,
    obs: Observation,
    prior: &BetaParams,
    design: &Design,
) -> Result<BfResult> {
    let lf0 = marginal_log_f(case, Side::H0, obs, prior, design)?;
    let lf1 = marginal_log_f(case, Side::H1, obs, prior, design)?;
    if lf0 == f64::NEG_INFINITY && lf1 == f64::NEG_INFINITY {
        return Err(Error::Degenerate(format!(
            "both marginals are zero at (m, x) = ({}, {})",
            obs.m, obs.x
        )));
    }
    let log_bf = lf0 - lf1;
    let bf = log_bf.exp();
    let t = design.ell() * bf;
    let posterior_h0 = if t.is_infinite() { 1.0 } else { t / (1.0 + t) };
    let posterior_h1 = 1.0 - posterior_h0;
    let gamma_hat = if obs.x == obs.m {
        None
    } else {
        Some(obs.x as f64 / (obs.m - obs.x) as f64)
    };
    Ok(BfResult {
        log_bf,
        bf,
        posterior_h0,
        posterior_h1,
        gamma_hat,
    })
}
