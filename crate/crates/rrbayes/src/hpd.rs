//! Highest Posterior Density regions for theta and their transform to the
//! relative-risk scale gamma.

use serde::Serialize;

use crate::bayes::Observation;
use crate::error::{Error, Result};
use crate::priors::{BetaParams, Design};
use crate::special_fns::{ln_beta, reg_inc_beta_unchecked};

/// Beta posterior of theta given (m, x) under a Beta(a, b) prior.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PosteriorBeta {
    pub a_post: f64,
    pub b_post: f64,
}

impl PosteriorBeta {
    pub fn new(a_post: f64, b_post: f64) -> Result<Self> {
        if !(a_post > 0.0 && b_post > 0.0) || !a_post.is_finite() || !b_post.is_finite() {
            return Err(Error::Validation(format!(
                "posterior parameters must be positive and finite, got ({a_post}, {b_post})"
            )));
        }
        Ok(Self { a_post, b_post })
    }

    /// Conjugate update: Beta(a + x, b + m - x).
    pub fn from_observation(obs: Observation, prior: &BetaParams) -> Result<Self> {
        Self::new(
            prior.a + obs.x() as f64,
            prior.b + (obs.m() - obs.x()) as f64,
        )
    }
}

/// HPD interval on the theta scale with its gamma-scale transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HpdInterval {
    pub lo: f64,
    pub hi: f64,
    pub credibility: f64,
    pub gamma_lo: f64,
    pub gamma_hi: f64,
    /// False only for the flat Beta(1, 1) posterior, where every interval
    /// of the stated mass is an HPD region and the central one is
    /// returned by convention.
    pub unique: bool,
}

fn log_pdf(a: f64, b: f64, lnb: f64, t: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 {
        return f64::NEG_INFINITY;
    }
    (a - 1.0) * t.ln() + (b - 1.0) * (-t).ln_1p() - lnb
}

/// The two roots of log pdf = level, one on each side of the mode, by
/// bisection (200 halvings, far below the 1e-10 theta tolerance).
fn level_roots(a: f64, b: f64, lnb: f64, mode: f64, level: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (0.0, mode);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if log_pdf(a, b, lnb, mid) < level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let left = 0.5 * (lo + hi);
    let (mut lo, mut hi) = (mode, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if log_pdf(a, b, lnb, mid) < level {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (left, 0.5 * (lo + hi))
}

/// Shortest interval of the stated posterior mass.
///
/// Outer bisection on the density level: lowering the level widens the
/// equal-density interval and raises its mass, so the level bracketing
/// [log pdf(mode) - 60, log pdf(mode)] pins the target mass; inner
/// bisection finds the two level-crossing roots. Converged when the
/// interval mass is within 1e-8 of the requested credibility.
pub fn hpd_interval(post: PosteriorBeta, credibility: f64, design: &Design) -> Result<HpdInterval> {
    if !(credibility > 0.0 && credibility < 1.0) {
        return Err(Error::Validation(format!(
            "credibility must lie in (0, 1), got {credibility}"
        )));
    }
    let (a, b) = (post.a_post, post.b_post);
    if a == 1.0 && b == 1.0 {
        // flat posterior: HPD is non-unique, return the central interval
        let lo = 0.5 * (1.0 - credibility);
        let hi = 0.5 * (1.0 + credibility);
        return Ok(HpdInterval {
            lo,
            hi,
            credibility,
            gamma_lo: design.gamma_of_theta(lo),
            gamma_hi: design.gamma_of_theta(hi),
            unique: false,
        });
    }
    if a <= 1.0 || b <= 1.0 {
        return Err(Error::BoundaryMode(format!(
            "Beta({a}, {b}) has its mode on the boundary; an equal-density \
             interior HPD interval does not exist (use a one-sided interval)"
        )));
    }
    let lnb = ln_beta(a, b);
    let mode = (a - 1.0) / (a + b - 2.0);
    let peak = log_pdf(a, b, lnb, mode);
    let (mut level_lo, mut level_hi) = (peak - 60.0, peak);
    let mass_at = |level: f64| {
        let (l, r) = level_roots(a, b, lnb, mode, level);
        (l, r, reg_inc_beta_unchecked(r, a, b) - reg_inc_beta_unchecked(l, a, b))
    };
    for _ in 0..200 {
        let mid = 0.5 * (level_lo + level_hi);
        let (_, _, mass) = mass_at(mid);
        if (mass - credibility).abs() <= 1e-8 {
            break;
        }
        if mass > credibility {
            level_lo = mid;
        } else {
            level_hi = mid;
        }
    }
    let (lo, hi, mass) = mass_at(0.5 * (level_lo + level_hi));
    if (mass - credibility).abs() > 1e-8 {
        return Err(Error::Numerical(format!(
            "HPD level bisection did not converge: mass {mass} vs credibility {credibility}"
        )));
    }
    Ok(HpdInterval {
        lo,
        hi,
        credibility,
        gamma_lo: design.gamma_of_theta(lo),
        gamma_hi: design.gamma_of_theta(hi),
        unique: true,
    })
}
