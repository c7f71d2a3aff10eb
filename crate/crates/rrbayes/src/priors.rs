//! Prior resolution: user-facing prior specifications to Beta(a, b)
//! hyperparameters, including the bounded-width informative construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special_fns::reg_inc_beta_unchecked;

/// User-facing prior family selection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PriorSpec {
    /// Beta(1, 1).
    Uniform,
    /// Beta(1/2, 1/2).
    Jeffreys,
    /// Beta(a, z0 a) with a solved so that the prior probability of the
    /// relative-risk band |gamma - 1| <= epsilon equals delta.
    Informative { epsilon: f64, delta: f64 },
    /// Beta(a, b) as given.
    Explicit { a: f64, b: f64 },
}

/// Resolved Beta hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaParams {
    pub a: f64,
    pub b: f64,
}

impl BetaParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Validation(format!(
                "Beta parameters must be positive and finite, got ({a}, {b})"
            )));
        }
        Ok(Self { a, b })
    }
}

/// Trial design constants: matching odds z0, the induced null event
/// probability theta0 = 1/(1 + z0), and the prior odds ell of H0 to H1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Design {
    z0: f64,
    theta0: f64,
    ell: f64,
}

impl Design {
    /// Design with prior odds 1 (equal hypothesis weights).
    pub fn new(z0: f64) -> Result<Self> {
        Self::with_ell(z0, 1.0)
    }

    pub fn with_ell(z0: f64, ell: f64) -> Result<Self> {
        if !(z0 > 0.0) || !z0.is_finite() {
            return Err(Error::Validation(format!(
                "matching odds z0 must be positive and finite, got {z0}"
            )));
        }
        if !(ell > 0.0) || !ell.is_finite() {
            return Err(Error::Validation(format!(
                "prior odds ell must be positive and finite, got {ell}"
            )));
        }
        Ok(Self {
            z0,
            theta0: 1.0 / (1.0 + z0),
            ell,
        })
    }

    pub fn z0(&self) -> f64 {
        self.z0
    }

    /// Null value of the event-allocation probability, 1/(1 + z0).
    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Relative risk as a function of theta: gamma = z0 theta / (1 - theta).
    pub fn gamma_of_theta(&self, theta: f64) -> f64 {
        self.z0 * theta / (1.0 - theta)
    }

    /// Inverse map: theta = gamma / (z0 + gamma).
    pub fn theta_of_gamma(&self, gamma: f64) -> f64 {
        gamma / (self.z0 + gamma)
    }
}

/// Resolve a prior specification to Beta hyperparameters.
pub fn resolve_prior(spec: &PriorSpec, design: &Design) -> Result<BetaParams> {
    match *spec {
        PriorSpec::Uniform => BetaParams::new(1.0, 1.0),
        PriorSpec::Jeffreys => BetaParams::new(0.5, 0.5),
        PriorSpec::Explicit { a, b } => BetaParams::new(a, b),
        PriorSpec::Informative { epsilon, delta } => solve_informative(design, epsilon, delta),
    }
}

/// Prior probability that theta lies in the band induced by
/// |gamma - 1| <= epsilon, under Beta(a, z0 a).
fn band_mass(a: f64, z0: f64, theta_lo: f64, theta_hi: f64) -> f64 {
    reg_inc_beta_unchecked(theta_hi, a, z0 * a) - reg_inc_beta_unchecked(theta_lo, a, z0 * a)
}

/// Solve the informative prior: b = z0 a pins the prior mean of theta to
/// 1/(1 + z0); a is then chosen so the prior mass of the theta-interval
/// induced by |gamma - 1| <= epsilon equals delta.
///
/// The band endpoints follow from gamma = z0 theta / (1 - theta):
/// theta_lo = (1 - eps)/(z0 + 1 - eps), theta_hi = (1 + eps)/(z0 + 1 + eps).
/// Band mass is strictly increasing in a, so bisection on
/// a in [1e-6, 1e7] converges unconditionally; tolerance 1e-10 in delta.
pub fn solve_informative(design: &Design, epsilon: f64, delta: f64) -> Result<BetaParams> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Validation(format!(
            "informative prior requires 0 < epsilon < 1, got {epsilon}"
        )));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Validation(format!(
            "informative prior requires 0 < delta < 1, got {delta}"
        )));
    }
    let z0 = design.z0();
    let theta_lo = (1.0 - epsilon) / (z0 + 1.0 - epsilon);
    let theta_hi = (1.0 + epsilon) / (z0 + 1.0 + epsilon);

    let (mut lo, mut hi) = (1e-6, 1e7);
    if band_mass(hi, z0, theta_lo, theta_hi) < delta {
        return Err(Error::NoSolution(format!(
            "band mass stays below delta = {delta} for a up to {hi}"
        )));
    }
    // mass(lo) < delta in any practical regime; if not, lo is the answer
    if band_mass(lo, z0, theta_lo, theta_hi) >= delta {
        let a = lo;
        return BetaParams::new(a, z0 * a);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let mass = band_mass(mid, z0, theta_lo, theta_hi);
        if (mass - delta).abs() <= 1e-10 {
            return BetaParams::new(mid, z0 * mid);
        }
        if mass < delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = 0.5 * (lo + hi);
    let mass = band_mass(a, z0, theta_lo, theta_hi);
    if (mass - delta).abs() <= 1e-8 {
        BetaParams::new(a, z0 * a)
    } else {
        Err(Error::Numerical(format!(
            "informative-prior bisection did not converge: residual {}",
            mass - delta
        )))
    }
}
