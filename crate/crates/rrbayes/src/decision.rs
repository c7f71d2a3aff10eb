//! Standard Bayesian test with Jeffreys evidence grades, and the modified
//! test with a no-decision region, decision constants (r, a), and
//! conditional error probabilities.
//!
//! The modified test works on the sampling distribution of the Bayes
//! factor B_m(X) under each hypothesis. With discrete data those
//! distributions are step functions, so every quantile-style operation
//! here fixes an explicit convention: CDFs are right-continuous,
//! F(b) counts support atoms s <= b (1 + 1e-13), and the generalized
//! inverse returns min{s in support : F(s) >= p - 1e-12} with p clamped
//! into [smallest positive cumulative mass, 1]. These conventions
//! reproduce the reference (r, a) tables, which is the binding check.

use serde::Serialize;

use crate::bayes::{bayes_factor, BfResult, HypothesisCase, Observation};
use crate::error::{Error, Result};
use crate::priors::{BetaParams, Design};

/// Default rejection threshold for the standard test: the Substantial
/// cutoff 10^(-1/2) on the Jeffreys scale.
pub const DEFAULT_GRADE_THRESHOLD: f64 = 0.316_227_766_016_837_94;

/// Jeffreys evidence bands for the index J = log10(B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GradeBand {
    FavorsNull,
    BareMention,
    Substantial,
    Strong,
    Decisive,
}

/// Evidence grade with the underlying index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvidenceGrade {
    pub grade: GradeBand,
    /// log10 of the Bayes factor.
    pub j_index: f64,
}

/// Test decision. The standard test never returns NoDecision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Reject,
    Accept,
    NoDecision,
}

/// Outcome of the standard test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StandardOutcome {
    pub decision: Decision,
    /// alpha*(bf) = bf/(1+bf) on rejection, beta*(bf) = 1/(1+bf) on
    /// acceptance.
    pub reported_error: f64,
}

/// Outcome of the modified test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModifiedOutcome {
    pub decision: Decision,
    /// alpha*(bf) on Reject, beta* = 1/(1 + psi(S)) on Accept with S the
    /// conditioning statistic, None on NoDecision.
    pub conditional_error: Option<f64>,
    /// Conditioning statistic S = min{bf, psi_inverse(bf)}.
    pub conditioning_stat: f64,
}

/// Decision constants of the no-decision region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecisionConstants {
    pub r: f64,
    pub a: f64,
}

/// Which reading of psi_inverse to use; Functional is the validated
/// default that reproduces the reference (r, a) tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiInverseVariant {
    /// F1^{-1}(1 - F0(b)), the functional inverse of psi.
    #[default]
    Functional,
    /// F1^{-1}(1 - F1(b)).
    Literal,
}

/// Sampling distribution of B_m(X) under H0 and H1 for fixed
/// (case, m, prior, design): distinct Bayes-factor values in increasing
/// order with the aggregated probability masses.
#[derive(Debug, Clone, PartialEq)]
pub struct BfDistribution {
    support: Vec<f64>,
    mass_h0: Vec<f64>,
    mass_h1: Vec<f64>,
    cdf_h0: Vec<f64>,
    cdf_h1: Vec<f64>,
}

impl BfDistribution {
    pub fn support(&self) -> &[f64] {
        &self.support
    }

    pub fn mass_h0(&self) -> &[f64] {
        &self.mass_h0
    }

    pub fn mass_h1(&self) -> &[f64] {
        &self.mass_h1
    }

    /// Right-continuous CDF of B under H0 at b.
    pub fn cdf_h0(&self, b: f64) -> f64 {
        f_at(&self.support, &self.cdf_h0, b)
    }

    /// Right-continuous CDF of B under H1 at b.
    pub fn cdf_h1(&self, b: f64) -> f64 {
        f_at(&self.support, &self.cdf_h1, b)
    }
}

/// Jeffreys grade of a Bayes factor.
pub fn jeffreys_grade(bf: f64) -> Result<EvidenceGrade> {
    if !(bf > 0.0) {
        return Err(Error::Domain(format!(
            "jeffreys_grade requires bf > 0, got {bf}"
        )));
    }
    let j = bf.log10();
    let grade = if j >= 0.0 {
        GradeBand::FavorsNull
    } else if j >= -0.5 {
        GradeBand::BareMention
    } else if j >= -1.0 {
        GradeBand::Substantial
    } else if j >= -2.0 {
        GradeBand::Strong
    } else {
        GradeBand::Decisive
    };
    Ok(EvidenceGrade { grade, j_index: j })
}

/// Standard test: reject H0 when bf < grade_threshold and report
/// alpha*(bf); otherwise accept and report beta*(bf) = 1/(1+bf).
pub fn standard_test(bf_result: &BfResult, grade_threshold: f64) -> StandardOutcome {
    let bf = bf_result.bf;
    if bf < grade_threshold {
        StandardOutcome {
            decision: Decision::Reject,
            reported_error: bf / (1.0 + bf),
        }
    } else {
        StandardOutcome {
            decision: Decision::Accept,
            reported_error: 1.0 / (1.0 + bf),
        }
    }
}

/// Construct the Bayes-factor sampling distribution by enumerating
/// x in 0..=m. Ties in bf (relative tolerance 1e-12) are merged into one
/// support atom; masses from the raw marginals are renormalized to sum
/// to one, which absorbs the one-sided truncation constants of cases 2
/// and 3.
pub fn bf_distribution(
    case: HypothesisCase,
    m: u32,
    prior: &BetaParams,
    design: &Design,
) -> Result<BfDistribution> {
    use crate::bayes::{marginal_log_f, Side};
    if m == 0 {
        return Err(Error::Degenerate(
            "bf_distribution requires m >= 1".to_string(),
        ));
    }
    let n = m as usize + 1;
    let mut f0 = Vec::with_capacity(n);
    let mut f1 = Vec::with_capacity(n);
    let mut bf = Vec::with_capacity(n);
    for x in 0..=m {
        let obs = Observation::new(m, x)?;
        let lf0 = marginal_log_f(case, Side::H0, obs, prior, design)?;
        let lf1 = marginal_log_f(case, Side::H1, obs, prior, design)?;
        let b = (lf0 - lf1).exp();
        if b.is_nan() {
            return Err(Error::Numerical(format!(
                "Bayes factor undefined at x = {x} (both marginals zero)"
            )));
        }
        f0.push(lf0.exp());
        f1.push(lf1.exp());
        bf.push(b);
    }
    let s0: f64 = f0.iter().sum();
    let s1: f64 = f1.iter().sum();
    if !(s0 > 0.0 && s1 > 0.0) {
        return Err(Error::Numerical(format!(
            "marginal mass underflowed to zero (sums {s0}, {s1})"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| bf[i].total_cmp(&bf[j]));

    let mut support: Vec<f64> = Vec::new();
    let mut mass_h0: Vec<f64> = Vec::new();
    let mut mass_h1: Vec<f64> = Vec::new();
    for &i in &order {
        let merge = support
            .last()
            .is_some_and(|&s| (bf[i] - s).abs() <= 1e-12 * bf[i].abs().max(s.abs()));
        if merge {
            *mass_h0.last_mut().unwrap() += f0[i] / s0;
            *mass_h1.last_mut().unwrap() += f1[i] / s1;
        } else {
            support.push(bf[i]);
            mass_h0.push(f0[i] / s0);
            mass_h1.push(f1[i] / s1);
        }
    }
    let cdf_h0 = cumsum(&mass_h0);
    let cdf_h1 = cumsum(&mass_h1);
    Ok(BfDistribution {
        support,
        mass_h0,
        mass_h1,
        cdf_h0,
        cdf_h1,
    })
}

fn cumsum(v: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    v.iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect()
}

/// Right-continuous step CDF at b: cumulative mass of atoms
/// s <= b (1 + 1e-13).
fn f_at(support: &[f64], cdf: &[f64], b: f64) -> f64 {
    let thr = b * (1.0 + 1e-13);
    let k = support.partition_point(|&s| s <= thr);
    if k == 0 {
        0.0
    } else {
        cdf[k - 1]
    }
}

/// Generalized inverse min{s : F(s) >= p - 1e-12} with p clamped into
/// [smallest positive cumulative mass, 1]; the lower clamp keeps the
/// inverse total when 1 - F(b) rounds to zero or below.
fn inv_step(support: &[f64], cdf: &[f64], p: f64) -> f64 {
    let floor = cdf.iter().copied().find(|&c| c > 0.0).unwrap_or(cdf[0]);
    let p = p.max(floor).min(1.0);
    let target = p - 1e-12;
    let k = cdf.partition_point(|&c| c < target);
    support[k.min(support.len() - 1)]
}

/// psi(b) = F0^{-1}(1 - F1(b)).
pub fn psi(b: f64, dist: &BfDistribution) -> f64 {
    let p = 1.0 - f_at(&dist.support, &dist.cdf_h1, b);
    inv_step(&dist.support, &dist.cdf_h0, p)
}

/// psi_inverse(b) under the validated Functional reading,
/// F1^{-1}(1 - F0(b)).
pub fn psi_inverse(b: f64, dist: &BfDistribution) -> f64 {
    psi_inverse_with(b, dist, PsiInverseVariant::Functional)
}

/// psi_inverse(b) under an explicit variant.
pub fn psi_inverse_with(b: f64, dist: &BfDistribution, variant: PsiInverseVariant) -> f64 {
    let p = match variant {
        PsiInverseVariant::Functional => 1.0 - f_at(&dist.support, &dist.cdf_h0, b),
        PsiInverseVariant::Literal => 1.0 - f_at(&dist.support, &dist.cdf_h1, b),
    };
    inv_step(&dist.support, &dist.cdf_h1, p)
}

/// Decision constants: (r, a) = (1, psi(1)) when psi(1) >= 1, else
/// (psi_inverse(1), 1).
///
/// A single-atom distribution (possible only at tiny m where every x
/// gives the same bf) yields (1, 1), the one case where the
/// exactly-one-of-r-and-a-is-1 invariant cannot hold.
pub fn decision_constants(dist: &BfDistribution) -> DecisionConstants {
    decision_constants_with(dist, PsiInverseVariant::Functional)
}

/// Decision constants under an explicit psi_inverse variant.
pub fn decision_constants_with(
    dist: &BfDistribution,
    variant: PsiInverseVariant,
) -> DecisionConstants {
    let psi1 = psi(1.0, dist);
    if psi1 >= 1.0 {
        DecisionConstants { r: 1.0, a: psi1 }
    } else {
        DecisionConstants {
            r: psi_inverse_with(1.0, dist, variant),
            a: 1.0,
        }
    }
}

/// Modified test against the given Bayes-factor distribution.
///
/// Classification uses the closed no-decision interval r <= bf <= a with
/// relative slack 1e-9 on each boundary, so a bf that equals a decision
/// constant up to floating-point noise lands in the no-decision region.
/// On acceptance the conditional error beta* = 1/(1 + psi(S)) is
/// evaluated at the conditioning statistic S = min{bf, psi_inverse(bf)};
/// on rejection alpha* = bf/(1+bf) needs no distribution at all.
pub fn modified_test(bf_result: &BfResult, dist: &BfDistribution) -> ModifiedOutcome {
    modified_test_with(bf_result, dist, PsiInverseVariant::Functional)
}

/// Modified test under an explicit psi_inverse variant.
pub fn modified_test_with(
    bf_result: &BfResult,
    dist: &BfDistribution,
    variant: PsiInverseVariant,
) -> ModifiedOutcome {
    let constants = decision_constants_with(dist, variant);
    let bf = bf_result.bf;
    let s = bf.min(psi_inverse_with(bf, dist, variant));
    let decision = classify(bf, &constants);
    let conditional_error = match decision {
        Decision::Reject => Some(bf / (1.0 + bf)),
        Decision::Accept => Some(1.0 / (1.0 + psi(s, dist))),
        Decision::NoDecision => None,
    };
    ModifiedOutcome {
        decision,
        conditional_error,
        conditioning_stat: s,
    }
}

/// Boundary classification against (r, a) with relative slack 1e-9, the
/// closed no-decision interval convention shared by every caller.
pub fn classify(bf: f64, constants: &DecisionConstants) -> Decision {
    if bf < constants.r - 1e-9 * constants.r.max(1.0) {
        Decision::Reject
    } else if bf > constants.a + 1e-9 * constants.a.max(1.0) {
        Decision::Accept
    } else {
        Decision::NoDecision
    }
}

/// Convenience: the full modified-test pipeline from an observation.
pub fn modified_test_at(
    case: HypothesisCase,
    obs: Observation,
    prior: &BetaParams,
    design: &Design,
) -> Result<(BfResult, ModifiedOutcome)> {
    let bfr = bayes_factor(case, obs, prior, design)?;
    let dist = bf_distribution(case, obs.m(), prior, design)?;
    Ok((bfr, modified_test(&bfr, &dist)))
}
