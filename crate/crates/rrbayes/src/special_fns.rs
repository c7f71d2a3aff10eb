//! Numerically stable special functions underlying all marginal likelihoods
//! and tail probabilities.
//!
//! Everything downstream works in natural-log scale and defers
//! exponentiation to the final report, so the accuracy targets here
//! (log-gamma relative error below 1e-12, incomplete-beta absolute error
//! below 1e-12 with full relative precision in the tails) leave ample
//! margin for four-decimal table reproduction at m = 251.

use crate::error::{Error, Result};

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(z) for z > 0 by the Lanczos approximation, with reflection below 0.5.
///
/// Relative error is below 1e-12 on [1e-3, 1e6].
pub fn log_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires z > 0, got {z}")));
    }
    Ok(ln_gamma(z))
}

pub(crate) fn ln_gamma(z: f64) -> f64 {
    if z < 0.5 {
        // reflection: ln Γ(z) = ln(π / sin(πz)) − ln Γ(1 − z)
        return std::f64::consts::PI.ln()
            - (std::f64::consts::PI * z).sin().ln()
            - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// ln B(a, b) = ln Γ(a) + ln Γ(b) − ln Γ(a + b).
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain(format!(
            "log_beta requires a, b > 0, got ({a}, {b})"
        )));
    }
    Ok(ln_beta(a, b))
}

pub(crate) fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// Regularized incomplete beta function I_x(a, b).
///
/// Lentz continued fraction with the symmetry switch at
/// x > (a + 1)/(a + b + 2); convergence tolerance 1e-14, at most 400
/// iterations. Relative precision is preserved for values deep in either
/// tail, which the case-2/3 marginal factors rely on.
pub fn reg_inc_beta(xi: f64, a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain(format!(
            "reg_inc_beta requires a, b > 0, got ({a}, {b})"
        )));
    }
    if !(0.0..=1.0).contains(&xi) {
        return Err(Error::Domain(format!(
            "reg_inc_beta requires xi in [0, 1], got {xi}"
        )));
    }
    Ok(reg_inc_beta_unchecked(xi, a, b))
}

pub(crate) fn reg_inc_beta_unchecked(x: f64, a: f64, b: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    if x > (a + 1.0) / (a + b + 2.0) {
        return 1.0 - reg_inc_beta_unchecked(1.0 - x, b, a);
    }
    // prefactor x^a (1-x)^b / (a B(a,b)), applied to the continued fraction
    let ln_front = a * x.ln() + b * (-x).ln_1p() - ln_beta(a, b);
    (ln_front.exp() / a) * beta_cf(x, a, b)
}

/// Continued fraction for the incomplete beta integral (modified Lentz).
fn beta_cf(x: f64, a: f64, b: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const TOL: f64 = 1e-14;
    const MAX_ITER: usize = 400;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        // even step
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        // odd step
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < TOL {
            break;
        }
    }
    h
}

/// Unregularized incomplete beta integral.
pub fn inc_beta(xi: f64, a: f64, b: f64) -> Result<f64> {
    Ok(reg_inc_beta(xi, a, b)? * ln_beta(a, b).exp())
}

/// ln C(m, x) via log-gamma.
pub fn log_binom_coeff(m: u32, x: u32) -> Result<f64> {
    if x > m {
        return Err(Error::Domain(format!(
            "log_binom_coeff requires x <= m, got ({m}, {x})"
        )));
    }
    Ok(ln_binom_coeff(m, x))
}

pub(crate) fn ln_binom_coeff(m: u32, x: u32) -> f64 {
    if x == 0 || x == m {
        return 0.0;
    }
    ln_gamma(m as f64 + 1.0) - ln_gamma(x as f64 + 1.0) - ln_gamma((m - x) as f64 + 1.0)
}

/// Upper tail P(X >= k) for X ~ Binomial(n, p).
///
/// Uses the identity P(X >= k) = I_p(k, n - k + 1); the conventions
/// k <= 0 -> 1 and k = n + 1 -> 0 keep the function total over designs.
pub fn binom_tail(n: u32, k: i64, p: f64) -> Result<f64> {
    if !(0.0 < p && p < 1.0) {
        return Err(Error::Domain(format!(
            "binom_tail requires p in (0, 1), got {p}"
        )));
    }
    if k < 0 || k > n as i64 + 1 {
        return Err(Error::Domain(format!(
            "binom_tail requires 0 <= k <= n + 1, got k = {k}, n = {n}"
        )));
    }
    if k == 0 {
        return Ok(1.0);
    }
    if k == n as i64 + 1 {
        return Ok(0.0);
    }
    let k = k as f64;
    Ok(reg_inc_beta_unchecked(p, k, n as f64 - k + 1.0))
}

/// (ln I_x(a, b), ln(1 - I_x(a, b))), each computed from whichever tail is
/// the smaller one so both logs keep full relative precision.
///
/// Evaluating the small tail directly through the reflection
/// I_x(a, b) = 1 - I_{1-x}(b, a) avoids the catastrophic cancellation of
/// ln1p(-I) when I is within one ulp of 1, which happens for every x far
/// into the wrong tail at m = 251.
pub(crate) fn ln_inc_beta_pair(x: f64, a: f64, b: f64) -> (f64, f64) {
    if x <= 0.0 {
        return (f64::NEG_INFINITY, 0.0);
    }
    if x >= 1.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    let i = reg_inc_beta_unchecked(x, a, b);
    if i <= 0.5 {
        (i.ln(), (-i).ln_1p())
    } else {
        let j = reg_inc_beta_unchecked(1.0 - x, b, a);
        ((-j).ln_1p(), j.ln())
    }
}

/// Log pmf of the Beta-Binomial distribution:
/// ln [ C(m, x) B(a + x, m - x + b) / B(a, b) ].
pub fn beta_binomial_log_pmf(m: u32, x: u32, a: f64, b: f64) -> Result<f64> {
    if x > m {
        return Err(Error::Domain(format!(
            "beta_binomial_log_pmf requires x <= m, got ({m}, {x})"
        )));
    }
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain(format!(
            "beta_binomial_log_pmf requires a, b > 0, got ({a}, {b})"
        )));
    }
    Ok(ln_binom_coeff(m, x) + ln_beta(a + x as f64, b + (m - x) as f64) - ln_beta(a, b))
}
