//! Exhaustive exact-rational oracle for the Bayes-factor step
//! distributions at small m under the uniform prior with z0 = 1.
//!
//! Every marginal is a ratio of integers there: the point-null
//! likelihood is C(m, x)/2^m, the flat-prior predictive is 1/(m + 1),
//! and the truncated predictives scale it by the binomial tail identity
//! I_{1/2}(x + 1, m - x + 1) = P(Bin(m + 1, 1/2) >= x + 1). The step
//! functions, their generalized inverses, and the decision constants
//! then evaluate in exact arithmetic with no tolerance conventions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= big(n - i);
        den *= big(i + 1);
    }
    num / den
}

/// I_{1/2}(x + 1, m - x + 1) as an exact rational.
fn reg_inc_beta_half(m: u64, x: u64) -> BigRational {
    let mut num = BigInt::zero();
    for j in (x + 1)..=(m + 1) {
        num += binom(m + 1, j);
    }
    BigRational::new(num, BigInt::one() << (m + 1) as usize)
}

/// Marginals (f0, f1) at (m, x) under the uniform prior, z0 = 1.
fn marginals(case: u8, m: u64, x: u64) -> (BigRational, BigRational) {
    let point = BigRational::new(binom(m, x), BigInt::one() << m as usize);
    let flat = BigRational::new(BigInt::one(), big(m + 1));
    let i = reg_inc_beta_half(m, x);
    let one = BigRational::one();
    match case {
        1 => (point, flat),
        2 => (point, flat * (one - i)),
        3 => (flat.clone() * i.clone(), flat * (one - i)),
        _ => panic!("case must be 1, 2, or 3"),
    }
}

pub struct ExactDist {
    pub support: Vec<BigRational>,
    pub mass_h0: Vec<BigRational>,
    pub mass_h1: Vec<BigRational>,
    cdf_h0: Vec<BigRational>,
    cdf_h1: Vec<BigRational>,
}

pub fn exact_dist(case: u8, m: u64) -> ExactDist {
    let mut atoms: Vec<(BigRational, BigRational, BigRational)> = (0..=m)
        .map(|x| {
            let (f0, f1) = marginals(case, m, x);
            (&f0 / &f1, f0, f1)
        })
        .collect();
    atoms.sort_by(|a, b| a.0.cmp(&b.0));

    let mut support: Vec<BigRational> = Vec::new();
    let mut mass_h0: Vec<BigRational> = Vec::new();
    let mut mass_h1: Vec<BigRational> = Vec::new();
    for (t, f0, f1) in atoms {
        if support.last() == Some(&t) {
            let k = mass_h0.len() - 1;
            mass_h0[k] += f0;
            mass_h1[k] += f1;
        } else {
            support.push(t);
            mass_h0.push(f0);
            mass_h1.push(f1);
        }
    }
    let mut s0 = BigRational::zero();
    let mut s1 = BigRational::zero();
    for v in &mass_h0 {
        s0 += v;
    }
    for v in &mass_h1 {
        s1 += v;
    }
    for v in &mut mass_h0 {
        *v /= s0.clone();
    }
    for v in &mut mass_h1 {
        *v /= s1.clone();
    }
    let mut cdf_h0 = Vec::with_capacity(mass_h0.len());
    let mut cdf_h1 = Vec::with_capacity(mass_h1.len());
    let mut acc = BigRational::zero();
    for v in &mass_h0 {
        acc += v;
        cdf_h0.push(acc.clone());
    }
    acc = BigRational::zero();
    for v in &mass_h1 {
        acc += v;
        cdf_h1.push(acc.clone());
    }
    ExactDist {
        support,
        mass_h0,
        mass_h1,
        cdf_h0,
        cdf_h1,
    }
}

fn step_at(support: &[BigRational], cdf: &[BigRational], b: &BigRational) -> BigRational {
    let mut out = BigRational::zero();
    for (s, c) in support.iter().zip(cdf) {
        if s <= b {
            out = c.clone();
        } else {
            break;
        }
    }
    out
}

fn inv_step(support: &[BigRational], cdf: &[BigRational], p: &BigRational) -> BigRational {
    // all masses are positive here, so the lower clamp reduces to the
    // first atom; the upper clamp to the last is unreachable since the
    // final cumulative value is exactly one
    for (s, c) in support.iter().zip(cdf) {
        if c >= p {
            return s.clone();
        }
    }
    support.last().unwrap().clone()
}

impl ExactDist {
    pub fn psi(&self, b: &BigRational) -> BigRational {
        let p = BigRational::one() - step_at(&self.support, &self.cdf_h1, b);
        inv_step(&self.support, &self.cdf_h0, &p)
    }

    pub fn psi_inverse(&self, b: &BigRational) -> BigRational {
        let p = BigRational::one() - step_at(&self.support, &self.cdf_h0, b);
        inv_step(&self.support, &self.cdf_h1, &p)
    }

    /// (r, a) under the same branch convention as the float code.
    pub fn constants(&self) -> (BigRational, BigRational) {
        let one = BigRational::one();
        let psi_one = self.psi(&one);
        if psi_one >= one {
            (one, psi_one)
        } else {
            (self.psi_inverse(&one), one)
        }
    }
}
