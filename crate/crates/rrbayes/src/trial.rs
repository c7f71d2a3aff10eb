//! Sequential analysis over group data points, fixed-sample design
//! search, stopping-rule simulation, and Monte Carlo operating
//! characteristics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bayes::{bayes_factor, HypothesisCase, Observation};
use crate::decision::{
    bf_distribution, classify, decision_constants, jeffreys_grade, psi, psi_inverse,
    standard_test, Decision, EvidenceGrade, ModifiedOutcome, StandardOutcome,
};
use crate::error::{Error, Result};
use crate::priors::{resolve_prior, Design, PriorSpec};
use crate::special_fns::binom_tail;

/// One cumulative group data point of the surveillance stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupDataPoint {
    /// 1-based position in the stream.
    pub index: u32,
    /// Cumulative total of observed events.
    pub m: u32,
    /// Cumulative events in arm A.
    pub x: u32,
}

/// Which rule marks the termination point of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestMode {
    /// First Bayes factor below the grade threshold.
    Standard,
    /// First Reject of the modified test.
    Modified,
}

/// Full analysis of one data point.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisRecord {
    pub point: GroupDataPoint,
    pub gamma_hat: Option<f64>,
    pub bf: f64,
    pub posterior_h0: f64,
    pub grade: EvidenceGrade,
    pub standard_decision: StandardOutcome,
    pub modified: ModifiedOutcome,
    /// Decision constants of this point's own Bayes-factor distribution.
    pub r: f64,
    pub a: f64,
    /// True on the first record whose configured rule rejects.
    pub terminated_here: bool,
}

/// Analyze every point of a cumulative (m, x) sequence.
///
/// Each record carries the point's own decision constants (r, a) and the
/// modified-test decision against them. Conditional errors condition on
/// the full monitoring horizon: the acceptance-side beta* evaluates psi
/// on the Bayes-factor distribution at the final scheduled m (the last
/// point of the sequence), at the conditioning statistic
/// S = min(bf, psi_inverse(bf)) computed there. The rejection-side
/// alpha* = bf/(1+bf) needs no distribution.
///
/// All points are analyzed even after the configured rule fires;
/// `terminated_here` marks the first rejection.
pub fn analyze_sequence(
    points: &[GroupDataPoint],
    case: HypothesisCase,
    prior_spec: &PriorSpec,
    design: &Design,
    test_mode: TestMode,
    grade_threshold: f64,
) -> Result<Vec<AnalysisRecord>> {
    if points.is_empty() {
        return Err(Error::Validation(
            "analyze_sequence requires at least one data point".to_string(),
        ));
    }
    for (i, p) in points.iter().enumerate() {
        if p.x > p.m {
            return Err(Error::Ingestion {
                index: p.index as usize,
                message: format!("x = {} exceeds m = {}", p.x, p.m),
            });
        }
        if i > 0 {
            let prev = &points[i - 1];
            if p.m < prev.m || p.x < prev.x {
                return Err(Error::Ingestion {
                    index: p.index as usize,
                    message: format!(
                        "cumulative counts decreased: ({}, {}) after ({}, {})",
                        p.m, p.x, prev.m, prev.x
                    ),
                });
            }
        }
    }
    let prior = resolve_prior(prior_spec, design)?;
    let horizon_m = points.last().unwrap().m;
    let ref_dist = bf_distribution(case, horizon_m, &prior, design)?;

    let mut records = Vec::with_capacity(points.len());
    for p in points {
        let obs = Observation::new(p.m, p.x)?;
        let bfr = bayes_factor(case, obs, &prior, design)?;
        let grade = jeffreys_grade(bfr.bf)?;
        let standard = standard_test(&bfr, grade_threshold);
        let row_dist = bf_distribution(case, p.m, &prior, design)?;
        let constants = decision_constants(&row_dist);
        let decision = classify(bfr.bf, &constants);
        let s_ref = bfr.bf.min(psi_inverse(bfr.bf, &ref_dist));
        let conditional_error = match decision {
            Decision::Reject => Some(bfr.bf / (1.0 + bfr.bf)),
            Decision::Accept => Some(1.0 / (1.0 + psi(s_ref, &ref_dist))),
            Decision::NoDecision => None,
        };
        records.push(AnalysisRecord {
            point: *p,
            gamma_hat: bfr.gamma_hat,
            bf: bfr.bf,
            posterior_h0: bfr.posterior_h0,
            grade,
            standard_decision: standard,
            modified: ModifiedOutcome {
                decision,
                conditional_error,
                conditioning_stat: s_ref,
            },
            r: constants.r,
            a: constants.a,
            terminated_here: false,
        });
    }
    let fired = records.iter().position(|rec| match test_mode {
        TestMode::Standard => rec.standard_decision.decision == Decision::Reject,
        TestMode::Modified => rec.modified.decision == Decision::Reject,
    });
    if let Some(i) = fired {
        records[i].terminated_here = true;
    }
    Ok(records)
}

/// Fixed-sample single-look design: sample size and boundary count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialDesign {
    pub eta0: f64,
    pub eta1: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Truncation sample size N0*.
    pub n_max: u32,
    /// Boundary count k*: reject when S exceeds it.
    pub k_star: u32,
    pub achieved_alpha: f64,
    pub achieved_beta: f64,
}

const DESIGN_N_CAP: u32 = 1_000_000;

/// Smallest n admitting a boundary k with
/// P(S >= k+1 | eta0) <= alpha and P(S <= k | eta1) <= beta;
/// k_star is the smallest such k at that n.
///
/// The type-I tail is decreasing in k, so the smallest k meeting it is a
/// partition point; the type-II constraint then either holds there (any
/// larger k only worsens it) or no k works at this n.
pub fn design_fixed_sample(eta0: f64, eta1: f64, alpha: f64, beta: f64) -> Result<TrialDesign> {
    for (name, v) in [("eta0", eta0), ("eta1", eta1), ("alpha", alpha), ("beta", beta)] {
        if !(v > 0.0 && v < 1.0) {
            return Err(Error::Validation(format!(
                "{name} must lie in (0, 1), got {v}"
            )));
        }
    }
    if eta0 >= eta1 {
        return Err(Error::Infeasible(format!(
            "eta0 = {eta0} must be below eta1 = {eta1}; the hypotheses are \
             indistinguishable by an upper-tail count test"
        )));
    }
    for n in 1..=DESIGN_N_CAP {
        // smallest k with binom_tail(n, k+1, eta0) <= alpha
        let (mut lo, mut hi) = (0u32, n);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if binom_tail(n, mid as i64 + 1, eta0)? <= alpha {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let k = lo;
        let achieved_alpha = binom_tail(n, k as i64 + 1, eta0)?;
        if achieved_alpha > alpha {
            continue;
        }
        let achieved_beta = 1.0 - binom_tail(n, k as i64 + 1, eta1)?;
        if achieved_beta <= beta {
            return Ok(TrialDesign {
                eta0,
                eta1,
                alpha,
                beta,
                n_max: n,
                k_star: k,
                achieved_alpha,
                achieved_beta,
            });
        }
    }
    Err(Error::Infeasible(format!(
        "no design with n <= {DESIGN_N_CAP} meets alpha = {alpha}, beta = {beta} \
         at (eta0, eta1) = ({eta0}, {eta1})"
    )))
}

/// Simulation configuration for the patient-level stopping rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimConfig {
    /// Arm-A assignment probability p0.
    pub p0: f64,
    /// Side-effect probability in arm A.
    pub theta_a: f64,
    /// Side-effect probability in arm B.
    pub theta_b: f64,
    pub seed: u64,
    pub replications: u64,
}

impl SimConfig {
    pub fn new(p0: f64, theta_a: f64, theta_b: f64, seed: u64, replications: u64) -> Result<Self> {
        for (name, v) in [("p0", p0), ("theta_a", theta_a), ("theta_b", theta_b)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::Validation(format!(
                    "{name} must lie in (0, 1), got {v}"
                )));
            }
        }
        if replications == 0 {
            return Err(Error::Validation(
                "replications must be positive".to_string(),
            ));
        }
        Ok(Self {
            p0,
            theta_a,
            theta_b,
            seed,
            replications,
        })
    }

    /// Marginal per-patient event probability
    /// eta = theta_a p0 + theta_b (1 - p0).
    pub fn eta(&self) -> f64 {
        self.theta_a * self.p0 + self.theta_b * (1.0 - self.p0)
    }

    /// Matching odds z0 = (1 - p0)/p0.
    pub fn z0(&self) -> f64 {
        (1.0 - self.p0) / self.p0
    }
}

/// One replication of the stopping rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepOutcome {
    /// min(M, N0*): patients observed when the replication ended.
    pub m_star: u32,
    /// True when S exceeded k* at or before N0*.
    pub rejected: bool,
    /// Total events at termination.
    pub s_y: u32,
    /// Arm-A events at termination.
    pub x: u32,
}

fn run_replication(design: &TrialDesign, sim: &SimConfig, rep: u64) -> RepOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(sim.seed);
    rng.set_stream(rep);
    // one uniform per patient, split into the four outcome cells
    let c_a_event = sim.p0 * sim.theta_a;
    let c_b_event = c_a_event + (1.0 - sim.p0) * sim.theta_b;
    let mut s_y = 0u32;
    let mut x = 0u32;
    for n in 1..=design.n_max {
        let u: f64 = rng.gen();
        if u < c_a_event {
            s_y += 1;
            x += 1;
        } else if u < c_b_event {
            s_y += 1;
        }
        if s_y > design.k_star {
            return RepOutcome {
                m_star: n,
                rejected: true,
                s_y,
                x,
            };
        }
    }
    RepOutcome {
        m_star: design.n_max,
        rejected: false,
        s_y,
        x,
    }
}

/// Run every replication of the stopping rule.
///
/// Each replication draws its own counter-based RNG substream derived
/// from (seed, replication index) and results are collected in
/// replication order, so the output is bit-identical for any number of
/// worker threads.
pub fn simulate_trial(design: &TrialDesign, sim: &SimConfig) -> Vec<RepOutcome> {
    (0..sim.replications)
        .into_par_iter()
        .map(|rep| run_replication(design, sim, rep))
        .collect()
}

/// One row of the operating-characteristics table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OcRow {
    pub gamma: f64,
    /// Fraction of replications that rejected within the schedule.
    pub reject_rate: f64,
    /// Mean terminal m among rejecting replications; None when none
    /// rejected.
    pub mean_events_to_signal: Option<f64>,
}

/// Monte Carlo operating characteristics of the sequential standard
/// rule along a fixed analysis schedule.
///
/// For each gamma the event-allocation count X_m follows
/// Binomial(m, theta(gamma)), drawn incrementally along the schedule;
/// a replication signals at the first analysis with bf below the
/// threshold. Rejection boundaries are precomputed per analysis size, so
/// replications only consume RNG draws and table lookups. Substream
/// index = gamma index * replications + replication keeps runs
/// deterministic for any thread count.
pub fn operating_characteristics(
    case: HypothesisCase,
    prior_spec: &PriorSpec,
    design: &Design,
    gamma_grid: &[f64],
    sim: &SimConfig,
    schedule: &[u32],
    grade_threshold: f64,
) -> Result<Vec<OcRow>> {
    if gamma_grid.is_empty() {
        return Err(Error::Validation("gamma_grid must not be empty".to_string()));
    }
    if schedule.is_empty() {
        return Err(Error::Validation("schedule must not be empty".to_string()));
    }
    if gamma_grid.iter().any(|&g| !(g > 0.0) || !g.is_finite()) {
        return Err(Error::Validation(
            "gamma_grid entries must be positive and finite".to_string(),
        ));
    }
    for w in schedule.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Validation(format!(
                "schedule must be strictly increasing, got {} before {}",
                w[0], w[1]
            )));
        }
    }
    if schedule[0] == 0 {
        return Err(Error::Validation(
            "schedule sizes must be positive".to_string(),
        ));
    }
    let prior = resolve_prior(prior_spec, design)?;
    // reject[j][x] = does the rule fire at analysis j with X = x
    let mut reject: Vec<Vec<bool>> = Vec::with_capacity(schedule.len());
    for &m in schedule {
        let mut row = Vec::with_capacity(m as usize + 1);
        for x in 0..=m {
            let bfr = bayes_factor(case, Observation::new(m, x)?, &prior, design)?;
            row.push(bfr.bf < grade_threshold);
        }
        reject.push(row);
    }

    let reps = sim.replications;
    let mut out = Vec::with_capacity(gamma_grid.len());
    for (g_idx, &gamma) in gamma_grid.iter().enumerate() {
        let theta = design.theta_of_gamma(gamma);
        let results: Vec<Option<u32>> = (0..reps)
            .into_par_iter()
            .map(|rep| {
                let mut rng = ChaCha12Rng::seed_from_u64(sim.seed);
                rng.set_stream(g_idx as u64 * reps + rep);
                let mut x = 0u32;
                let mut m_prev = 0u32;
                for (j, &m) in schedule.iter().enumerate() {
                    for _ in m_prev..m {
                        if rng.gen::<f64>() < theta {
                            x += 1;
                        }
                    }
                    m_prev = m;
                    if reject[j][x as usize] {
                        return Some(m);
                    }
                }
                None
            })
            .collect();
        let n_reject = results.iter().filter(|r| r.is_some()).count();
        let mean = if n_reject > 0 {
            Some(
                results.iter().flatten().map(|&m| m as f64).sum::<f64>() / n_reject as f64,
            )
        } else {
            None
        };
        out.push(OcRow {
            gamma,
            reject_rate: n_reject as f64 / reps as f64,
            mean_events_to_signal: mean,
        });
    }
    Ok(out)
}
