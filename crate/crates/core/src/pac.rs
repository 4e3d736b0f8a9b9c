//! The finite-class sample-complexity bound, the GPAC normalizability
//! predicate, and a seeded Monte-Carlo check of the uniform-convergence
//! success event.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::spectra::Spectrum;
use crate::sum::compensated_sum;
use crate::TAU_MASS;

#[derive(Debug, Error, PartialEq)]
pub enum PacError {
    #[error("epsilon must lie in (0,1), got {0}")]
    InvalidEpsilon(f64),
    #[error("delta must lie in (0,1), got {0}")]
    InvalidDelta(f64),
    #[error("hypothesis count must be at least 1")]
    EmptyHypothesisSet,
    #[error("sample size must be at least 1")]
    InvalidSampleSize,
    #[error("trial count must be at least 1")]
    InvalidTrialCount,
    #[error("sampler weights must be nonnegative and sum to 1 (sum {0})")]
    InvalidWeights(f64),
    #[error("hypothesis {name:?} value {value} at point {index} outside [0,1]")]
    HypothesisOutOfRange { name: String, index: usize, value: f64 },
    #[error("hypothesis {name:?} has {got} values, expected {want}")]
    HypothesisLengthMismatch { name: String, got: usize, want: usize },
    #[error("domain must contain at least one point")]
    EmptyDomain,
}

/// Accuracy, confidence, and hypothesis-class size for the bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacConfig {
    epsilon: f64,
    delta: f64,
    hypothesis_count: u64,
}

impl PacConfig {
    pub fn new(epsilon: f64, delta: f64, hypothesis_count: u64) -> Result<Self, PacError> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(PacError::InvalidEpsilon(epsilon));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(PacError::InvalidDelta(delta));
        }
        if hypothesis_count == 0 {
            return Err(PacError::EmptyHypothesisSet);
        }
        Ok(Self { epsilon, delta, hypothesis_count })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn hypothesis_count(&self) -> u64 {
        self.hypothesis_count
    }
}

/// A named hypothesis given by its value on each domain point; values lie in
/// [0,1] (the Hoeffding constant in the bound assumes unit range).
#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub name: String,
    pub values: Vec<f64>,
}

/// Finite domain, sampling distribution over it, and a finite hypothesis
/// class evaluated pointwise.
#[derive(Debug, Clone, PartialEq)]
pub struct PacInstance {
    points: Vec<f64>,
    weights: Vec<f64>,
    hypotheses: Vec<Hypothesis>,
}

/// Outcome of a Monte-Carlo run of the uniform-convergence event.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub trials: u64,
    pub successes: u64,
    pub success_rate: f64,
    pub sample_size: u64,
    /// The exact sample bound for the config the run was judged against.
    pub bound: f64,
    /// Whether `success_rate >= 1 - delta`.
    pub passed: bool,
}

impl PacInstance {
    pub fn new(
        points: Vec<f64>,
        weights: Vec<f64>,
        hypotheses: Vec<Hypothesis>,
    ) -> Result<Self, PacError> {
        if points.is_empty() {
            return Err(PacError::EmptyDomain);
        }
        if weights.len() != points.len() {
            return Err(PacError::InvalidWeights(f64::NAN));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(PacError::InvalidWeights(f64::NAN));
        }
        let total = compensated_sum(weights.iter().copied());
        if (total - 1.0).abs() > TAU_MASS {
            return Err(PacError::InvalidWeights(total));
        }
        if hypotheses.is_empty() {
            return Err(PacError::EmptyHypothesisSet);
        }
        for h in &hypotheses {
            if h.values.len() != points.len() {
                return Err(PacError::HypothesisLengthMismatch {
                    name: h.name.clone(),
                    got: h.values.len(),
                    want: points.len(),
                });
            }
            for (i, v) in h.values.iter().enumerate() {
                if !v.is_finite() || *v < 0.0 || *v > 1.0 {
                    return Err(PacError::HypothesisOutOfRange {
                        name: h.name.clone(),
                        index: i,
                        value: *v,
                    });
                }
            }
        }
        Ok(Self { points, weights, hypotheses })
    }

    /// Affinely rescale hypothesis values into [0,1] before validation.
    /// Returns the instance together with `(scale, offset)` such that
    /// `v' = (v - offset) * scale`; identity when already in range.
    pub fn new_rescaled(
        points: Vec<f64>,
        weights: Vec<f64>,
        hypotheses: Vec<Hypothesis>,
    ) -> Result<(Self, f64, f64), PacError> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for h in &hypotheses {
            for v in &h.values {
                lo = lo.min(*v);
                hi = hi.max(*v);
            }
        }
        let (scale, offset) = if lo >= 0.0 && hi <= 1.0 {
            (1.0, 0.0)
        } else if hi > lo {
            (1.0 / (hi - lo), lo)
        } else {
            // all values equal and out of range; collapse to 0
            (0.0, lo)
        };
        let hypotheses = hypotheses
            .into_iter()
            .map(|h| Hypothesis {
                name: h.name,
                values: h.values.iter().map(|v| (v - offset) * scale).collect(),
            })
            .collect();
        Ok((Self::new(points, weights, hypotheses)?, scale, offset))
    }

    /// Two-point domain {0,1} under the fair coin, with four hypotheses:
    /// the identity, its complement, a half-scaled copy, and a constant.
    pub fn bernoulli_half() -> Self {
        Self::new(
            vec![0.0, 1.0],
            vec![0.5, 0.5],
            vec![
                Hypothesis { name: "id".into(), values: vec![0.0, 1.0] },
                Hypothesis { name: "not".into(), values: vec![1.0, 0.0] },
                Hypothesis { name: "half".into(), values: vec![0.0, 0.5] },
                Hypothesis { name: "const".into(), values: vec![0.3, 0.3] },
            ],
        )
        .unwrap()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn hypotheses(&self) -> &[Hypothesis] {
        &self.hypotheses
    }

    /// True mean of each hypothesis under the sampling distribution.
    pub fn true_means(&self) -> Vec<f64> {
        self.hypotheses
            .iter()
            .map(|h| compensated_sum(h.values.iter().zip(&self.weights).map(|(v, w)| v * w)))
            .collect()
    }
}

/// Sample bound `N = ln(2|H|/delta) / (2 epsilon^2)`. Returns the exact value
/// and the smallest integer strictly greater than it.
pub fn sample_bound(cfg: &PacConfig) -> (f64, u64) {
    let exact = (2.0 * cfg.hypothesis_count as f64 / cfg.delta).ln() / (2.0 * cfg.epsilon.powi(2));
    (exact, exact.floor() as u64 + 1)
}

/// A spectrum can be normalized into a distribution iff its total mass is
/// finite and nonzero; finiteness is guaranteed at construction.
pub fn gpac_normalizable(sp: &Spectrum) -> bool {
    sp.total_mass().abs() > TAU_MASS
}

/// Deterministic per-trial stream key: splitmix64 of seed and trial index,
/// so trial outcomes are order-independent.
fn trial_stream(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Run `trials` independent draws of `sample_size` i.i.d. points from the
/// instance's distribution. A trial succeeds when every hypothesis's
/// empirical mean lies within `epsilon` of its true mean (the uniform
/// event the `2|H|` union bound controls). Bit-identical for identical
/// arguments.
pub fn run_pac_simulation(
    inst: &PacInstance,
    cfg: &PacConfig,
    sample_size: u64,
    trials: u64,
    seed: u64,
) -> Result<TrialReport, PacError> {
    if sample_size == 0 {
        return Err(PacError::InvalidSampleSize);
    }
    if trials == 0 {
        return Err(PacError::InvalidTrialCount);
    }
    let true_means = inst.true_means();
    let cumulative: Vec<f64> = inst
        .weights
        .iter()
        .scan(0.0, |acc, w| {
            *acc += w;
            Some(*acc)
        })
        .collect();

    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_stream(seed, trial));
        let mut sums = vec![0.0f64; inst.hypotheses.len()];
        for _ in 0..sample_size {
            let u: f64 = rng.random();
            let idx = cumulative.iter().position(|c| u < *c).unwrap_or(inst.points.len() - 1);
            for (h, sum) in inst.hypotheses.iter().zip(&mut sums) {
                *sum += h.values[idx];
            }
        }
        let success = sums
            .iter()
            .zip(&true_means)
            .all(|(sum, c)| (sum / sample_size as f64 - c).abs() <= cfg.epsilon());
        if success {
            successes += 1;
        }
    }

    let success_rate = successes as f64 / trials as f64;
    Ok(TrialReport {
        trials,
        successes,
        success_rate,
        sample_size,
        bound: sample_bound(cfg).0,
        passed: success_rate >= 1.0 - cfg.delta(),
    })
}
