//! Signed distributions over finite cardinal scales, their wave-vector
//! correspondence, and truth classification by the sign of the total mass.

use serde::Serialize;
use thiserror::Error;

use crate::sum::compensated_sum;
use crate::{TAU_MASS, TAU_TRUTH};

#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("scale must contain at least one value")]
    EmptyScale,
    #[error("scale values must be strictly increasing (violation at index {0})")]
    ScaleNotIncreasing(usize),
    #[error("non-finite input at index {0}")]
    NonFiniteInput(usize),
    #[error("mass length {mass} does not match scale length {scale}")]
    LengthMismatch { scale: usize, mass: usize },
    #[error("lower bound {a} exceeds upper bound {b}")]
    BoundsReversed { a: f64, b: f64 },
    #[error("total mass {0} is within the empty-proposition tolerance")]
    EmptyProposition(f64),
    #[error("masses mix strictly positive and strictly negative entries")]
    MixedSign,
    #[error("lambda must be finite and nonzero, got {0}")]
    NonFiniteLambda(f64),
    #[error("amplitudes do not have unit squared norm (got {0})")]
    NotUnitNorm(f64),
    #[error("amplitude at index {0} is negative")]
    NegativeAmplitude(usize),
}

/// An ordered grid of finite scale values `s_1 < s_2 < … < s_K`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CardinalScale {
    values: Vec<f64>,
}

impl CardinalScale {
    pub fn new(values: Vec<f64>) -> Result<Self, SpectrumError> {
        if values.is_empty() {
            return Err(SpectrumError::EmptyScale);
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(SpectrumError::NonFiniteInput(i));
            }
        }
        for i in 1..values.len() {
            if values[i] <= values[i - 1] {
                return Err(SpectrumError::ScaleNotIncreasing(i));
            }
        }
        Ok(Self { values })
    }

    /// Synthetic scale 1..=k, used where no natural cardinal values exist
    /// (tensor-product index grids).
    pub fn synthetic(k: usize) -> Self {
        Self { values: (1..=k).map(|i| i as f64).collect() }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees K >= 1
    }
}

/// A signed mass assignment over a cardinal scale.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    scale: CardinalScale,
    mass: Vec<f64>,
}

/// Unit-norm nonnegative amplitudes; the wave-function side of the
/// `mass = lambda * amplitude^2` correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveVector {
    amplitudes: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TruthValue {
    True,
    False,
    Empty,
}

impl WaveVector {
    pub fn new(amplitudes: Vec<f64>) -> Result<Self, SpectrumError> {
        for (i, a) in amplitudes.iter().enumerate() {
            if !a.is_finite() {
                return Err(SpectrumError::NonFiniteInput(i));
            }
            if *a < 0.0 {
                return Err(SpectrumError::NegativeAmplitude(i));
            }
        }
        let norm2 = compensated_sum(amplitudes.iter().map(|a| a * a));
        if (norm2 - 1.0).abs() > TAU_MASS {
            return Err(SpectrumError::NotUnitNorm(norm2));
        }
        Ok(Self { amplitudes })
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }
}

impl Spectrum {
    pub fn new(scale: CardinalScale, mass: Vec<f64>) -> Result<Self, SpectrumError> {
        if mass.len() != scale.len() {
            return Err(SpectrumError::LengthMismatch { scale: scale.len(), mass: mass.len() });
        }
        for (i, m) in mass.iter().enumerate() {
            if !m.is_finite() {
                return Err(SpectrumError::NonFiniteInput(i));
            }
        }
        Ok(Self { scale, mass })
    }

    pub fn scale(&self) -> &CardinalScale {
        &self.scale
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    /// Total mass `lambda = sum(mass)`, computed with compensated summation.
    pub fn total_mass(&self) -> f64 {
        compensated_sum(self.mass.iter().copied())
    }

    /// Sum of masses over scale entries with `a <= s_i <= b`, both inclusive.
    pub fn partial_information(&self, a: f64, b: f64) -> Result<f64, SpectrumError> {
        if a > b {
            return Err(SpectrumError::BoundsReversed { a, b });
        }
        Ok(compensated_sum(
            self.scale
                .values()
                .iter()
                .zip(&self.mass)
                .filter(|(s, _)| a <= **s && **s <= b)
                .map(|(_, m)| *m),
        ))
    }

    /// Divide out the total mass. Fails on the empty proposition (`|lambda|`
    /// inside the tolerance), which cannot be normalized.
    pub fn normalize(&self) -> Result<(f64, Spectrum), SpectrumError> {
        let lambda = self.total_mass();
        if lambda.abs() <= TAU_MASS {
            return Err(SpectrumError::EmptyProposition(lambda));
        }
        let unit = Spectrum {
            scale: self.scale.clone(),
            mass: self.mass.iter().map(|m| m / lambda).collect(),
        };
        Ok((lambda, unit))
    }

    /// Decompose into `(lambda, psi)` with `mass_i = lambda * psi_i^2`.
    /// Requires a single-signed spectrum since squared amplitudes cannot mix
    /// signs.
    pub fn to_wave(&self) -> Result<(f64, WaveVector), SpectrumError> {
        let has_pos = self.mass.iter().any(|m| *m > 0.0);
        let has_neg = self.mass.iter().any(|m| *m < 0.0);
        if has_pos && has_neg {
            return Err(SpectrumError::MixedSign);
        }
        let lambda = self.total_mass();
        if lambda.abs() <= TAU_MASS {
            return Err(SpectrumError::EmptyProposition(lambda));
        }
        let amplitudes = self.mass.iter().map(|m| (m.abs() / lambda.abs()).sqrt()).collect();
        Ok((lambda, WaveVector { amplitudes }))
    }

    /// Rebuild a spectrum from `(lambda, psi)` on the given scale:
    /// `mass_i = lambda * psi_i^2`.
    pub fn from_wave(
        lambda: f64,
        wave: &WaveVector,
        scale: CardinalScale,
    ) -> Result<Spectrum, SpectrumError> {
        if !lambda.is_finite() || lambda == 0.0 {
            return Err(SpectrumError::NonFiniteLambda(lambda));
        }
        if wave.amplitudes.len() != scale.len() {
            return Err(SpectrumError::LengthMismatch {
                scale: scale.len(),
                mass: wave.amplitudes.len(),
            });
        }
        let mass = wave.amplitudes.iter().map(|a| lambda * a * a).collect();
        Ok(Spectrum { scale, mass })
    }

    /// Entrywise negation; maps true propositions to false ones.
    pub fn negate(&self) -> Spectrum {
        Spectrum { scale: self.scale.clone(), mass: self.mass.iter().map(|m| -m).collect() }
    }

    /// Sign of the total mass: positive is True, negative is False, and
    /// anything inside the dead zone is the empty proposition.
    pub fn classify_truth(&self) -> TruthValue {
        let lambda = self.total_mass();
        if lambda > TAU_TRUTH {
            TruthValue::True
        } else if lambda < -TAU_TRUTH {
            TruthValue::False
        } else {
            TruthValue::Empty
        }
    }
}
