//! Interpreter-relative information measures over finite cardinal scales,
//! PAC/GPAC sample-complexity checks, and tensor-coefficient entanglement
//! constructions with brute-force verification at desk scale.
//!
//! Everything is finite and discrete: distributions live on strictly
//! increasing grids, interpreters are real matrices, and tensor objects are
//! coefficient matrices over a product basis. All values are immutable after
//! construction and every operation is pure.

pub mod complexity;
pub mod demos;
pub mod godel;
pub mod interpreters;
pub mod io;
pub mod pac;
pub mod spectra;

mod linalg;
mod sum;

/// Total mass below this magnitude counts as the empty proposition.
pub const TAU_MASS: f64 = 1e-12;
/// Truth classification dead zone around zero total mass.
pub const TAU_TRUTH: f64 = 1e-12;
/// Relative singular-value cutoff for numeric rank and span tests.
pub const TAU_RANK: f64 = 1e-9;

pub use complexity::{Environment, WellFormedObject};
pub use godel::{CoefficientMatrix, GodelConstruction, SeparabilityKind, SeparabilityVerdict};
pub use interpreters::{CompletenessVerdict, Interpreter, InterpreterSpace};
pub use pac::{PacConfig, PacInstance, TrialReport};
pub use spectra::{CardinalScale, Spectrum, TruthValue, WaveVector};
