//! Separability of tensor coefficient matrices, the diagonal swap
//! construction, and the `2^n - n - 1` dimension count with a subset
//! enumeration oracle.
//!
//! A tensor object over a product basis is a product (separable) exactly when
//! its coefficient matrix has numeric rank at most 1; for 2x2 matrices this
//! is the determinant criterion `ad - bc = 0`.

use nalgebra::DMatrix;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{numeric_rank_of, singular_values};
use crate::TAU_RANK;

#[derive(Debug, Error, PartialEq)]
pub enum GodelError {
    #[error("coefficient matrix must be at least 1x1")]
    Empty,
    #[error("non-finite entry at ({0}, {1})")]
    NonFiniteEntry(usize, usize),
    #[error("{side} label count {got} does not match dimension {want}")]
    LabelMismatch { side: &'static str, got: usize, want: usize },
    #[error("all entries are equal; the diagonal construction needs two distinct values")]
    AllEqual,
    #[error("2^{0} - {0} - 1 overflows the integer width")]
    Overflow(u32),
    #[error("enumeration budget is n <= {max}, got {n}")]
    BudgetExceeded { n: u32, max: u32 },
}

/// Coefficients `lambda_ij` of a tensor object over a labeled product basis
/// (rows: the operator side, columns: the interpreter side).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientMatrix {
    entries: Vec<Vec<f64>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeparabilityKind {
    Separable,
    Entangled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparabilityVerdict {
    pub kind: SeparabilityKind,
    pub numeric_rank: usize,
    pub singular_values: Vec<f64>,
    /// `ad - bc`, reported for 2x2 matrices only.
    pub determinant: Option<f64>,
}

/// Result of the diagonal swap rule applied to a coefficient matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GodelConstruction {
    pub input: CoefficientMatrix,
    pub pivot: f64,
    pub swap_value: f64,
    pub output: CoefficientMatrix,
}

impl CoefficientMatrix {
    pub fn new(
        entries: Vec<Vec<f64>>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self, GodelError> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(GodelError::Empty);
        }
        let cols = entries[0].len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(GodelError::LabelMismatch { side: "row", got: row.len(), want: cols });
            }
            for (j, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(GodelError::NonFiniteEntry(i, j));
                }
            }
        }
        if row_labels.len() != entries.len() {
            return Err(GodelError::LabelMismatch {
                side: "row",
                got: row_labels.len(),
                want: entries.len(),
            });
        }
        if col_labels.len() != cols {
            return Err(GodelError::LabelMismatch {
                side: "column",
                got: col_labels.len(),
                want: cols,
            });
        }
        Ok(Self { entries, row_labels, col_labels })
    }

    /// Default labels `B1..Bp` / `A1..Aq`.
    pub fn from_rows(entries: Vec<Vec<f64>>) -> Result<Self, GodelError> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(GodelError::Empty);
        }
        let rows = entries.len();
        let cols = entries[0].len();
        Self::new(
            entries,
            (1..=rows).map(|i| format!("B{i}")).collect(),
            (1..=cols).map(|j| format!("A{j}")).collect(),
        )
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries[0].len()
    }

    fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_row_iterator(
            self.nrows(),
            self.ncols(),
            self.entries.iter().flatten().copied(),
        )
    }
}

/// Schmidt-rank style separability test: numeric rank of the coefficient
/// matrix at relative tolerance `tol`. Rank <= 1 means a product form exists.
/// The all-zero matrix is Separable (rank 0).
pub fn separability_test(m: &CoefficientMatrix, tol: f64) -> SeparabilityVerdict {
    let sv = singular_values(&m.to_dmatrix());
    let rank = numeric_rank_of(&sv, tol);
    let determinant = if m.nrows() == 2 && m.ncols() == 2 {
        let e = &m.entries;
        Some(e[0][0] * e[1][1] - e[0][1] * e[1][0])
    } else {
        None
    };
    SeparabilityVerdict {
        kind: if rank <= 1 { SeparabilityKind::Separable } else { SeparabilityKind::Entangled },
        numeric_rank: rank,
        singular_values: sv,
        determinant,
    }
}

/// The diagonal swap rule: with pivot `lambda_11` and a swap value taken from
/// `lambda_22` (or the first entry differing from the pivot when
/// `lambda_22 = lambda_11`), every entry equal to the pivot becomes the swap
/// value and every other entry becomes the pivot. The output therefore
/// disagrees with the input at every position.
pub fn construct_godel(m: &CoefficientMatrix) -> Result<GodelConstruction, GodelError> {
    let pivot = m.entries[0][0];
    let mut swap_value = None;
    if m.nrows() >= 2 && m.ncols() >= 2 && m.entries[1][1] != pivot {
        swap_value = Some(m.entries[1][1]);
    } else {
        for row in &m.entries {
            for &v in row {
                if v != pivot {
                    swap_value = Some(v);
                    break;
                }
            }
            if swap_value.is_some() {
                break;
            }
        }
    }
    let swap_value = swap_value.ok_or(GodelError::AllEqual)?;
    let output_entries: Vec<Vec<f64>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|&v| if v != pivot { pivot } else { swap_value }).collect())
        .collect();
    let output =
        CoefficientMatrix::new(output_entries, m.row_labels.clone(), m.col_labels.clone())?;
    Ok(GodelConstruction { input: m.clone(), pivot, swap_value, output })
}

/// Closed form `2^n - n - 1` (0 for n <= 1), in exact integer arithmetic.
pub fn godel_dimension(n: u32) -> Result<u64, GodelError> {
    if n <= 1 {
        return Ok(0);
    }
    let pow = 1u64.checked_shl(n).ok_or(GodelError::Overflow(n))?;
    pow.checked_sub(n as u64 + 1).ok_or(GodelError::Overflow(n))
}

/// Budget cap for [`enumerate_entangled_dimension`].
pub const ENUMERATION_MAX_N: u32 = 24;

/// Brute-force oracle for the dimension formula: walk all `2^n` subsets of
/// basis indices, count those of size >= 2, and verify that each canonical
/// generator (the identity pattern on the chosen indices inside an n x n
/// matrix) tests Entangled. Returns the count and whether every generator
/// passed.
pub fn enumerate_entangled_dimension(n: u32) -> Result<(u64, bool), GodelError> {
    if n > ENUMERATION_MAX_N {
        return Err(GodelError::BudgetExceeded { n, max: ENUMERATION_MAX_N });
    }
    let n_usize = n as usize;
    let mut count = 0u64;
    let mut verified = true;
    for subset in 0u64..(1u64 << n) {
        if subset.count_ones() < 2 {
            continue;
        }
        count += 1;
        let mut entries = vec![vec![0.0; n_usize]; n_usize];
        for (i, row) in entries.iter_mut().enumerate() {
            if subset & (1 << i) != 0 {
                row[i] = 1.0;
            }
        }
        let generator = CoefficientMatrix::from_rows(entries)?;
        if separability_test(&generator, TAU_RANK).kind != SeparabilityKind::Entangled {
            verified = false;
        }
    }
    Ok((count, verified))
}
