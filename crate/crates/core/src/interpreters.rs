//! Finite linear spaces of interpreters: addition, scaling, composition,
//! tensor products, and the per-instance completeness (bijection) check
//! between an interpreter basis and its images.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::linalg::{numeric_rank, singular_values};
use crate::spectra::{CardinalScale, Spectrum};
use crate::TAU_RANK;

#[derive(Debug, Error, PartialEq)]
pub enum InterpreterError {
    #[error("dimension mismatch: expected {want}, got {got}")]
    DimensionMismatch { want: usize, got: usize },
    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFiniteEntry(usize, usize),
    #[error("cannot combine an empty list of interpreters")]
    EmptyCombination,
    #[error("basis matrices are linearly dependent (element {0})")]
    DependentBasis(usize),
    #[error("matrix does not lie in the span of the basis (relative residual {0:.3e})")]
    NotInSpan(f64),
}

/// A finite linear operator from raw information vectors to spectra over a
/// fixed output scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpreter {
    label: String,
    matrix: DMatrix<f64>,
    out_scale: CardinalScale,
}

/// Verdict of the basis-image independence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletenessVerdict {
    Complete,
    /// 1-based index of the first basis element whose image is linearly
    /// dependent on its predecessors' images.
    Incomplete(usize),
}

impl Interpreter {
    pub fn new(
        label: impl Into<String>,
        matrix: DMatrix<f64>,
        out_scale: CardinalScale,
    ) -> Result<Self, InterpreterError> {
        if matrix.nrows() != out_scale.len() {
            return Err(InterpreterError::DimensionMismatch {
                want: out_scale.len(),
                got: matrix.nrows(),
            });
        }
        for i in 0..matrix.nrows() {
            for j in 0..matrix.ncols() {
                if !matrix[(i, j)].is_finite() {
                    return Err(InterpreterError::NonFiniteEntry(i, j));
                }
            }
        }
        Ok(Self { label: label.into(), matrix, out_scale })
    }

    /// Convenience constructor from row data with a synthetic output scale.
    pub fn from_rows(label: impl Into<String>, rows: &[Vec<f64>]) -> Result<Self, InterpreterError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in rows {
            if r.len() != ncols {
                return Err(InterpreterError::DimensionMismatch { want: ncols, got: r.len() });
            }
        }
        let matrix = DMatrix::from_row_iterator(nrows, ncols, rows.iter().flatten().copied());
        Self::new(label, matrix, CardinalScale::synthetic(nrows))
    }

    pub fn identity(n: usize) -> Self {
        Self::new("identity", DMatrix::identity(n, n), CardinalScale::synthetic(n)).unwrap()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn out_scale(&self) -> &CardinalScale {
        &self.out_scale
    }

    pub fn in_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn out_dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Apply to an information vector: the spectrum over the output scale
    /// with mass `matrix * info`.
    pub fn apply(&self, info: &[f64]) -> Result<Spectrum, InterpreterError> {
        if info.len() != self.in_dim() {
            return Err(InterpreterError::DimensionMismatch {
                want: self.in_dim(),
                got: info.len(),
            });
        }
        let v = &self.matrix * DVector::from_column_slice(info);
        Spectrum::new(self.out_scale.clone(), v.iter().copied().collect())
            .map_err(|_| InterpreterError::NonFiniteEntry(0, 0))
    }
}

/// Entrywise `sum_k coeff_k * matrix_k`; all interpreters must share
/// dimensions and the output scale of the first is kept.
pub fn linear_combine(
    coeffs: &[f64],
    interpreters: &[Interpreter],
) -> Result<Interpreter, InterpreterError> {
    if coeffs.is_empty() || interpreters.is_empty() {
        return Err(InterpreterError::EmptyCombination);
    }
    if coeffs.len() != interpreters.len() {
        return Err(InterpreterError::DimensionMismatch {
            want: interpreters.len(),
            got: coeffs.len(),
        });
    }
    let first = &interpreters[0];
    let mut matrix = DMatrix::zeros(first.out_dim(), first.in_dim());
    for (c, h) in coeffs.iter().zip(interpreters) {
        if h.out_dim() != first.out_dim() || h.in_dim() != first.in_dim() {
            return Err(InterpreterError::DimensionMismatch {
                want: first.in_dim(),
                got: h.in_dim(),
            });
        }
        matrix += &h.matrix * *c;
    }
    Interpreter::new("lincomb", matrix, first.out_scale.clone())
}

/// Matrix product `b * h`: first interpret with `h`, then act with `b` on the
/// resulting mass vector.
pub fn compose(b: &Interpreter, h: &Interpreter) -> Result<Interpreter, InterpreterError> {
    if b.in_dim() != h.out_dim() {
        return Err(InterpreterError::DimensionMismatch { want: h.out_dim(), got: b.in_dim() });
    }
    Interpreter::new(
        format!("{}∘{}", b.label, h.label),
        &b.matrix * &h.matrix,
        b.out_scale.clone(),
    )
}

/// Kronecker product over the row-major product index grid. Product states
/// have no natural cardinal values, so the output scale is synthetic; tensor
/// analysis downstream depends only on coefficients.
pub fn tensor(h1: &Interpreter, h2: &Interpreter) -> Interpreter {
    let matrix = h1.matrix.kronecker(&h2.matrix);
    let k = matrix.nrows();
    Interpreter::new(format!("{}⊗{}", h1.label, h2.label), matrix, CardinalScale::synthetic(k))
        .expect("kronecker of finite matrices is finite")
}

/// An ordered, linearly independent basis of interpreters sharing dimensions.
#[derive(Debug, Clone)]
pub struct InterpreterSpace {
    basis: Vec<Interpreter>,
}

impl InterpreterSpace {
    pub fn new(basis: Vec<Interpreter>) -> Result<Self, InterpreterError> {
        if basis.is_empty() {
            return Err(InterpreterError::EmptyCombination);
        }
        let (rows, cols) = (basis[0].out_dim(), basis[0].in_dim());
        for h in &basis[1..] {
            if h.out_dim() != rows || h.in_dim() != cols {
                return Err(InterpreterError::DimensionMismatch { want: cols, got: h.in_dim() });
            }
        }
        let stacked = flatten_stack(&basis);
        let rank = numeric_rank(&stacked, TAU_RANK);
        if rank < basis.len() {
            return Err(InterpreterError::DependentBasis(rank + 1));
        }
        Ok(Self { basis })
    }

    pub fn basis(&self) -> &[Interpreter] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees a nonempty basis
    }

    /// Least-squares coefficients of `h` in the basis; errors when `h` lies
    /// outside the span (relative residual above the rank tolerance).
    pub fn coordinates(&self, h: &Interpreter) -> Result<Vec<f64>, InterpreterError> {
        let first = &self.basis[0];
        if h.out_dim() != first.out_dim() || h.in_dim() != first.in_dim() {
            return Err(InterpreterError::DimensionMismatch {
                want: first.in_dim(),
                got: h.in_dim(),
            });
        }
        let design = flatten_stack(&self.basis);
        let target = DVector::from_iterator(
            h.matrix.nrows() * h.matrix.ncols(),
            h.matrix.iter().copied(),
        );
        let svd = design.clone().svd(true, true);
        let coeffs = svd.solve(&target, 0.0).expect("svd solve on computed factors");
        let residual = (&design * &coeffs - &target).norm();
        let target_norm = target.norm();
        if residual > TAU_RANK * target_norm {
            return Err(InterpreterError::NotInSpan(residual / target_norm.max(f64::MIN_POSITIVE)));
        }
        Ok(coeffs.iter().copied().collect())
    }

    /// Per-instance bijection check: the basis covers its image space iff the
    /// images `apply(basis_k, info)` stay linearly independent.
    pub fn check_completeness(&self, info: &[f64]) -> Result<CompletenessVerdict, InterpreterError> {
        check_completeness(&self.basis, info)
    }
}

/// Completeness check over a bare basis list. Unlike [`InterpreterSpace`],
/// the list is not required to be linearly independent, so intentionally
/// degenerate bases (a dependent axiom set) can be diagnosed.
pub fn check_completeness(
    basis: &[Interpreter],
    info: &[f64],
) -> Result<CompletenessVerdict, InterpreterError> {
    if basis.is_empty() {
        return Err(InterpreterError::EmptyCombination);
    }
    let images: Vec<Vec<f64>> = basis
        .iter()
        .map(|h| h.apply(info).map(|s| s.mass().to_vec()))
        .collect::<Result<_, _>>()?;
    let cols = images[0].len();
    for k in 1..=images.len() {
        let stacked = DMatrix::from_row_iterator(k, cols, images[..k].iter().flatten().copied());
        if numeric_rank(&stacked, TAU_RANK) < k {
            return Ok(CompletenessVerdict::Incomplete(k));
        }
    }
    Ok(CompletenessVerdict::Complete)
}

/// Each interpreter's matrix flattened column-wise into one column of the
/// design matrix.
fn flatten_stack(basis: &[Interpreter]) -> DMatrix<f64> {
    let n = basis[0].matrix.nrows() * basis[0].matrix.ncols();
    DMatrix::from_iterator(n, basis.len(), basis.iter().flat_map(|h| h.matrix.iter().copied()))
}

/// Largest singular value of an interpreter matrix; exposed for callers that
/// want scale-aware comparisons.
pub fn spectral_norm(h: &Interpreter) -> f64 {
    singular_values(h.matrix()).first().copied().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interp(label: &str, rows: &[Vec<f64>]) -> Interpreter {
        Interpreter::from_rows(label, rows).unwrap()
    }

    #[test]
    fn apply_examples() {
        let id = Interpreter::identity(2);
        assert_eq!(id.apply(&[0.3, 0.7]).unwrap().mass(), &[0.3, 0.7]);

        let zero = interp("zero", &[vec![0.0, 0.0], vec![0.0, 0.0]]);
        let s = zero.apply(&[5.0, -3.0]).unwrap();
        assert_eq!(s.classify_truth(), crate::spectra::TruthValue::Empty);

        let avg = interp("avg", &[vec![0.5, 0.5], vec![0.5, 0.5]]);
        assert_eq!(avg.apply(&[1.0, 0.0]).unwrap().mass(), &[0.5, 0.5]);

        assert!(id.apply(&[1.0]).is_err());
    }

    #[test]
    fn linear_combine_examples() {
        let h = interp("h", &[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let g = interp("g", &[vec![5.0, 6.0], vec![7.0, 8.0]]);

        let r = linear_combine(&[1.0, 0.0], &[h.clone(), g.clone()]).unwrap();
        assert_eq!(r.matrix(), h.matrix());

        let r = linear_combine(&[2.0], std::slice::from_ref(&h)).unwrap();
        assert_eq!(r.matrix(), &(h.matrix() * 2.0));

        let e1 = interp("e1", &[vec![1.0, 0.0], vec![0.0, 0.0]]);
        let e2 = interp("e2", &[vec![0.0, 0.0], vec![0.0, 1.0]]);
        let r = linear_combine(&[1.0, 1.0], &[e1, e2]).unwrap();
        assert_eq!(r.matrix(), Interpreter::identity(2).matrix());

        assert_eq!(linear_combine(&[], &[]).unwrap_err(), InterpreterError::EmptyCombination);
    }

    #[test]
    fn compose_examples() {
        let id = Interpreter::identity(2);
        let h = interp("h", &[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(compose(&id, &h).unwrap().matrix(), h.matrix());
        assert_eq!(compose(&h, &id).unwrap().matrix(), h.matrix());

        let swap = interp("swap", &[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let r = compose(&swap, &h).unwrap();
        assert_eq!(r.matrix(), interp("want", &[vec![3.0, 4.0], vec![1.0, 2.0]]).matrix());

        // commuting square: compose(b,h) applied = b applied to h's mass
        let info = [0.4, -1.25];
        let direct = compose(&swap, &h).unwrap().apply(&info).unwrap();
        let staged = swap.apply(h.apply(&info).unwrap().mass()).unwrap();
        for (a, b) in direct.mass().iter().zip(staged.mass()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn tensor_examples() {
        let id2 = Interpreter::identity(2);
        assert_eq!(tensor(&id2, &id2).matrix(), Interpreter::identity(4).matrix());

        let a = interp("a", &[vec![2.0]]);
        let b = interp("b", &[vec![3.0]]);
        assert_eq!(tensor(&a, &b).matrix()[(0, 0)], 6.0);

        let e11 = interp("e11", &[vec![1.0, 0.0], vec![0.0, 0.0]]);
        let e12 = interp("e12", &[vec![0.0, 1.0], vec![0.0, 0.0]]);
        let t = tensor(&e11, &e12);
        for i in 0..4 {
            for j in 0..4 {
                let want = if (i, j) == (0, 1) { 1.0 } else { 0.0 };
                assert_eq!(t.matrix()[(i, j)], want);
            }
        }
    }

    #[test]
    fn coordinates_examples() {
        let e11 = interp("e11", &[vec![1.0, 0.0], vec![0.0, 0.0]]);
        let e22 = interp("e22", &[vec![0.0, 0.0], vec![0.0, 1.0]]);
        let e12 = interp("e12", &[vec![0.0, 1.0], vec![0.0, 0.0]]);
        let space = InterpreterSpace::new(vec![e11.clone(), e22.clone(), e12.clone()]).unwrap();

        let c = space.coordinates(&e22).unwrap();
        assert!((c[0] - 0.0).abs() < 1e-9 && (c[1] - 1.0).abs() < 1e-9 && c[2].abs() < 1e-9);

        let sum = linear_combine(&[1.0, 1.0], &[e11.clone(), e22.clone()]).unwrap();
        let c = space.coordinates(&sum).unwrap();
        assert!((c[0] - 1.0).abs() < 1e-9 && (c[1] - 1.0).abs() < 1e-9 && c[2].abs() < 1e-9);

        // identity is not in the span of off-diagonal nilpotents
        let e21 = interp("e21", &[vec![0.0, 0.0], vec![1.0, 0.0]]);
        let offdiag = InterpreterSpace::new(vec![e12, e21]).unwrap();
        assert!(matches!(
            offdiag.coordinates(&Interpreter::identity(2)),
            Err(InterpreterError::NotInSpan(_))
        ));
    }

    #[test]
    fn completeness_examples() {
        let id = Interpreter::identity(2);
        let swap = interp("swap", &[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let space = InterpreterSpace::new(vec![id.clone(), swap]).unwrap();
        assert_eq!(space.check_completeness(&[1.0, 2.0]).unwrap(), CompletenessVerdict::Complete);

        // {id, 2id} has collinear images for every info vector
        let twice = interp("2id", &[vec![2.0, 0.0], vec![0.0, 2.0]]);
        assert_eq!(
            check_completeness(&[id.clone(), twice.clone()], &[3.0, -1.0]).unwrap(),
            CompletenessVerdict::Incomplete(2)
        );

        let single = InterpreterSpace::new(vec![twice]).unwrap();
        assert_eq!(single.check_completeness(&[1.0, 0.0]).unwrap(), CompletenessVerdict::Complete);
    }

    #[test]
    fn dependent_basis_rejected() {
        let id = Interpreter::identity(2);
        let twice = interp("2id", &[vec![2.0, 0.0], vec![0.0, 2.0]]);
        assert!(matches!(
            InterpreterSpace::new(vec![id, twice]),
            Err(InterpreterError::DependentBasis(_))
        ));
    }
}
