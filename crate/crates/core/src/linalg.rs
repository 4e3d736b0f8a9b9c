use nalgebra::DMatrix;

/// Singular values of `m`, descending.
pub(crate) fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Numeric rank: count of singular values above `tol` relative to the largest.
/// The all-zero matrix has rank 0.
pub(crate) fn numeric_rank_of(sv: &[f64], tol: f64) -> usize {
    let max = sv.first().copied().unwrap_or(0.0);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * max).count()
}

pub(crate) fn numeric_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    numeric_rank_of(&singular_values(m), tol)
}
