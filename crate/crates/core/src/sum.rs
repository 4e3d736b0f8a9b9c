/// Neumaier compensated summation. Keeps the additivity and normalization
/// invariants at 1e-12 on grids up to 10^6 points.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::compensated_sum;

    #[test]
    fn matches_naive_on_small_inputs() {
        assert_eq!(compensated_sum([0.5, -0.5]), 0.0);
        assert_eq!(compensated_sum([1.0, 2.0, 3.0]), 6.0);
    }

    #[test]
    fn recovers_cancellation_naive_sum_loses() {
        // 1e16 + 1 - 1e16 naively drops the 1
        let xs = [1e16, 1.0, -1e16];
        assert_eq!(compensated_sum(xs), 1.0);
    }

    #[test]
    fn large_uniform_grid_sums_to_one() {
        let n = 1_000_000;
        let w = 1.0 / n as f64;
        let s = compensated_sum(std::iter::repeat_n(w, n));
        assert!((s - 1.0).abs() < 1e-12);
    }
}
