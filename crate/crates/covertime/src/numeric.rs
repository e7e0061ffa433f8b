//! Small numeric helpers shared across modules.

/// `ln(n!)` by direct log summation; exact enough for the factorial sizes
/// this crate meets (moment orders, lattice path counts).
pub(crate) fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

pub(crate) fn validate_positive(value: f64, name: &str) -> crate::Result<f64> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(crate::Error::InvalidParameter(format!(
            "{name} must be positive and finite, got {value}"
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_factorial_small_values() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert!((ln_factorial(5) - 120f64.ln()).abs() < 1e-12);
        assert!((ln_factorial(20) - 2.432_902_008_176_64e18f64.ln()).abs() < 1e-9);
    }
}
