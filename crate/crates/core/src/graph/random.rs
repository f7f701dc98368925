//! Degree and path length of random (Gaussian degree) networks.

use crate::consts::EULER_GAMMA;
use crate::error::{domain, Result};
use crate::scalar::Scalar;

fn check_n_total(n_total: u64) -> Result<()> {
    if n_total < 2 {
        return domain("n_total", n_total as f64, "a network needs at least 2 nodes");
    }
    Ok(())
}

/// Average degree a random network of `n_total` nodes needs for an average
/// path length of `avg_path_length`:
///
/// `k̄ = exp{[ln N − γ] / L̄ + 1/2}`
pub fn avg_degree_random<T: Scalar>(n_total: u64, avg_path_length: T) -> Result<T> {
    check_n_total(n_total)?;
    if !(avg_path_length >= T::one()) || !avg_path_length.is_finite() {
        return domain(
            "avg_path_length",
            avg_path_length.as_f64(),
            "average path length must be finite and at least 1",
        );
    }
    let ln_n = T::from_count(n_total).ln();
    let exponent = (ln_n - T::lit(EULER_GAMMA)) / avg_path_length + T::lit(0.5);
    Ok(exponent.exp())
}

/// Inverse of [`avg_degree_random`]: `L̄ = (ln N − γ) / (ln k̄ − 1/2)`.
pub fn path_length_random<T: Scalar>(n_total: u64, avg_degree: T) -> Result<T> {
    check_n_total(n_total)?;
    let half = T::lit(0.5);
    let denom = avg_degree.ln() - half;
    if !(denom > T::zero()) || !avg_degree.is_finite() {
        return domain(
            "avg_degree",
            avg_degree.as_f64(),
            "average degree must exceed e^(1/2)",
        );
    }
    Ok((T::from_count(n_total).ln() - T::lit(EULER_GAMMA)) / denom)
}
