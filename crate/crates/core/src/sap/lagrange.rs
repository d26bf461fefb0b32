use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SapError;

/// Evaluates the Lagrange interpolant through `samples` at `target`.
///
/// Abscissae must be pairwise distinct. Used as the independent check on the
/// equally spaced rule, so it deliberately does not assume any spacing.
pub fn lagrange_extrapolate(
    samples: &[(BigRational, BigRational)],
    target: &BigRational,
) -> Result<BigRational, SapError> {
    if samples.is_empty() {
        return Err(SapError::EmptySamples);
    }
    for (i, (xi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(SapError::DuplicateAbscissa(xi.clone()));
        }
    }

    let mut acc = BigRational::zero();
    for (j, (xj, yj)) in samples.iter().enumerate() {
        let mut basis = BigRational::one();
        for (k, (xk, _)) in samples.iter().enumerate() {
            if k != j {
                basis *= (target - xk) / (xj - xk);
            }
        }
        acc += yj * basis;
    }
    Ok(acc)
}
