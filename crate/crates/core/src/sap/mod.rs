//! Extrapolation of equally spaced polynomial samples.
//!
//! For a polynomial of degree `m` sampled at consecutive, unit-spaced
//! abscissae, the next sample is a signed binomial combination of the
//! previous `m + 1` samples:
//!
//! ```text
//! Y[ρ] = Σ_{q=1}^{m+1} (-1)^(q+1) · C(m+1, q) · Y[ρ-q]
//! ```
//!
//! No abscissae are needed. Any uniform spacing `h` produces the same next
//! value, since `f(x0 + h·t)` is again a degree-`m` polynomial in `t`.
//!
//! Everything here works over exact [`BigRational`] values. A floating point
//! convenience path lives in [`float`].

pub mod float;
mod lagrange;

pub use lagrange::lagrange_extrapolate;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SapError {
    #[error("degree {degree} needs {needed} samples, got {got}")]
    InsufficientSamples {
        degree: usize,
        needed: usize,
        got: usize,
    },
    #[error("interpolation needs at least one sample")]
    EmptySamples,
    #[error("abscissa {0} appears more than once")]
    DuplicateAbscissa(BigRational),
    #[error("step count must be at least 1")]
    ZeroSteps,
}

/// Signed weights applied to the trailing samples of a window.
///
/// `weights[q - 1]` multiplies `Y[ρ-q]`, i.e. the first weight belongs to the
/// most recent sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SapCoefficients {
    degree: usize,
    weights: Vec<BigInt>,
}

impl SapCoefficients {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    /// Applies the weights to `values` (oldest first). Only the trailing
    /// `degree + 1` entries are read.
    fn apply(&self, values: &[BigRational]) -> BigRational {
        values
            .iter()
            .rev()
            .zip(&self.weights)
            .fold(BigRational::zero(), |acc, (y, w)| {
                acc + y * BigRational::from_integer(w.clone())
            })
    }
}

/// Weights `(-1)^(q+1) · C(m+1, q)` for `q = 1..=m+1`.
///
/// Built with the multiplicative recurrence `C(n, q) = C(n, q-1) · (n-q+1) / q`,
/// which stays in the integers at every step.
pub fn sap_coefficients(degree: usize) -> SapCoefficients {
    let n = BigInt::from(degree + 1);
    let mut binom = BigInt::one();
    let mut weights = Vec::with_capacity(degree + 1);
    for q in 1..=degree + 1 {
        binom = binom * (&n - BigInt::from(q - 1)) / BigInt::from(q);
        if q % 2 == 1 {
            weights.push(binom.clone());
        } else {
            weights.push(-binom.clone());
        }
    }
    SapCoefficients { degree, weights }
}

/// An ordered run of equally spaced samples, oldest first, with the degree of
/// the polynomial they are assumed to come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleWindow {
    values: Vec<BigRational>,
    degree: usize,
}

impl SampleWindow {
    pub fn new(values: Vec<BigRational>, degree: usize) -> Result<Self, SapError> {
        if values.len() < degree + 1 {
            return Err(SapError::InsufficientSamples {
                degree,
                needed: degree + 1,
                got: values.len(),
            });
        }
        Ok(Self { values, degree })
    }

    /// Convenience constructor for integer samples.
    pub fn from_integers<I>(values: I, degree: usize) -> Result<Self, SapError>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Self::new(
            values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
            degree,
        )
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The samples that the rule actually consumes.
    pub fn trailing(&self) -> &[BigRational] {
        &self.values[self.values.len() - (self.degree + 1)..]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtrapolationResult {
    pub value: BigRational,
    /// How many unit steps past the last sample of the original window.
    pub steps_ahead: usize,
}

/// Predicts the sample one step past the end of `window`.
pub fn extrapolate_next(window: &SampleWindow) -> ExtrapolationResult {
    let coeffs = sap_coefficients(window.degree);
    ExtrapolationResult {
        value: coeffs.apply(window.trailing()),
        steps_ahead: 1,
    }
}

/// Predicts `steps` successive samples, feeding each prediction back into the
/// window before computing the next one.
pub fn extrapolate_k(
    window: &SampleWindow,
    steps: usize,
) -> Result<Vec<ExtrapolationResult>, SapError> {
    if steps == 0 {
        return Err(SapError::ZeroSteps);
    }
    let coeffs = sap_coefficients(window.degree);
    let width = window.degree + 1;
    let mut buf: Vec<BigRational> = window.trailing().to_vec();
    let mut out = Vec::with_capacity(steps);
    for step in 1..=steps {
        let next = coeffs.apply(&buf[buf.len() - width..]);
        buf.push(next.clone());
        out.push(ExtrapolationResult {
            value: next,
            steps_ahead: step,
        });
    }
    Ok(out)
}

/// Both sides of the binomial shift identity
/// `(x+y)^n = Σ_q w_q · (x + (y - q))^n` with the degree-`n` weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftIdentityCheck {
    pub holds: bool,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

pub fn verify_shift_identity(n: usize, x: &BigRational, y: &BigRational) -> ShiftIdentityCheck {
    let pow = |base: BigRational| num_traits::pow(base, n);
    let lhs = pow(x + y);
    let coeffs = sap_coefficients(n);
    let rhs = coeffs
        .weights
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, w)| {
            let shift = BigRational::from_integer(BigInt::from(i + 1));
            acc + BigRational::from_integer(w.clone()) * pow(x + (y - shift))
        });
    ShiftIdentityCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

/// Repeated forward differences of `values`, `order` times.
///
/// The `(m+1)`-th difference of a degree-`m` polynomial's samples is all
/// zeros. Returns an empty vector when `order >= values.len()`.
pub fn forward_differences(values: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        if cur.len() < 2 {
            return Vec::new();
        }
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}
