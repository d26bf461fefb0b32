//! Exact polynomial extrapolation from equally spaced samples, and a small
//! laboratory for testing the prime-window rule `p'' ≈ 2p' − p ± 2` over
//! consecutive primes.
//!
//! ```
//! use sap_lab::sap::{extrapolate_next, SampleWindow};
//!
//! let squares = SampleWindow::from_integers([1, 4, 9], 2).unwrap();
//! assert_eq!(extrapolate_next(&squares).value.to_integer(), 16.into());
//! ```
//!
//! The guide in `book/` walks through each module with runnable examples.

pub mod cli;
pub mod conjecture;
pub mod primes;
pub mod sap;
pub mod stats;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Sap(#[from] sap::SapError),
    #[error(transparent)]
    Prime(#[from] primes::PrimeError),
    #[error(transparent)]
    Lab(#[from] conjecture::LabError),
    #[error(transparent)]
    Stats(#[from] stats::StatsError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

// Compiles every code block in the guide as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/extrapolation.md")]
    mod extrapolation {}
    #[doc = include_str!("../../../book/src/lagrange.md")]
    mod lagrange {}
    #[doc = include_str!("../../../book/src/primes.md")]
    mod primes {}
    #[doc = include_str!("../../../book/src/windows.md")]
    mod windows {}
    #[doc = include_str!("../../../book/src/gaps-and-twins.md")]
    mod gaps_and_twins {}
    #[doc = include_str!("../../../book/src/histograms.md")]
    mod histograms {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
