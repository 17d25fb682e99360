//! Generalized (Beurling) prime number systems.
//!
//! This crate implements a family of continuous prime counting densities,
//! their discretizations into generalized prime sequences, the block-modified
//! rational-prime system built from balanced prime intervals, and the
//! analytic machinery (zeta functions, oscillatory finite-part integrals,
//! Cesàro/Riesz means, Kahane partial integrals) used to compare prime
//! number theorem conditions numerically.
//!
//! Modules mirror the mathematical layers:
//!
//! * [`classical`] — rational-prime sieve, `Li(x)`, smooth-number counts
//! * [`continuous`] — the continuous family `Π_{C,α}` and its inverse
//! * [`primes`] — discrete systems `P_α`, counting, gaps, Mertens sums
//! * [`counting`] — generalized integers, the measure exponential, means
//! * [`zeta`] — `K(s)`, `ζ_C`, the discrete factorization and `a_α`
//! * [`diamond`] — the `α = 1` system: closed forms and expansion checks
//! * [`pstar`] — the block construction over rational primes
//! * [`acceptance`] — the end-to-end verification suite

pub mod acceptance;
pub mod classical;
pub mod continuous;
pub mod counting;
pub mod diamond;
pub mod primes;
pub mod pstar;
pub mod zeta;

mod cplx;
mod dd;
mod nsd;
pub mod quad;

pub use num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
