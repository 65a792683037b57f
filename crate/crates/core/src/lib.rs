//! Fractional-calculus primitives and fractal roughness estimators.
//!
//! The crate is organized around four layers:
//!
//! * [`mlf`] — gamma, one- and two-parameter Mittag-Leffler functions and the
//!   fractional sine/cosine family, evaluated as power series with reported
//!   truncation tails.
//! * [`jumarie`] — the modified Riemann-Liouville (Jumarie) fractional
//!   derivative of order 0 < α < 1: exact on monomials, term-by-term on
//!   power series, and numerically from samples via product integration;
//!   plus a table of closed-form derivative identities with paired
//!   evaluators for residual testing.
//! * [`weierstrass`] — the classical and fractional Weierstrass functions,
//!   the fractional derivative series, Hölder constants, and grid sampling.
//! * [`roughness`] — box-counting dimension and global Hölder exponent
//!   estimators over uniformly sampled signals.
//!
//! Everything is pure and deterministic; all functions are safe to call
//! concurrently.

pub mod error;
pub mod gamma;
pub mod jumarie;
pub mod mlf;
pub mod roughness;
pub mod sum;
pub mod weierstrass;

pub use error::{Error, Result};
