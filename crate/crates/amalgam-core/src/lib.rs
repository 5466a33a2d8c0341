//! Numerical engines for Wiener amalgam and modulation space norms.
//!
//! The crate computes discrete `L^p`, `FL^p`, `W(L^p,L^q)`, `W(FL^p,L^q)`
//! and `M^{p,q}` norms of sampled functions, evaluates the exact Gaussian
//! closed forms they converge to, runs the free Schrödinger propagator as a
//! Fourier multiplier, and fits power-law scaling exponents of dilated
//! families against the sharp predicted values.
//!
//! The core is `no_std` (with `alloc`); all floating-point transcendentals
//! go through `libm`, so results are reproducible across platforms. IO,
//! file formats and the command-line runner live in the companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exponent;
pub mod fft;
pub mod grid;
pub mod norm;
pub mod oracle;
pub mod schrodinger;
pub mod sweep;
pub mod transform;

pub use error::{Error, Result};
pub use exponent::{Exponent, ExponentPair};
pub use grid::{Grid, SampledFunction};
pub use num_complex::Complex64;
