//! Free Schrödinger propagator as an exact Fourier multiplier on the grid.

use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::exponent::ExponentPair;
use crate::grid::{SampledFunction, TAIL_EPS};
use crate::norm::modulation_norm;
use crate::transform::{fourier, inverse_fourier};

/// Apply `e^{itΔ}`, the multiplier `e^{-it|2πξ|²}`, to the initial datum.
///
/// The multiplier is unimodular and exact on the grid; the only requirement
/// is that the datum's spectrum decays below the tail threshold at the
/// frequency boundary, since the evolution is periodic in the discretized
/// picture and spectral truncation would alias.
pub fn evolve(u0: &SampledFunction, t: f64) -> Result<SampledFunction> {
    if !t.is_finite() {
        return Err(Error::InvalidParam("evolution time must be finite"));
    }
    let mut spectrum = fourier(u0);
    let ratio = spectrum.boundary_tail_ratio();
    if ratio >= TAIL_EPS {
        return Err(Error::TailTruncation { boundary: ratio });
    }
    let grid = spectrum.grid();
    let dim = grid.dim() as usize;
    let mut pt = [0.0f64; 2];
    for idx in 0..grid.point_count() {
        grid.point(idx, &mut pt);
        let xi2: f64 = pt[..dim].iter().map(|c| c * c).sum();
        let theta = -t * (2.0 * PI) * (2.0 * PI) * xi2;
        let (s, c) = theta.sin_cos();
        spectrum.values_mut()[idx] *= Complex64::new(c, s);
    }
    Ok(inverse_fourier(&spectrum))
}

/// `‖e^{itΔ} u_0‖_{M^{p,q}}`: convenience composition for sweep drivers.
pub fn evolve_and_norm(u0: &SampledFunction, t: f64, pair: ExponentPair) -> Result<f64> {
    modulation_norm(&evolve(u0, t)?, pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::grid::{make_gaussian, GaussianFamilyParam, Grid};
    use crate::norm::lp_norm;

    #[test]
    fn zero_time_is_identity() {
        let grid = Grid::new(1, 512, 1.0 / 16.0).unwrap();
        let u0 = make_gaussian(grid, GaussianFamilyParam::phi(1.0)).unwrap();
        let u = evolve(&u0, 0.0).unwrap();
        let sup = u
            .values()
            .iter()
            .zip(u0.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup < 1e-12);
    }

    #[test]
    fn l2_is_conserved() {
        let grid = Grid::new(1, 1024, 1.0 / 16.0).unwrap();
        let u0 = make_gaussian(grid, GaussianFamilyParam::phi(2.0)).unwrap();
        let base = lp_norm(&u0, Exponent::TWO);
        for t in [0.01, 0.5, 3.0, -7.0] {
            let u = evolve(&u0, t).unwrap();
            assert!((lp_norm(&u, Exponent::TWO) - base).abs() < 1e-10, "t={t}");
        }
    }

    #[test]
    fn group_law_and_time_reversal() {
        let grid = Grid::new(1, 1024, 1.0 / 16.0).unwrap();
        let u0 = make_gaussian(grid, GaussianFamilyParam::phi(1.0)).unwrap();
        let two_step = evolve(&evolve(&u0, 0.3).unwrap(), 0.45).unwrap();
        let one_step = evolve(&u0, 0.75).unwrap();
        let sup = two_step
            .values()
            .iter()
            .zip(one_step.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup < 1e-10, "group law error {sup}");

        let lhs = evolve(&u0.conj(), 0.6).unwrap();
        let rhs = evolve(&u0, -0.6).unwrap().conj();
        let sup = lhs
            .values()
            .iter()
            .zip(rhs.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup < 1e-10, "time reversal error {sup}");
    }

    #[test]
    fn spectral_tail_is_enforced() {
        // an indicator has a slowly decaying spectrum: must be rejected
        let grid = Grid::new(1, 256, 1.0 / 16.0).unwrap();
        let f = crate::grid::make_indicator(grid, 1.0).unwrap();
        assert!(matches!(evolve(&f, 0.5), Err(Error::TailTruncation { .. })));
    }
}
