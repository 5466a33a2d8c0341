//! Uniform origin-centered grids, sampled functions, the concrete function
//! families used throughout (Gaussians, complex Gaussians, truncated-power
//! witnesses, indicators, smooth bumps), and the elementary operators
//! (dilation, translation, modulation).

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// Relative tail threshold: boundary samples must stay below this fraction of
/// the peak for transforms that assume negligible truncation.
pub const TAIL_EPS: f64 = 1e-12;

/// Uniform grid on `[-N*dx/2, N*dx/2)^d` with `x = 0` exactly on the grid.
///
/// `n` is a power of two so the radix-2 transforms apply directly; the same
/// `n` and spacing are used per axis in dimension two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    dim: u32,
    n: usize,
    dx: f64,
}

impl Grid {
    pub fn new(dim: u32, n: usize, dx: f64) -> Result<Grid> {
        if dim != 1 && dim != 2 {
            return Err(Error::InvalidParam("grid dimension must be 1 or 2"));
        }
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidParam("samples per axis must be a power of two >= 8"));
        }
        if !(dx > 0.0) || !dx.is_finite() {
            return Err(Error::InvalidParam("grid spacing must be positive and finite"));
        }
        Ok(Grid { dim, n, dx })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Samples per axis.
    pub fn samples_per_axis(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        self.dx
    }

    /// Total number of points, `n^d`.
    pub fn point_count(&self) -> usize {
        match self.dim {
            1 => self.n,
            _ => self.n * self.n,
        }
    }

    /// Half-extent `N*dx/2`; the grid covers `[-extent, extent)` per axis.
    pub fn half_extent(&self) -> f64 {
        0.5 * self.n as f64 * self.dx
    }

    /// Coordinate of axis index `i`: `(i - n/2) * dx`.
    pub fn coord(&self, i: usize) -> f64 {
        (i as f64 - (self.n / 2) as f64) * self.dx
    }

    /// Cell volume `dx^d`.
    pub fn cell_volume(&self) -> f64 {
        match self.dim {
            1 => self.dx,
            _ => self.dx * self.dx,
        }
    }

    /// The reciprocal (frequency) grid: same size, spacing `1/(n*dx)`.
    pub fn reciprocal(&self) -> Grid {
        Grid { dim: self.dim, n: self.n, dx: 1.0 / (self.n as f64 * self.dx) }
    }

    /// Row-major linear index of a multi-index.
    pub fn index_of(&self, ix: usize, iy: usize) -> usize {
        match self.dim {
            1 => ix,
            _ => ix * self.n + iy,
        }
    }

    /// Coordinates of linear index `idx`, written into `out[..dim]`.
    pub fn point(&self, idx: usize, out: &mut [f64; 2]) {
        match self.dim {
            1 => out[0] = self.coord(idx),
            _ => {
                out[0] = self.coord(idx / self.n);
                out[1] = self.coord(idx % self.n);
            }
        }
    }
}

/// Complex samples of a function on a [`Grid`], row-major in dimension two.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn zeros(grid: Grid) -> SampledFunction {
        SampledFunction { grid, values: vec![Complex64::new(0.0, 0.0); grid.point_count()] }
    }

    /// Sample `f` at every grid point; rejects non-finite values.
    pub fn from_fn(grid: Grid, mut f: impl FnMut(&[f64]) -> Complex64) -> Result<SampledFunction> {
        let mut values = Vec::with_capacity(grid.point_count());
        let mut pt = [0.0f64; 2];
        for idx in 0..grid.point_count() {
            grid.point(idx, &mut pt);
            let v = f(&pt[..grid.dim() as usize]);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::InvalidParam("sample values must be finite"));
            }
            values.push(v);
        }
        Ok(SampledFunction { grid, values })
    }

    pub fn from_values(grid: Grid, values: Vec<Complex64>) -> Result<SampledFunction> {
        if values.len() != grid.point_count() {
            return Err(Error::GridMismatch);
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParam("sample values must be finite"));
        }
        Ok(SampledFunction { grid, values })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Value at the linear index.
    pub fn value(&self, idx: usize) -> Complex64 {
        self.values[idx]
    }

    /// Value at `x = 0`.
    pub fn value_at_origin(&self) -> Complex64 {
        let c = self.grid.n / 2;
        self.values[self.grid.index_of(c, c)]
    }

    pub fn conj(&self) -> SampledFunction {
        SampledFunction {
            grid: self.grid,
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn scaled(&self, c: Complex64) -> SampledFunction {
        SampledFunction { grid: self.grid, values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &SampledFunction) -> Result<SampledFunction> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(SampledFunction {
            grid: self.grid,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.norm()))
    }

    /// Largest `|f|` over the boundary shell, relative to the peak.
    pub fn boundary_tail_ratio(&self) -> f64 {
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let n = self.grid.n;
        let mut worst = 0.0f64;
        match self.grid.dim {
            1 => {
                worst = worst.max(self.values[0].norm());
                worst = worst.max(self.values[n - 1].norm());
            }
            _ => {
                for i in 0..n {
                    for (ix, iy) in [(0, i), (n - 1, i), (i, 0), (i, n - 1)] {
                        worst = worst.max(self.values[self.grid.index_of(ix, iy)].norm());
                    }
                }
            }
        }
        worst / peak
    }

    fn check_tail(&self) -> Result<()> {
        let ratio = self.boundary_tail_ratio();
        if ratio >= TAIL_EPS {
            return Err(Error::TailTruncation { boundary: ratio });
        }
        Ok(())
    }
}

/// Which Gaussian family convention a parameter refers to.
///
/// `Phi(lambda)` is `e^{-pi lambda |x|^2}`; `U0(lambda)` is the dilated unit
/// Gaussian `e^{-pi lambda^2 |x|^2}`, so `Phi(lambda^2) = U0(lambda)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianConvention {
    Phi,
    U0,
}

/// Parameter of the Gaussian family in one of the two conventions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianFamilyParam {
    pub lambda: f64,
    pub convention: GaussianConvention,
}

impl GaussianFamilyParam {
    pub fn phi(lambda: f64) -> Self {
        GaussianFamilyParam { lambda, convention: GaussianConvention::Phi }
    }

    pub fn u0(lambda: f64) -> Self {
        GaussianFamilyParam { lambda, convention: GaussianConvention::U0 }
    }

    /// The `Phi`-convention rate: `lambda` for `Phi`, `lambda^2` for `U0`.
    pub fn phi_rate(&self) -> f64 {
        match self.convention {
            GaussianConvention::Phi => self.lambda,
            GaussianConvention::U0 => self.lambda * self.lambda,
        }
    }
}

/// Sample the real Gaussian of the chosen convention; peak value 1 at `x = 0`.
pub fn make_gaussian(grid: Grid, param: GaussianFamilyParam) -> Result<SampledFunction> {
    if !(param.lambda > 0.0) || !param.lambda.is_finite() {
        return Err(Error::InvalidParam("gaussian rate must be positive"));
    }
    let rate = param.phi_rate();
    let f = SampledFunction::from_fn(grid, |x| {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        Complex64::new((-PI * rate * r2).exp(), 0.0)
    })?;
    f.check_tail()?;
    Ok(f)
}

/// Sample `(a+ib)^{-d/2} e^{-pi |x|^2 / (a+ib)}` with the principal branch of
/// the complex power; requires `a > 0`.
pub fn make_complex_gaussian(grid: Grid, a: f64, b: f64) -> Result<SampledFunction> {
    if !(a > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParam("complex gaussian needs a > 0 and finite b"));
    }
    let w = Complex64::new(a, b);
    let d = grid.dim() as f64;
    // principal branch: |w|^{-d/2} e^{-i (d/2) arg w}, arg w in (-pi/2, pi/2)
    let prefactor = Complex64::from_polar(w.norm().powf(-d / 2.0), -(d / 2.0) * w.arg());
    let inv_w = w.inv();
    let f = SampledFunction::from_fn(grid, |x| {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        prefactor * (-PI * r2 * inv_w).exp()
    })?;
    f.check_tail()?;
    Ok(f)
}

/// Which truncated-power witness to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// `|t|^{-1/p + eps}` supported in `|t| <= 1`; saturates the small-dilation bound.
    SmallLambda,
    /// `|t|^{-1/q - eps}` supported in `|t| >= 1`; saturates the large-dilation bound.
    LargeLambda,
}

/// Parameters of a sharpness witness (dimension one only).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessSpec {
    pub kind: WitnessKind,
    /// `p` for [`WitnessKind::SmallLambda`], `q` for [`WitnessKind::LargeLambda`].
    pub exponent: Exponent,
    pub eps: f64,
}

impl WitnessSpec {
    /// The decay rate `beta` in `|t|^{-beta}`.
    pub fn power(&self) -> f64 {
        match self.kind {
            WitnessKind::SmallLambda => self.exponent.reciprocal() - self.eps,
            WitnessKind::LargeLambda => self.exponent.reciprocal() + self.eps,
        }
    }
}

/// Sample the witness itself (the `lambda = 1` member of the dilated family).
pub fn make_witness(grid: Grid, spec: WitnessSpec) -> Result<SampledFunction> {
    make_witness_dilated(grid, spec, 1.0)
}

/// Sample `f(lambda t)` for the witness `f`, analytically on the grid.
///
/// The singular sample of the small-lambda witness at `t = 0` is taken at the
/// half-cell point `t = dx/2`, keeping the sampled family exactly
/// self-similar under dilation.
pub fn make_witness_dilated(grid: Grid, spec: WitnessSpec, lambda: f64) -> Result<SampledFunction> {
    if grid.dim() != 1 {
        return Err(Error::InvalidParam("witness functions are one-dimensional"));
    }
    if !(spec.eps > 0.0) || !spec.eps.is_finite() {
        return Err(Error::InvalidParam("witness eps must be positive"));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParam("dilation parameter must be positive"));
    }
    let beta = spec.power();
    let half_cell = 0.5 * grid.spacing();
    SampledFunction::from_fn(grid, |x| {
        let t = match spec.kind {
            // cell-midpoint rule at the singular point
            WitnessKind::SmallLambda => {
                if x[0] == 0.0 {
                    half_cell
                } else {
                    x[0].abs()
                }
            }
            WitnessKind::LargeLambda => x[0].abs(),
        };
        let u = lambda * t;
        let inside = match spec.kind {
            WitnessKind::SmallLambda => u <= 1.0,
            WitnessKind::LargeLambda => u >= 1.0,
        };
        if inside {
            Complex64::new(u.powf(-beta), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Indicator of the centered ball of radius `r` (an interval in dimension
/// one), sampled with value 1/2 on the boundary so the discrete transform
/// converges to the jump midpoint.
pub fn make_indicator(grid: Grid, radius: f64) -> Result<SampledFunction> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidParam("indicator radius must be positive"));
    }
    let edge_tol = 1e-12 * radius.max(1.0);
    SampledFunction::from_fn(grid, |x| {
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let v = if (r - radius).abs() <= edge_tol {
            0.5
        } else if r < radius {
            1.0
        } else {
            0.0
        };
        Complex64::new(v, 0.0)
    })
}

/// Smooth compactly supported bump `exp(-1/(1 - (|x|/r)^2))` on `|x| < r`.
pub fn make_bump(grid: Grid, radius: f64) -> Result<SampledFunction> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidParam("bump radius must be positive"));
    }
    SampledFunction::from_fn(grid, |x| {
        let u2 = x.iter().map(|v| v * v).sum::<f64>() / (radius * radius);
        if u2 < 1.0 {
            Complex64::new((-1.0 / (1.0 - u2)).exp(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `f(lambda x)` by linear interpolation on the source grid; points mapping
/// outside the extent read as zero.
pub fn dilate(f: &SampledFunction, lambda: f64) -> Result<SampledFunction> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParam("dilation parameter must be positive"));
    }
    let grid = f.grid();
    let n = grid.samples_per_axis();
    let half = (n / 2) as f64;
    // fractional axis index of coordinate y
    let axis_pos = |y: f64| y / grid.spacing() + half;
    let sample_axis = |pos: f64| -> Option<(usize, usize, f64)> {
        if !(pos >= 0.0) || pos > (n - 1) as f64 {
            return None;
        }
        let i0 = pos.floor() as usize;
        let i1 = (i0 + 1).min(n - 1);
        Some((i0, i1, pos - i0 as f64))
    };
    let values = match grid.dim() {
        1 => (0..n)
            .map(|j| {
                let pos = axis_pos(lambda * grid.coord(j));
                match sample_axis(pos) {
                    Some((i0, i1, w)) => f.values()[i0] * (1.0 - w) + f.values()[i1] * w,
                    None => Complex64::new(0.0, 0.0),
                }
            })
            .collect(),
        _ => {
            let mut out = Vec::with_capacity(grid.point_count());
            for jx in 0..n {
                let px = axis_pos(lambda * grid.coord(jx));
                for jy in 0..n {
                    let py = axis_pos(lambda * grid.coord(jy));
                    let v = match (sample_axis(px), sample_axis(py)) {
                        (Some((x0, x1, wx)), Some((y0, y1, wy))) => {
                            let f00 = f.values()[grid.index_of(x0, y0)];
                            let f01 = f.values()[grid.index_of(x0, y1)];
                            let f10 = f.values()[grid.index_of(x1, y0)];
                            let f11 = f.values()[grid.index_of(x1, y1)];
                            (f00 * (1.0 - wx) + f10 * wx) * (1.0 - wy)
                                + (f01 * (1.0 - wx) + f11 * wx) * wy
                        }
                        _ => Complex64::new(0.0, 0.0),
                    };
                    out.push(v);
                }
            }
            out
        }
    };
    Ok(SampledFunction { grid, values })
}

/// How translation treats samples shifted past the grid edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShiftMode {
    #[default]
    ZeroFill,
    Circular,
}

/// Exact shift `f(t - x0)` per axis; `x0` must be a multiple of the spacing.
pub fn translate(f: &SampledFunction, shift: &[f64], mode: ShiftMode) -> Result<SampledFunction> {
    let grid = f.grid();
    if shift.len() != grid.dim() as usize {
        return Err(Error::InvalidParam("shift dimension must match the grid"));
    }
    let n = grid.samples_per_axis();
    let mut cells = [0isize; 2];
    for (axis, &s) in shift.iter().enumerate() {
        let raw = s / grid.spacing();
        let rounded = libm::round(raw);
        if (raw - rounded).abs() > 1e-9 * raw.abs().max(1.0) {
            return Err(Error::OffGridShift);
        }
        cells[axis] = rounded as isize;
    }
    let fetch_axis = |j: usize, c: isize| -> Option<usize> {
        let src = j as isize - c;
        match mode {
            ShiftMode::ZeroFill => (src >= 0 && src < n as isize).then_some(src as usize),
            ShiftMode::Circular => Some(src.rem_euclid(n as isize) as usize),
        }
    };
    let values = match grid.dim() {
        1 => (0..n)
            .map(|j| match fetch_axis(j, cells[0]) {
                Some(src) => f.values()[src],
                None => Complex64::new(0.0, 0.0),
            })
            .collect(),
        _ => {
            let mut out = Vec::with_capacity(grid.point_count());
            for jx in 0..n {
                for jy in 0..n {
                    let v = match (fetch_axis(jx, cells[0]), fetch_axis(jy, cells[1])) {
                        (Some(sx), Some(sy)) => f.values()[grid.index_of(sx, sy)],
                        _ => Complex64::new(0.0, 0.0),
                    };
                    out.push(v);
                }
            }
            out
        }
    };
    Ok(SampledFunction { grid, values })
}

/// Pointwise phase multiplication `e^{2πi xi0·t} f(t)`.
pub fn modulate(f: &SampledFunction, freq: &[f64]) -> Result<SampledFunction> {
    let grid = f.grid();
    if freq.len() != grid.dim() as usize {
        return Err(Error::InvalidParam("frequency dimension must match the grid"));
    }
    let mut pt = [0.0f64; 2];
    let mut values = Vec::with_capacity(grid.point_count());
    for (idx, v) in f.values().iter().enumerate() {
        grid.point(idx, &mut pt);
        let phase: f64 = freq.iter().zip(pt.iter()).map(|(a, b)| a * b).sum();
        let (s, c) = (2.0 * PI * phase).sin_cos();
        values.push(v * Complex64::new(c, s));
    }
    Ok(SampledFunction { grid, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> Grid {
        Grid::new(1, 512, 1.0 / 16.0).unwrap()
    }

    #[test]
    fn grid_has_exact_origin() {
        let g = g1();
        assert_eq!(g.coord(g.samples_per_axis() / 2), 0.0);
        assert!(Grid::new(1, 12, 0.1).is_err());
        assert!(Grid::new(3, 16, 0.1).is_err());
    }

    #[test]
    fn gaussian_values_and_convention() {
        let g = g1();
        let f = make_gaussian(g, GaussianFamilyParam::phi(1.0)).unwrap();
        assert_eq!(f.value_at_origin().re, 1.0);
        // x = 1 -> e^{-pi}
        let j = g.samples_per_axis() / 2 + 16;
        assert!((f.value(j).re - (-PI).exp()).abs() < 1e-15);
        // PHI(lambda^2) = U0(lambda)
        let a = make_gaussian(g, GaussianFamilyParam::phi(16.0)).unwrap();
        let b = make_gaussian(g, GaussianFamilyParam::u0(4.0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn gaussian_tail_truncation_detected() {
        let g = Grid::new(1, 8, 0.125).unwrap(); // extent 0.5: far too small
        match make_gaussian(g, GaussianFamilyParam::phi(1.0)) {
            Err(Error::TailTruncation { .. }) => {}
            other => panic!("expected TailTruncation, got {other:?}"),
        }
        assert!(make_gaussian(g1(), GaussianFamilyParam::phi(-1.0)).is_err());
    }

    #[test]
    fn complex_gaussian_principal_branch() {
        let g = g1();
        let f = make_complex_gaussian(g, 1.0, 1.0).unwrap();
        // (1+i)^{-1/2} = 2^{-1/4} e^{-i pi/8}
        let expect = Complex64::from_polar(2f64.powf(-0.25), -PI / 8.0);
        assert!((f.value_at_origin() - expect).norm() < 1e-15);
        // b = 0 reduces to the real Gaussian
        let r = make_complex_gaussian(g, 1.0, 0.0).unwrap();
        let phi = make_gaussian(g, GaussianFamilyParam::phi(1.0)).unwrap();
        for (a, b) in r.values().iter().zip(phi.values()) {
            assert!((a - b).norm() < 1e-15);
        }
        // conjugate symmetry in b
        let fm = make_complex_gaussian(g, 1.0, -1.0).unwrap();
        for (a, b) in f.values().iter().zip(fm.values()) {
            assert!((a - b.conj()).norm() < 1e-15);
        }
    }

    #[test]
    fn witness_values() {
        let g = Grid::new(1, 4096, 1.0 / 256.0).unwrap();
        let spec = WitnessSpec {
            kind: WitnessKind::SmallLambda,
            exponent: Exponent::TWO,
            eps: 0.1,
        };
        let f = make_witness(g, spec).unwrap();
        let c = g.samples_per_axis() / 2;
        // t = 1 -> 1
        assert!((f.value(c + 256).re - 1.0).abs() < 1e-12);
        // t = 0.25 -> 0.25^{-0.4}
        assert!((f.value(c + 64).re - 0.25f64.powf(-0.4)).abs() < 1e-12);
        // half-cell rule at the singular point
        assert!((f.value(c).re - (g.spacing() / 2.0).powf(-0.4)).abs() < 1e-12);
        // evenness on the symmetrized grid
        for k in 1..c {
            assert_eq!(f.value(c + k), f.value(c - k));
        }
        let large = WitnessSpec {
            kind: WitnessKind::LargeLambda,
            exponent: Exponent::TWO,
            eps: 0.1,
        };
        let fl = make_witness(g, large).unwrap();
        // t = 0.5 outside support
        assert_eq!(fl.value(c + 128).re, 0.0);
        assert!(make_witness(g, WitnessSpec { eps: -0.1, ..spec }).is_err());
    }

    #[test]
    fn dilate_identity_and_gaussian() {
        let g = Grid::new(1, 2048, 1.0 / 64.0).unwrap();
        let f = make_gaussian(g, GaussianFamilyParam::phi(1.0)).unwrap();
        let same = dilate(&f, 1.0).unwrap();
        for (a, b) in same.values().iter().zip(f.values()) {
            assert!((a - b).norm() < 1e-15);
        }
        let d2 = dilate(&f, 2.0).unwrap();
        let phi4 = make_gaussian(g, GaussianFamilyParam::phi(4.0)).unwrap();
        let sup = d2
            .values()
            .iter()
            .zip(phi4.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup <= 1e-3, "interpolation error {sup}");
        assert!(dilate(&f, 0.0).is_err());
    }

    #[test]
    fn dilate_roundtrip_on_smooth_function() {
        let g = Grid::new(1, 2048, 1.0 / 64.0).unwrap();
        let f = make_gaussian(g, GaussianFamilyParam::phi(1.0)).unwrap();
        let back = dilate(&dilate(&f, 1.5).unwrap(), 1.0 / 1.5).unwrap();
        let sup = back
            .values()
            .iter()
            .zip(f.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup <= 2e-3, "roundtrip error {sup}");
    }

    #[test]
    fn dilate_indicator_support() {
        let g = Grid::new(1, 1024, 1.0 / 64.0).unwrap();
        let f = make_indicator(g, 1.0).unwrap();
        let d = dilate(&f, 2.0).unwrap();
        let c = g.samples_per_axis() / 2;
        // inside |t| < 1/2 - one cell
        assert_eq!(d.value(c).re, 1.0);
        assert_eq!(d.value(c + 30).re, 1.0);
        // outside |t| > 1/2 + one cell
        assert_eq!(d.value(c + 34).re, 0.0);
    }

    #[test]
    fn translate_and_modulate() {
        let g = g1();
        let f = make_gaussian(g, GaussianFamilyParam::phi(2.0)).unwrap();
        let t0 = translate(&f, &[0.0], ShiftMode::ZeroFill).unwrap();
        assert_eq!(t0, f);
        let m0 = modulate(&f, &[0.0]).unwrap();
        for (a, b) in m0.values().iter().zip(f.values()) {
            assert!((a - b).norm() < 1e-15);
        }
        let m = modulate(&f, &[3.7]).unwrap();
        for (a, b) in m.values().iter().zip(f.values()) {
            assert!((a.norm() - b.norm()).abs() < 1e-14);
        }
        assert!(matches!(
            translate(&f, &[g.spacing() * 0.5], ShiftMode::ZeroFill),
            Err(Error::OffGridShift)
        ));
        // circular vs zero-fill differ only in what wraps in
        let shifted = translate(&f, &[1.0], ShiftMode::Circular).unwrap();
        assert_eq!(shifted.value(g.samples_per_axis() / 2 + 16), f.value(g.samples_per_axis() / 2));
    }
}
