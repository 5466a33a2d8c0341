//! Discrete approximations of the continuous Fourier transform, linear
//! convolution, pointwise product, and the short-time Fourier transform.
//!
//! The DFT is calibrated to the continuous transform
//! `F f(xi) = ∫ f(t) e^{-2πi xi t} dt`: origin-centered index order on both
//! sides, a `dx` factor in the forward sum, and the reciprocal grid spacing
//! `1/(n dx)`. With that calibration closed-form comparisons are absolute,
//! not up-to-constant.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft::FftPlan;
use crate::grid::{Grid, SampledFunction};

/// Centered forward pass on one contiguous line, in place.
///
/// Computes `F_k = dx * sum_j f_j e^{-2πi (k - n/2)(j - n/2)/n}` via the
/// `(-1)^j` / `(-1)^k` checkerboard; exact because `n` is divisible by 4.
fn centered_forward_line(plan: &FftPlan, buf: &mut [Complex64], dx: f64) {
    for v in buf.iter_mut().skip(1).step_by(2) {
        *v = -*v;
    }
    plan.forward(buf);
    for (k, v) in buf.iter_mut().enumerate() {
        if k % 2 == 1 {
            *v = -*v;
        }
        *v *= dx;
    }
}

/// Centered forward pass on a caller-owned scratch row; shared with the
/// streaming norm engines.
pub(crate) fn centered_forward_row(plan: &FftPlan, buf: &mut [Complex64], dx: f64) {
    centered_forward_line(plan, buf, dx);
}

/// Inverse of [`centered_forward_line`] on the reciprocal line.
fn centered_inverse_line(plan: &FftPlan, buf: &mut [Complex64], dxi: f64) {
    let n = buf.len() as f64;
    for v in buf.iter_mut().skip(1).step_by(2) {
        *v = -*v;
    }
    plan.inverse(buf);
    for (j, v) in buf.iter_mut().enumerate() {
        if j % 2 == 1 {
            *v = -*v;
        }
        *v *= n * dxi;
    }
}

fn transform_axes(
    values: &mut [Complex64],
    grid: Grid,
    plan: &FftPlan,
    line: impl Fn(&FftPlan, &mut [Complex64]),
) {
    let n = grid.samples_per_axis();
    match grid.dim() {
        1 => line(plan, values),
        _ => {
            // rows (y axis) are contiguous
            for row in values.chunks_mut(n) {
                line(plan, row);
            }
            // columns (x axis) via a scratch line
            let mut col = vec![Complex64::new(0.0, 0.0); n];
            for y in 0..n {
                for x in 0..n {
                    col[x] = values[x * n + y];
                }
                line(plan, &mut col);
                for x in 0..n {
                    values[x * n + y] = col[x];
                }
            }
        }
    }
}

/// Approximate `∫ f(t) e^{-2πi xi t} dt`; the result lives on the reciprocal grid.
pub fn fourier(f: &SampledFunction) -> SampledFunction {
    let grid = f.grid();
    let plan = FftPlan::new(grid.samples_per_axis());
    let mut values = f.values().to_vec();
    let dx = grid.spacing();
    transform_axes(&mut values, grid, &plan, |p, line| centered_forward_line(p, line, dx));
    SampledFunction::from_values(grid.reciprocal(), values)
        .expect("forward transform preserves length and finiteness")
}

/// Exact inverse of [`fourier`] up to round-off.
pub fn inverse_fourier(spectrum: &SampledFunction) -> SampledFunction {
    let grid = spectrum.grid();
    let plan = FftPlan::new(grid.samples_per_axis());
    let mut values = spectrum.values().to_vec();
    let dxi = grid.spacing();
    transform_axes(&mut values, grid, &plan, |p, line| centered_inverse_line(p, line, dxi));
    SampledFunction::from_values(grid.reciprocal(), values)
        .expect("inverse transform preserves length and finiteness")
}

/// Linear (zero-padded) convolution approximating `∫ f(t-s) g(s) ds`.
///
/// Both inputs must decay below the tail threshold at the boundary; the
/// doubled transform length then makes wrap-around negligible.
pub fn convolve(f: &SampledFunction, g: &SampledFunction) -> Result<SampledFunction> {
    let grid = f.grid();
    if grid != g.grid() {
        return Err(Error::GridMismatch);
    }
    for h in [f, g] {
        let ratio = h.boundary_tail_ratio();
        if ratio >= crate::grid::TAIL_EPS {
            return Err(Error::TailTruncation { boundary: ratio });
        }
    }
    let n = grid.samples_per_axis();
    let m = 2 * n;
    let plan = FftPlan::new(m);
    let dim = grid.dim();

    let pad = |src: &SampledFunction| -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); if dim == 1 { m } else { m * m }];
        match dim {
            1 => out[..n].copy_from_slice(src.values()),
            _ => {
                for x in 0..n {
                    out[x * m..x * m + n].copy_from_slice(&src.values()[x * n..(x + 1) * n]);
                }
            }
        }
        out
    };
    let fft_all = |buf: &mut [Complex64], inverse: bool| match dim {
        1 => {
            if inverse {
                plan.inverse(buf)
            } else {
                plan.forward(buf)
            }
        }
        _ => {
            for row in buf.chunks_mut(m) {
                if inverse {
                    plan.inverse(row)
                } else {
                    plan.forward(row)
                }
            }
            let mut col = vec![Complex64::new(0.0, 0.0); m];
            for y in 0..m {
                for x in 0..m {
                    col[x] = buf[x * m + y];
                }
                if inverse {
                    plan.inverse(&mut col)
                } else {
                    plan.forward(&mut col)
                }
                for x in 0..m {
                    buf[x * m + y] = col[x];
                }
            }
        }
    };

    let mut fa = pad(f);
    let mut ga = pad(g);
    fft_all(&mut fa, false);
    fft_all(&mut ga, false);
    for (a, b) in fa.iter_mut().zip(ga.iter()) {
        *a *= b;
    }
    fft_all(&mut fa, true);

    // index algebra: out[j] = dx^d * padded[j + n/2] per axis
    let scale = grid.cell_volume();
    let values = match dim {
        1 => fa[n / 2..n / 2 + n].iter().map(|v| v * scale).collect(),
        _ => {
            let mut out = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    out.push(fa[(x + n / 2) * m + (y + n / 2)] * scale);
                }
            }
            out
        }
    };
    SampledFunction::from_values(grid, values)
}

/// Exact sample-wise product.
pub fn pointwise_product(f: &SampledFunction, g: &SampledFunction) -> Result<SampledFunction> {
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    let values = f.values().iter().zip(g.values()).map(|(a, b)| a * b).collect();
    SampledFunction::from_values(f.grid(), values)
}

/// Short-time Fourier transform samples `V_g f(x, xi) = <f, M_xi T_x g>` on
/// the full phase-space grid: translates `x` over the whole grid (zero-fill)
/// and `xi` over the reciprocal grid.
#[derive(Debug, Clone)]
pub struct PhaseSpaceArray {
    x_grid: Grid,
    xi_grid: Grid,
    values: Vec<Complex64>,
}

impl PhaseSpaceArray {
    pub fn x_grid(&self) -> Grid {
        self.x_grid
    }

    pub fn xi_grid(&self) -> Grid {
        self.xi_grid
    }

    /// Entry at translate index `m` and frequency index `k` (linear indices).
    pub fn value(&self, m: usize, k: usize) -> Complex64 {
        self.values[m * self.xi_grid.point_count() + k]
    }

    /// All frequencies for one translate.
    pub fn row(&self, m: usize) -> &[Complex64] {
        let c = self.xi_grid.point_count();
        &self.values[m * c..(m + 1) * c]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.values.chunks(self.xi_grid.point_count())
    }

    pub fn translate_count(&self) -> usize {
        self.x_grid.point_count()
    }
}

/// Compute the STFT; `V_g f(x, xi) = dx^d Σ_t f(t) conj(g(t-x)) e^{-2πi xi·t}`.
pub fn stft(f: &SampledFunction, g: &SampledFunction) -> Result<PhaseSpaceArray> {
    let grid = f.grid();
    if grid != g.grid() {
        return Err(Error::GridMismatch);
    }
    let n = grid.samples_per_axis();
    let count = grid.point_count();
    let plan = FftPlan::new(n);
    let dx = grid.spacing();
    let mut values = vec![Complex64::new(0.0, 0.0); count * count];

    match grid.dim() {
        1 => {
            let half = n / 2;
            for m in 0..n {
                let s = m as isize - half as isize; // shift in cells
                let row = &mut values[m * n..(m + 1) * n];
                let (dst_lo, src_lo, len) = if s >= 0 {
                    (s as usize, 0usize, n - s as usize)
                } else {
                    (0usize, (-s) as usize, n - (-s) as usize)
                };
                for i in 0..len {
                    let j = dst_lo + i;
                    row[j] = f.values()[j] * g.values()[src_lo + i].conj();
                }
                centered_forward_line(&plan, row, dx);
            }
        }
        _ => {
            let half = n / 2;
            let mut window = vec![Complex64::new(0.0, 0.0); count];
            for mx in 0..n {
                for my in 0..n {
                    let m = mx * n + my;
                    let sx = mx as isize - half as isize;
                    let sy = my as isize - half as isize;
                    for w in window.iter_mut() {
                        *w = Complex64::new(0.0, 0.0);
                    }
                    for jx in 0..n {
                        let gx = jx as isize - sx;
                        if gx < 0 || gx >= n as isize {
                            continue;
                        }
                        for jy in 0..n {
                            let gy = jy as isize - sy;
                            if gy < 0 || gy >= n as isize {
                                continue;
                            }
                            let j = jx * n + jy;
                            window[j] =
                                f.values()[j] * g.values()[gx as usize * n + gy as usize].conj();
                        }
                    }
                    transform_axes(&mut window, grid, &plan, |p, line| {
                        centered_forward_line(p, line, dx)
                    });
                    values[m * count..(m + 1) * count].copy_from_slice(&window);
                }
            }
        }
    }

    Ok(PhaseSpaceArray { x_grid: grid, xi_grid: grid.reciprocal(), values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_gaussian, GaussianFamilyParam};

    #[test]
    fn inverse_roundtrip() {
        let grid = Grid::new(1, 256, 1.0 / 16.0).unwrap();
        let f = make_gaussian(grid, GaussianFamilyParam::phi(1.0)).unwrap();
        let back = inverse_fourier(&fourier(&f));
        assert_eq!(back.grid(), grid);
        let sup = back
            .values()
            .iter()
            .zip(f.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup < 1e-12, "roundtrip error {sup}");
    }

    #[test]
    fn forward_after_inverse_roundtrip() {
        let grid = Grid::new(1, 256, 1.0 / 16.0).unwrap();
        let f = make_gaussian(grid, GaussianFamilyParam::phi(2.0)).unwrap();
        let fhat = fourier(&f);
        let again = fourier(&inverse_fourier(&fhat));
        let sup = again
            .values()
            .iter()
            .zip(fhat.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        assert!(sup < 1e-12);
    }

    #[test]
    fn product_identities() {
        let grid = Grid::new(1, 128, 1.0 / 8.0).unwrap();
        let f = make_gaussian(grid, GaussianFamilyParam::phi(1.0)).unwrap();
        let ones = SampledFunction::from_fn(grid, |_| Complex64::new(1.0, 0.0)).unwrap();
        let zeros = SampledFunction::zeros(grid);
        assert_eq!(pointwise_product(&f, &ones).unwrap(), f);
        assert_eq!(pointwise_product(&f, &zeros).unwrap(), zeros);
        let g2 = Grid::new(1, 256, 1.0 / 8.0).unwrap();
        let other = SampledFunction::zeros(g2);
        assert!(matches!(pointwise_product(&f, &other), Err(Error::GridMismatch)));
    }
}
