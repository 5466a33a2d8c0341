//! Discrete norm engines: Lebesgue `L^p`, Fourier-Lebesgue `FL^p`, mixed
//! phase-space `L^{p,q}`, Wiener amalgam `W(L^p, L^q)` and `W(FL^p, L^q)`,
//! modulation `M^{p,q}`, the frequency partition-of-unity estimator, and the
//! compact-support equivalence probe.
//!
//! Conventions shared by every engine:
//! * integrals become `dx^d`-weighted sums; `p = ∞` takes the max over samples;
//! * amalgam translates range over the full grid with zero fill, so closed-form
//!   comparisons carry no lattice equivalence constant;
//! * the two canonical windows are the Gaussian `e^{-π|x|²}` and the box
//!   `χ_{B(0,1)}` (half-open per axis in dimension one, which makes the
//!   `W(L^p,L^p) = L^p` Fubini identity exact on the discrete sum).

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, ExponentPair};
use crate::fft::FftPlan;
use crate::grid::{Grid, SampledFunction, TAIL_EPS};
use crate::transform::{fourier, inverse_fourier, stft, PhaseSpaceArray};

/// The sampled Gaussian window underflows past this coordinate radius, so
/// translate loops can skip offsets beyond it.
const GAUSSIAN_WINDOW_CUTOFF: f64 = 27.0;

/// Switch the box-window local sums from direct window sums to prefix sums
/// above this work estimate; direct sums keep the small-grid identity tests
/// exact to machine precision.
const PREFIX_SUM_THRESHOLD: usize = 1 << 24;

fn pow_p(a: f64, p: f64) -> f64 {
    if p == 1.0 {
        a
    } else if p == 2.0 {
        a * a
    } else {
        a.powf(p)
    }
}

/// `(weight * Σ a_i^p)^{1/p}` over magnitudes, or `max a_i` at `p = ∞`.
fn weighted_lp_of_magnitudes(mags: impl Iterator<Item = f64>, p: Exponent, weight: f64) -> f64 {
    if p.is_infinite() {
        mags.fold(0.0f64, f64::max)
    } else {
        let pv = p.value();
        let sum: f64 = mags.map(|a| pow_p(a, pv)).sum();
        (weight * sum).powf(1.0 / pv)
    }
}

/// Discrete `L^p` norm: `(dx^d Σ |f_j|^p)^{1/p}`, `max |f_j|` at `p = ∞`.
pub fn lp_norm(f: &SampledFunction, p: Exponent) -> f64 {
    weighted_lp_of_magnitudes(f.values().iter().map(|v| v.norm()), p, f.grid().cell_volume())
}

/// `FL^p` norm: the `L^p` norm of the Fourier transform.
pub fn flp_norm(f: &SampledFunction, p: Exponent) -> f64 {
    lp_norm(&fourier(f), p)
}

/// Mixed `L^{p,q}` norm of a phase-space array: inner `L^p` over the
/// translate variable, outer `L^q` over frequency.
pub fn mixed_norm(v: &PhaseSpaceArray, pair: ExponentPair) -> f64 {
    let mut acc = MixedAccumulator::new(
        v.xi_grid().point_count(),
        pair,
        v.x_grid().cell_volume(),
        v.xi_grid().cell_volume(),
    );
    for row in v.rows() {
        acc.push_row(row);
    }
    acc.finish()
}

/// Streaming inner-over-x / outer-over-xi accumulator; row pushes follow
/// ascending translate order so results are bitwise reproducible.
struct MixedAccumulator {
    p: Exponent,
    q: Exponent,
    inner_weight: f64,
    outer_weight: f64,
    acc: Vec<f64>,
}

impl MixedAccumulator {
    fn new(xi_count: usize, pair: ExponentPair, inner_weight: f64, outer_weight: f64) -> Self {
        MixedAccumulator {
            p: pair.p,
            q: pair.q,
            inner_weight,
            outer_weight,
            acc: vec![0.0; xi_count],
        }
    }

    fn push_row(&mut self, row: &[Complex64]) {
        if self.p.is_infinite() {
            for (a, v) in self.acc.iter_mut().zip(row) {
                *a = a.max(v.norm());
            }
        } else {
            let pv = self.p.value();
            for (a, v) in self.acc.iter_mut().zip(row) {
                *a += pow_p(v.norm(), pv);
            }
        }
    }

    fn finish(self) -> f64 {
        let inner = self.acc.into_iter().map(|a| {
            if self.p.is_infinite() {
                a
            } else {
                (self.inner_weight * a).powf(1.0 / self.p.value())
            }
        });
        weighted_lp_of_magnitudes(inner, self.q, self.outer_weight)
    }
}

/// Local component of an amalgam space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalSpace {
    Lp,
    FLp,
}

/// Window used to localize amalgam norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    /// `e^{-π|x|²}` — the window Eq.-exact Gaussian closed forms assume.
    Gaussian,
    /// `χ_{B(0,1)}`, half-open per axis in dimension one.
    Box,
}

fn gaussian_window_samples(grid: Grid) -> Result<Vec<f64>> {
    let half = grid.half_extent();
    // window must itself be tail-compliant on this grid
    let boundary = (-PI * half * half).exp();
    if boundary >= TAIL_EPS {
        return Err(Error::TailTruncation { boundary });
    }
    let mut out = Vec::with_capacity(grid.point_count());
    let mut pt = [0.0f64; 2];
    for idx in 0..grid.point_count() {
        grid.point(idx, &mut pt);
        let r2: f64 = pt[..grid.dim() as usize].iter().map(|v| v * v).sum();
        out.push((-PI * r2).exp());
    }
    Ok(out)
}

fn box_radius_cells(grid: Grid) -> Result<usize> {
    let r = 1.0 / grid.spacing();
    let rounded = libm::round(r);
    if (r - rounded).abs() > 1e-9 || rounded < 1.0 {
        return Err(Error::InvalidParam("box window needs 1/dx to be a positive integer"));
    }
    Ok(rounded as usize)
}

/// Wiener amalgam norm `‖f‖_{W(B, L^q)}` with `B = L^p` or `FL^p`:
/// local norms `F(x) = ‖f · T_x g‖_B` over every grid translate, then the
/// global `L^q` norm of `F`.
pub fn amalgam_norm(
    f: &SampledFunction,
    local: LocalSpace,
    pair: ExponentPair,
    window: Window,
) -> Result<f64> {
    let grid = f.grid();
    match (local, window) {
        (LocalSpace::Lp, Window::Box) => amalgam_lp_box(f, pair),
        (LocalSpace::Lp, Window::Gaussian) => amalgam_lp_gaussian(f, pair),
        (LocalSpace::FLp, Window::Box) => {
            let r = box_radius_cells(grid)?;
            amalgam_flp(f, pair, WindowShape::Box(r))
        }
        (LocalSpace::FLp, Window::Gaussian) => {
            let g = gaussian_window_samples(grid)?;
            amalgam_flp(f, pair, WindowShape::Samples(g))
        }
    }
}

fn amalgam_lp_box(f: &SampledFunction, pair: ExponentPair) -> Result<f64> {
    let grid = f.grid();
    let r = box_radius_cells(grid)?;
    match grid.dim() {
        1 => {
            let n = grid.samples_per_axis();
            let dx = grid.spacing();
            let mags: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
            let locals = if pair.p.is_infinite() {
                box_local_sup_1d(&mags, n, r)
            } else {
                let pv = pair.p.value();
                let powed: Vec<f64> = mags.iter().map(|&a| pow_p(a, pv)).collect();
                box_local_lp_1d(&powed, n, r, dx, pv)
            };
            Ok(weighted_lp_of_magnitudes(locals.into_iter(), pair.q, dx))
        }
        _ => {
            // Euclidean ball membership in dimension two
            let n = grid.samples_per_axis();
            let dx = grid.spacing();
            let rc = r as isize;
            let mut offsets = Vec::new();
            for ax in -rc..=rc {
                for ay in -rc..=rc {
                    let u2 = ((ax * ax + ay * ay) as f64) * dx * dx;
                    if u2 < 1.0 {
                        offsets.push((ax, ay));
                    }
                }
            }
            let mags: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
            let pv = pair.p.value();
            let mut locals = Vec::with_capacity(grid.point_count());
            for mx in 0..n as isize {
                for my in 0..n as isize {
                    let mut sum = 0.0f64;
                    let mut sup = 0.0f64;
                    for &(ax, ay) in &offsets {
                        let jx = mx + ax;
                        let jy = my + ay;
                        if jx < 0 || jx >= n as isize || jy < 0 || jy >= n as isize {
                            continue;
                        }
                        let a = mags[jx as usize * n + jy as usize];
                        if pair.p.is_infinite() {
                            sup = sup.max(a);
                        } else {
                            sum += pow_p(a, pv);
                        }
                    }
                    locals.push(if pair.p.is_infinite() {
                        sup
                    } else {
                        (grid.cell_volume() * sum).powf(1.0 / pv)
                    });
                }
            }
            Ok(weighted_lp_of_magnitudes(locals.into_iter(), pair.q, grid.cell_volume()))
        }
    }
}

/// Local sums over the half-open window `[x-1, x+1)`, i.e. source offsets in
/// `[-r, r)` cells; the discrete window measure is exactly 2.
fn box_local_lp_1d(powed: &[f64], n: usize, r: usize, dx: f64, pv: f64) -> Vec<f64> {
    let inv = 1.0 / pv;
    if n * 2 * r > PREFIX_SUM_THRESHOLD {
        let mut prefix = Vec::with_capacity(n + 1);
        let mut s = 0.0f64;
        prefix.push(0.0);
        for &a in powed {
            s += a;
            prefix.push(s);
        }
        (0..n)
            .map(|m| {
                let lo = m.saturating_sub(r);
                let hi = (m + r).min(n);
                let sum = (prefix[hi] - prefix[lo]).max(0.0);
                (dx * sum).powf(inv)
            })
            .collect()
    } else {
        (0..n)
            .map(|m| {
                let lo = m.saturating_sub(r);
                let hi = (m + r).min(n);
                let sum: f64 = powed[lo..hi].iter().sum();
                (dx * sum).powf(inv)
            })
            .collect()
    }
}

fn box_local_sup_1d(mags: &[f64], n: usize, r: usize) -> Vec<f64> {
    (0..n)
        .map(|m| {
            let lo = m.saturating_sub(r);
            let hi = (m + r).min(n);
            mags[lo..hi].iter().fold(0.0f64, |s, &a| s.max(a))
        })
        .collect()
}

fn amalgam_lp_gaussian(f: &SampledFunction, pair: ExponentPair) -> Result<f64> {
    let grid = f.grid();
    let g = gaussian_window_samples(grid)?;
    if grid.dim() != 1 {
        return amalgam_lp_gaussian_2d(f, &g, pair);
    }
    let n = grid.samples_per_axis();
    let dx = grid.spacing();
    let cutoff = ((GAUSSIAN_WINDOW_CUTOFF / dx) as usize).min(n);
    let mags: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
    let pv = pair.p.value();
    let powed: Vec<f64> = if pair.p.is_infinite() {
        Vec::new()
    } else {
        mags.iter().map(|&a| pow_p(a, pv)).collect()
    };
    let half = n as isize / 2;
    let locals = (0..n).map(|m| {
        let lo = m.saturating_sub(cutoff);
        let hi = (m + cutoff).min(n);
        let mut sum = 0.0f64;
        let mut sup = 0.0f64;
        for j in lo..hi {
            // window sample at offset j - m; off-grid reads as zero
            let w_idx = j as isize - m as isize + half;
            if w_idx < 0 || w_idx >= n as isize {
                continue;
            }
            let w = g[w_idx as usize];
            if pair.p.is_infinite() {
                sup = sup.max(mags[j] * w);
            } else {
                sum += powed[j] * pow_p(w, pv);
            }
        }
        if pair.p.is_infinite() {
            sup
        } else {
            (dx * sum).powf(1.0 / pv)
        }
    });
    Ok(weighted_lp_of_magnitudes(locals, pair.q, dx))
}

fn amalgam_lp_gaussian_2d(f: &SampledFunction, g: &[f64], pair: ExponentPair) -> Result<f64> {
    let grid = f.grid();
    let n = grid.samples_per_axis();
    let half = n as isize / 2;
    let mags: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
    let pv = pair.p.value();
    let mut locals = Vec::with_capacity(grid.point_count());
    for mx in 0..n as isize {
        for my in 0..n as isize {
            let mut sum = 0.0f64;
            let mut sup = 0.0f64;
            for jx in 0..n as isize {
                let wx = jx - mx + half;
                if wx < 0 || wx >= n as isize {
                    continue;
                }
                for jy in 0..n as isize {
                    let wy = jy - my + half;
                    if wy < 0 || wy >= n as isize {
                        continue;
                    }
                    let w = g[(wx * n as isize + wy) as usize];
                    let a = mags[(jx * n as isize + jy) as usize];
                    if pair.p.is_infinite() {
                        sup = sup.max(a * w);
                    } else {
                        sum += pow_p(a * w, pv);
                    }
                }
            }
            locals.push(if pair.p.is_infinite() {
                sup
            } else {
                (grid.cell_volume() * sum).powf(1.0 / pv)
            });
        }
    }
    Ok(weighted_lp_of_magnitudes(locals.into_iter(), pair.q, grid.cell_volume()))
}

enum WindowShape {
    Box(usize),
    Samples(Vec<f64>),
}

/// `W(FL^p, L^q)`: per translate, the `L^p` norm of the windowed spectrum
/// (inner variable is frequency), then `L^q` over translates.
fn amalgam_flp(f: &SampledFunction, pair: ExponentPair, shape: WindowShape) -> Result<f64> {
    let grid = f.grid();
    if grid.dim() != 1 {
        return Err(Error::InvalidParam(
            "W(FL^p, L^q) numerics are implemented in dimension one",
        ));
    }
    let n = grid.samples_per_axis();
    let dx = grid.spacing();
    let dxi = grid.reciprocal().spacing();
    let plan = FftPlan::new(n);
    let half = n / 2;
    let mut row = vec![Complex64::new(0.0, 0.0); n];
    let mut locals = Vec::with_capacity(n);
    for m in 0..n {
        for v in row.iter_mut() {
            *v = Complex64::new(0.0, 0.0);
        }
        match &shape {
            WindowShape::Box(r) => {
                let lo = m.saturating_sub(*r);
                let hi = (m + *r).min(n);
                row[lo..hi].copy_from_slice(&f.values()[lo..hi]);
            }
            WindowShape::Samples(g) => {
                let s = m as isize - half as isize;
                for j in 0..n {
                    let w = j as isize - s;
                    if w >= 0 && w < n as isize {
                        row[j] = f.values()[j] * g[w as usize];
                    }
                }
            }
        }
        crate::transform::centered_forward_row(&plan, &mut row, dx);
        locals.push(weighted_lp_of_magnitudes(row.iter().map(|v| v.norm()), pair.p, dxi));
    }
    Ok(weighted_lp_of_magnitudes(locals.into_iter(), pair.q, dx))
}

/// `L²`-normalized Gaussian STFT window `2^{d/4} e^{-π|x|²}`.
pub fn modulation_window(grid: Grid) -> Result<SampledFunction> {
    let samples = gaussian_window_samples(grid)?;
    let scale = 2f64.powf(grid.dim() as f64 / 4.0);
    let values = samples.into_iter().map(|w| Complex64::new(scale * w, 0.0)).collect();
    SampledFunction::from_values(grid, values)
}

/// Modulation norm `‖V_g f‖_{L^{p,q}}` with the unit-`L²` Gaussian window.
///
/// Streams the per-translate spectra through the mixed-norm accumulator in
/// the same order as `mixed_norm(stft(f, g))`, so the two routes agree
/// bitwise without materializing the full phase-space array.
pub fn modulation_norm(f: &SampledFunction, pair: ExponentPair) -> Result<f64> {
    let grid = f.grid();
    let g = modulation_window(grid)?;
    if grid.dim() != 1 {
        let v = stft(f, &g)?;
        return Ok(mixed_norm(&v, pair));
    }
    let n = grid.samples_per_axis();
    let dx = grid.spacing();
    let plan = FftPlan::new(n);
    let half = n / 2;
    let mut row = vec![Complex64::new(0.0, 0.0); n];
    let mut acc = MixedAccumulator::new(n, pair, dx, grid.reciprocal().spacing());
    for m in 0..n {
        for v in row.iter_mut() {
            *v = Complex64::new(0.0, 0.0);
        }
        let s = m as isize - half as isize;
        for j in 0..n {
            let w = j as isize - s;
            if w >= 0 && w < n as isize {
                row[j] = f.values()[j] * g.values()[w as usize].conj();
            }
        }
        crate::transform::centered_forward_row(&plan, &mut row, dx);
        acc.push_row(&row);
    }
    Ok(acc.finish())
}

/// Smooth frequency partition of unity on the unit lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionProfile {
    /// `exp(-1/(1-ξ²))` normalized by its periodization; support `[-1, 1]`.
    MollifierPeriodized,
    /// Telescoping smooth-step profile, identically 1 on `|ξ| <= 1/4`;
    /// support `[-3/4, 3/4]`.
    PlateauTelescope,
}

/// A partition window `ν` with `Σ_k ν(ξ - k) ≡ 1`, truncated at lattice
/// radius `k_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionWindow {
    profile: PartitionProfile,
    k_max: i32,
}

fn mollifier(u: f64) -> f64 {
    if u.abs() < 1.0 {
        (-1.0 / (1.0 - u * u)).exp()
    } else {
        0.0
    }
}

fn smooth_step(s: f64) -> f64 {
    // h(s) + h(1-s) = 1 exactly: shared denominator
    if s <= 0.0 {
        0.0
    } else if s >= 1.0 {
        1.0
    } else {
        let a = (-1.0 / s).exp();
        let b = (-1.0 / (1.0 - s)).exp();
        a / (a + b)
    }
}

impl PartitionWindow {
    pub fn mollifier_periodized(k_max: i32) -> Result<Self> {
        if k_max < 1 {
            return Err(Error::InvalidParam("partition truncation radius must be >= 1"));
        }
        Ok(PartitionWindow { profile: PartitionProfile::MollifierPeriodized, k_max })
    }

    pub fn plateau(k_max: i32) -> Result<Self> {
        if k_max < 1 {
            return Err(Error::InvalidParam("partition truncation radius must be >= 1"));
        }
        Ok(PartitionWindow { profile: PartitionProfile::PlateauTelescope, k_max })
    }

    pub fn k_max(&self) -> i32 {
        self.k_max
    }

    /// `ν(η)`; supported in `[-1, 1]`.
    pub fn profile_value(&self, eta: f64) -> f64 {
        match self.profile {
            PartitionProfile::MollifierPeriodized => {
                if eta.abs() >= 1.0 {
                    return 0.0;
                }
                let p = mollifier(eta + 1.0) + mollifier(eta) + mollifier(eta - 1.0);
                mollifier(eta) / p
            }
            PartitionProfile::PlateauTelescope => {
                // T(eta + 1/2) - T(eta - 1/2) with transition half-width 1/4
                let t = |x: f64| smooth_step((x + 0.25) / 0.5);
                t(eta + 0.5) - t(eta - 0.5)
            }
        }
    }

    /// `|Σ_k ν(ξ-k) - 1|` over the covering lattice translates.
    pub fn partition_defect(&self, xi: f64) -> f64 {
        let k0 = libm::floor(xi) as i64;
        let mut sum = 0.0;
        for k in (k0 - 2)..=(k0 + 2) {
            sum += self.profile_value(xi - k as f64);
        }
        (sum - 1.0).abs()
    }
}

/// Modulation-norm estimator `(Σ_k ‖ν(D-k) f‖_{L^p}^q)^{1/q}` via frequency
/// multipliers on the lattice `|k|_∞ <= k_max`.
pub fn modulation_norm_partition(
    f: &SampledFunction,
    pair: ExponentPair,
    window: &PartitionWindow,
) -> Result<f64> {
    let grid = f.grid();
    let spectrum = fourier(f);
    let k_max = window.k_max;

    // frequency-side tail: spectrum must be negligible beyond |xi| = k_max - 1
    let peak = spectrum.max_abs();
    if peak > 0.0 {
        let limit = (k_max - 1) as f64;
        let mut worst = 0.0f64;
        let mut pt = [0.0f64; 2];
        for (idx, v) in spectrum.values().iter().enumerate() {
            spectrum.grid().point(idx, &mut pt);
            if pt[..grid.dim() as usize].iter().any(|c| c.abs() > limit) {
                worst = worst.max(v.norm());
            }
        }
        if worst / peak >= TAIL_EPS {
            return Err(Error::TailTruncation { boundary: worst / peak });
        }
    }

    let dim = grid.dim() as usize;
    let mut terms = Vec::new();
    let mut lattice = Vec::new();
    match dim {
        1 => {
            for k in -k_max..=k_max {
                lattice.push([k, 0]);
            }
        }
        _ => {
            for kx in -k_max..=k_max {
                for ky in -k_max..=k_max {
                    lattice.push([kx, ky]);
                }
            }
        }
    }
    let mut pt = [0.0f64; 2];
    for k in lattice {
        let mut piece = spectrum.clone();
        for (idx, v) in piece.values_mut().iter_mut().enumerate() {
            spectrum.grid().point(idx, &mut pt);
            let mut w = window.profile_value(pt[0] - k[0] as f64);
            if dim == 2 {
                w *= window.profile_value(pt[1] - k[1] as f64);
            }
            *v *= w;
        }
        terms.push(lp_norm(&inverse_fourier(&piece), pair.p));
    }
    // counting-measure l^q over the lattice
    Ok(weighted_lp_of_magnitudes(terms.into_iter(), pair.q, 1.0))
}

/// Which side of phase space carries the declared compact support.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportSide {
    Time,
    Frequency,
}

/// Measured two-way comparison between the modulation norm and the reference
/// norm that the compact-support equivalence predicts it tracks.
#[derive(Debug, Clone, Copy)]
pub struct EquivalenceReport {
    pub modulation: f64,
    pub reference: f64,
    /// `‖f‖_{M^{p,q}} / reference`; `NaN` for zero input.
    pub ratio: f64,
    /// The reciprocal comparison.
    pub inverse_ratio: f64,
    pub zero_input: bool,
}

/// For `f` compactly supported in time (respectively frequency) inside the
/// ball of radius `support_radius`, returns the ratio of `‖f‖_{M^{p,q}}` to
/// `‖f‖_{FL^q}` (respectively `‖f‖_{L^p}`).
pub fn compact_support_equivalence_check(
    f: &SampledFunction,
    pair: ExponentPair,
    side: SupportSide,
    support_radius: f64,
) -> Result<EquivalenceReport> {
    if !(support_radius > 0.0) {
        return Err(Error::InvalidParam("support radius must be positive"));
    }
    let carrier = match side {
        SupportSide::Time => f.clone(),
        SupportSide::Frequency => fourier(f),
    };
    let peak = carrier.max_abs();
    if peak == 0.0 {
        return Ok(EquivalenceReport {
            modulation: 0.0,
            reference: 0.0,
            ratio: f64::NAN,
            inverse_ratio: f64::NAN,
            zero_input: true,
        });
    }
    let mut pt = [0.0f64; 2];
    let dim = carrier.grid().dim() as usize;
    for (idx, v) in carrier.values().iter().enumerate() {
        carrier.grid().point(idx, &mut pt);
        let r = pt[..dim].iter().map(|c| c * c).sum::<f64>().sqrt();
        if r > support_radius && v.norm() / peak >= TAIL_EPS {
            return Err(Error::SupportViolation);
        }
    }
    let modulation = modulation_norm(f, pair)?;
    let reference = match side {
        SupportSide::Time => flp_norm(f, pair.q),
        SupportSide::Frequency => lp_norm(f, pair.p),
    };
    Ok(EquivalenceReport {
        modulation,
        reference,
        ratio: modulation / reference,
        inverse_ratio: reference / modulation,
        zero_input: false,
    })
}

/// Which norm a [`NormSpec`] selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Lp,
    FLp,
    WLpLq,
    WFLpLq,
    Mpq,
}

/// A fully specified norm: space, exponents, and window where one applies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormSpec {
    pub space: Space,
    pub pair: ExponentPair,
    pub window: Option<Window>,
}

impl NormSpec {
    pub fn validate(&self) -> Result<()> {
        match self.space {
            Space::Lp | Space::FLp => {
                if self.window.is_some() {
                    return Err(Error::InvalidParam("Lebesgue norms take no window"));
                }
            }
            Space::WLpLq | Space::WFLpLq => {
                if self.window.is_none() {
                    return Err(Error::InvalidParam("amalgam norms need a window"));
                }
            }
            Space::Mpq => {
                if !matches!(self.window, None | Some(Window::Gaussian)) {
                    return Err(Error::InvalidParam(
                        "the modulation norm uses the Gaussian window",
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, f: &SampledFunction) -> Result<f64> {
        self.validate()?;
        match self.space {
            Space::Lp => Ok(lp_norm(f, self.pair.p)),
            Space::FLp => Ok(flp_norm(f, self.pair.p)),
            Space::WLpLq => amalgam_norm(f, LocalSpace::Lp, self.pair, self.window.unwrap()),
            Space::WFLpLq => amalgam_norm(f, LocalSpace::FLp, self.pair, self.window.unwrap()),
            Space::Mpq => modulation_norm(f, self.pair),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_gaussian, GaussianFamilyParam};

    #[test]
    fn lp_norm_gaussian_values() {
        let grid = Grid::new(1, 1024, 1.0 / 32.0).unwrap();
        let f = make_gaussian(grid, GaussianFamilyParam::phi(1.0)).unwrap();
        // ∫ e^{-2πt²} dt = 2^{-1/2}
        let l2 = lp_norm(&f, Exponent::TWO);
        assert!((l2 - 2f64.powf(-0.25)).abs() < 1e-12);
        let l1 = lp_norm(&f, Exponent::ONE);
        assert!((l1 - 1.0).abs() < 1e-12);
        assert_eq!(lp_norm(&f, Exponent::INFINITY), 1.0);
    }

    #[test]
    fn fubini_identity_box_window() {
        let grid = Grid::new(1, 1024, 1.0 / 32.0).unwrap();
        let f = make_gaussian(grid, GaussianFamilyParam::phi(1.0)).unwrap();
        for p in [1.0, 1.5, 2.0, 4.0] {
            let pair = ExponentPair::new(p, p).unwrap();
            let am = amalgam_norm(&f, LocalSpace::Lp, pair, Window::Box).unwrap();
            let expect = 2f64.powf(1.0 / p) * lp_norm(&f, pair.p);
            assert!(
                (am - expect).abs() / expect < 1e-10,
                "p={p}: {am} vs {expect}"
            );
        }
    }

    #[test]
    fn amalgam_of_zero_is_zero() {
        let grid = Grid::new(1, 256, 1.0 / 16.0).unwrap();
        let z = SampledFunction::zeros(grid);
        let pair = ExponentPair::new(2.0, 1.0).unwrap();
        assert_eq!(amalgam_norm(&z, LocalSpace::FLp, pair, Window::Gaussian).unwrap(), 0.0);
        assert_eq!(modulation_norm(&z, pair).unwrap(), 0.0);
    }

    #[test]
    fn partition_identity_holds() {
        for win in [
            PartitionWindow::mollifier_periodized(8).unwrap(),
            PartitionWindow::plateau(8).unwrap(),
        ] {
            for i in 0..2000 {
                let xi = -7.0 + 14.0 * (i as f64) / 1999.0;
                assert!(win.partition_defect(xi) < 1e-10, "defect at {xi}");
            }
        }
    }

    #[test]
    fn norm_spec_window_rules() {
        let pair = ExponentPair::new(2.0, 2.0).unwrap();
        assert!(NormSpec { space: Space::WLpLq, pair, window: None }.validate().is_err());
        assert!(NormSpec { space: Space::Lp, pair, window: Some(Window::Box) }
            .validate()
            .is_err());
        assert!(NormSpec { space: Space::Mpq, pair, window: Some(Window::Box) }
            .validate()
            .is_err());
        assert!(NormSpec { space: Space::Mpq, pair, window: None }.validate().is_ok());
    }
}
