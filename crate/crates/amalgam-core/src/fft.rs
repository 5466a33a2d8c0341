//! Radix-2 FFT over power-of-two lengths.
//!
//! The grid contract guarantees power-of-two sizes, so a plain iterative
//! Cooley-Tukey kernel with a precomputed twiddle table covers every
//! transform in the crate. Summation order is fixed, which keeps repeated
//! runs bitwise identical.

use alloc::vec::Vec;
use num_complex::Complex64;
use num_traits::Float;

/// Precomputed twiddles and bit-reversal permutation for one size.
///
/// Build once and reuse across the many same-size transforms of an STFT or
/// amalgam evaluation; construction costs O(n) trigonometric calls.
pub struct FftPlan {
    n: usize,
    stages: u32,
    // twiddles[k] = exp(-2*pi*i*k/n), k < n/2
    twiddles: Vec<Complex64>,
    bitrev: Vec<u32>,
}

impl FftPlan {
    /// `n` must be a power of two and at least 2.
    pub fn new(n: usize) -> FftPlan {
        assert!(n.is_power_of_two() && n >= 2, "FFT size must be a power of two >= 2");
        let stages = n.trailing_zeros();
        let mut twiddles = Vec::with_capacity(n / 2);
        for k in 0..n / 2 {
            let theta = -2.0 * core::f64::consts::PI * (k as f64) / (n as f64);
            let (s, c) = theta.sin_cos();
            twiddles.push(Complex64::new(c, s));
        }
        let mut bitrev = vec_with_len(n);
        for (i, slot) in bitrev.iter_mut().enumerate() {
            *slot = (i as u32).reverse_bits() >> (32 - stages);
        }
        FftPlan { n, stages, twiddles, bitrev }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// In-place forward DFT: `X_k = sum_j x_j e^{-2πi jk/n}`.
    pub fn forward(&self, buf: &mut [Complex64]) {
        self.transform(buf, false);
    }

    /// In-place inverse DFT: `x_j = (1/n) sum_k X_k e^{+2πi jk/n}`.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        self.transform(buf, true);
        let scale = 1.0 / self.n as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
    }

    fn transform(&self, buf: &mut [Complex64], inverse: bool) {
        assert_eq!(buf.len(), self.n, "buffer length must match plan size");
        for i in 0..self.n {
            let j = self.bitrev[i] as usize;
            if i < j {
                buf.swap(i, j);
            }
        }
        for stage in 1..=self.stages {
            let m = 1usize << stage; // butterfly span
            let half = m >> 1;
            let step = self.n >> stage; // twiddle stride
            let mut base = 0;
            while base < self.n {
                for k in 0..half {
                    let mut w = self.twiddles[k * step];
                    if inverse {
                        w = w.conj();
                    }
                    let lo = base + k;
                    let hi = lo + half;
                    let t = w * buf[hi];
                    buf[hi] = buf[lo] - t;
                    buf[lo] += t;
                }
                base += m;
            }
        }
    }
}

fn vec_with_len(n: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(n);
    v.resize(n, 0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        (0..n)
            .map(|k| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, &v) in x.iter().enumerate() {
                    let theta = -2.0 * core::f64::consts::PI * (j * k) as f64 / n as f64;
                    let (s, c) = theta.sin_cos();
                    acc += v * Complex64::new(c, s);
                }
                acc
            })
            .collect()
    }

    #[test]
    fn matches_naive_dft() {
        let n = 64;
        let plan = FftPlan::new(n);
        let mut buf: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new((j as f64 * 0.7).sin(), (j as f64 * 1.3).cos()))
            .collect();
        let expect = naive_dft(&buf);
        plan.forward(&mut buf);
        for (a, b) in buf.iter().zip(expect.iter()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn roundtrip_identity() {
        let n = 256;
        let plan = FftPlan::new(n);
        let orig: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new((j as f64).sin(), (j as f64 * 0.1).cos()))
            .collect();
        let mut buf = orig.clone();
        plan.forward(&mut buf);
        plan.inverse(&mut buf);
        for (a, b) in buf.iter().zip(orig.iter()) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
