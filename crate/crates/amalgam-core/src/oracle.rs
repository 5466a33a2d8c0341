//! Closed-form reference values for Gaussian families: the exact
//! `W(FL^p, L^q)` norm of complex Gaussians with the Gaussian window, its
//! consequences for modulation norms, free-Schrödinger evolution of Gaussian
//! data, elementary convolution/product identities, and the table of
//! predicted scaling exponents the sweep verdicts compare against.
//!
//! Every numerical engine in the crate is validated against this module; the
//! formulas here are evaluated in ordinary float arithmetic with the `∞`
//! exponent limits `x^{1/∞} = 1` taken explicitly.

use core::f64::consts::PI;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, ExponentPair};

/// Parameters of the complex Gaussian
/// `(a+ib)^{-d/2} e^{-π|x|²/(a+ib)}`, `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexGaussianParams {
    pub a: f64,
    pub b: f64,
    pub dim: u32,
}

impl ComplexGaussianParams {
    pub fn new(a: f64, b: f64, dim: u32) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParam("complex gaussian needs a > 0 and finite b"));
        }
        if dim == 0 {
            return Err(Error::InvalidParam("dimension must be >= 1"));
        }
        Ok(ComplexGaussianParams { a, b, dim })
    }
}

/// Exact `‖G_{(a+ib)}‖_{W(FL^p, L^q)}` with the window `e^{-π|x|²}`:
///
/// `((a+1)² + b²)^{(d/2)(1/p - 1/2)} / [ p^{d/2p} (aq)^{d/2q}
///  (a(a+1) + b²)^{(d/2)(1/p - 1/q)} ]`,
///
/// with `p^{d/2p} → 1` and `(aq)^{d/2q} → 1` as the respective exponent
/// tends to `∞`.
pub fn amalgam_flp_norm_exact(params: ComplexGaussianParams, pair: ExponentPair) -> Result<f64> {
    let ComplexGaussianParams { a, b, dim } = params;
    if !(a > 0.0) {
        return Err(Error::InvalidParam("complex gaussian needs a > 0"));
    }
    let d = dim as f64;
    let inv_p = pair.p.reciprocal();
    let inv_q = pair.q.reciprocal();
    let big = (a + 1.0) * (a + 1.0) + b * b;
    let small = a * (a + 1.0) + b * b;
    let numerator = big.powf((d / 2.0) * (inv_p - 0.5));
    let p_factor = if pair.p.is_infinite() { 1.0 } else { pair.p.value().powf(d / (2.0 * pair.p.value())) };
    let q_factor = if pair.q.is_infinite() {
        1.0
    } else {
        (a * pair.q.value()).powf(d / (2.0 * pair.q.value()))
    };
    let mixing = small.powf((d / 2.0) * (inv_p - inv_q));
    Ok(numerator / (p_factor * q_factor * mixing))
}

/// The two exact routes to `‖φ_λ‖_{M^{p,q}}` for `φ_λ = e^{-πλ|x|²}`.
#[derive(Debug, Clone, Copy)]
pub struct GaussianModulationNorms {
    /// `λ^{-d/2} ‖φ_{1/λ}‖_{W(FL^p,L^q)} = ‖G_{(λ)}‖_{W(FL^p,L^q)}`, evaluated
    /// through [`amalgam_flp_norm_exact`].
    pub exact: f64,
    /// The equivalent display expression
    /// `(λ+1)^{d(1/p-1/2)} / [λ^{d/2q} (λ²+λ)^{(1/p-1/q)d/2}]`; differs from
    /// `exact` by the λ-independent constant `p^{d/2p} q^{d/2q}`.
    pub display: f64,
}

/// Exact modulation norm of the Gaussian family, both routes.
pub fn modulation_norm_gaussian_exact(
    lambda: f64,
    pair: ExponentPair,
    dim: u32,
) -> Result<GaussianModulationNorms> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParam("gaussian rate must be positive"));
    }
    let exact = amalgam_flp_norm_exact(ComplexGaussianParams::new(lambda, 0.0, dim)?, pair)?;
    let d = dim as f64;
    let inv_p = pair.p.reciprocal();
    let inv_q = pair.q.reciprocal();
    let display = (lambda + 1.0).powf(d * (inv_p - 0.5))
        / (lambda.powf(d * inv_q / 2.0)
            * (lambda * lambda + lambda).powf((inv_p - inv_q) * d / 2.0));
    Ok(GaussianModulationNorms { exact, display })
}

/// `φ_λ ∗ φ_λ = scale · φ_{λ/2}`: returns `((2λ)^{-d/2}, λ/2)`.
pub fn conv_gaussian_exact(lambda: f64, dim: u32) -> Result<(f64, f64)> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParam("gaussian rate must be positive"));
    }
    Ok(((2.0 * lambda).powf(-(dim as f64) / 2.0), lambda / 2.0))
}

/// `φ_λ · φ_λ = φ_{2λ}`: returns the new rate.
pub fn product_gaussian_exact(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParam("gaussian rate must be positive"));
    }
    Ok(2.0 * lambda)
}

/// The `(a, b)` frame of the evolved Gaussian: with data `e^{-πλ²|x|²}` the
/// solution at time `t` is `λ^{-d} G_{(λ^{-2} + 4πit)}`, and its Fourier side
/// is carried by `G_{(a+ib)}` with `a + ib = 1/(λ^{-2} + 4πit)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchrodingerGaussianState {
    pub lambda: f64,
    pub t: f64,
    pub a: f64,
    pub b: f64,
}

impl SchrodingerGaussianState {
    pub fn new(lambda: f64, t: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() || !t.is_finite() {
            return Err(Error::InvalidParam("state needs lambda > 0 and finite t"));
        }
        let denom = lambda.powi(-4) + (4.0 * PI * t) * (4.0 * PI * t);
        Ok(SchrodingerGaussianState {
            lambda,
            t,
            a: lambda.powi(-2) / denom,
            b: -4.0 * PI * t / denom,
        })
    }
}

/// Exact evolved Gaussian in the dilated frame: prefactor `λ^{-d}` and the
/// width parameter of `G_{(λ^{-2} + 4πit)}`.
pub fn schrodinger_gaussian_exact(
    lambda: f64,
    t: f64,
    dim: u32,
) -> Result<(f64, ComplexGaussianParams)> {
    if !(lambda > 0.0) || !lambda.is_finite() || !t.is_finite() {
        return Err(Error::InvalidParam("evolution needs lambda > 0 and finite t"));
    }
    let prefactor = lambda.powf(-(dim as f64));
    let params = ComplexGaussianParams::new(lambda.powi(-2), 4.0 * PI * t, dim)?;
    Ok((prefactor, params))
}

/// Exact `M^{p,q}` size of the evolved Gaussian (up to the fixed window
/// constant): `λ^{-d} (a²+b²)^{d/4} ‖G_{(a+ib)}‖_{W(FL^p,L^q)}` with `(a, b)`
/// from [`SchrodingerGaussianState`].
pub fn schrodinger_mpq_norm_exact(
    lambda: f64,
    t: f64,
    pair: ExponentPair,
    dim: u32,
) -> Result<f64> {
    let state = SchrodingerGaussianState::new(lambda, t)?;
    let d = dim as f64;
    let g = amalgam_flp_norm_exact(ComplexGaussianParams::new(state.a, state.b, dim)?, pair)?;
    Ok(lambda.powf(-d) * (state.a * state.a + state.b * state.b).powf(d / 4.0) * g)
}

/// Closed-form `‖φ_λ‖_{L^p} = (pλ)^{-d/2p}` (`1` at `p = ∞`).
pub fn lp_norm_gaussian_exact(lambda: f64, p: Exponent, dim: u32) -> f64 {
    if p.is_infinite() {
        1.0
    } else {
        (p.value() * lambda).powf(-(dim as f64) / (2.0 * p.value()))
    }
}

/// Closed-form `‖φ_λ‖_{FL^p} = λ^{-d/2} ‖φ_{1/λ}‖_{L^p}`.
pub fn flp_norm_gaussian_exact(lambda: f64, p: Exponent, dim: u32) -> f64 {
    lambda.powf(-(dim as f64) / 2.0) * lp_norm_gaussian_exact(1.0 / lambda, p, dim)
}

/// Closed-form `‖φ_λ‖_{W(L^p,L^q)}` with the Gaussian window:
/// `(p(λ+1))^{-d/2p} (qλ/(λ+1))^{-d/2q}`, with `∞` limits 1.
pub fn amalgam_lp_norm_gaussian_exact(lambda: f64, pair: ExponentPair, dim: u32) -> f64 {
    let d = dim as f64;
    let p_factor = if pair.p.is_infinite() {
        1.0
    } else {
        (pair.p.value() * (lambda + 1.0)).powf(d / (2.0 * pair.p.value()))
    };
    let q_factor = if pair.q.is_infinite() {
        1.0
    } else {
        (pair.q.value() * lambda / (lambda + 1.0)).powf(d / (2.0 * pair.q.value()))
    };
    1.0 / (p_factor * q_factor)
}

/// How a measured family exponent must compare to a predicted one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equals,
    /// Measured exponent must be `>=` the prediction (an upper norm bound).
    AtLeast,
    /// Measured exponent must be `<=` the prediction (a lower norm bound).
    AtMost,
}

/// A predicted scaling exponent together with the comparison it licenses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPrediction {
    pub alpha: f64,
    pub relation: Relation,
}

/// Named exponent scenarios; each maps to one sharp statement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scenario {
    /// `‖f_λ‖ ≲ λ^{-d·max(1/p,1/q)}`, `λ ≤ 1`.
    DilationSmallUpper(ExponentPair),
    /// `‖f_λ‖ ≳ λ^{-d·min(1/p,1/q)}`, `λ ≤ 1`.
    DilationSmallLower(ExponentPair),
    /// `‖f_λ‖ ≲ λ^{-d·min(1/p,1/q)}`, `λ ≥ 1`.
    DilationLargeUpper(ExponentPair),
    /// `‖f_λ‖ ≳ λ^{-d·max(1/p,1/q)}`, `λ ≥ 1`.
    DilationLargeLower(ExponentPair),
    /// Weaker envelope `λ^{-d(1/p+1/q)}`, `λ ≤ 1`.
    DilationWeakSmall(ExponentPair),
    /// Weaker envelope `λ^{d(1-1/p-1/q)}`, `λ ≥ 1`.
    DilationWeakLarge(ExponentPair),
    /// Gaussian dilations in `W(L^p,L^q)`: exponent `-d/q` as `λ → 0`.
    GaussianDilationSmall(ExponentPair),
    /// Gaussian dilations in `W(L^p,L^q)`: exponent `-d/p` as `λ → ∞`.
    GaussianDilationLarge(ExponentPair),
    /// `‖φ_λ‖_{M^{p,q}} ≍ λ^{-d/2p}` as `λ → 0`.
    GaussianFamilySmall(Exponent),
    /// `‖φ_λ‖_{M^{p,q}} ≍ λ^{-(d/2)(1-1/q)}` as `λ → ∞`.
    GaussianFamilyLarge(Exponent),
    /// `‖φ_λ∗φ_λ‖_{M^{p,q}} ≍ λ^{-(1+1/p)d/2}` as `λ → 0`.
    ConvolutionSmall(Exponent),
    /// `‖φ_λ∗φ_λ‖_{M^{p,q}} ≍ λ^{-d(1-1/(2q))}` as `λ → ∞`.
    ConvolutionLarge(Exponent),
    /// Small-dilation witness attains `-1/p + eps` (dimension one).
    WitnessSmall { p: Exponent, eps: f64 },
    /// Large-dilation witness attains `-1/q - eps` (dimension one).
    WitnessLarge { q: Exponent, eps: f64 },
    /// Free-propagator decay `t^{-d(1/2 - 1/p)}` as `t → ∞`.
    SchrodingerDecay(Exponent),
    /// Initial data: `‖u_0(λ·)‖_{M^{p',q}} ≍ λ^{-d/p'}` as `λ → 0`.
    SchrodingerDataSmall(Exponent),
    /// Evolved state at fixed time: `≍ λ^{-d/p}` as `λ → 0`.
    SchrodingerEvolvedSmall(Exponent),
}

/// The paper-level predicted exponent for a scenario in dimension `dim`.
pub fn theoretical_exponent(scenario: Scenario, dim: u32) -> ExponentPrediction {
    let d = dim as f64;
    match scenario {
        Scenario::DilationSmallUpper(pair) => ExponentPrediction {
            alpha: -d * pair.p.reciprocal().max(pair.q.reciprocal()),
            relation: Relation::AtLeast,
        },
        Scenario::DilationSmallLower(pair) => ExponentPrediction {
            alpha: -d * pair.p.reciprocal().min(pair.q.reciprocal()),
            relation: Relation::AtMost,
        },
        Scenario::DilationLargeUpper(pair) => ExponentPrediction {
            alpha: -d * pair.p.reciprocal().min(pair.q.reciprocal()),
            relation: Relation::AtMost,
        },
        Scenario::DilationLargeLower(pair) => ExponentPrediction {
            alpha: -d * pair.p.reciprocal().max(pair.q.reciprocal()),
            relation: Relation::AtLeast,
        },
        Scenario::DilationWeakSmall(pair) => ExponentPrediction {
            alpha: -d * (pair.p.reciprocal() + pair.q.reciprocal()),
            relation: Relation::AtLeast,
        },
        Scenario::DilationWeakLarge(pair) => ExponentPrediction {
            alpha: d * (1.0 - pair.p.reciprocal() - pair.q.reciprocal()),
            relation: Relation::AtMost,
        },
        Scenario::GaussianDilationSmall(pair) => ExponentPrediction {
            alpha: -d * pair.q.reciprocal(),
            relation: Relation::Equals,
        },
        Scenario::GaussianDilationLarge(pair) => ExponentPrediction {
            alpha: -d * pair.p.reciprocal(),
            relation: Relation::Equals,
        },
        Scenario::GaussianFamilySmall(p) => ExponentPrediction {
            alpha: -d * p.reciprocal() / 2.0,
            relation: Relation::Equals,
        },
        Scenario::GaussianFamilyLarge(q) => ExponentPrediction {
            alpha: -(d / 2.0) * (1.0 - q.reciprocal()),
            relation: Relation::Equals,
        },
        Scenario::ConvolutionSmall(p) => ExponentPrediction {
            alpha: -(1.0 + p.reciprocal()) * d / 2.0,
            relation: Relation::Equals,
        },
        Scenario::ConvolutionLarge(q) => ExponentPrediction {
            alpha: -d * (1.0 - q.reciprocal() / 2.0),
            relation: Relation::Equals,
        },
        Scenario::WitnessSmall { p, eps } => ExponentPrediction {
            alpha: -p.reciprocal() + eps,
            relation: Relation::Equals,
        },
        Scenario::WitnessLarge { q, eps } => ExponentPrediction {
            alpha: -q.reciprocal() - eps,
            relation: Relation::Equals,
        },
        Scenario::SchrodingerDecay(p) => ExponentPrediction {
            alpha: -d * (0.5 - p.reciprocal()),
            relation: Relation::Equals,
        },
        Scenario::SchrodingerDataSmall(p) => ExponentPrediction {
            alpha: -d * p.conjugate().reciprocal(),
            relation: Relation::Equals,
        },
        Scenario::SchrodingerEvolvedSmall(p) => ExponentPrediction {
            alpha: -d * p.reciprocal(),
            relation: Relation::Equals,
        },
    }
}

const INDEX_TOL: f64 = 1e-12;

/// The two index conditions governing `‖f∗g‖_{M^{p,q}} ≲ ‖f‖_{M^{p₁,q₁}} ‖g‖_{M^{p₂,q₂}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilinearConditions {
    /// The `p`-side condition.
    pub p_holds: bool,
    /// The `q`-side condition.
    pub q_holds: bool,
}

impl BilinearConditions {
    pub fn both(&self) -> bool {
        self.p_holds && self.q_holds
    }
}

/// Convolution: `1/p + 1 <= 1/p₁ + 1/p₂` and `1/q <= 1/q₁ + 1/q₂`.
pub fn convolution_conditions(
    target: ExponentPair,
    first: ExponentPair,
    second: ExponentPair,
) -> BilinearConditions {
    BilinearConditions {
        p_holds: target.p.reciprocal() + 1.0
            <= first.p.reciprocal() + second.p.reciprocal() + INDEX_TOL,
        q_holds: target.q.reciprocal()
            <= first.q.reciprocal() + second.q.reciprocal() + INDEX_TOL,
    }
}

/// Pointwise product: `1/p <= 1/p₁ + 1/p₂` and `1/q + 1 <= 1/q₁ + 1/q₂`.
pub fn product_conditions(
    target: ExponentPair,
    first: ExponentPair,
    second: ExponentPair,
) -> BilinearConditions {
    BilinearConditions {
        p_holds: target.p.reciprocal()
            <= first.p.reciprocal() + second.p.reciprocal() + INDEX_TOL,
        q_holds: target.q.reciprocal() + 1.0
            <= first.q.reciprocal() + second.q.reciprocal() + INDEX_TOL,
    }
}

/// Inclusion `M^{p₁,q₁} ⊆ M^{p₂,q₂}` holds iff `p₁ <= p₂` and `q₁ <= q₂`.
pub fn inclusion_condition(first: ExponentPair, second: ExponentPair) -> bool {
    first.p.reciprocal() >= second.p.reciprocal() - INDEX_TOL
        && first.q.reciprocal() >= second.q.reciprocal() - INDEX_TOL
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: f64, q: f64) -> ExponentPair {
        ExponentPair::new(p, q).unwrap()
    }

    #[test]
    fn hand_evaluated_values() {
        // a=1, b=0, p=q=2, d=1 -> 2^{-1/2}
        let v = amalgam_flp_norm_exact(
            ComplexGaussianParams::new(1.0, 0.0, 1).unwrap(),
            pair(2.0, 2.0),
        )
        .unwrap();
        assert!((v - 2f64.powf(-0.5)).abs() < 1e-15);
        // a=1, b=0, p=q=1, d=1 -> 4^{1/4} = sqrt(2)
        let v = amalgam_flp_norm_exact(
            ComplexGaussianParams::new(1.0, 0.0, 1).unwrap(),
            pair(1.0, 1.0),
        )
        .unwrap();
        assert!((v - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn independent_of_b_at_p_equals_q_two() {
        let pq = pair(2.0, 2.0);
        let base = amalgam_flp_norm_exact(ComplexGaussianParams::new(1.0, 0.0, 1).unwrap(), pq)
            .unwrap();
        for b in [1.0, 10.0] {
            let v = amalgam_flp_norm_exact(ComplexGaussianParams::new(1.0, b, 1).unwrap(), pq)
                .unwrap();
            assert!((v - base).abs() < 1e-15, "b={b}");
        }
    }

    #[test]
    fn b_sign_symmetry_and_dim_factorization() {
        let pq = pair(1.0, 4.0);
        for (a, b) in [(0.5, 1.0), (2.0, 3.0)] {
            let plus =
                amalgam_flp_norm_exact(ComplexGaussianParams::new(a, b, 1).unwrap(), pq).unwrap();
            let minus =
                amalgam_flp_norm_exact(ComplexGaussianParams::new(a, -b, 1).unwrap(), pq).unwrap();
            assert_eq!(plus, minus);
            let d2 =
                amalgam_flp_norm_exact(ComplexGaussianParams::new(a, b, 2).unwrap(), pq).unwrap();
            assert!((d2 - plus * plus).abs() < 1e-14 * d2);
        }
    }

    #[test]
    fn infinite_exponent_limits() {
        // p = q = inf: value ((a+1)^2+b^2)^{-d/4}
        let v = amalgam_flp_norm_exact(
            ComplexGaussianParams::new(1.0, 1.0, 1).unwrap(),
            ExponentPair::from_exponents(Exponent::INFINITY, Exponent::INFINITY),
        )
        .unwrap();
        assert!((v - 5f64.powf(-0.25)).abs() < 1e-15);
    }

    #[test]
    fn modulation_routes_differ_by_constant() {
        let pq = pair(2.0, 2.0);
        let at1 = modulation_norm_gaussian_exact(1.0, pq, 1).unwrap();
        // lem2 route at lambda=1: 2^{-1/2}; display route: 1
        assert!((at1.exact - 2f64.powf(-0.5)).abs() < 1e-15);
        assert!((at1.display - 1.0).abs() < 1e-15);
        let expect_ratio = at1.exact / at1.display;
        for lambda in [0.01, 0.3, 7.0, 400.0] {
            let v = modulation_norm_gaussian_exact(lambda, pq, 1).unwrap();
            assert!(
                ((v.exact / v.display) - expect_ratio).abs() < 1e-12,
                "ratio drifts at lambda={lambda}"
            );
        }
    }

    #[test]
    fn convolution_and_product_identities() {
        assert_eq!(conv_gaussian_exact(1.0, 1).unwrap(), (2f64.powf(-0.5), 0.5));
        assert_eq!(conv_gaussian_exact(2.0, 1).unwrap(), (0.5, 1.0));
        assert_eq!(conv_gaussian_exact(0.5, 2).unwrap(), (1.0, 0.25));
        assert_eq!(product_gaussian_exact(1.0).unwrap(), 2.0);
        assert_eq!(product_gaussian_exact(3.0).unwrap(), 6.0);
        assert_eq!(product_gaussian_exact(0.5).unwrap(), 1.0);
    }

    #[test]
    fn schrodinger_state_reductions() {
        // t = 0: (a, b) = (lambda^2, 0), i.e. the initial Gaussian restated
        let s = SchrodingerGaussianState::new(3.0, 0.0).unwrap();
        assert!((s.a - 9.0).abs() < 1e-12);
        assert_eq!(s.b, 0.0);
        // lambda = 1: a = 1/(1+(4πt)^2), b = -4πt/(1+(4πt)^2)
        let t = 0.7;
        let s = SchrodingerGaussianState::new(1.0, t).unwrap();
        let den = 1.0 + (4.0 * PI * t).powi(2);
        assert!((s.a - 1.0 / den).abs() < 1e-15);
        assert!((s.b + 4.0 * PI * t / den).abs() < 1e-15);
    }

    #[test]
    fn schrodinger_l2_conservation_through_oracle() {
        let pq = pair(2.0, 2.0);
        let at0 = schrodinger_mpq_norm_exact(1.0, 0.0, pq, 1).unwrap();
        assert!((at0 - 2f64.powf(-0.5)).abs() < 1e-15);
        for t in [0.1, 1.0, 25.0] {
            let v = schrodinger_mpq_norm_exact(1.0, t, pq, 1).unwrap();
            assert!((v - at0).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn predicted_exponent_examples() {
        let v = theoretical_exponent(Scenario::DilationSmallUpper(pair(1.0, 2.0)), 1);
        assert_eq!(v.alpha, -1.0);
        assert_eq!(v.relation, Relation::AtLeast);
        let v = theoretical_exponent(Scenario::ConvolutionSmall(Exponent::TWO), 1);
        assert!((v.alpha + 0.75).abs() < 1e-15);
        let v = theoretical_exponent(Scenario::SchrodingerDecay(Exponent::new(4.0).unwrap()), 1);
        assert!((v.alpha + 0.25).abs() < 1e-15);
    }

    #[test]
    fn index_conditions() {
        // satisfied with equality
        let c = convolution_conditions(pair(1.0, 1.0), pair(1.0, 1.0), pair(1.0, 1.0));
        assert!(c.both());
        // 1/p + 1 = 1.5 > 1 fails
        let c = convolution_conditions(pair(2.0, 2.0), pair(2.0, 2.0), pair(2.0, 2.0));
        assert!(!c.p_holds && c.q_holds);
        let c = product_conditions(pair(2.0, 2.0), pair(4.0, 1.0), pair(4.0, 2.0));
        assert!(c.both());
        assert!(inclusion_condition(pair(1.0, 1.0), pair(2.0, 2.0)));
        assert!(!inclusion_condition(pair(2.0, 1.0), pair(1.0, 2.0)));
        assert!(inclusion_condition(pair(2.0, 3.0), pair(2.0, 3.0)));
    }
}
