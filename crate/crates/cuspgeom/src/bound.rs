//! Explicit filling constants and hypothesis gates: the drilling
//! constant `K(ε, J)²`, the twisting threshold `F`, the short-slope
//! volume gate, and the geometric tightness criterion.
//!
//! Everything here is benign double-precision arithmetic; values are
//! documented to a relative tolerance of `1e-9` against independent
//! re-derivations, with no interval arithmetic needed.

use crate::cone::{derive_hypothesis_constants, ConeError};
use crate::cusp::BoundCertificate;
use std::f64::consts::TAU;
use thiserror::Error;

/// Errors from bound-engine computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    /// The short-geodesic margin must lie in `(0, ln 3]`.
    #[error("epsilon must lie in (0, ln 3], got {0}")]
    BadEpsilon(f64),
    /// The bi-Lipschitz constant must exceed 1.
    #[error("J must exceed 1, got {0}")]
    BadJ(f64),
    /// Euler characteristic must be negative.
    #[error("Euler characteristic must be negative, got {0}")]
    BadChi(i64),
    /// The normalized-length parameter must exceed `2π`.
    #[error("c must exceed 2*pi, got {0}")]
    CTooSmall(f64),
    /// Volumes must be positive.
    #[error("volume must be positive, got {0}")]
    BadVolume(f64),
    /// The torsion must be positive for the tightness bound.
    #[error("tau must be positive, got {0}")]
    BadTau(f64),
    /// The geodesic length must be positive.
    #[error("l must be positive, got {0}")]
    BadLength(f64),
}

/// Margin and bi-Lipschitz parameters for the filling constants:
/// `ε ∈ (0, ln 3]`, `J > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FillingParams {
    epsilon: f64,
    j: f64,
}

impl FillingParams {
    /// Validates the parameter ranges.
    pub fn new(epsilon: f64, j: f64) -> Result<FillingParams, BoundError> {
        if !(epsilon.is_finite() && epsilon > 0.0 && epsilon <= 3.0f64.ln()) {
            return Err(BoundError::BadEpsilon(epsilon));
        }
        if !(j.is_finite() && j > 1.0) {
            return Err(BoundError::BadJ(j));
        }
        Ok(FillingParams { epsilon, j })
    }

    /// The margin `ε`.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The bi-Lipschitz constant `J`.
    pub fn j(&self) -> f64 {
        self.j
    }
}

/// Geometry of the monodromy at the binding for the tightness
/// criterion: core length `l > 0`, torsion `τ` (to be interpreted in
/// `(−π, π]`), Euler characteristic `χ < 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightnessInput {
    l: f64,
    tau: f64,
    chi: i64,
}

impl TightnessInput {
    /// Validates `l > 0`, `τ` finite, `χ < 0`.
    pub fn new(l: f64, tau: f64, chi: i64) -> Result<TightnessInput, BoundError> {
        if !(l.is_finite() && l > 0.0) {
            return Err(BoundError::BadLength(l));
        }
        if !tau.is_finite() {
            return Err(BoundError::BadTau(tau));
        }
        if chi >= 0 {
            return Err(BoundError::BadChi(chi));
        }
        Ok(TightnessInput { l, tau, chi })
    }

    /// Core geodesic length.
    pub fn l(&self) -> f64 {
        self.l
    }

    /// Torsion.
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Euler characteristic.
    pub fn chi(&self) -> i64 {
        self.chi
    }
}

/// The two branches of `K²` before taking their maximum:
/// `2π·6771·cosh⁵(0.6ε+0.1475)/ε⁵ + 11.7` and
/// `2π·11.35/(ε^{5/2}·ln J) + 11.7`.
pub fn k_squared_branches(p: &FillingParams) -> (f64, f64) {
    let eps = p.epsilon;
    let first = TAU * 6771.0 * (0.6 * eps + 0.1475).cosh().powi(5) / eps.powi(5) + 11.7;
    let second = TAU * 11.35 / (eps.powf(2.5) * p.j.ln()) + 11.7;
    (first, second)
}

/// The squared drilling constant `K(ε, J)²`: the pointwise maximum of
/// its two branches.
pub fn k_squared(p: &FillingParams) -> f64 {
    let (first, second) = k_squared_branches(p);
    first.max(second)
}

/// The twisting threshold `F = K²·(2+|χ|)·(1+19296·χ⁶) + 3`.
pub fn f_constant(chi: i64, p: &FillingParams) -> Result<f64, BoundError> {
    if chi >= 0 {
        return Err(BoundError::BadChi(chi));
    }
    let abs_chi = chi.unsigned_abs() as f64;
    Ok(k_squared(p) * (2.0 + abs_chi) * (1.0 + 19296.0 * abs_chi.powi(6)) + 3.0)
}

/// Gate for hyperbolicity via twisting: holds iff every listed `|fd|`
/// strictly exceeds `c·(1+3216·|χ|⁵) + 3`.  An empty list holds
/// vacuously.
pub fn prop22_gate(
    fd_values: &[f64],
    chi: i64,
    c: f64,
) -> Result<BoundCertificate, BoundError> {
    if chi >= 0 {
        return Err(BoundError::BadChi(chi));
    }
    if !(c.is_finite() && c > TAU) {
        return Err(BoundError::CTooSmall(c));
    }
    let abs_chi = chi.unsigned_abs() as f64;
    let threshold = c * (1.0 + 3216.0 * abs_chi.powi(5)) + 3.0;
    let min_abs = fd_values
        .iter()
        .map(|fd| fd.abs())
        .fold(f64::INFINITY, f64::min);
    let inputs = vec![
        ("chi".into(), chi as f64),
        ("c".into(), c),
        ("threshold".into(), threshold),
        ("count".into(), fd_values.len() as f64),
        ("min_abs_fd".into(), min_abs),
    ];
    Ok(BoundCertificate {
        name: "prop22".to_string(),
        inputs,
        lhs: threshold,
        rhs: min_abs,
        strict: true,
        holds: threshold < min_abs,
        slack: min_abs - threshold,
    })
}

/// Volume bracket after filling along slopes of normalized length
/// `≥ c`: `[(1 − (2π/c)²)^{3/2}·vol, vol]`.
pub fn prop22_volume_interval(
    vol_mapping_torus: f64,
    c: f64,
) -> Result<(f64, f64), BoundError> {
    if !(c.is_finite() && c > TAU) {
        return Err(BoundError::CTooSmall(c));
    }
    if !(vol_mapping_torus.is_finite() && vol_mapping_torus > 0.0) {
        return Err(BoundError::BadVolume(vol_mapping_torus));
    }
    let ratio = TAU / c;
    let factor = (1.0 - ratio * ratio).powf(1.5);
    Ok((factor * vol_mapping_torus, vol_mapping_torus))
}

/// Geometric lower bound for the fractional twisting:
/// `(2πτ/(l²+τ²))·(1 − 19296|χ|⁶·l/τ) − 92·(1+19296|χ|⁶) − 3`.
pub fn fdtc_geometric_lower_bound(t: &TightnessInput) -> Result<f64, BoundError> {
    if t.tau <= 0.0 {
        return Err(BoundError::BadTau(t.tau));
    }
    let abs_chi = t.chi.unsigned_abs() as f64;
    let coef = 19296.0 * abs_chi.powi(6);
    let main = TAU * t.tau / (t.l * t.l + t.tau * t.tau);
    Ok(main * (1.0 - coef * t.l / t.tau) - 92.0 * (1.0 + coef) - 3.0)
}

/// Tightness criterion: holds iff the geometric lower bound reaches 1
/// *and* the input sits inside the derived hypothesis region
/// (`l²+τ² ≤ A(χ)` and `τ/l ≥ B(χ)`).  Both sub-verdicts are recorded
/// in the certificate inputs as `fdtc_gate` / `hypothesis_gate`.
/// The `(A, B)` pair is one derived instantiation of the hypothesis
/// constants, not a canonical value.
pub fn tightness_certificate(t: &TightnessInput) -> Result<BoundCertificate, BoundError> {
    let bound = fdtc_geometric_lower_bound(t)?;
    let hc = match derive_hypothesis_constants(t.chi) {
        Ok(hc) => hc,
        Err(ConeError::BadChi(chi)) => return Err(BoundError::BadChi(chi)),
        Err(other) => unreachable!("constant derivation cannot fail otherwise: {other}"),
    };
    let sq = t.l * t.l + t.tau * t.tau;
    let twisting = t.tau / t.l;
    let hypothesis_ok = sq <= hc.a() && twisting >= hc.b();
    let fdtc_ok = bound >= 1.0;
    let inputs = vec![
        ("l".into(), t.l),
        ("tau".into(), t.tau),
        ("chi".into(), t.chi as f64),
        ("fdtc_lower_bound".into(), bound),
        ("A".into(), hc.a()),
        ("B".into(), hc.b()),
        ("l_sq_plus_tau_sq".into(), sq),
        ("tau_over_l".into(), twisting),
        ("fdtc_gate".into(), if fdtc_ok { 1.0 } else { 0.0 }),
        ("hypothesis_gate".into(), if hypothesis_ok { 1.0 } else { 0.0 }),
    ];
    Ok(BoundCertificate {
        name: "tightness".to_string(),
        inputs,
        lhs: 1.0,
        rhs: bound,
        strict: false,
        holds: fdtc_ok && hypothesis_ok,
        slack: bound - 1.0,
    })
}
