//! Cone-angle deformation estimates: model-tube geometry, the drift
//! bounds for the twisting quantity `ω`, and the derived hypothesis
//! constants for the cusp-shape estimates.
//!
//! The deformation is parametrized by the cone angle `α ∈ (0, 2π]`,
//! carrying a core-geodesic length `l(α)`, torsion `τ(α)`, and tube
//! radius `R(α) ≥ 0.531`.  In the rescaled time `t = α²` the quantity
//! `ω = ατ/(l²+τ²)` drifts at a rate bounded by an explicit constant,
//! which is what turns tube data at `α = 2π` into cusp estimates at
//! `α → 0`.  All named decimal constants (`1.4572`, `2.3089`,
//! `62.5536`, `92`, …) are frozen digits that the computed quantities
//! are asserted against.

use crate::cusp::FlatTorus;
use crate::interval::Interval;
use std::f64::consts::{PI, SQRT_2, TAU};
use thiserror::Error;

/// Smallest tube radius in the regime all rate bounds assume.
pub const MIN_TUBE_RADIUS: f64 = 0.531;

/// Frozen bound on `|dω/dt|` (rescaled time `t = α²`).
pub const OMEGA_RATE_BOUND: f64 = 2.3089;

/// Frozen bound on the companion rate with leading factor `1/2`.
pub const AUX_RATE_BOUND: f64 = 1.5845;

/// Frozen total drift of `ω` over `t ∈ [0, (2π)²]`.
pub const OMEGA_DRIFT_BOUND: f64 = 92.0;

/// Frozen total drift at the companion rate: `1.5845·(2π)² ≤ 62.5536`.
pub const AUX_DRIFT_BOUND: f64 = 62.5536;

/// Errors from cone-flow computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConeError {
    /// A state field was out of range.
    #[error("{field} out of range: {value}")]
    BadField {
        /// Offending field.
        field: &'static str,
        /// Offending value.
        value: f64,
    },
    /// Euler characteristic must be negative.
    #[error("Euler characteristic must be negative, got {0}")]
    BadChi(i64),
    /// An estimate's hypothesis gate failed.
    #[error("hypothesis: {gate} (value {value} vs bound {bound})")]
    HypothesisViolated {
        /// Name of the failed gate (`"A"` or `"B"`).
        gate: &'static str,
        /// The value that was checked.
        value: f64,
        /// The bound it was checked against.
        bound: f64,
    },
}

/// One point of the deformation: angle, core length, torsion, radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeState {
    alpha: f64,
    l: f64,
    tau: f64,
    r: f64,
}

impl ConeState {
    /// Validates `0 < α ≤ 2π`, `l > 0`, `r > 0`, `τ` finite.
    ///
    /// The rate bounds additionally assume `r ≥ 0.531`
    /// ([`MIN_TUBE_RADIUS`]); states outside that regime are
    /// representable but the drift constants do not apply to them.
    pub fn new(alpha: f64, l: f64, tau: f64, r: f64) -> Result<ConeState, ConeError> {
        if !(alpha.is_finite() && alpha > 0.0 && alpha <= TAU) {
            return Err(ConeError::BadField {
                field: "alpha",
                value: alpha,
            });
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(ConeError::BadField { field: "l", value: l });
        }
        if !tau.is_finite() {
            return Err(ConeError::BadField {
                field: "tau",
                value: tau,
            });
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(ConeError::BadField { field: "r", value: r });
        }
        Ok(ConeState { alpha, l, tau, r })
    }

    /// Cone angle `α`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Core geodesic length `l`.
    pub fn l(&self) -> f64 {
        self.l
    }

    /// Torsion `τ` (stored as a real; never reduced modulo `α`).
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Tube radius `R`.
    pub fn r(&self) -> f64 {
        self.r
    }
}

/// Flat data of the tube boundary: meridian, height, twist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeBoundary {
    m: f64,
    h: f64,
    tw: f64,
}

impl TubeBoundary {
    /// Validates `m, h > 0` and `tw` finite.
    pub fn new(m: f64, h: f64, tw: f64) -> Result<TubeBoundary, ConeError> {
        if !(m.is_finite() && m > 0.0) {
            return Err(ConeError::BadField { field: "m", value: m });
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(ConeError::BadField { field: "h", value: h });
        }
        if !tw.is_finite() {
            return Err(ConeError::BadField {
                field: "tw",
                value: tw,
            });
        }
        Ok(TubeBoundary { m, h, tw })
    }

    /// Meridian length `m`.
    pub fn m(&self) -> f64 {
        self.m
    }

    /// Height `h`.
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Twist `tw`.
    pub fn tw(&self) -> f64 {
        self.tw
    }
}

/// Derived smallness/twisting thresholds `(A, B)` for the cusp
/// estimates at a given Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypothesisConstants {
    a: f64,
    b: f64,
    chi: i64,
}

impl HypothesisConstants {
    /// Validates the type invariants `0 < A < 0.111²`, `B > 1`,
    /// `chi < 0`.  (Whether the full gate chain holds is a separate
    /// question; see [`hypothesis_gate_report`].)
    pub fn new(a: f64, b: f64, chi: i64) -> Result<HypothesisConstants, ConeError> {
        if chi >= 0 {
            return Err(ConeError::BadChi(chi));
        }
        if !(a.is_finite() && a > 0.0 && a < 0.111 * 0.111) {
            return Err(ConeError::BadField { field: "A", value: a });
        }
        if !(b.is_finite() && b > 1.0) {
            return Err(ConeError::BadField { field: "B", value: b });
        }
        Ok(HypothesisConstants { a, b, chi })
    }

    /// The smallness threshold `A` (bound on `l² + τ²`).
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The twisting threshold `B` (lower bound on `|τ|/l`).
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Euler characteristic the constants were derived for.
    pub fn chi(&self) -> i64 {
        self.chi
    }
}

/// One row of a verified-constant report: a computed value, the frozen
/// bound it must respect, and whether it does.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRow {
    /// What the row checks.
    pub name: &'static str,
    /// The value computed here.
    pub computed: f64,
    /// The frozen value it is compared against.
    pub paper_bound: f64,
    /// Whether the comparison holds.
    pub pass: bool,
}

/// Flat boundary data of the tube at a deformation state:
/// `m = α·sinh R`, `h = l·cosh R`, `tw = τ·sinh R`.
pub fn tube_boundary(s: &ConeState) -> TubeBoundary {
    TubeBoundary {
        m: s.alpha * s.r.sinh(),
        h: s.l * s.r.cosh(),
        tw: s.tau * s.r.sinh(),
    }
}

/// The marked flat torus of the tube boundary, with the fibre direction
/// as the `a`-curve: `a = √(tw²+h²)`, `b = m·tw/a`, `c = m·h/a`.
/// Consequently `skew = tw·m/(tw²+h²)` and the area is `m·h`.
pub fn tube_to_def1_torus(t: &TubeBoundary) -> FlatTorus {
    let a = t.tw.hypot(t.h);
    FlatTorus::new(a, t.m * t.tw / a, t.m * t.h / a)
        .expect("tube data with m, h > 0 yields a valid torus")
}

/// The twisting quantity `ω = α·τ/(l²+τ²)`.
pub fn omega(s: &ConeState) -> f64 {
    s.alpha * s.tau / (s.l * s.l + s.tau * s.tau)
}

/// `dω/dα` under the perturbed flow with perturbation coefficients
/// `x, y`: `(4α²/(l²+τ²)²)·(l³y − 2τl²x − τ²ly)`.  Vanishes on the
/// central solution `x = y = 0`.
pub fn omega_alpha_derivative(s: &ConeState, x: f64, y: f64) -> f64 {
    let l = s.l;
    let tau = s.tau;
    let denom = l * l + tau * tau;
    let core = l * l * l * y - 2.0 * tau * l * l * x - tau * tau * l * y;
    4.0 * s.alpha * s.alpha / (denom * denom) * core
}

/// The ratio `l²(l²+2τl+τ²)/(l²+τ²)²` whose supremum drives the drift
/// rate.
pub fn twist_ratio(l: f64, tau: f64) -> f64 {
    let num = l * l * (l * l + 2.0 * tau * l + tau * tau);
    let denom = l * l + tau * tau;
    num / (denom * denom)
}

/// Supremum of `|l²(l²+2τl+τ²)/(l²+τ²)²|`: exactly `(3+2√2)/4`,
/// attained at `τ/l = √2 − 1`.  Verified `≤ 1.4572`.
pub fn sup_ratio_constant() -> f64 {
    let value = (3.0 + 2.0 * SQRT_2) / 4.0;
    assert!(value <= 1.4572);
    value
}

/// Lower bound for the product `α·l(α)` at tube radius `R`:
/// `3.3957·tanh(R)/cosh(2R)`.
pub fn alpha_l_lower(r: f64) -> f64 {
    assert!(r > 0.0 && r.is_finite(), "bad radius {r}");
    3.3957 * r.tanh() / (2.0 * r).cosh()
}

/// Smallest tube radius `R ≥ 0.531` consistent with a given product
/// `α·l`, i.e. satisfying `α·l ≥ alpha_l_lower(R)`.  Used to build
/// adversarial-but-consistent radius profiles in enclosure tests.
pub fn consistent_radius(alpha_l: f64) -> f64 {
    assert!(alpha_l.is_finite() && alpha_l > 0.0, "bad product {alpha_l}");
    if alpha_l_lower(MIN_TUBE_RADIUS) <= alpha_l {
        return MIN_TUBE_RADIUS;
    }
    // alpha_l_lower is strictly decreasing on [0.531, ∞) and tends to
    // zero, so the equation has a unique solution to bracket.
    let mut lo = MIN_TUBE_RADIUS;
    let mut hi = 1.0;
    while alpha_l_lower(hi) > alpha_l {
        hi *= 2.0;
        assert!(hi < 1e4, "radius search diverged");
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if alpha_l_lower(mid) > alpha_l {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Return the safe side: alpha_l_lower(hi) ≤ alpha_l.
    hi
}

fn rate_from_leading_factor(factor: f64) -> f64 {
    let z = MIN_TUBE_RADIUS.tanh();
    factor / 3.3957 * (1.0 + z * z) / (z * z * z)
}

/// Global bound on `|dω/dt|`:
/// `(1.4572/(2·3.3957))·(1+tanh²(0.531))/tanh³(0.531)`.
/// Verified `≤ 2.3089`.
pub fn domega_dt_global_bound() -> f64 {
    let value = rate_from_leading_factor(1.4572 / 2.0);
    assert!(value <= OMEGA_RATE_BOUND);
    value
}

/// Companion rate with leading factor `1/2` in place of `1.4572/2`
/// (the same estimate applied to the normalized-length drift).
/// Verified `≤ 1.5845`.
pub fn aux_rate_bound() -> f64 {
    let value = rate_from_leading_factor(0.5);
    assert!(value <= AUX_RATE_BOUND);
    value
}

/// Enclosure of a drifting quantity at the cusp end `t = 0`, given its
/// value `q_end` at `t = (2π)²` and a rate bound:
/// `q_end ± rate_bound·(2π)²`.
pub fn drift_enclosure(q_end: f64, rate_bound: f64) -> Interval {
    assert!(rate_bound >= 0.0, "negative rate {rate_bound}");
    Interval::with_radius(q_end, rate_bound * TAU * TAU)
}

/// Exact solution of the unperturbed system with data `(l0, τ0)` at
/// `α = 2π`: `l = l0·α/(2π)`, `τ = τ0·α/(2π)`.
pub fn central_solution(alpha: f64, l0: f64, tau0: f64) -> (f64, f64) {
    assert!(
        alpha > 0.0 && alpha <= TAU,
        "cone angle out of range: {alpha}"
    );
    (l0 * alpha / TAU, tau0 * alpha / TAU)
}

/// The full gate chain a pair of hypothesis constants must satisfy,
/// as checkable rows.  `C₁ = 2π/√A − 62.5536`, `C₂ = (B−1)/2`.
pub fn hypothesis_gate_report(hc: &HypothesisConstants) -> Vec<ChainRow> {
    let root = TAU / hc.a.sqrt();
    let c1 = root - AUX_DRIFT_BOUND;
    let c2 = (hc.b - 1.0) / 2.0;
    let halving = if c1 > 0.0 {
        (-AUX_RATE_BOUND * TAU * TAU / c1).exp()
    } else {
        0.0
    };
    let c2_gate = root - AUX_DRIFT_BOUND / (c2 * c2);
    let latitude = (root - 16.17) * (3.0f64.sqrt() / 4.0).sqrt();
    let chi_target = 2.0 * 6.0 * hc.chi.unsigned_abs() as f64;
    vec![
        ChainRow {
            name: "A_below_0.111^2",
            computed: hc.a,
            paper_bound: 0.111 * 0.111,
            pass: hc.a < 0.111 * 0.111,
        },
        ChainRow {
            name: "A_below_pi^2",
            computed: hc.a,
            paper_bound: PI * PI,
            pass: hc.a < PI * PI,
        },
        ChainRow {
            name: "C1_positive",
            computed: c1,
            paper_bound: 0.0,
            pass: c1 > 0.0,
        },
        ChainRow {
            name: "halving_factor_at_least_half",
            computed: halving,
            paper_bound: 0.5,
            pass: halving >= 0.5,
        },
        ChainRow {
            name: "C2_gate_exceeds_2",
            computed: c2_gate,
            paper_bound: 2.0,
            pass: c2_gate > 2.0,
        },
        ChainRow {
            name: "latitude_gate_exceeds_12|chi|",
            computed: latitude,
            paper_bound: chi_target,
            pass: latitude > chi_target,
        },
    ]
}

/// Derives hypothesis constants `(A, B)` for the given Euler
/// characteristic by solving the gate chain with a small margin and
/// re-checking every gate.  The pair is one consistent instantiation
/// of the existence statement, not a canonical value.
pub fn derive_hypothesis_constants(chi: i64) -> Result<HypothesisConstants, ConeError> {
    if chi >= 0 {
        return Err(ConeError::BadChi(chi));
    }
    let abs_chi = chi.unsigned_abs() as f64;
    // Each gate is a lower bound on 2π/√A; take the binding one.
    let halving_threshold = AUX_DRIFT_BOUND + AUX_RATE_BOUND * TAU * TAU / std::f64::consts::LN_2;
    let latitude_threshold = 16.17 + 12.0 * abs_chi / (3.0f64.sqrt() / 4.0).sqrt();
    let positivity_threshold = TAU / 0.111; // keeps A < 0.111² (and < π²)
    let root = 1.001
        * halving_threshold
            .max(latitude_threshold)
            .max(positivity_threshold);
    let a = (TAU / root) * (TAU / root);
    // B: the smallest C₂ permitted by the C₂ gate, with 5% margin.
    let c2_min = (AUX_DRIFT_BOUND / (root / 1.001 - 2.0)).sqrt();
    let b = 1.0 + 2.0 * (1.05 * c2_min);
    let hc = HypothesisConstants { a, b, chi };
    for row in hypothesis_gate_report(&hc) {
        assert!(row.pass, "derived constants fail gate {}", row.name);
    }
    Ok(hc)
}

/// Cusp estimates from tube data at `α = 2π`: encloses the limiting
/// skew in `2π·τ/(l²+τ²) ± 92` and the limiting height-to-boundary
/// ratio in `2π·l/(l²+τ²) ± 92`, provided the hypothesis gates
/// `l²+τ² ≤ A` and `|τ|/l ≥ B` hold.
pub fn lemma28_estimates(
    l2pi: f64,
    tau2pi: f64,
    hc: &HypothesisConstants,
) -> Result<(Interval, Interval), ConeError> {
    if !(l2pi.is_finite() && l2pi > 0.0) {
        return Err(ConeError::BadField {
            field: "l2pi",
            value: l2pi,
        });
    }
    if !tau2pi.is_finite() {
        return Err(ConeError::BadField {
            field: "tau2pi",
            value: tau2pi,
        });
    }
    let sq = l2pi * l2pi + tau2pi * tau2pi;
    if sq > hc.a {
        return Err(ConeError::HypothesisViolated {
            gate: "A",
            value: sq,
            bound: hc.a,
        });
    }
    let twisting = tau2pi.abs() / l2pi;
    if twisting < hc.b {
        return Err(ConeError::HypothesisViolated {
            gate: "B",
            value: twisting,
            bound: hc.b,
        });
    }
    let sk = Interval::with_radius(TAU * tau2pi / sq, OMEGA_DRIFT_BOUND);
    let height_ratio = Interval::with_radius(TAU * l2pi / sq, OMEGA_DRIFT_BOUND);
    Ok((sk, height_ratio))
}

/// The verified constant chain as report rows (for display and for the
/// one-line summary in the CLI).
pub fn constant_chain() -> Vec<ChainRow> {
    let sup = sup_ratio_constant();
    let rate = domega_dt_global_bound();
    let aux = aux_rate_bound();
    let aux_drift = AUX_RATE_BOUND * TAU * TAU;
    let drift = TAU * TAU * OMEGA_RATE_BOUND;
    vec![
        ChainRow {
            name: "sup_ratio",
            computed: sup,
            paper_bound: 1.4572,
            pass: sup <= 1.4572,
        },
        ChainRow {
            name: "omega_rate",
            computed: rate,
            paper_bound: OMEGA_RATE_BOUND,
            pass: rate <= OMEGA_RATE_BOUND,
        },
        ChainRow {
            name: "aux_rate",
            computed: aux,
            paper_bound: AUX_RATE_BOUND,
            pass: aux <= AUX_RATE_BOUND,
        },
        ChainRow {
            name: "aux_drift",
            computed: aux_drift,
            paper_bound: 62.554,
            pass: aux_drift <= 62.554,
        },
        ChainRow {
            name: "omega_drift",
            computed: drift,
            paper_bound: OMEGA_DRIFT_BOUND,
            pass: drift <= OMEGA_DRIFT_BOUND,
        },
    ]
}
