//! Flat-torus cusp cross-sections and certificate checkers for the
//! coarse inequalities relating twisting, skew, and arc distances.
//!
//! A cusp cross-section is a flat torus `ℝ²/⟨(a,0),(b,c)⟩` with
//! `a, c > 0`; the `(1,0)` curve is the boundary direction, `(0,1)` the
//! latitude.  Slopes are integer pairs `(p, q)`.  Certificates evaluate
//! one inequality each, record the numbers that went in, and carry the
//! slack so callers can study sharpness.

use thiserror::Error;

/// Errors from cusp-model computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CuspError {
    /// A dimension that must be positive was not.
    #[error("{field} must be positive and finite, got {value}")]
    NonPositive {
        /// Offending field.
        field: &'static str,
        /// Offending value.
        value: f64,
    },
    /// The zero slope names no curve.
    #[error("slope (0, 0) names no curve")]
    ZeroSlope,
    /// The inequalities only make sense for negative Euler characteristic.
    #[error("Euler characteristic must be negative, got {0}")]
    BadChi(i64),
    /// A quantity constrained to be nonnegative was negative.
    #[error("{field} must be nonnegative, got {value}")]
    Negative {
        /// Offending field.
        field: &'static str,
        /// Offending value.
        value: f64,
    },
    /// Certificate input lists must name at least one slope.
    #[error("need at least one slope")]
    NoSlopes,
}

/// Flat torus `ℝ²/⟨(a,0),(b,c)⟩` with `a, c > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatTorus {
    a: f64,
    b: f64,
    c: f64,
}

impl FlatTorus {
    /// Builds a torus, validating `a > 0`, `c > 0`, all finite.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, CuspError> {
        if !(a.is_finite() && a > 0.0) {
            return Err(CuspError::NonPositive { field: "a", value: a });
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(CuspError::NonPositive { field: "c", value: c });
        }
        if !b.is_finite() {
            return Err(CuspError::NonPositive { field: "b", value: b });
        }
        Ok(FlatTorus { a, b, c })
    }

    /// Length of the `(1,0)` (boundary) curve.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Horizontal offset of the latitude vector.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Height of the torus.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Area `a·c`.
    pub fn area(&self) -> f64 {
        self.a * self.c
    }

    /// The same lattice marked with latitude vector `(b + k·a, c)`:
    /// the basis change sends the slope `(p, q)` to `(p − k·q, q)`.
    pub fn remarked(&self, k: i64) -> FlatTorus {
        FlatTorus {
            a: self.a,
            b: self.b + k as f64 * self.a,
            c: self.c,
        }
    }
}

/// The skew `b/a` of the marked torus.
pub fn skew(t: &FlatTorus) -> f64 {
    t.b / t.a
}

/// Euclidean length of the geodesic with slope `(p, q)`:
/// `√((pa+qb)² + (qc)²)`.
pub fn slope_length(t: &FlatTorus, p: i64, q: i64) -> Result<f64, CuspError> {
    if p == 0 && q == 0 {
        return Err(CuspError::ZeroSlope);
    }
    let x = p as f64 * t.a + q as f64 * t.b;
    let y = q as f64 * t.c;
    Ok(x.hypot(y))
}

/// Length of the slope divided by the square root of the torus area.
pub fn normalized_length(t: &FlatTorus, p: i64, q: i64) -> Result<f64, CuspError> {
    Ok(slope_length(t, p, q)? / t.area().sqrt())
}

/// Outcome of checking one inequality, with enough context to audit it.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCertificate {
    /// Which inequality was checked (e.g. `"lemma9"`).
    pub name: String,
    /// The named numbers that went into the check.
    pub inputs: Vec<(String, f64)>,
    /// Left-hand side of the headline comparison.
    pub lhs: f64,
    /// Right-hand side of the headline comparison.
    pub rhs: f64,
    /// True when the headline comparison is strict (`<` not `≤`).
    pub strict: bool,
    /// Whether the inequality (all parts, for two-sided checks) holds.
    pub holds: bool,
    /// `rhs − lhs` of the headline comparison.
    pub slack: f64,
}

impl BoundCertificate {
    fn single(name: &str, inputs: Vec<(String, f64)>, lhs: f64, rhs: f64, strict: bool) -> Self {
        let holds = if strict { lhs < rhs } else { lhs <= rhs };
        BoundCertificate {
            name: name.to_string(),
            inputs,
            lhs,
            rhs,
            strict,
            holds,
            slack: rhs - lhs,
        }
    }
}

fn require_negative_chi(chi: i64) -> Result<f64, CuspError> {
    if chi >= 0 {
        return Err(CuspError::BadChi(chi));
    }
    Ok(chi.unsigned_abs() as f64)
}

fn require_nonnegative(field: &'static str, value: f64) -> Result<f64, CuspError> {
    if !(value.is_finite() && value >= 0.0) {
        return Err(CuspError::Negative { field, value });
    }
    Ok(value)
}

/// Every listed slope on the torus has length at least 1.
pub fn lemma8_certificate(
    t: &FlatTorus,
    slopes: &[(i64, i64)],
) -> Result<BoundCertificate, CuspError> {
    if slopes.is_empty() {
        return Err(CuspError::NoSlopes);
    }
    let mut min_length = f64::INFINITY;
    for &(p, q) in slopes {
        min_length = min_length.min(slope_length(t, p, q)?);
    }
    let inputs = vec![
        ("a".into(), t.a),
        ("b".into(), t.b),
        ("c".into(), t.c),
        ("slopes".into(), slopes.len() as f64),
        ("min_length".into(), min_length),
    ];
    Ok(BoundCertificate::single("lemma8", inputs, 1.0, min_length, false))
}

/// The boundary curve is no longer than `6|χ|`.
pub fn lemma9_certificate(l_bdy: f64, chi: i64) -> Result<BoundCertificate, CuspError> {
    let abs_chi = require_negative_chi(chi)?;
    if !(l_bdy.is_finite() && l_bdy > 0.0) {
        return Err(CuspError::NonPositive {
            field: "l_bdy",
            value: l_bdy,
        });
    }
    let inputs = vec![("l_bdy".into(), l_bdy), ("chi".into(), chi as f64)];
    Ok(BoundCertificate::single(
        "lemma9",
        inputs,
        l_bdy,
        6.0 * abs_chi,
        false,
    ))
}

/// The fractional twist and the skew agree up to `6|χ|·d + 3`.
pub fn thm2_certificate(
    fd: f64,
    sk: f64,
    chi: i64,
    d_arc: f64,
) -> Result<BoundCertificate, CuspError> {
    let abs_chi = require_negative_chi(chi)?;
    let d_arc = require_nonnegative("d_arc", d_arc)?;
    let inputs = vec![
        ("fd".into(), fd),
        ("sk".into(), sk),
        ("chi".into(), chi as f64),
        ("d_arc".into(), d_arc),
    ];
    Ok(BoundCertificate::single(
        "thm2",
        inputs,
        (fd - sk).abs(),
        6.0 * abs_chi * d_arc + 3.0,
        false,
    ))
}

/// Two-sided bound `d/(536χ⁴) < height ≤ 3|χ|·d` (strict below).  The
/// headline comparison is the binding side (smaller slack); `holds`
/// reflects both sides.
pub fn thm10_certificate(
    height: f64,
    chi: i64,
    d_arc: f64,
) -> Result<BoundCertificate, CuspError> {
    let abs_chi = require_negative_chi(chi)?;
    if !(height.is_finite() && height > 0.0) {
        return Err(CuspError::NonPositive {
            field: "height",
            value: height,
        });
    }
    if !(d_arc.is_finite() && d_arc > 0.0) {
        return Err(CuspError::NonPositive {
            field: "d_arc",
            value: d_arc,
        });
    }
    let lower = d_arc / (536.0 * abs_chi.powi(4));
    let upper = 3.0 * abs_chi * d_arc;
    let holds = lower < height && height <= upper;
    let inputs = vec![
        ("height".into(), height),
        ("chi".into(), chi as f64),
        ("d_arc".into(), d_arc),
        ("lower_bound".into(), lower),
        ("upper_bound".into(), upper),
    ];
    // Binding side: the comparison with less room.
    let (lhs, rhs, strict) = if height - lower <= upper - height {
        (lower, height, true)
    } else {
        (height, upper, false)
    };
    Ok(BoundCertificate {
        name: "thm10".to_string(),
        inputs,
        lhs,
        rhs,
        strict,
        holds,
        slack: rhs - lhs,
    })
}

/// The latitude curve is no longer than `6|χ|` times the pointed-graph
/// displacement.
pub fn lemma18_certificate(
    l_lat: f64,
    chi: i64,
    d_pointed: f64,
) -> Result<BoundCertificate, CuspError> {
    let abs_chi = require_negative_chi(chi)?;
    if !(l_lat.is_finite() && l_lat > 0.0) {
        return Err(CuspError::NonPositive {
            field: "l_lat",
            value: l_lat,
        });
    }
    let d_pointed = require_nonnegative("d_pointed", d_pointed)?;
    let inputs = vec![
        ("l_lat".into(), l_lat),
        ("chi".into(), chi as f64),
        ("d_pointed".into(), d_pointed),
    ];
    Ok(BoundCertificate::single(
        "lemma18",
        inputs,
        l_lat,
        6.0 * abs_chi * d_pointed,
        false,
    ))
}

/// Skew is almost additive under composition: the defect is at most
/// `6|χ|·(d_u + d_v + d_uv) + 10`.
#[allow(clippy::too_many_arguments)]
pub fn cor19_certificate(
    sk_uv: f64,
    sk_u: f64,
    sk_v: f64,
    chi: i64,
    d_u: f64,
    d_v: f64,
    d_uv: f64,
) -> Result<BoundCertificate, CuspError> {
    let abs_chi = require_negative_chi(chi)?;
    let d_u = require_nonnegative("d_u", d_u)?;
    let d_v = require_nonnegative("d_v", d_v)?;
    let d_uv = require_nonnegative("d_uv", d_uv)?;
    let inputs = vec![
        ("sk_uv".into(), sk_uv),
        ("sk_u".into(), sk_u),
        ("sk_v".into(), sk_v),
        ("chi".into(), chi as f64),
        ("d_u".into(), d_u),
        ("d_v".into(), d_v),
        ("d_uv".into(), d_uv),
    ];
    Ok(BoundCertificate::single(
        "cor19",
        inputs,
        (sk_uv - sk_u - sk_v).abs(),
        6.0 * abs_chi * (d_u + d_v + d_uv) + 10.0,
        false,
    ))
}
