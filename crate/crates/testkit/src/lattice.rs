//! Plane-lattice reference computations.
//!
//! A marked lattice is given by an ordered, positively oriented basis
//! `(u, v)` of the plane.  Rotating the plane so that `u` points along
//! the positive x-axis puts the basis into the normal form
//! `u = (a, 0)`, `v = (b, c)` with `a > 0`, `c > 0`.  These helpers
//! compute that normal form and the effect of re-marking (changing `v`
//! by multiples of `u`) directly from inner products, independently of
//! any torus model built on top.

/// Normal form `(a, b, c)` of the positively oriented basis `(u, v)`:
/// after rotation, `u = (a, 0)` and `v = (b, c)`.  Returns `None` when
/// `u` vanishes or the pair is not positively oriented.
pub fn normal_form(u: [f64; 2], v: [f64; 2]) -> Option<(f64, f64, f64)> {
    let a = u[0].hypot(u[1]);
    if a == 0.0 {
        return None;
    }
    let det = u[0] * v[1] - u[1] * v[0];
    if det <= 0.0 {
        return None;
    }
    let b = (u[0] * v[0] + u[1] * v[1]) / a;
    let c = det / a;
    Some((a, b, c))
}

/// Squared length of the lattice vector `p*u + q*v`.
pub fn vector_length_sq(u: [f64; 2], v: [f64; 2], p: i64, q: i64) -> f64 {
    let x = p as f64 * u[0] + q as f64 * v[0];
    let y = p as f64 * u[1] + q as f64 * v[1];
    x * x + y * y
}

/// Re-marking: replaces `v` by `v + k*u`, which changes the basis but
/// not the lattice.  A vector `p*u + q*v` of the old basis is
/// `(p - k*q)*u + q*(v + k*u)` in the new one.
pub fn remark(u: [f64; 2], v: [f64; 2], k: i64) -> ([f64; 2], [f64; 2]) {
    (u, [v[0] + k as f64 * u[0], v[1] + k as f64 * u[1]])
}

/// Slope relabelling that accompanies `remark`: `(p, q)` in the old
/// basis names the same vector as `remark_slope((p, q), k)` in the new.
pub fn remark_slope(slope: (i64, i64), k: i64) -> (i64, i64) {
    (slope.0 - k * slope.1, slope.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_of_axis_basis() {
        let (a, b, c) = normal_form([2.0, 0.0], [0.5, 3.0]).unwrap();
        assert_eq!((a, b, c), (2.0, 0.5, 3.0));
    }

    #[test]
    fn normal_form_is_rotation_invariant() {
        let (s, t) = (0.6f64, 0.8f64); // a rotation by the 3-4-5 angle
        let rot = |p: [f64; 2]| [s * p[0] - t * p[1], t * p[0] + s * p[1]];
        let u = [1.25, 0.0];
        let v = [-0.75, 2.0];
        let plain = normal_form(u, v).unwrap();
        let turned = normal_form(rot(u), rot(v)).unwrap();
        assert!((plain.0 - turned.0).abs() < 1e-12);
        assert!((plain.1 - turned.1).abs() < 1e-12);
        assert!((plain.2 - turned.2).abs() < 1e-12);
    }

    #[test]
    fn orientation_is_enforced() {
        assert!(normal_form([1.0, 0.0], [0.5, -1.0]).is_none());
        assert!(normal_form([0.0, 0.0], [1.0, 0.0]).is_none());
    }

    #[test]
    fn remarking_preserves_vectors() {
        let u = [1.5, 0.25];
        let v = [0.5, 2.0];
        for k in -3..=3 {
            let (u2, v2) = remark(u, v, k);
            for p in -4i64..=4 {
                for q in -4i64..=4 {
                    let (p2, q2) = remark_slope((p, q), k);
                    let old = vector_length_sq(u, v, p, q);
                    let new = vector_length_sq(u2, v2, p2, q2);
                    assert!((old - new).abs() <= 1e-9 * (1.0 + old));
                }
            }
        }
    }
}
