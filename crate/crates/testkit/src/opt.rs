//! Brute-force one-dimensional maximisation, used to confirm
//! closed-form extrema.

/// Maximises `f` on `[lo, hi]` by scanning a uniform grid of `coarse`
/// cells and then repeatedly zooming into the best cell.  Returns the
/// located maximiser and value.  Robust rather than fast; intended for
/// smooth functions in tests.
pub fn grid_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, coarse: usize, zooms: usize) -> (f64, f64) {
    assert!(lo < hi && coarse >= 2);
    let mut left = lo;
    let mut right = hi;
    let mut best_x = lo;
    let mut best_y = f(lo);
    for _ in 0..=zooms {
        let step = (right - left) / coarse as f64;
        for i in 0..=coarse {
            let x = left + step * i as f64;
            let y = f(x);
            if y > best_y {
                best_y = y;
                best_x = x;
            }
        }
        left = (best_x - step).max(lo);
        right = (best_x + step).min(hi);
    }
    (best_x, best_y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_peak() {
        // Near a smooth peak the function varies quadratically, so the
        // locator cannot do better than about sqrt(epsilon) in x.
        let (x, y) = grid_max(|x| 1.0 - (x - 0.3) * (x - 0.3), -1.0, 1.0, 64, 30);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn finds_boundary_maximum() {
        let (x, _) = grid_max(|x| x, 0.0, 2.0, 16, 20);
        assert!((x - 2.0).abs() < 1e-9);
    }

    #[test]
    fn finds_sine_peak() {
        let pi = std::f64::consts::PI;
        let (x, y) = grid_max(|x| x.sin(), 0.0, pi, 50, 30);
        assert!((x - pi / 2.0).abs() < 1e-6);
        assert!((y - 1.0).abs() < 1e-12);
    }
}
