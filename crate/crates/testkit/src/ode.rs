//! Classical fixed-step Runge–Kutta integration, used as a reference
//! for trajectory computations.

/// Integrates `y' = f(t, y)` from `(t0, y0)` to `t1` with the classical
/// fourth-order Runge–Kutta scheme using `steps` equal steps.
pub fn rk4<F>(f: F, t0: f64, y0: &[f64], t1: f64, steps: usize) -> Vec<f64>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    let mut y = y0.to_vec();
    rk4_observe(f, t0, &mut y, t1, steps, |_, _| {});
    y
}

/// Same as [`rk4`], but invokes `observe(t, y)` after every step (and
/// once at the start), and integrates in place.
pub fn rk4_observe<F, O>(f: F, t0: f64, y: &mut Vec<f64>, t1: f64, steps: usize, mut observe: O)
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
    O: FnMut(f64, &[f64]),
{
    assert!(steps > 0, "need at least one step");
    let h = (t1 - t0) / steps as f64;
    observe(t0, y);
    let dim = y.len();
    let mut stage = vec![0.0; dim];
    for s in 0..steps {
        let t = t0 + h * s as f64;
        let k1 = f(t, y);
        for i in 0..dim {
            stage[i] = y[i] + 0.5 * h * k1[i];
        }
        let k2 = f(t + 0.5 * h, &stage);
        for i in 0..dim {
            stage[i] = y[i] + 0.5 * h * k2[i];
        }
        let k3 = f(t + 0.5 * h, &stage);
        for i in 0..dim {
            stage[i] = y[i] + h * k3[i];
        }
        let k4 = f(t + h, &stage);
        for i in 0..dim {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        observe(t + h, y);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_exponential() {
        let y = rk4(|_, y| vec![y[0]], 0.0, &[1.0], 1.0, 200);
        assert!((y[0] - std::f64::consts::E).abs() < 1e-10);
    }

    #[test]
    fn integrates_circular_motion() {
        let tau = std::f64::consts::TAU;
        let y = rk4(|_, y| vec![-y[1], y[0]], 0.0, &[1.0, 0.0], tau, 2000);
        assert!((y[0] - 1.0).abs() < 1e-9);
        assert!(y[1].abs() < 1e-9);
    }

    #[test]
    fn fourth_order_convergence() {
        let exact = (1.0f64).tan();
        let run = |steps| rk4(|_: f64, y: &[f64]| vec![1.0 + y[0] * y[0]], 0.0, &[0.0], 1.0, steps)[0];
        let coarse = (run(100) - exact).abs();
        let fine = (run(200) - exact).abs();
        // Halving the step should cut the error by roughly 2^4.
        assert!(fine < coarse / 10.0, "coarse {coarse:e}, fine {fine:e}");
    }
}
