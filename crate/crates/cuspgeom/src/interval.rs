//! Closed `f64` intervals with outward rounding slack.
//!
//! Every arithmetic operation pads its result outward by four units in
//! the last place on each side.  That absorbs the rounding error of
//! double-precision evaluation without directed-rounding machinery;
//! the certified constants downstream all carry at least four
//! significant digits of slack, so this is validated-at-desk-scale
//! enclosure arithmetic rather than a formally rigorous one.

use std::ops::{Add, Mul, Neg, Sub};

/// A closed interval `[lo, hi]` with finite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

fn pad_down(x: f64) -> f64 {
    let mut v = x;
    for _ in 0..4 {
        v = v.next_down();
    }
    v
}

fn pad_up(x: f64) -> f64 {
    let mut v = x;
    for _ in 0..4 {
        v = v.next_up();
    }
    v
}

impl Interval {
    /// Builds `[lo, hi]` as given (no padding).
    ///
    /// # Panics
    /// If either endpoint is non-finite or `lo > hi`.
    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(
            lo.is_finite() && hi.is_finite() && lo <= hi,
            "bad interval [{lo}, {hi}]"
        );
        Interval { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    /// `center ± radius`, padded outward.
    ///
    /// # Panics
    /// If `radius < 0` or the data is non-finite.
    pub fn with_radius(center: f64, radius: f64) -> Interval {
        assert!(radius >= 0.0, "negative radius {radius}");
        Interval::new(pad_down(center - radius), pad_up(center + radius))
    }

    /// Lower endpoint.
    pub fn lo(&self) -> f64 {
        self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// `hi − lo`.
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// The midpoint `(lo + hi)/2`.
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Whether `x` lies in the closed interval.
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Whether the two closed intervals share a point.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Interval) -> Interval {
        Interval::new(pad_down(self.lo + rhs.lo), pad_up(self.hi + rhs.hi))
    }
}

impl Sub for Interval {
    type Output = Interval;

    fn sub(self, rhs: Interval) -> Interval {
        Interval::new(pad_down(self.lo - rhs.hi), pad_up(self.hi - rhs.lo))
    }
}

impl Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        // Negation is exact in binary floating point: no padding.
        Interval::new(-self.hi, -self.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;

    fn mul(self, rhs: Interval) -> Interval {
        let products = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = products.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::new(pad_down(lo), pad_up(hi))
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;

    fn mul(self, k: f64) -> Interval {
        assert!(k.is_finite(), "non-finite scale {k}");
        let (lo, hi) = if k >= 0.0 {
            (self.lo * k, self.hi * k)
        } else {
            (self.hi * k, self.lo * k)
        };
        Interval::new(pad_down(lo), pad_up(hi))
    }
}
