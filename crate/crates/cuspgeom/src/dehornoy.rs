//! The canonical left-invariant order on braids, the twist floor, and
//! fractional twist intervals.
//!
//! A braid word is *σ-positive* when its lowest-index generator occurs
//! with positive sign only; such braids are strictly greater than the
//! identity in the canonical order.  Handle reduction rewrites any word
//! into an equivalent one that is empty or σ-positive or σ-negative,
//! which decides the order.  On top of the order sit the twist floor
//! (the largest `m` with `Δ^{2m} ≼ β`) and the exact rational intervals
//! `[⌊β^k⌋/k, (⌊β^k⌋+1)/k]` that bracket the fractional twist of the
//! braid's mapping class.

use crate::braid::{half_twist, BraidWord};
use num_rational::Rational64;

/// Default ceiling on the number of handle substitutions in one call.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Errors from order computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    /// Handle reduction performed more substitutions than allowed.
    #[error("handle reduction exceeded its budget of {budget} steps")]
    BudgetExceeded {
        /// The budget that was in force.
        budget: u64,
    },
}

/// Position of a braid relative to the identity in the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SigmaClass {
    /// Strictly below the identity.
    Negative,
    /// The identity braid.
    Trivial,
    /// Strictly above the identity.
    Positive,
}

/// An exact rational bracket for the fractional twist of a braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FdtcInterval {
    /// Lower endpoint `⌊β^k⌋ / k` (attained, the value may equal it).
    pub lo: Rational64,
    /// Upper endpoint `(⌊β^k⌋ + 1) / k`.
    pub hi: Rational64,
    /// The power `k` the bracket was computed at; the width is `1/k`.
    pub depth: i64,
}

impl FdtcInterval {
    /// True when the two brackets overlap (as closed intervals).
    pub fn intersects(&self, other: &FdtcInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

fn free_reduce(letters: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

/// Finds the handle whose closing letter comes first: a pair `(q, p)`
/// with `letters[q] == -letters[p]` and only higher-index letters in
/// between.  Scanning with a monotone stack of positions whose indices
/// never decrease makes each pass linear.
fn leftmost_handle(letters: &[i32]) -> Option<(usize, usize)> {
    let mut stack: Vec<usize> = Vec::new();
    for (p, &l) in letters.iter().enumerate() {
        let idx = l.abs();
        while let Some(&q) = stack.last() {
            if letters[q].abs() > idx {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&q) = stack.last() {
            if letters[q] == -l {
                return Some((q, p));
            }
            if letters[q] == l {
                // Same letter: the newer occurrence supersedes the older
                // as the nearest blocker at this index.
                stack.pop();
            }
        }
        stack.push(p);
    }
    None
}

fn reduce_letters(mut letters: Vec<i32>, budget: u64) -> Result<Vec<i32>, OrderError> {
    let mut steps = 0u64;
    loop {
        free_reduce(&mut letters);
        let Some((q, p)) = leftmost_handle(&letters) else {
            return Ok(letters);
        };
        if steps == budget {
            return Err(OrderError::BudgetExceeded { budget });
        }
        steps += 1;
        // Replace sigma_i^e u sigma_i^-e by u with every sigma_{i+1}^d in
        // u rewritten as sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
        let i = letters[q].abs();
        let e = letters[q].signum();
        let mut next = Vec::with_capacity(letters.len() + 4);
        next.extend_from_slice(&letters[..q]);
        for &l in &letters[q + 1..p] {
            if l.abs() == i + 1 {
                next.push(-e * (i + 1));
                next.push(l.signum() * i);
                next.push(e * (i + 1));
            } else {
                next.push(l);
            }
        }
        next.extend_from_slice(&letters[p + 1..]);
        letters = next;
    }
}

/// Rewrites `w` into an equivalent word without handles, using the
/// default budget.  The result is empty or has its lowest-index
/// generator occurring with a single sign.
pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord, OrderError> {
    handle_reduce_with_budget(w, DEFAULT_BUDGET)
}

/// [`handle_reduce`] with an explicit substitution budget.
pub fn handle_reduce_with_budget(w: &BraidWord, budget: u64) -> Result<BraidWord, OrderError> {
    let letters = reduce_letters(w.letters().to_vec(), budget)?;
    Ok(BraidWord::new(w.strands(), letters).expect("reduction preserves the letter range"))
}

/// Classifies `w` against the identity in the canonical order.
pub fn sigma_class(w: &BraidWord) -> Result<SigmaClass, OrderError> {
    sigma_class_with_budget(w, DEFAULT_BUDGET)
}

/// [`sigma_class`] with an explicit handle-reduction budget.
pub fn sigma_class_with_budget(w: &BraidWord, budget: u64) -> Result<SigmaClass, OrderError> {
    let reduced = reduce_letters(w.letters().to_vec(), budget)?;
    let Some(lowest) = reduced.iter().min_by_key(|l| l.abs()) else {
        return Ok(SigmaClass::Trivial);
    };
    Ok(if *lowest > 0 {
        SigmaClass::Positive
    } else {
        SigmaClass::Negative
    })
}

fn full_twist_letters(n: usize, count: i64) -> Vec<i32> {
    let delta = half_twist(n).expect("strand count comes from a valid word");
    let mut out = Vec::with_capacity(delta.len() * 2 * count.unsigned_abs() as usize);
    if count >= 0 {
        for _ in 0..2 * count {
            out.extend_from_slice(delta.letters());
        }
    } else {
        let inv: Vec<i32> = delta.letters().iter().rev().map(|&l| -l).collect();
        for _ in 0..-2 * count {
            out.extend_from_slice(&inv);
        }
    }
    out
}

/// The twist floor: the unique `m` with `Δ^{2m} ≼ β ≺ Δ^{2m+2}`.
pub fn dehornoy_floor(beta: &BraidWord) -> Result<i64, OrderError> {
    dehornoy_floor_with_budget(beta, DEFAULT_BUDGET)
}

/// [`dehornoy_floor`] with an explicit handle-reduction budget.
pub fn dehornoy_floor_with_budget(beta: &BraidWord, budget: u64) -> Result<i64, OrderError> {
    let n = beta.strands();
    // True when Δ^{2m} ≼ β, i.e. Δ^{-2m}β is not below the identity.
    // Antitone in m.
    let at_least = |m: i64| -> Result<bool, OrderError> {
        let mut letters = full_twist_letters(n, -m);
        letters.extend_from_slice(beta.letters());
        let reduced = reduce_letters(letters, budget)?;
        let lowest = reduced.iter().min_by_key(|l| l.abs());
        Ok(lowest.map_or(true, |&l| l > 0))
    };
    // A word with L letters satisfies Δ^{-2L} ≼ β ≼ Δ^{2L}, because each
    // single letter lies between Δ^{-2} and Δ^{2}.  That brackets the
    // floor in [-L-1, L].
    let len = beta.len() as i64;
    let (mut lo, mut hi); // invariant: at_least(lo) true, at_least(hi) false
    if at_least(0)? {
        lo = 0;
        hi = 1;
        while hi <= len && at_least(hi)? {
            lo = hi;
            hi *= 2;
        }
        hi = hi.min(len + 1);
    } else {
        hi = 0;
        lo = -1;
        while lo >= -len && !at_least(lo)? {
            hi = lo;
            lo *= 2;
        }
        lo = lo.max(-len - 1);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at_least(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Brackets the fractional twist of `β` to width `1/k` by flooring the
/// `k`-th power: the value lies in `[⌊β^k⌋/k, (⌊β^k⌋+1)/k]`.
pub fn fdtc_interval(beta: &BraidWord, k: i64) -> Result<FdtcInterval, OrderError> {
    fdtc_interval_with_budget(beta, k, DEFAULT_BUDGET)
}

/// [`fdtc_interval`] with an explicit handle-reduction budget.
pub fn fdtc_interval_with_budget(
    beta: &BraidWord,
    k: i64,
    budget: u64,
) -> Result<FdtcInterval, OrderError> {
    assert!(k >= 1, "depth must be at least 1");
    let floor = dehornoy_floor_with_budget(&beta.power(k), budget)?;
    Ok(FdtcInterval {
        lo: Rational64::new(floor, k),
        hi: Rational64::new(floor + 1, k),
        depth: k,
    })
}
