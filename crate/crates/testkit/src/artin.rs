//! Order oracle based on the braid group's action on a free group.
//!
//! A braid on `n` strands acts on the free group generated by loops
//! `x_1, ..., x_n` around the punctures of a disc: the generator with
//! index `i` maps `x_i -> x_i x_{i+1} x_i^-1` and `x_{i+1} -> x_i`,
//! fixing the other loops.  The action is faithful, and the sign of a
//! braid in the canonical left order can be read off from the reduced
//! images of the `x_d`:
//!
//! * if the braid fixes `x_1, ..., x_{d-1}` and the reduced image of
//!   `x_d` starts with the letter `x_d` (but is not `x_d` itself), the
//!   braid is positive at level `d`, hence greater than the identity;
//! * in the same situation with the image *not* starting with `x_d`,
//!   it is smaller than the identity;
//! * if every `x_d` is fixed the braid is trivial.
//!
//! Every classification double-checks itself against the inverse braid
//! and panics on inconsistency, so a wrong answer cannot escape
//! silently.  Braid words are slices of nonzero `i32`s where `k` means
//! the `k`-th Artin generator and `-k` its inverse.

/// Sign of a braid with respect to the canonical left-invariant order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderSign {
    /// Strictly smaller than the identity braid.
    Negative,
    /// Equal to the identity braid.
    Zero,
    /// Strictly greater than the identity braid.
    Positive,
}

fn push_reduced(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

/// Applies a single braid generator (`gen = ±i`) to a reduced free word,
/// returning the reduced image.
fn apply_generator(word: &[i32], gen: i32) -> Vec<i32> {
    let i = gen.abs();
    let mut out = Vec::with_capacity(word.len() * 3);
    for &l in word {
        let k = l.abs();
        let image: &[i32] = if gen > 0 {
            if k == i {
                &[i, i + 1, -i]
            } else if k == i + 1 {
                &[i]
            } else {
                &[k]
            }
        } else if k == i {
            &[i + 1]
        } else if k == i + 1 {
            &[-(i + 1), i, i + 1]
        } else {
            &[k]
        };
        if l > 0 {
            for &m in image {
                push_reduced(&mut out, m);
            }
        } else {
            for &m in image.iter().rev() {
                push_reduced(&mut out, -m);
            }
        }
    }
    out
}

/// Image of the free word `word` under the braid `braid` (letters applied
/// left to right).
pub fn act(braid: &[i32], word: &[i32]) -> Vec<i32> {
    let mut cur: Vec<i32> = Vec::new();
    for &l in word {
        push_reduced(&mut cur, l);
    }
    for &g in braid {
        cur = apply_generator(&cur, g);
    }
    cur
}

/// Classifies a braid word on `n` strands relative to the identity.
///
/// Panics if the word uses letters outside `1..n` in absolute value, or if
/// the braid and its inverse give inconsistent verdicts (which would mean
/// the oracle itself is broken).
pub fn order_sign(n: usize, braid: &[i32]) -> OrderSign {
    assert!(n >= 2, "need at least two strands");
    for &l in braid {
        let k = l.unsigned_abs() as usize;
        assert!(l != 0 && k < n, "letter {l} out of range for {n} strands");
    }
    let inverse: Vec<i32> = braid.iter().rev().map(|&l| -l).collect();
    for d in 1..n as i32 {
        let image = act(braid, &[d]);
        let inv_image = act(&inverse, &[d]);
        if image == [d] {
            assert!(
                inv_image == [d],
                "inverse braid moves x_{d} while the braid fixes it"
            );
            continue;
        }
        assert!(inv_image != [d], "braid moves x_{d} while its inverse fixes it");
        let starts = image[0] == d;
        let inv_starts = inv_image[0] == d;
        assert!(
            starts != inv_starts,
            "braid and inverse both {} with x_{d}: {:?} / {:?}",
            if starts { "start" } else { "do not start" },
            image,
            inv_image
        );
        return if starts {
            OrderSign::Positive
        } else {
            OrderSign::Negative
        };
    }
    OrderSign::Zero
}

/// Compares two braid words on `n` strands in the left-invariant order:
/// returns the sign of `u^-1 v`.
pub fn compare(n: usize, u: &[i32], v: &[i32]) -> OrderSign {
    let mut w: Vec<i32> = u.iter().rev().map(|&l| -l).collect();
    w.extend_from_slice(v);
    order_sign(n, &w)
}

/// True when the two braid words represent the same braid.
pub fn words_equal(n: usize, u: &[i32], v: &[i32]) -> bool {
    compare(n, u, v) == OrderSign::Zero
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_images() {
        assert_eq!(act(&[1], &[1]), vec![1, 2, -1]);
        assert_eq!(act(&[1], &[2]), vec![1]);
        assert_eq!(act(&[1], &[3]), vec![3]);
        assert_eq!(act(&[-1], &[1]), vec![2]);
        assert_eq!(act(&[-1], &[2]), vec![-2, 1, 2]);
    }

    #[test]
    fn action_respects_braid_relation() {
        for word in [[1], [2], [3], [-2]] {
            assert_eq!(act(&[1, 2, 1], &word), act(&[2, 1, 2], &word));
        }
    }

    #[test]
    fn action_respects_far_commutation() {
        for word in [[1], [2], [3], [4]] {
            assert_eq!(act(&[1, 3], &word), act(&[3, 1], &word));
        }
    }

    #[test]
    fn action_inverts() {
        let braid = [1, -2, 1, 3, -1];
        let inverse: Vec<i32> = braid.iter().rev().map(|&l| -l).collect();
        for d in 1..=4 {
            let there = act(&braid, &[d]);
            assert_eq!(act(&inverse, &there), vec![d]);
        }
    }

    #[test]
    fn boundary_loop_is_fixed() {
        // The product of all puncture loops is the boundary of the disc;
        // every braid fixes it exactly.
        let braid = [2, -1, 3, 3, -2, 1, 1];
        assert_eq!(act(&braid, &[1, 2, 3, 4]), vec![1, 2, 3, 4]);
    }

    #[test]
    fn signs_of_simple_words() {
        assert_eq!(order_sign(2, &[]), OrderSign::Zero);
        assert_eq!(order_sign(2, &[1]), OrderSign::Positive);
        assert_eq!(order_sign(2, &[-1]), OrderSign::Negative);
        assert_eq!(order_sign(3, &[1, -1]), OrderSign::Zero);
        assert_eq!(order_sign(3, &[-2, 1]), OrderSign::Positive);
        assert_eq!(order_sign(3, &[2, -1]), OrderSign::Negative);
        assert_eq!(order_sign(3, &[2]), OrderSign::Positive);
        assert_eq!(order_sign(3, &[-2]), OrderSign::Negative);
        // Conjugates of a positive generator stay positive.
        assert_eq!(order_sign(3, &[-1, 2, 1]), OrderSign::Positive);
        assert_eq!(order_sign(4, &[3, -3, 2, -2]), OrderSign::Zero);
    }

    #[test]
    fn full_twist_is_positive_and_central() {
        let delta = [1, 2, 1];
        let mut full_twist = Vec::new();
        full_twist.extend_from_slice(&delta);
        full_twist.extend_from_slice(&delta);
        assert_eq!(order_sign(3, &full_twist), OrderSign::Positive);
        // Central: commutes with both generators.
        for g in [1, 2] {
            let mut left = full_twist.clone();
            left.push(g);
            let mut right = vec![g];
            right.extend_from_slice(&full_twist);
            assert!(words_equal(3, &left, &right));
        }
    }

    #[test]
    fn comparison_is_a_strict_order_on_samples() {
        // sigma_1^-1 < 1 < sigma_2 < sigma_1 in the canonical order on B_3.
        let chain: [&[i32]; 4] = [&[-1], &[], &[2], &[1]];
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                let expected = match i.cmp(&j) {
                    std::cmp::Ordering::Less => OrderSign::Positive,
                    std::cmp::Ordering::Equal => OrderSign::Zero,
                    std::cmp::Ordering::Greater => OrderSign::Negative,
                };
                assert_eq!(compare(3, chain[i], chain[j]), expected);
            }
        }
    }

    #[test]
    fn construction_positive_words_classify_positive() {
        // Words built to expose their lowest index only positively must be
        // classified positive, at every level.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let n = 5usize;
        for _ in 0..300 {
            let level = (next() % (n as u64 - 1) + 1) as i32;
            let len = (next() % 9 + 1) as usize;
            let mut word = Vec::with_capacity(len);
            let mut has_level = false;
            for _ in 0..len {
                let k = level + (next() % (n as i64 - level as i64) as u64) as i32;
                let sign = if k == level {
                    has_level = true;
                    1
                } else if next() % 2 == 0 {
                    1
                } else {
                    -1
                };
                word.push(sign * k);
            }
            if !has_level {
                word.push(level);
            }
            assert_eq!(order_sign(n, &word), OrderSign::Positive, "word {word:?}");
            let inv: Vec<i32> = word.iter().rev().map(|&l| -l).collect();
            assert_eq!(order_sign(n, &inv), OrderSign::Negative, "word {word:?}");
        }
    }
}
