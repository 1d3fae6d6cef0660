//! Cross-checks of the braid machinery against the independent oracles
//! in `testkit`.
//!
//! The order oracle represents braids by their action on free-group
//! loops and reads the sign off the reduced image words; the equality
//! oracle rewrites words exhaustively with the defining relations.
//! Neither shares any code or ideas with handle reduction or the
//! normal form, so agreement here is meaningful evidence.

use cuspgeom::{braids_equal, sigma_class, BraidWord, SigmaClass};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use testkit::artin;

fn random_letters(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                idx
            } else {
                -idx
            }
        })
        .collect()
}

fn to_sign(class: SigmaClass) -> artin::OrderSign {
    match class {
        SigmaClass::Negative => artin::OrderSign::Negative,
        SigmaClass::Trivial => artin::OrderSign::Zero,
        SigmaClass::Positive => artin::OrderSign::Positive,
    }
}

#[test]
fn order_verdicts_match_the_loop_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for round in 0..200 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=12);
        let letters = random_letters(&mut rng, n, len);
        let word = BraidWord::new(n, letters.clone()).unwrap();
        let ours = to_sign(sigma_class(&word).unwrap());
        let oracle = artin::order_sign(n, &letters);
        assert_eq!(ours, oracle, "round {round}, word {letters:?}");
    }
}

#[test]
fn equality_verdicts_match_the_loop_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let n = rng.gen_range(2..=4);
        let len_u = rng.gen_range(0..=8);
        let u = random_letters(&mut rng, n, len_u);
        // Half the rounds compare against a rewritten copy of u (equal
        // braids), half against an unrelated word.
        let v = if rng.gen_bool(0.5) {
            let word = BraidWord::new(n, u.clone()).unwrap();
            word.normal_form().to_word().letters().to_vec()
        } else {
            let len_v = rng.gen_range(0..=8);
            random_letters(&mut rng, n, len_v)
        };
        let wu = BraidWord::new(n, u.clone()).unwrap();
        let wv = BraidWord::new(n, v.clone()).unwrap();
        assert_eq!(
            braids_equal(&wu, &wv).unwrap(),
            artin::words_equal(n, &u, &v),
            "words {u:?} vs {v:?}"
        );
    }
}

#[test]
fn equality_verdicts_match_relation_rewriting() {
    // Sampled pairs here; the exhaustive sweep over all short 3-strand
    // words is part of the acceptance suite.
    let part = testkit::rewrite::B3Partition::new(5, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let len_u = rng.gen_range(0..=5);
        let u = random_letters(&mut rng, 3, len_u);
        let len_v = rng.gen_range(0..=5);
        let v = random_letters(&mut rng, 3, len_v);
        let wu = BraidWord::new(3, u.clone()).unwrap();
        let wv = BraidWord::new(3, v.clone()).unwrap();
        assert_eq!(
            braids_equal(&wu, &wv).unwrap(),
            part.equal(&u, &v),
            "words {u:?} vs {v:?}"
        );
    }
}

#[test]
fn handle_reduction_is_sound_per_the_loop_oracle() {
    // The reduced word must stay the same braid, verified without the
    // normal form.
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=10);
        let letters = random_letters(&mut rng, n, len);
        let word = BraidWord::new(n, letters.clone()).unwrap();
        let reduced = cuspgeom::handle_reduce(&word).unwrap();
        assert!(
            artin::words_equal(n, &letters, reduced.letters()),
            "reduction changed the braid: {letters:?} -> {reduced}"
        );
    }
}
