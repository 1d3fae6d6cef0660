//! Braid words, permutation braids, and Garside normal form.
//!
//! A braid on `n` strands is stored as a freely reduced word in the Artin
//! generators: letter `i > 0` is sigma_i (crossing strands `i` and `i+1`),
//! letter `-i` its inverse. The word problem is solved through the
//! left-weighted normal form `Delta^p . A_1 ... A_k`, where `Delta` is the
//! positive half twist and each `A_j` is a permutation braid (a positive
//! braid in which any two strands cross at most once). Two words represent
//! the same group element exactly when their normal forms coincide.

use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

/// Errors raised by braid construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    /// Braid groups need at least two strands.
    #[error("strand count must be at least 2, got {0}")]
    BadStrandCount(usize),
    /// Letter `0` is not a generator.
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    /// Generator index out of range for the declared strand count.
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    /// Binary operations require both operands on the same strand count.
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    /// The braid text could not be parsed.
    #[error("malformed braid text: {0}")]
    Parse(String),
}

fn reduce_push(stack: &mut Vec<i32>, letter: i32) {
    if stack.last() == Some(&-letter) {
        stack.pop();
    } else {
        stack.push(letter);
    }
}

/// A freely reduced word in the Artin generators of the braid group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word on `strands` strands, validating every letter and
    /// applying free reduction.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::BadStrandCount(strands));
        }
        let mut reduced = Vec::new();
        for letter in letters {
            if letter == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
            reduce_push(&mut reduced, letter);
        }
        Ok(BraidWord { strands, letters: reduced })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, [])
    }

    /// Parses the text format `"Bn: i1 i2 ..."`. The `Bn:` prefix is
    /// optional; without it the strand count is inferred as the smallest
    /// one admitting every letter (at least 2). Letters are signed decimal
    /// integers separated by whitespace; `0` is rejected.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let text = text.trim();
        let (strands, rest) = match text.split_once(':') {
            Some((head, rest)) => {
                let head = head.trim();
                let digits = head
                    .strip_prefix('B')
                    .or_else(|| head.strip_prefix('b'))
                    .ok_or_else(|| BraidError::Parse(format!("bad prefix {head:?}")))?;
                let n: usize = digits
                    .parse()
                    .map_err(|_| BraidError::Parse(format!("bad strand count {digits:?}")))?;
                (Some(n), rest)
            }
            None => (None, text),
        };
        let mut letters = Vec::new();
        for tok in rest.split_whitespace() {
            let letter: i32 = tok
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
            letters.push(letter);
        }
        let strands = match strands {
            Some(n) => n,
            None => letters
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(2)
                .max(2),
        };
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The freely reduced letters.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation followed by free reduction. Errors on strand mismatch.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            reduce_push(&mut letters, l);
        }
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The group inverse (reversed word with flipped signs).
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` raised to an integer power, with free reduction throughout.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                reduce_push(&mut letters, l);
            }
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Sum of letter signs; a homomorphism to the integers.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Left-weighted normal form; see [`GarsideForm`].
    pub fn normal_form(&self) -> GarsideForm {
        GarsideForm::of_word(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// The positive half twist `Delta` on `n` strands, as the word
/// `(s_1 .. s_{n-1})(s_1 .. s_{n-2}) ... (s_1 s_2)(s_1)` of length
/// `n(n-1)/2`.
pub fn half_twist(n: usize) -> Result<BraidWord, BraidError> {
    if n < 2 {
        return Err(BraidError::BadStrandCount(n));
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in (1..n).rev() {
        for i in 1..=top {
            letters.push(i as i32);
        }
    }
    BraidWord::new(n, letters)
}

/// Whether two words represent the same element of the braid group.
/// Errors on strand mismatch.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(u.normal_form() == v.normal_form())
}

/// A permutation of `{0, .., n-1}` recording where each starting position
/// ends up. Doubles as the encoding of a permutation braid: the positive
/// braid in which strands starting at positions `p` and `q` cross exactly
/// once when the permutation inverts their order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// The half-twist permutation `p -> n-1-p`.
    pub fn delta(n: usize) -> Self {
        Permutation((0..n as u8).rev().collect())
    }

    /// The adjacent transposition underlying sigma_i (1-based `i`).
    pub fn transposition(n: usize, i: usize) -> Self {
        debug_assert!((1..n).contains(&i));
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i - 1, i);
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &q)| p as u8 == q)
    }

    /// Composition "self, then other".
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.0.len()];
        for (p, &q) in self.0.iter().enumerate() {
            images[q as usize] = p as u8;
        }
        Permutation(images)
    }

    /// Conjugation by the half twist, `tau(A) = Delta^{-1} A Delta`.
    pub fn flip(&self) -> Permutation {
        let n = self.0.len();
        let d = Permutation::delta(n);
        d.then(self).then(&d)
    }

    /// Number of inversions; the letter length of the permutation braid.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for p in 0..self.0.len() {
            for q in p + 1..self.0.len() {
                if self.0[p] > self.0[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Bitmask of 1-based descent positions `i` with `pi(i) > pi(i+1)`.
    /// For a permutation braid this is the set of generators that can start
    /// a positive word for it.
    fn descent_mask(&self) -> u64 {
        let mut mask = 0u64;
        for i in 1..self.0.len() {
            if self.0[i - 1] > self.0[i] {
                mask |= 1 << i;
            }
        }
        mask
    }

    fn starting_mask(&self) -> u64 {
        self.descent_mask()
    }

    fn finishing_mask(&self) -> u64 {
        self.inverse().descent_mask()
    }

    /// A positive word for the permutation braid, produced by bubble
    /// sorting the strands into their final order (one crossing per
    /// inverted pair).
    pub fn positive_word(&self) -> Vec<i32> {
        let n = self.0.len();
        let mut arr: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::with_capacity(self.inversions());
        loop {
            let mut swapped = false;
            for p in 0..n - 1 {
                if self.0[arr[p] as usize] > self.0[arr[p + 1] as usize] {
                    arr.swap(p, p + 1);
                    out.push((p + 1) as i32);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        out
    }
}

/// Makes the pair `(a, b)` of permutation braids left-weighted by sliding
/// head generators of `b` into `a` while the product stays a pair of
/// permutation braids. Returns whether anything moved.
fn left_weight_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let movable = b.starting_mask() & !a.finishing_mask();
        if movable == 0 {
            return moved;
        }
        let i = movable.trailing_zeros() as usize;
        let s = Permutation::transposition(n, i);
        *a = a.then(&s);
        *b = s.then(b);
        moved = true;
    }
}

/// Left-weighted normal form `Delta^inf . A_1 ... A_k`. The factors are
/// permutation braids, none trivial and none the half twist, and each
/// consecutive pair is left-weighted (every generator starting `A_{j+1}`
/// finishes `A_j`). This is a complete invariant: two words are equal in
/// the braid group exactly when their forms agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl GarsideForm {
    fn of_word(word: &BraidWord) -> GarsideForm {
        let n = word.strands();
        let delta = Permutation::delta(n);
        let mut inf: i64 = 0;
        let mut parity = false;
        let mut factors: VecDeque<Permutation> = VecDeque::with_capacity(word.len());
        for &letter in word.letters() {
            if letter > 0 {
                let s = Permutation::transposition(n, letter as usize);
                factors.push_back(if parity { s.flip() } else { s });
            } else {
                let i = (-letter) as usize;
                inf -= 1;
                parity = !parity;
                let b = delta.then(&Permutation::transposition(n, i));
                factors.push_back(if parity { b.flip() } else { b });
            }
        }
        if parity {
            for f in factors.iter_mut() {
                *f = f.flip();
            }
        }
        normalize(n, inf, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent of the leading power of `Delta` (the infimum).
    pub fn inf(&self) -> i64 {
        self.inf
    }

    /// The left-weighted permutation-braid factors.
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length (number of factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Renders the form back into a braid word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta_word = half_twist(n).expect("strand count validated at construction");
        let mut word = if self.inf >= 0 {
            delta_word.power(self.inf)
        } else {
            delta_word.inverse().power(-self.inf)
        };
        for f in &self.factors {
            let fw = BraidWord::new(n, f.positive_word()).expect("factor letters are in range");
            word = word.compose(&fw).expect("same strand count");
        }
        word
    }
}

fn normalize(n: usize, mut inf: i64, mut factors: VecDeque<Permutation>) -> GarsideForm {
    let delta = Permutation::delta(n);
    loop {
        let mut changed = false;
        factors.retain(|f| {
            let keep = !f.is_identity();
            changed |= !keep;
            keep
        });
        while factors.front() == Some(&delta) {
            factors.pop_front();
            inf += 1;
            changed = true;
        }
        let slice = factors.make_contiguous();
        for i in 1..slice.len() {
            let (left, right) = slice.split_at_mut(i);
            changed |= left_weight_pair(&mut left[i - 1], &mut right[0]);
        }
        if !changed {
            return GarsideForm { strands: n, inf, factors: factors.into_iter().collect() };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    /// Independent free reduction: rescan from scratch until no adjacent
    /// inverse pair remains.
    fn free_reduce_oracle(letters: &[i32]) -> Vec<i32> {
        let mut current: Vec<i32> = letters.to_vec();
        loop {
            let mut next = Vec::with_capacity(current.len());
            let mut i = 0;
            let mut changed = false;
            while i < current.len() {
                if i + 1 < current.len() && current[i] == -current[i + 1] {
                    i += 2;
                    changed = true;
                } else {
                    next.push(current[i]);
                    i += 1;
                }
            }
            current = next;
            if !changed {
                return current;
            }
        }
    }

    #[test]
    fn compose_cancels_inverse_pairs() {
        let u = word(3, &[1, 2]);
        let v = word(3, &[-2, -1]);
        assert!(u.compose(&v).unwrap().is_empty());
    }

    #[test]
    fn compose_matches_free_reduction_oracle() {
        let mut rng_state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            rng_state ^= rng_state << 13;
            rng_state ^= rng_state >> 7;
            rng_state ^= rng_state << 17;
            rng_state
        };
        for _ in 0..200 {
            let n = 2 + (next() % 3) as usize;
            let len = (next() % 14) as usize;
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let idx = (next() % (n as u64 - 1)) as i32 + 1;
                    if next() % 2 == 0 {
                        idx
                    } else {
                        -idx
                    }
                })
                .collect();
            let via_stack = BraidWord::new(n, letters.iter().copied()).unwrap();
            assert_eq!(via_stack.letters(), free_reduce_oracle(&letters).as_slice());
        }
    }

    #[test]
    fn word_and_inverse_compose_to_identity() {
        let u = word(4, &[1, -2, 3, 3, -1]);
        assert!(u.compose(&u.inverse()).unwrap().is_empty());
        assert!(u.inverse().compose(&u).unwrap().is_empty());
    }

    #[test]
    fn half_twist_small_cases() {
        assert_eq!(half_twist(2).unwrap().letters(), &[1]);
        assert_eq!(half_twist(3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(half_twist(4).unwrap().len(), 6);
        assert_eq!(half_twist(1).unwrap_err(), BraidError::BadStrandCount(1));
    }

    #[test]
    fn half_twist_conjugation_flips_generators() {
        for n in 2..=6 {
            let d = half_twist(n).unwrap();
            for i in 1..n {
                let lhs = d.compose(&word(n, &[i as i32])).unwrap();
                let rhs = word(n, &[(n - i) as i32]).compose(&d).unwrap();
                assert!(braids_equal(&lhs, &rhs).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn normal_form_of_identity_and_delta_powers() {
        let id = BraidWord::identity(3).unwrap();
        let nf = id.normal_form();
        assert_eq!(nf.inf(), 0);
        assert!(nf.factors().is_empty());

        let sq = word(2, &[1, 1]);
        let nf = sq.normal_form();
        assert_eq!(nf.inf(), 2);
        assert!(nf.factors().is_empty());

        let d3 = half_twist(3).unwrap();
        let nf = d3.power(2).normal_form();
        assert_eq!(nf.inf(), 2);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn braid_relation_gives_identical_forms() {
        let lhs = word(3, &[1, 2, 1]);
        let rhs = word(3, &[2, 1, 2]);
        assert_eq!(lhs.normal_form(), rhs.normal_form());
    }

    #[test]
    fn far_generators_commute() {
        let lhs = word(4, &[1, 3]);
        let rhs = word(4, &[3, 1]);
        assert!(braids_equal(&lhs, &rhs).unwrap());
        assert!(!braids_equal(&word(3, &[1]), &word(3, &[2])).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        let u = word(3, &[1]);
        let v = word(4, &[1]);
        assert_eq!(braids_equal(&u, &v).unwrap_err(), BraidError::StrandMismatch(3, 4));
        assert!(u.compose(&v).is_err());
    }

    #[test]
    fn exponent_sum_counts_signs() {
        assert_eq!(word(3, &[1, 2, 1]).exponent_sum(), 3);
        assert_eq!(word(3, &[1, -2]).exponent_sum(), 0);
        assert_eq!(word(2, &[-1, -1, -1]).exponent_sum(), -3);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w = BraidWord::parse("B3: 1 -2 1").unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[1, -2, 1]);
        assert_eq!(BraidWord::parse(&w.to_string()).unwrap(), w);

        let inferred = BraidWord::parse("1 -3 2").unwrap();
        assert_eq!(inferred.strands(), 4);

        assert!(BraidWord::parse("B3: 0").is_err());
        assert!(BraidWord::parse("B3: 3").is_err());
        assert!(BraidWord::parse("Bx: 1").is_err());
        assert!(BraidWord::parse("B2:").unwrap().is_empty());
    }

    #[test]
    fn permutation_word_round_trip() {
        for n in 2..=6usize {
            let d = Permutation::delta(n);
            let w = d.positive_word();
            assert_eq!(w.len(), n * (n - 1) / 2);
            let mut acc = Permutation::identity(n);
            for l in &w {
                acc = acc.then(&Permutation::transposition(n, *l as usize));
            }
            assert_eq!(acc, d);
        }
    }

    #[test]
    fn normal_form_factors_are_valid() {
        let samples = [
            word(3, &[1, -2, 1, 1, -2]),
            word(4, &[3, -1, 2, -3, 2, 1, 1]),
            word(5, &[4, 3, -2, 1, -4, 2, 2, -3]),
        ];
        for w in &samples {
            let nf = w.normal_form();
            let delta = Permutation::delta(w.strands());
            for f in nf.factors() {
                assert!(!f.is_identity());
                assert_ne!(*f, delta);
            }
            for pair in nf.factors().windows(2) {
                let movable = pair[1].starting_mask() & !pair[0].finishing_mask();
                assert_eq!(movable, 0, "pair not left-weighted in {w}");
            }
        }
    }

    #[test]
    fn normal_form_round_trips_through_rendering() {
        let samples = [
            word(2, &[1, 1, 1, -1]),
            word(3, &[1, -2, 1, 1, -2]),
            word(4, &[3, -1, 2, -3, 2, 1, 1]),
            word(4, &[-1, -1, -2, -3]),
        ];
        for w in &samples {
            let nf = w.normal_form();
            let rendered = nf.to_word();
            assert_eq!(rendered.normal_form(), nf, "render/renormalize mismatch for {w}");
            assert_eq!(rendered.exponent_sum(), w.exponent_sum());
        }
    }

    #[test]
    fn long_positive_power_normalizes_fast() {
        let w = word(2, &[1]).power(45047);
        let nf = w.normal_form();
        assert_eq!(nf.inf(), 45047);
        assert!(nf.factors().is_empty());
    }

    proptest! {
        #[test]
        fn equality_is_a_congruence(
            seed_u in proptest::collection::vec(-3i32..=3, 0..8),
            seed_v in proptest::collection::vec(-3i32..=3, 0..8),
            seed_w in proptest::collection::vec(-3i32..=3, 0..6),
        ) {
            let clean = |v: &[i32]| -> Vec<i32> { v.iter().copied().filter(|l| *l != 0).collect() };
            let u = word(4, &clean(&seed_u));
            let v = word(4, &clean(&seed_v));
            let w = word(4, &clean(&seed_w));
            if braids_equal(&u, &v).unwrap() {
                prop_assert!(braids_equal(&u.compose(&w).unwrap(), &v.compose(&w).unwrap()).unwrap());
                prop_assert!(braids_equal(&w.compose(&u).unwrap(), &w.compose(&v).unwrap()).unwrap());
            }
        }

        #[test]
        fn full_twist_is_central(
            seed in proptest::collection::vec(-4i32..=4, 0..12),
            n in 2usize..=5,
        ) {
            let letters: Vec<i32> = seed.into_iter()
                .filter(|l| *l != 0 && (l.unsigned_abs() as usize) < n)
                .collect();
            let w = word(n, &letters);
            let full = half_twist(n).unwrap().power(2);
            let lhs = w.compose(&full).unwrap();
            let rhs = full.compose(&w).unwrap();
            prop_assert!(braids_equal(&lhs, &rhs).unwrap());
        }

        #[test]
        fn inverse_cancels_in_normal_form(
            seed in proptest::collection::vec(-3i32..=3, 0..10),
        ) {
            let letters: Vec<i32> = seed.into_iter().filter(|l| *l != 0).collect();
            let w = word(4, &letters);
            let prod = w.compose(&w.inverse()).unwrap();
            let nf = prod.normal_form();
            prop_assert_eq!(nf.inf(), 0);
            prop_assert!(nf.factors().is_empty());
        }
    }
}
