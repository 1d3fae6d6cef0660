//! Equality oracle for the three-strand braid group built from raw
//! relation rewriting.
//!
//! Every word over `s1, s2, s1^-1, s2^-1` up to a cap is a node; two
//! nodes are joined whenever one is obtained from the other by deleting
//! an adjacent inverse pair or by rewriting a braid-relation triple
//! (`aba -> bab` with both letters of the same sign).  The connected
//! components of that graph — computed by plain union-find, no braid
//! theory involved — are exactly the equality classes of braids, as far
//! as the cap allows.  Raising the cap can only merge classes; the
//! suites check that the partition on short words has stabilised before
//! trusting it.

/// Number of words over a 4-letter alphabet of length strictly less
/// than `len` (the rank of the first word of length `len`).
fn offset(len: usize) -> usize {
    ((1usize << (2 * len)) - 1) / 3
}

fn digit_of(letter: i32) -> usize {
    match letter {
        1 => 0,
        2 => 1,
        -1 => 2,
        -2 => 3,
        _ => panic!("letter {letter} is not a generator of the 3-strand group"),
    }
}

fn letter_of(digit: usize) -> i32 {
    [1, 2, -1, -2][digit]
}

fn rank(word: &[i32]) -> usize {
    let mut value = 0usize;
    for &l in word {
        value = value * 4 + digit_of(l);
    }
    offset(word.len()) + value
}

fn unrank(mut id: usize, cap: usize) -> Vec<i32> {
    let mut len = 0;
    while len <= cap && id >= offset(len + 1) {
        len += 1;
    }
    id -= offset(len);
    let mut word = vec![0i32; len];
    for slot in word.iter_mut().rev() {
        *slot = letter_of(id % 4);
        id /= 4;
    }
    word
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn unite(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Partition of all 3-strand braid words up to a length cap into
/// equality classes.
pub struct B3Partition {
    cap: usize,
    classes: Vec<u32>,
}

impl B3Partition {
    /// Builds the partition of all words of length at most
    /// `maxlen + pad`.  Only words of length at most `maxlen` should be
    /// queried afterwards; the pad gives rewriting sequences room to
    /// pass through longer intermediate words.
    pub fn new(maxlen: usize, pad: usize) -> Self {
        let cap = maxlen + pad;
        assert!(cap <= 12, "cap {cap} would need too much memory");
        let total = offset(cap + 1);
        let mut uf = UnionFind::new(total);
        let mut word = Vec::with_capacity(cap);
        let mut scratch = Vec::with_capacity(cap);
        for id in 0..total {
            word.clear();
            word.extend_from_slice(&unrank(id, cap));
            // Deleting an adjacent inverse pair.
            for p in 0..word.len().saturating_sub(1) {
                if word[p] == -word[p + 1] {
                    scratch.clear();
                    scratch.extend_from_slice(&word[..p]);
                    scratch.extend_from_slice(&word[p + 2..]);
                    uf.unite(id as u32, rank(&scratch) as u32);
                }
            }
            // Rewriting a braid-relation triple.
            for p in 0..word.len().saturating_sub(2) {
                let (a, b) = (word[p], word[p + 1]);
                if word[p + 2] == a && a != b && (a > 0) == (b > 0) {
                    scratch.clear();
                    scratch.extend_from_slice(&word);
                    scratch[p] = b;
                    scratch[p + 1] = a;
                    scratch[p + 2] = b;
                    uf.unite(id as u32, rank(&scratch) as u32);
                }
            }
        }
        let classes = (0..total as u32).map(|id| uf.find(id)).collect();
        B3Partition { cap, classes }
    }

    /// The length cap this partition was built with (`maxlen + pad`).
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Canonical class id of a word.
    pub fn class_of(&self, word: &[i32]) -> u32 {
        assert!(
            word.len() <= self.cap,
            "word of length {} exceeds the cap {}",
            word.len(),
            self.cap
        );
        self.classes[rank(word)]
    }

    /// True when the two words represent the same braid (within the cap).
    pub fn equal(&self, u: &[i32], v: &[i32]) -> bool {
        self.class_of(u) == self.class_of(v)
    }
}

/// All 3-strand words of length at most `maxlen`, shortest first.
pub fn all_words(maxlen: usize) -> Vec<Vec<i32>> {
    (0..offset(maxlen + 1))
        .map(|id| unrank(id, maxlen))
        .collect()
}

/// True when two partitions induce the same equivalence on words of
/// length at most `maxlen`.  Used to confirm that growing the pad no
/// longer merges any classes.
pub fn partitions_agree(p1: &B3Partition, p2: &B3Partition, maxlen: usize) -> bool {
    use std::collections::HashMap;
    let mut forward: HashMap<u32, u32> = HashMap::new();
    let mut backward: HashMap<u32, u32> = HashMap::new();
    for word in all_words(maxlen) {
        let c1 = p1.class_of(&word);
        let c2 = p2.class_of(&word);
        if *forward.entry(c1).or_insert(c2) != c2 {
            return false;
        }
        if *backward.entry(c2).or_insert(c1) != c1 {
            return false;
        }
    }
    true
}
