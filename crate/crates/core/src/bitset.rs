//! Fixed-capacity vertex sets.
//!
//! Every graph in this crate has at most [`CAPACITY`] vertices, so a vertex
//! set is a plain array of machine words that lives on the stack and is
//! `Copy`. The owning graph's vertex count is not stored; callers keep bits
//! at positions `>= n` clear.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 6;
const WORD_BITS: usize = u64::BITS as usize;

/// Maximum number of vertices of any graph (including products).
pub const CAPACITY: usize = WORDS * WORD_BITS;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "vertex count {n} exceeds capacity {CAPACITY}");
        let mut s = Self::new();
        let (whole, rest) = (n / WORD_BITS, n % WORD_BITS);
        for w in s.words.iter_mut().take(whole) {
            *w = u64::MAX;
        }
        if rest != 0 {
            s.words[whole] = (1u64 << rest) - 1;
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < CAPACITY && self.words[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    /// Smallest member that is `>= from`.
    pub fn next_from(&self, from: usize) -> Option<usize> {
        if from >= CAPACITY {
            return None;
        }
        let mut wi = from / WORD_BITS;
        let mut w = self.words[wi] & (u64::MAX << (from % WORD_BITS));
        loop {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == WORDS {
                return None;
            }
            w = self.words[wi];
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.words, index: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets as sorted vertex lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = &mut self.words[self.index];
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
        }
        None
    }
}

macro_rules! bitwise {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for VertexSet {
            type Output = VertexSet;

            #[inline]
            fn $method(mut self, rhs: VertexSet) -> VertexSet {
                self.$assign_method(rhs);
                self
            }
        }

        impl $assign_trait for VertexSet {
            #[inline]
            fn $assign_method(&mut self, rhs: VertexSet) {
                for ($a, $b) in self.words.iter_mut().zip(rhs.words) {
                    *$a = $body;
                }
            }
        }
    };
}

bitwise!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| *a | b);
bitwise!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| *a & b);
bitwise!(Sub, sub, SubAssign, sub_assign, |a, b| *a & !b);

/// Complement over the whole capacity; mask with [`VertexSet::full`] when
/// the result must stay inside a graph.
impl Not for VertexSet {
    type Output = VertexSet;

    #[inline]
    fn not(mut self) -> VertexSet {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= CAPACITY) {
            return Err(serde::de::Error::custom(format!("vertex {bad} exceeds capacity {CAPACITY}")));
        }
        Ok(ids.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_sets_exact_prefix() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).last(), Some(64));
        assert_eq!(VertexSet::full(CAPACITY).len(), CAPACITY);
    }

    #[test]
    fn next_from_crosses_words() {
        let s: VertexSet = [3, 70, 200].into_iter().collect();
        assert_eq!(s.next_from(0), Some(3));
        assert_eq!(s.next_from(4), Some(70));
        assert_eq!(s.next_from(71), Some(200));
        assert_eq!(s.next_from(201), None);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(200));
    }

    #[test]
    fn lex_order_is_sorted_list_order() {
        let a: VertexSet = [0, 1, 5].into_iter().collect();
        let b: VertexSet = [0, 2, 3].into_iter().collect();
        let c: VertexSet = [1].into_iter().collect();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&c), Ordering::Less);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            xs in proptest::collection::btree_set(0usize..CAPACITY, 0..40),
            ys in proptest::collection::btree_set(0usize..CAPACITY, 0..40),
        ) {
            let a: VertexSet = xs.iter().copied().collect();
            let b: VertexSet = ys.iter().copied().collect();
            prop_assert_eq!((a | b).to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!((a & b).to_vec(), xs.intersection(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!((a - b).to_vec(), xs.difference(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.len(), xs.len());
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.lex_cmp(&b), xs.iter().cmp(ys.iter()));
        }
    }
}
