//! Fixed-capacity element sets.
//!
//! Every subset of a ground set is a 256-bit bitset. Rank memo tables and flat
//! lattices key on these directly, so the type is `Copy` and hashes cheaply.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 4;

/// Largest element identifier plus one.
pub const CAPACITY: usize = WORDS * 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet {
    words: [u64; WORDS],
}

impl ElemSet {
    pub const fn new() -> Self {
        ElemSet { words: [0; WORDS] }
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = Self::new();
        s.insert(e);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= CAPACITY, "element set capacity is {CAPACITY}");
        let mut s = Self::new();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        assert!(e < CAPACITY, "element {e} exceeds set capacity {CAPACITY}");
        self.words[e >> 6] |= 1u64 << (e & 63);
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        if e < CAPACITY {
            self.words[e >> 6] &= !(1u64 << (e & 63));
        }
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e < CAPACITY && self.words[e >> 6] & (1u64 << (e & 63)) != 0
    }

    #[inline]
    pub fn with(mut self, e: usize) -> Self {
        self.insert(e);
        self
    }

    #[inline]
    pub fn without(mut self, e: usize) -> Self {
        self.remove(e);
        self
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
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest identifier not in the set.
    pub fn first_absent(&self) -> usize {
        for (i, w) in self.words.iter().enumerate() {
            if *w != u64::MAX {
                return i * 64 + (!w).trailing_zeros() as usize;
            }
        }
        CAPACITY
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for ElemSet {
            type Output = ElemSet;
            #[inline]
            fn $f(self, rhs: ElemSet) -> ElemSet {
                let mut words = [0u64; WORDS];
                for (i, w) in words.iter_mut().enumerate() {
                    *w = self.words[i] $op rhs.words[i];
                }
                ElemSet { words }
            }
        }
    };
}

bitop!(BitOr, bitor, |);
bitop!(BitAnd, bitand, &);
bitop!(BitXor, bitxor, ^);

impl Sub for ElemSet {
    type Output = ElemSet;
    #[inline]
    fn sub(self, rhs: ElemSet) -> ElemSet {
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words[i] & !rhs.words[i];
        }
        ElemSet { words }
    }
}

/// Lexicographic order of the sorted element sequences, so `{0, 5} < {1}`
/// and a proper prefix sorts first.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = *self ^ *other;
        let Some(i) = diff.first() else {
            return Ordering::Equal;
        };
        let self_has = self.contains(i);
        let lacking = if self_has { other } else { self };
        // The set lacking i either continues past i (and is larger at this
        // position) or stops there (and is a proper prefix).
        let lacking_continues = lacking.has_above(i);
        match (self_has, lacking_continues) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl ElemSet {
    fn has_above(&self, i: usize) -> bool {
        let w = i >> 6;
        let bit = i & 63;
        let mask = if bit == 63 { 0 } else { u64::MAX << (bit + 1) };
        self.words[w] & mask != 0 || self.words[w + 1..].iter().any(|&x| x != 0)
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(deserializer)?;
        if let Some(&bad) = v.iter().find(|&&e| e >= CAPACITY) {
            return Err(serde::de::Error::custom(format!(
                "element {bad} exceeds capacity {CAPACITY}"
            )));
        }
        Ok(v.into_iter().collect())
    }
}
