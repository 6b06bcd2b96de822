//! Fixed-width bitsets over the elements of a group.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of the elements `0..group_order` of some group.
///
/// Storage is canonical: bits past `group_order` are always zero, so two sets
/// over the same group compare equal exactly when they hold the same
/// elements. The derived `Ord` gives a deterministic order for
/// `BTreeSet<ElementSet>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    group_order: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(group_order: usize) -> Self {
        Self { group_order, words: vec![0; group_order.div_ceil(WORD_BITS)] }
    }

    pub fn full(group_order: usize) -> Self {
        let mut set = Self::empty(group_order);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(group_order: usize, x: usize) -> Self {
        let mut set = Self::empty(group_order);
        set.insert(x);
        set
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(group_order: usize, elems: I) -> Self {
        let mut set = Self::empty(group_order);
        for x in elems {
            set.insert(x);
        }
        set
    }

    fn trim(&mut self) {
        let rem = self.group_order % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Order of the ambient group.
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Panics if `x` is outside the ambient group.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.group_order, "element {x} out of range");
        let (w, b) = (x / WORD_BITS, x % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, x: usize) -> bool {
        if x >= self.group_order {
            return false;
        }
        let (w, b) = (x / WORD_BITS, x % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.group_order && self.words[x / WORD_BITS] >> (x % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.group_order
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.group_order, other.group_order);
        Self { group_order: self.group_order, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.group_order, other.group_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.group_order, other.group_order);
        Self { group_order: self.group_order, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.group_order, other.group_order);
        Self {
            group_order: self.group_order,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
