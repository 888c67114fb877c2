//! Subsets of the state set of an automaton.
//!
//! A [`StateSet`] is a bit vector bound to a universe size `n`. Universes of
//! up to 64 states are stored inline in a single machine word; larger ones
//! fall back to a boxed slice of words. Both layouts share one code path
//! through [`StateSet::words`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Bits {
    Word(u64),
    Words(Box<[u64]>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    n: usize,
    bits: Bits,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

fn tail_mask(n: usize) -> u64 {
    match n % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        let bits = if n <= WORD_BITS {
            Bits::Word(0)
        } else {
            Bits::Words(vec![0; word_count(n)].into_boxed_slice())
        };
        StateSet { n, bits }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        let count = word_count(n);
        for (i, w) in s.words_mut().iter_mut().enumerate() {
            *w = if i + 1 == count {
                tail_mask(n)
            } else {
                u64::MAX
            };
        }
        s
    }

    pub fn singleton(n: usize, q: usize) -> Result<Self> {
        Self::from_states(n, [q])
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(n: usize, states: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for q in states {
            if q >= n {
                return Err(Error::StateOutOfRange { state: q, n });
            }
            s.insert(q);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of `mask`; `n` must be at most 64.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > WORD_BITS {
            return Err(Error::Input(format!(
                "mask constructor needs n <= 64, got {n}"
            )));
        }
        if mask & !tail_mask(n) != 0 && n < WORD_BITS {
            return Err(Error::StateOutOfRange {
                state: WORD_BITS - 1 - mask.leading_zeros() as usize,
                n,
            });
        }
        Ok(StateSet {
            n,
            bits: Bits::Word(mask),
        })
    }

    /// The single-word representation, when the universe fits in one.
    pub fn as_mask(&self) -> Option<u64> {
        match self.bits {
            Bits::Word(w) => Some(w),
            Bits::Words(_) => None,
        }
    }

    pub fn words(&self) -> &[u64] {
        match &self.bits {
            Bits::Word(w) => std::slice::from_ref(w),
            Bits::Words(v) => v,
        }
    }

    fn words_mut(&mut self) -> &mut [u64] {
        match &mut self.bits {
            Bits::Word(w) => std::slice::from_mut(w),
            Bits::Words(v) => v,
        }
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words().iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words().iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n && self.words()[q / WORD_BITS] & (1 << (q % WORD_BITS)) != 0
    }

    /// # Panics
    ///
    /// Panics if `q` is outside the universe.
    pub fn insert(&mut self, q: usize) {
        assert!(q < self.n, "state {q} outside universe of {}", self.n);
        self.words_mut()[q / WORD_BITS] |= 1 << (q % WORD_BITS);
    }

    pub fn remove(&mut self, q: usize) {
        if q < self.n {
            self.words_mut()[q / WORD_BITS] &= !(1 << (q % WORD_BITS));
        }
    }

    /// Flips membership of `q`.
    pub fn toggle(&mut self, q: usize) {
        assert!(q < self.n, "state {q} outside universe of {}", self.n);
        self.words_mut()[q / WORD_BITS] ^= 1 << (q % WORD_BITS);
    }

    pub fn iter(&self) -> Iter<'_> {
        let words = self.words();
        Iter {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "state sets over different universes");
        let mut out = self.clone();
        for (a, b) in out.words_mut().iter_mut().zip(other.words()) {
            *a = f(*a, *b);
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        assert_eq!(self.n, other.n, "state sets over different universes");
        self.words()
            .iter()
            .zip(other.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .words()
                .iter()
                .zip(other.words())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "state sets over different universes");
        for (a, b) in self.words_mut().iter_mut().zip(other.words()) {
            *a |= *b;
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
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
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a StateSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Lexicographic order on the ascending member lists, so `{0,3} < {1}` and
/// `{0} < {0,1}`.
impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateSet({}/{})", self, self.n)
    }
}
