//! Vertex sets over a fixed universe 0..n, packed into u64 words.
//!
//! Every set remembers its universe size; bits at positions >= n are kept
//! zero at all times, so derived `Eq`/`Hash` compare set contents directly.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: vec![0; word_count(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet { n, words: vec![!0u64; word_count(n)] };
        s.mask_tail();
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_vertices(n: usize, vs: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    /// Zero out the padding bits above `n` in the last word.
    fn mask_tail(&mut self) {
        let bits = self.n % WORD_BITS;
        if bits != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << bits) - 1;
            }
        }
        if self.n == 0 {
            self.words.clear();
        }
    }

    /// Size of the universe this set lives in (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, word_idx: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending member sequence, so
    /// {0,5} < {1,2} and {1} < {1,3}. Used to break ties deterministically.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        s.insert(63);
        s.insert(64);
        assert_eq!(s.len(), 4);
        assert!(s.contains(69) && s.contains(63) && s.contains(64));
        s.remove(63);
        assert!(!s.contains(63));
        assert_eq!(s.to_vec(), vec![0, 64, 69]);
    }

    #[test]
    fn complement_keeps_padding_zero() {
        let s = VertexSet::from_vertices(67, &[1, 2, 66]);
        let c = s.complement();
        assert_eq!(c.len(), 67 - 3);
        assert_eq!(c.complement(), s);
        // double complement equality relies on zero padding bits
        assert_eq!(VertexSet::full(67).complement(), VertexSet::empty(67));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(10, &[1, 3, 5]);
        let b = VertexSet::from_vertices(10, &[3, 5, 7]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 5, 7]);
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert!(a.intersects(&b));
        assert_eq!(a.intersection_len(&b), 2);
        assert!(VertexSet::from_vertices(10, &[3]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }

    #[test]
    fn lex_order_on_member_sequences() {
        let n = 8;
        let s = |vs: &[usize]| VertexSet::from_vertices(n, vs);
        assert_eq!(s(&[0, 5]).lex_cmp(&s(&[1, 2])), Ordering::Less);
        assert_eq!(s(&[1]).lex_cmp(&s(&[1, 3])), Ordering::Less);
        assert_eq!(s(&[1, 3]).lex_cmp(&s(&[1, 2])), Ordering::Greater);
        assert_eq!(s(&[2, 4]).lex_cmp(&s(&[2, 4])), Ordering::Equal);
    }

    #[test]
    fn empty_universe() {
        let s = VertexSet::empty(0);
        assert_eq!(s.len(), 0);
        assert_eq!(s.complement(), s);
        assert_eq!(s.iter().next(), None);
    }
}
