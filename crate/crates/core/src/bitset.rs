//! Fixed-width vertex sets.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of vertices a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices drawn from `0..128`, stored as a single `u128` word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u128 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    /// Smallest element.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest element.
    #[inline]
    pub fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// Shift every element up by `k`.
    #[inline]
    pub fn shifted(self, k: usize) -> Self {
        debug_assert!(self.0 == 0 || self.last().unwrap() + k < MAX_VERTICES);
        if self.0 == 0 {
            self
        } else {
            VertexSet(self.0 << k)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order by the sorted vertex lists, lexicographically. Sets of equal size
    /// compare the way their ascending vertex sequences do.
    #[inline]
    pub fn cmp_lex(self, o: Self) -> Ordering {
        let diff = self.0 ^ o.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            // self has the smaller first differing element, unless o is a
            // prefix of self (cannot happen when the lowest differing bit is
            // in self and o has elements above it)
            if o.0 & !(low.wrapping_sub(1)) == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & !(low.wrapping_sub(1)) == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Keep only the elements of `self` that lie in `keep`, renumbered
    /// order-preservingly by their rank inside `keep`.
    pub fn compress(self, keep: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for (i, v) in keep.iter().enumerate() {
            if self.contains(v) {
                out.insert(i);
            }
        }
        out
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_matches_sorted_lists() {
        let sets: Vec<VertexSet> = (0u128..64).map(VertexSet).collect();
        for &a in &sets {
            for &b in &sets {
                assert_eq!(a.cmp_lex(b), a.to_vec().cmp(&b.to_vec()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn compress_renumbers() {
        let s = VertexSet::from_iter([1, 4, 6]);
        let keep = VertexSet::from_iter([1, 2, 6, 7]);
        assert_eq!(s.compress(keep).to_vec(), vec![0, 2]);
    }
}
