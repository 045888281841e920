//! Fixed-width bitsets over the interned positive roots.

use std::fmt;

/// Maximal number of positive roots a [`RootSet`] can index (`E8` has 120).
pub const MAX_ROOTS: usize = 128;

/// A set of positive-root indices packed into one `u128`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    /// The set `{0, 1, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ROOTS);
        if n == MAX_ROOTS {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        RootSet(1u128 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        assert_eq!(RootSet::full(0), RootSet::EMPTY);
        assert_eq!(RootSet::full(128).len(), 128);
        let s: RootSet = [3, 0, 127].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 127]);
        assert!(s.contains(127) && !s.contains(1));
    }

    #[test]
    fn set_algebra() {
        let a: RootSet = [1, 2, 3].into_iter().collect();
        let b: RootSet = [3, 4].into_iter().collect();
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.intersection(b), RootSet::singleton(3));
        assert_eq!(a.difference(b).len(), 2);
        assert!(RootSet::singleton(3).is_subset(a));
    }
}
