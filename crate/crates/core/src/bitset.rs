//! Fixed-capacity bit sets used for vertex sets and edge sets.

use std::fmt;

/// Number of 64-bit words in a [`Bits`].
pub const WORDS: usize = 4;
/// Largest index a [`Bits`] can hold, plus one.
pub const CAPACITY: usize = WORDS * 64;

/// A set of small integers backed by a fixed array of words.
///
/// Copyable and hashable so it can serve directly as a memo key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bits(pub [u64; WORDS]);

impl Bits {
    pub const EMPTY: Bits = Bits([0; WORDS]);

    #[inline]
    pub fn new() -> Self {
        Self::EMPTY
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "bit set capacity exceeded");
        let mut b = Bits::EMPTY;
        for (w, word) in b.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        b
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        let mut b = Bits::EMPTY;
        b.insert(i);
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < CAPACITY);
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < CAPACITY && self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, o: &Bits) -> Bits {
        let mut r = *self;
        for i in 0..WORDS {
            r.0[i] |= o.0[i];
        }
        r
    }

    #[inline]
    pub fn intersection(&self, o: &Bits) -> Bits {
        let mut r = *self;
        for i in 0..WORDS {
            r.0[i] &= o.0[i];
        }
        r
    }

    #[inline]
    pub fn difference(&self, o: &Bits) -> Bits {
        let mut r = *self;
        for i in 0..WORDS {
            r.0[i] &= !o.0[i];
        }
        r
    }

    #[inline]
    pub fn intersects(&self, o: &Bits) -> bool {
        (0..WORDS).any(|i| self.0[i] & o.0[i] != 0)
    }

    #[inline]
    pub fn is_subset(&self, o: &Bits) -> bool {
        (0..WORDS).all(|i| self.0[i] & !o.0[i] == 0)
    }

    /// Smallest member.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (w, &word) in self.0.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> BitsIter {
        BitsIter { bits: *self, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct BitsIter {
    bits: Bits,
    word: usize,
}

impl Iterator for BitsIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.bits.0[self.word];
            if w != 0 {
                let t = w.trailing_zeros() as usize;
                self.bits.0[self.word] &= w - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
        }
        None
    }
}

impl std::ops::BitOr for Bits {
    type Output = Bits;
    fn bitor(self, o: Bits) -> Bits {
        self.union(&o)
    }
}

impl std::ops::BitAnd for Bits {
    type Output = Bits;
    fn bitand(self, o: Bits) -> Bits {
        self.intersection(&o)
    }
}

impl std::ops::Sub for Bits {
    type Output = Bits;
    fn sub(self, o: Bits) -> Bits {
        self.difference(&o)
    }
}

impl std::ops::BitOrAssign for Bits {
    fn bitor_assign(&mut self, o: Bits) {
        *self = self.union(&o);
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut b = Bits::EMPTY;
        for i in it {
            b.insert(i);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Bits::from_iter([1, 5, 70, 200]);
        assert_eq!(a.len(), 4);
        assert!(a.contains(70) && !a.contains(71));
        assert_eq!(a.to_vec(), vec![1, 5, 70, 200]);
        let b = Bits::from_iter([5, 200]);
        assert!(b.is_subset(&a));
        assert_eq!((a - b).to_vec(), vec![1, 70]);
        assert_eq!(a.first(), Some(1));
        assert_eq!(Bits::full(65).len(), 65);
        assert_eq!(Bits::full(256).len(), 256);
        assert!(Bits::EMPTY.first().is_none());
    }
}
