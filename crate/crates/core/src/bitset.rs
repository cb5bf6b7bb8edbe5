//! Fixed-width bitsets for the subset enumerator. Union is `|`, coverage is
//! popcount.

use std::ops::BitOr;

pub trait Block: Copy + Default + Send + Sync + BitOr<Output = Self> {
    /// Number of addressable bits.
    const BITS: usize;
    fn with_bit(self, bit: usize) -> Self;
    fn popcount(&self) -> u32;
}

impl Block for u64 {
    const BITS: usize = 64;
    #[inline]
    fn with_bit(self, bit: usize) -> Self {
        self | (1u64 << bit)
    }
    #[inline]
    fn popcount(&self) -> u32 {
        self.count_ones()
    }
}

impl Block for u128 {
    const BITS: usize = 128;
    #[inline]
    fn with_bit(self, bit: usize) -> Self {
        self | (1u128 << bit)
    }
    #[inline]
    fn popcount(&self) -> u32 {
        self.count_ones()
    }
}

/// `W` 64-bit words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wide<const W: usize>(pub [u64; W]);

impl<const W: usize> Default for Wide<W> {
    fn default() -> Self {
        Wide([0; W])
    }
}

impl<const W: usize> BitOr for Wide<W> {
    type Output = Self;
    #[inline]
    fn bitor(mut self, rhs: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a |= *b;
        }
        self
    }
}

impl<const W: usize> Block for Wide<W> {
    const BITS: usize = 64 * W;
    #[inline]
    fn with_bit(mut self, bit: usize) -> Self {
        self.0[bit / 64] |= 1u64 << (bit % 64);
        self
    }
    #[inline]
    fn popcount(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_union_and_count() {
        let a = Wide::<4>::default().with_bit(0).with_bit(200);
        let b = Wide::<4>::default().with_bit(200).with_bit(64);
        assert_eq!((a | b).popcount(), 3);
        assert_eq!(0u128.with_bit(127).with_bit(3).popcount(), 2);
    }
}
