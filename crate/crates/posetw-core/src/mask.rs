//! Subsets of `[n] = {1, ..., n}` packed into machine words.
//!
//! Bit `i - 1` of the word is set exactly when element `i` is in the set,
//! so the word value of a mask is its rank in the binary order and a
//! subset relation is a bitwise test.

use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// One subset of `[n]` for a fixed ground size `1 <= n <= 32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u32,
    n: u8,
}

impl SubsetMask {
    /// Wraps a raw bit word, rejecting bits at position `>= n`.
    pub fn new(bits: u32, n: u32) -> Result<Self> {
        check_ground(n)?;
        if bits & !full_bits(n) != 0 {
            return Err(Error::BitsOutOfRange { bits, n });
        }
        Ok(SubsetMask { bits, n: n as u8 })
    }

    pub fn empty(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(SubsetMask { bits: 0, n: n as u8 })
    }

    /// The full ground set `[n]`.
    pub fn full(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(SubsetMask { bits: full_bits(n), n: n as u8 })
    }

    /// Builds a mask from 1-based elements.
    pub fn from_elements(elements: &[u32], n: u32) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u32;
        for &e in elements {
            if e < 1 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask { bits, n: n as u8 })
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn ground_size(self) -> u32 {
        self.n as u32
    }

    #[inline]
    pub fn cardinality(self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Membership of the 1-based element `e`.
    #[inline]
    pub fn contains(self, e: u32) -> bool {
        e >= 1 && e <= self.n as u32 && self.bits >> (e - 1) & 1 == 1
    }

    /// A copy with element `e` added.
    pub fn with(self, e: u32) -> Result<Self> {
        if e < 1 || e > self.n as u32 {
            return Err(Error::ElementOutOfRange { element: e, n: self.n as u32 });
        }
        Ok(SubsetMask { bits: self.bits | 1 << (e - 1), n: self.n })
    }

    /// A copy with element `e` removed.
    pub fn without(self, e: u32) -> Result<Self> {
        if e < 1 || e > self.n as u32 {
            return Err(Error::ElementOutOfRange { element: e, n: self.n as u32 });
        }
        Ok(SubsetMask { bits: self.bits & !(1 << (e - 1)), n: self.n })
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let mut bits = self.bits;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.bits & other.bits == self.bits
    }

    #[inline]
    pub fn is_strict_subset_of(self, other: SubsetMask) -> bool {
        self.bits != other.bits && self.is_subset_of(other)
    }

    pub fn complement(self) -> SubsetMask {
        SubsetMask { bits: !self.bits & full_bits(self.n as u32), n: self.n }
    }

    pub fn symmetric_difference(self, other: SubsetMask) -> Result<SubsetMask> {
        if self.n != other.n {
            return Err(Error::MismatchedGround(self.n as u32, other.n as u32));
        }
        Ok(SubsetMask { bits: self.bits ^ other.bits, n: self.n })
    }

    /// Parses either the braced element list (`{1,3}`, `{}`) or a hex word
    /// (`0x5`).
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        let text = text.trim();
        if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            let bits = u32::from_str_radix(hex, 16).map_err(|_| Error::ParseSet)?;
            return SubsetMask::new(bits, n);
        }
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or(Error::ParseSet)?;
        let mut elements = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let e = u32::from_str(part).map_err(|_| Error::ParseSet)?;
            elements.push(e);
        }
        SubsetMask::from_elements(&elements, n)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[inline]
pub(crate) fn full_bits(n: u32) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn check_ground(n: u32) -> Result<()> {
    if (1..=32).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSize(n))
    }
}

/// An ordered sub-universe of `[n]`: the strictly increasing elements of a
/// subset of `[32]` acting as a ground set in their inherited order.
///
/// Restriction and embedding are monotone on positions, so colex and
/// level-colex structure transfers verbatim between a ground order and the
/// packed `[k]` it is isomorphic to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundOrder {
    elements: Vec<u32>,
}

impl GroundOrder {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.is_empty() || *elements.last().unwrap() > 32 {
            return Err(Error::GroundSize(elements.last().copied().unwrap_or(0)));
        }
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::GroundSize(w[1]));
            }
        }
        if elements[0] < 1 {
            return Err(Error::ElementOutOfRange { element: elements[0], n: 32 });
        }
        Ok(GroundOrder { elements })
    }

    /// The ground order `[n] - {i}`.
    pub fn without(n: u32, i: u32) -> Result<Self> {
        check_ground(n)?;
        if i < 1 || i > n {
            return Err(Error::ElementOutOfRange { element: i, n });
        }
        Ok(GroundOrder { elements: (1..=n).filter(|&e| e != i).collect() })
    }

    pub fn len(&self) -> u32 {
        self.elements.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// Maps a packed mask over `[len]` to raw bits over the original
    /// universe.
    pub fn embed_bits(&self, local: u32) -> u32 {
        let mut bits = 0;
        for (j, &e) in self.elements.iter().enumerate() {
            if local >> j & 1 == 1 {
                bits |= 1 << (e - 1);
            }
        }
        bits
    }

    /// Maps raw bits (supported on this ground order) to a packed mask
    /// over `[len]`.
    pub fn restrict_bits(&self, global: u32) -> u32 {
        let mut local = 0;
        for (j, &e) in self.elements.iter().enumerate() {
            if global >> (e - 1) & 1 == 1 {
                local |= 1 << j;
            }
        }
        local
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn construction_and_accessors() {
        let a = SubsetMask::from_elements(&[1, 3], 4).unwrap();
        assert_eq!(a.bits(), 0b101);
        assert_eq!(a.cardinality(), 2);
        assert!(a.contains(1) && !a.contains(2) && a.contains(3));
        assert_eq!(a.elements().collect::<Vec<_>>(), [1, 3]);
        assert_eq!(a.complement().elements().collect::<Vec<_>>(), [2, 4]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(SubsetMask::new(0b100, 2), Err(Error::BitsOutOfRange { bits: 4, n: 2 }));
        assert_eq!(SubsetMask::empty(0), Err(Error::GroundSize(0)));
        assert_eq!(SubsetMask::empty(33), Err(Error::GroundSize(33)));
        assert!(SubsetMask::from_elements(&[3], 2).is_err());
    }

    #[test]
    fn n_32_boundary() {
        let full = SubsetMask::full(32).unwrap();
        assert_eq!(full.bits(), u32::MAX);
        assert_eq!(full.cardinality(), 32);
        assert!(full.complement().is_empty());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for text in ["{}", "{1}", "{1,3}", "{2,3,4}"] {
            let m = SubsetMask::parse(text, 4).unwrap();
            assert_eq!(m.to_string(), text);
        }
        assert_eq!(SubsetMask::parse("0x5", 4).unwrap().to_string(), "{1,3}");
        assert!(SubsetMask::parse("1,3", 4).is_err());
        assert!(SubsetMask::parse("{5}", 4).is_err());
    }

    #[test]
    fn ground_order_restrict_embed() {
        let g = GroundOrder::without(4, 2).unwrap();
        assert_eq!(g.elements(), [1, 3, 4]);
        // {3,4} over [4] packs to {2,3} over [3] and back.
        let global = SubsetMask::from_elements(&[3, 4], 4).unwrap().bits();
        let local = g.restrict_bits(global);
        assert_eq!(local, 0b110);
        assert_eq!(g.embed_bits(local), global);
    }
}
