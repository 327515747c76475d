//! Exhaustive streams of downsets and convex families for small `n`, and
//! seeded samplers for the ranges where exhaustion is out of reach.
//!
//! For `n <= 6` a family fits one `u64` bit per subset word, and a
//! downset is grown by scanning the words in binary order: a word may
//! join only once all its one-element deletions have. The DFS over these
//! include/exclude decisions yields every downset exactly once.

use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::family::SetFamily;

/// Largest `n` for which downsets are exhaustively enumerable here; the
/// count at 6 is 7,828,354.
pub const MAX_EXHAUSTIVE_DOWNSET_N: u32 = 6;

/// Largest `n` for which all families are filtered for convexity.
pub const MAX_EXHAUSTIVE_CONVEX_N: u32 = 4;

/// Streams every downset of `B(n)` exactly once, `n <= 6`, as family
/// bitmaps (bit `w` set iff the subset with word `w` is a member).
pub fn downset_bitmaps(n: u32) -> Result<DownsetBitmaps> {
    crate::mask::check_ground(n)?;
    if n > MAX_EXHAUSTIVE_DOWNSET_N {
        return Err(Error::EnumerationGuard { n, max: MAX_EXHAUSTIVE_DOWNSET_N });
    }
    Ok(DownsetBitmaps { size: 1u32 << n, stack: alloc::vec![(0, 0)] })
}

pub struct DownsetBitmaps {
    size: u32,
    /// Pending (next word to decide, family so far) branches.
    stack: Vec<(u32, u64)>,
}

impl Iterator for DownsetBitmaps {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let (mut idx, fam) = self.stack.pop()?;
        loop {
            if idx == self.size {
                return Some(fam);
            }
            if can_join(fam, idx) {
                // Defer the include branch, continue excluding.
                self.stack.push((idx + 1, fam | 1u64 << idx));
            }
            idx += 1;
        }
    }
}

/// A word may join a downset bitmap once every one-element deletion is in.
#[inline]
fn can_join(fam: u64, word: u32) -> bool {
    let mut rest = word;
    while rest != 0 {
        let low = rest & rest.wrapping_neg();
        if fam >> (word ^ low) & 1 == 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// Streams every downset of `B(n)` as a [`SetFamily`], `n <= 6`.
pub fn enumerate_downsets(n: u32) -> Result<impl Iterator<Item = SetFamily>> {
    let bitmaps = downset_bitmaps(n)?;
    Ok(bitmaps.map(move |bm| family_from_bitmap(n, bm)))
}

/// Streams every convex family of `B(n)` (including the empty one) by
/// filtering all families, `n <= 4`.
pub fn enumerate_convex(n: u32) -> Result<impl Iterator<Item = SetFamily>> {
    crate::mask::check_ground(n)?;
    if n > MAX_EXHAUSTIVE_CONVEX_N {
        return Err(Error::EnumerationGuard { n, max: MAX_EXHAUSTIVE_CONVEX_N });
    }
    let size = 1u32 << n;
    Ok((0..1u64 << size)
        .map(move |bm| family_from_bitmap(n, bm))
        .filter(|f| f.is_convex()))
}

pub fn family_from_bitmap(n: u32, bitmap: u64) -> SetFamily {
    debug_assert!(n <= 6);
    let bits: Vec<u32> = (0..1u32 << n).filter(|&w| bitmap >> w & 1 == 1).collect();
    SetFamily::from_sorted_bits(n, bits)
}

pub fn bitmap_from_family(f: &SetFamily) -> u64 {
    debug_assert!(f.ground_size() <= 6);
    f.bits().iter().fold(0u64, |bm, &w| bm | 1u64 << w)
}

fn rng_for(seed: u64, index: u64) -> rand_chacha::ChaCha8Rng {
    // One generator per sample index, so shard splits cannot change what
    // any sample looks like.
    rand_chacha::ChaCha8Rng::seed_from_u64(
        seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15),
    )
}

/// A pseudo-random family of `B(n)`, uniform over all `2^(2^n)` families;
/// needs `n <= 5` so the bitmap fits a draw.
pub fn sample_family(n: u32, seed: u64, index: u64) -> Result<SetFamily> {
    crate::mask::check_ground(n)?;
    if n > 5 {
        return Err(Error::EnumerationGuard { n, max: 5 });
    }
    let mut rng = rng_for(seed, index);
    let bitmap = rng.next_u64() & if n == 5 { u64::MAX >> 32 } else { (1u64 << (1 << n)) - 1 };
    Ok(family_from_bitmap(n, bitmap as u64))
}

/// A pseudo-random downset of `B(n)`: the closure of a few random
/// generators, sized to spread from empty to full.
pub fn sample_downset(n: u32, seed: u64, index: u64) -> Result<SetFamily> {
    crate::mask::check_ground(n)?;
    if n > 12 {
        return Err(Error::EnumerationGuard { n, max: 12 });
    }
    let mut rng = rng_for(seed, index);
    let count = rng.next_u64() % 13;
    let full = crate::mask::full_bits(n);
    let gens: Vec<u32> = (0..count).map(|_| rng.next_u64() as u32 & full).collect();
    Ok(SetFamily::from_bits(n, gens)?.downset_closure())
}

/// A pseudo-random convex family of `B(n)`: the difference of two nested
/// random downsets, which is always convex (between two members of
/// `D1 - D2`, anything above the lower one stays out of `D2` and inside
/// `D1`).
pub fn sample_convex(n: u32, seed: u64, index: u64) -> Result<SetFamily> {
    let d1 = sample_downset(n, seed, index.wrapping_mul(2))?;
    let d2 = sample_downset(n, seed, index.wrapping_mul(2) + 1)?.intersection(&d1)?;
    let c = d1.difference(&d2)?;
    debug_assert!(c.is_convex());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn downset_counts_match_known_values() {
        // Numbers of downsets (monotone families) of B(n), empty family
        // included.
        let expected = [3u64, 6, 20, 168, 7581];
        for (n, &want) in (1..=5u32).zip(&expected) {
            assert_eq!(downset_bitmaps(n).unwrap().count() as u64, want, "n={n}");
        }
        assert!(downset_bitmaps(7).is_err());
    }

    #[test]
    fn generator_agrees_with_filtering_all_families() {
        for n in 1..=4u32 {
            let size = 1u32 << n;
            let mut expected: Vec<u64> = (0..1u64 << size)
                .filter(|&bm| family_from_bitmap(n, bm).is_downset())
                .collect();
            expected.sort_unstable();
            let mut produced: Vec<u64> = downset_bitmaps(n).unwrap().collect();
            produced.sort_unstable();
            assert_eq!(produced, expected, "n={n}");
        }
    }

    #[test]
    fn smallest_downsets() {
        let mut got: Vec<u64> = downset_bitmaps(1).unwrap().collect();
        got.sort_unstable();
        // Empty family, {0}, {0, {1}}.
        assert_eq!(got, [0b00, 0b01, 0b11]);
    }

    #[test]
    fn convex_enumeration_counts() {
        // All 12 nonempty convex families of B(2), plus the empty family.
        let families: Vec<SetFamily> = enumerate_convex(2).unwrap().collect();
        assert_eq!(families.len(), 13);
        assert!(families.iter().all(|f| f.is_convex()));
        assert!(enumerate_convex(5).is_err());
    }

    #[test]
    fn samplers_are_deterministic_and_sound() {
        for idx in 0..200u64 {
            let c = sample_convex(5, 7, idx).unwrap();
            assert!(c.is_convex());
            assert_eq!(c, sample_convex(5, 7, idx).unwrap());

            let d = sample_downset(6, 7, idx).unwrap();
            assert!(d.is_downset());
        }
        let f = sample_family(4, 1, 3).unwrap();
        assert_eq!(f, sample_family(4, 1, 3).unwrap());
    }

    #[test]
    fn bitmap_round_trip() {
        for bm in [0u64, 1, 0b1011, 0xffff] {
            let f = family_from_bitmap(4, bm);
            assert_eq!(bitmap_from_family(&f), bm);
        }
    }
}
