//! Codimension-1 compressions: each i-section of a family is replaced by
//! the level-colex initial segment of its size, on `[n] - {i}`.
//!
//! Iterating compressions terminates because every effective step lowers
//! the sum of level-colex ranks, and the fixed points admit a complete
//! classification: an initial segment of the level-colex order, or one
//! exceptional family per ground size (the segment ending at the
//! complement pair `A = B^c`, with `B`, the immediate predecessor of `A`,
//! removed).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::mask::SubsetMask;
use crate::order::{self, OrderKind};
use crate::shadow::{assemble_sections, i_sections};

/// Replaces both i-sections of `f` by same-size level-colex initial
/// segments; preserves the family size, and downsets stay downsets.
pub fn compress_i(f: &SetFamily, i: u32) -> Result<SetFamily> {
    let n = f.ground_size();
    if i < 1 || i > n {
        return Err(Error::ElementOutOfRange { element: i, n });
    }
    if n == 1 {
        // Both sections live on the one-element power set of the empty
        // ground, where any family is an initial segment.
        return Ok(f.clone());
    }
    let sections = i_sections(f, i)?;
    let mut compressed = sections;
    compressed.lower = SetFamily::from_bits(
        n - 1,
        order::level_colex_initial_bits(n - 1, compressed.lower.len() as u64),
    )?;
    compressed.upper = SetFamily::from_bits(
        n - 1,
        order::level_colex_initial_bits(n - 1, compressed.upper.len() as u64),
    )?;
    assemble_sections(&compressed, i, n)
}

pub fn is_i_compressed(f: &SetFamily, i: u32) -> Result<bool> {
    Ok(compress_i(f, i)? == *f)
}

/// Applies compressions cyclically (`i = 1, ..., n`, repeat) until every
/// one fixes the family. Returns the fixed point and the number of
/// effective steps.
pub fn compress_fully(f: &SetFamily) -> (SetFamily, u64) {
    compress_fully_with(f, |_, _, _| {})
}

/// Like [`compress_fully`], invoking `observer(i, before, after)` at each
/// effective step.
pub fn compress_fully_with(
    f: &SetFamily,
    mut observer: impl FnMut(u32, &SetFamily, &SetFamily),
) -> (SetFamily, u64) {
    let n = f.ground_size();
    let mut current = f.clone();
    let mut steps = 0u64;
    loop {
        let mut progressed = false;
        for i in 1..=n {
            let next = compress_i(&current, i).expect("i within range");
            if next != current {
                observer(i, &current, &next);
                current = next;
                steps += 1;
                progressed = true;
            }
        }
        if !progressed {
            return (current, steps);
        }
    }
}

/// Sum of level-colex ranks over the members: the strictly decreasing
/// potential that makes compression terminate.
pub fn level_colex_rank_sum(f: &SetFamily) -> u128 {
    f.members().map(|m| order::rank(OrderKind::LevelColex, m) as u128).sum()
}

/// What a fully compressed family can be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPointClass {
    InitialSegment,
    /// `n = 2r + 1`: the segment through `[n]^(<=r)` with the final colex
    /// `r`-set swapped for its complement.
    OddExceptional(u32),
    /// `n = 2r`: likewise with the final colex `r`-set avoiding `n`.
    EvenExceptional(u32),
}

/// Identifies a fully compressed family. Families that are not
/// i-compressed for every `i` are a usage error; a family matching none
/// of the three classes would contradict the classification and is
/// reported as an invariant violation, never classified silently.
pub fn classify_fixed_point(f: &SetFamily) -> Result<FixedPointClass> {
    let n = f.ground_size();
    for i in 1..=n {
        if !is_i_compressed(f, i)? {
            return Err(Error::NotFullyCompressed);
        }
    }
    let segment = order::initial_segment(OrderKind::LevelColex, f.len() as u64, n)?;
    if *f == segment {
        return Ok(FixedPointClass::InitialSegment);
    }
    if *f == exceptional_family(n)? {
        return Ok(if n % 2 == 1 {
            FixedPointClass::OddExceptional((n - 1) / 2)
        } else {
            FixedPointClass::EvenExceptional(n / 2)
        });
    }
    Err(Error::InvariantViolation("fully compressed family outside the classification"))
}

/// The unique fully compressed family that is not an initial segment.
///
/// `B` is the immediate level-colex predecessor of its complement
/// `A = B^c`: for odd `n` the final `r`-set in colex, for even `n` the
/// final `r`-set in colex avoiding `n`. The family is the initial segment
/// ending at `A`, minus `B`.
pub fn exceptional_family(n: u32) -> Result<SetFamily> {
    crate::mask::check_ground(n)?;
    let b = if n % 2 == 1 {
        let r = (n - 1) / 2;
        // {r+2, ..., n}; empty when n = 1.
        let elements: Vec<u32> = (r + 2..=n).collect();
        SubsetMask::from_elements(&elements, n)?
    } else {
        let r = n / 2;
        let elements: Vec<u32> = (r..=n - 1).collect();
        SubsetMask::from_elements(&elements, n)?
    };
    let a = b.complement();
    let d = order::rank(OrderKind::LevelColex, a) + 1;
    let segment = order::initial_segment(OrderKind::LevelColex, d, n)?;
    segment.difference(&SetFamily::from_masks([b])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(sets: &[&[u32]], n: u32) -> SetFamily {
        SetFamily::from_bits(
            n,
            sets.iter().map(|s| SubsetMask::from_elements(s, n).unwrap().bits()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn compress_examples() {
        // The upper section of {{1,2}} at i=1 slides to the colex start.
        assert_eq!(compress_i(&fam(&[&[1, 2]], 2), 1).unwrap(), fam(&[&[1]], 2));

        // Level-colex initial segments are i-compressed for every i.
        for d in 0..=16u64 {
            let seg = order::initial_segment(OrderKind::LevelColex, d, 4).unwrap();
            for i in 1..=4 {
                assert!(is_i_compressed(&seg, i).unwrap(), "d={d} i={i}");
            }
        }

        let f = fam(&[&[], &[2]], 2);
        assert_eq!(compress_i(&f, 1).unwrap(), f);
        assert_eq!(compress_i(&f, 2).unwrap(), f);
    }

    #[test]
    fn is_compressed_examples() {
        let odd = fam(&[&[], &[1], &[2], &[1, 2]], 3);
        for i in 1..=3 {
            assert!(is_i_compressed(&odd, i).unwrap());
        }
        assert!(!is_i_compressed(&fam(&[&[1, 2]], 2), 1).unwrap());
        assert!(is_i_compressed(&SetFamily::empty(3).unwrap(), 2).unwrap());
    }

    #[test]
    fn fully_compress_reaches_a_classified_fixed_point() {
        // {{1,2}} compresses through {{1}} down to the segment {0}.
        let (fixed, steps) = compress_fully(&fam(&[&[1, 2]], 2));
        assert_eq!(fixed, fam(&[&[]], 2));
        assert_eq!(steps, 2);
        assert_eq!(classify_fixed_point(&fixed).unwrap(), FixedPointClass::InitialSegment);

        // Already-compressed input returns immediately.
        let seg = order::initial_segment(OrderKind::LevelColex, 5, 3).unwrap();
        assert_eq!(compress_fully(&seg), (seg, 0));
    }

    #[test]
    fn rank_sum_strictly_decreases_at_effective_steps() {
        for salt in 0u32..200 {
            let bits: Vec<u32> =
                (0..16u32).filter(|&b| b.wrapping_mul(2654435761).wrapping_add(salt) % 3 == 0).collect();
            let f = SetFamily::from_bits(4, bits).unwrap();
            compress_fully_with(&f, |_, before, after| {
                assert_eq!(before.len(), after.len());
                assert!(level_colex_rank_sum(after) < level_colex_rank_sum(before));
            });
        }
    }

    #[test]
    fn exceptional_families() {
        assert_eq!(exceptional_family(3).unwrap(), fam(&[&[], &[1], &[2], &[1, 2]], 3));
        assert_eq!(exceptional_family(2).unwrap(), fam(&[&[], &[2]], 2));
        assert_eq!(exceptional_family(1).unwrap(), fam(&[&[1]], 1));

        // n = 5: all of [5]^(<=2) with {4,5} swapped out for {1,2,3}.
        let e5 = exceptional_family(5).unwrap();
        let le2 = SetFamily::from_bits(5, (0..32u32).filter(|b| b.count_ones() <= 2).collect())
            .unwrap();
        let expected = le2
            .difference(&fam(&[&[4, 5]], 5))
            .unwrap()
            .union(&fam(&[&[1, 2, 3]], 5))
            .unwrap();
        assert_eq!(e5, expected);

        // Exceptional families are fully compressed but not segments.
        for n in 1..=6 {
            let e = exceptional_family(n).unwrap();
            let class = classify_fixed_point(&e).unwrap();
            match class {
                FixedPointClass::OddExceptional(r) => assert_eq!(n, 2 * r + 1),
                FixedPointClass::EvenExceptional(r) => assert_eq!(n, 2 * r),
                FixedPointClass::InitialSegment => panic!("exceptional family classified as segment"),
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_fixed_point(&fam(&[&[], &[1], &[2], &[1, 2]], 3)).unwrap(),
            FixedPointClass::OddExceptional(1)
        );
        assert_eq!(
            classify_fixed_point(&fam(&[&[], &[2]], 2)).unwrap(),
            FixedPointClass::EvenExceptional(1)
        );
        let seg = order::initial_segment(OrderKind::LevelColex, 9, 4).unwrap();
        assert_eq!(classify_fixed_point(&seg).unwrap(), FixedPointClass::InitialSegment);
        assert_eq!(
            classify_fixed_point(&fam(&[&[1, 2]], 2)),
            Err(Error::NotFullyCompressed)
        );
    }

    #[test]
    fn size_is_preserved_and_downsets_stay_downsets() {
        for salt in 0u32..100 {
            let bits: Vec<u32> = (0..32u32)
                .filter(|&b| b.wrapping_mul(2654435761).wrapping_add(salt * 131) % 4 == 0)
                .collect();
            let f = SetFamily::from_bits(5, bits).unwrap();
            for i in 1..=5 {
                let c = compress_i(&f, i).unwrap();
                assert_eq!(c.len(), f.len());
            }
            let d = f.downset_closure();
            for i in 1..=5 {
                assert!(compress_i(&d, i).unwrap().is_downset());
            }
        }
    }

    /// Compressions never lose maximal elements of a downset, checked
    /// over every downset of B(4) and B(5) and every direction.
    #[test]
    fn compression_is_monotone_on_all_small_downsets() {
        for n in [4u32, 5] {
            for d in crate::enumerate::enumerate_downsets(n).unwrap() {
                let m = d.maximal_elements().len();
                for i in 1..=n {
                    let c = compress_i(&d, i).unwrap();
                    assert!(c.is_downset());
                    assert!(c.maximal_elements().len() >= m);
                }
            }
        }
    }

    /// Maximal elements of a level-colex initial segment form a final
    /// segment of it.
    #[test]
    fn segment_maximals_are_a_suffix() {
        for n in 1..=8u32 {
            for d in 0..=1u64 << n {
                let seg = order::initial_segment(OrderKind::LevelColex, d, n).unwrap();
                let maximals = seg.maximal_elements();
                let m = maximals.len() as u64;
                // The last m members in level-colex order.
                let mut ordered: Vec<SubsetMask> = seg.members().collect();
                ordered.sort_by_key(|&x| order::rank(OrderKind::LevelColex, x));
                let suffix =
                    SetFamily::from_masks(ordered[(d - m) as usize..].iter().copied());
                match suffix {
                    Ok(suffix) => assert_eq!(maximals, suffix, "n={n} d={d}"),
                    Err(_) => assert_eq!(m, 0),
                }
            }
        }
    }
}
