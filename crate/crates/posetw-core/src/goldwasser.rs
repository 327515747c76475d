//! The closed form for the width of a binary downset `C(d)`, its witness
//! antichain, the interval decomposition behind both, and exact density
//! ratios.
//!
//! Writing `d = 2^{k_1} + ... + 2^{k_r}` with `k_1 > ... > k_r >= 0`,
//! `C(d)` splits into intervals `[K_i, [k_i] + K_i]`, each isomorphic to
//! `B(k_i)`, where `K_i = {k_1 + 1, ..., k_{i-1} + 1}`. The width is
//! `sum C(k_i, s_i)` with `s_1 = ceil(k_1 / 2)` and
//! `s_i = min(ceil(k_i / 2), s_{i-1} - 1)`, witnessed by stacking the
//! `s_i`-th level of each interval.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::gk::special_count;
use crate::mask::{check_ground, SubsetMask};
use crate::order::binomial;
use crate::Rational;

/// One interval `[lo, hi] = {x : lo <= x <= hi}` of `B(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: SubsetMask,
    pub hi: SubsetMask,
}

/// The binary-expansion decomposition of `C(d)` into Boolean intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryDecomposition {
    pub d: u64,
    /// Strictly decreasing exponents of `d`.
    pub exponents: Vec<u32>,
    /// `K_i`, the forced prefix of interval `i`.
    pub prefixes: Vec<SubsetMask>,
    /// `[K_i, [k_i] + K_i]`, order-isomorphic to `B(k_i)`.
    pub intervals: Vec<Interval>,
}

pub fn interval_decomposition(d: u64, n: u32) -> Result<BinaryDecomposition> {
    check_ground(n)?;
    if d < 1 || d > 1u64 << n {
        return Err(Error::RankOutOfRange { rank: d, n });
    }
    let exponents = exponents_of(d);
    let mut prefixes = Vec::new();
    let mut intervals = Vec::new();
    let mut prefix_bits = 0u32;
    for &k in &exponents {
        let low_block = if k == 0 { 0 } else { (1u32 << k) - 1 };
        prefixes.push(SubsetMask::new(prefix_bits, n)?);
        intervals.push(Interval {
            lo: SubsetMask::new(prefix_bits, n)?,
            hi: SubsetMask::new(prefix_bits | low_block, n)?,
        });
        // The next interval is forced to contain element k + 1.
        prefix_bits |= 1u32 << k;
    }
    Ok(BinaryDecomposition { d, exponents, prefixes, intervals })
}

fn exponents_of(d: u64) -> Vec<u32> {
    let mut out = Vec::new();
    for k in (0..64).rev() {
        if d >> k & 1 == 1 {
            out.push(k);
        }
    }
    out
}

/// The level picks `s_i`; may go negative, in which case the interval
/// contributes nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldwasserProfile {
    pub levels: Vec<i64>,
}

pub fn goldwasser_profile(exponents: &[u32]) -> GoldwasserProfile {
    let mut levels = Vec::with_capacity(exponents.len());
    let mut prev: Option<i64> = None;
    for &k in exponents {
        let ceil_half = k.div_ceil(2) as i64;
        let s = match prev {
            None => ceil_half,
            Some(p) => ceil_half.min(p - 1),
        };
        levels.push(s);
        prev = Some(s);
    }
    GoldwasserProfile { levels }
}

/// Width of the binary downset `C(d)` in closed form.
pub fn goldwasser_width(d: u64) -> u64 {
    debug_assert!(d >= 1);
    let exponents = exponents_of(d);
    let profile = goldwasser_profile(&exponents);
    exponents
        .iter()
        .zip(&profile.levels)
        .map(|(&k, &s)| if s < 0 { 0 } else { binomial(k, s as u32) })
        .sum()
}

/// The witness antichain: level `s_i` of interval `i`, for every `i`.
pub fn goldwasser_antichain(d: u64, n: u32) -> Result<SetFamily> {
    let decomp = interval_decomposition(d, n)?;
    let profile = goldwasser_profile(&decomp.exponents);
    let mut out = Vec::new();
    for ((&k, &s), prefix) in
        decomp.exponents.iter().zip(&profile.levels).zip(&decomp.prefixes)
    {
        if s < 0 {
            continue;
        }
        // All s-subsets of [k], shifted into the interval by the prefix.
        let s = s as u32;
        let mut level: u32 = if s == 0 { 0 } else { (1 << s) - 1 };
        for _ in 0..binomial(k, s) {
            out.push(prefix.bits() | level);
            level = next_same_popcount(level);
        }
    }
    SetFamily::from_bits(n, out)
}

#[inline]
fn next_same_popcount(v: u32) -> u32 {
    if v == 0 {
        return u32::MAX;
    }
    let t = v | (v - 1);
    t.wrapping_add(1) | (!t & t.wrapping_add(1)).wrapping_sub(1) >> (v.trailing_zeros() + 1)
}

/// `alpha(C(d)) = |C(d)| / w(C(d))`, exactly.
pub fn alpha(d: u64, n: u32) -> Result<Rational> {
    check_ground(n)?;
    if d < 1 || d > 1u64 << n {
        return Err(Error::RankOutOfRange { rank: d, n });
    }
    let w = special_count(d, n)?;
    Ok(Rational::new(d as i128, w as i128))
}

/// `alpha(B(n)) = 2^n / C(n, floor(n/2))`.
pub fn alpha_boolean_lattice(n: u32) -> Result<Rational> {
    check_ground(n)?;
    Ok(Rational::new(1i128 << n, binomial(n, n / 2) as i128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::width;
    use crate::{order, OrderKind};
    use alloc::vec;

    #[test]
    fn decomposition_examples() {
        let d = interval_decomposition(10, 4).unwrap();
        assert_eq!(d.exponents, [3, 1]);
        let i0 = d.intervals[0];
        assert_eq!((i0.lo.bits(), i0.hi.bits()), (0, 0b0111));
        let i1 = d.intervals[1];
        assert_eq!((i1.lo.bits(), i1.hi.bits()), (0b1000, 0b1001));

        let d = interval_decomposition(8, 4).unwrap();
        assert_eq!(d.exponents, [3]);
        assert_eq!((d.intervals[0].lo.bits(), d.intervals[0].hi.bits()), (0, 0b0111));

        let d = interval_decomposition(3, 2).unwrap();
        assert_eq!(d.exponents, [1, 0]);
        assert_eq!((d.intervals[0].lo.bits(), d.intervals[0].hi.bits()), (0, 0b01));
        assert_eq!((d.intervals[1].lo.bits(), d.intervals[1].hi.bits()), (0b10, 0b10));
    }

    #[test]
    fn intervals_partition_the_downset() {
        for n in 1..=8u32 {
            for d in 1..=1u64 << n {
                let decomp = interval_decomposition(d, n).unwrap();
                let mut total = 0u64;
                let mut seen = alloc::collections::BTreeSet::new();
                for iv in &decomp.intervals {
                    let lo = iv.lo.bits();
                    let hi = iv.hi.bits();
                    let free = hi & !lo;
                    // Walk the interval: lo | s for submasks s of free.
                    let mut s = free;
                    loop {
                        let x = lo | s;
                        assert!((x as u64) < d);
                        assert!(seen.insert(x));
                        total += 1;
                        if s == 0 {
                            break;
                        }
                        s = (s - 1) & free;
                    }
                }
                assert_eq!(total, d, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn width_examples() {
        assert_eq!(goldwasser_width(1), 1);
        assert_eq!(goldwasser_width(10), 4);
        assert_eq!(goldwasser_width(8), 3);
        // Oracle cross-check for d = 8 in B(4).
        let c8 = order::initial_segment(OrderKind::Binary, 8, 4).unwrap();
        assert_eq!(width(&c8).width, 3);
    }

    #[test]
    fn profile_recurrence() {
        // d = 15 = 8+4+2+1: s = 2, 1, 0, -1; the last interval contributes 0.
        let p = goldwasser_profile(&[3, 2, 1, 0]);
        assert_eq!(p.levels, vec![2, 1, 0, -1]);
        assert_eq!(goldwasser_width(15), 6);
        assert_eq!(special_count(15, 4).unwrap(), 6);
    }

    #[test]
    fn closed_form_matches_special_count() {
        for n in 1..=10u32 {
            for d in 1..=1u64 << n {
                assert_eq!(goldwasser_width(d), special_count(d, n).unwrap(), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn antichain_is_maximal_inside_downset() {
        for d in 1..1u64 << 9 {
            let n = 10;
            let a = goldwasser_antichain(d, n).unwrap();
            assert!(a.is_antichain(), "d={d}");
            assert_eq!(a.len() as u64, goldwasser_width(d));
            assert!(a.bits().iter().all(|&b| (b as u64) < d));
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(4, 2).unwrap(), Rational::new(2, 1));
        assert_eq!(alpha(1, 4).unwrap(), Rational::new(1, 1));
        // alpha(C(2^k)) = alpha(B(k)).
        for n in 1..=10u32 {
            for k in 1..=n {
                assert_eq!(alpha(1 << k, n).unwrap(), alpha_boolean_lattice(k).unwrap());
            }
        }
    }

    #[test]
    fn alpha_of_lattice_is_nondecreasing() {
        for k in 1..=30u32 {
            assert!(
                alpha_boolean_lattice(k).unwrap() <= alpha_boolean_lattice(k + 1).unwrap(),
                "k={k}"
            );
        }
    }
}
