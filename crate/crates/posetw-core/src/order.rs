//! The five total orders on `B(n)` with closed-form rank and unrank.
//!
//! Binary and colex compare the raw words: the larger set is the one
//! owning the maximum of the symmetric difference, which is exactly the
//! higher word. Lex gives the set owning the minimum of the symmetric
//! difference the *smaller* position. Simplicial and level-colex sort by
//! cardinality first and break ties by lex and colex respectively.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::mask::{check_ground, SubsetMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Binary,
    Lex,
    Colex,
    Simplicial,
    LevelColex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 5] = [
        OrderKind::Binary,
        OrderKind::Lex,
        OrderKind::Colex,
        OrderKind::Simplicial,
        OrderKind::LevelColex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Binary => "binary",
            OrderKind::Lex => "lex",
            OrderKind::Colex => "colex",
            OrderKind::Simplicial => "simplicial",
            OrderKind::LevelColex => "level-colex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(OrderKind::Binary),
            "lex" => Ok(OrderKind::Lex),
            "colex" => Ok(OrderKind::Colex),
            "simplicial" => Ok(OrderKind::Simplicial),
            "level-colex" | "levelcolex" => Ok(OrderKind::LevelColex),
            _ => Err(Error::UnknownStatement),
        }
    }
}

/// Binomial coefficient as `u64`; zero outside `0 <= k <= n`.
///
/// Exact for every value that fits (`n <= 64` covers all uses here).
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// Compares `a` and `b` under `order`; the ground sizes must agree.
pub fn compare(order: OrderKind, a: SubsetMask, b: SubsetMask) -> Result<Ordering> {
    if a.ground_size() != b.ground_size() {
        return Err(Error::MismatchedGround(a.ground_size(), b.ground_size()));
    }
    Ok(match order {
        OrderKind::Binary | OrderKind::Colex => a.bits().cmp(&b.bits()),
        OrderKind::Lex => lex_cmp(a.bits(), b.bits()),
        OrderKind::Simplicial => a
            .cardinality()
            .cmp(&b.cardinality())
            .then_with(|| lex_cmp(a.bits(), b.bits())),
        OrderKind::LevelColex => a
            .cardinality()
            .cmp(&b.cardinality())
            .then_with(|| a.bits().cmp(&b.bits())),
    })
}

/// `a < b` iff `min(a ^ b)` lies in `a`: the lowest differing bit decides,
/// and owning it means coming first.
fn lex_cmp(a: u32, b: u32) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    if a >> low & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Position of `a` in `order` among all `2^n` subsets.
pub fn rank(order: OrderKind, a: SubsetMask) -> u64 {
    let n = a.ground_size();
    let bits = a.bits();
    let k = a.cardinality();
    match order {
        OrderKind::Binary | OrderKind::Colex => bits as u64,
        OrderKind::Lex => lex_rank_all(bits, n),
        OrderKind::Simplicial => levels_below(n, k) + level_rank_lex(bits, n, k),
        OrderKind::LevelColex => levels_below(n, k) + level_rank_colex(bits),
    }
}

/// Inverse of [`rank`].
pub fn unrank(order: OrderKind, rank: u64, n: u32) -> Result<SubsetMask> {
    check_ground(n)?;
    if rank >= total(n) {
        return Err(Error::RankOutOfRange { rank, n });
    }
    let bits = match order {
        OrderKind::Binary | OrderKind::Colex => rank as u32,
        OrderKind::Lex => lex_unrank_all(rank, n),
        OrderKind::Simplicial => {
            let (k, within) = split_level(rank, n);
            level_unrank_lex(within, k, n)
        }
        OrderKind::LevelColex => {
            let (k, within) = split_level(rank, n);
            level_unrank_colex(within, k)
        }
    };
    SubsetMask::new(bits, n)
}

/// The first `d` subsets of `[n]` under `order`, `0 <= d <= 2^n`.
pub fn initial_segment(order: OrderKind, d: u64, n: u32) -> Result<SetFamily> {
    check_ground(n)?;
    if d > total(n) {
        return Err(Error::RankOutOfRange { rank: d, n });
    }
    let bits = match order {
        OrderKind::Binary | OrderKind::Colex => (0..d).map(|v| v as u32).collect(),
        OrderKind::LevelColex => level_colex_initial_bits(n, d),
        _ => (0..d)
            .map(|i| unrank(order, i, n).map(|m| m.bits()))
            .collect::<Result<Vec<u32>>>()?,
    };
    SetFamily::from_bits(n, bits)
}

/// First `d` masks in level-colex order, whole levels via Gosper's hack.
pub(crate) fn level_colex_initial_bits(n: u32, d: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(d as usize);
    let mut remaining = d;
    for k in 0..=n {
        if remaining == 0 {
            break;
        }
        let level = binomial(n, k);
        let take = remaining.min(level);
        let mut m: u32 = if k == 0 { 0 } else { (1 << k) - 1 };
        for _ in 0..take {
            out.push(m);
            m = next_same_popcount(m);
        }
        remaining -= take;
    }
    out
}

/// Next larger word with the same popcount (Gosper); garbage on the last
/// one, which callers never advance past.
#[inline]
fn next_same_popcount(v: u32) -> u32 {
    if v == 0 {
        return u32::MAX;
    }
    let t = v | (v - 1);
    t.wrapping_add(1) | (!t & t.wrapping_add(1)).wrapping_sub(1) >> (v.trailing_zeros() + 1)
}

fn total(n: u32) -> u64 {
    1u64 << n
}

fn levels_below(n: u32, k: u32) -> u64 {
    (0..k).map(|j| binomial(n, j)).sum()
}

fn split_level(rank: u64, n: u32) -> (u32, u64) {
    let mut rest = rank;
    for k in 0..=n {
        let level = binomial(n, k);
        if rest < level {
            return (k, rest);
        }
        rest -= level;
    }
    unreachable!("rank checked against 2^n")
}

/// Colex rank of a `k`-set within its level: `sum C(a_i - 1, i)` over the
/// ascending elements `a_1 < ... < a_k`.
pub(crate) fn level_rank_colex(bits: u32) -> u64 {
    let mut r = 0u64;
    let mut i = 0u32;
    let mut rest = bits;
    while rest != 0 {
        let a = rest.trailing_zeros() + 1;
        i += 1;
        r += binomial(a - 1, i);
        rest &= rest - 1;
    }
    r
}

/// Inverse of [`level_rank_colex`] for `k`-sets.
pub(crate) fn level_unrank_colex(mut rank: u64, k: u32) -> u32 {
    let mut bits = 0u32;
    for i in (1..=k).rev() {
        // Largest a with C(a - 1, i) <= rank.
        let mut a = i;
        while binomial(a, i) <= rank {
            a += 1;
        }
        bits |= 1 << (a - 1);
        rank -= binomial(a - 1, i);
    }
    bits
}

/// Lex rank of a `k`-set of `[n]` within its level.
///
/// A competitor precedes `bits` exactly when, at the first element where
/// they part ways, it takes a smaller one; summing the free tails counts
/// them.
fn level_rank_lex(bits: u32, n: u32, k: u32) -> u64 {
    let mut r = 0u64;
    let mut prev = 0u32;
    let mut i = 0u32;
    let mut rest = bits;
    while rest != 0 {
        let a = rest.trailing_zeros() + 1;
        i += 1;
        for v in prev + 1..a {
            r += binomial(n - v, k - i);
        }
        prev = a;
        rest &= rest - 1;
    }
    r
}

fn level_unrank_lex(mut rank: u64, k: u32, n: u32) -> u32 {
    let mut bits = 0u32;
    let mut v = 1u32;
    for i in 1..=k {
        loop {
            let tail = binomial(n - v, k - i);
            if rank < tail {
                break;
            }
            rank -= tail;
            v += 1;
        }
        bits |= 1 << (v - 1);
        v += 1;
    }
    bits
}

/// Full-domain lex: characteristic strings read from position 1 with `1`
/// before `0`, so the rank counts the *missing* positions by weight.
fn lex_rank_all(bits: u32, n: u32) -> u64 {
    let mut r = 0u64;
    for i in 1..=n {
        if bits >> (i - 1) & 1 == 0 {
            r += 1 << (n - i);
        }
    }
    r
}

fn lex_unrank_all(rank: u64, n: u32) -> u32 {
    let mut bits = 0u32;
    for i in 1..=n {
        if rank >> (n - i) & 1 == 0 {
            bits |= 1 << (i - 1);
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(elements: &[u32], n: u32) -> SubsetMask {
        SubsetMask::from_elements(elements, n).unwrap()
    }

    #[test]
    fn compare_examples() {
        let n = 3;
        assert_eq!(compare(OrderKind::Binary, m(&[1], n), m(&[2], n)).unwrap(), Ordering::Less);
        assert_eq!(
            compare(OrderKind::LevelColex, m(&[3], n), m(&[1, 2], n)).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare(OrderKind::LevelColex, m(&[1, 3], n), m(&[2, 3], n)).unwrap(),
            Ordering::Less
        );
        // Simplicial breaks the same tie the other way at {1,3} vs {2,3}:
        // min of the difference is 1, owned by {1,3}.
        assert_eq!(
            compare(OrderKind::Simplicial, m(&[1, 3], n), m(&[2, 3], n)).unwrap(),
            Ordering::Less
        );
        assert!(compare(OrderKind::Binary, m(&[1], 2), m(&[1], 3)).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(OrderKind::Binary, m(&[1, 3], 4)), 5);
        assert_eq!(rank(OrderKind::LevelColex, m(&[1, 2], 3)), 4);
        assert_eq!(unrank(OrderKind::Binary, 0, 5).unwrap(), m(&[], 5));
        assert!(unrank(OrderKind::Binary, 8, 3).is_err());
    }

    #[test]
    fn initial_segment_examples() {
        let seg = initial_segment(OrderKind::Binary, 3, 2).unwrap();
        assert_eq!(seg, SetFamily::from_masks(vec![m(&[], 2), m(&[1], 2), m(&[2], 2)]).unwrap());
        let seg = initial_segment(OrderKind::LevelColex, 4, 3).unwrap();
        assert_eq!(
            seg,
            SetFamily::from_masks(vec![m(&[], 3), m(&[1], 3), m(&[2], 3), m(&[3], 3)]).unwrap()
        );
        let all = initial_segment(OrderKind::Binary, 8, 3).unwrap();
        assert_eq!(all.len(), 8);
    }

    /// Oracle: sort all subsets with the comparator and demand that rank
    /// is the position and unrank its inverse.
    #[test]
    fn rank_matches_comparator_sort() {
        for n in 1..=7 {
            for order in OrderKind::ALL {
                let mut all: Vec<SubsetMask> =
                    (0..1u32 << n).map(|b| SubsetMask::new(b, n).unwrap()).collect();
                all.sort_by(|&x, &y| compare(order, x, y).unwrap());
                for (pos, &s) in all.iter().enumerate() {
                    assert_eq!(rank(order, s), pos as u64, "{order} {s} n={n}");
                    assert_eq!(unrank(order, pos as u64, n).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn round_trip_up_to_n_10() {
        for n in [8, 9, 10] {
            for order in OrderKind::ALL {
                for bits in 0..1u32 << n {
                    let s = SubsetMask::new(bits, n).unwrap();
                    assert_eq!(unrank(order, rank(order, s), n).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn binary_and_level_colex_segments_are_downsets() {
        for n in 1..=10u32 {
            for d in 0..=(1u64 << n) {
                for order in [OrderKind::Binary, OrderKind::LevelColex] {
                    let seg = initial_segment(order, d, n).unwrap();
                    assert!(seg.is_downset(), "{order} d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(32, 16), 601_080_390);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }
}
