//! The Greene-Kleitman symmetric chain decomposition of `B(n)`.
//!
//! Reading a subset as a 0/1 string and bracket-matching it (every 1
//! grabs the rightmost unpaired 0 to its left) splits the positions into
//! nested pairs, unpaired 1s and unpaired 0s. All unpaired 1s sit left of
//! all unpaired 0s, so the chain through a set is obtained by switching
//! the free positions on and off in order: the successor turns the
//! leftmost unpaired 0 into a 1, the predecessor turns the rightmost
//! unpaired 1 into a 0. Chain minima ("special points") are the sets with
//! no unpaired 1s, and counting them inside a binary initial segment
//! computes that downset's width.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::mask::{check_ground, SubsetMask};

/// The bracket pairing of one subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkPairing {
    pub subject: SubsetMask,
    /// `(zero_position, one_position)` pairs, the 0 left of its 1, nested
    /// or disjoint.
    pub paired: Vec<(u32, u32)>,
    /// Ascending positions of unpaired 0s.
    pub unpaired_zeros: Vec<u32>,
    /// Ascending positions of unpaired 1s.
    pub unpaired_ones: Vec<u32>,
}

pub fn gk_pairing(a: SubsetMask) -> GkPairing {
    let n = a.ground_size();
    let mut paired = Vec::new();
    let mut zero_stack: Vec<u32> = Vec::new();
    let mut unpaired_ones = Vec::new();
    for pos in 1..=n {
        if a.contains(pos) {
            match zero_stack.pop() {
                Some(z) => paired.push((z, pos)),
                None => unpaired_ones.push(pos),
            }
        } else {
            zero_stack.push(pos);
        }
    }
    GkPairing { subject: a, paired, unpaired_zeros: zero_stack, unpaired_ones }
}

/// The next set up the chain: leftmost unpaired 0 switched on. Absent at
/// the chain maximum.
pub fn chain_successor(a: SubsetMask) -> Option<SubsetMask> {
    let p = gk_pairing(a);
    p.unpaired_zeros.first().map(|&z| a.with(z).unwrap())
}

/// The next set down the chain: rightmost unpaired 1 switched off.
/// Absent at the chain minimum.
pub fn chain_predecessor(a: SubsetMask) -> Option<SubsetMask> {
    let p = gk_pairing(a);
    p.unpaired_ones.last().map(|&o| a.without(o).unwrap())
}

/// Chain minima are exactly the sets with no unpaired 1s, i.e. those
/// where every prefix has at least as many 0s as 1s.
pub fn is_special(a: SubsetMask) -> bool {
    let n = a.ground_size();
    let bits = a.bits();
    let mut balance = 0i32;
    for pos in 0..n {
        if bits >> pos & 1 == 1 {
            balance -= 1;
            if balance < 0 {
                return false;
            }
        } else {
            balance += 1;
        }
    }
    true
}

/// Number of special points among the first `d` sets in binary order; by
/// the chain decomposition this is the width of the binary downset
/// `C(d)`. Streams over ranks, no materialization.
pub fn special_count(d: u64, n: u32) -> Result<u64> {
    check_ground(n)?;
    if d > 1u64 << n {
        return Err(Error::RankOutOfRange { rank: d, n });
    }
    let mut count = 0u64;
    for bits in 0..d {
        if is_special(SubsetMask::new(bits as u32, n)?) {
            count += 1;
        }
    }
    Ok(count)
}

/// The full chain through `a`, from its special point to its maximum.
pub fn chain_of(a: SubsetMask) -> Vec<SubsetMask> {
    let mut min = a;
    while let Some(prev) = chain_predecessor(min) {
        min = prev;
    }
    let mut out = Vec::new();
    let mut cur = min;
    loop {
        out.push(cur);
        match chain_successor(cur) {
            Some(next) => cur = next,
            None => break,
        }
    }
    out
}

/// A maximum antichain inside the binary downset `C(d)`, one set per
/// special point.
///
/// Every special point `a` climbs its chain to the cardinality of
/// `phi(a)`, the largest special point of `C(d)` at or after `a` in the
/// binary order (ties broken towards the larger word). The climb flips
/// unpaired 0s below `max(a ^ phi(a))` only, so the result stays inside
/// `C(d)`; the collected sets form an antichain of size
/// `special_count(d, n)`.
pub fn special_antichain(d: u64, n: u32) -> Result<SetFamily> {
    check_ground(n)?;
    if d < 1 || d > 1u64 << n {
        return Err(Error::RankOutOfRange { rank: d, n });
    }
    let specials: Vec<u32> = (0..d as u32)
        .filter(|&b| is_special(SubsetMask::new(b, n).unwrap()))
        .collect();
    let mut out = Vec::with_capacity(specials.len());
    for &a in &specials {
        // phi(a): maximum cardinality among specials >= a, largest word on ties.
        let &phi = specials
            .iter()
            .filter(|&&b| b >= a)
            .max_by_key(|&&b| (b.count_ones(), b))
            .expect("a itself qualifies");
        let mut cur = SubsetMask::new(a, n)?;
        for _ in 0..phi.count_ones() - a.count_ones() {
            cur = chain_successor(cur)
                .ok_or(Error::InvariantViolation("chain too short to reach phi"))?;
        }
        if cur.bits() as u64 >= d {
            return Err(Error::InvariantViolation("climbed outside the downset"));
        }
        out.push(cur.bits());
    }
    let fam = SetFamily::from_bits(n, out)?;
    if fam.len() != specials.len() || !fam.is_antichain() {
        return Err(Error::InvariantViolation("special antichain construction failed"));
    }
    Ok(fam)
}

/// The sets at which the width of the growing binary downset steps up:
/// exactly the special points, in binary order.
pub fn width_increment_points(n: u32) -> Result<Vec<SubsetMask>> {
    check_ground(n)?;
    if n > 20 {
        return Err(Error::EnumerationGuard { n, max: 20 });
    }
    Ok((0..1u64 << n)
        .map(|b| SubsetMask::new(b as u32, n).unwrap())
        .filter(|&m| is_special(m))
        .collect())
}
