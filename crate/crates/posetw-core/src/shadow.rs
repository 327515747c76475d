//! Shadows, the Kruskal-Katona minimum, and i-sections.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::mask::GroundOrder;
use crate::order::binomial;

/// All sets obtained by deleting one element from a member.
pub fn lower_shadow(f: &SetFamily) -> SetFamily {
    let mut out = Vec::new();
    for &b in f.bits() {
        let mut rest = b;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            out.push(b & !low);
            rest &= rest - 1;
        }
    }
    SetFamily::from_bits(f.ground_size(), out).unwrap()
}

/// All sets obtained by adding one element of `[n]` to a member.
pub fn upper_shadow(f: &SetFamily) -> SetFamily {
    let n = f.ground_size();
    let mut out = Vec::new();
    for &b in f.bits() {
        for e in 0..n {
            if b >> e & 1 == 0 {
                out.push(b | 1 << e);
            }
        }
    }
    SetFamily::from_bits(n, out).unwrap()
}

/// Size of the lower shadow of the first `m` colex `r`-sets: the
/// Kruskal-Katona minimum over families of `m` `r`-sets.
///
/// Uses the cascade representation `m = C(a_r, r) + ... + C(a_s, s)` with
/// `a_r > a_{r-1} > ... > a_s >= s >= 1`; the shadow replaces each lower
/// index by one less.
pub fn kk_min_shadow_size(m: u64, r: u32) -> u64 {
    debug_assert!(r >= 1);
    let mut rest = m;
    let mut j = r;
    let mut shadow = 0u64;
    while rest > 0 && j >= 1 {
        let mut a = j;
        while binomial(a + 1, j) <= rest {
            a += 1;
        }
        rest -= binomial(a, j);
        shadow += binomial(a, j - 1);
        j -= 1;
    }
    debug_assert_eq!(rest, 0, "cascade must exhaust m <= C(n, r)");
    shadow
}

/// The first `m` `r`-sets of `[n]` in colex order, as a family.
pub fn colex_rsets(m: u64, r: u32, n: u32) -> Result<SetFamily> {
    if m > binomial(n, r) {
        return Err(Error::RankOutOfRange { rank: m, n });
    }
    let bits = (0..m).map(|i| crate::order::level_unrank_colex(i, r)).collect();
    SetFamily::from_bits(n, bits)
}

/// The two i-sections of a family, re-indexed onto `[n] - {i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sections {
    /// The ordered universe `[n] - {i}` both sections live on.
    pub ground: GroundOrder,
    /// Members avoiding `i`.
    pub lower: SetFamily,
    /// Members containing `i`, with `i` removed.
    pub upper: SetFamily,
}

/// Splits `f` by membership of element `i`; `|lower| + |upper| = |f|`.
pub fn i_sections(f: &SetFamily, i: u32) -> Result<Sections> {
    let n = f.ground_size();
    if i < 1 || i > n {
        return Err(Error::ElementOutOfRange { element: i, n });
    }
    let ground = GroundOrder::without(n, i)?;
    let bit = 1u32 << (i - 1);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for &b in f.bits() {
        if b & bit == 0 {
            lower.push(ground.restrict_bits(b));
        } else {
            upper.push(ground.restrict_bits(b & !bit));
        }
    }
    // restrict_bits is monotone in the word order, so sortedness survives.
    Ok(Sections {
        ground,
        lower: SetFamily::from_sorted_bits(n - 1, lower),
        upper: SetFamily::from_sorted_bits(n - 1, upper),
    })
}

/// Rebuilds the family `i_sections` was taken from.
pub fn assemble_sections(sections: &Sections, i: u32, n: u32) -> Result<SetFamily> {
    if i < 1 || i > n {
        return Err(Error::ElementOutOfRange { element: i, n });
    }
    let bit = 1u32 << (i - 1);
    let mut bits = Vec::with_capacity(sections.lower.len() + sections.upper.len());
    for &b in sections.lower.bits() {
        bits.push(sections.ground.embed_bits(b));
    }
    for &b in sections.upper.bits() {
        bits.push(sections.ground.embed_bits(b) | bit);
    }
    SetFamily::from_bits(n, bits)
}
