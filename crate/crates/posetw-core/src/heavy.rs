//! Heavy families: families of `r`-sets whose generated downset contains
//! no antichain larger than the family itself, the block construction
//! that is conjectured extremal, the proved upper bounds, and exhaustive
//! desk-scale search for the maximum downset size `f_r(t)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::mask::SubsetMask;
use crate::order::binomial;
use crate::shadow::colex_rsets;
use crate::width::{width, WidthResult};
use crate::Rational;

/// Outcome of a heaviness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyVerdict {
    pub is_heavy: bool,
    /// Number of generating `r`-sets.
    pub t: usize,
    /// Size of the generated downset.
    pub downset_size: usize,
    /// A maximum antichain of the downset; heavy iff its size is `t`.
    pub width_witness: SetFamily,
}

impl HeavyVerdict {
    pub fn width(&self) -> usize {
        self.width_witness.len()
    }
}

/// Checks whether the antichain `t` of `r`-sets is heavy: the width of
/// the downset it generates equals `|t|`.
pub fn is_heavy(t: &SetFamily) -> Result<HeavyVerdict> {
    if t.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let r = t.get(0).cardinality();
    if r < 1 {
        return Err(Error::EmptyGenerators);
    }
    if t.members().any(|m| m.cardinality() != r) {
        return Err(Error::MixedCardinalities);
    }
    let down = t.downset_closure();
    let WidthResult { width: w, witness } = width(&down);
    Ok(HeavyVerdict {
        is_heavy: w == t.len(),
        t: t.len(),
        downset_size: down.len(),
        width_witness: witness,
    })
}

/// `k` disjoint copies of the first `r` levels of `B(2r - 1)`, glued at
/// the empty set: the downset conjectured to maximize `f_r` at
/// `t = k * C(2r - 1, r)`.
///
/// Size `k * (2^(2r - 2) - 1 + C(2r - 1, r)) + 1`, width
/// `k * C(2r - 1, r)`.
pub fn heavy_construction(r: u32, k: u32) -> Result<SetFamily> {
    if r < 1 || k < 1 {
        return Err(Error::EmptyGenerators);
    }
    let block = 2 * r - 1;
    let n = k * block;
    if n > 32 {
        return Err(Error::GroundOverflow { needed: n });
    }
    let mut bits = Vec::new();
    for i in 0..k {
        let shift = i * block;
        for sub in 0..1u32 << block {
            if sub.count_ones() <= r {
                bits.push(sub << shift);
            }
        }
    }
    SetFamily::from_bits(n, bits)
}

/// The conjectured cap `[(2^(2r-2) - 1) / C(2r-1, r) + 1] t + 1`.
pub fn conjecture10_bound(r: u32, t: u64) -> Rational {
    let top = (1i128 << (2 * r - 2)) - 1;
    let mid = binomial(2 * r - 1, r) as i128;
    (Rational::new(top, mid) + Rational::from_integer(1)) * Rational::from_integer(t as i128)
        + Rational::from_integer(1)
}

/// The proved cap `t (r/3 + 4 sqrt(r))`, with `sqrt(r)` replaced by the
/// least rational of the form `a / 2^20` whose square is at least `r`, so
/// the bound never understates.
pub fn fh_bound(r: u32, t: u64) -> Rational {
    let sqrt_r = rational_sqrt_upper(r);
    (Rational::new(r as i128, 3) + Rational::from_integer(4) * sqrt_r)
        * Rational::from_integer(t as i128)
}

fn rational_sqrt_upper(r: u32) -> Rational {
    const SHIFT: u32 = 20;
    let scaled = (r as u128) << (2 * SHIFT);
    let mut a = integer_sqrt(scaled);
    if a * a < scaled {
        a += 1;
    }
    Rational::new(a as i128, 1i128 << SHIFT)
}

fn integer_sqrt(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    let mut x = 1u128 << (v.ilog2() / 2 + 1);
    loop {
        let next = (x + v / x) / 2;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// The case `r = 3` of the conjecture, proved: `f_3(t) <= 2.5 t + 1`.
pub fn r3_bound(t: u64) -> Rational {
    Rational::new(5, 2) * Rational::from_integer(t as i128) + Rational::from_integer(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverCheck {
    pub covers: usize,
    /// The lower bound `2 (r - |x|) - 1` every member of a heavy downset
    /// of height `r` must meet.
    pub bound: u64,
    pub holds: bool,
}

/// Counts upper covers of `x` in the heavy downset `h` and checks them
/// against the shadow bound; `x` must be a member below the top level.
pub fn min_upper_cover_count(h: &SetFamily, x: SubsetMask) -> Result<CoverCheck> {
    let r = h.max_cardinality().ok_or(Error::EmptyGenerators)?;
    if !h.contains(x) {
        return Err(Error::NotAMember);
    }
    if x.cardinality() >= r {
        return Err(Error::ElementOutOfRange { element: x.cardinality(), n: r });
    }
    let covers = h.upper_covers(x)?.len();
    let bound = (2 * (r - x.cardinality()) - 1) as u64;
    Ok(CoverCheck { covers, bound, holds: covers as u64 >= bound })
}

/// Result of an exhaustive `f_r(t)` search over ground `[n_max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub r: u32,
    pub t: u32,
    pub n_max: u32,
    /// Largest downset size over heavy families found; 0 when none is
    /// heavy.
    pub best_size: usize,
    /// A heavy family attaining `best_size` (earliest in enumeration
    /// order); empty when none is heavy.
    pub best_family: Option<SetFamily>,
    pub exhaustive: bool,
    pub families_examined: u64,
}

const SEARCH_GUARD: u128 = 10_000_000;

/// Exhaustively enumerates families of `t` distinct `r`-sets over
/// `[n_max]` (automatically antichains) and maximizes the generated
/// downset size over the heavy ones.
pub fn search_f_r(r: u32, t: u32, n_max: u32, force: bool) -> Result<SearchResult> {
    search_f_r_sharded(r, t, n_max, force, 0, 1, |_, _| {})
}

/// Shardable search core; `on_heavy(family, downset)` fires for every
/// heavy family in this shard, in enumeration order.
///
/// Shards partition the enumeration by family index, so running all
/// `shard_count` shards visits each family exactly once.
pub fn search_f_r_sharded(
    r: u32,
    t: u32,
    n_max: u32,
    force: bool,
    shard_index: u64,
    shard_count: u64,
    mut on_heavy: impl FnMut(&SetFamily, &SetFamily),
) -> Result<SearchResult> {
    if r < 1 || t < 1 || shard_count == 0 || shard_index >= shard_count {
        return Err(Error::EmptyGenerators);
    }
    crate::mask::check_ground(n_max)?;
    let pool = binomial(n_max, r);
    let estimate = binomial_u128_saturating(pool, t as u64, SEARCH_GUARD * 2);
    if estimate > SEARCH_GUARD && !force {
        return Err(Error::SearchGuardExceeded { estimate, limit: SEARCH_GUARD });
    }
    let rsets = colex_rsets(pool, r, n_max)?;
    let pool = pool as u32;

    let mut best_size = 0usize;
    let mut best_family: Option<SetFamily> = None;
    let mut examined = 0u64;

    if t <= pool {
        // t-subsets of the r-set pool in colex order via Gosper on u128;
        // the pool never exceeds C(8, r) <= 70 under the guard.
        debug_assert!(pool <= 127);
        let mut comb: u128 = (1u128 << t) - 1;
        let end: u128 = if pool == 128 { u128::MAX } else { 1u128 << pool };
        let mut index = 0u64;
        while comb < end {
            if index % shard_count == shard_index {
                examined += 1;
                let bits: Vec<u32> = (0..pool)
                    .filter(|&i| comb >> i & 1 == 1)
                    .map(|i| rsets.bits()[i as usize])
                    .collect();
                let family = SetFamily::from_bits(n_max, bits)?;
                let down = family.downset_closure();
                if width(&down).width == t as usize {
                    on_heavy(&family, &down);
                    if down.len() > best_size {
                        best_size = down.len();
                        best_family = Some(family);
                    }
                }
            }
            index += 1;
            comb = next_same_popcount_u128(comb);
        }
    }

    Ok(SearchResult {
        r,
        t,
        n_max,
        best_size,
        best_family,
        exhaustive: true,
        families_examined: examined,
    })
}

fn next_same_popcount_u128(v: u128) -> u128 {
    let t = v | (v - 1);
    t.wrapping_add(1) | (!t & t.wrapping_add(1)).wrapping_sub(1) >> (v.trailing_zeros() + 1)
}

fn binomial_u128_saturating(n: u64, k: u64, cap: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(n as u128 - i) / (i + 1);
        if acc > cap {
            return acc;
        }
    }
    acc
}

/// The consecutive-level inequality every heavy downset of height `r`
/// satisfies: `|H_k| * (2(r-k) - 1) <= (k+1) * |H_{k+1}|`.
pub fn consecutive_level_check(h: &SetFamily) -> bool {
    let r = match h.max_cardinality() {
        Some(r) => r,
        None => return true,
    };
    let sizes = h.level_sizes();
    (0..r as usize).all(|k| {
        let lhs = sizes[k] as u64 * (2 * (r as u64 - k as u64) - 1);
        let rhs = (k as u64 + 1) * sizes[k + 1] as u64;
        lhs <= rhs
    })
}
