//! Families of subsets of `[n]` and the structural predicates on them.
//!
//! Members are kept deduplicated and sorted by their word value (binary
//! rank), so equality is positional, membership is a binary search, and
//! iteration order is deterministic everywhere.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mask::{check_ground, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: u8,
    members: Vec<u32>,
}

impl SetFamily {
    /// The empty family over `[n]`.
    pub fn empty(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(SetFamily { n: n as u8, members: Vec::new() })
    }

    /// All of `B(n)`. Materializes `2^n` masks, so keep `n` at desk scale.
    pub fn boolean_lattice(n: u32) -> Result<Self> {
        check_ground(n)?;
        if n > 24 {
            return Err(Error::EnumerationGuard { n, max: 24 });
        }
        Ok(SetFamily { n: n as u8, members: (0..1u32 << n).collect() })
    }

    /// The level `[n]^(k)`.
    pub fn level_of(n: u32, k: u32) -> Result<Self> {
        Ok(Self::boolean_lattice(n)?.level(k))
    }

    /// Builds a family from masks that must all share one ground size.
    pub fn from_masks(masks: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut iter = masks.into_iter();
        let first = match iter.next() {
            Some(m) => m,
            None => return Err(Error::GroundSize(0)),
        };
        let n = first.ground_size();
        let mut bits = Vec::new();
        bits.push(first.bits());
        for m in iter {
            if m.ground_size() != n {
                return Err(Error::MismatchedGround(n, m.ground_size()));
            }
            bits.push(m.bits());
        }
        Self::from_bits(n, bits)
    }

    /// Builds a family from raw words over `[n]`, sorting and deduplicating.
    pub fn from_bits(n: u32, mut bits: Vec<u32>) -> Result<Self> {
        check_ground(n)?;
        let full = crate::mask::full_bits(n);
        for &b in &bits {
            if b & !full != 0 {
                return Err(Error::BitsOutOfRange { bits: b, n });
            }
        }
        bits.sort_unstable();
        bits.dedup();
        Ok(SetFamily { n: n as u8, members: bits })
    }

    pub(crate) fn from_sorted_bits(n: u32, bits: Vec<u32>) -> Self {
        debug_assert!(bits.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(bits.iter().all(|&b| b & !crate::mask::full_bits(n) == 0));
        SetFamily { n: n as u8, members: bits }
    }

    #[inline]
    pub fn ground_size(&self) -> u32 {
        self.n as u32
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in binary-rank order.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let n = self.n as u32;
        self.members.iter().map(move |&b| SubsetMask::new(b, n).unwrap())
    }

    pub fn bits(&self) -> &[u32] {
        &self.members
    }

    pub fn get(&self, idx: usize) -> SubsetMask {
        SubsetMask::new(self.members[idx], self.n as u32).unwrap()
    }

    pub fn contains(&self, m: SubsetMask) -> bool {
        m.ground_size() == self.n as u32 && self.contains_bits(m.bits())
    }

    #[inline]
    pub(crate) fn contains_bits(&self, bits: u32) -> bool {
        self.members.binary_search(&bits).is_ok()
    }

    /// A copy with one more member.
    pub fn with_member(&self, m: SubsetMask) -> Result<Self> {
        if m.ground_size() != self.n as u32 {
            return Err(Error::MismatchedGround(self.n as u32, m.ground_size()));
        }
        match self.members.binary_search(&m.bits()) {
            Ok(_) => Err(Error::AlreadyMember),
            Err(pos) => {
                let mut members = self.members.clone();
                members.insert(pos, m.bits());
                Ok(SetFamily { n: self.n, members })
            }
        }
    }

    pub fn union(&self, other: &SetFamily) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut bits = self.members.clone();
        bits.extend_from_slice(&other.members);
        Self::from_bits(self.n as u32, bits)
    }

    pub fn difference(&self, other: &SetFamily) -> Result<Self> {
        self.check_same_ground(other)?;
        let bits = self.members.iter().copied().filter(|&b| !other.contains_bits(b)).collect();
        Ok(SetFamily { n: self.n, members: bits })
    }

    pub fn intersection(&self, other: &SetFamily) -> Result<Self> {
        self.check_same_ground(other)?;
        let bits = self.members.iter().copied().filter(|&b| other.contains_bits(b)).collect();
        Ok(SetFamily { n: self.n, members: bits })
    }

    fn check_same_ground(&self, other: &SetFamily) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedGround(self.n as u32, other.n as u32));
        }
        Ok(())
    }

    /// Members of cardinality `k`, as a family.
    pub fn level(&self, k: u32) -> SetFamily {
        let bits = self.members.iter().copied().filter(|b| b.count_ones() == k).collect();
        SetFamily { n: self.n, members: bits }
    }

    /// Count of members per cardinality `0..=n`.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0usize; self.n as usize + 1];
        for &b in &self.members {
            sizes[b.count_ones() as usize] += 1;
        }
        sizes
    }

    pub fn min_cardinality(&self) -> Option<u32> {
        self.members.iter().map(|b| b.count_ones()).min()
    }

    pub fn max_cardinality(&self) -> Option<u32> {
        self.members.iter().map(|b| b.count_ones()).max()
    }

    /// Closed under deleting elements: every subset of a member again a
    /// member.
    pub fn is_downset(&self) -> bool {
        self.members.iter().all(|&b| {
            let mut rest = b;
            loop {
                if rest == 0 {
                    return true;
                }
                let low = rest & rest.wrapping_neg();
                if !self.contains_bits(b & !low) {
                    return false;
                }
                rest &= rest - 1;
            }
        })
    }

    /// Closed under sets lying between two members.
    ///
    /// Checks every comparable pair and walks the submasks of the gap;
    /// exponential in the gap size, fine at desk scale.
    pub fn is_convex(&self) -> bool {
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i + 1..] {
                if x & y != x {
                    continue;
                }
                // Enumerate z = x | s for s a submask of y ^ x.
                let gap = y ^ x;
                let mut s = gap;
                loop {
                    s = (s - 1) & gap;
                    if s == 0 {
                        break;
                    }
                    if !self.contains_bits(x | s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// No member strictly contains another.
    pub fn is_antichain(&self) -> bool {
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i + 1..] {
                if x & y == x || x & y == y {
                    return false;
                }
            }
        }
        true
    }

    /// The downset generated by the family: all subsets of members.
    pub fn downset_closure(&self) -> SetFamily {
        let mut seen = alloc::collections::BTreeSet::new();
        for &b in &self.members {
            // Submask walk, including b itself and 0.
            let mut s = b;
            loop {
                if !seen.insert(s) && s == b {
                    // b already processed through some superset; its
                    // submasks are present too.
                    break;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & b;
            }
        }
        SetFamily { n: self.n, members: seen.into_iter().collect() }
    }

    /// Members containing `x` (the upset of `x` within the family).
    pub fn upset_within(&self, x: SubsetMask) -> Result<SetFamily> {
        if x.ground_size() != self.n as u32 {
            return Err(Error::MismatchedGround(self.n as u32, x.ground_size()));
        }
        let xb = x.bits();
        let bits = self.members.iter().copied().filter(|&b| b & xb == xb).collect();
        Ok(SetFamily { n: self.n, members: bits })
    }

    /// Members with no strict superset in the family.
    pub fn maximal_elements(&self) -> SetFamily {
        let bits = self
            .members
            .iter()
            .copied()
            .filter(|&b| !self.members.iter().any(|&c| c != b && b & c == b))
            .collect();
        SetFamily { n: self.n, members: bits }
    }

    /// Members with no strict subset in the family.
    pub fn minimal_elements(&self) -> SetFamily {
        let bits = self
            .members
            .iter()
            .copied()
            .filter(|&b| !self.members.iter().any(|&c| c != b && b & c == c))
            .collect();
        SetFamily { n: self.n, members: bits }
    }

    /// Members `y` with `x` strictly below and nothing of the family
    /// strictly between; `x` must be a member.
    pub fn upper_covers(&self, x: SubsetMask) -> Result<SetFamily> {
        if !self.contains(x) {
            return Err(Error::NotAMember);
        }
        let xb = x.bits();
        let bits = self
            .members
            .iter()
            .copied()
            .filter(|&y| {
                y != xb
                    && xb & y == xb
                    && !self
                        .members
                        .iter()
                        .any(|&z| z != xb && z != y && xb & z == xb && z & y == z)
            })
            .collect();
        Ok(SetFamily { n: self.n, members: bits })
    }

    pub fn lower_covers(&self, y: SubsetMask) -> Result<SetFamily> {
        if !self.contains(y) {
            return Err(Error::NotAMember);
        }
        let yb = y.bits();
        let bits = self
            .members
            .iter()
            .copied()
            .filter(|&x| {
                x != yb
                    && x & yb == x
                    && !self
                        .members
                        .iter()
                        .any(|&z| z != x && z != yb && x & z == x && z & yb == z)
            })
            .collect();
        Ok(SetFamily { n: self.n, members: bits })
    }

    /// Connected components of the comparability graph (edges are strict
    /// containments between members), each again a family.
    pub fn connected_components(&self) -> Vec<SetFamily> {
        let m = self.members.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for i in 0..m {
            for j in i + 1..m {
                let (x, y) = (self.members[i], self.members[j]);
                if x & y == x || x & y == y {
                    let (ra, rb) = (find(&mut parent, i), find(&mut parent, j));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        let mut groups: alloc::collections::BTreeMap<usize, Vec<u32>> =
            alloc::collections::BTreeMap::new();
        for i in 0..m {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.members[i]);
        }
        let mut out: Vec<SetFamily> =
            groups.into_values().map(|bits| SetFamily { n: self.n, members: bits }).collect();
        out.sort_by(|a, b| a.members.cmp(&b.members));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fam(sets: &[&[u32]], n: u32) -> SetFamily {
        SetFamily::from_bits(
            n,
            sets.iter().map(|s| SubsetMask::from_elements(s, n).unwrap().bits()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn predicate_examples() {
        let f = fam(&[&[], &[1], &[2]], 2);
        assert!(f.is_downset());
        let g = fam(&[&[1], &[1, 2], &[1, 3], &[1, 2, 3]], 3);
        assert!(g.is_convex());
        assert!(!g.is_downset());
        let h = fam(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        assert!(h.is_antichain());
        assert!(!fam(&[&[], &[1, 2]], 2).is_convex());
    }

    #[test]
    fn closure_examples() {
        let c = fam(&[&[1, 2]], 2).downset_closure();
        assert_eq!(c, fam(&[&[], &[1], &[2], &[1, 2]], 2));
        let level3 = SetFamily::level_of(5, 3).unwrap();
        assert_eq!(level3.downset_closure().len(), 26);
        let b3 = SetFamily::boolean_lattice(3).unwrap();
        let up = b3.upset_within(SubsetMask::from_elements(&[1, 2], 3).unwrap()).unwrap();
        assert_eq!(up, fam(&[&[1, 2], &[1, 2, 3]], 3));
    }

    #[test]
    fn maximal_minimal_examples() {
        let f = fam(&[&[], &[1], &[2], &[1, 2]], 2);
        assert_eq!(f.maximal_elements(), fam(&[&[1, 2]], 2));
        assert_eq!(fam(&[&[], &[1], &[2]], 2).maximal_elements(), fam(&[&[1], &[2]], 2));
        // Level-colex initial segment of size 5 in B(3).
        let seg = crate::order::initial_segment(crate::OrderKind::LevelColex, 5, 3).unwrap();
        assert_eq!(seg.maximal_elements(), fam(&[&[3], &[1, 2]], 3));
        assert_eq!(f.minimal_elements(), fam(&[&[]], 2));
    }

    #[test]
    fn cover_examples() {
        let b2 = SetFamily::boolean_lattice(2).unwrap();
        let empty = SubsetMask::empty(2).unwrap();
        assert_eq!(b2.upper_covers(empty).unwrap(), fam(&[&[1], &[2]], 2));

        let gap = fam(&[&[], &[1, 2]], 2);
        assert_eq!(gap.upper_covers(empty).unwrap(), fam(&[&[1, 2]], 2));

        let h = SetFamily::level_of(5, 3).unwrap().downset_closure();
        let one = SubsetMask::from_elements(&[1], 5).unwrap();
        assert_eq!(h.upper_covers(one).unwrap().len(), 4);
        assert!(b2.upper_covers(SubsetMask::from_elements(&[1], 3).unwrap()).is_err());
        assert!(gap
            .lower_covers(SubsetMask::from_elements(&[1, 2], 2).unwrap())
            .unwrap()
            .contains(empty));
    }

    #[test]
    fn component_examples() {
        assert_eq!(fam(&[&[1], &[2]], 2).connected_components().len(), 2);
        assert_eq!(fam(&[&[1], &[1, 2], &[2]], 2).connected_components().len(), 1);
        let t = fam(&[&[1, 2], &[3, 4]], 4).downset_closure();
        assert_eq!(t.connected_components().len(), 1);
        assert!(SetFamily::empty(3).unwrap().connected_components().is_empty());
    }

    #[test]
    fn closure_is_idempotent_and_downset() {
        for seed in [0u32, 0b1011, 0b100100, 0xffff] {
            let f = SetFamily::from_bits(4, (0..16).filter(|i| seed >> i & 1 == 1).collect())
                .unwrap();
            let c = f.downset_closure();
            assert!(c.is_downset());
            assert_eq!(c.downset_closure(), c);
            assert_eq!(c.upset_within(SubsetMask::empty(4).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn edge_double_count_on_consecutive_levels() {
        // For a family on consecutive levels, upper and lower cover
        // counts sum to the same edge total.
        let f = fam(&[&[1], &[2], &[3], &[1, 2], &[2, 3]], 3);
        let up: usize = f.members().map(|x| f.upper_covers(x).unwrap().len()).sum();
        let down: usize = f.members().map(|y| f.lower_covers(y).unwrap().len()).sum();
        assert_eq!(up, down);
        assert_eq!(up, 4);
    }

    #[test]
    fn sorted_and_deduplicated() {
        let f = SetFamily::from_bits(3, vec![5, 1, 5, 0]).unwrap();
        assert_eq!(f.bits(), &[0, 1, 5]);
        assert!(SetFamily::from_bits(2, vec![4]).is_err());
    }
}
