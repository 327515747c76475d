//! Skipless Dilworth partitions of convex families via level-wise maximum
//! matchings, and the augmenting-path test for whether one more element
//! grows the width of a downset.
//!
//! A partition is stored as its per-level matchings: an edge joins an
//! element to its chain successor one level up. The union of the
//! matchings is a disjoint union of monotone paths (each vertex has at
//! most one neighbor below and one above), and each path read bottom-up
//! is a skipless chain. With every matching maximum, the number of chains
//! `|F| - sum |M_i|` equals the width.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::mask::SubsetMask;
use crate::matching::max_bipartite_matching;

/// The matching between levels `level - 1` and `level` of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMatching {
    pub level: u32,
    /// `(x, y)` with `x` one level below `y` and `x` a subset of `y`;
    /// endpoints pairwise disjoint.
    pub pairs: Vec<(SubsetMask, SubsetMask)>,
}

/// A partition of a family into skipless chains, as per-level matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPartition {
    family: SetFamily,
    /// Chain successor (one level up), by member word.
    up: BTreeMap<u32, u32>,
    /// Chain predecessor, inverse of `up`.
    down: BTreeMap<u32, u32>,
}

impl ChainPartition {
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn chain_count(&self) -> usize {
        self.family.len() - self.up.len()
    }

    /// The chains, bottom-up, ordered by their minimum's binary rank.
    pub fn chains(&self) -> Vec<Vec<SubsetMask>> {
        let n = self.family.ground_size();
        let mut out = Vec::with_capacity(self.chain_count());
        for &b in self.family.bits() {
            if self.down.contains_key(&b) {
                continue;
            }
            let mut chain = Vec::new();
            let mut cur = b;
            loop {
                chain.push(SubsetMask::new(cur, n).unwrap());
                match self.up.get(&cur) {
                    Some(&next) => cur = next,
                    None => break,
                }
            }
            out.push(chain);
        }
        out
    }

    /// The nonempty per-level matchings, ascending by level.
    pub fn level_matchings(&self) -> Vec<LevelMatching> {
        let n = self.family.ground_size();
        let mut by_level: BTreeMap<u32, Vec<(SubsetMask, SubsetMask)>> = BTreeMap::new();
        for (&x, &y) in &self.up {
            by_level
                .entry(y.count_ones())
                .or_default()
                .push((SubsetMask::new(x, n).unwrap(), SubsetMask::new(y, n).unwrap()));
        }
        by_level.into_iter().map(|(level, pairs)| LevelMatching { level, pairs }).collect()
    }
}

/// Partitions a convex family into `width`-many skipless chains by taking
/// a maximum matching in every consecutive-level cover graph, bottom-up.
pub fn sd_partition(c: &SetFamily) -> Result<ChainPartition> {
    if !c.is_convex() {
        return Err(Error::NotConvex);
    }
    let mut up = BTreeMap::new();
    let mut down = BTreeMap::new();
    let max_card = c.max_cardinality().unwrap_or(0);
    for level in 1..=max_card {
        let lower: Vec<u32> =
            c.bits().iter().copied().filter(|b| b.count_ones() == level - 1).collect();
        let upper: Vec<u32> =
            c.bits().iter().copied().filter(|b| b.count_ones() == level).collect();
        if lower.is_empty() || upper.is_empty() {
            continue;
        }
        let adj: Vec<Vec<usize>> = lower
            .iter()
            .map(|&x| (0..upper.len()).filter(|&j| x & upper[j] == x).collect())
            .collect();
        let matching = max_bipartite_matching(lower.len(), upper.len(), &adj);
        for (i, pair) in matching.pair_left.iter().enumerate() {
            if let Some(j) = pair {
                up.insert(lower[i], upper[*j]);
                down.insert(upper[*j], lower[i]);
            }
        }
    }
    Ok(ChainPartition { family: c.clone(), up, down })
}

/// True iff the chains partition the family and every consecutive pair is
/// a containment growing by exactly one element.
pub fn is_skipless_partition(p: &ChainPartition) -> bool {
    let mut covered = 0usize;
    for chain in p.chains() {
        covered += chain.len();
        for w in chain.windows(2) {
            let (x, y) = (w[0], w[1]);
            if !(x.is_strict_subset_of(y) && y.cardinality() == x.cardinality() + 1) {
                return false;
            }
        }
        if !chain.iter().all(|&m| p.family().contains(m)) {
            return false;
        }
    }
    covered == p.family().len()
}

/// Adds a maximal element `y` to the downset underlying `p`.
///
/// Searches the bipartite graph between levels `|y| - 1` and `|y|` for an
/// augmenting path from `y`: alternately an unused cover edge down and a
/// matching edge up, ending at a set that is the top of its chain. If one
/// exists the chains re-thread along it and the width is unchanged;
/// otherwise `y` becomes a singleton chain and the width grew by one.
/// Either way the result is again a partition into width-many skipless
/// chains.
pub fn insert_and_update(
    p: &ChainPartition,
    y: SubsetMask,
) -> Result<(ChainPartition, bool)> {
    let d = p.family();
    let n = d.ground_size();
    if y.ground_size() != n {
        return Err(Error::MismatchedGround(n, y.ground_size()));
    }
    if d.contains(y) {
        return Err(Error::AlreadyMember);
    }
    // D + y must still be a downset: every lower cover of y present.
    for e in y.elements() {
        if !d.contains(y.without(e)?) {
            return Err(Error::NotADownset);
        }
    }

    let family = d.with_member(y)?;
    let k = y.cardinality();
    let mut up = p.up.clone();
    let mut down = p.down.clone();

    if k > 0 {
        // Level k - 1 of D, scanned in binary-rank order for determinism.
        // Alternating BFS from y over the level-(k-1, k) graph.
        let yb = y.bits();
        let mut parent: BTreeMap<u32, u32> = BTreeMap::new(); // lower <- upper it was reached from
        let mut visited_upper: BTreeMap<u32, ()> = BTreeMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(yb);
        visited_upper.insert(yb, ());
        let mut terminal: Option<u32> = None;

        'search: while let Some(v) = queue.pop_front() {
            // Lower covers of v inside D, ascending by word: dropping a
            // higher element yields a smaller word.
            let vm = SubsetMask::new(v, n).unwrap();
            let mut elems: Vec<u32> = vm.elements().collect();
            elems.reverse();
            for e in elems {
                let x = v & !(1 << (e - 1));
                if !d.contains_bits(x) || parent.contains_key(&x) {
                    continue;
                }
                parent.insert(x, v);
                match up.get(&x) {
                    None => {
                        // x is the maximum of its chain: augmenting path found.
                        terminal = Some(x);
                        break 'search;
                    }
                    Some(&y2) => {
                        if visited_upper.insert(y2, ()).is_none() {
                            // Record how we stepped into y2 via the
                            // matching edge; the path reconstruction walks
                            // parent[] for lowers and the matching for
                            // uppers.
                            queue.push_back(y2);
                        }
                    }
                }
            }
        }

        if let Some(t) = terminal {
            // Re-thread: walk back from the terminal lower vertex, giving
            // each lower vertex on the path the upper vertex it was
            // discovered from.
            let mut x = t;
            loop {
                let v = parent[&x];
                // Drop x's old matching edge unless its upper endpoint was
                // already re-threaded to someone else.
                if let Some(&old_up) = up.get(&x) {
                    if down.get(&old_up) == Some(&x) {
                        down.remove(&old_up);
                    }
                }
                up.insert(x, v);
                down.insert(v, x);
                if v == yb {
                    break;
                }
                // v was entered through the matching edge from some lower
                // vertex; continue from it.
                x = p.down[&v];
            }
            let next = ChainPartition { family, up, down };
            debug_assert!(is_skipless_partition(&next));
            return Ok((next, false));
        }
    }

    // No augmenting path (or y is the empty set): y starts its own chain.
    let next = ChainPartition { family, up, down };
    debug_assert!(is_skipless_partition(&next));
    Ok((next, true))
}
