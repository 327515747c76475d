//! Deterministic maximum bipartite matching (Hopcroft-Karp) and the
//! König minimum vertex cover extracted from it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// `pair_left[l]` is the right endpoint matched to `l`, if any.
    pub pair_left: Vec<Option<usize>>,
    /// `pair_right[r]` is the left endpoint matched to `r`, if any.
    pub pair_right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.pair_left.iter().filter(|p| p.is_some()).count()
    }
}

/// Maximum-cardinality matching of the bipartite graph given by `adj`
/// (left vertex -> sorted right neighbors). Deterministic for a fixed
/// input order: vertices and neighbors are always scanned in index order.
pub fn max_bipartite_matching(left: usize, right: usize, adj: &[Vec<usize>]) -> Matching {
    debug_assert_eq!(adj.len(), left);
    let mut pair_left: Vec<Option<usize>> = vec![None; left];
    let mut pair_right: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![0u32; left];

    loop {
        // BFS phase: layer the left vertices by alternating distance from
        // the free ones.
        let mut queue = VecDeque::new();
        for l in 0..left {
            if pair_left[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut reachable_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match pair_right[r] {
                    None => reachable_free_right = true,
                    Some(l2) => {
                        if dist[l2] == INF {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        // DFS phase: vertex-disjoint shortest augmenting paths.
        for l in 0..left {
            if pair_left[l].is_none() {
                augment(l, adj, &mut pair_left, &mut pair_right, &mut dist);
            }
        }
    }

    Matching { pair_left, pair_right }
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    pair_left: &mut [Option<usize>],
    pair_right: &mut [Option<usize>],
    dist: &mut [u32],
) -> bool {
    let d = core::mem::replace(&mut dist[l], INF);
    for &r in &adj[l] {
        let ok = match pair_right[r] {
            None => true,
            Some(l2) => dist[l2] == d + 1 && augment(l2, adj, pair_left, pair_right, dist),
        };
        if ok {
            pair_left[l] = Some(r);
            pair_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// König: a minimum vertex cover from a maximum matching, as membership
/// flags for the two sides. Alternating reachability from the unmatched
/// left vertices; the cover is (left not reached, right reached).
pub fn minimum_vertex_cover(
    left: usize,
    right: usize,
    adj: &[Vec<usize>],
    matching: &Matching,
) -> (Vec<bool>, Vec<bool>) {
    let mut seen_left = vec![false; left];
    let mut seen_right = vec![false; right];
    let mut queue = VecDeque::new();
    for l in 0..left {
        if matching.pair_left[l].is_none() {
            seen_left[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            if matching.pair_left[l] == Some(r) || seen_right[r] {
                continue;
            }
            seen_right[r] = true;
            if let Some(l2) = matching.pair_right[r] {
                if !seen_left[l2] {
                    seen_left[l2] = true;
                    queue.push_back(l2);
                }
            }
        }
    }
    let cover_left: Vec<bool> = seen_left.iter().map(|&s| !s).collect();
    let cover_right = seen_right;
    debug_assert_eq!(
        cover_left.iter().filter(|&&c| c).count() + cover_right.iter().filter(|&&c| c).count(),
        matching.size()
    );
    (cover_left, cover_right)
}
