//! Exact width of a family under containment: the ground-truth oracle the
//! rest of the crate is checked against.
//!
//! Dilworth via Fulkerson's split graph: left and right copies of the
//! family, an edge for each strict containment, and
//! `width = |F| - max matching`. König's cover turns the same matching
//! into a witness antichain, so the number is never reported without a
//! certificate.

use alloc::vec;
use alloc::vec::Vec;

use crate::family::SetFamily;
use crate::matching::{max_bipartite_matching, minimum_vertex_cover};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthResult {
    pub width: usize,
    /// An antichain of exactly `width` members of the family.
    pub witness: SetFamily,
}

pub fn width(f: &SetFamily) -> WidthResult {
    let m = f.len();
    let bits = f.bits();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            // Strict containment; sorted order makes i < j necessary.
            if bits[i] & bits[j] == bits[i] {
                adj[i].push(j);
            }
        }
    }
    let matching = max_bipartite_matching(m, m, &adj);
    let (cover_left, cover_right) = minimum_vertex_cover(m, m, &adj, &matching);
    let witness_bits: Vec<u32> = (0..m)
        .filter(|&i| !cover_left[i] && !cover_right[i])
        .map(|i| bits[i])
        .collect();
    let w = m - matching.size();
    debug_assert_eq!(witness_bits.len(), w);
    let witness = SetFamily::from_sorted_bits(f.ground_size(), witness_bits);
    debug_assert!(witness.is_antichain());
    WidthResult { width: w, witness }
}
