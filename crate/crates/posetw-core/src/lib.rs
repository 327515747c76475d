//! Combinatorics of the Boolean lattice `B(n)`: total orders and their
//! initial segments, shadows and compressions, Greene-Kleitman symmetric
//! chains, exact width computation via Dilworth's theorem, skipless chain
//! partitions of convex families, heavy families of `r`-sets, and
//! exhaustive small-`n` verifiers for the statements these constructions
//! come from.
//!
//! Subsets of `[n] = {1, ..., n}` are bitmasks ([`SubsetMask`]), families
//! of subsets are sorted mask vectors ([`SetFamily`]), and everything is a
//! pure function over immutable values. The crate is `no_std` (with
//! `alloc`); IO, file formats and the CLI live in the companion crate.
//!
//! ```
//! use posetw_core::{gk, goldwasser, order, width, OrderKind};
//!
//! // The width of the first 10 subsets in binary order, three ways:
//! // the matching oracle, the special-point count, the closed form.
//! let c10 = order::initial_segment(OrderKind::Binary, 10, 4)?;
//! assert_eq!(width::width(&c10).width, 4);
//! assert_eq!(gk::special_count(10, 4)?, 4);
//! assert_eq!(goldwasser::goldwasser_width(10), 4);
//! # Ok::<(), posetw_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod mask;
pub mod order;
pub mod family;
pub mod shadow;
pub mod matching;
pub mod width;
pub mod chains;
pub mod gk;
pub mod goldwasser;
pub mod compress;
pub mod heavy;
pub mod enumerate;
pub mod verify;

pub use error::{Error, Result};
pub use family::SetFamily;
pub use mask::{GroundOrder, SubsetMask};
pub use order::OrderKind;

/// Exact rational arithmetic for bounds and density ratios; verdicts never
/// go through floating point.
pub type Rational = num_rational::Ratio<i128>;
