//! Linear extension diameter of downset lattices of 2-dimensional posets.
//!
//! The crate builds posets and their downset lattices, recognizes
//! 2-dimensional posets and computes a non-separating realizer, constructs
//! the σ-revlex linear extensions of the downset lattice, and evaluates the
//! linear extension diameter `led(D_P)` in polynomial time. Brute-force
//! oracles in [`oracle`] recompute the same quantities by enumeration.

pub mod drawing;
pub mod engine;
pub mod error;
pub mod generate;
pub mod oracle;
pub mod poset;
pub mod realizer;
pub mod revlex;
pub mod set;

pub use engine::{
    count_antichains, led_boolean, led_chain_union, led_downset, led_downset_with, led_upper_bound,
    AntichainCountTable, LedBreakdown,
};
pub use error::{Error, Result};
pub use poset::{Antichain, Downset, DownsetLattice, ElementId, Induced, Poset, DEFAULT_CAP};
pub use realizer::{complement, is_non_separating, is_two_dimensional, realizer, LinearExtension, Realizer2D};
pub use revlex::{build_revlex_extension, diametral_pair, reversal_distance, BigCount, LatticeExtension};
pub use set::ElementSet;
