//! Combinatorics of the licci graph.
//!
//! Vertices are decorations: pairs of partitions `(lambda, mu)` of codimension
//! c with `|lambda| = (c-1)|mu| + 1`. Edges are given by the linkage formula.
//! The crate provides the formula and its named special links, admissibility
//! decision procedures, an independent Weyl-group oracle on the T-shaped
//! diagram, bounded graph enumeration with DOT/JSONL export, Tor-algebra
//! classification, and the doubling/hyperplane-section constructions plus the
//! named families.

pub mod admissibility;
pub mod betti;
pub mod decoration;
pub mod error;
pub mod families;
pub mod graph;
pub mod linkage;
pub mod partition;
pub mod tor;
pub mod weyl;

pub use decoration::{dominance_leq, Decoration, Format};
pub use error::{Error, Result};
pub use linkage::{
    generic_link, largest_minimal_link, link, link_with, neighbors, smallest_minimal_link,
    tight_double_link, LinkChoice, LinkResult,
};
pub use partition::Partition;
