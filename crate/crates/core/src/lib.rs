//! Bipartite Ramanujan graphs by iterated 2-lifts.
//!
//! Every lift is chosen by a greedy descent through an interlacing family of
//! conditional expected characteristic polynomials, and every spectral claim
//! is certified with exact integer polynomial arithmetic (Sturm sequences,
//! gcd-based equality of algebraic numbers). Nothing here trusts floating
//! point.
//!
//! Layout:
//! - [`graph`]: graphs, signings, 2-lifts and the edge-list file formats.
//! - [`poly`]: integer polynomials, characteristic polynomials, root
//!   isolation, interlacing.
//! - [`bound`]: algebraic thresholds such as `2 sqrt(d-1)`.
//! - [`matching`], [`path_tree`], [`expectation`]: the polynomials the
//!   descent reasons about.
//! - [`search`]: the descent itself, the exhaustive oracle and Ramanujan
//!   certificates.
//! - [`family`]: lift towers written to disk.

pub mod bound;
pub mod corpus;
pub mod error;
pub mod expectation;
pub mod family;
pub mod graph;
pub mod matching;
pub mod matrix;
pub mod path_tree;
pub mod poly;
pub mod search;

mod cli;

pub use bound::{cover_bound, BoundKind, RootBound, Verdict};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, PartialSigning, Side, Signing};
pub use poly::{IntPoly, RatPoly};

#[doc(hidden)]
pub use cli::run as cli_main;
