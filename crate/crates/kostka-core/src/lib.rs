//! Combinatorics engine for tableaux indexed by sequences of rectangles.
//!
//! The crate implements, at "desk scale" (a dozen cells or so):
//!
//! - partitions, skew shapes, words, and column-strict tableaux ([`partition`],
//!   [`word`], [`tableau`]);
//! - Schensted insertion, RSK, Knuth equivalence, evacuation and promotion
//!   ([`rsk`]), and the crystal reflection operators ([`crystal`]);
//! - sequences of rectangular shapes with their subalphabets, key tableaux,
//!   per-width statistics, and the pseudo order generated by splitting and
//!   reordering rectangles ([`rects`]);
//! - LR words and LR tableaux for a rectangle sequence ([`lrwords`]);
//! - the generalized charge/cocharge statistics and the classical
//!   Lascoux–Schützenberger charge ([`charge`]);
//! - cocyclage, cyclage, strong and weak cover relations together with graded
//!   poset construction and DOT/JSON export ([`cyclage`]);
//! - the elementary embeddings `tau_p` and `iota`, their composites `theta`,
//!   image membership tests, and multi-atoms ([`embed`]);
//! - row/column catabolism, catabolizability, and the catabolism multi-type
//!   ([`catabolism`]);
//! - the transpose bijection on LR words/tableaux and generalized
//!   standardization ([`transpose`]);
//! - exact integer `q`-polynomials: generalized Kostka polynomials, classical
//!   Kostka–Foulkes, and an independent Littlewood–Richardson multiplicity
//!   oracle ([`poly`]);
//! - enumeration catalogs and the verification suites that exhaustively check
//!   the structural theorems on small catalogs ([`catalog`], [`verify`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything is safe to evaluate in parallel.

// start of module list
pub mod catabolism;
pub mod catalog;
pub mod charge;
pub mod crystal;
pub mod cyclage;
pub mod embed;
pub mod error;
pub mod lrwords;
pub mod partition;
pub mod poly;
pub mod rects;
pub mod rsk;
pub mod tableau;
pub mod transpose;
pub mod verify;
pub mod word;


pub use error::Error;
pub use partition::Partition;
pub use rects::{ElemStep, MultiType, Rect, RectSeq};
pub use tableau::Tableau;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
