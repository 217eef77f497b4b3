//! Directed hypergraphs and their proper colorings.
//!
//! A [`DirectedHypergraph`] is a vertex sequence plus edges whose vertices
//! are split into a head set and a tail set. The crate provides:
//!
//! * a line-oriented text format ([`parse`], [`serialize`]) and
//!   [`normalize`], which drops edges containing another edge;
//! * detection of the seven two-edge patterns on 2→1 hypergraphs and of the
//!   pairwise intersection conditions ([`contains_pattern`],
//!   [`check_condition`]);
//! * four constructive coloring algorithms ([`Algorithm`]) with traces and an
//!   independent trace [`audit`];
//! * an exact backtracking solver ([`chromatic_number`]);
//! * fixed examples, tower constructions and seeded random instances
//!   ([`generators`]);
//! * the good-coloring edge bound ([`f_bound`]);
//! * a parallel fuzz harness ([`fuzz`]).
//!
//! Colors 0, 1, 2, 3 are called blue, red, green and yellow in traces.
//!
//! ```
//! use dhcolor::{parse, Algorithm, RunOptions, is_proper};
//!
//! let h = parse("e a b > c\ne a d > e\n").unwrap();
//! let run = Algorithm::I0R4Two.run(&h, &RunOptions::default()).unwrap();
//! assert!(is_proper(&h, &run.coloring).unwrap());
//! ```

pub mod algo;
pub mod bounds;
pub mod coloring;
pub mod error;
pub mod format;
pub mod fuzz;
pub mod generators;
pub mod hypergraph;
pub mod pattern;
pub mod solver;

pub use algo::{
    audit, Action, Algorithm, ColoringRun, HeadStar, InvariantViolation, ProcessingOrder,
    RunOptions, RunTrace, TieBreak, TraceEvent,
};
pub use bounds::{f_bound, induce_good_coloring, verify_good_coloring, GoodColoring, ShadowColor};
pub use coloring::{is_proper, Color, Coloring};
pub use error::{Error, Result};
pub use format::{parse, serialize};
pub use fuzz::{fuzz, FuzzConfig, FuzzReport};
pub use generators::GenSpec;
pub use hypergraph::{normalize, DirectedEdge, DirectedHypergraph, Role};
pub use pattern::{
    check_condition, classify_intersection, contains_pattern, Condition, IntersectionProfile,
    Pattern, PatternReport,
};
pub use solver::{chromatic_number, find_proper_coloring, ChromaticResult};
