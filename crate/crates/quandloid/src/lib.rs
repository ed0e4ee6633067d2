//! Quandle-theoretic invariants of knotoids and linkoids.
//!
//! The crate has four layers:
//!
//! - [`quandle`], [`perm`], [`census`]: finite quandles as validated
//!   operation tables, their automorphism and inner groups, structural
//!   predicates, and a small-order census up to isomorphism;
//! - [`pointed`], [`partitions`]: quandles with ordered basepoints,
//!   orbit classification of basepoint tuples, and the tuple-pattern
//!   counting recursion with its homogeneity predicates;
//! - [`diagram`], [`presentation`]: extended Gauss codes for linkoid
//!   diagrams, diagram rewrites, and derived quandle presentations with
//!   simplification and closure;
//! - [`coloring`]: homomorphism counting from presentations into finite
//!   quandles, pointed counting invariants, and counting matrices.

pub mod census;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod partitions;
pub mod perm;
pub mod pointed;
pub mod presentation;
pub mod quandle;

pub use census::{canonical_table, enumerate_quandles, CENSUS_HARD_CAP};
pub use coloring::{
    counting_invariant, counting_matrix, enumerate_colorings, evaluate_word, matrix_report,
    pointed_counting_invariant, pointed_profile, Coloring, CountingMatrix, MatrixReport,
};
pub use diagram::{
    parse_diagram, Arc, Component, ComponentKind, End, LinkoidDiagram, Passage, Role, Sign,
};
pub use error::{Error, Result};
pub use partitions::{partition_count, sk_equivalent, Cardinality, EqualityPattern};
pub use perm::{PermGroup, Permutation};
pub use pointed::{
    class_count_burnside, is_n_homogeneous, is_two_point_homogeneous, is_uniform, orbit_classes,
    pointed_isomorphic, stabilizer_transitive, PointedQuandle, DEFAULT_ARITY_CAP,
};
pub use presentation::{
    fundamental_presentation, parse_presentation, QuandlePresentation, QuandleWord, Relation,
};
pub use quandle::{FiniteQuandle, DEFAULT_GROUP_CAP};

pub use num_bigint::BigUint;
