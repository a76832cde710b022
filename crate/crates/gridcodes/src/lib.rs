//! Exact search engine for minimum-density periodic codes on infinite
//! gridlike graphs.
//!
//! The pipeline: a [`grid::GridModel`] describes an infinite graph on which
//! ℤ² acts by translations; [`constraints`] compiles a code property
//! (identifying / locating-dominating / redundant locating-dominating) into a
//! finite family of threshold clauses; [`automaton`] builds a weighted digraph
//! whose bi-infinite walks are exactly the v-periodic codes, one slanted strip
//! at a time; [`mmc`] runs Karp's minimum mean weight cycle algorithm on it;
//! and [`engine`] turns the optimal cycle back into an explicit totally
//! periodic code, which [`verifier`] re-checks from the raw definitions.
//!
//! All densities and mean weights are exact rationals; no floating point is
//! used anywhere in a decision.

pub mod automaton;
pub mod code;
pub mod constraints;
pub mod engine;
pub mod errors;
pub mod grid;
pub mod mmc;
pub mod ratio;
pub mod verifier;

pub use code::PeriodicCode;
pub use constraints::{ClauseFamily, ClauseSet, CodeKind, CodeSpec};
pub use engine::{SearchOutcome, SearchRequest};
pub use errors::Error;
pub use grid::{Cell, GridModel, Lattice2, PeriodVector};
pub use mmc::{MeanCycleResult, SpaceVariant, WeightedDigraph};
pub use ratio::Rational;
