//! Exact counting of weighted lattice paths under wall, filter and long-step
//! restrictions, with three independent routes to the multiplicities of
//! tilting modules in `T(1)^N`: forward dynamic programming on the Bratteli
//! diagram, closed-form ballot sums, and the Grothendieck-ring recursion.

pub mod closed_form;
pub mod error;
pub mod lattice;
pub mod paths;
pub mod region;
pub mod tilting;
pub mod verify;

pub use closed_form::SignedExact;
pub use error::{Error, Result};
pub use lattice::{
    strip_index, LatticePoint, ModelBuilder, ModelKind, ModelSpec, Restriction, StepKind,
    WeightedStep,
};
pub use paths::{
    count_paths, enumerate_paths, total_weight, weighted_count, CountTable, WeightedPath,
    DEFAULT_ENUM_GUARD,
};
pub use region::{
    boundary, check_congruent, counts_from_boundary, seed_from_table, Region, Translation,
};
pub use tilting::{
    decompose, decompose_all, tensor_step, tilting_dim, total_dimension, verify_against_paths,
    Decomposition, DimTable, Mismatch, TiltingLabel,
};
pub use verify::{run_suite, run_suites, Counterexample, Grid, Suite, SuiteReport};
