//! Exact combinatorics of Littlewood complexes for symmetric groups.
//!
//! The crate is organized in layers:
//!
//! * [`partition`] — integer partitions, border strips, beta sets, hook
//!   dimensions;
//! * [`bott`] — the straightening rule (δ_n(λ), λ[n]) for adding a top row;
//! * [`symfunc`] — the ring of symmetric functions over exact rationals:
//!   five bases, products, Hall pairing, plethysm, characters, the series
//!   L and H, and evaluation at permutation eigenvalues;
//! * [`modification`] — the border-strip modification rule and its d = 1
//!   closed form;
//! * [`complex`] — multiplicity spaces, complex term tables, cohomology
//!   placement, and stable Specht polynomials;
//! * [`verify`] — exhaustive identity sweeps that report violations as
//!   data;
//! * [`cache`] — optional on-disk persistence for memoized tables.
//!
//! All arithmetic is arbitrary precision; nothing is floating point.

pub mod bott;
pub mod cache;
pub mod complex;
pub mod modification;
pub mod partition;
pub mod symfunc;
pub mod verify;

pub use bott::{bott, bott_with_r, delta_count, BottResult};
pub use complex::{
    cohomology, complex_terms, eval_stable_specht, module_character, mult_dim, multiplicity_table,
    schur_dimension, stable_specht, BiSymFunc, Cohomology, ComplexDescriptor, ComplexTerm,
    MultiplicityTable,
};
pub use modification::{
    admissible, mod_rule_closed_d1, mod_rule_recursive, AdmissiblePair, ModResult,
};
pub use partition::{
    beta_set, hook_dimension, mn_strips, partitions_of, remove_strip_bottom_left, BetaSet,
    BorderStrip, Partition, PartitionError,
};
pub use symfunc::{
    char_table, h_series, lyndon_series, mn_character, rat, z_of, Basis, CharTable, CycleType,
    PlethysmError, Rat, SymFunc, TruncatedSeries,
};
pub use verify::{theorem34_check, theorem41_euler_check, theorem61_check, Report, Violation};
