//! Graded-discrepancy vertex orderings of graphs and k-uniform hypergraphs.
//!
//! Given an instance with n vertices and m of the C(n, k) possible edges,
//! every vertex ordering induces a chain of prefix subinstances; the graded
//! discrepancy of the instance is the best achievable maximum deviation of
//! prefix edge counts from the density line p*C(i, k). This crate provides:
//!
//! * exact scaled-integer discrepancy arithmetic ([`discrepancy`]),
//! * the constructive greedy orderings that realize the
//!   max{p, 1-p}*C(n-1, k-1) guarantee, with per-step certificates
//!   ([`greedy`]),
//! * exact optima for small instances by subset dynamic programming and
//!   permutation enumeration ([`oracle`]),
//! * the extremal families witnessing the lower bound, plus seeded random
//!   instances ([`constructions`]).
//!
//! No decision anywhere is made in floating point; every comparison happens
//! on integers scaled by C(n, k).

pub mod binomial;
pub mod constructions;
pub mod discrepancy;
pub mod error;
pub mod greedy;
pub mod hypergraph;
pub mod oracle;

pub use binomial::binomial;
pub use constructions::Rational;
pub use discrepancy::{
    certify, evaluate_ordering, first_deletion_bound, one_sided_parts, BoundCertificate,
    DiscContext, PrefixProfile, PrefixRow, ScaledDisc,
};
pub use error::Error;
pub use greedy::{
    check_all_step_invariants, check_step_invariants, order, GreedyVariant, OrderingResult,
    SignCase, StepTrace, StepVerdict,
};
pub use hypergraph::{DeletionState, UniformHypergraph};
pub use oracle::{exact_grdisc_dp, exact_grdisc_dp_capped, exact_grdisc_enum, ExactResult};
