//! Committee (multiwinner) voting under weak-order preferences.
//!
//! Agents rank alternatives with ties; committees are fixed-size subsets of
//! the alternatives. Preferences over single alternatives are lifted to
//! preferences over committees by one of five set extensions (responsive,
//! downward/upward lexicographic, best, worst), and each extension induces
//! its own notion of Pareto optimality.
//!
//! The crate provides:
//!
//! * [`model`]: profiles, weak orders, committees, and the text format;
//! * [`extensions`]: per-agent committee comparators for the five extensions;
//! * [`oracle`]: exact brute-force efficiency verification and enumeration;
//! * [`graph`]: bipartite matching and minimum vertex cover (König);
//! * [`polyalgos`]: the polynomial-time verification and election algorithms;
//! * [`mechanisms`]: serial dictatorship variants and a manipulation tester;
//! * [`reductions`]: hardness-construction instance generators;
//! * [`sampling`]: seeded random (impartial culture) profile generation;
//! * [`relations`]: cross-extension efficiency relation reports.

pub mod extensions;
pub mod graph;
pub mod mechanisms;
pub mod model;
pub mod oracle;
pub mod polyalgos;
pub mod reductions;
pub mod relations;
pub mod sampling;

pub use extensions::{Comparison, Extension};
pub use model::{Alt, Committee, Profile, ProfileError, WeakOrder};
pub use oracle::Verdict;

/// Errors shared by the algorithmic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two committees that must have equal size do not.
    #[error("committee size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    /// An exhaustive scan would exceed the configured cap.
    #[error("instance too large: {required} cases exceed cap {cap}")]
    InstanceTooLarge { required: u128, cap: u128 },
    /// An improvement step returned a committee that does not dominate.
    #[error("improvement step returned a non-dominating committee")]
    NonImprovingStep,
    /// An algorithm was invoked outside its precondition.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// Invalid profile or committee input.
    #[error(transparent)]
    Profile(#[from] ProfileError),
}
