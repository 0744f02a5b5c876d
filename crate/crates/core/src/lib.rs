//! Core library for working with the resource theory of imaginarity:
//! density operators whose free states are the real density matrices, the
//! quantum channels that preserve them, and the measures that quantify how
//! far a state sits from the real set.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`] — dense complex matrices, a cyclic Jacobi eigensolver for
//!   Hermitian matrices up to 4×4, trace norm, and von Neumann entropy
//!   (base-2 logarithms throughout: entropies are in bits).
//! - [`states`] — pure states, validated density operators, the canonical
//!   one-parameter qubit family, and real separable ensembles.
//! - [`measures`] — the three imaginarity measures: l1-norm, robustness,
//!   and relative entropy of imaginarity.
//! - [`channels`] — a catalog of Kraus channels (single-qubit and
//!   two-qubit), tensor products of channels, and a real-operation checker.
//! - [`decay`] — how much imaginarity a channel destroys on the canonical
//!   input families, numerically and via closed-form expressions, with a
//!   verifier that sweeps parameter grids.
//! - [`power`] — imaginary power (how much imaginarity a channel can
//!   create) and de-imaginary power (how much it can destroy at worst),
//!   again with closed forms and grid verifiers.
//!
//! Closed-form evaluators are deliberately kept independent of the numeric
//! pipeline (channel application + measure), so the two sides of every
//! verification are separate computations. Where a closed form is only
//! valid on part of its parameter square, the evaluator says so through
//! [`DomainFlag`] instead of silently disagreeing; see the README for the
//! two expressions that fail verification even inside their stated domain.

pub mod channels;
pub mod closed_form;
pub mod decay;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod power;
pub mod states;
pub mod tol;

pub use channels::{tensor_channel, ChannelId, KrausChannel, RealVerdict};
pub use closed_form::{ClosedFormValue, DomainFlag, Params, VerifyReport};
pub use decay::{decay_closed_form, decay_numeric, verify_formula, DecayFormulaId, DecayResult};
pub use error::{Error, Result};
pub use linalg::{eig_hermitian, trace_norm, von_neumann_entropy, ComplexMatrix, Spectrum};
pub use measures::{measure, measure_l1, measure_rel_entropy, measure_robustness, MeasureKind};
pub use power::{
    deimaginary_power_closed_form, deimaginary_power_numeric, imaginary_power_estimate,
    verify_power_formula, PowerEstimate, PowerFormulaId,
};
pub use states::{
    assemble_separable, canonical_a, canonical_state, density_from_pure,
    find_canonicalizing_orthogonal, is_real_state, maximal_imaginary_state, sample_real_separable,
    CanonicalPattern, DensityOperator, PureState, SeparableEnsemble, Sign,
};
