//! Numerical tolerances used across the crate.
//!
//! Every threshold lives here so the precision story is auditable in one
//! place. The values fall into three tiers: *structural* checks on inputs
//! (Hermiticity, trace, normalization) at 1e-12, *eigenvalue noise*
//! absorption at 1e-9 (a Jacobi sweep on a 4×4 leaves residue orders of
//! magnitude below this), and *verification* tolerances at 1e-9 / 1e-8
//! depending on whether entropies are involved.

/// Entrywise tolerance for structural input checks: Hermiticity defect,
/// trace-one defect, pure-state normalization, Kraus completeness.
pub const STRUCTURAL: f64 = 1e-12;

/// Off-diagonal Frobenius norm below which the Jacobi iteration stops.
pub const JACOBI_OFFDIAG: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; hitting it is reported as non-convergence.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of nominally positive semidefinite matrices may come out
/// slightly negative; anything in `[-NEG_EIG, 0)` is clamped to zero and
/// anything more negative is treated as a genuine error.
pub const NEG_EIG: f64 = 1e-9;

/// Eigenvalues below this are treated as exact zeros inside entropy sums
/// (the `0·log 0 = 0` convention, applied with a little numerical slack).
pub const ENTROPY_CLAMP: f64 = 1e-12;

/// Default tolerance for deciding whether a state is real.
pub const REAL_STATE: f64 = 1e-10;

/// Grid-verification tolerance for closed forms without entropies.
pub const VERIFY_PLAIN: f64 = 1e-9;

/// Grid-verification tolerance for closed forms involving entropies.
pub const VERIFY_ENTROPY: f64 = 1e-8;

/// Grid-verification tolerance for closed forms with nested radicals
/// (`√(u − 2√v)` and friends). Where the inner difference cancels to an
/// analytic zero, the outer square root turns machine epsilon into
/// ~√ε ≈ 1.5e-8 of noise, so these cannot be held to [`VERIFY_PLAIN`].
pub const VERIFY_RADICAL: f64 = 1e-8;

/// Residual bound for the canonicalizing-orthogonal search.
pub const CANONICALIZE_RESIDUAL: f64 = 1e-8;
