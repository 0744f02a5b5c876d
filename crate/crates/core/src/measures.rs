//! The three imaginarity measures.
//!
//! For a density operator `ρ`:
//!
//! ```text
//! 𝓕_l1(ρ) = Σ_{i≠j} |Im ρ_ij|                 (l1-norm of imaginarity)
//! 𝓕_R(ρ)  = ½ ‖ρ − ρᵀ‖₁                       (robustness of imaginarity)
//! 𝓕_r(ρ)  = S(Re ρ) − S(ρ)                    (relative entropy of imaginarity)
//! ```
//!
//! with `S` the von Neumann entropy in bits and `Re ρ = (ρ + ρᵀ)/2`. All
//! three vanish exactly on the free (real) states. For a qubit they share
//! simple closed behavior: on the canonical family `ρ_γ(A)` both `𝓕_l1`
//! and `𝓕_R` equal `√(1−A²)` (the Bloch-y component), and `𝓕_r` equals the
//! binary entropy gap `H₂((1+A)/2)`.
//!
//! `ρ − ρᵀ = 2i·Im ρ` is itself Hermitian, so the robustness computation
//! rides the precise eigenvalue path of [`crate::linalg::trace_norm`].

use crate::error::Result;
use crate::linalg::{trace_norm, von_neumann_entropy};
use crate::states::DensityOperator;
use crate::tol;

/// Selects one of the three measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureKind {
    L1,
    Robustness,
    RelEntropy,
}

impl MeasureKind {
    /// All three kinds, in canonical order.
    pub const ALL: [MeasureKind; 3] = [
        MeasureKind::L1,
        MeasureKind::Robustness,
        MeasureKind::RelEntropy,
    ];

    /// The CLI-facing tag.
    pub fn label(self) -> &'static str {
        match self {
            MeasureKind::L1 => "l1",
            MeasureKind::Robustness => "robustness",
            MeasureKind::RelEntropy => "rel-entropy",
        }
    }
}

impl std::fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// l1-norm of imaginarity: `Σ_{i≠j} |Im ρ_ij|`.
pub fn measure_l1(rho: &DensityOperator) -> f64 {
    let m = rho.matrix();
    let n = rho.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].im.abs();
            }
        }
    }
    s
}

/// Robustness of imaginarity: `½ ‖ρ − ρᵀ‖₁`.
pub fn measure_robustness(rho: &DensityOperator) -> Result<f64> {
    let d = rho.matrix().sub(&rho.matrix().transpose());
    Ok(trace_norm(&d)? / 2.0)
}

/// Relative entropy of imaginarity: `S(Re ρ) − S(ρ)` in bits.
///
/// The difference is non-negative up to eigensolver noise; values in
/// `[-1e-9, 0)` are clamped to zero.
pub fn measure_rel_entropy(rho: &DensityOperator) -> Result<f64> {
    let re = rho.matrix().real_part()?;
    let value = von_neumann_entropy(&re)? - von_neumann_entropy(rho.matrix())?;
    if (-tol::NEG_EIG..0.0).contains(&value) {
        return Ok(0.0);
    }
    Ok(value)
}

/// Dispatches on [`MeasureKind`].
pub fn measure(kind: MeasureKind, rho: &DensityOperator) -> Result<f64> {
    match kind {
        MeasureKind::L1 => Ok(measure_l1(rho)),
        MeasureKind::Robustness => measure_robustness(rho),
        MeasureKind::RelEntropy => measure_rel_entropy(rho),
    }
}
