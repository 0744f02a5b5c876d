//! Pure states, validated density operators, the canonical one-parameter
//! qubit family, and real separable ensembles.
//!
//! The "free" states of the theory are the real ones: `ρ = ρᵀ` entrywise,
//! equivalently `Im ρ = 0`. Every qubit pure state is equivalent, under a
//! real orthogonal rotation and a global phase, to the canonical state
//!
//! ```text
//! |γ(A)⟩ = √((1+A)/2) |0⟩ + i √((1−A)/2) |1⟩,   A = |Σ_j ψ_j²| ∈ [0, 1],
//! ```
//!
//! whose density matrix is
//!
//! ```text
//! ρ_γ = [ (1+A)/2              −i √(1−A²)/2 ]
//!       [ i √(1−A²)/2           (1−A)/2     ].
//! ```
//!
//! `A = 1` is a real state; `A = 0` is the maximally imaginary state
//! `|+̂⟩ = (|0⟩ + i|1⟩)/√2`. Two-qubit analogues place the same pair of
//! amplitudes on `{|00⟩, |11⟩}` or `{|01⟩, |10⟩}`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tol;

/// Normalized pure state, stored as complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amps: Vec<Complex64>,
}

impl PureState {
    /// Validates normalization (`Σ|ψ_j|² = 1` within 1e-12) and dimension
    /// (1 through 4 amplitudes).
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() || amps.len() > 4 {
            return Err(Error::WrongDimension {
                dim: amps.len(),
                context: "pure states support dimensions 1 through 4",
            });
        }
        for (k, z) in amps.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry { row: k, col: 0 });
            }
        }
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tol::STRUCTURAL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Computational basis state `|k⟩` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::WrongDimension {
                dim: k,
                context: "basis index exceeds dimension",
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[k] = Complex64::new(1.0, 0.0);
        Self::new(amps)
    }

    /// The maximally imaginary qubit state `(|0⟩ + i|1⟩)/√2`.
    pub fn plus() -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            amps: vec![Complex64::new(r, 0.0), Complex64::new(0.0, r)],
        }
    }

    /// The conjugate maximally imaginary qubit state `(|0⟩ − i|1⟩)/√2`.
    pub fn minus() -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            amps: vec![Complex64::new(r, 0.0), Complex64::new(0.0, -r)],
        }
    }

    /// Tensor product of two pure states (product dimension must stay ≤ 4).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let dim = self.dim() * other.dim();
        if dim > 4 {
            return Err(Error::WrongDimension {
                dim,
                context: "tensor product exceeds the supported dimension 4",
            });
        }
        let mut amps = Vec::with_capacity(dim);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Self::new(amps)
    }

    /// `|⟨self|other⟩|` — global-phase-insensitive overlap.
    pub fn overlap_abs(&self, other: &Self) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .norm()
    }
}

/// Validated density operator: Hermitian, unit trace, positive semidefinite
/// (eigenvalues ≥ −1e-9, i.e. negative only by numerical noise).
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    /// Checks all three density-operator properties on construction.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let n = matrix.rows();
        if n == 0 || n > 4 {
            return Err(Error::WrongDimension {
                dim: n,
                context: "density operators support dimensions 1 through 4",
            });
        }
        let defect = matrix.hermiticity_defect();
        if defect > tol::STRUCTURAL {
            return Err(Error::NotHermitian {
                defect,
                tol: tol::STRUCTURAL,
            });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol::STRUCTURAL || trace.im.abs() > tol::STRUCTURAL {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let spec = crate::linalg::eig_hermitian(&matrix, tol::STRUCTURAL)?;
        if let Some(&smallest) = spec.eigenvalues.last() {
            if smallest < -tol::NEG_EIG {
                return Err(Error::NegativeEigenvalue { value: smallest });
            }
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Von Neumann entropy of the state, in bits.
    pub fn entropy(&self) -> Result<f64> {
        crate::linalg::von_neumann_entropy(&self.matrix)
    }

    /// Tensor product of two states (product dimension must stay ≤ 4).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let dim = self.dim() * other.dim();
        if dim > 4 {
            return Err(Error::WrongDimension {
                dim,
                context: "tensor product exceeds the supported dimension 4",
            });
        }
        Self::new(self.matrix.kron(&other.matrix))
    }
}

/// Projector `|ψ⟩⟨ψ|` of a pure state.
pub fn density_from_pure(psi: &PureState) -> DensityOperator {
    let n = psi.dim();
    let m = ComplexMatrix::from_fn(n, n, |i, j| psi.amps[i] * psi.amps[j].conj());
    DensityOperator::new(m).expect("a projector of a unit vector is a valid state")
}

/// Whether `ρ` is a free (real) state: `max_ij |Im ρ_ij| ≤ tol`.
pub fn is_real_state(rho: &DensityOperator, tol: f64) -> bool {
    rho.matrix().max_imag_abs() <= tol
}

/// Canonical imaginarity parameter of a qubit pure state,
/// `A = |Σ_j ψ_j²|` (no conjugation in the sum), clamped into `[0, 1]`.
///
/// `A` is invariant under real orthogonal rotations and global phases, and
/// labels the orbit of the state under free unitaries.
pub fn canonical_a(psi: &PureState) -> Result<f64> {
    if psi.dim() != 2 {
        return Err(Error::WrongDimension {
            dim: psi.dim(),
            context: "canonical_a is defined for qubit states",
        });
    }
    let s: Complex64 = psi.amps.iter().map(|z| z * z).sum();
    Ok(s.norm().min(1.0))
}

/// Which basis pair carries the canonical amplitudes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalPattern {
    /// `√((1+A)/2)|0⟩ + i√((1−A)/2)|1⟩` — one qubit.
    Qubit01,
    /// Same amplitudes on `|00⟩` and `|11⟩` — two qubits.
    TwoQubit00_11,
    /// Same amplitudes on `|01⟩` and `|10⟩` — two qubits.
    TwoQubit01_10,
}

/// Builds the canonical state for a given `A ∈ [0, 1]` and basis pattern.
pub fn canonical_state(a: f64, pattern: CanonicalPattern) -> Result<PureState> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::OutOfRange {
            name: "A",
            value: a,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let hi = ((1.0 + a) / 2.0).sqrt();
    let lo = ((1.0 - a) / 2.0).sqrt();
    let c0 = Complex64::new(hi, 0.0);
    let c1 = Complex64::new(0.0, lo);
    let zero = Complex64::new(0.0, 0.0);
    let amps = match pattern {
        CanonicalPattern::Qubit01 => vec![c0, c1],
        CanonicalPattern::TwoQubit00_11 => vec![c0, zero, zero, c1],
        CanonicalPattern::TwoQubit01_10 => vec![zero, c0, c1, zero],
    };
    PureState::new(amps)
}

/// Finds a real orthogonal `O` with `Oψ = |γ(A)⟩` up to a global phase,
/// where `A = canonical_a(ψ)`.
///
/// The search scans rotation angle over a 10⁴-point grid for both the
/// rotation and reflection branches, then refines the best bracket by
/// golden-section bisection. Fails with [`Error::NotFound`] if the final
/// residual `1 − |⟨γ(A)|Oψ⟩|` exceeds 1e-8 (it lands at machine precision
/// for every qubit state in practice).
pub fn find_canonicalizing_orthogonal(psi: &PureState) -> Result<ComplexMatrix> {
    let a = canonical_a(psi)?;
    let target = canonical_state(a, CanonicalPattern::Qubit01)?;
    let (t0, t1) = (target.amps[0], target.amps[1]);
    let (p0, p1) = (psi.amps[0], psi.amps[1]);

    let dev = |theta: f64, reflect: bool| -> f64 {
        let (s, c) = theta.sin_cos();
        let (v0, v1) = if reflect {
            // [[c, s], [s, −c]]
            (p0 * c + p1 * s, p0 * s - p1 * c)
        } else {
            // [[c, −s], [s, c]]
            (p0 * c - p1 * s, p0 * s + p1 * c)
        };
        let overlap = (t0.conj() * v0 + t1.conj() * v1).norm();
        1.0 - overlap.min(1.0)
    };

    const GRID: usize = 10_000;
    let step = std::f64::consts::TAU / GRID as f64;
    let (mut best_dev, mut best_theta, mut best_reflect) = (f64::INFINITY, 0.0f64, false);
    for reflect in [false, true] {
        for k in 0..GRID {
            let theta = k as f64 * step;
            let d = dev(theta, reflect);
            if d < best_dev {
                (best_dev, best_theta, best_reflect) = (d, theta, reflect);
            }
        }
    }

    // Golden-section bisection of the bracket around the best grid point;
    // the deviation is smooth in θ, so the bracket collapses to machine
    // precision long before the iteration cap.
    let reflect = best_reflect;
    let (mut lo, mut hi) = (best_theta - step, best_theta + step);
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INVPHI * (hi - lo);
    let mut x2 = lo + INVPHI * (hi - lo);
    let mut f1 = dev(x1, reflect);
    let mut f2 = dev(x2, reflect);
    for _ in 0..100 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INVPHI * (hi - lo);
            f1 = dev(x1, reflect);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INVPHI * (hi - lo);
            f2 = dev(x2, reflect);
        }
    }
    let theta = if f1 <= f2 { x1 } else { x2 };
    let residual = dev(theta, reflect);
    if residual > tol::CANONICALIZE_RESIDUAL {
        return Err(Error::NotFound { residual });
    }
    let (s, c) = theta.sin_cos();
    let entries = if reflect {
        [c, s, s, -c]
    } else {
        [c, -s, s, c]
    };
    ComplexMatrix::from_real(2, 2, &entries)
}

/// Sign choice for [`maximal_imaginary_state`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The maximally imaginary state on one or two qubits:
/// `|±̂⟩⟨±̂|` for `n_qubits = 1` and `|±̂⟩⟨±̂|⊗|±̂⟩⟨±̂|` for `n_qubits = 2`.
pub fn maximal_imaginary_state(n_qubits: usize, sign: Sign) -> Result<DensityOperator> {
    let single = match sign {
        Sign::Plus => PureState::plus(),
        Sign::Minus => PureState::minus(),
    };
    match n_qubits {
        1 => Ok(density_from_pure(&single)),
        2 => Ok(density_from_pure(&single.tensor(&single)?)),
        n => Err(Error::Unsupported(format!(
            "maximal imaginary state is provided for 1 or 2 qubits, not {n}"
        ))),
    }
}

/// One term of a separable two-qubit ensemble: `weight · ρ_a ⊗ ρ_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableTerm {
    pub weight: f64,
    pub a: DensityOperator,
    pub b: DensityOperator,
}

/// Convex mixture of product states `Σ_k w_k ρ_a^(k) ⊗ ρ_b^(k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableEnsemble {
    terms: Vec<SeparableTerm>,
}

impl SeparableEnsemble {
    /// Validates weights (non-negative, summing to 1 within 1e-12) and
    /// factor dimensions (each factor a qubit state).
    pub fn new(terms: Vec<SeparableTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Unsupported(
                "separable ensemble needs at least one term".into(),
            ));
        }
        let mut total = 0.0;
        for t in &terms {
            if t.weight < -tol::STRUCTURAL {
                return Err(Error::OutOfRange {
                    name: "weight",
                    value: t.weight,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
            if t.a.dim() != 2 || t.b.dim() != 2 {
                return Err(Error::WrongDimension {
                    dim: t.a.dim().max(t.b.dim()),
                    context: "ensemble factors must be qubit states",
                });
            }
            total += t.weight;
        }
        if (total - 1.0).abs() > tol::STRUCTURAL {
            return Err(Error::NotNormalized { norm: total });
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[SeparableTerm] {
        &self.terms
    }
}

/// Assembles the ensemble into its two-qubit density operator.
pub fn assemble_separable(ensemble: &SeparableEnsemble) -> DensityOperator {
    let mut m = ComplexMatrix::zeros(4, 4);
    for t in ensemble.terms() {
        m = m.add(&t.a.matrix().kron(t.b.matrix()).scale(t.weight));
    }
    DensityOperator::new(m).expect("convex mixture of product states is a valid state")
}

/// Uniform sample from the x–z disk of the Bloch ball — a random real
/// qubit state.
fn random_real_qubit(rng: &mut impl Rng) -> DensityOperator {
    let angle = rng.gen_range(0.0..std::f64::consts::TAU);
    let radius = rng.gen::<f64>().sqrt();
    let (rx, rz) = (radius * angle.cos(), radius * angle.sin());
    let m = ComplexMatrix::from_real(
        2,
        2,
        &[(1.0 + rz) / 2.0, rx / 2.0, rx / 2.0, (1.0 - rz) / 2.0],
    )
    .expect("finite entries");
    DensityOperator::new(m).expect("Bloch-disk point is a valid state")
}

/// Deterministically samples a real separable two-qubit ensemble: weights
/// drawn uniformly and normalized, factors drawn uniformly from the x–z
/// Bloch disk (the real qubit states). Same seed, same ensemble.
pub fn sample_real_separable(seed: u64, n_terms: usize) -> SeparableEnsemble {
    assert!(n_terms >= 1, "ensemble needs at least one term");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<f64> = (0..n_terms).map(|_| rng.gen::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let terms = weights
        .into_iter()
        .map(|weight| SeparableTerm {
            weight,
            a: random_real_qubit(&mut rng),
            b: random_real_qubit(&mut rng),
        })
        .collect();
    SeparableEnsemble::new(terms).expect("sampler output is valid by construction")
}
