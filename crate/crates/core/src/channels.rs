//! Kraus channel catalog: the standard single-qubit noise channels, their
//! two-qubit product versions, channel tensor products, and a checker for
//! whether a channel is a free (real) operation.
//!
//! A channel is stored as an explicit Kraus list `{K_i}` with
//! `Σ K†K = I` enforced at construction. The catalog conventions follow
//! the flip-probability parameterization in which the *identity* arm
//! carries `√p`, e.g. bit flip `{√p·I, √(1−p)·σx}`; damping channels use
//! the usual `γ` (decay probability). The two-qubit entries are written
//! out operator by operator rather than generated, so they can serve as an
//! independent transcription cross-checked against `tensor_channel` in the
//! test suite.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{identity2, pauli_x, pauli_y, pauli_z, ComplexMatrix};
use crate::states::{is_real_state, DensityOperator};
use crate::tol;

/// Outcome of [`KrausChannel::is_real_operation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealVerdict {
    /// Every Kraus entry is real, so the channel is manifestly free.
    RealKraus,
    /// Some Kraus entries are complex, but the channel mapped every sampled
    /// real state to a real state (e.g. σy-containing depolarizing noise).
    RealPreservingSampled,
    /// At least one sampled real state was mapped to a non-real state.
    NotRealPreserving,
}

/// A completely positive trace-preserving map in Kraus form.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<ComplexMatrix>,
    label: String,
    params: Vec<(String, f64)>,
}

impl KrausChannel {
    /// Builds a channel, checking operator shapes and the completeness
    /// relation `Σ K†K = I` entrywise at 1e-12.
    pub fn new(
        dim_in: usize,
        dim_out: usize,
        kraus: Vec<ComplexMatrix>,
        label: impl Into<String>,
        params: Vec<(String, f64)>,
    ) -> Result<Self> {
        if kraus.is_empty() || kraus.len() > dim_in * dim_out {
            return Err(Error::WrongDimension {
                dim: kraus.len(),
                context: "Kraus list length must be between 1 and dim_in · dim_out",
            });
        }
        for k in &kraus {
            if k.rows() != dim_out || k.cols() != dim_in {
                return Err(Error::DimensionMismatch {
                    left: k.rows() * 10 + k.cols(),
                    right: dim_out * 10 + dim_in,
                });
            }
        }
        let mut sum = ComplexMatrix::zeros(dim_in, dim_in);
        for k in &kraus {
            sum = sum.add(&k.adjoint().mul(k));
        }
        let defect = sum.max_abs_diff(&ComplexMatrix::identity(dim_in));
        if defect > tol::STRUCTURAL {
            return Err(Error::IncompleteKraus { defect });
        }
        Ok(Self {
            dim_in,
            dim_out,
            kraus,
            label: label.into(),
            params,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &[(String, f64)] {
        &self.params
    }

    /// Applies the channel: `ρ ↦ Σ K ρ K†`. The output is revalidated as a
    /// density operator.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimensionMismatch {
                left: rho.dim(),
                right: self.dim_in,
            });
        }
        let mut out = ComplexMatrix::zeros(self.dim_out, self.dim_out);
        for k in &self.kraus {
            out = out.add(&k.mul(rho.matrix()).mul(&k.adjoint()));
        }
        DensityOperator::new(out)
    }

    /// Decides whether the channel is a free (real) operation.
    ///
    /// If every Kraus entry has zero imaginary part the verdict is
    /// immediate. Otherwise the channel is applied to 200 seeded random
    /// real states (real Wishart samples of the input dimension) and the
    /// outputs are tested with [`is_real_state`] at `tol`.
    pub fn is_real_operation(&self, tol: f64) -> RealVerdict {
        if self.kraus.iter().all(|k| k.max_imag_abs() == 0.0) {
            return RealVerdict::RealKraus;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0CEA);
        for _ in 0..200 {
            let rho = random_real_state(&mut rng, self.dim_in);
            match self.apply(&rho) {
                Ok(out) if is_real_state(&out, tol) => continue,
                _ => return RealVerdict::NotRealPreserving,
            }
        }
        RealVerdict::RealPreservingSampled
    }
}

/// Random real density operator of dimension `n`: `B Bᵀ / Tr(B Bᵀ)` with
/// `B` a real matrix of uniform entries (a real Wishart sample).
fn random_real_state(rng: &mut impl Rng, n: usize) -> DensityOperator {
    loop {
        let b = ComplexMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        let m = b.mul(&b.transpose());
        let trace = m.trace().re;
        if trace < 1e-6 {
            continue;
        }
        if let Ok(rho) = DensityOperator::new(m.scale(1.0 / trace)) {
            return rho;
        }
    }
}

/// Tensor product of two channels: Kraus list `{A_i ⊗ B_j}`, input
/// dimension `dim_a · dim_b` (which must stay within the 4×4 budget).
pub fn tensor_channel(a: &KrausChannel, b: &KrausChannel) -> Result<KrausChannel> {
    let dim_in = a.dim_in * b.dim_in;
    let dim_out = a.dim_out * b.dim_out;
    if dim_in > 4 || dim_out > 4 {
        return Err(Error::WrongDimension {
            dim: dim_in.max(dim_out),
            context: "tensor product exceeds the supported dimension 4",
        });
    }
    let mut kraus = Vec::with_capacity(a.kraus.len() * b.kraus.len());
    for ka in &a.kraus {
        for kb in &b.kraus {
            kraus.push(ka.kron(kb));
        }
    }
    let mut params: Vec<(String, f64)> = Vec::new();
    for (name, v) in &a.params {
        params.push((format!("left.{name}"), *v));
    }
    for (name, v) in &b.params {
        params.push((format!("right.{name}"), *v));
    }
    KrausChannel::new(
        dim_in,
        dim_out,
        kraus,
        format!("{}⊗{}", a.label, b.label),
        params,
    )
}

/// Catalog identifier: channel family plus its parameters.
///
/// Probabilities `p` follow the identity-arm convention (`p = 1` is the
/// identity channel for the flip families); damping rates `γ` follow the
/// usual decay convention (`γ = 0` is the identity).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChannelId {
    /// Dephasing with `{√(1−p/2)·I, √(p/2)·σz}`.
    Dephasing {
        p: f64,
    },
    /// Generalized amplitude damping; `p1` mixes decay toward `|0⟩` and
    /// `|1⟩`, `p2` is the damping strength.
    Gad {
        p1: f64,
        p2: f64,
    },
    /// Combined phase and amplitude damping (single qubit); requires
    /// `p1 + p2 ≤ 1`.
    Pad1 {
        p1: f64,
        p2: f64,
    },
    BitFlip {
        p: f64,
    },
    PhaseFlip {
        p: f64,
    },
    BitPhaseFlip {
        p: f64,
    },
    PhaseDamping {
        gamma: f64,
    },
    AmplitudeDamping {
        gamma: f64,
    },
    /// Depolarizing with `{√(1−3p/4)·I, √(p/4)·σx, √(p/4)·σy, √(p/4)·σz}`.
    Depolarizing {
        p: f64,
    },
    /// Phase damping on each qubit of a pair.
    Pd2 {
        g1: f64,
        g2: f64,
    },
    /// Phase flip on each qubit of a pair.
    Pf2 {
        p1: f64,
        p2: f64,
    },
    /// Bit flip on each qubit of a pair.
    Bf2 {
        p1: f64,
        p2: f64,
    },
    /// Amplitude damping on each qubit of a pair.
    Ad2 {
        g1: f64,
        g2: f64,
    },
    /// Phase damping on the first qubit, amplitude damping on the second.
    Pad2 {
        g1: f64,
        g2: f64,
    },
    /// Bit-phase flip on each qubit of a pair.
    Bpf2 {
        p1: f64,
        p2: f64,
    },
    /// Depolarizing on each qubit of a pair.
    Dep2 {
        p1: f64,
        p2: f64,
    },
}

impl ChannelId {
    /// The CLI-facing tag.
    pub fn tag(&self) -> &'static str {
        match self {
            ChannelId::Dephasing { .. } => "dephasing",
            ChannelId::Gad { .. } => "gad",
            ChannelId::Pad1 { .. } => "pad",
            ChannelId::BitFlip { .. } => "bitflip",
            ChannelId::PhaseFlip { .. } => "phaseflip",
            ChannelId::BitPhaseFlip { .. } => "bitphaseflip",
            ChannelId::PhaseDamping { .. } => "phasedamping",
            ChannelId::AmplitudeDamping { .. } => "amplitudedamping",
            ChannelId::Depolarizing { .. } => "depolarizing",
            ChannelId::Pd2 { .. } => "pd2",
            ChannelId::Pf2 { .. } => "pf2",
            ChannelId::Bf2 { .. } => "bf2",
            ChannelId::Ad2 { .. } => "ad2",
            ChannelId::Pad2 { .. } => "pad2",
            ChannelId::Bpf2 { .. } => "bpf2",
            ChannelId::Dep2 { .. } => "dep2",
        }
    }

    /// System dimension the channel acts on (2 or 4).
    pub fn dim(&self) -> usize {
        match self {
            ChannelId::Dephasing { .. }
            | ChannelId::Gad { .. }
            | ChannelId::Pad1 { .. }
            | ChannelId::BitFlip { .. }
            | ChannelId::PhaseFlip { .. }
            | ChannelId::BitPhaseFlip { .. }
            | ChannelId::PhaseDamping { .. }
            | ChannelId::AmplitudeDamping { .. }
            | ChannelId::Depolarizing { .. } => 2,
            _ => 4,
        }
    }

    /// Named parameters, in display order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            ChannelId::Dephasing { p }
            | ChannelId::BitFlip { p }
            | ChannelId::PhaseFlip { p }
            | ChannelId::BitPhaseFlip { p }
            | ChannelId::Depolarizing { p } => vec![("p", p)],
            ChannelId::PhaseDamping { gamma } | ChannelId::AmplitudeDamping { gamma } => {
                vec![("gamma", gamma)]
            }
            ChannelId::Gad { p1, p2 } | ChannelId::Pad1 { p1, p2 } => {
                vec![("p1", p1), ("p2", p2)]
            }
            ChannelId::Pf2 { p1, p2 }
            | ChannelId::Bf2 { p1, p2 }
            | ChannelId::Bpf2 { p1, p2 }
            | ChannelId::Dep2 { p1, p2 } => vec![("p1", p1), ("p2", p2)],
            ChannelId::Pd2 { g1, g2 } | ChannelId::Ad2 { g1, g2 } | ChannelId::Pad2 { g1, g2 } => {
                vec![("g1", g1), ("g2", g2)]
            }
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in self.params() {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::ParamOutOfRange {
                    name,
                    value: v,
                    constraint: "must lie in [0, 1]",
                });
            }
        }
        if let ChannelId::Pad1 { p1, p2 } = *self {
            if p1 + p2 > 1.0 + tol::STRUCTURAL {
                return Err(Error::ParamOutOfRange {
                    name: "p1",
                    value: p1 + p2,
                    constraint: "p1 + p2 must not exceed 1",
                });
            }
        }
        Ok(())
    }

    /// Builds the Kraus channel, validating parameters first.
    pub fn build(&self) -> Result<KrausChannel> {
        self.validate()?;
        let named: Vec<(String, f64)> = self
            .params()
            .into_iter()
            .map(|(n, v)| (n.to_string(), v))
            .collect();
        let kraus = match *self {
            ChannelId::Dephasing { p } => vec![
                identity2().scale((1.0 - p / 2.0).sqrt()),
                pauli_z().scale((p / 2.0).sqrt()),
            ],
            ChannelId::Gad { p1, p2 } => vec![
                real2(1.0, 0.0, 0.0, (1.0 - p2).sqrt()).scale(p1.sqrt()),
                real2(0.0, p2.sqrt(), 0.0, 0.0).scale(p1.sqrt()),
                real2((1.0 - p2).sqrt(), 0.0, 0.0, 1.0).scale((1.0 - p1).sqrt()),
                real2(0.0, 0.0, p2.sqrt(), 0.0).scale((1.0 - p1).sqrt()),
            ],
            ChannelId::Pad1 { p1, p2 } => {
                let rem = (1.0 - p1 - p2).max(0.0);
                vec![
                    real2(1.0, 0.0, 0.0, rem.sqrt()),
                    real2(0.0, p2.sqrt(), 0.0, 0.0),
                    real2(0.0, 0.0, 0.0, -1.0).scale(p1.sqrt()),
                ]
            }
            ChannelId::BitFlip { p } => vec![
                identity2().scale(p.sqrt()),
                pauli_x().scale((1.0 - p).sqrt()),
            ],
            ChannelId::PhaseFlip { p } => vec![
                identity2().scale(p.sqrt()),
                pauli_z().scale((1.0 - p).sqrt()),
            ],
            ChannelId::BitPhaseFlip { p } => vec![
                identity2().scale(p.sqrt()),
                pauli_y().scale((1.0 - p).sqrt()),
            ],
            ChannelId::PhaseDamping { gamma } => vec![
                real2(1.0, 0.0, 0.0, (1.0 - gamma).sqrt()),
                real2(0.0, 0.0, 0.0, gamma.sqrt()),
            ],
            ChannelId::AmplitudeDamping { gamma } => vec![
                real2(1.0, 0.0, 0.0, (1.0 - gamma).sqrt()),
                real2(0.0, gamma.sqrt(), 0.0, 0.0),
            ],
            ChannelId::Depolarizing { p } => vec![
                identity2().scale((1.0 - 3.0 * p / 4.0).sqrt()),
                pauli_x().scale((p / 4.0).sqrt()),
                pauli_y().scale((p / 4.0).sqrt()),
                pauli_z().scale((p / 4.0).sqrt()),
            ],
            ChannelId::Pd2 { g1, g2 } => pd2_kraus(g1, g2),
            ChannelId::Pf2 { p1, p2 } => pf2_kraus(p1, p2),
            ChannelId::Bf2 { p1, p2 } => bf2_kraus(p1, p2),
            ChannelId::Ad2 { g1, g2 } => ad2_kraus(g1, g2),
            ChannelId::Pad2 { g1, g2 } => pad2_kraus(g1, g2),
            ChannelId::Bpf2 { p1, p2 } => bpf2_kraus(p1, p2),
            ChannelId::Dep2 { p1, p2 } => {
                let left = ChannelId::Depolarizing { p: p1 }.build()?;
                let right = ChannelId::Depolarizing { p: p2 }.build()?;
                let t = tensor_channel(&left, &right)?;
                return KrausChannel::new(4, 4, t.kraus().to_vec(), self.tag(), named);
            }
        };
        let dim = self.dim();
        KrausChannel::new(dim, dim, kraus, self.tag(), named)
    }
}

fn real2(a: f64, b: f64, c: f64, d: f64) -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[a, b, c, d]).expect("finite entries")
}

fn real4(rows: [[f64; 4]; 4]) -> ComplexMatrix {
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    ComplexMatrix::from_real(4, 4, &flat).expect("finite entries")
}

/// Phase damping on both qubits.
fn pd2_kraus(g1: f64, g2: f64) -> Vec<ComplexMatrix> {
    let (a1, a2) = ((1.0 - g1).sqrt(), (1.0 - g2).sqrt());
    vec![
        ComplexMatrix::diag_real(&[1.0, a2, a1, a1 * a2]),
        ComplexMatrix::diag_real(&[0.0, g2.sqrt(), 0.0, (g2 * (1.0 - g1)).sqrt()]),
        ComplexMatrix::diag_real(&[0.0, 0.0, g1.sqrt(), (g1 * (1.0 - g2)).sqrt()]),
        ComplexMatrix::diag_real(&[0.0, 0.0, 0.0, (g1 * g2).sqrt()]),
    ]
}

/// Phase flip on both qubits.
fn pf2_kraus(p1: f64, p2: f64) -> Vec<ComplexMatrix> {
    let (q1, q2) = (1.0 - p1, 1.0 - p2);
    vec![
        ComplexMatrix::identity(4).scale((p1 * p2).sqrt()),
        ComplexMatrix::diag_real(&[1.0, -1.0, 1.0, -1.0]).scale((p1 * q2).sqrt()),
        ComplexMatrix::diag_real(&[1.0, 1.0, -1.0, -1.0]).scale((q1 * p2).sqrt()),
        ComplexMatrix::diag_real(&[1.0, -1.0, -1.0, 1.0]).scale((q1 * q2).sqrt()),
    ]
}

/// Bit flip on both qubits.
fn bf2_kraus(p1: f64, p2: f64) -> Vec<ComplexMatrix> {
    let (q1, q2) = (1.0 - p1, 1.0 - p2);
    vec![
        ComplexMatrix::identity(4).scale((p1 * p2).sqrt()),
        real4([
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
        ])
        .scale((p1 * q2).sqrt()),
        real4([
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ])
        .scale((q1 * p2).sqrt()),
        real4([
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
        ])
        .scale((q1 * q2).sqrt()),
    ]
}

/// Amplitude damping on both qubits.
fn ad2_kraus(g1: f64, g2: f64) -> Vec<ComplexMatrix> {
    let (a1, a2) = ((1.0 - g1).sqrt(), (1.0 - g2).sqrt());
    let mut k01 = ComplexMatrix::zeros(4, 4);
    k01[(0, 1)] = Complex64::new(g2.sqrt(), 0.0);
    k01[(2, 3)] = Complex64::new((g2 * (1.0 - g1)).sqrt(), 0.0);
    let mut k10 = ComplexMatrix::zeros(4, 4);
    k10[(0, 2)] = Complex64::new(g1.sqrt(), 0.0);
    k10[(1, 3)] = Complex64::new((g1 * (1.0 - g2)).sqrt(), 0.0);
    let mut k11 = ComplexMatrix::zeros(4, 4);
    k11[(0, 3)] = Complex64::new((g1 * g2).sqrt(), 0.0);
    vec![
        ComplexMatrix::diag_real(&[1.0, a2, a1, a1 * a2]),
        k01,
        k10,
        k11,
    ]
}

/// Phase damping on the first qubit, amplitude damping on the second.
fn pad2_kraus(g1: f64, g2: f64) -> Vec<ComplexMatrix> {
    let (a1, a2) = ((1.0 - g1).sqrt(), (1.0 - g2).sqrt());
    let mut k01 = ComplexMatrix::zeros(4, 4);
    k01[(0, 1)] = Complex64::new(g2.sqrt(), 0.0);
    k01[(2, 3)] = Complex64::new((g2 * (1.0 - g1)).sqrt(), 0.0);
    let k10 = ComplexMatrix::diag_real(&[0.0, 0.0, g1.sqrt(), (g1 * (1.0 - g2)).sqrt()]);
    let mut k11 = ComplexMatrix::zeros(4, 4);
    k11[(2, 3)] = Complex64::new((g1 * g2).sqrt(), 0.0);
    vec![
        ComplexMatrix::diag_real(&[1.0, a2, a1, a1 * a2]),
        k01,
        k10,
        k11,
    ]
}

/// Bit-phase flip on both qubits. The mixed arms carry a global factor of
/// `i` in front of a real matrix (σy on one side), so some entries are
/// purely imaginary even though the channel preserves real states.
fn bpf2_kraus(p1: f64, p2: f64) -> Vec<ComplexMatrix> {
    let (q1, q2) = (1.0 - p1, 1.0 - p2);
    let i = Complex64::new(0.0, 1.0);
    let k01 = real4([
        [0.0, -1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
    .scale_complex(i * (p1 * q2).sqrt());
    let k10 = real4([
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ])
    .scale_complex(i * (q1 * p2).sqrt());
    let k11 = real4([
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ])
    .scale((q1 * q2).sqrt());
    vec![
        ComplexMatrix::identity(4).scale((p1 * p2).sqrt()),
        k01,
        k10,
        k11,
    ]
}

pub mod reference {
    //! Closed-form post-channel matrices for the catalog channels on their
    //! canonical inputs, entered entry by entry — independently of
    //! [`KrausChannel::apply`] — so the two sides of the verification are
    //! genuinely separate computations.
    //!
    //! Single-qubit channels act on the canonical state `ρ_γ(A)`; the
    //! two-qubit flip/damping products act on either the canonical
    //! two-qubit state or on `ρ₊⊗ρ₊`, the maximally imaginary pair.

    use super::*;
    use crate::states::{canonical_state, density_from_pure, CanonicalPattern};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Dephasing on `ρ_γ(A)`: the off-diagonal shrinks by `1 − p`.
    pub fn dephasing_on_canonical(a: f64, p: f64) -> ComplexMatrix {
        let y = (1.0 - a * a).sqrt() / 2.0;
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = c((1.0 + a) / 2.0, 0.0);
        m[(1, 1)] = c((1.0 - a) / 2.0, 0.0);
        m[(0, 1)] = c(0.0, -(1.0 - p) * y);
        m[(1, 0)] = c(0.0, (1.0 - p) * y);
        m
    }

    /// Generalized amplitude damping on `ρ_γ(A)`.
    pub fn gad_on_canonical(a: f64, p1: f64, p2: f64) -> ComplexMatrix {
        let shift = p2 * (2.0 * p1 - 1.0) + a * (1.0 - p2);
        let off = ((1.0 - p2) * (1.0 - a * a)).sqrt() / 2.0;
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = c((1.0 + shift) / 2.0, 0.0);
        m[(1, 1)] = c((1.0 - shift) / 2.0, 0.0);
        m[(0, 1)] = c(0.0, -off);
        m[(1, 0)] = c(0.0, off);
        m
    }

    /// Combined phase and amplitude damping on `ρ_γ(A)`.
    pub fn pad_on_canonical(a: f64, p1: f64, p2: f64) -> ComplexMatrix {
        let off = ((1.0 - p1 - p2).max(0.0) * (1.0 - a * a)).sqrt() / 2.0;
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = c((1.0 + a + p2 * (1.0 - a)) / 2.0, 0.0);
        m[(1, 1)] = c((1.0 - p2) * (1.0 - a) / 2.0, 0.0);
        m[(0, 1)] = c(0.0, -off);
        m[(1, 0)] = c(0.0, off);
        m
    }

    /// Two-qubit bit flip on the canonical `{|00⟩, |11⟩}` state.
    pub fn bf2_on_canonical(a: f64, p1: f64, p2: f64) -> ComplexMatrix {
        let alpha = p1 + p2 - 2.0 * p1 * p2;
        let b = (1.0 - a * a).sqrt() / 2.0;
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(0, 0)] = c((1.0 - alpha + (p1 + p2 - 1.0) * a) / 2.0, 0.0);
        m[(1, 1)] = c((alpha + (p1 - p2) * a) / 2.0, 0.0);
        m[(2, 2)] = c((alpha + (p2 - p1) * a) / 2.0, 0.0);
        m[(3, 3)] = c((1.0 - alpha - (p1 + p2 - 1.0) * a) / 2.0, 0.0);
        m[(0, 3)] = c(0.0, (1.0 - p1 - p2) * b);
        m[(3, 0)] = c(0.0, -(1.0 - p1 - p2) * b);
        m[(1, 2)] = c(0.0, (p2 - p1) * b);
        m[(2, 1)] = c(0.0, (p1 - p2) * b);
        m
    }

    /// Dual-rail amplitude damping — `AD(γ)` on each qubit of the
    /// canonical `{|01⟩, |10⟩}` state.
    pub fn dualrail_on_canonical(a: f64, g: f64) -> ComplexMatrix {
        let off = (1.0 - g) * (1.0 - a * a).sqrt() / 2.0;
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(0, 0)] = c(g, 0.0);
        m[(1, 1)] = c((1.0 - g) * (1.0 + a) / 2.0, 0.0);
        m[(2, 2)] = c((1.0 - g) * (1.0 - a) / 2.0, 0.0);
        m[(1, 2)] = c(0.0, -off);
        m[(2, 1)] = c(0.0, off);
        m
    }

    /// Shared output shape for PD2 / PF2 / BF2 / BPF2 / DEP2 on `ρ₊⊗ρ₊`:
    /// the state stays in the `σy ⊗ σy` family with per-qubit Bloch-y
    /// components `x` and `y`.
    fn y_family(x: f64, y: f64) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4, 4);
        let xy = x * y;
        for d in 0..4 {
            m[(d, d)] = c(0.25, 0.0);
        }
        m[(0, 1)] = c(0.0, -0.25 * y);
        m[(1, 0)] = c(0.0, 0.25 * y);
        m[(2, 3)] = c(0.0, -0.25 * y);
        m[(3, 2)] = c(0.0, 0.25 * y);
        m[(0, 2)] = c(0.0, -0.25 * x);
        m[(2, 0)] = c(0.0, 0.25 * x);
        m[(1, 3)] = c(0.0, -0.25 * x);
        m[(3, 1)] = c(0.0, 0.25 * x);
        m[(0, 3)] = c(-0.25 * xy, 0.0);
        m[(3, 0)] = c(-0.25 * xy, 0.0);
        m[(1, 2)] = c(0.25 * xy, 0.0);
        m[(2, 1)] = c(0.25 * xy, 0.0);
        m
    }

    /// Two-qubit phase damping on `ρ₊⊗ρ₊`.
    pub fn pd2_on_plus2(g1: f64, g2: f64) -> ComplexMatrix {
        y_family((1.0 - g1).sqrt(), (1.0 - g2).sqrt())
    }

    /// Two-qubit phase flip on `ρ₊⊗ρ₊`.
    pub fn pf2_on_plus2(p1: f64, p2: f64) -> ComplexMatrix {
        y_family(2.0 * p1 - 1.0, 2.0 * p2 - 1.0)
    }

    /// Two-qubit bit flip on `ρ₊⊗ρ₊` — identical to the phase-flip output.
    pub fn bf2_on_plus2(p1: f64, p2: f64) -> ComplexMatrix {
        y_family(2.0 * p1 - 1.0, 2.0 * p2 - 1.0)
    }

    /// Two-qubit bit-phase flip fixes `ρ₊⊗ρ₊`.
    pub fn bpf2_on_plus2() -> ComplexMatrix {
        y_family(1.0, 1.0)
    }

    /// Two-qubit depolarizing on `ρ₊⊗ρ₊`.
    pub fn dep2_on_plus2(p1: f64, p2: f64) -> ComplexMatrix {
        y_family(1.0 - p1, 1.0 - p2)
    }

    /// Two-qubit amplitude damping on `ρ₊⊗ρ₊`.
    pub fn ad2_on_plus2(g1: f64, g2: f64) -> ComplexMatrix {
        let (a1, a2) = ((1.0 - g1).sqrt(), (1.0 - g2).sqrt());
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(0, 0)] = c((1.0 + g1) * (1.0 + g2) / 4.0, 0.0);
        m[(1, 1)] = c((1.0 + g1) * (1.0 - g2) / 4.0, 0.0);
        m[(2, 2)] = c((1.0 - g1) * (1.0 + g2) / 4.0, 0.0);
        m[(3, 3)] = c((1.0 - g1) * (1.0 - g2) / 4.0, 0.0);
        m[(0, 1)] = c(0.0, -(1.0 + g1) * a2 / 4.0);
        m[(1, 0)] = c(0.0, (1.0 + g1) * a2 / 4.0);
        m[(0, 2)] = c(0.0, -(1.0 + g2) * a1 / 4.0);
        m[(2, 0)] = c(0.0, (1.0 + g2) * a1 / 4.0);
        m[(0, 3)] = c(-a1 * a2 / 4.0, 0.0);
        m[(3, 0)] = c(-a1 * a2 / 4.0, 0.0);
        m[(1, 2)] = c(a1 * a2 / 4.0, 0.0);
        m[(2, 1)] = c(a1 * a2 / 4.0, 0.0);
        m[(1, 3)] = c(0.0, -(1.0 - g2) * a1 / 4.0);
        m[(3, 1)] = c(0.0, (1.0 - g2) * a1 / 4.0);
        m[(2, 3)] = c(0.0, -(1.0 - g1) * a2 / 4.0);
        m[(3, 2)] = c(0.0, (1.0 - g1) * a2 / 4.0);
        m
    }

    /// Phase damping ⊗ amplitude damping on `ρ₊⊗ρ₊`.
    pub fn pad2_on_plus2(g1: f64, g2: f64) -> ComplexMatrix {
        let (a1, a2) = ((1.0 - g1).sqrt(), (1.0 - g2).sqrt());
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(0, 0)] = c((1.0 + g2) / 4.0, 0.0);
        m[(1, 1)] = c((1.0 - g2) / 4.0, 0.0);
        m[(2, 2)] = c((1.0 + g2) / 4.0, 0.0);
        m[(3, 3)] = c((1.0 - g2) / 4.0, 0.0);
        m[(0, 1)] = c(0.0, -a2 / 4.0);
        m[(1, 0)] = c(0.0, a2 / 4.0);
        m[(2, 3)] = c(0.0, -a2 / 4.0);
        m[(3, 2)] = c(0.0, a2 / 4.0);
        m[(0, 2)] = c(0.0, -(1.0 + g2) * a1 / 4.0);
        m[(2, 0)] = c(0.0, (1.0 + g2) * a1 / 4.0);
        m[(1, 3)] = c(0.0, -(1.0 - g2) * a1 / 4.0);
        m[(3, 1)] = c(0.0, (1.0 - g2) * a1 / 4.0);
        m[(0, 3)] = c(-a1 * a2 / 4.0, 0.0);
        m[(3, 0)] = c(-a1 * a2 / 4.0, 0.0);
        m[(1, 2)] = c(a1 * a2 / 4.0, 0.0);
        m[(2, 1)] = c(a1 * a2 / 4.0, 0.0);
        m
    }

    /// One reference-matrix comparison: the channel was applied at `points`
    /// random parameter draws and the worst entrywise deviation from the
    /// closed-form output recorded.
    #[derive(Clone, Debug)]
    pub struct MatrixCheck {
        pub name: &'static str,
        pub points: usize,
        pub max_dev: f64,
    }

    /// Runs every reference-matrix comparison at `points` seeded random
    /// parameter draws each.
    pub fn verify_channel_matrices(points: usize, seed: u64) -> Result<Vec<MatrixCheck>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();

        let canonical_density = |a: f64, pattern: CanonicalPattern| -> Result<DensityOperator> {
            Ok(density_from_pure(&canonical_state(a, pattern)?))
        };

        macro_rules! check {
            ($name:expr, $points:expr, $body:expr) => {{
                let mut max_dev = 0.0f64;
                for _ in 0..$points {
                    let dev: f64 = $body(&mut rng)?;
                    max_dev = max_dev.max(dev);
                }
                out.push(MatrixCheck {
                    name: $name,
                    points: $points,
                    max_dev,
                });
            }};
        }

        check!(
            "dephasing on canonical qubit",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (a, p) = (rng.gen::<f64>(), rng.gen::<f64>());
                let rho = canonical_density(a, CanonicalPattern::Qubit01)?;
                let got = ChannelId::Dephasing { p }.build()?.apply(&rho)?;
                Ok(got.matrix().max_abs_diff(&dephasing_on_canonical(a, p)))
            }
        );
        check!(
            "gad on canonical qubit",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (a, p1, p2) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>());
                let rho = canonical_density(a, CanonicalPattern::Qubit01)?;
                let got = ChannelId::Gad { p1, p2 }.build()?.apply(&rho)?;
                Ok(got.matrix().max_abs_diff(&gad_on_canonical(a, p1, p2)))
            }
        );
        check!(
            "pad on canonical qubit",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (a, p1) = (rng.gen::<f64>(), rng.gen::<f64>());
                let p2 = rng.gen::<f64>() * (1.0 - p1);
                let rho = canonical_density(a, CanonicalPattern::Qubit01)?;
                let got = ChannelId::Pad1 { p1, p2 }.build()?.apply(&rho)?;
                Ok(got.matrix().max_abs_diff(&pad_on_canonical(a, p1, p2)))
            }
        );
        check!(
            "bf2 on canonical pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (a, p1, p2) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>());
                let rho = canonical_density(a, CanonicalPattern::TwoQubit00_11)?;
                let got = ChannelId::Bf2 { p1, p2 }.build()?.apply(&rho)?;
                Ok(got.matrix().max_abs_diff(&bf2_on_canonical(a, p1, p2)))
            }
        );
        check!(
            "dual-rail ad on canonical pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (a, g) = (rng.gen::<f64>(), rng.gen::<f64>());
                let rho = canonical_density(a, CanonicalPattern::TwoQubit01_10)?;
                let got = ChannelId::Ad2 { g1: g, g2: g }.build()?.apply(&rho)?;
                Ok(got.matrix().max_abs_diff(&dualrail_on_canonical(a, g)))
            }
        );

        let plus2 = crate::states::maximal_imaginary_state(2, crate::states::Sign::Plus)?;
        check!(
            "pd2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (g1, g2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Pd2 { g1, g2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&pd2_on_plus2(g1, g2)))
            }
        );
        check!(
            "pf2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (p1, p2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Pf2 { p1, p2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&pf2_on_plus2(p1, p2)))
            }
        );
        check!(
            "bf2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (p1, p2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Bf2 { p1, p2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&bf2_on_plus2(p1, p2)))
            }
        );
        check!(
            "ad2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (g1, g2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Ad2 { g1, g2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&ad2_on_plus2(g1, g2)))
            }
        );
        check!(
            "pad2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (g1, g2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Pad2 { g1, g2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&pad2_on_plus2(g1, g2)))
            }
        );
        check!(
            "bpf2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (p1, p2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Bpf2 { p1, p2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&bpf2_on_plus2()))
            }
        );
        check!(
            "dep2 on plus pair",
            points,
            |rng: &mut ChaCha8Rng| -> Result<f64> {
                let (p1, p2) = (rng.gen::<f64>(), rng.gen::<f64>());
                let got = ChannelId::Dep2 { p1, p2 }.build()?.apply(&plus2)?;
                Ok(got.matrix().max_abs_diff(&dep2_on_plus2(p1, p2)))
            }
        );

        Ok(out)
    }
}
