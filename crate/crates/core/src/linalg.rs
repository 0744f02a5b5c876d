//! Dense complex matrices and the small amount of numerical linear algebra
//! the crate needs: a cyclic Jacobi eigensolver for Hermitian matrices,
//! trace norm, and von Neumann entropy in bits.
//!
//! Everything here targets matrices up to 4×4 (one and two qubits), so the
//! representation is a plain row-major `Vec<Complex64>` and the algorithms
//! favor robustness and auditability over asymptotic cleverness.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Dense complex matrix, row-major.
///
/// Arithmetic helpers (`add`, `sub`, `mul`, `scale`) panic on dimension
/// mismatch: shapes in this crate are static (2 or 4), so a mismatch is a
/// programming error, not an input error. Input validation happens in
/// [`ComplexMatrix::new`], which rejects non-finite entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major data, rejecting NaN/Inf entries and
    /// length mismatches.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                left: rows * cols,
                right: data.len(),
            });
        }
        for (k, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry {
                    row: k / cols,
                    col: k % cols,
                });
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a square matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            data.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// Diagonal matrix from real entries.
    pub fn diag_real(entries: &[f64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(entries[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Matrix sum. Panics on shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Matrix difference. Panics on shape mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Matrix product. Panics on inner-dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Scales by a real factor.
    pub fn scale(&self, factor: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Scales by a complex factor.
    pub fn scale_complex(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Trace (sum of diagonal entries). Panics on non-square input.
    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Real part in the transpose sense: `(M + Mᵀ)/2` with imaginary parts
    /// of the symmetrized entries dropped. For a Hermitian matrix this is
    /// the entrywise real part, which is itself real symmetric.
    pub fn real_part(&self) -> Result<Self> {
        self.require_square()?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            Complex64::new((self[(i, j)].re + self[(j, i)].re) / 2.0, 0.0)
        }))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        Self::from_fn(ra * rb, ca * cb, |i, j| {
            self[(i / rb, j / cb)] * other[(i % rb, j % cb)]
        })
    }

    /// Largest entrywise deviation from Hermitian symmetry,
    /// `max_ij |m_ij − conj(m_ji)|`. Panics on non-square input.
    pub fn hermiticity_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Largest entrywise absolute difference between two matrices.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest absolute imaginary part over all entries.
    pub fn max_imag_abs(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// 2×2 identity.
pub fn identity2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

/// Pauli X.
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).expect("static entries")
}

/// Pauli Y.
pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::new(
        2,
        2,
        vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ],
    )
    .expect("static entries")
}

/// Pauli Z.
pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).expect("static entries")
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Invariants: `eigenvalues` is sorted descending; the k-th column of
/// `eigenvectors` is the unit eigenvector for `eigenvalues[k]`; the columns
/// are orthonormal and `V diag(λ) V†` reconstructs the input.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl Spectrum {
    /// Rebuilds `V diag(λ) V†`; useful for residual checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut vd = v.clone();
        for j in 0..n {
            for i in 0..n {
                vd[(i, j)] *= self.eigenvalues[j];
            }
        }
        vd.mul(&v.adjoint())
    }
}

/// Off-diagonal Frobenius norm, the Jacobi convergence functional.
fn offdiag_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[(p, q)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a Hermitian matrix with cyclic Jacobi rotations.
///
/// `tol` bounds the acceptable Hermiticity defect of the input (entrywise
/// `|m_ij − conj(m_ji)|`); the matrix is explicitly symmetrized before
/// iterating so the rotations see an exactly Hermitian operand. Sweeps stop
/// once the off-diagonal Frobenius norm falls below 1e-14, with a hard cap
/// of 100 sweeps (a 4×4 typically needs fewer than six).
pub fn eig_hermitian(m: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    let n = m.require_square()?;
    let defect = m.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian { defect, tol });
    }
    if n == 1 {
        return Ok(Spectrum {
            eigenvalues: vec![m[(0, 0)].re],
            eigenvectors: ComplexMatrix::identity(1),
        });
    }

    // Exact Hermitian symmetrization; keeps the diagonal real from the start.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) / 2.0);
    let mut v = ComplexMatrix::identity(n);

    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < tol::JACOBI_MAX_SWEEPS {
        if offdiag_norm(&a) <= tol::JACOBI_OFFDIAG {
            converged = true;
            break;
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let absb = apq.norm();
                if absb == 0.0 {
                    continue;
                }
                // Complex plane rotation zeroing a_pq: with the block
                // [[α, β], [β̄, δ]], β = |β| e^{iφ}, pick tan θ as the
                // smaller root of t² + 2ζt − 1 = 0, ζ = (α − δ)/(2|β|).
                let alpha = a[(p, p)].re;
                let delta = a[(q, q)].re;
                let phase = apq / absb;
                let zeta = (alpha - delta) / (2.0 * absb);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (zeta * zeta + 1.0).sqrt())
                } else {
                    -1.0 / (-zeta + (zeta * zeta + 1.0).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let se_pos = phase * s; // s·e^{iφ}
                let se_neg = phase.conj() * s; // s·e^{−iφ}

                // A ← U† A (rows p and q change).
                for r in 0..n {
                    let arp = a[(p, r)];
                    let arq = a[(q, r)];
                    a[(p, r)] = arp * c + arq * se_pos;
                    a[(q, r)] = -arp * se_neg + arq * c;
                }
                // A ← A U and V ← V U (columns p and q change).
                for r in 0..n {
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    a[(r, p)] = arp * c + arq * se_neg;
                    a[(r, q)] = -arp * se_pos + arq * c;

                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp * c + vrq * se_neg;
                    v[(r, q)] = -vrp * se_pos + vrq * c;
                }
            }
        }
    }
    if !converged && offdiag_norm(&a) > tol::JACOBI_OFFDIAG {
        return Err(Error::NoConvergence {
            sweeps,
            off: offdiag_norm(&a),
        });
    }

    // Sort eigenvalues descending, carrying eigenvector columns along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .re
            .partial_cmp(&a[(i, i)].re)
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);

    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Trace norm `‖M‖₁ = Tr √(M†M)`.
///
/// For Hermitian input (detected at the structural tolerance) this is
/// `Σ|λᵢ|` computed directly from the spectrum, which avoids the precision
/// loss of square-rooting near-zero singular values of `M†M`. The general
/// path forms `M†M` and sums the square roots of its (clamped) eigenvalues.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    m.require_square()?;
    if m.hermiticity_defect() <= tol::STRUCTURAL {
        let spec = eig_hermitian(m, tol::STRUCTURAL)?;
        return Ok(spec.eigenvalues.iter().map(|l| l.abs()).sum());
    }
    let h = m.adjoint().mul(m);
    let spec = eig_hermitian(&h, tol::STRUCTURAL)?;
    let mut sum = 0.0;
    for &l in &spec.eigenvalues {
        if l < -tol::NEG_EIG {
            return Err(Error::NegativeEigenvalue { value: l });
        }
        sum += l.max(0.0).sqrt();
    }
    Ok(sum)
}

/// Von Neumann entropy `S(M) = −Σ λᵢ log₂ λᵢ` in bits.
///
/// Expects a Hermitian, positive semidefinite matrix (density operators and
/// their real parts). Eigenvalues in `[-1e-9, 0)` are clamped to zero;
/// anything more negative is an error. Eigenvalues below 1e-12 contribute
/// zero, the `0·log 0 = 0` convention.
pub fn von_neumann_entropy(m: &ComplexMatrix) -> Result<f64> {
    let spec = eig_hermitian(m, tol::STRUCTURAL)?;
    let mut s = 0.0;
    for &l in &spec.eigenvalues {
        if l < -tol::NEG_EIG {
            return Err(Error::NegativeEigenvalue { value: l });
        }
        if l > tol::ENTROPY_CLAMP {
            s -= l * l.log2();
        }
    }
    Ok(s)
}
