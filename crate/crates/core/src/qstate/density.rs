use nalgebra::DMatrix;
use num_complex::Complex64;

use super::statevector::Statevector;
use super::ALG_TOL;
use crate::error::{Error, Result};

/// A density matrix over a `k`-qubit subsystem.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub(crate) fn from_matrix(mat: DMatrix<Complex64>) -> Result<Self> {
        let dim = mat.nrows();
        if dim == 0 || !dim.is_power_of_two() || mat.ncols() != dim {
            return Err(Error::Dimension { left: mat.nrows(), right: mat.ncols() });
        }
        Ok(DensityMatrix { mat })
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn from_pure(state: &Statevector) -> Self {
        let amps = state.amplitudes();
        let dim = amps.len();
        let mut mat = DMatrix::zeros(dim, dim);
        for (i, a) in amps.iter().enumerate() {
            for (j, b) in amps.iter().enumerate() {
                mat[(i, j)] = a * b.conj();
            }
        }
        DensityMatrix { mat }
    }

    /// Weighted mixture of pure states (weights are normalized).
    pub fn mixture(parts: &[(f64, &Statevector)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("empty mixture"));
        }
        let dim = parts[0].1.amplitudes().len();
        let total: f64 = parts.iter().map(|(w, _)| w).sum();
        if total <= 0.0 {
            return Err(Error::invalid("mixture weights must be positive"));
        }
        let mut mat = DMatrix::zeros(dim, dim);
        for (w, sv) in parts {
            if sv.amplitudes().len() != dim {
                return Err(Error::Dimension { left: sv.amplitudes().len(), right: dim });
            }
            let part = Self::from_pure(sv).mat * Complex64::new(w / total, 0.0);
            mat += part;
        }
        Ok(DensityMatrix { mat })
    }

    /// `I / 2^k` on `k` qubits.
    pub fn maximally_mixed(k: usize) -> Self {
        let dim = 1usize << k;
        let mat =
            DMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0);
        DensityMatrix { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.mat[(row, col)]
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    /// `Tr(ρ²)`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        (&self.mat * &self.mat).trace().re
    }

    /// `⟨target|ρ|target⟩`.
    pub fn fidelity(&self, target: &Statevector) -> Result<f64> {
        let amps = target.amplitudes();
        if amps.len() != self.dim() {
            return Err(Error::Dimension { left: amps.len(), right: self.dim() });
        }
        let mut acc = Complex64::ZERO;
        for (i, a) in amps.iter().enumerate() {
            for (j, b) in amps.iter().enumerate() {
                acc += a.conj() * self.mat[(i, j)] * b;
            }
        }
        Ok(acc.re)
    }

    pub fn max_hermiticity_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                worst = worst.max((self.mat[(i, j)] - self.mat[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.mat
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .fold(f64::INFINITY, |m, &e| m.min(e))
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        assert_eq!(self.dim(), other.dim());
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                worst = worst.max((self.mat[(i, j)] - other.mat[(i, j)]).norm());
            }
        }
        worst
    }

    /// Check the density-matrix invariants: hermitian, unit trace,
    /// no eigenvalue below `-1e-9`.
    pub fn validate(&self) -> Result<()> {
        let herm = self.max_hermiticity_error();
        if herm > ALG_TOL {
            return Err(Error::invalid(format!("not hermitian (error {herm:e})")));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > ALG_TOL || tr.im.abs() > ALG_TOL {
            return Err(Error::invalid(format!("trace {tr} != 1")));
        }
        let min = self.min_eigenvalue();
        if min < -1e-9 {
            return Err(Error::invalid(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }
}
