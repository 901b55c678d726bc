use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use super::statevector::QubitId;
use crate::error::{Error, Result};

/// Reduce an angle to `[0, 2π)`.
pub fn reduce_angle(a: f64) -> f64 {
    let r = a.rem_euclid(2.0 * PI);
    // rem_euclid can return exactly 2π for tiny negative inputs
    if r >= 2.0 * PI {
        0.0
    } else {
        r
    }
}

/// A gate applied to named qubits. `T` is the π/8 gate `diag(1, e^{iπ/4})`,
/// the fourth root of Z; `Rz(θ)` is `diag(1, e^{iθ})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H(QubitId),
    X(QubitId),
    Z(QubitId),
    T(QubitId),
    Rz(QubitId, f64),
    Cz(QubitId, QubitId),
}

impl Gate {
    pub fn targets(&self) -> Vec<QubitId> {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Z(q) | Gate::T(q) | Gate::Rz(q, _) => vec![q],
            Gate::Cz(a, b) => vec![a, b],
        }
    }

    /// 2x2 matrix of a single-qubit kind (row-major); `None` for `Cz`.
    fn single_matrix(&self) -> Option<[[Complex64; 2]; 2]> {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        match *self {
            Gate::H(_) => Some([[s, s], [s, -s]]),
            Gate::X(_) => Some([[o, l], [l, o]]),
            Gate::Z(_) => Some([[l, o], [o, -l]]),
            Gate::T(_) => Some([[l, o], [o, Complex64::from_polar(1.0, FRAC_PI_4)]]),
            Gate::Rz(_, a) => Some([[l, o], [o, Complex64::from_polar(1.0, a)]]),
            Gate::Cz(_, _) => None,
        }
    }

    /// Check `G†G = I` for this gate within `tol`.
    pub fn unitarity_error(&self) -> f64 {
        match self.single_matrix() {
            Some(m) => {
                let mut worst: f64 = 0.0;
                for i in 0..2 {
                    for j in 0..2 {
                        // (G†G)[i][j] = Σ_k conj(m[k][i]) m[k][j]
                        let mut acc = Complex64::new(0.0, 0.0);
                        for k in 0..2 {
                            acc += m[k][i].conj() * m[k][j];
                        }
                        let expect = if i == j { 1.0 } else { 0.0 };
                        worst = worst.max((acc - expect).norm());
                    }
                }
                worst
            }
            // CZ is diagonal ±1: unitary by construction.
            None => 0.0,
        }
    }

    /// Verify unitarity of every gate kind (Rz sampled at the eight
    /// protocol angles). Intended to run once at startup or in tests.
    pub fn verify_all_kinds() -> Result<()> {
        let q = QubitId(0);
        let r = QubitId(1);
        let mut kinds = vec![Gate::H(q), Gate::X(q), Gate::Z(q), Gate::T(q), Gate::Cz(q, r)];
        for k in 0..8 {
            kinds.push(Gate::Rz(q, f64::from(k) * FRAC_PI_4));
        }
        for g in kinds {
            let err = g.unitarity_error();
            if err > super::ALG_TOL {
                return Err(Error::invalid(format!("gate {g:?} not unitary (error {err:e})")));
            }
        }
        Ok(())
    }
}

/// A single-qubit measurement basis. `Planar(δ)` is `{(|0⟩ ± e^{iδ}|1⟩)/√2}`
/// with outcome 0 on the `+` branch; `X` is `Planar(0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasurementBasis {
    Z,
    X,
    Planar(f64),
}

impl MeasurementBasis {
    /// Planar basis with the angle reduced to `[0, 2π)`.
    pub fn planar(angle: f64) -> Self {
        MeasurementBasis::Planar(reduce_angle(angle))
    }
}

/// Outcome of a two-qubit Bell-basis measurement. The two-bit protocol
/// encoding is Φ+ → 00, Ψ+ → 01, Φ− → 10, Ψ− → 11.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellOutcome {
    PhiPlus,
    PsiPlus,
    PhiMinus,
    PsiMinus,
}

impl BellOutcome {
    pub const ALL: [BellOutcome; 4] = [
        BellOutcome::PhiPlus,
        BellOutcome::PsiPlus,
        BellOutcome::PhiMinus,
        BellOutcome::PsiMinus,
    ];

    pub fn from_bits(b1: u8, b2: u8) -> Self {
        match (b1 & 1, b2 & 1) {
            (0, 0) => BellOutcome::PhiPlus,
            (0, 1) => BellOutcome::PsiPlus,
            (1, 0) => BellOutcome::PhiMinus,
            (1, 1) => BellOutcome::PsiMinus,
            _ => unreachable!(),
        }
    }

    pub fn code(self) -> u8 {
        match self {
            BellOutcome::PhiPlus => 0b00,
            BellOutcome::PsiPlus => 0b01,
            BellOutcome::PhiMinus => 0b10,
            BellOutcome::PsiMinus => 0b11,
        }
    }

    /// `(first, second)` bits of [`Self::code`].
    pub fn bits(self) -> (u8, u8) {
        (self.code() >> 1, self.code() & 1)
    }
}

impl std::fmt::Display for BellOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BellOutcome::PhiPlus => "phi+",
            BellOutcome::PsiPlus => "psi+",
            BellOutcome::PhiMinus => "phi-",
            BellOutcome::PsiMinus => "psi-",
        };
        f.write_str(s)
    }
}
