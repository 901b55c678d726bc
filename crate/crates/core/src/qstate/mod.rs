//! Exact pure-state simulation of small qubit registers.
//!
//! [`Statevector`] is the single source of quantum truth: an ordered list of
//! `2^n` complex amplitudes over named qubits. The index convention is
//! big-endian — the first qubit in the register order is the most significant
//! bit of the amplitude index — and it is used everywhere in this crate.
//!
//! Measured qubits are removed from the register: the protocols never reuse
//! a measured qubit, and shrinking registers keep graph-state runs within
//! `2^16` amplitudes. Registers are capped at [`MAX_QUBITS`] qubits.
//!
//! [`QuantumMemory`] layers a custody model on top: qubits are referenced by
//! id, entanglement is tracked by merging registers on demand, and parties
//! exchange ids rather than amplitudes.

mod density;
mod gate;
mod memory;
mod statevector;

pub use density::DensityMatrix;
pub use gate::{reduce_angle, BellOutcome, Gate, MeasurementBasis};
pub use memory::QuantumMemory;
pub use statevector::{QubitId, Statevector, MAX_QUBITS};

/// Tolerance for algebraic identities (norms, unitarity, hermiticity).
pub const ALG_TOL: f64 = 1e-10;
