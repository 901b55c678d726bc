//! Simulation engine for multi-party verifiable blind quantum computation
//! (VBQC) protocols over a small quantum network.
//!
//! The crate is organized in layers:
//!
//! - [`qstate`]: exact statevector simulation of small qubit registers
//!   (gates, projective and Bell measurements, density-matrix utilities).
//! - [`primitives`]: protocol-level building blocks — BB84 and rotated-state
//!   preparation, the four non-orthogonal entangled states, graph states,
//!   stabilizer tests, and gate-only state synthesis.
//! - [`netsim`]: parties, quantum/classical channels with interception hooks,
//!   decoy-state eavesdropping detection, and FIFO dispatch.
//! - [`adversary`]: the attack strategy library (insiders and outsiders).
//! - [`registration`], [`authentication`], [`vbqc`]: the three protocol
//!   phases — key establishment through a certificate authority's Bell
//!   measurements, mutual identity authentication, and verified blind
//!   delegated computation (stabilizer-test and trap-based variants).
//! - [`harness`]: scenario configuration, seeded Monte Carlo trial
//!   execution, and report aggregation/emission.

pub mod adversary;
pub mod authentication;
pub mod error;
pub mod harness;
pub mod netsim;
pub mod primitives;
pub mod qstate;
pub mod registration;
pub mod rng;
pub mod vbqc;

pub use error::Error;
pub use rng::RngStream;
