use std::collections::HashMap;

use num_complex::Complex64;

use super::gate::{BellOutcome, Gate, MeasurementBasis};
use super::statevector::{QubitId, Statevector};
use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// A trial's quantum memory: a pool of statevector registers addressed by
/// qubit id. Entanglement across registers is created by merging them when a
/// two-qubit gate or Bell measurement spans register boundaries, so parties
/// can hold and exchange qubit ids without caring where the amplitudes live.
#[derive(Debug, Default)]
pub struct QuantumMemory {
    regs: Vec<Option<Statevector>>,
    loc: HashMap<QubitId, usize>,
    next_id: u32,
}

impl QuantumMemory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, q: QubitId) -> bool {
        self.loc.contains_key(&q)
    }

    pub fn qubit_count(&self) -> usize {
        self.loc.len()
    }

    fn fresh_id(&mut self) -> QubitId {
        let id = QubitId(self.next_id);
        self.next_id += 1;
        id
    }

    fn reg_of(&self, q: QubitId) -> Result<usize> {
        self.loc.get(&q).copied().ok_or(Error::UnknownQubit(q.0))
    }

    fn store(&mut self, sv: Statevector) -> usize {
        for (i, slot) in self.regs.iter_mut().enumerate() {
            if slot.is_none() {
                *slot = Some(sv);
                return i;
            }
        }
        self.regs.push(Some(sv));
        self.regs.len() - 1
    }

    /// Add a fresh single qubit `a0|0⟩ + a1|1⟩` and return its id.
    pub fn insert_single(&mut self, a0: Complex64, a1: Complex64) -> Result<QubitId> {
        let id = self.fresh_id();
        let sv = Statevector::single(id, a0, a1)?;
        let slot = self.store(sv);
        self.loc.insert(id, slot);
        Ok(id)
    }

    /// Adopt a whole register, relabeling its qubits with fresh ids.
    /// Returns the new ids in register-position order.
    pub fn insert_state(&mut self, mut sv: Statevector) -> Vec<QubitId> {
        let ids: Vec<QubitId> = (0..sv.num_qubits()).map(|_| self.fresh_id()).collect();
        sv.relabel(&ids);
        let slot = self.store(sv);
        for &id in &ids {
            self.loc.insert(id, slot);
        }
        ids
    }

    /// Merge the registers holding `a` and `b` (no-op if already joint).
    fn entangle_slot(&mut self, a: QubitId, b: QubitId) -> Result<usize> {
        let ra = self.reg_of(a)?;
        let rb = self.reg_of(b)?;
        if ra == rb {
            return Ok(ra);
        }
        let sa = self.regs[ra].take().expect("occupied register");
        let sb = self.regs[rb].take().expect("occupied register");
        let joint = sa.tensor(&sb)?;
        for q in joint.qubit_order() {
            self.loc.insert(*q, ra);
        }
        self.regs[ra] = Some(joint);
        Ok(ra)
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        let targets = gate.targets();
        let slot = if targets.len() == 2 {
            self.entangle_slot(targets[0], targets[1])?
        } else {
            self.reg_of(targets[0])?
        };
        self.regs[slot].as_mut().expect("occupied register").apply(gate)
    }

    /// Measure and discard one qubit.
    pub fn measure(&mut self, q: QubitId, basis: MeasurementBasis, rng: &mut RngStream) -> Result<u8> {
        let slot = self.reg_of(q)?;
        let reg = self.regs[slot].as_mut().expect("occupied register");
        let bit = reg.measure(q, basis, rng)?;
        self.loc.remove(&q);
        if reg.num_qubits() == 0 {
            self.regs[slot] = None;
        }
        Ok(bit)
    }

    /// Bell-basis measurement on a pair; both qubits are discarded.
    pub fn measure_bell(&mut self, q1: QubitId, q2: QubitId, rng: &mut RngStream) -> Result<BellOutcome> {
        if q1 == q2 {
            return Err(Error::DuplicateTarget(q1.0));
        }
        let slot = self.entangle_slot(q1, q2)?;
        let reg = self.regs[slot].as_mut().expect("occupied register");
        let outcome = reg.measure_bell(q1, q2, rng)?;
        self.loc.remove(&q1);
        self.loc.remove(&q2);
        if reg.num_qubits() == 0 {
            self.regs[slot] = None;
        }
        Ok(outcome)
    }

    /// Discard a qubit without reading it (traces it out of its register).
    pub fn discard(&mut self, q: QubitId, rng: &mut RngStream) -> Result<()> {
        // Measuring in Z and ignoring the bit realizes the partial trace on
        // any single Born-rule trajectory.
        self.measure(q, MeasurementBasis::Z, rng).map(|_| ())
    }

    /// Joint reduced density matrix of a qubit subset (read-only; merges
    /// copies of the involved registers as needed).
    pub fn reduced_density(&self, subset: &[QubitId]) -> Result<DensityMatrix> {
        if subset.is_empty() {
            return Err(Error::invalid("empty qubit subset"));
        }
        let mut slots: Vec<usize> = subset
            .iter()
            .map(|q| self.reg_of(*q))
            .collect::<Result<_>>()?;
        slots.sort_unstable();
        slots.dedup();
        let mut joint: Option<Statevector> = None;
        for s in slots {
            let reg = self.regs[s].as_ref().expect("occupied register");
            joint = Some(match joint {
                None => reg.clone(),
                Some(j) => j.tensor(reg)?,
            });
        }
        joint.expect("at least one register").reduced_density(subset)
    }

    /// Clone of the register currently holding `q` (test/introspection aid).
    pub fn register_snapshot(&self, q: QubitId) -> Result<Statevector> {
        Ok(self.regs[self.reg_of(q)?].as_ref().expect("occupied register").clone())
    }
}
