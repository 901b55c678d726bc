use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gate::{BellOutcome, Gate, MeasurementBasis};
use super::ALG_TOL;
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Hard cap on register width; every scenario in the default suite stays
/// at or below 16 qubits.
pub const MAX_QUBITS: usize = 20;

/// A named qubit. Ids are unique within a trial's quantum memory; the
/// standalone constructors below number qubits `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitId(pub u32);

/// An exact pure state over an ordered qubit register (big-endian: the
/// first qubit in the order is the most significant amplitude-index bit).
#[derive(Debug, Clone)]
pub struct Statevector {
    amps: Vec<Complex64>,
    order: Vec<QubitId>,
}

impl Statevector {
    /// The computational-basis state `|initial⟩` on qubits `0..n`.
    pub fn alloc(n: usize, initial: &str) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Capacity { requested: n, max: MAX_QUBITS });
        }
        if initial.len() != n || initial.bytes().any(|b| b != b'0' && b != b'1') {
            return Err(Error::invalid(format!(
                "initial bitstring {initial:?} does not describe {n} qubits"
            )));
        }
        let mut index = 0usize;
        for b in initial.bytes() {
            index = (index << 1) | usize::from(b == b'1');
        }
        let mut amps = vec![Complex64::ZERO; 1 << n];
        amps[index] = Complex64::ONE;
        Ok(Statevector { amps, order: (0..n as u32).map(QubitId).collect() })
    }

    /// A single qubit `a0|0⟩ + a1|1⟩`; amplitudes are normalized.
    pub fn single(q: QubitId, a0: Complex64, a1: Complex64) -> Result<Self> {
        let norm = (a0.norm_sqr() + a1.norm_sqr()).sqrt();
        if norm < 1e-12 {
            return Err(Error::invalid("zero-norm single-qubit state"));
        }
        Ok(Statevector { amps: vec![a0 / norm, a1 / norm], order: vec![q] })
    }

    /// Build from raw amplitudes over an explicit qubit order.
    pub fn from_amplitudes(order: Vec<QubitId>, amps: Vec<Complex64>) -> Result<Self> {
        let n = order.len();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Capacity { requested: n, max: MAX_QUBITS });
        }
        if amps.len() != 1 << n {
            return Err(Error::Dimension { left: amps.len(), right: 1 << n });
        }
        let mut seen = order.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return Err(Error::invalid("duplicate qubit ids in register order"));
        }
        let sv = Statevector { amps, order };
        let norm = sv.norm();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::invalid(format!("state not normalized (norm {norm})")));
        }
        Ok(sv)
    }

    pub fn num_qubits(&self) -> usize {
        self.order.len()
    }

    pub fn qubit_order(&self) -> &[QubitId] {
        &self.order
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn contains(&self, q: QubitId) -> bool {
        self.order.contains(&q)
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn position(&self, q: QubitId) -> Result<usize> {
        self.order.iter().position(|&x| x == q).ok_or(Error::UnknownQubit(q.0))
    }

    /// Amplitude-index bit of the qubit at register position `pos`.
    fn bitpos(&self, pos: usize) -> usize {
        self.order.len() - 1 - pos
    }

    /// Relabel the register's qubit ids in place (positional, same length).
    pub(crate) fn relabel(&mut self, new_ids: &[QubitId]) {
        assert_eq!(new_ids.len(), self.order.len());
        self.order.copy_from_slice(new_ids);
    }

    /// Tensor product; `self`'s qubits become the high-order bits.
    pub fn tensor(&self, other: &Statevector) -> Result<Statevector> {
        let n = self.num_qubits() + other.num_qubits();
        if n > MAX_QUBITS {
            return Err(Error::Capacity { requested: n, max: MAX_QUBITS });
        }
        if self.order.iter().any(|q| other.contains(*q)) {
            return Err(Error::invalid("tensor operands share qubit ids"));
        }
        let mut amps = Vec::with_capacity(1 << n);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        let mut order = self.order.clone();
        order.extend_from_slice(&other.order);
        Ok(Statevector { amps, order })
    }

    /// Inner product `⟨self|other⟩`; registers must have identical order.
    pub fn inner(&self, other: &Statevector) -> Result<Complex64> {
        if self.order != other.order {
            return Err(Error::Dimension { left: self.amps.len(), right: other.amps.len() });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨target|self⟩|²`.
    pub fn fidelity(&self, target: &Statevector) -> Result<f64> {
        Ok(target.inner(self)?.norm_sqr())
    }

    /// A copy with register positions permuted to `new_order` (same id set).
    pub fn reordered(&self, new_order: &[QubitId]) -> Result<Statevector> {
        let n = self.num_qubits();
        if new_order.len() != n {
            return Err(Error::Dimension { left: new_order.len(), right: n });
        }
        // old position of each new-order slot
        let mut perm = Vec::with_capacity(n);
        for q in new_order {
            perm.push(self.position(*q)?);
        }
        let mut amps = vec![Complex64::ZERO; self.amps.len()];
        for (i, amp) in self.amps.iter().enumerate() {
            let mut j = 0usize;
            for (new_pos, &old_pos) in perm.iter().enumerate() {
                let bit = (i >> (n - 1 - old_pos)) & 1;
                j |= bit << (n - 1 - new_pos);
            }
            amps[j] = *amp;
        }
        Ok(Statevector { amps, order: new_order.to_vec() })
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        match *gate {
            Gate::H(q) => self.apply_h(q),
            Gate::X(q) => self.apply_x(q),
            Gate::Z(q) => self.apply_phase(q, Complex64::new(-1.0, 0.0)),
            Gate::T(q) => self.apply_phase(q, Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)),
            Gate::Rz(q, a) => self.apply_phase(q, Complex64::from_polar(1.0, a)),
            Gate::Cz(a, b) => self.apply_cz(a, b),
        }
    }

    fn apply_h(&mut self, q: QubitId) -> Result<()> {
        let mask = 1usize << self.bitpos(self.position(q)?);
        let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let a = self.amps[i];
                let b = self.amps[i | mask];
                self.amps[i] = s * (a + b);
                self.amps[i | mask] = s * (a - b);
            }
        }
        Ok(())
    }

    fn apply_x(&mut self, q: QubitId) -> Result<()> {
        let mask = 1usize << self.bitpos(self.position(q)?);
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                self.amps.swap(i, i | mask);
            }
        }
        Ok(())
    }

    /// `diag(1, phase)` on one qubit.
    fn apply_phase(&mut self, q: QubitId, phase: Complex64) -> Result<()> {
        let mask = 1usize << self.bitpos(self.position(q)?);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & mask != 0 {
                *a *= phase;
            }
        }
        Ok(())
    }

    fn apply_cz(&mut self, a: QubitId, b: QubitId) -> Result<()> {
        if a == b {
            return Err(Error::DuplicateTarget(a.0));
        }
        let ma = 1usize << self.bitpos(self.position(a)?);
        let mb = 1usize << self.bitpos(self.position(b)?);
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & ma != 0 && i & mb != 0 {
                *amp = -*amp;
            }
        }
        Ok(())
    }

    pub(crate) fn apply_cnot(&mut self, control: QubitId, target: QubitId) -> Result<()> {
        if control == target {
            return Err(Error::DuplicateTarget(control.0));
        }
        let mc = 1usize << self.bitpos(self.position(control)?);
        let mt = 1usize << self.bitpos(self.position(target)?);
        for i in 0..self.amps.len() {
            if i & mc != 0 && i & mt == 0 {
                self.amps.swap(i, i | mt);
            }
        }
        Ok(())
    }

    /// Projective measurement. Returns the outcome bit and removes the
    /// measured qubit from the register, renormalizing the survivors.
    pub fn measure(&mut self, q: QubitId, basis: MeasurementBasis, rng: &mut RngStream) -> Result<u8> {
        match basis {
            MeasurementBasis::Z => {}
            MeasurementBasis::X => {
                self.apply_h(q)?;
            }
            MeasurementBasis::Planar(delta) => {
                // {|0⟩ ± e^{iδ}|1⟩}/√2 maps onto Z via Rz(-δ) then H.
                self.apply_phase(q, Complex64::from_polar(1.0, -delta))?;
                self.apply_h(q)?;
            }
        }
        self.measure_z_and_remove(q, rng)
    }

    fn measure_z_and_remove(&mut self, q: QubitId, rng: &mut RngStream) -> Result<u8> {
        let pos = self.position(q)?;
        let bitpos = self.bitpos(pos);
        let mask = 1usize << bitpos;
        let p1: f64 = self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum();
        let outcome = u8::from(rng.chance(p1.clamp(0.0, 1.0)));
        let keep_prob = if outcome == 1 { p1 } else { 1.0 - p1 };
        let scale = 1.0 / keep_prob.max(f64::MIN_POSITIVE).sqrt();

        let want = if outcome == 1 { mask } else { 0 };
        let mut amps = Vec::with_capacity(self.amps.len() / 2);
        for (i, a) in self.amps.iter().enumerate() {
            if i & mask == want {
                amps.push(a * scale);
            }
        }
        self.amps = amps;
        self.order.remove(pos);
        Ok(outcome)
    }

    /// Bell-basis measurement on a qubit pair; both qubits are removed.
    pub fn measure_bell(&mut self, q1: QubitId, q2: QubitId, rng: &mut RngStream) -> Result<BellOutcome> {
        if q1 == q2 {
            return Err(Error::DuplicateTarget(q1.0));
        }
        // Rotate the Bell basis onto the computational one:
        // Φ+ → |00⟩, Ψ+ → |01⟩, Φ− → |10⟩, Ψ− → |11⟩.
        self.apply_cnot(q1, q2)?;
        self.apply_h(q1)?;
        let b1 = self.measure_z_and_remove(q1, rng)?;
        let b2 = self.measure_z_and_remove(q2, rng)?;
        Ok(BellOutcome::from_bits(b1, b2))
    }

    /// Born-rule probability of each Bell outcome on `(q1, q2)`, without
    /// collapsing. Order matches [`BellOutcome::ALL`].
    pub fn bell_probabilities(&self, q1: QubitId, q2: QubitId) -> Result<[f64; 4]> {
        if q1 == q2 {
            return Err(Error::DuplicateTarget(q1.0));
        }
        let mut probe = self.clone();
        probe.apply_cnot(q1, q2)?;
        probe.apply_h(q1)?;
        let m1 = 1usize << probe.bitpos(probe.position(q1)?);
        let m2 = 1usize << probe.bitpos(probe.position(q2)?);
        let mut p = [0.0f64; 4];
        for (i, a) in probe.amps.iter().enumerate() {
            let idx = (usize::from(i & m1 != 0) << 1) | usize::from(i & m2 != 0);
            p[idx] += a.norm_sqr();
        }
        Ok(p)
    }

    /// Probability that a Z measurement of `q` yields 1, without collapsing.
    pub fn prob_one(&self, q: QubitId) -> Result<f64> {
        let mask = 1usize << self.bitpos(self.position(q)?);
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Partial trace over the complement of `subset` (given order defines
    /// the row/column bit order of the result).
    pub fn reduced_density(&self, subset: &[QubitId]) -> Result<super::DensityMatrix> {
        if subset.is_empty() {
            return Err(Error::invalid("empty qubit subset"));
        }
        let mut seen = subset.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != subset.len() {
            return Err(Error::invalid("duplicate qubit ids in subset"));
        }
        let n = self.num_qubits();
        let k = subset.len();
        let sub_bits: Vec<usize> = subset
            .iter()
            .map(|q| self.position(*q).map(|p| self.bitpos(p)))
            .collect::<Result<_>>()?;
        let rest_bits: Vec<usize> = (0..n)
            .map(|p| self.bitpos(p))
            .filter(|b| !sub_bits.contains(b))
            .collect();

        // Group amplitudes by the complement index, then accumulate the
        // outer product of each group's sub-register vector.
        let dim_k = 1usize << k;
        let dim_rest = 1usize << rest_bits.len();
        let mut groups = vec![vec![Complex64::ZERO; dim_k]; dim_rest];
        for (i, a) in self.amps.iter().enumerate() {
            let mut s = 0usize;
            for (slot, bit) in sub_bits.iter().enumerate() {
                s |= ((i >> bit) & 1) << (k - 1 - slot);
            }
            let mut r = 0usize;
            for (slot, bit) in rest_bits.iter().enumerate() {
                r |= ((i >> bit) & 1) << slot;
            }
            groups[r][s] = *a;
        }
        let mut mat = nalgebra::DMatrix::<Complex64>::zeros(dim_k, dim_k);
        for g in &groups {
            for (row, gr) in g.iter().enumerate() {
                if gr.norm_sqr() == 0.0 {
                    continue;
                }
                for (col, gc) in g.iter().enumerate() {
                    mat[(row, col)] += gr * gc.conj();
                }
            }
        }
        super::DensityMatrix::from_matrix(mat)
    }

    /// Asserts the running norm invariant; call sites use it in debug paths.
    pub fn check_norm(&self) -> Result<()> {
        let n = self.norm();
        if (n - 1.0).abs() > ALG_TOL {
            return Err(Error::invalid(format!("norm drifted to {n}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn rng() -> RngStream {
        RngStream::from_seed(0x5eed)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn alloc_basis_states() {
        let s = Statevector::alloc(1, "0").unwrap();
        assert_eq!(s.amplitudes(), &[Complex64::ONE, Complex64::ZERO]);

        let s = Statevector::alloc(2, "10").unwrap();
        assert!((s.amplitudes()[2] - Complex64::ONE).norm() < 1e-15);
        assert_eq!(s.amplitudes().iter().filter(|a| a.norm() > 0.0).count(), 1);

        let s = Statevector::alloc(3, "111").unwrap();
        assert!((s.amplitudes()[7] - Complex64::ONE).norm() < 1e-15);
    }

    #[test]
    fn alloc_rejects_out_of_range() {
        assert!(matches!(Statevector::alloc(0, ""), Err(Error::Capacity { .. })));
        assert!(matches!(
            Statevector::alloc(MAX_QUBITS + 1, &"0".repeat(MAX_QUBITS + 1)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn h_on_zero_gives_plus() {
        let mut s = Statevector::alloc(1, "0").unwrap();
        s.apply(&Gate::H(QubitId(0))).unwrap();
        assert!((s.amplitudes()[0].re - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((s.amplitudes()[1].re - FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn t_fourth_power_is_z() {
        // T⁴ H|0⟩ = |−⟩, and T⁸ = I.
        let mut s = Statevector::alloc(1, "0").unwrap();
        s.apply(&Gate::H(QubitId(0))).unwrap();
        for _ in 0..4 {
            s.apply(&Gate::T(QubitId(0))).unwrap();
        }
        let minus = Statevector::from_amplitudes(
            vec![QubitId(0)],
            vec![c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)],
        )
        .unwrap();
        assert!(s.fidelity(&minus).unwrap() > 1.0 - 1e-12);

        for _ in 0..4 {
            s.apply(&Gate::T(QubitId(0))).unwrap();
        }
        let plus = Statevector::from_amplitudes(
            vec![QubitId(0)],
            vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)],
        )
        .unwrap();
        assert!(s.fidelity(&plus).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn cz_flips_rotated_partner() {
        // CZ(|1⟩ ⊗ |+_θ⟩) = |1⟩ ⊗ |−_θ⟩
        let theta = 3.0 * FRAC_PI_4;
        let one = Statevector::alloc(1, "1").unwrap();
        let rot = Statevector::single(
            QubitId(1),
            c(FRAC_1_SQRT_2, 0.0),
            Complex64::from_polar(FRAC_1_SQRT_2, theta),
        )
        .unwrap();
        let mut joint = one.tensor(&rot).unwrap();
        joint.apply(&Gate::Cz(QubitId(0), QubitId(1))).unwrap();

        let expect = Statevector::alloc(1, "1")
            .unwrap()
            .tensor(
                &Statevector::single(
                    QubitId(1),
                    c(FRAC_1_SQRT_2, 0.0),
                    Complex64::from_polar(-FRAC_1_SQRT_2, theta),
                )
                .unwrap(),
            )
            .unwrap();
        assert!(joint.fidelity(&expect).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn eigenstate_measurements_deterministic() {
        let mut r = rng();
        for _ in 0..64 {
            let mut plus = Statevector::single(QubitId(0), c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap();
            assert_eq!(plus.measure(QubitId(0), MeasurementBasis::X, &mut r).unwrap(), 0);

            let theta = 5.0 * FRAC_PI_4;
            let mut rot = Statevector::single(
                QubitId(0),
                c(FRAC_1_SQRT_2, 0.0),
                Complex64::from_polar(FRAC_1_SQRT_2, theta),
            )
            .unwrap();
            assert_eq!(
                rot.measure(QubitId(0), MeasurementBasis::planar(theta), &mut r).unwrap(),
                0
            );
        }
    }

    #[test]
    fn zero_in_x_basis_is_uniform() {
        // Born rule: |0⟩ in X gives each outcome w.p. 1/2.
        let mut r = rng();
        let trials = 10_000;
        let mut ones = 0u32;
        for _ in 0..trials {
            let mut s = Statevector::alloc(1, "0").unwrap();
            ones += u32::from(s.measure(QubitId(0), MeasurementBasis::X, &mut r).unwrap());
        }
        let freq = f64::from(ones) / f64::from(trials as u32);
        assert!((freq - 0.5).abs() < 0.02, "frequency {freq}");
    }

    #[test]
    fn measurement_removes_qubit_and_preserves_norm() {
        let mut r = rng();
        let mut s = Statevector::alloc(3, "000").unwrap();
        s.apply(&Gate::H(QubitId(0))).unwrap();
        s.apply(&Gate::Cz(QubitId(0), QubitId(1))).unwrap();
        s.apply(&Gate::H(QubitId(1))).unwrap();
        let _ = s.measure(QubitId(1), MeasurementBasis::Z, &mut r).unwrap();
        assert_eq!(s.num_qubits(), 2);
        assert_eq!(s.qubit_order(), &[QubitId(0), QubitId(2)]);
        s.check_norm().unwrap();
        assert!(matches!(
            s.measure(QubitId(1), MeasurementBasis::Z, &mut r),
            Err(Error::UnknownQubit(1))
        ));
    }

    #[test]
    fn bell_measurement_same_qubit_rejected() {
        let mut r = rng();
        let mut s = Statevector::alloc(2, "00").unwrap();
        assert!(matches!(
            s.measure_bell(QubitId(0), QubitId(0), &mut r),
            Err(Error::DuplicateTarget(0))
        ));
    }

    #[test]
    fn bell_outcomes_on_zero_zero() {
        // |00⟩ projects onto Φ+ and Φ− with probability 1/2 each.
        let s = Statevector::alloc(2, "00").unwrap();
        let p = s.bell_probabilities(QubitId(0), QubitId(1)).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-12); // Φ+
        assert!((p[2] - 0.5).abs() < 1e-12); // Φ−
        assert!(p[1].abs() < 1e-12 && p[3].abs() < 1e-12);
    }

    #[test]
    fn bell_outcomes_cross_basis_uniform() {
        // Brute-force oracle: project |0⟩⊗|+⟩ onto each Bell vector.
        let zero = Statevector::alloc(1, "0").unwrap();
        let plus = Statevector::single(QubitId(1), c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap();
        let s = zero.tensor(&plus).unwrap();
        let bell_vec = |signs: (f64, usize, usize)| {
            let (sign, i, j) = signs;
            let mut amps = vec![Complex64::ZERO; 4];
            amps[i] = c(FRAC_1_SQRT_2, 0.0);
            amps[j] = c(sign * FRAC_1_SQRT_2, 0.0);
            Statevector::from_amplitudes(vec![QubitId(0), QubitId(1)], amps).unwrap()
        };
        let oracle = [
            bell_vec((1.0, 0, 3)),  // Φ+
            bell_vec((1.0, 1, 2)),  // Ψ+
            bell_vec((-1.0, 0, 3)), // Φ−
            bell_vec((-1.0, 1, 2)), // Ψ−
        ];
        let p = s.bell_probabilities(QubitId(0), QubitId(1)).unwrap();
        for (k, b) in oracle.iter().enumerate() {
            let direct = s.inner(b).unwrap().norm_sqr();
            assert!((p[k] - direct).abs() < 1e-12);
            assert!((direct - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn bell_collapse_matches_probabilities() {
        let mut r = rng();
        let mut counts = [0u32; 4];
        let trials = 20_000;
        for _ in 0..trials {
            let mut s = Statevector::alloc(2, "00").unwrap();
            s.apply(&Gate::H(QubitId(1))).unwrap();
            let o = s.measure_bell(QubitId(0), QubitId(1), &mut r).unwrap();
            counts[o.code() as usize] += 1;
            assert_eq!(s.num_qubits(), 0);
        }
        for cnt in counts {
            let freq = f64::from(cnt) / f64::from(trials as u32);
            assert!((freq - 0.25).abs() < 0.02, "frequency {freq}");
        }
    }

    #[test]
    fn reduced_density_of_pure_zero() {
        let s = Statevector::alloc(1, "0").unwrap();
        let rho = s.reduced_density(&[QubitId(0)]).unwrap();
        assert!((rho.entry(0, 0).re - 1.0).abs() < 1e-12);
        assert!(rho.entry(1, 1).norm() < 1e-12);
    }

    #[test]
    fn reduced_density_of_bell_half_is_mixed() {
        let mut s = Statevector::alloc(2, "00").unwrap();
        s.apply(&Gate::H(QubitId(0))).unwrap();
        s.apply_cnot(QubitId(0), QubitId(1)).unwrap();
        let rho = s.reduced_density(&[QubitId(1)]).unwrap();
        assert!(rho.max_abs_diff(&super::super::DensityMatrix::maximally_mixed(1)) < 1e-12);
        assert!(s.reduced_density(&[]).is_err());
    }

    #[test]
    fn reorder_preserves_content() {
        let mut s = Statevector::alloc(2, "00").unwrap();
        s.apply(&Gate::H(QubitId(0))).unwrap();
        s.apply(&Gate::X(QubitId(1))).unwrap();
        let r = s.reordered(&[QubitId(1), QubitId(0)]).unwrap();
        // |+⟩|1⟩ reordered to |1⟩|+⟩
        assert!((r.amplitudes()[2].re - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((r.amplitudes()[3].re - FRAC_1_SQRT_2).abs() < 1e-12);
    }
}
