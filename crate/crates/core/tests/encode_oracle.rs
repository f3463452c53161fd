//! Cross-checks the two-branch repetition-code state against a full
//! state-vector simulation of the encoding circuit.
//!
//! The library tracks an encoded qubit as two branches because a repetition
//! encoding of alpha|0> + beta|1> can only ever populate |0...0> and
//! |1...1>. Here the encoding is instead simulated the expensive way: start
//! from the product state (alpha|0> + beta|1>) |0>^N and apply a CNOT from
//! the data qubit to every ancilla. The resulting 2^(N+1) amplitudes must
//! match the expansion of the two-branch form exactly.

use atomarch::surfacecode::repetition_encode_state;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Full 2^(N+1) state vector: qubit 0 is the data qubit (lowest index bit),
/// qubits 1..=N are ancillas.
fn simulate_encoding(c0: Complex64, c1: Complex64, copies: usize) -> Vec<Complex64> {
    let qubits = copies + 1;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << qubits];
    amplitudes[0] = c0; // data 0, ancillas 0
    amplitudes[1] = c1; // data 1, ancillas 0
    for ancilla in 1..=copies {
        // CNOT, control data qubit, target this ancilla: for every basis
        // state with the data bit set, flip the ancilla bit
        let target = 1usize << ancilla;
        for index in 0..amplitudes.len() {
            if index & 1 == 1 && index & target == 0 {
                amplitudes.swap(index, index | target);
            }
        }
    }
    amplitudes
}

/// Expand the library's branch pairs into the same 2^(N+1) layout.
fn expand_branches(c0: Complex64, c1: Complex64, copies: usize) -> Vec<Complex64> {
    let state = repetition_encode_state(c0, c1, copies as u32).unwrap();
    let qubits = copies + 1;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << qubits];
    for branch in state.branches() {
        let index = if branch.bit { (1 << qubits) - 1 } else { 0 };
        amplitudes[index] += branch.amplitude;
    }
    amplitudes
}

fn random_qubit(rng: &mut ChaCha8Rng) -> (Complex64, Complex64) {
    let raw0 = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let raw1 = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let norm = (raw0.norm_sqr() + raw1.norm_sqr()).sqrt();
    (raw0 / norm, raw1 / norm)
}

#[test]
fn branches_match_the_simulated_circuit() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let copies = rng.gen_range(1..=6usize);
        let (c0, c1) = random_qubit(&mut rng);
        let simulated = simulate_encoding(c0, c1, copies);
        let expanded = expand_branches(c0, c1, copies);
        assert_eq!(simulated.len(), expanded.len());
        for (i, (s, e)) in simulated.iter().zip(&expanded).enumerate() {
            assert!(
                (s - e).norm() < 1e-12,
                "trial {trial}, copies {copies}, index {i}: {s} vs {e}"
            );
        }
    }
}

#[test]
fn simulation_populates_exactly_two_basis_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let copies = rng.gen_range(1..=6usize);
        let (c0, c1) = random_qubit(&mut rng);
        let simulated = simulate_encoding(c0, c1, copies);
        let populated: Vec<usize> = simulated
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() > 1e-24)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(populated, vec![0, simulated.len() - 1]);
    }
}

#[test]
fn every_qubit_carries_the_same_marginal() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..20 {
        let copies = rng.gen_range(1..=6usize);
        let (c0, c1) = random_qubit(&mut rng);
        let simulated = simulate_encoding(c0, c1, copies);
        for qubit in 0..=copies {
            let p_one: f64 = simulated
                .iter()
                .enumerate()
                .filter(|(i, _)| i & (1 << qubit) != 0)
                .map(|(_, a)| a.norm_sqr())
                .sum();
            assert!(
                (p_one - c1.norm_sqr()).abs() < 1e-12,
                "qubit {qubit}: {p_one} vs {}",
                c1.norm_sqr()
            );
        }
    }
}

#[test]
fn norm_is_preserved_through_encoding() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let copies = rng.gen_range(1..=6usize);
        let (c0, c1) = random_qubit(&mut rng);
        let total: f64 = simulate_encoding(c0, c1, copies)
            .iter()
            .map(Complex64::norm_sqr)
            .sum();
        assert!((total - 1.0).abs() < 1e-12, "norm {total}");
        let state = repetition_encode_state(c0, c1, copies as u32).unwrap();
        assert!((state.norm_sq() - 1.0).abs() < 1e-12);
    }
}
