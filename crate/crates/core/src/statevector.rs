//! Minimal dense statevector engine.
//!
//! Only what the gedanken-experiment circuit needs: tensor products,
//! single-qubit gates, the selective phase on |00...00> and Born-rule
//! probabilities. Basis convention: qubit 0 is the most significant bit of
//! the basis index, so `tensor_product` is plain index arithmetic.

use num_complex::Complex64;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Tolerance for normalization and unitarity checks.
pub const NORM_TOL: f64 = 1e-12;

/// A pure n-qubit state as 2^n complex amplitudes with unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Builds a state from raw amplitudes. The length must be a power of two
    /// (at least 2) and the norm must be 1 within [`NORM_TOL`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidAmplitudeCount { len });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self {
            n: len.trailing_zeros() as usize,
            amplitudes,
        })
    }

    /// Single-qubit state `zero`|0> + `one`|1>.
    pub fn qubit(zero: Complex64, one: Complex64) -> Result<Self> {
        Self::new(vec![zero, one])
    }

    /// Computational basis state |index> of an n-qubit register.
    pub fn basis_state(n: usize, index: usize) -> Self {
        let dim = 1usize << n;
        assert!(index < dim, "basis index out of range");
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self { n, amplitudes }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// Kronecker product: amplitude at index `i * 2^n_b + j` is `a_i * b_j`,
    /// so the qubits of `self` become the most significant ones.
    pub fn tensor_product(&self, other: &Self) -> Self {
        let dim_b = other.amplitudes.len();
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * dim_b);
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self {
            n: self.n + other.n,
            amplitudes,
        }
    }

    /// Applies a 2x2 unitary to one qubit, leaving the others untouched.
    pub fn apply_single_qubit_gate(&self, qubit: usize, gate: &SingleQubitGate) -> Result<Self> {
        if qubit >= self.n {
            return Err(Error::QubitIndexOutOfRange {
                index: qubit,
                n: self.n,
            });
        }
        let mut amplitudes = self.amplitudes.clone();
        apply_gate_in_place(&mut amplitudes, self.n, qubit, gate);
        Ok(Self {
            n: self.n,
            amplitudes,
        })
    }

    /// Multiplies the |00...00> amplitude by e^{i xi}; everything else is
    /// left alone. Norm is trivially preserved.
    pub fn apply_selective_phase(&self, xi: f64) -> Self {
        let mut amplitudes = self.amplitudes.clone();
        selective_phase_in_place(&mut amplitudes, xi);
        Self {
            n: self.n,
            amplitudes,
        }
    }

    /// Born-rule outcome probabilities: entry z is |a_z|^2.
    pub fn born_probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Inner product <self|other>.
    pub fn inner_product(&self, other: &Self) -> Complex64 {
        assert_eq!(self.n, other.n, "qubit counts differ");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// In-place single-qubit gate kernel shared by the public operation and the
/// parameter-search hot loop, so both follow bit-identical arithmetic.
pub(crate) fn apply_gate_in_place(
    amplitudes: &mut [Complex64],
    n: usize,
    qubit: usize,
    gate: &SingleQubitGate,
) {
    // Qubit 0 is the most significant bit of the basis index.
    let stride = 1usize << (n - 1 - qubit);
    let dim = amplitudes.len();
    let [[g00, g01], [g10, g11]] = gate.matrix;
    let mut base = 0;
    while base < dim {
        for i in base..base + stride {
            let a0 = amplitudes[i];
            let a1 = amplitudes[i + stride];
            amplitudes[i] = g00 * a0 + g01 * a1;
            amplitudes[i + stride] = g10 * a0 + g11 * a1;
        }
        base += 2 * stride;
    }
}

pub(crate) fn selective_phase_in_place(amplitudes: &mut [Complex64], xi: f64) {
    amplitudes[0] *= Complex64::from_polar(1.0, xi);
}

/// A 2x2 unitary, checked to [`NORM_TOL`] on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitGate {
    matrix: [[Complex64; 2]; 2],
}

impl SingleQubitGate {
    pub fn new(matrix: [[Complex64; 2]; 2]) -> Result<Self> {
        // G^dagger G = I, entrywise.
        let mut deviation: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let mut entry = Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    entry += matrix[k][r].conj() * matrix[k][c];
                }
                let target = if r == c { 1.0 } else { 0.0 };
                deviation = deviation.max((entry - target).norm());
            }
        }
        if deviation > NORM_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { matrix })
    }

    /// Hadamard gate |+><0| + |-><1|.
    pub fn hadamard() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            matrix: [[h, h], [h, -h]],
        }
    }

    /// Phase gate P_phi = |0><0| + e^{i phi}|1><1|.
    pub fn phase(phi: f64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Self {
            matrix: [
                [Complex64::new(1.0, 0.0), zero],
                [zero, Complex64::from_polar(1.0, phi)],
            ],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row][col]
    }
}

/// Matrix product: `(a * b)` applied to a state acts as `b` first, then `a`.
impl Mul for SingleQubitGate {
    type Output = SingleQubitGate;

    fn mul(self, rhs: SingleQubitGate) -> SingleQubitGate {
        let mut matrix = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (r, row) in matrix.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                for k in 0..2 {
                    *entry += self.matrix[r][k] * rhs.matrix[k][c];
                }
            }
        }
        SingleQubitGate { matrix }
    }
}
