//! Dense statevectors.

use crate::error::{Error, Result};
use crate::linalg::matrix::{C64, ComplexMatrix, ONE, ZERO};

/// Normalized `2^n`-dimensional statevector.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    qubit_count: usize,
    amplitudes: Vec<C64>,
}

impl QuantumState {
    /// Build from amplitudes; enforces the Born rule within 1e-10.
    pub fn new(qubit_count: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != 1 << qubit_count {
            return Err(Error::DimensionMismatch(format!(
                "{} qubits need {} amplitudes, got {}",
                qubit_count,
                1usize << qubit_count,
                amplitudes.len()
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-10 {
            return Err(Error::DimensionMismatch(format!(
                "statevector norm^2 = {norm_sq} violates the Born rule"
            )));
        }
        Ok(Self { qubit_count, amplitudes })
    }

    /// Renormalize an unnormalized amplitude vector. Fails on the zero vector.
    pub fn normalized(qubit_count: usize, amplitudes: Vec<C64>) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq < 1e-300 {
            return Err(Error::ZeroProbability);
        }
        let s = norm_sq.sqrt();
        Self::new(
            qubit_count,
            amplitudes.into_iter().map(|a| a / s).collect(),
        )
    }

    /// Computational basis state `|index>`.
    pub fn basis(qubit_count: usize, index: usize) -> Self {
        let dim = 1usize << qubit_count;
        assert!(index < dim, "basis index out of range");
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Self { qubit_count, amplitudes }
    }

    /// Basis state from a bitstring, leftmost bit = qubit 0 (most significant).
    pub fn from_bitstring(bits: &str) -> Result<Self> {
        let mut index = 0usize;
        for (pos, ch) in bits.chars().enumerate() {
            index <<= 1;
            match ch {
                '0' => {}
                '1' => index |= 1,
                _ => {
                    return Err(Error::ParseError {
                        line: 1,
                        message: format!("invalid bit '{ch}' at position {pos}"),
                    })
                }
            }
        }
        Ok(Self::basis(bits.len(), index))
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> C64 {
        assert_eq!(self.qubit_count, other.qubit_count);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Fidelity `|<self|other>|^2`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// Apply a unitary given as a dense matrix of matching dimension.
    pub fn evolved(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.cols() != self.dim() || u.rows() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}x{}, state dimension is {}",
                u.rows(),
                u.cols(),
                self.dim()
            )));
        }
        QuantumState::new(self.qubit_count, u.apply(&self.amplitudes))
    }

    /// Tensor product, `self` on the most significant qubits.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self {
            qubit_count: self.qubit_count + other.qubit_count,
            amplitudes,
        }
    }
}
