//! Dense complex linear algebra: the oracle substrate for every construction
//! in this crate. Matrix square roots, exponentials, norms, and ranks are all
//! computed by full decompositions; everything here is sized for desk-scale
//! experiments (dimensions up to ~2^10).

mod matrix;
mod state;

pub use matrix::{hadamard, pauli_x, pauli_y, pauli_z, C64, ComplexMatrix, I, ONE, ZERO};
pub use state::QuantumState;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Default entrywise Hermiticity tolerance, matched to double-precision
/// dilation round-trip targets.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Default tolerance for singular-value rank decisions.
pub const RANK_TOL: f64 = 1e-10;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, the k-th
/// column of the returned matrix is the eigenvector for the k-th eigenvalue.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    m.check_hermitian(HERMITIAN_TOL)?;
    // Symmetrize before factoring so roundoff in the input cannot leak
    // imaginary parts into the eigenvalues.
    let h = &(m + &m.adjoint()).scale(C64::new(0.5, 0.0));
    let se = h.to_na().symmetric_eigen();
    let n = m.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = ComplexMatrix::from_fn(n, n, |r, c| se.eigenvectors[(r, order[c])]);
    // Deterministic phase convention: rotate each eigenvector so its largest
    // component is real and positive. Dilation factor choices depend on this.
    for c in 0..n {
        let mut best = 0usize;
        let mut best_norm = 0.0;
        for r in 0..n {
            let nr = vectors.get(r, c).norm();
            if nr > best_norm {
                best_norm = nr;
                best = r;
            }
        }
        if best_norm > 0.0 {
            let z = vectors.get(best, c);
            let phase = (z / best_norm).conj();
            for r in 0..n {
                vectors.set(r, c, vectors.get(r, c) * phase);
            }
        }
    }
    Ok((values, vectors))
}

/// Thin singular value decomposition `M = U diag(S) V\u{2020}`.
/// Singular values are returned descending.
pub fn svd(m: &ComplexMatrix) -> (ComplexMatrix, Vec<f64>, ComplexMatrix) {
    let f = m.to_na().svd(true, true);
    let u = f.u.expect("svd requested u");
    let v_t = f.v_t.expect("svd requested v_t");
    (
        ComplexMatrix::from_na(&u),
        f.singular_values.iter().copied().collect(),
        ComplexMatrix::from_na(&v_t),
    )
}

/// All singular values of `M`, descending.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    m.to_na().singular_values().iter().copied().collect()
}

/// Hermitian square root of a positive semi-definite matrix.
///
/// Eigenvalues in `[-1e-10, 0)` are clamped to zero: the dilation
/// constructions feed this near-singular `I - A\u{2020}A` operators whose
/// smallest eigenvalues sit at roundoff.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (values, vectors) = hermitian_eig(m)?;
    if let Some(&bad) = values.iter().find(|&&v| v < -1e-10) {
        return Err(Error::NegativeEigenvalue { value: bad });
    }
    let sqrt_diag: Vec<C64> = values
        .iter()
        .map(|&v| C64::new(v.max(0.0).sqrt(), 0.0))
        .collect();
    let d = ComplexMatrix::diagonal(&sqrt_diag);
    Ok(&(&vectors * &d) * &vectors.adjoint())
}

/// `e^{-iHt}` for Hermitian `H`, by full diagonalization. This doubles as the
/// exact oracle for every simulation experiment.
pub fn matrix_exponential(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let (values, vectors) = hermitian_eig(h)?;
    let phase_diag: Vec<C64> = values
        .iter()
        .map(|&v| C64::from_polar(1.0, -v * t))
        .collect();
    let d = ComplexMatrix::diagonal(&phase_diag);
    Ok(&(&vectors * &d) * &vectors.adjoint())
}

/// Largest singular value.
pub fn spectral_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Number of singular values strictly above `tol`.
pub fn numerical_rank(m: &ComplexMatrix, tol: f64) -> usize {
    assert!(tol > 0.0, "rank tolerance must be positive");
    singular_values(m).iter().filter(|&&s| s > tol).count()
}

/// Random dense matrix with i.i.d. standard complex Gaussian entries.
pub fn random_matrix(rng: &mut impl rand::Rng, rows: usize, cols: usize) -> ComplexMatrix {
    use rand_distr::{Distribution, StandardNormal};
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        C64::new(re, im)
    })
}

/// Random Hermitian matrix.
pub fn random_hermitian(rng: &mut impl rand::Rng, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n, n);
    (&g + &g.adjoint()).scale(C64::new(0.5, 0.0))
}

/// Haar-ish random unitary from the QR factorization of a Gaussian matrix.
pub fn random_unitary(rng: &mut impl rand::Rng, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n, n).to_na();
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    // Fix the phase convention so the distribution does not depend on the
    // QR sign choices.
    let mut q = ComplexMatrix::from_na(&q);
    for c in 0..n {
        let d = r[(c, c)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { ONE };
        for r_i in 0..n {
            q.set(r_i, c, q.get(r_i, c) * phase);
        }
    }
    q
}

/// Random contraction: a Gaussian matrix rescaled to spectral norm `target`.
pub fn random_contraction(rng: &mut impl rand::Rng, n: usize, target: f64) -> ComplexMatrix {
    let g = random_matrix(rng, n, n);
    let s = spectral_norm(&g);
    g.scale(C64::new(target / s, 0.0))
}

fn _na_sanity(m: &DMatrix<C64>) -> usize {
    m.nrows()
}
