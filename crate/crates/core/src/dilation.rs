//! Unitary dilations: embedding a contraction as a designated sub-block of a
//! larger unitary. Every construction returns a validated [`BlockEncoding`].

use crate::error::{Error, Result};
use crate::linalg::{
    numerical_rank, psd_sqrt, spectral_norm, svd, C64, ComplexMatrix,
    HERMITIAN_TOL, ONE,
};

/// Construction that produced a block-encoding. Carried as metadata so
/// downstream code can tell power-of-two ancilla layouts from raw dilations.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    HermitianDilation,
    PolarDilation,
    FourBlock { moved_to_diagonal: bool },
    Minimal { delta: usize },
    Chain { k: usize },
    Lcu,
    SparseOracle,
    Sum,
    Difference,
    Product { factors: usize },
    ShiftRescale { beta: f64 },
    PolynomialTransform,
    HamiltonianSimulation,
    Qite,
    Direct,
}

/// A unitary together with the bookkeeping needed to read a matrix out of it:
/// subnormalization `alpha`, ancilla count, and the block position holding the
/// payload `A/alpha`.
///
/// When the total dimension is `2^m * N` the payload lives at ancilla basis
/// states `(row_index, col_index)` (most significant qubits are ancillas).
/// Raw dilations (minimal, chain) have `ancilla_count = 0` and block indices
/// that address `N`-sized slabs directly; those are matrix-level objects and
/// are not used in statevector simulation.
#[derive(Debug, Clone)]
pub struct BlockEncoding {
    unitary: ComplexMatrix,
    alpha: f64,
    system_dim: usize,
    ancilla_count: usize,
    row_index: usize,
    col_index: usize,
    provenance: Provenance,
}

impl BlockEncoding {
    /// Wrap a unitary as a block-encoding, validating unitarity and the
    /// contraction property of the addressed block.
    pub fn new(
        unitary: ComplexMatrix,
        alpha: f64,
        system_dim: usize,
        ancilla_count: usize,
        row_index: usize,
        col_index: usize,
        provenance: Provenance,
    ) -> Result<Self> {
        let fits = unitary.is_square()
            && (row_index + 1) * system_dim <= unitary.rows()
            && (col_index + 1) * system_dim <= unitary.cols();
        if !fits {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} unitary cannot hold an N={} block at ({}, {})",
                unitary.rows(),
                unitary.cols(),
                system_dim,
                row_index,
                col_index
            )));
        }
        if alpha < 0.0 {
            return Err(Error::AlphaTooSmall { alpha, norm: 0.0 });
        }
        // Acceptance-level gate: near-unitary payloads push sqrt-of-defect
        // roundoff to ~1e-8 in the off-diagonal blocks.
        unitary.check_unitary(1e-8)?;
        let be = Self {
            unitary,
            alpha,
            system_dim,
            ancilla_count,
            row_index,
            col_index,
            provenance,
        };
        let block_norm = spectral_norm(&be.payload());
        if block_norm > 1.0 + 1e-9 {
            return Err(Error::NotContraction { norm: block_norm });
        }
        Ok(be)
    }

    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn system_dim(&self) -> usize {
        self.system_dim
    }

    pub fn ancilla_count(&self) -> usize {
        self.ancilla_count
    }

    /// Total dimension of the dilation.
    pub fn dim(&self) -> usize {
        self.unitary.rows()
    }

    /// Ancilla basis indices `(row, col)` addressing the payload block.
    pub fn block_indices(&self) -> (usize, usize) {
        (self.row_index, self.col_index)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// True when the dilation dimension is `2^ancilla_count * system_dim`,
    /// i.e. the layout maps onto qubit registers.
    pub fn is_qubit_structured(&self) -> bool {
        (1usize << self.ancilla_count) * self.system_dim == self.dim()
    }

    /// The encoded contraction `A/alpha`.
    pub fn payload(&self) -> ComplexMatrix {
        let n = self.system_dim;
        self.unitary
            .block(self.row_index * n, self.col_index * n, n, n)
    }

    /// The encoded matrix `A` itself (payload rescaled by alpha).
    pub fn encoded_matrix(&self) -> ComplexMatrix {
        self.payload().scale(C64::new(self.alpha, 0.0))
    }

    /// Same encoding with the full unitary multiplied by a global phase.
    pub fn with_global_phase(&self, phase: C64) -> Self {
        let mut out = self.clone();
        out.unitary = out.unitary.scale(phase);
        out
    }
}

/// The encoded contraction of a block-encoding.
pub fn extract_block(be: &BlockEncoding) -> ComplexMatrix {
    be.payload()
}

/// PSD square root with eigenvalues below `floor` treated as exact zeros.
fn psd_sqrt_floored(m: &ComplexMatrix, floor: f64) -> Result<ComplexMatrix> {
    let (values, vectors) = crate::linalg::hermitian_eig(m)?;
    if let Some(&bad) = values.iter().find(|&&v| v < -1e-10) {
        return Err(Error::NegativeEigenvalue { value: bad });
    }
    let sqrt_diag: Vec<C64> = values
        .iter()
        .map(|&v| C64::new(if v < floor { 0.0 } else { v.sqrt() }, 0.0))
        .collect();
    let d = ComplexMatrix::diagonal(&sqrt_diag);
    Ok(&(&vectors * &d) * &vectors.adjoint())
}

/// Standard qubitization-form dilation of a Hermitian matrix:
/// `[[H/a, S], [S, -H/a]]` with `S = sqrt(I - (H/a)^2)`.
///
/// The returned unitary is itself Hermitian, which downstream polynomial
/// transforms rely on.
pub fn hermitian_dilation(h: &ComplexMatrix, alpha: f64) -> Result<BlockEncoding> {
    h.check_hermitian(HERMITIAN_TOL)?;
    let norm = spectral_norm(h);
    if alpha < norm * (1.0 - 1e-12) {
        return Err(Error::AlphaTooSmall { alpha, norm });
    }
    let n = h.rows();
    // Guard alpha = 0 for the all-zero matrix: the payload is zero either way.
    let scale = if alpha > 0.0 { 1.0 / alpha } else { 0.0 };
    let ha = h.scale(C64::new(scale, 0.0));
    let s = psd_sqrt(&(&ComplexMatrix::identity(n) - &(&ha * &ha)))?;
    let mut u = ComplexMatrix::zeros(2 * n, 2 * n);
    u.set_block(0, 0, &ha);
    u.set_block(0, n, &s);
    u.set_block(n, 0, &s);
    u.set_block(n, n, &ha.scale(-ONE));
    BlockEncoding::new(u, alpha, n, 1, 0, 0, Provenance::HermitianDilation)
}

/// Dilation of a general square contraction derived from its polar
/// decomposition `A = P V`:
/// `[[A, (I-P^2)^{1/2}], [-(I-P~^2)^{1/2}, A\u{2020}]]`
/// where `P = sqrt(AA\u{2020})` and `P~ = sqrt(A\u{2020}A)`.
///
/// The intertwining `(I-A\u{2020}A)^{1/2} A\u{2020} = A\u{2020} (I-AA\u{2020})^{1/2}`
/// makes this unitary for every contraction, normal or not; dressing both
/// off-diagonal blocks with the polar factor `V` keeps unitarity only when
/// `A` is normal, so the bare defect operators are used instead.
///
/// For `A = 0` the polar factor degenerates; the global-phase special case
/// `V = e^{i theta} I` with conjugate phases on the two off-diagonal blocks
/// is used, with `theta = phase`.
pub fn polar_dilation(a: &ComplexMatrix, phase: f64) -> Result<BlockEncoding> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "polar dilation needs a square matrix".into(),
        ));
    }
    let norm = spectral_norm(a);
    if norm > 1.0 + 1e-12 {
        return Err(Error::NotContraction { norm });
    }
    let n = a.rows();
    let id = ComplexMatrix::identity(n);
    let p2 = a * &a.adjoint();
    let q2 = &a.adjoint() * a;
    // Defect eigenvalues at roundoff scale would otherwise surface as
    // sqrt(eps)-sized off-diagonal blocks; flooring keeps the dilation of a
    // unitary exactly block-diagonal.
    let left_defect = psd_sqrt_floored(&(&id - &p2), 1e-13)?;
    let right_defect = psd_sqrt_floored(&(&id - &q2), 1e-13)?;
    let (top, bottom) = if norm < 1e-14 {
        (
            left_defect.scale(C64::from_polar(1.0, -phase)),
            right_defect.scale(C64::from_polar(1.0, phase)),
        )
    } else {
        (left_defect, right_defect)
    };
    let mut u = ComplexMatrix::zeros(2 * n, 2 * n);
    u.set_block(0, 0, a);
    u.set_block(0, n, &top);
    u.set_block(n, 0, &bottom.scale(-ONE));
    u.set_block(n, n, &a.adjoint());
    BlockEncoding::new(u, 1.0, n, 1, 0, 0, Provenance::PolarDilation)
}

/// Hermitian embedding `[[0, A], [A\u{2020}, 0]]` of an arbitrary
/// (possibly rectangular) matrix. Its eigenvalues are plus/minus the singular
/// values of `A`, padded with zeros when `A` is rectangular.
pub fn hermitian_embed(a: &ComplexMatrix) -> ComplexMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut h = ComplexMatrix::zeros(m + n, m + n);
    h.set_block(0, m, a);
    h.set_block(m, 0, &a.adjoint());
    h
}

/// The 4N-dimensional dilation built from the Hermitian embedding of `A`,
/// with auxiliary blocks `P = sqrt(I - AA\u{2020}/a^2)` and
/// `Q = sqrt(I - A\u{2020}A/a^2)`. The payload sits in the (0,1) block; with
/// `move_to_diagonal` the unitary is right-multiplied by `I (x) X (x) I`,
/// which moves `A/alpha` to the top-left.
pub fn four_block_dilation(
    a: &ComplexMatrix,
    alpha: f64,
    move_to_diagonal: bool,
) -> Result<BlockEncoding> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "four-block dilation needs a square matrix".into(),
        ));
    }
    let norm = spectral_norm(a);
    if alpha < norm * (1.0 - 1e-12) {
        return Err(Error::AlphaTooSmall { alpha, norm });
    }
    let n = a.rows();
    let scale = if alpha > 0.0 { 1.0 / alpha } else { 0.0 };
    let aa = a.scale(C64::new(scale, 0.0));
    let id = ComplexMatrix::identity(n);
    let p = psd_sqrt(&(&id - &(&aa * &aa.adjoint())))?;
    let q = psd_sqrt(&(&id - &(&aa.adjoint() * &aa)))?;
    let na = aa.scale(-ONE);
    let nad = aa.adjoint().scale(-ONE);

    let mut u = ComplexMatrix::zeros(4 * n, 4 * n);
    u.set_block(0, n, &aa);
    u.set_block(0, 2 * n, &p);
    u.set_block(n, 0, &aa.adjoint());
    u.set_block(n, 3 * n, &q);
    u.set_block(2 * n, 0, &p);
    u.set_block(2 * n, 3 * n, &na);
    u.set_block(3 * n, n, &q);
    u.set_block(3 * n, 2 * n, &nad);

    if move_to_diagonal {
        // Right-multiplying by I (x) X (x) I swaps ancilla columns 0<->1, 2<->3.
        let mut moved = ComplexMatrix::zeros(4 * n, 4 * n);
        for (dst, src) in [(0usize, 1usize), (1, 0), (2, 3), (3, 2)] {
            moved.set_block(0, dst * n, &u.block(0, src * n, 4 * n, n));
        }
        BlockEncoding::new(
            moved,
            alpha,
            n,
            2,
            0,
            0,
            Provenance::FourBlock { moved_to_diagonal: true },
        )
    } else {
        BlockEncoding::new(
            u,
            alpha,
            n,
            2,
            0,
            1,
            Provenance::FourBlock { moved_to_diagonal: false },
        )
    }
}

/// Unitary dilation of minimal dimension `(N + delta)` with
/// `delta = rank(I - A\u{2020}A, tol)`, via the `X, Y, B, C, D` factorization.
/// Factors come from eigendecompositions with eigenvalues sorted so the
/// construction is deterministic.
pub fn minimal_dilation(a: &ComplexMatrix, tol: f64) -> Result<BlockEncoding> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "minimal dilation needs a square matrix".into(),
        ));
    }
    let norm = spectral_norm(a);
    if norm > 1.0 + 1e-12 {
        return Err(Error::NotContraction { norm });
    }
    let n = a.rows();
    let id = ComplexMatrix::identity(n);
    let right_defect = &id - &(&a.adjoint() * a);
    let delta = numerical_rank(&right_defect, tol);

    if delta == 0 {
        // A is unitary to within tol; it is its own dilation.
        return BlockEncoding::new(a.clone(), 1.0, n, 0, 0, 0, Provenance::Minimal { delta: 0 });
    }

    // The X, Y factor pair must share the singular-vector pairing of A itself,
    // otherwise the cross blocks of U do not cancel. Both factors therefore
    // come from one SVD, with the X ordering reversed so I_delta sits in the
    // leading coordinates for X and the trailing ones for Y.
    let (u_s, sigma, v_t) = svd(a);
    let defect = |s: f64| (1.0 - s * s).max(0.0).sqrt();

    // B columns pair with the deficient singular directions in reversed order.
    let mut b = ComplexMatrix::zeros(n, delta);
    for j in 0..delta {
        let idx = n - 1 - j;
        let s = defect(sigma[idx]);
        for r in 0..n {
            b.set(r, j, u_s.get(r, idx) * s);
        }
    }
    // C rows pair with the same directions in natural order.
    let mut c = ComplexMatrix::zeros(delta, n);
    for i in 0..delta {
        let idx = n - delta + i;
        let s = defect(sigma[idx]);
        for col in 0..n {
            c.set(i, col, -(v_t.get(idx, col)) * s);
        }
    }
    // D is anti-diagonal, carrying the deficient singular values.
    let mut d = ComplexMatrix::zeros(delta, delta);
    for i in 0..delta {
        d.set(i, delta - 1 - i, C64::new(sigma[n - delta + i], 0.0));
    }

    let mut u = ComplexMatrix::zeros(n + delta, n + delta);
    u.set_block(0, 0, a);
    u.set_block(0, n, &b);
    u.set_block(n, 0, &c);
    u.set_block(n, n, &d);
    BlockEncoding::new(u, 1.0, n, 0, 0, 0, Provenance::Minimal { delta })
}

/// Generalize a 2N-dimensional dilation `[[A, Z12], [Z21, Z22]]` to the
/// `(k+1)N`-dimensional chain form with identity super-diagonal blocks.
pub fn chain_dilation(u2: &BlockEncoding, k: usize) -> Result<BlockEncoding> {
    if k < 2 {
        return Err(Error::BadBlockStructure(format!(
            "chain length k = {k} must be at least 2"
        )));
    }
    let n = u2.system_dim();
    if u2.dim() != 2 * n || u2.block_indices() != (0, 0) {
        return Err(Error::BadBlockStructure(format!(
            "input must be a 2Nx2N dilation with the payload at the top-left; got dimension {} for N = {}",
            u2.dim(),
            n
        )));
    }
    let m = u2.unitary();
    let a = m.block(0, 0, n, n);
    let z12 = m.block(0, n, n, n);
    let z21 = m.block(n, 0, n, n);
    let z22 = m.block(n, n, n, n);

    let dim = (k + 1) * n;
    let mut v = ComplexMatrix::zeros(dim, dim);
    v.set_block(0, 0, &a);
    v.set_block(0, n, &z12);
    v.set_block(k * n, 0, &z21);
    v.set_block(k * n, n, &z22);
    let id = ComplexMatrix::identity(n);
    for i in 1..k {
        v.set_block(i * n, (i + 1) * n, &id);
    }
    BlockEncoding::new(v, u2.alpha(), n, 0, 0, 0, Provenance::Chain { k })
}

/// Internal helper: rebuild a 2N dilation around an arbitrary contraction so
/// assembly code can lift any payload into chain form.
pub(crate) fn contraction_dilation_2n(a: &ComplexMatrix, alpha: f64) -> Result<BlockEncoding> {
    let norm = spectral_norm(a);
    if norm > 1.0 + 1e-9 {
        return Err(Error::NotContraction { norm });
    }
    let capped = if norm > 1.0 {
        a.scale(C64::new(1.0 / norm, 0.0))
    } else {
        a.clone()
    };
    let mut be = polar_dilation(&capped, 0.0)?;
    be.alpha = alpha;
    Ok(be)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eig, pauli_x, pauli_z, random_contraction, random_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hermitian_dilation_of_zero() {
        let be = hermitian_dilation(&ComplexMatrix::zeros(2, 2), 1.0).unwrap();
        let id = ComplexMatrix::identity(2);
        assert!(be.unitary().block(0, 2, 2, 2).max_diff(&id) < 1e-12);
        assert!(be.payload().max_abs() < 1e-12);
    }

    #[test]
    fn hermitian_dilation_of_z_is_block_diagonal() {
        let be = hermitian_dilation(&pauli_z(), 1.0).unwrap();
        // Z^2 = I so S = 0 and the dilation is diag(Z, -Z).
        assert!(be.unitary().block(0, 2, 2, 2).max_abs() < 1e-7);
        assert!(be.payload().max_diff(&pauli_z()) < 1e-12);
        assert!(be.unitary().block(2, 2, 2, 2).max_diff(&pauli_z().scale(-ONE)) < 1e-12);
    }

    #[test]
    fn hermitian_dilation_of_half_x() {
        let h = pauli_x().scale(C64::new(0.5, 0.0));
        let be = hermitian_dilation(&h, 1.0).unwrap();
        assert!(be.payload().max_diff(&h) < 1e-12);
        assert!(be.unitary().unitary_error() < 1e-10);
        // Qubitization form is Hermitian.
        assert!(be.unitary().hermitian_error() < 1e-10);
    }

    #[test]
    fn hermitian_dilation_rejects_small_alpha() {
        assert!(matches!(
            hermitian_dilation(&pauli_z(), 0.5),
            Err(Error::AlphaTooSmall { .. })
        ));
    }

    #[test]
    fn polar_dilation_of_unitary_is_block_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = random_unitary(&mut rng, 4);
        let be = polar_dilation(&u, 0.0).unwrap();
        assert!(be.unitary().block(0, 4, 4, 4).max_abs() < 1e-9);
        assert!(be.unitary().block(4, 0, 4, 4).max_abs() < 1e-9);
        assert!(be.unitary().block(4, 4, 4, 4).max_diff(&u.adjoint()) < 1e-9);
    }

    #[test]
    fn polar_dilation_of_zero_uses_phase_convention() {
        let be = polar_dilation(&ComplexMatrix::zeros(2, 2), 0.0).unwrap();
        let id = ComplexMatrix::identity(2);
        assert!(be.unitary().block(0, 2, 2, 2).max_diff(&id) < 1e-12);
        assert!(be.unitary().block(2, 0, 2, 2).max_diff(&id.scale(-ONE)) < 1e-12);
    }

    #[test]
    fn polar_dilation_of_half_identity() {
        let a = ComplexMatrix::identity(2).scale(C64::new(0.5, 0.0));
        let be = polar_dilation(&a, 0.0).unwrap();
        assert!(be.payload().max_diff(&a) < 1e-12);
        assert!(be.unitary().unitary_error() < 1e-10);
    }

    #[test]
    fn hermitian_embed_of_identity() {
        let h = hermitian_embed(&ComplexMatrix::identity(2));
        let (vals, _) = hermitian_eig(&h).unwrap();
        let expect = [-1.0, -1.0, 1.0, 1.0];
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12);
        }
    }

    #[test]
    fn hermitian_embed_eigenvalues_are_signed_singular_values() {
        let a = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 1.0 / 3.0]).unwrap();
        let h = hermitian_embed(&a);
        let (vals, _) = hermitian_eig(&h).unwrap();
        let expect = [-1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0];
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let a = random_contraction(&mut rng, 4, 0.8);
        let mut sv = crate::linalg::singular_values(&a);
        let (vals, _) = hermitian_eig(&hermitian_embed(&a)).unwrap();
        sv.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut expect: Vec<f64> = sv.iter().map(|s| -s).chain(sv.iter().copied()).collect();
        expect.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-9);
        }
    }

    #[test]
    fn four_block_of_zero() {
        let be = four_block_dilation(&ComplexMatrix::zeros(2, 2), 1.0, false).unwrap();
        assert!(be.unitary().unitary_error() < 1e-10);
        assert!(be.payload().max_abs() < 1e-12);
        let id = ComplexMatrix::identity(2);
        // P and Q blocks collapse to the identity.
        assert!(be.unitary().block(0, 4, 2, 2).max_diff(&id) < 1e-12);
        assert!(be.unitary().block(2, 6, 2, 2).max_diff(&id) < 1e-12);
    }

    #[test]
    fn four_block_moved_puts_payload_top_left() {
        let be = four_block_dilation(&pauli_z(), 1.0, true).unwrap();
        assert_eq!(be.block_indices(), (0, 0));
        assert!(be.payload().max_diff(&pauli_z()) < 1e-9);
    }

    #[test]
    fn four_block_is_hermitian_unitary() {
        let a = pauli_x().scale(C64::new(0.3, 0.0));
        let be = four_block_dilation(&a, 1.0, false).unwrap();
        assert!(be.unitary().hermitian_error() < 1e-9);
        assert!(be.unitary().unitary_error() < 1e-9);
    }

    #[test]
    fn four_block_payload_is_hermitian_embed_over_alpha() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_contraction(&mut rng, 3, 0.7);
        let alpha = 1.5;
        let be = four_block_dilation(&a, alpha, false).unwrap();
        let top = be.unitary().block(0, 0, 6, 6);
        let expect = hermitian_embed(&a).scale(C64::new(1.0 / alpha, 0.0));
        assert!(top.max_diff(&expect) < 1e-9);
    }

    #[test]
    fn minimal_dilation_of_unitary_is_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let u = random_unitary(&mut rng, 4);
        let be = minimal_dilation(&u, 1e-10).unwrap();
        assert_eq!(be.dim(), 4);
        assert!(be.unitary().max_diff(&u) < 1e-12);
    }

    #[test]
    fn minimal_dilation_of_scalar_zero() {
        let be = minimal_dilation(&ComplexMatrix::zeros(1, 1), 1e-10).unwrap();
        assert_eq!(be.dim(), 2);
        assert!(be.payload().max_abs() < 1e-12);
        // Documented sign convention: [[0, 1], [-1, 0]].
        assert!((be.unitary().get(0, 1) - ONE).norm() < 1e-12);
        assert!((be.unitary().get(1, 0) + ONE).norm() < 1e-12);
    }

    #[test]
    fn minimal_dilation_with_partial_rank() {
        // Two unit singular values, two strictly smaller: delta = 2.
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let u = random_unitary(&mut rng, 4);
        let v = random_unitary(&mut rng, 4);
        let s = ComplexMatrix::diagonal(&[
            ONE,
            ONE,
            C64::new(0.6, 0.0),
            C64::new(0.3, 0.0),
        ]);
        let a = &(&u * &s) * &v;
        let be = minimal_dilation(&a, 1e-10).unwrap();
        assert_eq!(be.dim(), 6);
        assert!(be.payload().max_diff(&a) < 1e-9);
        assert!(be.unitary().unitary_error() < 1e-8);
    }

    #[test]
    fn chain_dilation_keeps_payload() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for k in [2usize, 3] {
            let a = random_contraction(&mut rng, 4, 0.9);
            let base = contraction_dilation_2n(&a, 1.0).unwrap();
            let v = chain_dilation(&base, k).unwrap();
            assert_eq!(v.dim(), (k + 1) * 4);
            assert!(v.payload().max_diff(&a) < 1e-9);
            assert!(v.unitary().unitary_error() < 1e-9);
        }
    }

    #[test]
    fn chain_dilation_of_z_payload() {
        let base = hermitian_dilation(&pauli_z(), 1.0).unwrap();
        let v = chain_dilation(&base, 2).unwrap();
        assert!(v.payload().max_diff(&pauli_z()) < 1e-10);
        assert!(v.unitary().unitary_error() < 1e-10);
    }

    #[test]
    fn chain_dilation_rejects_short_chains_and_bad_blocks() {
        let base = hermitian_dilation(&pauli_z(), 1.0).unwrap();
        assert!(matches!(
            chain_dilation(&base, 1),
            Err(Error::BadBlockStructure(_))
        ));
        let four = four_block_dilation(&pauli_z(), 1.0, true).unwrap();
        assert!(matches!(
            chain_dilation(&four, 2),
            Err(Error::BadBlockStructure(_))
        ));
    }

    #[test]
    fn extract_block_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let be = hermitian_dilation(&pauli_z(), 1.0).unwrap();
        assert!(extract_block(&be).max_diff(&pauli_z()) < 1e-12);

        let a = random_contraction(&mut rng, 4, 0.85);
        let be = minimal_dilation(&a, 1e-10).unwrap();
        assert!(extract_block(&be).max_diff(&a) < 1e-9);

        let alpha = 2.0;
        let be = four_block_dilation(&a, alpha, true).unwrap();
        let expect = a.scale(C64::new(1.0 / alpha, 0.0));
        assert!(extract_block(&be).max_diff(&expect) < 1e-9);
    }
}
