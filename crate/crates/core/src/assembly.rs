//! Arithmetic over block-encodings: addition and subtraction by Hadamard
//! conjugation, multiplication through chain dilations, and the spectral
//! shift-rescale used ahead of sign-sensitive transforms.

use crate::dilation::{chain_dilation, contraction_dilation_2n, BlockEncoding, Provenance};
use crate::error::{Error, Result};
use crate::linalg::{C64, ComplexMatrix};

/// Addition and subtraction of two same-shape block-encodings:
/// `(H (x) I) diag(U_A, I) diag(I, U_B) (H (x) I)` places `(A+B)/2` in the
/// upper-left block and `(A-B)/2` in the upper-right.
///
/// Returned subnormalization is `alpha_A + alpha_B`; for matched inputs
/// (`alpha_A = alpha_B = alpha`) the sum encoding therefore carries `A + B`
/// with subnormalization `2 alpha`. For mismatched alphas the payloads stay
/// the plain block means and only the post-selection probability changes.
pub fn linear_combine(
    be_a: &BlockEncoding,
    be_b: &BlockEncoding,
) -> Result<(BlockEncoding, BlockEncoding)> {
    if be_a.dim() != be_b.dim()
        || be_a.system_dim() != be_b.system_dim()
        || be_a.block_indices() != be_b.block_indices()
    {
        return Err(Error::DimensionMismatch(format!(
            "operands must agree in dimension and block position: {} vs {}",
            be_a.dim(),
            be_b.dim()
        )));
    }
    let d = be_a.dim();
    let ua = be_a.unitary();
    let ub = be_b.unitary();

    // (H (x) I) diag(U_A, I) diag(I, U_B) (H (x) I), assembled from its
    // 2x2 block form.
    let sum_block = (ua + ub).scale(C64::new(0.5, 0.0));
    let diff_block = (ua - ub).scale(C64::new(0.5, 0.0));
    let mut u = ComplexMatrix::zeros(2 * d, 2 * d);
    u.set_block(0, 0, &sum_block);
    u.set_block(0, d, &diff_block);
    u.set_block(d, 0, &diff_block);
    u.set_block(d, d, &sum_block);

    let alpha = be_a.alpha() + be_b.alpha();
    let (r, c) = be_a.block_indices();
    let blocks_per_row = d / be_a.system_dim();
    let sum = BlockEncoding::new(
        u.clone(),
        alpha,
        be_a.system_dim(),
        be_a.ancilla_count() + 1,
        r,
        c,
        Provenance::Sum,
    )?;
    // The difference payload sits in the upper-right quadrant: same block
    // row, column shifted by the new most-significant ancilla.
    let diff = BlockEncoding::new(
        u,
        alpha,
        be_a.system_dim(),
        be_a.ancilla_count() + 1,
        r,
        c + blocks_per_row,
        Provenance::Difference,
    )?;
    Ok((sum, diff))
}

/// Product of two block-encodings: both operands are lifted to k = 2 chain
/// dilations and multiplied, leaving `A B` in the top-left block with
/// subnormalization `alpha_A alpha_B`.
pub fn multiply(be_a: &BlockEncoding, be_b: &BlockEncoding) -> Result<BlockEncoding> {
    if be_a.system_dim() != be_b.system_dim() {
        return Err(Error::DimensionMismatch(format!(
            "payload dimensions differ: {} vs {}",
            be_a.system_dim(),
            be_b.system_dim()
        )));
    }
    let va = chain_dilation(&as_2n_dilation(be_a)?, 2)?;
    let vb = chain_dilation(&as_2n_dilation(be_b)?, 2)?;
    let product = va.unitary() * vb.unitary();
    BlockEncoding::new(
        product,
        be_a.alpha() * be_b.alpha(),
        be_a.system_dim(),
        ancilla_overhead(2),
        0,
        0,
        Provenance::Product { factors: 2 },
    )
}

/// Product of `p >= 2` block-encodings through `(p+1)N`-dimensional chain
/// dilations. The recorded ancilla count is the register overhead
/// `ceil(log2(p+1))`.
pub fn multiply_many(bes: &[BlockEncoding]) -> Result<BlockEncoding> {
    let p = bes.len();
    if p < 2 {
        return Err(Error::DimensionMismatch(
            "need at least two block-encodings to multiply".into(),
        ));
    }
    let n = bes[0].system_dim();
    if bes.iter().any(|b| b.system_dim() != n) {
        return Err(Error::DimensionMismatch(
            "all payloads must share one dimension".into(),
        ));
    }
    let mut product: Option<ComplexMatrix> = None;
    let mut alpha = 1.0;
    for be in bes {
        let v = chain_dilation(&as_2n_dilation(be)?, p)?;
        alpha *= be.alpha();
        product = Some(match product {
            None => v.unitary().clone(),
            Some(acc) => &acc * v.unitary(),
        });
    }
    BlockEncoding::new(
        product.unwrap(),
        alpha,
        n,
        ancilla_overhead(p),
        0,
        0,
        Provenance::Product { factors: p },
    )
}

/// Ancilla qubits needed to index a `(p+1)`-slot chain register.
pub fn ancilla_overhead(p: usize) -> usize {
    let slots = p + 1;
    if slots <= 1 {
        0
    } else {
        (usize::BITS - (slots - 1).leading_zeros()) as usize
    }
}

/// Block-encoding of `(I + beta * H/alpha) / 2` from a block-encoding of a
/// Hermitian `H/alpha`, using two extra ancillas: an x-rotation through
/// `2 acos(beta)` encodes `beta I`, and a Hadamard pair sums it with the
/// identity. The payload spectrum lands in `[(1-beta)/2, (1+beta)/2]`.
pub fn shift_rescale(be_h: &BlockEncoding, beta: f64) -> Result<BlockEncoding> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::BetaOutOfRange(beta));
    }
    let payload = be_h.payload();
    payload
        .check_hermitian(1e-9)
        .map_err(|_| Error::NotHermitianPayload(payload.hermitian_error()))?;

    let d = be_h.dim();
    // U_{beta H/alpha} = R_x(2 acos beta) (x) U_{H/alpha}; the rotation's
    // (0,0) entry is cos(acos beta) = beta.
    let theta = beta.clamp(-1.0, 1.0).acos();
    let rx = ComplexMatrix::new(
        2,
        2,
        vec![
            C64::new(theta.cos(), 0.0),
            C64::new(0.0, -theta.sin()),
            C64::new(0.0, -theta.sin()),
            C64::new(theta.cos(), 0.0),
        ],
    )?;
    let u_beta_h = rx.kron(be_h.unitary());

    // One more ancilla sums with the identity:
    // (H (x) I) [ |0><0| (x) I + |1><1| (x) U_{beta H/a} ] (H (x) I).
    let id = ComplexMatrix::identity(2 * d);
    let sum = (&id + &u_beta_h).scale(C64::new(0.5, 0.0));
    let diff = (&id - &u_beta_h).scale(C64::new(0.5, 0.0));
    let mut u = ComplexMatrix::zeros(4 * d, 4 * d);
    u.set_block(0, 0, &sum);
    u.set_block(0, 2 * d, &diff);
    u.set_block(2 * d, 0, &diff);
    u.set_block(2 * d, 2 * d, &sum);

    let (r, c) = be_h.block_indices();
    BlockEncoding::new(
        u,
        be_h.alpha(),
        be_h.system_dim(),
        be_h.ancilla_count() + 2,
        r,
        c,
        Provenance::ShiftRescale { beta },
    )
}

/// View any 2N-structured block-encoding as a top-left dilation; payloads in
/// other positions are re-dilated around the extracted block.
fn as_2n_dilation(be: &BlockEncoding) -> Result<BlockEncoding> {
    if be.dim() == 2 * be.system_dim() && be.block_indices() == (0, 0) {
        return Ok(be.clone());
    }
    contraction_dilation_2n(&be.payload(), be.alpha())
}
