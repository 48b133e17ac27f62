//! Output matrices of production matrices, and the augmented-product
//! identity that links the two.
//!
//! For a lower-Hessenberg production matrix `P`, the output matrix `A` has
//! rows `a_{n,k} = (P^n)_{0,k}` (so `a_{0,k} = δ_{0k}`). The augmented matrix
//! `P̃` is `P` with the row `e_0` prepended; it is lower-triangular, and the
//! output matrix factors as the product `⋯ [I_2 ⊕ P̃][I_1 ⊕ P̃][I_0 ⊕ P̃]`,
//! which truncation-stability lets us verify window by window.

use super::{MatError, Scalar, Shape, TriMat};

/// First `rows` rows of the output matrix of `P`.
///
/// Requires the window of `P` to satisfy `size ≥ rows + 1` so every entry of
/// the result is exact.
pub fn output_matrix<S: Scalar>(p: &TriMat<S>, rows: usize) -> Result<TriMat<S>, MatError> {
    if p.size() < rows + 1 {
        return Err(MatError::TruncationTooSmall {
            have: p.size(),
            need: rows + 1,
        });
    }
    let n = p.size();
    let mut out = TriMat::zero(rows, Shape::Lower);
    let mut v: Vec<S> = (0..n)
        .map(|i| if i == 0 { S::one() } else { S::zero() })
        .collect();
    for r in 0..rows {
        for k in 0..=r {
            out.set(r, k, v[k].clone());
        }
        if r + 1 < rows {
            v = p.row_vec_mul(&v);
        }
    }
    Ok(out)
}

/// Largest window size at which `augment` can be formed from `p`: one more
/// than the source size when the missing superdiagonal entry is a
/// structural zero, the source size otherwise.
pub fn augment_window<S: Scalar>(p: &TriMat<S>) -> usize {
    match p.shape() {
        Shape::Lower => p.size() + 1,
        _ => p.size(),
    }
}

/// The augmented matrix `P̃ = [e_0; P]` at window size `m` (row 0 becomes
/// `e_0`, row `i ≥ 1` is row `i-1` of `P`).
pub fn augment<S: Scalar>(p: &TriMat<S>, m: usize) -> TriMat<S> {
    assert!(m <= augment_window(p), "augmented window larger than source");
    TriMat::from_fn(m, Shape::Lower, |i, j| {
        if i == 0 {
            if j == 0 {
                S::one()
            } else {
                S::zero()
            }
        } else if j >= p.size() {
            S::zero()
        } else {
            p.get(i - 1, j).clone()
        }
    })
}

/// Verifies the augmented-product identity: the window of
/// `⋯ [I_1 ⊕ P̃][I_0 ⊕ P̃]` equals the window of `A`.
///
/// Returns the common window size used on success.
pub fn augmented_production_check<S: Scalar>(
    p: &TriMat<S>,
    a: &TriMat<S>,
) -> Result<bool, MatError> {
    let m = augment_window(p).min(a.size());
    if m < 2 {
        return Err(MatError::TruncationTooSmall { have: m, need: 2 });
    }
    let p_aug = augment(p, m);
    // The product reads [I_{m-2} ⊕ P̃] ⋯ [I_1 ⊕ P̃] [I_0 ⊕ P̃]; assemble left
    // to right so the innermost factor (shift 0) ends up rightmost.
    let mut ordered = TriMat::identity(m);
    for shift in (0..m - 1).rev() {
        let factor = p_aug.truncate(m - shift).shifted_embed(shift, m);
        ordered = ordered.mul(&factor)?;
    }
    Ok(ordered == a.truncate(m))
}
