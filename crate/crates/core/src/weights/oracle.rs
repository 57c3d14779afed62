//! Weight multiplicities read off a concrete representation.
//!
//! For commuting skew `H₁…H_r` with `H_k² = −Id`, the joint eigenspace where
//! `H_k` acts by `i·s_k` has projector `Π (1 − i s_k H_k)/2`. Odd products of
//! the `H_k` are skew and traceless, so its dimension is the real sum
//! `2^{−r} Σ_{|S| even} (−1)^{|S|/2} (Π_{k∈S} s_k) tr(Π_{k∈S} H_k)`.

use super::WeightsError;
use crate::exactmat::Matrix;
use crate::scalar::Field;

/// Nonzero joint eigenspace dimensions, keyed by sign pattern `s ∈ {±1}^r`
/// (pattern order: first operator most significant, `+` before `−`).
pub fn joint_eigenspace_dims<T: Field>(ops: &[Matrix<T>]) -> Result<Vec<(Vec<i8>, usize)>, WeightsError> {
    let r = ops.len();
    for (i, a) in ops.iter().enumerate() {
        if !a.is_skew() || !(-&(a * a)).is_identity() {
            return Err(WeightsError::NotCommutingComplex);
        }
        for b in &ops[i + 1..] {
            if a.shape() != b.shape()
                || !a
                    .commutator(b)
                    .map_err(|_| WeightsError::NotCommutingComplex)?
                    .is_zero()
            {
                return Err(WeightsError::NotCommutingComplex);
            }
        }
    }
    let Some(first) = ops.first() else {
        return Ok(Vec::new());
    };
    let n = first.rows();
    let traces: Vec<T> = (0u32..1 << r)
        .map(|subset| {
            if subset.count_ones() % 2 == 1 {
                return T::zero();
            }
            let mut prod = Matrix::identity(n);
            for (k, op) in ops.iter().enumerate() {
                if subset >> k & 1 == 1 {
                    prod = &prod * op;
                }
            }
            prod.trace()
        })
        .collect();
    let scale = T::from_i64(1 << r);
    let mut out = Vec::new();
    for pattern in 0u32..1 << r {
        let signs: Vec<i8> = (0..r)
            .map(|k| if pattern >> (r - 1 - k) & 1 == 1 { -1 } else { 1 })
            .collect();
        let mut total = T::zero();
        for (subset, tr) in traces.iter().enumerate() {
            if tr.is_zero() {
                continue;
            }
            let size = (subset as u32).count_ones();
            let mut sign = if size % 4 == 2 { -1i64 } else { 1 };
            for (k, s) in signs.iter().enumerate() {
                if subset >> k & 1 == 1 {
                    sign *= i64::from(*s);
                }
            }
            total = total + T::from_i64(sign) * tr.clone();
        }
        let dim = (total / scale.clone())
            .to_i64_exact()
            .filter(|d| *d >= 0)
            .ok_or(WeightsError::NotCommutingComplex)?;
        if dim > 0 {
            out.push((signs, dim as usize));
        }
    }
    Ok(out)
}
