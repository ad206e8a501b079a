//! Quantum MDS parameter derivation from Hermitian self-orthogonal codes.
//!
//! Quantum codes are represented by parameters only; the Hermitian
//! construction is used as a black box.

use thiserror::Error;

use crate::codes::{CodeError, LinearCode, DEFAULT_ENUM_BUDGET, DEFAULT_MINOR_BUDGET};
use crate::field::checked_pow;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantumError {
    #[error("Hermitian conversion requires even extension degree, got h = {0}")]
    OddDegree(u32),
    #[error("code is not Hermitian self-orthogonal (hull dimension {got} != k = {k})")]
    NotHermitianSo { got: usize, k: usize },
    #[error("code is not certified MDS")]
    NotMds,
    #[error("s = {s} out of range 0..={max}")]
    RangeError { s: u64, max: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Parameters [[N, K, D]] of a base-`base` quantum code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub base: u64,
}

impl QuantumParams {
    pub fn display(&self) -> String {
        format!("[[{},{},{}]]_{}", self.n, self.k, self.d, self.base)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingletonReport {
    /// 2D <= N - K + 2
    pub bound_ok: bool,
    /// equality holds
    pub is_mds: bool,
}

/// Quantum Singleton bound check.
pub fn singleton_check(qp: &QuantumParams) -> SingletonReport {
    let lhs = 2i128 * qp.d as i128;
    let rhs = qp.n as i128 - qp.k as i128 + 2;
    SingletonReport {
        bound_ok: lhs <= rhs,
        is_mds: lhs == rhs,
    }
}

/// Converts a Hermitian self-orthogonal MDS [n, k] code over GF(p^h)
/// (h even) into quantum MDS parameters [[n, n-2k, k+1]] over GF(p^(h/2)).
/// Self-orthogonality at e = h/2 is verified by the hull rank; the MDS
/// property must be certified by provenance or verified within budget.
pub fn hermitian_to_quantum(code: &LinearCode, seed: u64) -> Result<QuantumParams, QuantumError> {
    let field = code.field();
    if field.h() % 2 != 0 {
        return Err(QuantumError::OddDegree(field.h()));
    }
    let e = field.h() / 2;
    let k = code.k();
    let hull = code.hull_dim(e)?;
    if hull != k {
        return Err(QuantumError::NotHermitianSo { got: hull, k });
    }
    let mds_ok = code.mds_by_construction()
        || code
            .is_mds_auto(DEFAULT_ENUM_BUDGET, DEFAULT_MINOR_BUDGET, seed)
            .is_positive();
    if !mds_ok {
        return Err(QuantumError::NotMds);
    }
    let n = code.n() as u64;
    let params = QuantumParams {
        n,
        k: n - 2 * k as u64,
        d: k as u64 + 1,
        base: checked_pow(field.p(), e).expect("sqrt(q) fits"),
    };
    debug_assert!(singleton_check(&params).is_mds);
    Ok(params)
}

/// [[N-s, N+s-2K, K+1-s]] over `base`, for 0 <= s <= K-1; the quantum
/// Singleton bound holds with equality identically.
pub fn quantum_mds_from_shortening(
    n_code: u64,
    k_code: u64,
    s: u64,
    base: u64,
) -> Result<QuantumParams, QuantumError> {
    if k_code == 0 || s > k_code - 1 {
        return Err(QuantumError::RangeError {
            s,
            max: k_code.saturating_sub(1),
        });
    }
    // the source codes are self-orthogonal, so K <= N/2
    if 2 * k_code > n_code + s {
        return Err(QuantumError::RangeError { s, max: k_code - 1 });
    }
    let params = QuantumParams {
        n: n_code - s,
        k: n_code + s - 2 * k_code,
        d: k_code + 1 - s,
        base,
    };
    debug_assert!(singleton_check(&params).is_mds);
    Ok(params)
}
