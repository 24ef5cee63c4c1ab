//! Factorization of the sketched Hessian `H_S = (SA)ᵀ(SA)` and the linear
//! solves used inside every iteration.
//!
//! The factor is computed once from `SA` (never from the squared matrix
//! `H_S`, which would halve the usable precision). The default is a
//! Householder QR, `SA = QR`, giving `H_S = RᵀR` and two triangular solves
//! per application; a thin-SVD fallback covers nearly rank-deficient
//! sketches.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorMethod {
    Qr,
    Svd,
}

enum FactorPayload {
    /// `d x d` upper-triangular `R` with positive diagonal.
    Qr(DMatrix<f64>),
    /// Singular values and right factor of `SA = Ũ Σ̃ Ṽᵀ`.
    Svd {
        sigma: DVector<f64>,
        v: DMatrix<f64>,
    },
}

/// A factorization of `H_S` supporting `O(d²)` linear solves.
pub struct PreconditionerFactor {
    method: FactorMethod,
    payload: FactorPayload,
    d: usize,
}

/// Relative threshold under which the sketched matrix is declared
/// rank-deficient (the caller should enlarge the sketch).
const FACTOR_RANK_TOL: f64 = 1e-12;

/// Factorizes `SA` (m x d, m >= d). Flop cost charged to callers is `m d²`.
pub fn factorize(sa: &DMatrix<f64>, method: FactorMethod) -> Result<PreconditionerFactor> {
    let (m, d) = sa.shape();
    if m < d {
        return Err(Error::Dimension(format!(
            "factorize needs m >= d, got {m} x {d}"
        )));
    }
    let payload = match method {
        FactorMethod::Qr => {
            let mut r = sa.clone().qr().unpack_r();
            // Normalize to a positive diagonal; H_S = RᵀR is unchanged by
            // row sign flips.
            for i in 0..d {
                if r[(i, i)] < 0.0 {
                    for j in i..d {
                        r[(i, j)] = -r[(i, j)];
                    }
                }
            }
            let max_diag = (0..d).fold(0.0f64, |acc, i| acc.max(r[(i, i)].abs()));
            let min_diag = (0..d).fold(f64::INFINITY, |acc, i| acc.min(r[(i, i)].abs()));
            if min_diag.is_nan() || min_diag <= FACTOR_RANK_TOL * max_diag {
                return Err(Error::RankDeficient(format!(
                    "sketched matrix numerically rank-deficient (min |R_ii| = {min_diag:e}); \
                     increase the sketch size"
                )));
            }
            FactorPayload::Qr(r)
        }
        FactorMethod::Svd => {
            let svd = sa.clone().svd(false, true);
            let sigma = svd.singular_values;
            let v = svd.v_t.expect("requested Vᵀ").transpose();
            if sigma[d - 1].is_nan() || sigma[d - 1] <= FACTOR_RANK_TOL * sigma[0] {
                return Err(Error::RankDeficient(format!(
                    "sketched matrix numerically rank-deficient (sigma_min = {:e}); \
                     increase the sketch size",
                    sigma[d - 1]
                )));
            }
            FactorPayload::Svd { sigma, v }
        }
    };
    Ok(PreconditionerFactor { method, payload, d })
}

impl PreconditionerFactor {
    pub fn method(&self) -> FactorMethod {
        self.method
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Solves `H_S x = r`.
    pub fn solve(&self, r: &DVector<f64>) -> Result<DVector<f64>> {
        if r.len() != self.d {
            return Err(Error::Dimension(format!(
                "rhs has length {}, factor expects {}",
                r.len(),
                self.d
            )));
        }
        match &self.payload {
            FactorPayload::Qr(rmat) => {
                // RᵀR x = r: forward then backward triangular solve.
                let w = rmat
                    .transpose()
                    .solve_lower_triangular(r)
                    .ok_or_else(|| Error::Numerical("singular triangular factor".into()))?;
                rmat.solve_upper_triangular(&w)
                    .ok_or_else(|| Error::Numerical("singular triangular factor".into()))
            }
            FactorPayload::Svd { sigma, v } => {
                let mut w = v.transpose() * r;
                for i in 0..self.d {
                    w[i] /= sigma[i] * sigma[i];
                }
                Ok(v * w)
            }
        }
    }

    /// Applies `H_S` (test support; reconstructs from the factor).
    pub fn h_s_apply(&self, x: &DVector<f64>) -> DVector<f64> {
        match &self.payload {
            FactorPayload::Qr(rmat) => rmat.transpose() * (rmat * x),
            FactorPayload::Svd { sigma, v } => {
                let mut w = v.transpose() * x;
                for i in 0..self.d {
                    w[i] *= sigma[i] * sigma[i];
                }
                v * w
            }
        }
    }
}
