//! Least-squares problem construction and the exact-solution oracle.
//!
//! The objective throughout is `f(x) = 1/2 <x, Hx> - <b, x>` with `H = AᵀA`
//! for a full-column-rank `A` (n x d, n >= d) and `b` in R^d. A raw data pair
//! `(A, y)` with `y` in R^n is stored as `b = Aᵀy`. The oracle holds a thin
//! SVD `A = U Σ Vᵀ` and the exact minimizer, from which the prediction error
//! `δ = 1/2 ||x - x*||²_H` of any iterate is measured exactly.

mod matrix_market;

pub use matrix_market::load_matrix_market;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::randmat;
use crate::rng;
use crate::sketch::SketchOperator;

/// Numerical rank-deficiency threshold relative to the top singular value
/// (double-precision SVD noise floor).
pub const RANK_TOL: f64 = 1e-12;

/// The data pair of an overdetermined least-squares instance.
#[derive(Clone, Debug)]
pub struct LeastSquaresProblem {
    a: DMatrix<f64>,
    b: DVector<f64>,
    seed: u64,
}

impl LeastSquaresProblem {
    /// Builds a problem from `A` (n x d) and `b = Aᵀy` (length d).
    ///
    /// Full column rank is asserted later, where the SVD is computed
    /// ([`compute_oracle`]); construction only validates shapes and
    /// finiteness.
    pub fn new(a: DMatrix<f64>, b: DVector<f64>, seed: u64) -> Result<Self> {
        let (n, d) = a.shape();
        if n < d || d == 0 {
            return Err(Error::Dimension(format!(
                "need n >= d >= 1, got n={n}, d={d}"
            )));
        }
        if b.len() != d {
            return Err(Error::Dimension(format!(
                "b has length {}, expected d={d}",
                b.len()
            )));
        }
        if a.iter().any(|v| !v.is_finite()) || b.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain(
                "problem data contains non-finite entries".into(),
            ));
        }
        Ok(LeastSquaresProblem { a, b, seed })
    }

    /// Builds a problem from raw least-squares data `(A, y)`, `y` in R^n.
    pub fn from_data_pair(a: DMatrix<f64>, y: &DVector<f64>, seed: u64) -> Result<Self> {
        if y.len() != a.nrows() {
            return Err(Error::Dimension(format!(
                "y has length {}, expected n={}",
                y.len(),
                a.nrows()
            )));
        }
        let b = a.transpose() * y;
        Self::new(a, b, seed)
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn b(&self) -> &DVector<f64> {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.nrows()
    }

    pub fn d(&self) -> usize {
        self.a.ncols()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Gradient `∇f(x) = Hx - b`, evaluated as `Aᵀ(Ax) - b` without forming
    /// `H` (`O(nd)` per call).
    pub fn gradient(&self, x: &DVector<f64>) -> DVector<f64> {
        self.a.transpose() * (&self.a * x) - &self.b
    }

    /// `H v = Aᵀ(A v)` without forming `H`.
    pub fn h_apply(&self, v: &DVector<f64>) -> DVector<f64> {
        self.a.transpose() * (&self.a * v)
    }
}

/// Synthetic instance with a prescribed spectrum: `A = U₀ D V₀ᵀ` with
/// Haar-random orthonormal factors and singular values log-spaced from 1
/// down to `1/cond`; `b = Aᵀy` with standard normal `y`. Deterministic per
/// seed.
pub fn generate_synthetic(n: usize, d: usize, cond: f64, seed: u64) -> Result<LeastSquaresProblem> {
    if n < d || d < 2 {
        return Err(Error::Dimension(format!(
            "need n >= d >= 2, got n={n}, d={d}"
        )));
    }
    if !cond.is_finite() || cond < 1.0 {
        return Err(Error::Domain(format!(
            "cond must be finite and >= 1, got {cond}"
        )));
    }
    let mut rng = rng::stream(seed, rng::STREAM_PROBLEM);
    let u0 = randmat::haar_columns(n, d, &mut rng);
    let v0 = randmat::haar_columns(d, d, &mut rng);
    let exponent = cond.ln();
    let sigmas = DVector::from_fn(d, |i, _| (-exponent * i as f64 / (d - 1) as f64).exp());
    let mut a = u0;
    for j in 0..d {
        a.column_mut(j).scale_mut(sigmas[j]);
    }
    let a = a * v0.transpose();
    let y = DVector::from_fn(n, |_, _| {
        use rand::Rng;
        rng.sample(rand_distr::StandardNormal)
    });
    LeastSquaresProblem::from_data_pair(a, &y, seed)
}

/// Thin SVD of `A` plus the exact minimizer; the measurement instrument for
/// every convergence experiment.
#[derive(Clone, Debug)]
pub struct ErrorOracle {
    u: DMatrix<f64>,
    sigma: DVector<f64>,
    v: DMatrix<f64>,
    x_star: DVector<f64>,
}

impl ErrorOracle {
    pub fn u(&self) -> &DMatrix<f64> {
        &self.u
    }

    /// Singular values, nonincreasing.
    pub fn sigma(&self) -> &DVector<f64> {
        &self.sigma
    }

    pub fn v(&self) -> &DMatrix<f64> {
        &self.v
    }

    pub fn x_star(&self) -> &DVector<f64> {
        &self.x_star
    }

    pub fn d(&self) -> usize {
        self.sigma.len()
    }

    pub fn n(&self) -> usize {
        self.u.nrows()
    }

    /// Prediction error `δ = 1/2 ||x - x*||²_H` of an iterate.
    pub fn delta(&self, x: &DVector<f64>) -> Result<f64> {
        error_delta(self, x)
    }
}

/// Thin SVD `A = U Σ Vᵀ` and `x* = V Σ⁻² Vᵀ b`.
///
/// Going through the SVD (not a normal-equation Cholesky) keeps the oracle
/// accurate at condition numbers up to ~1e8.
pub fn compute_oracle(p: &LeastSquaresProblem) -> Result<ErrorOracle> {
    let svd = p.a.clone().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested Vᵀ");
    let sigma = svd.singular_values;
    let d = p.d();
    let s1 = sigma[0];
    let sd = sigma[d - 1];
    if sd.is_nan() || sd <= RANK_TOL * s1 {
        return Err(Error::RankDeficient(format!(
            "sigma_d = {sd:e} <= {RANK_TOL:e} * sigma_1 = {:e}",
            RANK_TOL * s1
        )));
    }
    let v = v_t.transpose();
    // x* = V Σ⁻² Vᵀ b
    let mut w = v.transpose() * &p.b;
    for i in 0..d {
        w[i] /= sigma[i] * sigma[i];
    }
    let x_star = &v * w;

    // Postcondition checks: orthonormal U, sorted spectrum, Hx* = b.
    let gram_err = (u.transpose() * &u - DMatrix::identity(d, d)).amax();
    if gram_err > 1e-10 {
        return Err(Error::Numerical(format!(
            "SVD produced non-orthonormal U (max deviation {gram_err:e})"
        )));
    }
    if (1..d).any(|i| sigma[i] > sigma[i - 1]) {
        return Err(Error::Numerical("singular values not sorted".into()));
    }
    let resid = (p.h_apply(&x_star) - &p.b).norm();
    if resid > 1e-8 * p.b.norm() {
        return Err(Error::Numerical(format!(
            "oracle solve residual {resid:e} exceeds 1e-8 * ||b||"
        )));
    }
    Ok(ErrorOracle {
        u,
        sigma,
        v,
        x_star,
    })
}

/// `δ = 1/2 ||Σ Vᵀ (x - x*)||²`, which equals `1/2 ||A(x - x*)||²`.
pub fn error_delta(o: &ErrorOracle, x: &DVector<f64>) -> Result<f64> {
    if x.len() != o.d() {
        return Err(Error::Dimension(format!(
            "iterate has length {}, expected {}",
            x.len(),
            o.d()
        )));
    }
    let mut w = o.v.transpose() * (x - &o.x_star);
    for i in 0..o.d() {
        w[i] *= o.sigma[i];
    }
    Ok(0.5 * w.norm_squared())
}

/// Eigenvalues of `C_S = (SU)ᵀ(SU)`, sorted nonincreasing.
///
/// The spectrum of `C_S` fully determines the behavior of every
/// sketch-preconditioned first-order method on this problem.
pub fn spectrum_cs(o: &ErrorOracle, s: &SketchOperator) -> Result<Vec<f64>> {
    spectrum_cs_of(&o.u, s)
}

/// [`spectrum_cs`] for a raw column-orthonormal basis.
pub fn spectrum_cs_of(u: &DMatrix<f64>, s: &SketchOperator) -> Result<Vec<f64>> {
    let su = s.apply(u)?;
    let c = su.transpose() * &su;
    let mut eigs: Vec<f64> = c.symmetric_eigen().eigenvalues.iter().copied().collect();
    eigs.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    Ok(eigs)
}
