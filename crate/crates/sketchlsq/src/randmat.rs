//! Random matrix primitives shared by sketching and synthetic problems.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

pub(crate) fn standard_normal<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// `rows x cols` matrix with orthonormal columns distributed under the Haar
/// measure (`rows >= cols`).
///
/// Plain QR of a Gaussian matrix is biased; multiplying each column of `Q` by
/// the sign of the matching diagonal entry of `R` restores exact uniformity.
pub(crate) fn haar_columns<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<f64> {
    assert!(rows >= cols, "haar_columns needs rows >= cols");
    let g = standard_normal(rows, cols, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..cols {
        if r[(j, j)] < 0.0 {
            for i in 0..rows {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}
