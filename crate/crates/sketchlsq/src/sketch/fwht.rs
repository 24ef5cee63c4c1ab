//! In-place fast Walsh–Hadamard transform.

use crate::error::{Error, Result};

/// Unnormalized Walsh–Hadamard butterfly, in place.
///
/// Computes `H_n x` where `H_n` is the Sylvester Hadamard matrix of order
/// `n = x.len()`. Applying it twice multiplies the input by `n`, since
/// `H_n H_n = n I`. Cost is `n log2 n` additions.
pub fn fwht(x: &mut [f64]) -> Result<()> {
    let n = x.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::Dimension(format!(
            "fwht requires a power-of-two length, got {n}"
        )));
    }
    let mut h = 1;
    while h < n {
        let step = h * 2;
        let mut i = 0;
        while i < n {
            for j in i..i + h {
                let a = x[j];
                let b = x[j + h];
                x[j] = a + b;
                x[j + h] = a - b;
            }
            i += step;
        }
        h = step;
    }
    Ok(())
}
