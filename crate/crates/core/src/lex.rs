use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::tol::Tolerances;

fn quantize(x: f64, quantum: f64) -> f64 {
    // +0.0 normalizes a rounded -0.0.
    libm::round(x / quantum) + 0.0
}

/// Lexicographic comparison after quantizing entries to multiples of
/// `lex_quantum`, scanning row-major. Complex entries compare real parts
/// first, then imaginary parts.
pub fn lex_compare(m: &Matrix, n: &Matrix, tol: &Tolerances) -> Result<Ordering> {
    if m.shape() != n.shape() {
        return Err(Error::ShapeMismatch { expected: m.shape(), found: n.shape() });
    }
    let q = tol.lex_quantum;
    for (a, b) in m.as_slice().iter().zip(n.as_slice()) {
        for (x, y) in [(a.re, b.re), (a.im, b.im)] {
            let ord = quantize(x, q).total_cmp(&quantize(y, q));
            if ord != Ordering::Equal {
                return Ok(ord);
            }
        }
    }
    Ok(Ordering::Equal)
}

/// The lexicographically smaller of two same-shape matrices (first on ties).
pub fn lex_min<'a>(m: &'a Matrix, n: &'a Matrix, tol: &Tolerances) -> Result<&'a Matrix> {
    Ok(match lex_compare(m, n, tol)? {
        Ordering::Greater => n,
        _ => m,
    })
}
