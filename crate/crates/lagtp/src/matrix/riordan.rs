use super::{conjugate_block, Mat, MatrixError};
use crate::poly::{factorial, Poly, QPoly, Var};
use crate::series::Series;
use num_rational::BigRational;

fn ratio(n: usize, k: usize) -> BigRational {
    BigRational::new(factorial(n as u64), factorial(k as u64))
}

fn integral(x: QPoly, row: usize, col: usize) -> Result<Poly, MatrixError> {
    x.to_z().map_err(|_| MatrixError::NonIntegral { row, col, what: x.to_string() })
}

/// `n x n` block of the exponential Riordan array `R[F, G]`, whose column `k`
/// has EGF `F G^k / k!`. Needs `F(0) = 1`, `G(0) = 0`, and both series known
/// to order at least `n - 1`.
pub fn riordan_matrix(f: &Series, g: &Series, n: usize) -> Result<Mat, MatrixError> {
    if n == 0 {
        return Ok(Mat::zeros(0, 0));
    }
    let ord = n - 1;
    assert!(f.order() >= ord && g.order() >= ord, "series too short for an {n}x{n} Riordan block");
    if !g.coef(0).is_zero() {
        return Err(crate::series::SeriesError::NonzeroConstant.into());
    }
    let (f, g) = (f.truncate(ord), g.truncate(ord));
    let mut out = Mat::zeros(n, n);
    let mut col = f;
    for k in 0..n {
        for i in k..n {
            let x = col.coef(i).scale(&ratio(i, k));
            out.set(i, k, integral(x, i, k)?);
        }
        col = &col * &g;
    }
    Ok(out)
}

/// The `A` and `Z` sequences of `R[F, G]`: `A = G' o Gbar`, `Z = (F'/F) o Gbar`,
/// with `Gbar` the compositional inverse of `G`.
pub fn riordan_production(f: &Series, g: &Series) -> Result<(Vec<QPoly>, Vec<QPoly>), MatrixError> {
    let gbar = g.reversion()?;
    let a = g.derivative().compose(&gbar)?;
    let z = (&f.derivative() * &f.reciprocal()?).compose(&gbar)?;
    Ok((a.coefs().to_vec(), z.coefs().to_vec()))
}

/// `(n!/k!) (z_{n-k} + k a_{n-k+1})`, with the superdiagonal entry `a_0`.
/// Terms beyond the end of `a` or `z` are zero.
pub fn eaz_entry(a: &[QPoly], z: &[QPoly], n: usize, k: usize) -> QPoly {
    let zero = QPoly::zero();
    let at = |s: &[QPoly], i: usize| s.get(i).cloned().unwrap_or_else(|| zero.clone());
    if k > n + 1 {
        return zero;
    }
    if k == n + 1 {
        return at(a, 0);
    }
    let d = n - k;
    let mut e = at(z, d);
    if k > 0 {
        e += &(&at(a, d + 1) * &QPoly::int(k as i64));
    }
    e.scale(&ratio(n, k))
}

/// Leading `rows x cols` block of the production matrix built from `A` and
/// `Z`. The `n x n` block reads `a_0..a_{n-1}` and `z_0..z_{n-1}`.
pub fn eaz_block(a: &[QPoly], z: &[QPoly], rows: usize, cols: usize) -> Result<Mat, MatrixError> {
    let mut out = Mat::zeros(rows, cols);
    for i in 0..rows {
        for k in 0..cols.min(i + 2) {
            out.set(i, k, integral(eaz_entry(a, z, i, k), i, k)?);
        }
    }
    Ok(out)
}

pub fn eaz_matrix(a: &[QPoly], z: &[QPoly], n: usize) -> Result<Mat, MatrixError> {
    eaz_block(a, z, n, n)
}

/// Conjugating an `(A, Z)` production matrix by `B_xi` gives the `(A, Z + xi A)`
/// one. Checked on the leading `n x n` block.
pub fn bx_conjugate_eaz_identity_check(a: &[QPoly], z: &[QPoly], xi: Var, n: usize) -> Result<bool, MatrixError> {
    let p = eaz_block(a, z, n, n + 1)?;
    let lhs = conjugate_block(&p, xi, n);
    let x = QPoly::var(xi);
    let shifted: Vec<QPoly> = z.iter().zip(a).map(|(zi, ai)| zi + &(&x * ai)).collect();
    Ok(lhs == eaz_matrix(a, &shifted, n)?)
}

