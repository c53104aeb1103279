//! Laguerre polynomial families, their coefficient matrices and production
//! matrices.

mod weights;

pub use weights::{EdgeWeights, PathWeights, VertexWeights};

use crate::digraphs::{self, DigraphError, OracleWeights};
use crate::matrix::{binomial_matrix, diag_scale, inverse_unit_lower, lower_bidiagonal, riordan_matrix, upper_bidiagonal, HessMatrix, Mat, MatrixError};
use crate::poly::{binomial, falling, rising, Poly, QPoly};
use crate::series::{series_pow_sym, solve_logderiv, solve_riccati, Series, SeriesError};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LaguerreError {
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("Riordan and digraph routes disagree at ({row},{col})")]
    RouteMismatch { row: usize, col: usize },
    #[error("unknown production matrix variant `{0}`")]
    UnknownVariant(String),
}

fn lam_of(alpha: &Poly) -> Poly {
    alpha + &Poly::one()
}

fn n_(n: usize) -> Poly {
    Poly::int(n as i64)
}

/// The monic unsigned Laguerre polynomial
/// `sum_k binom(n,k) (n+alpha)^{falling n-k} x^k`.
pub fn monic_laguerre(n: usize, alpha: &Poly, x: &Poly) -> Poly {
    let top = alpha + &n_(n);
    (0..=n)
        .map(|k| Poly::constant(binomial(n as u64, k as u64)) * falling(&top, (n - k) as u32) * x.pow(k as u32))
        .sum()
}

/// `x^n L_n(1/x)`: `sum_k binom(n,k) (n+alpha)^{falling k} x^k`.
pub fn monic_laguerre_reversed(n: usize, alpha: &Poly, x: &Poly) -> Poly {
    let top = alpha + &n_(n);
    (0..=n)
        .map(|k| Poly::constant(binomial(n as u64, k as u64)) * falling(&top, k as u32) * x.pow(k as u32))
        .sum()
}

/// `binom(n,k) (1+alpha+k)^{rising n-k}`.
pub fn coeff_matrix_uni(alpha: &Poly, size: usize) -> Mat {
    let lam = lam_of(alpha);
    Mat::from_fn(size, size, |n, k| {
        if k > n {
            Poly::zero()
        } else {
            Poly::constant(binomial(n as u64, k as u64)) * rising(&(&lam + &n_(k)), (n - k) as u32)
        }
    })
}

/// First multivariate coefficient matrix, by summing over Laguerre digraphs.
pub fn coeff_matrix_first_mv(alpha: &Poly, w: &EdgeWeights, size: usize) -> Result<Mat, DigraphError> {
    digraphs::oracle_matrix(size, &OracleWeights::FirstMv(w.clone()), alpha)
}

/// Second multivariate coefficient matrix (generalized when `w.z` is set),
/// via the exponential Riordan array `R[F1^{1+alpha}, G]`, with `G` replaced
/// by `G / zp` in the flat case.
pub fn coeff_matrix_second_mv(alpha: &Poly, w: &VertexWeights, size: usize, flat: bool) -> Result<Mat, LaguerreError> {
    if size == 0 {
        return Ok(Mat::zeros(0, 0));
    }
    let (f, g) = second_mv_egfs(alpha, w, size - 1, flat)?;
    Ok(riordan_matrix(&f, &g, size)?)
}

/// The `(F, G)` pair of the second multivariate matrix, to order `ord`.
pub fn second_mv_egfs(alpha: &Poly, w: &VertexWeights, ord: usize, flat: bool) -> Result<(Series, Series), LaguerreError> {
    let q = Poly::to_q;
    // cycle side: F1'/F1 = yfp + yv G_y with G_y' = yp + (yda+ydd) G_y + yv G_y^2
    let gy = solve_riccati(&q(&w.yp), &q(&(&w.yda + &w.ydd)), &q(&w.yv), ord);
    let f1 = solve_logderiv(&[q(&w.yfp), q(&w.yv)], &gy, &QPoly::one(), ord)?;
    let f = series_pow_sym(&f1, &q(&lam_of(alpha)), ord)?;
    let z = w.path();
    let g = if flat {
        solve_riccati(&QPoly::one(), &q(&(&z.zda + &z.zdd)), &q(&(&z.zp * &z.zv)), ord)
    } else {
        solve_riccati(&q(&z.zp), &q(&(&z.zda + &z.zdd)), &q(&z.zv), ord)
    };
    Ok((f, g))
}

/// Second multivariate matrix by both routes, failing on any disagreement.
pub fn coeff_matrix_second_mv_checked(alpha: &Poly, w: &VertexWeights, size: usize, flat: bool) -> Result<Mat, LaguerreError> {
    let era = coeff_matrix_second_mv(alpha, w, size, flat)?;
    let oracle = digraphs::oracle_matrix(size, &OracleWeights::SecondMv { w: w.clone(), flat }, alpha)?;
    match era.first_difference(&oracle) {
        None => Ok(era),
        Some((row, col)) => Err(LaguerreError::RouteMismatch { row, col }),
    }
}

/// The `(F, G)` pair of the first multivariate matrix in symbolic `vm, v0, vp`:
/// `F = exp(lam v0 t) D^{-lam}`, `G = N / D` with
/// `D = (vp e^{vm t} - vm e^{vp t}) / (vp - vm)`, `N = (e^{vp t} - e^{vm t}) / (vp - vm)`.
pub fn first_mv_egfs(alpha: &Poly, ord: usize) -> Result<(Series, Series), LaguerreError> {
    let (vm, v0, vp) = (Poly::named("vm"), Poly::named("v0"), Poly::named("vp"));
    let diff = &vp - &vm;
    let exact = |p: Poly| p.div_exact(&diff).expect("divided difference is a polynomial");
    let d: Vec<Poly> = (0..=ord).map(|n| exact(&vp * &vm.pow(n as u32) - &vm * &vp.pow(n as u32))).collect();
    let nn: Vec<Poly> = (0..=ord).map(|n| exact(vp.pow(n as u32) - vm.pow(n as u32))).collect();
    let ds = Series::from_egf(&d, ord);
    let ns = Series::from_egf(&nn, ord);
    let lam = lam_of(alpha).to_q();
    let exponent = &Series::t(ord).scale(&(&lam * &v0.to_q())) - &ds.log()?.scale(&lam);
    let f = exponent.exp()?;
    let g = &ns * &ds.reciprocal()?;
    Ok((f, g))
}

/// The named production matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProdMat {
    /// Tridiagonal matrix of the univariate coefficient matrix.
    Pcirc,
    /// Quadridiagonal matrix of `L B_x`.
    P,
    /// Tridiagonal matrix of the flat second multivariate matrix.
    PcircFlat,
    /// Its binomial row-generating counterpart.
    PFlat,
    /// Tridiagonal matrix of the non-flat second multivariate matrix.
    PcircY,
    /// Its binomial row-generating counterpart.
    PY,
}

impl ProdMat {
    pub const ALL: [ProdMat; 6] = [ProdMat::Pcirc, ProdMat::P, ProdMat::PcircFlat, ProdMat::PFlat, ProdMat::PcircY, ProdMat::PY];

    pub fn name(self) -> &'static str {
        match self {
            ProdMat::Pcirc => "pcirc",
            ProdMat::P => "p",
            ProdMat::PcircFlat => "pcirc-flat",
            ProdMat::PFlat => "p-flat",
            ProdMat::PcircY => "pcirc-y",
            ProdMat::PY => "p-y",
        }
    }
}

impl fmt::Display for ProdMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProdMat {
    type Err = LaguerreError;
    fn from_str(s: &str) -> Result<ProdMat, LaguerreError> {
        ProdMat::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| LaguerreError::UnknownVariant(s.to_string()))
    }
}

/// Closed-form production matrix. Vertex weights are ignored by the
/// univariate variants; `x` is ignored by the tridiagonal ones.
pub fn prodmat(which: ProdMat, alpha: &Poly, w: &VertexWeights, x: &Poly) -> HessMatrix {
    let lam = lam_of(alpha);
    let (alpha, x) = (alpha.clone(), x.clone());
    let sum_d = &w.yda + &w.ydd;
    let pv = &w.yp * &w.yv;
    let (yp, yv, yfp) = (w.yp.clone(), w.yv.clone(), w.yfp.clone());
    // (superdiagonal, diagonal constant, n-coefficient on the diagonal,
    //  subdiagonal weight, superdiagonal weight in x terms)
    let (sup, diag0, diag_n, sub_w) = match which {
        ProdMat::Pcirc | ProdMat::P => (Poly::one(), lam.clone(), Poly::int(2), Poly::one()),
        ProdMat::PcircFlat | ProdMat::PFlat => (Poly::one(), &lam * &yfp, sum_d.clone(), pv.clone()),
        ProdMat::PcircY | ProdMat::PY => (yp.clone(), &lam * &yfp, sum_d.clone(), yv.clone()),
    };
    let quad = matches!(which, ProdMat::P | ProdMat::PFlat | ProdMat::PY);
    // coefficient of n x on the subdiagonal
    let sub_x = match which {
        ProdMat::P => Poly::int(2),
        _ => sum_d,
    };
    HessMatrix::new(Some(if quad { 2 } else { 1 }), move |n, k| {
        let nn = n_(n);
        if k == n + 1 {
            sup.clone()
        } else if k == n {
            let d = &diag0 + &(&nn * &diag_n);
            if quad { d + &sup * &x } else { d }
        } else if k + 1 == n {
            let s = &nn * &(&nn + &alpha) * &sub_w;
            if quad { s + &nn * &sub_x * &x } else { s }
        } else if k + 2 == n && quad {
            &nn * &(&nn - &Poly::one()) * &sub_w * &x
        } else {
            Poly::zero()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// `Pcirc = L U`.
    TridiagonalLU,
    /// `P = L (L U_x + lam I)`.
    QuadridiagonalLLU,
    /// `PcircFlat = Q + D`.
    FlatSplit,
}

/// Lower-bidiagonal `L` with unit diagonal and `1, 2, 3, ...` below it.
fn l_counting(size: usize) -> Mat {
    lower_bidiagonal(&vec![Poly::one(); size], &(0..size).map(n_).collect::<Vec<_>>())
}

/// `Q` of the flat split: the tridiagonal S-fraction matrix with
/// `alpha_{2k-1} = (k + alpha) yp`, `alpha_{2k} = k yv`, as a bidiagonal product.
pub fn flat_split_q(alpha: &Poly, w: &VertexWeights, size: usize) -> Mat {
    let odd = |k: usize| (&n_(k) + alpha) * &w.yp;
    let even = |k: usize| &n_(k) * &w.yv;
    let l = lower_bidiagonal(&vec![Poly::one(); size + 1], &(0..=size).map(even).collect::<Vec<_>>());
    let u = upper_bidiagonal(&(0..=size).map(|i| odd(i + 1)).collect::<Vec<_>>(), &vec![Poly::one(); size + 1]);
    l.mul(&u).square(size)
}

/// The diagonal `D` of the flat split.
pub fn flat_split_d(alpha: &Poly, w: &VertexWeights, size: usize) -> Mat {
    let lam = lam_of(alpha);
    Mat::diag(&(0..size).map(|n| &lam * &(&w.yfp - &w.yp) + &n_(n) * &(&w.yda + &w.ydd - &w.yp - &w.yv)).collect::<Vec<_>>())
}

/// Check one of the factorization identities on the `size x size` block.
pub fn factorization_check(which: Factorization, alpha: &Poly, w: &VertexWeights, x: &Poly, size: usize) -> bool {
    let lam = lam_of(alpha);
    // factors are built one larger so the product's last row is complete
    let big = size + 1;
    match which {
        Factorization::TridiagonalLU => {
            let u = upper_bidiagonal(&(0..big).map(|i| &lam + &n_(i)).collect::<Vec<_>>(), &vec![Poly::one(); big]);
            l_counting(big).mul(&u).square(size) == prodmat(ProdMat::Pcirc, alpha, w, x).truncate(size)
        }
        Factorization::QuadridiagonalLLU => {
            let l = l_counting(big);
            let ux = Mat::delta(big).add(&Mat::identity(big).scale(x));
            let inner = l.mul(&ux).add(&Mat::identity(big).scale(&lam));
            l.mul(&inner).square(size) == prodmat(ProdMat::P, alpha, w, x).truncate(size)
        }
        Factorization::FlatSplit => {
            let q = flat_split_q(alpha, w, size);
            q.add(&flat_split_d(alpha, w, size)) == prodmat(ProdMat::PcircFlat, alpha, w, x).truncate(size)
        }
    }
}

/// `L = S L^{-1} S` with `S = diag((-1)^i)`.
pub fn unsigned_self_inverse_check(alpha: &Poly, size: usize) -> bool {
    let l = coeff_matrix_uni(alpha, size);
    let inv = inverse_unit_lower(&l).expect("unit lower triangular");
    let s = Mat::diag(&(0..size).map(|i| Poly::int(if i % 2 == 0 { 1 } else { -1 })).collect::<Vec<_>>());
    s.mul(&inv).mul(&s) == l
}

/// Row-generating polynomials `sum_k m_{nk} x^k`, or with `x^{n-k}` when reversed.
pub fn rowgen_polys(m: &Mat, x: &Poly, reversed: bool) -> Vec<Poly> {
    (0..m.rows())
        .map(|n| {
            (0..=n.min(m.cols().saturating_sub(1)))
                .map(|k| m.get(n, k) * &x.pow(if reversed { n - k } else { k } as u32))
                .sum()
        })
        .collect()
}

/// `M B_x`, whose column 0 is the row-generating sequence.
pub fn binomial_rowgen_matrix(m: &Mat, x: &Poly) -> Mat {
    m.mul(&binomial_matrix(x, m.cols()))
}

/// `(L B_x)_{nk} = binom(n,k) L_{n-k}^{(alpha+k)}(x)`.
pub fn prop32_check(alpha: &Poly, x: &Poly, size: usize) -> bool {
    let lhs = binomial_rowgen_matrix(&coeff_matrix_uni(alpha, size), x);
    (0..size).all(|n| {
        (0..=n).all(|k| {
            let shifted = alpha + &n_(k);
            lhs.get(n, k) == &(Poly::constant(binomial(n as u64, k as u64)) * monic_laguerre(n - k, &shifted, x))
        })
    })
}

/// Scaling rows of the plain binomial matrix by `x_i = lam + i - 1` gives
/// the coefficient matrix at `alpha = lam - 1`.
pub fn direct_route_check(lam: &Poly, size: usize) -> bool {
    let pascal = binomial_matrix(&Poly::one(), size);
    let xs: Vec<Poly> = (0..size).map(|m| lam + &n_(m)).collect();
    diag_scale(&pascal, &xs) == coeff_matrix_uni(&(lam - &Poly::one()), size)
}

/// `n! [t^n]` of the cycle and path EGFs against direct enumeration of
/// `S_n` by statistics, for `1 <= n <= max_n`. Returns the first bad `n`.
pub fn zeng_egf_mismatch(max_n: usize) -> Result<Option<usize>, LaguerreError> {
    let lam = Poly::named("lam");
    let (f, g) = second_mv_egfs(&(&lam - &Poly::one()), &VertexWeights::symbolic_general(), max_n, false)?;
    for n in 1..=max_n {
        let cyc = digraphs::permutation_oracle(n, digraphs::PermKind::Cyclic)?;
        let lin = digraphs::permutation_oracle(n, digraphs::PermKind::Linear00)?;
        if f.egf_coef(n)? != cyc || g.egf_coef(n)? != lin {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
