//! Finite polynomial matrices, lazily generated lower-Hessenberg matrices and
//! the production-matrix machinery built on them.

mod det;
mod riordan;
mod tp;

pub use det::{det_exact, det_int, ExactRing};
pub use riordan::{bx_conjugate_eaz_identity_check, eaz_block, eaz_entry, eaz_matrix, riordan_matrix, riordan_production};
pub use tp::{colex_subsets, tp_check_sampled, tp_check_sampled_with, tp_check_symbolic, tp_check_symbolic_with, Sampler, TpReport, Witness};

use crate::poly::{binomial, Poly, Var};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatrixError {
    #[error("matrix is not unit-lower-triangular")]
    NotUnitLower,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("non-integral Riordan entry at ({row},{col}): {what}")]
    NonIntegral { row: usize, col: usize, what: String },
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
}

/// A dense finite matrix of polynomials (a truncation of an infinite one).
#[derive(Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

/// Truncations are plain dense matrices.
pub type Truncation = Mat;

impl Mat {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Poly::int(x)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat::from_fn(rows, cols, |_, _| Poly::zero())
    }

    pub fn identity(n: usize) -> Mat {
        Mat::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    /// Superdiagonal shift matrix.
    pub fn delta(n: usize) -> Mat {
        Mat::from_fn(n, n, |i, j| if j == i + 1 { Poly::one() } else { Poly::zero() })
    }

    pub fn diag(d: &[Poly]) -> Mat {
        let n = d.len();
        Mat::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { Poly::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.data[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Leading `r x c` block.
    pub fn block(&self, r: usize, c: usize) -> Mat {
        assert!(r <= self.rows && c <= self.cols, "block larger than matrix");
        Mat::from_fn(r, c, |i, j| self.get(i, j).clone())
    }

    pub fn square(&self, n: usize) -> Mat {
        self.block(n, n)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn substitute_pairs(&self, pairs: &[(Var, Poly)]) -> Mat {
        let env = pairs.iter().cloned().collect();
        self.map(|p| p.substitute(&env))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, c: &Poly) -> Mat {
        self.map(|p| p * c)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.rows == self.cols && self.is_lower_triangular() && (0..self.rows).all(|i| self.get(i, i).is_one())
    }

    /// Variables occurring anywhere, in the global order.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.data.iter().flat_map(Poly::vars).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn to_json(&self) -> serde_json::Value {
        crate::poly::matrix_to_json(self.rows, self.cols, &self.data)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Mat, crate::poly::PolyError> {
        let (rows, cols, data) = crate::poly::matrix_from_json(v)?;
        Ok(Mat { rows, cols, data })
    }

    /// Rows of polynomial strings, for CSV output.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// First entry where two matrices differ, for error messages.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((usize::MAX, usize::MAX));
        }
        (0..self.rows).flat_map(|i| (0..self.cols).map(move |j| (i, j))).find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

type EntryFn = dyn Fn(usize, usize) -> Poly + Send + Sync;

/// An infinite lower-Hessenberg matrix given by an entry function.
///
/// Entries outside the band (above the superdiagonal, or more than
/// `lower_band` below the diagonal) are forced to zero.
#[derive(Clone)]
pub struct HessMatrix {
    entry: Arc<EntryFn>,
    lower_band: Option<usize>,
}

impl HessMatrix {
    pub fn new(lower_band: Option<usize>, f: impl Fn(usize, usize) -> Poly + Send + Sync + 'static) -> HessMatrix {
        HessMatrix { entry: Arc::new(f), lower_band }
    }

    /// A matrix given by its diagonals: `diags[m + 1]` is the `m`-th
    /// subdiagonal as a function of the row index, `diags[0]` the superdiagonal.
    pub fn from_diagonals(diags: Vec<Box<dyn Fn(usize) -> Poly + Send + Sync>>) -> HessMatrix {
        let r = diags.len().saturating_sub(2);
        HessMatrix::new(Some(r), move |n, k| {
            let off = n as isize - k as isize + 1;
            if off < 0 || off as usize >= diags.len() {
                Poly::zero()
            } else {
                diags[off as usize](n)
            }
        })
    }

    pub fn lower_band(&self) -> Option<usize> {
        self.lower_band
    }

    pub fn entry(&self, n: usize, k: usize) -> Poly {
        if k > n + 1 || self.lower_band.is_some_and(|r| k + r < n) {
            Poly::zero()
        } else {
            (self.entry)(n, k)
        }
    }

    pub fn truncate(&self, n: usize) -> Mat {
        Mat::from_fn(n, n, |i, j| self.entry(i, j))
    }

    /// Read a finite matrix as the leading block of a Hessenberg matrix that is
    /// zero outside it.
    pub fn from_mat(m: &Mat) -> HessMatrix {
        let m = m.clone();
        let band = (0..m.rows)
            .flat_map(|i| (0..m.cols.min(i + 1)).map(move |j| (i, j)))
            .filter(|&(i, j)| !m.get(i, j).is_zero())
            .map(|(i, j)| i - j)
            .max();
        HessMatrix::new(Some(band.unwrap_or(0)), move |i, j| {
            if i < m.rows && j < m.cols {
                m.get(i, j).clone()
            } else {
                Poly::zero()
            }
        })
    }

    pub fn substitute_pairs(&self, pairs: &[(Var, Poly)]) -> HessMatrix {
        let inner = self.clone();
        let env: std::collections::HashMap<Var, Poly> = pairs.iter().cloned().collect();
        HessMatrix::new(self.lower_band, move |i, j| inner.entry(i, j).substitute(&env))
    }
}

/// The `n x n` truncation of the output matrix `O(P)`: row 0 is `e_0` and row
/// `n` is row `n-1` times `P`. Row `n` only reads rows `0..n` of `P`, so the
/// truncation is exact.
pub fn output_matrix(p: &HessMatrix, n: usize) -> Mat {
    output_of(&p.truncate(n), n)
}

/// Output matrix from a finite production block (at least `(n-1) x n`).
pub fn output_of(p: &Mat, n: usize) -> Mat {
    let mut a = Mat::zeros(n, n);
    if n == 0 {
        return a;
    }
    a.set(0, 0, Poly::one());
    for i in 1..n {
        for k in 0..=i.min(n - 1) {
            let mut acc = Poly::zero();
            for j in 0..i {
                let (x, y) = (a.get(i - 1, j), p.get(j, k));
                if !x.is_zero() && !y.is_zero() {
                    acc += &(x * y);
                }
            }
            a.set(i, k, acc);
        }
    }
    a
}

/// Inverse of a unit-lower-triangular matrix by forward substitution.
pub fn inverse_unit_lower(l: &Mat) -> Result<Mat, MatrixError> {
    if !l.is_unit_lower_triangular() {
        return Err(MatrixError::NotUnitLower);
    }
    let n = l.rows();
    let mut inv = Mat::identity(n);
    for i in 0..n {
        for j in 0..i {
            let mut acc = Poly::zero();
            for k in j..i {
                let (x, y) = (l.get(i, k), inv.get(k, j));
                if !x.is_zero() && !y.is_zero() {
                    acc += &(x * y);
                }
            }
            inv.set(i, j, -acc);
        }
    }
    Ok(inv)
}

/// The production matrix `P = L^{-1} Delta L`, exact on the leading
/// `(n-1) x (n-1)` block for an `n x n` input.
pub fn production_of(l: &Mat) -> Result<Mat, MatrixError> {
    let n = l.rows();
    if n == 0 {
        return Err(MatrixError::Shape("empty matrix".into()));
    }
    let inv = inverse_unit_lower(l)?;
    let shifted = Mat::from_fn(n - 1, n - 1, |i, j| l.get(i + 1, j).clone());
    Ok(inv.square(n - 1).mul(&shifted))
}

/// `(B_{x,y})_{ij} = binom(i,j) x^{i-j} y^j`.
pub fn binomial_matrix_xy(x: &Poly, y: &Poly, n: usize) -> Mat {
    Mat::from_fn(n, n, |i, j| {
        if j > i {
            Poly::zero()
        } else {
            Poly::constant(binomial(i as u64, j as u64)) * x.pow((i - j) as u32) * y.pow(j as u32)
        }
    })
}

/// The weighted binomial matrix `B_x`.
pub fn binomial_matrix(x: &Poly, n: usize) -> Mat {
    binomial_matrix_xy(x, &Poly::one(), n)
}

/// `B_xi^{-1} P B_xi` on the leading `n x n` block. Entry `(i,j)` only reads
/// rows `0..=i` and columns `0..=i+1` of `P`, so computing on an `(n+2)`
/// working block and cutting back is exact.
pub fn conjugate_by_binomial(p: &HessMatrix, xi: Var, n: usize) -> Mat {
    conjugate_block(&p.truncate(n + 2), xi, n)
}

/// As [`conjugate_by_binomial`] for a finite block with at least `n` rows and
/// `n + 1` columns.
pub fn conjugate_block(p: &Mat, xi: Var, n: usize) -> Mat {
    assert!(p.rows() >= n && p.cols() > n, "conjugation needs an n x (n+1) block");
    let x = Poly::var(xi);
    let left = binomial_matrix(&-&x, n);
    let right = binomial_matrix(&x, n + 1);
    left.mul(&p.block(n, n + 1)).mul(&right).block(n, n)
}

/// `(a_{i+j})` for `0 <= i, j < n`.
pub fn hankel(seq: &[Poly], n: usize) -> Mat {
    assert!(seq.len() + 1 >= 2 * n, "sequence too short for a {n}x{n} Hankel matrix");
    Mat::from_fn(n, n, |i, j| seq[i + j].clone())
}

/// Lemma-style diagonal scaling `b_ij = x_{j+1} ... x_i a_ij` for lower-triangular `a`;
/// `xs[i]` is `x_{i+1}`.
pub fn diag_scale(a: &Mat, xs: &[Poly]) -> Mat {
    Mat::from_fn(a.rows(), a.cols(), |i, j| {
        if j > i {
            a.get(i, j).clone()
        } else {
            (j..i).map(|m| xs[m].clone()).product::<Poly>() * a.get(i, j)
        }
    })
}

/// Lower-bidiagonal matrix with `diag` on the diagonal and `sub[i]` at `(i, i-1)`
/// (`sub[0]` is ignored).
pub fn lower_bidiagonal(diag: &[Poly], sub: &[Poly]) -> Mat {
    let n = diag.len();
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            diag[i].clone()
        } else if i == j + 1 {
            sub[i].clone()
        } else {
            Poly::zero()
        }
    })
}

/// Upper-bidiagonal matrix with `diag` on the diagonal and `sup[j]` at `(j-1, j)`
/// (`sup[0]` is ignored).
pub fn upper_bidiagonal(diag: &[Poly], sup: &[Poly]) -> Mat {
    lower_bidiagonal(diag, sup).transpose()
}

/// Tridiagonal total-positivity criterion for integer matrices: nonnegative
/// off-diagonal entries and nonnegative contiguous principal minors.
pub fn tridiagonal_criterion(m: &Mat) -> bool {
    let n = m.rows();
    let off_ok = (0..n).all(|i| (0..n).all(|j| i == j || !m.get(i, j).constant_term().is_negative_int()));
    off_ok && (0..n).all(|s| (s + 1..=n).all(|e| {
        let idx: Vec<usize> = (s..e).collect();
        !det_exact(&m.submatrix(&idx, &idx)).constant_term().is_negative_int()
    }))
}

trait NegInt {
    fn is_negative_int(&self) -> bool;
}

impl NegInt for num_bigint::BigInt {
    fn is_negative_int(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
}
