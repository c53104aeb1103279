//! Stieltjes–Rogers machinery for `m`-Dyck paths: generalized polynomials of
//! type `j`, S-fraction tails, the bidiagonal production matrices `P^{(m;j)}`
//! and the one-parameter families that realize the Laguerre matrix `P`.
//!
//! A partial `m`-Dyck path uses rises `(1,1)` and `m`-falls `(1,-m)` and never
//! goes below height 0. An `m`-fall from height `i` has weight `alpha_i`.

mod frac;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::laguerre::{prodmat, ProdMat, VertexWeights};
use crate::matrix::{tp_check_symbolic, HessMatrix, Mat, Witness};
use crate::poly::{Poly, PolyError, QPoly, Var};
use crate::series::{Series, SeriesError};

pub use frac::Frac;

/// Longest path the enumeration oracle will walk.
pub const PATH_LIMIT: usize = 24;

#[derive(Debug, Error)]
pub enum SrError {
    #[error("path length {len} exceeds the oracle limit {cap}")]
    PathTooLong { len: usize, cap: usize },
    #[error("no table cell for j = {j}, alpha = {alpha}")]
    Inadmissible { j: usize, alpha: i64 },
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
    #[error("type j = {j} is outside 0..={m}")]
    BadType { j: usize, m: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The minimal ring interface the path recurrences need.
pub trait SrRing: Clone + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn int(n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl SrRing for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn int(n: i64) -> Self {
        Poly::int(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

type AlphaFn<R> = dyn Fn(usize) -> R + Send + Sync;

/// Branch order `m` together with the weights `alpha_i`, `i >= m`.
/// Indices below `m` read as zero.
#[derive(Clone)]
pub struct SRCoeffs<R = Poly> {
    m: usize,
    alpha: Arc<AlphaFn<R>>,
}

impl<R: SrRing> SRCoeffs<R> {
    pub fn new(m: usize, f: impl Fn(usize) -> R + Send + Sync + 'static) -> SRCoeffs<R> {
        assert!(m >= 1, "branch order must be positive");
        SRCoeffs { m, alpha: Arc::new(f) }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alpha(&self, i: usize) -> R {
        if i < self.m {
            R::zero()
        } else {
            (self.alpha)(i)
        }
    }

    /// The coefficients `(0, alpha_m, alpha_{m+1}, ...)`: `alpha_m` is replaced by
    /// zero and everything else moves up one index.
    pub fn shifted(&self) -> SRCoeffs<R> {
        let inner = self.clone();
        let m = self.m;
        SRCoeffs::new(m, move |i| if i == m { R::zero() } else { inner.alpha(i - 1) })
    }
}

impl SRCoeffs<Poly> {
    /// Independent indeterminates `al{i}`.
    pub fn symbolic(m: usize) -> SRCoeffs<Poly> {
        SRCoeffs::new(m, |i| Poly::var(alpha_var(i)))
    }
}

pub fn alpha_var(i: usize) -> Var {
    Var::new(&format!("al{i}"))
}

/// Inverse of [`alpha_var`].
pub fn alpha_index(v: Var) -> Option<usize> {
    v.name().strip_prefix("al")?.parse().ok()
}

/// Memoized table of `S^{(m;j)}_{n,k}`.
pub struct SrTable<R = Poly> {
    coeffs: SRCoeffs<R>,
    memo: HashMap<(usize, usize, usize), R>,
}

impl<R: SrRing> SrTable<R> {
    pub fn new(coeffs: &SRCoeffs<R>) -> SrTable<R> {
        SrTable { coeffs: coeffs.clone(), memo: HashMap::new() }
    }

    pub fn get(&mut self, j: usize, n: usize, k: usize) -> R {
        if k > n {
            return R::zero();
        }
        if j == 0 && n == 0 {
            return R::one();
        }
        if let Some(r) = self.memo.get(&(j, n, k)) {
            return r.clone();
        }
        let m = self.coeffs.m;
        // peel off the last step: from type j-1, or from type m one level down
        let r = if j >= 1 {
            let a = self.coeffs.alpha((m + 1) * (k + 1) + j - 1);
            let tail = if a.is_zero() { R::zero() } else { a.mul(&self.get(j - 1, n, k + 1)) };
            self.get(j - 1, n, k).add(&tail)
        } else {
            let a = self.coeffs.alpha((m + 1) * k + m);
            let head = if k >= 1 { self.get(m, n - 1, k - 1) } else { R::zero() };
            let tail = if a.is_zero() { R::zero() } else { a.mul(&self.get(m, n - 1, k)) };
            head.add(&tail)
        };
        self.memo.insert((j, n, k), r.clone());
        r
    }

    /// Rows `0..n` of the unit-lower-triangular array `S^{(m;j)}`.
    pub fn triangle(&mut self, j: usize, n: usize) -> Vec<Vec<R>> {
        (0..n).map(|i| (0..n).map(|k| self.get(j, i, k)).collect()).collect()
    }
}

/// Generalized `m`-Stieltjes–Rogers polynomial of type `j`.
pub fn sr_poly<R: SrRing>(coeffs: &SRCoeffs<R>, j: usize, n: usize, k: usize) -> R {
    SrTable::new(coeffs).get(j, n, k)
}

/// `S^{(m;j)}` as an `n x n` matrix.
pub fn sr_triangle(coeffs: &SRCoeffs<Poly>, j: usize, n: usize) -> Mat {
    Mat::from_rows(SrTable::new(coeffs).triangle(j, n))
}

/// Sum over all partial `m`-Dyck paths from `(0,0)` to `((m+1)n+j, (m+1)k+j)`,
/// by walking them one at a time.
pub fn sr_path_oracle<R: SrRing>(coeffs: &SRCoeffs<R>, j: usize, n: usize, k: usize) -> Result<R, SrError> {
    let m = coeffs.m;
    let len = (m + 1) * n + j;
    if len > PATH_LIMIT {
        return Err(SrError::PathTooLong { len, cap: PATH_LIMIT });
    }
    let target = (m + 1) * k + j;
    let mut found: HashMap<Vec<usize>, i64> = HashMap::new();
    let mut falls = Vec::new();
    walk(m, target, 0, len, &mut falls, &mut found);
    let mut total = R::zero();
    for (heights, count) in found {
        let w = heights.iter().fold(R::int(count), |acc, &h| acc.mul(&coeffs.alpha(h)));
        total = total.add(&w);
    }
    Ok(total)
}

fn walk(m: usize, target: usize, h: usize, left: usize, falls: &mut Vec<usize>, found: &mut HashMap<Vec<usize>, i64>) {
    if left == 0 {
        if h == target {
            let mut key = falls.clone();
            key.sort_unstable();
            *found.entry(key).or_insert(0) += 1;
        }
        return;
    }
    if h > target + m * left || h + left < target {
        return;
    }
    walk(m, target, h + 1, left - 1, falls, found);
    if h >= m {
        falls.push(h);
        walk(m, target, h - m, left - 1, falls, found);
        falls.pop();
    }
}

fn check_type(m: usize, j: usize) -> Result<(), SrError> {
    if j > m {
        Err(SrError::BadType { j, m })
    } else {
        Ok(())
    }
}

fn mul_grid<R: SrRing>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    let mut s = R::zero();
                    for (l, ail) in a[i].iter().enumerate() {
                        if !ail.is_zero() && !b[l][k].is_zero() {
                            s = s.add(&ail.mul(&b[l][k]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Leading `n x n` block of `P^{(m;j)} = L_{j+1} ... L_m U_0 L_1 ... L_j`.
///
/// Only `U_0` has a superdiagonal, so multiplying `(n+1)`-blocks of the
/// bidiagonal factors gives the leading `n`-block exactly.
pub fn prodmat_smj_block<R: SrRing>(coeffs: &SRCoeffs<R>, j: usize, n: usize) -> Result<Vec<Vec<R>>, SrError> {
    let m = coeffs.m;
    check_type(m, j)?;
    let w = n + 1;
    let lower = |r: usize| -> Vec<Vec<R>> {
        (0..w)
            .map(|i| {
                (0..w)
                    .map(|k| {
                        if i == k {
                            R::one()
                        } else if i == k + 1 {
                            coeffs.alpha((m + 1) * i + r - 1)
                        } else {
                            R::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let u0: Vec<Vec<R>> = (0..w)
        .map(|i| {
            (0..w)
                .map(|k| {
                    if i == k {
                        coeffs.alpha((m + 1) * i + m)
                    } else if k == i + 1 {
                        R::one()
                    } else {
                        R::zero()
                    }
                })
                .collect()
        })
        .collect();
    let order: Vec<Option<usize>> = (j + 1..=m).map(Some).chain([None]).chain((1..=j).map(Some)).collect();
    let mut acc: Option<Vec<Vec<R>>> = None;
    for f in order {
        let g = match f {
            Some(r) => lower(r),
            None => u0.clone(),
        };
        acc = Some(match acc {
            None => g,
            Some(a) => mul_grid(&a, &g),
        });
    }
    let mut p = acc.expect("at least one factor");
    p.truncate(n);
    for row in &mut p {
        row.truncate(n);
    }
    Ok(p)
}

/// `P^{(m;j)}` truncated to `n x n`, as a Hessenberg matrix that is zero
/// outside the block.
pub fn prodmat_smj(coeffs: &SRCoeffs<Poly>, j: usize, n: usize) -> Result<HessMatrix, SrError> {
    Ok(HessMatrix::from_mat(&Mat::from_rows(prodmat_smj_block(coeffs, j, n)?)))
}

/// Closed-form entries of `P^{(2;j)}`: the `j = 0` formulas with every index
/// moved up by `j`.
pub fn prodmat_m2_explicit<R: SrRing>(coeffs: &SRCoeffs<R>, j: usize, n: usize, k: usize) -> R {
    assert_eq!(coeffs.m, 2);
    let a = |i: isize| if i < 0 { R::zero() } else { coeffs.alpha(i as usize + j) };
    let n = n as isize;
    match n - k as isize {
        -1 => R::one(),
        0 => a(3 * n).add(&a(3 * n + 1)).add(&a(3 * n + 2)),
        1 => a(3 * n - 2)
            .mul(&a(3 * n))
            .add(&a(3 * n - 1).mul(&a(3 * n)))
            .add(&a(3 * n - 1).mul(&a(3 * n + 1))),
        2 => a(3 * n - 4).mul(&a(3 * n - 2)).mul(&a(3 * n)),
        _ => R::zero(),
    }
}

/// `f_0 f_1 ... f_j` through `t^n`, where
/// `f_k = 1 / (1 - alpha_{k+m} t f_{k+1} ... f_{k+m})`.
///
/// Tails beyond `k = mn + j` only reach `t^{n+1}` and later, so they are
/// replaced by 1 from `k_max = mn + j + 1` on.
pub fn sfrac_tail_series(coeffs: &SRCoeffs<Poly>, j: usize, n: usize) -> Result<Series, SrError> {
    let m = coeffs.m;
    let k_max = m * n + j + 1;
    let mut f: Vec<Series> = vec![Series::one(n); k_max + m + 1];
    for k in (0..=k_max).rev() {
        let prod = (k + 1..=k + m).fold(Series::one(n), |acc, i| &acc * &f[i]);
        let a = coeffs.alpha(k + m).to_q();
        let denom = &Series::one(n) - &prod.shift(1).scale(&a);
        f[k] = denom.reciprocal()?;
    }
    Ok(f[..=j].iter().fold(Series::one(n), |acc, s| &acc * s))
}

/// Simultaneously zero `al{lo}..al{hi-1}` and rename every other `al{i}` to
/// `al{i + shift}`.
fn zero_and_shift(vars: &[Var], lo: usize, hi: usize, shift: isize) -> Vec<(Var, Poly)> {
    vars.iter()
        .filter_map(|&v| {
            let i = alpha_index(v)?;
            Some(if (lo..hi).contains(&i) {
                (v, Poly::zero())
            } else {
                (v, Poly::var(alpha_var((i as isize + shift) as usize)))
            })
        })
        .collect()
}

/// `S^{(m;m-l)}_n` equals `S^{(m)}_{n+1} / alpha_m` with `alpha_m .. alpha_{m+l-1}`
/// zeroed and the rest renamed down by `l`. Symbolic weights.
pub fn smm_ell_check(m: usize, ell: usize, n: usize) -> Result<bool, SrError> {
    assert!(ell <= m);
    let sym = SRCoeffs::symbolic(m);
    let mut t = SrTable::new(&sym);
    let lhs = t.get(m - ell, n, 0);
    let q = t.get(0, n + 1, 0).div_exact(&Poly::var(alpha_var(m)))?;
    let rhs = q.substitute_pairs(&zero_and_shift(&q.vars(), m, m + ell, -(ell as isize)));
    Ok(lhs == rhs)
}

/// The generating function of `S^{(m;j)}_n` read off `(f_0 - 1) / (alpha_m t)`
/// after zeroing `alpha_m .. alpha_{2m-j-1}` and renaming `alpha_i` to
/// `alpha_{i+j-m}`, compared with the tail product through `t^n`.
pub fn alternate_genfn_check(m: usize, j: usize, n: usize) -> Result<bool, SrError> {
    check_type(m, j)?;
    let sym = SRCoeffs::symbolic(m);
    let f0 = sfrac_tail_series(&sym, 0, n + 1)?;
    let am = Poly::var(alpha_var(m)).to_q();
    let alt = f0.unshift().div_coefs(&am)?;
    let direct = sfrac_tail_series(&sym, j, n)?;
    for i in 0..=n {
        let c: &QPoly = alt.coef(i);
        let pairs: Vec<(Var, QPoly)> = zero_and_shift(&c.vars(), m, 2 * m - j, j as isize - m as isize)
            .into_iter()
            .map(|(v, p)| (v, p.to_q()))
            .collect();
        if &c.substitute_pairs(&pairs) != direct.coef(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S^{(m;j+(m+1)l)}_{n,k} = S^{(m;j)}_{n+l,k+l}` for `n, k < size`.
pub fn deltas_check<R: SrRing>(coeffs: &SRCoeffs<R>, j: usize, ell: usize, size: usize) -> bool {
    let mut t = SrTable::new(coeffs);
    let jj = j + (coeffs.m + 1) * ell;
    (0..size).all(|n| (0..size).all(|k| t.get(jj, n, k) == t.get(j, n + ell, k + ell)))
}

/// `P^{(m;j)}(alpha) = P^{(m;j+1)}(0, alpha_m, alpha_{m+1}, ...)` on `size x size`.
pub fn j_shift_check<R: SrRing>(coeffs: &SRCoeffs<R>, j: usize, size: usize) -> Result<bool, SrError> {
    Ok(prodmat_smj_block(coeffs, j, size)? == prodmat_smj_block(&coeffs.shifted(), j + 1, size)?)
}

/// Search the Hankel matrices of `S^{(m;m+1)}_n`, symbolic weights, for a
/// `2 x 2` minor with a negative coefficient. Tries Hankel sizes `2..=max_size`.
pub fn hankel_failure_witness(m: usize, max_size: usize) -> Option<(usize, Witness)> {
    let sym = SRCoeffs::symbolic(m);
    let mut t = SrTable::new(&sym);
    for size in 2..=max_size {
        let seq: Vec<Poly> = (0..2 * size - 1).map(|n| t.get(m + 1, n, 0)).collect();
        let report = tp_check_symbolic(&crate::matrix::hankel(&seq, size), 2);
        if let Some(w) = report.witness {
            return Some((size, w));
        }
    }
    None
}

/// One cell of the table of factorizations of the Laguerre matrix `P` as
/// `P^{(2;j)}`, with its family parameter `kappa`.
#[derive(Clone, Debug, PartialEq)]
pub struct KappaFamily {
    pub j: usize,
    pub alpha_lag: i64,
    /// Ignored by the two cells with `alpha_lag = 0`.
    pub kappa: Frac,
}

/// The six admissible `(j, alpha)` cells and their ids.
pub const CELLS: [(&str, usize, i64); 6] =
    [("j0am1", 0, -1), ("j1am1", 1, -1), ("j2am1", 2, -1), ("j1a0", 1, 0), ("j2a0", 2, 0), ("j2a1", 2, 1)];

impl KappaFamily {
    pub fn new(j: usize, alpha_lag: i64, kappa: Frac) -> KappaFamily {
        KappaFamily { j, alpha_lag, kappa }
    }

    /// Symbolic `kappa`.
    pub fn symbolic(j: usize, alpha_lag: i64) -> KappaFamily {
        KappaFamily::new(j, alpha_lag, Frac::from(Poly::named("kappa")))
    }

    pub fn from_cell(id: &str, kappa: Frac) -> Result<KappaFamily, SrError> {
        let (_, j, a) = CELLS.iter().find(|c| c.0 == id).ok_or_else(|| SrError::UnknownFamily(id.to_string()))?;
        Ok(KappaFamily::new(*j, *a, kappa))
    }

    pub fn cell_id(&self) -> Option<&'static str> {
        CELLS.iter().find(|c| c.1 == self.j && c.2 == self.alpha_lag).map(|c| c.0)
    }

    pub fn admissible(&self) -> bool {
        self.cell_id().is_some()
    }

    pub fn uses_kappa(&self) -> bool {
        self.alpha_lag != 0
    }
}

impl FromStr for KappaFamily {
    type Err = SrError;
    /// `j1a0`, or `j0am1:kappa` / `j2a1:1/2` with an explicit `kappa`
    /// (default symbolic).
    fn from_str(s: &str) -> Result<KappaFamily, SrError> {
        let (id, k) = s.split_once(':').unwrap_or((s, "kappa"));
        let kappa = Frac::parse(k).ok_or_else(|| SrError::UnknownFamily(s.to_string()))?;
        KappaFamily::from_cell(id, kappa)
    }
}

impl fmt::Display for KappaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cell_id() {
            Some(id) if self.uses_kappa() => write!(f, "{id}:{}", self.kappa),
            Some(id) => f.write_str(id),
            None => write!(f, "j{}a{}", self.j, self.alpha_lag),
        }
    }
}

/// `c_n = ((n-1) - (n-2) kappa) / (n - (n-1) kappa)`.
pub fn c_n(kappa: &Frac, n: usize) -> Frac {
    let n = n as i64;
    let num = &Frac::int(n - 1) - &(&Frac::int(n - 2) * kappa);
    let den = &Frac::int(n) - &(&Frac::int(n - 1) * kappa);
    num.div(&den)
}

/// The weights of a table cell over `x` (the variable `x`) and `kappa`.
///
/// Every cell is the pattern `x, c_1, 2 - c_1, x, 2 c_2, 2(2 - c_2), ...` starting
/// at `alpha_{2+s}` with `s = j - alpha - 1` leading zeros; the `alpha = 0`
/// cells fix `c_n = 1`.
pub fn kappa_family_coeffs(fam: &KappaFamily) -> Result<SRCoeffs<Frac>, SrError> {
    if !fam.admissible() {
        return Err(SrError::Inadmissible { j: fam.j, alpha: fam.alpha_lag });
    }
    let s = (fam.j as i64 - fam.alpha_lag - 1) as usize;
    let kappa = if fam.uses_kappa() { fam.kappa.clone() } else { Frac::one() };
    let x = Frac::from(Poly::named("x"));
    Ok(SRCoeffs::new(2, move |i| {
        if i < 2 + s {
            return Frac::zero();
        }
        let i = i - s;
        match i % 3 {
            2 => x.clone(),
            0 => &c_n(&kappa, i / 3) * &Frac::int((i / 3) as i64),
            _ => &(&Frac::int(2) - &c_n(&kappa, i / 3)) * &Frac::int((i / 3) as i64),
        }
    }))
}

/// Whether `P^{(2;j)}` built from the cell's weights equals the Laguerre
/// production matrix `P` at the cell's `alpha`, on the leading `n x n` block.
/// Equality of fractions is by cross-multiplication.
pub fn verify_table1(fam: &KappaFamily, n: usize) -> Result<bool, SrError> {
    Ok(table1_mismatch(fam, n)?.is_none())
}

/// First entry where [`verify_table1`] fails.
pub fn table1_mismatch(fam: &KappaFamily, n: usize) -> Result<Option<(usize, usize)>, SrError> {
    let coeffs = kappa_family_coeffs(fam)?;
    let got = prodmat_smj_block(&coeffs, fam.j, n)?;
    let want = prodmat(ProdMat::P, &Poly::int(fam.alpha_lag), &VertexWeights::symbolic(), &Poly::named("x")).truncate(n);
    for (i, row) in got.iter().enumerate() {
        for (k, e) in row.iter().enumerate() {
            if *e != Frac::from(want.get(i, k).clone()) {
                return Ok(Some((i, k)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
