//! When is `B_xi^{-1} P B_xi` still `(r,1)`-banded?
//!
//! For `P` whose diagonals are polynomial in the row index `n`, the answer is
//! a degree condition: `p_{n,n+1} = f_{-1}(n)` with `deg f_{-1} <= r`, and
//! `p_{n,n-m} = n(n-1)...(n-m+1) f_m(n)` with `deg f_m <= r - m`.

use rand_core::{RngCore, SeedableRng};
use rand_xorshift::XorShiftRng;

use crate::matrix::{conjugate_by_binomial, HessMatrix, Mat};
use crate::poly::{falling, Poly, Var};

/// The formal row index.
pub fn index_var() -> Var {
    Var::new("n")
}

/// The conjugation variable.
pub fn xi_var() -> Var {
    Var::new("xi")
}

/// `f[0] = f_{-1}` (superdiagonal), `f[m + 1] = f_m`; missing entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalPolySpec {
    pub r: usize,
    pub f: Vec<Poly>,
}

impl DiagonalPolySpec {
    pub fn new(r: usize, f: Vec<Poly>) -> DiagonalPolySpec {
        DiagonalPolySpec { r, f }
    }

    /// `f_m` for `m >= -1`.
    pub fn f(&self, m: isize) -> Poly {
        self.f.get((m + 1) as usize).cloned().unwrap_or_else(Poly::zero)
    }

    /// The matrix: superdiagonal `f_{-1}(n)`, `m`-th subdiagonal
    /// `n^{(m)} f_m(n)` (falling factorial) for `m < f.len() - 1`.
    pub fn matrix(&self) -> HessMatrix {
        let spec = self.clone();
        let nv = index_var();
        let band = self.f.len().saturating_sub(2);
        HessMatrix::new(Some(band), move |i, k| {
            let at = |p: &Poly| p.substitute_pairs(&[(nv, Poly::int(i as i64))]);
            if k == i + 1 {
                at(&spec.f(-1))
            } else {
                let m = i - k;
                falling(&Poly::int(i as i64), m as u32) * at(&spec.f(m as isize))
            }
        })
    }
}

/// The degree condition. Degrees are in the index variable `n`; other
/// variables count as coefficients.
pub fn check_banded_criterion(spec: &DiagonalPolySpec) -> bool {
    let deg = |p: &Poly| if p.is_zero() { None } else { Some(p.degree_in(index_var()).unwrap_or(0) as usize) };
    let r = spec.r;
    let sup_ok = deg(&spec.f(-1)).is_none_or(|d| d <= r);
    let subs_ok = (0..spec.f.len().saturating_sub(1)).all(|m| match deg(&spec.f(m as isize)) {
        None => true,
        Some(d) => m <= r && d <= r - m,
    });
    sup_ok && subs_ok
}

/// `B_xi^{-1} P B_xi` on the leading `n x n` block.
pub fn conjugated(spec: &DiagonalPolySpec, n: usize) -> Mat {
    conjugate_by_binomial(&spec.matrix(), xi_var(), n)
}

/// Largest `t` with a nonzero `(k+t, k)` entry of the conjugated `n x n` block.
pub fn conjugate_and_measure_band(spec: &DiagonalPolySpec, n: usize) -> usize {
    lower_band_of(&conjugated(spec, n))
}

pub fn lower_band_of(m: &Mat) -> usize {
    (0..m.rows()).flat_map(|i| (0..=i).map(move |k| (i, k))).filter(|&(i, k)| !m.get(i, k).is_zero()).map(|(i, k)| i - k).max().unwrap_or(0)
}

/// Whether subdiagonal `t` of the conjugated block vanishes.
pub fn subdiagonal_vanishes(spec: &DiagonalPolySpec, t: usize, n: usize) -> bool {
    let c = conjugated(spec, n);
    (t..n).all(|i| c.get(i, i - t).is_zero())
}

/// A random spec: `r <= 3`, each `f_m` of degree at most 4 with small
/// integer coefficients. About half the draws respect the degree bound.
pub fn random_spec(seed: u64) -> DiagonalPolySpec {
    let mut rng = XorShiftRng::seed_from_u64(seed);
    let mut pick = |k: u32| rng.next_u32() % k;
    let r = pick(4) as usize;
    let honest = pick(2) == 0;
    let n = Poly::var(index_var());
    let mut f = Vec::with_capacity(r + 2);
    for m in -1..=r as isize {
        let bound = if m < 0 { r } else { r - m as usize };
        let deg = if honest { pick(bound as u32 + 1) } else { pick(5) };
        let coefs: Vec<i64> = (0..=deg).map(|_| pick(7) as i64 - 3).collect();
        let mut p: Poly = coefs.iter().enumerate().map(|(e, &c)| &Poly::int(c) * &n.pow(e as u32)).sum();
        if p.degree_in(index_var()).unwrap_or(0) < deg || p.is_zero() {
            // keep the drawn degree exact
            p = &p + &n.pow(deg);
        }
        f.push(p);
    }
    DiagonalPolySpec::new(r, f)
}
