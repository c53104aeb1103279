//! Two general quadridiagonal families built from bidiagonal and diagonal
//! factors, and the substitution that turns the first into the flat Laguerre
//! matrix `P♭`.
//!
//! General family: `P = L1 U L2 + L1 D1 + D2 L2` with `L1 = (a; b)`,
//! `U = (d; c)`, `L2 = (e; f)`, `D1 = g`, `D2 = h`.
//! Variant family: `P = L1 L2 U + L1 D1 + L2 D2` with `L1 = alpha I + x L`,
//! `L2 = beta I + y L`, `L = (a; b)`, `U = (d; c)`, `D1 = e`, `D2 = f`.

use std::sync::Arc;

use crate::laguerre::VertexWeights;
use crate::matrix::{lower_bidiagonal, upper_bidiagonal, HessMatrix, Mat};
use crate::poly::Poly;

type SeqFn = dyn Fn(usize) -> Poly + Send + Sync;

/// A sequence indexed from `start`; it reads as zero below `start` and at
/// negative indices.
#[derive(Clone)]
pub struct Seq {
    start: usize,
    f: Arc<SeqFn>,
}

impl Seq {
    pub fn from_fn(start: usize, f: impl Fn(usize) -> Poly + Send + Sync + 'static) -> Seq {
        Seq { start, f: Arc::new(f) }
    }

    /// `terms[i]` at index `start + i`, zero beyond the list.
    pub fn finite(start: usize, terms: Vec<Poly>) -> Seq {
        Seq::from_fn(start, move |n| terms.get(n - start).cloned().unwrap_or_else(Poly::zero))
    }

    /// Indeterminates `{name}{start} .. {name}{start+len-1}`.
    pub fn symbolic(name: &str, start: usize, len: usize) -> Seq {
        Seq::finite(start, (start..start + len).map(|i| Poly::named(&format!("{name}{i}"))).collect())
    }

    pub fn constant(start: usize, c: Poly) -> Seq {
        Seq::from_fn(start, move |_| c.clone())
    }

    pub fn zero() -> Seq {
        Seq::constant(0, Poly::zero())
    }

    pub fn at(&self, n: isize) -> Poly {
        if n < self.start as isize {
            Poly::zero()
        } else {
            (self.f)(n as usize)
        }
    }

    fn vec(&self, len: usize) -> Vec<Poly> {
        (0..len as isize).map(|n| self.at(n)).collect()
    }
}

/// Parameters of the general family. `b`, `c`, `f` start at index 1.
#[derive(Clone)]
pub struct QuadFactorParams {
    pub a: Seq,
    pub b: Seq,
    pub c: Seq,
    pub d: Seq,
    pub e: Seq,
    pub f: Seq,
    pub g: Seq,
    pub h: Seq,
}

impl QuadFactorParams {
    /// All eight sequences symbolic, `len` terms each.
    pub fn symbolic(len: usize) -> QuadFactorParams {
        QuadFactorParams {
            a: Seq::symbolic("a", 0, len),
            b: Seq::symbolic("b", 1, len),
            c: Seq::symbolic("c", 1, len),
            d: Seq::symbolic("d", 0, len),
            e: Seq::symbolic("e", 0, len),
            f: Seq::symbolic("f", 1, len),
            g: Seq::symbolic("g", 0, len),
            h: Seq::symbolic("h", 0, len),
        }
    }

    /// The substitution that yields the flat matrix `P♭`:
    /// `a = c = e = 1`, `b_n = n yv`, `d_n = n yp`, `f_n = x`, `g_n = lam yp`,
    /// `h_n = n (yda + ydd - yp - yv)`. It matches `P♭` when `yfp = yp`.
    pub fn laguerre(w: &VertexWeights, x: &Poly, lam: &Poly) -> QuadFactorParams {
        let nn = |n: usize| Poly::int(n as i64);
        let (yp, yv) = (w.yp.clone(), w.yv.clone());
        let excess = &(&w.yda + &w.ydd) - &(&w.yp + &w.yv);
        let g = lam * &w.yp;
        QuadFactorParams {
            a: Seq::constant(0, Poly::one()),
            b: Seq::from_fn(1, move |n| &nn(n) * &yv),
            c: Seq::constant(1, Poly::one()),
            d: Seq::from_fn(0, move |n| &nn(n) * &yp),
            e: Seq::constant(0, Poly::one()),
            f: Seq::constant(1, x.clone()),
            g: Seq::constant(0, g),
            h: Seq::from_fn(0, move |n| &nn(n) * &excess),
        }
    }

    pub fn with_h_zero(&self) -> QuadFactorParams {
        QuadFactorParams { h: Seq::zero(), ..self.clone() }
    }
}

/// The general quadridiagonal matrix from its closed-form entries.
pub fn build_general_quad(p: &QuadFactorParams) -> HessMatrix {
    let p = p.clone();
    HessMatrix::new(Some(2), move |n, k| {
        let n = n as isize;
        let (a, b, c, d, e, f, g, h) = (&p.a, &p.b, &p.c, &p.d, &p.e, &p.f, &p.g, &p.h);
        match n - k as isize {
            -1 => a.at(n) * &c.at(n + 1) * &e.at(n + 1),
            0 => {
                a.at(n) * &d.at(n) * &e.at(n)
                    + &(b.at(n) * &c.at(n) * &e.at(n))
                    + &(a.at(n) * &c.at(n + 1) * &f.at(n + 1))
                    + &(&a.at(n) * &g.at(n))
                    + &(&h.at(n) * &e.at(n))
            }
            1 => {
                a.at(n) * &d.at(n) * &f.at(n)
                    + &(b.at(n) * &c.at(n) * &f.at(n))
                    + &(b.at(n) * &d.at(n - 1) * &e.at(n - 1))
                    + &(&b.at(n) * &g.at(n - 1))
                    + &(&h.at(n) * &f.at(n))
            }
            2 => b.at(n) * &d.at(n - 1) * &f.at(n - 1),
            _ => Poly::zero(),
        }
    })
}

/// `Q = P|_{h=0} = L1 (U L2 + D1)`.
pub fn general_quad_q(p: &QuadFactorParams) -> HessMatrix {
    build_general_quad(&p.with_h_zero())
}

/// Finite factors `(L1, U, L2, D1, D2)` of the general family.
pub fn general_factors(p: &QuadFactorParams, size: usize) -> [Mat; 5] {
    [
        lower_bidiagonal(&p.a.vec(size), &p.b.vec(size)),
        upper_bidiagonal(&p.d.vec(size), &p.c.vec(size)),
        lower_bidiagonal(&p.e.vec(size), &p.f.vec(size)),
        Mat::diag(&p.g.vec(size)),
        Mat::diag(&p.h.vec(size)),
    ]
}

/// Leading `n x n` block of `L1 U L2 + L1 D1 + D2 L2`, multiplied out from
/// `(n+1)`-blocks of the factors.
pub fn general_from_factors(p: &QuadFactorParams, n: usize) -> Mat {
    let [l1, u, l2, d1, d2] = general_factors(p, n + 1);
    l1.mul(&u).mul(&l2).add(&l1.mul(&d1)).add(&d2.mul(&l2)).square(n)
}

/// Row `n` of `L2` restricted to `size` columns: `e_0 e_0^T`, or `f_n` at
/// `n - 1` and `e_n` at `n`.
pub fn ell_row(p: &QuadFactorParams, n: usize, size: usize) -> Vec<Poly> {
    (0..size)
        .map(|k| {
            if k == n {
                p.e.at(n as isize)
            } else if k + 1 == n {
                p.f.at(n as isize)
            } else {
                Poly::zero()
            }
        })
        .collect()
}

/// `P = Q + D2 L2`, checked rowwise as `p_n = q_n + h_n l_n`.
pub fn general_difference_check(p: &QuadFactorParams, size: usize) -> bool {
    let pm = build_general_quad(p).truncate(size);
    let q = general_quad_q(p).truncate(size);
    (0..size).all(|n| {
        let h = p.h.at(n as isize);
        let l = ell_row(p, n, size);
        (0..size).all(|k| pm.get(n, k) == &(q.get(n, k) + &(&h * &l[k])))
    })
}

/// Parameters of the variant family. `b`, `c` start at index 1.
#[derive(Clone)]
pub struct QuadVariantParams {
    pub alpha: Poly,
    pub beta: Poly,
    pub x: Poly,
    pub y: Poly,
    pub a: Seq,
    pub b: Seq,
    pub c: Seq,
    pub d: Seq,
    pub e: Seq,
    pub f: Seq,
}

impl QuadVariantParams {
    pub fn symbolic(len: usize) -> QuadVariantParams {
        QuadVariantParams {
            alpha: Poly::named("alpha"),
            beta: Poly::named("beta"),
            x: Poly::named("x"),
            y: Poly::named("y"),
            a: Seq::symbolic("a", 0, len),
            b: Seq::symbolic("b", 1, len),
            c: Seq::symbolic("c", 1, len),
            d: Seq::symbolic("d", 0, len),
            e: Seq::symbolic("e", 0, len),
            f: Seq::symbolic("f", 0, len),
        }
    }

    pub fn with_f_zero(&self) -> QuadVariantParams {
        QuadVariantParams { f: Seq::zero(), ..self.clone() }
    }
}

/// The variant quadridiagonal matrix from its column formulas.
pub fn build_variant_quad(p: &QuadVariantParams) -> HessMatrix {
    let p = p.clone();
    HessMatrix::new(Some(2), move |n, k| {
        let k = k as isize;
        let (a, b, c, d, e, f) = (&p.a, &p.b, &p.c, &p.d, &p.e, &p.f);
        let l1 = |i: isize| &p.alpha + &(&p.x * &a.at(i));
        let l2 = |i: isize| &p.beta + &(&p.y * &a.at(i));
        let (x, y) = (&p.x, &p.y);
        match n as isize - k {
            -1 => l1(k - 1) * &l2(k - 1) * &c.at(k),
            0 => {
                l1(k) * &l2(k) * &d.at(k)
                    + &(l1(k) * y * &b.at(k) * &c.at(k))
                    + &(x * &b.at(k) * &l2(k - 1) * &c.at(k))
                    + &(&l1(k) * &e.at(k))
                    + &(&l2(k) * &f.at(k))
            }
            1 => {
                l1(k + 1) * y * &b.at(k + 1) * &d.at(k)
                    + &(x * &b.at(k + 1) * &l2(k) * &d.at(k))
                    + &(x * &b.at(k + 1) * y * &b.at(k) * &c.at(k))
                    + &(x * &b.at(k + 1) * &e.at(k))
                    + &(y * &b.at(k + 1) * &f.at(k))
            }
            2 => x * y * &b.at(k + 2) * &b.at(k + 1) * &d.at(k),
            _ => Poly::zero(),
        }
    })
}

/// `Q = P|_{f=0}`.
pub fn variant_quad_q(p: &QuadVariantParams) -> HessMatrix {
    build_variant_quad(&p.with_f_zero())
}

/// Finite factors `(L1, L2, U, D1, D2)` of the variant family.
pub fn variant_factors(p: &QuadVariantParams, size: usize) -> [Mat; 5] {
    let l = lower_bidiagonal(&p.a.vec(size), &p.b.vec(size));
    let id = Mat::identity(size);
    [
        id.scale(&p.alpha).add(&l.scale(&p.x)),
        id.scale(&p.beta).add(&l.scale(&p.y)),
        upper_bidiagonal(&p.d.vec(size), &p.c.vec(size)),
        Mat::diag(&p.e.vec(size)),
        Mat::diag(&p.f.vec(size)),
    ]
}

/// Leading `n x n` block of `L1 L2 U + L1 D1 + L2 D2`.
pub fn variant_from_factors(p: &QuadVariantParams, n: usize) -> Mat {
    let [l1, l2, u, d1, d2] = variant_factors(p, n + 1);
    l1.mul(&l2).mul(&u).add(&l1.mul(&d1)).add(&l2.mul(&d2)).square(n)
}

/// `L1 L2 = L2 L1` on a `size x size` truncation.
pub fn variant_commutes(p: &QuadVariantParams, size: usize) -> bool {
    let [l1, l2, ..] = variant_factors(p, size);
    l1.mul(&l2) == l2.mul(&l1)
}

/// `P = Q + L2 D2`, checked columnwise as `p_k = q_k + f_k l_k` with `l_k`
/// holding `beta + y a_k` at row `k` and `y b_{k+1}` at row `k+1`.
pub fn variant_difference_check(p: &QuadVariantParams, size: usize) -> bool {
    let pm = build_variant_quad(p).truncate(size);
    let q = variant_quad_q(p).truncate(size);
    (0..size).all(|k| {
        let ki = k as isize;
        let fk = p.f.at(ki);
        (0..size).all(|n| {
            let l = if n == k {
                &p.beta + &(&p.y * &p.a.at(ki))
            } else if n == k + 1 {
                &p.y * &p.b.at(ki + 1)
            } else {
                Poly::zero()
            };
            pm.get(n, k) == &(q.get(n, k) + &(&fk * &l))
        })
    })
}
