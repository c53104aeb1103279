//! Truncated power series in `t` with rational polynomial coefficients.
//!
//! Everything the library needs (Laguerre EGFs, cycle/path EGFs, S-fraction
//! tails) is produced from ODE recurrences, never from closed forms.

use crate::poly::{factorial, Poly, PolyError, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("constant term is not an invertible rational")]
    NotInvertible,
    #[error("series must vanish at t = 0")]
    NonzeroConstant,
    #[error("series must start with 1")]
    NotUnitConstant,
    #[error("coefficient {n} is not integral: {what}")]
    NotIntegral { n: usize, what: String },
}

/// Coefficients of `t^0 .. t^order`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series {
    coefs: Vec<QPoly>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Series {
    pub fn from_coefs(mut coefs: Vec<QPoly>, order: usize) -> Series {
        coefs.resize(order + 1, QPoly::zero());
        Series { coefs }
    }

    pub fn zero(order: usize) -> Series {
        Series::from_coefs(Vec::new(), order)
    }

    pub fn constant(c: QPoly, order: usize) -> Series {
        Series::from_coefs(vec![c], order)
    }

    pub fn one(order: usize) -> Series {
        Series::constant(QPoly::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Series {
        Series::from_coefs(vec![QPoly::zero(), QPoly::one()], order)
    }

    /// `sum_n egf[n] t^n / n!`.
    pub fn from_egf(egf: &[Poly], order: usize) -> Series {
        let coefs = egf
            .iter()
            .enumerate()
            .map(|(n, p)| p.to_q().scale(&BigRational::new(BigInt::from(1), factorial(n as u64))))
            .collect();
        Series::from_coefs(coefs, order)
    }

    pub fn order(&self) -> usize {
        self.coefs.len() - 1
    }

    pub fn coef(&self, n: usize) -> &QPoly {
        &self.coefs[n]
    }

    pub fn coefs(&self) -> &[QPoly] {
        &self.coefs
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::from_coefs(self.coefs[..=order.min(self.order())].to_vec(), order)
    }

    /// `n! [t^n]`, required to have integer coefficients.
    pub fn egf_coef(&self, n: usize) -> Result<Poly, SeriesError> {
        let c = self.coefs[n].scale(&BigRational::from_integer(factorial(n as u64)));
        c.to_z().map_err(|_| SeriesError::NotIntegral { n, what: c.to_string() })
    }

    pub fn scale(&self, c: &QPoly) -> Series {
        Series { coefs: self.coefs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `t^k`, truncating.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut coefs = vec![QPoly::zero(); k.min(n + 1)];
        coefs.extend(self.coefs.iter().take((n + 1).saturating_sub(k)).cloned());
        Series { coefs }
    }

    /// `(s - s(0)) / t`, dropping the top coefficient's slot.
    pub fn unshift(&self) -> Series {
        let mut coefs: Vec<QPoly> = self.coefs[1..].to_vec();
        coefs.push(QPoly::zero());
        Series { coefs }
    }

    pub fn derivative(&self) -> Series {
        let n = self.order();
        let mut coefs: Vec<QPoly> = (1..=n).map(|i| self.coefs[i].scale(&q(i as i64))).collect();
        coefs.push(QPoly::zero());
        Series { coefs }
    }

    pub fn map(&self, f: impl Fn(&QPoly) -> QPoly) -> Series {
        Series { coefs: self.coefs.iter().map(f).collect() }
    }

    pub fn reciprocal(&self) -> Result<Series, SeriesError> {
        let c0 = self.coefs[0].as_constant().filter(|c| !c.is_zero()).ok_or(SeriesError::NotInvertible)?;
        let inv0 = BigRational::from_integer(BigInt::from(1)) / c0;
        let n = self.order();
        let mut r: Vec<QPoly> = vec![QPoly::constant(inv0.clone())];
        for k in 1..=n {
            let mut acc = QPoly::zero();
            for i in 1..=k {
                if !self.coefs[i].is_zero() && !r[k - i].is_zero() {
                    acc += &(&self.coefs[i] * &r[k - i]);
                }
            }
            r.push(acc.scale(&-inv0.clone()));
        }
        Ok(Series { coefs: r })
    }

    /// `self(g(t))` for `g(0) = 0`.
    pub fn compose(&self, g: &Series) -> Result<Series, SeriesError> {
        if !g.coefs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Series::constant(self.coefs[n].clone(), n);
        for k in (0..n).rev() {
            acc = &(&acc * &g) + &Series::constant(self.coefs[k].clone(), n);
        }
        Ok(acc)
    }

    /// Compositional inverse. Needs `g(0) = 0` and `g'(0)` a nonzero rational.
    pub fn reversion(&self) -> Result<Series, SeriesError> {
        if !self.coefs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order();
        let g1 = self.coefs.get(1).and_then(QPoly::as_constant).filter(|c| !c.is_zero()).ok_or(SeriesError::NotInvertible)?;
        let inv = BigRational::from_integer(BigInt::from(1)) / g1.clone();
        // h <- (s - (g(h) - g1 h)) / g1 fixes one more coefficient per pass
        let s = Series::t(n);
        let mut h = s.scale(&QPoly::constant(inv.clone()));
        let nonlinear = {
            let mut c = self.clone();
            c.coefs[1] = QPoly::zero();
            c
        };
        for _ in 0..n {
            h = (&s - &nonlinear.compose(&h)?).scale(&QPoly::constant(inv.clone()));
        }
        Ok(h)
    }

    /// `exp(self)` for `self(0) = 0`.
    pub fn exp(&self) -> Result<Series, SeriesError> {
        if !self.coefs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order();
        let mut e = vec![QPoly::one()];
        for m in 1..=n {
            let mut acc = QPoly::zero();
            for k in 1..=m {
                if !self.coefs[k].is_zero() {
                    acc += &(&self.coefs[k].scale(&q(k as i64)) * &e[m - k]);
                }
            }
            e.push(acc.scale(&(q(1) / q(m as i64))));
        }
        Ok(Series { coefs: e })
    }

    /// `log(self)` for `self(0) = 1`.
    pub fn log(&self) -> Result<Series, SeriesError> {
        if !self.coefs[0].is_one() {
            return Err(SeriesError::NotUnitConstant);
        }
        let n = self.order();
        let ratio = &self.derivative() * &self.reciprocal()?;
        let mut coefs = vec![QPoly::zero()];
        for m in 1..=n {
            coefs.push(ratio.coefs[m - 1].scale(&(q(1) / q(m as i64))));
        }
        Ok(Series { coefs })
    }

    /// Divide every coefficient exactly by `d`.
    pub fn div_coefs(&self, d: &QPoly) -> Result<Series, PolyError> {
        Ok(Series { coefs: self.coefs.iter().map(|c| c.div_exact(d)).collect::<Result<_, _>>()? })
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coefs: (0..=n).map(|i| &self.coefs[i] + &rhs.coefs[i]).collect() }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coefs: (0..=n).map(|i| &self.coefs[i] - &rhs.coefs[i]).collect() }
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut coefs = vec![QPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coefs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !rhs.coefs[j].is_zero() {
                    coefs[i + j] += &(&self.coefs[i] * &rhs.coefs[j]);
                }
            }
        }
        Series { coefs }
    }
}

/// The unique `G` with `G(0) = 0` and `G' = p + q G + r G^2`, to order `n`.
pub fn solve_riccati(p: &QPoly, qq: &QPoly, r: &QPoly, n: usize) -> Series {
    let mut g: Vec<QPoly> = vec![QPoly::zero()];
    for m in 0..n {
        let mut rhs = if m == 0 { p.clone() } else { qq * &g[m] };
        let mut sq = QPoly::zero();
        for i in 1..m {
            sq += &(&g[i] * &g[m - i]);
        }
        if !sq.is_zero() {
            rhs += &(r * &sq);
        }
        g.push(rhs.scale(&(q(1) / q(m as i64 + 1))));
    }
    Series::from_coefs(g, n)
}

/// The unique `F` with `F(0) = 1` and `F'/F = lam * Z(G)`, where `z[i]` is the
/// coefficient of `s^i` in `Z(s)`.
pub fn solve_logderiv(z: &[QPoly], g: &Series, lam: &QPoly, n: usize) -> Result<Series, SeriesError> {
    let g = g.truncate(n);
    let zs = Series::from_coefs(z.to_vec(), n);
    let h = zs.compose(&g)?.scale(lam);
    let mut f = vec![QPoly::one()];
    for m in 0..n {
        let mut acc = QPoly::zero();
        for i in 0..=m {
            if !h.coefs[m - i].is_zero() {
                acc += &(&f[i] * &h.coefs[m - i]);
            }
        }
        f.push(acc.scale(&(q(1) / q(m as i64 + 1))));
    }
    Ok(Series::from_coefs(f, n))
}

/// `F1^lam = exp(lam log F1)` with `lam` symbolic.
pub fn series_pow_sym(f1: &Series, lam: &QPoly, n: usize) -> Result<Series, SeriesError> {
    f1.truncate(n).log()?.scale(lam).exp()
}

/// Coefficient list of a polynomial in `s` given as a `Poly` in variable `s`.
pub fn poly_in(p: &QPoly, s: crate::poly::Var) -> Vec<QPoly> {
    let d = p.degree_in(s).unwrap_or(0);
    (0..=d).map(|e| p.coeff_of(s, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{p, v, Var};
    use proptest::prelude::*;

    fn qp(s: &str) -> QPoly {
        QPoly::parse(s).unwrap()
    }

    #[test]
    fn geometric_reciprocal() {
        let s = &Series::one(6) - &Series::t(6);
        let r = s.reciprocal().unwrap();
        assert!(r.coefs().iter().all(|c| c.is_one()));
        assert_eq!(Series::one(4).reciprocal().unwrap(), Series::one(4));
        assert_eq!(Series::t(3).reciprocal(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn sfraction_tail_reciprocal() {
        // f = 1/(1 - a t f) is the Catalan series in a
        let n = 5;
        let mut f = Series::one(n);
        for _ in 0..=n {
            f = (&Series::one(n) - &(&Series::t(n) * &f).scale(&qp("a"))).reciprocal().unwrap();
        }
        let cat = [1, 1, 2, 5, 14, 42];
        for (k, c) in cat.iter().enumerate() {
            assert_eq!(f.coef(k), &qp(&format!("{c}*a^{k}")));
        }
    }

    #[test]
    fn riccati_examples() {
        let g = solve_riccati(&qp("1"), &qp("2"), &qp("1"), 7);
        for k in 1..=7 {
            assert!(g.coef(k).is_one(), "t/(1-t) coefficient {k}");
        }
        let g = solve_riccati(&qp("1"), &QPoly::zero(), &QPoly::zero(), 4);
        assert_eq!(g, Series::t(4));
        let g = solve_riccati(&qp("zp"), &qp("zda + zdd"), &qp("zv"), 4);
        assert_eq!(g.coef(2), &qp("zp*(zda + zdd)/2"));
        // words 12 and 21 with 0-0 boundary: zp*zda + zp*zdd
        assert_eq!(g.egf_coef(2).unwrap(), p("zp*zda + zp*zdd"));
    }

    #[test]
    fn riccati_resatisfies_ode() {
        let (pp, qq, rr) = (qp("zp"), qp("zda + zdd"), qp("zv"));
        let n = 6;
        let g = solve_riccati(&pp, &qq, &rr, n);
        let rhs = &(&Series::constant(pp, n) + &g.scale(&qq)) + &(&g * &g).scale(&rr);
        let lhs = g.derivative();
        for k in 0..n {
            assert_eq!(lhs.coef(k), rhs.coef(k));
        }
    }

    #[test]
    fn logderiv_examples() {
        let n = 6;
        let g = solve_riccati(&qp("1"), &qp("2"), &qp("1"), n);
        let f = solve_logderiv(&[qp("1 + a"), qp("1 + a")], &g, &QPoly::one(), n).unwrap();
        // (1-t)^{-(1+a)}: n! [t^n] = (1+a)(2+a)...(n+a)
        for k in 0..=n {
            assert_eq!(f.egf_coef(k).unwrap(), crate::poly::rising(&p("1 + a"), k as u32));
        }
        let f = solve_logderiv(&[], &g, &QPoly::one(), n).unwrap();
        assert_eq!(f, Series::one(n));
        // S_2 by cycle type: identity gives yfp^2, the transposition yp*yv
        let gy = solve_riccati(&qp("yp"), &qp("yda + ydd"), &qp("yv"), 3);
        let f = solve_logderiv(&[qp("yfp"), qp("yv")], &gy, &QPoly::one(), 3).unwrap();
        assert_eq!(f.coef(2), &qp("(yfp^2 + yp*yv)/2"));
    }

    #[test]
    fn pow_sym_examples() {
        let n = 5;
        assert_eq!(series_pow_sym(&Series::one(n), &qp("lam"), n).unwrap(), Series::one(n));
        let geo = (&Series::one(n) - &Series::t(n)).reciprocal().unwrap();
        let f = series_pow_sym(&geo, &qp("lam"), n).unwrap();
        for k in 0..=n {
            assert_eq!(f.egf_coef(k).unwrap(), crate::poly::rising(&v("lam"), k as u32));
        }
        let g = solve_riccati(&qp("x"), &qp("y"), &qp("1"), n);
        let f1 = g.exp().unwrap();
        assert_eq!(series_pow_sym(&f1, &QPoly::one(), n).unwrap(), f1);
    }

    #[test]
    fn laguerre_egf_matches_formula() {
        // (1-t)^{-(1+a)} exp(x t/(1-t)), n <= 8
        let n = 8;
        let geo = (&Series::one(n) - &Series::t(n)).reciprocal().unwrap();
        let pre = series_pow_sym(&geo, &qp("1 + a"), n).unwrap();
        let g = &geo - &Series::one(n);
        let e = g.scale(&qp("x")).exp().unwrap();
        let f = &pre * &e;
        for k in 0..=n {
            let expect: Poly = (0..=k)
                .map(|j| {
                    crate::poly::Poly::constant(crate::poly::binomial(k as u64, j as u64))
                        * crate::poly::falling(&p(&format!("{k} + a")), (k - j) as u32)
                        * v("x").pow(j as u32)
                })
                .sum();
            assert_eq!(f.egf_coef(k).unwrap(), expect);
        }
    }

    #[test]
    fn exp_log_inverse() {
        let s = Series::from_coefs(vec![QPoly::zero(), qp("x"), qp("y/2"), qp("3")], 5);
        assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn reversion_of_geometric() {
        // t/(1-t) reverses to s/(1+s)
        let n = 6;
        let g = &(&Series::one(n) - &Series::t(n)).reciprocal().unwrap() - &Series::one(n);
        let h = g.reversion().unwrap();
        for k in 1..=n {
            assert_eq!(h.coef(k), &QPoly::int(if k % 2 == 1 { 1 } else { -1 }));
        }
        assert_eq!(g.compose(&h).unwrap(), Series::t(n));
    }

    #[test]
    fn poly_in_variable() {
        let z = poly_in(&qp("(1 + a)*(1 + s)"), Var::new("s"));
        assert_eq!(z, vec![qp("1 + a"), qp("1 + a")]);
    }

    proptest! {
        #[test]
        fn truncation_commutes(a in prop::collection::vec(-9i64..9, 7), b in prop::collection::vec(-9i64..9, 7), cut in 0usize..6) {
            let mk = |xs: &[i64]| Series::from_coefs(xs.iter().map(|&c| QPoly::int(c)).collect(), 6);
            let (sa, sb) = (mk(&a), mk(&b));
            prop_assert_eq!((&sa * &sb).truncate(cut), &sa.truncate(cut) * &sb.truncate(cut));
            prop_assert_eq!((&sa + &sb).truncate(cut), &sa.truncate(cut) + &sb.truncate(cut));
            let one = &Series::one(6) + &sa.shift(1);
            prop_assert_eq!(one.reciprocal().unwrap().truncate(cut), one.truncate(cut).reciprocal().unwrap());
        }

        #[test]
        fn reciprocal_inverts(a in prop::collection::vec(-9i64..9, 6)) {
            let s = &Series::one(5) + &Series::from_coefs(a.iter().map(|&c| QPoly::int(c)).collect(), 5).shift(1);
            prop_assert_eq!(&s * &s.reciprocal().unwrap(), Series::one(5));
        }
    }
}
