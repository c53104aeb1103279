//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored sorted ascending in graded order: total degree first,
//! then, within one degree, a monomial with the larger exponent on the
//! earlier variable comes first. That keeps printouts in the familiar
//! `1 + 2*x + x^2` shape and is a genuine monomial order, which exact
//! division relies on.

mod json;
mod parse;
mod var;

pub use json::{matrix_from_json, matrix_to_json};
pub use parse::parse_expr;
pub use var::Var;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("bad polynomial json: {0}")]
    Json(String),
    #[error("inexact division")]
    Inexact,
    #[error("coefficient is not an integer")]
    NotIntegral,
}

/// Coefficient rings the polynomial type is instantiated with.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Debug + Send + Sync + 'static
{
    fn to_dec(&self) -> String;
    fn parse_dec(s: &str) -> Option<Self>;
    /// `self / other` when the quotient lies in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    fn from_int(n: i64) -> Self;
}

impl Coeff for BigInt {
    fn to_dec(&self) -> String {
        self.to_str_radix(10)
    }
    fn parse_dec(s: &str) -> Option<Self> {
        s.parse().ok()
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for BigRational {
    fn to_dec(&self) -> String {
        if self.is_integer() {
            self.numer().to_str_radix(10)
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
    fn parse_dec(s: &str) -> Option<Self> {
        match s.split_once('/') {
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
            Some((n, d)) => {
                let d: BigInt = d.parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(BigRational::new(n.parse().ok()?, d))
            }
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// A monomial as a sparse exponent vector sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else {
                if j < other.0.len() && other.0[j].0 < v {
                    return None;
                }
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Drop variable `v`, returning its exponent and the rest.
    pub fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|p| {
                if p.0 == v {
                    e = p.1;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (e, Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        while i < a.len() && i < b.len() {
            let (va, ea) = a[i];
            let (vb, eb) = b[i];
            match va.cmp(&vb) {
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {}
                    o => return o.reverse(),
                },
            }
            i += 1;
        }
        // equal degree and equal prefix forces equal length
        a.len().cmp(&b.len()).reverse()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with coefficients in `C`, kept in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<C> {
    terms: Vec<(Monomial, C)>,
}

/// Integer-coefficient polynomial, the carrier of every matrix entry.
pub type Poly = MPoly<BigInt>;
/// Rational-coefficient polynomial, used inside power series.
pub type QPoly = MPoly<BigRational>;

impl<C: Coeff> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly { terms: vec![(Monomial::var(v, 1), C::one())] }
    }

    pub fn named(name: &str) -> Self {
        Self::var(Var::new(name))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(x) => *x = x.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        MPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => C::zero(),
        }
    }

    /// `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.degree())
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.iter().map(|t| t.0.exponent(v)).max()
    }

    /// Variables occurring, in the global order.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|t| t.0.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // multiplying by a monomial preserves a monomial order
        MPoly { terms: self.terms.iter().map(|(n, x)| (n.mul(m), x.clone() * c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution; variables missing from `env` stay put.
    pub fn substitute(&self, env: &HashMap<Var, MPoly<C>>) -> Self {
        let mut cache: HashMap<(Var, u32), MPoly<C>> = HashMap::new();
        let mut out: Vec<(Monomial, C)> = Vec::new();
        let mut pending: Vec<MPoly<C>> = Vec::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor: Option<MPoly<C>> = None;
            for &(v, e) in m.pairs() {
                match env.get(&v) {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pe = cache.entry((v, e)).or_insert_with(|| p.pow(e)).clone();
                        factor = Some(match factor {
                            None => pe,
                            Some(f) => &f * &pe,
                        });
                    }
                }
            }
            let km = Monomial(kept);
            match factor {
                None => out.push((km, c.clone())),
                Some(f) => pending.push(f.mul_monomial(&km, c)),
            }
        }
        let mut acc = MPoly::from_terms(out);
        for p in pending {
            acc = &acc + &p;
        }
        acc
    }

    pub fn substitute_pairs(&self, pairs: &[(Var, MPoly<C>)]) -> Self {
        self.substitute(&pairs.iter().cloned().collect())
    }

    /// Evaluate all variables; missing ones are an error.
    pub fn eval(&self, env: &HashMap<Var, C>) -> Option<C> {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = env.get(&v)?;
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Some(acc)
    }

    pub fn is_coeffwise_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// True when every term has degree `d` in the variables `vs`.
    pub fn is_homogeneous_in(&self, vs: &[Var], d: u32) -> bool {
        self.terms.iter().all(|(m, _)| vs.iter().map(|&v| m.exponent(v)).sum::<u32>() == d)
    }

    /// Coefficient of `v^e`, as a polynomial in the other variables.
    pub fn coeff_of(&self, v: Var, e: u32) -> Self {
        MPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (f, rest) = m.split_off(v);
            (f == e).then(|| (rest, c.clone()))
        }))
    }

    /// Exact division. Fails unless `divisor` divides `self` in the ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (lm, lc) = divisor.leading().ok_or(PolyError::Inexact)?.clone();
        if let Some(c) = divisor.as_constant() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, x) in &self.terms {
                terms.push((m.clone(), x.div_exact(&c).ok_or(PolyError::Inexact)?));
            }
            return Ok(MPoly { terms });
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let qm = rm.div(&lm).ok_or(PolyError::Inexact)?;
            let qc = rc.div_exact(&lc).ok_or(PolyError::Inexact)?;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.push((qm, qc));
        }
        Ok(MPoly::from_terms(quot))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json::poly_to_json(self)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, PolyError> {
        json::poly_from_json(v)
    }
}

impl Poly {
    pub fn to_q(&self) -> QPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn parse(s: &str) -> Result<Poly, PolyError> {
        parse_expr(s)?.to_z()
    }
}

impl QPoly {
    /// Convert to integer coefficients; fails on a proper fraction.
    pub fn to_z(&self) -> Result<Poly, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return Err(PolyError::NotIntegral);
            }
            terms.push((m.clone(), c.numer().clone()));
        }
        Ok(MPoly { terms })
    }

    pub fn parse(s: &str) -> Result<QPoly, PolyError> {
        parse_expr(s)
    }
}

fn merge<C: Coeff>(a: &[(Monomial, C)], b: &[(Monomial, C)], negate_b: bool) -> Vec<(Monomial, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &C| if negate_b { -c.clone() } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0.clone(), nb(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.clone() + nb(&b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), nb(c))));
    out
}

impl<C: Coeff> Add<&MPoly<C>> for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &MPoly<C>) -> MPoly<C> {
        MPoly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<C: Coeff> Sub<&MPoly<C>> for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &MPoly<C>) -> MPoly<C> {
        MPoly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<C: Coeff> Mul<&MPoly<C>> for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if self.terms.len() == 1 {
            return rhs.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        if rhs.terms.len() == 1 {
            return self.mul_monomial(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(x) => *x = x.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        MPoly { terms }
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr<MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: MPoly<C>) -> MPoly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: &MPoly<C>) -> MPoly<C> {
                (&self).$f(rhs)
            }
        }
        impl<C: Coeff> $tr<MPoly<C>> for &MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: MPoly<C>) -> MPoly<C> {
                self.$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<C: Coeff> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&MPoly<C>> for MPoly<C> {
    fn add_assign(&mut self, rhs: &MPoly<C>) {
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl<C: Coeff> Zero for MPoly<C> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for MPoly<C> {
    fn one() -> Self {
        MPoly::one()
    }
}

impl<C: Coeff> std::iter::Sum for MPoly<C> {
    fn sum<I: Iterator<Item = MPoly<C>>>(iter: I) -> Self {
        iter.fold(MPoly::zero(), |a, b| &a + &b)
    }
}

impl<C: Coeff> std::iter::Product for MPoly<C> {
    fn product<I: Iterator<Item = MPoly<C>>>(iter: I) -> Self {
        iter.fold(MPoly::one(), |a, b| &a * &b)
    }
}

impl<C: Coeff> From<i64> for MPoly<C> {
    fn from(n: i64) -> Self {
        MPoly::int(n)
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                parts.push(abs.to_dec());
            }
            for &(v, e) in m.pairs() {
                if e == 1 {
                    parts.push(v.name().to_string());
                } else {
                    parts.push(format!("{}^{}", v.name(), e));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Shorthand for a polynomial variable.
pub fn v(name: &str) -> Poly {
    Poly::named(name)
}

/// Shorthand for an integer constant polynomial.
pub fn c(n: i64) -> Poly {
    Poly::int(n)
}

/// Shorthand for `Poly::parse(..).unwrap()`; panics on bad input.
pub fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap_or_else(|e| panic!("bad polynomial {s:?}: {e}"))
}

/// `x (x+1) ... (x+k-1)`.
pub fn rising(x: &Poly, k: u32) -> Poly {
    (0..k).map(|i| x + &c(i as i64)).product()
}

/// `x (x-1) ... (x-k+1)`.
pub fn falling(x: &Poly, k: u32) -> Poly {
    (0..k).map(|i| x - &c(i as i64)).product()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn square_of_binomial() {
        let x = v("x");
        let s = &(&c(1) + &x) * &(&c(1) + &x);
        assert_eq!(s, p("1 + 2*x + x^2"));
        assert_eq!(s.to_string(), "1 + 2*x + x^2");
    }

    #[test]
    fn alpha_product() {
        let a = v("a");
        assert_eq!((&c(1) + &a) * (&c(2) + &a), p("2 + 3*a + a^2"));
    }

    #[test]
    fn difference_of_squares() {
        let (vp, vm) = (v("vp"), v("vm"));
        assert_eq!((&vp - &vm) * (&vp + &vm), p("vp^2 - vm^2"));
    }

    #[test]
    fn degree_adds() {
        let a = p("1 + x*y + y^3");
        let b = p("x^2 - 4");
        assert_eq!((&a * &b).degree(), Some(5));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn substitution_examples() {
        let x = Var::new("x");
        let env: HashMap<_, _> = [(x, c(2))].into();
        assert_eq!(p("x^2").substitute(&env), c(4));
        let a = Var::new("a");
        assert_eq!(p("1 + a").substitute_pairs(&[(a, p("lam - 1"))]), p("lam"));
        let sub = [(Var::new("yp"), v("vm")), (Var::new("yv"), v("vp"))];
        assert_eq!(p("yp*yv").substitute_pairs(&sub), p("vm*vp"));
        // unmapped variables pass through
        assert_eq!(p("x*q + 1").substitute_pairs(&[(x, c(3))]), p("3*q + 1"));
    }

    #[test]
    fn nonneg_examples() {
        assert!(p("1 + 2*x + x^2").is_coeffwise_nonneg());
        assert!(!p("(1 - x)^2").is_coeffwise_nonneg());
        assert!(Poly::zero().is_coeffwise_nonneg());
    }

    #[test]
    fn graded_order_printing() {
        assert_eq!(p("x^2 + a*x + a^2 + x + a + 1").to_string(), "1 + a + x + a^2 + a*x + x^2");
        assert_eq!(p("-x + 3").to_string(), "3 - x");
        assert_eq!(p("-2*x").to_string(), "-2*x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert_eq!(p("6*x").div_exact(&c(3)).unwrap(), p("2*x"));
        assert!(p("x + 1").div_exact(&p("x")).is_err());
        assert!(p("3*x").div_exact(&c(2)).is_err());
    }

    #[test]
    fn coeff_extraction() {
        let q = p("1 + 2*x*y + 3*x^2 + y");
        assert_eq!(q.coeff_of(Var::new("x"), 1), p("2*y"));
        assert_eq!(q.coeff_of(Var::new("x"), 0), p("1 + y"));
        assert_eq!(q.degree_in(Var::new("x")), Some(2));
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(rising(&v("a"), 3), p("a*(a+1)*(a+2)"));
        assert_eq!(falling(&c(5), 2), c(20));
    }

    const NAMES: [&str; 4] = ["x", "y", "z", "w"];

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..3, 4)), 0..=6).prop_map(|ts| {
            Poly::from_terms(ts.into_iter().map(|(c, es)| {
                let m = Monomial::from_pairs(NAMES.iter().zip(es).map(|(n, e)| (Var::new(n), e)).collect());
                (m, BigInt::from(c))
            }))
        })
    }

    fn arb_nonneg_poly() -> impl Strategy<Value = Poly> {
        arb_poly().prop_map(|q| q.map_coeffs(|c: &BigInt| c.abs()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), cc in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &cc, &(&a * &cc) + &(&b * &cc));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &cc, &a * &(&b * &cc));
            prop_assert_eq!(&(&a + &b) + &cc, &a + &(&b + &cc));
            prop_assert_eq!(&a - &a, Poly::zero());
        }

        #[test]
        fn product_degree(a in arb_poly(), b in arb_poly()) {
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
            }
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
            }
        }

        #[test]
        fn renaming_composes(a in arb_poly(), perm in Just(()).prop_perturb(|_, mut rng| {
            let mut idx = [0usize, 1, 2, 3];
            for i in (1..4).rev() { idx.swap(i, (rng.next_u32() as usize) % (i + 1)); }
            idx
        }), tau in prop::collection::vec(arb_poly(), 4)) {
            let vars: Vec<Var> = NAMES.iter().map(|n| Var::new(n)).collect();
            let sigma: HashMap<Var, Poly> = (0..4).map(|i| (vars[i], Poly::var(vars[perm[i]]))).collect();
            let tau_map: HashMap<Var, Poly> = (0..4).map(|i| (vars[i], tau[i].clone())).collect();
            // (tau . sigma)(v) = tau(sigma(v))
            let composed: HashMap<Var, Poly> = (0..4).map(|i| (vars[i], sigma[&vars[i]].substitute(&tau_map))).collect();
            prop_assert_eq!(a.substitute(&sigma).substitute(&tau_map), a.substitute(&composed));
        }

        #[test]
        fn nonneg_closed(a in arb_nonneg_poly(), b in arb_nonneg_poly()) {
            prop_assert!((&a + &b).is_coeffwise_nonneg());
            prop_assert!((&a * &b).is_coeffwise_nonneg());
        }

        #[test]
        fn printing_round_trips(a in arb_poly()) {
            prop_assert_eq!(Poly::parse(&a.to_string()).unwrap(), a);
        }
    }
}
