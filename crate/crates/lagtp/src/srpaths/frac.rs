use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::SrRing;
use crate::poly::Poly;

/// A quotient of polynomials, kept unreduced except for exact cancellation.
/// Equality is by cross-multiplication, so no gcds are needed.
#[derive(Clone, Debug)]
pub struct Frac {
    num: Poly,
    den: Poly,
}

impl Frac {
    pub fn new(num: Poly, den: Poly) -> Frac {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Frac::zero();
        }
        if let Some(d) = den.as_constant() {
            let g = num.terms().iter().fold(d.clone(), |g, (_, c)| g.gcd(c));
            let g = if d.is_negative() { -g } else { g };
            let div = |p: &Poly| p.map_coeffs(|c: &BigInt| c / &g);
            return Frac { num: div(&num), den: div(&den) };
        }
        match num.div_exact(&den) {
            Ok(q) => Frac { num: q, den: Poly::one() },
            Err(_) => Frac { num, den },
        }
    }

    pub fn int(n: i64) -> Frac {
        Frac::from(Poly::int(n))
    }

    pub fn ratio(p: i64, q: i64) -> Frac {
        Frac::new(Poly::int(p), Poly::int(q))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// The polynomial this equals, if the denominator divides out.
    pub fn to_poly(&self) -> Option<Poly> {
        self.num.div_exact(&self.den).ok()
    }

    pub fn div(&self, other: &Frac) -> Frac {
        Frac::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// `p`, `p/q` with `p`, `q` polynomial expressions.
    pub fn parse(s: &str) -> Option<Frac> {
        match s.split_once('/') {
            Some((a, b)) => {
                let den = Poly::parse(b.trim()).ok()?;
                if den.is_zero() {
                    return None;
                }
                Some(Frac::new(Poly::parse(a.trim()).ok()?, den))
            }
            None => Poly::parse(s.trim()).ok().map(Frac::from),
        }
    }
}

impl From<Poly> for Frac {
    fn from(p: Poly) -> Frac {
        Frac { num: p, den: Poly::one() }
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Frac) -> bool {
        if self.den == other.den {
            self.num == other.num
        } else {
            &self.num * &other.den == &other.num * &self.den
        }
    }
}

impl Add<&Frac> for &Frac {
    type Output = Frac;
    fn add(self, o: &Frac) -> Frac {
        if self.den == o.den {
            Frac::new(&self.num + &o.num, self.den.clone())
        } else {
            Frac::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
        }
    }
}

impl Sub<&Frac> for &Frac {
    type Output = Frac;
    fn sub(self, o: &Frac) -> Frac {
        self + &Frac { num: -&o.num, den: o.den.clone() }
    }
}

impl Mul<&Frac> for &Frac {
    type Output = Frac;
    fn mul(self, o: &Frac) -> Frac {
        if self.den.is_one() && o.den.is_one() {
            Frac::from(&self.num * &o.num)
        } else {
            Frac::new(&self.num * &o.num, &self.den * &o.den)
        }
    }
}

impl SrRing for Frac {
    fn zero() -> Self {
        Frac::from(Poly::zero())
    }
    fn one() -> Self {
        Frac::from(Poly::one())
    }
    fn int(n: i64) -> Self {
        Frac::int(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Frac {
    pub fn zero() -> Frac {
        <Frac as SrRing>::zero()
    }

    pub fn one() -> Frac {
        <Frac as SrRing>::one()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.den.as_constant().is_some() && self.num.as_constant().is_some() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    #[test]
    fn arithmetic() {
        let h = Frac::ratio(1, 2);
        assert_eq!(&h + &h, Frac::one());
        assert_eq!(Frac::ratio(2, -4), Frac::ratio(-1, 2));
        assert_eq!(Frac::ratio(6, 4).to_string(), "3/2");
        let k = Frac::parse("kappa").unwrap();
        let q = Frac::new(p("1+kappa"), p("2-kappa"));
        assert_eq!(&(&q * &Frac::from(p("2-kappa"))) - &k, Frac::one());
        assert_eq!(Frac::parse("1/2"), Some(h));
        assert_eq!(Frac::parse("1/0"), None);
        assert_eq!(Frac::new(p("x^2-1"), p("x-1")).den(), &Poly::one());
    }
}
