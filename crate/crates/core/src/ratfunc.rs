//! Reduced rational functions in one variable.
//!
//! Normal form: monic denominator, gcd(num, den) = 1. Equality of normal
//! forms is plain data equality, which is what the operator-identity checks
//! rely on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > Some(0) || !g.is_monic() {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        } else {
            (num, den)
        };
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip().unwrap();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value if this is a constant function.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.degree() == Some(0) && self.num.degree() <= Some(0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleEvaluation(t.to_string()));
        }
        Ok(self.num.eval(t) / d)
    }

    /// Substitutes `x -> a*x + b` in both parts.
    pub fn affine_substitute(&self, a: &Rat, b: &Rat) -> Result<RatFunc> {
        Ok(Self::reduce(
            self.num.affine_substitute(a, b)?,
            self.den.affine_substitute(a, b)?,
        ))
    }

    /// Multiplies a polynomial by this rational function, requiring the
    /// result to be a polynomial again.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        (&self.num * p).div_exact(&self.den)
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() { Poly::one() } else { self.den.clone() },
        }
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero rational function".into()));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a rational function from linear factors `x + c` over `x + d`
/// scaled by `s`; the shape every operator coefficient in this crate takes.
pub fn from_linear_factors(scale: Rat, num_shifts: &[Rat], den_shifts: &[Rat]) -> RatFunc {
    let mut num = Poly::constant(scale);
    for c in num_shifts {
        num = &num * &Poly::x_plus(c.clone());
    }
    let mut den = Poly::one();
    for c in den_shifts {
        den = &den * &Poly::x_plus(c.clone());
    }
    RatFunc::new(num, den).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn apply_divides_exactly() {
        // (rho2/x) * 2x = 2 with rho2 = 1
        let r = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        let out = r.apply(&Poly::x().scale(&Rat::int(2))).unwrap();
        assert_eq!(out, Poly::constant(Rat::int(2)));
    }

    #[test]
    fn apply_rejects_non_polynomial() {
        let r = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        assert!(matches!(
            r.apply(&Poly::one()),
            Err(Error::NonPolynomialResult { .. })
        ));
    }

    #[test]
    fn apply_cancels_common_factor() {
        // (x-1)/(x+1) applied to (x+1) = x-1
        let r = RatFunc::new(Poly::x_plus(Rat::int(-1)), Poly::x_plus(Rat::one())).unwrap();
        assert_eq!(r.apply(&Poly::x_plus(Rat::one())).unwrap(), Poly::x_plus(Rat::int(-1)));
    }

    #[test]
    fn normal_form_is_canonical() {
        // (2x+2)/(2x^2+2x) reduces to 1/x
        let a = RatFunc::new(
            Poly::from_coeffs(vec![Rat::int(2), Rat::int(2)]),
            Poly::from_coeffs(vec![Rat::zero(), Rat::int(2), Rat::int(2)]),
        )
        .unwrap();
        let b = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        assert_eq!(a, b);
        assert!(a.den().is_monic());
    }

    #[test]
    fn eval_at_pole_is_an_error() {
        let r = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        assert!(matches!(r.eval(&Rat::zero()), Err(Error::PoleEvaluation(_))));
        assert_eq!(r.eval(&rat(1, 2)).unwrap(), Rat::int(2));
    }
}
