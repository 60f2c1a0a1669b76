//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed; the zero polynomial is the empty list. Degrees in this project
//! stay below ~60, so a dense representation is the right trade-off.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Poly {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// Ascending-order coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `x + c` as a convenience for linear factors.
    pub fn x_plus(c: Rat) -> Poly {
        Poly::from_coeffs(vec![c, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rat::is_one)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `x -> a*x + b` exactly; `a` must be nonzero so the degree
    /// is preserved.
    pub fn affine_substitute(&self, a: &Rat, b: &Rat) -> Result<Poly> {
        if a.is_zero() {
            return Err(Error::InvalidSubstitution);
        }
        // Horner in the substituted variable.
        let arg = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Poly::constant(c.clone());
        }
        Ok(acc)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / dl;
            let shift = rd - dd;
            quot[shift] = f.clone();
            let mut new = rem.coeffs.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &f;
                new[i + shift] = &new[i + shift] - &sub;
            }
            rem = Poly::from_coeffs(new);
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Division that must be exact; a nonzero remainder is an error carrying
    /// the offending remainder.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonPolynomialResult {
                remainder: r.to_string(),
                divisor: d.to_string(),
            })
        }
    }

    /// Monic gcd via the Euclidean algorithm; coefficients are rational so
    /// each remainder is renormalized to keep integer growth in check.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let lead = b.leading().unwrap().clone();
            b = b.scale(&lead.recip().unwrap());
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.clone().recip().unwrap();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.clone().recip().unwrap()),
            _ => self.clone(),
        }
    }
}

/// Leading-coefficient ratio of `num/den` as the variable grows without
/// bound: the whole limit when degrees match, zero when the numerator lags,
/// an error when it dominates.
pub fn limit_at_infinity(num: &Poly, den: &Poly) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::Domain("limit with zero denominator".into()));
    }
    if num.is_zero() {
        return Ok(Rat::zero());
    }
    let (dn, dd) = (num.degree().unwrap(), den.degree().unwrap());
    if dn > dd {
        return Err(Error::DivergentLimit {
            num_degree: dn,
            den_degree: dd,
        });
    }
    if dn < dd {
        return Ok(Rat::zero());
    }
    Ok(num.leading().unwrap() / den.leading().unwrap())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::int(c)).collect())
    }

    #[test]
    fn reflection_fixes_even_polynomial() {
        let sq = p(&[0, 0, 1]);
        let out = sq.affine_substitute(&Rat::int(-1), &Rat::zero()).unwrap();
        assert_eq!(out, sq);
    }

    #[test]
    fn shift_of_identity() {
        let out = Poly::x()
            .affine_substitute(&Rat::one(), &Rat::one())
            .unwrap();
        assert_eq!(out, p(&[1, 1]));
    }

    #[test]
    fn reflect_shift_expands_correctly() {
        // (-x-1)^2 - 1 = x^2 + 2x
        let q = p(&[-1, 0, 1]);
        let out = q.affine_substitute(&Rat::int(-1), &Rat::int(-1)).unwrap();
        assert_eq!(out, p(&[0, 2, 1]));
    }

    #[test]
    fn substitute_rejects_zero_scale() {
        assert!(matches!(
            Poly::x().affine_substitute(&Rat::zero(), &Rat::one()),
            Err(Error::InvalidSubstitution)
        ));
    }

    #[test]
    fn exact_division_and_remainder() {
        let a = &p(&[-1, 0, 1]) * &p(&[3, 1]); // (x^2-1)(x+3)
        assert_eq!(a.div_exact(&p(&[3, 1])).unwrap(), p(&[-1, 0, 1]));
        let err = p(&[1]).div_exact(&Poly::x()).unwrap_err();
        assert!(matches!(err, Error::NonPolynomialResult { .. }));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let g = p(&[1, 1]); // x+1
        let a = &g * &p(&[2, 0, 2]);
        let b = &g * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), g);
    }

    #[test]
    fn limit_cases() {
        // (3x+1)/x -> 3
        assert_eq!(
            limit_at_infinity(&p(&[1, 3]), &Poly::x()).unwrap(),
            Rat::int(3)
        );
        // 5/x^2 -> 0
        assert_eq!(
            limit_at_infinity(&p(&[5]), &p(&[0, 0, 1])).unwrap(),
            Rat::zero()
        );
        assert!(matches!(
            limit_at_infinity(&p(&[0, 0, 1]), &Poly::x()),
            Err(Error::DivergentLimit { .. })
        ));
        assert_eq!(limit_at_infinity(&p(&[1, 7]), &p(&[0, 2])).unwrap(), rat(7, 2));
    }

    #[test]
    fn eval_matches_horner() {
        let q = p(&[1, -2, 0, 4]);
        let t = rat(3, 2);
        let direct = Rat::one() - Rat::int(2) * &t + Rat::int(4) * t.pow(3);
        assert_eq!(q.eval(&t), direct);
    }
}
