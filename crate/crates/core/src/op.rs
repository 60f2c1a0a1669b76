//! Normal-form calculus for reflection-shift difference operators.
//!
//! An operator is a finite sum of terms `c(x) * T^h * R^s` with a rational
//! function coefficient, a rational shift `h` and a reflection flag `s`.
//! The reflection acts first: `(T^h R f)(x) = f(-x - h)`, so a term with
//! `s = false` contributes `c(x) f(x + h)` and a term with `s = true`
//! contributes `c(x) f(-x - h)`.
//!
//! Composition uses the rewriting rules
//! `T^h c(x) = c(x+h) T^h`, `R c(x) = c(-x) R`, `R T^h = T^{-h} R`,
//! `R^2 = I`, which close the normal form.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Rat;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TermKey {
    pub shift: Rat,
    pub reflect: bool,
}

impl TermKey {
    pub fn new(shift: Rat, reflect: bool) -> TermKey {
        TermKey { shift, reflect }
    }

    /// Image of the evaluation point under this term's substitution.
    pub fn target(&self, x: &Rat) -> Rat {
        if self.reflect {
            -(x + &self.shift)
        } else {
            x + &self.shift
        }
    }
}

/// A reflection-shift operator in normal form: at most one term per
/// `(shift, reflect)` key and no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ShiftReflectOp {
    terms: BTreeMap<TermKey, RatFunc>,
}

impl ShiftReflectOp {
    pub fn zero() -> ShiftReflectOp {
        ShiftReflectOp::default()
    }

    pub fn identity() -> ShiftReflectOp {
        ShiftReflectOp::from_term(RatFunc::one(), Rat::zero(), false)
    }

    /// Plain reflection `R`.
    pub fn reflection() -> ShiftReflectOp {
        ShiftReflectOp::from_term(RatFunc::one(), Rat::zero(), true)
    }

    /// Plain shift `T^h`.
    pub fn shift(h: Rat) -> ShiftReflectOp {
        ShiftReflectOp::from_term(RatFunc::one(), h, false)
    }

    pub fn from_term(coeff: RatFunc, shift: Rat, reflect: bool) -> ShiftReflectOp {
        let mut op = ShiftReflectOp::zero();
        op.insert(TermKey::new(shift, reflect), coeff);
        op
    }

    fn insert(&mut self, key: TermKey, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shift: &Rat, reflect: bool) -> RatFunc {
        self.terms
            .get(&TermKey::new(shift.clone(), reflect))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, other: &ShiftReflectOp) -> ShiftReflectOp {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ShiftReflectOp) -> ShiftReflectOp {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ShiftReflectOp {
        ShiftReflectOp {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> ShiftReflectOp {
        if c.is_zero() {
            return ShiftReflectOp::zero();
        }
        ShiftReflectOp {
            terms: self
                .terms
                .iter()
                .map(|(k, f)| (k.clone(), f.scale(c)))
                .collect(),
        }
    }

    /// Left-multiplies every coefficient by a rational function.
    pub fn scale_fn(&self, f: &RatFunc) -> ShiftReflectOp {
        let mut out = ShiftReflectOp::zero();
        for (k, c) in &self.terms {
            out.insert(k.clone(), f * c);
        }
        out
    }

    /// Normal form of `self . other` (self applied after other).
    pub fn compose(&self, other: &ShiftReflectOp) -> ShiftReflectOp {
        let mut out = ShiftReflectOp::zero();
        let minus_one = Rat::int(-1);
        for (k1, c1) in &self.terms {
            // substitution carried by the left term
            for (k2, c2) in &other.terms {
                let (key, moved) = if k1.reflect {
                    // R T^{h2} = T^{-h2} R ; coefficient passes through
                    // the left substitution x -> -x - h1.
                    (
                        TermKey::new(&k1.shift - &k2.shift, !k2.reflect),
                        c2.affine_substitute(&minus_one, &-&k1.shift).unwrap(),
                    )
                } else {
                    (
                        TermKey::new(&k1.shift + &k2.shift, k2.reflect),
                        c2.affine_substitute(&Rat::one(), &k1.shift).unwrap(),
                    )
                };
                out.insert(key, c1 * &moved);
            }
        }
        out
    }

    pub fn commutator(a: &ShiftReflectOp, b: &ShiftReflectOp) -> ShiftReflectOp {
        a.compose(b).sub(&b.compose(a))
    }

    pub fn anticommutator(a: &ShiftReflectOp, b: &ShiftReflectOp) -> ShiftReflectOp {
        a.compose(b).add(&b.compose(a))
    }

    /// Applies the operator to a polynomial.
    ///
    /// Individual terms may be non-polynomial; the sum is assembled over a
    /// common denominator before the single exactness check, because only
    /// the total is required to collapse to a polynomial.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut common = Poly::one();
        for c in self.terms.values() {
            let g = common.gcd(c.den());
            common = &common * &c.den().div_exact(&g)?;
        }
        let mut total = Poly::zero();
        for (k, c) in &self.terms {
            let (a, b) = if k.reflect {
                (Rat::int(-1), -&k.shift)
            } else {
                (Rat::one(), k.shift.clone())
            };
            let moved = p.affine_substitute(&a, &b)?;
            let cofactor = common.div_exact(c.den())?;
            total = &total + &(&(c.num() * &moved) * &cofactor);
        }
        total.div_exact(&common)
    }

    /// Serializable dump of the normal form, ordered by term key.
    pub fn dump(&self) -> Vec<TermDump> {
        self.terms
            .iter()
            .map(|(k, c)| TermDump {
                shift: k.shift.clone(),
                reflect: k.reflect,
                num: c.num().coeffs().to_vec(),
                den: c.den().coeffs().to_vec(),
            })
            .collect()
    }
}

/// One normal-form term in the JSON operator dump.
#[derive(Clone, Debug, Serialize)]
pub struct TermDump {
    pub shift: Rat,
    pub reflect: bool,
    pub num: Vec<Rat>,
    pub den: Vec<Rat>,
}

impl fmt::Debug for ShiftReflectOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, "  +  ")?;
            }
            first = false;
            write!(f, "[{c}]")?;
            if !k.shift.is_zero() {
                write!(f, " T^{}", k.shift)?;
            }
            if k.reflect {
                write!(f, " R")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn c(v: i64) -> RatFunc {
        RatFunc::constant(Rat::int(v))
    }

    #[test]
    fn reflection_rewrites_shift() {
        // R . T^h = T^{-h} R
        let lhs = ShiftReflectOp::reflection().compose(&ShiftReflectOp::shift(rat(3, 2)));
        let rhs = ShiftReflectOp::from_term(RatFunc::one(), rat(-3, 2), true);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_reflection_cancels() {
        // (c T^a R)(d T^b R) = c(x) d(-x-a) T^{a-b}
        let cx = RatFunc::from_poly(Poly::x());
        let a = ShiftReflectOp::from_term(cx.clone(), Rat::int(1), true);
        let dx = RatFunc::from_poly(Poly::x_plus(Rat::int(5)));
        let b = ShiftReflectOp::from_term(dx, Rat::int(2), true);
        let out = a.compose(&b);
        // coefficient x * (-x-1+5) = x(4-x), shift 1-2 = -1, no reflection
        let expect = ShiftReflectOp::from_term(
            RatFunc::from_poly(&Poly::x() * &Poly::from_coeffs(vec![Rat::int(4), Rat::int(-1)])),
            Rat::int(-1),
            false,
        );
        assert_eq!(out, expect);
    }

    #[test]
    fn identity_applies_as_identity() {
        let p = Poly::from_coeffs(vec![rat(1, 3), Rat::int(2), Rat::one()]);
        assert_eq!(ShiftReflectOp::identity().apply(&p).unwrap(), p);
    }

    #[test]
    fn apply_matches_composition() {
        // (a . b) p == a (b p) whenever all applications are polynomial
        let a = ShiftReflectOp::shift(Rat::one())
            .scale_fn(&RatFunc::from_poly(Poly::x()))
            .add(&ShiftReflectOp::reflection().scale(&Rat::int(3)));
        let b = ShiftReflectOp::from_term(c(2), Rat::int(-1), true)
            .add(&ShiftReflectOp::identity().scale_fn(&RatFunc::from_poly(Poly::x())));
        let p = Poly::from_coeffs(vec![Rat::int(1), Rat::int(-1), Rat::int(2)]);
        let via_compose = a.compose(&b).apply(&p).unwrap();
        let via_chain = a.apply(&b.apply(&p).unwrap()).unwrap();
        assert_eq!(via_compose, via_chain);
    }

    #[test]
    fn sum_collapses_even_when_terms_do_not() {
        // (1/x)(I - R) annihilates even polynomials although each term is
        // individually non-polynomial.
        let inv_x = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        let op = ShiftReflectOp::from_term(inv_x.clone(), Rat::zero(), false)
            .sub(&ShiftReflectOp::from_term(inv_x, Rat::zero(), true));
        let even = Poly::from_coeffs(vec![Rat::int(4), Rat::zero(), Rat::one()]);
        assert_eq!(op.apply(&even).unwrap(), Poly::zero());
        // on x it gives 2
        assert_eq!(op.apply(&Poly::x()).unwrap(), Poly::constant(Rat::int(2)));
    }

    #[test]
    fn normal_form_drops_cancelling_terms() {
        let op = ShiftReflectOp::identity().sub(&ShiftReflectOp::identity());
        assert!(op.is_zero());
    }
}
