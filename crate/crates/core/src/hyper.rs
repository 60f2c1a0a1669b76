//! Pochhammer symbols and terminating generalized hypergeometric sums,
//! evaluated exactly.

use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`; empty product for n = 0.
///
/// ```
/// use cbi_core::{hyper::pochhammer, Rat};
/// assert_eq!(pochhammer(&Rat::new(1, 2), 2), Rat::new(3, 4));
/// ```
pub fn pochhammer(a: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &f;
        f += &Rat::one();
    }
    acc
}

/// Terminating `pFq` at a rational argument.
///
/// One numerator parameter must be a nonpositive integer `-n`; the sum runs
/// over `k = 0..=n`. When several numerator parameters are nonpositive
/// integers the smallest index terminates the series. Denominator parameters
/// whose Pochhammer vanishes inside the summation range are rejected.
pub fn pfq_terminating(numerators: &[Rat], denominators: &[Rat], argument: &Rat) -> Result<Rat> {
    let n = numerators
        .iter()
        .filter_map(Rat::as_nonpositive_integer)
        .min()
        .ok_or_else(|| {
            Error::SingularParameter(
                "no nonpositive-integer numerator parameter; series does not terminate".into(),
            )
        })?;
    for d in denominators {
        if let Some(m) = d.as_nonpositive_integer() {
            // (d)_k = 0 first at k = m + 1 <= n
            if m < n {
                return Err(Error::SingularParameter(format!(
                    "denominator parameter {d} vanishes at term {} of {}",
                    m + 1,
                    n
                )));
            }
        }
    }
    let mut sum = Rat::zero();
    let mut term = Rat::one(); // k = 0 term
    let mut k = Rat::zero();
    for i in 0..=n {
        sum += &term;
        if i == n {
            break;
        }
        for a in numerators {
            term *= &(a + &k);
        }
        for d in denominators {
            term = term / (d + &k);
        }
        term *= argument;
        term = term / (&k + &Rat::one());
        k += &Rat::one();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&rat(5, 7), 0), Rat::one());
        assert_eq!(pochhammer(&Rat::one(), 4), Rat::int(24));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn single_term_series() {
        let v = pfq_terminating(
            &[Rat::zero(), rat(7, 3)],
            &[rat(1, 5)],
            &Rat::one(),
        )
        .unwrap();
        assert_eq!(v, Rat::one());
    }

    #[test]
    fn two_f_one_at_minus_one_terminates() {
        // 2F1(-1, b; c; 1) = 1 - b/c
        let b = rat(3, 4);
        let c = rat(5, 2);
        let v = pfq_terminating(&[Rat::int(-1), b.clone()], std::slice::from_ref(&c), &Rat::one()).unwrap();
        assert_eq!(v, Rat::one() - b / c);
    }

    #[test]
    fn denominator_zero_in_range_is_singular() {
        let err = pfq_terminating(&[Rat::int(-3), rat(1, 2)], &[Rat::int(-1)], &Rat::one());
        assert!(matches!(err, Err(Error::SingularParameter(_))));
        // a denominator parameter at -n exactly is fine: (d)_k != 0 for k <= n
        let ok = pfq_terminating(&[Rat::int(-3), rat(1, 2)], &[Rat::int(-3)], &Rat::one());
        assert!(ok.is_ok());
    }

    #[test]
    fn non_terminating_is_rejected() {
        assert!(matches!(
            pfq_terminating(&[rat(1, 2)], &[rat(3, 2)], &Rat::one()),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn multiplicative_pochhammer_split() {
        // (a)_{m+n} = (a)_m (a+m)_n
        let a = rat(-7, 3);
        for m in 0..6u32 {
            for n in 0..6u32 {
                let lhs = pochhammer(&a, m + n);
                let rhs = pochhammer(&a, m) * pochhammer(&(&a + &Rat::int(m as i64)), n);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
