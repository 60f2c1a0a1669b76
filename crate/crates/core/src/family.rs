//! Generators for the Bannai-Ito polynomials, their kernel partners, the
//! recurrence coefficients of both families, and the hypergeometric closed
//! forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyper::pochhammer;
use crate::params::ParamSet;
use crate::poly::Poly;
use crate::scalar::{rat, Rat};

fn check_denominator(d: &Rat, what: &str, n: u32, g: &Rat) -> Result<()> {
    if d.is_zero() {
        return Err(Error::SingularParameter(format!(
            "{what} denominator vanishes at n = {n} (g = {g})"
        )));
    }
    Ok(())
}

/// Recurrence coefficients `(A_n, C_n)` of the Bannai-Ito family, in their
/// parity-split closed forms.
pub fn bi_coefficients(p: &ParamSet, n: u32) -> Result<(Rat, Rat)> {
    let g = p.g();
    let nn = Rat::int(n as i64);
    let one = Rat::one();
    let two = Rat::int(2);
    let da = Rat::int(4) * (&nn + &g + &one);
    check_denominator(&da, "A_n", n, &g)?;
    let dc = Rat::int(4) * (&nn + &g);
    check_denominator(&dc, "C_n", n, &g)?;
    let a_n = if n.is_multiple_of(2) {
        let f1 = &nn + &(&two * &p.rho1) - &(&two * &p.r1) + &one;
        let f2 = &nn + &(&two * &p.rho1) - &(&two * &p.r2) + &one;
        f1 * f2 / &da
    } else {
        let f1 = &nn + &(&two * &g) + &one;
        let f2 = &nn + &(&two * &p.rho1) + &(&two * &p.rho2) + &one;
        f1 * f2 / &da
    };
    let c_n = if n.is_multiple_of(2) {
        let f = &nn - &(&two * &p.r1) - &(&two * &p.r2);
        -(nn.clone() * f) / &dc
    } else {
        let f1 = &nn + &(&two * &p.rho2) - &(&two * &p.r2);
        let f2 = &nn + &(&two * &p.rho2) - &(&two * &p.r1);
        -(f1 * f2) / &dc
    };
    Ok((a_n, c_n))
}

/// Recurrence coefficient of the kernel family, parity split.
pub fn cbi_tau(p: &ParamSet, n: u32) -> Result<Rat> {
    let g = p.g();
    let half = rat(1, 2);
    if n.is_multiple_of(2) {
        let m = Rat::int((n / 2) as i64);
        let d = (&two_m(&m) + &g) * (&two_m(&m) + &g + Rat::one());
        check_denominator(&d, "tau (even)", n, &g)?;
        Ok(-(&m
            * (&m + &p.rho1 - &p.r1 + &half)
            * (&m + &p.rho1 - &p.r2 + &half)
            * (&m - &p.r1 - &p.r2))
            / &d)
    } else {
        let m = Rat::int(((n - 1) / 2) as i64);
        let d = (&two_m(&m) + &g + Rat::one()) * (&two_m(&m) + &g + Rat::int(2));
        check_denominator(&d, "tau (odd)", n, &g)?;
        Ok(-((&m + &g + Rat::one())
            * (&m + &p.rho1 + &p.rho2 + Rat::one())
            * (&m + &p.rho2 - &p.r1 + &half)
            * (&m + &p.rho2 - &p.r2 + &half))
            / &d)
    }
}

fn two_m(m: &Rat) -> Rat {
    m + m
}

/// Monic Bannai-Ito polynomials `B_0 .. B_n` via the three-term recurrence.
pub fn bi_polynomials(p: &ParamSet, n_max: u32) -> Result<Vec<Poly>> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(Poly::one());
    let mut prev = Poly::zero();
    let mut a_prev = Rat::zero();
    for n in 0..n_max {
        let (a_n, c_n) = bi_coefficients(p, n)?;
        let cur = out.last().unwrap().clone();
        // B_{n+1} = (x - rho1 + A_n + C_n) B_n - A_{n-1} C_n B_{n-1}
        let lin = Poly::x_plus(&(&a_n + &c_n) - &p.rho1);
        let next = &(&lin * &cur) - &prev.scale(&(&a_prev * &c_n));
        out.push(next);
        prev = cur;
        a_prev = a_n;
    }
    Ok(out)
}

pub fn bi_polynomial(p: &ParamSet, n: u32) -> Result<Poly> {
    Ok(bi_polynomials(p, n)?.pop().unwrap())
}

/// Monic complementary Bannai-Ito polynomials `I_0 .. I_n` via
/// `I_{k+1} = (x - (-1)^k rho2) I_k - tau_k I_{k-1}`.
pub fn cbi_polynomials(p: &ParamSet, n_max: u32) -> Result<Vec<Poly>> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(Poly::one());
    let mut prev = Poly::zero();
    for n in 0..n_max {
        let diag = Rat::neg_one_pow(n as i64) * &p.rho2;
        let tau = cbi_tau(p, n)?;
        let cur = out.last().unwrap().clone();
        let next = &(&Poly::x_plus(-diag) * &cur) - &prev.scale(&tau);
        out.push(next);
        prev = cur;
    }
    Ok(out)
}

pub fn cbi_polynomial(p: &ParamSet, n: u32) -> Result<Poly> {
    Ok(cbi_polynomials(p, n)?.pop().unwrap())
}

/// Kernel transform `(B_{n+1}(x) - A_n B_n(x)) / (x - rho1)`; exact division
/// is an internal consistency requirement, not a caller error.
pub fn christoffel_transform(p: &ParamSet, n: u32) -> Result<Poly> {
    let polys = bi_polynomials(p, n + 1)?;
    let (a_n, _) = bi_coefficients(p, n)?;
    let num = &polys[n as usize + 1] - &polys[n as usize].scale(&a_n);
    num.div_exact(&Poly::x_plus(-&p.rho1)).map_err(|e| match e {
        Error::NonPolynomialResult { remainder, .. } => Error::VerificationFailure(format!(
            "kernel transform failed to divide exactly at n = {n}; remainder {remainder}"
        )),
        other => other,
    })
}

/// Inverse transform `I_n(x) - C_n I_{n-1}(x)`, which must reproduce the
/// Bannai-Ito polynomial of the same degree.
pub fn geronimus_reconstruct(p: &ParamSet, n: u32) -> Result<Poly> {
    let polys = cbi_polynomials(p, n)?;
    if n == 0 {
        return Ok(polys[0].clone());
    }
    let (_, c_n) = bi_coefficients(p, n)?;
    Ok(&polys[n as usize] - &polys[n as usize - 1].scale(&c_n))
}

/// `B_{n+1}(rho1) / B_n(rho1)`; equals `A_n` whenever defined.
pub fn kernel_ratio(p: &ParamSet, n: u32) -> Result<Rat> {
    let polys = bi_polynomials(p, n + 1)?;
    let denom = polys[n as usize].eval(&p.rho1);
    if denom.is_zero() {
        return Err(Error::KernelDegenerate { n });
    }
    Ok(polys[n as usize + 1].eval(&p.rho1) / denom)
}

fn check_hypergeo_denoms(denoms: &[(Rat, &str)], m: u64) -> Result<()> {
    for (d, name) in denoms {
        if let Some(z) = d.as_nonpositive_integer() {
            if z < m {
                return Err(Error::SingularParameter(format!(
                    "closed-form denominator parameter {name} = {d} vanishes within the sum"
                )));
            }
        }
    }
    Ok(())
}

/// Hypergeometric closed form of the kernel family, expanded symbolically.
///
/// The paired factors `(c + x)_k (c - x)_k` multiply out to
/// `prod_j ((c+j)^2 - x^2)`, so every term is an even polynomial in x and
/// polynomial equality with the recurrence output is exact.
pub fn cbi_closed_form(p: &ParamSet, n: u32) -> Result<Poly> {
    let g = p.g();
    let one = Rat::one();
    let (m, shift) = if n.is_multiple_of(2) {
        (n / 2, Rat::zero())
    } else {
        ((n - 1) / 2, Rat::one())
    };
    // Parameters for the even branch; the odd branch shifts every entry by 1
    // (and by x - rho2 as a prefactor).
    let b1 = &p.rho1 + &p.rho2 + &one + &shift;
    let b2 = &p.rho2 - &p.r1 + rat(1, 2) + &shift;
    let b3 = &p.rho2 - &p.r2 + rat(1, 2) + &shift;
    let top = &Rat::int(m as i64) + &g + &one + &shift; // m + g + 1 (even), m + g + 2 (odd)
    check_hypergeo_denoms(
        &[
            (b1.clone(), "rho1+rho2 offset"),
            (b2.clone(), "rho2-r1 offset"),
            (b3.clone(), "rho2-r2 offset"),
        ],
        m as u64,
    )?;
    let poch_top = pochhammer(&top, m);
    if poch_top.is_zero() {
        return Err(Error::SingularParameter(format!(
            "monic normalization denominator ({top})_{m} vanishes"
        )));
    }
    let norm = pochhammer(&b1, m) * pochhammer(&b2, m) * pochhammer(&b3, m) / poch_top;

    // Series in k with polynomial factor prod_{j<k} ((rho2 + shift + j)^2 - x^2).
    let mut sum = Poly::zero();
    let mut coef = Rat::one();
    let mut factor = Poly::one();
    let neg_xsq_plus = |c: &Rat| {
        // (c^2 - x^2)
        Poly::from_coeffs(vec![c * c, Rat::zero(), -Rat::one()])
    };
    for k in 0..=m {
        sum = &sum + &factor.scale(&coef);
        if k == m {
            break;
        }
        let kk = Rat::int(k as i64);
        // next coefficient: * (-m + k)(top + k) / ((b1+k)(b2+k)(b3+k)(k+1))
        coef = coef * (&kk - &Rat::int(m as i64)) * (&top + &kk)
            / ((&b1 + &kk) * (&b2 + &kk) * (&b3 + &kk) * (&kk + &one));
        let c = &(&p.rho2 + &shift) + &kk;
        factor = &factor * &neg_xsq_plus(&c);
    }
    let body = sum.scale(&norm);
    if n.is_multiple_of(2) {
        Ok(body)
    } else {
        Ok(&Poly::x_plus(-&p.rho2) * &body)
    }
}

/// A generated table of monic polynomials with the parameters that built it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyTable {
    pub params: ParamSet,
    /// Coefficients in ascending degree order, one row per degree.
    pub polys: Vec<Vec<Rat>>,
}

impl PolyTable {
    pub fn new(params: ParamSet, entries: &[Poly]) -> PolyTable {
        PolyTable {
            params,
            polys: entries.iter().map(|p| p.coeffs().to_vec()).collect(),
        }
    }

    pub fn entry(&self, n: usize) -> Poly {
        Poly::from_coeffs(self.polys[n].clone())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.polys {
            let cells: Vec<String> = row.iter().map(Rat::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p0() -> ParamSet {
        ParamSet::new(Rat::one(), rat(1, 2), rat(1, 4), rat(1, 4))
    }

    fn generic() -> ParamSet {
        ParamSet::new(rat(3, 5), rat(-1, 3), rat(1, 7), rat(5, 4))
    }

    #[test]
    fn frozen_bi_coefficient_values() {
        let (a0, c0) = bi_coefficients(&p0(), 0).unwrap();
        assert_eq!(a0, rat(25, 32));
        assert_eq!(c0, Rat::zero());
    }

    #[test]
    fn singular_g_is_reported() {
        // g = -1 makes the A_0 denominator vanish
        let p = ParamSet::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero());
        assert_eq!(p.g(), Rat::int(-1));
        assert!(matches!(
            bi_coefficients(&p, 0),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn frozen_tau_values() {
        assert_eq!(cbi_tau(&p0(), 0).unwrap(), Rat::zero());
        assert_eq!(cbi_tau(&p0(), 1).unwrap(), rat(-15, 32));
    }

    #[test]
    fn tau_vanishes_when_r1_plus_r2_hits_half_n() {
        // factor (m - r1 - r2) with m = n/2
        let p = ParamSet::new(rat(3, 7), rat(2, 9), Rat::one(), Rat::int(2));
        assert_eq!(cbi_tau(&p, 6).unwrap(), Rat::zero());
    }

    #[test]
    fn initial_polynomials() {
        let p = p0();
        let polys = cbi_polynomials(&p, 2).unwrap();
        assert_eq!(polys[0], Poly::one());
        assert_eq!(polys[1], Poly::x_plus(rat(-1, 2)));
        // I_2 = x^2 - rho2^2 - tau_1 = x^2 + 7/32
        assert_eq!(
            polys[2],
            Poly::from_coeffs(vec![rat(7, 32), Rat::zero(), Rat::one()])
        );
        assert_eq!(bi_polynomial(&p, 0).unwrap(), Poly::one());
        // B_1 = x - rho1 + A_0
        assert_eq!(
            bi_polynomial(&p, 1).unwrap(),
            Poly::x_plus(rat(25, 32) - Rat::one())
        );
    }

    #[test]
    fn recurrence_coefficient_consistency() {
        // rho1 - A_n - C_{n+1} = (-1)^n rho2 and A_n C_n = tau_n link the
        // two recurrence presentations of the kernel family.
        for p in [p0(), generic()] {
            for n in 0..12 {
                let (a_n, c_n) = bi_coefficients(&p, n).unwrap();
                let (_, c_next) = bi_coefficients(&p, n + 1).unwrap();
                let diag = &p.rho1 - &a_n - &c_next;
                assert_eq!(diag, Rat::neg_one_pow(n as i64) * &p.rho2);
                assert_eq!(&a_n * &c_n, cbi_tau(&p, n).unwrap());
            }
        }
    }

    #[test]
    fn christoffel_matches_recurrence() {
        for p in [p0(), generic()] {
            let cbi = cbi_polynomials(&p, 12).unwrap();
            for n in 0..=12u32 {
                assert_eq!(christoffel_transform(&p, n).unwrap(), cbi[n as usize]);
            }
        }
    }

    #[test]
    fn geronimus_matches_recurrence() {
        for p in [p0(), generic()] {
            let bi = bi_polynomials(&p, 12).unwrap();
            for n in 0..=12u32 {
                assert_eq!(geronimus_reconstruct(&p, n).unwrap(), bi[n as usize]);
            }
        }
    }

    #[test]
    fn kernel_ratio_degenerate_when_base_vanishes_at_rho1() {
        // r1 = rho1 + 1/2 forces A_0 = 0, so B_1(rho1) = 0 and the ratio
        // at n = 1 is undefined
        let p = ParamSet::new(rat(1, 2), rat(1, 3), Rat::one(), rat(1, 5));
        let (a0, _) = bi_coefficients(&p, 0).unwrap();
        assert!(a0.is_zero());
        assert!(matches!(
            kernel_ratio(&p, 1),
            Err(Error::KernelDegenerate { n: 1 })
        ));
    }

    #[test]
    fn kernel_ratio_equals_a_n() {
        for p in [p0(), generic()] {
            for n in 0..=12u32 {
                let (a_n, _) = bi_coefficients(&p, n).unwrap();
                assert_eq!(kernel_ratio(&p, n).unwrap(), a_n);
            }
        }
    }

    #[test]
    fn closed_form_equals_recurrence() {
        for p in [p0(), generic()] {
            let cbi = cbi_polynomials(&p, 10).unwrap();
            for n in 0..=10u32 {
                assert_eq!(cbi_closed_form(&p, n).unwrap(), cbi[n as usize], "n = {n}");
            }
        }
    }

    #[test]
    fn tables_are_monic_with_exact_degree() {
        let polys = cbi_polynomials(&generic(), 20).unwrap();
        for (n, poly) in polys.iter().enumerate() {
            assert_eq!(poly.degree(), Some(n));
            assert!(poly.is_monic());
        }
    }

    #[test]
    fn parity_split_identities() {
        // I_{2m}(-x) = I_{2m}(x) and (rho2 - x) I_{2m+1}(-x) = (x + rho2) I_{2m+1}(x)
        let p = generic();
        let polys = cbi_polynomials(&p, 11).unwrap();
        let neg = |q: &Poly| q.affine_substitute(&Rat::int(-1), &Rat::zero()).unwrap();
        let rho2_minus_x = Poly::from_coeffs(vec![p.rho2.clone(), -Rat::one()]);
        let x_plus_rho2 = Poly::x_plus(p.rho2.clone());
        for m in 0..=5usize {
            let even = &polys[2 * m];
            assert_eq!(neg(even), even.clone());
            if 2 * m < 11 {
                let odd = &polys[2 * m + 1];
                assert_eq!(&rho2_minus_x * &neg(odd), &x_plus_rho2 * odd);
            }
        }
    }

    #[test]
    fn terminating_series_value_matches_closed_form_polynomial() {
        // the scalar terminating-series evaluator, fed the degree-2 series
        // parameters at a rational point, reproduces I_2 after the monic
        // normalization
        use crate::hyper::{pfq_terminating, pochhammer};
        let p = p0();
        let g = p.g();
        let half = rat(1, 2);
        let i2 = cbi_polynomial(&p, 2).unwrap();
        for x0 in [rat(2, 3), rat(-7, 5), Rat::int(3)] {
            let num = [
                Rat::int(-1),
                &Rat::one() + &g + Rat::one(),
                &p.rho2 + &x0,
                &p.rho2 - &x0,
            ];
            let den = [
                &p.rho1 + &p.rho2 + Rat::one(),
                &(&p.rho2 - &p.r1) + &half,
                &(&p.rho2 - &p.r2) + &half,
            ];
            let series = pfq_terminating(&num, &den, &Rat::one()).unwrap();
            let eta1 = pochhammer(&den[0], 1) * pochhammer(&den[1], 1) * pochhammer(&den[2], 1)
                / pochhammer(&(&Rat::one() + &g + Rat::one()), 1);
            assert_eq!(eta1 * series, i2.eval(&x0));
        }
    }

    #[test]
    fn poly_table_round_trip() {
        let p = p0();
        let table = PolyTable::new(p.clone(), &cbi_polynomials(&p, 5).unwrap());
        let json = serde_json::to_string(&table).unwrap();
        let back: PolyTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back.polys, table.polys);
        assert_eq!(table.polys[1], vec![rat(-1, 2), Rat::one()]);
        assert!(table.to_csv().lines().nth(1).unwrap() == "-1/2,1");
    }
}
