//! Askey-Wilson numerics in complex double precision: the basic
//! hypergeometric polynomial, its recurrence coefficients, and the
//! convergence check of the recurrence-level limit onto the exact target
//! coefficients.
//!
//! This is the only floating-point corner of the crate; nothing here feeds
//! back into any exact pipeline.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::aw_limit_coeffs;
use crate::params::ParamSet;

/// Minimum denominator magnitude before a coefficient evaluation is
/// declared ill-conditioned.
const DENOM_FLOOR: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
pub struct AwParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub q: Complex64,
}

impl AwParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64, q: Complex64) -> AwParams {
        AwParams { a, b, c, d, q }
    }

    /// The limit parametrization at scale `eps`:
    /// `a = i e^{eps(2 rho1 + 3/2)}`, `b = -i e^{eps(2 rho2 + 1/2)}`,
    /// `c = i e^{eps(-2 r2 + 1/2)}`, `d = i e^{eps(-2 r1 + 1/2)}`,
    /// `q = -e^{eps}`.
    pub fn limit_parametrization(p: &ParamSet, eps: f64) -> AwParams {
        let i = Complex64::new(0.0, 1.0);
        let e = |t: f64| Complex64::new((eps * t).exp(), 0.0);
        AwParams {
            a: i * e(2.0 * p.rho1.to_f64() + 1.5),
            b: -i * e(2.0 * p.rho2.to_f64() + 0.5),
            c: i * e(-2.0 * p.r2.to_f64() + 0.5),
            d: i * e(-2.0 * p.r1.to_f64() + 0.5),
            q: Complex64::new(-eps.exp(), 0.0),
        }
    }
}

fn qpow(q: Complex64, n: i32) -> Complex64 {
    q.powi(n)
}

/// q-Pochhammer `(z; q)_k`.
fn qpochhammer(z: Complex64, q: Complex64, k: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut f = z;
    for _ in 0..k {
        acc *= Complex64::new(1.0, 0.0) - f;
        f *= q;
    }
    acc
}

/// Recurrence coefficients `(alpha_n, gamma_n)` for the monic-free
/// normalized family.
pub fn aw_recurrence_coeffs(p: &AwParams, n: u32) -> Result<(Complex64, Complex64)> {
    let one = Complex64::new(1.0, 0.0);
    let abcd = p.a * p.b * p.c * p.d;
    let n = n as i32;
    let d1 = p.a * (one - abcd * qpow(p.q, 2 * n - 1)) * (one - abcd * qpow(p.q, 2 * n));
    let d2 = (one - abcd * qpow(p.q, 2 * n - 2)) * (one - abcd * qpow(p.q, 2 * n - 1));
    if d1.norm() < DENOM_FLOOR || d2.norm() < DENOM_FLOOR {
        return Err(Error::Conditioning(format!(
            "recurrence-coefficient denominator below {DENOM_FLOOR} at n = {n}"
        )));
    }
    let alpha = (one - p.a * p.b * qpow(p.q, n))
        * (one - p.a * p.c * qpow(p.q, n))
        * (one - p.a * p.d * qpow(p.q, n))
        * (one - abcd * qpow(p.q, n - 1))
        / d1;
    let gamma = p.a
        * (one - qpow(p.q, n))
        * (one - p.b * p.c * qpow(p.q, n - 1))
        * (one - p.b * p.d * qpow(p.q, n - 1))
        * (one - p.c * p.d * qpow(p.q, n - 1))
        / d2;
    Ok((alpha, gamma))
}

/// The terminating balanced series shared by the polynomial and its
/// normalized variant.
fn phi43(p: &AwParams, z: Complex64, n: u32) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let abcd = p.a * p.b * p.c * p.d;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = one;
    // term ratio at index k: product over the four numerator parameters
    // advanced by q^k, divided by the denominator parameters
    let params_num = [
        qpow(p.q, -(n as i32)),
        abcd * qpow(p.q, n as i32 - 1),
        p.a * z,
        p.a / z,
    ];
    let params_den = [p.q, p.a * p.b, p.a * p.c, p.a * p.d];
    for k in 0..=n {
        sum += term;
        if k == n {
            break;
        }
        let qk = qpow(p.q, k as i32);
        let mut ratio = p.q;
        for u in params_num {
            ratio *= one - u * qk;
        }
        for v in params_den {
            let f = one - v * qk;
            if f.norm() < DENOM_FLOOR {
                return Err(Error::Conditioning(format!(
                    "q-Pochhammer denominator below {DENOM_FLOOR} at k = {k}"
                )));
            }
            ratio /= f;
        }
        term *= ratio;
    }
    Ok(sum)
}

/// Askey-Wilson polynomial with its `a^{-n} (ab, ac, ad; q)_n` prefactor.
pub fn aw_polynomial(p: &AwParams, z: Complex64, n: u32) -> Result<Complex64> {
    if z.norm() < DENOM_FLOOR {
        return Err(Error::Conditioning("argument z too close to zero".into()));
    }
    let pre = p.a.powi(-(n as i32))
        * qpochhammer(p.a * p.b, p.q, n)
        * qpochhammer(p.a * p.c, p.q, n)
        * qpochhammer(p.a * p.d, p.q, n);
    Ok(pre * phi43(p, z, n)?)
}

/// The prefactor-normalized polynomial (the bare terminating series); the
/// three-term recurrence with `aw_recurrence_coeffs` holds for this
/// normalization.
pub fn aw_normalized(p: &AwParams, z: Complex64, n: u32) -> Result<Complex64> {
    if z.norm() < DENOM_FLOOR {
        return Err(Error::Conditioning("argument z too close to zero".into()));
    }
    phi43(p, z, n)
}

/// Scaled residual of the three-term recurrence at `(z, n)`: the residual
/// divided by the largest participating term, the meaningful measure when
/// the values themselves decay.
pub fn aw_recurrence_residual(p: &AwParams, z: Complex64, n: u32) -> Result<f64> {
    let (alpha, gamma) = aw_recurrence_coeffs(p, n)?;
    let pm = aw_normalized(p, z, n - 1)?;
    let pn = aw_normalized(p, z, n)?;
    let pp = aw_normalized(p, z, n + 1)?;
    let mid = p.a + Complex64::new(1.0, 0.0) / p.a - alpha - gamma;
    let t1 = alpha * pp;
    let t2 = mid * pn;
    let t3 = gamma * pm;
    let rhs = (z + Complex64::new(1.0, 0.0) / z) * pn;
    let scale = t1.norm().max(t2.norm()).max(t3.norm()).max(rhs.norm());
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((t1 + t2 + t3 - rhs).norm() / scale)
}

/// One row of the limit-convergence table; ratio columns compare against
/// the previous (larger) eps row of the same degree.
#[derive(Clone, Debug, Serialize)]
pub struct AwLimitRow {
    pub n: u32,
    pub eps: f64,
    pub err_alpha: f64,
    pub err_gamma: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_gamma: Option<f64>,
    pub max_imag: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AwLimitReport {
    pub rows: Vec<AwLimitRow>,
    /// Error-decay ratios between consecutive eps values must land in the
    /// first-order window.
    pub ratio_window: (f64, f64),
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Error floor below which decay ratios are not meaningful (the
/// coefficient is exactly at its limit already).
const ERR_FLOOR: f64 = 1e-13;

/// Convergence of the recurrence-level limit.
///
/// The recurrence coefficients divided by `4i (1+q)` converge to the exact
/// limit coefficients at first order in eps; the constant `4i` is the
/// normalization carried by the limit transition (the raw `1/(1+q)`
/// scaling leaves a fixed factor of `4i`, as the variable and the leading
/// coefficients are themselves rescaled in the limit).
pub fn verify_aw_limit(p: &ParamSet, n_max: u32, eps_list: &[f64]) -> Result<AwLimitReport> {
    if eps_list.len() < 2 || eps_list.windows(2).any(|w| w[1] >= w[0]) || eps_list[0] <= 0.0 {
        return Err(Error::Domain(
            "eps list must be strictly decreasing and positive".into(),
        ));
    }
    let window = (5.0, 20.0);
    let mut rows = vec![];
    let mut witness: Option<String> = None;
    for n in 0..=n_max {
        let (alpha_star, gamma_star) = aw_limit_coeffs(p, n)?;
        let target_a = Complex64::new(alpha_star.to_f64(), 0.0);
        let target_g = Complex64::new(gamma_star.to_f64(), 0.0);
        let mut errs_a: Vec<f64> = vec![];
        let mut errs_g: Vec<f64> = vec![];
        for &eps in eps_list {
            let aw = AwParams::limit_parametrization(p, eps);
            let (alpha, gamma) = aw_recurrence_coeffs(&aw, n)?;
            let denom = Complex64::new(0.0, 4.0) * (Complex64::new(1.0, 0.0) + aw.q);
            let za = alpha / denom;
            let zg = gamma / denom;
            let err_a = (za - target_a).norm();
            let err_g = (zg - target_g).norm();
            let max_imag = za.im.abs().max(zg.im.abs());
            if max_imag > 50.0 * eps {
                witness.get_or_insert_with(|| {
                    format!("imaginary part {max_imag:.3e} exceeds 50*eps at n = {n}, eps = {eps}")
                });
            }
            let ratio = |prev: Option<&f64>, cur: f64| {
                prev.and_then(|p| if cur > ERR_FLOOR { Some(p / cur) } else { None })
            };
            rows.push(AwLimitRow {
                n,
                eps,
                err_alpha: err_a,
                err_gamma: err_g,
                ratio_alpha: ratio(errs_a.last(), err_a),
                ratio_gamma: ratio(errs_g.last(), err_g),
                max_imag,
            });
            errs_a.push(err_a);
            errs_g.push(err_g);
        }
        let final_eps = *eps_list.last().unwrap();
        for (label, errs) in [("alpha", &errs_a), ("gamma", &errs_g)] {
            if *errs.last().unwrap() >= 50.0 * final_eps {
                witness.get_or_insert_with(|| {
                    format!(
                        "final {label} error {:.3e} not below 50*eps at n = {n}",
                        errs.last().unwrap()
                    )
                });
            }
            for w in errs.windows(2) {
                if w[1] < ERR_FLOOR {
                    continue;
                }
                let ratio = w[0] / w[1];
                if ratio < window.0 || ratio > window.1 {
                    witness.get_or_insert_with(|| {
                        format!(
                            "{label} error ratio {ratio:.2} outside [{}, {}] at n = {n}",
                            window.0, window.1
                        )
                    });
                }
            }
        }
    }
    let pass = witness.is_none();
    Ok(AwLimitReport {
        rows,
        ratio_window: window,
        pass,
        witness,
    })
}
