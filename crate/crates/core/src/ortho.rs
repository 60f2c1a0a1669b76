//! Truncation-condition classification, spectral grids, weight functions,
//! and exact discrete-orthogonality verification.
//!
//! Everything here is exact rational arithmetic; no tolerances appear
//! anywhere in this module.

use serde::Serialize;

use crate::dunkl::{grid_point, GridKind};
use crate::error::{Error, Result};
use crate::family::{bi_coefficients, bi_polynomials, cbi_polynomials, cbi_tau};
use crate::hyper::pochhammer;
use crate::params::ParamSet;
use crate::scalar::{rat, Rat};

/// Which linear relation among the parameters and N forces the truncation
/// `tau_{N+1} = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TruncationCase {
    /// `rho2 - r1 = -(N+1)/2`, N even
    Even1,
    /// `rho2 - r2 = -(N+1)/2`, N even
    Even2,
    /// `rho1 + rho2 = -(N+2)/2`, N even
    Even3,
    /// `r1 - rho1 = (N+2)/2`, N odd
    OddI,
    /// `r1 + r2 = (N+1)/2`, N odd
    OddII,
    /// `r2 - rho1 = (N+2)/2`, N odd
    OddIII,
}

/// An admissible truncation: the case tag plus the family size N.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Truncation {
    pub case: TruncationCase,
    pub n: u32,
}

/// Determines which truncation relation holds at `N`; `tau_{N+1} = 0` is
/// checked first. The even case `g = -(N+2)/2` is rejected as inadmissible
/// because it makes the recurrence coefficient singular.
pub fn classify_truncation(p: &ParamSet, n: u32) -> Result<Truncation> {
    let tau = cbi_tau(p, n + 1)?;
    if !tau.is_zero() {
        return Err(Error::NotTruncated {
            n,
            value: tau.to_string(),
        });
    }
    let nn = Rat::int(n as i64);
    let half = rat(1, 2);
    let case = if n.is_multiple_of(2) {
        let target = -(&(&nn + &Rat::one()) * &half);
        let target3 = -(&(&nn + &Rat::int(2)) * &half);
        if p.g() == target3 {
            return Err(Error::InadmissibleTruncation(format!(
                "g = -(N+2)/2 at N = {n} makes tau singular"
            )));
        }
        if &p.rho2 - &p.r1 == target {
            TruncationCase::Even1
        } else if &p.rho2 - &p.r2 == target {
            TruncationCase::Even2
        } else if &p.rho1 + &p.rho2 == target3 {
            TruncationCase::Even3
        } else {
            return Err(Error::InadmissibleTruncation(format!(
                "tau_{{N+1}} = 0 at N = {n} but no even truncation relation holds"
            )));
        }
    } else {
        let target12 = &(&nn + &Rat::int(2)) * &half;
        let target_ii = &(&nn + &Rat::one()) * &half;
        if &p.r1 - &p.rho1 == target12 {
            TruncationCase::OddI
        } else if &p.r1 + &p.r2 == target_ii {
            TruncationCase::OddII
        } else if &p.r2 - &p.rho1 == target12 {
            TruncationCase::OddIII
        } else {
            return Err(Error::InadmissibleTruncation(format!(
                "tau_{{N+1}} = 0 at N = {n} but no odd truncation relation holds"
            )));
        }
    };
    Ok(Truncation { case, n })
}

/// The N+1 spectral points of an admissible truncation; they are exactly
/// the roots of `I_{N+1}`.
pub fn spectral_grid(tr: &Truncation, p: &ParamSet) -> Vec<Rat> {
    let (kind, h) = grid_parameters(tr, p);
    (0..=tr.n as i64).map(|k| grid_point(kind, &h, k)).collect()
}

/// Grid kind and offset for each truncation case. Even cases use the
/// standard grid at `h = rho2`; odd cases use the alternate grid at
/// `h = r1` (or `r2` for the third case).
pub fn grid_parameters(tr: &Truncation, p: &ParamSet) -> (GridKind, Rat) {
    match tr.case {
        TruncationCase::Even1 | TruncationCase::Even2 | TruncationCase::Even3 => {
            (GridKind::Standard, p.rho2.clone())
        }
        TruncationCase::OddI | TruncationCase::OddII => (GridKind::Alternate, p.r1.clone()),
        TruncationCase::OddIII => (GridKind::Alternate, p.r2.clone()),
    }
}

/// The Bannai-Ito weight `w_k` in its Pochhammer closed form, evaluated on
/// the literal parameters of `p`.
pub fn bi_weight(p: &ParamSet, k: u32) -> Result<Rat> {
    let (l, v) = (k / 2, k % 2);
    let half = rat(1, 2);
    let one = Rat::one();
    let lv = l + v;
    let num = pochhammer(&(&p.rho1 - &p.r1 + &half), lv)
        * pochhammer(&(&p.rho1 - &p.r2 + &half), lv)
        * pochhammer(&(&p.rho1 + &p.rho2 + &one), l)
        * pochhammer(&(&(&p.rho1 + &p.rho1) + &one), l);
    let d1 = pochhammer(&(&p.rho1 + &p.r1 + &half), lv);
    let d2 = pochhammer(&(&p.rho1 + &p.r2 + &half), lv);
    let d3 = pochhammer(&(&p.rho1 - &p.rho2 + &one), l);
    let den = &(&d1 * &d2) * &d3;
    if den.is_zero() {
        return Err(Error::SingularParameter(format!(
            "weight denominator Pochhammer vanishes at k = {k}"
        )));
    }
    let mut fact = Rat::one();
    for j in 1..=l as i64 {
        fact *= &Rat::int(j);
    }
    Ok(Rat::neg_one_pow(v as i64) * num / (fact * den))
}

/// The kernel-side weight `(x_k - rho1) w_k` with the case-dependent
/// argument substitution.
pub fn cbi_weight(tr: &Truncation, p: &ParamSet, k: u32) -> Result<Rat> {
    let sub = match tr.case {
        TruncationCase::Even1 | TruncationCase::Even2 | TruncationCase::Even3 => {
            ParamSet::new(p.rho2.clone(), p.rho1.clone(), p.r1.clone(), p.r2.clone())
        }
        TruncationCase::OddI | TruncationCase::OddII => {
            ParamSet::new(-&p.r1, -&p.r2, -&p.rho1, -&p.rho2)
        }
        TruncationCase::OddIII => ParamSet::new(-&p.r2, -&p.r1, -&p.rho1, -&p.rho2),
    };
    let (kind, h) = grid_parameters(tr, p);
    let xk = grid_point(kind, &h, k as i64);
    Ok((&xk - &p.rho1) * bi_weight(&sub, k)?)
}

/// Exact orthogonality report: off-diagonal Gram entries, norm ratios
/// against the running tau product, the per-n positivity of tau, and the
/// common sign of the weights.
#[derive(Clone, Debug, Serialize)]
pub struct OrthoReport {
    pub case: TruncationCase,
    pub n: u32,
    /// Largest absolute value among off-diagonal Gram entries ("0" on pass).
    pub gram_offdiag_max_abs: Rat,
    /// `G[n][n] / G[0][0]` for n = 0..=N.
    pub norm_ratios: Vec<Rat>,
    /// Whether `tau_n > 0`, for n = 1..=N.
    pub positivity: Vec<bool>,
    /// All weights share this sign (+1/-1); the measure is positive after a
    /// global sign normalization.
    pub weight_sign: i8,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Computes the full Gram matrix of the kernel family against the discrete
/// weights and checks diagonality plus the norm-ratio law
/// `G[n][n]/G[0][0] = tau_1 ... tau_n`, all exactly.
pub fn verify_orthogonality(tr: &Truncation, p: &ParamSet) -> Result<OrthoReport> {
    let n = tr.n;
    let grid = spectral_grid(tr, p);
    let polys = cbi_polynomials(p, n)?;
    let weights: Vec<Rat> = (0..=n).map(|k| cbi_weight(tr, p, k)).collect::<Result<_>>()?;

    let mut positivity = vec![];
    let mut tau_prod = Rat::one();
    let mut tau_products = vec![Rat::one()];
    for j in 1..=n {
        let tau = cbi_tau(p, j)?;
        positivity.push(tau.is_positive());
        tau_prod *= &tau;
        tau_products.push(tau_prod.clone());
    }

    // sign uniformity (positivity after global normalization)
    let mut witness = None;
    let weight_sign = if weights[0].is_positive() { 1 } else { -1 };
    for (k, w) in weights.iter().enumerate() {
        if w.is_zero() || (w.is_positive() != (weight_sign == 1)) {
            witness = Some(format!("weight at k = {k} breaks the common sign: {w}"));
        }
    }

    // values table: vals[n][k] = I_n(x_k)
    let vals: Vec<Vec<Rat>> = polys
        .iter()
        .map(|poly| grid.iter().map(|x| poly.eval(x)).collect())
        .collect();

    let mut offdiag_max = Rat::zero();
    let mut diag = vec![];
    for a in 0..=n as usize {
        for b in a..=n as usize {
            let mut s = Rat::zero();
            for k in 0..=n as usize {
                s += &(&(&weights[k] * &vals[a][k]) * &vals[b][k]);
            }
            if a == b {
                diag.push(s);
            } else if !s.is_zero() {
                if s.abs() > offdiag_max {
                    offdiag_max = s.abs();
                }
                witness.get_or_insert_with(|| {
                    format!("Gram[{a}][{b}] = {s} is nonzero")
                });
            }
        }
    }

    if diag[0].is_zero() {
        return Err(Error::VerificationFailure(
            "total mass G[0][0] is zero".into(),
        ));
    }
    let norm_ratios: Vec<Rat> = diag.iter().map(|d| d / &diag[0]).collect();
    for (j, ratio) in norm_ratios.iter().enumerate() {
        if *ratio != tau_products[j] {
            witness.get_or_insert_with(|| {
                format!(
                    "norm ratio at n = {j} is {ratio}, expected the tau product {}",
                    tau_products[j]
                )
            });
        }
    }

    let pass = witness.is_none() && offdiag_max.is_zero() && positivity.iter().all(|&b| b);
    Ok(OrthoReport {
        case: tr.case,
        n,
        gram_offdiag_max_abs: offdiag_max,
        norm_ratios,
        positivity,
        weight_sign,
        pass,
        witness,
    })
}

/// Positive-definite parameters for even N from three positive inputs.
pub fn positive_even_params(a: &Rat, b: &Rat, c: &Rat, n: u32) -> Result<ParamSet> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::Domain(
            "positivity parametrization needs positive inputs".into(),
        ));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::Domain("even-case parametrization needs even N".into()));
    }
    let half = rat(1, 2);
    let nn = Rat::int(n as i64);
    let ab2 = &(a + b) * &half;
    Ok(ParamSet::new(
        &(&(&ab2 + c) + &nn) * &half,
        &(&ab2 - &Rat::one()) * &half,
        &(&ab2 + &nn) * &half,
        &(a - b) * &rat(1, 4),
    ))
}

/// Positive-definite parameters for odd N > 1 from three positive inputs.
pub fn positive_odd_params(zeta: &Rat, xi: &Rat, chi: &Rat, n: u32) -> Result<ParamSet> {
    if !zeta.is_positive() || !xi.is_positive() || !chi.is_positive() {
        return Err(Error::Domain(
            "positivity parametrization needs positive inputs".into(),
        ));
    }
    if n.is_multiple_of(2) || n == 1 {
        return Err(Error::Domain(
            "odd-case parametrization needs odd N > 1".into(),
        ));
    }
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let nn = Rat::int(n as i64);
    let zx2 = &(zeta + xi) * &half;
    Ok(ParamSet::new(
        &(&(&zx2 + chi) + &nn) * &half,
        &(zeta - xi) * &quarter,
        &(&(&zx2 + &nn) + &Rat::one()) * &half,
        -&(&(zeta + xi) * &quarter),
    ))
}

/// The even-branch tau closed form in the positive parametrization, used
/// as an independent route for cross-checking `cbi_tau`.
pub fn tau_even_parametrized(a: &Rat, b: &Rat, c: &Rat, n_cap: u32, n: u32) -> Rat {
    let nn = Rat::int(n as i64);
    let cap = Rat::int(n_cap as i64);
    let g = &(&(b + c) - &Rat::one()) * &rat(1, 2);
    let den = Rat::int(16) * (&nn + &g) * (&nn + &g + Rat::one());
    if n.is_multiple_of(2) {
        &nn * &(&(&cap - &nn) + a)
            * (&nn + c + Rat::one())
            * (&(&nn + &(b + c)) + &cap + Rat::one())
            / den
    } else {
        (&cap - &nn + Rat::one())
            * (&nn + b - Rat::one())
            * (&nn + &(b + c))
            * (&(&(&nn + a) + &(b + c)) + &cap)
            / den
    }
}

/// Bannai-Ito-side orthogonality under its own truncation (even case with
/// `r1 - rho1 = (N+1)/2`): exact Gram diagonality and the norm-ratio law
/// with `u_n = A_{n-1} C_n`. The weights are signed; only ratios are
/// asserted.
#[derive(Clone, Debug, Serialize)]
pub struct BiOrthoReport {
    pub n: u32,
    pub gram_offdiag_max_abs: Rat,
    pub pass: bool,
    pub witness: Option<String>,
}

pub fn verify_bi_orthogonality(p: &ParamSet, n: u32) -> Result<BiOrthoReport> {
    // truncation u_{N+1} = A_N C_{N+1} = 0 must hold
    let (a_n, _) = bi_coefficients(p, n)?;
    let (_, c_next) = bi_coefficients(p, n + 1)?;
    if !(&a_n * &c_next).is_zero() {
        return Err(Error::NotTruncated {
            n,
            value: (&a_n * &c_next).to_string(),
        });
    }
    let polys = bi_polynomials(p, n + 1)?;
    let grid: Vec<Rat> = (0..=n as i64)
        .map(|k| grid_point(GridKind::Standard, &p.rho1, k))
        .collect();
    let mut witness = None;
    for x in &grid {
        if !polys[n as usize + 1].eval(x).is_zero() {
            witness = Some(format!("grid point {x} is not a root of B_{{N+1}}"));
        }
    }
    let weights: Vec<Rat> = (0..=n).map(|k| bi_weight(p, k)).collect::<Result<_>>()?;
    let mut offdiag_max = Rat::zero();
    let mut diag = vec![];
    for a in 0..=n as usize {
        for b in a..=n as usize {
            let mut s = Rat::zero();
            for k in 0..=n as usize {
                s += &(&(&weights[k] * &polys[a].eval(&grid[k])) * &polys[b].eval(&grid[k]));
            }
            if a == b {
                diag.push(s);
            } else if !s.is_zero() && s.abs() > offdiag_max {
                offdiag_max = s.abs();
                witness.get_or_insert_with(|| format!("Gram[{a}][{b}] = {s} is nonzero"));
            }
        }
    }
    // norm ratios against the product of u_j = A_{j-1} C_j
    let mut u_prod = Rat::one();
    for j in 1..=n {
        let (a_prev, _) = bi_coefficients(p, j - 1)?;
        let (_, c_j) = bi_coefficients(p, j)?;
        u_prod *= &(&a_prev * &c_j);
        if &diag[j as usize] / &diag[0] != u_prod {
            witness.get_or_insert_with(|| format!("norm ratio mismatch at n = {j}"));
        }
    }
    let pass = witness.is_none();
    Ok(BiOrthoReport {
        n,
        gram_offdiag_max_abs: offdiag_max,
        pass,
        witness,
    })
}
