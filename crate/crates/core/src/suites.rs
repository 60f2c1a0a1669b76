//! The verification suites behind the command-line `verify` subcommands
//! and the acceptance tests. Each suite returns a deterministic
//! machine-readable report; a fixed seed reproduces the report byte for
//! byte.

use serde_json::json;

use crate::algebra::{
    alpha_shift_check, casimir_scalar, dual_basis_structure, monic_rep_matrices,
    orthonormal_rep_check, verify_monic_matrices, verify_relations,
};
use crate::aw::verify_aw_limit;
use crate::dunkl::{eigen_check, five_term_check, grid_action_holds, GridKind};
use crate::error::Result;
use crate::family::{cbi_polynomials, christoffel_transform, geronimus_reconstruct, bi_polynomials, cbi_closed_form, kernel_ratio, bi_coefficients};
use crate::limits::{
    dual_hahn_algebra_check, dual_hahn_polynomials, dual_hahn_closed_form, e_alpha,
    eigenvalue_nu, para_krawtchouk_params, symmetric_hahn_reduction, verify_dual_hahn_limit,
    DualHahnParams,
};
use crate::ortho::{
    classify_truncation, positive_even_params, positive_odd_params, spectral_grid,
    verify_bi_orthogonality, verify_orthogonality,
};
use crate::params::ParamSet;
use crate::report::{SuiteReport, Witness};
use crate::sampling::ParamSampler;
use crate::scalar::{rat, Rat};

fn witness(check: &str, detail: String) -> Witness {
    Witness {
        check: check.to_string(),
        detail,
    }
}

/// Eigen-equation sweep: zero residual for every degree up to `n_max`,
/// across seeded parameter draws and deformation values. Also records the
/// two results about the shifted-variable operator: its spectrum matches
/// the family at `alpha_star`, and the conjugated operator equals that
/// family member as an exact normal form.
pub fn run_eigen_suite(seed: u64, n_max: u32, sets: u32, alphas: u32) -> Result<SuiteReport> {
    use crate::dunkl::{alpha_star, d_alpha, eigenvalue_kappa, eigenvalue_lambda, h_y};
    use crate::op::ShiftReflectOp;

    let mut sampler = ParamSampler::new(seed);
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut draws = vec![];
    let mut conjugation = vec![];
    for _ in 0..sets {
        let p = sampler.params(n_max);
        let mut alist = vec![];
        for _ in 0..alphas {
            let alpha = sampler.alpha();
            let rep = eigen_check(&p, &alpha, n_max)?;
            checks += n_max as u64 + 1;
            for f in &rep.failures {
                failures.push(witness(
                    "eigen_equation",
                    format!("params {p}, alpha {alpha}, n = {}: residual {}", f.n, f.residual),
                ));
            }
            alist.push(alpha.to_string());
        }
        // half-integer-shift variant: spectral statement and the stronger
        // operator identity, reported separately
        let astar = alpha_star(&p);
        let spectral_ok = (0..=20).all(|n| eigenvalue_kappa(&p, n) == eigenvalue_lambda(&p, &astar, n));
        let conj = ShiftReflectOp::shift(rat(1, 4))
            .compose(&h_y(&p))
            .compose(&ShiftReflectOp::shift(rat(-1, 4)));
        let operator_ok = conj == d_alpha(&p, &astar);
        checks += 2;
        if !spectral_ok {
            failures.push(witness(
                "shift_variant_spectrum",
                format!("params {p}: kappa differs from the alpha_star spectrum"),
            ));
        }
        if !operator_ok {
            failures.push(witness(
                "shift_variant_conjugation",
                format!("params {p}: conjugated operator differs from the alpha_star member"),
            ));
        }
        conjugation.push(json!({
            "params": p,
            "alpha_star": astar.to_string(),
            "spectrum_matches": spectral_ok,
            "operator_identity": operator_ok,
        }));
        draws.push(json!({"params": p, "alphas": alist}));
    }
    Ok(SuiteReport {
        suite: "eigen".into(),
        config: json!({"seed": seed, "n_max": n_max, "sets": sets, "alphas": alphas}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "draws": draws, "shift_variant": conjugation }),
    })
}

/// Closed-form equivalence: the hypergeometric expansion reproduces the
/// recurrence output degree by degree.
pub fn run_closed_form_suite(seed: u64, n_max: u32, sets: u32) -> Result<SuiteReport> {
    let mut sampler = ParamSampler::new(seed);
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut draws = vec![];
    for _ in 0..sets {
        let p = sampler.params(n_max);
        let polys = cbi_polynomials(&p, n_max)?;
        for (n, poly) in polys.iter().enumerate() {
            checks += 1;
            let closed = cbi_closed_form(&p, n as u32)?;
            if closed != *poly {
                failures.push(witness(
                    "closed_form_equals_recurrence",
                    format!("params {p}, n = {n}"),
                ));
            }
        }
        draws.push(json!({"params": p}));
    }
    Ok(SuiteReport {
        suite: "closed-form".into(),
        config: json!({"seed": seed, "n_max": n_max, "sets": sets}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "draws": draws }),
    })
}

/// Kernel round trip: the Christoffel quotient reproduces the kernel
/// recurrence, the Geronimus combination reproduces the base recurrence,
/// and the kernel ratio reproduces the recurrence coefficient.
pub fn run_kernel_suite(seed: u64, n_max: u32, sets: u32) -> Result<SuiteReport> {
    let mut sampler = ParamSampler::new(seed);
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut draws = vec![];
    for _ in 0..sets {
        let p = sampler.params(n_max + 2);
        let cbi = cbi_polynomials(&p, n_max)?;
        let bi = bi_polynomials(&p, n_max)?;
        for n in 0..=n_max {
            checks += 3;
            if christoffel_transform(&p, n)? != cbi[n as usize] {
                failures.push(witness(
                    "christoffel_equals_kernel_recurrence",
                    format!("params {p}, n = {n}"),
                ));
            }
            if geronimus_reconstruct(&p, n)? != bi[n as usize] {
                failures.push(witness(
                    "geronimus_equals_base_recurrence",
                    format!("params {p}, n = {n}"),
                ));
            }
            match kernel_ratio(&p, n) {
                Ok(ratio) => {
                    let (a_n, _) = bi_coefficients(&p, n)?;
                    if ratio != a_n {
                        failures.push(witness(
                            "kernel_ratio_equals_recurrence_coefficient",
                            format!("params {p}, n = {n}"),
                        ));
                    }
                }
                Err(e) => failures.push(witness("kernel_ratio", format!("params {p}, n = {n}: {e}"))),
            }
        }
        draws.push(json!({"params": p}));
    }
    Ok(SuiteReport {
        suite: "kernel".into(),
        config: json!({"seed": seed, "n_max": n_max, "sets": sets}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "draws": draws }),
    })
}

/// The acceptance orthogonality sweep over both positivity
/// parametrizations, plus the base-family suite on its own truncation.
pub fn run_ortho_suite() -> Result<SuiteReport> {
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut reports = vec![];
    let triples = [
        (Rat::one(), Rat::one(), Rat::one()),
        (Rat::int(2), rat(1, 2), Rat::int(3)),
        (rat(1, 3), Rat::int(2), Rat::one()),
    ];
    for (a, b, c) in &triples {
        for n in [2u32, 4, 6] {
            let p = positive_even_params(a, b, c, n)?;
            checks += run_single_ortho(&p, n, &mut failures, &mut reports)?;
        }
    }
    for (z, x, c) in &triples {
        for n in [3u32, 5] {
            let p = positive_odd_params(z, x, c, n)?;
            checks += run_single_ortho(&p, n, &mut failures, &mut reports)?;
        }
    }
    // base-family orthogonality on its own even-case truncation
    for (p, n) in [
        (
            ParamSet::new(Rat::one(), rat(1, 2), Rat::one() + rat(3, 2), rat(1, 4)),
            2u32,
        ),
        (
            ParamSet::new(rat(1, 3), rat(1, 5), rat(1, 3) + rat(5, 2), rat(2, 7)),
            4,
        ),
    ] {
        checks += 1;
        match verify_bi_orthogonality(&p, n) {
            Ok(rep) if rep.pass => {}
            Ok(rep) => failures.push(witness(
                "base_family_orthogonality",
                format!("params {p}, N = {n}: {:?}", rep.witness),
            )),
            Err(e) => failures.push(witness(
                "base_family_orthogonality",
                format!("params {p}, N = {n}: {e}"),
            )),
        }
    }
    Ok(SuiteReport {
        suite: "ortho".into(),
        config: json!({"triples": ["1,1,1", "2,1/2,3", "1/3,2,1"], "even_n": [2,4,6], "odd_n": [3,5]}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "reports": reports }),
    })
}

/// Orthogonality for one explicit parameter set (CLI path).
pub fn run_ortho_single(p: &ParamSet, n: u32) -> Result<SuiteReport> {
    let mut failures = vec![];
    let mut reports = vec![];
    let checks = run_single_ortho(p, n, &mut failures, &mut reports)?;
    Ok(SuiteReport {
        suite: "ortho".into(),
        config: json!({"params": p, "N": n}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "reports": reports }),
    })
}

fn run_single_ortho(
    p: &ParamSet,
    n: u32,
    failures: &mut Vec<Witness>,
    reports: &mut Vec<serde_json::Value>,
) -> Result<u64> {
    let tr = classify_truncation(p, n)?;
    // grid-root duality: the spectral points are the roots of the next
    // polynomial, pairwise distinct
    let grid = spectral_grid(&tr, p);
    let top = cbi_polynomials(p, n + 1)?.pop().unwrap();
    let mut sorted = grid.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != grid.len() {
        failures.push(witness(
            "grid_points_distinct",
            format!("params {p}, N = {n}"),
        ));
    }
    for x in &grid {
        if !top.eval(x).is_zero() {
            failures.push(witness(
                "grid_points_are_roots",
                format!("params {p}, N = {n}, x = {x}"),
            ));
        }
    }
    let rep = verify_orthogonality(&tr, p)?;
    if !rep.pass {
        failures.push(witness(
            "orthogonality",
            format!("params {p}, N = {n}: {:?}", rep.witness),
        ));
    }
    reports.push(serde_json::to_value(&rep).unwrap());
    Ok(n as u64 + 2)
}

/// Five-term difference equation on both grids.
pub fn run_five_term_suite(seed: u64, n_max: u32, k_lo: i64, k_hi: i64) -> Result<SuiteReport> {
    let mut sampler = ParamSampler::new(seed);
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut draws = vec![];
    let p = sampler.params(n_max.max(14));
    let alpha = sampler.alpha();
    // grid-action identities first
    for kind in [GridKind::Standard, GridKind::Alternate] {
        let h = match kind {
            GridKind::Standard => p.rho2.clone(),
            GridKind::Alternate => p.r1.clone(),
        };
        for k in -10..=10 {
            checks += 1;
            if !grid_action_holds(kind, &h, k) {
                failures.push(witness(
                    "grid_action_identities",
                    format!("{kind:?}, h = {h}, k = {k}"),
                ));
            }
        }
        for a in [Rat::zero(), alpha.clone()] {
            let rep = five_term_check(&p, &a, n_max, &h, k_lo..=k_hi, kind)?;
            checks += (n_max as u64 + 1) * (k_hi - k_lo + 1) as u64;
            for f in &rep.failures {
                failures.push(witness(
                    "five_term_equation",
                    format!(
                        "{kind:?}, params {p}, alpha {a}, n = {}, k = {:?}: residual {}",
                        f.n, f.k, f.residual
                    ),
                ));
            }
        }
    }
    draws.push(json!({"params": p, "alpha": alpha.to_string()}));
    Ok(SuiteReport {
        suite: "five-term".into(),
        config: json!({"seed": seed, "n_max": n_max, "k_lo": k_lo, "k_hi": k_hi}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "draws": draws }),
    })
}

/// Algebra suite: the six relations (normal form and action), Casimir
/// scalarity and centrality, the parameter-shift covariance, and the
/// finite representation checks.
pub fn run_algebra_suite(seed: u64, draws: u32) -> Result<SuiteReport> {
    let mut sampler = ParamSampler::new(seed);
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut detail = vec![];
    for _ in 0..draws {
        let p = sampler.params(16);
        let alpha = sampler.alpha();
        let beta = sampler.alpha();
        let rel = verify_relations(&p, &alpha);
        checks += rel.relations.len() as u64;
        for c in &rel.relations {
            if !(c.normal_form_pass && c.action_pass) {
                failures.push(witness(
                    "algebra_relation",
                    format!("params {p}, alpha {alpha}, relation {}", c.name),
                ));
            }
        }
        checks += 1;
        let casimir = match casimir_scalar(&p, &alpha) {
            Ok(q) => q.to_string(),
            Err(e) => {
                failures.push(witness(
                    "casimir_scalar",
                    format!("params {p}, alpha {alpha}: {e}"),
                ));
                "failed".into()
            }
        };
        checks += 1;
        let shift = alpha_shift_check(&p, &alpha, &beta);
        if !shift.pass {
            failures.push(witness(
                "alpha_shift_covariance",
                format!("params {p}, alpha {alpha}, beta {beta}: {:?}", shift.witness),
            ));
        }
        detail.push(json!({
            "params": p,
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
            "casimir": casimir,
            "relations": rel.relations,
            "alpha_shift": shift,
        }));
    }
    // monic matrices on interior blocks at several sizes
    let p = sampler.params(18);
    let alpha = sampler.alpha();
    for size in [8usize, 12, 16] {
        let m = monic_rep_matrices(&p, &alpha, size)?;
        for (name, ok) in verify_monic_matrices(&m) {
            checks += 1;
            if !ok {
                failures.push(witness(
                    "monic_matrix_relation",
                    format!("params {p}, alpha {alpha}, size {size}, relation {name}"),
                ));
            }
        }
    }
    Ok(SuiteReport {
        suite: "algebra".into(),
        config: json!({"seed": seed, "draws": draws}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "draws": detail }),
    })
}

/// Representation suite: float orthonormal checks on truncated cases plus
/// the dual-basis structure claims.
pub fn run_representation_suite() -> Result<SuiteReport> {
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut detail = vec![];
    let cases = [
        (positive_even_params(&Rat::int(2), &rat(1, 2), &Rat::int(3), 4)?, 4u32),
        (positive_even_params(&rat(1, 3), &Rat::int(2), &Rat::one(), 6)?, 6),
        (positive_odd_params(&Rat::int(2), &rat(1, 2), &Rat::int(3), 3)?, 3),
        (positive_odd_params(&rat(1, 3), &Rat::int(2), &Rat::one(), 5)?, 5),
    ];
    let alpha = rat(2, 9);
    for (p, n) in &cases {
        let tr = classify_truncation(p, *n)?;
        checks += 1;
        match orthonormal_rep_check(p, &alpha, *n as usize + 1, Some(&tr)) {
            Ok(rep) => {
                if !rep.pass {
                    failures.push(witness(
                        "orthonormal_representation",
                        format!("params {p}, N = {n}: {rep:?}"),
                    ));
                }
                detail.push(json!({"params": p, "N": n, "orthonormal": rep}));
            }
            Err(e) => failures.push(witness(
                "orthonormal_representation",
                format!("params {p}, N = {n}: {e}"),
            )),
        }
        checks += 1;
        match dual_basis_structure(&tr, p, &alpha) {
            Ok(rep) => {
                if !rep.pass {
                    failures.push(witness(
                        "dual_basis_structure",
                        format!("params {p}, N = {n}: {:?}", rep.witness),
                    ));
                }
                detail.push(json!({"params": p, "N": n, "dual_basis": rep}));
            }
            Err(e) => failures.push(witness(
                "dual_basis_structure",
                format!("params {p}, N = {n}: {e}"),
            )),
        }
    }
    Ok(SuiteReport {
        suite: "representations".into(),
        config: json!({"alpha": alpha.to_string(), "even_n": [4, 6], "odd_n": [3, 5]}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "cases": detail }),
    })
}

/// Dual -1 Hahn suite: bispectrality, closed forms, the exact
/// rho1-to-infinity limits, and the contracted algebra.
pub fn run_dual_hahn_suite(seed: u64, n_max: u32) -> Result<SuiteReport> {
    let mut sampler = ParamSampler::new(seed);
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut detail = vec![];
    for _ in 0..3 {
        let rho2 = sampler.rational();
        // keep the closed-form denominator parameters off the lattice
        let p = DualHahnParams::new(rho2, sampler.rational(), sampler.rational());
        let ok_params = {
            let half = rat(1, 2);
            [
                &(&p.rho2 - &p.r1) + &half,
                &(&p.rho2 - &p.r2) + &half,
            ]
            .iter()
            .all(|d| d.as_nonpositive_integer().is_none_or(|z| z > n_max as u64))
        };
        if !ok_params {
            continue;
        }
        let alpha = sampler.alpha();
        let polys = dual_hahn_polynomials(&p, n_max);
        let op = e_alpha(&p, &alpha);
        for (n, poly) in polys.iter().enumerate() {
            checks += 1;
            match op.apply(poly) {
                Ok(lhs) => {
                    if lhs != poly.scale(&eigenvalue_nu(&alpha, n as u32)) {
                        failures.push(witness(
                            "dual_hahn_eigen",
                            format!("rho2 {}, r1 {}, r2 {}, n = {n}", p.rho2, p.r1, p.r2),
                        ));
                    }
                }
                Err(e) => failures.push(witness("dual_hahn_eigen", format!("n = {n}: {e}"))),
            }
            if n as u32 <= n_max.min(10) {
                checks += 1;
                match dual_hahn_closed_form(&p, n as u32) {
                    Ok(cf) => {
                        if cf != *poly {
                            failures.push(witness(
                                "dual_hahn_closed_form",
                                format!("rho2 {}, r1 {}, r2 {}, n = {n}", p.rho2, p.r1, p.r2),
                            ));
                        }
                    }
                    Err(e) => {
                        failures.push(witness("dual_hahn_closed_form", format!("n = {n}: {e}")))
                    }
                }
            }
        }
        let samples: Vec<Rat> = (2..=12).map(Rat::int).collect();
        checks += 1;
        match verify_dual_hahn_limit(&p, &alpha, n_max.min(12), &samples) {
            Ok(rep) if rep.pass => {}
            Ok(rep) => failures.push(witness(
                "dual_hahn_limit",
                format!("{:?}", rep.witness),
            )),
            Err(e) => failures.push(witness("dual_hahn_limit", e.to_string())),
        }
        let alg = dual_hahn_algebra_check(&p, &alpha);
        checks += alg.relations.len() as u64;
        for (name, ok) in &alg.relations {
            if !ok {
                failures.push(witness(
                    "dual_hahn_algebra",
                    format!("rho2 {}, r1 {}, r2 {}: relation {name}", p.rho2, p.r1, p.r2),
                ));
            }
        }
        detail.push(json!({
            "rho2": p.rho2.to_string(),
            "r1": p.r1.to_string(),
            "r2": p.r2.to_string(),
            "alpha": alpha.to_string(),
            "algebra": alg,
        }));
    }
    Ok(SuiteReport {
        suite: "dual-hahn".into(),
        config: json!({"seed": seed, "n_max": n_max}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "draws": detail }),
    })
}

/// Symmetric-Hahn reduction suite at a few truncating parameter choices.
pub fn run_hahn_suite(r1_r2_cases: &[(Rat, Rat, u32)]) -> Result<SuiteReport> {
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut detail = vec![];
    for (r1, r2, n_cap) in r1_r2_cases {
        checks += 1;
        match symmetric_hahn_reduction(r1, r2, *n_cap) {
            Ok(rep) => {
                if !rep.pass {
                    failures.push(witness(
                        "symmetric_hahn_reduction",
                        format!("r1 {r1}, r2 {r2}, N = {n_cap}: {:?}", rep.witness),
                    ));
                }
                detail.push(json!({"r1": r1.to_string(), "r2": r2.to_string(), "N": n_cap, "report": rep}));
            }
            Err(e) => failures.push(witness(
                "symmetric_hahn_reduction",
                format!("r1 {r1}, r2 {r2}: {e}"),
            )),
        }
    }
    Ok(SuiteReport {
        suite: "hahn".into(),
        config: json!({
            "cases": r1_r2_cases
                .iter()
                .map(|(r1, r2, n)| json!({"r1": r1.to_string(), "r2": r2.to_string(), "N": n}))
                .collect::<Vec<_>>()
        }),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "cases": detail }),
    })
}

/// Para-Krawtchouk suite: the specialization runs through the generic
/// eigen, truncation and orthogonality machinery unchanged.
pub fn run_para_krawtchouk_suite(cases: &[(u32, Rat)]) -> Result<SuiteReport> {
    let mut failures = vec![];
    let mut checks = 0u64;
    let mut detail = vec![];
    for (n_cap, gamma) in cases {
        let (p, alpha) = para_krawtchouk_params(*n_cap, gamma)?;
        checks += 1;
        let rep = eigen_check(&p, &alpha, *n_cap)?;
        if !rep.pass() {
            failures.push(witness(
                "para_krawtchouk_eigen",
                format!("N = {n_cap}, gamma = {gamma}"),
            ));
        }
        checks += 1;
        match classify_truncation(&p, *n_cap) {
            Ok(tr) => {
                let mut fl = vec![];
                let mut reports = vec![];
                checks += run_single_ortho(&p, *n_cap, &mut fl, &mut reports)?;
                for f in fl {
                    failures.push(witness(
                        "para_krawtchouk_orthogonality",
                        format!("N = {n_cap}, gamma = {gamma}: {}", f.detail),
                    ));
                }
                detail.push(json!({"N": n_cap, "gamma": gamma.to_string(), "case": tr.case, "reports": reports}));
            }
            Err(e) => failures.push(witness(
                "para_krawtchouk_truncation",
                format!("N = {n_cap}, gamma = {gamma}: {e}"),
            )),
        }
    }
    Ok(SuiteReport {
        suite: "para-krawtchouk".into(),
        config: json!({"cases": cases.iter().map(|(n, g)| json!({"N": n, "gamma": g.to_string()})).collect::<Vec<_>>()}),
        checks_run: checks,
        pass: failures.is_empty(),
        failures,
        detail: json!({ "cases": detail }),
    })
}

/// Askey-Wilson numeric limit suite.
pub fn run_aw_limit_suite(p: &ParamSet, n_max: u32, eps_list: &[f64]) -> Result<SuiteReport> {
    let rep = verify_aw_limit(p, n_max, eps_list)?;
    let mut failures = vec![];
    if !rep.pass {
        failures.push(witness(
            "aw_limit_convergence",
            rep.witness.clone().unwrap_or_default(),
        ));
    }
    Ok(SuiteReport {
        suite: "aw-limit".into(),
        config: json!({"params": p, "n_max": n_max, "eps": eps_list}),
        checks_run: (n_max as u64 + 1) * eps_list.len() as u64,
        pass: rep.pass,
        failures,
        detail: serde_json::to_value(&rep).unwrap(),
    })
}
