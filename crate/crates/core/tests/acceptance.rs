//! Acceptance suite: one test per criterion, each printing a verdict line.
//! Every tolerance and threshold is pinned here; the exact checks assert
//! literal zero residuals.

use cbi_core::algebra::{monic_rep_matrices, verify_monic_matrices};
use cbi_core::family::cbi_tau;
use cbi_core::limits::{
    aw_limit_coeffs, dual_hahn_polynomials, e_alpha, eigenvalue_nu, DualHahnParams,
};
use cbi_core::sampling::ParamSampler;
use cbi_core::scalar::{rat, Rat};
use cbi_core::suites;

const SEED: u64 = 7;

fn verdict(number: u32, name: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("{tag} criterion {number}: {name} ({detail})");
    assert!(pass, "criterion {number} failed: {name} ({detail})");
}

#[test]
fn criterion_01_eigen_equation() {
    // D_alpha I_n = Lambda_n I_n with zero residual polynomial, n <= 30,
    // 5 parameter draws, 3 deformation values each
    let report = suites::run_eigen_suite(SEED, 30, 5, 3).expect("suite ran");
    verdict(
        1,
        "eigen equation, zero residual to degree 30",
        report.pass,
        &format!("{} exact checks", report.checks_run),
    );
}

#[test]
fn criterion_02_closed_form_equivalence() {
    let report = suites::run_closed_form_suite(SEED, 10, 5).expect("suite ran");
    verdict(
        2,
        "hypergeometric closed form equals recurrence to degree 10",
        report.pass,
        &format!("{} exact checks", report.checks_run),
    );
}

#[test]
fn criterion_03_kernel_round_trip() {
    let report = suites::run_kernel_suite(SEED, 12, 5).expect("suite ran");
    verdict(
        3,
        "Christoffel and Geronimus round trips to degree 12",
        report.pass,
        &format!("{} exact checks", report.checks_run),
    );
}

#[test]
fn criterion_04_discrete_orthogonality() {
    // positivity triples (1,1,1), (2,1/2,3), (1/3,2,1); N in {2,4,6} even
    // and {3,5} odd; off-diagonals exactly zero, norm ratios exactly the
    // running tau products
    let report = suites::run_ortho_suite().expect("suite ran");
    verdict(
        4,
        "exact Gram diagonality and norm-ratio law",
        report.pass,
        &format!("{} exact checks", report.checks_run),
    );
}

#[test]
fn criterion_05_five_term_difference_equation() {
    let report = suites::run_five_term_suite(SEED, 12, -8, 8).expect("suite ran");
    verdict(
        5,
        "five-term equation on both grids, degrees to 12, k in [-8, 8]",
        report.pass,
        &format!("{} exact checks", report.checks_run),
    );
}

#[test]
fn criterion_06_algebra_suite() {
    // six relations (normal form + action), scalar Casimir, shift
    // covariance of the structure constants, five draws
    let report = suites::run_algebra_suite(SEED, 5).expect("suite ran");
    verdict(
        6,
        "quadratic-algebra relations, Casimir scalarity, parameter-shift covariance",
        report.pass,
        &format!("{} checks", report.checks_run),
    );
}

#[test]
fn criterion_07_representations() {
    // monic matrices: interior relations at sizes up to 16
    let mut sampler = ParamSampler::new(SEED);
    let p = sampler.params(18);
    let alpha = sampler.alpha();
    let mut monic_ok = true;
    for size in [8usize, 12, 16] {
        let m = monic_rep_matrices(&p, &alpha, size).expect("matrices built");
        monic_ok &= verify_monic_matrices(&m).iter().all(|(_, ok)| *ok);
    }
    // float orthonormal residuals < 1e-10, spectrum vs grid < 1e-9, and
    // the dual-basis block/bandwidth structure, on truncated cases
    let report = suites::run_representation_suite().expect("suite ran");
    verdict(
        7,
        "monic interior relations to size 16, orthonormal residuals, dual-basis structure",
        monic_ok && report.pass,
        &format!("{} representation checks", report.checks_run + 3),
    );
}

#[test]
fn criterion_08_limit_families() {
    let mut checks = 0u64;
    // (a) staggered products of the limit coefficients reproduce tau,
    //     n <= 20, across seeded draws
    let mut sampler = ParamSampler::new(SEED);
    let mut product_ok = true;
    for _ in 0..5 {
        let p = sampler.params(22);
        for n in 1..=20u32 {
            let (a_prev, _) = aw_limit_coeffs(&p, n - 1).expect("limit coefficients");
            let (_, g_n) = aw_limit_coeffs(&p, n).expect("limit coefficients");
            product_ok &= &a_prev * &g_n == cbi_tau(&p, n).expect("tau");
            checks += 1;
        }
    }
    // (b) exact rho1-to-infinity limits (tau -> sigma, operator terms)
    //     and the contracted algebra, inside the dual-hahn suite
    let dual = suites::run_dual_hahn_suite(SEED, 20).expect("suite ran");
    checks += dual.checks_run;
    // (c) bispectrality of the limit family to degree 20
    let ph = DualHahnParams::new(rat(1, 2), rat(1, 4), rat(1, 4));
    let alpha = rat(3, 7);
    let op = e_alpha(&ph, &alpha);
    let polys = dual_hahn_polynomials(&ph, 20);
    let mut eigen_ok = true;
    for (n, poly) in polys.iter().enumerate() {
        let lhs = op.apply(poly).expect("polynomial image");
        eigen_ok &= lhs == poly.scale(&eigenvalue_nu(&alpha, n as u32));
        checks += 1;
    }
    // (d) reflection-free reduction: vanishing reflection coefficients,
    //     tau = omega, d2 = d3 = d4 = 0
    let hahn = suites::run_hahn_suite(&[
        (rat(3, 2), rat(1, 4), 2),
        (rat(5, 2), rat(2, 3), 4),
        (rat(7, 2), rat(-1, 5), 6),
    ])
    .expect("suite ran");
    checks += hahn.checks_run;
    // (e) para-Krawtchouk runs through the generic eigen and truncation
    //     machinery unchanged
    let para = suites::run_para_krawtchouk_suite(&[(3, rat(1, 2)), (5, rat(1, 3))])
        .expect("suite ran");
    checks += para.checks_run;
    verdict(
        8,
        "limit families: products, operator limits, bispectrality, reductions",
        product_ok && dual.pass && eigen_ok && hahn.pass && para.pass,
        &format!("{checks} checks"),
    );
}

#[test]
fn criterion_09_aw_numeric_limit() {
    // eps in {1e-3, 1e-4, 1e-5}: error decay ratio within [5, 20] per
    // decade, final error < 50*eps, imaginary parts O(eps), n <= 6
    let p = cbi_core::ParamSet::new(Rat::one(), rat(1, 2), rat(1, 4), rat(1, 4));
    let report = suites::run_aw_limit_suite(&p, 6, &[1e-3, 1e-4, 1e-5]).expect("suite ran");
    verdict(
        9,
        "recurrence-coefficient limit converges at first order",
        report.pass,
        &format!("{} rows", report.checks_run),
    );
}
