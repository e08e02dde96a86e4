//! Self-contained verification suites shared by the CLI `verify` command
//! and the test harness. Each check compares two independent computation
//! paths and reports a pass/fail with a short diagnostic.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coupling::couple_series;
use crate::covariants::{
    apply, cross, l2_span_closure, primary_invariants, sample_pair, sample_rotation,
};
use crate::decompose::decompose;
use crate::molien::{molien_so3, sum_rule_check, MolienQuery};
use crate::output::{table_row, CheckDoc};
use crate::rotation::{
    det3, det_identity_check, identity3, mat_mul, max_abs_diff, molien_numeric, rotation, trace,
    transpose, RotationParams,
};

fn check(name: String, passed: bool, detail: Option<String>) -> CheckDoc {
    CheckDoc {
        name,
        passed,
        detail,
    }
}

/// (2L+1)-weighted sum of covariant series must rebuild the free series
/// 1/(1-t)^(3N).
pub fn suite_sumrule(order: usize) -> Vec<CheckDoc> {
    (1..=5)
        .map(|n| {
            let report = sum_rule_check(n, order);
            check(
                format!("sumrule N={n} order={order}"),
                report.ok,
                report
                    .first_failing_degree
                    .map(|d| format!("first mismatch at degree {d}")),
            )
        })
        .collect()
}

/// Coupling recursion against the closed-form series, coefficient-exact.
pub fn suite_coupling(order: usize) -> Vec<CheckDoc> {
    (2..=5)
        .map(|n| {
            let mut failure = None;
            for l in 0..=12u32 {
                let a = couple_series(n, l, order);
                let b = molien_so3(MolienQuery::new(n, l)).series(order);
                if a != b {
                    failure = Some(format!("mismatch at L={l}"));
                    break;
                }
            }
            check(
                format!("coupling N={n} order={order}"),
                failure.is_none(),
                failure,
            )
        })
        .collect()
}

/// Gauss-Legendre quadrature against exact evaluation of the symbolic
/// fraction.
pub fn suite_quadrature(quad_order: usize) -> Vec<CheckDoc> {
    (1..=5)
        .map(|n| {
            let mut worst: f64 = 0.0;
            for l in 0..=6u32 {
                let exact_fraction = molien_so3(MolienQuery::new(n, l));
                for lambda in [0.05, 0.1, 0.2] {
                    let numeric = molien_numeric(n, l, lambda, quad_order);
                    let exact = exact_fraction.eval_f64(lambda);
                    worst = worst.max((numeric - exact).abs());
                }
            }
            check(
                format!("quadrature N={n} order={quad_order}"),
                worst <= 1e-8,
                Some(format!("max abs error {worst:.3e}")),
            )
        })
        .collect()
}

/// Freshly computed decompositions against the embedded golden tables.
pub fn suite_tables() -> Vec<CheckDoc> {
    crate::fixtures::golden_rows()
        .into_iter()
        .map(|(n, l, golden)| {
            let name = format!("table N={n} L={l}");
            match decompose(n, l) {
                Ok(d) => {
                    let computed = table_row(&d);
                    let passed = computed == golden;
                    let detail =
                        (!passed).then(|| format!("computed {computed:?}, golden {golden:?}"));
                    check(name, passed, detail)
                }
                Err(e) => check(name, false, Some(e.to_string())),
            }
        })
        .collect()
}

/// Orthogonality, determinant, trace and the det(I - lambda D) identity on
/// seeded random draws.
pub fn suite_rotation(seed: u64, draws: usize) -> Vec<CheckDoc> {
    use std::f64::consts::PI;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_orth: f64 = 0.0;
    let mut worst_det: f64 = 0.0;
    let mut worst_trace: f64 = 0.0;
    let mut worst_identity: f64 = 0.0;
    for _ in 0..draws {
        let params = RotationParams::new(
            rand::Rng::gen_range(&mut rng, 0.0..2.0 * PI),
            rand::Rng::gen_range(&mut rng, 0.0..PI),
            rand::Rng::gen_range(&mut rng, 0.0..PI),
        );
        let m = rotation(params);
        worst_orth = worst_orth.max(max_abs_diff(&mat_mul(&m, &transpose(&m)), &identity3()));
        worst_det = worst_det.max((det3(&m) - 1.0).abs());
        worst_trace = worst_trace.max((trace(&m) - (1.0 + 2.0 * params.omega.cos())).abs());
        let lambda = rand::Rng::gen_range(&mut rng, -0.5..0.5);
        let n = rand::Rng::gen_range(&mut rng, 1..=3u32);
        let (_, _, diff) = det_identity_check(params, lambda, n);
        worst_identity = worst_identity.max(diff);
    }
    vec![
        check(
            format!("rotation orthogonality ({draws} draws)"),
            worst_orth <= 1e-12,
            Some(format!("max deviation {worst_orth:.3e}")),
        ),
        check(
            format!("rotation det=1 ({draws} draws)"),
            worst_det <= 1e-12,
            Some(format!("max deviation {worst_det:.3e}")),
        ),
        check(
            format!("rotation trace=1+2cos ({draws} draws)"),
            worst_trace <= 1e-12,
            Some(format!("max deviation {worst_trace:.3e}")),
        ),
        check(
            format!("det identity ({draws} draws)"),
            worst_identity <= 1e-10,
            Some(format!("max deviation {worst_identity:.3e}")),
        ),
    ]
}

/// Invariance and equivariance of the explicit two-vector catalog on
/// seeded random draws.
pub fn suite_covariants(seed: u64, draws: usize) -> Vec<CheckDoc> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_inv: f64 = 0.0;
    let mut worst_cross: f64 = 0.0;
    let mut span_ok = true;
    for _ in 0..draws {
        let p = sample_pair(&mut rng);
        let m = sample_rotation(&mut rng);
        let q = p.rotated(&m);
        let (a1, a2, a3) = primary_invariants(&p);
        let (b1, b2, b3) = primary_invariants(&q);
        worst_inv = worst_inv
            .max((a1 - b1).abs())
            .max((a2 - b2).abs())
            .max((a3 - b3).abs());
        let rotated_cross = apply(&m, &cross(&p.v1, &p.v2));
        let cross_of_rotated = cross(&q.v1, &q.v2);
        for i in 0..3 {
            worst_cross = worst_cross.max((rotated_cross[i] - cross_of_rotated[i]).abs());
        }
        let samples: Vec<_> = (0..8).map(|_| sample_pair(&mut rng)).collect();
        span_ok &= l2_span_closure(&samples, &m, 1e-9);
    }
    vec![
        check(
            format!("invariants under rotation ({draws} draws)"),
            worst_inv <= 1e-12,
            Some(format!("max deviation {worst_inv:.3e}")),
        ),
        check(
            format!("cross-product equivariance ({draws} draws)"),
            worst_cross <= 1e-12,
            Some(format!("max deviation {worst_cross:.3e}")),
        ),
        check(
            format!("(2)-covariant span closure ({draws} draws)"),
            span_ok,
            None,
        ),
    ]
}

/// Runs a named suite ("sumrule", "coupling", "quadrature", "tables" or
/// "all"); `all` additionally runs the seeded rotation and covariant
/// property checks.
pub fn run_suite(name: &str, order: usize, seed: u64, quad_order: usize) -> Option<Vec<CheckDoc>> {
    let checks = match name {
        "sumrule" => suite_sumrule(order),
        "coupling" => suite_coupling(order.max(24)),
        "quadrature" => suite_quadrature(quad_order),
        "tables" => suite_tables(),
        "all" => {
            let mut all = suite_sumrule(order);
            all.extend(suite_coupling(order.max(24)));
            all.extend(suite_quadrature(quad_order));
            all.extend(suite_tables());
            all.extend(suite_rotation(seed, 200));
            all.extend(suite_covariants(seed, 50));
            all
        }
        _ => return None,
    };
    Some(checks)
}
