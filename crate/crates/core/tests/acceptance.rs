//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Run with `cargo test -p hkr-core --test acceptance`.

use std::process::ExitCode;

use hkr_core::quiver::{geometric_cross_check, kronecker_algebra, negative_control};
use hkr_core::spaces::{line_bundle_ch, projective_space};
use hkr_core::verify::{run, CheckRecord, Options, Status, Suite, VerificationReport};
use hkr_core::{q, qr, Matrix};

const SEED: u64 = 2024;

struct Outcome {
    ok: bool,
    detail: String,
}

fn group(report: &VerificationReport, prefix: &str) -> Vec<CheckRecord> {
    report.checks.iter().filter(|c| c.name.starts_with(prefix)).cloned().collect()
}

/// Every check with the prefix passed, and at least `min_checks` exist.
fn all_pass(report: &VerificationReport, prefix: &str, min_checks: usize) -> Outcome {
    let checks = group(report, prefix);
    let failed: Vec<&CheckRecord> = checks.iter().filter(|c| c.status != Status::Pass).collect();
    let instances: u64 = checks.iter().map(|c| c.instances).sum();
    let ok = failed.is_empty() && checks.len() >= min_checks;
    let detail = match failed.first() {
        Some(c) => format!("{} failed: {:?}", c.name, c.witness),
        None => format!("{} checks, {instances} instances", checks.len()),
    };
    Outcome { ok, detail }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome { ok: a.ok && b.ok, detail: format!("{}; {}", a.detail, b.detail) }
}

fn pairing_duality(report: &VerificationReport) -> Outcome {
    let mut out = all_pass(report, "theorem1.shk_vs_mukai.", 12);
    let required = ["P1", "P2", "P3", "C0", "E", "C2", "C3", "P1xP1", "ExE", "P1xE"];
    let missing: Vec<&str> = required.iter().copied().filter(|s| report.check(&format!("theorem1.shk_vs_mukai.{s}")).is_none()).collect();
    let instances: u64 = group(report, "theorem1.shk_vs_mukai.").iter().map(|c| c.instances).sum();
    if instances < 500 || !missing.is_empty() {
        out.ok = false;
        out.detail = format!("{instances} instances, missing spaces {missing:?}");
    }
    out
}

fn riemann_roch(report: &VerificationReport) -> Outcome {
    let driver = all_pass(report, "theorem3.", 4);
    // direct Riemann-Roch values, independent of the driver
    let p1 = projective_space(1).unwrap();
    let p2 = projective_space(2).unwrap();
    let mut ok = true;
    for d in -3..=3 {
        let chi1 = line_bundle_ch(&p1, d).unwrap().mul(p1.todd()).unwrap().integrate();
        let chi2 = line_bundle_ch(&p2, d).unwrap().mul(p2.todd()).unwrap().integrate();
        ok &= chi1 == q(d + 1) && chi2 == qr((d + 1) * (d + 2), 2);
    }
    both(driver, Outcome { ok, detail: "chi(O(d)) on P1, P2 for d in [-3, 3]".into() })
}

fn quiver(report: &VerificationReport) -> Outcome {
    let driver = all_pass(report, "quiver.", 2);
    let expected = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
    let c = geometric_cross_check();
    let ok = kronecker_algebra().euler_matrix() == expected && c.geometry == expected && !negative_control().passes();
    both(driver, Outcome { ok, detail: format!("Euler matrix {}", c.algebra) })
}

fn determinism(report: &VerificationReport) -> Outcome {
    let again = run(&Suite::ALL, Options { seed: SEED, timings: false });
    let (a, b) = (report.to_json(), again.to_json());
    Outcome { ok: a == b, detail: format!("{} bytes per report", a.len()) }
}

fn main() -> ExitCode {
    let report = run(&Suite::ALL, Options { seed: SEED, timings: false });
    let criteria: Vec<(&str, Outcome)> = vec![
        ("Shklyarov pairing equals dualised Mukai pairing on every basis pair", pairing_duality(&report)),
        ("Mukai and Shklyarov Gram matrices are invertible", all_pass(&report, "theorem1.nondegenerate.", 12)),
        ("diagonal kernel is the identity and matches the dual-basis kernel", all_pass(&report, "prop2.", 24)),
        ("convolution is functorial along P1-P1-P1 and P1-E-P1", all_pass(&report, "prop1.functoriality.", 2)),
        (
            "adjoint kernel is Mukai-adjoint; Serre and Todd identities",
            both(all_pass(&report, "prop3.adjointness.", 16), all_pass(&report, "prop3.serre_todd_identities.", 12)),
        ),
        (
            "Mukai convolution equals convolution; external products factorise",
            both(all_pass(&report, "theorem2.mukai_convolution.", 16), all_pass(&report, "theorem2.external_product.", 3)),
        ),
        ("Riemann-Roch for projections in degree 0", riemann_roch(&report)),
        ("Kronecker Euler form matches geometry; negative control fails", quiver(&report)),
        ("reports are byte-identical for a fixed seed", determinism(&report)),
    ];
    let mut failures = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        if !outcome.ok {
            failures += 1;
        }
        println!("{tag} [{}] {name} ({})", i + 1, outcome.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
