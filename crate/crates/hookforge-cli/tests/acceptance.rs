//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact; there are no tolerances anywhere.
//!
//! Run with `cargo test -p hookforge-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::process::Command;

use hookforge::fock::{
    alpha, apply_charge_op, apply_psi, apply_psi_star, energy, inner, verify_fock_identity,
    FockVector, Half, MayaState,
};
use hookforge::hook_strip::{to_internal, verify_hook_strip, HookedPartition};
use hookforge::hooks::verify_bessenrodt;
use hookforge::partition::{is_thin, partitions_of, subdivision, Cell, HookSide, Partition};
use hookforge::pp::{
    hg_compose, hg_decompose, plane_partition_counts, rpp_enumerate, spp_enumerate,
};
use hookforge::series::{
    verify_gansner, verify_hook_strip_series, verify_refined_rpp, verify_skew, verify_ultimate,
    verify_wallcrossing,
};
use hookforge::tectonic::{
    intersection_dims, rect_intersection_dims, theta_image, theta_shift, verify_thin_bijection,
    PlateCoord,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn all_partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

#[test]
fn criterion_01_bessenrodt_multiset_identity() {
    for lambda in all_partitions_up_to(12) {
        let report = verify_bessenrodt(&lambda, 12).unwrap();
        assert!(
            report.pass,
            "multiset identity failed for {lambda:?}: {:?}",
            report.failures
        );
    }
    println!("criterion 01 PASS: hook-type multiset identity for all |lambda| <= 12 at bound 12");
}

#[test]
fn criterion_02_tectonic_bijection() {
    // Figure regression: the plate R_{3,4} of the drawn example moves 10
    // north and 3 west.
    let fig = p(&[15, 15, 15, 15, 15, 15, 10, 10, 10, 10, 5, 5, 5, 3, 3, 3]);
    assert_eq!(theta_shift(&fig, PlateCoord::new(3, 4)).unwrap(), (10, 3));

    let mut thin_count = 0usize;
    for lambda in all_partitions_up_to(20) {
        if lambda.is_empty() || !is_thin(&lambda) {
            continue;
        }
        thin_count += 1;
        let box_size = 2 * (lambda.first_part() + lambda.rows()) + 4;
        let report = verify_thin_bijection(&lambda, box_size).unwrap();
        assert!(
            report.pass,
            "coverage verification failed for {lambda:?}: {:?}",
            report.failures
        );

        // Closed-form intersections against the direct rectangle oracle on
        // every plate pair.
        let sub = subdivision(&lambda).unwrap();
        let k = sub.k();
        let plates: Vec<_> = (1..=k + 1)
            .flat_map(|i| (1..=k + 1).map(move |j| PlateCoord::new(i, j)))
            .filter(|c| sub.is_plate(c.i, c.j))
            .collect();
        for &a in &plates {
            for &b in &plates {
                let closed = intersection_dims(&lambda, a, b).unwrap();
                let direct = rect_intersection_dims(
                    &theta_image(&lambda, a).unwrap(),
                    &theta_image(&lambda, b).unwrap(),
                );
                let closed_nonempty = closed.0.is_positive() && closed.1.is_positive();
                let direct_nonempty = direct.0.is_positive() && direct.1.is_positive();
                if closed_nonempty {
                    assert_eq!(
                        closed, direct,
                        "closed form disagrees with the oracle for {lambda:?} {a:?} {b:?}"
                    );
                } else {
                    assert!(
                        !direct_nonempty,
                        "closed form misses an overlap for {lambda:?} {a:?} {b:?}"
                    );
                }
            }
        }
    }
    println!(
        "criterion 02 PASS: tectonic coverage bijection and intersection closed forms \
         for all {thin_count} thin partitions with |lambda| <= 20"
    );
}

#[test]
fn criterion_03_thinness_classifier() {
    assert!(is_thin(&p(&[24, 11, 5, 5, 5, 1, 1, 1, 1, 1, 1])));
    assert!(!is_thin(&p(&[12, 10, 8, 8, 8, 8, 8, 8, 1, 1, 1])));
    println!("criterion 03 PASS: thinness classifier reproduces both reference partitions");
}

#[test]
fn criterion_04_hook_to_strip_bijection() {
    // The worked example: the external 7-hook of (6,4,3,3,1,1,1) grows into
    // (6,5,5,4,4,1,1).
    let hp = HookedPartition::new(
        p(&[6, 4, 3, 3, 1, 1, 1]),
        Cell::new(4, 4),
        HookSide::External,
    )
    .unwrap();
    assert_eq!(hp.stats.hook_len, 7);
    let img = to_internal(&hp).unwrap();
    assert_eq!(img.lambda, p(&[6, 5, 5, 4, 4, 1, 1]));
    assert_eq!(img.lambda.size(), 26);

    for d in 1..=12 {
        for ell in 1..=d {
            let report = verify_hook_strip(d, ell);
            assert!(
                report.pass,
                "hook-to-strip failed at d={d} ell={ell}: {:?}",
                report.counterexamples
            );
        }
    }
    println!("criterion 04 PASS: hook-to-strip bijection with hand/foot/content/type preservation for all d <= 12");
}

#[test]
fn criterion_05_gansner_identity() {
    for lambda in all_partitions_up_to(6) {
        let report = verify_gansner(&lambda, 10).unwrap();
        assert!(
            report.pass,
            "multivariate identity failed for {lambda:?}: {:?}",
            report.mismatches
        );
    }
    println!("criterion 05 PASS: multivariate reverse-plane-partition identity for all |lambda| <= 6 at cap 10");
}

#[test]
fn criterion_06_skew_identity() {
    for lambda in all_partitions_up_to(4) {
        let report = verify_skew(&lambda, 8).unwrap();
        assert!(
            report.pass,
            "skew identity failed for {lambda:?}: {:?}",
            report.mismatches
        );
    }
    // Two independent oracles for the size-graded counts of the empty shape.
    let mut by_size = vec![0u64; 9];
    for f in spp_enumerate(&Partition::empty(), 8) {
        by_size[f.size] += 1;
    }
    assert_eq!(by_size, plane_partition_counts(8));
    assert_eq!(by_size[..7], [1, 1, 3, 6, 13, 24, 48]);
    println!("criterion 06 PASS: skew identity for all |lambda| <= 4 at cap 8; plane-partition counts agree across two oracles");
}

#[test]
fn criterion_07_refined_wallcrossing() {
    for lambda in all_partitions_up_to(10) {
        let report = verify_wallcrossing(&lambda, 10).unwrap();
        assert!(
            report.pass,
            "wallcrossing failed for {lambda:?}: refined={} specialized={} {:?}",
            report.refined_pass, report.specialized_pass, report.mismatches
        );
    }
    println!("criterion 07 PASS: refined wallcrossing and its one-variable specialisation for all |lambda| <= 10 at cap 10");
}

#[test]
fn criterion_08_refined_rpp_weight() {
    for lambda in all_partitions_up_to(5) {
        let report = verify_refined_rpp(&lambda, 8).unwrap();
        assert!(
            report.pass,
            "refined weight failed for {lambda:?}: {:?}",
            report.mismatches
        );
        // Round-trip bijectivity of the decomposition on the same corpus,
        // in both directions.
        let mut seen = Vec::new();
        for f in rpp_enumerate(&lambda, 8) {
            let m = hg_decompose(&f).unwrap();
            assert_eq!(m.weight(), f.size);
            assert_eq!(hg_compose(&m), f, "round trip failed for {f:?}");
            seen.push(m);
        }
        let count = seen.len();
        seen.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        seen.dedup();
        assert_eq!(seen.len(), count, "decomposition is not injective");
    }
    println!("criterion 08 PASS: refined weight identity and decomposition bijectivity for all |lambda| <= 5 at q-cap 8");
}

#[test]
fn criterion_09_hook_strip_series() {
    for d in 1..=10 {
        for ell in 1..=d {
            let report = verify_hook_strip_series(d, ell, 8).unwrap();
            assert!(
                report.pass,
                "series forms failed at d={d} ell={ell}: content={} type={} {:?}",
                report.content_pass, report.type_pass, report.content_mismatches
            );
        }
    }
    println!("criterion 09 PASS: hook-to-strip series identities (content and type form) for all d <= 10 at cap 8");
}

#[test]
fn criterion_10_combined_identity() {
    for d in 0..=6 {
        let report = verify_ultimate(d, 8).unwrap();
        assert!(
            report.pass,
            "combined identity failed at d={d}: {:?}",
            report.mismatches
        );
    }
    println!("criterion 10 PASS: combined identity with the p(d)-th power factor for all d <= 6 at cap 8");
}

#[test]
fn criterion_11_fock_identity() {
    for d in 1..=10 {
        for ell in 1..=d {
            let report = verify_fock_identity(d, ell).unwrap();
            assert!(
                report.pass,
                "matrix-element identity failed at d={d} ell={ell}: {report:?}"
            );
            assert!(report.lhs_matches_internal_hooks);
            assert!(report.rhs_matches_external_hooks);
        }
    }
    println!("criterion 11 PASS: twisted-boson matrix elements match in both directions and against hook enumerations for all d <= 10");
}

#[test]
fn criterion_12_operator_algebra() {
    // Adjointness of the fermion pair over a window of basis states.
    let mut states = Vec::new();
    for d in 0..=5 {
        for lambda in partitions_of(d) {
            for charge in -1..=1 {
                states.push(MayaState::new(charge, lambda.clone()));
            }
        }
    }
    for a in &states {
        for b in &states {
            for m in -5..=5 {
                let k = Half::above_int(m);
                let va = FockVector::basis(a.clone());
                let vb = FockVector::basis(b.clone());
                assert_eq!(
                    inner(&apply_psi(k, &va), &vb),
                    inner(&va, &apply_psi_star(k, &vb)),
                    "adjointness failed at a={a:?} b={b:?} k={k:?}"
                );
            }
        }
    }

    // Charge and energy eigenvalues.
    for d in 0..=6 {
        for lambda in partitions_of(d) {
            let state = MayaState::new(0, lambda.clone());
            assert_eq!(energy(&state), Half::from_int(d as i64));
            assert!(apply_charge_op(&FockVector::basis(state)).is_zero());
        }
    }

    // Boson commutation on all charge-0 states of energy <= 6.
    for d in 0..=6 {
        for lambda in partitions_of(d) {
            let v = FockVector::basis(MayaState::new(0, lambda.clone()));
            for e in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
                for f in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
                    let mut comm = alpha(e, &alpha(f, &v));
                    comm.add_vector(&alpha(f, &alpha(e, &v)).scale(-1));
                    let expect = if e + f == 0 {
                        v.scale(e as i128)
                    } else {
                        FockVector::zero()
                    };
                    assert_eq!(comm, expect, "commutator failed at {lambda:?} e={e} f={f}");
                }
            }
        }
    }
    println!("criterion 12 PASS: adjointness, charge and energy eigenvalues, and boson commutators are exact");
}

fn run_binary(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hookforge"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.code().unwrap_or(-1),
    )
}

fn result_body(stdout: &str) -> String {
    let doc: serde_json::Value = serde_json::from_str(stdout).expect("JSON document");
    serde_json::to_string(&doc["result"]).unwrap()
}

#[test]
fn criterion_13_deterministic_reports() {
    // Identical configs produce byte-identical result bodies.
    let args = ["corpus", "--max-size", "6", "--jobs", "3"];
    let (out1, code1) = run_binary(&args);
    let (out2, code2) = run_binary(&args);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    let body1 = result_body(&out1);
    let body2 = result_body(&out2);
    assert_eq!(body1.as_bytes(), body2.as_bytes());
    // Also raw bytes: everything from the "result" key onwards is
    // identical; only the meta header above it may differ.
    let raw1 = &out1[out1.find("\"result\"").unwrap()..];
    let raw2 = &out2[out2.find("\"result\"").unwrap()..];
    assert_eq!(raw1.as_bytes(), raw2.as_bytes());

    // The full corpus at size 8 completes with no verifier failure.
    let (out, code) = run_binary(&["corpus", "--max-size", "8", "--jobs", "2"]);
    assert_eq!(code, 0, "corpus run failed:\n{out}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["result"]["pass"], serde_json::Value::Bool(true));

    println!("criterion 13 PASS: corpus report bodies are byte-identical across runs and the size-8 corpus is clean");
}

#[test]
fn cli_rejects_missing_parameters() {
    let out = Command::new(env!("CARGO_BIN_EXE_hookforge"))
        .args(["verify", "bessenrodt", "--bound", "12"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--lambda"), "stderr: {err}");
}

#[test]
fn cli_refuses_non_thin_tectonic() {
    let out = Command::new(env!("CARGO_BIN_EXE_hookforge"))
        .args([
            "verify",
            "tectonic",
            "--lambda",
            "12,10,8,8,8,8,8,8,1,1,1",
            "--box",
            "60",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not thin"), "stderr: {err}");
}
