//! End-to-end behavior of the check registry: every entry terminates at
//! small scale, frozen residue anchors reproduce, coefficient mode implies
//! eval mode, and a perturbed table fails with an exact witness.

use num::Integer;
use supercong::check::{self, Perturbation, RunParams, Status, XMode};
use supercong::exact::{int, Int, Rat};
use supercong::modular::harmonic;
use supercong::seq::{SeqTable, TableSpec};

fn small_params() -> RunParams {
    RunParams {
        n_max: 5,
        primes: (5, 13),
        ..RunParams::default()
    }
}

#[test]
fn every_catalog_entry_terminates_at_small_scale() {
    let results = check::run_selection("all", &small_params(), 4).unwrap();
    assert_eq!(results.len(), check::catalog().len());
    for r in &results {
        assert_ne!(r.status, Status::Fail, "{} failed: {:?}", r.id, r.witness);
    }
}

/// C05, C08, C23 and C04 left sides at p = 5, recomputed here from the raw
/// sequence tables rather than through the check runners.
#[test]
fn residue_anchors_at_five() {
    let table = SeqTable::build(&TableSpec::scalars_only(6));

    let sum_g_at_m3: Int = (0..5).map(|k| table.g_at_m3[k].clone()).sum();
    assert_eq!(sum_g_at_m3, int(-1201));
    assert_eq!(sum_g_at_m3.mod_floor(&int(25)), int(24));

    let weighted_g: Int = (1..5).map(|k| int(k) * &table.g[k as usize]).sum();
    assert_eq!(weighted_g, int(2868));
    assert_eq!(weighted_g.mod_floor(&int(25)), int(18));

    assert_eq!(table.g[4], int(639));
    assert_eq!(table.g[4].mod_floor(&int(25)), int(14));

    let sum_g_at_m1: Int = (0..5).map(|k| table.s[k].clone()).sum();
    assert_eq!(sum_g_at_m1, int(-49));
    assert_eq!(sum_g_at_m1.mod_floor(&int(125)), int(76));
    let tail: Rat = (0..5)
        .map(|k| Rat::from(table.s[k as usize].clone()) * harmonic(k, 2))
        .sum();
    assert_eq!(tail, Rat::new(int(-10317), int(144)));

    let params = RunParams {
        primes: (5, 5),
        ..RunParams::default()
    };
    let results = check::run_selection("C04,C05,C08,C23", &params, 1).unwrap();
    for r in &results {
        assert_eq!(r.status, Status::Pass, "{}: {:?}", r.id, r.witness);
    }
}

#[test]
fn coefficient_mode_pass_implies_eval_mode_pass() {
    let ids = "C02,C06,C15,C16,C21,C26";
    let coeff = check::run_selection(
        ids,
        &RunParams {
            primes: (5, 13),
            mode: XMode::Coefficient,
            ..RunParams::default()
        },
        2,
    )
    .unwrap();
    let eval = check::run_selection(
        ids,
        &RunParams {
            primes: (5, 13),
            mode: XMode::Eval,
            ..RunParams::default()
        },
        2,
    )
    .unwrap();
    for (c, e) in coeff.iter().zip(&eval) {
        assert_eq!(c.id, e.id);
        assert_eq!(c.status, Status::Pass, "{}: {:?}", c.id, c.witness);
        if c.status == Status::Pass {
            assert_eq!(
                e.status,
                Status::Pass,
                "{} passed coefficient-wise but failed at a point: {:?}",
                e.id,
                e.witness
            );
        }
    }
}

#[test]
fn perturbed_value_fails_with_exact_witness() {
    let params = RunParams {
        primes: (5, 5),
        ..RunParams::default()
    };
    let bump: Perturbation = "g:4:1".parse().unwrap();
    let ctx = check::prepare_ctx(&["C23"], &params, &[bump]).unwrap();
    let results = check::run_checks(&ctx, &["C23"], &params, 1);
    assert_eq!(results[0].status, Status::Fail);
    let w = results[0].witness.as_ref().unwrap();
    assert_eq!(w.at, "p=5, g_4");
    assert_eq!(w.lhs, "15 mod 25");
    assert_eq!(w.rhs, "14 mod 25");

    let clean = check::run_selection("C23", &params, 1).unwrap();
    assert_eq!(clean[0].status, Status::Pass);
}

/// The threshold printed in the catalog must be the one the runner
/// enforces. Probing single-prime ranges at 2, 3, 5 and 7 distinguishes
/// all four threshold variants.
#[test]
fn runners_enforce_their_catalog_thresholds() {
    use supercong::check::Kind;
    for probe in [2u64, 3, 5, 7] {
        let params = RunParams {
            n_max: 3,
            primes: (probe, probe),
            ..RunParams::default()
        };
        for entry in check::catalog() {
            let Some(threshold) = entry.threshold else {
                continue;
            };
            if entry.kind != Kind::Congruence && entry.kind != Kind::Conjecture {
                continue;
            }
            let result = check::run_selection(entry.id, &params, 1)
                .unwrap()
                .remove(0);
            let threshold_skip = result
                .skip_reason
                .as_deref()
                .is_some_and(|r| r.starts_with("threshold"));
            assert_eq!(
                threshold_skip,
                !threshold.admits(probe),
                "{} at p={probe}: catalog says {threshold}, runner said {:?} ({:?})",
                entry.id,
                result.status,
                result.skip_reason
            );
            if threshold.admits(probe) {
                assert_eq!(
                    result.status,
                    Status::Pass,
                    "{} at admitted p={probe}: {:?} {:?}",
                    entry.id,
                    result.witness,
                    result.skip_reason
                );
            }
        }
    }
}

#[test]
fn width_one_matches_parallel_run() {
    let params = small_params();
    let mut wide = check::run_selection("all", &params, 4).unwrap();
    let mut narrow = check::run_selection("all", &params, 1).unwrap();
    for r in wide.iter_mut().chain(narrow.iter_mut()) {
        r.elapsed_ms = 0;
    }
    assert_eq!(wide, narrow);
}
