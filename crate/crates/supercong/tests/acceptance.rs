//! Acceptance gate: one test per shipping criterion, each printing a
//! single PASS line (visible with `cargo test --test acceptance --
//! --nocapture`). Budgets are asserted, not just hoped for.

use std::time::{Duration, Instant};

use num::Integer;
use supercong::check::{self, Perturbation, RunParams, Status};
use supercong::exact::{int, Int};
use supercong::modular::{nu3, Val3};
use supercong::qseries::{a_q, q_int, QLaurent};
use supercong::seq::{seq_value, SeqId, SeqTable, TableSpec};

fn run(ids: &str, params: &RunParams) -> Vec<check::CheckResult> {
    check::run_selection(ids, params, 0).unwrap()
}

fn assert_all_pass(results: &[check::CheckResult]) {
    for r in results {
        assert_eq!(
            r.status,
            Status::Pass,
            "{} [{}]: witness {:?}, skip {:?}",
            r.id,
            r.params,
            r.witness,
            r.skip_reason
        );
    }
}

fn within(budget: Duration, started: Instant, what: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_1_identity_suite_to_60() {
    let started = Instant::now();
    let params = RunParams {
        n_max: 60,
        ..RunParams::default()
    };
    let results = run("I0,I1,I2", &params);
    assert_eq!(results.len(), 22);
    assert_all_pass(&results);
    within(Duration::from_secs(60), started, "identity suite");

    // Spot anchors: the binomial transform of f at n=2 gives g_2 = 15;
    // the odd-weighted g-sum at n=3 gives 7 = 1 + 4 + 2; the normalized
    // Franel sum with falling powers of 8 gives 4 at n=2.
    assert_eq!(seq_value(SeqId::G, 2).unwrap(), int(15));
    let f: Vec<Int> = (0..3).map(|k| seq_value(SeqId::Franel, k).unwrap()).collect();
    assert_eq!(&f[0] + int(2) * &f[1] + &f[2], int(15));
    let g: Vec<Int> = (0..3).map(|k| seq_value(SeqId::G, k).unwrap()).collect();
    let weighted: Int = (0..3).map(|k| int(4 * k as i64 + 3) * &g[k]).sum();
    assert_eq!(weighted, int(189));
    assert_eq!(weighted / int(3 * 9), int(7));
    assert_eq!((int(8) * &f[0] + int(4) * &f[1]) / int(4), int(4));

    println!("acceptance 1 (identities I01-I22, n <= 60): PASS");
}

#[test]
fn criterion_2_q_suite_to_10() {
    let started = Instant::now();
    let params = RunParams {
        n_max: 10,
        ..RunParams::default()
    };
    let results = run("Q0", &params);
    assert_eq!(results.len(), 5);
    assert_all_pass(&results);
    within(Duration::from_secs(30), started, "q suite");

    // A_1(x; q) = q^2 + (1+q)^2 x.
    let a1 = a_q(1);
    assert_eq!(a1.degree(), Some(1));
    assert_eq!(a1.coeff(0), QLaurent::monomial(2, int(1)));
    assert_eq!(a1.coeff(1), q_int(2).mul_ref(&q_int(2)));

    println!("acceptance 2 (q-analogues Q01-Q05, n <= 10): PASS");
}

#[test]
fn criterion_3_mod_p_congruences_to_499() {
    let started = Instant::now();
    let params = RunParams {
        primes: (2, 499),
        ..RunParams::default()
    };
    let ids = "C01,C06,C07,C09,C11,C13,C14,C22,C25,C27,C29a,C30a";
    let results = run(ids, &params);
    assert_eq!(results.len(), 12);
    assert_all_pass(&results);
    within(Duration::from_secs(300), started, "mod-p congruence suite");

    println!("acceptance 3 (mod-p congruences, primes <= 499): PASS");
}

#[test]
fn criterion_4_high_power_congruences_to_199() {
    let started = Instant::now();
    let params = RunParams {
        primes: (2, 199),
        ..RunParams::default()
    };
    let ids = "C02,C03,C04,C05,C08,C10,C12,C15,C16,C17,C18,C19,C20,C21,C23,C24,C26,C28,C29b,C30b";
    let results = run(ids, &params);
    assert_eq!(results.len(), 20);
    assert_all_pass(&results);
    within(Duration::from_secs(600), started, "high-power congruence suite");

    // Hand-verified residues at p = 5.
    let t = SeqTable::build(&TableSpec::scalars_only(5));
    let c05: Int = (0..5).map(|k| t.g_at_m3[k].clone()).sum();
    assert_eq!(c05.mod_floor(&int(25)), int(24));
    let c08: Int = (1..5).map(|k| int(k) * &t.g[k as usize]).sum();
    assert_eq!(c08.mod_floor(&int(25)), int(18));
    assert_eq!(t.g[4].mod_floor(&int(25)), int(14));
    let c04: Int = (0..5).map(|k| t.s[k].clone()).sum();
    assert_eq!(c04.mod_floor(&int(125)), int(76));

    println!("acceptance 4 (high-power congruences, primes <= 199): PASS");
}

#[test]
fn criterion_5_conjecture_scans() {
    let params = RunParams {
        n_max: 60,
        primes: (2, 199),
        ..RunParams::default()
    };
    let results = run("X01,X02,X04,X05,X07", &params);
    assert_eq!(results.len(), 5);
    assert_all_pass(&results);

    // nu_3 scan through n = 81, with the +2 refinement at multiples of 3.
    let x03 = run(
        "X03",
        &RunParams {
            n_max: 81,
            ..RunParams::default()
        },
    )
    .remove(0);
    assert_eq!(x03.status, Status::Pass, "{:?}", x03.witness);
    let table = x03.table.as_ref().unwrap();
    assert_eq!(table.len(), 81);
    let row3 = &table[2];
    assert_eq!(row3["n"], "3");
    assert_eq!(row3["nu3_linear"], "3");
    assert_eq!(row3["nu3_cubic"], "5");
    // The n = 3 scan value itself: 1 - 15 + 365 = 351 = 27 * 13.
    assert_eq!(nu3(&int(351)), Val3::Finite(3));

    // Odd-power residue scan: the first four constants reconstruct and
    // agree across at least five primes.
    let x06 = run("X06", &params).remove(0);
    assert_eq!(x06.status, Status::Pass);
    let expected = ["1", "-1/3", "-13/27", "5/9"];
    let mut seen = 0;
    for row in x06.table.as_ref().unwrap() {
        let Some(candidate) = row.get("candidate") else {
            continue;
        };
        let r: usize = row["r"].parse().unwrap();
        assert_eq!(candidate, expected[r], "candidate for r={r}");
        let agreeing: usize = row["agreeing_primes"].parse().unwrap();
        assert!(agreeing >= 5, "only {agreeing} primes agree for r={r}");
        seen += 1;
    }
    assert_eq!(seen, 4);

    println!("acceptance 5 (conjecture scans, n <= 60 / primes <= 199): PASS");
}

#[test]
fn criterion_6_perturbation_integrity() {
    let params = RunParams {
        primes: (5, 5),
        ..RunParams::default()
    };
    let bump: Perturbation = "g:4:1".parse().unwrap();
    let ctx = check::prepare_ctx(&["C23"], &params, &[bump]).unwrap();
    let r = check::run_checks(&ctx, &["C23"], &params, 1).remove(0);
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.unwrap();
    assert_eq!((w.lhs, w.rhs), ("15 mod 25".into(), "14 mod 25".into()));

    let clean = run("C23", &params).remove(0);
    assert_eq!(clean.status, Status::Pass);

    println!("acceptance 6 (perturbed g_4 fails C23 with exact witness): PASS");
}

#[test]
fn criterion_7_deterministic_reports() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_supercong");
    let dir = std::env::temp_dir();
    let out = [dir.join("supercong-det-1.json"), dir.join("supercong-det-2.json")];
    for path in &out {
        let status = Command::new(bin)
            .args(["run", "--checks", "all", "--out"])
            .arg(path)
            .output()
            .unwrap();
        assert!(status.status.success());
    }
    let mut reports: Vec<supercong::report::Report> = out
        .iter()
        .map(|p| {
            supercong::report::Report::from_json(&std::fs::read_to_string(p).unwrap()).unwrap()
        })
        .collect();
    for report in &mut reports {
        report.summary.elapsed_ms = 0;
        for r in &mut report.results {
            r.elapsed_ms = 0;
        }
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0].to_json(), reports[1].to_json());
    for path in &out {
        let _ = std::fs::remove_file(path);
    }

    println!("acceptance 7 (identical runs give identical reports): PASS");
}
