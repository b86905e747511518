use std::process::{Command, Output};

use rovib::centrifugal::{mr_matrix, pt_matrix};
use rovib::potentials::{MrParams, Potential, PtParams};
use rovib_cli::commands::verify::verify_potential;

const MR: &[&str] = &["--potential", "mr", "--alpha", "1.5", "--b", "40", "--A", "80"];
const PT: &[&str] = &["--potential", "pt", "--xi1", "4", "--xi2", "2", "--alpha", "0.05"];

fn rovib(cmd: &str, pot: &[&str], extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rovib")).arg(cmd).args(pot).args(extra).output().unwrap()
}

fn rows(out: &Output) -> Vec<Vec<String>> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(|l| l.split(',').map(String::from).collect()).collect()
}

fn col(rows: &[Vec<String>], name: &str) -> usize {
    rows[0].iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn mr_table_grid() {
    let out = rovib("energy", MR, &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = rows(&out);
    assert_eq!(r[0], ["n_r", "l", "lambda", "nu", "E_analytic", "status"]);
    assert_eq!(r.len(), 41);
    let e: f64 = r[1][col(&r, "E_analytic")].parse().unwrap();
    assert!((e + 0.036913014).abs() < 1e-8);
    // ten significant digits in scientific notation
    assert_eq!(r[1][4], "-3.691301444e-2");
}

#[test]
fn pt_sample_cells() {
    let out = rovib("energy", PT, &["--states", "1,1:2,4", "--blends", "1,1;0.5,-2"]);
    let r = rows(&out);
    let e = |i: usize| r[i][4].parse::<f64>().unwrap();
    assert!((e(1) + 0.21560894).abs() < 1e-7);
    assert!((e(4) + 0.17169211).abs() < 1e-7);
}

#[test]
fn empty_states_give_header_only() {
    let out = rovib("energy", MR, &["--states", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(rows(&out).len(), 1);
}

#[test]
fn invalid_blend_is_flagged_not_fatal() {
    let out = rovib("energy", MR, &["--states", "1,1", "--blends", "-2e4,1;1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = rows(&out);
    assert_eq!(r[1][5], "invalid");
    assert_eq!(r[1][4], "");
    assert_eq!(r[2][5], "ok");
}

#[test]
fn oracle_columns() {
    let out = rovib("energy", MR, &["--states", "1,2", "--blends", "-1.5,1", "--oracle", "both"]);
    let r = rows(&out);
    assert_eq!(r[0], ["n_r", "l", "lambda", "nu", "E_analytic", "E_oracle_approx", "E_oracle_exact", "status"]);
    let v: Vec<f64> = r[1][4..7].iter().map(|s| s.parse().unwrap()).collect();
    assert!((v[0] - v[1]).abs() < 1e-9);
    assert!((v[2] + 0.0182117637).abs() < 1e-6);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(rovib("energy", &["--potential", "mr", "--alpha", "1.5"], &[]).status.code(), Some(1));
    assert_eq!(rovib("energy", MR, &["--frobnicate"]).status.code(), Some(1));
    assert_eq!(rovib("energy", MR, &["--blends", "1;2"]).status.code(), Some(1));
    assert_eq!(rovib("energy", &["--potential", "xx"], &[]).status.code(), Some(1));
    assert_eq!(rovib("energy", MR, &["--oracle", "sometimes"]).status.code(), Some(1));
    assert_eq!(rovib("wavefunction", MR, &["--states", "1,1:2,2", "--grid", "1,2,3"]).status.code(), Some(1));
    assert_eq!(rovib("sweep", MR, &["--lambda", "0,1,3"]).status.code(), Some(1));
}

#[test]
fn domain_errors_exit_2() {
    assert_eq!(rovib("approx-error", MR, &["--grid", "0,10,11"]).status.code(), Some(2));
    assert_eq!(rovib("wavefunction", PT, &["--states", "40,1", "--grid", "1,10,5"]).status.code(), Some(2));
    assert_eq!(rovib("energy", &["--potential", "mr", "--alpha", "1.5", "--b", "-4", "--A", "8"], &[]).status.code(), Some(2));
}

#[test]
fn approx_error_grid() {
    let r = rows(&rovib("approx-error", MR, &["--grid", "2,2,1", "--blends", "1,1"]));
    assert_eq!(r.len(), 2);
    assert_eq!(r[0], ["r", "delta1", "delta2", "delta3", "delta4(1|1)"]);
    assert_eq!(r[1][1], r[1][4]);

    // a negative lambda beats every column over this range
    let mr = ["--potential", "mr", "--alpha", "1.5", "--b", "20", "--A", "40"];
    let r = rows(&rovib("approx-error", &mr, &["--l", "1", "--grid", "0.5,40,400", "--blends", "-1.5,1"]));
    let worst = |j: usize| r[1..].iter().map(|row| row[j].parse::<f64>().unwrap().abs()).fold(0.0, f64::max);
    for j in 1..=3 {
        assert!(worst(4) < worst(j));
    }
}

#[test]
fn sweep_grid_and_tags() {
    let r = rows(&rovib("sweep", MR, &["--states", "1,1", "--lambda", "1,1,1", "--nu", "1,1,1"]));
    assert_eq!(r.len(), 2);
    assert_eq!(r[1][6], "lambda1_nu1");

    let out = rovib("sweep", PT, &["--states", "4,4", "--lambda", "-3,1,9", "--nu", "0,1,3"]);
    let r = rows(&out);
    assert_eq!(r.len(), 28);
    assert!(r.iter().any(|row| row[6] == "lambda0_nu1"));
    assert_eq!(r.iter().filter(|row| row[6] == "nu0").count(), 9);
    let at_nu1: Vec<f64> = r[1..].iter().filter(|row| row[3] == "1.000000000e0").map(|row| row[4].parse().unwrap()).collect();
    assert!(at_nu1.windows(2).all(|w| w[1] <= w[0]));

    let r = rows(&rovib("sweep", MR, &["--states", "1,1", "--lambda", "-20000,1,2", "--nu", "1,1,1"]));
    assert_eq!(r[1][5], "invalid");
    assert_eq!(r[2][5], "ok");
    assert_eq!(rovib("sweep", PT, &["--states", "4,4", "--lambda", "-3,1,9", "--nu", "0,1,3"]).stdout, out.stdout);
}

#[test]
fn wavefunction_nodes_and_norm() {
    for (n, sign_changes) in [(2, 2), (0, 0)] {
        let state = format!("{n},1");
        let r = rows(&rovib("wavefunction", MR, &["--states", &state, "--grid", "0.001,1500,10000"]));
        assert_eq!(r[0], ["r", "R"]);
        let pts: Vec<(f64, f64)> = r[1..].iter().map(|row| (row[0].parse().unwrap(), row[1].parse().unwrap())).collect();
        let peak = pts.iter().fold(0.0_f64, |m, p| m.max(p.1.abs()));
        let signs: Vec<f64> = pts.iter().filter(|p| p.1.abs() > 1e-10 * peak).map(|p| p.1.signum()).collect();
        assert_eq!(signs.windows(2).filter(|w| w[0] != w[1]).count(), sign_changes);
        let norm: f64 = pts.windows(2).map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1.powi(2) + w[1].1.powi(2))).sum();
        assert!((norm - 1.0).abs() < 1e-4, "{norm}");
    }
}

#[test]
fn config_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ini = dir.path().join("run.ini");
    let ini_s = ini.to_str().unwrap();
    let first = rovib("sweep", PT, &["--states", "1,2", "--lambda", "-1,1,5", "--nu", "-1,1,3", "--save-config", ini_s]);
    assert_eq!(first.status.code(), Some(0));
    let text = std::fs::read_to_string(&ini).unwrap();
    assert!(text.starts_with("command = sweep\n"));
    let again = rovib("sweep", &[], &["--config", ini_s]);
    assert_eq!(again.stdout, first.stdout);

    // flags win over the file
    let other = rovib("sweep", &[], &["--config", ini_s, "--nu", "0,0,1"]);
    assert_eq!(rows(&other).len(), 6);
    // a config written for another command is refused
    assert_eq!(rovib("energy", &[], &["--config", ini_s]).status.code(), Some(1));

    let out = dir.path().join("e.csv");
    let written = rovib("energy", MR, &["--states", "1,1", "--out", out.to_str().unwrap()]);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 6);
}

#[test]
fn verify_default_and_subset() {
    let out = rovib("verify", MR, &["--states", "1,1", "--blends", "1,1;-1.5,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("oracle vs analytic")).count(), 2);
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));

    let out = rovib("verify", PT, &["--states", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("oracle vs analytic")).count(), 5);
    assert!(text.contains("NOTE pt"));
}

#[test]
fn verify_reports_corrupted_coefficients() {
    let p = MrParams::new(80.0, 1.5, 40.0);
    let pot = Potential::ManningRosen(p);
    let mut m = mr_matrix(&p, None).unwrap();
    m.columns[0].x2 *= 1.01;
    let rep = verify_potential("mr", &pot, &m, None, &[(1, 1)], &[], false);
    let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["mr near-origin limit, column 1"]);

    let p = PtParams::new(4.0, 2.0, 0.05);
    let pot = Potential::PoschlTeller(p);
    let mut m = pt_matrix(&p, None).unwrap();
    m.columns[2].x3 += 1e-6;
    let rep = verify_potential("pt", &pot, &m, None, &[], &[], false);
    let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["pt Taylor match at r0, column 3"]);
}
