use std::process::Command;

use jknot_cli::{run, Failure, Outcome, OutputRecord, EXIT_DOMAIN, EXIT_NUMERICAL, EXIT_USAGE};

fn jknot(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jknot").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn record(args: &[&str]) -> OutputRecord {
    let (code, out, err) = jknot(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn value(rec: &OutputRecord) -> (f64, f64) {
    match rec.result {
        Outcome::Value { value, modulus } => (value, modulus),
        ref other => panic!("not a value: {other:?}"),
    }
}

#[test]
fn alpha0_example() {
    let rec = record(&["alpha0", "--n", "2", "--m", "1"]);
    assert_eq!(rec.command, "alpha0");
    assert_eq!((rec.inputs.n, rec.inputs.m), (Some(2), Some(1)));
    let Outcome::Alpha0 { alpha0, .. } = rec.result else {
        panic!("{:?}", rec.result)
    };
    assert!((alpha0 - 2.574_140_778_131_84).abs() < 1e-9);
    assert_eq!(rec.meta.tol, 1e-12);
}

#[test]
fn orbifold_example() {
    let (v, modulus) = value(&record(&["cs", "orbifold", "--n", "2", "--m", "1", "--k", "3"]));
    assert!((v - 0.0875301).abs() < 1e-4);
    assert!((modulus - 1.0 / 6.0).abs() < 1e-15);
}

#[test]
fn cover_and_knot() {
    let (v, modulus) = value(&record(&["cs", "cover", "--n", "2", "--m", "1", "--k", "4"]));
    assert!((v - 0.579699).abs() < 3e-4 && modulus == 1.0);
    let (v, modulus) = value(&record(&["cs", "knot", "--n", "2", "--m", "1"]));
    assert!((v - 0.34402298).abs() < 1e-5 && modulus == 0.5);
}

#[test]
fn lens_is_exact() {
    let rec = record(&["cs", "lens", "--n", "2", "--m", "1"]);
    assert_eq!(value(&rec), (8.0 / 9.0, 1.0));
    assert_eq!(rec.meta.exact.as_deref(), Some("8/9"));
}

#[test]
fn figure_eight_orbifold_is_a_domain_error() {
    let (code, out, err) = jknot(&["cs", "orbifold", "--n", "1", "--m", "1", "--k", "3"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(out.is_empty());
    assert!(err.contains("2pi/3") && err.contains("not below alpha0"), "{err}");
}

#[test]
fn other_domain_errors() {
    for args in [
        &["cs", "orbifold", "--n", "2", "--m", "1", "--k", "2"][..],
        &["alpha0", "--n", "0", "--m", "1"],
        &["cs", "knot", "--n", "2", "--m", "1", "--hyp-intervals", "201"],
        &["alpha0", "--n", "2", "--m", "1", "--tol", "1e-20"],
        &["trace", "--n", "1", "--m", "1", "--k", "3"],
    ] {
        assert_eq!(jknot(args).0, EXIT_DOMAIN, "{args:?}");
    }
}

#[test]
fn usage_errors() {
    for args in [
        &[][..],
        &["alpha0", "--n", "2"],
        &["cs", "orbifold", "--n", "2", "--m", "1"],
        &["table", "paper-3"],
        &["alpha0", "--n", "2", "--m", "1", "--format", "xml"],
        &["frobnicate"],
    ] {
        let (code, out, err) = jknot(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty() && !err.is_empty());
    }
    let (code, out, _) = jknot(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn numerical_failures_exit_one() {
    let e = Failure::Compute(jknot_cs::Error::RootsNotConverged { iterations: 500 });
    assert_eq!(e.exit_code(), EXIT_NUMERICAL);
    let e = Failure::Compute(jknot_cs::Error::NoRegimeChange);
    assert_eq!(e.exit_code(), EXIT_NUMERICAL);
    let e = Failure::Io(std::io::Error::other("disk full"));
    assert_eq!(e.exit_code(), EXIT_NUMERICAL);
}

#[test]
fn paper_1_layout() {
    let rec = record(&["table", "paper-1", "--hyp-intervals", "2000", "--sph-intervals", "2000"]);
    let Outcome::Table { rows } = rec.result else { panic!() };
    let pairs: Vec<(u32, u32)> = rows.iter().map(|r| (2 * r.n, 2 * r.m)).collect();
    assert_eq!(
        pairs,
        [
            (2, 2),
            (4, 2),
            (6, 2),
            (8, 2),
            (4, 4),
            (6, 4),
            (8, 4),
            (6, 6),
            (8, 6),
            (8, 8)
        ]
    );
    assert!(rows.iter().all(|r| r.alpha0.is_some() && r.modulus == 0.5));
}

#[test]
fn paper_2_layout() {
    let rec = record(&["table", "paper-2"]);
    let Outcome::Table { rows } = rec.result else { panic!() };
    assert_eq!(rows.len(), 48);
    let blocks = [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3)];
    for (b, chunk) in rows.chunks(8).enumerate() {
        for (i, r) in chunk.iter().enumerate() {
            assert_eq!((r.n, r.m, r.k), (blocks[b].0, blocks[b].1, Some(i as u32 + 3)));
        }
    }
    let (_, md, _) = jknot(&["table", "paper-2", "--format", "md"]);
    assert_eq!(md.matches("### J(").count(), 6);
    assert!(md.contains("| 3 | 0.0875301020 | 0.262590306 |"), "{md}");
}

#[test]
fn json_round_trip_and_determinism() {
    for args in [
        &["alpha0", "--n", "3", "--m", "2"][..],
        &["cs", "cover", "--n", "3", "--m", "1", "--k", "5"],
        &["trace", "--n", "2", "--m", "1", "--hyp-intervals", "8"],
        &["table", "paper-1", "--hyp-intervals", "200", "--sph-intervals", "200"],
    ] {
        let (_, first, _) = jknot(args);
        let (_, second, _) = jknot(args);
        assert_eq!(first, second, "{args:?}");
        let rec: OutputRecord = serde_json::from_str(&first).unwrap();
        let again = serde_json::to_string_pretty(&rec).unwrap();
        assert_eq!(serde_json::from_str::<OutputRecord>(&again).unwrap(), rec);
        assert_eq!(again + "\n", first);
    }
}

#[test]
fn trace_csv() {
    let (code, out, _) = jknot(&[
        "trace",
        "--n",
        "2",
        "--m",
        "1",
        "--hyp-intervals",
        "10",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "alpha,re_x,im_x,beta");
    assert_eq!(lines.len(), 12);
    let last: Vec<f64> = lines[11].split(',').map(|f| f.parse().unwrap()).collect();
    assert!((last[0] - 2.57414078).abs() < 1e-8 && last[2] == 0.0);

    let (_, out, _) = jknot(&[
        "trace",
        "--n",
        "2",
        "--m",
        "1",
        "--branch",
        "spherical1",
        "--sph-intervals",
        "10",
        "--format",
        "csv",
    ]);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("3.14159265,1.000000000,0,"), "{last}");
}

#[test]
fn cache_writes_branch_csvs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paths");
    let (code, _, err) = jknot(&["alpha0", "--n", "3", "--m", "1", "--cache", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    for branch in ["hyperbolic", "spherical1", "spherical2"] {
        let text = std::fs::read_to_string(path.join(format!("j3_1_{branch}.csv"))).unwrap();
        assert!(text.starts_with("alpha,re_x,im_x,beta\n"));
        assert_eq!(text.lines().count(), 202);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_jknot");
    let ok = Command::new(bin)
        .args(["cs", "lens", "--n", "1", "--m", "2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"value\": 0.1111111111111111"));
    let domain = Command::new(bin)
        .args(["cs", "orbifold", "--n", "1", "--m", "1", "--k", "3"])
        .output()
        .unwrap();
    assert_eq!(domain.status.code(), Some(2));
    let usage = Command::new(bin).args(["cs", "knot"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(64));
}
