use std::process::{Command, Output};

fn hyscat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyscat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn point_value(args: &[&str], name: &str) -> f64 {
    let mut full = vec!["point", "--format", "csv"];
    full.extend_from_slice(args);
    let o = hyscat(&full);
    assert_eq!(o.status.code(), Some(0));
    csv_rows(&stdout(&o))
        .into_iter()
        .find(|r| r[0] == name)
        .map(|r| r[1].parse().unwrap())
        .unwrap()
}

#[test]
fn output_is_deterministic() {
    for args in [&["table"][..], &["table", "--format", "csv"], &["scan", "--k-range", "0.01:0.15:0.01"]] {
        let a = hyscat(args);
        let b = hyscat(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn table_csv_round_trips() {
    let o = hyscat(&["table", "--format", "csv"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0], ["l", "k", "alpha", "delta_A0", "delta_A5"]);
    assert_eq!(rows.len(), 1 + 72);
    for r in &rows[1..] {
        for cell in &r[3..] {
            let v: f64 = cell.parse().unwrap();
            assert_eq!(format!("{v:.16e}"), *cell);
        }
    }
}

#[test]
fn table_cell_matches_point() {
    let o = hyscat(&["table", "--format", "csv"]);
    let rows = csv_rows(&stdout(&o));
    let row = rows.iter().find(|r| r[..3] == ["2", "0.15", "0.1"]).unwrap();
    let from_table: f64 = row[4].parse().unwrap();
    let from_point = point_value(&["--l", "2", "--k", "0.15", "--alpha", "0.1", "--A", "5"], "delta_l");
    assert_eq!(from_table, from_point);
    assert!((from_point - 41.32505).abs() < 5e-6);
}

#[test]
fn single_k_scan_matches_point() {
    let o = hyscat(&["scan", "--l", "1", "--alpha", "0.1", "--k", "0.05"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 2);
    for (col, a) in [(1, "0"), (2, "5")] {
        let scan: f64 = rows[1][col].parse().unwrap();
        let point = point_value(&["--l", "1", "--alpha", "0.1", "--k", "0.05", "--A", a], "delta_l");
        assert_eq!(scan, point);
    }
}

#[test]
fn degrees_are_a_rescaling() {
    let args = ["--l", "0", "--k", "0.07", "--alpha", "0.075"];
    let rad = point_value(&args, "delta_l");
    let mut deg_args = args.to_vec();
    deg_args.extend(["--unit", "deg"]);
    let deg = point_value(&deg_args, "delta_l");
    assert!((deg - rad.to_degrees()).abs() <= 1e-12 * deg.abs());
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        &["scan", "--k-range", "0.15:0.01:0.01"][..],
        &["scan", "--k-range", "0.01:0.15"],
        &["point", "--k", "0.1", "--alpha", "-1"],
        &["frobnicate"],
    ] {
        let o = hyscat(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let o = hyscat(&["scan", "--k", "0.01,0.03", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&hyscat(&["scan", "--k", "0.01,0.03"])));
}

#[test]
fn free_potential_has_no_bound_states() {
    let o = hyscat(&["bound-states", "--V0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no bound states"));
}

#[test]
fn bound_states_agree() {
    let o = hyscat(&["bound-states", "--l", "0,1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0], ["l", "n", "energy_pole", "energy_shooting", "rel_diff"]);
    assert!(rows.len() > 2);
    for r in &rows[1..] {
        assert!(r[4].parse::<f64>().unwrap() < 1e-6);
    }
}

#[test]
fn diff_against_published_values() {
    // One published entry disagrees with its neighbours by 1.8e-3.
    let strict = hyscat(&["table", "--diff-paper"]);
    assert_eq!(strict.status.code(), Some(1));
    let loose = hyscat(&["table", "--diff-paper", "--tol", "1e-2"]);
    assert_eq!(loose.status.code(), Some(0));
    assert!(stdout(&loose).contains("max |diff|"));
}
