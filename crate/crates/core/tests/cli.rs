use std::process::{Command, Output};

fn redei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_redei"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn pairs_at_fifty() {
    let o = redei(&["pairs", "--max-x", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x,pi_x,pi_1mod4,ordered_linked,ratio,abs_dev_from_0.125\n50,15,6,10,0.04444444444,0.08055555556\n"
    );
}

#[test]
fn triples_grid_writes_six_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let o = redei(&[
        "triples",
        "--max-x",
        "3000",
        "--grid",
        "500",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[0].starts_with("x,unordered_distinct,linked,borromean,ratio_all"));
    let last: Vec<&str> = lines[6].split(',').collect();
    assert_eq!(&last[..4], &["3000", "13158860", "182035", "92392"]);
    let ratio: f64 = last[4].parse().unwrap();
    assert!((ratio - 1.0 / 128.0).abs() <= 0.002);
}

#[test]
fn solve_and_symbol() {
    let o = redei(&["solve", "13", "17"]);
    assert_eq!(stdout(&o), "x=-15 y=4 z=1\n");
    let o = redei(&["solve", "5", "29"]);
    assert_eq!(stdout(&o), "x=7 y=2 z=1\n");

    let o = redei(&["symbol", "5", "29", "109"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("[5,29,109] = "));
    assert!(out.contains("solution x=7 y=2 z=1"));
}

#[test]
fn symbol_is_permutation_invariant_through_cli() {
    let first_line = |a: &str, b: &str, c: &str| {
        let o = redei(&["symbol", a, b, c]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o)
            .lines()
            .next()
            .unwrap()
            .rsplit(' ')
            .next()
            .unwrap()
            .to_string()
    };
    let v = first_line("5", "29", "109");
    assert_eq!(first_line("29", "109", "5"), v);
    assert_eq!(first_line("109", "5", "29"), v);
}

#[test]
fn inadmissible_inputs_exit_three() {
    let o = redei(&["symbol", "5", "13", "17"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error: code=3 kind=inadmissible-pair:"));
    assert!(stderr(&o).contains("legendre(13,5) = -1"));

    let o = redei(&["symbol", "5", "5", "13"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("primes not distinct"));

    let o = redei(&["solve", "4", "13"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("4 is not prime"));

    let o = redei(&["symbol", "5", "29", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("kind=inadmissible-third-prime"));
}

#[test]
fn invalid_arguments_exit_two() {
    for args in [
        &["pairs", "--max-x", "50", "--threads", "0"][..],
        &["pairs", "--grid", "100,50"],
        &["pairs"],
        &["solve", "abc", "13"],
    ] {
        let o = redei(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn corrupt_checkpoint_exits_five() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.json");
    std::fs::write(&ck, "{not json").unwrap();
    let o = redei(&[
        "triples",
        "--max-x",
        "600",
        "--checkpoint",
        ck.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("kind=checkpoint-invalid"));
}

#[test]
fn checkpoint_for_other_grid_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.json");
    let ck_s = ck.to_str().unwrap();
    let o = redei(&[
        "sweep",
        "--mode",
        "pairs",
        "--max-x",
        "20000",
        "--checkpoint",
        ck_s,
        "--stop-after",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("sweep incomplete"));
    let o = redei(&[
        "sweep",
        "--mode",
        "pairs",
        "--max-x",
        "30000",
        "--checkpoint",
        ck_s,
    ]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn csv_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let json = dir.path().join("r.json");
    let o = redei(&[
        "rho",
        "5",
        "29",
        "--grid",
        "1000,5000",
        "--csv",
        csv.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    let csv_rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), csv_rows.len());
    for (row, line) in rows.iter().zip(csv_rows) {
        for (key, cell) in header.iter().zip(line.split(',')) {
            let v = &row[*key];
            let rendered = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(
                cell.parse::<f64>().unwrap(),
                rendered.parse::<f64>().unwrap(),
                "{key}"
            );
        }
    }
}

#[test]
fn bound_reports_both_fields() {
    let o = redei(&["bound", "5", "29", "--max-x", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().next().unwrap(),
        "x,label,main_term,error_bound,empirical,within_bound"
    );
    assert!(out.contains(",k1k2(i),"));
    assert!(out.contains(",k(i),"));
}

#[test]
fn oracle_check_passes() {
    let o = redei(&["oracle-check", "--max", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disagreements=0"));
}
