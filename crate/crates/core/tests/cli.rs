use std::process::{Command, Output};

fn foulkes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foulkes"))
        .args(args)
        .env_remove("FOULKES_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn multiplicity_reports_value_and_rules() {
    let o = foulkes(&["multiplicity", "2", "2", "--lambda", "3,1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("= 0"), "{text}");
    assert!(text.contains("predicted-by:") && text.contains("hook-theorem"), "{text}");

    let o = foulkes(&["multiplicity", "3", "4", "--lambda", "6,3,2,1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s = foulkes::foulkes::FoulkesShape::new(3, 4).unwrap();
    let m = foulkes::foulkes::multiplicity(s, &"6,3,2,1".parse().unwrap()).unwrap();
    assert_eq!(doc["multiplicity"], m.to_string().parse::<u64>().unwrap());
    assert_eq!(doc["predicted_by"][0], "main-theorem");
}

#[test]
fn multiplicity_rejects_wrong_weight() {
    let o = foulkes(&["multiplicity", "2", "2", "--lambda", "5"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("weight"));
    assert_eq!(code(&foulkes(&["multiplicity", "2", "2", "--lambda", "3,x"])), 2);
}

#[test]
fn decompose_tables() {
    let o = foulkes(&["decompose", "2", "3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).take_while(|l| !l.starts_with("dimension")).collect();
    assert_eq!(rows.len(), 3);
    assert!(text.contains("dimension sum 15 = "));

    let o = foulkes(&["decompose", "1", "5"]);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("5 "));

    assert_eq!(stdout(&foulkes(&["decompose", "2", "2", "--format", "json"])), golden("decompose_2_2.json"));
    assert_eq!(
        stdout(&foulkes(&["decompose", "2", "3", "--all", "--format", "csv"])),
        golden("decompose_2_3_all.csv")
    );
}

#[test]
fn output_is_deterministic_and_fast_paths_are_invisible() {
    for fmt in ["json", "csv", "table"] {
        let base = ["decompose", "3", "4", "--all", "--format", fmt];
        let first = stdout(&foulkes(&base));
        assert_eq!(first, stdout(&foulkes(&[&base[..], &["--threads", "1"]].concat())));
        assert_eq!(first, stdout(&foulkes(&[&base[..], &["--no-fastpath"]].concat())));
        let per = [&base[..], &["--engine", "per-partition"]].concat();
        assert_eq!(first, stdout(&foulkes(&per)));
    }
    let with = stdout(&foulkes(&["multiplicity", "3", "4", "--lambda", "3,3,3,3"]));
    let without = stdout(&foulkes(&["multiplicity", "3", "4", "--lambda", "3,3,3,3", "--no-fastpath"]));
    assert_eq!(with, without);
}

#[test]
fn budget_limits() {
    assert_eq!(code(&foulkes(&["decompose", "5", "5"])), 3);
    assert_eq!(code(&foulkes(&["decompose", "5", "5", "--max-ab", "10"])), 3);
    assert_eq!(code(&foulkes(&["census", "3", "10"])), 3);
    assert_eq!(code(&foulkes(&["census", "4", "8", "--allow-large"])), 3);
    assert_eq!(code(&foulkes(&["decompose", "4", "4", "--time-limit", "0"])), 3);
}

#[test]
fn census_counts() {
    let o = foulkes(&["census", "3", "10", "--allow-large", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc["zero"].as_u64(), doc["predicted"].as_u64()), (Some(1909), Some(492)));

    let o = foulkes(&["census", "3", "10", "--allow-large"]);
    assert!(stdout(&o).contains("zero=1909 predicted=492"));

    for (a, b, nonzero) in [(2, 3, 3), (1, 4, 1)] {
        let o = foulkes(&["census", &a.to_string(), &b.to_string(), "--format", "json"]);
        let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(doc["zero"].as_u64().unwrap() + nonzero, doc["total"].as_u64().unwrap());
    }
}

#[test]
fn verify_exit_codes() {
    for (a, b) in [("2", "4"), ("3", "3"), ("1", "6")] {
        let o = foulkes(&["verify", a, b]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
    }
}

#[test]
fn restriction_tables() {
    let o = foulkes(&["restrict", "2", "2", "2"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .skip(1)
        .take(2)
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    assert_eq!(rows, vec![vec!["2", "1"], vec!["1,1", "2"]]);

    let o = foulkes(&["restrict", "3", "3", "0"]);
    assert_eq!(stdout(&o).lines().nth(1).unwrap().split_whitespace().collect::<Vec<_>>(), ["()", "280"]);

    assert_eq!(stdout(&foulkes(&["restrict", "3", "3", "2", "--format", "json"])), golden("restrict_3_3_2.json"));
    assert_eq!(code(&foulkes(&["restrict", "2", "2", "4"])), 2);
}

#[test]
fn hook_coordinates() {
    let o = foulkes(&["hook-coords", "--n", "12", "--lambda", "7,3,1,1"]);
    assert!(stdout(&o).contains("k=3 α=2"));
    let o = foulkes(&["hook-coords", "--n", "6", "--lambda", "6"]);
    assert!(stdout(&o).contains("k=0 α=()"));
    let o = foulkes(&["hook-coords", "--n", "12", "--k", "3", "--alpha", "2"]);
    assert!(stdout(&o).contains("lambda: 7,3,1,1"));
    assert_eq!(code(&foulkes(&["hook-coords", "--n", "9", "--k", "3", "--alpha", "3"])), 2);
    assert_eq!(code(&foulkes(&["hook-coords", "--n", "9", "--lambda", "3,3"])), 2);
}

#[test]
fn row_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["multiplicity", "3", "4", "--lambda", "8,2,2"];
    let plain = stdout(&foulkes(&args));
    for _ in 0..2 {
        let o = Command::new(env!("CARGO_BIN_EXE_foulkes"))
            .args(args)
            .env("FOULKES_CACHE_DIR", dir.path())
            .output()
            .unwrap();
        assert_eq!(stdout(&o), plain);
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn help_and_usage() {
    assert_eq!(code(&foulkes(&["--help"])), 0);
    assert_eq!(code(&foulkes(&["frobnicate"])), 2);
}
