use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use twistkit_core::eggbox::EggBox;

fn twistkit(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistkit"))
        .args(args)
        .env("TWISTKIT_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const P2: &str = "zeroinf|q=inf|P:2|canonical";

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "--family", "B", "--n", "3", "--twisting", "canonical", "--checks", "cocycle,tight"], 0),
        (&["verify", "--family", "PB", "--n", "2", "--twisting", "canonical", "--checks", "tight"], 1),
        (&["verify", "--family", "TL", "--n", "3", "--twisting", "rank"], 1),
        (&["verify", "--family", "Mat", "--n", "2", "--p", "3", "--twisting", "rank", "--checks", "tight,star"], 0),
        (&["verify", "--family", "PT", "--n", "3", "--twisting", "canonical"], 2),
        (&["verify", "--family", "P", "--n", "2", "--twisting", "wobbly"], 2),
        (&["verify", "--family", "P", "--n", "2", "--checks", "cocycle,nonsense"], 2),
        (&["enumerate", "--family", "Q", "--n", "2"], 2),
        (&["enumerate", "--family", "P", "--n", "9"], 3),
        (&["enumerate", "--family", "Mat", "--n", "4", "--p", "3"], 3),
        (&["product", "--spec", P2, "--crosscheck"], 0),
        (&["product", "--spec", "zeroinf|q=inf|P:2|rank", "--green", "--crosscheck"], 1),
        (&["product", "--spec", "zeroinf|q=7|P:2|canonical"], 2),
        (&["product", "--spec", "zeroinf|P:2|canonical"], 2),
        (&["product", "--spec", "int|q=1|P:2|canonical", "--green"], 2),
        (&["product", "--spec", "zeroinf|q=inf|P:4|canonical"], 3),
        (&["ig", "--spec", "nat|q=1|P:2|canonical", "--window", "6"], 0),
        (&["ig", "--spec", "zmod:2|q=1|B:3|rank"], 0),
        (&["ig", "--spec", "zmod:2|q=1|B:3|rank", "--window", "3"], 2),
        (&["eggbox", "--format", "ascii"], 2),
        (&["cache", "--stats"], 0),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let o = twistkit(dir.path(), args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}\n{}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn verify_prints_status_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let o = twistkit(dir.path(), &["verify", "--family", "B", "--n", "3", "--checks", "cocycle,tight"]);
    assert!(stdout(&o).contains("tight: PASS/PASS"));
    let o = twistkit(dir.path(), &["verify", "--family", "PB", "--n", "2", "--checks", "tight"]);
    let out = stdout(&o);
    assert!(out.contains("tight: FAIL/FAIL"));
    assert!(out.contains("witness: 12|1'|2', 12|1'2'"), "{out}");
    assert!(out.contains("alternative 1|1'2'|2 -> 2"), "{out}");
}

#[test]
fn eggbox_has_six_grids_and_is_cache_independent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["eggbox", "--spec", P2, "--format", "ascii"];
    let cold = twistkit(dir.path(), &args);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(stdout(&cold).lines().filter(|l| l.starts_with('D')).count(), 6);
    let warm = twistkit(dir.path(), &args);
    assert_eq!(stdout(&cold), stdout(&warm));
    let uncached = twistkit(dir.path(), &["--no-cache", "eggbox", "--spec", P2, "--format", "ascii"]);
    assert_eq!(stdout(&cold), stdout(&uncached));
    let single = Command::new(env!("CARGO_BIN_EXE_twistkit"))
        .args(args)
        .env("TWISTKIT_CACHE", dir.path())
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&cold), stdout(&single));
}

#[test]
fn corrupt_entry_is_a_miss_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["product", "--spec", P2, "--green"];
    let first = twistkit(dir.path(), &args);
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    fs::write(&entries[0], b"garbage").unwrap();
    let second = twistkit(dir.path(), &args);
    assert_eq!(second.status.code(), Some(0));
    assert!(stderr(&second).contains("warning"), "{}", stderr(&second));
    assert_eq!(stdout(&first), stdout(&second));
    // the entry was rewritten
    let third = twistkit(dir.path(), &args);
    assert!(!stderr(&third).contains("warning"));
}

#[test]
fn cache_dir_flag_overrides_env_and_clear_empties() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    twistkit(env_dir.path(), &["--cache-dir", flag, "product", "--spec", P2, "--green"]);
    assert_eq!(fs::read_dir(flag_dir.path()).unwrap().count(), 1);
    assert_eq!(fs::read_dir(env_dir.path()).unwrap().count(), 0);
    let o = twistkit(env_dir.path(), &["--cache-dir", flag, "cache", "--stats"]);
    assert!(stdout(&o).contains("entries: 1"));
    let o = twistkit(env_dir.path(), &["--cache-dir", flag, "cache", "--clear"]);
    assert!(stdout(&o).contains("removed 1"));
    assert_eq!(fs::read_dir(flag_dir.path()).unwrap().count(), 0);
}

#[test]
fn unwritable_cache_is_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("file");
    fs::write(&file, b"").unwrap();
    let o = twistkit(&file.join("cache"), &["product", "--spec", P2, "--green"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("cache disabled"));
}

#[test]
fn eggbox_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p2.json");
    let o = twistkit(
        dir.path(),
        &["eggbox", "--family", "P", "--n", "2", "--format", "json", "--out", out.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    let e = EggBox::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    let mut shapes: Vec<(usize, usize)> = e.dclasses.iter().map(|d| (d.rows, d.cols)).collect();
    shapes.sort();
    assert_eq!(shapes, vec![(1, 1), (2, 2), (3, 3)]);
    let o = twistkit(dir.path(), &["eggbox", "--family", "P", "--n", "2", "--format", "dot"]);
    assert_eq!(stdout(&o).matches("[label=").count(), 3);
}

#[test]
fn enumerate_json_parses() {
    let dir = tempfile::tempdir().unwrap();
    let o = twistkit(dir.path(), &["enumerate", "--family", "TL", "--n", "4", "--json"]);
    let els: Vec<twistkit_core::Partition> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(els.len(), 14);
    let o = twistkit(dir.path(), &["enumerate", "--family", "PT", "--n", "2"]);
    assert!(stdout(&o).starts_with("# PT:2: 9 elements"));
}

#[test]
fn table_monoid_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    fs::write(&path, r#"{"elements":["0","w"],"zero":"0","add":[["0","w"],["w","w"]]}"#).unwrap();
    let spec = format!("table:{}|q=w|B:3|canonical", path.display());
    let o = twistkit(dir.path(), &["product", "--spec", &spec, "--crosscheck"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("size: 30"));
}
