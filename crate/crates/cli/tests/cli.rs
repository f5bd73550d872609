use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use skewbrace::brace_file;
use skewbrace::enumeration::catalog_group;
use skewbrace::{CayleyGroup, SkewBrace};

fn skewbrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewbrace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn write_brace(dir: &Path, name: &str, b: &SkewBrace) -> String {
    write(dir, name, &brace_file::format(b))
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn sylow_on_trivial_z6() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_brace(
        dir.path(),
        "z6_trivial.brace",
        &SkewBrace::trivial(&CayleyGroup::cyclic(6)),
    );
    let o = skewbrace(&["sylow", "-p", "2", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{0, 3}\n");

    let o = skewbrace(&["sylow", "-p", "3", "--trace", &f]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "{0, 2, 4}");
    assert_eq!(lines[1], "sylow trace for primes [3]");
    assert_eq!(lines.len(), 3, "one recorded step:\n{out}");
    assert!(
        lines[2].contains("ideal {0, 3} of order 2: normal-complement"),
        "{out}"
    );

    let o = skewbrace(&["--brute-force", "sylow", "-p", "3", &f]);
    assert_eq!(stdout(&o), "{0, 2, 4}\n");
}

#[test]
fn hall_on_trivial_z30() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_brace(
        dir.path(),
        "z30.brace",
        &SkewBrace::trivial(&CayleyGroup::cyclic(30)),
    );
    let o = skewbrace(&["hall", "--primes", "2,5", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{0, 3, 6, 9, 12, 15, 18, 21, 24, 27}\n");

    let o = skewbrace(&[
        "--format",
        "structured",
        "--trace",
        "hall",
        "--primes",
        "5,2",
        &f,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], "skewbrace/1");
    assert_eq!(doc["command"], "hall");
    assert_eq!(doc["primes"], serde_json::json!([2, 5]));
    assert_eq!(doc["result"].as_array().unwrap().len(), 10);
    assert!(!doc["trace"]["steps"].as_array().unwrap().is_empty());
}

#[test]
fn a4_is_not_supersoluble() {
    let dir = tempfile::tempdir().unwrap();
    let a4 = catalog_group("A4").unwrap().group;
    let f = write_brace(dir.path(), "a4_trivial.brace", &SkewBrace::trivial(&a4));
    let o = skewbrace(&["supersoluble", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\n");

    let o = skewbrace(&["sylow", "-p", "2", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--brute-force"));

    let o = skewbrace(&["--brute-force", "sylow", "-p", "2", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim().matches(',').count(), 3);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // Z4 with 1 and 2 swapped as the multiplication over Z4: a valid pair of
    // groups that breaks the brace axiom.
    let swap = [0, 2, 1, 3];
    let add = CayleyGroup::cyclic(4).rows();
    let mul: Vec<Vec<usize>> = (0..4)
        .map(|x| (0..4).map(|y| swap[(swap[x] + swap[y]) % 4]).collect())
        .collect();
    let mut text = String::from("# broken\norder 4\nadd\n");
    for rows in [&add, &mul] {
        for r in rows.iter() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            text.push_str(&cells.join(" "));
            text.push('\n');
        }
        if std::ptr::eq(rows, &add) {
            text.push_str("mul\n");
        }
    }
    let f = write(dir.path(), "broken.brace", &text);
    let o = skewbrace(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("brace axiom fails at (x, y, z) = ("),
        "{}",
        stderr(&o)
    );

    let garbled = write(dir.path(), "garbled.brace", "order 2\nadd\n0 1\n1 x\n");
    let o = skewbrace(&["verify", garbled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"));

    let o = skewbrace(&["verify", dir.path().join("missing.brace").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let ok = write_brace(
        dir.path(),
        "z2.brace",
        &SkewBrace::trivial(&CayleyGroup::cyclic(2)),
    );
    assert_eq!(skewbrace(&["sylow", "-p", "4", &ok]).status.code(), Some(2));
    assert_eq!(skewbrace(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        skewbrace(&["enumerate", "--order", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        skewbrace(&["enumerate", "--order", "6", "--group", "Q8"])
            .status
            .code(),
        Some(2)
    );
    let o = skewbrace(&["verify", &ok]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid skew brace of order 2"));
}

#[test]
fn opposite_twice_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = catalog_group("S3").unwrap().group;
    let original = write_brace(dir.path(), "s3.brace", &SkewBrace::almost_trivial(&s3));
    let once = skewbrace(&["opposite", &original]);
    assert_eq!(once.status.code(), Some(0));
    let once_path = write(dir.path(), "once.brace", &stdout(&once));
    assert_eq!(stdout(&once), brace_file::format(&SkewBrace::trivial(&s3)));
    let twice = skewbrace(&["opposite", once_path.to_str().unwrap()]);
    assert_eq!(
        stdout(&twice).as_bytes(),
        fs::read(&original).unwrap().as_slice()
    );
}

#[test]
fn enumerate_counts() {
    let o = skewbrace(&["enumerate", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# Z3: 1 skew braces\n"));
    let o = skewbrace(&[
        "--format",
        "structured",
        "enumerate",
        "--order",
        "6",
        "--group",
        "S3",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["groups"][0]["count"], 8);
}

#[test]
fn corpus_and_check_theorems() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let o = skewbrace(&[
        "corpus",
        "--max-order",
        "30",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.contains(&"1_Z1_0.brace".to_string()));
    assert!(names.contains(&"30_D15_95.brace".to_string()));
    for name in names.iter().filter(|n| n.starts_with("6_")) {
        let text = fs::read_to_string(out.join(name)).unwrap();
        assert_eq!(brace_file::format(&brace_file::parse(&text).unwrap()), text);
    }

    // Deterministic output: a second run writes identical files.
    let again = dir.path().join("again");
    skewbrace(&[
        "corpus",
        "--max-order",
        "30",
        "--out",
        again.to_str().unwrap(),
    ]);
    for name in &names {
        assert_eq!(
            fs::read(out.join(name)).unwrap(),
            fs::read(again.join(name)).unwrap()
        );
    }

    let o = skewbrace(&["check-theorems", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains(" with failed checks"));
    assert!(stdout(&o).trim_end().ends_with("0 with failed checks"));
}
