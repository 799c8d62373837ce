use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn thickness(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thickness"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k1nn_18.json");
    let o = thickness(&["gen", "--family", "k1nn", "--n", "18", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let o = thickness(&["verify", path(&file), "--expect-count", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = thickness(&["verify", path(&file), "--expect-count", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn formula_prints_value() {
    let o = thickness(&["formula", "--family", "k2nn", "--n", "17"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn gen_is_deterministic() {
    let a = thickness(&["gen", "--family", "k11nn", "--n", "21"]);
    let b = thickness(&["gen", "--family", "k11nn", "--n", "21"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tampered_file_names_the_edge() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    let o = thickness(&["gen", "--family", "k2nn", "--n", "5", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&file).unwrap();
    // drop the first edge of the first page
    let start = text.find("[[").unwrap() + 1;
    let end = text[start..].find("], ").unwrap() + start + 3;
    let dropped = text[start..end - 2].to_string();
    fs::write(&file, format!("{}{}", &text[..start], &text[end..])).unwrap();
    let o = thickness(&["verify", path(&file)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let labels: Vec<&str> = dropped
        .trim_matches(|c| c == '[' || c == ']')
        .split(", ")
        .map(|s| s.trim_matches('"'))
        .collect();
    assert!(
        out.contains(&format!("missing edge {}-{}", labels[0], labels[1])),
        "{out}"
    );
}

#[test]
fn invalid_input_exits_2() {
    let o = thickness(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    let o = thickness(&["gen", "--family", "k3nn", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = thickness(&["gen", "--family", "knn", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = thickness(&["verify", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    let doc = "{\"schema\": \"thickness-decomposition/v1\", \"family\": \"k2nn\", \"n\": 5, \
               \"part_sizes\": [2, 5, 5], \"pages\": [[[\"u1\", \"u2\"]]], \"provenance\": \"\"}";
    fs::write(&file, doc).unwrap();
    let o = thickness(&["verify", path(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("page 1, edge 1"));
}

#[test]
fn oracle_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let witness = dir.path().join("w.json");

    fs::write(
        &graph,
        r#"{"schema": "thickness-graph/v1", "part_sizes": [1, 3, 3]}"#,
    )
    .unwrap();
    let o = thickness(&[
        "oracle",
        "--file",
        path(&graph),
        "--witness",
        path(&witness),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("thickness 2"));
    let o = thickness(&["verify", path(&witness), "--expect-count", "2"]);
    assert_eq!(o.status.code(), Some(0));

    // the octahedron is planar; the K_{2,n,n} formula says 2
    fs::write(
        &graph,
        r#"{"schema": "thickness-graph/v1", "part_sizes": [2, 2, 2]}"#,
    )
    .unwrap();
    let o = thickness(&["oracle", "--file", path(&graph)]);
    assert_eq!(o.status.code(), Some(1));

    fs::write(
        &graph,
        r#"{"schema": "thickness-graph/v1", "part_sizes": [2, 4, 4]}"#,
    )
    .unwrap();
    let o = thickness(&["oracle", "--file", path(&graph), "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));

    fs::write(
        &graph,
        r#"{"schema": "thickness-graph/v1", "edges": [["a","b"],["b","c"],["c","a"]]}"#,
    )
    .unwrap();
    let o = thickness(&[
        "oracle",
        "--file",
        path(&graph),
        "--witness",
        path(&witness),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&witness).unwrap().contains("\"custom\""));
}

#[test]
fn base_and_export_dot() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("base.json");
    let o = thickness(&["base", "--p", "1", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let out = dir.path().join("dot");
    let o = thickness(&[
        "export-dot",
        path(&file),
        "--mode",
        "per-page",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let edges = |name: &str| {
        fs::read_to_string(out.join(name))
            .unwrap()
            .matches(" -- ")
            .count()
    };
    assert_eq!((edges("page_1.dot"), edges("page_2.dot")), (12, 4));

    let o = thickness(&["gen", "--family", "k1nn", "--n", "6", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let o = thickness(&[
        "export-dot",
        path(&file),
        "--mode",
        "colored-union",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(edges("union.dot"), 48);
}

#[test]
fn selftest_small_cap() {
    let o = thickness(&["selftest", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.contains("[EXPECTED-DIVERGENCE] 4."));
}
