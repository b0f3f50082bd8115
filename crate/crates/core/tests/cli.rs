use std::path::PathBuf;
use std::process::{Command, Output};

fn hbcells(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbcells"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("HBCELLS_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {path:?}"));
    assert_eq!(actual, expected, "output differs from {name}");
}

#[test]
fn cells_six_table_matches_golden() {
    let o = hbcells(&["cells", "6", "--format", "table", "--group-by-h"]);
    assert_eq!(o.status.code(), Some(0));
    golden("cells_6_table.txt", &stdout(&o));

    let o = hbcells(&["cells", "6", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    golden("cells_6_flat_table.txt", &stdout(&o));
}

#[test]
fn cells_six_json_matches_golden() {
    let o = hbcells(&["cells", "6", "--format", "json", "--group-by-h"]);
    assert!(o.status.success());
    let text = stdout(&o);
    golden("cells_6.json", &text);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["groups"].as_array().unwrap().len(), 4);
    let cell = &doc["groups"][0]["cells"][0];
    let keys: Vec<&str> = cell.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = vec!["m", "E", "d", "U", "hilb", "H", "M", "N", "I", "dim", "dim_hom", "proven"];
    expected.sort_unstable();
    let mut keys_sorted = keys.clone();
    keys_sorted.sort_unstable();
    assert_eq!(keys_sorted, expected);
}

#[test]
fn one_point() {
    let o = hbcells(&["cells", "1", "--format", "json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["cells"].as_array().unwrap().len(), 1);
    assert_eq!(doc["cells"][0]["E"], serde_json::json!(["x", "y"]));
    assert_eq!(doc["cells"][0]["dim"], 0);
}

#[test]
fn single_cells() {
    let o = hbcells(&["cell", "2,4", "--format", "json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["dim_hom"], 3);
    assert_eq!(
        doc["M"],
        serde_json::json!([["y^2", "0"], ["-x + c1*y", "y^2"], ["c2 + c3*y", "-x + c4*y"]])
    );

    let o = hbcells(&["cell", "1,5,8,10"]);
    let text = stdout(&o);
    assert!(text.contains("dim      20"));
    assert!(text.contains("c17 + c18*y + c19*y^2"));
    assert!(text.contains("E        (x^4, x^3*y, x^2*y^5, x*y^8, y^10)"));

    let o = hbcells(&["cell", "[6]", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        doc["M"],
        serde_json::json!([["y^6"], ["-x + c1*y + c2*y^2 + c3*y^3 + c4*y^4 + c5*y^5"]])
    );
}

#[test]
fn strata_documents() {
    let o = hbcells(&["strata", "1,5,8,10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("V_5 = V(c1, c5, c6, c12, c13, c17)"));
    assert!(text.contains("V_2 = A^20 \\ V(c1*c6*c17)"));
    assert!(text.contains("coordinates c2, c10, c17, c20"));

    let o = hbcells(&["strata", "2,3,5,7", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ds: Vec<u64> = doc["strata"].as_array().unwrap().iter().map(|s| s["d"].as_u64().unwrap()).collect();
    assert_eq!(ds, vec![5, 4, 3]);
    assert_eq!(doc["strata"][0]["vanishing"], serde_json::json!(["c3", "c5", "c7", "c9", "c10"]));

    let o = hbcells(&["strata", "6", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["strata"].as_array().unwrap().len(), 1);
    assert_eq!(doc["strata"][0]["d"], 2);
    assert_eq!(doc["strata"][0]["vanishing"], serde_json::json!([]));

    let o = hbcells(&["strata", "1,1,2,2"]);
    assert!(o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("conjectural"));
}

#[test]
fn check_exit_codes() {
    let o = hbcells(&["check", "6", "--verify", "--trials", "25", "--field", "32003", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verification  pass"));

    let o = hbcells(&["check", "40"]);
    assert_eq!(o.status.code(), Some(0));

    let o = hbcells(&["check", "6", "--verify", "--format", "json", "--seed", "9"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["verification"]["seed"], 9);
    assert_eq!(doc["verification"]["cells"].as_array().unwrap().len(), 11);
}

#[test]
fn usage_errors() {
    for args in [
        vec!["check", "0"],
        vec!["cells", "0"],
        vec!["cells", "six"],
        vec!["check", "6", "--verify", "--field", "32004"],
        vec!["check", "6", "--verify", "--trials", "0"],
        vec!["cell", "3,2"],
        vec!["cell", "0,1"],
        vec!["cell", ""],
        vec!["frobnicate"],
    ] {
        let o = hbcells(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
