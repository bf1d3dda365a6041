use std::process::{Command, Output};

fn d2kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d2kit")).args(args).output().expect("d2kit runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("d2kit-cli-{}-{name}", std::process::id()))
}

#[test]
fn list_names_the_built_in_cases() {
    let o = d2kit(&["list"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("paper-matrix"));
    let j: serde_json::Value = serde_json::from_slice(&d2kit(&["list", "--json"]).stdout).unwrap();
    assert_eq!(j["schema_version"], 1);
    assert_eq!(j["cases"].as_array().unwrap().len(), d2kit::corpus::CASE_NAMES.len());
}

#[test]
fn transposition_subgroup_is_not_depth_two() {
    let path = tmp("s3.json");
    let o = d2kit(&["check", "--case", "s3-over-transposition", "--stages", "d2", "--json", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let d2 = j["stages"].as_array().unwrap().iter().find(|s| s["stage"] == "d2").unwrap();
    assert_eq!(d2["values"]["right_d2"], false);
    assert_eq!(d2["values"]["left_d2"], false);
    std::fs::remove_file(path).ok();
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let (p, q) = (tmp("a.json"), tmp("b.json"));
    for path in [&p, &q] {
        let o = d2kit(&["check", "--case", "m2-over-diagonal", "--seed", "7", "--json", path.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(&q).unwrap());
    std::fs::remove_file(p).ok();
    std::fs::remove_file(q).ok();
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(d2kit(&["check", "--case", "no-such-case"]).status.code(), Some(2));
    assert_eq!(d2kit(&["check", "--case", "scalars", "--dump", "nope"]).status.code(), Some(2));
    assert_eq!(d2kit(&["check", "--case", "d4-over-center", "--dim-cap", "4"]).status.code(), Some(2));
    let bad = tmp("bad.json");
    std::fs::write(&bad, "{\"B\": 1").unwrap();
    let o = d2kit(&["check", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    std::fs::remove_file(bad).ok();
}

#[test]
fn input_files_round_trip_through_the_cli() {
    let ext = d2kit::corpus::case("m2-over-diagonal", d2kit::linalg::Field::Rational).unwrap().extension;
    let path = tmp("ext.json");
    std::fs::write(&path, d2kit::io::extension_to_string(&ext)).unwrap();
    let o = d2kit(&["check", "--input", path.to_str().unwrap(), "--stages", "validate,centralizer,d2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("PASS\n"));
    std::fs::remove_file(path).ok();
}

#[test]
fn every_dump_target_is_valid_json() {
    for target in d2kit::dump::TARGETS {
        let o = d2kit(&["check", "--case", "m2-over-diagonal", "--dump", target]);
        assert!(o.status.success(), "{target}");
        let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(j["target"], *target);
    }
    let o = d2kit(&["check", "--case", "m2-over-diagonal", "--dump", "T"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["data"]["all_central"], true);
}

#[test]
fn upper_triangular_example_passes_every_stage() {
    let path = tmp("pm.json");
    let o = d2kit(&["check", "--case", "paper-matrix", "--json", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(j["passed"], true);
    assert!(j["expectations"].as_array().unwrap().iter().all(|e| e["passed"] == true));
    std::fs::remove_file(path).ok();
}

#[test]
fn dumped_quasibases_verify_after_reload() {
    let o = d2kit(&["check", "--case", "s3-over-a3", "--dump", "quasibases"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ext = d2kit::corpus::case("s3-over-a3", d2kit::linalg::Field::Rational).unwrap().extension;
    let f = ext.field();
    let parse = |v: &serde_json::Value| -> Vec<d2kit::linalg::Scalar> {
        v.as_array().unwrap().iter().map(|x| f.parse(x.as_str().unwrap()).unwrap()).collect()
    };
    for side in ["right", "left"] {
        let q = &j["data"][side];
        let pairs = q["pairs"].as_array().unwrap().iter().map(|p| (parse(&p["s"]), parse(&p["t"]))).collect();
        let side = serde_json::from_value(q["side"].clone()).unwrap();
        let qb = d2kit::depth2::Quasibase { side, pairs };
        assert!(d2kit::depth2::verify_quasibase(&ext, &qb));
    }
}
