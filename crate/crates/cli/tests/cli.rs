//! End-to-end tests of the `met-atlas` binary: command output, formats,
//! exit codes, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_met-atlas"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn orbit_dim_text_and_json() {
    let text = stdout(&[
        "orbit",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "dim",
    ]);
    assert_eq!(text, "dim O_[3,2,1] in sl_6 = 22\n");

    let json = stdout(&[
        "orbit",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "--format",
        "json",
        "dim",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let dim = v["dimension"].as_u64().unwrap();
    assert_eq!(dim % 2, 0);
    // The formula output agrees with the exact centralizer oracle.
    use met_atlas_core::orbit::{centralizer_dim_oracle, Algebra, AlgebraKind, NilpotentOrbit};
    let orbit = NilpotentOrbit::new(
        Algebra::new(AlgebraKind::Sl, 6).unwrap(),
        met_atlas_core::Partition::new(&[3, 2, 1]).unwrap(),
    )
    .unwrap();
    assert_eq!(dim as usize, centralizer_dim_oracle(&orbit, 10).unwrap());
}

#[test]
fn zero_orbit_has_dimension_zero() {
    let text = stdout(&[
        "orbit",
        "--algebra",
        "sl",
        "--n",
        "3",
        "--partition",
        "1,1,1",
        "dim",
    ]);
    assert!(text.ends_with("= 0\n"), "{text}");
}

#[test]
fn exponent_shorthand_is_accepted() {
    let a = stdout(&[
        "orbit",
        "--algebra",
        "sl",
        "--n",
        "7",
        "--partition",
        "2^2,1^3",
        "dim",
    ]);
    let b = stdout(&[
        "orbit",
        "--algebra",
        "sl",
        "--n",
        "7",
        "--partition",
        "2,2,1,1,1",
        "dim",
    ]);
    assert_eq!(a, b);
}

#[test]
fn strata_include_the_met_center() {
    let json = stdout(&[
        "orbit",
        "--algebra",
        "so",
        "--n",
        "10",
        "--partition",
        "4,4,1,1",
        "--format",
        "json",
        "strata",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let strata = v["strata"].as_array().unwrap();
    assert!(strata.iter().any(|s| s == &serde_json::json!([3, 3, 2, 2])));
}

#[test]
fn polarizations_listing() {
    let text = stdout(&[
        "polarizations",
        "--algebra",
        "so",
        "--n",
        "10",
        "--partition",
        "4,4,1,1",
    ]);
    assert!(text.contains("4 polarizations"));
    for label in ["Y_3223^+", "Y_3223^-", "Y_2332^+", "Y_2332^-"] {
        assert!(text.contains(label), "{text}");
    }
}

#[test]
fn graph_json_fixtures_and_round_trip() {
    let json = stdout(&[
        "graph",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);

    // Round trip: the JSON parses back into the very same graph.
    let parsed = met_atlas::serialize::graph_from_json(&json).unwrap();
    use met_atlas_core::orbit::{Algebra, AlgebraKind, NilpotentOrbit};
    let orbit = NilpotentOrbit::new(
        Algebra::new(AlgebraKind::Sl, 6).unwrap(),
        met_atlas_core::Partition::new(&[3, 2, 1]).unwrap(),
    )
    .unwrap();
    let built = met_atlas_core::build_graph(&orbit).unwrap();
    assert_eq!(parsed, built);

    let json = stdout(&[
        "graph",
        "--algebra",
        "so",
        "--n",
        "10",
        "--partition",
        "4,4,1,1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);

    let json = stdout(&[
        "graph",
        "--algebra",
        "sl",
        "--n",
        "5",
        "--partition",
        "2,2,1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"][0]["class"], "met");
    assert_eq!(v["edges"][0]["center"], serde_json::json!([2, 1, 1, 1]));
}

#[test]
fn graph_dot_styles() {
    let dot = stdout(&[
        "graph",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "--format",
        "dot",
    ]);
    assert!(dot.starts_with("graph met_atlas {"));
    assert!(dot.contains("style=solid, label=\"MET [3,1,1,1]\""));
    assert!(dot.contains("style=dashed"));

    let dot = stdout(&[
        "graph",
        "--algebra",
        "so",
        "--n",
        "10",
        "--partition",
        "4,4,1,1",
        "--format",
        "dot",
    ]);
    assert!(dot.contains("style=dashed, label=\"D-flop\""));
    assert!(dot.contains("style=solid, label=\"MET [3,3,2,2]\""));
}

#[test]
fn connect_reports_net_centers() {
    let text = stdout(&[
        "connect",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "--from",
        "Y_321",
        "--to",
        "Y_132",
    ]);
    assert!(text.contains("net MET centers: [2,2,2]"), "{text}");

    let text = stdout(&[
        "connect",
        "--algebra",
        "so",
        "--n",
        "10",
        "--partition",
        "4,4,1,1",
        "--from",
        "Y_3223^+",
        "--to",
        "Y_2332^+",
    ]);
    assert!(text.contains("path with 1 move(s)"));
    assert!(text.contains("MET center [3,3,2,2]"));

    let text = stdout(&[
        "connect",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "--from",
        "Y_321",
        "--to",
        "Y_321",
    ]);
    assert!(text.contains("empty path"));
    assert!(text.contains("net MET centers: none"));
}

#[test]
fn group_check_fixtures() {
    let json = stdout(&[
        "--format",
        "json",
        "group",
        "check",
        "--input",
        fixture("dihedral8.json").to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["group_order"], 8);
    assert_eq!(v["condition_holds"], false);
    assert_eq!(v["gl2_uniqueness"], false);

    let json = stdout(&[
        "--format",
        "json",
        "group",
        "check",
        "--input",
        fixture("klein.json").to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["group_order"], 4);
    assert_eq!(v["condition_holds"], true);
    assert_eq!(v["gl2_uniqueness"], true);
    assert_eq!(v["reflection_single_class"], false);

    let json = stdout(&[
        "--format",
        "json",
        "group",
        "check",
        "--input",
        fixture("identity.json").to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["group_order"], 1);
    assert_eq!(v["condition_holds"], true);
    assert_eq!(v["codim2_witnesses"].as_array().unwrap().len(), 0);
    assert_eq!(v["gl2_uniqueness"], true);
}

#[test]
fn exit_codes() {
    // Domain errors exit with 1.
    let out = run(&[
        "orbit",
        "--algebra",
        "sl",
        "--n",
        "5",
        "--partition",
        "3,-1",
        "dim",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "orbit",
        "--algebra",
        "sp",
        "--n",
        "4",
        "--partition",
        "3,1",
        "dim",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "graph",
        "--algebra",
        "sp",
        "--n",
        "4",
        "--partition",
        "2,1,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no polarization"));
    let out = run(&[
        "connect",
        "--algebra",
        "sl",
        "--n",
        "6",
        "--partition",
        "3,2,1",
        "--from",
        "Y_321",
        "--to",
        "Y_999",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // Usage errors exit with 2 (clap's convention).
    let out = run(&[
        "orbit",
        "--algebra",
        "xx",
        "--n",
        "5",
        "--partition",
        "3,2",
        "dim",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closure_cap_env_override() {
    let out = bin()
        .args([
            "group",
            "check",
            "--input",
            fixture("dihedral8.json").to_str().unwrap(),
        ])
        .env("MET_ATLAS_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec![
            "graph",
            "--algebra",
            "so",
            "--n",
            "10",
            "--partition",
            "4,4,1,1",
            "--format",
            "json",
        ],
        vec![
            "graph",
            "--algebra",
            "sl",
            "--n",
            "6",
            "--partition",
            "3,2,1",
            "--format",
            "dot",
        ],
    ] {
        let a = stdout(&args);
        let b = stdout(&args);
        assert_eq!(a, b);
    }
    let dihedral = fixture("dihedral8.json");
    let args = vec![
        "--format",
        "json",
        "group",
        "check",
        "--input",
        dihedral.to_str().unwrap(),
    ];
    assert_eq!(stdout(&args), stdout(&args));
}
