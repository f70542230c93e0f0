use std::process::Command;

use farey_cli::{run, EXIT_DOMAIN, EXIT_USAGE};

fn ok(args: &[&str]) -> String {
    let r = run(args.iter().copied());
    assert_eq!(r.exit_code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

#[test]
fn ideal_metric_example() {
    let out = ok(&[
        "ideal",
        "metric",
        "--theta1",
        "0;1000,(1)",
        "--theta2",
        "0;1,(1)",
        "--depth",
        "8",
    ]);
    assert_eq!(out.trim(), "2^-2 = 0.25");
    let r = run([
        "ideal",
        "metric",
        "--theta1",
        "0;1000,(1)",
        "--theta2",
        "0;1,(1)",
        "--depth",
        "8",
        "--json",
    ]);
    let data = r.data.unwrap();
    assert_eq!(data["exact"], "1/4");
    assert_eq!(data["decimal_f64"], 0.25);
}

#[test]
fn deep_metric_is_exact() {
    let r = run([
        "ideal",
        "metric",
        "--theta1",
        "0;1000,(1)",
        "--theta2",
        "0;999,(1)",
        "--depth",
        "1001",
        "--json",
    ]);
    assert_eq!(r.exit_code, 0);
    let exact = r.data.unwrap()["exact"].as_str().unwrap().to_string();
    let (one, den) = exact.split_once('/').unwrap();
    assert_eq!(one, "1");
    assert_eq!(
        den.parse::<num_bigint::BigUint>().unwrap(),
        num_bigint::BigUint::from(1u8) << 1000usize
    );
}

#[test]
fn farey_csv_example() {
    let out = ok(&["farey", "level", "3", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "k,q,p,r_num,r_den");
    assert_eq!(lines.len(), 6);
    assert_eq!(*lines.last().unwrap(), "4,1,1,1,1");
}

#[test]
fn cf_json_uses_decimal_strings() {
    let r = run(["cf", "--periodic", "0;(1)", "--depth", "90", "--json"]);
    let data = r.data.unwrap();
    assert_eq!(data["terms"].as_array().unwrap().len(), 91);
    let last = &data["convergents"][90];
    assert_eq!(last["n"], 90);
    // F_91 exceeds u64, so it must travel as a string
    assert_eq!(last["q"], "4660046610375530309");
    let r = run(["cf", "--rational", "3/8"]);
    assert!(r.stdout.contains("terms: 0,2,1,2"));
}

#[test]
fn theta_views() {
    let out = ok(&[
        "theta", "ideal", "--cf", "0;(1)", "--depth", "3", "--blocks",
    ]);
    assert!(out.contains("level 3: [0, 1, 4]"));
    let out = ok(&["theta", "ideal", "--cf", "0;(1)", "--depth", "3", "--beta"]);
    assert!(out.contains("β(3) = 1/13"));
    let out = ok(&[
        "theta",
        "ideal",
        "--cf",
        "0;3,(1)",
        "--depth",
        "3",
        "--trace-coeffs",
    ]);
    assert!(out.contains("c(1) = -1·θ + 1"));
    assert!(out.contains("c(3) = -3·θ + 1"));
    let r = run([
        "theta",
        "ideal",
        "--cf",
        "0;(1)",
        "--depth",
        "3",
        "--diagram",
        "--json",
    ]);
    assert_eq!(r.data.unwrap()["levels"][3], serde_json::json!([0, 1, 4]));
    let r = run([
        "theta", "ideal", "--cf", "0;(1)", "--depth", "3", "--beta", "--blocks",
    ]);
    assert_eq!(r.exit_code, EXIT_USAGE);
}

#[test]
fn diagrams_in_json_and_dot() {
    let r = run(["diagram", "farey", "2", "--json"]);
    let data = r.data.unwrap();
    assert_eq!(
        data["levels"][2]["labels"],
        serde_json::json!(["1", "2", "1"])
    );
    let dot = ok(&["diagram", "effros-shen", "0;(2)", "2", "--dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"0_0\" -> \"1_0\" [label=\"2\"]"));
    let q = run(["diagram", "quotient", "--theta", "0;(1)", "3", "--json"]);
    assert_eq!(
        q.data.unwrap()["levels"][3]["labels"],
        serde_json::json!(["2", "3"])
    );
}

#[test]
fn enumerate_from_inline_diagram() {
    let toy = r#"{"levels":[{"labels":[1]},{"labels":[1,1]}],"matrices":[[[1],[1]]]}"#;
    let r = run([
        "ideal",
        "enumerate",
        "--diagram",
        toy,
        "--depth",
        "1",
        "--json",
    ]);
    assert_eq!(r.data.unwrap()["ideals"].as_array().unwrap().len(), 4);
}

#[test]
fn two_point_mk() {
    let chain =
        r#"{"blocks":[[1],[1,1]],"matrices":[[[1],[1]]],"trace":["1/2","1/2"],"beta":["1","1/2"]}"#;
    let r = run([
        "qmetric",
        "mk",
        "--chain",
        chain,
        "--phi",
        r#"{"weights":[1,0]}"#,
        "--psi",
        r#"{"weights":[0,1]}"#,
        "--json",
    ]);
    assert_eq!(r.exit_code, 0, "{}", r.stderr);
    let v = r.data.unwrap()["value_f64"].as_f64().unwrap();
    assert!((v - 2.0).abs() < 1e-6);
}

#[test]
fn error_exit_codes() {
    assert_eq!(run(["frobnicate"]).exit_code, EXIT_USAGE);
    assert_eq!(
        run(["farey", "level", "3", "--bogus"]).exit_code,
        EXIT_USAGE
    );
    assert_eq!(run(["farey", "level", "3", "--dot"]).exit_code, EXIT_USAGE);
    let r = run(["theta", "ideal", "--cf", "0;2", "--depth", "3"]);
    assert_eq!(r.exit_code, EXIT_DOMAIN);
    assert!(r.stderr.contains("1/2"), "{}", r.stderr);
    assert_eq!(run(["farey", "level", "40"]).exit_code, EXIT_DOMAIN);
    assert_eq!(run(["cf", "--rational", "3/2"]).exit_code, EXIT_DOMAIN);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "theta",
        "ideal",
        "--cf",
        "0;2,(1,3)",
        "--depth",
        "12",
        "--trace-coeffs",
        "--json",
    ];
    assert_eq!(run(args).stdout, run(args).stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_farey-ideals");
    let out = Command::new(bin)
        .args([
            "ideal",
            "metric",
            "--theta1",
            "0;1000,(1)",
            "--theta2",
            "0;1,(1)",
            "--depth",
            "8",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2^-2 = 0.25\n");
    let out = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = Command::new(bin)
        .args(["cf", "--terms", "0;0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
}
