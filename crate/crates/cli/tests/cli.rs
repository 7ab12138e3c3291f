use e510wb_cli::{emit, run_suite, Format, Status, Suite, SuiteConfig};
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_e510wb"));
    for v in ["E510WB_WEIGHT_MAX", "E510WB_ARITY_MAX", "E510WB_DEGREE", "E510WB_SEED"] {
        c.env_remove(v);
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn same_config_same_bytes() {
    let a = run(&["cocycle", "--weight-max", "1"]);
    let b = run(&["cocycle", "--weight-max", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let cfg = SuiteConfig { weight_max: Some(1), ..SuiteConfig::new(Suite::Cocycle) };
    let lib = emit(&run_suite(&cfg).unwrap(), Format::Json);
    assert_eq!(lib.as_bytes(), &a.stdout[..]);
}

#[test]
fn report_shape() {
    let o = run(&["twist", "--weight-max", "4", "--degree", "3", "--seed", "7"]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["suite"], "twist");
    assert_eq!(r["seed"], 7);
    assert_eq!(r["passed"], true);
    assert_eq!(r["parameters"]["weight_max"], 4);
    assert!(r["elapsed_ms"].is_null());
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass" && c["elapsed_ms"].is_null()));
    assert!(checks.iter().any(|c| c["name"].as_str().unwrap().starts_with("control: ")));
    assert!(!r["anchors"].as_array().unwrap().is_empty());
}

#[test]
fn timing_is_opt_in() {
    let r = json(&run(&["cme-rep", "--timing"]));
    assert!(r["elapsed_ms"].is_u64());
    assert!(r["checks"][0]["elapsed_ms"].is_u64());
}

#[test]
fn markdown_has_a_table_per_check() {
    let o = run(&["transfer", "--degree", "2", "--format", "md"]);
    assert!(o.status.success());
    let md = String::from_utf8(o.stdout).unwrap();
    assert!(md.starts_with("# e510wb report: transfer"));
    let sections = md.lines().filter(|l| l.starts_with("## ") && !l.starts_with("## Anchors") && !l.starts_with("## Constants")).count();
    let tables = md.lines().filter(|l| *l == "| key | value |").count();
    assert_eq!(sections, 6);
    assert_eq!(tables, sections);
    assert!(md.contains("| lambda | 1/4 |"));
}

#[test]
fn module_command_aliases() {
    let a = json(&run(&["verify", "cocycle", "--weight-max", "0"]));
    let b = json(&run(&["cocycle", "--weight-max", "0"]));
    assert_eq!(a, b);
    let r = json(&run(&["embed", "check", "--brane", "m5", "--flux"]));
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 4);
    assert!(names.iter().all(|n| n.ends_with("m5")));
    assert!(names.iter().any(|n| n.starts_with("flux annihilation")));
    assert_eq!(json(&run(&["twist", "nonminimal", "--weight-max", "2", "--degree", "2"]))["suite"], "twist");
}

#[test]
fn char_commands() {
    let r = json(&run(&["char", "cy3", "--h11", "1", "--h12", "101"]));
    let d = &r["checks"][0]["data"];
    assert_eq!((d["vectors"].as_i64(), d["hypers"].as_i64(), d["gravity"].as_i64()), (Some(0), Some(102), Some(1)));
    assert_eq!(r["checks"][0]["status"], "measured");

    let r = json(&run(&["char", "index", "--degree", "2"]));
    let table = r["checks"][0]["data"]["index"].as_array().unwrap();
    // sorted (weight, multiplicity) pairs
    let ws: Vec<Vec<i64>> = table.iter().map(|p| p[0].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()).collect();
    assert!(ws.windows(2).all(|w| w[0] < w[1]));
    assert!(table.iter().any(|p| p[0] == serde_json::json!([1, 0, 0, 0, 0]) && p[1] == 1));

    let o = run(&["char", "nonminimal"]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["constants"]["nonminimal_ratio"], "-1");
    assert_eq!(r["checks"][0]["status"], "measured");
    assert_ne!(r["checks"][0]["data"]["residual"], "0");
}

#[test]
fn char_suite_carries_series_tables() {
    let cfg = SuiteConfig { degree: Some(6), ..SuiteConfig::new(Suite::Char) };
    let r = run_suite(&cfg).unwrap();
    assert!(r.passed);
    assert!(r.checks[0].data["index"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["jacobi", "--arity-max", "0"][..],
        &["e510", "--weight-max", ""],
        &["e510", "--weight-max", "99"],
        &["nosuch"],
        &["embed", "--brane", "m7"],
        &["eom", "check", "--preset", "custom-file"],
        &["char", "cy3", "--h11", "0", "--h12", "1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(o.stdout.is_empty());
    }
    let o = bin().args(["e510"]).env("E510WB_WEIGHT_MAX", "x").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_overrides_default_bounds() {
    let o = bin().args(["twist"]).env("E510WB_WEIGHT_MAX", "3").env("E510WB_DEGREE", "2").env("E510WB_SEED", "9").output().unwrap();
    let r = json(&o);
    assert_eq!(r["parameters"]["weight_max"], 3);
    assert_eq!(r["parameters"]["degree"], 2);
    assert_eq!(r["seed"], 9);
    // flags beat the environment
    let o = bin().args(["twist", "--weight-max", "2"]).env("E510WB_WEIGHT_MAX", "3").env("E510WB_DEGREE", "2").output().unwrap();
    assert_eq!(json(&o)["parameters"]["weight_max"], 2);
}

#[test]
fn eom_custom_file_and_failure_exit() {
    let good = tmp("rotation.fields");
    std::fs::write(&good, "[mu]\npv 1 odd\n1 * z^(0,1,0,0,0) * d1\n-1 * z^(1,0,0,0,0) * d2\n").unwrap();
    let out = tmp("rotation.json");
    let o = run(&["eom", "check", "--preset", "custom-file", "--file", good.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["passed"], true);

    // z1∂1 has divergence 1, so the ν equation fails
    let bad = tmp("dilation.fields");
    std::fs::write(&bad, "[mu]\npv 1 odd\n1 * z^(1,0,0,0,0) * d1\n").unwrap();
    let o = run(&["eom", "check", "--preset", "custom-file", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["checks"][0]["status"], "fail");
    assert_eq!(r["checks"][0]["witnesses"].as_array().unwrap().len(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("FAIL eom residual"));

    let o = run(&["eom", "check", "--preset", "custom-file", "--file", tmp("missing.fields").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn suite_names_parse() {
    for s in ["jacobi", "cme-rep", "e510", "cocycle", "transfer", "twist", "embed", "flux", "char", "all"] {
        assert_eq!(s.parse::<Suite>().unwrap().name(), s);
    }
    assert!("bogus".parse::<Suite>().is_err());
    let bad = SuiteConfig { degree: Some(-1), ..SuiteConfig::new(Suite::Char) };
    assert!(run_suite(&bad).is_err());
    let ok = run_suite(&SuiteConfig::new(Suite::CmeRep)).unwrap();
    assert!(ok.checks.iter().all(|c| c.status == Status::Pass));
}
