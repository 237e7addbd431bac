use std::process::{Command, Output};

use deformed_hurwitz::exactalg::UniPoly;
use deformed_hurwitz::hurwitz::{times_mu, Family};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_dhurwitz"));
    c.args(args).env_remove("DHURWITZ_THREADS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("spawn")
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn hurwitz_examples() {
    let v = json(&run(&["hurwitz", "--family", "monotone", "--genus", "1", "--parts", "3", "--times-mu"]));
    assert_eq!(v["value"], "5t^2+5t");
    let v = json(&run(&["hurwitz", "--family", "dessin", "--genus", "0", "--parts", "2,2", "--times-mu"]));
    assert_eq!(v["value"], "4t^3+10t^2+4t");
    let v = json(&run(&["dessins", "--genus", "1", "--parts", "3"]));
    assert_eq!(v["value"], "t/3");
    assert_eq!(v["coefficients"], serde_json::json!(["0", "1/3"]));
}

#[test]
fn weingarten_k0() {
    let v = json(&run(&["weingarten", "--k", "0"]));
    assert_eq!(v["table"], serde_json::json!({"()": "1"}));
    let v = json(&run(&["weingarten", "--k", "2", "--method", "orthogonality"]));
    assert_eq!(v["table"]["(12)"], "-M(M-N)/(N(N^2-1))");
}

#[test]
fn json_round_trips() {
    for (fam, g, parts) in [("monotone", "2", "3,1"), ("dessin", "1", "4,1,1")] {
        let v = json(&run(&["hurwitz", "--family", fam, "--genus", g, "--parts", parts]));
        let p = UniPoly::parse_pretty(v["value"].as_str().unwrap(), "t").unwrap();
        let mu: Vec<usize> = parts.split(',').map(|x| x.parse().unwrap()).collect();
        let f: Family = fam.parse().unwrap();
        assert_eq!(p, f.value(g.parse().unwrap(), &mu));
        let tm = json(&run(&["hurwitz", "--family", fam, "--genus", g, "--parts", parts, "--times-mu"]));
        assert_eq!(UniPoly::parse_pretty(tm["value"].as_str().unwrap(), "t").unwrap(), times_mu(&p, &mu));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hurwitz", "--genus", "1", "--parts", "x"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["tr", "--gn", "0,3", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["tr", "--gn", "2,3"]).status.code(), Some(2));
    assert_eq!(run(&["weingarten", "--k", "9"]).status.code(), Some(2));
    assert_eq!(run(&["plot", "--parts", "3", "--genus", "2..1"]).status.code(), Some(2));
    assert_eq!(run(&["--threads", "0", "weingarten", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn deterministic_across_thread_counts() {
    let args = ["roots", "scan", "--family", "dessin", "--genus", "0..1", "--n-max", "2", "--weight-max", "6"];
    let a = run_env(&args, &[("DHURWITZ_THREADS", "1")]);
    let b = run_env(&args, &[("DHURWITZ_THREADS", "3")]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["roots", "table", "--parts", "3,1", "--genus", "0..4", "--format", "csv"];
    assert_eq!(run(&["--threads", "1"].iter().chain(&args).copied().collect::<Vec<_>>()).stdout, run(&args).stdout);
    assert_eq!(run(&["plot", "--parts", "3,1", "--genus", "0..3"]).stdout, run(&["plot", "--parts", "3,1", "--genus", "0..3"]).stdout);
}

#[test]
fn scan_examples() {
    let v = json(&run(&["roots", "scan", "--family", "dessin", "--genus", "0..1", "--n-max", "2", "--weight-max", "8", "--brief"]));
    assert_eq!(v["passed"], true);
    let v = json(&run(&["roots", "scan", "--genus", "1..0"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["keys"], 0);
}

#[test]
fn tr_tables_and_raw() {
    let v = json(&run(&["tr", "--curve", "monotone", "--gn", "0,3", "--orders", "1", "--raw"]));
    assert_eq!(v["table"]["(1,1,1)"], "4t^2+4t");
    assert!(v["raw"].as_str().unwrap().contains("z3"));
    let v = json(&run(&["tr", "--curve", "dessin", "--gn", "1,1", "--orders", "3"]));
    assert_eq!(v["table"]["(3)"], "t/3");
}

#[test]
fn plot_svg() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.svg");
    let o = run(&["plot", "--parts", "4,2,1", "--genus", "2..4", "--digits", "6", "-o", p.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&p).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 3 * 6);
    let o = run(&["plot", "--parts", "4,2,1", "--genus", "2", "--digits", "0"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8_lossy(&o.stdout).matches("<circle").count(), 0);
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("run.toml");
    std::fs::write(&p, "command = \"hurwitz\"\nfamily = \"monotone\"\ngenus = 0\nparts = \"2,1\"\ntimes-mu = true\n").unwrap();
    let v = json(&run(&["--config", p.to_str().unwrap()]));
    assert_eq!(v["value"], "2t^2+2t");
    // explicit flags override the file
    let v = json(&run(&["--config", p.to_str().unwrap(), "--genus", "1"]));
    assert_eq!(v["value"], "10t^2+10t");
    std::fs::write(&p, "genus = 1\n").unwrap();
    assert_eq!(run(&["--config", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn oracles() {
    let v = json(&run(&["oracle", "monotone", "--perm", "(1 2 3)", "--degree", "3", "--length", "4", "--transitive"]));
    assert_eq!(v["counts"][2]["value"], "t^2+t");
    assert_eq!(v["counts"][4]["matches_cut_and_join"], true);
    let v = json(&run(&["oracle", "dessin", "--parts", "3", "--genus", "1"]));
    assert_eq!(v["value"], "t/3");
    assert_eq!(v["matches_cut_and_join"], true);
}

#[test]
fn report_appendix_passes() {
    let o = run(&["report-appendix"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["cells"].as_array().unwrap().len(), 142);
}
