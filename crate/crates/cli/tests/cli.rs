use modrep_cli::run;
use serde_json::Value;

fn json(args: &[&str]) -> Value {
    let mut full = vec!["modrep"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("json output")
}

fn code(args: &[&str]) -> i32 {
    let mut full = vec!["modrep"];
    full.extend_from_slice(args);
    run(full).code
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("modrep-cli-{}-{name}", std::process::id()))
}

#[test]
fn dim_examples() {
    let v = json(&["dim", "--rank", "19", "--char", "3", "--weight", "1:1,2:1"]);
    assert_eq!(v["result"]["value"], "1520");
    assert_eq!(v["config"]["rank"], "19");
    let v = json(&["dim", "--rank", "6", "--char", "7", "--weight", "1:1,6:1"]);
    assert_eq!(v["result"]["value"], "47");
}

#[test]
fn zero_weight_rejected() {
    assert_eq!(code(&["dim", "--rank", "4", "--char", "5", "--weight", "[0,0,0,0]"]), 1);
}

#[test]
fn mult_examples() {
    let v = json(&["mult", "--rank", "7", "--char", "3", "--weight", "1:2,7:2", "--sub", "0"]);
    assert_eq!(v["result"]["multiplicity"], "27");
    let v = json(&["mult", "--rank", "5", "--char", "2", "--weight", "2:1,3:1", "--sub", "5:1"]);
    assert_eq!(v["result"]["multiplicity"], "4");
    let v = json(&["mult", "--rank", "5", "--char", "2", "--weight", "2:1,3:1", "--sub", "2:1,3:1"]);
    assert_eq!(v["result"]["multiplicity"], "1");
    assert_eq!(v["result"]["provenance"], "oracle:highest-weight");
}

#[test]
fn orbit_reports_bounds() {
    let v = json(&["orbit", "--rank", "19", "--weight", "1:1,2:1"]);
    assert_eq!(v["result"]["orbit_size"], "380");
    assert_eq!(v["result"]["premet_lower_bound"], "1520");
    assert_eq!(v["result"]["weyl_dimension"], "2660");
}

#[test]
fn construct_l1l2() {
    let v = json(&["construct", "l1l2", "--rank", "4", "--char", "3"]);
    assert_eq!(v["result"]["kernel_or_image"], "40");
    assert_eq!(v["result"]["irreducible"], "30");
    assert_eq!(v["result"]["agrees"], true);
    assert_eq!(code(&["construct", "l9", "--rank", "4", "--char", "3"]), 1);
    assert_eq!(code(&["construct", "2l1ll", "--rank", "5", "--char", "3"]), 2);
}

#[test]
fn enumerate_and_verify() {
    let v = json(&["enumerate", "--rank", "19", "--char", "5", "--exp", "3"]);
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 10);
    let v = json(&["verify", "--rank", "36", "--char", "5", "--exp", "4"]);
    assert_eq!(v["result"]["clean"], true);
    assert_eq!(code(&["verify", "--rank", "36", "--char", "5", "--exp", "2"]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["dim", "--rank", "4", "--char", "4", "--weight", "1:1"]), 1);
    assert_eq!(code(&["dim", "--rank", "4", "--char", "3", "--weight", "1:3"]), 1);
    assert_eq!(code(&["dim", "--rank", "4", "--char", "3", "--weight", "1:1", "--strategy", "fast"]), 1);
    assert_eq!(code(&["dim", "--char", "3", "--weight", "1:1"]), 1);
    assert_eq!(code(&["nonsense"]), 1);
    assert_eq!(code(&["--help"]), 0);
    let capped = [
        "dim", "--rank", "6", "--char", "5", "--weight", "1:1,3:1,5:1", "--strategy", "gram-only", "--cap-monomials", "3",
    ];
    assert_eq!(code(&capped), 2);
    let oracle_only = ["dim", "--rank", "6", "--char", "5", "--weight", "1:1,3:1,5:1", "--strategy", "oracle-only"];
    assert_eq!(code(&oracle_only), 2);
}

#[test]
fn config_file_with_flag_override() {
    let path = temp_path("config.toml");
    std::fs::write(&path, "rank = 6\nchar = 7\nweight = \"1:1,6:1\"\n").unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["dim", "--config", p]);
    assert_eq!(v["result"]["value"], "47");
    let v = json(&["dim", "--config", p, "--char", "5"]);
    assert_eq!(v["result"]["value"], "48");
    assert_eq!(v["config"]["char"], "5");
    std::fs::write(&path, "rank = 6\nbogus = 1\n").unwrap();
    assert_eq!(code(&["dim", "--config", p]), 1);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&["dim", "--config", "/nonexistent/modrep.toml"]), 1);
}

#[test]
fn output_file() {
    let path = temp_path("out.json");
    let p = path.to_str().unwrap();
    let out = run(["modrep", "dim", "--rank", "3", "--char", "2", "--weight", "1:1", "--output", p]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["value"], "4");
    std::fs::remove_file(&path).ok();
}

#[test]
fn deterministic_across_threads() {
    let base = ["enumerate", "--rank", "8", "--char", "3", "--exp", "3"];
    let one = json(&[&base[..], &["--threads", "1"]].concat());
    let four = json(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one["result"], four["result"]);
    let a = run([&["modrep"][..], &base[..]].concat());
    let b = run([&["modrep"][..], &base[..]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn all_numbers_are_strings() {
    fn walk(v: &Value) {
        match v {
            Value::Number(n) => panic!("bare number {n}"),
            Value::Array(a) => a.iter().for_each(walk),
            Value::Object(m) => m.values().for_each(walk),
            _ => {}
        }
    }
    walk(&json(&["dim", "--rank", "5", "--char", "3", "--weight", "1:1,2:1,5:1"]));
    walk(&json(&["verify", "--rank", "19", "--char", "3", "--exp", "3"]));
}

#[test]
fn selftest_passes() {
    let v = json(&["selftest"]);
    assert_eq!(v["result"]["failed"], "0");
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_modrep"))
        .args(["dim", "--rank", "6", "--char", "7", "--weight", "1:1,6:1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["value"], "47");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_modrep"))
        .args(["dim", "--rank", "4", "--char", "5", "--weight", "[0,0,0,0]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
