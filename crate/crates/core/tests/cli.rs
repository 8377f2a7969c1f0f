use std::process::Command;

use coxlab::analysis::{coxeter_matrix, report_json, BijectionReport, OrderingChoice};
use coxlab::cli::{run, Outcome};
use coxlab::homalg::IncidenceHomology;
use coxlab::poset::generators;
use serde_json::Value;

fn coxlab(args: &[&str]) -> Outcome {
    run(std::iter::once("coxlab").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn coxeter_json_is_the_library_matrix() {
    let o = coxlab(&["coxeter", "--gen", "paper-lattice8", "--order", "linext", "--format", "json"]);
    let v = json(&o);
    let l = generators::paper_lattice8();
    let expect = coxeter_matrix(l.poset(), l.poset().linext()).to_int_rows().unwrap();
    assert_eq!(v["coxeter"], serde_json::json!(expect));
    assert_eq!(v["coxeter"][7], serde_json::json!([0, -1, 0, -1, 1, 1, 1, -1]));
}

#[test]
fn bijections_json_is_the_library_report() {
    let o = coxlab(&["bijections", "--gen", "boolean:3", "--order", "admissible", "--format", "json"]);
    let l = generators::boolean(3).unwrap();
    let h = IncidenceHomology::new(l.poset()).unwrap();
    let r = BijectionReport::new(&h, &OrderingChoice::Admissible, 12).unwrap();
    assert_eq!(json(&o), report_json(l.poset(), &r));
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["bijections", "--gen", "jrandom:4", "--seed", "7", "--format", "json"];
    let first = coxlab(&args);
    assert_eq!(first.code, 0);
    for _ in 0..3 {
        assert_eq!(coxlab(&args).stdout, first.stdout);
    }
}

#[test]
fn verify_boolean_zero() {
    let v = json(&coxlab(&["verify", "--gen", "boolean:0", "--format", "json"]));
    assert_eq!(v["auslander_gorenstein"], Value::Bool(true));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["holds"] == Value::Bool(true)));
    let b = json(&coxlab(&["bijections", "--gen", "boolean:0", "--format", "json"]));
    for key in ["grade_ar", "grade_corollary", "coxeter", "rowmotion"] {
        assert_eq!(b["permutations"][key], serde_json::json!(["{}"]));
    }
}

#[test]
fn text_outputs() {
    let o = coxlab(&["permanent", "--gen", "paper-poset10"]);
    assert_eq!(o.stdout, "-1501\n");
    let o = coxlab(&["cartan", "--gen", "chain:2"]);
    assert_eq!(o.stdout, "ordering: 1 2\n1 0\n1 1\n");
    let o = coxlab(&["bruhat", "--gen", "chain:3"]);
    assert!(o.stdout.contains("P: [3 1 2]  (1 3 2)"), "{}", o.stdout);
    let o = coxlab(&["homology", "--gen", "chain:2"]);
    assert!(o.stdout.contains("dominant numbers: 0 1"), "{}", o.stdout);
    let o = coxlab(&["info", "--gen", "n5"]);
    assert!(o.stdout.contains("distributive: false"));
}

#[test]
fn generator_determinism_and_round_trip() {
    let a = coxlab(&["gen", "--gen", "jrandom:4", "--seed", "7"]);
    let b = coxlab(&["gen", "--gen", "jrandom:4", "--seed", "7"]);
    assert_eq!(a, b);
    let dir = std::env::temp_dir().join(format!("coxlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("j4.json");
    let j = coxlab(&["gen", "--gen", "jrandom:4", "--seed", "7", "--format", "json"]);
    std::fs::write(&file, &j.stdout).unwrap();
    let again = coxlab(&["gen", file.to_str().unwrap()]);
    assert_eq!(again.stdout, a.stdout);
}

#[test]
fn file_inputs_and_errors() {
    let dir = std::env::temp_dir().join(format!("coxlab-cli-err-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cyc = dir.join("cycle.txt");
    std::fs::write(&cyc, "elements a b\ncover a b\ncover b a\n").unwrap();
    let o = coxlab(&["info", cyc.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("cycle"), "{}", o.stderr);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "elements a b\ncover a\n").unwrap();
    let o = coxlab(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    let ord = dir.join("order.txt");
    std::fs::write(&ord, "2 1 3").unwrap();
    let o = coxlab(&["cartan", "--gen", "chain:3", "--order", ord.to_str().unwrap()]);
    assert_eq!(o.stdout, "ordering: 2 1 3\n1 1 0\n0 1 0\n1 1 1\n");
    let m = dir.join("m.txt");
    std::fs::write(&m, "2 2\n1 2\n3 4\n").unwrap();
    let o = coxlab(&["permanent", "--matrix", m.to_str().unwrap()]);
    assert_eq!(o.stdout, "10\n");
    assert_eq!(coxlab(&["cartan", "--gen", "n5", "--order", "nowhere"]).code, 1);
    assert_eq!(coxlab(&["homology", "--gen", "chain:3", "--gen", "chain:2"]).code, 1);
}

#[test]
fn survey_rows_agree() {
    let o = coxlab(&["survey", "--corpus", "ideals:3"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("8 posets, 8 agree, 0 disagree, 0 invariant failures"), "{}", o.stdout);
    let o = coxlab(&["survey", "--gen", "m3", "--gen", "n5", "--format", "json"]);
    let v = json(&o);
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["auslander_gorenstein"], Value::Bool(false));
        assert_eq!(row["pu_form_linext"], Value::Bool(false));
    }
    let o = coxlab(&["survey", "--gen", "boolean:5"]);
    assert_eq!(o.code, 2);
}

#[test]
fn binary_reads_seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_coxlab");
    let out = |env: Option<&str>, args: &[&str]| {
        let mut c = Command::new(bin);
        c.args(args);
        match env {
            Some(s) => c.env("COXLAB_SEED", s),
            None => c.env_remove("COXLAB_SEED"),
        };
        c.output().unwrap()
    };
    let via_env = out(Some("7"), &["gen", "--gen", "jrandom:4"]);
    let via_flag = out(None, &["gen", "--gen", "jrandom:4", "--seed", "7"]);
    assert!(via_env.status.success());
    assert_eq!(via_env.stdout, via_flag.stdout);
    let usage = out(None, &["nonsense"]);
    assert_eq!(usage.status.code(), Some(1));
    let domain = out(None, &["info", "--gen", "chain:0"]);
    assert_eq!(domain.status.code(), Some(2));
}
