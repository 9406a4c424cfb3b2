use std::path::{Path, PathBuf};
use std::process::Command as Process;

use serde_json::{json, Value};

use planebranch::catalog;
use planebranch::cli::{run, Command, InputArg, Output, TriplePoint};
use planebranch::json::{family_from_json, param_from_json, wpoly_from_json};
use planebranch::kernel::{int, ratio};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn input(name: &str) -> InputArg {
    InputArg { input: data(name) }
}

fn json_of(cmd: Command) -> Value {
    match run(&cmd).unwrap() {
        Output::Json(v) => v,
        other => panic!("expected JSON, got {other:?}"),
    }
}

fn bin(args: &[&str]) -> (bool, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_planebranch")).args(args).output().unwrap();
    (out.status.success(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn info_on_sextic() {
    let v = json_of(Command::Info(input("sextic.json")));
    assert_eq!(v["beta"], json!([6, 9, 13]));
    assert_eq!(v["v"], json!([6, 9, 22]));
    assert_eq!(v["mu"], json!(48));
    assert_eq!(v["lambda"], json!(13));
}

#[test]
fn semiroots_re_parse() {
    let v = json_of(Command::Semiroots(input("sextic.json")));
    let s = catalog::system(&catalog::sextic());
    let polys = v["semiroots"].as_array().unwrap();
    assert_eq!(polys.len(), 4);
    for (i, p) in polys.iter().enumerate() {
        assert_eq!(&wpoly_from_json(p).unwrap(), s.f(i));
    }
}

#[test]
fn expand_reports_value() {
    let v = json_of(Command::Expand(input("sextic.json")));
    assert_eq!(v["value"], json!(22));
    assert_eq!(v["terms"], json!([[[0, 0, 1, 0], "1"], [[5, 1, 0, 0], "3/2"]]));
}

#[test]
fn azevedo_on_zeta1() {
    let v = json_of(Command::Azevedo { input: input("zeta1.json"), n: 6, m: 9 });
    assert_eq!(v["H1"]["terms"], json!([[0, 1, "1"]]));
    assert_eq!(v["H2"]["terms"], json!([[5, 0, "-1"]]));
}

#[test]
fn dicritical_verdicts() {
    for (file, i, j, lhs, rhs) in
        [("zeta1.json", 0, 1, 24, 30), ("zeta2.json", 0, 2, 37, 45), ("zeta3.json", 1, 2, 37, 40)]
    {
        let v = json_of(Command::Dicritical { input: input(file), at: TriplePoint { i, j } });
        assert_eq!(
            (v["lhs"].clone(), v["I_F_H2"].clone(), v["dicritical"].clone()),
            (json!(lhs), json!(rhs), json!(true))
        );
    }
}

#[test]
fn separatrices_round_trip() {
    let cmd = Command::Separatrices {
        input: input("zeta1.json"),
        at: TriplePoint { i: 0, j: 1 },
        order: 10,
        special: true,
        at_u: Some("-1/2".into()),
    };
    let v = json_of(cmd);
    let f = family_from_json(&v).unwrap();
    assert_eq!(f.coeff(5).eval(&int(1)).unwrap(), ratio(5, 6));
    assert_eq!(v["special"]["contact"], json!("2"));
    assert_eq!(v["special"]["I_F_Fstar"], json!(21));
    let psi = param_from_json(&v["specialized"]).unwrap();
    assert_eq!(psi.coeff(5), ratio(-5, 3));
}

#[test]
fn contact_and_value() {
    let v = json_of(Command::Contact(input("sextic.json")));
    assert_eq!(v, json!({"contact": "2", "intersection": 21}));
    let v = json_of(Command::Value(input("zeta1.json")));
    assert_eq!(v["nu"], json!(27));
    let v = json_of(Command::Value(input("sextic.json")));
    assert_eq!(v["intersection"], json!(22));
}

#[test]
fn zariski_with_d1_form() {
    let v = json_of(Command::Zariski(input("sextic_normal.json")));
    assert_eq!(v["lambda"], json!(13));
    assert_eq!(v["d1_member"], json!(true));
    assert_eq!(v["bound_holds"], json!(true));
}

#[test]
fn binary_graph_and_errors() {
    let (ok, dot) = bin(&["graph", "--dot", "--input", data("sextic.json").to_str().unwrap()]);
    assert!(ok);
    assert!(dot.starts_with("graph dual {"));
    assert_eq!(dot.matches("shape=star").count(), 2);

    let zeta1 = data("zeta1.json");
    let (ok, out) = bin(&[
        "separatrices",
        "--i",
        "0",
        "--j",
        "1",
        "--order",
        "10",
        "--at-u",
        "0",
        "--input",
        zeta1.to_str().unwrap(),
    ]);
    assert!(!ok);
    let err: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(err["error"], json!("PoleAtPoint"));

    let (ok, out) = bin(&["info", "--json-indent", "0", "--input", "/nonexistent.json"]);
    assert!(!ok);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"], json!("ParseError"));

    let (ok, out) = bin(&["dicritical", "--i", "0", "--j", "1", "--input", data("sextic.json").to_str().unwrap()]);
    assert!(!ok);
    assert!(out.contains("ParseError"));
}

#[test]
fn binary_zeta_equality_is_rejected() {
    let dir = std::env::temp_dir().join(format!("planebranch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("equality.json");
    let doc = json!({
        "branch": {"n": 6, "y": [[9, "1"], [12, "1"], [13, "2"]]},
        "H1": [[0, 1, "1"]],
        "H2": [[4, 0, "-1"]]
    });
    std::fs::write(&file, doc.to_string()).unwrap();
    let path = file.to_str().unwrap();
    let (ok, out) = bin(&["dicritical", "--i", "0", "--j", "1", "--input", path]);
    assert!(ok);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["lhs"].clone(), v["I_F_H2"].clone(), v["dicritical"].clone()), (json!(24), json!(24), json!(false)));
    let (ok, out) = bin(&["separatrices", "--i", "0", "--j", "1", "--order", "10", "--input", path]);
    assert!(!ok);
    assert!(out.contains("PreconditionFailed"));
    std::fs::remove_dir_all(&dir).unwrap();
}
