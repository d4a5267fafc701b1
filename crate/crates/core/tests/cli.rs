//! The `qsusy` binary end to end: exit codes, JSON shape and determinism.

use std::process::Command;

use serde_json::Value;

fn qsusy(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qsusy"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = qsusy(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad JSON ({e}): {out}\n{err}"));
    (code, v)
}

#[test]
fn verify_susy_td_minus_x() {
    let (code, v) = json(&["verify-susy", "--kind", "td", "--w", "-x", "--q", "3/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["command"], "verify-susy");
    assert_eq!(v["summary"]["passed"], 5);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 5);
    for r in results {
        for key in ["id", "paper_ref", "status", "detail", "residual"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn degeneracy_1_3() {
    let (code, v) = json(&["degeneracy", "--n", "1", "--m", "3", "--interval", "0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["q_root"], "0.640388203202");
    assert!(v["data"]["residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn ground_state_q_one_is_gaussian() {
    let (code, v) = json(&["ground-state", "--order", "12", "--q", "1/1"]);
    assert_eq!(code, 0);
    let f = &v["data"]["solutions"][0];
    assert_eq!(f["branch"], "f");
    let got: Vec<&str> = f["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(
        got,
        [
            "1", "0", "-1/2", "0", "1/8", "0", "-1/48", "0", "1/384", "0", "-1/3840", "0",
            "1/46080"
        ]
    );
}

#[test]
fn ground_state_classification_needs_order_and_q() {
    let (_, v) = json(&[
        "ground-state",
        "--order",
        "60",
        "--q",
        "3/2",
        "--branch",
        "f_tilde",
    ]);
    assert_eq!(
        v["data"]["solutions"][0]["classification"]["class"],
        "divergent"
    );
}

#[test]
fn specfun_shape() {
    let (code, v) = json(&[
        "specfun",
        "--function",
        "pq-exp",
        "--p",
        "2",
        "--q",
        "1",
        "--z",
        "1/10",
    ]);
    assert_eq!(code, 0);
    let d = &v["data"];
    for key in [
        "function",
        "parameters",
        "mode",
        "value",
        "terms_used",
        "converged",
    ] {
        assert!(d.get(key).is_some(), "missing {key}");
    }
    assert_eq!(d["mode"], "float");
    assert_eq!(d["converged"], true);
    let (code, v) = json(&[
        "specfun",
        "--function",
        "twin-pochhammer",
        "--a",
        "3",
        "--b",
        "1/2",
        "--p",
        "2",
        "--q",
        "1/3",
        "--n",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["value"], "37625/216");
}

#[test]
fn pole_is_a_failing_check() {
    let (code, v) = json(&[
        "specfun",
        "--function",
        "pq-exp",
        "--p",
        "1",
        "--q",
        "1",
        "--z",
        "1/2",
        "--mode",
        "exact",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["status"], "fail");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qsusy(&["verify-susy", "--kind", "td", "--q", "0.6"]).0, 2);
    assert_eq!(
        qsusy(&["degeneracy", "--n", "1", "--m", "3", "--interval", "1,0"]).0,
        2
    );
    assert_eq!(qsusy(&["no-such-command"]).0, 2);
    assert_eq!(qsusy(&["ground-state", "--q", "1/0"]).0, 2);
}

#[test]
fn text_format() {
    let (code, out, _) = qsusy(&["--format", "text", "spectrum", "--dim", "8", "--q", "2"]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .any(|l| l.starts_with("PASS spectra.fock.adag_a")));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "superoscillator",
        "--kind",
        "spiridonov",
        "--q",
        "1/2",
        "--degree",
        "8",
    ];
    let (c1, a, _) = qsusy(&args);
    let (c2, b, _) = qsusy(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("qsusy-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = qsusy(&["--output", p, "td-gaussian", "--order", "6"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "td-gaussian");
    std::fs::remove_file(&path).ok();
}

#[test]
fn all_covers_every_suite_id() {
    let (code, v) = json(&[
        "all",
        "--order",
        "40",
        "--max-degree",
        "20",
        "--samples",
        "20",
    ]);
    assert_eq!(code, 0, "{}", v["summary"]);
    let cov = &v["data"]["coverage"];
    assert_eq!(
        cov["uncovered_ids"].as_array().unwrap().len(),
        0,
        "{}",
        cov["uncovered_ids"]
    );
    let eqs = cov["equations"].as_array().unwrap();
    for e in ["Eq. 1", "Eq. 12", "Eq. 29", "Eq. 36", "Eq. 49"] {
        assert!(eqs.iter().any(|x| x == e), "{e} not covered");
    }
}
