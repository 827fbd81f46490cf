use serde_json::{json, Value};

use skeinlab::laurent::LaurentPoly;
use skeinlab_cli::{run_with_cap, Outcome};

fn run(args: &[&str]) -> Outcome {
    run_capped(args, None)
}

fn run_capped(args: &[&str], cap: Option<&str>) -> Outcome {
    let argv = std::iter::once("skeinlab").chain(args.iter().copied());
    run_with_cap(argv, cap)
}

fn json_of(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).expect("stdout is one JSON document")
}

fn lp(l: &LaurentPoly) -> Value {
    serde_json::to_value(l).unwrap()
}

#[test]
fn disk_rewrite_n3() {
    let o = run(&["disk", "--op", "rewrite", "--n", "3"]);
    assert_eq!(o.exit_code, 0);
    let v = json_of(&o);
    assert_eq!(v["command"], "disk");
    assert_eq!(v["status"], "value");
    let expected = json!([
        {"symbol": "C", "k": -1, "coeff": lp(&LaurentPoly::q_pow(-3))},
        {"symbol": "C", "k": 2, "coeff": lp(&LaurentPoly::q_pow(3))},
        {"symbol": "B", "m": 0, "eps": 1, "coeff": lp(&LaurentPoly::q_pair(1))},
    ]);
    assert_eq!(v["payload"]["element"]["terms"], expected);
}

#[test]
fn identities_degenerate_range() {
    let o = run(&["identities", "--max", "0"]);
    assert_eq!(o.exit_code, 0);
    assert_eq!(json_of(&o)["status"], "pass");
}

#[test]
fn cheb_values() {
    let v = json_of(&run(&["cheb", "--kind", "S", "--n", "-1"]));
    assert_eq!(v["payload"]["poly"], json!({"x_coeffs": []}));
    let o = run(&["--pretty", "cheb", "--kind", "Tbar", "--n", "3"]);
    assert!(o.stdout.contains("Tbar_3(x) = x^3 - 3x"), "{}", o.stdout);
    let o = run(&["cheb", "--kind", "T", "--n", "-1"]);
    assert_eq!(o.exit_code, 2);
    assert!(o.stderr.contains("--n"));
}

#[test]
fn usage_errors_name_the_flag() {
    for (args, flag) in [
        (vec!["annulus", "--op", "Tn", "--n", "0"], "--n"),
        (vec!["transparency", "--order", "0"], "--order"),
        (vec!["transparency", "--order", "2", "--modulus", "0"], "--modulus"),
        (vec!["audit", "--a", "x", "--c", "[1]"], "--a"),
        (vec!["audit", "--a", "0", "--c", "[]"], "--c"),
        (vec!["basis", "--from", "T", "--to", "S", "--max", "2"], "--from"),
        (vec!["cheb", "--kind", "V", "--n", "2"], "--kind"),
    ] {
        let o = run(&args);
        assert_eq!(o.exit_code, 2, "{args:?}");
        assert!(o.stderr.contains(flag), "{args:?}: {}", o.stderr);
        assert!(o.stdout.is_empty());
    }
    assert_eq!(run(&["frobnicate"]).exit_code, 2);
}

#[test]
fn dominance_pass_and_fail() {
    let o = run(&["dominates", "--a", "S", "--b", "Tbar", "--max", "8"]);
    assert_eq!(o.exit_code, 0);
    let o = run(&["dominates", "--a", "Tbar", "--b", "X", "--max", "2"]);
    assert_eq!(o.exit_code, 1);
    let v = json_of(&o);
    assert_eq!(v["status"], "fail");
    let cx = &v["payload"]["counterexample"];
    assert_eq!(cx["n"], 2);
    assert!(cx.get("lhs").is_some() && cx.get("rhs").is_some());
}

#[test]
fn basis_matrix_shape() {
    let v = json_of(&run(&["basis", "--from", "X", "--to", "Tbar", "--max", "3"]));
    let rows = v["payload"]["matrix"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[2][0], lp(&LaurentPoly::constant(2)));
}

#[test]
fn products_json_and_csv() {
    let v = json_of(&run(&["products", "--max", "4"]));
    assert_eq!(v["status"], "pass");
    assert!(!v["payload"]["rows"].as_array().unwrap().is_empty());

    let o = run(&["products", "--max", "1", "--csv", "-"]);
    let mut r = csv::Reader::from_reader(o.stdout.as_bytes());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(r.headers().unwrap(), vec!["m", "n", "k", "coefficient"]);
    // T̄_1 T̄_1 = T̄_2 + 2
    let one_one: Vec<_> = rows.iter().filter(|r| &r[0] == "1" && &r[1] == "1").collect();
    assert_eq!(one_one.len(), 2);
    let c: LaurentPoly = serde_json::from_str(&one_one[0][3]).unwrap();
    assert_eq!(c, LaurentPoly::constant(2));

    let path = std::env::temp_dir().join(format!("skeinlab-products-{}.csv", std::process::id()));
    let o = run(&["products", "--max", "2", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.exit_code, 0);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("m,n,k,coefficient"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn annulus_ops() {
    for op in ["Tn", "SnSm", "Tbar"] {
        let v = json_of(&run(&["annulus", "--op", op, "--n", "5"]));
        assert_eq!(v["status"], "value");
        assert_eq!(v["payload"]["recurrence_agrees"], true);
    }
}

#[test]
fn disk_closed_and_right() {
    let v = json_of(&run(&["disk", "--op", "closed", "--n", "6"]));
    assert_eq!(v["payload"]["matches_rewrite"], true);
    assert_eq!(v["payload"]["symmetric"], true);
    let v = json_of(&run(&["disk", "--op", "right", "--n", "1"]));
    let terms = v["payload"]["element"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
}

#[test]
fn audit_payload() {
    let o = run(&["audit", "--a", "0", "--c", r#"[0, {"v_exponents": [[0, "1"]]}]"#]);
    assert_eq!(o.exit_code, 0);
    let v = json_of(&o);
    let keys: Vec<&String> = v["payload"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["a", "c", "terms", "d"]);
    assert_eq!(v["payload"]["d"], json!({"v_exponents": []}));

    let v = json_of(&run(&["audit", "--a", "1", "--c", "[1]"]));
    assert_eq!(v["payload"]["d"], lp(&LaurentPoly::constant(-1)));
}

#[test]
fn transparency_reports_commutators() {
    let v = json_of(&run(&["transparency", "--order", "3", "--modulus", "13"]));
    assert_eq!(v["status"], "fail");
    assert_eq!(v["payload"]["z_commutes"], false);
    let cx = &v["payload"]["counterexample"];
    assert!(cx["z"].get("lhs").is_some() && cx["z"].get("rhs").is_some());

    // with q^N = 1 both commutators vanish
    let o = run(&["transparency", "--order", "4", "--modulus", "8"]);
    assert_eq!(o.exit_code, 0);
    assert_eq!(json_of(&o)["status"], "pass");
}

#[test]
fn degree_cap() {
    let v = json_of(&run_capped(&["identities", "--max", "40"], Some("3")));
    assert_eq!(v["payload"]["max"], 3);
    let o = run_capped(&["disk", "--op", "closed", "--n", "9"], Some("8"));
    assert_eq!(o.exit_code, 2);
    assert!(o.stderr.contains("SKEINLAB_MAX_DEGREE"));
    let o = run_capped(&["audit", "--a", "0", "--c", "[1, 1, 1]"], Some("1"));
    assert!(o.stderr.contains("--c"));
    assert_eq!(run_capped(&["identities", "--max", "1"], Some("many")).exit_code, 2);
}

#[test]
fn timing_is_opt_in() {
    let v = json_of(&run(&["identities", "--max", "2"]));
    assert!(v.get("elapsed_ms").is_none());
    let v = json_of(&run(&["--timing", "identities", "--max", "2"]));
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify-all", "--max", "6"]);
    let b = run(&["verify-all", "--max", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    let checks = v["payload"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 16);
    let failing: Vec<&str> = checks
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["transparency"]);
    assert_eq!(a.exit_code, 1);
    assert_eq!(v["payload"]["counterexample"]["check"], "transparency");
}

#[test]
fn pretty_rendering() {
    let o = run(&["--pretty", "verify-all", "--max", "3"]);
    assert!(o.stdout.starts_with("verify-all: fail\n"));
    assert!(o.stdout.contains("[pass] identities"));
    assert!(o.stdout.contains("[FAIL] transparency"));
}
