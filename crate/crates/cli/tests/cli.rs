use std::process::Command;

use cherlink_cli::cache::Cache;
use cherlink_cli::{execute, Cli};
use cherlink_core::{LaurentAQ, RationalAQ};
use clap::Parser;
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cherlink"))
        .args(args)
        .env_remove("CHERLINK_CACHE")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_of(args: &[&str]) -> Value {
    let (code, out, err) = bin(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn rational(v: &Value) -> RationalAQ {
    RationalAQ::from_json(&v["exact"]).unwrap()
}

fn run_lib(args: &[&str]) -> String {
    let cli = Cli::try_parse_from(std::iter::once("cherlink").chain(args.iter().copied())).unwrap();
    execute(&cli, &mut Cache::disabled()).unwrap()
}

#[test]
fn hopf_link() {
    let v = json_of(&["link", "--torus", "2,2"]);
    // q^{-1/2}(1 + q^3 + aq(1+q)) / (1 − q^2)
    let want = RationalAQ::with_factors(LaurentAQ::from_ints(&[(0, -1, 1), (0, 5, 1), (2, 1, 1), (2, 3, 1)]), &[2]);
    assert!(rational(&v["result"]["homfly"]).equals(&want));
    let c = &v["result"]["constituents"];
    let two = RationalAQ::with_factors(LaurentAQ::from_ints(&[(0, -1, 1), (2, 1, 1)]), &[2]);
    let one_one = RationalAQ::with_factors(LaurentAQ::from_ints(&[(0, 5, 1), (2, 3, 1)]), &[2]);
    assert!(rational(&c["2"]).equals(&two));
    assert!(rational(&c["1,1"]).equals(&one_one));
    assert_eq!(v["result"]["numerator_nonnegative"], Value::Bool(true));
}

#[test]
fn trefoil_partially_reduced() {
    let v = json_of(&["homfly", "--torus", "2,3", "--color", "1", "--partially-reduced"]);
    let got = RationalAQ::from_json(&v["result"]["partially_reduced"]["exact"]).unwrap().to_polynomial().unwrap();
    // (1 − a)(1 + q^2 − aq)
    let want = LaurentAQ::from_ints(&[(0, 0, 1), (0, 4, 1), (2, 2, -1), (2, 0, -1), (2, 4, -1), (4, 2, 1)]);
    assert!(got.equal_up_to_monomial(&want).is_some());
    assert_eq!(v["result"]["fiber_value"], "6");
    assert_eq!(v["result"]["selected"], "partially_reduced");
}

#[test]
fn unknot_with_long_twist() {
    let v = json_of(&["homfly", "--torus", "1,5", "--color", "2", "--reduced"]);
    let red = RationalAQ::from_json(&v["result"]["reduced"]["exact"]).unwrap();
    assert!(red.numerator().len() == 1 && red.is_polynomial());
}

#[test]
fn non_coprime_knot_points_to_link() {
    let (code, _, err) = bin(&["homfly", "--torus", "2,2", "--color", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("`link`"), "{err}");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(bin(&["char", "--n", "4", "--m", "2", "--lambda", "3"]).0, 2);
    assert_eq!(bin(&["char", "--n", "4", "--m", "2", "--lambda", "3,x"]).0, 2);
    assert_eq!(bin(&["dmod", "--m", "2", "--s", "0", "--orbit-lambda", "1", "--k", "1"]).0, 2);
    assert_eq!(bin(&["koszul", "--m", "4", "--n", "2", "--max-qdeg", "3"]).0, 2);
    assert_eq!(bin(&["coeffs", "lr", "--mu", "1", "--nu", "1", "--format", "latex"]).0, 2);
}

#[test]
fn char_hooks_match_the_knot_side() {
    let v = json_of(&["char", "--n", "4", "--m", "2", "--lambda", "2", "--hooks"]);
    let hooks = rational(&v["result"]["hooks"]);
    let want = RationalAQ::with_factors(LaurentAQ::from_ints(&[(0, -3, 1), (2, -1, -1)]), &[2]);
    assert!(hooks.equals(&want));
    assert!(v["normalization"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("T(1,2)")));
}

#[test]
fn koszul_2_4_has_two_homology_groups() {
    let v = json_of(&["koszul", "--m", "2", "--n", "4", "--max-qdeg", "8"]);
    assert_eq!(v["result"]["nonzero_degrees"], serde_json::json!([0, 1]));
    let checks = &v["result"]["checks"];
    for k in ["dunkl_singular", "matches_l_characters", "euler_matches_verma"] {
        assert_eq!(checks[k], Value::Bool(true), "{k}");
    }
    let latex = bin(&["koszul", "--m", "2", "--n", "4", "--max-qdeg", "2", "--format", "latex"]).1;
    assert!(latex.contains("\\begin{tabular}"));
}

#[test]
fn dmod_table() {
    let v = json_of(&["dmod", "--m", "2", "--s", "0", "--orbit-lambda", "2", "--k", "2", "--trunc", "4"]);
    let rows = v["result"]["character"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(v["result"]["nonnegative"], Value::Bool(true));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let cases: [&[&str]; 4] = [
        &["link", "--torus", "4,6"],
        &["char", "--n", "6", "--m", "3", "--lambda", "2,1", "--class", "2,2,1,1", "--hooks"],
        &["koszul", "--m", "3", "--n", "4", "--max-qdeg", "5"],
        &["dmod", "--m", "3", "--s", "0", "--orbit-lambda", "3", "--k", "1", "--trunc", "6"],
    ];
    for args in cases {
        let one = run_lib(&[&["--threads", "1"], args].concat());
        let four = run_lib(&[&["--threads", "4"], args].concat());
        assert_eq!(one, four, "{args:?}");
    }
}

#[test]
fn cache_hits_give_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let p = path.to_str().unwrap();
    let args = ["--cache", p, "char", "--n", "6", "--m", "3", "--lambda", "2,1", "--class", "3,3", "--format", "text"];
    let (c1, cold, _) = bin(&args);
    let (c2, warm, err) = bin(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(cold, warm);
    assert!(err.is_empty(), "{err}");
    for sub in [["lr", "--mu", "2,1", "--nu", "2"], ["kf", "--mu", "3,1", "--w", "2,1,1"], ["mn", "--lambda", "3,1", "--class", "2,2"]] {
        let mut a = vec!["--cache", p, "coeffs"];
        a.extend(sub);
        assert_eq!(bin(&a).1, bin(&a).1);
        assert_eq!(bin(&a[2..]).1, bin(&a).1);
    }
    let text = std::fs::read_to_string(&path).unwrap();
    for fam in ["\"CCOEFF\"", "\"MNCHAR\"", "\"LR\"", "\"KF\""] {
        assert!(text.contains(fam), "{fam}");
    }
}
