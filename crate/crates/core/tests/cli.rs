use std::io::Write;
use std::process::{Command, Output};

use apolar::forms::linear_power_times;
use apolar::Monomial;

fn apolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(args)
        .env_remove("APOLAR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_gb_text_report() {
    let o = apolar(&["verify-gb", "--n", "2", "--e", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("claim: explicit-groebner-basis\n"));
    assert!(text.contains("verdict: Verified\n"));
    assert!(text.ends_with("elapsed_ms: 0\n"));
}

#[test]
fn json_reports_are_reproducible() {
    let args = [
        "verify-initial",
        "--n",
        "3",
        "--e",
        "4",
        "--seed",
        "9",
        "--format",
        "json",
    ];
    let a = stdout(&apolar(&args));
    let b = stdout(&apolar(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["verdict"], "Verified");
    assert_eq!(v["parameters"]["seed"], 9);
}

#[test]
fn refuted_claims_exit_with_one() {
    let o = apolar(&["conjecture-inclusion", "--n", "3", "--e", "4", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness:"));
}

#[test]
fn table_of_maximal_power() {
    let o = apolar(&["table", "--n", "2", "--kind", "power", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "       1 2\ntotal: 3 2\n    1: 3 2\n");
}

#[test]
fn explicit_extra_form_from_file() {
    let f = linear_power_times(&[1, 1, 1], 2, &Monomial::new(vec![0, 0, 2])).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(f.to_json_string().as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let o = apolar(&[
        "verify-betti",
        "--n",
        "3",
        "--d",
        "3",
        "--extra-form",
        path,
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parameters"]["extra_forms"], 1);
    assert!(o.status.code().is_some_and(|c| c <= 2));
}

#[test]
fn bad_input_exits_with_two() {
    let o = apolar(&["verify-betti", "--n", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));
}
