use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use sigchrom::Polynomial;
use tempfile::TempDir;

fn sigchrom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigchrom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = sigchrom(&full);
    let v: Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON on stdout");
    (v, out.status.code().unwrap())
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: TempDir::new().unwrap(),
        }
    }

    fn write(&self, name: &str, body: &str) -> String {
        let path: PathBuf = self.dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path.to_str().unwrap().to_string()
    }

    fn c2minus(&self) -> String {
        self.write("c2minus.sg", "p signed 2 2\ne 0 1 +\ne 0 1 -\n")
    }
}

#[test]
fn poly_of_negative_digon() {
    let f = Files::new();
    let path = f.c2minus();
    let out = sigchrom(&["poly", &path]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "l^2 - 2*l + 1");
    let out = sigchrom(&["poly", &path, "--zero-free"]);
    assert_eq!(stdout(&out).trim(), "l^2 - 2*l");
}

#[test]
fn single_vertex_json() {
    let f = Files::new();
    let path = f.write("k1.sg", "p signed 1 0\n");
    let (v, code) = json(&["poly", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["command"], "poly");
    assert_eq!(v["payload"]["coefficients"], serde_json::json!([0, 1]));
}

#[test]
fn count_negative_digon() {
    let f = Files::new();
    let out = sigchrom(&["count", &f.c2minus(), "-k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "16");
}

#[test]
fn book_closed_expanded_and_factored() {
    let out = sigchrom(&[
        "book", "-m", "3", "-n", "2", "-l", "1", "--method", "closed",
    ]);
    assert_eq!(stdout(&out).trim(), "l^4 - 5*l^3 + 9*l^2 - 7*l + 2");
    let out = sigchrom(&["book", "-m", "3", "-n", "2", "-l", "1", "--factored"]);
    assert_eq!(stdout(&out).trim(), "(l - 1)^3 * (l - 2)");
}

#[test]
fn book_all_methods_agree() {
    let out = sigchrom(&["book", "-m", "3", "-n", "2", "-l", "0", "--all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let expected = "l^4 - 5*l^3 + 8*l^2 - 4*l";
    assert_eq!(text.matches(expected).count(), 3, "{text}");
    assert!(text.contains("verdict: equal"));
}

#[test]
fn book_engine_evaluation() {
    let out = sigchrom(&[
        "book", "-m", "3", "-n", "2", "--sig", "uv", "--method", "engine", "--eval", "3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "12");
}

#[test]
fn eval_parity_is_enforced() {
    let out = sigchrom(&["book", "-m", "3", "-n", "2", "-l", "0", "--eval", "4"]);
    assert!(!out.status.success());
    let out = sigchrom(&[
        "book",
        "-m",
        "3",
        "-n",
        "2",
        "-l",
        "0",
        "--eval",
        "3",
        "--zero-free",
    ]);
    assert!(!out.status.success());
    let out = sigchrom(&[
        "book",
        "-m",
        "3",
        "-n",
        "2",
        "-l",
        "0",
        "--eval",
        "4",
        "--eval-any",
    ]);
    assert!(out.status.success());
    // 4·3·2·2
    assert_eq!(stdout(&out).trim(), "48");
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn chromatic_number_of_books() {
    let out = sigchrom(&[
        "chromatic-number",
        "--book",
        "-m",
        "4",
        "-n",
        "2",
        "-l",
        "0",
    ]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = sigchrom(&[
        "chromatic-number",
        "--book",
        "-m",
        "3",
        "-n",
        "3",
        "-l",
        "3",
    ]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = sigchrom(&[
        "chromatic-number",
        "--book",
        "-m",
        "3",
        "-n",
        "3",
        "-l",
        "1",
    ]);
    assert_eq!(stdout(&out).trim(), "3");
    let (v, code) = json(&[
        "chromatic-number",
        "--book",
        "-m",
        "5",
        "-n",
        "1",
        "-l",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["source"], "oracle");
}

#[test]
fn chromatic_number_of_file() {
    let f = Files::new();
    let path = f.write("loop.sg", "p signed 1 1\ne 0 0 +\n");
    let out = sigchrom(&["chromatic-number", &path]);
    assert_eq!(stdout(&out).trim(), "uncolorable");
    // ±1 alone cannot separate c(x) from both c(y) and -c(y); 0 is needed.
    let out = sigchrom(&["chromatic-number", &f.c2minus()]);
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn classes_table() {
    let (v, code) = json(&["classes", "-m", "3", "-n", "2"]);
    assert_eq!(code, 0);
    let rows = v["payload"]["classes"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let total: u64 = rows.iter().map(|r| r["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 32);
}

#[test]
fn verify_small_matrix() {
    let out = sigchrom(&["verify", "-m", "3-4", "-n", "1-2"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("28/28 cells pass"));
}

#[test]
fn emit_round_trips_through_poly() {
    let f = Files::new();
    let out = sigchrom(&["book", "-m", "4", "-n", "2", "-l", "1", "--emit"]);
    let path = f.write("book.sg", &stdout(&out));
    let from_file = sigchrom(&["poly", &path]);
    let closed = sigchrom(&["book", "-m", "4", "-n", "2", "-l", "1"]);
    assert_eq!(stdout(&from_file), stdout(&closed));
}

#[test]
fn json_polynomial_round_trips() {
    let (v, _) = json(&[
        "book", "-m", "5", "-n", "3", "-l", "2", "--method", "engine",
    ]);
    let coeffs = &v["payload"]["coefficients"];
    let p = Polynomial::from_json(coeffs).unwrap();
    assert_eq!(&p.to_json(), coeffs);
    assert_eq!(p.to_string(), v["payload"]["text"].as_str().unwrap());
}

#[test]
fn exit_codes_are_distinct() {
    let f = Files::new();
    let bad = f.write("bad.sg", "p signed 2 1\ne 0 5 +\n");
    let parse = sigchrom(&["poly", &bad]).status.code().unwrap();
    let budget = sigchrom(&[
        "--budget", "3", "book", "-m", "5", "-n", "2", "-l", "1", "--method", "engine",
    ])
    .status
    .code()
    .unwrap();
    let missing = sigchrom(&["poly", "/nonexistent/graph.sg"])
        .status
        .code()
        .unwrap();
    assert_eq!(parse, 3);
    assert_eq!(budget, 4);
    assert_eq!(missing, 1);

    let (v, code) = json(&["poly", &bad]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "parse");
}

#[test]
fn invalid_book_is_rejected() {
    let out = sigchrom(&["book", "-m", "2", "-n", "2", "-l", "0"]);
    assert!(!out.status.success());
    let out = sigchrom(&["book", "-m", "3", "-n", "2", "-l", "3"]);
    assert!(!out.status.success());
}
