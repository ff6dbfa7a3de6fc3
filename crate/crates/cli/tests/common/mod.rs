//! Running the worked-example fixtures through the binary.
#![allow(dead_code)]

use std::process::Command;

use packhopf_cli::expr::{parse_expr, Expr};

pub const FIXTURES: &str = include_str!("../fixtures/worked_examples.txt");

#[derive(Clone, Debug)]
pub struct Case {
    pub args: Vec<String>,
    pub expect_error: bool,
    pub expected: Vec<String>,
}

impl Case {
    pub fn label(&self) -> String {
        self.args.join(" ")
    }

    /// True when the arguments start with the given words.
    pub fn starts_with(&self, prefix: &[&str]) -> bool {
        self.args.len() >= prefix.len() && self.args.iter().zip(prefix).all(|(a, p)| a == p)
    }
}

pub fn cases() -> Vec<Case> {
    let mut out: Vec<Case> = Vec::new();
    for line in FIXTURES.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("$ ").or_else(|| line.strip_prefix("! ")) {
            out.push(Case {
                args: rest.split_whitespace().map(String::from).collect(),
                expect_error: line.starts_with('!'),
                expected: Vec::new(),
            });
        } else if !line.is_empty() {
            out.last_mut().expect("output before any command").expected.push(line.to_string());
        }
    }
    out
}

pub fn run(args: &[String]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_packhopf")).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
        out.status.code().unwrap_or(-1),
    )
}

fn collapse(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Basis vectors are only determined up to a nonzero scalar.
fn proportional(a: &Expr, b: &Expr) -> bool {
    let Some((t, c)) = a.iter().next() else {
        return b.is_zero();
    };
    let ratio = b.coeff(t) / c;
    !b.is_zero() && a.scale(&ratio) == *b
}

/// Lines agree if they are equal expressions, proportional `name = vector`
/// lines, or equal text up to whitespace.
fn same_line(expected: &str, actual: &str) -> bool {
    if let (Ok(a), Ok(b)) = (parse_expr(expected), parse_expr(actual)) {
        return a == b;
    }
    if let (Some((l1, r1)), Some((l2, r2))) = (expected.split_once(" = "), actual.split_once(" = ")) {
        if let (Ok(a), Ok(b)) = (parse_expr(r1), parse_expr(r2)) {
            return collapse(l1) == collapse(l2) && proportional(&a, &b);
        }
    }
    collapse(expected) == collapse(actual)
}

/// Runs one case; `Err` describes the mismatch.
pub fn check(case: &Case) -> Result<(), String> {
    let (stdout, stderr, code) = run(&case.args);
    let label = case.label();
    if case.expect_error {
        if code != 2 || stderr.is_empty() {
            return Err(format!("{label}: expected a diagnostic, got status {code}"));
        }
        return Ok(());
    }
    if code != 0 {
        return Err(format!("{label}: status {code}: {stderr}"));
    }
    let actual: Vec<&str> = stdout.lines().collect();
    if case.args[0] == "primitives" {
        // the header fixes the dimension; the basis may be listed only in part
        let dim: usize = actual[0]
            .rsplit(' ')
            .next()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| format!("{label}: no dimension header"))?;
        if actual.len() != dim + 1 {
            return Err(format!("{label}: {} vectors for dimension {dim}", actual.len() - 1));
        }
    } else if actual.len() != case.expected.len() {
        return Err(format!("{label}: expected {} lines, got:\n{stdout}", case.expected.len()));
    }
    for (e, a) in case.expected.iter().zip(&actual) {
        if !same_line(e, a) {
            return Err(format!("{label}:\n  expected {e}\n  got      {a}"));
        }
    }
    Ok(())
}

/// Checks every case accepted by `select`, returning the failures.
pub fn check_all(select: impl Fn(&Case) -> bool) -> (usize, Vec<String>) {
    let selected: Vec<Case> = cases().into_iter().filter(|c| select(c)).collect();
    let failures = selected.iter().filter_map(|c| check(c).err()).collect();
    (selected.len(), failures)
}
