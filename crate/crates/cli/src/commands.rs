//! The subcommands, independent of argument parsing.

use std::fmt::Write as _;
use std::str::FromStr;

use packhopf::compext::{pi_project_lc, Ce, CeDual};
use packhopf::hopf::{antipode_generic, coproduct_lc, primitive_basis, product_lc, reduced_coproduct, Dual, GradedHopf};
use packhopf::ispw::{Ispw, IspwDual};
use packhopf::perms::{split_product_lc, Sh, ShDual, SplitProduct};
use packhopf::qsymnsym::{psi_closed_lc, psi_star_closed_lc, NSym, QSym};
use packhopf::scalars::LinComb;
use packhopf::suites::{run_suite, Suite};
use packhopf::wmat::WMat;
use packhopf::wmatdual::WMatDual;
use packhopf::AlgebraError;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::expr::{lift, lift2, parse_expr, Expr, Label};
use crate::json::{records, SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    WMat,
    WMatDual,
    Sh,
    ShDual,
    Ispw,
    IspwDual,
    Ce,
    CeDual,
    QSym,
    NSym,
}

impl Algebra {
    pub const ALL: [Algebra; 10] = [
        Algebra::WMat,
        Algebra::WMatDual,
        Algebra::Sh,
        Algebra::ShDual,
        Algebra::Ispw,
        Algebra::IspwDual,
        Algebra::Ce,
        Algebra::CeDual,
        Algebra::QSym,
        Algebra::NSym,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::WMat => "wmat",
            Algebra::WMatDual => "wmat-dual",
            Algebra::Sh => "sh",
            Algebra::ShDual => "sh-dual",
            Algebra::Ispw => "ispw",
            Algebra::IspwDual => "ispw-dual",
            Algebra::Ce => "ce",
            Algebra::CeDual => "ce-dual",
            Algebra::QSym => "qsym",
            Algebra::NSym => "nsym",
        }
    }
}

impl FromStr for Algebra {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Algebra::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| {
            let names: Vec<_> = Algebra::ALL.iter().map(|a| a.name()).collect();
            CliError::Usage(format!("unknown algebra '{s}' (expected one of {})", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub max_degree: Option<usize>,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: None,
            seed: 1,
        }
    }
}

/// What a command produced: text for humans, a JSON document, and whether
/// it succeeded (only `verify` can fail without an error).
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub success: bool,
}

/// Conversion between parsed labels and the basis of one algebra.
trait Codec: GradedHopf {
    fn decode(&self, l: &Label) -> Option<Self::Basis>;
    fn encode(&self, b: &Self::Basis) -> Label;
}

macro_rules! codec {
    ($ty:ty, $variant:ident, $guard:expr) => {
        impl Codec for $ty {
            fn decode(&self, l: &Label) -> Option<Self::Basis> {
                match l {
                    Label::$variant(b) if $guard(b) => Some(b.clone()),
                    _ => None,
                }
            }

            fn encode(&self, b: &Self::Basis) -> Label {
                Label::$variant(b.clone())
            }
        }
    };
}

codec!(WMat, Word, |_: &_| true);
codec!(WMatDual, DualWord, |_: &_| true);
codec!(Sh, Word, |w: &packhopf::pword::PackedWord| w.is_permutation());
codec!(ShDual, DualWord, |z: &Dual<packhopf::pword::PackedWord>| z.0.is_permutation());
codec!(Ispw, Comp, |_: &_| true);
codec!(IspwDual, DualComp, |_: &_| true);
codec!(Ce, Ext, |_: &_| true);
codec!(CeDual, DualExt, |_: &_| true);
codec!(QSym, Mono, |_: &_| true);
codec!(NSym, DualMono, |_: &_| true);

fn decode_operand<H: Codec>(h: &H, x: &Expr) -> Result<LinComb<H::Basis>, CliError> {
    let mut out = LinComb::zero();
    for (t, c) in x.iter() {
        let [l] = t.0.as_slice() else {
            return Err(CliError::Usage(format!("operand term {t} is a tensor; expected an element of {}", h.name())));
        };
        let b = h
            .decode(l)
            .ok_or_else(|| CliError::Usage(format!("{l} is not a basis element of {}", h.name())))?;
        out.add_term(b, c.clone());
    }
    Ok(out)
}

fn operand_degree(x: &Expr) -> usize {
    x.labels().map(|t| t.0.iter().map(Label::degree).sum()).max().unwrap_or(0)
}

fn check_cap(algebra: &str, degree: usize, cap: usize) -> Result<(), CliError> {
    if degree > cap {
        return Err(AlgebraError::Resource {
            algebra: algebra.to_string(),
            degree,
            cap,
        }
        .into());
    }
    Ok(())
}

fn arity(op: &str, operands: &[Expr], n: usize) -> Result<(), CliError> {
    if operands.len() != n {
        return Err(CliError::Usage(format!("{op} takes {n} operand(s), got {}", operands.len())));
    }
    Ok(())
}

fn generic_op<H: Codec>(h: &H, op: &str, operands: &[Expr], opts: &Options) -> Result<Expr, CliError> {
    // Only the antipode recursion is capped by default; an explicit bound caps everything.
    let cap = match (opts.max_degree, op) {
        (Some(m), _) => Some(m),
        (None, "antipode") => Some(h.max_degree()),
        (None, _) => None,
    };
    if let Some(cap) = cap {
        let largest = operands.iter().map(operand_degree).max().unwrap_or(0);
        check_cap(h.name(), largest, cap)?;
    }
    let xs = operands.iter().map(|x| decode_operand(h, x)).collect::<Result<Vec<_>, _>>()?;
    let enc = |b: &H::Basis| h.encode(b);
    match op {
        "product" => {
            if xs.len() < 2 {
                return Err(CliError::Usage("product takes at least two operands".into()));
            }
            let mut acc = xs[0].clone();
            for x in &xs[1..] {
                acc = product_lc(h, &acc, x);
            }
            Ok(lift(&acc, enc))
        }
        "coproduct" => {
            arity(op, operands, 1)?;
            Ok(lift2(&coproduct_lc(h, &xs[0]), enc))
        }
        "reduced-coproduct" => {
            arity(op, operands, 1)?;
            Ok(lift2(&reduced_coproduct(h, &xs[0])?, enc))
        }
        "antipode" => {
            arity(op, operands, 1)?;
            Ok(lift(&antipode_generic(h, &xs[0]), enc))
        }
        _ => Err(CliError::Usage(format!("unknown operation '{op}' for {}", h.name()))),
    }
}

fn split_op(op: &str) -> Option<SplitProduct> {
    Some(match op {
        "nw" => SplitProduct::NW,
        "ne" => SplitProduct::NE,
        "sw" => SplitProduct::SW,
        "se" => SplitProduct::SE,
        "left" => SplitProduct::Left,
        "right" => SplitProduct::Right,
        "wedge" => SplitProduct::Wedge,
        "vee" => SplitProduct::Vee,
        _ => return None,
    })
}

/// Evaluates one operation on already parsed operands.
pub fn compute_expr(algebra: Algebra, op: &str, operands: &[Expr], opts: &Options) -> Result<Expr, CliError> {
    match (algebra, op) {
        (Algebra::WMat, "pi") => {
            arity(op, operands, 1)?;
            let x = decode_operand(&WMat::new(), &operands[0])?;
            Ok(lift(&pi_project_lc(&x), |e| Label::Ext(e.clone())))
        }
        (Algebra::ShDual, _) if split_op(op).is_some() => {
            arity(op, operands, 2)?;
            let h = ShDual::new();
            let (x, y) = (decode_operand(&h, &operands[0])?, decode_operand(&h, &operands[1])?);
            let z = split_product_lc(split_op(op).expect("checked"), &x, &y)?;
            Ok(lift(&z, |b| Label::DualWord(b.clone())))
        }
        (Algebra::IspwDual, "psi") => {
            arity(op, operands, 1)?;
            let x = decode_operand(&IspwDual::new(), &operands[0])?;
            Ok(lift(&psi_closed_lc(&x), |m| Label::Mono(m.clone())))
        }
        (Algebra::NSym, "psi-star") => {
            arity(op, operands, 1)?;
            let x = decode_operand(&NSym::default(), &operands[0])?;
            Ok(lift(&psi_star_closed_lc(&x), |c| Label::Comp(c.clone())))
        }
        (Algebra::WMat, _) => generic_op(&WMat::new(), op, operands, opts),
        (Algebra::WMatDual, _) => generic_op(&WMatDual::new(), op, operands, opts),
        (Algebra::Sh, _) => generic_op(&Sh::default(), op, operands, opts),
        (Algebra::ShDual, _) => generic_op(&ShDual::new(), op, operands, opts),
        (Algebra::Ispw, _) => generic_op(&Ispw::new(), op, operands, opts),
        (Algebra::IspwDual, _) => generic_op(&IspwDual::new(), op, operands, opts),
        (Algebra::Ce, _) => generic_op(&Ce::new(), op, operands, opts),
        (Algebra::CeDual, _) => generic_op(&CeDual::new(), op, operands, opts),
        (Algebra::QSym, _) => generic_op(&QSym::default(), op, operands, opts),
        (Algebra::NSym, _) => generic_op(&NSym::default(), op, operands, opts),
    }
}

pub fn compute(algebra: Algebra, op: &str, operands: &[String], opts: &Options) -> Result<Outcome, CliError> {
    let parsed = operands.iter().map(|s| parse_expr(s)).collect::<Result<Vec<_>, _>>()?;
    let result = compute_expr(algebra, op, &parsed, opts)?;
    let command = format!("compute {} {op}", algebra.name());
    Ok(Outcome {
        text: format!("{result}\n"),
        json: json!({ "schema": SCHEMA, "command": command, "result": records(&result) }),
        success: true,
    })
}

trait Visitor {
    type Output;
    fn visit<H: Codec>(self, h: &H) -> Self::Output;
}

fn with_algebra<V: Visitor>(algebra: Algebra, v: V) -> V::Output {
    match algebra {
        Algebra::WMat => v.visit(&WMat::new()),
        Algebra::WMatDual => v.visit(&WMatDual::new()),
        Algebra::Sh => v.visit(&Sh::default()),
        Algebra::ShDual => v.visit(&ShDual::new()),
        Algebra::Ispw => v.visit(&Ispw::new()),
        Algebra::IspwDual => v.visit(&IspwDual::new()),
        Algebra::Ce => v.visit(&Ce::new()),
        Algebra::CeDual => v.visit(&CeDual::new()),
        Algebra::QSym => v.visit(&QSym::default()),
        Algebra::NSym => v.visit(&NSym::default()),
    }
}

struct Primitives<'a> {
    degree: usize,
    opts: &'a Options,
}

impl Visitor for Primitives<'_> {
    type Output = Result<(String, Vec<Expr>), CliError>;

    fn visit<H: Codec>(self, h: &H) -> Self::Output {
        check_cap(h.name(), self.degree, self.opts.max_degree.unwrap_or(h.max_degree()))?;
        let basis = primitive_basis(h, self.degree)?;
        Ok((h.name().to_string(), basis.iter().map(|v| lift(v, |b| h.encode(b))).collect()))
    }
}

/// Canonical basis of the primitive elements of degree `degree`.
pub fn primitive_vectors(algebra: Algebra, degree: usize, opts: &Options) -> Result<Vec<Expr>, CliError> {
    Ok(with_algebra(algebra, Primitives { degree, opts })?.1)
}

pub fn primitives(algebra: Algebra, degree: usize, opts: &Options) -> Result<Outcome, CliError> {
    let (name, vectors) = with_algebra(algebra, Primitives { degree, opts })?;
    let mut text = format!("dim Prim({name})_{degree} = {}\n", vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        writeln!(text, "V{} = {v}", i + 1).expect("writing to a string");
    }
    let json = json!({
        "schema": SCHEMA,
        "command": format!("primitives {} {degree}", algebra.name()),
        "dimension": vectors.len(),
        "vectors": vectors.iter().map(records).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, success: true })
}

/// One row of the dimension table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimRow {
    pub degree: usize,
    pub dim: usize,
    pub primitive: usize,
}

struct Dims<'a> {
    max_degree: usize,
    opts: &'a Options,
}

impl Visitor for Dims<'_> {
    type Output = Result<(String, Vec<DimRow>), CliError>;

    fn visit<H: Codec>(self, h: &H) -> Self::Output {
        let cap = self.opts.max_degree.unwrap_or(h.max_degree()).min(h.max_degree());
        check_cap(h.name(), self.max_degree, cap)?;
        let mut rows = Vec::new();
        for n in 1..=self.max_degree {
            rows.push(DimRow {
                degree: n,
                dim: h.basis(n)?.len(),
                primitive: primitive_basis(h, n)?.len(),
            });
        }
        Ok((h.name().to_string(), rows))
    }
}

pub fn dim_table(algebra: Algebra, max_degree: usize, opts: &Options) -> Result<Vec<DimRow>, CliError> {
    Ok(with_algebra(algebra, Dims { max_degree, opts })?.1)
}

pub fn dims(algebra: Algebra, max_degree: usize, opts: &Options) -> Result<Outcome, CliError> {
    let (name, rows) = with_algebra(algebra, Dims { max_degree, opts })?;
    let mut text = format!("{name}\n{:>3} {:>8} {:>8}\n", "n", "dim", "prim");
    for r in &rows {
        writeln!(text, "{:>3} {:>8} {:>8}", r.degree, r.dim, r.primitive).expect("writing to a string");
    }
    let json = json!({
        "schema": SCHEMA,
        "command": format!("dims {} {max_degree}", algebra.name()),
        "rows": rows.iter().map(|r| json!({"degree": r.degree, "dim": r.dim, "prim": r.primitive})).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, success: true })
}

pub fn verify(suite: Suite, max_degree: usize, opts: &Options) -> Result<Outcome, CliError> {
    let report = run_suite(suite, max_degree, opts.seed)?;
    let failed = report.failures().count();
    let mut text = report.to_string();
    writeln!(
        text,
        "{} checks, {} failed: {}",
        report.checks.len(),
        failed,
        if failed == 0 { "PASS" } else { "FAIL" }
    )
    .expect("writing to a string");
    let json = json!({
        "schema": SCHEMA,
        "command": format!("verify {suite} {max_degree}"),
        "passed": failed == 0,
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "degree": c.degree,
            "passed": c.passed,
            "counterexample": c.counterexample,
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        text,
        json,
        success: failed == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(alg: Algebra, op: &str, args: &[&str]) -> String {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        compute(alg, op, &args, &Options::default()).unwrap().text.trim_end().to_string()
    }

    #[test]
    fn algebra_names_round_trip() {
        for a in Algebra::ALL {
            assert_eq!(a.name().parse::<Algebra>().unwrap(), a);
        }
        assert!("wmatt".parse::<Algebra>().is_err());
    }

    #[test]
    fn operands_must_belong_to_the_algebra() {
        let opts = Options::default();
        assert!(compute(Algebra::Sh, "antipode", &["[1,1]".into()], &opts).is_err());
        assert!(compute(Algebra::Ispw, "antipode", &["[1]".into()], &opts).is_err());
        assert!(compute(Algebra::WMat, "coproduct", &["[1] ⊗ [1]".into()], &opts).is_err());
        assert!(compute(Algebra::WMat, "antipode", &["[1]".into(), "[1]".into()], &opts).is_err());
    }

    #[test]
    fn degree_cap_is_a_resource_error() {
        let opts = Options {
            max_degree: Some(3),
            ..Options::default()
        };
        let e = compute(Algebra::WMat, "antipode", &["[1,2,3,4]".into()], &opts).unwrap_err();
        assert!(matches!(e, CliError::Algebra(AlgebraError::Resource { .. })));
    }

    #[test]
    fn special_operations() {
        assert_eq!(run(Algebra::WMat, "pi", &["[2,1,0,2]"]), "(1; 1,2)");
        assert_eq!(run(Algebra::IspwDual, "psi", &["Z(1)"]), "M(1)");
        assert_eq!(run(Algebra::NSym, "psi-star", &["M*(1)"]), "(1)");
        let quarters: Vec<Expr> = ["nw", "ne", "sw", "se"]
            .iter()
            .map(|op| parse_expr(&run(Algebra::ShDual, op, &["Z[2,1]", "Z[1]"])).unwrap())
            .collect();
        let whole = parse_expr(&run(Algebra::ShDual, "product", &["Z[2,1]", "Z[1]"])).unwrap();
        assert_eq!(quarters.iter().fold(Expr::zero(), |acc, x| &acc + x), whole);
    }
}
