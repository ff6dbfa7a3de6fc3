//! Versioned JSON rendering of expressions.

use num_bigint::BigInt;
use packhopf::scalars::Q;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, ParseError};
use crate::expr::{parse_term, Expr};

pub const SCHEMA: u32 = 1;

/// One term of a combination; the integers are decimal strings so that
/// arbitrary sizes survive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub term: String,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExprDocument {
    pub schema: u32,
    pub command: String,
    pub result: Vec<TermRecord>,
}

pub fn records(x: &Expr) -> Vec<TermRecord> {
    x.iter()
        .map(|(t, c)| TermRecord {
            term: t.to_string(),
            numerator: c.numer().to_string(),
            denominator: c.denom().to_string(),
        })
        .collect()
}

pub fn from_records(records: &[TermRecord]) -> Result<Expr, CliError> {
    let mut out = Expr::zero();
    for r in records {
        let num: BigInt = r
            .numerator
            .parse()
            .map_err(|_| ParseError::new(&r.numerator, 0, "bad numerator"))?;
        let den: BigInt = r
            .denominator
            .parse()
            .map_err(|_| ParseError::new(&r.denominator, 0, "bad denominator"))?;
        if den == BigInt::from(0) {
            return Err(ParseError::new(&r.denominator, 0, "zero denominator").into());
        }
        out.add_term(parse_term(&r.term)?, Q::new(num, den));
    }
    Ok(out)
}

pub fn to_json(command: &str, x: &Expr) -> String {
    let doc = ExprDocument {
        schema: SCHEMA,
        command: command.to_string(),
        result: records(x),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<Expr, CliError> {
    let doc: ExprDocument = serde_json::from_str(s)?;
    if doc.schema != SCHEMA {
        return Err(CliError::Usage(format!("unsupported schema version {}", doc.schema)));
    }
    from_records(&doc.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    #[test]
    fn round_trip() {
        let x = parse_expr("-[1,2] ⊗ [1] + 2[1,1] ⊗ [] - 7/3[] ⊗ [1]").unwrap();
        let s = to_json("compute", &x);
        assert!(s.starts_with(r#"{"schema":1"#));
        assert_eq!(from_json(&s).unwrap(), x);
    }
}
