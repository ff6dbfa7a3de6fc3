//! Textual linear combinations over the registered bases.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use packhopf::compext::ExtComposition;
use packhopf::composition::Composition;
use packhopf::hopf::Dual;
use packhopf::pword::PackedWord;
use packhopf::qsymnsym::{DualMonomial, Monomial};
use packhopf::scalars::{LinComb, Tensor, Q};

use crate::error::{CliError, ParseError};

/// A basis label from any of the supported families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Word(PackedWord),
    DualWord(Dual<PackedWord>),
    Comp(Composition),
    DualComp(Dual<Composition>),
    Ext(ExtComposition),
    DualExt(Dual<ExtComposition>),
    Mono(Monomial),
    DualMono(DualMonomial),
}

/// Which syntactic family a label belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Word,
    DualWord,
    Comp,
    DualComp,
    Ext,
    DualExt,
    Mono,
    DualMono,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Word => "packed word [..]",
            Family::DualWord => "dual word Z[..]",
            Family::Comp => "composition (..)",
            Family::DualComp => "dual composition Z(..)",
            Family::Ext => "extended composition (a0; ..)",
            Family::DualExt => "dual extended composition Z(a0; ..)",
            Family::Mono => "monomial M(..)",
            Family::DualMono => "dual monomial M*(..)",
        })
    }
}

impl Label {
    pub fn family(&self) -> Family {
        match self {
            Label::Word(_) => Family::Word,
            Label::DualWord(_) => Family::DualWord,
            Label::Comp(_) => Family::Comp,
            Label::DualComp(_) => Family::DualComp,
            Label::Ext(_) => Family::Ext,
            Label::DualExt(_) => Family::DualExt,
            Label::Mono(_) => Family::Mono,
            Label::DualMono(_) => Family::DualMono,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Label::Word(w) | Label::DualWord(Dual(w)) => w.len(),
            Label::Comp(c) | Label::DualComp(Dual(c)) | Label::Mono(Monomial(c)) | Label::DualMono(DualMonomial(c)) => {
                c.weight()
            }
            Label::Ext(e) | Label::DualExt(Dual(e)) => e.degree(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Word(x) => x.fmt(f),
            Label::DualWord(x) => x.fmt(f),
            Label::Comp(x) => x.fmt(f),
            Label::DualComp(x) => x.fmt(f),
            Label::Ext(x) => x.fmt(f),
            Label::DualExt(x) => x.fmt(f),
            Label::Mono(x) => x.fmt(f),
            Label::DualMono(x) => x.fmt(f),
        }
    }
}

/// A parsed expression: a combination of tensors of labels.
pub type Expr = LinComb<Tensor<Label>>;

/// Lifts a single-leg combination into an expression.
pub fn lift<B: Ord + Clone>(x: &LinComb<B>, f: impl Fn(&B) -> Label) -> Expr {
    x.map_labels(|b| Tensor(vec![f(b)]))
}

/// Lifts a two-leg combination into an expression.
pub fn lift2<B: Ord + Clone>(x: &LinComb<(B, B)>, f: impl Fn(&B) -> Label) -> Expr {
    x.map_labels(|(a, b)| Tensor(vec![f(a), f(b)]))
}

/// Family shared by every label of the expression, `None` when it is zero.
pub fn family_of(x: &Expr) -> Result<Option<Family>, CliError> {
    let mut found: Option<Family> = None;
    for t in x.labels() {
        for l in &t.0 {
            match found {
                None => found = Some(l.family()),
                Some(f) if f != l.family() => {
                    return Err(CliError::Usage(format!("expression mixes a {f} with a {}", l.family())));
                }
                _ => {}
            }
        }
    }
    Ok(found)
}

/// Parses a full expression such as `2[1,2] - 1/3*Z[1] ⊗ Z[1]`.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(input);
    let x = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    if let Err(e) = x.arity() {
        return Err(ParseError::new(input, 0, e.to_string()));
    }
    if let Err(e) = family_of(&x) {
        return Err(ParseError::new(input, 0, e.to_string()));
    }
    Ok(x)
}

/// Parses a single tensor term with no coefficient, e.g. `[1] ⊗ [1,1]`.
pub fn parse_term(input: &str) -> Result<Tensor<Label>, ParseError> {
    let mut p = Parser::new(input);
    p.skip_ws();
    let t = p.tensor()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser { input, pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.input, self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{s}'")))
        }
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let n = digits.parse().map_err(|_| self.error("bad number"))?;
        self.pos += digits.len();
        Ok(n)
    }

    fn small(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let n = self.number()?;
        usize::try_from(n).map_err(|_| ParseError::new(self.input, start, "number too large"))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut out = Expr::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = if self.eat("-") {
                true
            } else if self.eat("+") {
                false
            } else if first {
                false
            } else {
                break;
            };
            let (coeff, term) = self.signed_term()?;
            if let Some(t) = term {
                out.add_term(t, if negative { -coeff } else { coeff });
            }
            first = false;
            self.skip_ws();
            if self.at_end() {
                break;
            }
        }
        Ok(out)
    }

    /// A coefficient and tensor; a bare `0` stands for the zero term.
    fn signed_term(&mut self) -> Result<(Q, Option<Tensor<Label>>), ParseError> {
        self.skip_ws();
        let mut coeff = Q::from_integer(BigInt::from(1));
        let mut explicit = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.number()?;
            let mut den = BigInt::from(1);
            if self.eat("/") {
                let at = self.pos;
                den = self.number()?;
                if den.is_zero() {
                    return Err(ParseError::new(self.input, at, "zero denominator"));
                }
            }
            coeff = Q::new(num, den);
            explicit = true;
            self.eat("*");
        }
        self.skip_ws();
        if explicit && coeff.is_zero() && (self.at_end() || matches!(self.peek(), Some('+' | '-'))) {
            return Ok((coeff, None));
        }
        Ok((coeff, Some(self.tensor()?)))
    }

    fn tensor(&mut self) -> Result<Tensor<Label>, ParseError> {
        let mut legs = vec![self.label()?];
        while self.eat("⊗") {
            legs.push(self.label()?);
        }
        Ok(Tensor(legs))
    }

    fn label(&mut self) -> Result<Label, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let fail = |e: packhopf::AlgebraError| ParseError::new(self.input, start, e.to_string());
        if self.eat("M*") {
            let c = self.composition()?;
            return Ok(Label::DualMono(DualMonomial(c)));
        }
        if self.eat("M") {
            let c = self.composition()?;
            return Ok(Label::Mono(Monomial(c)));
        }
        let dual = self.eat("Z");
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                let letters = self.list('[', ']')?;
                let letters = letters
                    .into_iter()
                    .map(|l| u32::try_from(l).map_err(|_| ParseError::new(self.input, start, "letter too large")))
                    .collect::<Result<Vec<_>, _>>()?;
                let w = PackedWord::new(letters).map_err(fail)?;
                Ok(if dual { Label::DualWord(Dual(w)) } else { Label::Word(w) })
            }
            Some('(') => {
                self.pos += 1;
                let (alpha0, parts) = self.paren_body()?;
                match alpha0 {
                    Some(a0) => {
                        let e = ExtComposition::from_parts(a0, parts).map_err(fail)?;
                        Ok(if dual { Label::DualExt(Dual(e)) } else { Label::Ext(e) })
                    }
                    None => {
                        let c = Composition::new(parts).map_err(fail)?;
                        Ok(if dual { Label::DualComp(Dual(c)) } else { Label::Comp(c) })
                    }
                }
            }
            _ => Err(self.error("expected a basis label")),
        }
    }

    fn composition(&mut self) -> Result<Composition, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let parts = self.list('(', ')')?;
        Composition::new(parts).map_err(|e| ParseError::new(self.input, start, e.to_string()))
    }

    /// Comma list between the delimiters, possibly empty.
    fn list(&mut self, open: char, close: char) -> Result<Vec<usize>, ParseError> {
        self.expect(&open.to_string())?;
        let close = close.to_string();
        let mut out = Vec::new();
        if self.eat(&close) {
            return Ok(out);
        }
        loop {
            out.push(self.small()?);
            if self.eat(&close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    /// Body after `(`: either `a,b,..)` or `a0; a,b,..)`.
    fn paren_body(&mut self) -> Result<(Option<usize>, Vec<usize>), ParseError> {
        let mut parts = Vec::new();
        if self.eat(")") {
            return Ok((None, parts));
        }
        let first = self.small()?;
        if self.eat(";") {
            if self.eat(")") {
                return Ok((Some(first), parts));
            }
            loop {
                parts.push(self.small()?);
                if self.eat(")") {
                    return Ok((Some(first), parts));
                }
                self.expect(",")?;
            }
        }
        parts.push(first);
        loop {
            if self.eat(")") {
                return Ok((None, parts));
            }
            self.expect(",")?;
            parts.push(self.small()?);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use packhopf::scalars::frac;

    fn word(l: &[u32]) -> Label {
        Label::Word(PackedWord::new(l.to_vec()).unwrap())
    }

    #[test]
    fn parses_signs_and_fractions() {
        let x = parse_expr("-[1,2,4,3] + 2[1,2,3,4] - 3/2*[1]").unwrap();
        assert_eq!(x.coeff(&Tensor(vec![word(&[1, 2, 4, 3])])), frac(-1, 1));
        assert_eq!(x.coeff(&Tensor(vec![word(&[1, 2, 3, 4])])), frac(2, 1));
        assert_eq!(x.coeff(&Tensor(vec![word(&[1])])), frac(-3, 2));
    }

    #[test]
    fn extended_compositions_with_and_without_spaces() {
        let a = parse_expr("(3;1,4,2,2,2)").unwrap();
        let b = parse_expr("(3; 1,4,2,2,2)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(3; 1,4,2,2,2)");
        assert_eq!(parse_expr("(2;)").unwrap().to_string(), "(2;)");
        assert_eq!(parse_expr("(0;)").unwrap().to_string(), "(0;)");
    }

    #[test]
    fn zero_and_tensors() {
        assert!(parse_expr("0").unwrap().is_zero());
        let t = parse_expr("[1] ⊗ [1,1] + [] ⊗ [1]").unwrap();
        assert_eq!(t.arity().unwrap(), Some(2));
        assert_eq!(parse_expr(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn families() {
        for s in ["Z[2,1]", "(1,2)", "Z(1,2)", "Z(0; 1)", "M(2,1)", "M*(2,1)", "()"] {
            let x = parse_expr(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_expr("[1,2] + [1,3]").unwrap_err();
        assert_eq!(e.position, 8);
        assert!(parse_expr("[1] + (1)").is_err());
        assert!(parse_expr("[1] + [1] ⊗ [1]").is_err());
        assert_eq!(parse_expr("[1] +").unwrap_err().position, 5);
        assert!(parse_expr("1/0[1]").is_err());
        assert!(parse_expr("(1,0)").is_err());
    }
}
