//! Arithmetic expressions over element literals.
//!
//! `*` binds tighter than `+` and both associate to the left. Parentheses
//! are kept in the tree, because in a projective arithmetic `(a + b) + c`
//! and `a + (b + c)` can differ.

use std::fmt;

use nda_core::{Error, Nat, Natural, ProjectiveArithmetic, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Nat),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Group(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(n) => write!(f, "{n}"),
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Mul(a, b) => write!(f, "{a} * {b}"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() => {
                let rest = &self.src[self.pos..];
                let len = rest.bytes().take_while(u8::is_ascii_digit).count();
                let n: Nat = rest[..len].parse().expect("digits");
                self.pos += len;
                for suffix in ["_u", "_μ"] {
                    if self.src[self.pos..].starts_with(suffix) {
                        self.pos += suffix.len();
                    }
                }
                Ok(Expr::Lit(n))
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Parses `text`; errors carry the byte offset of the offending input.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => p.err(format!("unexpected '{c}'")),
    }
}

fn operands<'e>(e: &'e Expr, add: bool, out: &mut Vec<&'e Expr>) {
    match (e, add) {
        (Expr::Add(a, b), true) | (Expr::Mul(a, b), false) => {
            operands(a, add, out);
            operands(b, add, out);
        }
        _ => out.push(e),
    }
}

/// Evaluates `e` in `ar`. With `nary`, an unparenthesised run
/// `a + b + c` is one `Σⁿ(a, b, c)` instead of `(a ⊕ b) ⊕ c`, and likewise
/// for `*`.
pub fn eval<N: Natural>(ar: &ProjectiveArithmetic<N>, e: &Expr, nary: bool) -> Result<N> {
    match e {
        Expr::Lit(n) => N::try_from_big(n),
        Expr::Group(inner) => eval(ar, inner, nary),
        Expr::Add(..) | Expr::Mul(..) if nary => {
            let add = matches!(e, Expr::Add(..));
            let mut terms = Vec::new();
            operands(e, add, &mut terms);
            let values = terms
                .iter()
                .map(|t| eval(ar, t, nary))
                .collect::<Result<Vec<N>>>()?;
            if add {
                ar.sum_n(&values)
            } else {
                ar.prod_n(&values)
            }
        }
        Expr::Add(a, b) => ar.add(&eval(ar, a, nary)?, &eval(ar, b, nary)?),
        Expr::Mul(a, b) => ar.mul(&eval(ar, a, nary)?, &eval(ar, b, nary)?),
    }
}
