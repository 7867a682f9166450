//! Textual generator specifications.
//!
//! ```text
//! spec      := "identity" | "dblexp"
//!            | "linear:" param | "power:" param | "exp:" param
//!            | "piecewise:" point ("," point)*
//!            | "table:" (path | "[" nat ("," nat)* "]")
//! param     := nat | nat "/" nat
//! point     := "(" nat "," nat ")"
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact positive rational parameter.
pub type Rational = Ratio<BigUint>;

/// Where a tabulated projector gets its values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TableSource {
    File(PathBuf),
    Inline(Vec<BigUint>),
}

/// A parsed generator family with exact parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    /// `f(x) = x`, the Diophantine arithmetic.
    Identity,
    /// `f(x) = k x`.
    Linear(Rational),
    /// `f(x) = x^k`.
    Power(Rational),
    /// `f(x) = b^x`.
    Exp(Rational),
    /// `f_T(n) = 2^(2^n)`.
    DoubleExp,
    /// Linear interpolation through integer breakpoints, extended past the
    /// last one with the last slope.
    Piecewise(Vec<(BigUint, BigUint)>),
    /// Explicit projector values, index = argument.
    Table(TableSource),
}

impl GeneratorSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Parser { src: text, pos: 0 }.spec()
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GeneratorSpec::Identity => "identity",
            GeneratorSpec::Linear(_) => "linear",
            GeneratorSpec::Power(_) => "power",
            GeneratorSpec::Exp(_) => "exp",
            GeneratorSpec::DoubleExp => "dblexp",
            GeneratorSpec::Piecewise(_) => "piecewise",
            GeneratorSpec::Table(_) => "table",
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorSpec::parse(s)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Identity => f.write_str("identity"),
            GeneratorSpec::DoubleExp => f.write_str("dblexp"),
            GeneratorSpec::Linear(k) => {
                f.write_str("linear:")?;
                write_rational(f, k)
            }
            GeneratorSpec::Power(k) => {
                f.write_str("power:")?;
                write_rational(f, k)
            }
            GeneratorSpec::Exp(b) => {
                f.write_str("exp:")?;
                write_rational(f, b)
            }
            GeneratorSpec::Piecewise(points) => {
                f.write_str("piecewise:")?;
                for (i, (x, y)) in points.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "({x},{y})")?;
                }
                Ok(())
            }
            GeneratorSpec::Table(TableSource::File(path)) => {
                write!(f, "table:{}", path.display())
            }
            GeneratorSpec::Table(TableSource::Inline(values)) => {
                f.write_str("table:[")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected '{token}'"))
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn nat(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected a natural number");
        }
        let v = self.rest()[..len].parse().expect("ascii digits");
        self.pos += len;
        Ok(v)
    }

    fn positive_param(&mut self) -> Result<Rational> {
        let start = self.pos;
        let p = self.nat()?;
        let q = if self.eat("/") {
            self.nat()?
        } else {
            BigUint::one()
        };
        if q.is_zero() {
            return Err(Error::parse(start, "zero denominator"));
        }
        if p.is_zero() {
            return Err(Error::parse(start, "parameter must be positive"));
        }
        Ok(Rational::new(p, q))
    }

    fn spec(&mut self) -> Result<GeneratorSpec> {
        self.skip_ws();
        let keyword_len = self
            .rest()
            .bytes()
            .take_while(u8::is_ascii_alphabetic)
            .count();
        let start = self.pos;
        let keyword = &self.rest()[..keyword_len];
        self.pos += keyword_len;
        let spec = match keyword {
            "identity" => GeneratorSpec::Identity,
            "dblexp" => GeneratorSpec::DoubleExp,
            "linear" | "power" | "exp" => {
                self.expect(":")?;
                let k = self.positive_param()?;
                match keyword {
                    "linear" => GeneratorSpec::Linear(k),
                    "power" => GeneratorSpec::Power(k),
                    _ if k <= Rational::one() => {
                        return Err(Error::parse(start, "exp base must exceed 1"));
                    }
                    _ => GeneratorSpec::Exp(k),
                }
            }
            "piecewise" => {
                self.expect(":")?;
                self.piecewise(start)?
            }
            "table" => {
                self.expect(":")?;
                self.table()?
            }
            "" => return self.err("expected a generator family"),
            other => {
                return Err(Error::parse(
                    start,
                    format!("unknown generator family '{other}'"),
                ))
            }
        };
        self.end()?;
        Ok(spec)
    }

    fn piecewise(&mut self, start: usize) -> Result<GeneratorSpec> {
        let mut points: Vec<(BigUint, BigUint)> = Vec::new();
        loop {
            let at = self.pos;
            self.expect("(")?;
            let x = self.nat()?;
            self.expect(",")?;
            let y = self.nat()?;
            self.expect(")")?;
            if let Some((px, py)) = points.last() {
                if &x <= px {
                    return Err(Error::parse(
                        at,
                        "breakpoints must be strictly increasing in x",
                    ));
                }
                if &y < py {
                    return Err(Error::parse(at, "breakpoint values must be non-decreasing"));
                }
            } else if !x.is_zero() {
                return Err(Error::parse(at, "first breakpoint must be at x = 0"));
            }
            points.push((x, y));
            if !self.eat(",") {
                break;
            }
        }
        match points.as_slice() {
            [.., (_, a), (_, b)] if a < b => Ok(GeneratorSpec::Piecewise(points)),
            [_] => Err(Error::parse(
                start,
                "piecewise needs at least two breakpoints",
            )),
            _ => Err(Error::parse(start, "last segment must have positive slope")),
        }
    }

    fn table(&mut self) -> Result<GeneratorSpec> {
        self.skip_ws();
        if self.eat("[") {
            let mut values = vec![self.nat()?];
            while self.eat(",") {
                values.push(self.nat()?);
            }
            self.expect("]")?;
            return Ok(GeneratorSpec::Table(TableSource::Inline(values)));
        }
        let path = self.rest().trim_end();
        if path.is_empty() {
            return self.err("expected a table path");
        }
        self.pos = self.src.len();
        Ok(GeneratorSpec::Table(TableSource::File(PathBuf::from(path))))
    }
}
