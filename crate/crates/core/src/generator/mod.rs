//! Generator functions and the projector / coprojector pair they induce.
//!
//! A generator `f` is evaluated only at natural arguments. The projector is
//! `f_T(n) = ceil(f(n))`, computed with exact integer arithmetic for every
//! family. The coprojector `f^T(y)` is the largest `m` with `f_T(m) <= y`,
//! found by monotone search over the projector alone.

mod spec;
mod validate;

use std::fs;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

pub use spec::{GeneratorSpec, Rational, TableSource};
pub use validate::{Condition, ValidationReport};

use crate::carrier::{Carrier, CarrierMap};
use crate::error::{Error, Result};
use crate::scalar::Natural;

/// Growth class of a projector, used only to choose the inverse search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    Linear,
    Polynomial,
    Exponential,
    Tabulated,
}

#[derive(Debug, Clone)]
enum Family {
    Identity,
    Linear {
        p: BigUint,
        q: BigUint,
    },
    Power {
        p: u64,
        q: u32,
    },
    Exp {
        p: BigUint,
        q: BigUint,
        p_log2: Option<u64>,
    },
    DoubleExp,
    Piecewise(Arc<[(BigUint, BigUint)]>),
    Table(Arc<[BigUint]>),
}

/// A validated-on-parse generator: immutable, cheap to clone, and safe to
/// share between threads.
#[derive(Debug, Clone)]
pub struct Generator {
    spec: GeneratorSpec,
    family: Family,
    growth: Growth,
}

/// Parses a generator specification and loads any table it names.
pub fn parse_generator_spec(text: &str) -> Result<Generator> {
    Generator::from_spec(GeneratorSpec::parse(text)?)
}

fn ceil_div(num: BigUint, den: &BigUint) -> BigUint {
    (num + den - 1u32) / den
}

fn small_param(v: &BigUint, what: &str) -> Result<u64> {
    v.to_u64()
        .filter(|&v| v <= u32::MAX as u64)
        .ok_or_else(|| Error::Invalid(format!("{what} {v} is too large")))
}

fn read_table(path: &std::path::Path) -> Result<Vec<BigUint>> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut values = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            let v = trimmed
                .parse::<BigUint>()
                .map_err(|e| Error::parse(offset, format!("{}: {e}", path.display())))?;
            values.push(v);
        }
        offset += line.len();
    }
    Ok(values)
}

impl Generator {
    pub fn from_spec(spec: GeneratorSpec) -> Result<Self> {
        let (family, growth) = match &spec {
            GeneratorSpec::Identity => (Family::Identity, Growth::Linear),
            GeneratorSpec::Linear(k) => (
                Family::Linear {
                    p: k.numer().clone(),
                    q: k.denom().clone(),
                },
                Growth::Linear,
            ),
            GeneratorSpec::Power(k) => (
                Family::Power {
                    p: small_param(k.numer(), "exponent numerator")?,
                    q: small_param(k.denom(), "exponent denominator")? as u32,
                },
                Growth::Polynomial,
            ),
            GeneratorSpec::Exp(b) => {
                let p_log2 = (b.denom().is_one() && b.numer().count_ones() == 1)
                    .then(|| b.numer().bits() - 1);
                (
                    Family::Exp {
                        p: b.numer().clone(),
                        q: b.denom().clone(),
                        p_log2,
                    },
                    Growth::Exponential,
                )
            }
            GeneratorSpec::DoubleExp => (Family::DoubleExp, Growth::Exponential),
            GeneratorSpec::Piecewise(points) => {
                (Family::Piecewise(points.clone().into()), Growth::Linear)
            }
            GeneratorSpec::Table(source) => {
                let values = match source {
                    TableSource::Inline(v) => v.clone(),
                    TableSource::File(path) => read_table(path)?,
                };
                if values.is_empty() {
                    return Err(Error::Invalid("table has no values".into()));
                }
                if let Some(i) = values.windows(2).position(|w| w[1] < w[0]) {
                    return Err(Error::Invalid(format!(
                        "table values must be non-decreasing; f_T({}) = {} > f_T({}) = {}",
                        i,
                        values[i],
                        i + 1,
                        values[i + 1]
                    )));
                }
                (Family::Table(values.into()), Growth::Tabulated)
            }
        };
        Ok(Generator {
            spec,
            family,
            growth,
        })
    }

    /// A tabulated generator from in-memory values.
    pub fn tabulated(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let values = values.into_iter().map(BigUint::from).collect();
        Generator::from_spec(GeneratorSpec::Table(TableSource::Inline(values)))
    }

    pub fn spec(&self) -> &GeneratorSpec {
        &self.spec
    }

    pub fn growth(&self) -> Growth {
        self.growth
    }

    /// Largest argument the projector is defined at, if finite.
    pub fn domain_limit(&self) -> Option<u64> {
        match &self.family {
            Family::Table(values) => Some(values.len() as u64 - 1),
            _ => None,
        }
    }

    /// `f_T(n) = ceil(f(n))`, exactly.
    pub fn projector<N: Natural>(&self, n: &N) -> Result<N> {
        match &self.family {
            Family::Identity => Ok(n.clone()),
            Family::Linear { p, q } => {
                if q.is_one() {
                    n.try_mul(&N::try_from_big(p)?)
                } else {
                    N::try_from_big(&ceil_div(p * n.try_to_big()?, q))
                }
            }
            Family::Power { p, q } => {
                if *q == 1 {
                    n.try_pow(*p)
                } else {
                    let v = num_traits::pow(n.try_to_big()?, *p as usize);
                    let mut root = v.nth_root(*q);
                    if num_traits::pow(root.clone(), *q as usize) < v {
                        root += 1u32;
                    }
                    N::try_from_big(&root)
                }
            }
            Family::Exp { p, q, p_log2 } => {
                let e = n.to_u64().ok_or(Error::Overflow(N::NAME))?;
                match p_log2 {
                    Some(k) => {
                        let exp = k.checked_mul(e).ok_or(Error::Overflow(N::NAME))?;
                        N::try_pow2(&N::from(exp))
                    }
                    None if q.is_one() => N::try_from_big(p)?.try_pow(e),
                    None => {
                        let e = e.to_usize().ok_or(Error::Overflow(N::NAME))?;
                        let num = num_traits::pow(p.clone(), e);
                        let den = num_traits::pow(q.clone(), e);
                        N::try_from_big(&ceil_div(num, &den))
                    }
                }
            }
            Family::DoubleExp => N::try_pow2(&N::try_pow2(n)?),
            Family::Piecewise(points) => {
                let x = n.try_to_big()?;
                // last breakpoint at or left of x; the first is always x = 0
                let i = points.partition_point(|(px, _)| *px <= x) - 1;
                let seg = if i + 1 < points.len() { i } else { i - 1 };
                let (x0, y0) = &points[seg];
                let (x1, y1) = &points[seg + 1];
                let (base_x, base_y) = &points[i];
                let rise = ceil_div((y1 - y0) * (&x - base_x), &(x1 - x0));
                N::try_from_big(&(base_y + rise))
            }
            Family::Table(values) => {
                let i = n
                    .to_usize()
                    .filter(|&i| i < values.len())
                    .ok_or_else(|| self.beyond_table())?;
                N::try_from_big(&values[i])
            }
        }
    }

    fn beyond_table(&self) -> Error {
        Error::Domain(format!(
            "tabulated generator is defined only on [0, {}]",
            self.domain_limit().unwrap_or(0)
        ))
    }

    /// `f_T(m) <= y`, treating scalar overflow as exceeding `y`.
    fn projects_at_most<N: Natural>(&self, m: &N, y: &N) -> Result<bool> {
        match self.projector(m) {
            Ok(v) => Ok(&v <= y),
            Err(Error::Overflow(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// `f^T(y) = max { m : f_T(m) <= y }`.
    pub fn coprojector<N: Natural>(&self, y: &N) -> Result<N> {
        let start: N = self.projector(&N::zero())?;
        if &start > y {
            return Err(Error::BelowRange {
                y: y.to_string(),
                min: start.to_string(),
            });
        }
        if let Family::Table(values) = &self.family {
            let mut best = 0;
            for (i, v) in values.iter().enumerate() {
                match N::from_big(v) {
                    Some(v) if &v <= y => best = i,
                    _ => return Ok(N::from(best as u64)),
                }
            }
            return Err(Error::Domain(format!(
                "coprojector of {y} lies beyond the tabulated range [0, {}]",
                values.len() - 1
            )));
        }

        // gallop over powers of two until f_T(2·lo) > y or 2·lo overflows
        let mut lo = N::zero();
        let mut hi = N::one();
        while self.projects_at_most(&hi, y)? {
            lo = hi.clone();
            hi = match hi.try_add(&hi) {
                Ok(h) => h,
                Err(Error::Overflow(_)) => break,
                Err(e) => return Err(e),
            };
        }
        // the answer lies in [lo, 2·lo), so lift by lo/2, lo/4, ..., 1
        let mut step = lo.halve();
        while !step.is_zero() {
            match lo.try_add(&step) {
                Ok(next) if self.projects_at_most(&next, y)? => lo = next,
                Ok(_) | Err(Error::Overflow(_)) => {}
                Err(e) => return Err(e),
            }
            step = step.halve();
        }
        Ok(lo)
    }

    /// Checks the arithmetic conditions on `[0, bound]`, or on the shorter
    /// prefix covered by a table or representable in `N`.
    pub fn validate<N: Natural>(&self, bound: u64) -> Result<ValidationReport> {
        validate::validate::<N>(self, bound)
    }

    /// The projector as a map over all naturals.
    pub fn projector_map<N: Natural>(&self) -> CarrierMap<N> {
        let gen = self.clone();
        CarrierMap::new(Carrier::All, Carrier::All, move |n: &N| gen.projector(n))
    }

    /// The coprojector as a map over all naturals.
    pub fn coprojector_map<N: Natural>(&self) -> CarrierMap<N> {
        let gen = self.clone();
        CarrierMap::new(Carrier::All, Carrier::All, move |y: &N| gen.coprojector(y))
    }
}
