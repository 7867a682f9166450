use serde::{Deserialize, Serialize};

use super::Generator;
use crate::error::{Error, Result};
use crate::scalar::Natural;

/// Outcome of one arithmetic condition on the checked prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub passed: bool,
    /// Arguments exhibiting the failure, always present when `passed` is false.
    pub witness: Option<Vec<u64>>,
}

impl Condition {
    fn pass() -> Self {
        Condition {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: Vec<u64>) -> Self {
        Condition {
            passed: false,
            witness: Some(witness),
        }
    }
}

/// The three conditions that make a projective prearithmetic an arithmetic,
/// checked on `[0, checked_bound]`.
///
/// * `zero`: `f_T(0) = 0`.
/// * `strict`: `f_T` strictly increasing. This is the integer-point stand-in
///   for strict increase of `f`, which samples cannot decide.
/// * `convex`: `f_T(a+1) - f_T(a) <= f_T(b+1) - f_T(b)` whenever
///   `0 <= a <= b < checked_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checked_bound: u64,
    pub zero: Condition,
    pub strict: Condition,
    pub convex: Condition,
}

impl ValidationReport {
    pub fn is_arithmetic(&self) -> bool {
        self.zero.passed && self.strict.passed && self.convex.passed
    }
}

// d(a) > d(b), compared without subtraction
fn steeper<N: Natural>(f: &[N], a: usize, b: usize) -> Result<bool> {
    Ok(f[a + 1].try_add(&f[b])? > f[b + 1].try_add(&f[a])?)
}

pub(super) fn validate<N: Natural>(gen: &Generator, bound: u64) -> Result<ValidationReport> {
    if bound < 2 {
        return Err(Error::Invalid(format!(
            "validation bound must be at least 2, got {bound}"
        )));
    }
    let bound = gen.domain_limit().map_or(bound, |limit| bound.min(limit));
    // A fixed-width scalar stops the prefix where f_T (or twice it, as the
    // convexity comparison needs) no longer fits.
    let mut f: Vec<N> = Vec::new();
    for n in 0..=bound {
        match gen
            .projector(&N::from(n))
            .and_then(|y| y.try_add(&y).map(|_| y))
        {
            Ok(y) => f.push(y),
            Err(Error::Overflow(_)) if f.len() > 2 => break,
            Err(e) => return Err(e),
        }
    }
    let bound = f.len() as u64 - 1;

    let zero = if f[0].is_zero() {
        Condition::pass()
    } else {
        Condition::fail(vec![0])
    };

    let strict = match f.windows(2).position(|w| w[1] <= w[0]) {
        Some(n) => Condition::fail(vec![n as u64, n as u64 + 1]),
        None => Condition::pass(),
    };

    // Track the steepest step seen so far; the first later step that is
    // shallower than it is a violation. The reported `a` is the earliest
    // step steeper than that `b`.
    let mut convex = Condition::pass();
    let mut steepest = 0;
    for b in 1..f.len() - 1 {
        if steeper(&f, steepest, b)? {
            let mut a = 0;
            while !steeper(&f, a, b)? {
                a += 1;
            }
            convex = Condition::fail(vec![a as u64, b as u64]);
            break;
        }
        if steeper(&f, b, steepest)? {
            steepest = b;
        }
    }

    Ok(ValidationReport {
        checked_bound: bound,
        zero,
        strict,
        convex,
    })
}
