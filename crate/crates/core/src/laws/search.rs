use std::fmt;

use rayon::prelude::*;

use super::{LawCheck, LawVerdict};
use crate::arithmetic::ProjectiveArithmetic;
use crate::error::{Error, Result};
use crate::generator::parse_generator_spec;
use crate::scalar::Natural;

/// A one-parameter family of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyPattern {
    /// Spec text with `{k}` standing for the parameter, e.g. `power:{k}`.
    Template(String),
    /// `f_T(n) = 2^n` up to `knee`, then `2^(n+k)`, with `f_T(0) = 0`;
    /// the parameter `k` is the height of the jump.
    ExpJump { knee: u64 },
}

impl FamilyPattern {
    /// Spec text of the member with parameter `k`, tabulated far enough to
    /// cover `[0, bound + 2]` where the family is not closed-form.
    pub fn instantiate(&self, k: u64, bound: u64) -> Result<String> {
        match self {
            FamilyPattern::Template(t) if t.contains("{k}") => Ok(t.replace("{k}", &k.to_string())),
            FamilyPattern::Template(t) => {
                Err(Error::Invalid(format!("pattern '{t}' has no {{k}}")))
            }
            FamilyPattern::ExpJump { knee } => {
                let points: Vec<String> = (0..=bound.max(*knee) + 2)
                    .map(|n| {
                        let y = match n {
                            0 => num_bigint::BigUint::from(0u32),
                            n if n <= *knee => num_bigint::BigUint::from(1u32) << n,
                            n => num_bigint::BigUint::from(1u32) << (n + k),
                        };
                        format!("({n},{y})")
                    })
                    .collect();
                Ok(format!("piecewise:{}", points.join(",")))
            }
        }
    }
}

impl fmt::Display for FamilyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyPattern::Template(t) => f.write_str(t),
            FamilyPattern::ExpJump { knee } => write!(f, "exp-jump(knee {knee}, shift {{k}})"),
        }
    }
}

/// Runs `law` on every member of `family` for `k` in `params` and returns
/// the failing verdicts, in parameter order.
pub fn search_counterexample<N: Natural>(
    law: LawCheck,
    family: &FamilyPattern,
    params: impl IntoIterator<Item = u64>,
    bound: u64,
) -> Result<Vec<LawVerdict>> {
    let params: Vec<u64> = params.into_iter().collect();
    let verdicts = params
        .par_iter()
        .map(|&k| {
            let gen = parse_generator_spec(&family.instantiate(k, bound)?)?;
            let ar = ProjectiveArithmetic::<N>::new(gen, bound.max(2))?;
            let v = law.run(&ar, bound)?;
            Ok(v.note(format!("family {family}, k = {k}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(verdicts.into_iter().filter(|v| !v.holds).collect())
}
