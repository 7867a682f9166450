//! Bounded exhaustive checks of the algebraic laws of projective
//! arithmetics.
//!
//! Every check scans a full cube `[0, bound]^k` (no sampling), so a verdict is
//! a decidable statement about that cube. Scans run in parallel but always
//! report the lexicographically smallest witness.

mod demo;
mod relations;
mod search;
mod verdict;

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

pub use demo::{machine_infinity_demo, MachineInfinityReport};
pub use relations::{Relation, RelationMatrix, RelationSpec, Side};
pub use search::{search_counterexample, FamilyPattern};
pub use verdict::{LawId, LawVerdict};

use crate::arithmetic::ProjectiveArithmetic;
use crate::error::{Error, Result};
use crate::scalar::Natural;
use relations::{compatibility_scan, compatibility_violated, first_triple};

/// Default arity for the n-ary laws.
pub const DEFAULT_ARITY: usize = 3;

pub(crate) fn nats<N: Natural>(lo: u64, hi: u64) -> Vec<N> {
    (lo..=hi).map(N::from).collect()
}

fn first_pair(lo: u64, hi: u64, pred: impl Fn(u64, u64) -> bool + Sync) -> Option<(u64, u64)> {
    (lo..=hi)
        .into_par_iter()
        .find_map_first(|a| (lo..=hi).find(|&b| pred(a, b)).map(|b| (a, b)))
}

type BinOp<N> = fn(&ProjectiveArithmetic<N>, &N, &N) -> Result<N>;

/// `t[a][b] = op(a, b)` on `[0, bound]²`.
fn op_table<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    op: BinOp<N>,
    bound: u64,
) -> Result<Vec<Vec<N>>> {
    let elems = nats::<N>(0, bound);
    elems
        .par_iter()
        .map(|a| elems.iter().map(|b| op(ar, a, b)).collect())
        .collect()
}

fn verdict_for<N: Natural>(ar: &ProjectiveArithmetic<N>, law: LawId, bound: u64) -> LawVerdict {
    LawVerdict::new(law, ar.spec_text(), bound)
}

fn zero_precondition<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    v: LawVerdict,
) -> Result<LawVerdict> {
    let f0 = ar.project(&N::zero())?;
    Ok(if f0.is_zero() {
        v
    } else {
        v.note(format!("precondition f_T(0) = 0 not met (f_T(0) = {f0})"))
    })
}

/// `0 ⊕ a = a` for every `a <= bound`, cross-checked against strict
/// increase of the projector on `[0, bound + 1]`.
pub fn check_zero_neutral<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    let v = zero_precondition(ar, verdict_for(ar, LawId::ZeroNeutral, bound))?;
    let zero = N::zero();
    let results = nats::<N>(0, bound)
        .into_par_iter()
        .map(|a| Ok((ar.add(&zero, &a)?, a)))
        .collect::<Result<Vec<_>>>()?;
    let failure = results.iter().find(|(sum, a)| sum != a);

    let projections = nats::<N>(0, bound + 1)
        .iter()
        .map(|n| ar.project(n))
        .collect::<Result<Vec<_>>>()?;
    let flat = projections.windows(2).position(|w| w[1] <= w[0]);

    let v = match (failure.is_some(), flat) {
        (false, None) => v.note(format!(
            "agrees with strict increase of f_T on [0, {}]",
            bound + 1
        )),
        (true, Some(n)) => v.note(format!("agrees with f_T({}) <= f_T({n})", n + 1)),
        (true, None) => v.note(format!(
            "finding: fails although f_T is strictly increasing on [0, {}]",
            bound + 1
        )),
        (false, Some(n)) => v.note(format!(
            "finding: holds although f_T({}) <= f_T({n})",
            n + 1
        )),
    };
    Ok(match failure {
        Some((sum, a)) => {
            let note = format!("0 ⊕ {a} = {sum}");
            v.failed(vec![a.try_to_big()?]).note(note)
        }
        None => v,
    })
}

/// `0 ⊙ a = 0` for every `a <= bound`: zero is absorbing. The equation
/// `0 ⊙ a = a` is also evaluated and its first failure reported as a note.
pub fn check_zero_absorbing<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    let v = zero_precondition(ar, verdict_for(ar, LawId::ZeroAbsorbing, bound))?;
    let zero = N::zero();
    let products = nats::<N>(0, bound)
        .into_par_iter()
        .map(|a| Ok((ar.mul(&zero, &a)?, a)))
        .collect::<Result<Vec<_>>>()?;
    let v = match products.iter().find(|(p, a)| p != a) {
        Some((p, a)) => v.note(format!("0 ⊙ a = a fails at a = {a} (0 ⊙ {a} = {p})")),
        None => v.note("0 ⊙ a = a holds on the whole range"),
    };
    Ok(match products.iter().find(|(p, _)| !p.is_zero()) {
        Some((p, a)) => {
            let note = format!("0 ⊙ {a} = {p}");
            v.failed(vec![a.try_to_big()?]).note(note)
        }
        None => v,
    })
}

/// `a ⊕ b = b ⊕ a` and `a ⊙ b = b ⊙ a` on `[0, bound]²`.
pub fn check_commutativity<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    let v = verdict_for(ar, LawId::Commutativity, bound);
    for (op, sym) in [
        (ProjectiveArithmetic::add as BinOp<N>, "⊕"),
        (ProjectiveArithmetic::mul, "⊙"),
    ] {
        let t = op_table(ar, op, bound)?;
        if let Some((a, b)) = first_pair(0, bound, |a, b| {
            t[a as usize][b as usize] != t[b as usize][a as usize]
        }) {
            let (x, y) = (&t[a as usize][b as usize], &t[b as usize][a as usize]);
            return Ok(v
                .failed(vec![a.into(), b.into()])
                .note(format!("{a} {sym} {b} = {x}, {b} {sym} {a} = {y}")));
        }
    }
    Ok(v)
}

fn associativity_scan<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
    op: BinOp<N>,
    law: LawId,
    sym: &str,
) -> Result<LawVerdict> {
    let v = verdict_for(ar, law, bound);
    let elems = nats::<N>(0, bound);
    let inner = op_table(ar, op, bound)?;

    // the outer operation only ever sees an element and an inner result
    let values: Vec<N> = inner
        .iter()
        .flatten()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: HashMap<&N, usize> = values.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let idx: Vec<Vec<usize>> = inner
        .iter()
        .map(|row| row.iter().map(|x| index[x]).collect())
        .collect();
    // left[i][c] = values[i] op c, right[a][i] = a op values[i]
    let left = values
        .par_iter()
        .map(|x| elems.iter().map(|c| op(ar, x, c)).collect())
        .collect::<Result<Vec<Vec<N>>>>()?;
    let right = elems
        .par_iter()
        .map(|a| values.iter().map(|x| op(ar, a, x)).collect())
        .collect::<Result<Vec<Vec<N>>>>()?;

    let lhs = |a: u64, b: u64, c: u64| &left[idx[a as usize][b as usize]][c as usize];
    let rhs = |a: u64, b: u64, c: u64| &right[a as usize][idx[b as usize][c as usize]];
    Ok(
        match first_triple(0, bound, |a, b, c| lhs(a, b, c) != rhs(a, b, c)) {
            Some((a, b, c)) => {
                let note = format!(
                    "({a} {sym} {b}) {sym} {c} = {}, {a} {sym} ({b} {sym} {c}) = {}",
                    lhs(a, b, c),
                    rhs(a, b, c)
                );
                v.failed(vec![a.into(), b.into(), c.into()]).note(note)
            }
            None => v,
        },
    )
}

/// Associativity of `⊕` on `[0, bound]³`.
pub fn check_associativity<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    associativity_scan(
        ar,
        bound,
        ProjectiveArithmetic::add,
        LawId::Associativity,
        "⊕",
    )
}

/// Associativity of `⊙` on `[0, bound]³`.
pub fn check_mul_associativity<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    associativity_scan(
        ar,
        bound,
        ProjectiveArithmetic::mul,
        LawId::MulAssociativity,
        "⊙",
    )
}

fn left_fold<N: Natural>(ar: &ProjectiveArithmetic<N>, xs: &[N]) -> Result<N> {
    let (first, rest) = xs.split_first().ok_or(Error::EmptyOperands)?;
    rest.iter()
        .try_fold(first.clone(), |acc, x| ar.add(&acc, x))
}

/// `Σⁿ(x₁..xₙ) = (..(x₁ ⊕ x₂) ⊕ ..) ⊕ xₙ` for every n-tuple over `[0, bound]`.
pub fn check_nary_vs_fold<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    n: usize,
    bound: u64,
) -> Result<LawVerdict> {
    if n == 0 {
        return Err(Error::EmptyOperands);
    }
    let v = verdict_for(ar, LawId::NaryVsFold, bound).note(format!("n = {n}"));
    let found = (0..=bound)
        .into_par_iter()
        .map(|head| -> Result<Option<Vec<u64>>> {
            let mut tuple = vec![0u64; n];
            tuple[0] = head;
            loop {
                let xs: Vec<N> = tuple.iter().map(|&x| N::from(x)).collect();
                if ar.sum_n(&xs)? != left_fold(ar, &xs)? {
                    return Ok(Some(tuple));
                }
                // odometer over positions 1..n
                let mut i = n;
                loop {
                    i -= 1;
                    if i == 0 {
                        return Ok(None);
                    }
                    if tuple[i] < bound {
                        tuple[i] += 1;
                        break;
                    }
                    tuple[i] = 0;
                }
            }
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    Ok(match found {
        Some(Ok(Some(t))) => {
            let xs: Vec<N> = t.iter().map(|&x| N::from(x)).collect();
            let note = format!("Σⁿ = {}, fold = {}", ar.sum_n(&xs)?, left_fold(ar, &xs)?);
            v.failed(t.into_iter().map(Into::into).collect()).note(note)
        }
        Some(Err(e)) => return Err(e),
        _ => v,
    })
}

/// `≪` is transitive and, on distinct elements, at most one of `a ≪ b`,
/// `b ≪ a` holds. Totality is reported in the notes, not required.
pub fn check_much_less_order<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    let mut v = verdict_for(ar, LawId::MuchLessOrder, bound);
    if !ar.is_arithmetic() {
        v = v.note("generator is not a projective arithmetic on its validated prefix");
    }
    let m = RelationMatrix::build(ar, Relation::MuchLess, bound)?;
    let total = (0..=bound).all(|a| (0..=bound).all(|b| a == b || m.get(a, b) || m.get(b, a)));
    v = v.note(if total {
        "≪ is total on distinct elements"
    } else {
        "≪ is not total on distinct elements"
    });
    if let Some((a, b, c)) = first_triple(0, bound, |a, b, c| {
        m.get(a, b) && m.get(b, c) && !m.get(a, c)
    }) {
        return Ok(v
            .failed(vec![a.into(), b.into(), c.into()])
            .note(format!("transitivity: {a} ≪ {b} ≪ {c} but not {a} ≪ {c}")));
    }
    if let Some((a, b)) = first_pair(0, bound, |a, b| a != b && m.get(a, b) && m.get(b, a)) {
        return Ok(v
            .failed(vec![a.into(), b.into()])
            .note(format!("asymmetry: {a} ≪ {b} and {b} ≪ {a}")));
    }
    Ok(v)
}

fn successor_premise<N: Natural>(ar: &ProjectiveArithmetic<N>, a: &N) -> Result<bool> {
    let sa = a.succ()?;
    let ssa = sa.succ()?;
    Ok(ar.project(&sa)?.try_add(&ar.project(a)?)? < ar.project(&ssa)?)
}

/// `f_T(a+1) + f_T(a) < f_T(a+2)` implies `a ≪ a+1`, for every `a <= bound`.
pub fn check_successor_absorption<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    let v = verdict_for(ar, LawId::SuccessorAbsorption, bound);
    let rows = nats::<N>(0, bound)
        .into_par_iter()
        .map(|a| {
            let premise = successor_premise(ar, &a)?;
            let ok = !premise || ar.much_less(&a, &a.succ()?)?;
            Ok((premise, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let premises = rows.iter().filter(|(p, _)| *p).count();
    let v = v.note(format!(
        "premise holds for {premises} of {} values",
        rows.len()
    ));
    Ok(match rows.iter().position(|(_, ok)| !ok) {
        Some(a) => v
            .failed(vec![(a as u64).into()])
            .note(format!("premise holds at {a} but not {a} ≪ {}", a + 1)),
        None => v,
    })
}

/// Compatibility of `p` with `q` over `[0, bound]³`, on the side named by `p`.
pub fn check_compatibility<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    p: RelationSpec,
    q: RelationSpec,
    bound: u64,
) -> Result<LawVerdict> {
    compatibility_scan(ar, p, q, 0, bound, LawId::Compatibility)
}

/// As [`check_compatibility`], over `[lo, bound]³`. Starting at 1 keeps the
/// absorbing zero from supplying witnesses for `≪≪`.
pub fn check_compatibility_from<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    p: RelationSpec,
    q: RelationSpec,
    lo: u64,
    bound: u64,
) -> Result<LawVerdict> {
    compatibility_scan(ar, p, q, lo, bound, LawId::Compatibility)
}

/// `≪` is compatible with `≤` from both sides.
pub fn check_much_less_compatibility<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    compatibility_scan(
        ar,
        RelationSpec::new(Relation::MuchLess, Side::Both),
        RelationSpec::new(Relation::Le, Side::Both),
        0,
        bound,
        LawId::MuchLessCompatibility,
    )
}

/// `≪≪` is compatible with `≤` from the left, on nonzero elements.
///
/// Zero is excluded: `c ⊙ 0 = 0`, so `0 ≪≪ c` fails for every `c > 0` while
/// `0 ≤ 1 ≪≪ c` typically holds.
pub fn check_much_much_less_compatibility<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<LawVerdict> {
    let v = compatibility_scan(
        ar,
        RelationSpec::new(Relation::MuchMuchLess, Side::Left),
        RelationSpec::new(Relation::Le, Side::Left),
        1,
        bound,
        LawId::MuchMuchLessCompatibility,
    )?;
    Ok(v.note("0 excluded (absorbing under ⊙)"))
}

fn unit_group<N: Natural>(ar: &ProjectiveArithmetic<N>, n: usize, a: u64) -> Result<bool> {
    let ones = vec![N::one(); n.saturating_sub(1).max(1)];
    ar.much_less_group(&ones, &N::from(a))
}

/// Propagation of `1, .., 1 ≪ₙ a` to every `b >= a`, compared with the
/// successor-difference condition; holds iff the two agree on `[0, bound]`.
pub fn check_unit_propagation<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    n: usize,
    bound: u64,
) -> Result<LawVerdict> {
    if n < 2 {
        return Err(Error::Invalid(format!("arity must be at least 2, got {n}")));
    }
    let v = verdict_for(ar, LawId::UnitPropagation, bound).note(format!("n = {n}"));
    let f1 = ar.project(&N::one())?;
    let strict = ar.generator().validate::<N>(bound.max(2))?.strict;
    if !f1.is_one() || !strict.passed {
        return Ok(v.note(format!(
            "precondition not met (f_T(1) = {f1}, strict increase {}); law is vacuous",
            if strict.passed { "holds" } else { "fails" }
        )));
    }

    let related = (0..=bound)
        .into_par_iter()
        .map(|a| unit_group(ar, n, a))
        .collect::<Result<Vec<bool>>>()?;
    let propagation = related.iter().position(|&r| r).and_then(|a| {
        related[a..]
            .iter()
            .position(|&r| !r)
            .map(|off| (a, a + off))
    });
    let convex = ar.generator().validate::<N>(bound.max(2))?.convex;

    let v = v.note(match propagation {
        Some((a, b)) => format!("propagation fails: 1.. ≪ₙ {a} but not 1.. ≪ₙ {b}"),
        None => "propagation holds".into(),
    });
    let v = v.note(match &convex.witness {
        Some(w) => format!("successor differences fail at ({}, {})", w[0], w[1]),
        None => "successor differences non-decreasing".into(),
    });
    Ok(match (propagation, convex.witness) {
        (Some((a, b)), None) => v
            .failed(vec![(a as u64).into(), (b as u64).into()])
            .note("disagreement: propagation fails, difference condition holds"),
        (None, Some(w)) => v
            .failed(vec![w[0].into(), w[1].into()])
            .note("disagreement: difference condition fails, propagation holds"),
        _ => v,
    })
}

/// A law together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawCheck {
    ZeroNeutral,
    ZeroAbsorbing,
    Commutativity,
    Associativity,
    MulAssociativity,
    NaryVsFold(usize),
    MuchLessOrder,
    SuccessorAbsorption,
    MuchLessCompatibility,
    MuchMuchLessCompatibility,
    /// Relations `p`, `q`, scanned from `lo`.
    Compatibility(RelationSpec, RelationSpec, u64),
    UnitPropagation(usize),
}

impl LawCheck {
    /// Every law that concerns a single projective arithmetic, in report order.
    pub fn suite(arity: usize) -> Vec<LawCheck> {
        vec![
            LawCheck::ZeroNeutral,
            LawCheck::ZeroAbsorbing,
            LawCheck::Commutativity,
            LawCheck::Associativity,
            LawCheck::MulAssociativity,
            LawCheck::NaryVsFold(arity),
            LawCheck::MuchLessOrder,
            LawCheck::SuccessorAbsorption,
            LawCheck::MuchLessCompatibility,
            LawCheck::MuchMuchLessCompatibility,
            LawCheck::UnitPropagation(arity),
        ]
    }

    /// The suite entry for `id`; `None` for laws that need extra input.
    pub fn for_id(id: LawId, arity: usize) -> Option<LawCheck> {
        LawCheck::suite(arity).into_iter().find(|c| c.id() == id)
    }

    pub fn id(&self) -> LawId {
        match self {
            LawCheck::ZeroNeutral => LawId::ZeroNeutral,
            LawCheck::ZeroAbsorbing => LawId::ZeroAbsorbing,
            LawCheck::Commutativity => LawId::Commutativity,
            LawCheck::Associativity => LawId::Associativity,
            LawCheck::MulAssociativity => LawId::MulAssociativity,
            LawCheck::NaryVsFold(_) => LawId::NaryVsFold,
            LawCheck::MuchLessOrder => LawId::MuchLessOrder,
            LawCheck::SuccessorAbsorption => LawId::SuccessorAbsorption,
            LawCheck::MuchLessCompatibility => LawId::MuchLessCompatibility,
            LawCheck::MuchMuchLessCompatibility => LawId::MuchMuchLessCompatibility,
            LawCheck::Compatibility(..) => LawId::Compatibility,
            LawCheck::UnitPropagation(_) => LawId::UnitPropagation,
        }
    }

    pub fn run<N: Natural>(&self, ar: &ProjectiveArithmetic<N>, bound: u64) -> Result<LawVerdict> {
        match *self {
            LawCheck::ZeroNeutral => check_zero_neutral(ar, bound),
            LawCheck::ZeroAbsorbing => check_zero_absorbing(ar, bound),
            LawCheck::Commutativity => check_commutativity(ar, bound),
            LawCheck::Associativity => check_associativity(ar, bound),
            LawCheck::MulAssociativity => check_mul_associativity(ar, bound),
            LawCheck::NaryVsFold(n) => check_nary_vs_fold(ar, n, bound),
            LawCheck::MuchLessOrder => check_much_less_order(ar, bound),
            LawCheck::SuccessorAbsorption => check_successor_absorption(ar, bound),
            LawCheck::MuchLessCompatibility => check_much_less_compatibility(ar, bound),
            LawCheck::MuchMuchLessCompatibility => check_much_much_less_compatibility(ar, bound),
            LawCheck::Compatibility(p, q, lo) => check_compatibility_from(ar, p, q, lo, bound),
            LawCheck::UnitPropagation(n) => check_unit_propagation(ar, n, bound),
        }
    }

    /// Plugs a failing verdict's witness back into the law's defining
    /// equation; `true` when the violation is reproduced.
    pub fn reproduces<N: Natural>(
        &self,
        ar: &ProjectiveArithmetic<N>,
        verdict: &LawVerdict,
    ) -> Result<bool> {
        let w: Vec<N> = verdict
            .witness
            .iter()
            .map(N::try_from_big)
            .collect::<Result<_>>()?;
        let zero = N::zero();
        let arity_err =
            || Error::Invalid(format!("witness of length {} for {}", w.len(), self.id()));
        let u = |i: usize| -> Result<u64> { w[i].to_u64().ok_or(Error::Overflow(N::NAME)) };
        Ok(match (*self, w.as_slice()) {
            (LawCheck::ZeroNeutral, [a]) => &ar.add(&zero, a)? != a,
            (LawCheck::ZeroAbsorbing, [a]) => !ar.mul(&zero, a)?.is_zero(),
            (LawCheck::Commutativity, [a, b]) => {
                ar.add(a, b)? != ar.add(b, a)? || ar.mul(a, b)? != ar.mul(b, a)?
            }
            (LawCheck::Associativity, [a, b, c]) => {
                ar.add(&ar.add(a, b)?, c)? != ar.add(a, &ar.add(b, c)?)?
            }
            (LawCheck::MulAssociativity, [a, b, c]) => {
                ar.mul(&ar.mul(a, b)?, c)? != ar.mul(a, &ar.mul(b, c)?)?
            }
            (LawCheck::NaryVsFold(n), xs) if xs.len() == n => ar.sum_n(xs)? != left_fold(ar, xs)?,
            (LawCheck::MuchLessOrder, [a, b, c]) => {
                ar.much_less(a, b)? && ar.much_less(b, c)? && !ar.much_less(a, c)?
            }
            (LawCheck::MuchLessOrder, [a, b]) => {
                a != b && ar.much_less(a, b)? && ar.much_less(b, a)?
            }
            (LawCheck::SuccessorAbsorption, [a]) => {
                successor_premise(ar, a)? && !ar.much_less(a, &a.succ()?)?
            }
            (LawCheck::MuchLessCompatibility, [_, _, _]) => compatibility_violated(
                ar,
                RelationSpec::new(Relation::MuchLess, Side::Both),
                RelationSpec::new(Relation::Le, Side::Both),
                [u(0)?, u(1)?, u(2)?],
            )?,
            (LawCheck::MuchMuchLessCompatibility, [_, _, _]) => compatibility_violated(
                ar,
                RelationSpec::new(Relation::MuchMuchLess, Side::Left),
                RelationSpec::new(Relation::Le, Side::Left),
                [u(0)?, u(1)?, u(2)?],
            )?,
            (LawCheck::Compatibility(p, q, _), [_, _, _]) => {
                compatibility_violated(ar, p, q, [u(0)?, u(1)?, u(2)?])?
            }
            (LawCheck::UnitPropagation(n), [a, b]) => {
                let (ua, ub) = (u(0)?, u(1)?);
                let propagation_fails =
                    ua <= ub && unit_group(ar, n, ua)? && !unit_group(ar, n, ub)?;
                // d(a) > d(b), without subtraction
                let steeper = ua <= ub
                    && ar.project(&a.succ()?)?.try_add(&ar.project(b)?)?
                        > ar.project(&b.succ()?)?.try_add(&ar.project(a)?)?;
                propagation_fails || steeper
            }
            _ => return Err(arity_err()),
        })
    }
}
