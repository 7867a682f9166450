use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{nats, LawId, LawVerdict};
use crate::arithmetic::ProjectiveArithmetic;
use crate::error::{Error, Result};
use crate::scalar::Natural;

/// Order-like relations on the elements of a projective arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Lt,
    /// `a ≪ b` iff `b ⊕ a = b`.
    MuchLess,
    /// `a ≪≪ b` iff `b ⊙ a = b`.
    MuchMuchLess,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "≤",
            Relation::Lt => "<",
            Relation::MuchLess => "≪",
            Relation::MuchMuchLess => "≪≪",
        }
    }

    pub fn holds<N: Natural>(self, ar: &ProjectiveArithmetic<N>, a: &N, b: &N) -> Result<bool> {
        match self {
            Relation::Le => Ok(a <= b),
            Relation::Lt => Ok(a < b),
            Relation::MuchLess => ar.much_less(a, b),
            Relation::MuchMuchLess => ar.much_much_less(a, b),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "le" | "≤" | "<=" => Ok(Relation::Le),
            "lt" | "<" => Ok(Relation::Lt),
            "ml" | "much_less" | "≪" => Ok(Relation::MuchLess),
            "mml" | "much_much_less" | "≪≪" => Ok(Relation::MuchMuchLess),
            _ => Err(Error::Invalid(format!("unknown relation '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Both,
}

/// A relation together with the side on which compatibility is asked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationSpec {
    pub relation: Relation,
    pub side: Side,
}

impl RelationSpec {
    pub fn new(relation: Relation, side: Side) -> Self {
        RelationSpec { relation, side }
    }
}

impl fmt::Display for RelationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.relation.symbol())
    }
}

/// `m[a][b]` = `a R b` for `a, b` in `[0, bound]`.
pub struct RelationMatrix {
    rows: Vec<Vec<bool>>,
}

impl RelationMatrix {
    pub fn build<N: Natural>(
        ar: &ProjectiveArithmetic<N>,
        rel: Relation,
        bound: u64,
    ) -> Result<Self> {
        let elems = nats::<N>(0, bound);
        let rows = elems
            .par_iter()
            .map(|a| elems.iter().map(|b| rel.holds(ar, a, b)).collect())
            .collect::<Result<Vec<Vec<bool>>>>()?;
        Ok(RelationMatrix { rows })
    }

    pub fn get(&self, a: u64, b: u64) -> bool {
        self.rows[a as usize][b as usize]
    }

    pub fn len(&self) -> u64 {
        self.rows.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// All related pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.get(a, b))
            .collect()
    }

    /// Maximal runs `s, s+1, ..., e` (length at least two) with `i R i+1`
    /// throughout.
    pub fn successor_chains(&self) -> Vec<(u64, u64)> {
        let mut chains = Vec::new();
        let mut start = None;
        for i in 0..self.len() {
            let linked = i + 1 < self.len() && self.get(i, i + 1);
            match (start, linked) {
                (None, true) => start = Some(i),
                (Some(s), false) => {
                    chains.push((s, i));
                    start = None;
                }
                _ => {}
            }
        }
        chains
    }
}

/// First `(a, b, c)` in lexicographic order, with `lo <= a, b, c <= hi`,
/// satisfying `pred`.
pub(crate) fn first_triple(
    lo: u64,
    hi: u64,
    pred: impl Fn(u64, u64, u64) -> bool + Sync,
) -> Option<(u64, u64, u64)> {
    (lo..=hi).into_par_iter().find_map_first(|a| {
        (lo..=hi)
            .flat_map(|b| (lo..=hi).map(move |c| (b, c)))
            .find(|&(b, c)| pred(a, b, c))
            .map(|(b, c)| (a, b, c))
    })
}

/// Compatibility of `p` with `q` on `[lo, bound]³`:
/// right means `a P b ∧ b Q c ⇒ a P c`, left means `a Q b ∧ b P c ⇒ a P c`.
pub(crate) fn compatibility_scan<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    p: RelationSpec,
    q: RelationSpec,
    lo: u64,
    bound: u64,
    law_id: LawId,
) -> Result<LawVerdict> {
    let mut verdict = LawVerdict::new(law_id, ar.spec_text(), bound).note(format!(
        "{} vs {}, {:?} side, on [{lo}, {bound}]",
        p.relation.symbol(),
        q.relation.symbol(),
        p.side
    ));
    if !ar.is_arithmetic() {
        verdict = verdict.note("generator is not a projective arithmetic on its validated prefix");
    }
    let pm = RelationMatrix::build(ar, p.relation, bound)?;
    let qm = RelationMatrix::build(ar, q.relation, bound)?;
    let sides = match p.side {
        Side::Both => vec![Side::Right, Side::Left],
        side => vec![side],
    };
    for side in sides {
        let broken = first_triple(lo, bound, |a, b, c| {
            let premise = match side {
                Side::Right => pm.get(a, b) && qm.get(b, c),
                _ => qm.get(a, b) && pm.get(b, c),
            };
            premise && !pm.get(a, c)
        });
        if let Some((a, b, c)) = broken {
            let (p_sym, q_sym) = (p.relation.symbol(), q.relation.symbol());
            let msg = match side {
                Side::Right => {
                    format!("right: {a} {p_sym} {b} and {b} {q_sym} {c} but not {a} {p_sym} {c}")
                }
                _ => format!("left: {a} {q_sym} {b} and {b} {p_sym} {c} but not {a} {p_sym} {c}"),
            };
            return Ok(verdict.failed(vec![a.into(), b.into(), c.into()]).note(msg));
        }
    }
    Ok(verdict)
}

/// Re-evaluates a compatibility witness directly.
pub(crate) fn compatibility_violated<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    p: RelationSpec,
    q: RelationSpec,
    w: [u64; 3],
) -> Result<bool> {
    let [a, b, c] = w.map(N::from);
    let pac = p.relation.holds(ar, &a, &c)?;
    let right = p.relation.holds(ar, &a, &b)? && q.relation.holds(ar, &b, &c)?;
    let left = q.relation.holds(ar, &a, &b)? && p.relation.holds(ar, &b, &c)?;
    Ok(!pac
        && match p.side {
            Side::Right => right,
            Side::Left => left,
            Side::Both => right || left,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_of_double_exponential() {
        let ar = ProjectiveArithmetic::<crate::SparseNat>::parse("dblexp", 8).unwrap();
        let m = RelationMatrix::build(&ar, Relation::MuchLess, 8).unwrap();
        assert_eq!(m.successor_chains(), vec![(0, 8)]);
    }

    #[test]
    fn identity_much_less_pairs() {
        let ar = ProjectiveArithmetic::<u64>::parse("identity", 8).unwrap();
        let m = RelationMatrix::build(&ar, Relation::MuchLess, 8).unwrap();
        assert_eq!(m.pairs(), (0..=8).map(|b| (0, b)).collect::<Vec<_>>());
    }

    #[test]
    fn first_triple_is_lexicographic() {
        assert_eq!(
            first_triple(0, 9, |a, b, c| a + b + c == 7 && b > 2),
            Some((0, 3, 4))
        );
        assert_eq!(first_triple(1, 3, |_, _, _| false), None);
    }

    #[test]
    fn relation_names() {
        assert_eq!("ml".parse::<Relation>().unwrap(), Relation::MuchLess);
        assert_eq!("≪≪".parse::<Relation>().unwrap(), Relation::MuchMuchLess);
        assert!("gt".parse::<Relation>().is_err());
    }
}
