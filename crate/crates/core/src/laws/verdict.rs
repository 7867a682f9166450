use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Nat;

/// Every law the crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LawId {
    ReverseProjectivity,
    ZeroNeutral,
    ZeroAbsorbing,
    Commutativity,
    Associativity,
    MulAssociativity,
    NaryVsFold,
    MuchLessOrder,
    SuccessorAbsorption,
    /// `≪` compatible with `≤` from both sides.
    MuchLessCompatibility,
    /// `≪≪` compatible with `≤` from the left.
    MuchMuchLessCompatibility,
    /// Free-form compatibility between two relations.
    Compatibility,
    UnitPropagation,
}

impl LawId {
    pub const ALL: [LawId; 13] = [
        LawId::ReverseProjectivity,
        LawId::ZeroNeutral,
        LawId::ZeroAbsorbing,
        LawId::Commutativity,
        LawId::Associativity,
        LawId::MulAssociativity,
        LawId::NaryVsFold,
        LawId::MuchLessOrder,
        LawId::SuccessorAbsorption,
        LawId::MuchLessCompatibility,
        LawId::MuchMuchLessCompatibility,
        LawId::Compatibility,
        LawId::UnitPropagation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::ReverseProjectivity => "reverse_projectivity",
            LawId::ZeroNeutral => "zero_neutral",
            LawId::ZeroAbsorbing => "zero_absorbing",
            LawId::Commutativity => "commutativity",
            LawId::Associativity => "associativity",
            LawId::MulAssociativity => "mul_associativity",
            LawId::NaryVsFold => "nary_vs_fold",
            LawId::MuchLessOrder => "much_less_order",
            LawId::SuccessorAbsorption => "successor_absorption",
            LawId::MuchLessCompatibility => "much_less_compatibility",
            LawId::MuchMuchLessCompatibility => "much_much_less_compatibility",
            LawId::Compatibility => "compatibility",
            LawId::UnitPropagation => "unit_propagation",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown law '{s}'")))
    }
}

/// Result of checking one law over a bounded range.
///
/// A failing verdict always carries the witness tuple that reproduces the
/// failure; see [`crate::laws::LawCheck::reproduces`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawVerdict {
    pub law_id: LawId,
    pub gen: String,
    pub bound: u64,
    pub holds: bool,
    #[serde(with = "nat_strings")]
    pub witness: Vec<Nat>,
    pub notes: String,
}

impl LawVerdict {
    pub(crate) fn new(law_id: LawId, gen: impl Into<String>, bound: u64) -> Self {
        LawVerdict {
            law_id,
            gen: gen.into(),
            bound,
            holds: true,
            witness: Vec::new(),
            notes: String::new(),
        }
    }

    pub(crate) fn failed(mut self, witness: Vec<Nat>) -> Self {
        self.holds = false;
        self.witness = witness;
        self
    }

    pub(crate) fn note(mut self, note: impl AsRef<str>) -> Self {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(note.as_ref());
        self
    }

    pub fn witness_u64(&self) -> Option<Vec<u64>> {
        use num_traits::ToPrimitive;
        self.witness.iter().map(|w| w.to_u64()).collect()
    }
}

/// Naturals serialize as decimal strings so no magnitude is lost.
mod nat_strings {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Nat;

    pub fn serialize<S: Serializer>(v: &[Nat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|n| n.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Nat>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
