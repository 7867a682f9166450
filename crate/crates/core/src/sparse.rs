use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Natural, DENSE_BIT_LIMIT};

/// Values whose top bit is below this are printed in decimal.
const DECIMAL_DISPLAY_BITS: u64 = 1 << 16;

/// A natural number stored as the set of positions of its one-bits.
///
/// Bit positions are themselves arbitrary-precision, so a value such as
/// `2^(2^80)` costs one small allocation. Addition and multiplication
/// are exact; they are cheap while the number of one-bits stays small,
/// which is the case for the double-exponential projector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SparseNat {
    // strictly descending, so the derived lexicographic order is numeric order
    bits: Vec<BigUint>,
}

fn insert_carry(set: &mut BTreeSet<BigUint>, mut e: BigUint) {
    while set.remove(&e) {
        e += 1u32;
    }
    set.insert(e);
}

impl SparseNat {
    /// `2^e`.
    pub fn power_of_two(e: BigUint) -> Self {
        SparseNat { bits: vec![e] }
    }

    /// One-bit positions, highest first.
    pub fn bit_positions(&self) -> &[BigUint] {
        &self.bits
    }

    /// `floor(log2(self))`, `None` for zero.
    pub fn ilog2(&self) -> Option<&BigUint> {
        self.bits.first()
    }

    fn from_set(set: BTreeSet<BigUint>) -> Self {
        SparseNat {
            bits: set.into_iter().rev().collect(),
        }
    }

    fn to_set(&self) -> BTreeSet<BigUint> {
        self.bits.iter().cloned().collect()
    }
}

impl Add for SparseNat {
    type Output = SparseNat;

    fn add(self, rhs: SparseNat) -> SparseNat {
        &self + &rhs
    }
}

impl Add for &SparseNat {
    type Output = SparseNat;

    fn add(self, rhs: &SparseNat) -> SparseNat {
        let (big, small) = if self.bits.len() >= rhs.bits.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut set = big.to_set();
        for e in &small.bits {
            insert_carry(&mut set, e.clone());
        }
        SparseNat::from_set(set)
    }
}

impl Mul for SparseNat {
    type Output = SparseNat;

    fn mul(self, rhs: SparseNat) -> SparseNat {
        &self * &rhs
    }
}

impl Mul for &SparseNat {
    type Output = SparseNat;

    // exponents add when bits multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SparseNat) -> SparseNat {
        let mut set = BTreeSet::new();
        for a in &self.bits {
            for b in &rhs.bits {
                insert_carry(&mut set, a + b);
            }
        }
        SparseNat::from_set(set)
    }
}

impl Zero for SparseNat {
    fn zero() -> Self {
        SparseNat { bits: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }
}

impl One for SparseNat {
    fn one() -> Self {
        SparseNat::power_of_two(BigUint::zero())
    }
}

impl CheckedAdd for SparseNat {
    fn checked_add(&self, v: &Self) -> Option<Self> {
        Some(self + v)
    }
}

impl CheckedMul for SparseNat {
    fn checked_mul(&self, v: &Self) -> Option<Self> {
        Some(self * v)
    }
}

impl From<u64> for SparseNat {
    fn from(v: u64) -> Self {
        SparseNat {
            bits: (0..64u32)
                .rev()
                .filter(|i| v >> i & 1 == 1)
                .map(BigUint::from)
                .collect(),
        }
    }
}

impl ToPrimitive for SparseNat {
    fn to_i64(&self) -> Option<i64> {
        self.to_u64().and_then(|v| v.to_i64())
    }

    fn to_u64(&self) -> Option<u64> {
        let mut acc = 0u64;
        for e in &self.bits {
            let e = e.to_u32().filter(|&e| e < 64)?;
            acc |= 1 << e;
        }
        Some(acc)
    }
}

impl Natural for SparseNat {
    const NAME: &'static str = "sparse";

    fn from_big(v: &BigUint) -> Option<Self> {
        Some(SparseNat {
            bits: (0..v.bits())
                .rev()
                .filter(|&i| v.bit(i))
                .map(BigUint::from)
                .collect(),
        })
    }

    fn to_big(&self) -> Option<BigUint> {
        let mut v = BigUint::zero();
        for e in &self.bits {
            let e = e.to_u64().filter(|&e| e <= DENSE_BIT_LIMIT)?;
            v.set_bit(e, true);
        }
        Some(v)
    }

    fn halve(&self) -> Self {
        SparseNat {
            bits: self
                .bits
                .iter()
                .filter(|e| !e.is_zero())
                .map(|e| e - 1u32)
                .collect(),
        }
    }

    fn pow2(exp: &Self) -> Option<Self> {
        let e = exp.to_big()?;
        Some(SparseNat::power_of_two(e))
    }
}

impl fmt::Display for SparseNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let small = self
            .bits
            .first()
            .is_none_or(|e| e.to_u64().is_some_and(|e| e < DECIMAL_DISPLAY_BITS));
        if small {
            let dense = self.to_big().expect("small values materialize");
            return write!(f, "{dense}");
        }
        for (i, e) in self.bits.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "2^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparseNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SparseNat {
    type Err = Error;

    /// Accepts plain decimal or a sum of powers of two, `2^e1 + 2^e2 + ...`.
    fn from_str(s: &str) -> Result<Self> {
        if !s.contains('^') {
            let v = BigUint::from_str(s.trim()).map_err(|e| Error::parse(0, e.to_string()))?;
            return Ok(SparseNat::from_big(&v).expect("dense always converts"));
        }
        let mut set = BTreeSet::new();
        let mut offset = 0;
        for term in s.split('+') {
            let exp = term
                .trim()
                .strip_prefix("2^")
                .ok_or_else(|| Error::parse(offset, "expected a term of the form 2^e"))?;
            let e =
                BigUint::from_str(exp.trim()).map_err(|e| Error::parse(offset, e.to_string()))?;
            insert_carry(&mut set, e);
            offset += term.len() + 1;
        }
        Ok(SparseNat::from_set(set))
    }
}
