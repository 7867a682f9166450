//! Scalar types the projective construction can run over.
//!
//! Every arithmetic in this crate is generic over a [`Natural`]: a
//! non-negative integer type with checked addition and multiplication.
//! Three families are provided:
//!
//! * [`BigUint`] (aliased as [`crate::Nat`]), exact at any magnitude that fits
//!   in memory;
//! * `u64` and `u128`, fixed-width machine integers that report overflow
//!   instead of wrapping;
//! * [`crate::SparseNat`], which stores only the positions of one-bits and so
//!   holds towers like `2^(2^80)` in a few words.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest power of two a dense [`BigUint`] will materialize (in bits).
pub const DENSE_BIT_LIMIT: u64 = 1 << 26;

pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + CheckedAdd
    + CheckedMul
    + ToPrimitive
    + From<u64>
    + Send
    + Sync
    + 'static
{
    /// Short name used in overflow diagnostics.
    const NAME: &'static str;

    /// Converts from a dense big integer, `None` if the value does not fit.
    fn from_big(v: &BigUint) -> Option<Self>;

    /// Converts to a dense big integer, `None` if the value is too large to
    /// materialize.
    fn to_big(&self) -> Option<BigUint>;

    /// `floor(self / 2)`.
    fn halve(&self) -> Self;

    /// `2^exp`, `None` when unrepresentable.
    fn pow2(exp: &Self) -> Option<Self>;

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow(Self::NAME))
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow(Self::NAME))
    }

    fn try_pow2(exp: &Self) -> Result<Self> {
        Self::pow2(exp).ok_or(Error::Overflow(Self::NAME))
    }

    fn try_from_big(v: &BigUint) -> Result<Self> {
        Self::from_big(v).ok_or(Error::Overflow(Self::NAME))
    }

    fn try_to_big(&self) -> Result<BigUint> {
        self.to_big().ok_or(Error::Overflow(Self::NAME))
    }

    fn succ(&self) -> Result<Self> {
        self.try_add(&Self::one())
    }

    /// `self^exp` by repeated squaring.
    fn try_pow(&self, mut exp: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl Natural for BigUint {
    const NAME: &'static str = "big integer";

    fn from_big(v: &BigUint) -> Option<Self> {
        Some(v.clone())
    }

    fn to_big(&self) -> Option<BigUint> {
        Some(self.clone())
    }

    fn halve(&self) -> Self {
        self >> 1u32
    }

    fn pow2(exp: &Self) -> Option<Self> {
        let e = exp.to_u64().filter(|&e| e <= DENSE_BIT_LIMIT)?;
        let mut v = BigUint::zero();
        v.set_bit(e, true);
        Some(v)
    }
}

macro_rules! machine_natural {
    ($t:ty, $name:literal, $from:ident) => {
        impl Natural for $t {
            const NAME: &'static str = $name;

            fn from_big(v: &BigUint) -> Option<Self> {
                v.$from()
            }

            fn to_big(&self) -> Option<BigUint> {
                Some(BigUint::from(*self))
            }

            fn halve(&self) -> Self {
                *self >> 1
            }

            fn pow2(exp: &Self) -> Option<Self> {
                (*exp < <$t>::BITS as $t).then(|| 1 << *exp)
            }
        }
    };
}

machine_natural!(u64, "u64", to_u64);
machine_natural!(u128, "u128", to_u128);

/// Lifts a machine integer into any scalar.
pub fn nat<N: Natural>(v: u64) -> N {
    N::from(v)
}
