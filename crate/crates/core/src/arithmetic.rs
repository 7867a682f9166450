//! Projective (pre)arithmetics over the naturals.
//!
//! Elements are plain naturals ordered as usual; only the operations change:
//!
//! ```text
//! a ⊕ b = f^T(f_T(a) + f_T(b))
//! a ⊙ b = f^T(f_T(a) · f_T(b))
//! ```
//!
//! The n-ary sum and product apply the coprojector once to the ordinary
//! sum or product of all projections, so `Σ(a, b, c)` is in general not
//! `(a ⊕ b) ⊕ c`.

use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generator::{Generator, ValidationReport};
use crate::scalar::Natural;

/// Default prefix on which generators are validated.
pub const DEFAULT_VALIDATION_BOUND: u64 = 1000;

/// A generator bound to its induced operations and relations.
#[derive(Debug, Clone)]
pub struct ProjectiveArithmetic<N> {
    gen: Generator,
    validation: ValidationReport,
    _scalar: PhantomData<fn() -> N>,
}

impl<N: Natural> ProjectiveArithmetic<N> {
    /// Validates `gen` on `[0, bound]` and binds it. Operations are available
    /// whether or not validation passed.
    pub fn new(gen: Generator, bound: u64) -> Result<Self> {
        let validation = gen.validate::<N>(bound)?;
        Ok(ProjectiveArithmetic {
            gen,
            validation,
            _scalar: PhantomData,
        })
    }

    pub fn parse(spec: &str, bound: u64) -> Result<Self> {
        ProjectiveArithmetic::new(crate::generator::parse_generator_spec(spec)?, bound)
    }

    pub fn generator(&self) -> &Generator {
        &self.gen
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.validation
    }

    /// All three arithmetic conditions hold on the validated prefix.
    pub fn is_arithmetic(&self) -> bool {
        self.validation.is_arithmetic()
    }

    pub fn spec_text(&self) -> String {
        self.gen.spec().to_string()
    }

    pub fn project(&self, a: &N) -> Result<N> {
        self.gen.projector(a)
    }

    pub fn coproject(&self, y: &N) -> Result<N> {
        self.gen.coprojector(y)
    }

    pub fn add(&self, a: &N, b: &N) -> Result<N> {
        self.coproject(&self.project(a)?.try_add(&self.project(b)?)?)
    }

    pub fn mul(&self, a: &N, b: &N) -> Result<N> {
        self.coproject(&self.project(a)?.try_mul(&self.project(b)?)?)
    }

    /// `Σⁿ(xs) = f^T(Σ f_T(x))`.
    pub fn sum_n(&self, xs: &[N]) -> Result<N> {
        let (first, rest) = xs.split_first().ok_or(Error::EmptyOperands)?;
        let mut acc = self.project(first)?;
        for x in rest {
            acc = acc.try_add(&self.project(x)?)?;
        }
        self.coproject(&acc)
    }

    /// `Πⁿ(xs) = f^T(Π f_T(x))`.
    pub fn prod_n(&self, xs: &[N]) -> Result<N> {
        let (first, rest) = xs.split_first().ok_or(Error::EmptyOperands)?;
        let mut acc = self.project(first)?;
        for x in rest {
            acc = acc.try_mul(&self.project(x)?)?;
        }
        self.coproject(&acc)
    }

    /// `a ≪ b` iff `b ⊕ a = b`.
    pub fn much_less(&self, a: &N, b: &N) -> Result<bool> {
        Ok(&self.add(b, a)? == b)
    }

    /// `xs ≪ₙ b` iff `Σⁿ(xs, b) = b`.
    pub fn much_less_group(&self, xs: &[N], b: &N) -> Result<bool> {
        if xs.is_empty() {
            return Err(Error::EmptyOperands);
        }
        let mut all = xs.to_vec();
        all.push(b.clone());
        Ok(&self.sum_n(&all)? == b)
    }

    /// `a ≪≪ b` iff `b ⊙ a = b`.
    pub fn much_much_less(&self, a: &N, b: &N) -> Result<bool> {
        Ok(&self.mul(b, a)? == b)
    }

    /// `xs ≪≪ₙ b` iff `Πⁿ(xs, b) = b`.
    pub fn much_much_less_group(&self, xs: &[N], b: &N) -> Result<bool> {
        if xs.is_empty() {
            return Err(Error::EmptyOperands);
        }
        let mut all = xs.to_vec();
        all.push(b.clone());
        Ok(&self.prod_n(&all)? == b)
    }

    /// The element following `a` in the inherited order.
    pub fn successor(&self, a: &N) -> Result<N> {
        a.succ()
    }
}

/// Display convention for elements: a numeral with the μ marker, rendered
/// as `2_u` by default or `2_μ` in Unicode mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ElementFormat {
    pub unicode: bool,
}

impl ElementFormat {
    pub const ASCII: ElementFormat = ElementFormat { unicode: false };
    pub const UNICODE: ElementFormat = ElementFormat { unicode: true };

    pub fn suffix(self) -> &'static str {
        if self.unicode {
            "_μ"
        } else {
            "_u"
        }
    }

    pub fn format<N: fmt::Display>(self, n: &N) -> String {
        format!("{n}{}", self.suffix())
    }

    /// Accepts either marker, or a bare numeral.
    pub fn parse<N: FromStr>(self, text: &str) -> Result<N> {
        let t = text.trim();
        let digits = t
            .strip_suffix("_u")
            .or_else(|| t.strip_suffix("_μ"))
            .unwrap_or(t);
        digits
            .parse()
            .map_err(|_| Error::parse(0, format!("'{text}' is not an element numeral")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::SparseNat;
    use crate::Nat;
    use proptest::prelude::*;

    fn arith(spec: &str) -> ProjectiveArithmetic<u64> {
        ProjectiveArithmetic::parse(spec, 100).unwrap()
    }

    #[test]
    fn operation_examples() {
        let sq = arith("power:2");
        assert_eq!(sq.add(&2, &2).unwrap(), 2);
        assert_eq!(sq.add(&10, &11).unwrap(), 14);
        assert_eq!(sq.mul(&2, &3).unwrap(), 6);
        let lin = arith("linear:10");
        assert_eq!(lin.add(&2, &3).unwrap(), 5);
        assert_eq!(lin.mul(&2, &2).unwrap(), 40);
        assert_eq!(arith("identity").mul(&7, &8).unwrap(), 56);
    }

    #[test]
    fn nary_examples() {
        let sq = arith("power:2");
        assert_eq!(sq.sum_n(&[2, 2, 2]).unwrap(), 3);
        assert_eq!(sq.sum_n(&[1, 1, 1, 1, 1, 3]).unwrap(), 3);
        let fold = sq.add(&sq.add(&2, &2).unwrap(), &2).unwrap();
        assert_eq!(fold, 2);
        assert_eq!(sq.prod_n(&[2, 5, 8]).unwrap(), 80);
        assert_eq!(arith("identity").prod_n(&[3, 4]).unwrap(), 12);
        assert_eq!(sq.sum_n(&[]), Err(Error::EmptyOperands));
        assert_eq!(sq.prod_n(&[]), Err(Error::EmptyOperands));
        for n in 0..=50 {
            for m in 0..=50 {
                assert_eq!(sq.prod_n(&[n, m]).unwrap(), n * m);
            }
        }
    }

    #[test]
    fn relation_examples() {
        let sq = arith("power:2");
        assert!(sq.much_less(&1, &5).unwrap());
        assert!(!sq.much_less(&11, &11).unwrap());
        let id = arith("identity");
        assert!((1..50).all(|a| (0..50).all(|b| !id.much_less(&a, &b).unwrap())));

        assert!(sq.much_less_group(&[1, 1, 1], &3).unwrap());
        assert!(!sq.much_less_group(&[2, 2], &2).unwrap());
        assert_eq!(sq.much_less_group(&[], &2), Err(Error::EmptyOperands));

        assert!((0..50).all(|b| id.much_much_less(&1, &b).unwrap()));
        assert!(!sq.much_much_less(&2, &3).unwrap());
        assert!(id.much_much_less_group(&[1, 1], &9).unwrap());
        assert!(!sq.much_much_less_group(&[2, 5], &8).unwrap());
        assert_eq!(sq.much_much_less_group(&[], &8), Err(Error::EmptyOperands));
    }

    #[test]
    fn double_exponential_relations() {
        let de = ProjectiveArithmetic::<Nat>::parse("dblexp", 4).unwrap();
        let n = |v: u32| Nat::from(v);
        // 2^8 · 2^4 = 2^12 < 2^16
        assert!(de.much_much_less(&n(2), &n(3)).unwrap());
        // 2^2 · 2^4 · 2^16 = 2^22 < 2^32
        assert!(de.much_much_less_group(&[n(1), n(2)], &n(4)).unwrap());
    }

    #[test]
    fn successor_and_absorption_premise() {
        let sq = arith("power:2");
        assert_eq!(sq.successor(&0).unwrap(), 1);
        assert_eq!(sq.successor(&41).unwrap(), 42);
        for a in 0..60u64 {
            let sa = sq.successor(&a).unwrap();
            let ssa = sq.successor(&sa).unwrap();
            let premise =
                sq.project(&sa).unwrap() + sq.project(&a).unwrap() < sq.project(&ssa).unwrap();
            // (a+1)^2 + a^2 < (a+2)^2 only for a < 3
            assert_eq!(premise, a < 3, "a = {a}");
            if premise {
                assert!(sq.much_less(&a, &sa).unwrap());
            }
        }
    }

    #[test]
    fn scalars_agree() {
        let big = ProjectiveArithmetic::<Nat>::parse("power:3", 50).unwrap();
        let sparse = ProjectiveArithmetic::<SparseNat>::parse("power:3", 50).unwrap();
        let machine = arith("power:3");
        for a in 0..30u64 {
            for b in 0..30u64 {
                let m = machine.add(&a, &b).unwrap();
                assert_eq!(big.add(&a.into(), &b.into()).unwrap(), Nat::from(m));
                assert_eq!(
                    sparse.add(&a.into(), &b.into()).unwrap(),
                    SparseNat::from(m)
                );
            }
        }
    }

    #[test]
    fn machine_overflow_surfaces() {
        let sq = arith("power:2");
        assert_eq!(sq.add(&u64::MAX, &1), Err(Error::Overflow("u64")));
    }

    #[test]
    fn element_format() {
        assert_eq!(ElementFormat::ASCII.format(&2u64), "2_u");
        assert_eq!(ElementFormat::UNICODE.format(&2u64), "2_μ");
        assert_eq!(ElementFormat::ASCII.parse::<u64>("15_μ").unwrap(), 15);
        assert!(ElementFormat::ASCII.parse::<u64>("x_u").is_err());
    }

    proptest! {
        #[test]
        fn element_format_round_trips(n in any::<u64>(), unicode in any::<bool>()) {
            let f = ElementFormat { unicode };
            prop_assert_eq!(f.parse::<u64>(&f.format(&n)).unwrap(), n);
        }

        #[test]
        fn dominance_and_monotonicity(a in 0u64..300, b in 0u64..300, d in 0u64..50) {
            for spec in ["power:2", "linear:10", "identity", "power:3/2"] {
                let ar = arith(spec);
                let s = ar.add(&a, &b).unwrap();
                prop_assert!(s >= a.max(b));
                prop_assert!(ar.add(&(a + d), &b).unwrap() >= s);
                prop_assert!(ar.mul(&(a + d), &b).unwrap() >= ar.mul(&a, &b).unwrap());
                prop_assert_eq!(ar.sum_n(&[a]).unwrap(), a);
                prop_assert_eq!(ar.sum_n(&[a, b]).unwrap(), s);
            }
        }

        #[test]
        fn linear_addition_is_ordinary(a in 0u64..10_000, b in 0u64..10_000, k in 1u64..40) {
            let ar = arith(&format!("linear:{k}"));
            prop_assert_eq!(ar.add(&a, &b).unwrap(), a + b);
        }
    }
}
