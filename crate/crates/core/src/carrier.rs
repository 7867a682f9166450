//! Prearithmetics on arbitrary carriers, and the construction that carries
//! one prearithmetic onto another set through a projector `g` and a
//! coprojector `h`:
//!
//! ```text
//! a +₁ b = h(g(a) +₂ g(b))
//! a ∘₁ b = h(g(a) ∘₂ g(b))
//! ```

use std::fmt;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laws::{LawId, LawVerdict};
use crate::scalar::Natural;

/// An element set: an explicit finite list or every value of the scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier<N> {
    Finite(Vec<N>),
    All,
}

impl<N: Natural> Carrier<N> {
    pub fn contains(&self, x: &N) -> bool {
        match self {
            Carrier::Finite(xs) => xs.contains(x),
            Carrier::All => true,
        }
    }

    /// `{lo, ..., hi}`.
    pub fn range(lo: u64, hi: u64) -> Self {
        Carrier::Finite((lo..=hi).map(N::from).collect())
    }

    pub fn elements(&self) -> Option<&[N]> {
        match self {
            Carrier::Finite(xs) => Some(xs),
            Carrier::All => None,
        }
    }

    fn check(&self, x: &N, role: &str) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{x} is outside the {role}")))
        }
    }
}

type UnaryFn<N> = Arc<dyn Fn(&N) -> Result<N> + Send + Sync>;
type BinaryFn<N> = Arc<dyn Fn(&N, &N) -> Result<N> + Send + Sync>;

/// A total map between two carriers. Applying it outside its source, or
/// landing outside its target, is a domain error.
#[derive(Clone)]
pub struct CarrierMap<N> {
    source: Carrier<N>,
    target: Carrier<N>,
    apply: UnaryFn<N>,
}

impl<N: Natural> CarrierMap<N> {
    pub fn new(
        source: Carrier<N>,
        target: Carrier<N>,
        apply: impl Fn(&N) -> Result<N> + Send + Sync + 'static,
    ) -> Self {
        CarrierMap {
            source,
            target,
            apply: Arc::new(apply),
        }
    }

    pub fn identity(carrier: Carrier<N>) -> Self {
        CarrierMap::new(carrier.clone(), carrier, |x| Ok(x.clone()))
    }

    /// Inclusion of `source` into every natural.
    pub fn inclusion(source: Carrier<N>) -> Self {
        CarrierMap::new(source, Carrier::All, |x| Ok(x.clone()))
    }

    pub fn source(&self) -> &Carrier<N> {
        &self.source
    }

    pub fn target(&self) -> &Carrier<N> {
        &self.target
    }

    pub fn apply(&self, x: &N) -> Result<N> {
        self.source.check(x, "map's source")?;
        let y = (self.apply)(x)?;
        self.target.check(&y, "map's target")?;
        Ok(y)
    }
}

impl<N: fmt::Debug> fmt::Debug for CarrierMap<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CarrierMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

/// A carrier with total addition and multiplication.
#[derive(Clone)]
pub struct AbstractPrearithmetic<N> {
    carrier: Carrier<N>,
    add: BinaryFn<N>,
    mul: BinaryFn<N>,
}

impl<N: Natural> AbstractPrearithmetic<N> {
    pub fn new(
        carrier: Carrier<N>,
        add: impl Fn(&N, &N) -> Result<N> + Send + Sync + 'static,
        mul: impl Fn(&N, &N) -> Result<N> + Send + Sync + 'static,
    ) -> Self {
        AbstractPrearithmetic {
            carrier,
            add: Arc::new(add),
            mul: Arc::new(mul),
        }
    }

    /// Ordinary `+` and `·` on every value of `N`; overflow surfaces as an error.
    pub fn diophantine() -> Self {
        AbstractPrearithmetic::new(
            Carrier::All,
            |a: &N, b: &N| a.try_add(b),
            |a: &N, b: &N| a.try_mul(b),
        )
    }

    pub fn carrier(&self) -> &Carrier<N> {
        &self.carrier
    }

    fn closed(&self, a: &N, b: &N, op: &BinaryFn<N>) -> Result<N> {
        self.carrier.check(a, "carrier")?;
        self.carrier.check(b, "carrier")?;
        let c = op(a, b)?;
        self.carrier.check(&c, "carrier")?;
        Ok(c)
    }

    pub fn add(&self, a: &N, b: &N) -> Result<N> {
        self.closed(a, b, &self.add)
    }

    pub fn mul(&self, a: &N, b: &N) -> Result<N> {
        self.closed(a, b, &self.mul)
    }
}

impl<N: fmt::Debug> fmt::Debug for AbstractPrearithmetic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AbstractPrearithmetic")
            .field("carrier", &self.carrier)
            .finish_non_exhaustive()
    }
}

/// The prearithmetic on `g`'s source that is weakly projective with respect
/// to `base`, with projector `g` and coprojector `h`.
pub fn induce_prearithmetic<N: Natural>(
    base: &AbstractPrearithmetic<N>,
    g: &CarrierMap<N>,
    h: &CarrierMap<N>,
) -> AbstractPrearithmetic<N> {
    let lift = |op: fn(&AbstractPrearithmetic<N>, &N, &N) -> Result<N>| {
        let (base, g, h) = (base.clone(), g.clone(), h.clone());
        move |a: &N, b: &N| h.apply(&op(&base, &g.apply(a)?, &g.apply(b)?)?)
    };
    AbstractPrearithmetic::new(
        g.source().clone(),
        lift(AbstractPrearithmetic::add),
        lift(AbstractPrearithmetic::mul),
    )
}

/// Residues modulo `m` on the representatives `{1, ..., m}`.
pub fn residue_prearithmetic<N: Natural>(m: u64) -> Result<AbstractPrearithmetic<N>> {
    if m == 0 {
        return Err(Error::Invalid("modulus must be at least 1".into()));
    }
    let carrier = Carrier::range(1, m);
    let g = CarrierMap::inclusion(carrier.clone());
    let h = CarrierMap::new(Carrier::All, carrier, move |n: &N| {
        // ((n - 1) mod m) + 1, with 0 ↦ m
        let big = n.try_to_big()?;
        let r = if big.is_zero() {
            m
        } else {
            ((big - 1u32) % m).to_u64().expect("residue below m") + 1
        };
        Ok(N::from(r))
    });
    Ok(induce_prearithmetic(
        &AbstractPrearithmetic::diophantine(),
        &g,
        &h,
    ))
}

/// Tests `g(h(x)) = x` on sampled elements of the base carrier and
/// `h(g(y)) = y` on sampled elements of the induced carrier. The witness is
/// the first sampled element violating either identity.
pub fn check_reverse_projectivity<N: Natural>(
    base: &AbstractPrearithmetic<N>,
    g: &CarrierMap<N>,
    h: &CarrierMap<N>,
    sample: &[N],
) -> Result<LawVerdict> {
    let bound = sample.iter().filter_map(|x| x.to_u64()).max().unwrap_or(0);
    let verdict = LawVerdict::new(LawId::ReverseProjectivity, "custom", bound);
    for x in sample {
        if base.carrier().contains(x) && h.source().contains(x) {
            let back = g.apply(&h.apply(x)?)?;
            if &back != x {
                return Ok(verdict
                    .failed(vec![x.try_to_big()?])
                    .note(format!("g(h({x})) = {back}")));
            }
        }
        if g.source().contains(x) {
            let back = h.apply(&g.apply(x)?)?;
            if &back != x {
                return Ok(verdict
                    .failed(vec![x.try_to_big()?])
                    .note(format!("h(g({x})) = {back}")));
            }
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::parse_generator_spec;
    use crate::Nat;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn sample(lo: u64, hi: u64) -> Vec<Nat> {
        (lo..=hi).map(n).collect()
    }

    #[test]
    fn identity_projector_reproduces_base() {
        let base = AbstractPrearithmetic::<Nat>::diophantine();
        let id = CarrierMap::identity(Carrier::All);
        let induced = induce_prearithmetic(&base, &id, &id);
        assert_eq!(induced.add(&n(2), &n(3)).unwrap(), n(5));
        assert_eq!(induced.mul(&n(2), &n(3)).unwrap(), n(6));
    }

    #[test]
    fn clock_arithmetic() {
        let base = AbstractPrearithmetic::<Nat>::diophantine();
        let g = CarrierMap::inclusion(Carrier::range(1, 12));
        let h = CarrierMap::new(Carrier::All, Carrier::range(1, 12), |x: &Nat| {
            Ok((x + 11u32) % 12u32 + 1u32)
        });
        let induced = induce_prearithmetic(&base, &g, &h);
        assert_eq!(induced.add(&n(7), &n(8)).unwrap(), n(3));
        assert!(matches!(induced.add(&n(13), &n(1)), Err(Error::Domain(_))));
    }

    #[test]
    fn square_generator_two_plus_two() {
        let gen = parse_generator_spec("power:2").unwrap();
        let base = AbstractPrearithmetic::<Nat>::diophantine();
        let induced = induce_prearithmetic(&base, &gen.projector_map(), &gen.coprojector_map());
        assert_eq!(induced.add(&n(2), &n(2)).unwrap(), n(2));
        assert_eq!(induced.mul(&n(2), &n(3)).unwrap(), n(6));
    }

    #[test]
    fn residues() {
        let r12 = residue_prearithmetic::<Nat>(12).unwrap();
        assert_eq!(r12.add(&n(7), &n(8)).unwrap(), n(3));
        assert_eq!(r12.add(&n(6), &n(6)).unwrap(), n(12));
        let r5 = residue_prearithmetic::<u64>(5).unwrap();
        assert_eq!(r5.mul(&3, &4).unwrap(), 2);
        let r1 = residue_prearithmetic::<u64>(1).unwrap();
        assert_eq!(r1.add(&1, &1).unwrap(), 1);
        assert_eq!(r1.mul(&1, &1).unwrap(), 1);
        assert!(residue_prearithmetic::<u64>(0).is_err());
        assert!(r5.add(&0, &1).is_err());
    }

    #[test]
    fn reverse_projectivity_identity() {
        let base = AbstractPrearithmetic::<Nat>::diophantine();
        let id = CarrierMap::identity(Carrier::All);
        let v = check_reverse_projectivity(&base, &id, &id, &sample(0, 100)).unwrap();
        assert!(v.holds);
        assert!(v.witness.is_empty());
    }

    #[test]
    fn reverse_projectivity_clock_fails_at_13() {
        let base = AbstractPrearithmetic::<Nat>::diophantine();
        let g = CarrierMap::inclusion(Carrier::range(1, 12));
        let h = CarrierMap::new(Carrier::All, Carrier::range(1, 12), |x: &Nat| {
            Ok((x + 11u32) % 12u32 + 1u32)
        });
        let v = check_reverse_projectivity(&base, &g, &h, &sample(1, 40)).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, vec![n(13)]);
    }

    #[test]
    fn reverse_projectivity_linear() {
        let gen = parse_generator_spec("linear:10").unwrap();
        let base = AbstractPrearithmetic::<Nat>::diophantine();
        let (g, h) = (gen.projector_map(), gen.coprojector_map());
        for x in 0..=50u64 {
            assert_eq!(h.apply(&g.apply(&n(x)).unwrap()).unwrap(), n(x));
        }
        assert_eq!(g.apply(&h.apply(&n(5)).unwrap()).unwrap(), n(0));
        let v = check_reverse_projectivity(&base, &g, &h, &sample(0, 50)).unwrap();
        assert!(!v.holds);
        // g(h(1)) = g(0) = 0 is the first sampled failure; 5 fails the same way
        assert_eq!(v.witness, vec![n(1)]);
    }
}
