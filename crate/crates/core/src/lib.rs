//! Projective non-Diophantine arithmetics over the natural numbers.
//!
//! A generator `f` with `f(0) = 0` induces new operations on the naturals,
//!
//! ```text
//! a ⊕ b = f^T(f_T(a) + f_T(b))        f_T(n) = ⌈f(n)⌉
//! a ⊙ b = f^T(f_T(a) · f_T(b))        f^T(y) = max { m : f_T(m) ≤ y }
//! ```
//!
//! with the usual order kept. Everything is exact: the core is generic over
//! a [`Natural`] scalar (`BigUint`, `u64`, `u128`, or the sparse
//! [`SparseNat`] for towers like `2^(2^n)`).
//!
//! ```
//! use nda_core::MachineArithmetic;
//!
//! let sq = MachineArithmetic::parse("power:2", 100).unwrap();
//! assert_eq!(sq.add(&10, &11).unwrap(), 14);
//! assert_eq!(sq.sum_n(&[2, 2, 2]).unwrap(), 3);
//! assert!(sq.much_less(&1, &5).unwrap());
//! ```

pub mod arithmetic;
pub mod carrier;
pub mod error;
pub mod generator;
pub mod laws;
pub mod scalar;
pub mod sparse;

pub use arithmetic::{ElementFormat, ProjectiveArithmetic, DEFAULT_VALIDATION_BOUND};
pub use carrier::{
    check_reverse_projectivity, induce_prearithmetic, residue_prearithmetic, AbstractPrearithmetic,
    Carrier, CarrierMap,
};
pub use error::{Error, Result};
pub use generator::{parse_generator_spec, Generator, GeneratorSpec, Growth, ValidationReport};
pub use laws::{LawCheck, LawId, LawVerdict, Relation, RelationSpec, Side};
pub use scalar::Natural;
pub use sparse::SparseNat;

/// Arbitrary-precision natural.
pub type Nat = num_bigint::BigUint;

/// Exact arithmetic on heap-allocated naturals.
pub type BigArithmetic = ProjectiveArithmetic<Nat>;

/// Exact arithmetic on sparse binary naturals, for towers of exponentials.
pub type TowerArithmetic = ProjectiveArithmetic<SparseNat>;

/// Checked `u64` arithmetic: overflow surfaces as an error.
pub type MachineArithmetic = ProjectiveArithmetic<u64>;
