//! Root systems of simple Lie algebras, ad-nilpotent ideals of a Borel
//! subalgebra, and the standard parabolic subalgebras that normalize them.
//!
//! An ad-nilpotent ideal is encoded as an upper ideal of the positive-root
//! poset `(Δ+, ≼)`. Its normalizer is computed five ways:
//!
//! * the generator test ([`normalizers::normalizer`]),
//! * the weight test ([`normalizers::normalizer_by_weight`]),
//! * simple-root images under the minimal affine Weyl element
//!   ([`affine::normalizer_by_wmin`]),
//! * Shi-region walls, decided by an exact rational LP ([`shi::is_wall`]),
//! * coroot-lattice walls of `z_c` ([`affine::normalizer_by_zwall`]).
//!
//! The [`counting`] module evaluates the generating-function and lattice
//! counts of ideals normalized by the Borel subalgebra; [`typeac`] holds the
//! explicit combinatorics for `sl_{n+1}` and `sp_{2n}`.

pub mod affine;
pub mod bitset;
pub mod counting;
mod error;
pub mod ideals;
pub mod lp;
pub mod normalizers;
pub mod poset;
pub mod rational;
pub mod rootsys;
pub mod shi;
pub mod typeac;
pub mod verify;

pub use affine::{AffineRoot, AffineVector, AffineWeylElement, Factorization};
pub use bitset::RootSet;
pub use error::{Error, Result};
pub use ideals::{IdealChain, UpperIdeal};
pub use normalizers::ParabolicLabel;
pub use rational::{Rational, RationalVector};
pub use rootsys::{CartanType, Family, Root, RootSystem};
