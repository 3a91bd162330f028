//! Maximum (k,l)-sum-free sets in finite abelian groups.
//!
//! A subset `A` of an abelian group is (k,l)-sum-free when no sum of `k`
//! elements of `A` equals a sum of `l` elements of `A`. This crate evaluates
//! the closed-form maximum for cyclic groups ([`formulas`]), builds explicit
//! maximum sets with checkable certificates ([`construct`]), and provides an
//! exhaustive search ([`oracle`]) to test both against.

pub mod arith;
pub mod construct;
pub mod error;
pub mod formulas;
pub mod group;
pub mod oracle;
pub mod sumset;
pub mod survey;
pub mod table;

pub use construct::{max_interval, max_witness, max_witness_cyclic, ConstructionCertificate, Witness};
pub use error::{Error, Result};
pub use formulas::{gamma, mu_cyclic, GammaBreakdown, MuReport};
pub use group::{AbelianGroup, ArithmeticProgression, Interval, ResidueSet, SumPair};
pub use oracle::{OracleConfig, OracleResult, StepClass};
