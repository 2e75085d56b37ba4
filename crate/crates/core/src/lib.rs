//! Exact computations around essential dimension and representation
//! dimension of finite groups.
//!
//! Groups are permutation groups given by generators. On top of element
//! enumeration the crate computes exact character tables (Dixon–Schneider
//! over a prime field), minimal faithful representation dimension, the
//! classical lower and upper bounds on essential dimension, monomial
//! embeddings induced from abelian subgroups and minimal-index abelian
//! subgroups.

pub mod abelian;
pub mod arith;
pub mod chartab;
pub mod construct;
pub mod cyclotomic;
pub mod edbounds;
pub mod error;
pub mod group;
pub mod jordan;
pub mod modp;
pub mod monomial;
pub mod perm;
pub mod repdim;
pub mod subgroups;

pub use chartab::{character_table, verify_orthogonality, Character, CharacterTable};
pub use construct::{construct, construct_with, GroupSpec};
pub use error::{Error, Result};
pub use group::{FiniteGroup, Limits, Subgroup};
pub use perm::Permutation;
pub use repdim::{rdim, RdimCertificate};

/// Cyclotomic integers with `i64` coefficients.
pub type Cyclotomic64 = cyclotomic::Cyclotomic<i64>;
/// Cyclotomic integers with `i128` coefficients, for large sums.
pub type Cyclotomic128 = cyclotomic::Cyclotomic<i128>;
pub type CyclotomicRing64 = cyclotomic::CyclotomicRing<i64>;
