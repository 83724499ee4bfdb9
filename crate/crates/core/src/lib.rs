//! Counting and enumerating z-classes of finite Coxeter groups.
//!
//! Two elements of a group are z-equivalent when their centralizers are
//! conjugate subgroups. This crate evaluates closed-form z-class counts for
//! every irreducible finite Coxeter type ([`closed_form`]), builds the explicit
//! class structure for types B/C and D ([`signed_perm`]), and checks all of it
//! against a brute-force engine ([`oracle`]) fed either by signed permutations
//! or by root-system reflection groups ([`reflection`]).
//!
//! The heavy loops in the oracle run on rayon when the `parallel` feature is
//! enabled (the default) and sequentially otherwise; output is identical
//! either way.

pub mod closed_form;
pub mod combinatorics;
pub mod error;
pub mod oracle;
mod par;
pub mod quadratic;
pub mod reflection;
pub mod signed_perm;

pub use closed_form::{CoxeterType, IrreducibleType, Method, ZCountResult};
pub use combinatorics::{Partition, SignedPart, SignedPartition};
pub use error::{Error, Result};
pub use oracle::{GroupTable, OracleConfig};
pub use signed_perm::{SignedClassLabel, SignedPermutation, SplitHalf};
