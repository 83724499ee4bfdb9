//! Brute-force z-class engine for enumerated permutation groups.
//!
//! Every group is fully listed ([`GroupTable`]); conjugacy classes come from
//! orbit expansion, centralizers from a scan over all elements, and classes
//! are grouped by testing their centralizers for conjugacy with an explicit
//! witness search.

mod builders;
mod classes;
mod group;
mod subgroup;

pub use builders::{
    build_d, build_dihedral, build_group, build_symmetric, build_wreath_bc, direct_product, order_d,
};
pub use classes::{conjugacy_classes, z_classes, ConjugacyClass, ZClasses};
pub use group::{GroupTable, EXHAUSTIVE_AXIOM_LIMIT};
pub use subgroup::{centralizer, subgroups_conjugate, Fingerprint, SubgroupHandle};

/// Largest group order handled without an explicit opt-in.
pub const DEFAULT_ORDER_CAP: u64 = 100_000;
/// Raised cap for long runs (covers E7).
pub const LARGE_ORDER_CAP: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Groups of larger order are refused with [`crate::Error::CapExceeded`].
    pub order_cap: u64,
}

impl OracleConfig {
    pub fn large() -> Self {
        OracleConfig {
            order_cap: LARGE_ORDER_CAP,
        }
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}
