//! Coset monoids of finite groups and the idempotent-series theory of
//! factorizable inverse monoids.

pub mod bitset;
pub mod check;
pub mod conjectures;
pub mod coset;
pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod monoid;
pub mod nilpotency;
pub mod parse;
pub mod series;
pub mod verify;

pub use error::{GroupError, MonoidError};
pub use group::{FiniteGroup, Subgroup};
pub use lattice::SubgroupLattice;
pub use monoid::{FiniteInverseMonoid, MonoidStructure};
pub use parse::{parse_group, preset};
