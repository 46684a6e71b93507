//! Exact decision procedures for finite-dimensionality of Nichols algebras
//! of Yetter–Drinfeld modules over `A ⋊ S_n`, where `A` is `(C_2)^n`, its
//! even-weight subgroup, or trivial.

pub mod bits;
pub mod braid;
pub mod chars;
pub mod cycles;
pub mod dynkin;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod sqcomm;
pub mod verdict;

pub use bits::BitVector;
pub use chars::BinaryCharacter;
pub use error::{Error, Result};
pub use group::{act, conjugate, FlavorKind, GroupElement, GroupFlavor};
pub use perm::Permutation;
