//! Characters `χ = χ_2^{b_1} ⊗ ⋯ ⊗ χ_2^{b_n}` of `(C_2)^n`, their supports
//! and the `S_n`-action on them.

use std::fmt;

use crate::bits::BitVector;
use crate::cycles::perm_cycle_type_blocks;
use crate::error::{Error, Result};
use crate::group::{FlavorKind, GroupFlavor};
use crate::perm::Permutation;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCharacter {
    b: BitVector,
}

impl BinaryCharacter {
    pub fn new(b: BitVector) -> Self {
        BinaryCharacter { b }
    }

    /// The trivial character `ε`.
    pub fn trivial(n: usize) -> Self {
        BinaryCharacter::new(BitVector::zero(n))
    }

    /// Parses comma-separated exponent bits, e.g. `1,1,0`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let b = BitVector::parse_csv(s)?;
        if b.len() != n {
            return Err(Error::parse(
                s,
                0,
                format!("character has {} bits, expected {n}", b.len()),
            ));
        }
        Ok(BinaryCharacter::new(b))
    }

    pub fn bits(&self) -> BitVector {
        self.b
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.b.is_zero()
    }

    /// `W_χ = {i | b_i ≠ 0}` as a bit mask.
    pub fn support(&self) -> BitVector {
        self.b
    }

    /// `(−1)^{b·a}` as `±1`.
    pub fn evaluate(&self, a: &BitVector) -> Result<i8> {
        Ok(if self.b.dot(a)? { -1 } else { 1 })
    }

    /// `h·χ`, defined by `(h·χ)(h·a) = χ(a)`.
    pub fn act(&self, h: &Permutation) -> Result<Self> {
        Ok(BinaryCharacter::new(self.b.permuted(h)?))
    }

    /// Whether two exponent vectors give the same character of the flavor's
    /// `A`. On the even-weight subgroup `b` and `b + (1,…,1)` agree.
    pub fn same_on(&self, other: &BinaryCharacter, flavor: GroupFlavor) -> bool {
        match flavor.kind() {
            FlavorKind::B => self.b == other.b,
            FlavorKind::D => self.b == other.b || self.b == other.b.complement(),
            FlavorKind::S => true,
        }
    }

    /// Representative of the class of `χ` under [`Self::same_on`]: the
    /// lexicographically smaller of `b` and its complement for `D`, zero for
    /// `S`.
    pub fn canonical(&self, flavor: GroupFlavor) -> BinaryCharacter {
        match flavor.kind() {
            FlavorKind::B => *self,
            FlavorKind::D => BinaryCharacter::new(self.b.min(self.b.complement())),
            FlavorKind::S => BinaryCharacter::trivial(self.n()),
        }
    }
}

impl fmt::Display for BinaryCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.b.to_csv())
    }
}

impl fmt::Debug for BinaryCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi({})", self.b.to_csv())
    }
}

/// `f = |τ(W_σ) ∩ W_χ|` over the integers.
pub fn f_value(tau: &Permutation, a: &BitVector, chi: &BinaryCharacter) -> Result<u32> {
    Ok(a.permuted(tau)?.and(&chi.b)?.weight())
}

/// `{τ ∈ P | τ·χ = χ}`.
pub fn stabilizer_chi(p: &[Permutation], chi: &BinaryCharacter) -> Vec<Permutation> {
    p.iter()
        .filter(|t| chi.b.permuted(t).map(|x| x == chi.b).unwrap_or(false))
        .copied()
        .collect()
}

/// As [`stabilizer_chi`] but with characters compared on the flavor's `A`.
pub fn stabilizer_chi_in(
    flavor: GroupFlavor,
    p: &[Permutation],
    chi: &BinaryCharacter,
) -> Vec<Permutation> {
    p.iter()
        .filter(|t| {
            chi.act(t)
                .map(|x| x.same_on(chi, flavor))
                .unwrap_or(false)
        })
        .copied()
        .collect()
}

/// Whether every cycle-type block `Y_j` of `σ` lies inside `W` or misses
/// it, which is exactly when the stabilizer of a character with support `W`
/// is all of `S_n^σ`.
pub fn stabilizer_is_full(sigma: &Permutation, w: &BitVector) -> bool {
    perm_cycle_type_blocks(sigma).nonempty().all(|(_, y)| {
        let cut = y.and(w).expect("same rank");
        cut.is_zero() || cut == y
    })
}
