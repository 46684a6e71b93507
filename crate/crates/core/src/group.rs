//! Arithmetic in `G = A ⋊ S_n` for the three classical choices of
//! `A ⊆ (C_2)^n`: all of it (type B), the even-weight vectors (type D),
//! or the trivial subgroup (type A, i.e. the symmetric group).
//!
//! Elements are pairs `(a, σ)` with product `(a, σ)(b, τ) = (a + σ·b, στ)`
//! where `(σ·b)_i = b_{σ^{-1}(i)}`.

use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::perm::{parse_cycles, Permutation, MAX_RANK};

/// Default bound on the number of group elements any enumeration may touch.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

static ENUM_CAP: Lazy<u64> = Lazy::new(|| {
    std::env::var("WEYL_MAX_ENUM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
});

/// Enumeration cap, `WEYL_MAX_ENUM` if set, else [`DEFAULT_ENUM_CAP`].
pub fn enum_cap() -> u64 {
    *ENUM_CAP
}

pub(crate) fn check_cap(size: u64) -> Result<()> {
    let cap = enum_cap();
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FlavorKind {
    /// Full `(C_2)^n`: the hyperoctahedral group `W(B_n)`.
    B,
    /// Even-weight subgroup: `W(D_n)`.
    D,
    /// Trivial `A`: the symmetric group.
    S,
}

impl FromStr for FlavorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(FlavorKind::B),
            "D" | "d" => Ok(FlavorKind::D),
            "S" | "s" | "A" | "a" => Ok(FlavorKind::S),
            other => Err(Error::parse(s, 0, format!("unknown group type {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupFlavor {
    kind: FlavorKind,
    n: u8,
}

impl GroupFlavor {
    pub fn new(kind: FlavorKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank {
                kind,
                n,
                reason: "rank must be positive",
            });
        }
        if n > MAX_RANK {
            return Err(Error::InvalidRank {
                kind,
                n,
                reason: "rank exceeds supported maximum",
            });
        }
        if kind == FlavorKind::D && n < 2 {
            return Err(Error::InvalidRank {
                kind,
                n,
                reason: "type D needs n >= 2",
            });
        }
        Ok(GroupFlavor { kind, n: n as u8 })
    }

    pub fn b(n: usize) -> Self {
        GroupFlavor::new(FlavorKind::B, n).expect("valid B rank")
    }

    pub fn d(n: usize) -> Self {
        GroupFlavor::new(FlavorKind::D, n).expect("valid D rank")
    }

    pub fn s(n: usize) -> Self {
        GroupFlavor::new(FlavorKind::S, n).expect("valid S rank")
    }

    pub fn kind(&self) -> FlavorKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Whether `a` lies in this flavor's subgroup `A`.
    pub fn contains_vector(&self, a: &BitVector) -> bool {
        a.len() == self.n()
            && match self.kind {
                FlavorKind::B => true,
                FlavorKind::D => !a.parity(),
                FlavorKind::S => a.is_zero(),
            }
    }

    /// `|A|`.
    pub fn a_order(&self) -> u64 {
        match self.kind {
            FlavorKind::B => 1 << self.n,
            FlavorKind::D => 1 << (self.n - 1),
            FlavorKind::S => 1,
        }
    }

    /// `|A|·n!`.
    pub fn order(&self) -> u64 {
        self.a_order().saturating_mul(factorial(self.n()))
    }

    /// Elements of `A` in lexicographic order.
    pub fn a_elements(&self) -> Vec<BitVector> {
        BitVector::all(self.n())
            .filter(|a| self.contains_vector(a))
            .collect()
    }

    /// A generating set of `A`.
    pub fn a_generators(&self) -> Vec<BitVector> {
        let n = self.n();
        match self.kind {
            FlavorKind::B => (0..n).map(|i| BitVector::unit(n, i)).collect(),
            FlavorKind::D => (0..n - 1)
                .map(|i| BitVector::from_mask(n, 0b11 << i))
                .collect(),
            FlavorKind::S => Vec::new(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            a: BitVector::zero(self.n()),
            perm: Permutation::identity(self.n()),
            flavor: *self,
        }
    }

    /// Every element, lexicographically ordered by `(a, σ-images)`.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        check_cap(self.order())?;
        let perms: Vec<Permutation> = Permutation::all(self.n()).collect();
        let mut out = Vec::with_capacity(self.order() as usize);
        for a in self.a_elements() {
            for p in &perms {
                out.push(GroupElement {
                    a,
                    perm: *p,
                    flavor: *self,
                });
            }
        }
        Ok(out)
    }

    /// The center, computed structurally. Requires `n >= 3`.
    pub fn center(&self) -> Result<Vec<GroupElement>> {
        if self.n() < 3 {
            return Err(Error::Domain(format!(
                "structural center needs n >= 3, got {}",
                self.n()
            )));
        }
        let mut out = vec![self.identity()];
        let alpha = BitVector::ones(self.n());
        if self.kind != FlavorKind::S && self.contains_vector(&alpha) {
            out.push(GroupElement::from_a(*self, alpha)?);
        }
        Ok(out)
    }

    pub fn check_same(&self, other: &GroupFlavor) -> Result<()> {
        if self != other {
            return Err(Error::FlavorMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FlavorKind::B => write!(f, "W(B_{})", self.n),
            FlavorKind::D => write!(f, "W(D_{})", self.n),
            FlavorKind::S => write!(f, "S_{}", self.n),
        }
    }
}

impl fmt::Debug for GroupFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
}

/// `h·a`, the coordinate permutation `(h·a)_i = a_{h^{-1}(i)}`.
pub fn act(h: &Permutation, a: &BitVector) -> Result<BitVector> {
    a.permuted(h)
}

/// An element `(a, σ)` of `A ⋊ S_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    a: BitVector,
    perm: Permutation,
    flavor: GroupFlavor,
}

impl GroupElement {
    pub fn new(flavor: GroupFlavor, a: BitVector, perm: Permutation) -> Result<Self> {
        if a.len() != flavor.n() {
            return Err(Error::Dimension {
                expected: flavor.n(),
                found: a.len(),
            });
        }
        if perm.len() != flavor.n() {
            return Err(Error::Dimension {
                expected: flavor.n(),
                found: perm.len(),
            });
        }
        if !flavor.contains_vector(&a) {
            return Err(Error::NotInGroup {
                element: format!("{a};{perm}"),
                flavor: flavor.to_string(),
            });
        }
        Ok(GroupElement { a, perm, flavor })
    }

    pub fn from_a(flavor: GroupFlavor, a: BitVector) -> Result<Self> {
        GroupElement::new(flavor, a, Permutation::identity(flavor.n()))
    }

    pub fn from_perm(flavor: GroupFlavor, perm: Permutation) -> Result<Self> {
        GroupElement::new(flavor, BitVector::zero(flavor.n()), perm)
    }

    /// Parses `[b,…,b];perm`, for instance `[1,0,1,0];(1 2)(3 4)`.
    pub fn parse(s: &str, flavor: GroupFlavor) -> Result<Self> {
        let (a, perm) = parse_literal(s, Some(flavor.n()))?;
        GroupElement::new(flavor, a, perm).map_err(|e| match e {
            Error::NotInGroup { .. } => Error::parse(s, 0, e.to_string()),
            other => other,
        })
    }

    pub fn a(&self) -> BitVector {
        self.a
    }

    pub fn perm(&self) -> Permutation {
        self.perm
    }

    pub fn flavor(&self) -> GroupFlavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.flavor.n()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.perm.is_identity()
    }

    /// Whether the element lies in the normal subgroup `A`.
    pub fn in_a(&self) -> bool {
        self.perm.is_identity()
    }

    /// Whether the element lies in the complement `S_n`.
    pub fn in_sn(&self) -> bool {
        self.a.is_zero()
    }

    /// Same pair viewed inside another flavor of the same rank.
    pub fn with_flavor(&self, flavor: GroupFlavor) -> Result<Self> {
        GroupElement::new(flavor, self.a, self.perm)
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        self.flavor.check_same(&other.flavor)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &GroupElement) -> GroupElement {
        let moved = other.a.permuted(&self.perm).expect("ranks agree");
        GroupElement {
            a: self.a.xor(&moved).expect("ranks agree"),
            perm: self.perm.compose(&other.perm),
            flavor: self.flavor,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = self.perm.inverse();
        GroupElement {
            a: self.a.permuted(&inv).expect("ranks agree"),
            perm: inv,
            flavor: self.flavor,
        }
    }

    /// `g·self·g^{-1}`.
    pub fn conjugate_by(&self, g: &GroupElement) -> Result<GroupElement> {
        g.flavor.check_same(&self.flavor)?;
        Ok(g.mul_unchecked(self).mul_unchecked(&g.inverse()))
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.mul_unchecked(other) == other.mul_unchecked(self)
    }

    pub fn pow(&self, k: u32) -> GroupElement {
        (0..k).fold(self.flavor.identity(), |acc, _| acc.mul_unchecked(self))
    }

    /// Canonical literal, e.g. `[1,0,1,0];(1 2)(3 4)`.
    pub fn literal(&self) -> String {
        format!("{};{}", self.a, self.perm)
    }
}

/// `g x g^{-1}`.
pub fn conjugate(g: &GroupElement, x: &GroupElement) -> Result<GroupElement> {
    x.conjugate_by(g)
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses an element literal into its raw parts. When `n` is given the
/// bit-vector length must match it.
pub fn parse_literal(s: &str, n: Option<usize>) -> Result<(BitVector, Permutation)> {
    let open = s
        .find(|c: char| !c.is_whitespace())
        .ok_or_else(|| Error::parse(s, 0, "empty element literal"))?;
    if !s[open..].starts_with('[') {
        return Err(Error::parse(s, open, "expected '[' starting the bit vector"));
    }
    let close = s[open..]
        .find(']')
        .map(|k| open + k)
        .ok_or_else(|| Error::parse(s, open, "missing ']'"))?;
    let inner = &s[open + 1..close];
    let mut bits = Vec::new();
    let mut offset = open + 1;
    for tok in inner.split(',') {
        let t = tok.trim();
        let pos = offset + tok.find(|c: char| !c.is_whitespace()).unwrap_or(0);
        match t {
            "0" => bits.push(0u8),
            "1" => bits.push(1u8),
            _ => return Err(Error::parse(s, pos, format!("expected 0 or 1, found {t:?}"))),
        }
        offset += tok.len() + 1;
    }
    if bits.len() > MAX_RANK {
        return Err(Error::parse(s, open, format!("more than {MAX_RANK} bits")));
    }
    if let Some(n) = n {
        if bits.len() != n {
            return Err(Error::parse(
                s,
                open,
                format!("bit vector has length {}, expected {n}", bits.len()),
            ));
        }
    }
    let a = BitVector::from_bits(&bits).map_err(|e| Error::parse(s, open, e.to_string()))?;
    let rest = &s[close + 1..];
    let semi = rest
        .find(|c: char| !c.is_whitespace())
        .ok_or_else(|| Error::parse(s, close + 1, "expected ';' after bit vector"))?;
    if !rest[semi..].starts_with(';') {
        return Err(Error::parse(s, close + 1 + semi, "expected ';'"));
    }
    let perm_start = close + 1 + semi + 1;
    let perm = parse_cycles(&s[perm_start..], perm_start, s, a.len())?;
    Ok((a, perm))
}

/// How a centralizer description was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentralizerSource {
    /// `A ⋊ S_n^σ` for `σ ∈ A`.
    NormalPart,
    /// `A^σ ⋊ S_n^σ` for `σ ∈ S_n`.
    Complement,
    /// Mixed element: computed by exhaustive scan.
    Oracle,
}

/// Centralizer described as `A' ⋊ P`.
#[derive(Clone, Debug)]
pub struct Centralizer {
    /// Generators of the `A`-part `A'` (`A` itself or `A^σ`).
    pub a_generators: Vec<BitVector>,
    pub a_order: u64,
    /// The permutation part `P = S_n^σ`, listed explicitly.
    pub perm_part: Vec<Permutation>,
    pub order: u64,
    pub source: CentralizerSource,
    /// Present only when `source` is `Oracle`.
    pub elements: Option<Vec<GroupElement>>,
}

/// Elements of `S_n` commuting with `σ` (for `σ ∈ S_n`) or fixing `a`
/// (for `a ∈ A`), by filtering `S_n`.
pub(crate) fn perm_stabilizer<F: Fn(&Permutation) -> bool>(n: usize, keep: F) -> Result<Vec<Permutation>> {
    check_cap(factorial(n))?;
    Ok(Permutation::all(n).filter(|p| keep(p)).collect())
}

/// Centralizer of `x` in its flavor group, described structurally when `x`
/// lies in `A` or in `S_n`, otherwise by exhaustive scan.
pub fn centralizer_structural(x: &GroupElement) -> Result<Centralizer> {
    let flavor = x.flavor();
    let n = flavor.n();
    if x.in_a() {
        let a = x.a();
        let perm_part = perm_stabilizer(n, |p| a.permuted(p).expect("rank") == a)?;
        let a_order = flavor.a_order();
        return Ok(Centralizer {
            a_generators: flavor.a_generators(),
            a_order,
            order: a_order * perm_part.len() as u64,
            perm_part,
            source: CentralizerSource::NormalPart,
            elements: None,
        });
    }
    if x.in_sn() {
        let sigma = x.perm();
        let perm_part = perm_stabilizer(n, |p| p.commutes_with(&sigma))?;
        // A^σ: vectors constant on every cycle of σ, intersected with A.
        let cycle_masks: Vec<u32> = sigma
            .cycles()
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &i| m | 1 << i))
            .collect();
        let fixed: Vec<BitVector> = (0u32..1 << cycle_masks.len())
            .map(|sel| {
                let mask = cycle_masks
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| sel >> k & 1 == 1)
                    .fold(0, |m, (_, c)| m | c);
                BitVector::from_mask(n, mask)
            })
            .filter(|v| flavor.contains_vector(v))
            .collect();
        let a_order = fixed.len() as u64;
        return Ok(Centralizer {
            a_generators: fixed,
            a_order,
            order: a_order * perm_part.len() as u64,
            perm_part,
            source: CentralizerSource::Complement,
            elements: None,
        });
    }
    let elements: Vec<GroupElement> = flavor
        .elements()?
        .into_iter()
        .filter(|g| g.commutes_with(x))
        .collect();
    let perm_part = {
        let mut ps: Vec<Permutation> = elements.iter().map(|g| g.perm()).collect();
        ps.sort();
        ps.dedup();
        ps
    };
    let a_part: Vec<BitVector> = elements
        .iter()
        .filter(|g| g.in_a())
        .map(|g| g.a())
        .collect();
    Ok(Centralizer {
        a_order: a_part.len() as u64,
        a_generators: a_part,
        order: elements.len() as u64,
        perm_part,
        source: CentralizerSource::Oracle,
        elements: Some(elements),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, f: GroupFlavor) -> GroupElement {
        GroupElement::parse(s, f).unwrap()
    }

    #[test]
    fn act_examples() {
        let a = BitVector::from_bits(&[1, 0, 0]).unwrap();
        let swap = Permutation::parse("(1 2)", 3).unwrap();
        assert_eq!(act(&swap, &a).unwrap().to_bits(), vec![0, 1, 0]);
        let id = Permutation::identity(3);
        let b = BitVector::from_bits(&[1, 0, 1]).unwrap();
        assert_eq!(act(&id, &b).unwrap(), b);
        let cyc = Permutation::parse("(1 2 3)", 3).unwrap();
        assert_eq!(act(&cyc, &a).unwrap().to_bits(), vec![0, 1, 0]);
        assert!(act(&cyc, &BitVector::zero(4)).is_err());
    }

    #[test]
    fn multiply_inverse_conjugate_examples() {
        let b2 = GroupFlavor::b(2);
        let x = el("[1,0];(1 2)", b2);
        let y = el("[1,0];()", b2);
        assert_eq!(x.multiply(&y).unwrap(), el("[1,1];(1 2)", b2));
        assert_eq!(x.multiply(&b2.identity()).unwrap(), x);
        let z = el("[1,1];()", b2);
        assert_eq!(z.multiply(&z).unwrap(), b2.identity());

        assert_eq!(x.inverse(), el("[0,1];(1 2)", b2));
        assert_eq!(z.inverse(), z);
        assert_eq!(b2.identity().inverse(), b2.identity());

        let g = el("[0,0];(1 2)", b2);
        assert_eq!(conjugate(&g, &y).unwrap(), el("[0,1];()", b2));
        assert_eq!(conjugate(&x, &x).unwrap(), x);
        let g = el("[1,0];()", b2);
        let x = el("[0,0];(1 2)", b2);
        assert_eq!(conjugate(&g, &x).unwrap(), el("[1,1];(1 2)", b2));
    }

    #[test]
    fn flavor_mismatch_is_rejected() {
        let x = GroupFlavor::b(3).identity();
        let y = GroupFlavor::d(3).identity();
        assert!(matches!(x.multiply(&y), Err(Error::FlavorMismatch { .. })));
        assert!(GroupFlavor::new(FlavorKind::D, 1).is_err());
        assert!(GroupElement::parse("[1,0,0];()", GroupFlavor::d(3)).is_err());
        assert!(GroupElement::parse("[1,0,0];()", GroupFlavor::s(3)).is_err());
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(GroupFlavor::b(2).elements().unwrap().len(), 8);
        assert_eq!(GroupFlavor::d(4).elements().unwrap().len(), 192);
        assert_eq!(GroupFlavor::s(3).elements().unwrap().len(), 6);
        let els = GroupFlavor::b(3).elements().unwrap();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(els[0], GroupFlavor::b(3).identity());
    }

    #[test]
    fn structural_centralizer_examples() {
        let b3 = GroupFlavor::b(3);
        let c = centralizer_structural(&el("[1,0,0];()", b3)).unwrap();
        assert_eq!(c.order, 16);
        assert_eq!(c.source, CentralizerSource::NormalPart);
        let c = centralizer_structural(&el("[0,0,0];(1 2 3)", b3)).unwrap();
        assert_eq!(c.order, 6);
        assert_eq!(c.a_order, 2);
        let c = centralizer_structural(&b3.identity()).unwrap();
        assert_eq!(c.order, 48);
        let c = centralizer_structural(&el("[1,0,0];(1 2)", b3)).unwrap();
        assert_eq!(c.source, CentralizerSource::Oracle);
    }

    #[test]
    fn center_examples() {
        let z = GroupFlavor::b(3).center().unwrap();
        assert_eq!(z.len(), 2);
        assert_eq!(z[1].literal(), "[1,1,1];()");
        assert_eq!(GroupFlavor::s(3).center().unwrap().len(), 1);
        let z = GroupFlavor::d(4).center().unwrap();
        assert!(z.iter().any(|g| g.literal() == "[1,1,1,1];()"));
        assert_eq!(GroupFlavor::d(5).center().unwrap().len(), 1);
    }

    #[test]
    fn literal_errors_carry_positions() {
        let f = GroupFlavor::b(3);
        match GroupElement::parse("[1,0,x];()", f) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        match GroupElement::parse("[1,0,1](1 2)", f) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        match GroupElement::parse("[1,0,1];(1 2)(2 3)", f) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 14),
            other => panic!("{other:?}"),
        }
        assert!(GroupElement::parse("[1,0];()", f).is_err());
    }
}
