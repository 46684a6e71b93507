//! Sign-cycle decomposition of elements of `A ⋊ S_n` and the resulting
//! conjugacy-class labels.
//!
//! A sign cycle is a cycle of the permutation part together with the parity
//! of the `a`-bits over its support. Fixed points are cycles of length one,
//! so every element decomposes into cycles partitioning `{1..n}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::group::{factorial, FlavorKind, GroupElement, GroupFlavor};
use crate::oracle;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCycle {
    /// 0-based points in cycle order: `σ(support[k]) = support[k+1]`.
    pub support: Vec<usize>,
    pub negative: bool,
}

impl SignCycle {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// This cycle as an element of `W(B_n)`.
    /// A negative cycle carries its single 1-bit at its first point.
    pub fn to_element(&self, n: usize) -> GroupElement {
        let mut a = BitVector::zero(n);
        if self.negative {
            a = a.with(self.support[0], true);
        }
        let perm = Permutation::from_cycles(n, std::slice::from_ref(&self.support))
            .expect("cycle points are in range");
        GroupElement::new(GroupFlavor::b(n), a, perm).expect("B contains every pair")
    }
}

impl fmt::Display for SignCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.support.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({}){}", pts.join(" "), if self.negative { '-' } else { '+' })
    }
}

/// Multiset of `(length, negative)` pairs in canonical order: length
/// descending, positive before negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignCycleType {
    entries: Vec<(usize, bool)>,
}

impl SignCycleType {
    pub fn from_entries(mut entries: Vec<(usize, bool)>) -> Result<Self> {
        if entries.iter().any(|&(len, _)| len == 0) {
            return Err(Error::Domain("sign cycle of length 0".into()));
        }
        entries.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        Ok(SignCycleType { entries })
    }

    pub fn entries(&self) -> &[(usize, bool)] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.iter().map(|e| e.0).sum()
    }

    pub fn negative_count(&self) -> usize {
        self.entries.iter().filter(|e| e.1).count()
    }

    /// `(λ⁺, λ⁻)`: lengths of positive and of negative cycles.
    pub fn partitions(&self) -> (Vec<usize>, Vec<usize>) {
        let pos = self.entries.iter().filter(|e| !e.1).map(|e| e.0).collect();
        let neg = self.entries.iter().filter(|e| e.1).map(|e| e.0).collect();
        (pos, neg)
    }

    /// Canonical representative: cycles laid out on consecutive points in
    /// label order, each negative cycle carrying a single 1-bit.
    pub fn representative(&self) -> GroupElement {
        let n = self.n();
        let mut cycles = Vec::new();
        let mut a = BitVector::zero(n);
        let mut next = 0;
        for &(len, neg) in &self.entries {
            let c: Vec<usize> = (next..next + len).collect();
            if neg {
                a = a.with(next, true);
            }
            if len > 1 {
                cycles.push(c);
            }
            next += len;
        }
        let perm = Permutation::from_cycles(n, &cycles).expect("consecutive cycles");
        GroupElement::new(GroupFlavor::b(n), a, perm).expect("B contains every pair")
    }

    /// Size of the corresponding class of `W(B_n)`: `|W(B_n)|` divided by
    /// `∏ m! (2r)^m` over the multiplicities `m` of each `(r, sign)`.
    pub fn b_class_size(&self) -> u64 {
        let n = self.n();
        let order = GroupFlavor::b(n).order();
        let cent: u64 = self
            .multiplicities()
            .iter()
            .map(|(&(r, _), &m)| factorial(m) * (2 * r as u64).pow(m as u32))
            .product();
        order / cent
    }

    fn multiplicities(&self) -> BTreeMap<(usize, bool), usize> {
        let mut m = BTreeMap::new();
        for &e in &self.entries {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for SignCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(len, neg)| format!("{len}{}", if neg { '-' } else { '+' }))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for SignCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn decompose(x: &GroupElement) -> Vec<SignCycle> {
    let a = x.a();
    x.perm()
        .cycles()
        .into_iter()
        .map(|support| {
            let negative = support.iter().filter(|&&i| a.get(i)).count() % 2 == 1;
            SignCycle { support, negative }
        })
        .collect()
}

pub fn sign_cycle_type(x: &GroupElement) -> SignCycleType {
    let entries = decompose(x)
        .iter()
        .map(|c| (c.len(), c.negative))
        .collect();
    SignCycleType::from_entries(entries).expect("cycles are nonempty")
}

/// Membership in `W(D_n)`: an even number of negative sign cycles.
pub fn is_in_d(x: &GroupElement) -> bool {
    decompose(x).iter().filter(|c| c.negative).count() % 2 == 0
}

/// Conjugacy in `W(B_n)`: equal sign-cycle types.
pub fn are_conjugate_b(x: &GroupElement, y: &GroupElement) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::Dimension {
            expected: x.n(),
            found: y.n(),
        });
    }
    Ok(sign_cycle_type(x) == sign_cycle_type(y))
}

/// Some `g ∈ W(B_n)` with `g x g^{-1} = y`.
///
/// Cycles of `x` and `y` are paired by `(length, sign)` in canonical order;
/// `τ` sends each cycle of `x` onto its partner point by point and the bits
/// of `b` on the partner are solved along the cycle with the last one set
/// to 0. The result is checked before it is returned and lives in the `B`
/// flavor of the same rank.
pub fn build_conjugator(x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    if !are_conjugate_b(x, y)? {
        return Err(Error::Domain(format!("{x} and {y} are not conjugate in W(B_{})", x.n())));
    }
    let n = x.n();
    let order = |c: &SignCycle| (std::cmp::Reverse(c.len()), c.negative);
    let mut xs = decompose(x);
    let mut ys = decompose(y);
    xs.sort_by_key(order);
    ys.sort_by_key(order);

    let (a, a2) = (x.a(), y.a());
    let mut tau = vec![0usize; n];
    let mut b = BitVector::zero(n);
    for (cx, cy) in xs.iter().zip(&ys) {
        let r = cx.len();
        for k in 0..r {
            tau[cx.support[k]] = cy.support[k];
        }
        let mut prev = false;
        for j in 0..r - 1 {
            let bit = prev ^ a2.get(cy.support[j]) ^ a.get(cx.support[j]);
            b = b.with(cy.support[j], bit);
            prev = bit;
        }
    }
    let b_flavor = GroupFlavor::b(n);
    let g = GroupElement::new(b_flavor, b, Permutation::from_images(&tau)?)?;
    let got = x.with_flavor(b_flavor)?.conjugate_by(&g)?;
    if got != y.with_flavor(b_flavor)? {
        return Err(Error::Domain(format!(
            "conjugator check failed: {g} sends {x} to {got}, not {y}"
        )));
    }
    Ok(g)
}

/// `λ_j` (number of `j`-cycles, fixed points included) and the block `Y_j`,
/// the union of the supports of all `j`-cycles, for `j = 1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleBlocks {
    pub lambda: Vec<usize>,
    pub blocks: Vec<BitVector>,
}

impl CycleBlocks {
    /// `λ_j` for 1-based `j`.
    pub fn count(&self, j: usize) -> usize {
        self.lambda[j - 1]
    }

    /// `Y_j` for 1-based `j`.
    pub fn block(&self, j: usize) -> BitVector {
        self.blocks[j - 1]
    }

    /// Nonempty blocks only.
    pub fn nonempty(&self) -> impl Iterator<Item = (usize, BitVector)> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, y)| !y.is_zero())
            .map(|(j, y)| (j + 1, *y))
    }
}

pub fn perm_cycle_type_blocks(sigma: &Permutation) -> CycleBlocks {
    let n = sigma.len();
    let mut lambda = vec![0; n];
    let mut blocks = vec![BitVector::zero(n); n];
    for c in sigma.cycles() {
        let j = c.len();
        lambda[j - 1] += 1;
        for i in c {
            blocks[j - 1] = blocks[j - 1].with(i, true);
        }
    }
    CycleBlocks { lambda, blocks }
}

/// Class label: a sign-cycle type where that is a complete invariant, or an
/// orbit index (with the `B`-type it refines) for `W(D_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClassLabel {
    Signed(SignCycleType),
    Oracle { id: usize, b_type: SignCycleType },
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Signed(t) => write!(f, "{t}"),
            ClassLabel::Oracle { id, b_type } => write!(f, "#{id} {b_type}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub label: ClassLabel,
    #[serde(serialize_with = "ser_literal")]
    pub representative: GroupElement,
    pub size: u64,
}

fn ser_literal<S: serde::Serializer>(g: &GroupElement, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.literal())
}

/// Partitions of `n` as non-increasing part lists, in reverse lexicographic
/// order (`[n]` first).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every sign-cycle type of rank `n`, sorted.
pub fn all_sign_cycle_types(n: usize) -> Vec<SignCycleType> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pos in partitions(k) {
            for neg in partitions(n - k) {
                let entries = pos
                    .iter()
                    .map(|&l| (l, false))
                    .chain(neg.iter().map(|&l| (l, true)))
                    .collect();
                out.push(SignCycleType::from_entries(entries).expect("positive parts"));
            }
        }
    }
    out.sort();
    out
}

/// Conjugacy classes of the flavor's group.
///
/// `B` classes come from sign-cycle types, `S` classes from cycle types
/// (all-positive sign types); `D` classes are found by orbit partition.
pub fn enumerate_classes(flavor: GroupFlavor) -> Result<Vec<ClassInfo>> {
    let n = flavor.n();
    crate::group::check_cap(flavor.order())?;
    match flavor.kind() {
        FlavorKind::B => Ok(all_sign_cycle_types(n)
            .into_iter()
            .map(|t| ClassInfo {
                representative: t.representative(),
                size: t.b_class_size(),
                label: ClassLabel::Signed(t),
            })
            .collect()),
        FlavorKind::S => Ok(all_sign_cycle_types(n)
            .into_iter()
            .filter(|t| t.negative_count() == 0)
            .map(|t| {
                let rep = t.representative().with_flavor(flavor).expect("a = 0");
                // n! / ∏ m! r^m
                let cent: u64 = t
                    .multiplicities()
                    .iter()
                    .map(|(&(r, _), &m)| factorial(m) * (r as u64).pow(m as u32))
                    .product();
                ClassInfo {
                    representative: rep,
                    size: factorial(n) / cent,
                    label: ClassLabel::Signed(t),
                }
            })
            .collect()),
        FlavorKind::D => {
            let orbits = oracle::conjugacy_classes(flavor)?;
            Ok(orbits
                .into_iter()
                .enumerate()
                .map(|(id, orbit)| {
                    let rep = orbit[0];
                    ClassInfo {
                        label: ClassLabel::Oracle {
                            id,
                            b_type: sign_cycle_type(&rep),
                        },
                        representative: rep,
                        size: orbit.len() as u64,
                    }
                })
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, f: GroupFlavor) -> GroupElement {
        GroupElement::parse(s, f).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let b4 = GroupFlavor::b(4);
        let cs = decompose(&el("[1,0,1,1];(1 2)(3 4)", b4));
        assert_eq!(cs.len(), 2);
        assert!(cs[0].negative && !cs[1].negative);
        let cs = decompose(&el("[1,1,0,0];()", b4));
        assert_eq!(cs.iter().filter(|c| c.negative).count(), 2);
        assert!(cs[0].negative && cs[1].negative && !cs[2].negative);
    }

    #[test]
    fn sign_cycle_type_examples() {
        let b2 = GroupFlavor::b(2);
        assert_eq!(sign_cycle_type(&el("[1,0];(1 2)", b2)).to_string(), "[2-]");
        assert_eq!(sign_cycle_type(&el("[1,1];(1 2)", b2)).to_string(), "[2+]");
        let b4 = GroupFlavor::b(4);
        assert_eq!(
            sign_cycle_type(&el("[1,1,0,0];(1 2)", b4)).to_string(),
            "[2+,1+,1+]"
        );
    }

    #[test]
    fn d_membership_examples() {
        let b4 = GroupFlavor::b(4);
        assert!(is_in_d(&el("[1,1,0,0];()", b4)));
        assert!(!is_in_d(&el("[1,0,0,0];()", b4)));
        assert!(is_in_d(&el("[1,1,0,0];(1 2)", b4)));
    }

    #[test]
    fn conjugacy_examples() {
        let b2 = GroupFlavor::b(2);
        let x = el("[1,0];(1 2)", b2);
        let y = el("[0,1];(1 2)", b2);
        assert!(are_conjugate_b(&x, &y).unwrap());
        assert!(are_conjugate_b(&el("[1,1];(1 2)", b2), &el("[0,0];(1 2)", b2)).unwrap());
        assert!(!are_conjugate_b(&x, &el("[0,0];(1 2)", b2)).unwrap());
        let g = build_conjugator(&x, &y).unwrap();
        assert_eq!(x.conjugate_by(&g).unwrap(), y);
        assert!(build_conjugator(&x, &x).is_ok());
        assert!(build_conjugator(&x, &el("[0,0];(1 2)", b2)).is_err());
    }

    #[test]
    fn blocks_examples() {
        let b = perm_cycle_type_blocks(&Permutation::parse("(1 2)(3 4 5)", 5).unwrap());
        assert_eq!((b.count(2), b.count(3)), (1, 1));
        assert_eq!(b.block(2).to_bits(), vec![1, 1, 0, 0, 0]);
        assert_eq!(b.block(3).to_bits(), vec![0, 0, 1, 1, 1]);
        let b = perm_cycle_type_blocks(&Permutation::identity(3));
        assert_eq!(b.count(1), 3);
        assert!(b.block(1).is_ones());
        let b = perm_cycle_type_blocks(&Permutation::parse("(1 2 3 4)", 4).unwrap());
        assert_eq!(b.count(4), 1);
        assert_eq!(b.nonempty().count(), 1);
    }

    #[test]
    fn class_counts() {
        for (n, k) in [(2, 5), (3, 10), (4, 20)] {
            let cs = enumerate_classes(GroupFlavor::b(n)).unwrap();
            assert_eq!(cs.len(), k);
            assert_eq!(cs.iter().map(|c| c.size).sum::<u64>(), GroupFlavor::b(n).order());
        }
        let cs = enumerate_classes(GroupFlavor::d(4)).unwrap();
        assert_eq!(cs.len(), 13);
        assert_eq!(cs.iter().map(|c| c.size).sum::<u64>(), 192);
        let cs = enumerate_classes(GroupFlavor::s(5)).unwrap();
        assert_eq!(cs.len(), 7);
        assert_eq!(cs.iter().map(|c| c.size).sum::<u64>(), 120);
    }
}
