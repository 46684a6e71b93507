//! Exhaustive ground truth: orbit scans, centralizers by filtering, subgroup
//! closure, and the verification suites built on top of them.

use std::collections::{HashSet, VecDeque};

use crate::bits::BitVector;
use crate::error::Result;
use crate::group::{check_cap, GroupElement, GroupFlavor};
use crate::perm::Permutation;

pub mod suites;

pub use suites::{verify_suite, SuiteReport, SUITES};

pub fn brute_is_conjugate(x: &GroupElement, y: &GroupElement) -> Result<bool> {
    x.flavor().check_same(&y.flavor())?;
    for g in x.flavor().elements()? {
        if x.conjugate_by(&g)? == *y {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn brute_centralizer(x: &GroupElement) -> Result<Vec<GroupElement>> {
    Ok(x.flavor()
        .elements()?
        .into_iter()
        .filter(|g| g.commutes_with(x))
        .collect())
}

/// `{g x g^{-1}}`, sorted.
pub fn brute_class(x: &GroupElement) -> Result<Vec<GroupElement>> {
    let set: HashSet<GroupElement> = x
        .flavor()
        .elements()?
        .iter()
        .map(|g| g.mul_unchecked(x).mul_unchecked(&g.inverse()))
        .collect();
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort();
    Ok(v)
}

/// Conjugacy classes as sorted orbits, listed in order of their smallest
/// element.
pub fn conjugacy_classes(flavor: GroupFlavor) -> Result<Vec<Vec<GroupElement>>> {
    let elements = flavor.elements()?;
    let inverses: Vec<GroupElement> = elements.iter().map(|g| g.inverse()).collect();
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut out = Vec::new();
    for x in &elements {
        if seen.contains(x) {
            continue;
        }
        let mut orbit: Vec<GroupElement> = elements
            .iter()
            .zip(&inverses)
            .map(|(g, gi)| g.mul_unchecked(x).mul_unchecked(gi))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        orbit.sort();
        seen.extend(orbit.iter().copied());
        out.push(orbit);
    }
    Ok(out)
}

/// Elements commuting with everything, by exhaustive scan.
pub fn brute_center(flavor: GroupFlavor) -> Result<Vec<GroupElement>> {
    let elements = flavor.elements()?;
    Ok(elements
        .iter()
        .filter(|z| elements.iter().all(|g| g.commutes_with(z)))
        .copied()
        .collect())
}

/// Subgroup generated by `gens` inside `flavor`, by breadth-first
/// multiplication. Sorted.
pub fn closure_from_generators(
    flavor: GroupFlavor,
    gens: &[GroupElement],
) -> Result<Vec<GroupElement>> {
    for g in gens {
        flavor.check_same(&g.flavor())?;
    }
    let cap = flavor.order();
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(flavor.identity());
    queue.push_back(flavor.identity());
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul_unchecked(g);
            if seen.insert(y) {
                check_cap(seen.len() as u64)?;
                queue.push_back(y);
            }
        }
    }
    debug_assert!(seen.len() as u64 <= cap);
    let mut v: Vec<_> = seen.into_iter().collect();
    v.sort();
    Ok(v)
}

/// Generators of `W(D_n)` inside `W(B_n)`: the adjacent transpositions
/// `r_i = (i i+1)` and `τ̃_{n-1} τ̃_n r_{n-1}`, which flips the last two
/// signs after swapping them.
pub fn d_generators(n: usize) -> Vec<GroupElement> {
    let b = GroupFlavor::b(n);
    let mut gens: Vec<GroupElement> = (0..n - 1)
        .map(|i| GroupElement::from_perm(b, Permutation::transposition(n, i, i + 1)).unwrap())
        .collect();
    let flip = BitVector::from_mask(n, 0b11 << (n - 2));
    gens.push(GroupElement::new(b, flip, Permutation::transposition(n, n - 2, n - 1)).unwrap());
    gens
}

/// Coxeter generators of `W(B_n)`: adjacent transpositions and one sign flip.
pub fn b_generators(n: usize) -> Vec<GroupElement> {
    let b = GroupFlavor::b(n);
    let mut gens: Vec<GroupElement> = (0..n - 1)
        .map(|i| GroupElement::from_perm(b, Permutation::transposition(n, i, i + 1)).unwrap())
        .collect();
    gens.push(GroupElement::from_a(b, BitVector::unit(n, 0)).unwrap());
    gens
}


#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, f: GroupFlavor) -> GroupElement {
        GroupElement::parse(s, f).unwrap()
    }

    #[test]
    fn conjugacy_scan_examples() {
        let b2 = GroupFlavor::b(2);
        let x = el("[1,0];(1 2)", b2);
        assert!(brute_is_conjugate(&x, &x).unwrap());
        assert!(!brute_is_conjugate(&x, &el("[0,0];(1 2)", b2)).unwrap());
        let g = el("[1,1];(1 2)", b2);
        assert!(brute_is_conjugate(&x, &x.conjugate_by(&g).unwrap()).unwrap());
    }

    #[test]
    fn centralizer_examples() {
        let b3 = GroupFlavor::b(3);
        assert_eq!(brute_centralizer(&b3.identity()).unwrap().len(), 48);
        assert_eq!(brute_centralizer(&el("[1,0,0];()", b3)).unwrap().len(), 16);
        let x = el("[0,0,0,0];(1 2)(3 4)", GroupFlavor::b(4));
        let cb = brute_centralizer(&x).unwrap();
        let cd = brute_centralizer(&x.with_flavor(GroupFlavor::d(4)).unwrap()).unwrap();
        let lits = |v: &[GroupElement]| v.iter().map(|g| g.literal()).collect::<Vec<_>>();
        assert_eq!(lits(&cb), lits(&cd));
    }

    #[test]
    fn closure_examples() {
        let b4 = GroupFlavor::b(4);
        let d = closure_from_generators(b4, &d_generators(4)).unwrap();
        assert_eq!(d.len(), 192);
        assert!(d.iter().all(crate::cycles::is_in_d));
        assert_eq!(closure_from_generators(b4, &[]).unwrap(), vec![b4.identity()]);
        let b3 = GroupFlavor::b(3);
        assert_eq!(closure_from_generators(b3, &b_generators(3)).unwrap().len(), 48);
    }

    #[test]
    fn center_matches_structural() {
        for f in [GroupFlavor::b(3), GroupFlavor::s(3), GroupFlavor::d(4), GroupFlavor::d(5)] {
            assert_eq!(brute_center(f).unwrap(), f.center().unwrap(), "{f}");
        }
    }
}
