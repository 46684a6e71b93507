//! Square-commutativity of conjugacy classes: `O_x` and `O_y` are
//! square-commutative when `(st)² = (ts)²` for every `s ∈ O_x`, `t ∈ O_y`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FlavorKind, GroupElement, GroupFlavor};
use crate::oracle::brute_class;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareCommuteResult {
    pub holds: bool,
    /// First failing `(s, t)` in enumeration order, as element literals.
    pub witness: Option<(String, String)>,
}

fn square(x: &GroupElement) -> GroupElement {
    x.mul_unchecked(x)
}

/// Exhaustive test over both classes.
pub fn classes_square_commute(x: &GroupElement, y: &GroupElement) -> Result<SquareCommuteResult> {
    x.flavor().check_same(&y.flavor())?;
    let ox = brute_class(x)?;
    let oy = brute_class(y)?;
    let witness = ox.par_iter().find_map_first(|s| {
        oy.iter()
            .find(|t| square(&s.mul_unchecked(t)) != square(&t.mul_unchecked(s)))
            .map(|t| (s.literal(), t.literal()))
    });
    Ok(SquareCommuteResult {
        holds: witness.is_none(),
        witness,
    })
}

/// Plain commutativity of two classes.
pub fn classes_commute(x: &GroupElement, y: &GroupElement) -> Result<bool> {
    x.flavor().check_same(&y.flavor())?;
    let ox = brute_class(x)?;
    let oy = brute_class(y)?;
    Ok(ox.par_iter().all(|s| oy.iter().all(|t| s.commutes_with(t))))
}

fn is_transposition(t: &[usize]) -> bool {
    t.first() == Some(&2) && t[1..].iter().all(|&l| l == 1)
}

fn is_fpf_involution(t: &[usize]) -> bool {
    !t.is_empty() && t.iter().all(|&l| l == 2)
}

fn is_double_transposition(t: &[usize]) -> bool {
    t.len() >= 2 && t[0] == 2 && t[1] == 2 && t[2..].iter().all(|&l| l == 1)
}

/// The square-commutative pairs of nontrivial `S_n` classes, given by cycle
/// types (descending, fixed points included):
///
/// * `n = 3`: `{3, 3}` and `{2·1, 3}`;
/// * `n = 4`: `{2², 2²}`, `{2², 4}` and `{2·1², 2²}`;
/// * `n = 2k > 4`: a transposition with a fixed-point-free involution.
pub fn sn_square_classification(type_x: &[usize], type_y: &[usize], n: usize) -> Result<bool> {
    if n <= 2 {
        return Err(Error::Domain(format!("classification needs n > 2, got {n}")));
    }
    for t in [type_x, type_y] {
        if t.iter().sum::<usize>() != n {
            return Err(Error::Domain(format!("{t:?} is not a cycle type of rank {n}")));
        }
        if t.iter().all(|&l| l == 1) {
            return Err(Error::Domain("classes must be nontrivial".into()));
        }
    }
    let pair = |p: &[usize], q: &[usize]| {
        (type_x == p && type_y == q) || (type_x == q && type_y == p)
    };
    Ok(match n {
        3 => pair(&[3], &[3]) || pair(&[2, 1], &[3]),
        4 => pair(&[2, 2], &[2, 2]) || pair(&[2, 2], &[4]) || pair(&[2, 1, 1], &[2, 2]),
        _ if n % 2 == 0 => {
            (is_transposition(type_x) && is_fpf_involution(type_y))
                || (is_transposition(type_y) && is_fpf_involution(type_x))
        }
        _ => false,
    })
}

/// `O_a` (with `a ∈ A`) and `O_σ`, `σ = (b, τ)`, are square-commutative
/// exactly when `a` is central or `τ² = 1`.
pub fn lemma_3_7_test(a: &GroupElement, sigma: &GroupElement) -> Result<bool> {
    if !a.in_a() {
        return Err(Error::Domain(format!("{a} is not in A")));
    }
    a.flavor().check_same(&sigma.flavor())?;
    Ok(is_central(a) || sigma.perm().pow(2).is_identity())
}

/// Centrality for elements of `A`: zero, or all-ones where that is central.
fn is_central(a: &GroupElement) -> bool {
    if !a.in_a() {
        return false;
    }
    let v = a.a();
    v.is_zero() || (v.is_ones() && (a.n() >= 3 || a.flavor().kind() != FlavorKind::S))
}

/// Closed-form answers for the wreath-product shapes; `None` outside them.
///
/// * `(a, σ)` against `(b, 1)`: true when `b` is central, else iff `σ² = 1`;
/// * `n = 3`, `3` against `3`, and `2·1` against `3`: false;
/// * `n = 4`, `2²` against `4`: false;
/// * `n = 2k ≥ 4`, a transposition against a fixed-point-free involution or
///   a double transposition: false;
/// * `n = 4`, `2²` against `2²`: iff the total parities of `a` and `b` agree.
pub fn wreath_square_cases(x: &GroupElement, y: &GroupElement) -> Result<Option<bool>> {
    x.flavor().check_same(&y.flavor())?;
    let n = x.n();
    for (u, v) in [(x, y), (y, x)] {
        if v.in_a() {
            return Ok(Some(is_central(v) || u.perm().pow(2).is_identity()));
        }
    }
    let tx = x.perm().cycle_type();
    let ty = y.perm().cycle_type();
    let pair = |p: &dyn Fn(&[usize]) -> bool, q: &dyn Fn(&[usize]) -> bool| {
        (p(&tx) && q(&ty)) || (p(&ty) && q(&tx))
    };
    let is = |want: &'static [usize]| move |t: &[usize]| t == want;
    if n == 3 && (pair(&is(&[3]), &is(&[3])) || pair(&is(&[2, 1]), &is(&[3]))) {
        return Ok(Some(false));
    }
    if n == 4 && pair(&is(&[2, 2]), &is(&[4])) {
        return Ok(Some(false));
    }
    if n >= 4
        && n % 2 == 0
        && (pair(&is_transposition, &is_fpf_involution)
            || pair(&is_transposition, &is_double_transposition))
    {
        return Ok(Some(false));
    }
    if n == 4 && tx == [2, 2] && ty == [2, 2] {
        return Ok(Some(x.a().parity() == y.a().parity()));
    }
    Ok(None)
}

/// Permutation part of an element as an element of `S_n`.
pub fn project(x: &GroupElement) -> GroupElement {
    GroupElement::from_perm(GroupFlavor::s(x.n()), x.perm()).expect("S_n contains every perm")
}

/// Representative of the `S_n` class with the given cycle type.
pub fn sn_class_rep(cycle_type: &[usize]) -> Permutation {
    let n = cycle_type.iter().sum();
    let mut cycles = Vec::new();
    let mut next = 0;
    for &l in cycle_type {
        if l > 1 {
            cycles.push((next..next + l).collect());
        }
        next += l;
    }
    Permutation::from_cycles(n, &cycles).expect("consecutive cycles")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, f: GroupFlavor) -> GroupElement {
        GroupElement::parse(s, f).unwrap()
    }

    #[test]
    fn brute_examples() {
        let s3 = GroupFlavor::s(3);
        let c = el("[0,0,0];(1 2 3)", s3);
        assert!(classes_square_commute(&c, &c).unwrap().holds);
        let s4 = GroupFlavor::s(4);
        let t = el("[0,0,0,0];(1 2)", s4);
        let r = classes_square_commute(&t, &t).unwrap();
        assert!(!r.holds);
        assert!(r.witness.is_some());
        let s6 = GroupFlavor::s(6);
        let t = el("[0,0,0,0,0,0];(1 2)", s6);
        let f = el("[0,0,0,0,0,0];(1 2)(3 4)(5 6)", s6);
        assert!(classes_square_commute(&t, &f).unwrap().holds);
    }

    #[test]
    fn classification_examples() {
        assert!(sn_square_classification(&[2, 2], &[4], 4).unwrap());
        for x in crate::cycles::partitions(5).iter() {
            for y in crate::cycles::partitions(5) {
                if x.iter().all(|&l| l == 1) || y.iter().all(|&l| l == 1) {
                    continue;
                }
                assert!(!sn_square_classification(x, &y, 5).unwrap());
            }
        }
        assert!(sn_square_classification(&[2, 1, 1, 1, 1, 1, 1], &[2, 2, 2, 2], 8).unwrap());
        assert!(sn_square_classification(&[2], &[2], 2).is_err());
    }

    #[test]
    fn lemma_3_7_examples() {
        let b3 = GroupFlavor::b(3);
        let alpha = el("[1,1,1];()", b3);
        assert!(lemma_3_7_test(&alpha, &el("[1,0,0];(1 2 3)", b3)).unwrap());
        assert!(!lemma_3_7_test(&el("[1,0,0];()", b3), &el("[0,0,0];(1 2 3)", b3)).unwrap());
        let b4 = GroupFlavor::b(4);
        assert!(lemma_3_7_test(&el("[1,0,0,0];()", b4), &el("[0,0,0,0];(1 2)(3 4)", b4)).unwrap());
    }

    #[test]
    fn wreath_examples() {
        let b4 = GroupFlavor::b(4);
        let x = el("[1,0,0,0];(1 2)(3 4)", b4);
        let y = el("[0,0,1,0];(1 2)(3 4)", b4);
        assert_eq!(wreath_square_cases(&x, &y).unwrap(), Some(true));
        let z = el("[0,0,0,0];(1 2 3 4)", b4);
        assert_eq!(wreath_square_cases(&x, &z).unwrap(), Some(false));
        let a = el("[1,0,0,0];()", b4);
        assert_eq!(wreath_square_cases(&x, &a).unwrap(), Some(true));
        assert_eq!(wreath_square_cases(&z, &a).unwrap(), Some(false));
    }
}
