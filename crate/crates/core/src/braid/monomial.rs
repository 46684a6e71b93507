//! Braidings of modules induced from one-dimensional representations, for
//! arbitrary `σ`.
//!
//! For `K ≤ G^σ` and a character `λ` of `K`, `M = Ind_K^G λ` has basis
//! `x_i = g_i ⊗ v` over left coset representatives `g_i`, and
//! `c(x_i ⊗ x_j) = λ(k) x_l ⊗ x_i` where `(g_i σ g_i^{-1}) g_j = g_l k`.

use std::collections::HashMap;

use crate::bits::BitVector;
use crate::chars::BinaryCharacter;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::oracle::brute_centralizer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBraiding {
    pub reps: Vec<GroupElement>,
    /// `g_i σ g_i^{-1}`.
    pub degrees: Vec<GroupElement>,
    /// `target[i][j] = l`.
    pub target: Vec<Vec<usize>>,
    pub sign: Vec<Vec<i8>>,
}

impl MonomialBraiding {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// True when every `x_i ⊗ x_j` goes to a multiple of `x_j ⊗ x_i`.
    pub fn is_diagonal(&self) -> bool {
        self.target
            .iter()
            .all(|row| row.iter().enumerate().all(|(j, &l)| l == j))
    }
}

/// `Ind_K^G λ` with its braiding. `k` must be a subgroup of the centralizer
/// of `sigma`, and `lambda` a homomorphism `K → {±1}`; both are checked.
pub fn build_induced<F>(sigma: &GroupElement, k: &[GroupElement], lambda: F) -> Result<MonomialBraiding>
where
    F: Fn(&GroupElement) -> i8,
{
    let flavor = sigma.flavor();
    if let Some(bad) = k.iter().find(|x| !x.commutes_with(sigma)) {
        return Err(Error::Domain(format!("{bad} does not centralize {sigma}")));
    }
    let k_set: std::collections::HashSet<GroupElement> = k.iter().copied().collect();
    for x in k {
        for y in k {
            let xy = x.mul_unchecked(y);
            if !k_set.contains(&xy) {
                return Err(Error::Domain("K is not closed under multiplication".into()));
            }
            if lambda(&xy) != lambda(x) * lambda(y) {
                return Err(Error::Domain(format!("λ is not multiplicative at {x}, {y}")));
            }
        }
    }

    let mut coset_of: HashMap<GroupElement, usize> = HashMap::new();
    let mut reps = Vec::new();
    for g in flavor.elements()? {
        if coset_of.contains_key(&g) {
            continue;
        }
        let id = reps.len();
        for x in k {
            coset_of.insert(g.mul_unchecked(x), id);
        }
        reps.push(g);
    }

    let degrees: Vec<GroupElement> = reps
        .iter()
        .map(|g| g.mul_unchecked(sigma).mul_unchecked(&g.inverse()))
        .collect();
    let m = reps.len();
    let mut target = vec![vec![0; m]; m];
    let mut sign = vec![vec![0i8; m]; m];
    for i in 0..m {
        for j in 0..m {
            let tg = degrees[i].mul_unchecked(&reps[j]);
            let l = coset_of[&tg];
            let kk = reps[l].inverse().mul_unchecked(&tg);
            target[i][j] = l;
            sign[i][j] = lambda(&kk);
        }
    }
    Ok(MonomialBraiding {
        reps,
        degrees,
        target,
        sign,
    })
}

/// One-dimensional `μ` available without representation theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearMu {
    Trivial,
    Sign,
}

/// `M(O_σ, θ_{χ,μ})` for `σ` whose centralizer has the form
/// `A^τ ⋊ S_n^τ` (as for `σ = (c, τ)` with `c` central, or `c = 0`),
/// with `μ` one-dimensional. `K = A^τ ⋊ (S_n^τ)_χ` and
/// `λ(c, h) = χ(c) μ(h)`.
pub fn theta_module(sigma: &GroupElement, chi: &BinaryCharacter, mu: LinearMu) -> Result<MonomialBraiding> {
    let tau = sigma.perm();
    let cent = brute_centralizer(sigma)?;
    let a_tau: Vec<BitVector> = sigma
        .flavor()
        .a_elements()
        .into_iter()
        .filter(|c| c.permuted(&tau).map(|x| x == *c).unwrap_or(false))
        .collect();
    if let Some(g) = cent.iter().find(|g| !a_tau.contains(&g.a())) {
        return Err(Error::Unsupported(format!(
            "centralizer of {sigma} is not A^τ ⋊ S_n^τ (contains {g})"
        )));
    }
    let fixes_chi = |g: &GroupElement| {
        let hinv = g.perm().inverse();
        a_tau.iter().all(|c| {
            let moved = c.permuted(&hinv).expect("rank");
            chi.evaluate(&moved).ok() == chi.evaluate(c).ok()
        })
    };
    let k: Vec<GroupElement> = cent.into_iter().filter(|g| fixes_chi(g)).collect();
    build_induced(sigma, &k, |g| {
        let c = chi.evaluate(&g.a()).expect("rank");
        let m = match mu {
            LinearMu::Trivial => 1,
            LinearMu::Sign => g.perm().sign(),
        };
        c * m
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{build_diagonal_braiding, YdSpec};
    use crate::group::GroupFlavor;

    #[test]
    fn abelian_support_is_diagonal_and_matches_diagonal_builder() {
        let f = GroupFlavor::b(3);
        for a in BitVector::all(3).skip(1) {
            let sigma = GroupElement::from_a(f, a).unwrap();
            for b in BitVector::all(3) {
                let chi = BinaryCharacter::new(b);
                let m = theta_module(&sigma, &chi, LinearMu::Trivial).unwrap();
                assert!(m.is_diagonal());
                let d = build_diagonal_braiding(&YdSpec::new(sigma, chi).unwrap()).unwrap();
                assert_eq!(m.len(), d.len());
                let mut ms: Vec<i8> = m.sign.iter().flatten().copied().collect();
                let mut ds: Vec<i8> = d.q.iter().flatten().copied().collect();
                ms.sort();
                ds.sort();
                assert_eq!(ms, ds, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn alpha_shift_multiplies_by_chi_alpha() {
        let f = GroupFlavor::b(3);
        let alpha = BitVector::ones(3);
        let tau = crate::perm::Permutation::parse("(1 2)", 3).unwrap();
        let n_el = GroupElement::from_perm(f, tau).unwrap();
        let m_el = GroupElement::new(f, alpha, tau).unwrap();
        let chi = BinaryCharacter::new(BitVector::from_bits(&[1, 0, 0]).unwrap());
        let bn = theta_module(&n_el, &chi, LinearMu::Sign).unwrap();
        let bm = theta_module(&m_el, &chi, LinearMu::Sign).unwrap();
        assert_eq!(bn.target, bm.target);
        for i in 0..bn.len() {
            for j in 0..bn.len() {
                assert_eq!(bm.sign[i][j], -bn.sign[i][j]);
            }
        }
    }
}
