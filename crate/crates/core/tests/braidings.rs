use weyl_nichols::braid::monomial::{theta_module, LinearMu};
use weyl_nichols::braid::{braiding_is_finite, build_diagonal_braiding, YdSpec};
use weyl_nichols::chars::{f_value, stabilizer_chi, stabilizer_is_full};
use weyl_nichols::verdict::{decide_abelian_support, Outcome};
use weyl_nichols::{BinaryCharacter, BitVector, GroupElement, GroupFlavor, Permutation};

fn centralizer_in_sn(sigma: &Permutation) -> Vec<Permutation> {
    Permutation::all(sigma.len())
        .filter(|h| h.commutes_with(sigma))
        .collect()
}

#[test]
fn stabilizer_is_full_matches_cardinality() {
    for n in 1..=5 {
        for sigma in Permutation::all(n) {
            let cent = centralizer_in_sn(&sigma);
            for w in BitVector::all(n) {
                let stab = stabilizer_chi(&cent, &BinaryCharacter::new(w));
                assert_eq!(stabilizer_is_full(&sigma, &w), stab.len() == cent.len(), "{sigma} {w}");
            }
        }
    }
}

#[test]
fn f_is_symmetric_under_inversion_when_supports_agree() {
    for n in 1..=4 {
        for a in BitVector::all(n) {
            let chi = BinaryCharacter::new(a);
            for g in Permutation::all(n) {
                assert_eq!(
                    f_value(&g, &a, &chi).unwrap(),
                    f_value(&g.inverse(), &a, &chi).unwrap()
                );
            }
        }
    }
}

#[test]
fn character_action_is_dual_to_the_action_on_a() {
    for n in 1..=4 {
        for b in BitVector::all(n) {
            let chi = BinaryCharacter::new(b);
            for t in Permutation::all(n) {
                let moved = chi.act(&t).unwrap();
                for a in BitVector::all(n) {
                    let ta = a.permuted(&t).unwrap();
                    assert_eq!(moved.evaluate(&ta).unwrap(), chi.evaluate(&a).unwrap());
                }
            }
        }
    }
}

fn abelian_grid(flavor: GroupFlavor) -> Vec<YdSpec> {
    let n = flavor.n();
    let mut out = Vec::new();
    for a in flavor.a_elements().into_iter().filter(|a| !a.is_zero()) {
        let sigma = GroupElement::from_a(flavor, a).unwrap();
        for b in BitVector::all(n) {
            let chi = BinaryCharacter::new(b);
            if chi.canonical(flavor) != chi {
                continue;
            }
            out.push(YdSpec::new(sigma, chi).unwrap());
        }
    }
    out
}

#[test]
fn self_braiding_is_minus_one_to_the_f() {
    for n in 2..=4 {
        for spec in abelian_grid(GroupFlavor::b(n)) {
            let q = build_diagonal_braiding(&spec).unwrap().q;
            let f = f_value(&Permutation::identity(n), &spec.sigma.a(), &spec.chi).unwrap();
            assert_eq!(q[0][0], if f % 2 == 0 { 1 } else { -1 });
        }
    }
}

#[test]
fn equal_supports_give_symmetric_braiding() {
    for n in 2..=4 {
        for a in BitVector::all(n).filter(|a| !a.is_zero()) {
            let sigma = GroupElement::from_a(GroupFlavor::b(n), a).unwrap();
            let spec = YdSpec::new(sigma, BinaryCharacter::new(a)).unwrap();
            let q = build_diagonal_braiding(&spec).unwrap().q;
            for i in 0..q.len() {
                for j in 0..q.len() {
                    if i != j {
                        assert_eq!(q[i][j] * q[j][i], 1);
                    }
                }
            }
        }
    }
}

#[test]
fn pipeline_agrees_with_closed_form() {
    for flavor in [GroupFlavor::b(3), GroupFlavor::b(4), GroupFlavor::d(4), GroupFlavor::b(5)] {
        for spec in abelian_grid(flavor) {
            let v = decide_abelian_support(&spec.sigma, &spec.chi).unwrap();
            let finite = braiding_is_finite(&spec).unwrap();
            assert_eq!(v.outcome == Outcome::Finite, finite, "{} {}", spec.sigma, spec.chi);
        }
    }
    assert_eq!(abelian_grid(GroupFlavor::b(3)).len(), 56);
    assert_eq!(abelian_grid(GroupFlavor::b(4)).len(), 240);
}

#[test]
fn central_shift_leaves_the_braiding_unchanged_for_even_characters() {
    let b3 = GroupFlavor::b(3);
    let alpha = BitVector::ones(3);
    for tau in Permutation::all(3) {
        let plain = GroupElement::new(b3, BitVector::zero(3), tau).unwrap();
        let shifted = GroupElement::new(b3, alpha, tau).unwrap();
        for b in BitVector::all(3).filter(|b| b.weight() % 2 == 0) {
            let chi = BinaryCharacter::new(b);
            for mu in [LinearMu::Trivial, LinearMu::Sign] {
                let m0 = theta_module(&plain, &chi, mu).unwrap();
                let m1 = theta_module(&shifted, &chi, mu).unwrap();
                assert_eq!(m0.target, m1.target);
                assert_eq!(m0.sign, m1.sign, "{tau} {chi}");
            }
        }
    }
}
