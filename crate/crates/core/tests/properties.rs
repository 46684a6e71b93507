use proptest::prelude::*;

use weyl_nichols::cycles::{are_conjugate_b, build_conjugator, is_in_d};
use weyl_nichols::{conjugate, BitVector, GroupElement, GroupFlavor, Permutation};

fn element(max_n: usize) -> impl Strategy<Value = GroupElement> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), any::<u32>(), Just(()).prop_perturb(move |_, mut rng| {
            let mut images: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                images.swap(i, j);
            }
            images
        }))
            .prop_map(|(n, mask, images)| {
                let a = BitVector::from_mask(n, mask & ((1 << n) - 1));
                let p = Permutation::from_images(&images).unwrap();
                GroupElement::new(GroupFlavor::b(n), a, p).unwrap()
            })
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (GroupElement, GroupElement)> {
    element(max_n).prop_flat_map(|x| {
        let n = x.n();
        element(n).prop_filter_map("same rank", move |g| (g.n() == n).then_some((x, g)))
    })
}

proptest! {
    #[test]
    fn inverse_round_trip(x in element(8)) {
        prop_assert!(x.multiply(&x.inverse()).unwrap().is_identity());
        prop_assert_eq!(x.inverse().inverse(), x);
    }

    #[test]
    fn literal_round_trip(x in element(8)) {
        let back = GroupElement::parse(&x.literal(), x.flavor()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn conjugates_are_conjugate((x, g) in pair(8)) {
        let y = conjugate(&g, &x).unwrap();
        prop_assert!(are_conjugate_b(&x, &y).unwrap());
        let c = build_conjugator(&x, &y).unwrap();
        prop_assert_eq!(conjugate(&c, &x).unwrap(), y);
        prop_assert_eq!(is_in_d(&x), is_in_d(&y));
    }

    #[test]
    fn d_membership_is_a_homomorphism((x, g) in pair(8)) {
        let xg = x.multiply(&g).unwrap();
        prop_assert_eq!(is_in_d(&xg), is_in_d(&x) == is_in_d(&g));
    }

    #[test]
    fn order_divides_group_exponent(x in element(6)) {
        let k = x.perm().order() as u32 * 2;
        prop_assert!(x.pow(k).is_identity());
    }
}
