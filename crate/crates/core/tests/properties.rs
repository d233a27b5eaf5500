use num_bigint::BigInt;
use proptest::prelude::*;

use qbinomial::bijection::{halve, phi, phi_inverse, theta};
use qbinomial::partition::{Partition, PartitionPair};
use qbinomial::{IntPoly, ZSeries};

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1)
        .prop_map(|c| IntPoly::from_coeffs(c.into_iter().map(BigInt::from).collect()))
}

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn normalized(p: &IntPoly) -> bool {
    p.coeffs().last().is_none_or(|c| *c != BigInt::from(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(50, 1_000_000), b in poly(50, 1_000_000), c in poly(50, 1_000_000)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &IntPoly::zero(), a.clone());
        prop_assert_eq!(&a * &IntPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        for r in [&a + &b, &a * &b, &a - &b, -&c] {
            prop_assert!(normalized(&r));
        }
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(30, 1000), b in poly(30, 1000), v in -5i64..=5) {
        prop_assert_eq!((&a * &b).eval_i64(v), a.eval_i64(v) * b.eval_i64(v));
        prop_assert_eq!((&a + &b).eval_i64(v), a.eval_i64(v) + b.eval_i64(v));
    }

    #[test]
    fn dilation_commutes_with_eval(a in poly(20, 1000), r in 1usize..=5, v in -4i64..=4) {
        let d = a.dilate(r).unwrap();
        prop_assert!(normalized(&d));
        prop_assert_eq!(d.eval_i64(v), a.eval_i64(v.pow(r as u32)));
    }

    #[test]
    fn render_parse_round_trip(a in poly(20, 1_000_000)) {
        prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn series_inverse_contract(
        order in 0usize..=20,
        tail in prop::collection::vec(poly(10, 50), 20),
    ) {
        let mut coeffs = vec![IntPoly::one()];
        coeffs.extend(tail.into_iter().take(order));
        let a = ZSeries::from_coeffs(coeffs, order);
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), ZSeries::one(order));
        prop_assert_eq!(inv.mul(&a).unwrap(), ZSeries::one(order));
    }

    #[test]
    fn union_laws(a in partition(9, 6), b in partition(9, 6), c in partition(9, 6)) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        prop_assert_eq!(a.union(&Partition::empty()), a.clone());
        let u = a.union(&b);
        prop_assert_eq!(u.weight(), a.weight() + b.weight());
        prop_assert_eq!(u.len(), a.len() + b.len());
    }

    #[test]
    fn multiplicities_rebuild(p in partition(9, 12)) {
        let mult = p.multiplicities();
        prop_assert!(mult.iter().all(|&(_, c)| c >= 1));
        prop_assert!(mult.windows(2).all(|w| w[0].0 > w[1].0));
        prop_assert_eq!(Partition::from_multiplicities(&mult), p);
    }

    #[test]
    fn phi_laws(p in partition(9, 14)) {
        let pair = phi(&p);
        prop_assert!(pair.second.is_distinct());
        prop_assert_eq!(p.weight(), pair.weight2());
        prop_assert_eq!(p.len(), 2 * pair.first.len() + pair.second.len());
        prop_assert!(pair.first.largest() <= p.largest() && pair.second.largest() <= p.largest());
        prop_assert_eq!(phi_inverse(&pair).unwrap(), p);
    }

    #[test]
    fn halve_undoes_doubling(tau in partition(7, 5)) {
        prop_assert_eq!(halve(&tau.union(&tau)).unwrap(), tau);
    }

    #[test]
    fn theta_involution_on_random_pairs(l in partition(6, 6), m in partition(6, 8)) {
        let pair = PartitionPair::new(l, m);
        match theta(&pair) {
            Err(_) => prop_assert!(pair.is_in_v()),
            Ok((img, _)) => {
                prop_assert!(!img.is_in_v());
                prop_assert_eq!(img.weight2(), pair.weight2());
                prop_assert_eq!(img.sign(), -pair.sign());
                prop_assert_eq!(
                    2 * img.first.len() + img.second.len(),
                    2 * pair.first.len() + pair.second.len()
                );
                prop_assert_eq!(theta(&img).unwrap().0, pair);
            }
        }
    }
}
