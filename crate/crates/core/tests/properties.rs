use fockspace::canonical::matrix_delta_in_order;
use fockspace::charge::{enumerate_multipartitions, precedes, strictly_dominated, tau, tau_inv};
use fockspace::format::{from_json, to_json};
use fockspace::partitions::dominates;
use fockspace::{matrix_a, LaurentPoly, Multicharge, Multipartition, Params, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 0..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_bar_and_specialisation(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        let leibniz = a.derivative_at_one() * b.eval_at_one() + a.eval_at_one() * b.derivative_at_one();
        prop_assert_eq!((&a * &b).derivative_at_one(), leibniz);
        prop_assert_eq!(a.bar().derivative_at_one(), -a.derivative_at_one());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn antisymmetric_split(a in laurent()) {
        let anti = &a - &a.bar();
        let positive = anti.antisym_positive_part().unwrap();
        prop_assert!(positive.min_degree().is_none_or(|d| d > 0));
        prop_assert_eq!(&positive - &positive.bar(), anti);
        prop_assert!((&a + &a.bar()).antisym_positive_part().is_err() || (&a + &a.bar()).is_zero());
    }

    #[test]
    fn tau_round_trips(lam in partition(), s in -10i64..=10, n in 1i64..=4, l in 1usize..=4) {
        let (multi, charges) = tau(&lam, s, n, l);
        prop_assert_eq!(charges.total(), s);
        prop_assert_eq!(tau_inv(&multi, &charges, n), (lam, s));
    }

    #[test]
    fn tau_inv_round_trips(
        comps in prop::collection::vec(partition(), 1..4),
        raw in prop::collection::vec(-5i64..=5, 3),
        n in 1i64..=4,
    ) {
        let l = comps.len();
        let multi = Multipartition::new(comps);
        let charges = Multicharge::new(raw[..l].to_vec());
        let (big, s) = tau_inv(&multi, &charges, n);
        prop_assert_eq!(tau(&big, s, n, l), (multi, charges));
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for l in 1..=3 {
        for m in 0..=4 {
            let all = enumerate_multipartitions(l, m);
            for a in &all {
                assert!(dominates(a, a));
                assert!(!strictly_dominated(a, a));
                for b in &all {
                    if a != b && dominates(a, b) {
                        assert!(!dominates(b, a), "{a} {b}");
                    }
                    for c in &all {
                        if dominates(a, b) && dominates(b, c) {
                            assert!(dominates(a, c), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn prec_is_a_strict_order() {
    for (n, charge) in [(2, vec![0, 1]), (3, vec![4, -3]), (2, vec![1, -2, 0])] {
        let mc = Multicharge::new(charge);
        let all = enumerate_multipartitions(mc.level(), 4);
        for a in &all {
            assert!(!precedes(a, a, &mc, n));
            for b in &all {
                if precedes(a, b, &mc, n) {
                    assert!(!precedes(b, a, &mc, n));
                    for c in &all {
                        if precedes(b, c, &mc, n) {
                            assert!(precedes(a, c, &mc, n), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }
}

/// Sizes of big partitions first, then ascending lexicographic order of
/// their conjugates: another linear extension of the reversed order.
fn conjugate_order(params: &Params) -> Vec<Multipartition> {
    let mut keyed: Vec<(usize, Vec<usize>, Multipartition)> = params
        .basis()
        .into_iter()
        .map(|mp| {
            let (big, _) = tau_inv(&mp, &params.charge, params.n);
            (big.size(), big.conjugate().parts().to_vec(), mp)
        })
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, mp)| mp).collect()
}

#[test]
fn delta_does_not_depend_on_the_sweep_order() {
    for (n, charge, m) in [(3, vec![1, 0], 3), (3, vec![4, -3], 3), (2, vec![0, 1, -1], 3), (2, vec![2], 5)] {
        let params = Params::new(n, charge.len(), Multicharge::new(charge), m).unwrap();
        let a = matrix_a(&params).unwrap();
        let usual = fockspace::matrix_delta(&a).unwrap();
        let other = matrix_delta_in_order(&a, conjugate_order(&params)).unwrap();
        assert!(usual.differences(&other).is_empty(), "{params}");
    }
}

#[test]
fn json_round_trip_of_computed_matrices() {
    for (n, charge, m) in [(3, vec![1, 0], 3), (2, vec![0, 0, 1], 2)] {
        let params = Params::new(n, charge.len(), Multicharge::new(charge), m).unwrap();
        let a = matrix_a(&params).unwrap();
        let doc = from_json(&to_json(&params, &a)).unwrap();
        assert_eq!(doc.params().unwrap(), params);
        let back = doc.matrix::<LaurentPoly>().unwrap();
        assert!(back.differences(&a).is_empty());
        let j = fockspace::matrix_j(fockspace::Gate::Prec, &params);
        let back = from_json(&to_json(&params, &j)).unwrap().matrix::<i64>().unwrap();
        assert_eq!(back, j);
        let ones = a.map(LaurentPoly::eval_at_one);
        assert!(ones.iter().all(|(r, c, v)| (r == c) == (*v == BigInt::from(1))));
    }
}
