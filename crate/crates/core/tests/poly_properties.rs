use proptest::prelude::*;

use calogero::exactpoly::{rat, Poly};

fn poly(n: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, n), -6i64..7, 1i64..5),
        0..6,
    )
    .prop_map(move |terms| {
        let mut p = Poly::zero(n);
        for (e, a, b) in terms {
            p.add_term(e, rat(a, b));
        }
        p
    })
}

fn triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    (1usize..4).prop_flat_map(|n| (poly(n), poly(n), poly(n)))
}

fn with_pair() -> impl Strategy<Value = (Poly, usize, usize)> {
    (2usize..4).prop_flat_map(|n| (poly(n), 0..n, 0..n)).prop_filter("distinct", |(_, j, k)| j != k)
}

proptest! {
    #[test]
    fn ring_axioms((p, q, r) in triple()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn json_round_trip((p, _, _) in triple()) {
        let back = Poly::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exchange_and_reflection_are_involutions((p, j, k) in with_pair()) {
        prop_assert_eq!(p.exchange(j, k).unwrap().exchange(j, k).unwrap(), p.clone());
        prop_assert_eq!(p.reflect(j).unwrap().reflect(j).unwrap(), p);
    }

    #[test]
    fn difference_quotients_invert((p, j, k) in with_pair()) {
        let n = p.n();
        let xj = Poly::var(n, j);
        let xk = Poly::var(n, k);
        let minus = &(&xj - &xk) * &p.diffquot_minus(j, k).unwrap();
        prop_assert_eq!(minus, &p - &p.exchange(j, k).unwrap());
        let tt = p.exchange(j, k).unwrap().reflect(j).unwrap().reflect(k).unwrap();
        let plus = &(&xj + &xk) * &p.diffquot_plus(j, k).unwrap();
        prop_assert_eq!(plus, &p - &tt);
        let refl = &xj * &p.diffquot_reflect(j).unwrap();
        prop_assert_eq!(refl, &p - &p.reflect(j).unwrap());
    }

    #[test]
    fn partial_is_a_derivation((p, q, _) in triple()) {
        for j in 0..p.n() {
            let lhs = (&p * &q).partial(j).unwrap();
            let rhs = &(&p.partial(j).unwrap() * &q) + &(&p * &q.partial(j).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn canonical_json() {
    let p = Poly::from_terms(2, vec![(vec![1, 0], rat(1, 1)), (vec![0, 1], rat(3, 10))]).unwrap();
    assert_eq!(
        p.to_json(),
        r#"{"N":2,"terms":[{"exp":[0,1],"num":"3","den":"10"},{"exp":[1,0],"num":"1","den":"1"}]}"#
    );
    assert_eq!(p.to_string(), "x1 + 3/10*x2");
}
