use proptest::prelude::*;

use calogero::exactpoly::{int, Rational};
use calogero::weyl::{
    eval_poly_u64, inversion_set, order_compare, poincare_polynomial, poincare_product_formula, sort_to_partition,
    weyl_orbit, Composition, OrderRelation, Partition, Perm, ReducedWord,
};

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(0u32..5, 1..6).prop_map(Composition::new)
}

proptest! {
    #[test]
    fn sorting_word_reaches_the_composition(mu in composition()) {
        let (plus, w) = sort_to_partition(&mu);
        prop_assert!(plus.as_composition().is_partition());
        prop_assert_eq!(w.apply_composition(plus.as_composition()), mu.clone());
        prop_assert_eq!(inversion_set(&w).unwrap().len(), w.len());
        prop_assert_eq!(w.to_perm().inversions(), w.len());
    }

    #[test]
    fn order_is_antisymmetric(a in composition(), b in composition()) {
        prop_assume!(a.n() == b.n());
        let ab = order_compare(&a, &b).unwrap();
        let ba = order_compare(&b, &a).unwrap();
        let flipped = match ab {
            OrderRelation::Less => OrderRelation::Greater,
            OrderRelation::Greater => OrderRelation::Less,
            r => r,
        };
        prop_assert_eq!(ba, flipped);
    }

    #[test]
    fn orbit_words_are_minimal(v in prop::collection::vec(0u32..4, 1..5)) {
        let mut v = v;
        v.sort_unstable_by(|x, y| y.cmp(x));
        let mu = Partition::new(v).unwrap();
        for el in weyl_orbit(&mu) {
            let (back, w) = sort_to_partition(&el.composition);
            prop_assert_eq!(&back, &mu);
            prop_assert_eq!(w.len(), el.word.len());
        }
    }
}

#[test]
fn inversion_sets_agree_across_reduced_words() {
    // s1 s2 s1 and s2 s1 s2 are the same element of S_3
    let a = ReducedWord::new(3, vec![0, 1, 0]).unwrap();
    let b = ReducedWord::new(3, vec![1, 0, 1]).unwrap();
    assert_eq!(a.to_perm(), b.to_perm());
    assert_eq!(inversion_set(&a).unwrap(), inversion_set(&b).unwrap());
    assert!(ReducedWord::new(3, vec![0, 0]).is_err());
}

#[test]
fn poincare_polynomials() {
    for n in 1..=6usize {
        let w = poincare_polynomial(n).unwrap();
        assert_eq!(w, poincare_product_formula(n));
        let fact: i64 = (1..=n as i64).product();
        assert_eq!(eval_poly_u64(&w, &Rational::from_integer(1.into())), int(fact));
        assert_eq!(Perm::all(n).len() as i64, fact);
    }
    assert_eq!(poincare_polynomial(3).unwrap(), vec![1, 2, 2, 1]);
}

#[test]
fn orbit_sizes() {
    let mu = Partition::new(vec![2, 1, 1, 0]).unwrap();
    assert_eq!(weyl_orbit(&mu).len(), 12);
    let mu = Partition::new(vec![1, 1, 1]).unwrap();
    assert_eq!(weyl_orbit(&mu).len(), 1);
}
