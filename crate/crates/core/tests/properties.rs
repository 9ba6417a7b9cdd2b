//! Property tests for the structural laws the evaluators must satisfy on
//! arbitrary well-formed inputs, not just the curated fixtures.

use fecheck_core::atoms::AdditiveMap;
use fecheck_core::exactfield::{rat_int, FieldElem, Poly, Rat};
use fecheck_core::multiadd::{delta, SymForm, UnaryFn};
use proptest::prelude::*;

fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 0..max_len).prop_map(|cs| Poly::from_ints(&cs))
}

fn arb_elem() -> impl Strategy<Value = FieldElem> {
    (arb_poly(4), arb_poly(3))
        .prop_filter_map("nonzero denominator", |(num, den)| {
            if den.is_zero() {
                None
            } else {
                Some(FieldElem::new(num, den).expect("nonzero denominator"))
            }
        })
}

fn arb_light_elem() -> impl Strategy<Value = FieldElem> {
    prop::collection::vec(-5i64..=5, 0..3)
        .prop_map(|cs| FieldElem::from_poly(Poly::from_ints(&cs)))
}

fn arb_atom() -> impl Strategy<Value = AdditiveMap> {
    let leaf = prop_oneof![
        Just(AdditiveMap::Identity),
        arb_light_elem().prop_map(AdditiveMap::derivation),
        (1i64..=3, -3i64..=3).prop_map(|(lead, shift)| {
            let target = FieldElem::from_poly(Poly::new(vec![
                rat_int(shift),
                rat_int(lead),
            ]));
            AdditiveMap::substitution(target).expect("nonconstant by construction")
        }),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3)
                .prop_map(AdditiveMap::Compose),
            prop::collection::vec((arb_light_elem(), inner), 0..3)
                .prop_map(AdditiveMap::LinComb),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_map_is_additive(m in arb_atom(), x in arb_elem(), y in arb_elem()) {
        let lhs = m.eval(&(&x + &y)).unwrap();
        let rhs = &m.eval(&x).unwrap() + &m.eval(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn every_map_is_rationally_homogeneous(m in arb_atom(), x in arb_elem(), num in -9i64..=9, den in 1i64..=9) {
        let q = FieldElem::from_rat(Rat::new(num.into(), den.into()));
        let lhs = m.eval(&(&q * &x)).unwrap();
        let rhs = &q * &m.eval(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pair_forms_are_symmetric_and_biadditive(
        m1 in arb_atom(),
        m2 in arb_atom(),
        x in arb_light_elem(),
        y in arb_light_elem(),
        z in arb_light_elem(),
    ) {
        let form = SymForm::atom_product(vec![m1, m2]).unwrap();
        let xy = form.eval(&[x.clone(), y.clone()]).unwrap();
        let yx = form.eval(&[y.clone(), x.clone()]).unwrap();
        prop_assert_eq!(&xy, &yx);
        let split = form.eval(&[&x + &z, y.clone()]).unwrap();
        let direct = &xy + &form.eval(&[z, y]).unwrap();
        prop_assert_eq!(split, direct);
    }

    #[test]
    fn first_difference_of_additive_maps_is_flat(m in arb_atom(), y in arb_light_elem(), x in arb_light_elem()) {
        let f = UnaryFn::atom(m.clone());
        let diff = delta(&f, std::slice::from_ref(&y));
        prop_assert_eq!(diff.eval(&x).unwrap(), m.eval(&y).unwrap());
    }
}
