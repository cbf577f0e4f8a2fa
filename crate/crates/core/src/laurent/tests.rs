use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::rational::{q_frac, q_int};

fn aq(terms: &[(i64, i64, i64)]) -> LaurentAQ {
    LaurentAQ::from_ints(terms)
}

#[test]
fn trefoil_fiber_value() {
    // (1 − a)(1 + q² − aq) at a = −1, q = 1
    let f = &aq(&[(0, 0, 1), (2, 0, -1)]) * &aq(&[(0, 0, 1), (0, 4, 1), (2, 2, -1)]);
    let r = RationalAQ::from_poly(f);
    assert_eq!(r.eval_at(&q_int(-1), &q_int(1)).unwrap(), q_int(6));
    assert_eq!(RationalAQ::one().eval_at(&q_frac(3, 7), &q_int(5)).unwrap(), q_int(1));
}

#[test]
fn eval_cancels_before_q_one() {
    let r = RationalAQ::with_factors(LaurentAQ::one_minus_q(2), &[1]);
    assert!(r.is_polynomial());
    assert_eq!(r.eval_at(&q_int(0), &q_int(1)).unwrap(), q_int(2));
    let pole = RationalAQ::with_factors(LaurentAQ::one(), &[1]);
    assert!(matches!(pole.eval_at(&q_int(0), &q_int(1)), Err(crate::Error::Pole(_))));
    // unreduced form still resolves through the [i]_q route
    let num = &LaurentAQ::one_minus_q(6) * &LaurentAQ::one_minus_q(4);
    let unreduced = RationalAQ::new_unreduced(num, BTreeMap::from([(2, 1), (3, 1)]));
    assert_eq!(unreduced.eval_at(&q_int(1), &q_int(1)).unwrap(), q_int(4));
}

#[test]
fn monomial_matching() {
    let f = aq(&[(0, 0, 1), (2, 2, 3), (1, -1, -2)]);
    assert_eq!(f.equal_up_to_monomial(&f), Some((0, 0)));
    assert_eq!(f.shift((0, 2)).equal_up_to_monomial(&f), Some((0, 2)));
    assert_eq!(f.equal_up_to_monomial(&(&f + &LaurentAQ::one())), None);
}

#[test]
fn positivity_reports_first_violation() {
    assert!(aq(&[(0, 0, 1), (2, 2, 1)]).nonneg_coeffs());
    let g = LaurentAQ::one_minus_q(1);
    assert_eq!(g.first_negative().map(|(e, _)| e), Some((0, 2)));
}

#[test]
fn division_by_binomials() {
    let f = &LaurentAQ::one_minus_q(3) * &aq(&[(0, 0, 2), (3, 1, 1)]);
    assert_eq!(f.div_one_minus((0, 6)), Some(aq(&[(0, 0, 2), (3, 1, 1)])));
    assert!(aq(&[(0, 0, 1)]).div_one_minus((0, 2)).is_none());
    // 1 − a q^{-1}
    let step = (2, -2);
    let g = &aq(&[(0, 0, 1), (2, -2, -1)]) * &aq(&[(1, 1, 5), (0, 4, -1)]);
    assert_eq!(g.div_one_minus(step), Some(aq(&[(1, 1, 5), (0, 4, -1)])));
}

#[test]
fn invert_q_on_denominators() {
    // 1/(1 − q) at q ↦ q^{-1} is −q/(1 − q)
    let r = RationalAQ::with_factors(LaurentAQ::one(), &[1]).invert_q();
    let expected = RationalAQ::with_factors(aq(&[(0, 2, -1)]), &[1]);
    assert_eq!(r, expected);
}

#[test]
fn json_roundtrip() {
    let r = RationalAQ::with_factors(aq(&[(1, -1, 3), (0, 4, -2)]).scale(&q_frac(1, 2)), &[1, 2, 2]);
    let j = r.to_json();
    assert_eq!(j["qdenom"], serde_json::json!([1, 2, 2]));
    let back = RationalAQ::from_json(&j).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.to_json(), j);
}

fn arb_poly() -> impl Strategy<Value = LaurentAQ> {
    prop::collection::vec((-3i64..4, -4i64..5, -3i64..4), 0..6).prop_map(|v| {
        LaurentAQ::from_terms(v.into_iter().map(|(a, q, c)| ((a, q), q_int(c))))
    })
}

proptest! {
    #[test]
    fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn specialization_is_multiplicative(f in arb_poly(), g in arb_poly(), n in 0i64..7) {
        prop_assert_eq!((&f * &g).specialize_a(n), &f.specialize_a(n) * &g.specialize_a(n));
    }

    #[test]
    fn series_times_denominator(f in arb_poly(), den in prop::collection::vec(1u32..5, 0..4)) {
        let r = RationalAQ::new_unreduced(f.clone(), den.iter().fold(BTreeMap::new(), |mut m, &i| { *m.entry(i).or_insert(0) += 1; m }));
        let trunc = 30;
        let mut back = r.expand(trunc);
        for &i in &den {
            back = back.mul_truncated(&LaurentAQ::one_minus_q(i as i64), trunc);
        }
        prop_assert_eq!(back.truncate_q(trunc), f.truncate_q(trunc));
    }

    #[test]
    fn normal_form_preserves_value(f in arb_poly(), den in prop::collection::vec(1u32..5, 0..3)) {
        let extra = LaurentAQ::one_minus_q(2);
        let num = &f * &extra;
        let mut all = den.clone();
        all.push(2);
        let r = RationalAQ::with_factors(num, &all);
        let plain = RationalAQ::new_unreduced(f, den.iter().fold(BTreeMap::new(), |mut m, &i| { *m.entry(i).or_insert(0) += 1; m }));
        prop_assert!(r.equals(&plain));
    }
}
