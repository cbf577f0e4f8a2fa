use proptest::prelude::*;

use super::*;
use num_integer::Integer;

use crate::cherednik::{a_degree, hook_components_l, CherednikParams};
use crate::partition::part;
use crate::rational::q_int;

fn knot(m0: usize, n0: usize) -> TorusKnot {
    TorusKnot::new(m0, n0).unwrap()
}

/// Polynomial from `(a, q, c)` with integer (undoubled) exponents.
fn int_poly(terms: &[(i64, i64, i64)]) -> LaurentAQ {
    let doubled: Vec<(i64, i64, i64)> = terms.iter().map(|&(a, q, c)| (2 * a, 2 * q, c)).collect();
    LaurentAQ::from_ints(&doubled)
}

fn coprime_pairs(max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            if m.gcd(&n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

#[test]
fn unknot_examples() {
    assert_eq!(unknot_colored(&Partition::empty()), RationalAQ::one());
    let one = RationalAQ::with_factors(LaurentAQ::from_ints(&[(-1, 1, 1), (1, 1, -1)]), &[1]);
    assert_eq!(unknot_colored(&part(&[1])), one);
    // (q/a)(1 − a)(1 − aq)/((1 − q)(1 − q²))
    let num = &int_poly(&[(-1, 1, 1)]) * &(&int_poly(&[(0, 0, 1), (1, 0, -1)]) * &int_poly(&[(0, 0, 1), (1, 1, -1)]));
    assert_eq!(unknot_colored(&part(&[2])), RationalAQ::with_factors(num, &[1, 2]));
    // the column picks up q^{n(λ)} = q: (q/a) q (1 − a)(1 − a/q)
    let num = &int_poly(&[(-1, 2, 1)]) * &(&int_poly(&[(0, 0, 1), (1, 0, -1)]) * &int_poly(&[(0, 0, 1), (1, -1, -1)]));
    assert_eq!(unknot_colored(&part(&[1, 1])), RationalAQ::with_factors(num, &[1, 2]));
}

#[test]
fn t1k_is_the_unknot() {
    for k in 1..=4 {
        for d in 0..=3 {
            for lambda in Partition::all(d) {
                for kn in [knot(1, k), knot(k, 1)] {
                    let p = rosso_jones(&kn, &lambda).unwrap();
                    let u = unknot_colored(&lambda);
                    assert!(p.equal_up_to_monomial(&u).is_some(), "{kn} λ={lambda}");
                }
            }
        }
    }
    assert_eq!(rosso_jones(&knot(1, 1), &part(&[2, 1])).unwrap(), unknot_colored(&part(&[2, 1])));
}

#[test]
fn trefoil_fundamental() {
    let p_hat = partially_reduced(&knot(2, 3), &part(&[1])).unwrap();
    let expect = &int_poly(&[(0, 0, 1), (1, 0, -1)]) * &int_poly(&[(0, 0, 1), (0, 2, 1), (1, 1, -1)]);
    assert!(p_hat.equal_up_to_monomial(&expect).is_some(), "{p_hat}");
    assert_eq!(fiber_value(&p_hat).unwrap(), q_int(6));
}

#[test]
fn trefoil_colored_21() {
    let lambda = part(&[2, 1]);
    let red = reduced(&knot(2, 3), &lambda).unwrap();
    let display = int_poly(&[
        (0, 0, 1), (0, 2, 2), (0, 3, -1), (0, 4, 2), (0, 6, 2), (0, 7, -1), (0, 8, 2), (0, 10, 1),
        (1, 0, -1), (1, 2, -2), (1, 4, -3), (1, 6, -3), (1, 8, -2), (1, 10, -1),
        (2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 6, 1), (2, 7, 1), (2, 8, 1),
        (3, 5, -1),
    ]);
    assert!(red.equal_up_to_monomial(&display).is_some(), "{red}");
    // two negative coefficients survive a ↦ −a in the reduced invariant
    let neg = negate_a_normalized(&red).unwrap();
    assert_eq!(neg.terms().values().filter(|c| c.is_negative()).count(), 2);

    let p_hat = partially_reduced(&knot(2, 3), &lambda).unwrap();
    let factor = &(&int_poly(&[(0, 0, 1), (1, 0, -1)]) * &int_poly(&[(0, 0, 1), (1, 1, -1)]))
        * &(&int_poly(&[(0, 0, 1), (1, -1, -1)]) * &int_poly(&[(0, 0, 1), (0, 1, 1)]));
    assert!(p_hat.equal_up_to_monomial(&(&factor * &red)).is_some());
    assert!(negate_a_normalized(&p_hat).unwrap().nonneg_coeffs());
    assert_eq!(fiber_value(&p_hat).unwrap(), q_int(432));
}

#[test]
fn fiber_power_growth() {
    for (m0, n0) in [(2, 3), (3, 4), (2, 5), (3, 2)] {
        let k = knot(m0, n0);
        let base = fiber_value(&partially_reduced(&k, &part(&[1])).unwrap()).unwrap();
        for d in 1..=3 {
            for lambda in Partition::all(d) {
                if d == 3 && m0 * n0 > 6 {
                    continue;
                }
                let v = fiber_value(&partially_reduced(&k, &lambda).unwrap()).unwrap();
                let expect = num_traits::pow(base.clone(), d) * Q::from_integer(lambda.dim());
                assert_eq!(v, expect, "{k} λ={lambda}");
            }
        }
    }
}

#[test]
fn renormalization_of_the_unknot() {
    assert_eq!(renormalized(&knot(1, 1), &part(&[1])).unwrap(), RationalAQ::one());
}

#[test]
fn bridge_to_cherednik() {
    for (m0, n0) in coprime_pairs(5) {
        let k = knot(m0, n0);
        let max_d = if m0 * n0 <= 6 { 3 } else { 2 };
        for d in 1..=max_d {
            let p = CherednikParams::new(m0 * d, n0 * d).unwrap();
            for lambda in Partition::all(d) {
                let lhs = symmetric_form(&k, &lambda).unwrap();
                let rhs = hook_components_l(&p, &lambda).unwrap();
                assert_eq!(lhs, rhs, "{k} λ={lambda}");
            }
        }
    }
}

#[test]
fn swap_symmetry() {
    for (m0, n0) in coprime_pairs(5) {
        let max_d = if m0 * n0 <= 6 { 3 } else { 2 };
        for d in 1..=max_d {
            for lambda in Partition::all(d) {
                let k = knot(m0, n0);
                assert_eq!(symmetric_form(&k, &lambda).unwrap(), symmetric_form(&k.swapped(), &lambda).unwrap());
            }
        }
    }
}

#[test]
fn renormalized_positivity_and_a_degree() {
    for (m0, n0) in [(2, 3), (3, 4), (2, 5)] {
        let k = knot(m0, n0);
        for d in 1..=2 {
            for lambda in Partition::all(d) {
                assert!(renormalized_positive(&k, &lambda, 30).unwrap(), "{k} λ={lambda}");
                let deg = a_degree(&renormalized(&k, &lambda).unwrap()).unwrap();
                assert_eq!(deg, (m0.min(n0) * d) as i64 - 1, "{k} λ={lambda}");
            }
        }
    }
}

#[test]
fn sl_n_specializations() {
    // unknot at a = q^N: q^{(1−N)|λ|/2} q^{n(λ)} Π (1 − q^{N+c}) / Π (1 − q^h)
    for n in 1..=4i64 {
        for lambda in Partition::all(3) {
            let got = sl_n_specialize(&unknot_colored(&lambda), n);
            let mut num = LaurentAQ::q_pow(lambda.n_statistic() as i64).shift((0, (1 - n) * 3));
            for c in lambda.contents() {
                num = &num * &LaurentAQ::one_minus_q(n + c);
            }
            let hooks: Vec<u32> = lambda.hook_lengths().into_iter().map(|h| h as u32).collect();
            assert_eq!(got, RationalAQ::with_factors(num, &hooks), "N={n} λ={lambda}");
        }
    }
    assert_eq!(sl_n_specialize(&unknot_colored(&part(&[1])), 1), RationalAQ::one());
    let tre = sl_n_specialize(&rosso_jones(&knot(2, 3), &part(&[1])).unwrap(), 7);
    let poly = tre.to_polynomial().unwrap();
    assert!(poly.terms().values().all(|c| c.is_integer()));
}

#[test]
fn invalid_knots() {
    assert!(TorusKnot::new(2, 4).is_err());
    assert!(TorusKnot::new(0, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn prop_swap_symmetry(m0 in 1usize..6, n0 in 1usize..6, d in 1usize..3, pick in 0usize..3) {
        prop_assume!(m0.gcd(&n0) == 1);
        let all = Partition::all(d);
        let lambda = &all[pick % all.len()];
        let k = knot(m0, n0);
        prop_assert_eq!(symmetric_form(&k, lambda).unwrap(), symmetric_form(&k.swapped(), lambda).unwrap());
    }

    #[test]
    fn prop_partially_reduced_is_polynomial(m0 in 1usize..5, n0 in 1usize..5, d in 1usize..3, pick in 0usize..3) {
        prop_assume!(m0.gcd(&n0) == 1);
        let all = Partition::all(d);
        let lambda = &all[pick % all.len()];
        let k = knot(m0, n0);
        let p_hat = partially_reduced(&k, lambda).unwrap();
        prop_assert!(negate_a_normalized(&p_hat).unwrap().nonneg_coeffs());
    }
}
