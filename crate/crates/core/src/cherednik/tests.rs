use super::*;
use crate::partition::part;
use crate::rational::binomial;

fn params(m: usize, n: usize) -> CherednikParams {
    CherednikParams::new(m, n).unwrap()
}

fn poly(terms: &[(i64, i64, i64)]) -> LaurentAQ {
    LaurentAQ::from_ints(terms)
}

#[test]
fn verma_examples() {
    let p = params(1, 2);
    let r = verma_character(&p, &part(&[2]), &part(&[1, 1])).unwrap();
    assert_eq!(r, RationalAQ::with_factors(LaurentAQ::one(), &[1]));
    // ν = (1,1), σ = (2): −q^{1/2 + c}(1 − q)/(1 − q²), c = 1/2
    let r = verma_character(&p, &part(&[1, 1]), &part(&[2])).unwrap();
    let expect = RationalAQ::with_factors(&poly(&[(0, 2, -1)]) * &LaurentAQ::one_minus_q(1), &[2]);
    assert_eq!(r, expect);
    assert!(verma_character(&p, &part(&[2, 1]), &part(&[2])).is_err());
}

#[test]
fn verma_identity_counts_monomials() {
    for n in 1..=4usize {
        let p = CherednikParams::with_c(n, 1, 3).unwrap();
        for nu in Partition::all(n) {
            let Ok(e) = p.lowest_weight_exp(&nu) else { continue };
            let series = verma_character(&p, &nu, &Partition::column(n)).unwrap().expand(e + 16);
            for k in 0..=8i64 {
                // degree-k monomials in n − 1 variables, times dim π_ν
                let count = if n == 1 {
                    if k == 0 { 1.into() } else { 0.into() }
                } else {
                    binomial(k + n as i64 - 2, n as i64 - 2)
                };
                let expect = Q::from_integer(count * nu.dim());
                assert_eq!(series.coeff((0, e + 2 * k)), expect, "n={n} ν={nu} k={k}");
            }
        }
    }
}

#[test]
fn verma_hooks_match_class_sums() {
    for (m0, n0) in [(1, 3), (2, 3), (1, 1), (5, 3)] {
        let p = CherednikParams::with_c(3, m0, n0).unwrap();
        for nu in Partition::all(3) {
            let closed = hook_components_verma(&p, &nu).unwrap();
            let via = hook_components_from_classes(&verma_character_all(&p, &nu).unwrap());
            assert_eq!(closed, via, "c={m0}/{n0} ν={nu}");
        }
    }
    let p = params(1, 1);
    assert_eq!(hook_components_verma(&p, &part(&[1])).unwrap(), RationalAQ::one());
}

#[test]
fn off_lattice_exponent_is_reported() {
    // c = 1/5 on S_5, κ((2,2,1)) = −2
    let p = CherednikParams::with_c(5, 1, 5).unwrap();
    assert!(p.lowest_weight_exp(&part(&[2, 2, 1])).is_err());
    assert!(p.lowest_weight_exp(&part(&[2, 1, 1, 1])).is_ok());
}

#[test]
fn hopf_link_constituents() {
    let p = params(2, 2);
    let h2 = ch_aq(&hook_components_l(&p, &part(&[2])).unwrap()).unwrap();
    assert_eq!(h2, RationalAQ::with_factors(poly(&[(0, -1, 1), (2, 1, 1)]), &[2]));
    let h11 = ch_aq(&hook_components_l(&p, &part(&[1, 1])).unwrap()).unwrap();
    assert_eq!(h11, RationalAQ::with_factors(poly(&[(0, 5, 1), (2, 3, 1)]), &[2]));
    let link = torus_link_homfly(2, 2).unwrap();
    let num = poly(&[(0, -1, 1), (0, 5, 1), (2, 1, 1), (2, 3, 1)]);
    assert_eq!(link, RationalAQ::with_factors(num, &[2]));
}

#[test]
fn finite_dimensional_case() {
    let p = params(3, 2);
    let ch = l_character(&p, &part(&[1]), &Partition::empty(), &part(&[1, 1])).unwrap();
    assert!(ch.is_polynomial());
    assert_eq!(ch.eval_at(&q_int(1), &q_int(1)).unwrap(), q_int(3));
    let lo = ch.numerator().min_q().unwrap();
    assert_eq!(ch.numerator().coeff((0, lo)), q_int(1));
    assert_eq!(numerator_q(&p, &part(&[1])).unwrap().eval(&q_int(1), &q_int(1)).unwrap(), q_int(3));
    // dimension m^{n−1} for coprime (m, n)
    for (m, n) in [(2, 3), (4, 3), (3, 4), (5, 2)] {
        let p = params(m, n);
        let ch = l_character(&p, &part(&[1]), &Partition::empty(), &Partition::column(n)).unwrap();
        assert_eq!(ch.eval_at(&q_int(1), &q_int(1)).unwrap(), q_int((m as i64).pow(n as u32 - 1)));
    }
}

#[test]
fn labeling_violations() {
    let p = params(2, 4);
    assert!(matches!(
        l_character(&p, &part(&[1]), &Partition::empty(), &Partition::column(4)),
        Err(Error::Labeling(_))
    ));
    let p = CherednikParams::with_c(5, 1, 3).unwrap();
    // 3·1 + 2 = 5 with |λ'| = 2 < 3
    assert!(l_character(&p, &part(&[1]), &part(&[2]), &Partition::column(5)).is_ok());
    let p = CherednikParams::with_c(6, 1, 3).unwrap();
    assert!(matches!(
        l_character(&p, &part(&[1]), &part(&[3]), &Partition::column(6)),
        Err(Error::Labeling(_))
    ));
}

#[test]
fn lambda_prime_characters_are_graded_dimensions() {
    let p = CherednikParams::with_c(5, 1, 3).unwrap();
    for lp in [part(&[2]), part(&[1, 1])] {
        assert_ne!(l_fractional_offset(&p, &part(&[1]), &lp).unwrap(), Q::zero());
        let ch = l_character(&p, &part(&[1]), &lp, &Partition::column(5)).unwrap();
        let lo = ch.numerator().min_q().unwrap();
        assert!(graded_dims_ok(&ch.expand(lo + 40)), "λ' = {lp}");
    }
}

#[test]
fn swap_symmetry() {
    for (m0, n0) in [(2, 3), (3, 4), (2, 3)] {
        for d in 1..=2 {
            for lambda in Partition::all(d) {
                let a = hook_components_l(&params(m0 * d, n0 * d), &lambda).unwrap();
                let b = hook_components_l(&params(n0 * d, m0 * d), &lambda).unwrap();
                assert_eq!(a, b, "({m0},{n0}) λ={lambda}");
            }
        }
    }
}

#[test]
fn numerator_polynomials() {
    for (m, n) in [(2, 4), (4, 6), (3, 6)] {
        let p = params(m, n);
        for lambda in Partition::all(p.d()) {
            let q = numerator_q(&p, &lambda).unwrap();
            assert!(q.nonneg_coeffs(), "({m},{n}) λ={lambda}: {q}");
        }
    }
    // functional equation
    let p = params(2, 4);
    let d = 2;
    let lam = part(&[2]);
    let lhs = numerator_q(&p, &lam.transpose()).unwrap();
    let rhs = numerator_q(&p, &lam).unwrap().invert_q().shift((0, d * (d + 1) - 2));
    assert_eq!(lhs, rhs);
}

#[test]
fn link_positivity() {
    let link = torus_link_homfly(1, 1).unwrap();
    let knot = ch_aq(&hook_components_l(&params(1, 1), &part(&[1])).unwrap()).unwrap();
    assert_eq!(link, knot);
    for (m, n) in [(2, 2), (2, 4), (3, 3), (4, 6)] {
        let num = torus_link_numerator(m, n).unwrap();
        assert!(num.nonneg_coeffs(), "({m},{n}): {num}");
    }
}

#[test]
fn duality() {
    assert!(duality_check(&params(3, 2), &part(&[1]), &part(&[1, 1])).unwrap());
    assert!(duality_check(&params(2, 4), &part(&[2]), &Partition::column(4)).unwrap());
    assert!(duality_check(&params(3, 6), &part(&[2, 1]), &part(&[2, 1, 1, 1, 1])).unwrap());
}

#[test]
fn grothendieck_consistency() {
    for (m, n) in [(2, 2), (2, 4), (3, 6)] {
        assert!(grothendieck_check(&params(m, n)).unwrap(), "({m},{n})");
    }
}

#[test]
fn hooks_of_l_two_ways() {
    for (m, n) in [(1, 2), (3, 2), (2, 2), (2, 4), (3, 3), (4, 6), (5, 3)] {
        let p = params(m, n);
        for lambda in Partition::all(p.d()) {
            let closed = hook_components_l(&p, &lambda).unwrap();
            let via = hook_components_from_classes(&l_character_all(&p, &lambda, &Partition::empty()).unwrap());
            assert_eq!(closed, via, "({m},{n}) λ={lambda}");
        }
    }
}

#[test]
fn a_degree_bound() {
    for (m0, n0) in [(2, 3), (3, 2), (1, 4), (3, 4)] {
        for d in 1..=2 {
            for lambda in Partition::all(d) {
                let h = hook_components_l(&params(m0 * d, n0 * d), &lambda).unwrap();
                assert_eq!(a_degree(&h), Some((m0.min(n0) * d) as i64 - 1), "({m0},{n0}) λ={lambda}");
            }
        }
    }
}

#[test]
fn identity_series_are_graded_dimensions() {
    for (m, n) in [(2, 4), (3, 6), (4, 6), (2, 6)] {
        let p = params(m, n);
        for lambda in Partition::all(p.d()) {
            let ch = l_character(&p, &lambda, &Partition::empty(), &Partition::column(n)).unwrap();
            let lo = ch.numerator().min_q().unwrap();
            assert!(graded_dims_ok(&ch.expand(lo + 60)), "({m},{n}) λ={lambda}");
        }
    }
}
