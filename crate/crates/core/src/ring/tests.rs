use super::*;
use crate::constructions::{build_instance, orders, InstanceSpec, Kind};
use crate::ring::{coeff_int, reduce, s_polynomial};
use num::One;
use proptest::prelude::*;
use std::cmp::Ordering;

fn spec(n: u8) -> InstanceSpec {
    InstanceSpec::new(n, Kind::Generic, (1, 2)).unwrap()
}

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

fn m(pairs: &[(Var, u32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

#[test]
fn var_display_and_sym_canonicalization() {
    assert_eq!(Var::x(1, 2).to_string(), "x[1,2]");
    assert_eq!(Var::y(3).to_string(), "y[3]");
    assert_eq!(Var::x_sym(3, 1), Var::X(1, 3));
    assert_eq!(Var::x_sym(1, 3), Var::X(1, 3));
}

#[test]
fn order_a_y_above_x() {
    // y variables dominate every x variable under this preset
    let ord = orders::order_a(&spec(3));
    let y2 = Monomial::var(Var::y(2));
    let x11 = Monomial::var(Var::x(1, 1));
    assert_eq!(ord.compare(&y2, &x11), Ordering::Greater);
}

#[test]
fn order_compare_reflexive() {
    let ord = orders::order_a(&spec(3));
    let mm = m(&[(Var::x(1, 1), 2), (Var::y(1), 1)]);
    assert_eq!(ord.compare(&mm, &mm), Ordering::Equal);
}

#[test]
fn order_a_row_major_on_x() {
    let ord = orders::order_a(&spec(3));
    let a = Monomial::var(Var::x(1, 1));
    let b = Monomial::var(Var::x(1, 2));
    assert_eq!(ord.compare(&a, &b), Ordering::Greater);
}

#[test]
fn order_rejects_unknown_variable() {
    let ord = MonomialOrder::new(vec![Var::x(1, 1)]);
    let err = ord
        .try_compare(&Monomial::var(Var::y(1)), &Monomial::one())
        .unwrap_err();
    assert!(matches!(err, RingError::UnknownVariable(_)));
}

#[test]
fn leading_term_of_g_under_order_a() {
    let s = spec(3);
    let inst = build_instance(&s);
    let ord = orders::order_a(&s);
    for r in 1..=3u8 {
        let (c, lm) = inst.g_at(r).leading_term(&ord).unwrap();
        assert!(c.is_one());
        assert_eq!(lm, m(&[(Var::x(r, 3), 1), (Var::y(3), 1)]));
    }
}

#[test]
fn leading_term_of_constant_and_zero() {
    let ord = orders::order_a(&spec(2));
    let (c, lm) = Polynomial::constant_i64(7).leading_term(&ord).unwrap();
    assert_eq!(c, coeff_int(7));
    assert!(lm.is_one());
    assert_eq!(
        Polynomial::zero().leading_term(&ord).unwrap_err(),
        RingError::ZeroPolynomial
    );
}

#[test]
fn leading_term_of_minor_under_order_a() {
    // [12|st] = x[1,s]x[2,t] - x[1,t]x[2,s]; the first term leads for s < t
    let s = spec(3);
    let inst = build_instance(&s);
    let ord = orders::order_a(&s);
    let pairs = [(1u8, 2u8), (1, 3), (2, 3)];
    for (minor, (a, b)) in inst.minors.iter().zip(pairs) {
        let lm = minor.leading_monomial(&ord).unwrap();
        assert_eq!(lm, m(&[(Var::x(1, a), 1), (Var::x(2, b), 1)]));
    }
}

#[test]
fn reduce_zero_and_exact_multiple() {
    let s = spec(3);
    let inst = build_instance(&s);
    let ord = orders::order_a(&s);
    let g1 = inst.g_at(1).clone();
    let (nf, _) = reduce(&Polynomial::zero(), std::slice::from_ref(&g1), &ord).unwrap();
    assert!(nf.is_zero());
    let f = &Polynomial::var(Var::x(1, 1)) * &g1;
    let (nf, q) = reduce(&f, std::slice::from_ref(&g1), &ord).unwrap();
    assert!(nf.is_zero());
    assert_eq!(q[0], Polynomial::var(Var::x(1, 1)));
}

#[test]
fn s_polynomial_of_g1_g2_under_order_c() {
    // S(g_1, g_2) = sum_k [12|1k] * y_k up to sign at n=3, and it reduces to
    // zero against the minors-plus-g basis
    let s = spec(3);
    let inst = build_instance(&s);
    let ord = orders::order_c(&s);
    let sp = s_polynomial(inst.g_at(1), inst.g_at(2), &ord).unwrap();
    // minors of Xt_12 against column pairs (1,2), (1,3): [12|12], [12|13]
    let expected = &(&inst.minors[0] * &Polynomial::var(Var::y(2)))
        + &(&inst.minors[1] * &Polynomial::var(Var::y(3)));
    // compare up to monic normalization of the S-polynomial convention
    let (lc, _) = sp.leading_term(&ord).unwrap();
    let (le, _) = expected.leading_term(&ord).unwrap();
    assert_eq!(
        sp.scale(&(Coeff::one() / lc)),
        expected.scale(&(Coeff::one() / le))
    );
    let mut basis = inst.minors.clone();
    basis.push(inst.g_at(1).clone());
    basis.push(inst.g_at(2).clone());
    let (nf, _) = reduce(&sp, &basis, &ord).unwrap();
    assert!(nf.is_zero());
}

#[test]
fn s_polynomial_self_is_zero() {
    let s = spec(2);
    let inst = build_instance(&s);
    let ord = orders::order_a(&s);
    let sp = s_polynomial(inst.g_at(1), inst.g_at(1), &ord).unwrap();
    assert!(sp.is_zero());
}

#[test]
fn coprime_s_polynomial_reduces_to_zero() {
    let ord = orders::order_a(&spec(2));
    let f = Polynomial::var(Var::x(1, 1));
    let g = Polynomial::var(Var::y(1));
    let sp = s_polynomial(&f, &g, &ord).unwrap();
    let (nf, _) = reduce(&sp, &[f, g], &ord).unwrap();
    assert!(nf.is_zero());
}

#[test]
fn parse_print_round_trip() {
    for text in [
        "0",
        "1",
        "-3/4",
        "x[1,1]",
        "x[1,1]y[2] - y[1]",
        "2*x[1,2]x[1,2] + 1/2*y[3] - 5",
        "-x[2,3]x[2,3]x[2,3] + 7/3",
    ] {
        let poly = p(text);
        assert_eq!(p(&poly.to_string()), poly, "round trip of {}", text);
    }
}

#[test]
fn parse_accepts_caret_shorthand() {
    assert_eq!(p("x[1,1]^3"), p("x[1,1]x[1,1]x[1,1]"));
    assert_eq!(p("2*x[1,1]^2y[1]"), p("2*x[1,1]x[1,1]y[1]"));
}

#[test]
fn parse_rejects_malformed_input() {
    for text in ["x[1", "x[1,1] +", "1/0", "x[1,1] * ", "z[1]", "3*"] {
        assert!(parse_polynomial(text).is_err(), "should reject {:?}", text);
    }
}

#[test]
fn display_signs_and_units() {
    assert_eq!(p("-x[1,1] + 2").to_string(), "-x[1,1] + 2");
    // Display uses the structural term order, which puts y monomials first
    assert_eq!(
        p("x[1,1]y[1] - 1/2*y[2]").to_string(),
        "-1/2*y[2] + x[1,1]y[1]"
    );
}

#[test]
fn to_text_descends_under_given_order() {
    let s = spec(3);
    let inst = build_instance(&s);
    let ord = orders::order_a(&s);
    let text = inst.g_at(1).to_text(&ord);
    // y[3] term leads because y variables dominate
    assert_eq!(text, "x[1,3]y[3] + x[1,2]y[2] + x[1,1]y[1]");
}

// --- property tests ---------------------------------------------------

fn arb_var() -> impl Strategy<Value = Var> {
    prop_oneof![
        (1u8..=2, 1u8..=2).prop_map(|(i, j)| Var::x(i, j)),
        (1u8..=2).prop_map(Var::y),
    ]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((arb_var(), 1u32..=2), 0..3).prop_map(Monomial::from_pairs)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_monomial(), -4i64..=4), 0..4)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(m, c)| (m, coeff_int(c)))))
}

fn full_order() -> MonomialOrder {
    orders::order_a(&spec(2))
}

proptest! {
    #[test]
    fn order_is_multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
        let ord = full_order();
        prop_assert_eq!(ord.compare(&a, &b), ord.compare(&a.mul(&c), &b.mul(&c)));
    }

    #[test]
    fn division_identity_holds(f in arb_poly(), g1 in arb_poly(), g2 in arb_poly()) {
        let ord = full_order();
        let basis: Vec<Polynomial> = [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
        let (nf, q) = reduce(&f, &basis, &ord).unwrap();
        let mut rebuilt = nf.clone();
        for (qi, gi) in q.iter().zip(&basis) {
            rebuilt = &rebuilt + &(qi * gi);
        }
        prop_assert_eq!(rebuilt, f);
        // no remainder term is divisible by any leading term of the basis
        for g in &basis {
            let lm = g.leading_monomial(&ord).unwrap();
            for (mono, _) in nf.terms() {
                prop_assert!(!lm.divides(mono));
            }
        }
    }

    #[test]
    fn ring_axioms_spot_checks(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero());
    }

    #[test]
    fn parse_print_round_trip_random(f in arb_poly()) {
        prop_assert_eq!(parse_polynomial(&f.to_string()).unwrap(), f);
    }
}
