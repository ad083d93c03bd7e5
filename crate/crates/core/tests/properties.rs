//! Property-based checks of the algebraic core: ring axioms, the product
//! rule, print/parse round-trips, normal-form idempotence, and quotient
//! containment.

use proptest::prelude::*;

use curvesing::basis::{groebner_basis, normal_form, Budget, DEFAULT_STEP_BUDGET};
use curvesing::ideal::Ideal;
use curvesing::monomial::{Monomial, MonomialOrder};
use curvesing::poly::{parse_poly, rat_int, Poly, Ring};

const NVARS: usize = 3;

fn ring() -> Ring {
    Ring::new(vec!["x", "y", "z"])
}

/// Small random polynomials: up to four terms, exponents at most 3,
/// coefficients in [-5, 5].
fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, NVARS),
            -5i64..6,
        ),
        0..4,
    )
    .prop_map(|terms| {
        let mut p = Poly::zero(NVARS);
        for (exps, c) in terms {
            p.add_term(Monomial::new(exps), &rat_int(c));
        }
        p
    })
}

fn budget() -> Budget {
    Budget::new(DEFAULT_STEP_BUDGET)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributivity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn subtraction_cancels(a in arb_poly()) {
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn product_rule(a in arb_poly(), b in arb_poly(), v in 0usize..NVARS) {
        let lhs = a.mul(&b).derivative(v);
        let rhs = a.derivative(v).mul(&b).add(&a.mul(&b.derivative(v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_roundtrip(a in arb_poly()) {
        let r = ring();
        let printed = a.display(&r);
        let reparsed = parse_poly(&printed, &r).unwrap();
        prop_assert_eq!(a, reparsed);
    }

    #[test]
    fn normal_form_idempotent(
        gens in prop::collection::vec(arb_poly(), 1..3),
        p in arb_poly(),
    ) {
        let order = MonomialOrder::DegRevLex;
        let basis = groebner_basis(&gens, &order, &mut budget()).unwrap();
        let nf = normal_form(&p, &basis, &mut budget()).unwrap();
        let nf2 = normal_form(&nf, &basis, &mut budget()).unwrap();
        prop_assert_eq!(nf, nf2);
    }

    #[test]
    fn normal_form_of_generators_is_zero(
        gens in prop::collection::vec(arb_poly(), 1..3),
    ) {
        let order = MonomialOrder::DegRevLex;
        let basis = groebner_basis(&gens, &order, &mut budget()).unwrap();
        for g in &gens {
            let nf = normal_form(g, &basis, &mut budget()).unwrap();
            prop_assert!(nf.is_zero());
        }
    }

    #[test]
    fn quotient_contains_numerator(
        gens in prop::collection::vec(arb_poly(), 1..3),
        divisors in prop::collection::vec(arb_poly(), 1..2),
    ) {
        let r = ring();
        let i = Ideal::new(r.clone(), gens);
        let j = Ideal::new(r, divisors);
        let q = i.quotient(&j, &mut budget()).unwrap();
        prop_assert!(q.contains_ideal(&i, &mut budget()).unwrap());
    }

    #[test]
    fn groebner_basis_is_input_order_independent(
        mut gens in prop::collection::vec(arb_poly(), 2..4),
    ) {
        let order = MonomialOrder::DegRevLex;
        let a = groebner_basis(&gens, &order, &mut budget()).unwrap();
        gens.reverse();
        let b = groebner_basis(&gens, &order, &mut budget()).unwrap();
        prop_assert_eq!(a.gens, b.gens);
    }
}
