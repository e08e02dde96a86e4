//! Randomized algebraic properties of the exact polynomial and fraction
//! arithmetic.

use molien::{int, Fraction, Poly};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0usize..10, -9i64..10), 0..6)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(e, c)| (e, int(c)))))
}

fn arb_fraction() -> impl Strategy<Value = Fraction> {
    (arb_poly(), 0u32..3, 0u32..4)
        .prop_map(|(num, lin, quad)| Fraction::new_unreduced(num, lin, quad))
}

proptest! {
    #[test]
    fn fraction_addition_is_commutative(a in arb_fraction(), b in arb_fraction()) {
        prop_assert!(a.add(&b).equivalent(&b.add(&a)));
    }

    #[test]
    fn fraction_addition_is_associative(
        a in arb_fraction(),
        b in arb_fraction(),
        c in arb_fraction(),
    ) {
        prop_assert!(a.add(&b).add(&c).equivalent(&a.add(&b.add(&c))));
    }

    #[test]
    fn leading_term_division_preserves_the_identity(p in arb_poly(), cut in 0usize..8) {
        // Stop once the leading term drops below a random degree; every
        // partial division must satisfy p = (1-t^2) q + r exactly.
        let stop = |r: &Poly| r.degree().is_none_or(|d| d < cut.max(2));
        if let Ok((q, r, _)) = p.div_one_minus_t_sq_until(stop) {
            prop_assert_eq!(&(&Poly::one_minus_t_sq() * &q) + &r, p);
        }
    }

    #[test]
    fn series_truncation_is_consistent(f in arb_fraction(), short in 1usize..8) {
        let long = f.series(short + 6);
        let truncated = f.series(short);
        prop_assert!(long.agrees_with(&truncated));
    }

    #[test]
    fn series_reproduces_the_fraction(num in arb_poly(), lin in 0u32..3, quad in 0u32..3) {
        // Multiplying the series back by the denominator recovers the
        // numerator up to the truncation order.
        let f = Fraction::new_unreduced(num.clone(), lin, quad);
        let order = 14usize;
        let den = &Poly::one_minus_t().pow(lin) * &Poly::one_minus_t_sq().pow(quad);
        let product = f.series(order).mul(&molien::Series::from_poly(&den, order));
        for d in 0..=order {
            prop_assert_eq!(product.coeff(d), num.coeff(d));
        }
    }

    #[test]
    fn polynomial_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }
}
