//! Randomized algebraic laws for the series engine. Every assertion is an
//! exact coefficientwise equality; there are no tolerances anywhere.

use eulerian2::series::BivariateSeries;
use eulerian2::{Int, Rat};
use proptest::prelude::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rat::new(Int::from(p), Int::from(q)))
}

/// Arbitrary series on a fixed box with small rational coefficients.
fn series(nx: usize, nt: usize) -> impl Strategy<Value = BivariateSeries> {
    prop::collection::vec(rat_strategy(), (nx + 1) * (nt + 1)).prop_map(move |coeffs| {
        let mut it = coeffs.into_iter();
        BivariateSeries::from_fn(nx, nt, |_, _| it.next().unwrap())
    })
}

/// Series with zero constant term (valid `exp` argument).
fn constant_free(nx: usize, nt: usize) -> impl Strategy<Value = BivariateSeries> {
    series(nx, nt).prop_map(move |mut s| {
        s.set(0, 0, Rat::new(Int::ZERO, Int::from(1)));
        s
    })
}

/// Series with nonzero constant term (valid `reciprocal` argument).
fn unit(nx: usize, nt: usize) -> impl Strategy<Value = BivariateSeries> {
    (series(nx, nt), 1i64..=9, 1i64..=9, prop::bool::ANY).prop_map(
        move |(mut s, p, q, negate)| {
            let c = Rat::new(Int::from(if negate { -p } else { p }), Int::from(q));
            s.set(0, 0, c);
            s
        },
    )
}

/// Series every nonzero term of which carries at least one power of `x`
/// (valid substitution target in both operand slots).
fn x_positive(nx: usize, nt: usize) -> impl Strategy<Value = BivariateSeries> {
    series(nx, nt).prop_map(move |mut s| {
        for m in 0..=nt {
            s.set(0, m, Rat::new(Int::ZERO, Int::from(1)));
        }
        s
    })
}

proptest! {
    #[test]
    fn add_commutes(a in series(6, 6), b in series(6, 6)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn add_associates(a in series(6, 6), b in series(6, 6), c in series(6, 6)) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_commutes(a in series(6, 6), b in series(6, 6)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mul_associates(a in series(6, 6), b in series(6, 6), c in series(6, 6)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributes_over_add(a in series(6, 6), b in series(6, 6), c in series(6, 6)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn neutral_elements(a in series(6, 6)) {
        let one = BivariateSeries::one(6, 6);
        let zero = BivariateSeries::zero(6, 6);
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert_eq!(a.add(&zero), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reciprocal_roundtrip(a in unit(8, 8)) {
        prop_assert_eq!(a.mul(&a.reciprocal()), BivariateSeries::one(8, 8));
    }

    #[test]
    fn exp_is_homomorphic(a in constant_free(6, 6), b in constant_free(6, 6)) {
        prop_assert_eq!(a.add(&b).exp(), a.exp().mul(&b.exp()));
    }

    #[test]
    fn exp_reciprocal_roundtrip(a in constant_free(6, 6)) {
        // 1/exp(a) = exp(-a)
        prop_assert_eq!(a.exp().reciprocal(), a.neg().exp());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leibniz_rule(a in series(6, 6), b in series(6, 6)) {
        let lhs = a.mul(&b).derivative_x();
        let rhs = a.derivative_x()
            .mul(&b.truncate(5, 6))
            .add(&a.truncate(5, 6).mul(&b.derivative_x()));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn substitution_associates(
        a in series(6, 6),
        s in x_positive(6, 6),
        r in x_positive(6, 6),
    ) {
        let lhs = a.substitute_x(&s).substitute_x(&r);
        let rhs = a.substitute_x(&s.substitute_x(&r));
        prop_assert_eq!(lhs, rhs);
    }
}
