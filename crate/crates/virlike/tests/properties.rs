//! Property tests for the structural laws the kernel relies on.

use proptest::prelude::*;

use virlike::hopf::{antipode0, coproduct0, counit0};
use virlike::series::{binomial_series, SeriesTensor, StructureMap};
use virlike::{
    binom_general, pairing, straighten, AlgElement, Generator, GroupVec, Rational,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn group_vec() -> impl Strategy<Value = GroupVec> {
    (rational(), rational()).prop_map(|(a, b)| GroupVec::new(a, b))
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Generator::D1),
        Just(Generator::D2),
        (-2i64..=2, -2i64..=2)
            .prop_filter("nonzero vector", |(a, b)| (*a, *b) != (0, 0))
            .prop_map(|(a, b)| Generator::L(GroupVec::from_ints(a, b))),
    ]
}

/// Sparse elements of generator-degree at most 3.
fn element() -> impl Strategy<Value = AlgElement> {
    proptest::collection::vec((proptest::collection::vec(generator(), 0..=3), rational()), 1..=3)
        .prop_map(|terms| {
            let mut e = AlgElement::zero();
            for (word, c) in terms {
                e = &e + &straighten(&word).scale(&c);
            }
            e
        })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn pairing_is_antisymmetric_and_bilinear(a in group_vec(), b in group_vec(), c in group_vec(), s in rational()) {
        prop_assert_eq!(pairing(&a, &b), -pairing(&b, &a));
        let scaled = a.scale(&s);
        prop_assert_eq!(pairing(&scaled, &b), &s * &pairing(&a, &b));
        let summed = a.add(&c);
        prop_assert_eq!(pairing(&summed, &b), &pairing(&a, &b) + &pairing(&c, &b));
    }

    #[test]
    fn binomial_pascal(b in rational(), m in 1usize..7) {
        let b1 = &b - &Rational::one();
        prop_assert_eq!(
            binom_general(&b, m),
            &binom_general(&b1, m) + &binom_general(&b1, m - 1)
        );
    }

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }

    #[test]
    fn generators_satisfy_jacobi(g1 in generator(), g2 in generator(), g3 in generator()) {
        let x = AlgElement::generator(&g1);
        let y = AlgElement::generator(&g2);
        let z = AlgElement::generator(&g3);
        let jac = &(&x.bracket(&y.bracket(&z)) + &y.bracket(&z.bracket(&x)))
            + &z.bracket(&x.bracket(&y));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn straighten_is_idempotent(x in element()) {
        for (mono, _) in x.terms() {
            prop_assert_eq!(
                straighten(&mono.word()),
                AlgElement::from_monomial(mono.clone())
            );
        }
    }

    #[test]
    fn coproduct_is_algebra_map(x in element(), y in element()) {
        let n = 0;
        let lhs = coproduct0(&x.multiply(&y), n);
        let rhs = coproduct0(&x, n).multiply(&coproduct0(&y, n)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_is_anti_homomorphism(x in element(), y in element()) {
        prop_assert_eq!(
            antipode0(&x.multiply(&y)),
            antipode0(&y).multiply(&antipode0(&x))
        );
    }

    #[test]
    fn counit_is_multiplicative(x in element(), y in element()) {
        prop_assert_eq!(counit0(&x.multiply(&y)), &counit0(&x) * &counit0(&y));
    }

    #[test]
    fn series_multiplication_is_associative_and_unital(x in element(), y in element(), z in element()) {
        let n = 2;
        let a = SeriesTensor::embed(&x, 2, 1, n).unwrap();
        let b = SeriesTensor::embed(&y, 2, 2, n).unwrap().shift_t(1);
        let c = SeriesTensor::embed(&z, 2, 1, n).unwrap().shift_t(1);
        let unit = SeriesTensor::unit(2, n);
        prop_assert_eq!(unit.multiply(&a).unwrap(), a.clone());
        prop_assert_eq!(a.multiply(&unit).unwrap(), a.clone());
        prop_assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn invert_round_trips(x in element(), y in element()) {
        let n = 3;
        let unit = SeriesTensor::unit(2, n);
        let a = unit
            .add(&SeriesTensor::embed(&x, 2, 1, n).unwrap().shift_t(1))
            .add(&SeriesTensor::embed(&y, 2, 2, n).unwrap().shift_t(2));
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.multiply(&inv).unwrap(), unit.clone());
        prop_assert_eq!(inv.multiply(&a).unwrap(), unit);
    }

    #[test]
    fn binomial_series_is_exponent_additive(b1 in rational(), b2 in rational()) {
        let n = 4;
        let x = AlgElement::l(GroupVec::from_ints(1, 0));
        let lhs = binomial_series(&x, &(&b1 + &b2), n);
        let rhs = binomial_series(&x, &b1, n)
            .multiply(&binomial_series(&x, &b2, n))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
        let geo = binomial_series(&x, &Rational::from_int(-1), n);
        let direct = SeriesTensor::unit(1, n)
            .sub(&SeriesTensor::from_alg(&x, n).shift_t(1))
            .invert()
            .unwrap();
        prop_assert_eq!(geo, direct);
    }

    #[test]
    fn coproduct_slot_commutes_with_products(x in element(), y in element()) {
        let n = 1;
        let a = SeriesTensor::embed(&x, 2, 1, n).unwrap();
        let b = SeriesTensor::embed(&y, 2, 1, n).unwrap().shift_t(1);
        let lhs = a
            .multiply(&b)
            .unwrap()
            .apply_in_slot(1, StructureMap::CoproductZero)
            .unwrap();
        let rhs = a
            .apply_in_slot(1, StructureMap::CoproductZero)
            .unwrap()
            .multiply(&b.apply_in_slot(1, StructureMap::CoproductZero).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn render_parse_fixed_point(x in element()) {
        let rendered = x.render();
        let reparsed = virlike::eval_expr(&virlike::parse_expr(&rendered).unwrap());
        prop_assert_eq!(&reparsed, &x);
        prop_assert_eq!(reparsed.render(), rendered);
    }
}
