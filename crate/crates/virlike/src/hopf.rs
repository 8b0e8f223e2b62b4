//! The classical Hopf structure on the enveloping algebra: every Lie
//! generator is primitive, the counit kills generators, and the antipode
//! negates them and reverses products.

use std::time::Instant;

use crate::algebra::{straighten, AlgElement, PbwMonomial};
use crate::report::{Check, CheckStatus, Report};
use crate::scalar::{binom_general, GroupVec, Rational};
use crate::series::{SeriesTensor, StructureMap};

/// All splittings of a normal monomial under the primitive coproduct:
/// (left, right, multiplicity) triples with Delta_0(m) = sum mult * left (x) right.
///
/// Subwords of a sorted word stay sorted, so both parts are already normal
/// and no straightening is needed; multiplicities are products of binomials
/// over repeated factors.
pub(crate) fn coproduct0_splits(m: &PbwMonomial) -> Vec<(PbwMonomial, PbwMonomial, Rational)> {
    // Group the L-factors into (vector, count) runs.
    let mut runs: Vec<(GroupVec, u32)> = Vec::new();
    for v in m.l_factors() {
        match runs.last_mut() {
            Some((w, c)) if w == v => *c += 1,
            _ => runs.push((v.clone(), 1)),
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0u32; runs.len()];
    let mut i = 0;
    'outer: loop {
        for a in 0..=m.d1_exp() {
            for b in 0..=m.d2_exp() {
                let mut mult = &binom_general(&Rational::from_int(m.d1_exp() as i64), a as usize)
                    * &binom_general(&Rational::from_int(m.d2_exp() as i64), b as usize);
                let mut left_ls = Vec::new();
                let mut right_ls = Vec::new();
                for (k, (v, count)) in runs.iter().enumerate() {
                    let take = choice[k];
                    mult = &mult * &binom_general(&Rational::from_int(*count as i64), take as usize);
                    left_ls.extend(std::iter::repeat_n(v.clone(), take as usize));
                    right_ls.extend(std::iter::repeat_n(v.clone(), (count - take) as usize));
                }
                let left = PbwMonomial::new(a, b, left_ls).expect("factors are nonzero");
                let right =
                    PbwMonomial::new(m.d1_exp() - a, m.d2_exp() - b, right_ls).expect("nonzero");
                out.push((left, right, mult));
            }
        }
        // advance the odometer over the L-run choices
        while i < runs.len() {
            if choice[i] < runs[i].1 {
                choice[i] += 1;
                for c in choice.iter_mut().take(i) {
                    *c = 0;
                }
                i = 0;
                continue 'outer;
            }
            i += 1;
        }
        break;
    }
    out
}

/// Antipode of a normal monomial: sign by total length, word reversed and
/// re-straightened.
pub(crate) fn antipode0_monomial(m: &PbwMonomial) -> AlgElement {
    let mut w = m.word();
    w.reverse();
    let image = straighten(&w);
    if m.len().is_multiple_of(2) {
        image
    } else {
        -&image
    }
}

/// The multiplicative extension of the primitive coproduct, as an arity-2
/// series concentrated in t-degree 0.
pub fn coproduct0(x: &AlgElement, order: usize) -> SeriesTensor {
    SeriesTensor::from_alg(x, order)
        .apply_in_slot(1, StructureMap::CoproductZero)
        .expect("slot 1 of arity 1")
}

/// The counit: the coefficient of the unit monomial.
pub fn counit0(x: &AlgElement) -> Rational {
    x.constant_term()
}

/// The antipode, extended anti-homomorphically to all of the algebra.
pub fn antipode0(x: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (m, c) in x.terms() {
        out = &out + &antipode0_monomial(m).scale(c);
    }
    out
}

/// The default verification sample: the degree operators, the generators
/// over a small set of lattice vectors, and ten seeded degree-2 products.
pub fn default_hopf_sample(seed: u64) -> Vec<AlgElement> {
    use rand::Rng;
    use rand::SeedableRng;

    let vectors = [(1, 0), (0, 1), (1, 1), (-1, 2)];
    let mut sample = vec![AlgElement::d1(), AlgElement::d2()];
    sample.extend(
        vectors
            .iter()
            .map(|&(x1, x2)| AlgElement::l(GroupVec::from_ints(x1, x2))),
    );
    let singles = sample.clone();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10 {
        let a = &singles[rng.gen_range(0..singles.len())];
        let b = &singles[rng.gen_range(0..singles.len())];
        sample.push(a.multiply(b));
    }
    sample
}

/// Checks the classical Hopf axioms (coassociativity, both counit laws, the
/// antipode law) on a sample of elements. Failures are reported, not thrown.
pub fn verify_hopf0(sample: &[AlgElement], order: usize) -> Report {
    let mut checks = Vec::new();
    for (idx, x) in sample.iter().enumerate() {
        let name = format!("elem{idx:02}");
        let start = Instant::now();
        let delta = coproduct0(x, order);

        let lhs = delta
            .apply_in_slot(1, StructureMap::CoproductZero)
            .expect("arity 2 has slot 1");
        let rhs = delta
            .apply_in_slot(2, StructureMap::CoproductZero)
            .expect("arity 2 has slot 2");
        let coassoc = lhs == rhs;

        let back_left = delta
            .apply_in_slot(1, StructureMap::CounitZero)
            .expect("arity 2 counit");
        let back_right = delta
            .apply_in_slot(2, StructureMap::CounitZero)
            .expect("arity 2 counit");
        let embedded = SeriesTensor::from_alg(x, order);
        let counit_ok = back_left == embedded && back_right == embedded;

        let antipode_side = delta
            .apply_in_slot(1, StructureMap::AntipodeZero)
            .expect("arity 2 antipode")
            .mu_contract()
            .expect("arity 2 contracts");
        let target = SeriesTensor::from_alg(&AlgElement::scalar(counit0(x)), order);
        let antipode_ok = antipode_side == target;

        let status = if coassoc && counit_ok && antipode_ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        checks.push(Check {
            name,
            status,
            lhs_terms: lhs.term_count(),
            rhs_terms: rhs.term_count(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Report::new(
        "hopf0",
        vec![
            ("order".into(), order.to_string()),
            ("sample_size".into(), sample.len().to_string()),
        ],
        checks,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::falling_factorial;

    fn lv(x1: i64, x2: i64) -> GroupVec {
        GroupVec::from_ints(x1, x2)
    }

    #[test]
    fn coproduct_of_unit_and_primitives() {
        let n = 2;
        assert_eq!(coproduct0(&AlgElement::unit(), n), SeriesTensor::unit(2, n));
        let d1 = AlgElement::d1();
        let u = AlgElement::unit();
        let want = SeriesTensor::tensor_at(0, &[&d1, &u], n)
            .add(&SeriesTensor::tensor_at(0, &[&u, &d1], n));
        assert_eq!(coproduct0(&d1, n), want);
    }

    #[test]
    fn coproduct_of_falling_square() {
        // With T = d1: Delta_0(T^[2]) = T^[2] (x) 1 + 2 T (x) T + 1 (x) T^[2]
        let n = 0;
        let t = AlgElement::d1();
        let t2 = falling_factorial(&t, &Rational::zero(), 2);
        let u = AlgElement::unit();
        let want = SeriesTensor::tensor_at(0, &[&t2, &u], n)
            .add(&SeriesTensor::tensor_at(0, &[&t, &t], n).scale(&Rational::from_int(2)))
            .add(&SeriesTensor::tensor_at(0, &[&u, &t2], n));
        assert_eq!(coproduct0(&t2, n), want);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit0(&AlgElement::unit()), Rational::one());
        assert_eq!(counit0(&AlgElement::l(lv(2, 1))), Rational::zero());
        let x = &AlgElement::scalar(Rational::new(3, 2).unwrap())
            + &AlgElement::d1().multiply(&AlgElement::l(lv(1, 0)));
        assert_eq!(counit0(&x), Rational::new(3, 2).unwrap());
    }

    #[test]
    fn counit_is_multiplicative() {
        let x = AlgElement::d1().add_scalar(&Rational::from_int(2));
        let y = AlgElement::l(lv(1, 1)).add_scalar(&Rational::new(-1, 3).unwrap());
        assert_eq!(counit0(&x.multiply(&y)), &counit0(&x) * &counit0(&y));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode0(&AlgElement::unit()), AlgElement::unit());
        let la = AlgElement::l(lv(1, 0));
        assert_eq!(antipode0(&la), -&la);
        // S(d1 L) = L d1 = d1 L - L
        let x = AlgElement::d1().multiply(&la);
        assert_eq!(antipode0(&x), &x - &la);
    }

    #[test]
    fn antipode_is_anti_homomorphism() {
        let x = AlgElement::d1().multiply(&AlgElement::l(lv(1, 0)));
        let y = AlgElement::l(lv(0, 1)).add_scalar(&Rational::one());
        assert_eq!(
            antipode0(&x.multiply(&y)),
            antipode0(&y).multiply(&antipode0(&x))
        );
    }

    #[test]
    fn coproduct_is_algebra_map() {
        let n = 0;
        let x = AlgElement::d1().multiply(&AlgElement::l(lv(1, 0)));
        let y = AlgElement::l(lv(0, 1)).multiply(&AlgElement::l(lv(1, 1)));
        let lhs = coproduct0(&x.multiply(&y), n);
        let rhs = coproduct0(&x, n).multiply(&coproduct0(&y, n)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hopf0_report_passes() {
        let sample = vec![
            AlgElement::unit(),
            AlgElement::d1(),
            AlgElement::l(lv(1, 0)),
            AlgElement::l(lv(0, 1)),
            AlgElement::d1().multiply(&AlgElement::l(lv(1, 0))),
        ];
        let report = verify_hopf0(&sample, 0);
        assert!(report.passed());
        assert_eq!(report.checks.len(), 5);
    }

    #[test]
    fn hopf0_default_sample_passes() {
        let sample = default_hopf_sample(0);
        assert_eq!(sample.len(), 16);
        assert!(verify_hopf0(&sample, 0).passed());
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Rational>();
        assert_send_sync::<GroupVec>();
        assert_send_sync::<AlgElement>();
        assert_send_sync::<SeriesTensor>();
    }
}
