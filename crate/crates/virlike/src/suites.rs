//! Named identity suites over the twist kernel.
//!
//! Each suite evaluates both sides of a family of identities with exact
//! arithmetic and reports per-identity status. Where a published identity
//! admits more than one reading (a sign, a factorial convention, an exponent,
//! or which element conjugates the antipode), the suite constructs every
//! candidate and reports the one that verifies as `resolved-variant(tag)`;
//! a plain `pass` means the literal reading verified as displayed. Runs are
//! deterministic: random parameters come from a seeded generator and checks
//! are sorted by name.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgElement;
use crate::hopf::coproduct0;
use crate::report::{Check, CheckStatus, Report};
use crate::scalar::{binom_general, pairing, GroupVec, Rational};
use crate::series::{binomial_series, SeriesTensor, StructureMap};
use crate::twist::{AntipodeConvention, CoproductVariant, TwistContext};
use crate::Error;

/// Identifier of a verification suite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteId {
    Lemma2_3,
    Lemma3_1,
    Lemma3_2,
    Lemma3_3Coproduct,
    Lemma3_3Twist,
    Lemma3_4,
    Theorem2_6,
    HopfAxioms,
}

impl SuiteId {
    pub fn all() -> [SuiteId; 8] {
        [
            SuiteId::Lemma2_3,
            SuiteId::Lemma3_1,
            SuiteId::Lemma3_2,
            SuiteId::Lemma3_3Coproduct,
            SuiteId::Lemma3_3Twist,
            SuiteId::Lemma3_4,
            SuiteId::Theorem2_6,
            SuiteId::HopfAxioms,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteId::Lemma2_3 => "lemma2_3",
            SuiteId::Lemma3_1 => "lemma3_1",
            SuiteId::Lemma3_2 => "lemma3_2",
            SuiteId::Lemma3_3Coproduct => "lemma3_3_coproduct",
            SuiteId::Lemma3_3Twist => "lemma3_3_twist",
            SuiteId::Lemma3_4 => "lemma3_4",
            SuiteId::Theorem2_6 => "theorem2_6",
            SuiteId::HopfAxioms => "hopf_axioms",
        }
    }

    pub fn parse(s: &str) -> Result<SuiteId, Error> {
        SuiteId::all()
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }

    pub fn description(&self) -> &'static str {
        match self {
            SuiteId::Lemma2_3 => "shifted factorial calculus for T: composition, reflection, and the two signed binomial sums",
            SuiteId::Lemma3_1 => "straightening of L and d generators past factorials of T, and powers of L",
            SuiteId::Lemma3_2 => "products, inverses, and contraction constructions of the twist family",
            SuiteId::Lemma3_3Coproduct => "classical coproduct of falling factorials of T",
            SuiteId::Lemma3_3Twist => "cocycle and counit conditions making the series a twist",
            SuiteId::Lemma3_4 => "commutation of generators with the twist family and its contractions",
            SuiteId::Theorem2_6 => "closed-form twisted coproduct and antipode against the conjugation route",
            SuiteId::HopfAxioms => "coassociativity, counit, and antipode laws of the twisted structure",
        }
    }

    /// Default truncation order: lower where arity-3 products dominate.
    pub fn default_order(&self) -> usize {
        match self {
            SuiteId::Lemma3_3Twist | SuiteId::HopfAxioms => 4,
            _ => 6,
        }
    }
}

/// Optional parameter overrides; anything left as `None` takes the suite's
/// documented default.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub a_list: Option<Vec<Rational>>,
    pub d_list: Option<Vec<Rational>>,
    pub beta_list: Option<Vec<GroupVec>>,
    pub gamma_list: Option<Vec<GroupVec>>,
    pub seed: u64,
    pub max_degree: Option<usize>,
}

impl SuiteParams {
    pub fn seeded(seed: u64) -> Self {
        SuiteParams { seed, ..SuiteParams::default() }
    }
}

/// Runs one named suite against an admissible context.
pub fn run_suite(id: SuiteId, ctx: &TwistContext, params: &SuiteParams) -> Report {
    match id {
        SuiteId::Lemma2_3 => lemma2_3(ctx, params),
        SuiteId::Lemma3_1 => lemma3_1(ctx, params),
        SuiteId::Lemma3_2 => lemma3_2(ctx, params),
        SuiteId::Lemma3_3Coproduct => lemma3_3_coproduct(ctx, params),
        SuiteId::Lemma3_3Twist => verify_twist(ctx),
        SuiteId::Lemma3_4 => verify_lemma_3_4(ctx, params),
        SuiteId::Theorem2_6 => theorem2_6(ctx, params),
        SuiteId::HopfAxioms => hopf_axioms(ctx, params),
    }
}

// ---------------------------------------------------------------------------
// parameter plumbing

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-5..=5i64);
    let den = rng.gen_range(1..=5i64);
    Rational::new(num, den).expect("nonzero denominator")
}

fn small_vec_nonzero(rng: &mut ChaCha8Rng) -> GroupVec {
    loop {
        let v = GroupVec::new(small_rational(rng), small_rational(rng));
        if !v.is_zero() {
            return v;
        }
    }
}

fn rationals_string(list: &[Rational]) -> String {
    list.iter().map(Rational::to_string).collect::<Vec<_>>().join(",")
}

fn vecs_string(list: &[GroupVec]) -> String {
    list.iter().map(GroupVec::to_string).collect::<Vec<_>>().join(";")
}

fn base_params(ctx: &TwistContext, params: &SuiteParams) -> Vec<(String, String)> {
    vec![
        ("a1".into(), ctx.a1().to_string()),
        ("a2".into(), ctx.a2().to_string()),
        ("alpha".into(), ctx.alpha().to_string()),
        ("order".into(), ctx.order().to_string()),
        ("seed".into(), params.seed.to_string()),
    ]
}

// ---------------------------------------------------------------------------
// check plumbing

struct Checker {
    name: String,
    start: Instant,
    lhs_terms: usize,
    rhs_terms: usize,
    ok: bool,
}

impl Checker {
    fn new(name: impl Into<String>) -> Self {
        Checker {
            name: name.into(),
            start: Instant::now(),
            lhs_terms: 0,
            rhs_terms: 0,
            ok: true,
        }
    }

    fn series(&mut self, lhs: &SeriesTensor, rhs: &SeriesTensor) {
        self.lhs_terms += lhs.term_count();
        self.rhs_terms += rhs.term_count();
        self.ok &= lhs == rhs;
    }

    fn elements(&mut self, lhs: &AlgElement, rhs: &AlgElement) {
        self.lhs_terms += lhs.term_count();
        self.rhs_terms += rhs.term_count();
        self.ok &= lhs == rhs;
    }

    fn finish(self) -> Check {
        let status = if self.ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.into_check(status)
    }

    /// Resolve among candidate readings: a surviving literal reading is a
    /// plain pass, a surviving non-literal reading is tagged, and no survivor
    /// is a failure. `literal` names the reading matching the display, when
    /// one exists.
    fn finish_variants(self, survivors: &[&str], literal: Option<&str>) -> Check {
        let status = match (survivors.len(), literal) {
            (0, _) => CheckStatus::Fail,
            (_, Some(lit)) if survivors.contains(&lit) => CheckStatus::Pass,
            (1, _) => CheckStatus::ResolvedVariant(survivors[0].to_string()),
            _ => CheckStatus::ResolvedVariant(survivors.join("|")),
        };
        self.into_check(status)
    }

    fn into_check(self, status: CheckStatus) -> Check {
        Check {
            name: self.name,
            status,
            lhs_terms: self.lhs_terms,
            rhs_terms: self.rhs_terms,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

// ---------------------------------------------------------------------------
// shifted factorial calculus (five identities)

fn lemma2_3(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let bound = params.max_degree.unwrap_or(6);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let a_list = params
        .a_list
        .clone()
        .unwrap_or_else(|| (0..4).map(|_| small_rational(&mut rng)).collect());
    let d_list = params
        .d_list
        .clone()
        .unwrap_or_else(|| (0..5).map(|_| small_rational(&mut rng)).collect());
    let pairs: Vec<(Rational, Rational)> = a_list
        .iter()
        .flat_map(|a| d_list.iter().map(move |d| (a.clone(), d.clone())))
        .collect();
    let mut c23 = Checker::new("eq2_3");
    let mut c24 = Checker::new("eq2_4");
    let mut c25 = Checker::new("eq2_5");
    for (a, _) in &pairs {
        for m in 0..=bound {
            for n in 0..=bound {
                let lhs = ctx.t_rising(a, m + n);
                let rhs = ctx.t_rising(a, m).multiply(&ctx.t_rising(&(&Rational::from_int(m as i64) + a), n));
                c23.elements(&lhs, &rhs);

                let lhs = ctx.t_falling(a, m + n);
                let rhs = ctx.t_falling(a, m).multiply(&ctx.t_falling(&(a - &Rational::from_int(m as i64)), n));
                c24.elements(&lhs, &rhs);
            }
            let lhs = ctx.t_falling(a, m);
            let rhs = ctx.t_rising(&(&(a - &Rational::from_int(m as i64)) + &Rational::one()), m);
            c25.elements(&lhs, &rhs);
        }
    }

    // The signed binomial sums: the display leaves the sign and the closed
    // form ambiguous, so all four readings are raced and the survivor is
    // reported. `sign-n` weights the summand by (-1)^n, `sign-m` by (-1)^m;
    // `falling` is C(a-d, r), `rising` is C(a-d+r-1, r).
    let eq2_6 = binomial_sum_check("eq2_6", ctx, &pairs, bound, false, None);
    let eq2_7 = binomial_sum_check("eq2_7", ctx, &pairs, bound, true, Some("sign-m:rising"));

    Report::new(
        "lemma2_3",
        {
            let mut p = base_params(ctx, params);
            p.push(("a_list".into(), rationals_string(&a_list)));
            p.push(("d_list".into(), rationals_string(&d_list)));
            p.push(("bound".into(), bound.to_string()));
            p
        },
        vec![c23.finish(), c24.finish(), c25.finish(), eq2_6, eq2_7],
    )
}

/// Shared evaluator for the two signed binomial-sum identities. With
/// `shift_d` false the second factor is the rising factorial at d; with it
/// true, the falling factorial at d-m.
fn binomial_sum_check(
    name: &str,
    ctx: &TwistContext,
    pairs: &[(Rational, Rational)],
    bound: usize,
    shift_d: bool,
    literal: Option<&str>,
) -> Check {
    let mut checker = Checker::new(name);
    let mut alive = [true; 4]; // sign-n:falling, sign-n:rising, sign-m:falling, sign-m:rising
    let mut cand_terms = [0usize; 4];
    for (a, d) in pairs {
        for r in 0..=bound {
            let mut lhs_n = AlgElement::zero();
            for m in 0..=r {
                let n = r - m;
                let left = ctx.t_falling(a, m);
                let right = if shift_d {
                    ctx.t_falling(&(d - &Rational::from_int(m as i64)), n)
                } else {
                    ctx.t_rising(d, n)
                };
                let sign = if n % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
                let c = &(&sign * &Rational::inv_factorial(m)) * &Rational::inv_factorial(n);
                lhs_n = &lhs_n + &left.multiply(&right).scale(&c);
            }
            let lhs_m = if r % 2 == 0 { lhs_n.clone() } else { -&lhs_n };
            let diff = a - d;
            let falling = AlgElement::scalar(binom_general(&diff, r));
            let rising = AlgElement::scalar(binom_general(
                &(&diff + &Rational::from_int(r as i64 - 1)),
                r,
            ));
            checker.lhs_terms += lhs_n.term_count();
            let results = [
                lhs_n == falling,
                lhs_n == rising,
                lhs_m == falling,
                lhs_m == rising,
            ];
            let sizes = [
                falling.term_count(),
                rising.term_count(),
                falling.term_count(),
                rising.term_count(),
            ];
            for k in 0..4 {
                alive[k] &= results[k];
                cand_terms[k] += sizes[k];
            }
        }
    }
    let tags = ["sign-n:falling", "sign-n:rising", "sign-m:falling", "sign-m:rising"];
    let survivors: Vec<&str> = tags
        .iter()
        .zip(alive)
        .filter_map(|(t, ok)| ok.then_some(*t))
        .collect();
    checker.rhs_terms = tags
        .iter()
        .position(|t| survivors.first() == Some(t))
        .map(|k| cand_terms[k])
        .unwrap_or(0);
    checker.finish_variants(&survivors, literal)
}

// ---------------------------------------------------------------------------
// straightening identities

fn lemma3_1(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let bound = params.max_degree.unwrap_or(4);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let a_list = params
        .a_list
        .clone()
        .unwrap_or_else(|| (0..5).map(|_| small_rational(&mut rng)).collect());
    let beta_list = params
        .beta_list
        .clone()
        .unwrap_or_else(|| (0..2).map(|_| small_vec_nonzero(&mut rng)).collect());
    let gamma_list = params
        .gamma_list
        .clone()
        .unwrap_or_else(|| (0..2).map(|_| small_vec_nonzero(&mut rng)).collect());
    let mut samples: Vec<(Rational, GroupVec, GroupVec)> = Vec::new();
    for a in &a_list {
        for b in &beta_list {
            for g in &gamma_list {
                samples.push((a.clone(), b.clone(), g.clone()));
            }
        }
    }
    // Edge samples: opposite and parallel vectors, where brackets vanish or
    // the summed index collapses to the zero vector.
    let edge = GroupVec::from_ints(2, -1);
    samples.push((Rational::one(), edge.clone(), edge.neg()));
    samples.push((Rational::new(-1, 2).unwrap(), edge.clone(), edge.scale(&Rational::from_int(2))));

    let la = ctx.l_alpha();
    let mut c1 = Checker::new("eq3_01");
    let mut c2 = Checker::new("eq3_02");
    let mut c3 = Checker::new("eq3_03");
    let mut c4 = Checker::new("eq3_04");
    let mut c5 = Checker::new("eq3_05");
    let mut c6 = Checker::new("eq3_06");
    let mut c7 = Checker::new("eq3_07");
    let mut c8 = Checker::new("eq3_08");

    for (a, beta, gamma) in &samples {
        let lb = AlgElement::l(beta.clone());
        let b = ctx.weight_of(beta);
        for m in 0..=bound {
            // L_b T_a^[m] = T_{a-b}^[m] L_b, and the rising twin
            c1.elements(
                &lb.multiply(&ctx.t_falling(a, m)),
                &ctx.t_falling(&(a - &b), m).multiply(&lb),
            );
            c2.elements(
                &lb.multiply(&ctx.t_rising(a, m)),
                &ctx.t_rising(&(a - &b), m).multiply(&lb),
            );
            for k in 0..=bound {
                if m == 0 && k > 1 {
                    continue; // powers of L alone commute with 1; skip duplicates
                }
                let lk = la.power(k);
                let shift = a - &Rational::from_int(k as i64);
                c3.elements(
                    &lk.multiply(&ctx.t_falling(a, m)),
                    &ctx.t_falling(&shift, m).multiply(&lk),
                );
                c4.elements(
                    &lk.multiply(&ctx.t_rising(a, m)),
                    &ctx.t_rising(&shift, m).multiply(&lk),
                );
                for dj in [AlgElement::d1(), AlgElement::d2()] {
                    let djk = dj.power(k);
                    c5.elements(
                        &djk.multiply(&ctx.t_falling(a, m)),
                        &ctx.t_falling(a, m).multiply(&djk),
                    );
                    c6.elements(
                        &djk.multiply(&ctx.t_rising(a, m)),
                        &ctx.t_rising(a, m).multiply(&djk),
                    );
                }
            }
            // L_b L_g^m expansion via iterated brackets
            let lg = AlgElement::l(gamma.clone());
            let lhs = lb.multiply(&lg.power(m));
            let mut rhs = AlgElement::zero();
            let pair_gb = pairing(gamma, beta);
            let mut pair_pow = Rational::one();
            for i in 0..=m {
                let sign = if i % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
                let coeff = &(&sign * &binom_general(&Rational::from_int(m as i64), i)) * &pair_pow;
                let shifted = AlgElement::l(beta.add(&gamma.scale(&Rational::from_int(i as i64))));
                rhs = &rhs + &lg.power(m - i).multiply(&shifted).scale(&coeff);
                pair_pow = &pair_pow * &pair_gb;
            }
            c7.elements(&lhs, &rhs);
            // d_j L_g^m = m g_j L_g^m + L_g^m d_j
            for (j, dj) in [(1usize, AlgElement::d1()), (2, AlgElement::d2())] {
                let gj = if j == 1 { gamma.x1.clone() } else { gamma.x2.clone() };
                let lhs = dj.multiply(&lg.power(m));
                let rhs = &lg.power(m).scale(&(&gj * &Rational::from_int(m as i64)))
                    + &lg.power(m).multiply(&dj);
                c8.elements(&lhs, &rhs);
            }
        }
    }

    Report::new(
        "lemma3_1",
        {
            let mut p = base_params(ctx, params);
            p.push(("a_list".into(), rationals_string(&a_list)));
            p.push(("beta_list".into(), vecs_string(&beta_list)));
            p.push(("gamma_list".into(), vecs_string(&gamma_list)));
            p.push(("bound".into(), bound.to_string()));
            p.push(("samples".into(), samples.len().to_string()));
            p
        },
        vec![
            c1.finish(),
            c2.finish(),
            c3.finish(),
            c4.finish(),
            c5.finish(),
            c6.finish(),
            c7.finish(),
            c8.finish(),
        ],
    )
}

// ---------------------------------------------------------------------------
// twist family products and inverses

fn default_scalars() -> Vec<Rational> {
    vec![
        Rational::zero(),
        Rational::one(),
        Rational::from_int(-1),
        Rational::new(1, 2).unwrap(),
        Rational::from_int(2),
    ]
}

fn lemma3_2(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let a_list = params.a_list.clone().unwrap_or_else(default_scalars);
    let d_list = params.d_list.clone().unwrap_or_else(|| a_list.clone());
    let n = ctx.order();
    let la = ctx.l_alpha();

    let mut prod_ff = Checker::new("curlyF_mul_F");
    let mut prod_vu = Checker::new("v_mul_u");
    for a in &a_list {
        for d in &d_list {
            let lhs = ctx.curly_f(a).multiply(&ctx.plain_f(d)).expect("matched series");
            let rhs = SeriesTensor::unit(1, n)
                .tensor(&binomial_series(&la, &(a - d), n))
                .expect("orders match");
            prod_ff.series(&lhs, &rhs);

            let lhs = ctx.v_series(a).multiply(&ctx.u_series(d)).expect("matched series");
            let rhs = binomial_series(&la, &-&(a + d), n);
            prod_vu.series(&lhs, &rhs);
        }
    }

    let mut inv_f = Checker::new("invert_curlyF_is_F");
    let mut inv_u = Checker::new("invert_u_is_v_neg");
    let mut mu_u = Checker::new("u_matches_mu_construction");
    let mut mu_v = Checker::new("v_matches_mu_construction");
    for a in &a_list {
        inv_f.series(&ctx.curly_f(a).invert().expect("unit head"), &ctx.plain_f(a));
        inv_f.series(&ctx.plain_f(a).invert().expect("unit head"), &ctx.curly_f(a));
        inv_u.series(&ctx.u_series(a).invert().expect("unit head"), &ctx.v_series(&-a));
        inv_u.series(&ctx.v_series(a).invert().expect("unit head"), &ctx.u_series(&-a));
        mu_u.series(&ctx.u_series(a), &ctx.u_from_mu(a));
        mu_v.series(&ctx.v_series(a), &ctx.v_from_mu(a));
    }

    // Sign of the inverse family: the alternating display is raced against
    // the all-positive reading, with the geometric-series inverse as oracle.
    let mut sign_check = Checker::new("plain_F_sign");
    let mut positive_ok = true;
    let mut alternating_ok = true;
    for a in &a_list {
        let oracle = ctx.curly_f(a).invert().expect("unit head");
        sign_check.lhs_terms += oracle.term_count();
        sign_check.rhs_terms += ctx.plain_f(a).term_count();
        positive_ok &= oracle == ctx.plain_f(a);
        alternating_ok &= oracle == ctx.plain_f_displayed(a);
    }
    let survivors: Vec<&str> = [("positive", positive_ok), ("alternating", alternating_ok)]
        .iter()
        .filter_map(|(t, ok)| ok.then_some(*t))
        .collect();
    let sign = sign_check.finish_variants(&survivors, Some("alternating"));

    Report::new(
        "lemma3_2",
        {
            let mut p = base_params(ctx, params);
            p.push(("a_list".into(), rationals_string(&a_list)));
            p.push(("d_list".into(), rationals_string(&d_list)));
            p
        },
        vec![
            prod_ff.finish(),
            prod_vu.finish(),
            inv_f.finish(),
            inv_u.finish(),
            mu_u.finish(),
            mu_v.finish(),
            sign,
        ],
    )
}

// ---------------------------------------------------------------------------
// classical coproduct of falling factorials

fn lemma3_3_coproduct(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let bound = params.max_degree.unwrap_or(5);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut a_list = params
        .a_list
        .clone()
        .unwrap_or_else(|| (0..10).map(|_| small_rational(&mut rng)).collect());
    a_list.insert(0, Rational::zero());
    let n = ctx.order();

    let mut checks = Vec::new();
    for m in 0..=bound {
        let mut c = Checker::new(format!("delta0_T_falling_m{m}"));
        let lhs = coproduct0(&ctx.t_falling(&Rational::zero(), m), n);
        for a in &a_list {
            let mut rhs = SeriesTensor::zero(2, n);
            for i in 0..=m {
                let coeff = binom_general(&Rational::from_int(m as i64), i);
                let left = ctx.t_falling(&-a, i);
                let right = ctx.t_falling(a, m - i);
                rhs = rhs.add(&SeriesTensor::tensor_at(0, &[&left, &right], n).scale(&coeff));
            }
            c.series(&lhs, &rhs);
        }
        checks.push(c.finish());
    }

    Report::new(
        "lemma3_3_coproduct",
        {
            let mut p = base_params(ctx, params);
            p.push(("a_list".into(), rationals_string(&a_list)));
            p.push(("bound".into(), bound.to_string()));
            p
        },
        checks,
    )
}

// ---------------------------------------------------------------------------
// the twist conditions

/// Checks the cocycle equation and both counit conditions for the twist at
/// the context's order.
pub fn verify_twist(ctx: &TwistContext) -> Report {
    let n = ctx.order();
    let f = ctx.curly_f(&Rational::zero());
    let unit1 = SeriesTensor::unit(1, n);

    let mut cocycle = Checker::new("cocycle_eq2_8");
    let lhs = f
        .tensor(&unit1)
        .expect("orders match")
        .multiply(&f.apply_in_slot(1, StructureMap::CoproductZero).expect("slot 1"))
        .expect("arity 3");
    let rhs = unit1
        .tensor(&f)
        .expect("orders match")
        .multiply(&f.apply_in_slot(2, StructureMap::CoproductZero).expect("slot 2"))
        .expect("arity 3");
    cocycle.series(&lhs, &rhs);

    let mut left = Checker::new("counit_left_eq2_9");
    left.series(
        &f.apply_in_slot(1, StructureMap::CounitZero).expect("arity 2"),
        &unit1,
    );
    let mut right = Checker::new("counit_right_eq2_9");
    right.series(
        &f.apply_in_slot(2, StructureMap::CounitZero).expect("arity 2"),
        &unit1,
    );

    Report::new(
        "lemma3_3_twist",
        base_params(ctx, &SuiteParams::default()),
        vec![cocycle.finish(), left.finish(), right.finish()],
    )
}

// ---------------------------------------------------------------------------
// commutation with the twist family

fn default_beta_small() -> Vec<GroupVec> {
    vec![GroupVec::from_ints(0, 1), GroupVec::from_ints(1, 1)]
}

fn default_beta_full() -> Vec<GroupVec> {
    vec![
        GroupVec::from_ints(0, 1),
        GroupVec::from_ints(1, 1),
        GroupVec::from_ints(-1, 2),
    ]
}

/// Evaluates the eight commutation identities between generators and the
/// twist family, including both readings of the last one.
pub fn verify_lemma_3_4(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let n = ctx.order();
    let a_list = params.a_list.clone().unwrap_or_else(|| {
        vec![Rational::zero(), Rational::one(), Rational::new(-1, 2).unwrap()]
    });
    let beta_list = params.beta_list.clone().unwrap_or_else(default_beta_small);
    let la = ctx.l_alpha();

    let emb = |x: &AlgElement| SeriesTensor::from_alg(x, n);

    let mut c09 = Checker::new("eq3_09");
    let mut c10 = Checker::new("eq3_10");
    let mut c11 = Checker::new("eq3_11");
    let mut c12 = Checker::new("eq3_12");
    let mut c13 = Checker::new("eq3_13");
    let mut c14 = Checker::new("eq3_14");
    let mut c15 = Checker::new("eq3_15");

    for a in &a_list {
        for beta in &beta_list {
            let lb = AlgElement::l(beta.clone());
            let b = ctx.weight_of(beta);
            // (L_b x 1) F_a = F_{a-b} (L_b x 1)
            let lb_left = SeriesTensor::embed(&lb, 2, 1, n).expect("slot 1");
            c09.series(
                &lb_left.multiply(&ctx.plain_f(a)).expect("matched"),
                &ctx.plain_f(&(a - &b)).multiply(&lb_left).expect("matched"),
            );
            // (1 x L_b) F_a = sum_l (-1)^l F_{a+l} (T_a^<l> x c_l L_{b+l alpha} t^l)
            let lb_right = SeriesTensor::embed(&lb, 2, 2, n).expect("slot 2");
            let lhs = lb_right.multiply(&ctx.plain_f(a)).expect("matched");
            let mut rhs = SeriesTensor::zero(2, n);
            for l in 0..=n {
                let c_l = ctx.c_coeff(beta, l);
                if c_l.is_zero() {
                    continue;
                }
                let sign = if l % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
                let shifted = AlgElement::l(beta.add(&ctx.alpha().scale(&Rational::from_int(l as i64))));
                let tail = SeriesTensor::tensor_at(
                    l,
                    &[&ctx.t_rising(a, l), &shifted],
                    n,
                )
                .scale(&(&sign * &c_l));
                rhs = rhs.add(
                    &ctx
                        .plain_f(&(a + &Rational::from_int(l as i64)))
                        .multiply(&tail)
                        .expect("matched"),
                );
            }
            c10.series(&lhs, &rhs);
            // L_b u_a = u_{a+b} sum_l c_l L_{b+l alpha} T_{1-a}^<l> t^l
            let lhs = emb(&lb).multiply(&ctx.u_series(a)).expect("matched");
            let mut tail = SeriesTensor::zero(1, n);
            for l in 0..=n {
                let c_l = ctx.c_coeff(beta, l);
                if c_l.is_zero() {
                    continue;
                }
                let shifted = AlgElement::l(beta.add(&ctx.alpha().scale(&Rational::from_int(l as i64))));
                let x = shifted.multiply(&ctx.t_rising(&(&Rational::one() - a), l));
                tail = tail.add(&emb(&x).shift_t(l).scale(&c_l));
            }
            let rhs = ctx.u_series(&(a + &b)).multiply(&tail).expect("matched");
            c11.series(&lhs, &rhs);
        }

        for j in [1usize, 2] {
            let dj = ctx.d_generator(j);
            let dj_left = SeriesTensor::embed(&dj, 2, 1, n).expect("slot 1");
            // (d_j x 1) F_a = F_a (d_j x 1)
            c12.series(
                &dj_left.multiply(&ctx.plain_f(a)).expect("matched"),
                &ctx.plain_f(a).multiply(&dj_left).expect("matched"),
            );
            // (1 x d_j) F_a = F_{a+1} (T_a^<1> x alpha_j L t) + F_a (1 x d_j)
            let dj_right = SeriesTensor::embed(&dj, 2, 2, n).expect("slot 2");
            let lhs = dj_right.multiply(&ctx.plain_f(a)).expect("matched");
            let correction = SeriesTensor::tensor_at(1, &[&ctx.t_rising(a, 1), &la], n)
                .scale(&ctx.alpha_coord(j));
            let rhs = ctx
                .plain_f(&(a + &Rational::one()))
                .multiply(&correction)
                .expect("matched")
                .add(&ctx.plain_f(a).multiply(&dj_right).expect("matched"));
            c13.series(&lhs, &rhs);
            // d_j u_a = -alpha_j T_{-a}^[1] u_{a+1} L t + u_a d_j
            let lhs = emb(&dj).multiply(&ctx.u_series(a)).expect("matched");
            let head = emb(&ctx.t_falling(&-a, 1))
                .multiply(&ctx.u_series(&(a + &Rational::one())))
                .expect("matched")
                .multiply(&emb(&la))
                .expect("matched")
                .shift_t(1)
                .scale(&-&ctx.alpha_coord(j));
            let rhs = head.add(&ctx.u_series(a).multiply(&emb(&dj)).expect("matched"));
            c14.series(&lhs, &rhs);
        }
        // L_alpha u_a = u_{a+1} L_alpha
        c15.series(
            &emb(&la).multiply(&ctx.u_series(a)).expect("matched"),
            &ctx.u_series(&(a + &Rational::one())).multiply(&emb(&la)).expect("matched"),
        );
    }

    // The last identity has two published readings; both are evaluated over
    // the whole a-list. In the displayed reading the left factor is the base
    // contraction; in the proof reading it is the shifted one.
    let mut c16 = Checker::new("eq3_16");
    let mut displayed_ok = true;
    let mut proof_ok = true;
    for a in &a_list {
        let t_neg = emb(&ctx.t_falling(&-a, 1));
        let t_pos = emb(&ctx.t_falling(a, 1));
        let lat = emb(&la).shift_t(1);

        let lhs_disp = ctx.v_series(&Rational::zero()).multiply(&t_neg).expect("matched");
        let rhs_disp = t_neg
            .multiply(&ctx.v_series(&-a))
            .expect("matched")
            .sub(&t_pos.multiply(&ctx.v_series(a)).expect("matched").multiply(&lat).expect("matched"));
        c16.lhs_terms += lhs_disp.term_count();
        displayed_ok &= lhs_disp == rhs_disp;

        let lhs_proof = ctx.v_series(a).multiply(&t_neg).expect("matched");
        let rhs_proof = t_neg
            .multiply(&ctx.v_series(a))
            .expect("matched")
            .sub(
                &t_pos
                    .multiply(&ctx.v_series(&(a - &Rational::one())))
                    .expect("matched")
                    .multiply(&lat)
                    .expect("matched"),
            );
        c16.rhs_terms += rhs_proof.term_count();
        proof_ok &= lhs_proof == rhs_proof;
    }
    let survivors: Vec<&str> = [("displayed", displayed_ok), ("proof", proof_ok)]
        .iter()
        .filter_map(|(t, ok)| ok.then_some(*t))
        .collect();
    let c16 = c16.finish_variants(&survivors, Some("displayed"));

    Report::new(
        "lemma3_4",
        {
            let mut p = base_params(ctx, params);
            p.push(("a_list".into(), rationals_string(&a_list)));
            p.push(("beta_list".into(), vecs_string(&beta_list)));
            p
        },
        vec![
            c09.finish(),
            c10.finish(),
            c11.finish(),
            c12.finish(),
            c13.finish(),
            c14.finish(),
            c15.finish(),
            c16,
        ],
    )
}

// ---------------------------------------------------------------------------
// closed forms against conjugation

fn theorem2_6(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let beta_list = params.beta_list.clone().unwrap_or_else(default_beta_full);
    let mut checks = Vec::new();

    // Coproduct of L_beta: the statement shows plain powers of T, the
    // derivation shifted factorials. The conjugation route decides once for
    // the whole generator list; the per-generator checks then run against
    // the winning reading.
    let conj_l: Vec<SeriesTensor> = beta_list
        .iter()
        .map(|beta| ctx.twisted_coproduct(&AlgElement::l(beta.clone())))
        .collect();
    let variants = [CoproductVariant::PlainPower, CoproductVariant::ShiftedFactorial];
    let mut variant_probe = Checker::new("coprod_L_variant");
    let mut alive = [true, true];
    for (beta, conj) in beta_list.iter().zip(&conj_l) {
        variant_probe.lhs_terms += conj.term_count();
        for (slot, variant) in alive.iter_mut().zip(variants) {
            let closed = ctx.closed_coproduct_l(beta, variant).expect("nonzero beta");
            *slot &= &closed == conj;
        }
    }
    let survivors: Vec<&str> = variants
        .iter()
        .zip(alive)
        .filter_map(|(v, ok)| ok.then_some(v.tag()))
        .collect();
    let winning_variant = if alive[1] { CoproductVariant::ShiftedFactorial } else { CoproductVariant::PlainPower };
    variant_probe.rhs_terms = variant_probe.lhs_terms;
    checks.push(variant_probe.finish_variants(&survivors, Some(CoproductVariant::PlainPower.tag())));

    for (beta, conj) in beta_list.iter().zip(&conj_l) {
        let mut c = Checker::new(format!("coprod_L{}", compact_vec(beta)));
        let closed = ctx.closed_coproduct_l(beta, winning_variant).expect("nonzero beta");
        c.series(conj, &closed);
        checks.push(c.finish());
    }

    for j in [1usize, 2] {
        let mut c = Checker::new(format!("coprod_d{j}"));
        c.series(
            &ctx.twisted_coproduct(&ctx.d_generator(j)),
            &ctx.closed_coproduct_d(j),
        );
        checks.push(c.finish());
    }

    // Antipodes: conjugation by the contraction of the twist versus by the
    // contraction of its inverse; the closed forms decide the convention.
    let mut closed_forms: Vec<(String, SeriesTensor)> = Vec::new();
    for beta in &beta_list {
        closed_forms.push((
            format!("antipode_L{}", compact_vec(beta)),
            ctx.closed_antipode_l(beta).expect("nonzero beta"),
        ));
    }
    for j in [1usize, 2] {
        closed_forms.push((format!("antipode_d{j}"), ctx.closed_antipode_d(j)));
    }
    let elements: Vec<AlgElement> = beta_list
        .iter()
        .map(|beta| AlgElement::l(beta.clone()))
        .chain([1usize, 2].into_iter().map(|j| ctx.d_generator(j)))
        .collect();
    let conventions = [AntipodeConvention::UConj, AntipodeConvention::UInvConj];
    let mut conv_probe = Checker::new("antipode_convention");
    let mut conv_alive = [true, true];
    let mut images: Vec<Vec<SeriesTensor>> = Vec::new();
    for (slot, conv) in conv_alive.iter_mut().zip(conventions) {
        let imgs: Vec<SeriesTensor> = elements
            .iter()
            .map(|x| ctx.twisted_antipode(x, conv))
            .collect();
        for (img, (_, closed)) in imgs.iter().zip(&closed_forms) {
            *slot &= img == closed;
        }
        images.push(imgs);
    }
    let survivors: Vec<&str> = conventions
        .iter()
        .zip(conv_alive)
        .filter_map(|(c, ok)| ok.then_some(c.tag()))
        .collect();
    let winner_idx = if conv_alive[0] { 0 } else { 1 };
    conv_probe.lhs_terms = closed_forms.iter().map(|(_, s)| s.term_count()).sum();
    conv_probe.rhs_terms = conv_probe.lhs_terms;
    checks.push(conv_probe.finish_variants(&survivors, None));

    for ((name, closed), img) in closed_forms.iter().zip(&images[winner_idx]) {
        let mut c = Checker::new(name.clone());
        c.series(img, closed);
        checks.push(c.finish());
    }

    // Exponent of the first closed-form factor: the stated weight reading
    // b = a1*b1 + a2*b2 against the garbled a1*b1 + a2 + b2.
    let mut c = Checker::new("b_weight_reading");
    let mut stated_ok = true;
    let mut garbled_ok = true;
    for (beta, conj) in beta_list.iter().zip(&conj_l) {
        c.lhs_terms += conj.term_count();
        let stated = ctx
            .closed_coproduct_l_with_b(beta, winning_variant, &ctx.weight_of(beta))
            .expect("nonzero beta");
        let garbled_b = &(&(ctx.a1() * &beta.x1) + ctx.a2()) + &beta.x2;
        let garbled = ctx
            .closed_coproduct_l_with_b(beta, winning_variant, &garbled_b)
            .expect("nonzero beta");
        c.rhs_terms += stated.term_count();
        stated_ok &= &stated == conj;
        garbled_ok &= &garbled == conj;
    }
    let survivors: Vec<&str> = [("a1*b1+a2*b2", stated_ok), ("a1*b1+a2+b2", garbled_ok)]
        .iter()
        .filter_map(|(t, ok)| ok.then_some(*t))
        .collect();
    checks.push(c.finish_variants(&survivors, Some("a1*b1+a2+b2")));

    Report::new(
        "theorem2_6",
        {
            let mut p = base_params(ctx, params);
            p.push(("beta_list".into(), vecs_string(&beta_list)));
            p
        },
        checks,
    )
}

fn compact_vec(v: &GroupVec) -> String {
    format!("({},{})", v.x1, v.x2)
}

// ---------------------------------------------------------------------------
// twisted Hopf axioms

fn hopf_axioms(ctx: &TwistContext, params: &SuiteParams) -> Report {
    let n = ctx.order();
    let beta_list = params.beta_list.clone().unwrap_or_else(default_beta_full);
    let f = ctx.curly_f(&Rational::zero());
    let finv = ctx.plain_f(&Rational::zero());
    let unit1 = SeriesTensor::unit(1, n);
    let f_left = f.tensor(&unit1).expect("orders match");
    let finv_left = finv.tensor(&unit1).expect("orders match");
    let f_right = unit1.tensor(&f).expect("orders match");
    let finv_right = unit1.tensor(&finv).expect("orders match");

    let mut generators: Vec<(String, AlgElement)> = vec![
        ("d1".into(), AlgElement::d1()),
        ("d2".into(), AlgElement::d2()),
    ];
    for beta in &beta_list {
        generators.push((format!("L{}", compact_vec(beta)), AlgElement::l(beta.clone())));
    }

    let w = ctx.v_series(&Rational::zero());
    let w_inv = w.invert().expect("unit head");
    let w_alt = ctx.u_series(&Rational::zero());
    let w_alt_inv = w_alt.invert().expect("unit head");

    let mut checks = Vec::new();
    let mut uconj_all = true;
    let mut uinv_all = true;
    let mut convention_probe = Checker::new("antipode_convention");

    for (name, g) in &generators {
        let delta = ctx.twisted_coproduct(g);

        let mut c = Checker::new(format!("coassoc_{name}"));
        let lhs = f_left
            .multiply(&delta.apply_in_slot(1, StructureMap::CoproductZero).expect("slot 1"))
            .expect("arity 3")
            .multiply(&finv_left)
            .expect("arity 3");
        let rhs = f_right
            .multiply(&delta.apply_in_slot(2, StructureMap::CoproductZero).expect("slot 2"))
            .expect("arity 3")
            .multiply(&finv_right)
            .expect("arity 3");
        c.series(&lhs, &rhs);
        checks.push(c.finish());

        let mut c = Checker::new(format!("counit_{name}"));
        let embedded = SeriesTensor::from_alg(g, n);
        c.series(
            &delta.apply_in_slot(1, StructureMap::CounitZero).expect("arity 2"),
            &embedded,
        );
        c.series(
            &delta.apply_in_slot(2, StructureMap::CounitZero).expect("arity 2"),
            &embedded,
        );
        checks.push(c.finish());

        // mu (S x Id) Delta = unit * counit, for both conjugation choices
        let target = SeriesTensor::from_alg(&AlgElement::scalar(g.constant_term()), n);
        let s_slot = delta.apply_in_slot(1, StructureMap::AntipodeZero).expect("arity 2");
        let collapse = |w: &SeriesTensor, w_inv: &SeriesTensor| {
            w.tensor(&unit1)
                .expect("orders match")
                .multiply(&s_slot)
                .expect("arity 2")
                .multiply(&w_inv.tensor(&unit1).expect("orders match"))
                .expect("arity 2")
                .mu_contract()
                .expect("arity 2 contracts")
        };
        let with_uconj = collapse(&w, &w_inv);
        let with_uinv = collapse(&w_alt, &w_alt_inv);
        uconj_all &= with_uconj == target;
        uinv_all &= with_uinv == target;
        convention_probe.lhs_terms += with_uconj.term_count();
        convention_probe.rhs_terms += target.term_count();

        let mut c = Checker::new(format!("antipode_{name}"));
        c.series(&with_uconj, &target);
        checks.push(c.finish());
    }

    let survivors: Vec<&str> = [
        (AntipodeConvention::UConj.tag(), uconj_all),
        (AntipodeConvention::UInvConj.tag(), uinv_all),
    ]
    .iter()
    .filter_map(|(t, ok)| ok.then_some(*t))
    .collect();
    checks.push(convention_probe.finish_variants(&survivors, None));

    Report::new(
        "hopf_axioms",
        {
            let mut p = base_params(ctx, params);
            p.push(("beta_list".into(), vecs_string(&beta_list)));
            p
        },
        checks,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_round_trip() {
        for id in SuiteId::all() {
            assert_eq!(SuiteId::parse(id.as_str()).unwrap(), id);
        }
        assert!(matches!(SuiteId::parse("nope"), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn twist_suite_passes_at_low_order() {
        let ctx = TwistContext::standard(3);
        let report = verify_twist(&ctx);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn lemma3_2_smoke() {
        let ctx = TwistContext::standard(3);
        let params = SuiteParams {
            a_list: Some(vec![Rational::zero(), Rational::new(1, 2).unwrap()]),
            d_list: Some(vec![Rational::one()]),
            ..SuiteParams::default()
        };
        let report = run_suite(SuiteId::Lemma3_2, &ctx, &params);
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(
            report.find("plain_F_sign").unwrap().status,
            CheckStatus::ResolvedVariant("positive".into())
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let ctx = TwistContext::standard(3);
        let params = SuiteParams::seeded(7);
        let r1 = run_suite(SuiteId::Lemma3_1, &ctx, &params).render_json();
        let r2 = run_suite(SuiteId::Lemma3_1, &ctx, &params).render_json();
        assert_eq!(r1, r2);
    }
}
