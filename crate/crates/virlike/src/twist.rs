//! The twist family, the cocycle verification, the conjugation-twisted
//! coproduct/antipode, and the closed forms they must match.
//!
//! A context fixes T = a1*d1 + a2*d2 and a lattice vector alpha with
//! [T, L_alpha] = L_alpha (that is, a1*alpha1 + a2*alpha2 = 1), together with
//! the truncation order. The order-i coefficient of the twist couples the
//! i-th falling factorial of T with the i-th power of L_alpha.

use crate::algebra::{falling_factorial, rising_factorial, AlgElement};
use crate::hopf::{antipode0, coproduct0};
use crate::scalar::{pairing, weight, GroupVec, Rational};
use crate::series::{binomial_series, SeriesTensor, StructureMap};
use crate::Error;

/// Which element conjugates the classical antipode: the slot-contraction of
/// the twist itself, or of its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AntipodeConvention {
    /// S(h) = w S0(h) w^{-1} with w = mu(Id (x) S0)(twist).
    UConj,
    /// S(h) = w S0(h) w^{-1} with w = mu(S0 (x) Id)(inverse twist).
    UInvConj,
}

impl AntipodeConvention {
    pub fn tag(&self) -> &'static str {
        match self {
            AntipodeConvention::UConj => "u-conj",
            AntipodeConvention::UInvConj => "u-inv-conj",
        }
    }
}

/// Which power of T enters the correction terms of the closed coproduct.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoproductVariant {
    /// Plain powers T^i.
    PlainPower,
    /// Shifted rising factorials T^<i>.
    ShiftedFactorial,
}

impl CoproductVariant {
    pub fn tag(&self) -> &'static str {
        match self {
            CoproductVariant::PlainPower => "plain-power",
            CoproductVariant::ShiftedFactorial => "shifted-factorial",
        }
    }
}

/// The data defining one twist: T = a1*d1 + a2*d2, the vector alpha, and the
/// truncation order. Admissibility a1*alpha1 + a2*alpha2 = 1 is checked at
/// construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistContext {
    a1: Rational,
    a2: Rational,
    alpha: GroupVec,
    order: usize,
}

impl TwistContext {
    pub fn new(a1: Rational, a2: Rational, alpha: GroupVec, order: usize) -> Result<Self, Error> {
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        let w = weight(&a1, &a2, &alpha);
        if !w.is_one() {
            return Err(Error::InadmissibleContext { got: w.to_string() });
        }
        Ok(TwistContext { a1, a2, alpha, order })
    }

    /// Default desk-scale context: T = d1, alpha = (1, 0).
    pub fn standard(order: usize) -> Self {
        TwistContext::new(
            Rational::one(),
            Rational::zero(),
            GroupVec::from_ints(1, 0),
            order,
        )
        .expect("standard context is admissible")
    }

    pub fn with_order(&self, order: usize) -> Self {
        TwistContext { order, ..self.clone() }
    }

    pub fn a1(&self) -> &Rational {
        &self.a1
    }

    pub fn a2(&self) -> &Rational {
        &self.a2
    }

    pub fn alpha(&self) -> &GroupVec {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn t_element(&self) -> AlgElement {
        &AlgElement::d1().scale(&self.a1) + &AlgElement::d2().scale(&self.a2)
    }

    pub fn l_alpha(&self) -> AlgElement {
        AlgElement::l(self.alpha.clone())
    }

    /// d_j for j = 1, 2.
    pub fn d_generator(&self, j: usize) -> AlgElement {
        match j {
            1 => AlgElement::d1(),
            2 => AlgElement::d2(),
            _ => panic!("generator index must be 1 or 2"),
        }
    }

    /// alpha_j for j = 1, 2.
    pub fn alpha_coord(&self, j: usize) -> Rational {
        match j {
            1 => self.alpha.x1.clone(),
            2 => self.alpha.x2.clone(),
            _ => panic!("generator index must be 1 or 2"),
        }
    }

    /// The weight b = a1*b1 + a2*b2 of a lattice vector.
    pub fn weight_of(&self, beta: &GroupVec) -> Rational {
        weight(&self.a1, &self.a2, beta)
    }

    /// c_i = pairing(alpha, beta)^i / i!, with c_0 = 1.
    pub fn c_coeff(&self, beta: &GroupVec, i: usize) -> Rational {
        let mut p = Rational::one();
        let base = pairing(&self.alpha, beta);
        for _ in 0..i {
            p = &p * &base;
        }
        &p * &Rational::inv_factorial(i)
    }

    pub fn t_falling(&self, a: &Rational, n: usize) -> AlgElement {
        falling_factorial(&self.t_element(), a, n)
    }

    pub fn t_rising(&self, a: &Rational, n: usize) -> AlgElement {
        rising_factorial(&self.t_element(), a, n)
    }

    /// The shifted twist: sum_i (-1)^i/i! T_a^[i] (x) L_alpha^i t^i.
    pub fn curly_f(&self, a: &Rational) -> SeriesTensor {
        let mut s = SeriesTensor::zero(2, self.order);
        let mut lp = AlgElement::unit();
        for i in 0..=self.order {
            if i > 0 {
                lp = lp.multiply(&self.l_alpha());
            }
            let sign = if i % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
            let c = &sign * &Rational::inv_factorial(i);
            let left = self.t_falling(a, i);
            s = s.add(&SeriesTensor::tensor_at(i, &[&left, &lp], self.order).scale(&c));
        }
        s
    }

    /// Its inverse family: sum_i 1/i! T_a^<i> (x) L_alpha^i t^i.
    pub fn plain_f(&self, a: &Rational) -> SeriesTensor {
        let mut s = SeriesTensor::zero(2, self.order);
        let mut lp = AlgElement::unit();
        for i in 0..=self.order {
            if i > 0 {
                lp = lp.multiply(&self.l_alpha());
            }
            let c = Rational::inv_factorial(i);
            let left = self.t_rising(a, i);
            s = s.add(&SeriesTensor::tensor_at(i, &[&left, &lp], self.order).scale(&c));
        }
        s
    }

    /// The alternating-sign reading of the same display; kept only so the
    /// verifier can show it is not the inverse of the twist.
    pub fn plain_f_displayed(&self, a: &Rational) -> SeriesTensor {
        let mut s = SeriesTensor::zero(2, self.order);
        let mut lp = AlgElement::unit();
        for i in 0..=self.order {
            if i > 0 {
                lp = lp.multiply(&self.l_alpha());
            }
            let sign = if i % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
            let c = &sign * &Rational::inv_factorial(i);
            let left = self.t_rising(a, i);
            s = s.add(&SeriesTensor::tensor_at(i, &[&left, &lp], self.order).scale(&c));
        }
        s
    }

    /// u_a = sum_i (-1)^i/i! T_{-a}^[i] L_alpha^i t^i (arity 1).
    pub fn u_series(&self, a: &Rational) -> SeriesTensor {
        let mut s = SeriesTensor::zero(1, self.order);
        let mut lp = AlgElement::unit();
        for i in 0..=self.order {
            if i > 0 {
                lp = lp.multiply(&self.l_alpha());
            }
            let sign = if i % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
            let c = &sign * &Rational::inv_factorial(i);
            let x = self.t_falling(&-a, i).multiply(&lp);
            s = s.add(&SeriesTensor::from_alg(&x, self.order).shift_t(i).scale(&c));
        }
        s
    }

    /// v_a = sum_i 1/i! T_a^[i] L_alpha^i t^i (arity 1).
    pub fn v_series(&self, a: &Rational) -> SeriesTensor {
        let mut s = SeriesTensor::zero(1, self.order);
        let mut lp = AlgElement::unit();
        for i in 0..=self.order {
            if i > 0 {
                lp = lp.multiply(&self.l_alpha());
            }
            let c = Rational::inv_factorial(i);
            let x = self.t_falling(a, i).multiply(&lp);
            s = s.add(&SeriesTensor::from_alg(&x, self.order).shift_t(i).scale(&c));
        }
        s
    }

    /// u_a rebuilt as mu (S0 (x) Id) applied to the inverse-twist family.
    pub fn u_from_mu(&self, a: &Rational) -> SeriesTensor {
        self.plain_f(a)
            .apply_in_slot(1, StructureMap::AntipodeZero)
            .expect("arity 2 has slot 1")
            .mu_contract()
            .expect("arity 2 contracts")
    }

    /// v_a rebuilt as mu (Id (x) S0) applied to the twist family.
    pub fn v_from_mu(&self, a: &Rational) -> SeriesTensor {
        self.curly_f(a)
            .apply_in_slot(2, StructureMap::AntipodeZero)
            .expect("arity 2 has slot 2")
            .mu_contract()
            .expect("arity 2 contracts")
    }

    /// The twisted coproduct by conjugation: twist * Delta_0(x) * inverse.
    pub fn twisted_coproduct(&self, x: &AlgElement) -> SeriesTensor {
        let f = self.curly_f(&Rational::zero());
        let finv = self.plain_f(&Rational::zero());
        f.multiply(&coproduct0(x, self.order))
            .expect("matching arity and order")
            .multiply(&finv)
            .expect("matching arity and order")
    }

    /// The twisted antipode by conjugation, under either convention.
    pub fn twisted_antipode(&self, x: &AlgElement, conv: AntipodeConvention) -> SeriesTensor {
        let w = match conv {
            AntipodeConvention::UConj => self.v_series(&Rational::zero()),
            AntipodeConvention::UInvConj => self.u_series(&Rational::zero()),
        };
        let w_inv = w.invert().expect("twist families start at 1");
        let mid = SeriesTensor::from_alg(&antipode0(x), self.order);
        w.multiply(&mid)
            .expect("arity 1 throughout")
            .multiply(&w_inv)
            .expect("arity 1 throughout")
    }

    /// Closed-form coproduct of L_beta:
    /// L_beta (x) (1 - L_a t)^b + sum_i (-1)^i X_i (x) (1 - L_a t)^{-i} L_{beta+i a} c_i t^i
    /// with X_i either T^i or T^<i> depending on the variant.
    pub fn closed_coproduct_l(
        &self,
        beta: &GroupVec,
        variant: CoproductVariant,
    ) -> Result<SeriesTensor, Error> {
        self.closed_coproduct_l_with_b(beta, variant, &self.weight_of(beta))
    }

    pub(crate) fn closed_coproduct_l_with_b(
        &self,
        beta: &GroupVec,
        variant: CoproductVariant,
        b: &Rational,
    ) -> Result<SeriesTensor, Error> {
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        let n = self.order;
        let l_beta = AlgElement::l(beta.clone());
        let mut total = SeriesTensor::from_alg(&l_beta, n)
            .tensor(&binomial_series(&self.l_alpha(), b, n))?;
        for i in 0..=n {
            let c_i = self.c_coeff(beta, i);
            if c_i.is_zero() {
                continue;
            }
            let x_i = match variant {
                CoproductVariant::PlainPower => self.t_element().power(i),
                CoproductVariant::ShiftedFactorial => self.t_rising(&Rational::zero(), i),
            };
            let shifted = AlgElement::l(beta.add(&self.alpha.scale(&Rational::from_int(i as i64))));
            let right = binomial_series(&self.l_alpha(), &Rational::from_int(-(i as i64)), n)
                .multiply(&SeriesTensor::from_alg(&shifted, n))?;
            let sign = if i % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
            let term = SeriesTensor::from_alg(&x_i, n)
                .tensor(&right)?
                .shift_t(i)
                .scale(&(&sign * &c_i));
            total = total.add(&term);
        }
        Ok(total)
    }

    /// Closed-form coproduct of d_j:
    /// d_j (x) 1 + 1 (x) d_j + alpha_j T (x) (1 - L_a t)^{-1} L_a t.
    pub fn closed_coproduct_d(&self, j: usize) -> SeriesTensor {
        let n = self.order;
        let dj = self.d_generator(j);
        let base = SeriesTensor::embed(&dj, 2, 1, n)
            .expect("slot 1 of arity 2")
            .add(&SeriesTensor::embed(&dj, 2, 2, n).expect("slot 2 of arity 2"));
        let geom = binomial_series(&self.l_alpha(), &Rational::from_int(-1), n)
            .multiply(&SeriesTensor::from_alg(&self.l_alpha(), n))
            .expect("arity 1")
            .shift_t(1);
        let correction = SeriesTensor::from_alg(&self.t_rising(&Rational::zero(), 1), n)
            .tensor(&geom)
            .expect("orders match")
            .scale(&self.alpha_coord(j));
        base.add(&correction)
    }

    /// Closed-form antipode of L_beta:
    /// -(1 - L_a t)^{-b} sum_i L_{beta+i a} c_i T_1^<i> t^i.
    pub fn closed_antipode_l(&self, beta: &GroupVec) -> Result<SeriesTensor, Error> {
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        let n = self.order;
        let b = self.weight_of(beta);
        let mut sum = SeriesTensor::zero(1, n);
        for i in 0..=n {
            let c_i = self.c_coeff(beta, i);
            if c_i.is_zero() {
                continue;
            }
            let shifted = AlgElement::l(beta.add(&self.alpha.scale(&Rational::from_int(i as i64))));
            let x = shifted.multiply(&self.t_rising(&Rational::one(), i));
            sum = sum.add(&SeriesTensor::from_alg(&x, n).shift_t(i).scale(&c_i));
        }
        let prefactor = binomial_series(&self.l_alpha(), &-&b, n);
        Ok(prefactor
            .multiply(&sum)
            .expect("arity 1")
            .scale(&Rational::from_int(-1)))
    }

    /// Closed-form antipode of d_j:
    /// alpha_j T (1 - L_a t)^{-1} (L_a t - L_a^2 t^2) - d_j, which telescopes
    /// to alpha_j T L_a t - d_j.
    pub fn closed_antipode_d(&self, j: usize) -> SeriesTensor {
        let n = self.order;
        let la = self.l_alpha();
        let inner = SeriesTensor::from_alg(&la, n)
            .shift_t(1)
            .sub(&SeriesTensor::from_alg(&la.power(2), n).shift_t(2));
        let geom = binomial_series(&la, &Rational::from_int(-1), n);
        let lead = SeriesTensor::from_alg(&self.t_element(), n)
            .multiply(&geom)
            .expect("arity 1")
            .multiply(&inner)
            .expect("arity 1")
            .scale(&self.alpha_coord(j));
        lead.sub(&SeriesTensor::from_alg(&self.d_generator(j), n))
    }
}
