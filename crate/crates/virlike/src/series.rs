//! Truncated formal power series with coefficients in tensor powers of the
//! enveloping algebra: elements of U^{(x)k}[[t]] modulo t^{N+1}.
//!
//! Terms are stored as a flat sparse map from (t-degree, k-tuple of normal
//! monomials) to rational coefficients, which keeps the arity-3 cocycle check
//! to a single term-merging pass. The truncation order is fixed per value;
//! combining series of different arity or order is an error, never a silent
//! re-truncation.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{mul_monomials, AlgElement, PbwMonomial};
use crate::hopf;
use crate::scalar::{binom_general, Rational};
use crate::Error;

/// One of the classical structure maps, applied slotwise to a tensor series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructureMap {
    /// The primitive coproduct, raising the arity by one.
    CoproductZero,
    /// The counit, absorbing a slot into the coefficient.
    CounitZero,
    /// The antipode.
    AntipodeZero,
    Identity,
}

type SeriesKey = (usize, Vec<PbwMonomial>);

/// A truncated series whose degree-d coefficient lives in the k-fold tensor
/// power of the enveloping algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesTensor {
    arity: usize,
    order: usize,
    terms: BTreeMap<SeriesKey, Rational>,
}

impl SeriesTensor {
    pub fn zero(arity: usize, order: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        SeriesTensor { arity, order, terms: BTreeMap::new() }
    }

    pub fn unit(arity: usize, order: usize) -> Self {
        let mut s = SeriesTensor::zero(arity, order);
        s.add_term(0, vec![PbwMonomial::unit(); arity], Rational::one());
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SeriesKey, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, degree: usize, tuple: Vec<PbwMonomial>, c: Rational) {
        if c.is_zero() || degree > self.order {
            return;
        }
        debug_assert_eq!(tuple.len(), self.arity);
        match self.terms.entry((degree, tuple)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// The t-degree-0 tensor with `x` in slot `slot` (1-based) and 1 elsewhere.
    pub fn embed(x: &AlgElement, arity: usize, slot: usize, order: usize) -> Result<Self, Error> {
        if slot == 0 || slot > arity {
            return Err(Error::SlotOutOfRange { slot, arity });
        }
        let mut s = SeriesTensor::zero(arity, order);
        for (m, c) in x.terms() {
            let mut tuple = vec![PbwMonomial::unit(); arity];
            tuple[slot - 1] = m.clone();
            s.add_term(0, tuple, c.clone());
        }
        Ok(s)
    }

    /// Arity-1 embedding at t-degree 0.
    pub fn from_alg(x: &AlgElement, order: usize) -> Self {
        SeriesTensor::embed(x, 1, 1, order).expect("slot 1 of arity 1")
    }

    /// Outer product f1 (x) f2 (x) ... (x) fk placed at the given t-degree.
    pub fn tensor_at(degree: usize, factors: &[&AlgElement], order: usize) -> Self {
        let arity = factors.len();
        let mut s = SeriesTensor::zero(arity, order);
        if degree > order {
            return s;
        }
        let mut stack: Vec<(Vec<PbwMonomial>, Rational)> = vec![(Vec::new(), Rational::one())];
        for f in factors {
            let mut next = Vec::new();
            for (tuple, c) in &stack {
                for (m, k) in f.terms() {
                    let mut t = tuple.clone();
                    t.push(m.clone());
                    next.push((t, c * k));
                }
            }
            stack = next;
        }
        for (tuple, c) in stack {
            s.add_term(degree, tuple, c);
        }
        s
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SeriesTensor::zero(self.arity, self.order);
        }
        SeriesTensor {
            arity: self.arity,
            order: self.order,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by t^k, truncating beyond the order.
    pub fn shift_t(&self, k: usize) -> Self {
        let mut s = SeriesTensor::zero(self.arity, self.order);
        for ((d, tuple), c) in &self.terms {
            s.add_term(d + k, tuple.clone(), c.clone());
        }
        s
    }

    fn assert_compatible(&self, rhs: &SeriesTensor) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in series addition");
        assert_eq!(self.order, rhs.order, "order mismatch in series addition");
    }

    pub fn add(&self, rhs: &SeriesTensor) -> SeriesTensor {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for ((d, tuple), c) in &rhs.terms {
            out.add_term(*d, tuple.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SeriesTensor) -> SeriesTensor {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for ((d, tuple), c) in &rhs.terms {
            out.add_term(*d, tuple.clone(), -c);
        }
        out
    }

    /// Slotwise product; t-degrees add and everything beyond the order is cut.
    pub fn multiply(&self, rhs: &SeriesTensor) -> Result<SeriesTensor, Error> {
        if self.arity != rhs.arity {
            return Err(Error::ArityMismatch(self.arity, rhs.arity));
        }
        if self.order != rhs.order {
            return Err(Error::OrderMismatch(self.order, rhs.order));
        }
        let mut out = SeriesTensor::zero(self.arity, self.order);
        for ((d1, t1), c1) in &self.terms {
            for ((d2, t2), c2) in &rhs.terms {
                let d = d1 + d2;
                if d > self.order {
                    continue;
                }
                let coeff = c1 * c2;
                // Distribute the per-slot normal-form products.
                let mut stack: Vec<(Vec<PbwMonomial>, Rational)> =
                    vec![(Vec::with_capacity(self.arity), coeff)];
                for (m1, m2) in t1.iter().zip(t2.iter()) {
                    let prod = mul_monomials(m1, m2);
                    let mut next = Vec::with_capacity(stack.len() * prod.term_count().max(1));
                    for (tuple, c) in &stack {
                        for (m, k) in prod.terms() {
                            let mut t = tuple.clone();
                            t.push(m.clone());
                            next.push((t, c * k));
                        }
                    }
                    stack = next;
                    if stack.is_empty() {
                        break;
                    }
                }
                for (tuple, c) in stack {
                    out.add_term(d, tuple, c);
                }
            }
        }
        Ok(out)
    }

    /// The t-degree-0 part as a series of the same arity and order.
    pub fn head(&self) -> SeriesTensor {
        let mut s = SeriesTensor::zero(self.arity, self.order);
        for ((d, tuple), c) in &self.terms {
            if *d == 0 {
                s.add_term(0, tuple.clone(), c.clone());
            }
        }
        s
    }

    /// Geometric-series inverse; requires the constant term to be the unit
    /// tensor.
    pub fn invert(&self) -> Result<SeriesTensor, Error> {
        if self.head() != SeriesTensor::unit(self.arity, self.order) {
            return Err(Error::NonUnitConstantTerm);
        }
        let delta = SeriesTensor::unit(self.arity, self.order).sub(self);
        let mut acc = SeriesTensor::unit(self.arity, self.order);
        let mut pow = SeriesTensor::unit(self.arity, self.order);
        for _ in 1..=self.order {
            pow = pow.multiply(&delta)?;
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow);
        }
        Ok(acc)
    }

    /// Applies a structure map to one slot of every term. The coproduct grows
    /// the arity by one, the counit shrinks it by one (arity must stay >= 1),
    /// antipode and identity preserve it.
    pub fn apply_in_slot(&self, slot: usize, map: StructureMap) -> Result<SeriesTensor, Error> {
        if slot == 0 || slot > self.arity {
            return Err(Error::SlotOutOfRange { slot, arity: self.arity });
        }
        let j = slot - 1;
        match map {
            StructureMap::Identity => Ok(self.clone()),
            StructureMap::CounitZero => {
                if self.arity < 2 {
                    return Err(Error::CounitArity);
                }
                let mut out = SeriesTensor::zero(self.arity - 1, self.order);
                for ((d, tuple), c) in &self.terms {
                    if !tuple[j].is_unit() {
                        continue;
                    }
                    let mut t = tuple.clone();
                    t.remove(j);
                    out.add_term(*d, t, c.clone());
                }
                Ok(out)
            }
            StructureMap::AntipodeZero => {
                let mut out = SeriesTensor::zero(self.arity, self.order);
                for ((d, tuple), c) in &self.terms {
                    let image = hopf::antipode0_monomial(&tuple[j]);
                    for (m, k) in image.terms() {
                        let mut t = tuple.clone();
                        t[j] = m.clone();
                        out.add_term(*d, t, c * k);
                    }
                }
                Ok(out)
            }
            StructureMap::CoproductZero => {
                let mut out = SeriesTensor::zero(self.arity + 1, self.order);
                for ((d, tuple), c) in &self.terms {
                    for (left, right, mult) in hopf::coproduct0_splits(&tuple[j]) {
                        let mut t = Vec::with_capacity(self.arity + 1);
                        t.extend_from_slice(&tuple[..j]);
                        t.push(left);
                        t.push(right);
                        t.extend_from_slice(&tuple[j + 1..]);
                        out.add_term(*d, t, c * &mult);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Multiplies the two slots of an arity-2 series together in the algebra.
    pub fn mu_contract(&self) -> Result<SeriesTensor, Error> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch(self.arity, 2));
        }
        let mut out = SeriesTensor::zero(1, self.order);
        for ((d, tuple), c) in &self.terms {
            let prod = mul_monomials(&tuple[0], &tuple[1]);
            for (m, k) in prod.terms() {
                out.add_term(*d, vec![m.clone()], c * k);
            }
        }
        Ok(out)
    }

    /// Tensor concatenation: arities add, t-degrees add.
    pub fn tensor(&self, rhs: &SeriesTensor) -> Result<SeriesTensor, Error> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch(self.order, rhs.order));
        }
        let mut out = SeriesTensor::zero(self.arity + rhs.arity, self.order);
        for ((d1, t1), c1) in &self.terms {
            for ((d2, t2), c2) in &rhs.terms {
                if d1 + d2 > self.order {
                    continue;
                }
                let mut t = Vec::with_capacity(self.arity + rhs.arity);
                t.extend_from_slice(t1);
                t.extend_from_slice(t2);
                out.add_term(d1 + d2, t, c1 * c2);
            }
        }
        Ok(out)
    }

    /// The arity-1 series collapsed back to an element, if it is concentrated
    /// in t-degree 0.
    pub fn degree0_alg(&self) -> Option<AlgElement> {
        if self.arity != 1 {
            return None;
        }
        let mut e = AlgElement::zero();
        for ((d, tuple), c) in &self.terms {
            if *d != 0 {
                return None;
            }
            e.add_term(tuple[0].clone(), c.clone());
        }
        Some(e)
    }

    /// Report rendering: one `t^d · m1 ⊗ m2 ⊗ ... : coeff` line per term,
    /// sorted by (t-degree, slotwise monomial order).
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut lines = Vec::with_capacity(self.terms.len());
        for ((d, tuple), c) in &self.terms {
            let slots = tuple
                .iter()
                .map(PbwMonomial::render_plain)
                .collect::<Vec<_>>()
                .join(" ⊗ ");
            lines.push(format!("t^{d} · {slots} : {c}"));
        }
        lines.join("\n")
    }
}

impl fmt::Debug for SeriesTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The binomial series (1 - x t)^b = sum_m C(b, m) (-1)^m x^m t^m, defined
/// for any rational exponent b.
pub fn binomial_series(x: &AlgElement, b: &Rational, order: usize) -> SeriesTensor {
    let mut s = SeriesTensor::zero(1, order);
    let mut xp = AlgElement::unit();
    for m in 0..=order {
        if m > 0 {
            xp = xp.multiply(x);
        }
        let sign = if m % 2 == 0 { Rational::one() } else { Rational::from_int(-1) };
        let coeff = &binom_general(b, m) * &sign;
        if coeff.is_zero() {
            continue;
        }
        for (mono, c) in xp.terms() {
            s.add_term(m, vec![mono.clone()], c * &coeff);
        }
    }
    s
}
