//! PBW-normal-form arithmetic in the enveloping algebra of a generalized
//! Virasoro-like Lie algebra.
//!
//! The Lie algebra has basis {L_g : g in the lattice, g != 0} together with
//! two commuting degree operators d1, d2, and brackets
//!
//! ```text
//! [L_a, L_b] = (a1*b2 - a2*b1) L_{a+b},    [d_i, L_a] = a_i L_a,    [d1, d2] = 0,
//! ```
//!
//! where L_0 is read as zero wherever it appears. Monomials are kept in the
//! fixed order d1 <= d2 <= L_g (L-factors sorted lexicographically by
//! coordinates); `straighten` rewrites an arbitrary generator word into this
//! basis by swapping the leftmost out-of-order adjacent pair and emitting the
//! bracket correction. Each swap preserves the word with one fewer inversion
//! and adds a strictly shorter word, so the rewriting terminates.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{pairing, GroupVec, Rational};

/// A basis generator of the Lie algebra. `L(g)` with the zero vector is
/// accepted syntactically; any element built from it collapses to zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    D1,
    D2,
    L(GroupVec),
}

/// A PBW-normal monomial: d1^p d2^q L(g1) L(g2) ... with the L-factors
/// sorted non-decreasingly. The empty monomial is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    d1: u32,
    d2: u32,
    ls: Vec<GroupVec>,
}

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial { d1: 0, d2: 0, ls: Vec::new() }
    }

    /// Builds a monomial from exponents and L-factors; returns `None` when a
    /// zero vector sneaks in (the term is zero).
    pub fn new(d1: u32, d2: u32, mut ls: Vec<GroupVec>) -> Option<Self> {
        if ls.iter().any(GroupVec::is_zero) {
            return None;
        }
        ls.sort();
        Some(PbwMonomial { d1, d2, ls })
    }

    pub fn is_unit(&self) -> bool {
        self.d1 == 0 && self.d2 == 0 && self.ls.is_empty()
    }

    pub fn d1_exp(&self) -> u32 {
        self.d1
    }

    pub fn d2_exp(&self) -> u32 {
        self.d2
    }

    pub fn l_factors(&self) -> &[GroupVec] {
        &self.ls
    }

    /// Total generator length of the monomial.
    pub fn len(&self) -> usize {
        self.d1 as usize + self.d2 as usize + self.ls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The generator word spelling this monomial out in normal order.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.len());
        w.extend(std::iter::repeat_n(Generator::D1, self.d1 as usize));
        w.extend(std::iter::repeat_n(Generator::D2, self.d2 as usize));
        w.extend(self.ls.iter().cloned().map(Generator::L));
        w
    }

    /// Report rendering: factors space-separated, `1` for the unit.
    pub fn render_plain(&self) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.factor_strings().join(" ")
    }

    /// Grammar rendering: factors joined with `*`.
    pub fn render_expr(&self) -> String {
        self.factor_strings().join(" * ")
    }

    fn factor_strings(&self) -> Vec<String> {
        let mut parts = Vec::new();
        for (name, exp) in [("d1", self.d1), ("d2", self.d2)] {
            match exp {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{exp}")),
            }
        }
        let mut i = 0;
        while i < self.ls.len() {
            let mut j = i + 1;
            while j < self.ls.len() && self.ls[j] == self.ls[i] {
                j += 1;
            }
            let g = &self.ls[i];
            let base = format!("L({}, {})", g.x1, g.x2);
            if j - i == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{}", j - i));
            }
            i = j;
        }
        parts
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}

/// An element of the enveloping algebra: a finite rational linear combination
/// of PBW monomials, stored sparsely with no zero coefficients. Two elements
/// are equal exactly when their term maps coincide.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement { terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        AlgElement::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = AlgElement::zero();
        e.add_term(PbwMonomial::unit(), c);
        e
    }

    /// The element represented by a single generator; `L(0)` collapses to 0.
    pub fn generator(g: &Generator) -> Self {
        match g {
            Generator::D1 => AlgElement::from_monomial(PbwMonomial::new(1, 0, vec![]).unwrap()),
            Generator::D2 => AlgElement::from_monomial(PbwMonomial::new(0, 1, vec![]).unwrap()),
            Generator::L(v) => match PbwMonomial::new(0, 0, vec![v.clone()]) {
                Some(m) => AlgElement::from_monomial(m),
                None => AlgElement::zero(),
            },
        }
    }

    pub fn d1() -> Self {
        AlgElement::generator(&Generator::D1)
    }

    pub fn d2() -> Self {
        AlgElement::generator(&Generator::D2)
    }

    pub fn l(v: GroupVec) -> Self {
        AlgElement::generator(&Generator::L(v))
    }

    pub fn from_monomial(m: PbwMonomial) -> Self {
        let mut e = AlgElement::zero();
        e.add_term(m, Rational::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&PbwMonomial::unit())
    }

    pub(crate) fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
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

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return AlgElement::zero();
        }
        AlgElement {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn add_scalar(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.add_term(PbwMonomial::unit(), c.clone());
        out
    }

    pub fn multiply(&self, other: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = mul_monomials(m1, m2);
                let c = c1 * c2;
                for (m, k) in prod.terms {
                    out.add_term(m, &k * &c);
                }
            }
        }
        out
    }

    /// Commutator xy - yx.
    pub fn bracket(&self, other: &AlgElement) -> AlgElement {
        &self.multiply(other) - &other.multiply(self)
    }

    /// k-fold product; the empty product is the unit.
    pub fn power(&self, k: usize) -> AlgElement {
        let mut acc = AlgElement::unit();
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Canonical expression rendering, parseable by the expression grammar.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_unit() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.render_expr());
            } else {
                out.push_str(&format!("{} * {}", mag, m.render_expr()));
            }
        }
        out
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl std::ops::Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.scale(&Rational::from_int(-1))
    }
}

impl std::ops::Mul for &AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &AlgElement) -> AlgElement {
        self.multiply(rhs)
    }
}

/// Bracket of two single generators, as (coefficient, monomial-or-collapse).
/// Returns `None` for a vanishing bracket.
fn generator_bracket(a: &Generator, b: &Generator) -> Option<(Rational, Option<Generator>)> {
    match (a, b) {
        (Generator::D1, Generator::D2) | (Generator::D2, Generator::D1) => None,
        (Generator::D1, Generator::L(v)) => Some((v.x1.clone(), Some(Generator::L(v.clone())))),
        (Generator::D2, Generator::L(v)) => Some((v.x2.clone(), Some(Generator::L(v.clone())))),
        (Generator::L(v), Generator::D1) => Some((-&v.x1, Some(Generator::L(v.clone())))),
        (Generator::L(v), Generator::D2) => Some((-&v.x2, Some(Generator::L(v.clone())))),
        (Generator::L(v), Generator::L(w)) => {
            let c = pairing(v, w);
            if c.is_zero() {
                return None;
            }
            let s = v.add(w);
            if s.is_zero() {
                // [L_v, L_{-v}] carries L_0, which is zero.
                return None;
            }
            Some((c, Some(Generator::L(s))))
        }
        _ => None,
    }
}

/// Rewrites a generator word into PBW normal form. Words containing L of the
/// zero vector contribute nothing.
pub fn straighten(word: &[Generator]) -> AlgElement {
    if word
        .iter()
        .any(|g| matches!(g, Generator::L(v) if v.is_zero()))
    {
        return AlgElement::zero();
    }
    let mut pending: BTreeMap<Vec<Generator>, Rational> = BTreeMap::new();
    pending.insert(word.to_vec(), Rational::one());
    let mut out = AlgElement::zero();

    while let Some((w, c)) = pending.pop_first() {
        match first_inversion(&w) {
            None => out.add_term(monomial_from_sorted(&w), c),
            Some(i) => {
                // w[i] > w[i+1]: w = u (g h) v -> u (h g) v + u [g,h] v.
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                merge_into(&mut pending, swapped, c.clone());
                if let Some((k, rep)) = generator_bracket(&w[i], &w[i + 1]) {
                    let mut shorter: Vec<Generator> = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    if let Some(g) = rep {
                        shorter.push(g);
                    }
                    shorter.extend_from_slice(&w[i + 2..]);
                    merge_into(&mut pending, shorter, &c * &k);
                }
            }
        }
    }
    out
}

fn merge_into(pending: &mut BTreeMap<Vec<Generator>, Rational>, w: Vec<Generator>, c: Rational) {
    if c.is_zero() {
        return;
    }
    match pending.entry(w) {
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

fn first_inversion(w: &[Generator]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1])
}

fn monomial_from_sorted(w: &[Generator]) -> PbwMonomial {
    let mut d1 = 0u32;
    let mut d2 = 0u32;
    let mut ls = Vec::new();
    for g in w {
        match g {
            Generator::D1 => d1 += 1,
            Generator::D2 => d2 += 1,
            Generator::L(v) => ls.push(v.clone()),
        }
    }
    PbwMonomial::new(d1, d2, ls).expect("zero vectors filtered before straightening")
}

/// Product of two normal monomials; the concatenated word is re-straightened.
pub(crate) fn mul_monomials(a: &PbwMonomial, b: &PbwMonomial) -> AlgElement {
    if a.is_unit() {
        return AlgElement::from_monomial(b.clone());
    }
    if b.is_unit() {
        return AlgElement::from_monomial(a.clone());
    }
    let mut w = a.word();
    w.extend(b.word());
    straighten(&w)
}

/// Ordered product (x+a)(x+a+1)...(x+a+n-1); the empty product is the unit.
pub fn rising_factorial(x: &AlgElement, a: &Rational, n: usize) -> AlgElement {
    let mut acc = AlgElement::unit();
    for k in 0..n {
        let factor = x.add_scalar(&(a + &Rational::from_int(k as i64)));
        acc = acc.multiply(&factor);
    }
    acc
}

/// Ordered product (x+a)(x+a-1)...(x+a-n+1); the empty product is the unit.
pub fn falling_factorial(x: &AlgElement, a: &Rational, n: usize) -> AlgElement {
    let mut acc = AlgElement::unit();
    for k in 0..n {
        let factor = x.add_scalar(&(a - &Rational::from_int(k as i64)));
        acc = acc.multiply(&factor);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(x1: i64, x2: i64) -> GroupVec {
        GroupVec::from_ints(x1, x2)
    }

    fn gl(x1: i64, x2: i64) -> Generator {
        Generator::L(lv(x1, x2))
    }

    #[test]
    fn straighten_empty_word_is_unit() {
        assert_eq!(straighten(&[]), AlgElement::unit());
    }

    #[test]
    fn straighten_swaps_l_pair() {
        // L(1,0) L(0,1) = L(0,1) L(1,0) + L(1,1)
        let got = straighten(&[gl(1, 0), gl(0, 1)]);
        let mut want = AlgElement::from_monomial(
            PbwMonomial::new(0, 0, vec![lv(0, 1), lv(1, 0)]).unwrap(),
        );
        want.add_term(PbwMonomial::new(0, 0, vec![lv(1, 1)]).unwrap(), Rational::one());
        assert_eq!(got, want);
    }

    #[test]
    fn straighten_moves_d_left() {
        // L(1,0) d1 = d1 L(1,0) - L(1,0)
        let got = straighten(&[gl(1, 0), Generator::D1]);
        let mut want = AlgElement::from_monomial(PbwMonomial::new(1, 0, vec![lv(1, 0)]).unwrap());
        want.add_term(
            PbwMonomial::new(0, 0, vec![lv(1, 0)]).unwrap(),
            Rational::from_int(-1),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn straighten_drops_l_zero_words() {
        assert!(straighten(&[gl(0, 0)]).is_zero());
        assert!(straighten(&[Generator::D1, gl(0, 0), gl(1, 1)]).is_zero());
        assert!(AlgElement::l(GroupVec::zero()).is_zero());
    }

    #[test]
    fn straighten_idempotent_on_normal_words() {
        let monos = [
            PbwMonomial::unit(),
            PbwMonomial::new(2, 1, vec![lv(-1, 2), lv(0, 1), lv(0, 1)]).unwrap(),
            PbwMonomial::new(0, 3, vec![lv(1, 1)]).unwrap(),
        ];
        for m in monos {
            assert_eq!(straighten(&m.word()), AlgElement::from_monomial(m));
        }
    }

    #[test]
    fn multiply_unit_law_and_commuting_ds() {
        let x = straighten(&[gl(1, 0), Generator::D1, gl(0, 1)]);
        assert_eq!(AlgElement::unit().multiply(&x), x);
        assert_eq!(x.multiply(&AlgElement::unit()), x);
        let d1d2 = AlgElement::d1().multiply(&AlgElement::d2());
        assert_eq!(d1d2, AlgElement::from_monomial(PbwMonomial::new(1, 1, vec![]).unwrap()));
        assert_eq!(d1d2, AlgElement::d2().multiply(&AlgElement::d1()));
    }

    #[test]
    fn multiply_matches_straighten_oracle() {
        let x = AlgElement::l(lv(1, 0));
        let y = AlgElement::l(lv(0, 1));
        assert_eq!(x.multiply(&y), straighten(&[gl(1, 0), gl(0, 1)]));
    }

    #[test]
    fn bracket_examples() {
        let la = AlgElement::l(lv(1, 0));
        let lb = AlgElement::l(lv(0, 1));
        assert_eq!(la.bracket(&lb), AlgElement::l(lv(1, 1)));
        let d1 = AlgElement::d1();
        let l23 = AlgElement::l(lv(2, 3));
        assert_eq!(d1.bracket(&l23), l23.scale(&Rational::from_int(2)));
        assert!(la.bracket(&la).is_zero());
    }

    #[test]
    fn bracket_vanishes_on_opposite_and_parallel_vectors() {
        let la = AlgElement::l(lv(2, -1));
        let lb = AlgElement::l(lv(-2, 1));
        assert!(la.bracket(&lb).is_zero());
        let lc = AlgElement::l(lv(4, -2));
        assert!(la.bracket(&lc).is_zero());
        assert!(AlgElement::d1().bracket(&AlgElement::d2()).is_zero());
    }

    #[test]
    fn power_examples() {
        let x = straighten(&[Generator::D1, gl(1, 1)]);
        assert_eq!(x.power(0), AlgElement::unit());
        let la = AlgElement::l(lv(1, 0));
        assert_eq!(
            la.power(2),
            AlgElement::from_monomial(PbwMonomial::new(0, 0, vec![lv(1, 0), lv(1, 0)]).unwrap())
        );
        // (d1 + 1)^2 = d1^2 + 2 d1 + 1
        let e = AlgElement::d1().add_scalar(&Rational::one());
        let mut want = AlgElement::from_monomial(PbwMonomial::new(2, 0, vec![]).unwrap());
        want.add_term(PbwMonomial::new(1, 0, vec![]).unwrap(), Rational::from_int(2));
        want.add_term(PbwMonomial::unit(), Rational::one());
        assert_eq!(e.power(2), want);
    }

    #[test]
    fn factorial_examples() {
        let d1 = AlgElement::d1();
        assert_eq!(rising_factorial(&d1, &Rational::from_int(7), 0), AlgElement::unit());
        assert_eq!(falling_factorial(&d1, &Rational::from_int(7), 0), AlgElement::unit());
        // d1 (d1 + 1) = d1^2 + d1
        let mut want = AlgElement::from_monomial(PbwMonomial::new(2, 0, vec![]).unwrap());
        want.add_term(PbwMonomial::new(1, 0, vec![]).unwrap(), Rational::one());
        assert_eq!(rising_factorial(&d1, &Rational::zero(), 2), want);
        // d1 (d1 - 1) = d1^2 - d1
        let mut want = AlgElement::from_monomial(PbwMonomial::new(2, 0, vec![]).unwrap());
        want.add_term(PbwMonomial::new(1, 0, vec![]).unwrap(), Rational::from_int(-1));
        assert_eq!(falling_factorial(&d1, &Rational::zero(), 2), want);
        // single rising factor x + 1
        assert_eq!(
            rising_factorial(&d1, &Rational::one(), 1),
            AlgElement::d1().add_scalar(&Rational::one())
        );
    }

    #[test]
    fn falling_equals_shifted_rising() {
        // x_a^[m] = x_{a-m+1}^<m> for any element x.
        let x = straighten(&[Generator::D2, gl(1, 2)]);
        for m in 0..5usize {
            for a in [Rational::zero(), Rational::new(3, 2).unwrap(), Rational::from_int(-2)] {
                let lhs = falling_factorial(&x, &a, m);
                let shift = &a - &Rational::from_int(m as i64 - 1);
                assert_eq!(lhs, rising_factorial(&x, &shift, m));
            }
        }
    }

    #[test]
    fn render_is_canonical() {
        let mut e = AlgElement::from_monomial(PbwMonomial::new(1, 0, vec![lv(1, 0)]).unwrap());
        e.add_term(PbwMonomial::unit(), Rational::new(-3, 2).unwrap());
        assert_eq!(e.render(), "-3/2 + d1 * L(1, 0)");
        assert_eq!(AlgElement::zero().render(), "0");
        let sq = AlgElement::l(lv(1, 0)).power(2).scale(&Rational::from_int(2));
        assert_eq!(sq.render(), "2 * L(1, 0)^2");
    }
}
