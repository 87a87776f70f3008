use super::{FieldElem, Monomial, PrimeField, TermOrder};
use crate::error::{Error, Result};
use std::cmp::Ordering;

/// A polynomial ring `F_p[x_1..x_N]` together with its active term order and
/// variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    order: TermOrder,
}

/// Terms in strictly decreasing order under the ring's term order, no zero
/// coefficients. Only meaningful relative to the ring that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, FieldElem)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<FieldElem> {
        self.terms.first().map(|t| t.1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Maximal total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// `u - v` with both terms monic.
    pub fn is_pure_binomial(&self, field: &PrimeField) -> bool {
        self.terms.len() == 2
            && self.terms[0].1 == 1
            && self.terms[1].1 == field.neg(1)
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0.nvars())
    }
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>, order: TermOrder) -> PolyRing {
        PolyRing {
            field,
            names,
            order,
        }
    }

    /// Variables named `x1..xN`.
    pub fn with_generic_names(field: PrimeField, nvars: usize, order: TermOrder) -> PolyRing {
        let names = (1..=nvars).map(|i| format!("x{i}")).collect();
        PolyRing::new(field, names, order)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: TermOrder) -> PolyRing {
        PolyRing {
            order,
            ..self.clone()
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn check(&self, f: &Polynomial) -> Result<()> {
        match f.nvars() {
            Some(n) if n != self.nvars() => Err(Error::RingMismatch),
            _ => Ok(()),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.monomial(Monomial::one(self.nvars()))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial { terms: vec![(m, 1)] }
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, FieldElem)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % self.field.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| t.1 == 0) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Trusts that `terms` are already strictly decreasing and nonzero.
    pub(crate) fn from_sorted_terms(&self, terms: Vec<(Monomial, FieldElem)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| self.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { terms }
    }

    /// `f` without its first `k` terms.
    pub(crate) fn from_sorted_tail(&self, f: &Polynomial, k: usize) -> Polynomial {
        Polynomial {
            terms: f.terms[k.min(f.terms.len())..].to_vec(),
        }
    }

    /// `u - v`.
    pub fn binomial(&self, u: Monomial, v: Monomial) -> Polynomial {
        let neg1 = self.field.neg(1);
        self.from_terms(vec![(u, 1), (v, neg1)])
    }

    /// Re-sorts a polynomial produced under another order.
    pub fn adopt(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, g, 1, None)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, g, self.field.neg(1), None)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: FieldElem) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(*a, c)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_coefficient() {
            None | Some(1) => f.clone(),
            Some(c) => self.scale(f, self.field.inv(c)),
        }
    }

    /// `f + c * m * g`, with `m = 1` when absent.
    pub fn add_scaled(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        c: FieldElem,
        m: Option<&Monomial>,
    ) -> Polynomial {
        if c == 0 {
            return f.clone();
        }
        let fl = &self.field;
        let shifted = |t: &(Monomial, FieldElem)| -> (Monomial, FieldElem) {
            let mm = match m {
                Some(m) => t.0.mul(m),
                None => t.0.clone(),
            };
            (mm, fl.mul(t.1, c))
        };
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let mut gj = g.terms.first().map(shifted);
        while i < f.terms.len() || gj.is_some() {
            match (&f.terms.get(i), &gj) {
                (Some(a), Some(b)) => match self.cmp(&a.0, &b.0) {
                    Ordering::Greater => {
                        out.push((*a).clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(gj.take().unwrap());
                        j += 1;
                        gj = g.terms.get(j).map(shifted);
                    }
                    Ordering::Equal => {
                        let s = fl.add(a.1, b.1);
                        if s != 0 {
                            out.push((a.0.clone(), s));
                        }
                        i += 1;
                        j += 1;
                        gj = g.terms.get(j).map(shifted);
                    }
                },
                (Some(a), None) => {
                    out.push((*a).clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(gj.take().unwrap());
                    j += 1;
                    gj = g.terms.get(j).map(shifted);
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: FieldElem) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), self.field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &g.terms {
            acc = self.add(&acc, &self.mul_term(f, m, *c));
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, f);
        }
        r
    }

    /// Substitutes `images[i]` for variable `i`; the images live in `target`.
    pub fn substitute(&self, f: &Polynomial, images: &[Polynomial], target: &PolyRing) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &f.terms {
            let mut t = target.scale(&target.one(), *c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = target.mul(&t, &target.pow(&images[i], e as u32));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    /// The S-polynomial of two monic-or-not polynomials.
    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
            return Polynomial::zero();
        };
        let l = lf.lcm(lg);
        let cf = self.field.inv(f.terms[0].1);
        let cg = self.field.inv(g.terms[0].1);
        let a = self.mul_term(f, &lf.quotient_of(&l), cf);
        self.add_scaled(&a, g, self.field.neg(cg), Some(&lg.quotient_of(&l)))
    }

    pub fn format(&self, f: &Polynomial) -> String {
        super::text::format_polynomial(self, f)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        super::text::parse_polynomial(self, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::with_generic_names(PrimeField::new(32003).unwrap(), n, TermOrder::degrevlex())
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, n), 0u32..32003), 0..6)
    }

    fn build(r: &PolyRing, t: Vec<(Vec<u16>, u32)>) -> Polynomial {
        r.from_terms(t.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)).collect())
    }

    #[test]
    fn cancellation() {
        let r = ring(2);
        let f = r.add(&r.var(0), &r.var(1));
        assert!(r.sub(&f, &f).is_zero());
        let sq = r.mul(&f, &f);
        assert_eq!(sq.len(), 3);
        assert_eq!(r.format(&sq), "x1^2 + 2*x1*x2 + x2^2");
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            let r = ring(3);
            let (a, b, c) = (build(&r, a), build(&r, b), build(&r, c));
            prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
            prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
            let s = r.add(&a, &b);
            prop_assert!(s.terms().windows(2).all(|w| r.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
            prop_assert!(s.terms().iter().all(|t| t.1 != 0));
        }
    }
}
