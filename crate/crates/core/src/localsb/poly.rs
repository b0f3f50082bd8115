//! Sparse polynomials in `x, y` over a field, kept sorted by the local ordering.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Ring};
use crate::localsb::order::compare_local;
use crate::staircase::{format_monomial, Exponent};

/// Terms sorted from largest to smallest under [`compare_local`]; no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Exponent, E)>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Exponent, E)] {
        &self.terms
    }

    pub fn leading_exponent(&self) -> Option<Exponent> {
        self.terms.first().map(|t| t.0)
    }

    /// Maximal total degree of a term.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|((a, b), _)| a + b).max().unwrap_or(0)
    }

    /// `deg(f) - deg(Lt(f))`.
    pub fn ecart(&self) -> u32 {
        match self.terms.first() {
            Some(((a, b), _)) => self.degree() - (a + b),
            None => 0,
        }
    }
}

/// A term `c x^a y^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalTerm<E> {
    pub exponent: Exponent,
    pub coeff: E,
}

/// The maximal term of `f` under the local ordering.
pub fn leading_term<E: Clone>(f: &Poly<E>) -> Result<LocalTerm<E>> {
    f.terms
        .first()
        .map(|(e, c)| LocalTerm {
            exponent: *e,
            coeff: c.clone(),
        })
        .ok_or(Error::ZeroPolynomial)
}

/// Polynomial arithmetic over a field context.
#[derive(Debug, Clone)]
pub struct BivarRing<F> {
    pub field: F,
}

impl<F: Field> BivarRing<F> {
    pub fn new(field: F) -> Self {
        Self { field }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Exponent, F::Elem)>) -> Poly<F::Elem> {
        let mut acc: BTreeMap<Exponent, F::Elem> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(|| self.field.zero());
            *slot = self.field.add(slot, &c);
        }
        let mut terms: Vec<(Exponent, F::Elem)> =
            acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        terms.sort_by(|a, b| compare_local(b.0, a.0));
        Poly { terms }
    }

    /// `c x^a y^b`.
    pub fn monomial(&self, c: F::Elem, e: Exponent) -> Poly<F::Elem> {
        self.from_terms([(e, c)])
    }

    /// `a + scale * x^shift * b`, merging the two sorted term lists.
    pub fn add_scaled(
        &self,
        a: &Poly<F::Elem>,
        scale: &F::Elem,
        shift: Exponent,
        b: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut bi = b
            .terms
            .iter()
            .map(|((x, y), c)| ((x + shift.0, y + shift.1), f.mul(scale, c)))
            .peekable();
        let mut ai = a.terms.iter().cloned().peekable();
        loop {
            let next = match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => ai.next().unwrap(),
                (None, Some(_)) => bi.next().unwrap(),
                (Some(ta), Some(tb)) => match compare_local(ta.0, tb.0) {
                    Ordering::Greater => ai.next().unwrap(),
                    Ordering::Less => bi.next().unwrap(),
                    Ordering::Equal => {
                        let (e, ca) = ai.next().unwrap();
                        let (_, cb) = bi.next().unwrap();
                        (e, f.add(&ca, &cb))
                    }
                },
            };
            if !f.is_zero(&next.1) {
                out.push(next);
            }
        }
        Poly { terms: out }
    }

    pub fn scale(&self, p: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: p.terms.iter().map(|(e, v)| (*e, self.field.mul(v, c))).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.terms.first() {
            Some((_, c)) => {
                let inv = self.field.inv(c);
                self.scale(p, &inv)
            }
            None => Poly::zero(),
        }
    }

    /// Drops every term of total degree `>= k`.
    pub fn truncate(&self, p: &Poly<F::Elem>, k: u32) -> Poly<F::Elem> {
        Poly {
            terms: p.terms.iter().filter(|((a, b), _)| a + b < k).cloned().collect(),
        }
    }

    pub fn format(&self, p: &Poly<F::Elem>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in p.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let xy = format_monomial(*e);
            let coeff = self.field.format(c);
            match (coeff.as_str(), xy.as_str()) {
                (_, "1") => s.push_str(&coeff),
                ("1", _) => s.push_str(&xy),
                _ => s.push_str(&format!("{coeff}*{xy}")),
            }
        }
        s
    }
}

impl<F: Field> Ring for BivarRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.monomial(self.field.one(), (0, 0))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add_scaled(a, &self.field.one(), (0, 0), b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            terms: a.terms.iter().map(|(e, c)| (*e, self.field.neg(c))).collect(),
        }
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let minus_one = self.field.neg(&self.field.one());
        self.add_scaled(a, &minus_one, (0, 0), b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut acc = Poly::zero();
        for (e, c) in &a.terms {
            acc = self.add_scaled(&acc, c, *e, b);
        }
        acc
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}
