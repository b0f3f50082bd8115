//! Polynomials in the cell parameters `c_1, c_2, ...` and in `x, y` over them.
//!
//! Coefficients are integers: every generic Hilbert-Burch matrix has entries
//! `0, ±1` times parameter monomials, so all minors live in `Z[c][x, y]`, which
//! maps canonically into any field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Ring;
use crate::localsb::order::compare_local;
use crate::staircase::Exponent;

/// A monomial in the parameters: sorted `(index, exponent)` pairs, 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamMono(Vec<(u32, u32)>);

impl ParamMono {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(k: u32) -> Self {
        Self(vec![(k, 1)])
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(&(a, ea)), None) => {
                    out.push((a, ea));
                    i += 1;
                }
                (_, Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Self(out)
    }
}

impl Ord for ParamMono {
    /// Graded, then lexicographic on the factor list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ParamMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ParamMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(k, e)| if e == 1 { format!("c{k}") } else { format!("c{k}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Integer polynomial in the parameters; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamMono, BigInt>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, ParamMono::one())
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The parameter `c_k`.
    pub fn param(k: u32) -> Self {
        Self::monomial(1, ParamMono::var(k))
    }

    pub fn monomial(c: impl Into<BigInt>, mono: ParamMono) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMono, &BigInt)> {
        self.terms.iter()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&ParamMono::one()).cloned().unwrap_or_default()
    }

    /// Largest parameter index occurring, 0 for constants.
    pub fn max_param(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(k, _)| k))
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, mono: ParamMono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// Evaluates at `values[k-1] = c_k`, embedding integer coefficients with `embed`.
    pub fn evaluate<R: Ring>(
        &self,
        ring: &R,
        embed: impl Fn(&BigInt) -> R::Elem,
        values: &[R::Elem],
    ) -> R::Elem {
        let mut acc = ring.zero();
        for (mono, c) in &self.terms {
            let mut term = embed(c);
            for &(k, e) in &mono.0 {
                for _ in 0..e {
                    term = ring.mul(&term, &values[k as usize - 1]);
                }
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    /// Same polynomial up to a global sign.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == -other.clone()
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self + (-rhs)
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(mut self) -> ParamPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Writes a signed sum of `(coefficient, factor string)` terms.
fn write_signed_sum(f: &mut fmt::Formatter<'_>, terms: &[(BigInt, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (c, factors)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let magnitude = c.abs();
        match (magnitude.is_one(), factors.is_empty()) {
            (_, true) => write!(f, "{magnitude}")?,
            (true, false) => write!(f, "{factors}")?,
            (false, false) => write!(f, "{magnitude}*{factors}")?,
        }
    }
    Ok(())
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(BigInt, String)> = self
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), if m.is_one() { String::new() } else { m.to_string() }))
            .collect();
        write_signed_sum(f, &terms)
    }
}

/// Ring context for [`ParamPoly`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ParamRing;

impl Ring for ParamRing {
    type Elem = ParamPoly;
    fn zero(&self) -> ParamPoly {
        ParamPoly::zero()
    }
    fn one(&self) -> ParamPoly {
        ParamPoly::one()
    }
    fn add(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        a.clone() + b.clone()
    }
    fn neg(&self, a: &ParamPoly) -> ParamPoly {
        -a.clone()
    }
    fn mul(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        a * b
    }
    fn is_zero(&self, a: &ParamPoly) -> bool {
        a.is_zero()
    }
}

/// `Σ coeff_{a,b} x^a y^b` with coefficients in the parameter ring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamBivarPoly {
    terms: BTreeMap<Exponent, ParamPoly>,
}

impl ParamBivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: ParamPoly, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        Self { terms }
    }

    /// `c * x^a y^b` with an integer coefficient.
    pub fn monomial(c: i64, e: Exponent) -> Self {
        Self::term(ParamPoly::constant(c), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: Exponent) -> ParamPoly {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &ParamPoly)> {
        self.terms.iter()
    }

    /// Terms sorted from the largest to the smallest under the local ordering.
    pub fn local_terms(&self) -> Vec<(Exponent, &ParamPoly)> {
        let mut v: Vec<(Exponent, &ParamPoly)> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|a, b| compare_local(b.0, a.0));
        v
    }

    pub fn add_term(&mut self, e: Exponent, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot = std::mem::take(slot) + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coefficients(&self, mut f: impl FnMut(&ParamPoly) -> ParamPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn max_param(&self) -> u32 {
        self.terms.values().map(ParamPoly::max_param).max().unwrap_or(0)
    }
}

impl fmt::Display for ParamBivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (e, coeff) in self.local_terms() {
            let xy = crate::staircase::format_monomial(e);
            for (pm, c) in coeff.terms() {
                let factors = match (pm.is_one(), e == (0, 0)) {
                    (true, true) => String::new(),
                    (true, false) => xy.clone(),
                    (false, true) => pm.to_string(),
                    (false, false) => format!("{pm}*{xy}"),
                };
                terms.push((c.clone(), factors));
            }
        }
        write_signed_sum(f, &terms)
    }
}

impl FromStr for ParamBivarPoly {
    type Err = Error;

    /// Parses sums of terms like `-2*c3*c5^2*x*y^4`; the inverse of `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = ParamBivarPoly::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for (k, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && k > 0 && bytes[k - 1] != b'^' {
                pieces.push(&compact[start..k]);
                start = k;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let mut coeff = BigInt::one();
            let mut mono = ParamMono::one();
            let mut e: Exponent = (0, 0);
            for factor in body.split('*') {
                let (base, power) = match factor.split_once('^') {
                    Some((b, p)) => (
                        b,
                        p.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                match base {
                    "x" => e.0 += power,
                    "y" => e.1 += power,
                    _ if base.starts_with('c') => {
                        let k: u32 = base[1..]
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad parameter {base:?}")))?;
                        if k == 0 {
                            return Err(Error::Parse("parameters are numbered from 1".into()));
                        }
                        mono = mono.mul(&ParamMono(vec![(k, power)]));
                    }
                    _ => {
                        let v: BigInt = base
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                        coeff *= num_traits::pow(v, power as usize);
                    }
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(e, ParamPoly::monomial(coeff, mono));
        }
        Ok(out)
    }
}

impl Serialize for ParamBivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ParamBivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ParamPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let p: ParamBivarPoly = s.parse().map_err(serde::de::Error::custom)?;
        if p.terms.keys().any(|&e| e != (0, 0)) {
            return Err(serde::de::Error::custom("parameter polynomial contains x or y"));
        }
        Ok(p.coefficient((0, 0)))
    }
}

/// Ring context for [`ParamBivarPoly`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ParamBivarRing;

impl Ring for ParamBivarRing {
    type Elem = ParamBivarPoly;
    fn zero(&self) -> ParamBivarPoly {
        ParamBivarPoly::zero()
    }
    fn one(&self) -> ParamBivarPoly {
        ParamBivarPoly::monomial(1, (0, 0))
    }
    fn add(&self, a: &ParamBivarPoly, b: &ParamBivarPoly) -> ParamBivarPoly {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn neg(&self, a: &ParamBivarPoly) -> ParamBivarPoly {
        a.map_coefficients(|c| -c.clone())
    }
    fn mul(&self, a: &ParamBivarPoly, b: &ParamBivarPoly) -> ParamBivarPoly {
        let mut out = ParamBivarPoly::zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }
    fn is_zero(&self, a: &ParamBivarPoly) -> bool {
        a.is_zero()
    }
}
