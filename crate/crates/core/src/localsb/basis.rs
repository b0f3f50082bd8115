//! Standard bases, leading-term ideals and Hilbert functions of local quotients.

use crate::combinatorics::{hilbert_function_of_staircase, HilbertFunction, Partition};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::localsb::mora::{reduce, ReductionBounds};
use crate::localsb::order::compare_local;
use crate::localsb::poly::{BivarRing, Poly};
use crate::staircase::{Exponent, MonomialStaircase};

#[derive(Debug, Clone, Copy, Default)]
pub struct SbOptions {
    /// Abort once an intermediate polynomial exceeds this degree before the
    /// leading ideal becomes finite. Defaults to `4 * max_degree^2` of the input.
    pub degree_cutoff: Option<u32>,
}

impl SbOptions {
    /// Cutoff `4 n` for ideals expected to have colength `n`.
    pub fn for_colength(n: u32) -> Self {
        Self {
            degree_cutoff: Some(4 * n.max(1)),
        }
    }
}

/// Generators whose leading terms generate the leading-term ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis<E> {
    pub elements: Vec<Poly<E>>,
    pub reduced: bool,
    /// `k` with `m^k` inside the ideal, once the leading ideal is finite.
    pub truncation_degree: Option<u32>,
}

impl<E> StandardBasis<E> {
    pub fn leading_exponents(&self) -> Vec<Exponent> {
        self.elements.iter().filter_map(Poly::leading_exponent).collect()
    }
}

/// Smallest `k` such that every degree-`k` monomial lies in the monomial
/// ideal generated by `leads`, or `None` if that ideal is not `m`-primary.
fn finite_corner(leads: &[Exponent]) -> Option<u32> {
    let t = leads.iter().filter(|e| e.1 == 0).map(|e| e.0).min()?;
    let mut top = 0u32;
    for a in 0..t {
        let height = leads.iter().filter(|e| e.0 <= a).map(|e| e.1).min()?;
        if height > 0 {
            top = top.max(a + height);
        }
    }
    // standard monomials have degree < top
    Some(top.max(t))
}

fn lcm(a: Exponent, b: Exponent) -> Exponent {
    (a.0.max(b.0), a.1.max(b.1))
}

fn s_polynomial<F: Field>(
    ring: &BivarRing<F>,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    let (ef, cf) = f.terms()[0].clone();
    let (eg, cg) = g.terms()[0].clone();
    let l = lcm(ef, eg);
    let field = &ring.field;
    let left = ring.add_scaled(&Poly::zero(), &field.inv(&cf), (l.0 - ef.0, l.1 - ef.1), f);
    let minus = field.neg(&field.inv(&cg));
    ring.add_scaled(&left, &minus, (l.0 - eg.0, l.1 - eg.1), g)
}

/// Buchberger's algorithm with Mora's normal form.
///
/// Pairs are processed by the normal strategy: the pair whose lcm of leading
/// monomials is largest in the local ordering goes first. Once the leading
/// ideal of the partial basis contains every monomial of degree `k`, all
/// further arithmetic is carried out modulo `m^{k+1}`, which keeps the
/// minimal leading terms (all of degree at most `k`) intact.
pub fn standard_basis<F: Field>(
    ring: &BivarRing<F>,
    generators: &[Poly<F::Elem>],
    options: SbOptions,
) -> Result<StandardBasis<F::Elem>> {
    let cutoff = options.degree_cutoff.unwrap_or_else(|| {
        let d = generators.iter().map(Poly::degree).max().unwrap_or(1).max(1);
        4 * d * d
    });
    let mut basis: Vec<Option<Poly<F::Elem>>> = Vec::new();
    let mut corner: Option<u32> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let insert = |basis: &mut Vec<Option<Poly<F::Elem>>>,
                      pairs: &mut Vec<(usize, usize)>,
                      corner: &mut Option<u32>,
                      p: Poly<F::Elem>| {
        let p = ring.monic(&p);
        let idx = basis.len();
        for (j, q) in basis.iter().enumerate() {
            if q.is_some() {
                pairs.push((j, idx));
            }
        }
        basis.push(Some(p));
        let leads: Vec<Exponent> =
            basis.iter().flatten().filter_map(Poly::leading_exponent).collect();
        if let Some(k) = finite_corner(&leads) {
            if corner.is_none_or(|c| k < c) {
                *corner = Some(k);
                for slot in basis.iter_mut() {
                    if let Some(q) = slot {
                        let cut = ring.truncate(q, k + 1);
                        *slot = (!cut.is_zero()).then_some(cut);
                    }
                }
            }
        }
    };

    for g in generators {
        let bounds = ReductionBounds {
            truncate_at: corner.map(|k| k + 1),
            degree_cutoff: Some(cutoff),
        };
        let current: Vec<Poly<F::Elem>> = basis.iter().flatten().cloned().collect();
        let h = reduce(ring, g, &current, bounds)?;
        if !h.is_zero() {
            insert(&mut basis, &mut pairs, &mut corner, h);
        }
    }

    while !pairs.is_empty() {
        pairs.retain(|&(i, j)| basis[i].is_some() && basis[j].is_some());
        let Some(pos) = (0..pairs.len()).max_by(|&a, &b| {
            let key = |k: usize| {
                let (i, j) = pairs[k];
                lcm(
                    basis[i].as_ref().unwrap().leading_exponent().unwrap(),
                    basis[j].as_ref().unwrap().leading_exponent().unwrap(),
                )
            };
            // earlier pairs win ties
            compare_local(key(a), key(b)).then(b.cmp(&a))
        }) else {
            break;
        };
        let (i, j) = pairs.remove(pos);
        let (f, g) = (basis[i].as_ref().unwrap(), basis[j].as_ref().unwrap());
        let s = s_polynomial(ring, f, g);
        let bounds = ReductionBounds {
            truncate_at: corner.map(|k| k + 1),
            degree_cutoff: Some(cutoff),
        };
        let current: Vec<Poly<F::Elem>> = basis.iter().flatten().cloned().collect();
        let h = reduce(ring, &s, &current, bounds)?;
        if !h.is_zero() {
            insert(&mut basis, &mut pairs, &mut corner, h);
        }
    }

    Ok(StandardBasis {
        elements: basis.into_iter().flatten().collect(),
        reduced: false,
        truncation_degree: corner,
    })
}

/// The reduced standard basis: minimal leading terms, monic, and no term of
/// any element divisible by a leading term other than its own leading term.
/// Elements are sorted by decreasing x-degree of the leading term.
///
/// Only defined for ideals of finite colength at the origin.
pub fn reduced_standard_basis<F: Field>(
    ring: &BivarRing<F>,
    generators: &[Poly<F::Elem>],
    options: SbOptions,
) -> Result<StandardBasis<F::Elem>> {
    let sb = standard_basis(ring, generators, options)?;
    let k = sb.truncation_degree.ok_or(Error::NotZeroDimensional)?;
    let field = &ring.field;

    let mut minimal: Vec<Poly<F::Elem>> = Vec::new();
    for (idx, p) in sb.elements.iter().enumerate() {
        let e = p.leading_exponent().unwrap();
        let dominated = sb.elements.iter().enumerate().any(|(jdx, q)| {
            let f = q.leading_exponent().unwrap();
            f.0 <= e.0 && f.1 <= e.1 && (f != e || jdx < idx)
        });
        if !dominated {
            minimal.push(p.clone());
        }
    }

    let mut reduced = Vec::with_capacity(minimal.len());
    for p in &minimal {
        let (lead, _) = p.terms()[0].clone();
        let mut head: Vec<(Exponent, F::Elem)> = vec![(lead, field.one())];
        let mut rest = ring.truncate(
            &ring.add_scaled(&ring.monic(p), &field.neg(&field.one()), (0, 0), &ring.monomial(field.one(), lead)),
            k + 1,
        );
        while let Some((e, c)) = rest.terms().first().cloned() {
            let reducer = minimal.iter().find(|q| {
                let f = q.leading_exponent().unwrap();
                f.0 <= e.0 && f.1 <= e.1
            });
            match reducer {
                Some(q) => {
                    let (qe, qc) = q.terms()[0].clone();
                    let scale = field.neg(&field.div(&c, &qc));
                    rest = ring.truncate(&ring.add_scaled(&rest, &scale, (e.0 - qe.0, e.1 - qe.1), q), k + 1);
                }
                None => {
                    rest = ring.add_scaled(&rest, &field.neg(&c), (0, 0), &ring.monomial(field.one(), e));
                    head.push((e, c));
                }
            }
        }
        reduced.push(ring.from_terms(head));
    }
    reduced.sort_by(|a, b| {
        let (ea, eb) = (a.leading_exponent().unwrap(), b.leading_exponent().unwrap());
        eb.0.cmp(&ea.0)
    });
    Ok(StandardBasis {
        elements: reduced,
        reduced: true,
        truncation_degree: Some(k),
    })
}

/// The staircase of the monomial ideal generated by the leading terms.
pub fn leading_term_ideal<E>(basis: &StandardBasis<E>) -> Result<MonomialStaircase> {
    let leads = basis.leading_exponents();
    if leads.contains(&(0, 0)) {
        return Err(Error::NotZeroDimensional);
    }
    let t = leads
        .iter()
        .filter(|e| e.1 == 0)
        .map(|e| e.0)
        .min()
        .ok_or(Error::NotZeroDimensional)?;
    let parts = (1..=t)
        .map(|i| {
            let a = t - i;
            leads
                .iter()
                .filter(|e| e.0 <= a)
                .map(|e| e.1)
                .min()
                .ok_or(Error::NotZeroDimensional)
        })
        .collect::<Result<Vec<u32>>>()?;
    let m = Partition::new(parts).map_err(|_| Error::NotZeroDimensional)?;
    Ok(MonomialStaircase::new(m))
}

pub fn hilbert_function_of_quotient<E>(basis: &StandardBasis<E>) -> Result<HilbertFunction> {
    Ok(hilbert_function_of_staircase(&leading_term_ideal(basis)?.m))
}
