//! Mora's weak normal form.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::localsb::poly::{BivarRing, Poly};
use crate::staircase::Exponent;

fn divides(a: Exponent, b: Exponent) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Limits applied while reducing.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct ReductionBounds {
    /// Terms of degree `>= k` are dropped; valid once `m^k` lies in the ideal.
    pub truncate_at: Option<u32>,
    /// Abort when an intermediate polynomial exceeds this degree.
    pub degree_cutoff: Option<u32>,
}

/// Weak normal form of `f` with respect to `g`.
///
/// Returns `r` such that `u f - r` lies in the ideal of `g` for some unit `u`,
/// with `r = 0` or `Lt(r)` divisible by no `Lt(g_i)`. Among applicable
/// reducers the one of minimal ecart is used (ties by position), and the
/// current remainder joins the reducer set whenever it has smaller ecart.
pub fn mora_normal_form<F: Field>(
    ring: &BivarRing<F>,
    f: &Poly<F::Elem>,
    g: &[Poly<F::Elem>],
) -> Poly<F::Elem> {
    reduce(ring, f, g, ReductionBounds::default()).expect("no cutoff configured")
}

pub(crate) fn reduce<F: Field>(
    ring: &BivarRing<F>,
    f: &Poly<F::Elem>,
    g: &[Poly<F::Elem>],
    bounds: ReductionBounds,
) -> Result<Poly<F::Elem>> {
    let field = &ring.field;
    let clip = |p: Poly<F::Elem>| match bounds.truncate_at {
        Some(k) => ring.truncate(&p, k),
        None => p,
    };
    let mut reducers: Vec<Poly<F::Elem>> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut h = clip(f.clone());
    loop {
        let Some(lead) = h.leading_exponent() else {
            return Ok(h);
        };
        if let Some(limit) = bounds.degree_cutoff {
            if h.degree() > limit {
                return Err(Error::DegreeCutoff { limit });
            }
        }
        let best = reducers
            .iter()
            .enumerate()
            .filter(|(_, r)| divides(r.leading_exponent().unwrap(), lead))
            .min_by_key(|(k, r)| (r.ecart(), *k))
            .map(|(k, _)| k);
        let Some(best) = best else {
            return Ok(h);
        };
        let reducer = reducers[best].clone();
        if reducer.ecart() > h.ecart() {
            reducers.push(h.clone());
        }
        let (re, rc) = reducer.terms()[0].clone();
        let hc = &h.terms()[0].1;
        let scale = field.neg(&field.div(hc, &rc));
        let shift = (lead.0 - re.0, lead.1 - re.1);
        h = clip(ring.add_scaled(&h, &scale, shift, &reducer));
    }
}
