use std::cmp::Ordering;

use crate::staircase::Exponent;

/// The local ordering: `m1 > m2` iff `deg m1 < deg m2`, or the degrees agree
/// and `m1 >_lex m2` with `x > y`.
///
/// `Ordering::Greater` means `m1` is the larger (leading) monomial.
pub fn compare_local(m1: Exponent, m2: Exponent) -> Ordering {
    let (d1, d2) = (m1.0 + m1.1, m2.0 + m2.1);
    d2.cmp(&d1).then_with(|| m1.0.cmp(&m2.0))
}
