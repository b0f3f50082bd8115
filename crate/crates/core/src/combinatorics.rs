//! Partitions, bounded partition counts and Hilbert functions of plane staircases.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nondecreasing sequence of positive parts `m_1 <= ... <= m_t`.
///
/// The partition encodes the monomial ideal
/// `E = (x^t, x^{t-1} y^{m_1}, ..., y^{m_t})`; `m_0 = 0` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nondecreasing")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, the x-order of the ideal.
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    /// Colength of the ideal.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `m_i` with 1-based `i`; `m(0) == 0`.
    pub fn m(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// The difference vector `d_i = m_i - m_{i-1}`, `i = 1..=t`.
    pub fn differences(&self) -> Vec<u32> {
        (1..=self.t()).map(|i| self.m(i) - self.m(i - 1)).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Comma-separated nondecreasing parts, e.g. `1,5,8,10`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidPartition(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Hilbert function `h = (h_0, ..., h_s)` of a colength-n quotient of `k[[x,y]]`,
/// stored without the trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct HilbertFunction {
    values: Vec<u32>,
}

impl HilbertFunction {
    /// Validates the admissible shape `(1, 2, ..., t, h_t, ..., h_s)` with
    /// `t >= h_t >= ... >= h_s >= 1`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let bad = |reason: &str| Error::Inadmissible {
            values: values.clone(),
            reason: reason.to_string(),
        };
        if values.is_empty() {
            return Err(bad("empty"));
        }
        if values.contains(&0) {
            return Err(bad("zero value (trailing zeros are implicit)"));
        }
        let t = values
            .iter()
            .enumerate()
            .position(|(i, &v)| v != i as u32 + 1)
            .unwrap_or(values.len());
        if t < values.len() && values[t] > t as u32 {
            return Err(bad("value exceeds the order"));
        }
        if values[t.min(values.len())..].windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("not nonincreasing after the order"));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `h_i`, zero beyond the socle degree and for negative indices.
    pub fn get(&self, i: i64) -> u32 {
        if i < 0 {
            0
        } else {
            self.values.get(i as usize).copied().unwrap_or(0)
        }
    }

    /// Last index with a nonzero value.
    pub fn s(&self) -> usize {
        self.values.len() - 1
    }

    /// Order of the ideal: first degree where `h_i < i + 1`.
    pub fn t(&self) -> usize {
        (0..=self.values.len())
            .find(|&i| self.get(i as i64) < i as u32 + 1)
            .expect("the implicit trailing zero always drops")
    }

    pub fn n(&self) -> u32 {
        self.values.iter().sum()
    }

    /// Heights of the drops `h_{i-1} - h_i > 0`, including the final drop to zero.
    pub fn drops(&self) -> Vec<u32> {
        (1..=self.values.len() as i64)
            .filter_map(|i| {
                let (a, b) = (self.get(i - 1), self.get(i));
                (a > b).then(|| a - b)
            })
            .collect()
    }
}

impl TryFrom<Vec<u32>> for HilbertFunction {
    type Error = Error;
    fn try_from(values: Vec<u32>) -> Result<Self> {
        HilbertFunction::new(values)
    }
}

impl From<HilbertFunction> for Vec<u32> {
    fn from(h: HilbertFunction) -> Vec<u32> {
        h.values
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, in lexicographic order of their nondecreasing part lists.
pub fn partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::EmptyInput("partitions of 0"));
    }
    fn go(rest: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in min_part..=rest {
            // the remainder must be 0 or still admit a part >= p
            if rest - p != 0 && rest - p < p {
                continue;
            }
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Partitions of `n` with strictly increasing parts: the lex-segment staircases,
/// in bijection with admissible Hilbert functions of colength `n`.
pub fn strict_partitions(n: u32) -> Result<Vec<Partition>> {
    Ok(partitions(n)?
        .into_iter()
        .filter(|p| p.parts.windows(2).all(|w| w[0] < w[1]))
        .collect())
}

/// `P(n, l)`: the number of partitions of `n` into parts at most `l`.
pub fn bounded_partition_count(n: u32, l: u32) -> u128 {
    let n = n as usize;
    let mut table = vec![0u128; n + 1];
    table[0] = 1;
    for part in 1..=(l as usize).min(n) {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// Number of degree-`j` monomials outside the staircase of `m`, for every `j`.
pub fn hilbert_function_of_staircase(m: &Partition) -> HilbertFunction {
    let t = m.t();
    // column a (x-exponent a < t) has height m_{t-a}
    let top = (0..t).map(|a| a as u32 + m.m(t - a)).max().unwrap_or(0);
    let mut values = vec![0u32; top as usize];
    for a in 0..t {
        for b in 0..m.m(t - a) {
            values[(a as u32 + b) as usize] += 1;
        }
    }
    HilbertFunction::new(values).expect("staircases have admissible Hilbert functions")
}

/// Maximal absolute jump `max |h_i - h_{i-1}|`, counting the final drop to zero.
pub fn max_jump(h: &HilbertFunction) -> u32 {
    (1..=h.values().len() as i64)
        .map(|i| h.get(i).abs_diff(h.get(i - 1)))
        .max()
        .unwrap_or(0)
}

/// The lex-segment staircase with Hilbert function `h`.
///
/// In every degree the `h_j` monomials outside the ideal are those with the
/// highest y-powers, so column `a` has height `#{j : h_j > a}`.
pub fn lex_segment_of(h: &HilbertFunction) -> Result<Partition> {
    let t = h.t();
    let parts: Vec<u32> = (0..t)
        .rev()
        .map(|a| h.values().iter().filter(|&&v| v > a as u32).count() as u32)
        .collect();
    let m = Partition::new(parts).map_err(|e| Error::Inadmissible {
        values: h.values().to_vec(),
        reason: e.to_string(),
    })?;
    if hilbert_function_of_staircase(&m) != *h {
        return Err(Error::Inadmissible {
            values: h.values().to_vec(),
            reason: "no lex-segment staircase realizes it".into(),
        });
    }
    Ok(m)
}
