//! Monomial ideals `E = (x^t, ..., x^{t-i} y^{m_i}, ..., y^{m_t})` and their degree matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;

/// Exponent pair `(a, b)` of the monomial `x^a y^b`.
pub type Exponent = (u32, u32);

/// Formats `x^a y^b` as `x^a*y^b`, omitting unit exponents.
pub fn format_monomial(e: Exponent) -> String {
    let part = |var: &str, k: u32| match k {
        0 => None,
        1 => Some(var.to_string()),
        k => Some(format!("{var}^{k}")),
    };
    let factors: Vec<String> = [part("x", e.0), part("y", e.1)].into_iter().flatten().collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// A partition together with its difference vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialStaircase {
    pub m: Partition,
    pub d: Vec<u32>,
}

impl MonomialStaircase {
    pub fn new(m: Partition) -> Self {
        let d = m.differences();
        Self { m, d }
    }

    /// Rebuilds the staircase from a difference vector; `None` unless the
    /// resulting parts are positive.
    pub fn from_differences(d: &[u32]) -> Option<Self> {
        let parts: Vec<u32> = d
            .iter()
            .scan(0u32, |acc, &di| {
                *acc += di;
                Some(*acc)
            })
            .collect();
        Partition::new(parts).ok().map(Self::new)
    }
}

/// The `(t+1) x t` integer matrix `u_{i,j} = m_j - m_{i-1} + i - j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct DegreeMatrix {
    rows: Vec<Vec<i64>>,
}

impl DegreeMatrix {
    /// Entry `u_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Number of columns `t`.
    pub fn t(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

impl From<Vec<Vec<i64>>> for DegreeMatrix {
    fn from(rows: Vec<Vec<i64>>) -> Self {
        Self { rows }
    }
}

impl From<DegreeMatrix> for Vec<Vec<i64>> {
    fn from(u: DegreeMatrix) -> Self {
        u.rows
    }
}

impl fmt::Display for DegreeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The `t+1` generators `x^{t-i} y^{m_i}`, `i = 0..=t`.
pub fn monomial_generators(m: &Partition) -> Vec<Exponent> {
    let t = m.t();
    (0..=t).map(|i| ((t - i) as u32, m.m(i))).collect()
}

/// Minimal generators: `x^{t-i} y^{m_i}` is redundant exactly when `m_{i+1} = m_i`.
pub fn minimal_generators(m: &Partition) -> Vec<Exponent> {
    let t = m.t();
    (0..=t)
        .filter(|&i| i == t || m.m(i + 1) != m.m(i))
        .map(|i| ((t - i) as u32, m.m(i)))
        .collect()
}

pub fn degree_matrix(m: &Partition) -> DegreeMatrix {
    let t = m.t();
    let rows = (1..=t + 1)
        .map(|i| {
            (1..=t)
                .map(|j| m.m(j) as i64 - m.m(i - 1) as i64 + i as i64 - j as i64)
                .collect()
        })
        .collect();
    DegreeMatrix { rows }
}

/// `0 < m_1 < ... < m_t`.
pub fn is_lex_segment(m: &Partition) -> bool {
    m.parts().windows(2).all(|w| w[0] < w[1])
}

/// `m_j - j - 1 <= m_i - i` for all `j < i`: the class where the lower-triangular
/// parametrization already covers the whole cell.
pub fn satisfies_lex_gb_condition(m: &Partition) -> bool {
    let t = m.t();
    (1..=t).all(|i| {
        (1..i).all(|j| m.m(j) as i64 - j as i64 - 1 <= m.m(i) as i64 - i as i64)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(
            monomial_generators(&p(&[1, 5, 8, 10])),
            vec![(4, 0), (3, 1), (2, 5), (1, 8), (0, 10)]
        );
        assert_eq!(monomial_generators(&p(&[6])), vec![(1, 0), (0, 6)]);
        assert_eq!(
            monomial_generators(&p(&[1, 1, 4])),
            vec![(3, 0), (2, 1), (1, 1), (0, 4)]
        );
    }

    /// Divisibility scan among all generators, independent of the `d` rule.
    fn minimal_by_divisibility(m: &Partition) -> Vec<Exponent> {
        let gens = monomial_generators(m);
        gens.iter()
            .copied()
            .filter(|&(a, b)| {
                !gens
                    .iter()
                    .any(|&(c, d)| (c, d) != (a, b) && c <= a && d <= b)
            })
            .collect()
    }

    #[test]
    fn minimal() {
        assert_eq!(minimal_generators(&p(&[1, 1, 4])), vec![(3, 0), (1, 1), (0, 4)]);
        assert_eq!(minimal_generators(&p(&[2, 4])).len(), 3);
        assert_eq!(minimal_generators(&p(&[3])), vec![(1, 0), (0, 3)]);
        for n in 1..=14 {
            for m in partitions(n).unwrap() {
                assert_eq!(minimal_generators(&m), minimal_by_divisibility(&m), "{m}");
                let zeros = m.differences().iter().filter(|&&d| d == 0).count();
                assert_eq!(minimal_generators(&m).len(), m.t() + 1 - zeros);
            }
        }
    }

    #[test]
    fn degree_matrices() {
        let u = degree_matrix(&p(&[1, 5, 8, 10]));
        assert_eq!(
            u.rows(),
            &[
                vec![1, 4, 6, 7],
                vec![1, 4, 6, 7],
                vec![-2, 1, 3, 4],
                vec![-4, -1, 1, 2],
                vec![-5, -2, 0, 1]
            ]
        );
        let u = degree_matrix(&p(&[2, 3, 5, 7]));
        assert_eq!(
            u.rows(),
            &[
                vec![2, 2, 3, 4],
                vec![1, 1, 2, 3],
                vec![1, 1, 2, 3],
                vec![0, 0, 1, 2],
                vec![-1, -1, 0, 1]
            ]
        );
        let u = degree_matrix(&p(&[1]));
        assert_eq!(u.rows(), &[vec![1], vec![1]]);
    }

    #[test]
    fn diagonal_and_subdiagonal() {
        for n in 1..=30 {
            for m in partitions(n).unwrap() {
                let u = degree_matrix(&m);
                let d = m.differences();
                for i in 1..=m.t() {
                    assert_eq!(u.get(i, i), d[i - 1] as i64);
                    assert_eq!(u.get(i + 1, i), 1);
                }
            }
        }
    }

    #[test]
    fn lex_segment_monotonicity() {
        for n in 1..=25 {
            for m in partitions(n).unwrap().into_iter().filter(is_lex_segment) {
                let u = degree_matrix(&m);
                let t = m.t();
                for i in 2..=t + 1 {
                    for j in 1..i.min(t + 1) {
                        let v = u.get(i, j);
                        assert!(v <= u.get(i - 1, j));
                        if j < t {
                            assert!(v <= u.get(i - 1, j + 1));
                            assert!(v <= u.get(i, j + 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lex_predicates() {
        assert!(is_lex_segment(&p(&[1, 5, 8, 10])));
        assert!(!is_lex_segment(&p(&[1, 1, 4])));
        assert!(is_lex_segment(&p(&[2, 4])));
        assert!(!satisfies_lex_gb_condition(&p(&[1, 1, 2, 2])));
        assert!(satisfies_lex_gb_condition(&p(&[1, 1])));
        for n in 1..=30 {
            for m in partitions(n).unwrap().into_iter().filter(is_lex_segment) {
                assert!(satisfies_lex_gb_condition(&m), "{m}");
            }
        }
    }

    #[test]
    fn differences_round_trip() {
        for m in partitions(12).unwrap() {
            let s = MonomialStaircase::new(m.clone());
            assert_eq!(s.d.iter().sum::<u32>(), *m.parts().last().unwrap());
            assert_eq!(MonomialStaircase::from_differences(&s.d).unwrap().m, m);
        }
    }

    #[test]
    fn monomial_format() {
        assert_eq!(format_monomial((4, 0)), "x^4");
        assert_eq!(format_monomial((1, 8)), "x*y^8");
        assert_eq!(format_monomial((0, 0)), "1");
    }
}
