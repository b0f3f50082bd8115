//! Canonical Hilbert-Burch matrices, parameter shapes and cell dimensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{HilbertFunction, Partition};
use crate::matrix::Matrix;
use crate::staircase::degree_matrix;
use crate::symbolic::{ParamBivarPoly, ParamPoly};

/// Which deformation space a shape describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    /// Strictly lower-triangular deformations.
    Lower,
    /// Lower-triangular deformations plus the upper entries of order above `u_{i,j}`.
    Full,
}

/// Admissible y-degrees `lo..=hi` of one entry; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub const EMPTY: Window = Window { lo: 0, hi: -1 };

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    pub fn contains(&self, e: i64) -> bool {
        self.lo <= e && e <= self.hi
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> {
        (self.lo..=self.hi).map(|e| e as u32)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Per-entry degree windows of the `(t+1) x t` deformation matrix `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamShape {
    pub kind: ShapeKind,
    pub windows: Matrix<Window>,
}

impl ParamShape {
    pub fn t(&self) -> usize {
        self.windows.ncols()
    }

    pub fn window(&self, i: usize, j: usize) -> Window {
        *self.windows.get(i, j)
    }
}

/// Position of the coefficient `c_k`: entry `(i, j)`, coefficient of `y^degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSlot {
    pub i: usize,
    pub j: usize,
    pub degree: u32,
}

/// `slots[k-1]` is the position of `c_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamIndex {
    pub slots: Vec<ParamSlot>,
}

impl ParamIndex {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Position of `c_k`, 1-based.
    pub fn slot(&self, k: usize) -> Option<ParamSlot> {
        k.checked_sub(1).and_then(|k| self.slots.get(k)).copied()
    }

    /// The label `k` of the parameter at `(i, j, degree)`.
    pub fn label(&self, i: usize, j: usize, degree: u32) -> Option<usize> {
        self.slots
            .iter()
            .position(|s| s.i == i && s.j == j && s.degree == degree)
            .map(|k| k + 1)
    }
}

pub fn param_shape(m: &Partition, kind: ShapeKind) -> ParamShape {
    let t = m.t();
    let u = degree_matrix(m);
    let d = m.differences();
    let windows = Matrix::from_fn(t + 1, t, |i, j| {
        let uij = u.get(i, j);
        let w = if i > j {
            Window {
                lo: uij.max(0),
                hi: d[j - 1] as i64 - 1,
            }
        } else if kind == ShapeKind::Full {
            Window {
                lo: (uij + 1).max(0),
                hi: d[i - 1] as i64 - 1,
            }
        } else {
            Window::EMPTY
        };
        if w.is_empty() {
            Window::EMPTY
        } else {
            w
        }
    });
    ParamShape { kind, windows }
}

pub fn cell_dimension(shape: &ParamShape) -> usize {
    shape.windows.iter().map(Window::len).sum()
}

/// Parameters in row-major order: by row, then column, then degree.
pub fn param_index(shape: &ParamShape) -> ParamIndex {
    let t = shape.t();
    let mut slots = Vec::new();
    for i in 1..=t + 1 {
        for j in 1..=t {
            for degree in shape.window(i, j).degrees() {
                slots.push(ParamSlot { i, j, degree });
            }
        }
    }
    ParamIndex { slots }
}

/// `n - t - Σ_l n_l C(l, 2)` where `n_l` counts the drops of height `l`.
pub fn lex_cell_dimension_formula(h: &HilbertFunction) -> usize {
    let correction: u64 = h
        .drops()
        .iter()
        .map(|&l| l as u64 * (l as u64).saturating_sub(1) / 2)
        .sum();
    (h.n() as i64 - h.t() as i64 - correction as i64).max(0) as usize
}

/// `#{(i, j) : i > j, 0 <= u_{i,j} < d_j}`.
pub fn hom_subcell_dimension(m: &Partition) -> usize {
    let t = m.t();
    let u = degree_matrix(m);
    let d = m.differences();
    (1..=t)
        .flat_map(|j| (j + 1..=t + 1).map(move |i| (i, j)))
        .filter(|&(i, j)| {
            let uij = u.get(i, j);
            uij >= 0 && uij < d[j - 1] as i64
        })
        .count()
}

/// `t + Σ_{i=t-1}^{s} (h_{i-1} - h_i)(h_i - h_{i+1})`.
pub fn hom_dimension_formula_lex(h: &HilbertFunction) -> usize {
    let t = h.t() as i64;
    let s = h.s() as i64;
    let g = |i: i64| h.get(i) as i64;
    let sum: i64 = (t - 1..=s).map(|i| (g(i - 1) - g(i)) * (g(i) - g(i + 1))).sum();
    (t + sum).max(0) as usize
}

/// `H`: `y^{d_i}` on the diagonal, `-x` below it.
pub fn canonical_matrix(m: &Partition) -> Matrix<ParamBivarPoly> {
    let t = m.t();
    let d = m.differences();
    Matrix::from_fn(t + 1, t, |i, j| {
        if i == j {
            ParamBivarPoly::monomial(1, (0, d[i - 1]))
        } else if i == j + 1 {
            ParamBivarPoly::monomial(-1, (1, 0))
        } else {
            ParamBivarPoly::zero()
        }
    })
}

/// `H + N` with one fresh parameter per admissible degree of every entry.
pub fn generic_matrix(m: &Partition, shape: &ParamShape) -> (Matrix<ParamBivarPoly>, ParamIndex) {
    let index = param_index(shape);
    let mut mat = canonical_matrix(m);
    for (k, slot) in index.slots.iter().enumerate() {
        mat.get_mut(slot.i, slot.j)
            .add_term((0, slot.degree), ParamPoly::param(k as u32 + 1));
    }
    (mat, index)
}

/// Labels `k` of the parameters below the diagonal sitting in degree exactly `u_{i,j}`.
pub fn homogeneous_mask(m: &Partition, shape: &ParamShape) -> Vec<usize> {
    let u = degree_matrix(m);
    param_index(shape)
        .slots
        .iter()
        .enumerate()
        .filter(|(_, s)| s.i > s.j && s.degree as i64 == u.get(s.i, s.j))
        .map(|(k, _)| k + 1)
        .collect()
}
