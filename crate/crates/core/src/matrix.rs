//! Dense matrices over an arbitrary ring and exact minors by memoized Laplace expansion.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::field::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<T>>", into = "Vec<Vec<T>>")]
#[serde(bound(serialize = "T: Serialize + Clone", deserialize = "T: Deserialize<'de>"))]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        &mut self.data[(i - 1) * self.cols + (j - 1)]
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect::<Result<_, _>>()?,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.data.chunks(self.cols.max(1)).map(<[T]>::to_vec).collect()
    }
}

impl<T> TryFrom<Vec<Vec<T>>> for Matrix<T> {
    type Error = String;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self, String> {
        let nrows = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err("ragged matrix".into());
        }
        Ok(Self {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }
}

impl<T: Clone> From<Matrix<T>> for Vec<Vec<T>> {
    fn from(m: Matrix<T>) -> Self {
        m.to_rows()
    }
}

/// Determinants of square submatrices sharing a fixed leading column block,
/// memoized on the row subset.
struct MinorCache<'a, R: Ring> {
    ring: &'a R,
    m: &'a Matrix<R::Elem>,
    cols: Vec<usize>,
    memo: HashMap<(u128, usize), R::Elem>,
}

impl<R: Ring> MinorCache<'_, R> {
    /// Determinant of the rows in `mask` against the first `k` chosen columns,
    /// expanding along the last of them.
    fn det(&mut self, mask: u128, k: usize) -> R::Elem {
        if k == 0 {
            return self.ring.one();
        }
        if let Some(v) = self.memo.get(&(mask, k)) {
            return v.clone();
        }
        let col = self.cols[k - 1];
        let mut acc = self.ring.zero();
        let rows: Vec<usize> = (0..self.m.nrows()).filter(|r| mask >> r & 1 == 1).collect();
        for (pos, &r) in rows.iter().enumerate() {
            let entry = self.m.get(r + 1, col);
            if self.ring.is_zero(entry) {
                continue;
            }
            let sub = self.det(mask & !(1u128 << r), k - 1);
            if self.ring.is_zero(&sub) {
                continue;
            }
            let term = self.ring.mul(entry, &sub);
            // sign of position (pos, k-1) inside the k x k block
            acc = if (pos + k - 1).is_multiple_of(2) {
                self.ring.add(&acc, &term)
            } else {
                self.ring.sub(&acc, &term)
            };
        }
        self.memo.insert((mask, k), acc.clone());
        acc
    }
}

/// Determinant of the submatrix on 1-based `rows` x `cols` (equal lengths).
pub fn minor<R: Ring>(ring: &R, m: &Matrix<R::Elem>, rows: &[usize], cols: &[usize]) -> R::Elem {
    assert_eq!(rows.len(), cols.len());
    assert!(m.nrows() <= 128);
    let mask = rows.iter().fold(0u128, |acc, &r| acc | 1u128 << (r - 1));
    let mut cache = MinorCache {
        ring,
        m,
        cols: cols.to_vec(),
        memo: HashMap::new(),
    };
    cache.det(mask, cols.len())
}

/// All determinants obtained by deleting one row of a `(t+1) x t` matrix:
/// entry `i` is `det(M without row i+1)`, `i = 0..=t`, unsigned.
pub fn row_deleted_minors<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let t = m.ncols();
    assert_eq!(m.nrows(), t + 1, "expected a (t+1) x t matrix");
    assert!(m.nrows() <= 128);
    let full = if t + 1 == 128 { u128::MAX } else { (1u128 << (t + 1)) - 1 };
    let mut cache = MinorCache {
        ring,
        m,
        cols: (1..=t).collect(),
        memo: HashMap::new(),
    };
    (0..=t).map(|i| cache.det(full & !(1u128 << i), t)).collect()
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}
