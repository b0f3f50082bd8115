//! Maximal minors of parameterized Hilbert-Burch matrices, the constant-term
//! matrix `N̄`, its determinantal ideals, and specialization to a field.

pub mod poly;

pub use poly::{ParamBivarPoly, ParamBivarRing, ParamMono, ParamPoly, ParamRing};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::field::{rank, Field, PrimeField, Rationals, Ring, DEFAULT_PRIME};
use crate::hbmatrix::{generic_matrix, homogeneous_mask, param_shape, ParamShape, ShapeKind};
use crate::localsb::{BivarRing, Poly};
use crate::matrix::{minor, row_deleted_minors, subsets, Matrix};
use crate::staircase::is_lex_segment;

/// `g_i = (-1)^{t-i} det(M without row i+1)` for `i = 0..=t`.
pub fn maximal_minors(m: &Matrix<ParamBivarPoly>) -> Vec<ParamBivarPoly> {
    let t = m.ncols();
    let ring = ParamBivarRing;
    row_deleted_minors(&ring, m)
        .into_iter()
        .enumerate()
        .map(|(i, g)| if (t - i).is_multiple_of(2) { g } else { ring.neg(&g) })
        .collect()
}

/// Constant terms of the entries of `H + N`.
///
/// Besides the degree-0 parameters this records the unit `y^0` on the
/// diagonal wherever `d_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConstantMatrix {
    pub entries: Matrix<ParamPoly>,
}

impl ConstantMatrix {
    pub fn t(&self) -> usize {
        self.entries.ncols()
    }

    /// Constant part of every entry of a parameterized matrix.
    pub fn of(m: &Matrix<ParamBivarPoly>) -> Self {
        Self {
            entries: m.map(|e| e.coefficient((0, 0))),
        }
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> Vec<ParamPoly> {
        self.entries.iter().filter(|e| !e.is_zero()).cloned().collect()
    }

    /// Maximum size of a matching between rows and columns through nonzero
    /// entries: an upper bound for the rank at every point.
    pub fn structural_rank(&self) -> usize {
        let (rows, cols) = (self.entries.nrows(), self.entries.ncols());
        let mut owner: Vec<Option<usize>> = vec![None; cols];
        fn augment(
            c: &ConstantMatrix,
            r: usize,
            seen: &mut [bool],
            owner: &mut [Option<usize>],
        ) -> bool {
            for j in 0..c.entries.ncols() {
                if c.entries.get(r + 1, j + 1).is_zero() || seen[j] {
                    continue;
                }
                seen[j] = true;
                if owner[j].is_none_or(|o| augment(c, o, seen, owner)) {
                    owner[j] = Some(r);
                    return true;
                }
            }
            false
        }
        (0..rows)
            .filter(|&r| augment(self, r, &mut vec![false; cols], &mut owner))
            .count()
    }
}

pub fn constant_term_matrix(m: &Partition, shape: &ParamShape) -> ConstantMatrix {
    ConstantMatrix::of(&generic_matrix(m, shape).0)
}

/// Generators of `I_k(N̄)`: all nonzero `k x k` minors, row subsets first,
/// exact duplicates removed. `I_0 = (1)`; `k` beyond the matrix size gives no generators.
pub fn minor_ideal(nbar: &ConstantMatrix, k: usize) -> Vec<ParamPoly> {
    if k == 0 {
        return vec![ParamPoly::one()];
    }
    let (rows, cols) = (nbar.entries.nrows(), nbar.entries.ncols());
    let mut out: Vec<ParamPoly> = Vec::new();
    for r in subsets(rows, k) {
        for c in subsets(cols, k) {
            let g = minor(&ParamRing, &nbar.entries, &r, &c);
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// The attainable minimal numbers of generators `lo..=hi` in a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuRange {
    pub lo: usize,
    pub hi: usize,
}

impl MuRange {
    pub fn contains(&self, mu: usize) -> bool {
        self.lo <= mu && mu <= self.hi
    }

    pub fn values(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

/// `hi = t + 1 - rank(N̄(0))`, `lo = t + 1 - generic rank`.
///
/// The generic rank is the largest rank seen at random points of `F_32003`,
/// stopping early once it meets the matching bound.
pub fn mu_range(nbar: &ConstantMatrix) -> MuRange {
    let t = nbar.t();
    let at_zero = nbar.entries.map(|e| e.constant_term());
    let q = Rationals;
    let zero_rows: Vec<Vec<_>> = at_zero
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| q.from_bigint(&v).expect("integer")).collect())
        .collect();
    let min_rank = rank(&q, &zero_rows);

    let bound = nbar.structural_rank();
    let field = PrimeField::new(DEFAULT_PRIME).expect("prime");
    let params = nbar.entries.iter().map(ParamPoly::max_param).max().unwrap_or(0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best = min_rank;
    for _ in 0..8 {
        if best >= bound {
            break;
        }
        let point: Vec<u64> = (0..params).map(|_| rng.gen_range(1..DEFAULT_PRIME)).collect();
        let r = rank_at(&field, nbar, &point).expect("point covers all parameters");
        best = best.max(r);
    }
    MuRange {
        lo: t + 1 - best,
        hi: t + 1 - min_rank,
    }
}

fn rank_at<F: Field>(field: &F, nbar: &ConstantMatrix, assignment: &[F::Elem]) -> Result<usize> {
    let m = nbar.entries.try_map(|e| specialize_coefficient(field, e, assignment))?;
    Ok(rank(field, &m.to_rows()))
}

/// `t + 1 - rank N̄(p)`: the minimal number of generators of the ideal at `p`.
pub fn mu_of_point<F: Field>(nbar: &ConstantMatrix, assignment: &[F::Elem], field: &F) -> Result<usize> {
    check_assignment(field, nbar.entries.iter().map(ParamPoly::max_param).max().unwrap_or(0), assignment)?;
    Ok(nbar.t() + 1 - rank_at(field, nbar, assignment)?)
}

/// `V_d = V(I_{t+2-d}(N̄)) \ V(I_{t+1-d}(N̄))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub d: usize,
    /// Generators of `I_{t+2-d}(N̄)`, which vanish on the stratum.
    pub vanishing: Vec<ParamPoly>,
    /// Generators of `I_{t+1-d}(N̄)`, not all zero on the stratum.
    pub nonvanishing: Vec<ParamPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiStrata {
    pub m: Partition,
    pub conjectural: bool,
    pub nbar: ConstantMatrix,
    pub mu: MuRange,
    /// Ordered by decreasing `d`.
    pub strata: Vec<Stratum>,
}

fn stratum(nbar: &ConstantMatrix, d: usize) -> Stratum {
    let t = nbar.t();
    Stratum {
        d,
        vanishing: minor_ideal(nbar, t + 2 - d),
        nonvanishing: minor_ideal(nbar, t + 1 - d),
    }
}

/// Strata of the full-shape cell for every attainable number of generators.
pub fn betti_strata(m: &Partition) -> BettiStrata {
    let nbar = constant_term_matrix(m, &param_shape(m, ShapeKind::Full));
    let mu = mu_range(&nbar);
    let strata = mu.values().rev().map(|d| stratum(&nbar, d)).collect();
    BettiStrata {
        m: m.clone(),
        conjectural: !is_lex_segment(m),
        nbar,
        mu,
        strata,
    }
}

pub fn betti_stratum(m: &Partition, d: usize) -> Result<Stratum> {
    let nbar = constant_term_matrix(m, &param_shape(m, ShapeKind::Full));
    let mu = mu_range(&nbar);
    if !mu.contains(d) {
        return Err(Error::StratumRange { d, lo: mu.lo, hi: mu.hi });
    }
    Ok(stratum(&nbar, d))
}

/// Keeps the coordinates of the homogeneous sub-cell and zeroes the rest.
pub fn initial_projection<F: Field>(
    field: &F,
    m: &Partition,
    shape: &ParamShape,
    assignment: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    let dim = crate::hbmatrix::cell_dimension(shape);
    if assignment.len() != dim {
        return Err(Error::MissingParameter {
            expected: dim,
            got: assignment.len(),
        });
    }
    let mask = homogeneous_mask(m, shape);
    Ok(assignment
        .iter()
        .enumerate()
        .map(|(k, v)| if mask.contains(&(k + 1)) { v.clone() } else { field.zero() })
        .collect())
}

fn check_assignment<F: Field>(field: &F, needed: u32, assignment: &[F::Elem]) -> Result<()> {
    if assignment.len() < needed as usize {
        return Err(Error::MissingParameter {
            expected: needed as usize,
            got: assignment.len(),
        });
    }
    if let Some(bad) = assignment.iter().find(|v| !field.contains(v)) {
        return Err(Error::FieldMismatch(format!(
            "{bad:?} is not an element of a field of characteristic {}",
            field.characteristic()
        )));
    }
    Ok(())
}

fn specialize_coefficient<F: Field>(field: &F, c: &ParamPoly, assignment: &[F::Elem]) -> Result<F::Elem> {
    let mut acc = field.zero();
    for (mono, coeff) in c.terms() {
        let mut term = field.from_bigint(coeff)?;
        for &(k, e) in mono.factors() {
            let v = assignment.get(k as usize - 1).ok_or(Error::MissingParameter {
                expected: k as usize,
                got: assignment.len(),
            })?;
            for _ in 0..e {
                term = field.mul(&term, v);
            }
        }
        acc = field.add(&acc, &term);
    }
    Ok(acc)
}

/// Substitutes `c_k = assignment[k-1]` into one polynomial.
pub fn specialize_poly<F: Field>(
    ring: &BivarRing<F>,
    p: &ParamBivarPoly,
    assignment: &[F::Elem],
) -> Result<Poly<F::Elem>> {
    check_assignment(&ring.field, p.max_param(), assignment)?;
    let terms = p
        .terms()
        .map(|(e, c)| Ok((*e, specialize_coefficient(&ring.field, c, assignment)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ring.from_terms(terms))
}

/// Substitutes a parameter point into every entry.
pub fn specialize<F: Field>(
    m: &Matrix<ParamBivarPoly>,
    assignment: &[F::Elem],
    field: &F,
) -> Result<Matrix<Poly<F::Elem>>> {
    let needed = m.iter().map(ParamBivarPoly::max_param).max().unwrap_or(0);
    check_assignment(field, needed, assignment)?;
    let ring = BivarRing::new(field.clone());
    m.try_map(|e| specialize_poly(&ring, e, assignment))
}

/// Maximal minors of a specialized matrix with the same sign convention as
/// [`maximal_minors`].
pub fn specialized_minors<F: Field>(ring: &BivarRing<F>, m: &Matrix<Poly<F::Elem>>) -> Vec<Poly<F::Elem>> {
    let t = m.ncols();
    row_deleted_minors(ring, m)
        .into_iter()
        .enumerate()
        .map(|(i, g)| if (t - i).is_multiple_of(2) { g } else { ring.neg(&g) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{hilbert_function_of_staircase, max_jump, partitions};
    use crate::hbmatrix::{canonical_matrix, cell_dimension};
    use crate::staircase::monomial_generators;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn lower(m: &Partition) -> ConstantMatrix {
        constant_term_matrix(m, &param_shape(m, ShapeKind::Lower))
    }

    fn params(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn minors_of_canonical_matrix_are_the_monomials() {
        for n in 1..=20 {
            for m in partitions(n).unwrap() {
                let g = maximal_minors(&canonical_matrix(&m));
                let expect: Vec<ParamBivarPoly> = monomial_generators(&m)
                    .into_iter()
                    .map(|e| ParamBivarPoly::monomial(1, e))
                    .collect();
                assert_eq!(g, expect, "{m}");
            }
        }
    }

    #[test]
    fn single_column_minors() {
        let m = p(&[6]);
        let (mat, _) = generic_matrix(&m, &param_shape(&m, ShapeKind::Lower));
        let g = maximal_minors(&mat);
        assert_eq!(g[0].to_string(), "x - c1*y - c2*y^2 - c3*y^3 - c4*y^4 - c5*y^5");
        assert_eq!(g[1].to_string(), "y^6");
    }

    #[test]
    fn example_three_three_constant_matrix() {
        let m = p(&[1, 5, 8, 10]);
        let nbar = lower(&m);
        let entries: Vec<String> = nbar.nonzero_entries().iter().map(ToString::to_string).collect();
        assert_eq!(entries, params(&["c1", "c5", "c6", "c12", "c13", "c17"]));
        assert_eq!(minor_ideal(&nbar, 1).len(), 6);
        let quadrics: Vec<String> = minor_ideal(&nbar, 2).iter().map(ToString::to_string).collect();
        assert_eq!(quadrics.len(), 6);
        let cubic: Vec<String> = minor_ideal(&nbar, 3).iter().map(ToString::to_string).collect();
        assert_eq!(cubic.len(), 1);
        assert!(cubic[0] == "c1*c6*c17" || cubic[0] == "-c1*c6*c17", "{cubic:?}");
    }

    #[test]
    fn example_three_four_strata() {
        let m = p(&[2, 3, 5, 7]);
        let nbar = lower(&m);
        let linear: Vec<String> = minor_ideal(&nbar, 1).iter().map(ToString::to_string).collect();
        assert_eq!(linear, params(&["c3", "c5", "c7", "c9", "c10"]));
        let quad = minor_ideal(&nbar, 2);
        let expect = [
            &ParamPoly::param(3) * &ParamPoly::param(10),
            &ParamPoly::param(5) * &ParamPoly::param(10),
            &ParamPoly::param(3) * &ParamPoly::param(9) - &ParamPoly::param(5) * &ParamPoly::param(7),
        ];
        assert_eq!(quad.len(), 3);
        for e in &expect {
            assert!(quad.iter().any(|q| q.eq_up_to_sign(e)), "{e} missing from {quad:?}");
        }
        let strata = betti_strata(&m);
        assert_eq!(strata.strata.iter().map(|s| s.d).collect::<Vec<_>>(), vec![5, 4, 3]);
        assert!(!strata.conjectural);
    }

    #[test]
    fn zero_ideal_and_unit_conventions() {
        let m = p(&[6]);
        let nbar = lower(&m);
        assert_eq!(minor_ideal(&nbar, 0), vec![ParamPoly::one()]);
        assert!(minor_ideal(&nbar, 1).is_empty());
        assert!(minor_ideal(&nbar, 2).is_empty());
        let strata = betti_strata(&m);
        assert_eq!(strata.strata.len(), 1);
        assert_eq!(strata.strata[0].d, 2);
        assert!(strata.strata[0].vanishing.is_empty());
        assert_eq!(
            betti_stratum(&m, 3),
            Err(Error::StratumRange { d: 3, lo: 2, hi: 2 })
        );
    }

    #[test]
    fn mu_of_example_points() {
        let q = Rationals;
        let m = p(&[1, 5, 8, 10]);
        let nbar = lower(&m);
        let mut point = vec![q.zero(); 20];
        for k in [1, 6, 17] {
            point[k - 1] = q.one();
        }
        assert_eq!(mu_of_point(&nbar, &point, &q).unwrap(), 2);
        let shape = param_shape(&m, ShapeKind::Lower);
        let proj = initial_projection(&q, &m, &shape, &point).unwrap();
        let kept: Vec<usize> = (0..20).filter(|&k| !q.is_zero(&proj[k])).map(|k| k + 1).collect();
        assert_eq!(kept, vec![17]);
        assert_eq!(initial_projection(&q, &m, &shape, &proj).unwrap(), proj);

        let m = p(&[2, 3, 5, 7]);
        let nbar = lower(&m);
        let mut point = vec![q.zero(); 12];
        point[2] = q.one();
        assert_eq!(mu_of_point(&nbar, &point, &q).unwrap(), 4);
        assert_eq!(mu_of_point(&nbar, &vec![q.zero(); 12], &q).unwrap(), 5);
    }

    #[test]
    fn specialization_errors() {
        let f = PrimeField::new(7).unwrap();
        let m = p(&[2, 4]);
        let (mat, _) = generic_matrix(&m, &param_shape(&m, ShapeKind::Lower));
        assert_eq!(
            specialize(&mat, &[1u64, 2], &f),
            Err(Error::MissingParameter { expected: 4, got: 2 })
        );
        assert!(matches!(specialize(&mat, &[1u64, 2, 3, 9], &f), Err(Error::FieldMismatch(_))));
        let zero = specialize(&mat, &[0u64; 4], &f).unwrap();
        let h = specialize(&canonical_matrix(&m), &[] as &[u64], &f).unwrap();
        assert_eq!(zero, h);
    }

    #[test]
    fn specialization_commutes_with_minors() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let ring = BivarRing::new(f);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=10 {
            for m in partitions(n).unwrap() {
                let shape = param_shape(&m, ShapeKind::Full);
                let (mat, idx) = generic_matrix(&m, &shape);
                let symbolic = maximal_minors(&mat);
                for _ in 0..2 {
                    let point: Vec<u64> = (0..idx.len()).map(|_| rng.gen_range(0..DEFAULT_PRIME)).collect();
                    let direct = specialized_minors(&ring, &specialize(&mat, &point, &f).unwrap());
                    let later: Vec<_> = symbolic
                        .iter()
                        .map(|g| specialize_poly(&ring, g, &point).unwrap())
                        .collect();
                    assert_eq!(direct, later, "{m}");
                }
            }
        }
    }

    #[test]
    fn mu_bounds_hold_for_lex_cells() {
        for n in 1..=12 {
            for m in partitions(n).unwrap() {
                let nbar = constant_term_matrix(&m, &param_shape(&m, ShapeKind::Full));
                let range = mu_range(&nbar);
                let delta = max_jump(&hilbert_function_of_staircase(&m)) as usize;
                assert!(range.lo > delta, "{m}");
                assert!(range.hi <= m.t() + 1, "{m}");
                if is_lex_segment(&m) {
                    assert_eq!(range.lo, delta + 1, "{m}");
                    assert_eq!(range.hi, m.t() + 1, "{m}");
                }
                let _ = cell_dimension(&param_shape(&m, ShapeKind::Full));
            }
        }
    }
}
