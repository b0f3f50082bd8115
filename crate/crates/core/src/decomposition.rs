//! Cells, cellular decompositions of `Hilb^n`, counting checks and the
//! randomized verification of the parametrization.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    bounded_partition_count, hilbert_function_of_staircase, lex_segment_of, max_jump, partitions,
    HilbertFunction, Partition,
};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::hbmatrix::{
    canonical_matrix, cell_dimension, generic_matrix, hom_subcell_dimension, param_shape, ParamIndex,
    ParamShape, ShapeKind,
};
use crate::localsb::{
    hilbert_function_of_quotient, leading_term_ideal, reduced_standard_basis, standard_basis, BivarRing,
    SbOptions,
};
use crate::matrix::Matrix;
use crate::staircase::{degree_matrix, minimal_generators, satisfies_lex_gb_condition, DegreeMatrix, Exponent};
use crate::symbolic::{
    maximal_minors, mu_of_point, mu_range, specialize_poly, ConstantMatrix, MuRange, ParamBivarPoly,
};

mod monomial_strings {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::staircase::{format_monomial, Exponent};

    pub fn serialize<S: Serializer>(v: &[Exponent], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|e| format_monomial(*e)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Exponent>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse(s).ok_or_else(|| D::Error::custom(format!("bad monomial {s:?}"))))
            .collect()
    }

    pub fn parse(s: &str) -> Option<Exponent> {
        let s = s.trim();
        if s == "1" {
            return Some((0, 0));
        }
        let mut e = (0, 0);
        for factor in s.split('*') {
            let (var, k) = match factor.split_once('^') {
                Some((v, k)) => (v, k.parse().ok()?),
                None => (factor, 1),
            };
            match var {
                "x" => e.0 += k,
                "y" => e.1 += k,
                _ => return None,
            }
        }
        Some(e)
    }
}

/// Deformation parameters of a cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellParams {
    pub shape: ParamShape,
    pub index: ParamIndex,
}

/// One Groebner cell with everything needed to print or verify it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub m: Partition,
    /// Minimal monomial generators, decreasing in x.
    #[serde(rename = "E", with = "monomial_strings")]
    pub generators: Vec<Exponent>,
    pub d: Vec<u32>,
    #[serde(rename = "U")]
    pub degree_matrix: DegreeMatrix,
    pub hilb: HilbertFunction,
    #[serde(rename = "H")]
    pub canonical: Matrix<ParamBivarPoly>,
    #[serde(rename = "M")]
    pub matrix: Matrix<ParamBivarPoly>,
    #[serde(rename = "N")]
    pub params: CellParams,
    #[serde(rename = "I")]
    pub minors: Vec<ParamBivarPoly>,
    pub dim: usize,
    pub dim_hom: usize,
    /// The parametrization is a theorem for this staircase, not only conjectural.
    pub proven: bool,
}

impl Cell {
    pub fn t(&self) -> usize {
        self.m.t()
    }

    pub fn nbar(&self) -> ConstantMatrix {
        ConstantMatrix::of(&self.matrix)
    }

    pub fn mu_range(&self) -> MuRange {
        mu_range(&self.nbar())
    }

    pub fn summary(&self) -> CellSummary {
        CellSummary {
            m: self.m.clone(),
            hilb: self.hilb.clone(),
            dim: self.dim,
            dim_hom: self.dim_hom,
            proven: self.proven,
        }
    }
}

pub fn cell(m: &Partition) -> Cell {
    let shape = param_shape(m, ShapeKind::Full);
    let (matrix, index) = generic_matrix(m, &shape);
    Cell {
        m: m.clone(),
        generators: minimal_generators(m),
        d: m.differences(),
        degree_matrix: degree_matrix(m),
        hilb: hilbert_function_of_staircase(m),
        canonical: canonical_matrix(m),
        minors: maximal_minors(&matrix),
        matrix,
        dim: cell_dimension(&shape),
        dim_hom: hom_subcell_dimension(m),
        proven: satisfies_lex_gb_condition(m),
        params: CellParams { shape, index },
    }
}

/// The counting data of a cell, without matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSummary {
    pub m: Partition,
    pub hilb: HilbertFunction,
    pub dim: usize,
    pub dim_hom: usize,
    pub proven: bool,
}

pub fn cell_summary(m: &Partition) -> CellSummary {
    CellSummary {
        m: m.clone(),
        hilb: hilbert_function_of_staircase(m),
        dim: cell_dimension(&param_shape(m, ShapeKind::Full)),
        dim_hom: hom_subcell_dimension(m),
        proven: satisfies_lex_gb_condition(m),
    }
}

fn summaries(n: u32) -> Result<Vec<CellSummary>> {
    Ok(partitions(n)?.par_iter().map(cell_summary).collect())
}

/// Cells sharing one Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertGroup {
    pub hilb: HilbertFunction,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub n: u32,
    /// Hilbert functions in decreasing lexicographic order; cells by `(dim, m)`.
    pub groups: Vec<HilbertGroup>,
    /// `a_i`: number of cells of dimension `i`, for `i = 0..n`.
    pub dimension_vector: Vec<u64>,
    /// `b_{2i} = P(i, n - i)`.
    pub betti_numbers: Vec<u64>,
    pub plausible: bool,
    pub fibration: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<VerificationReport>,
}

impl DecompositionReport {
    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.groups.iter().flat_map(|g| g.cells.iter())
    }
}

fn dimension_vector<'a>(n: u32, dims: impl Iterator<Item = &'a usize>) -> Vec<u64> {
    let mut a = vec![0u64; n as usize];
    for &d in dims {
        if d >= a.len() {
            a.resize(d + 1, 0);
        }
        a[d] += 1;
    }
    a
}

pub fn cellular_decomposition(n: u32) -> Result<DecompositionReport> {
    let cells: Vec<Cell> = partitions(n)?.par_iter().map(cell).collect();
    let dims: Vec<usize> = cells.iter().map(|c| c.dim).collect();
    let dimension_vector = dimension_vector(n, dims.iter());
    let mut by_h: BTreeMap<HilbertFunction, Vec<Cell>> = BTreeMap::new();
    for c in cells {
        by_h.entry(c.hilb.clone()).or_default().push(c);
    }
    let groups: Vec<HilbertGroup> = by_h
        .into_iter()
        .rev()
        .map(|(hilb, mut cells)| {
            cells.sort_by(|a, b| (a.dim, &a.m).cmp(&(b.dim, &b.m)));
            HilbertGroup { hilb, cells }
        })
        .collect();
    let summaries: Vec<CellSummary> = groups.iter().flat_map(|g| g.cells.iter().map(Cell::summary)).collect();
    Ok(DecompositionReport {
        n,
        dimension_vector,
        betti_numbers: betti_numbers_punctual(n)?,
        plausible: plausibility_from(n, &summaries).passed,
        fibration: fibration_from(n, &summaries).passed,
        groups,
        verification: None,
    })
}

/// `b_{2i} = P(i, n - i)` for `i = 0..n`.
pub fn betti_numbers_punctual(n: u32) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::EmptyInput("n must be positive"));
    }
    Ok((0..n).map(|i| bounded_partition_count(i, n - i) as u64).collect())
}

/// Cells whose Hilbert function is `h`, sorted by `(dim, m)`.
pub fn hilbert_stratum(h: &HilbertFunction) -> Result<Vec<CellSummary>> {
    let mut cells: Vec<CellSummary> = summaries(h.n())?.into_iter().filter(|c| c.hilb == *h).collect();
    cells.sort_by(|a, b| (a.dim, &a.m).cmp(&(b.dim, &b.m)));
    Ok(cells)
}

/// Betti numbers of the stratum of ideals with Hilbert function `h`, read off
/// from its cell dimensions: `b_{2i}` is the number of cells of dimension `i`.
pub fn betti_numbers_of_stratum(h: &HilbertFunction) -> Result<Vec<u64>> {
    let cells = hilbert_stratum(h)?;
    Ok(dimension_vector(0, cells.iter().map(|c| &c.dim)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub dim: usize,
    pub found: u64,
    pub expected: u64,
    pub cells: Vec<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlausibilityReport {
    pub n: u32,
    pub passed: bool,
    pub dimension_vector: Vec<u64>,
    pub expected: Vec<u64>,
    pub discrepancies: Vec<Discrepancy>,
}

fn plausibility_from(n: u32, cells: &[CellSummary]) -> PlausibilityReport {
    let found = dimension_vector(n, cells.iter().map(|c| &c.dim));
    let expected: Vec<u64> = (0..n).map(|i| bounded_partition_count(i, n - i) as u64).collect();
    let discrepancies: Vec<Discrepancy> = (0..found.len().max(expected.len()))
        .filter_map(|i| {
            let (f, e) = (found.get(i).copied().unwrap_or(0), expected.get(i).copied().unwrap_or(0));
            (f != e).then(|| Discrepancy {
                dim: i,
                found: f,
                expected: e,
                cells: cells.iter().filter(|c| c.dim == i).map(|c| c.m.clone()).collect(),
            })
        })
        .collect();
    PlausibilityReport {
        n,
        passed: discrepancies.is_empty(),
        dimension_vector: found,
        expected,
        discrepancies,
    }
}

/// Compares the number of cells of each dimension with `P(i, n - i)`.
pub fn plausibility_check(n: u32) -> Result<PlausibilityReport> {
    Ok(plausibility_from(n, &summaries(n)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationGroup {
    pub hilb: HilbertFunction,
    /// Distinct values of `dim - dim_hom` over the group, ascending.
    pub differences: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationReport {
    pub n: u32,
    pub passed: bool,
    pub groups: Vec<FibrationGroup>,
}

fn fibration_from(n: u32, cells: &[CellSummary]) -> FibrationReport {
    let mut by_h: BTreeMap<&HilbertFunction, Vec<usize>> = BTreeMap::new();
    for c in cells {
        let diffs = by_h.entry(&c.hilb).or_default();
        let diff = c.dim - c.dim_hom;
        if !diffs.contains(&diff) {
            diffs.push(diff);
        }
    }
    let groups: Vec<FibrationGroup> = by_h
        .into_iter()
        .rev()
        .map(|(h, mut differences)| {
            differences.sort_unstable();
            FibrationGroup {
                hilb: h.clone(),
                differences,
            }
        })
        .collect();
    FibrationReport {
        n,
        passed: groups.iter().all(|g| g.differences.len() == 1),
        groups,
    }
}

/// Is `dim - dim_hom` constant on every Hilbert-function stratum?
pub fn fibration_check(n: u32) -> Result<FibrationReport> {
    Ok(fibration_from(n, &summaries(n)?))
}

/// Dimensions of the cells of `(n)` and `(1, ..., 1)`, the two cells with
/// Hilbert function `(1, ..., 1)`.
pub fn one_dimensional_socle_stratum(n: u32) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::EmptyInput("the socle stratum needs n >= 2"));
    }
    let top = cell_summary(&Partition::new(vec![n])?);
    let bottom = cell_summary(&Partition::new(vec![1; n as usize])?);
    Ok((top.dim, bottom.dim))
}

/// A point of the full-shape cell of `m` with `c = 1` at the degree-0 slots
/// `(j + offset + 1, j)`, `j = 1..=t-offset`, and 0 elsewhere; `None` if one
/// of these slots is not a parameter.
pub fn boxed_diagonal_point(m: &Partition, offset: usize) -> Option<Vec<i64>> {
    let shape = param_shape(m, ShapeKind::Full);
    let (_, index) = generic_matrix(m, &shape);
    let mut point = vec![0i64; index.len()];
    for j in 1..=m.t().saturating_sub(offset) {
        let k = index.label(j + offset + 1, j, 0)?;
        point[k - 1] = 1;
    }
    Some(point)
}

/// Existence of a complete intersection with Hilbert function `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersectionCheck {
    pub hilb: HilbertFunction,
    pub max_jump: u32,
    /// A two-generated ideal with this Hilbert function exists.
    pub exists: bool,
    /// Cell containing the constructed complete intersection.
    pub witness: Option<Partition>,
}

/// Decides whether some ideal with Hilbert function `h` has `μ = 2`.
///
/// Existence is shown by the boxed-diagonal point of the lex-segment cell;
/// non-existence by the bound `μ >= t + 1 - (matching number of N̄)` on every
/// cell of the stratum.
pub fn complete_intersection_check(h: &HilbertFunction) -> Result<CompleteIntersectionCheck> {
    let delta = max_jump(h);
    let lex = lex_segment_of(h)?;
    let q = Rationals;
    if let Some(point) = boxed_diagonal_point(&lex, 1) {
        let c = cell(&lex);
        let point: Vec<_> = point.iter().map(|&v| q.from_i64(v)).collect();
        if mu_of_point(&c.nbar(), &point, &q)? == 2 {
            return Ok(CompleteIntersectionCheck {
                hilb: h.clone(),
                max_jump: delta,
                exists: true,
                witness: Some(lex),
            });
        }
    }
    let mut exists = false;
    for summary in hilbert_stratum(h)? {
        let m = &summary.m;
        let nbar = ConstantMatrix::of(&generic_matrix(m, &param_shape(m, ShapeKind::Full)).0);
        if m.t() + 1 - nbar.structural_rank() <= 2 {
            exists = true;
        }
    }
    Ok(CompleteIntersectionCheck {
        hilb: h.clone(),
        max_jump: delta,
        exists,
        witness: None,
    })
}

/// A failed specialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub seed: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellVerification {
    pub m: Partition,
    pub dim: usize,
    pub trials: usize,
    pub passed_trials: usize,
    pub failures: Vec<TrialFailure>,
    /// Distinct points gave distinct reduced standard bases; `None` for 0-dimensional cells.
    pub injective: Option<bool>,
}

impl CellVerification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.injective != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u32,
    pub trials: usize,
    pub field: u64,
    pub seed: u64,
    pub passed: bool,
    pub cells: Vec<CellVerification>,
}

/// Number of distinct points compared per cell for injectivity.
pub const INJECTIVITY_POINTS: usize = 5;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial, a function of the base seed, the cell, a stream tag and the trial number only.
pub fn trial_seed(base: u64, m: &Partition, stream: u64, trial: usize) -> u64 {
    let mut s = splitmix64(base);
    for &p in m.parts() {
        s = splitmix64(s ^ p as u64);
    }
    s = splitmix64(s ^ (m.t() as u64) << 32);
    s = splitmix64(s ^ stream);
    splitmix64(s ^ trial as u64)
}

/// Each coordinate is 0 with probability 1/2, otherwise uniform in `F_p \ {0}`.
pub fn random_point(field: &PrimeField, dim: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..dim)
        .map(|_| if rng.gen_bool(0.5) { rng.gen_range(1..field.modulus()) } else { 0 })
        .collect()
}

fn check_point(cell: &Cell, ring: &BivarRing<PrimeField>, point: &[u64]) -> Result<Option<String>> {
    let generators = cell
        .minors
        .iter()
        .map(|g| specialize_poly(ring, g, point))
        .collect::<Result<Vec<_>>>()?;
    let sb = standard_basis(ring, &generators, SbOptions::for_colength(cell.m.n()))?;
    let lt = leading_term_ideal(&sb)?;
    if lt.m != cell.m {
        return Ok(Some(format!("leading ideal {} instead of {}", lt.m, cell.m)));
    }
    let hf = hilbert_function_of_quotient(&sb)?;
    if hf != cell.hilb {
        return Ok(Some(format!("Hilbert function {hf} instead of {}", cell.hilb)));
    }
    Ok(None)
}

fn verify_cell(cell: &Cell, trials: usize, field: &PrimeField, seed: u64) -> CellVerification {
    let ring = BivarRing::new(*field);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let s = trial_seed(seed, &cell.m, 0, trial);
        let point = random_point(field, cell.dim, s);
        let reason = match check_point(cell, &ring, &point) {
            Ok(None) => continue,
            Ok(Some(r)) => r,
            Err(e) => e.to_string(),
        };
        failures.push(TrialFailure { trial, seed: s, reason });
    }

    let injective = (cell.dim > 0).then(|| {
        let mut points: Vec<Vec<u64>> = Vec::new();
        let mut attempt = 0;
        while points.len() < INJECTIVITY_POINTS {
            let p = random_point(field, cell.dim, trial_seed(seed, &cell.m, 1, attempt));
            attempt += 1;
            if !points.contains(&p) {
                points.push(p);
            }
        }
        let bases = points
            .iter()
            .map(|p| {
                let generators = cell
                    .minors
                    .iter()
                    .map(|g| specialize_poly(&ring, g, p))
                    .collect::<Result<Vec<_>>>()?;
                reduced_standard_basis(&ring, &generators, SbOptions::for_colength(cell.m.n()))
                    .map(|b| b.elements)
            })
            .collect::<Result<Vec<_>>>();
        match bases {
            Ok(bases) => (0..bases.len()).all(|i| (i + 1..bases.len()).all(|j| bases[i] != bases[j])),
            Err(_) => false,
        }
    });

    CellVerification {
        m: cell.m.clone(),
        dim: cell.dim,
        trials,
        passed_trials: trials - failures.len(),
        failures,
        injective,
    }
}

/// Specializes every cell of `Hilb^n` at `trials` random points and checks
/// that the minors have the cell's leading ideal and Hilbert function, and
/// that distinct points give distinct ideals.
pub fn verify_conjecture(n: u32, trials: usize, field: &PrimeField, seed: u64) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::EmptyInput("at least one trial is required"));
    }
    let cells: Vec<Cell> = partitions(n)?.par_iter().map(cell).collect();
    let results: Vec<CellVerification> = cells
        .par_iter()
        .map(|c| verify_cell(c, trials, field, seed))
        .collect();
    Ok(VerificationReport {
        n,
        trials,
        field: field.modulus(),
        seed,
        passed: results.iter().all(CellVerification::passed),
        cells: results,
    })
}
