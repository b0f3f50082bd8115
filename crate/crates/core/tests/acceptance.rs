use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hbcells::combinatorics::{
    bounded_partition_count, hilbert_function_of_staircase, max_jump, partitions, strict_partitions, HilbertFunction,
    Partition,
};
use hbcells::decomposition::{
    cell, cellular_decomposition, complete_intersection_check, fibration_check, hilbert_stratum, plausibility_check,
    verify_conjecture,
};
use hbcells::field::{PrimeField, Rationals, Ring, DEFAULT_PRIME};
use hbcells::hbmatrix::{
    cell_dimension, hom_dimension_formula_lex, hom_subcell_dimension, homogeneous_mask, lex_cell_dimension_formula,
    param_shape, ShapeKind,
};
use hbcells::symbolic::{betti_strata, initial_projection, minor_ideal, mu_of_point, ParamBivarPoly, ParamPoly};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let spent = start.elapsed();
    ensure(spent < budget, || format!("took {spent:?}, budget {budget:?}"))
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn param_poly(s: &str) -> ParamPoly {
    s.parse::<ParamBivarPoly>().unwrap().coefficient((0, 0))
}

fn same_up_to_sign(found: &[ParamPoly], expected: &[&str]) -> bool {
    found.len() == expected.len()
        && expected
            .iter()
            .all(|e| found.iter().any(|f| f.eq_up_to_sign(&param_poly(e))))
}

fn labels(v: &[ParamPoly]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn six_points() -> Outcome {
    let start = Instant::now();
    let report = cellular_decomposition(6).map_err(|e| e.to_string())?;
    let dims: Vec<Vec<usize>> = report
        .groups
        .iter()
        .map(|g| g.cells.iter().map(|c| c.dim).collect())
        .collect();
    let expected = vec![vec![0], vec![1, 2, 2, 3, 3, 4], vec![3, 4], vec![4, 5]];
    ensure(report.cells().count() == 11, || format!("{} cells", report.cells().count()))?;
    ensure(dims == expected, || format!("group dimensions {dims:?}"))?;
    ensure(report.dimension_vector == [1, 1, 2, 3, 3, 1], || {
        format!("dimension vector {:?}", report.dimension_vector)
    })?;
    within(start, Duration::from_secs(1))
}

fn rs10_example() -> Outcome {
    let q = Rationals;
    let m = part(&[1, 5, 8, 10]);
    let c = cell(&m);
    ensure(c.dim == 20 && c.dim_hom == 4, || format!("D = {}, D_hom = {}", c.dim, c.dim_hom))?;
    let mask = homogeneous_mask(&m, &c.params.shape);
    ensure(mask == [2, 10, 17, 20], || format!("mask {mask:?}"))?;
    let strata = betti_strata(&m);
    let top = strata.strata.first().ok_or("no strata")?;
    ensure(top.d == 5, || format!("top stratum V_{}", top.d))?;
    ensure(
        labels(&top.vanishing) == ["c1", "c5", "c6", "c12", "c13", "c17"],
        || format!("V_5 = V{:?}", labels(&top.vanishing)),
    )?;
    let quadrics = minor_ideal(&c.nbar(), 2);
    ensure(
        same_up_to_sign(
            &quadrics,
            &["c1*c6", "c1*c13", "c1*c17", "c5*c17", "c6*c17", "c5*c13 - c6*c12"],
        ),
        || format!("I_2 = {:?}", labels(&quadrics)),
    )?;
    let mut point = vec![q.zero(); c.dim];
    for k in [1, 6, 17] {
        point[k - 1] = q.one();
    }
    let mu = mu_of_point(&c.nbar(), &point, &q).map_err(|e| e.to_string())?;
    ensure(mu == 2, || format!("mu = {mu}"))?;
    let proj = initial_projection(&q, &m, &c.params.shape, &point).map_err(|e| e.to_string())?;
    let kept: Vec<usize> = (0..c.dim).filter(|&k| !q.is_zero(&proj[k])).map(|k| k + 1).collect();
    ensure(kept == [17], || format!("projection keeps {kept:?}"))
}

fn second_example() -> Outcome {
    let m = part(&[2, 3, 5, 7]);
    let c = cell(&m);
    ensure(c.dim == 12 && c.dim_hom == 7, || format!("D = {}, D_hom = {}", c.dim, c.dim_hom))?;
    let strata = betti_strata(&m);
    let top = strata.strata.first().ok_or("no strata")?;
    ensure(
        top.d == 5 && labels(&top.vanishing) == ["c3", "c5", "c7", "c9", "c10"],
        || format!("V_{} = V{:?}", top.d, labels(&top.vanishing)),
    )?;
    let quadrics = minor_ideal(&c.nbar(), 2);
    ensure(
        same_up_to_sign(&quadrics, &["c3*c10", "c5*c10", "c3*c9 - c5*c7"]),
        || format!("I_2 = {:?}", labels(&quadrics)),
    )
}

fn dimension_formulas() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=30 {
        for m in strict_partitions(n).map_err(|e| e.to_string())? {
            let h = hilbert_function_of_staircase(&m);
            let d = cell_dimension(&param_shape(&m, ShapeKind::Full));
            ensure(lex_cell_dimension_formula(&h) == d, || format!("{m}: dimension formula"))?;
            ensure(hom_dimension_formula_lex(&h) == hom_subcell_dimension(&m), || {
                format!("{m}: homogeneous dimension formula")
            })?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "nothing checked".into())?;
    within(start, Duration::from_secs(30))
}

fn plausibility() -> Outcome {
    let start = Instant::now();
    for n in 1..=40 {
        let r = plausibility_check(n).map_err(|e| e.to_string())?;
        ensure(r.passed && r.discrepancies.is_empty(), || format!("n = {n}: {:?}", r.discrepancies))?;
        let expected: Vec<u64> = (0..n).map(|i| bounded_partition_count(i, n - i) as u64).collect();
        ensure(r.dimension_vector == expected, || format!("n = {n}: {:?}", r.dimension_vector))?;
    }
    within(start, Duration::from_secs(600))
}

fn fibration() -> Outcome {
    let start = Instant::now();
    for n in 1..=20 {
        let r = fibration_check(n).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("n = {n}"))?;
    }
    within(start, Duration::from_secs(60))
}

fn verification() -> Outcome {
    let start = Instant::now();
    let field = PrimeField::new(DEFAULT_PRIME).unwrap();
    for n in 1..=7 {
        let r = verify_conjecture(n, 25, &field, 1).map_err(|e| e.to_string())?;
        ensure(r.cells.len() == partitions(n).unwrap().len(), || format!("n = {n}: cell count"))?;
        for c in &r.cells {
            ensure(c.passed() && c.passed_trials == 25, || format!("{}: {:?}", c.m, c.failures))?;
            ensure(c.injective == Some(true) || c.dim == 0, || format!("{}: not injective", c.m))?;
        }
        ensure(r.passed, || format!("n = {n}"))?;
    }
    within(start, Duration::from_secs(300))
}

fn complete_intersections() -> Outcome {
    let mut seen = 0;
    for n in 1..=12 {
        let hs: BTreeSet<HilbertFunction> = partitions(n)
            .unwrap()
            .iter()
            .map(hilbert_function_of_staircase)
            .collect();
        for h in hs {
            let r = complete_intersection_check(&h).map_err(|e| e.to_string())?;
            let delta_one = max_jump(&h) == 1;
            ensure(r.exists == delta_one, || format!("h = {h}: exists = {}", r.exists))?;
            ensure(r.witness.is_some() == delta_one, || format!("h = {h}: witness {:?}", r.witness))?;
            seen += 1;
        }
    }
    ensure(seen > 0, || "no Hilbert functions".into())
}

fn socle_stratum() -> Outcome {
    for n in 2..=15u32 {
        let h = HilbertFunction::new(vec![1; n as usize]).map_err(|e| e.to_string())?;
        let cells = hilbert_stratum(&h).map_err(|e| e.to_string())?;
        let mut dims: Vec<usize> = cells.iter().map(|c| c.dim).collect();
        dims.sort_unstable();
        let n = n as usize;
        ensure(dims == [n - 2, n - 1], || format!("n = {n}: dimensions {dims:?}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("n = 6 decomposition", six_points),
        ("cell (1,5,8,10) and its strata", rs10_example),
        ("cell (2,3,5,7) and its strata", second_example),
        ("dimension formulas for lex cells, n <= 30", dimension_formulas),
        ("plausibility, n <= 40", plausibility),
        ("fibration constancy, n <= 20", fibration),
        ("randomized verification, n <= 7", verification),
        ("complete intersections, n <= 12", complete_intersections),
        ("socle stratum, 2 <= n <= 15", socle_stratum),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: pass  {name} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
