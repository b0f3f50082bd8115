//! Documents printed by the command-line tool, as JSON or aligned text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::decomposition::{
    Cell, DecompositionReport, FibrationReport, PlausibilityReport, VerificationReport,
};
use crate::hbmatrix::homogeneous_mask;
use crate::matrix::Matrix;
use crate::staircase::format_monomial;
use crate::symbolic::{betti_strata, BettiStrata, MuRange, ParamPoly};

/// All cells of `Hilb^n` sorted by `(dim, m)`, without grouping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellList {
    pub n: u32,
    pub cells: Vec<Cell>,
    pub dimension_vector: Vec<u64>,
    pub betti_numbers: Vec<u64>,
    pub plausible: bool,
    pub fibration: bool,
}

impl From<DecompositionReport> for CellList {
    fn from(r: DecompositionReport) -> Self {
        let mut cells: Vec<Cell> = r.groups.into_iter().flat_map(|g| g.cells).collect();
        cells.sort_by(|a, b| (a.dim, &a.m).cmp(&(b.dim, &b.m)));
        CellList {
            n: r.n,
            cells,
            dimension_vector: r.dimension_vector,
            betti_numbers: r.betti_numbers,
            plausible: r.plausible,
            fibration: r.fibration,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataDocument {
    #[serde(flatten)]
    pub strata: BettiStrata,
    pub dim: usize,
    pub homogeneous_mask: Vec<usize>,
}

pub fn strata_document(m: &Partition) -> StrataDocument {
    let c = crate::decomposition::cell(m);
    StrataDocument {
        strata: betti_strata(m),
        dim: c.dim,
        homogeneous_mask: homogeneous_mask(m, &c.params.shape),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub n: u32,
    pub passed: bool,
    pub plausibility: PlausibilityReport,
    pub fibration: FibrationReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<VerificationReport>,
}

impl CheckDocument {
    pub fn new(
        plausibility: PlausibilityReport,
        fibration: FibrationReport,
        verification: Option<VerificationReport>,
    ) -> Self {
        let passed = plausibility.passed && fibration.passed && verification.as_ref().is_none_or(|v| v.passed);
        CheckDocument {
            n: plausibility.n,
            passed,
            plausibility,
            fibration,
            verification,
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}

pub fn format_mu(mu: MuRange) -> String {
    mu.values().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn format_ideal(gens: &[String]) -> String {
    format!("({})", gens.join(", "))
}

/// `[a, b; c, d]`, rows separated by semicolons.
pub fn inline_matrix<T: ToString>(m: &Matrix<T>) -> String {
    let rows: Vec<String> = (1..=m.nrows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", rows.join("; "))
}

/// One line per row with aligned columns.
pub fn block_matrix<T: ToString>(m: &Matrix<T>, indent: &str) -> String {
    let cells: Vec<Vec<String>> = (1..=m.nrows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    let widths: Vec<usize> = (0..m.ncols())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{indent}| {} |", padded.join("  "));
    }
    out
}

fn table(header: &[&str], rows: &[Vec<String>], indent: &str) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            rows.iter()
                .map(|r| r[j].chars().count())
                .chain([header[j].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let last = cells.len() - 1;
        let body: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(j, c)| if j == last { c.to_string() } else { format!("{c:<w$}", w = widths[j]) })
            .collect();
        format!("{indent}{}\n", body.join("  "))
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn cell_row(c: &Cell, with_h: bool) -> Vec<String> {
    let mut row = vec![c.m.to_string()];
    if with_h {
        row.push(c.hilb.to_string());
    }
    row.extend([
        c.dim.to_string(),
        c.dim_hom.to_string(),
        format_mu(c.mu_range()),
        if c.proven { "yes" } else { "no" }.to_string(),
        inline_matrix(&c.matrix),
    ]);
    row
}

pub fn decomposition_table(report: &DecompositionReport, group_by_h: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, {} cells", report.n, report.cells().count());
    if group_by_h {
        for g in &report.groups {
            let _ = writeln!(out, "\nh = {}", g.hilb);
            let rows: Vec<Vec<String>> = g.cells.iter().map(|c| cell_row(c, false)).collect();
            out += &table(&["m", "dim", "dim_hom", "mu", "proven", "H+N"], &rows, "  ");
        }
        out.push('\n');
    } else {
        let list = CellList::from(report.clone());
        let rows: Vec<Vec<String>> = list.cells.iter().map(|c| cell_row(c, true)).collect();
        out += &table(&["m", "h", "dim", "dim_hom", "mu", "proven", "H+N"], &rows, "");
    }
    let _ = writeln!(out, "dimension vector a = {}", list_u64(&report.dimension_vector));
    let _ = writeln!(out, "P(i, n-i)          = {}", list_u64(&report.betti_numbers));
    let _ = writeln!(out, "plausibility check: {}", pass(report.plausible));
    let _ = writeln!(out, "fibration check:    {}", pass(report.fibration));
    out
}

fn list_u64(v: &[u64]) -> String {
    format!("({})", v.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn cell_table(c: &Cell) -> String {
    let mut out = String::new();
    let gens: Vec<String> = c.generators.iter().map(|e| format_monomial(*e)).collect();
    let d: Vec<String> = c.d.iter().map(u32::to_string).collect();
    let _ = writeln!(out, "m        {}", c.m);
    let _ = writeln!(out, "E        {}", format_ideal(&gens));
    let _ = writeln!(out, "d        ({})", d.join(","));
    let _ = writeln!(out, "h        {}", c.hilb);
    let _ = writeln!(out, "dim      {}", c.dim);
    let _ = writeln!(out, "dim_hom  {}", c.dim_hom);
    let _ = writeln!(out, "mu       {}", format_mu(c.mu_range()));
    let _ = writeln!(out, "proven   {}", if c.proven { "yes" } else { "no (conjectural)" });
    let u = Matrix::try_from(c.degree_matrix.rows().to_vec()).expect("rectangular");
    let _ = writeln!(out, "U =");
    out += &block_matrix(&u, "  ");
    let _ = writeln!(out, "H + N =");
    out += &block_matrix(&c.matrix, "  ");
    let _ = writeln!(out, "I =");
    for (i, g) in c.minors.iter().enumerate() {
        let _ = writeln!(out, "  f{i} = {g}");
    }
    out
}

fn poly_list(v: &[ParamPoly]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn strata_table(doc: &StrataDocument) -> String {
    let s = &doc.strata;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "m = {}, t = {}, D = {}{}",
        s.m,
        s.nbar.t(),
        doc.dim,
        if s.conjectural { " (conjectural)" } else { "" }
    );
    let _ = writeln!(out, "constant terms N̄ =");
    out += &block_matrix(&s.nbar.entries, "  ");
    for st in &s.strata {
        let t = s.nbar.t();
        let closure = if st.vanishing.is_empty() {
            format!("A^{}", doc.dim)
        } else {
            format!("V{}", format_ideal(&poly_list(&st.vanishing)))
        };
        let removed = if st.nonvanishing == [ParamPoly::one()] {
            String::new()
        } else if st.nonvanishing.is_empty() {
            " (empty)".to_string()
        } else {
            format!(" \\ V{}", format_ideal(&poly_list(&st.nonvanishing)))
        };
        let _ = writeln!(
            out,
            "V_{} = {closure}{removed}    [I_{} \\ I_{}]",
            st.d,
            t + 2 - st.d,
            t + 1 - st.d
        );
    }
    let mask: Vec<String> = doc.homogeneous_mask.iter().map(|k| format!("c{k}")).collect();
    let _ = writeln!(
        out,
        "homogeneous sub-cell: A^{} with coordinates {}",
        mask.len(),
        if mask.is_empty() { "-".to_string() } else { mask.join(", ") }
    );
    out
}

pub fn check_table(doc: &CheckDocument) -> String {
    let mut out = String::new();
    let p = &doc.plausibility;
    let _ = writeln!(out, "n = {}", doc.n);
    let _ = writeln!(
        out,
        "plausibility  {}  a = {}  P(i,n-i) = {}",
        pass(p.passed),
        list_u64(&p.dimension_vector),
        list_u64(&p.expected)
    );
    for d in &p.discrepancies {
        let cells: Vec<String> = d.cells.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "  dim {}: {} cells, expected {}: {}",
            d.dim,
            d.found,
            d.expected,
            cells.join(" ")
        );
    }
    let _ = writeln!(out, "fibration     {}", pass(doc.fibration.passed));
    for g in doc.fibration.groups.iter().filter(|g| g.differences.len() > 1) {
        let _ = writeln!(out, "  h = {}: dim - dim_hom takes values {:?}", g.hilb, g.differences);
    }
    if let Some(v) = &doc.verification {
        let ok = v.cells.iter().filter(|c| c.passed()).count();
        let _ = writeln!(
            out,
            "verification  {}  {} of {} cells, {} trials each, F_{}, seed {}",
            pass(v.passed),
            ok,
            v.cells.len(),
            v.trials,
            v.field,
            v.seed
        );
        for c in v.cells.iter().filter(|c| !c.passed()) {
            for f in &c.failures {
                let _ = writeln!(out, "  {} trial {} (seed {}): {}", c.m, f.trial, f.seed, f.reason);
            }
            if c.injective == Some(false) {
                let _ = writeln!(out, "  {}: distinct points gave equal standard bases", c.m);
            }
        }
    }
    let _ = writeln!(out, "result        {}", pass(doc.passed));
    out
}
