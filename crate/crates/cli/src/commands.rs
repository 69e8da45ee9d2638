//! Command implementations. Each command builds its entire standard
//! output as a string first; failures carry the process exit code and a
//! diagnostic for the error stream, so nothing partial ever reaches
//! standard output.
//!
//! Exit codes: 0 success/verified, 1 verification or singularity
//! failure, 2 input error, 3 zero pivot.

use clap::ValueEnum;

use gjx_core::arrange::{arrange, SwapKind};
use gjx_core::engine::{eliminate, inverse, Trace};
use gjx_core::formulas::{verify_eliminated, FormulaFault, VerifyReport};
use gjx_core::minors::minor;
use gjx_core::{Error, IndexList, Matrix};

use crate::doc::{to_json, trace_document};
use crate::fuzz::{run_fuzz, FuzzConfig};
use crate::parse::{parse_matrix, render_matrix, render_matrix_aligned};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    FlipUpperSign,
    SwapPivotRatio,
}

impl FaultArg {
    pub fn to_fault(self) -> FormulaFault {
        match self {
            FaultArg::FlipUpperSign => FormulaFault::FlipUpperSign,
            FaultArg::SwapPivotRatio => FormulaFault::SwapPivotRatio,
        }
    }
}

/// A failed command: exit code plus the diagnostic for standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

pub type CmdResult = Result<String, Failure>;

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Default mapping from library errors: zero pivots get their own code,
/// everything else counts as an input problem.
fn core_error(e: Error) -> Failure {
    match e {
        Error::ZeroPivot(_) => fail(3, e.to_string()),
        e => fail(2, e.to_string()),
    }
}

fn parse(text: &str) -> Result<Matrix, Failure> {
    parse_matrix(text).map_err(|e| fail(2, e.to_string()))
}

fn step_heading(q: usize) -> String {
    let k = (q - 1) / 2;
    if q % 2 == 1 {
        format!("step {q} (odd, scale row {})", k + 1)
    } else {
        format!("step {q} (even, clear column {})", k + 1)
    }
}

fn pretty_trace(t: &Trace) -> String {
    let mut out = format!(
        "input {}x{}, rank {}\n",
        t.input.rows(),
        t.input.cols(),
        t.rank
    );
    for step in &t.steps {
        out.push_str(&format!("\n{}\nG:\n", step_heading(step.q)));
        out.push_str(&render_matrix_aligned(&step.op_matrix, "  "));
        out.push_str("A:\n");
        out.push_str(&render_matrix_aligned(&step.result, "  "));
    }
    out
}

pub fn cmd_eliminate(text: &str, format: Format) -> CmdResult {
    let a = parse(text)?;
    let t = eliminate(&a).map_err(core_error)?;
    Ok(match format {
        Format::Pretty => pretty_trace(&t),
        Format::Json => to_json(&trace_document(&t, None)),
    })
}

fn verify_summary(report: &VerifyReport) -> String {
    let count_ok = |total: usize, bad: usize| format!("{} of {total} match", total - bad);
    let bad_cmp = report.comparisons.iter().filter(|c| !c.matches).count();
    let bad_op = report.op_comparisons.iter().filter(|c| !c.matches).count();
    let bad_pivot = report
        .pivot_comparisons
        .iter()
        .filter(|p| !p.matches)
        .count();
    let bad_lemma = report.lemma_checks.iter().filter(|l| !l.matches).count();
    format!(
        "input {}x{}, rank {}\nstate entries: {}\noperation entries: {}\npivots: {}\nminor products: {}\nverified: all {} checks match\n",
        report.input.rows(),
        report.input.cols(),
        report.rank,
        count_ok(report.comparisons.len(), bad_cmp),
        count_ok(report.op_comparisons.len(), bad_op),
        count_ok(report.pivot_comparisons.len(), bad_pivot),
        count_ok(report.lemma_checks.len(), bad_lemma),
        report.total_checks()
    )
}

fn mismatch_message(report: &VerifyReport) -> String {
    if let Some(c) = report.comparisons.iter().find(|c| !c.matches) {
        format!(
            "verification failed: state after step {} entry ({}, {}): engine {} vs formula {}",
            2 * c.k,
            c.i,
            c.j,
            c.engine_value,
            c.formula_value
        )
    } else if let Some(c) = report.op_comparisons.iter().find(|c| !c.matches) {
        format!(
            "verification failed: operation matrix for step {} entry ({}, {}): engine {} vs formula {}",
            c.k, c.i, c.j, c.engine_value, c.formula_value
        )
    } else if let Some(p) = report.pivot_comparisons.iter().find(|p| !p.matches) {
        format!(
            "verification failed: pivot {}: engine {} vs formula {}",
            p.k, p.engine_value, p.formula_value
        )
    } else if let Some(l) = report.lemma_checks.iter().find(|l| !l.matches) {
        format!(
            "verification failed: minor product at k={}: minor {} vs pivot product {}",
            l.k, l.minor_value, l.product_value
        )
    } else {
        "verification failed".to_string()
    }
}

pub fn cmd_verify(
    text: &str,
    format: Format,
    arrange_first: bool,
    fault: FormulaFault,
) -> CmdResult {
    let a = parse(text)?;
    let t = match eliminate(&a) {
        Ok(t) => t,
        Err(Error::ZeroPivot(_)) if arrange_first => {
            let arranged = arrange(&a).map_err(core_error)?.arranged;
            eliminate(&arranged).map_err(core_error)?
        }
        Err(e) => return Err(core_error(e)),
    };
    let report = verify_eliminated(&t, fault).map_err(core_error)?;
    if !report.all_match {
        return Err(fail(1, mismatch_message(&report)));
    }
    Ok(match format {
        Format::Pretty => verify_summary(&report),
        Format::Json => to_json(&trace_document(&t, Some(&report))),
    })
}

pub fn cmd_arrange(text: &str) -> CmdResult {
    let a = parse(text)?;
    let r = arrange(&a).map_err(core_error)?;
    let perm_line = |p: &[usize]| {
        p.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!(
        "rowPerm: {}\ncolPerm: {}\n",
        perm_line(r.row_perm.as_slice()),
        perm_line(r.col_perm.as_slice())
    );
    if r.swap_log.is_empty() {
        out.push_str("swapLog: (none)\n");
    } else {
        out.push_str("swapLog:\n");
        for e in &r.swap_log {
            let kind = match e.kind {
                SwapKind::Row => "row",
                SwapKind::Col => "col",
            };
            out.push_str(&format!("  k={} {kind} {} <-> {}\n", e.k, e.from, e.to));
        }
    }
    out.push_str("arranged:\n");
    out.push_str(&render_matrix(&r.arranged));
    Ok(out)
}

pub fn cmd_invert(text: &str) -> CmdResult {
    let a = parse(text)?;
    match inverse(&a) {
        Ok(inv) => Ok(render_matrix(&inv)),
        Err(e @ (Error::Singular | Error::NotSquare { .. })) => Err(fail(1, e.to_string())),
        Err(e) => Err(core_error(e)),
    }
}

pub fn cmd_minor(text: &str, rows: &[usize], cols: &[usize]) -> CmdResult {
    let a = parse(text)?;
    let row_list = IndexList::new(rows.to_vec()).map_err(core_error)?;
    let col_list = IndexList::new(cols.to_vec()).map_err(core_error)?;
    let value = minor(&a, &row_list, &col_list).map_err(core_error)?;
    Ok(format!("{value}\n"))
}

pub fn cmd_fuzz(cfg: &FuzzConfig) -> CmdResult {
    let outcome = run_fuzz(cfg).map_err(|msg| fail(2, msg))?;
    if outcome.failures > 0 {
        return Err(fail(1, outcome.report));
    }
    Ok(outcome.report)
}
