//! Stable JSON projection of an elimination run. Rationals are always
//! canonical strings, never floats, and field order is fixed by the
//! struct declarations so output bytes are reproducible.

use gjx_core::engine::Trace;
use gjx_core::formulas::{Comparison, LemmaCheck, PivotComparison, VerifyReport};
use gjx_core::Matrix;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub m: usize,
    pub n: usize,
    pub rank: usize,
    pub steps: Vec<StepDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDocument {
    pub q: usize,
    /// "odd" (scale a row) or "even" (clear a column).
    pub kind: String,
    #[serde(rename = "G")]
    pub g: Vec<Vec<String>>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationDocument {
    pub all_match: bool,
    pub comparisons: Vec<ComparisonDocument>,
    pub op_comparisons: Vec<ComparisonDocument>,
    pub pivot_comparisons: Vec<PivotComparisonDocument>,
    pub lemma_checks: Vec<LemmaCheckDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComparisonDocument {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub engine_value: String,
    pub formula_value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PivotComparisonDocument {
    pub k: usize,
    pub engine_value: String,
    pub formula_value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaCheckDocument {
    pub k: usize,
    pub minor_value: String,
    pub product_value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn grid(m: &Matrix) -> Vec<Vec<String>> {
    (1..=m.rows())
        .map(|i| (1..=m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

fn comparison_document(c: &Comparison) -> ComparisonDocument {
    ComparisonDocument {
        k: c.k,
        i: c.i,
        j: c.j,
        engine_value: c.engine_value.to_string(),
        formula_value: c.formula_value.to_string(),
        matches: c.matches,
    }
}

fn pivot_document(p: &PivotComparison) -> PivotComparisonDocument {
    PivotComparisonDocument {
        k: p.k,
        engine_value: p.engine_value.to_string(),
        formula_value: p.formula_value.to_string(),
        matches: p.matches,
    }
}

fn lemma_document(l: &LemmaCheck) -> LemmaCheckDocument {
    LemmaCheckDocument {
        k: l.k,
        minor_value: l.minor_value.to_string(),
        product_value: l.product_value.to_string(),
        matches: l.matches,
    }
}

pub fn verification_document(report: &VerifyReport) -> VerificationDocument {
    VerificationDocument {
        all_match: report.all_match,
        comparisons: report.comparisons.iter().map(comparison_document).collect(),
        op_comparisons: report
            .op_comparisons
            .iter()
            .map(comparison_document)
            .collect(),
        pivot_comparisons: report
            .pivot_comparisons
            .iter()
            .map(pivot_document)
            .collect(),
        lemma_checks: report.lemma_checks.iter().map(lemma_document).collect(),
    }
}

pub fn trace_document(t: &Trace, verification: Option<&VerifyReport>) -> TraceDocument {
    TraceDocument {
        m: t.input.rows(),
        n: t.input.cols(),
        rank: t.rank,
        steps: t
            .steps
            .iter()
            .map(|s| StepDocument {
                q: s.q,
                kind: if s.is_odd() { "odd" } else { "even" }.to_string(),
                g: grid(&s.op_matrix),
                a: grid(&s.result),
            })
            .collect(),
        verification: verification.map(verification_document),
    }
}

/// Pretty JSON plus a trailing newline; the byte-stable CLI output.
pub fn to_json(doc: &TraceDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}
