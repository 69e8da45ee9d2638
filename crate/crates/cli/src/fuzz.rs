//! Seeded random self-check trials. The generator is ChaCha8 seeded via
//! `seed_from_u64`; each trial draws its entries row by row, left to
//! right, uniformly from [-max_abs, max_abs], so a given seed always
//! produces the same matrices and the same report bytes.

use gjx_core::arrange::{arrange, pivot_dominance_check};
use gjx_core::engine::eliminate;
use gjx_core::formulas::{verify_eliminated, FormulaFault};
use gjx_core::minors::rank_by_minors;
use gjx_core::{Matrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::parse::render_matrix;

#[derive(Clone, Copy, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub rows: usize,
    pub cols: usize,
    pub max_abs: i64,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct FuzzOutcome {
    pub report: String,
    pub failures: usize,
}

/// One random integer matrix; entries drawn row-major.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, max_abs: i64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| Rational::from_int(rng.random_range(-max_abs..=max_abs)))
        .collect::<Vec<_>>();
    let rows_vec = data.chunks(cols).map(|c| c.to_vec()).collect();
    Matrix::from_rows(rows_vec).expect("shape is valid")
}

/// Run every per-trial check; the achieved rank on success, the reason
/// on failure.
fn run_trial(a: &Matrix) -> Result<usize, String> {
    let arranged = arrange(a)
        .map_err(|e| format!("arrange failed: {e}"))?
        .arranged;
    let trace =
        eliminate(&arranged).map_err(|e| format!("elimination failed after arranging: {e}"))?;
    let report = verify_eliminated(&trace, FormulaFault::None)
        .map_err(|e| format!("verification errored: {e}"))?;
    if !report.all_match {
        let c = report.first_mismatch().expect("mismatch recorded");
        return Err(format!(
            "closed-form mismatch at k={}, entry ({}, {}): engine {} vs formula {}",
            c.k, c.i, c.j, c.engine_value, c.formula_value
        ));
    }
    if let Some(l) = report.lemma_checks.iter().find(|l| !l.matches) {
        return Err(format!(
            "minor product mismatch at k={}: minor {} vs product {}",
            l.k, l.minor_value, l.product_value
        ));
    }
    if !pivot_dominance_check(&trace) {
        return Err("pivot dominance violated".to_string());
    }
    match rank_by_minors(a) {
        Ok(r) if r == trace.rank => Ok(trace.rank),
        Ok(r) => Err(format!(
            "rank disagreement: elimination says {}, minors say {r}",
            trace.rank
        )),
        Err(e) => Err(format!("rank oracle errored: {e}")),
    }
}

/// Run all trials. `Err` is an input problem (bad configuration);
/// `Ok` carries the full deterministic report plus the failure count.
pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzOutcome, String> {
    if cfg.rows < 1 || cfg.rows > 8 {
        return Err(format!("rows must be between 1 and 8, got {}", cfg.rows));
    }
    if cfg.cols < 1 || cfg.cols > 8 {
        return Err(format!("cols must be between 1 and 8, got {}", cfg.cols));
    }
    if !(0..=1000).contains(&cfg.max_abs) {
        return Err(format!(
            "max-abs must be between 0 and 1000, got {}",
            cfg.max_abs
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = String::new();
    let mut failures = 0;
    for trial in 1..=cfg.trials {
        let a = random_matrix(&mut rng, cfg.rows, cfg.cols, cfg.max_abs);
        if a.is_zero() {
            report.push_str(&format!(
                "trial {trial}: {}x{} skipped (zero matrix, rank 0)\n",
                cfg.rows, cfg.cols
            ));
            continue;
        }
        match run_trial(&a) {
            Ok(rank) => {
                report.push_str(&format!(
                    "trial {trial}: {}x{} rank {rank} ok\n",
                    cfg.rows, cfg.cols
                ));
            }
            Err(why) => {
                failures += 1;
                report.push_str(&format!(
                    "trial {trial}: {}x{} FAILED: {why}\ncounterexample:\n{}",
                    cfg.rows,
                    cfg.cols,
                    render_matrix(&a)
                ));
            }
        }
    }
    report.push_str(&format!(
        "fuzz: {}/{} trials passed (shape {}x{}, entries in [-{}, {}], seed {})\n",
        cfg.trials - failures,
        cfg.trials,
        cfg.rows,
        cfg.cols,
        cfg.max_abs,
        cfg.max_abs,
        cfg.seed
    ));
    Ok(FuzzOutcome { report, failures })
}
