use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qswitch::holevo::holevo;
use qswitch::oracle::{
    compare_blocks, compare_control, holevo_bruteforce, random_configuration, random_density_matrix, switch_output,
    BRUTEFORCE_MAX_DIM, SWITCH_OUTPUT_MAX_DIM,
};
use qswitch::switch::{canonical_pattern, control_output_with_pattern, BlockPattern};
use qswitch::{BlockKind, Params};

use crate::config::ConfigFile;
use crate::output::{sink, RunMetadata};
use crate::select::Dims;

pub const KEYS: &[&str] = &["d", "count", "seed", "out", "corrupt-pattern"];
pub const BLOCK_TOLERANCE: f64 = 1e-10;
pub const CONTROL_TOLERANCE: f64 = 1e-10;
pub const CHI_TOLERANCE: f64 = 1e-8;
pub const Q_VALUES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Block deviation, its location, control deviation and χ gap for one configuration.
type ConfigDeviation = (f64, (usize, usize), f64, Option<f64>);

/// Compare the block-algebra pipeline against explicit Kraus-operator sums.
#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Target dimensions (at most 4; χ is checked for d <= 3).
    #[arg(long)]
    d: Option<Dims>,
    /// Number of random configurations.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Report path; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Swap one block of the pattern (negative control; the run must fail).
    #[arg(long)]
    corrupt_pattern: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationRow {
    pub d: usize,
    pub q: f64,
    pub block: f64,
    pub worst_block: (usize, usize),
    pub control: f64,
    pub chi: Option<f64>,
}

impl ValidationRow {
    pub fn passes(&self) -> bool {
        self.block <= BLOCK_TOLERANCE && self.control <= CONTROL_TOLERANCE && self.chi.is_none_or(|c| c <= CHI_TOLERANCE)
    }
}

/// The pattern with block (2, 4) changed from F to B.
pub fn corrupted_pattern() -> BlockPattern {
    canonical_pattern().with_kind(2, 4, BlockKind::B)
}

pub fn validate(dims: &[usize], count: usize, seed: u64, pattern: &BlockPattern) -> Result<Vec<ValidationRow>> {
    if let Some(d) = dims.iter().find(|d| **d > SWITCH_OUTPUT_MAX_DIM) {
        bail!("d = {d} exceeds the oracle limit of {SWITCH_OUTPUT_MAX_DIM}");
    }
    if count == 0 {
        bail!("--count must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let configs: Vec<_> = (0..count).map(|_| random_configuration(&mut rng)).collect();
    let mut rows = Vec::new();
    for &d in dims {
        for q in Q_VALUES {
            let params = Params::new(q, d)?;
            let targets: Vec<_> = (0..count).map(|_| random_density_matrix(d, &mut rng)).collect();
            let per_config: Vec<ConfigDeviation> = configs
                .par_iter()
                .zip(&targets)
                .map(|(config, target)| {
                    let state = switch_output(config, &params, target)?;
                    let blocks = compare_blocks(&state, config, &params, target, pattern);
                    let control = compare_control(&state, &control_output_with_pattern(config, &params, pattern));
                    let chi = if d <= BRUTEFORCE_MAX_DIM {
                        Some((holevo_bruteforce(config, &params)?.chi - holevo(config, &params)?.chi).abs())
                    } else {
                        None
                    };
                    Ok((blocks.max_abs, blocks.worst, control, chi))
                })
                .collect::<qswitch::Result<_>>()?;
            let mut row = ValidationRow { d, q, block: 0.0, worst_block: (1, 1), control: 0.0, chi: None };
            for (block, worst, control, chi) in per_config {
                if block > row.block {
                    row.block = block;
                    row.worst_block = worst;
                }
                row.control = row.control.max(control);
                row.chi = match (row.chi, chi) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn report(rows: &[ValidationRow], meta: &RunMetadata, corrupted: bool) -> String {
    let mut s = String::new();
    for line in meta.header_lines() {
        let _ = writeln!(s, "# {line}");
    }
    if corrupted {
        let _ = writeln!(s, "# pattern: corrupted (block (2,4) set to B)");
    }
    let _ = writeln!(
        s,
        "tolerances: block {BLOCK_TOLERANCE:e}, control {CONTROL_TOLERANCE:e}, chi {CHI_TOLERANCE:e}"
    );
    for r in rows {
        let chi = r.chi.map_or("n/a".to_string(), |c| format!("{c:.3e}"));
        let _ = write!(
            s,
            "d={} q={:<4} block {:.3e}  control {:.3e}  chi {chi}  {}",
            r.d,
            r.q,
            r.block,
            r.control,
            if r.passes() { "PASS" } else { "FAIL" }
        );
        if r.block > BLOCK_TOLERANCE {
            let _ = write!(s, "  (worst block {:?})", r.worst_block);
        }
        s.push('\n');
    }
    let all = rows.iter().all(ValidationRow::passes);
    let _ = writeln!(s, "{}", if all { "PASS" } else { "FAIL" });
    s
}

/// Runs the comparison; `Ok(false)` when any tolerance is breached.
pub fn run(args: ValidateArgs, file: &ConfigFile) -> Result<bool> {
    let dims = file.merge(args.d, "d")?.map(|d| d.0).unwrap_or_else(|| vec![2, 3]);
    let count = file.merge(args.count, "count")?.unwrap_or(50);
    let seed = file.merge(args.seed, "seed")?.unwrap_or(0);
    let out = file.merge(args.out, "out")?;
    let corrupted = file.merge_flag(args.corrupt_pattern, "corrupt-pattern")?;
    let pattern = if corrupted { corrupted_pattern() } else { canonical_pattern() };
    let rows = validate(&dims, count, seed, &pattern)?;
    let text = report(&rows, &RunMetadata::new(Some(seed)), corrupted);
    let mut w = sink(out.as_deref())?;
    w.write_all(text.as_bytes())?;
    w.flush()?;
    Ok(rows.iter().all(ValidationRow::passes))
}
