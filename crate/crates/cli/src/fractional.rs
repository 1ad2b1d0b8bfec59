use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::Args;

use qswitch::fractional::{lower_frontier, scan, ScanParams, ScanResult, DEFAULT_BINS, DEFAULT_COUNT};

use crate::config::ConfigFile;
use crate::output::{num, sibling, write_csv, RunMetadata};
use crate::svg::{Plot, Series, Style};

pub const KEYS: &[&str] = &["count", "d", "q", "seed", "bins", "out", "hist", "frontier", "svg"];

/// χ against the fractional order m = 1/ΣP² over uniform random configurations.
#[derive(Debug, Args)]
pub struct FractionalArgs {
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Depolarizing strength (default 0, fully depolarizing).
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Histogram bins over m in [1, 6].
    #[arg(long)]
    bins: Option<usize>,
    /// Scatter CSV (`m_frac, chi, P1..P6`); standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Histogram CSV; defaults to `<out>_hist.csv` when --out is given.
    #[arg(long)]
    hist: Option<PathBuf>,
    /// Per-bin minimum of χ (a post-processing view of the lower boundary).
    #[arg(long)]
    frontier: Option<PathBuf>,
    /// Scatter plot of -log10 χ against m.
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn scatter_rows(result: &ScanResult) -> Vec<Vec<String>> {
    result
        .samples
        .iter()
        .map(|s| {
            let mut row = vec![num(s.m_frac), num(s.chi)];
            row.extend(s.config.probs().iter().map(|p| num(*p)));
            row
        })
        .collect()
}

fn histogram_rows(result: &ScanResult) -> Vec<Vec<String>> {
    let h = &result.histogram;
    (0..h.bins()).map(|i| vec![num(h.edges[i]), num(h.edges[i + 1]), num(h.density[i])]).collect()
}

pub fn run(args: FractionalArgs, file: &ConfigFile) -> Result<()> {
    let params = ScanParams {
        count: file.merge(args.count, "count")?.unwrap_or(DEFAULT_COUNT),
        d: file.merge(args.d, "d")?.unwrap_or(2),
        q: file.merge(args.q, "q")?.unwrap_or(0.0),
        seed: file.merge(args.seed, "seed")?.unwrap_or(0),
        bins: file.merge(args.bins, "bins")?.unwrap_or(DEFAULT_BINS),
    };
    if params.count == 0 || params.bins == 0 {
        bail!("--count and --bins must be at least 1");
    }
    let out = file.merge(args.out, "out")?;
    let hist = file.merge(args.hist, "hist")?.or_else(|| out.as_deref().map(|p| sibling(p, "hist", "csv")));
    let frontier = file.merge(args.frontier, "frontier")?;
    let svg = file.merge(args.svg, "svg")?;

    let start = Instant::now();
    let result = scan(params)?;
    let elapsed = start.elapsed();
    let meta = RunMetadata::new(Some(params.seed));

    write_csv(
        out.as_deref(),
        &meta,
        &["m_frac", "chi", "P1", "P2", "P3", "P4", "P5", "P6"],
        &scatter_rows(&result),
    )?;
    if let Some(path) = &hist {
        write_csv(Some(path), &meta, &["bin_lo", "bin_hi", "density"], &histogram_rows(&result))?;
    }
    if let Some(path) = &frontier {
        let rows: Vec<Vec<String>> = lower_frontier(&result.samples, params.bins)?
            .iter()
            .map(|f| vec![num(f.bin_lo), num(f.bin_hi), f.min_chi.map(num).unwrap_or_default()])
            .collect();
        write_csv(Some(path), &meta, &["bin_lo", "bin_hi", "min_chi"], &rows)?;
    }
    if let Some(path) = &svg {
        let points = result.samples.iter().filter(|s| s.chi > 0.0).map(|s| (s.m_frac, -s.chi.log10())).collect();
        Plot {
            title: format!("Fractional order, d = {}, q = {}", params.d, params.q),
            x_label: "m".into(),
            y_label: "-log10 chi".into(),
            series: vec![Series { label: format!("d = {}", params.d), points, style: Style::Points }],
        }
        .save(path)?;
    }
    let zero = result.samples.iter().filter(|s| s.chi == 0.0).count();
    eprintln!(
        "{} samples in {:.2?}; {zero} with chi = 0; histogram integral {:.12}",
        result.samples.len(),
        elapsed,
        result.histogram.integral()
    );
    Ok(())
}
