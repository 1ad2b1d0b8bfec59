//! Fractional causal order `m = 1/Σ P_k²` (exponential of the order-2 Rényi
//! entropy) and Monte-Carlo scans over the probability simplex.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;

use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::holevo::holevo;
use crate::scalar::Real;
use crate::switch::{OrderConfiguration, ORDERS};

/// Samples per generator stream. Sample `i` comes from stream `i / SAMPLES_PER_STREAM`
/// of the master seed, so results do not depend on the thread count.
pub const SAMPLES_PER_STREAM: usize = 1024;
pub const DEFAULT_BINS: usize = 100;
pub const DEFAULT_COUNT: usize = 10_000;
/// Histogram range of the fractional order.
pub const M_RANGE: (f64, f64) = (1.0, ORDERS as f64);

pub fn fractional_order<T: Real>(config: &OrderConfiguration<T>) -> T {
    T::one() / config.probs().iter().map(|p| *p * *p).sum::<T>()
}

/// Order-2 Rényi entropy `−ln Σ P_k²` (nats).
pub fn renyi2<T: Real>(config: &OrderConfiguration<T>) -> T {
    -config.probs().iter().map(|p| *p * *p).sum::<T>().ln()
}

fn stream_rng(seed: u64, stream: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

fn draw(rng: &mut ChaCha8Rng) -> OrderConfiguration<f64> {
    use rand::Rng;
    let mut probs = [0.0f64; ORDERS];
    for p in probs.iter_mut() {
        *p = rng.sample(Exp1);
    }
    let total: f64 = probs.iter().sum();
    for p in probs.iter_mut() {
        *p /= total;
    }
    OrderConfiguration::new(probs).expect("normalized exponentials lie on the simplex")
}

/// Flat-Dirichlet configurations on the 5-simplex from normalized unit-rate
/// exponential variates.
pub fn sample_simplex(count: usize, seed: u64) -> Result<Vec<OrderConfiguration<f64>>> {
    if count == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let streams = count.div_ceil(SAMPLES_PER_STREAM);
    Ok((0..streams)
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut rng = stream_rng(seed, s);
            let n = SAMPLES_PER_STREAM.min(count - s * SAMPLES_PER_STREAM);
            (0..n).map(move |_| draw(&mut rng))
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FractionalSample {
    pub config: OrderConfiguration<f64>,
    pub m_frac: f64,
    pub chi: f64,
    pub d: usize,
}

/// Uniform-bin density histogram.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub density: Vec<f64>,
}

impl Histogram {
    /// Bins `values` over `[lo, hi]`; the upper edge is closed.
    pub fn new(values: impl IntoIterator<Item = f64>, bins: usize, (lo, hi): (f64, f64)) -> Result<Self> {
        if bins == 0 || !(hi > lo) {
            return Err(Error::InvalidArgument(format!("histogram needs bins >= 1 and lo < hi, got {bins} over [{lo}, {hi}]")));
        }
        let width = (hi - lo) / bins as f64;
        let edges: Vec<f64> = (0..=bins).map(|i| lo + width * i as f64).collect();
        let mut counts = vec![0usize; bins];
        let mut total = 0usize;
        for v in values {
            if v < lo || v > hi {
                continue;
            }
            let idx = (((v - lo) / width) as usize).min(bins - 1);
            counts[idx] += 1;
            total += 1;
        }
        let density = counts
            .iter()
            .map(|&c| if total == 0 { 0.0 } else { c as f64 / (total as f64 * width) })
            .collect();
        Ok(Self { edges, counts, density })
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn width(&self, bin: usize) -> f64 {
        self.edges[bin + 1] - self.edges[bin]
    }

    /// `Σ density · width`; one for a non-empty histogram.
    pub fn integral(&self) -> f64 {
        (0..self.bins()).map(|i| self.density[i] * self.width(i)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanParams {
    pub count: usize,
    pub d: usize,
    pub q: f64,
    pub seed: u64,
    pub bins: usize,
}

impl Default for ScanParams {
    fn default() -> Self {
        Self { count: DEFAULT_COUNT, d: 2, q: 0.0, seed: 0, bins: DEFAULT_BINS }
    }
}

#[derive(Debug, Clone)]
pub struct ScanResult {
    pub params: ScanParams,
    pub samples: Vec<FractionalSample>,
    /// Distribution σ_m of the fractional order over the sample.
    pub histogram: Histogram,
}

pub fn scan(params: ScanParams) -> Result<ScanResult> {
    let channel = ChannelParams::new(params.q, params.d)?;
    let configs = sample_simplex(params.count, params.seed)?;
    let samples: Vec<FractionalSample> = configs
        .into_par_iter()
        .map(|config| {
            let chi = holevo(&config, &channel)?.chi;
            Ok(FractionalSample { m_frac: fractional_order(&config), chi, d: params.d, config })
        })
        .collect::<Result<_>>()?;
    let histogram = Histogram::new(samples.iter().map(|s| s.m_frac), params.bins, M_RANGE)?;
    Ok(ScanResult { params, samples, histogram })
}

/// One bin of the lower χ frontier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierPoint {
    pub bin_lo: f64,
    pub bin_hi: f64,
    /// Smallest χ among samples in the bin; `None` for empty bins.
    pub min_chi: Option<f64>,
}

/// Per-bin minimum of χ over uniform m-bins on `[1, 6]`. This is one possible
/// reading of the scatter's lower boundary, not a fitted envelope.
pub fn lower_frontier(samples: &[FractionalSample], bins: usize) -> Result<Vec<FrontierPoint>> {
    let hist = Histogram::new(std::iter::empty(), bins, M_RANGE)?;
    let width = hist.width(0);
    let mut mins: Vec<Option<f64>> = vec![None; bins];
    for s in samples {
        if s.m_frac < M_RANGE.0 || s.m_frac > M_RANGE.1 {
            continue;
        }
        let idx = (((s.m_frac - M_RANGE.0) / width) as usize).min(bins - 1);
        mins[idx] = Some(mins[idx].map_or(s.chi, |m: f64| m.min(s.chi)));
    }
    Ok((0..bins)
        .map(|i| FrontierPoint { bin_lo: hist.edges[i], bin_hi: hist.edges[i + 1], min_chi: mins[i] })
        .collect())
}

/// Two-sample Kolmogorov–Smirnov statistic and asymptotic p-value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
}

pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<KsResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("KS test needs two non-empty samples".into()));
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n, m) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < x.len() && j < y.len() {
        let v = x[i].min(y[j]);
        while i < x.len() && x[i] <= v {
            i += 1;
        }
        while j < y.len() && y[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    let en = (n * m / (n + m)).sqrt();
    let lambda = (en + 0.12 + 0.11 / en) * d;
    Ok(KsResult { statistic: d, p_value: kolmogorov_survival(lambda) })
}

/// `Q_KS(λ) = 2 Σ_{j≥1} (−1)^{j−1} exp(−2j²λ²)`.
fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 1e-3 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for j in 1..=200 {
        let term = sign * (-2.0 * (j * j) as f64 * lambda * lambda).exp();
        sum += term;
        if term.abs() < 1e-16 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}
