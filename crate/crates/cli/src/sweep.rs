use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use rayon::prelude::*;

use qswitch::classifier::classify;
use qswitch::holevo::holevo;
use qswitch::{Config, Params};

use crate::config::ConfigFile;
use crate::output::{num, sibling, write_csv, RunMetadata};
use crate::select::{ClassSelector, Dims, OrderCounts};
use crate::svg::{Plot, Series, Style};

pub const KEYS: &[&str] = &["preset", "m", "class", "d", "q-min", "q-max", "q-steps", "out", "svg"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Every class of m = 2..5 at d = 2.
    Fig1,
    /// The best class of m = 2..5 over d = 2..6.
    Fig2,
}

impl std::str::FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

/// χ, H^min and H(ρ̃_c) over a grid of depolarizing strengths.
#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Default selection of orders, classes and dimensions.
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    /// Order counts: `all`, `3`, `2,4` or `2..5`.
    #[arg(long)]
    m: Option<OrderCounts>,
    /// `all`, `best`, a class number, or a support such as `{1,4,5}`.
    #[arg(long = "class")]
    class: Option<ClassSelector>,
    /// Target dimensions, e.g. `2` or `2..6`.
    #[arg(long)]
    d: Option<Dims>,
    #[arg(long)]
    q_min: Option<f64>,
    #[arg(long)]
    q_max: Option<f64>,
    /// Number of grid points, at least 2.
    #[arg(long)]
    q_steps: Option<usize>,
    /// CSV path; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG path. With several order counts one file per m is written (`name_m3.svg`).
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub orders: Vec<usize>,
    pub class: ClassSelector,
    pub dims: Vec<usize>,
    pub q_grid: Vec<f64>,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl SweepArgs {
    pub fn resolve(self, file: &ConfigFile) -> Result<SweepSpec> {
        let preset = file.merge(self.preset, "preset")?.unwrap_or(Preset::Fig1);
        let (default_class, default_dims) = match preset {
            Preset::Fig1 => (ClassSelector::All, vec![2]),
            Preset::Fig2 => (ClassSelector::Best, (2..=6).collect()),
        };
        let class = file.merge(self.class, "class")?.unwrap_or(default_class);
        let orders = match (file.merge(self.m, "m")?, &class) {
            (Some(m), ClassSelector::Support(s)) if m.0 != [s.len()] => {
                bail!("support {s:?} has {} orders but --m is {:?}", s.len(), m.0)
            }
            (Some(m), _) => m.0,
            (None, ClassSelector::Support(s)) => vec![s.len()],
            (None, _) => (2..=5).collect(),
        };
        let dims = file.merge(self.d, "d")?.map(|d| d.0).unwrap_or(default_dims);
        let q_min = file.merge(self.q_min, "q-min")?.unwrap_or(0.0);
        let q_max = file.merge(self.q_max, "q-max")?.unwrap_or(1.0);
        let steps = file.merge(self.q_steps, "q-steps")?.unwrap_or(101);
        if !(0.0..=1.0).contains(&q_min) || !(0.0..=1.0).contains(&q_max) || q_min > q_max {
            bail!("q range [{q_min}, {q_max}] must lie within [0, 1] in increasing order");
        }
        if steps < 2 {
            bail!("--q-steps must be at least 2, got {steps}");
        }
        let q_grid = (0..steps).map(|i| q_min + (q_max - q_min) * i as f64 / (steps - 1) as f64).collect();
        Ok(SweepSpec {
            orders,
            class,
            dims,
            q_grid,
            out: file.merge(self.out, "out")?,
            svg: file.merge(self.svg, "svg")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub q: f64,
    pub d: usize,
    pub m: usize,
    pub class: usize,
    pub chi: f64,
    pub h_min: f64,
    pub h_control: f64,
}

/// `(m, class label, support)` curves selected by a spec.
fn selected_curves(spec: &SweepSpec) -> Result<Vec<(usize, usize, Vec<usize>)>> {
    let mut curves = Vec::new();
    for &m in &spec.orders {
        let table = classify(m)?;
        match &spec.class {
            ClassSelector::All => {
                curves.extend(table.classes.iter().map(|c| (m, c.label, c.representative().to_vec())));
            }
            ClassSelector::Best => {
                let best = table.best_class(0.0, 2)?;
                curves.push((m, best.label, best.representative().to_vec()));
            }
            ClassSelector::Label(label) => {
                let c = table
                    .class(*label)
                    .with_context(|| format!("m = {m} has {} classes, no class {label}", table.classes.len()))?;
                curves.push((m, c.label, c.representative().to_vec()));
            }
            ClassSelector::Support(s) => {
                let c = table
                    .classes
                    .iter()
                    .find(|c| c.supports.contains(s))
                    .with_context(|| format!("support {s:?} not found for m = {m}"))?;
                curves.push((m, c.label, s.clone()));
            }
        }
    }
    Ok(curves)
}

pub fn compute(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let mut jobs = Vec::new();
    for (m, class, support) in selected_curves(spec)? {
        for &d in &spec.dims {
            for &q in &spec.q_grid {
                jobs.push((m, class, support.clone(), d, q));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(m, class, support, d, q)| {
            let r = holevo(&Config::equiprobable(&support)?, &Params::new(q, d)?)?;
            Ok(SweepRow { q, d, m, class, chi: r.chi, h_min: r.h_min, h_control: r.h_control })
        })
        .collect()
}

fn plot_for(m: usize, rows: &[SweepRow]) -> Plot {
    let mut series: Vec<Series> = Vec::new();
    for r in rows.iter().filter(|r| r.m == m) {
        let label = format!("class {}, d = {}", r.class, r.d);
        match series.iter_mut().find(|s| s.label == label) {
            Some(s) => s.points.push((r.q, r.chi)),
            None => series.push(Series { label, points: vec![(r.q, r.chi)], style: Style::Line }),
        }
    }
    Plot { title: format!("Holevo information, m = {m}"), x_label: "q".into(), y_label: "chi (bits)".into(), series }
}

fn svg_paths(base: &Path, orders: &[usize]) -> Vec<(usize, PathBuf)> {
    if let [m] = orders {
        return vec![(*m, base.to_path_buf())];
    }
    orders.iter().map(|&m| (m, sibling(base, &format!("m{m}"), "svg"))).collect()
}

pub fn run(args: SweepArgs, file: &ConfigFile) -> Result<()> {
    let spec = args.resolve(file)?;
    let rows = compute(&spec)?;
    let meta = RunMetadata::new(None);
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![num(r.q), r.d.to_string(), r.m.to_string(), r.class.to_string(), num(r.chi), num(r.h_min), num(r.h_control)]
        })
        .collect();
    write_csv(spec.out.as_deref(), &meta, &["q", "d", "m", "class", "chi", "h_min", "h_control"], &table)?;
    if let Some(base) = &spec.svg {
        for (m, path) in svg_paths(base, &spec.orders) {
            plot_for(m, &rows).save(&path)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(args: &[&str]) -> SweepSpec {
        use clap::Parser;
        #[derive(Parser)]
        struct P {
            #[command(flatten)]
            a: SweepArgs,
        }
        P::parse_from(std::iter::once("x").chain(args.iter().copied())).a.resolve(&ConfigFile::default()).unwrap()
    }

    #[test]
    fn presets() {
        let s = spec(&[]);
        assert_eq!(s.orders, vec![2, 3, 4, 5]);
        assert_eq!(s.dims, vec![2]);
        assert_eq!(s.q_grid.len(), 101);
        let s = spec(&["--preset", "fig2"]);
        assert_eq!(s.class, ClassSelector::Best);
        assert_eq!(s.dims, vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn support_selects_m() {
        let s = spec(&["--class", "{1,4,5}", "--q-steps", "3"]);
        assert_eq!(s.orders, vec![3]);
        let rows = compute(&s).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.class == 3));
    }

    #[test]
    fn m2_curves_split() {
        let rows = compute(&spec(&["--m", "2", "--q-steps", "2"])).unwrap();
        let at_zero: Vec<f64> = rows.iter().filter(|r| r.q == 0.0).map(|r| r.chi).collect();
        assert_eq!(at_zero.len(), 3);
        assert!(at_zero[0].abs() < 1e-12 && at_zero[2].abs() < 1e-12 && at_zero[1] > 0.0);
        assert!(rows.iter().filter(|r| r.q == 1.0).all(|r| (r.chi - 1.0).abs() < 1e-12));
    }

    #[test]
    fn svg_naming() {
        assert_eq!(svg_paths(Path::new("p.svg"), &[3]), vec![(3, PathBuf::from("p.svg"))]);
        assert_eq!(svg_paths(Path::new("p.svg"), &[2, 3])[1].1, PathBuf::from("p_m3.svg"));
    }
}
