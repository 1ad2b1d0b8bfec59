use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;

use qswitch::classifier::{classify, verify_against_table1, ClassTable, Table1Report, REPORT_POINT};

use crate::config::ConfigFile;
use crate::output::RunMetadata;
use crate::select::OrderCounts;

pub const KEYS: &[&str] = &["m", "out"];

/// Partition equiprobable configurations into spectral equivalence classes.
#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Order counts: `all` (default), `3`, `2..4`.
    #[arg(long)]
    m: Option<OrderCounts>,
    /// JSON output path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct ClassifyOutput<'a> {
    metadata: RunMetadata,
    tables: &'a [ClassTable],
    reports: &'a [Table1Report],
}

pub fn text_table(table: &ClassTable, report: &Table1Report) -> String {
    let (q, d) = REPORT_POINT;
    let mut s = format!("m = {}: {} classes, {} configurations\n", table.m, table.classes.len(), table.total());
    for c in &table.classes {
        let members: Vec<String> = c.members.iter().map(|i| format!("S{i}")).collect();
        s.push_str(&format!(
            "  class {}  size {:>2}  chi(q={q}, d={d}) = {:.6}  representative {:?}  members {}\n",
            c.label,
            c.members.len(),
            c.chi_at_report_point,
            c.representative(),
            members.join(" ")
        ));
    }
    if report.is_match() {
        s.push_str("  reference partition: match\n");
    } else {
        for m in &report.mismatches {
            s.push_str(&format!("  reference partition: MISMATCH {m}\n"));
        }
    }
    s
}

pub fn run(args: ClassifyArgs, file: &ConfigFile) -> Result<()> {
    let orders = file.merge(args.m, "m")?.map(|m| m.0).unwrap_or_else(|| (1..=6).collect());
    let out = file.merge(args.out, "out")?;
    let tables: Vec<ClassTable> = orders.iter().map(|&m| classify(m)).collect::<qswitch::Result<_>>()?;
    let reports: Vec<Table1Report> = tables.iter().map(verify_against_table1).collect();

    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    for (t, r) in tables.iter().zip(&reports) {
        write!(w, "{}", text_table(t, r))?;
    }
    writeln!(w, "total: {} configurations", tables.iter().map(ClassTable::total).sum::<usize>())?;

    if let Some(path) = out {
        let doc = ClassifyOutput { metadata: RunMetadata::new(None), tables: &tables, reports: &reports };
        let json = serde_json::to_string_pretty(&doc)?;
        std::fs::write(&path, json + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}
