//! Partition of the equiprobable configurations of each order count `m` into
//! spectral equivalence classes.

use rayon::prelude::*;
use serde::Serialize;

use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::holevo::holevo;
use crate::spectrum::{default_sample_points, invariant_signature, Signature};
use crate::switch::{OrderConfiguration, ORDERS};

/// Reference class memberships, as 1-based enumeration indices `S_i^(m)`.
pub const TABLE1: [&[&[usize]]; ORDERS] = [
    &[&[1, 2, 3, 4, 5, 6]],
    &[&[1, 2, 8, 10, 14, 15], &[3, 4, 6, 9, 12, 13], &[5, 7, 11]],
    &[&[1, 3, 5, 16, 18, 20], &[2, 4, 6, 7, 9, 10, 11, 12, 14, 15, 17, 19], &[8, 13]],
    &[&[1, 2, 6, 8, 14, 15], &[3, 4, 7, 10, 12, 13], &[5, 9, 11]],
    &[&[1, 2, 3, 4, 5, 6]],
    &[&[1]],
];

/// The `(q, d)` point at which each class's χ is reported.
pub const REPORT_POINT: (f64, usize) = (0.1, 2);

fn check_m(m: usize) -> Result<()> {
    if (1..=ORDERS).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidOrderCount(m))
    }
}

/// All `m`-element subsets of the order labels `1..=6`, lexicographic.
pub fn supports(m: usize) -> Result<Vec<Vec<usize>>> {
    check_m(m)?;
    fn extend(start: usize, m: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for label in start..=ORDERS {
            current.push(label);
            extend(label + 1, m, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(1, m, &mut Vec::with_capacity(m), &mut out);
    Ok(out)
}

/// The `C(6, m)` equiprobable configurations; position `i` is `S_{i+1}^(m)`.
pub fn enumerate_configs(m: usize) -> Result<Vec<OrderConfiguration<f64>>> {
    supports(m)?.iter().map(|s| OrderConfiguration::equiprobable(s)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    /// 1-based class number.
    pub label: usize,
    /// 1-based enumeration indices of the members.
    pub members: Vec<usize>,
    /// Order labels of each member's support.
    pub supports: Vec<Vec<usize>>,
    /// χ of the representative at `REPORT_POINT`.
    pub chi_at_report_point: f64,
    /// Rounded invariant signature of the representative.
    pub signature: Vec<f64>,
}

impl ClassEntry {
    pub fn representative(&self) -> &[usize] {
        &self.supports[0]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassTable {
    pub m: usize,
    /// Classes in order of their first member.
    pub classes: Vec<ClassEntry>,
}

impl ClassTable {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    pub fn class(&self, label: usize) -> Option<&ClassEntry> {
        self.classes.iter().find(|c| c.label == label)
    }

    /// The class whose representative has the largest χ at `(q, d)`.
    pub fn best_class(&self, q: f64, d: usize) -> Result<&ClassEntry> {
        let params = ChannelParams::new(q, d)?;
        let mut best: Option<(&ClassEntry, f64)> = None;
        for c in &self.classes {
            let chi = holevo(&OrderConfiguration::equiprobable(c.representative())?, &params)?.chi;
            if best.is_none_or(|(_, b)| chi > b) {
                best = Some((c, chi));
            }
        }
        Ok(best.expect("a class table is never empty").0)
    }
}

/// Groups the configurations of order count `m` by invariant signature.
///
/// Classes are numbered by their first member in enumeration order, which
/// coincides with the reference table's numbering.
pub fn classify(m: usize) -> Result<ClassTable> {
    let supports = supports(m)?;
    let points = default_sample_points();
    let signatures: Vec<Signature> = supports
        .par_iter()
        .map(|s| invariant_signature(&OrderConfiguration::equiprobable(s)?, &points))
        .collect::<Result<_>>()?;

    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, sig) in signatures.iter().enumerate() {
        match groups.iter_mut().find(|(rep, _)| signatures[*rep].equivalent(sig)) {
            Some((_, members)) => members.push(i),
            None => groups.push((i, vec![i])),
        }
    }

    let (q, d) = REPORT_POINT;
    let params = ChannelParams::new(q, d)?;
    let classes = groups
        .into_iter()
        .enumerate()
        .map(|(n, (rep, members))| {
            let chi = holevo(&OrderConfiguration::equiprobable(&supports[rep])?, &params)?.chi;
            Ok(ClassEntry {
                label: n + 1,
                supports: members.iter().map(|&i| supports[i].clone()).collect(),
                members: members.iter().map(|&i| i + 1).collect(),
                chi_at_report_point: chi,
                signature: signatures[rep].rounded(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(ClassTable { m, classes })
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Report {
    pub m: usize,
    /// `(computed label, reference label)` for every computed class that
    /// matches a reference class exactly.
    pub matched: Vec<(usize, usize)>,
    pub mismatches: Vec<String>,
}

impl Table1Report {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_against_table1(table: &ClassTable) -> Table1Report {
    let mut matched = Vec::new();
    let mut mismatches = Vec::new();
    let Some(reference) = table.m.checked_sub(1).and_then(|i| TABLE1.get(i)) else {
        mismatches.push(format!("no reference classes for m = {}", table.m));
        return Table1Report { m: table.m, matched, mismatches };
    };
    if table.classes.len() != reference.len() {
        mismatches.push(format!(
            "m = {}: {} computed classes, reference has {}",
            table.m,
            table.classes.len(),
            reference.len()
        ));
    }
    for class in &table.classes {
        match reference.iter().position(|r| *r == class.members.as_slice()) {
            Some(r) => {
                matched.push((class.label, r + 1));
                if r + 1 != class.label {
                    mismatches.push(format!(
                        "m = {}: computed class {} equals reference class {} (numbering differs)",
                        table.m,
                        class.label,
                        r + 1
                    ));
                }
            }
            None => mismatches.push(format!(
                "m = {}: computed class {} with members {:?} matches no reference class",
                table.m, class.label, class.members
            )),
        }
    }
    Table1Report { m: table.m, matched, mismatches }
}
