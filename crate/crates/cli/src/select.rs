//! Parsers for list-valued flags, shared by the command line and config files.

use std::str::FromStr;

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| format!("bad {what} range `{s}`"))?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad {what} range `{s}`"))?;
        if a > b {
            return Err(format!("empty {what} range `{s}`"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad {what} `{t}`")))
        .collect()
}

/// Order counts: `all`, `3`, `2,4` or `2..5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCounts(pub Vec<usize>);

impl FromStr for OrderCounts {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v = if s.trim().eq_ignore_ascii_case("all") { (1..=6).collect() } else { parse_list(s, "order count")? };
        if let Some(m) = v.iter().find(|m| !(1..=6).contains(*m)) {
            return Err(format!("order count {m} outside 1..6"));
        }
        Ok(Self(v))
    }
}

/// Target dimensions: `2`, `2,3` or `2..6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dims(pub Vec<usize>);

impl FromStr for Dims {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v = parse_list(s, "dimension")?;
        if let Some(d) = v.iter().find(|d| **d < 2) {
            return Err(format!("dimension {d} must be at least 2"));
        }
        Ok(Self(v))
    }
}

/// Which classes a sweep covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSelector {
    All,
    /// The class with the largest χ at d = 2 and q = 0.
    Best,
    Label(usize),
    /// An explicit support such as `{1,4,5}` or `1,4,5`.
    Support(Vec<usize>),
}

impl FromStr for ClassSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "all" => return Ok(Self::All),
            "best" => return Ok(Self::Best),
            _ => {}
        }
        let braced = t.starts_with('{') && t.ends_with('}');
        let inner = t.trim_start_matches('{').trim_end_matches('}');
        if braced || inner.contains(',') {
            let mut v = parse_list(inner, "order label")?;
            v.sort_unstable();
            v.dedup();
            if v.is_empty() || v.iter().any(|l| !(1..=6).contains(l)) {
                return Err(format!("support `{s}` must list order labels in 1..6"));
            }
            return Ok(Self::Support(v));
        }
        t.parse::<usize>()
            .ok()
            .filter(|c| *c >= 1)
            .map(Self::Label)
            .ok_or_else(|| format!("class selector `{s}` is not all, best, a class number or a support"))
    }
}
