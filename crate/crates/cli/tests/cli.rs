use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn qswitch(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qswitch"))
        .args(args)
        .current_dir(dir)
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .expect("binary runs")
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

/// Data rows of a CSV with a `#` metadata header, split into fields.
fn table(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (header, lines.map(|l| l.split(',').map(String::from).collect()).collect())
}

#[test]
fn sweep_endpoints_and_header() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("s.csv");
    let o = qswitch(dir.path(), &["sweep", "--m", "5", "--d", "2..4", "--q-steps", "5", "--out", "s.csv", "--svg", "s.svg"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = read(&out);
    assert!(text.starts_with("# qswitch "));
    assert!(text.contains("# timestamp: 2023-11-14T22:13:20Z"));
    assert!(text.contains("# git revision: "));
    let (header, rows) = table(&text);
    assert_eq!(header, ["q", "d", "m", "class", "chi", "h_min", "h_control"]);
    assert_eq!(rows.len(), 3 * 5);
    for r in &rows {
        assert_eq!(r[3], "1");
        let mantissa = r[4].split('e').next().unwrap();
        assert_eq!(mantissa.trim_start_matches('-').replace('.', "").len(), 17);
        if r[0].parse::<f64>().unwrap() == 1.0 {
            let d: f64 = r[1].parse().unwrap();
            assert!((r[4].parse::<f64>().unwrap() - d.log2()).abs() < 1e-9);
        }
    }
    let svg = read(&dir.path().join("s.svg"));
    assert_eq!(svg.matches("<polyline").count(), 3);
}

#[test]
fn fig2_preset_writes_one_svg_per_m() {
    let dir = TempDir::new().unwrap();
    let o = qswitch(dir.path(), &["sweep", "--preset", "fig2", "--q-steps", "3", "--out", "f.csv", "--svg", "f.svg"]);
    assert!(o.status.success());
    for m in 2..=5 {
        assert!(dir.path().join(format!("f_m{m}.svg")).exists());
    }
    let (_, rows) = table(&read(&dir.path().join("f.csv")));
    assert_eq!(rows.len(), 4 * 5 * 3);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("run.cfg"), "# sweep\nm = 2\nclass = 2\nq_steps = 4\nout = from_file.csv\n").unwrap();
    let o = qswitch(dir.path(), &["sweep", "--config", "run.cfg", "--q-steps", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (_, rows) = table(&read(&dir.path().join("from_file.csv")));
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r[2] == "2" && r[3] == "2"));

    std::fs::write(dir.path().join("bad.cfg"), "bins = 3\n").unwrap();
    let o = qswitch(dir.path(), &["sweep", "--config", "bad.cfg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown key `bins`"));
}

#[test]
fn unknown_class_is_an_error() {
    let dir = TempDir::new().unwrap();
    let o = qswitch(dir.path(), &["sweep", "--m", "5", "--class", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no class 2"));
}

#[test]
fn classify_all_reports_reference_partition() {
    let dir = TempDir::new().unwrap();
    let o = qswitch(dir.path(), &["classify", "--m", "all", "--out", "c.json"]);
    assert!(o.status.success());
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("total: 63 configurations"));
    assert_eq!(stdout.matches("reference partition: match").count(), 6);
    let json: serde_json::Value = serde_json::from_str(&read(&dir.path().join("c.json"))).unwrap();
    let tables = json["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 6);
    let sizes: Vec<usize> = tables[2]["classes"].as_array().unwrap().iter().map(|c| c["members"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [6, 12, 2]);
    assert_eq!(json["metadata"]["tool"], "qswitch");
}

#[test]
fn validate_passes_and_negative_control_fails() {
    let dir = TempDir::new().unwrap();
    let o = qswitch(dir.path(), &["validate", "--d", "2", "--count", "6", "--seed", "3", "--out", "v.txt"]);
    assert!(o.status.success());
    let report = read(&dir.path().join("v.txt"));
    assert!(report.trim_end().ends_with("PASS"));
    assert!(report.contains("# seed: 3"));

    let o = qswitch(dir.path(), &["validate", "--d", "2", "--count", "6", "--corrupt-pattern"]);
    assert_eq!(o.status.code(), Some(1));
    let report = String::from_utf8_lossy(&o.stdout);
    assert!(report.contains("worst block (2, 4)") || report.contains("worst block (4, 2)"));
    assert!(report.trim_end().ends_with("FAIL"));
}

#[test]
fn fractional_outputs_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let args = ["fractional", "--count", "1500", "--seed", "5", "--bins", "100", "--out", "x.csv", "--frontier", "fr.csv"];
    assert!(qswitch(dir.path(), &args).status.success());
    let first = (read(&dir.path().join("x.csv")), read(&dir.path().join("x_hist.csv")));
    assert!(qswitch(dir.path(), &args).status.success());
    let second = (read(&dir.path().join("x.csv")), read(&dir.path().join("x_hist.csv")));
    assert_eq!(first, second);

    let (header, rows) = table(&first.0);
    assert_eq!(header, ["m_frac", "chi", "P1", "P2", "P3", "P4", "P5", "P6"]);
    assert_eq!(rows.len(), 1500);
    let (header, bins) = table(&first.1);
    assert_eq!(header, ["bin_lo", "bin_hi", "density"]);
    assert_eq!(bins.len(), 100);
    let integral: f64 = bins
        .iter()
        .map(|b| (b[1].parse::<f64>().unwrap() - b[0].parse::<f64>().unwrap()) * b[2].parse::<f64>().unwrap())
        .sum();
    assert!((integral - 1.0).abs() < 1e-9);
    let (_, frontier) = table(&read(&dir.path().join("fr.csv")));
    assert_eq!(frontier.len(), 100);
}
