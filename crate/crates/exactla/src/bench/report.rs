use super::{cross_validate, generate_matrix, BenchCase, BenchRecord, BenchRing, GroupParams, MatrixVisitor, RunStatus};
use crate::charpoly::Algorithm;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use rayon::prelude::*;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub const CSV_HEADER: &str = "group,n,seed,algo,ring,ms,adds,subs,muls,divs,exact_divs,max_bits,digest";

/// One `[[case]]` table of the configuration file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseSpec {
    pub group: u8,
    pub n: Vec<usize>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub algos: Vec<String>,
    pub p: Option<u64>,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
    pub x: Option<i64>,
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

/// Benchmark configuration, TOML:
///
/// ```toml
/// [[case]]
/// group = 1
/// n = [8, 12]
/// seeds = [1, 2]
/// algos = ["berkowitz", "faddeev"]
/// ```
///
/// An empty `algos` list means every algorithm. Group 3 takes `p`, `vars`
/// and `ideal`, group 2 optional `vars`, group 4 an optional integer `x`.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    #[serde(default, rename = "case")]
    pub cases: Vec<CaseSpec>,
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: BenchConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        for c in &cfg.cases {
            c.algorithms()?;
            if !(1..=5).contains(&c.group) {
                return Err(Error::Config(format!("unknown group {}", c.group)));
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

impl CaseSpec {
    fn algorithms(&self) -> Result<Vec<Algorithm>> {
        if self.algos.is_empty() {
            return Ok(Algorithm::ALL.to_vec());
        }
        self.algos
            .iter()
            .map(|s| Algorithm::from_name(s).ok_or_else(|| Error::Config(format!("unknown algorithm '{s}'"))))
            .collect()
    }

    fn params(&self) -> GroupParams {
        GroupParams { p: self.p, vars: self.vars.clone(), ideal: self.ideal.clone(), x: self.x }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    /// One line per matrix whose algorithms disagreed or failed.
    pub disagreements: Vec<String>,
}

struct RunAll<'a> {
    algos: &'a [Algorithm],
}

impl MatrixVisitor for RunAll<'_> {
    type Output = super::ValidationReport;
    fn visit<R: BenchRing>(self, r: &R, a: &DenseMatrix<R::Elem>) -> super::ValidationReport {
        cross_validate(r, a, self.algos)
    }
}

/// Every (case, n, seed) unit runs its algorithms in sequence on one
/// matrix; units run in parallel and the report keeps configuration order.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchReport> {
    let mut units = Vec::new();
    for c in &cfg.cases {
        let algos = c.algorithms()?;
        for &n in &c.n {
            for &seed in &c.seeds {
                units.push((c.group, n, seed, c.params(), algos.clone()));
            }
        }
    }
    let results: Vec<Result<(Vec<BenchRecord>, Option<String>)>> = units
        .par_iter()
        .map(|(group, n, seed, params, algos)| {
            let m = generate_matrix(*group, *n, *seed, params)?;
            let ring = m.ring_description();
            let report = m.visit(RunAll { algos });
            let records = report
                .runs
                .iter()
                .map(|run| BenchRecord {
                    case: BenchCase { group: *group, n: *n, seed: *seed, params: params.clone(), algo: run.algo },
                    ring: ring.clone(),
                    ms: run.ms,
                    stats: run.stats,
                    max_bits: run.max_bits,
                    digest: run.digest.clone().unwrap_or_default(),
                    status: run.status.clone(),
                })
                .collect();
            let bad = (!report.is_unanimous())
                .then(|| format!("group {group} n {n} seed {seed}:\n{}", report.render().trim_end()));
            Ok((records, bad))
        })
        .collect();
    let mut records = Vec::new();
    let mut disagreements = Vec::new();
    for r in results {
        let (recs, bad) = r?;
        records.extend(recs);
        disagreements.extend(bad);
    }
    Ok(BenchReport { records, disagreements })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            let digest = match &r.status {
                RunStatus::Done => r.digest.clone(),
                RunStatus::Skipped(e) => format!("skipped: {e}"),
                RunStatus::Failed(e) => format!("failed: {e}"),
            };
            let s = &r.stats;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{:.3},{},{},{},{},{},{},{}",
                r.case.group,
                r.case.n,
                r.case.seed,
                r.case.algo,
                csv_field(&r.ring),
                r.ms,
                s.adds,
                s.subs,
                s.muls,
                s.divs,
                s.exact_divs,
                r.max_bits,
                csv_field(&digest)
            );
        }
        out
    }

    /// One table per (group, ring): rows are orders n, columns algorithms,
    /// cells the mean time and mean operation count over the seeds.
    pub fn to_markdown(&self) -> String {
        let mut tables: BTreeMap<(u8, String), (Vec<Algorithm>, BTreeMap<usize, BTreeMap<Algorithm, Vec<&BenchRecord>>>)> =
            BTreeMap::new();
        for r in &self.records {
            let entry = tables.entry((r.case.group, r.ring.clone())).or_default();
            if !entry.0.contains(&r.case.algo) {
                entry.0.push(r.case.algo);
            }
            entry.1.entry(r.case.n).or_default().entry(r.case.algo).or_default().push(r);
        }
        let mut out = String::new();
        for ((group, ring), (algos, rows)) in &tables {
            let _ = writeln!(out, "## Group {group} over {ring}\n");
            let _ = writeln!(out, "| n | {} |", algos.iter().map(|a| a.name()).collect::<Vec<_>>().join(" | "));
            let _ = writeln!(out, "|---|{}", "---|".repeat(algos.len()));
            for (n, cells) in rows {
                let cols: Vec<String> = algos
                    .iter()
                    .map(|a| {
                        let recs: Vec<&&BenchRecord> =
                            cells.get(a).map(|v| v.iter().filter(|r| r.status == RunStatus::Done).collect()).unwrap_or_default();
                        if recs.is_empty() {
                            return "n/a".to_string();
                        }
                        let k = recs.len() as f64;
                        let ms = recs.iter().map(|r| r.ms).sum::<f64>() / k;
                        let ops = recs.iter().map(|r| r.stats.total() as f64).sum::<f64>() / k;
                        format!("{ms:.1} ms, {ops:.0} ops")
                    })
                    .collect();
                let _ = writeln!(out, "| {n} | {} |", cols.join(" | "));
            }
            out.push('\n');
        }
        if self.disagreements.is_empty() {
            out.push_str("All algorithms agreed on every matrix.\n");
        } else {
            out.push_str("Disagreements:\n\n```\n");
            for d in &self.disagreements {
                out.push_str(d);
                out.push('\n');
            }
            out.push_str("```\n");
        }
        out
    }
}
