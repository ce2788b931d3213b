//! Timing harness comparing the filtering scan with the constructive generator.

use std::io::Write;
use std::time::Instant;

use anyhow::ensure;
use num_bigint::BigUint;
use pinnacles::admissible::is_admissible_pinnacle_set;
use pinnacles::counting::{count_permutations, for_each_constructive, for_each_naive};

use crate::args::Format;
use crate::commands::naive_limit;
use crate::report::{csv_values, BenchRowReport};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub pinnacles: Vec<u32>,
    pub count: BigUint,
    pub naive_ms: Option<f64>,
    pub construct_ms: f64,
}

impl BenchRow {
    pub fn speedup(&self) -> Option<f64> {
        self.naive_ms.map(|naive| naive / self.construct_ms)
    }

    pub fn report(&self) -> BenchRowReport {
        BenchRowReport {
            n: self.n,
            pinnacles: self.pinnacles.clone(),
            count: self.count.to_string(),
            naive_ms: self.naive_ms,
            construct_ms: self.construct_ms,
            speedup: self.speedup(),
        }
    }
}

/// Runs the leg once to warm up, then `runs` timed samples; returns the
/// emission count and the median time in milliseconds.
fn time_leg(mut work: impl FnMut() -> u64, runs: usize) -> (u64, f64) {
    let count = work();
    let mut times: Vec<f64> = (0..runs.max(1))
        .map(|_| {
            let start = Instant::now();
            let sample = work();
            assert_eq!(sample, count, "leg emitted a different count on a rerun");
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    (count, times[(times.len() - 1) / 2])
}

pub fn bench_row(
    n: usize,
    pinnacles: &[u32],
    runs: usize,
    naive_limit: usize,
) -> anyhow::Result<BenchRow> {
    let expected = count_permutations(pinnacles, n);
    let (constructed, construct_ms) = time_leg(
        || {
            let mut c = 0u64;
            for_each_constructive(pinnacles, n, |_| c += 1);
            c
        },
        runs,
    );
    ensure!(
        BigUint::from(constructed) == expected,
        "constructive generator disagrees with the formula for P={pinnacles:?}, n={n}"
    );
    let naive_ms = if n <= naive_limit {
        let (scanned, ms) = time_leg(
            || {
                let mut c = 0u64;
                for_each_naive(pinnacles, n, naive_limit, |_| c += 1)
                    .expect("n is within the scan limit");
                c
            },
            runs,
        );
        ensure!(
            BigUint::from(scanned) == expected,
            "filtering scan disagrees with the formula for P={pinnacles:?}, n={n}"
        );
        Some(ms)
    } else {
        None
    };
    Ok(BenchRow {
        n,
        pinnacles: pinnacles.to_vec(),
        count: expected,
        naive_ms,
        construct_ms,
    })
}

/// Every admissible pinnacle set for {1, .., n}, ordered by size then lexicographically.
pub fn admissible_sets(n: usize) -> anyhow::Result<Vec<Vec<u32>>> {
    let candidates: Vec<u32> = (3..=n as u32).collect();
    ensure!(
        candidates.len() <= 20,
        "refusing to enumerate 2^{} pinnacle sets",
        candidates.len()
    );
    let mut sets: Vec<Vec<u32>> = (0u64..1 << candidates.len())
        .map(|mask| {
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect::<Vec<u32>>()
        })
        .filter(|s| is_admissible_pinnacle_set(s, n))
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

pub fn bench_all(n: usize, runs: usize, naive_limit: usize) -> anyhow::Result<Vec<BenchRow>> {
    admissible_sets(n)?
        .iter()
        .map(|pinnacles| bench_row(n, pinnacles, runs, naive_limit))
        .collect()
}

/// Total-time ratio across the rows where both legs ran.
pub fn aggregate_speedup(rows: &[BenchRow]) -> Option<f64> {
    let mut naive_total = 0.0;
    let mut construct_total = 0.0;
    for row in rows {
        if let Some(naive) = row.naive_ms {
            naive_total += naive;
            construct_total += row.construct_ms;
        }
    }
    (construct_total > 0.0).then(|| naive_total / construct_total)
}

pub fn cmd_bench(
    out: &mut dyn Write,
    format: Format,
    n: usize,
    pinnacles: Option<&[u32]>,
    all: bool,
    runs: usize,
) -> anyhow::Result<()> {
    let limit = naive_limit()?;
    let rows = if all {
        bench_all(n, runs, limit)?
    } else {
        let pinnacles = pinnacles.expect("the scope group guarantees a pinnacle set");
        vec![bench_row(n, pinnacles, runs, limit)?]
    };
    match format {
        Format::Plain => {
            for row in &rows {
                let set = if row.pinnacles.is_empty() {
                    "none".to_string()
                } else {
                    csv_values(&row.pinnacles).replace(';', ",")
                };
                let naive = match row.naive_ms {
                    Some(ms) => format!("{ms:.3}ms"),
                    None => "skipped".to_string(),
                };
                let speedup = match row.speedup() {
                    Some(ratio) => format!("{ratio:.1}x"),
                    None => "-".to_string(),
                };
                writeln!(
                    out,
                    "P={set} count={} naive={naive} construct={:.3}ms speedup={speedup}",
                    row.count, row.construct_ms
                )?;
            }
            if let Some(ratio) = aggregate_speedup(&rows) {
                writeln!(out, "aggregate speedup: {ratio:.1}x")?;
            }
        }
        Format::Json => {
            let reports: Vec<BenchRowReport> = rows.iter().map(BenchRow::report).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
        }
        Format::Csv => {
            writeln!(out, "n,pinnacles,count,naive_ms,construct_ms,speedup")?;
            for row in &rows {
                let naive = match row.naive_ms {
                    Some(ms) => format!("{ms:.6}"),
                    None => "skipped".to_string(),
                };
                let speedup = match row.speedup() {
                    Some(ratio) => format!("{ratio:.3}"),
                    None => String::new(),
                };
                writeln!(
                    out,
                    "{},{},{},{naive},{:.6},{speedup}",
                    row.n,
                    csv_values(&row.pinnacles),
                    row.count,
                    row.construct_ms
                )?;
            }
        }
    }
    Ok(())
}
