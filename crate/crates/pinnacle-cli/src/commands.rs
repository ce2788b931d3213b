//! Implementations of the non-benchmark subcommands.

use std::io::Write;

use anyhow::Context;
use num_bigint::BigUint;
use pinnacles::action::{classical_fs, dual_fs};
use pinnacles::admissible::{format_value_set, vale_sets};
use pinnacles::counting::{
    count_permutations, for_each_constructive, for_each_naive, fs_minimal_reps,
    generate_constructive, generate_naive_with_limit,
};
use pinnacles::{Permutation, DEFAULT_EXHAUSTIVE_LIMIT};

use crate::args::{CountMethod, Format, GenMethod};
use crate::report::{csv_values, ActReport, CountReport, OrbitRow};

/// Cap on n for the filtering scan, overridable via PINNACLE_MAX_NAIVE_N.
pub fn naive_limit() -> anyhow::Result<usize> {
    match std::env::var("PINNACLE_MAX_NAIVE_N") {
        Ok(raw) => raw
            .trim()
            .parse()
            .with_context(|| format!("PINNACLE_MAX_NAIVE_N must be an integer, got {raw:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_EXHAUSTIVE_LIMIT),
        Err(err) => Err(err).context("PINNACLE_MAX_NAIVE_N is not valid unicode"),
    }
}

pub fn cmd_count(
    out: &mut dyn Write,
    format: Format,
    n: usize,
    pinnacles: &[u32],
    method: CountMethod,
) -> anyhow::Result<()> {
    let count = match method {
        CountMethod::Formula => count_permutations(pinnacles, n),
        CountMethod::Enumerate => {
            let perms = generate_naive_with_limit(pinnacles, n, naive_limit()?)?;
            BigUint::from(perms.len())
        }
    };
    match format {
        Format::Plain => writeln!(out, "{count}")?,
        Format::Json => {
            let report = CountReport {
                n,
                pinnacles: pinnacles.to_vec(),
                method: method.name().to_string(),
                count: count.to_string(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Format::Csv => {
            writeln!(out, "n,pinnacles,method,count")?;
            writeln!(
                out,
                "{n},{},{},{count}",
                csv_values(pinnacles),
                method.name()
            )?;
        }
    }
    Ok(())
}

pub fn cmd_generate(
    out: &mut dyn Write,
    format: Format,
    n: usize,
    pinnacles: &[u32],
    method: GenMethod,
    sorted: bool,
) -> anyhow::Result<()> {
    // The constructive generator can stream plain unsorted output without
    // materializing the whole family.
    if format == Format::Plain && !sorted && method == GenMethod::Construct {
        let mut count = 0u64;
        let mut write_err = None;
        for_each_constructive(pinnacles, n, |p| {
            if write_err.is_some() {
                return;
            }
            count += 1;
            if let Err(err) = writeln!(out, "{p}") {
                write_err = Some(err);
            }
        });
        if let Some(err) = write_err {
            return Err(err.into());
        }
        eprintln!("count: {count}");
        return Ok(());
    }
    if format == Format::Plain && method == GenMethod::Naive {
        // The scan is already lexicographic.
        let mut count = 0u64;
        let mut write_err = None;
        for_each_naive(pinnacles, n, naive_limit()?, |p| {
            if write_err.is_some() {
                return;
            }
            count += 1;
            if let Err(err) = writeln!(out, "{p}") {
                write_err = Some(err);
            }
        })?;
        if let Some(err) = write_err {
            return Err(err.into());
        }
        eprintln!("count: {count}");
        return Ok(());
    }
    let mut perms = match method {
        GenMethod::Naive => generate_naive_with_limit(pinnacles, n, naive_limit()?)?,
        GenMethod::Construct => generate_constructive(pinnacles, n),
    };
    if sorted {
        perms.sort();
    }
    match format {
        Format::Plain => {
            for p in &perms {
                writeln!(out, "{p}")?;
            }
        }
        Format::Json => {
            let lines: Vec<String> = perms.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&lines)?)?;
        }
        Format::Csv => {
            writeln!(out, "permutation")?;
            for p in &perms {
                writeln!(out, "{}", csv_values(p.values()))?;
            }
        }
    }
    eprintln!("count: {}", perms.len());
    Ok(())
}

pub fn cmd_orbits(
    out: &mut dyn Write,
    format: Format,
    n: usize,
    pinnacles: &[u32],
) -> anyhow::Result<()> {
    let reps = fs_minimal_reps(pinnacles, n);
    match format {
        Format::Plain => {
            for rep in &reps {
                let size = BigUint::from(1u32) << (n - pinnacles.len() - 1);
                writeln!(out, "{rep}\t{size}")?;
            }
        }
        Format::Json => {
            let rows: Vec<OrbitRow> = reps
                .iter()
                .map(|rep| OrbitRow {
                    representative: rep.to_string(),
                    orbit_size: (BigUint::from(1u32) << (n - pinnacles.len() - 1)).to_string(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
        Format::Csv => {
            writeln!(out, "representative,orbit_size")?;
            for rep in &reps {
                let size = BigUint::from(1u32) << (n - pinnacles.len() - 1);
                writeln!(out, "{},{size}", csv_values(rep.values()))?;
            }
        }
    }
    Ok(())
}

pub fn cmd_vale_sets(
    out: &mut dyn Write,
    format: Format,
    n: usize,
    pinnacles: &[u32],
) -> anyhow::Result<()> {
    let sets = vale_sets(pinnacles, n);
    match format {
        Format::Plain => {
            for v in &sets {
                writeln!(out, "{}", format_value_set(v))?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&sets)?)?,
        Format::Csv => {
            writeln!(out, "vale_set")?;
            for v in &sets {
                writeln!(out, "{}", csv_values(v))?;
            }
        }
    }
    Ok(())
}

pub fn cmd_act(
    out: &mut dyn Write,
    format: Format,
    perm: &str,
    x: u32,
    classic: bool,
) -> anyhow::Result<()> {
    let p: Permutation = perm.parse()?;
    let result = if classic {
        classical_fs(&p, x)?
    } else {
        dual_fs(&p, x)?
    };
    let variant = if classic { "classic" } else { "dual" };
    match format {
        Format::Plain => writeln!(out, "{result}")?,
        Format::Json => {
            let report = ActReport {
                perm: p.to_string(),
                x,
                variant: variant.to_string(),
                result: result.to_string(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Format::Csv => {
            writeln!(out, "perm,x,variant,result")?;
            writeln!(
                out,
                "{},{x},{variant},{}",
                csv_values(p.values()),
                csv_values(result.values())
            )?;
        }
    }
    Ok(())
}
