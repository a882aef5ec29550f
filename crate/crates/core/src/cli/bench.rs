//! Call-count scaling measurements.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::gen::{gen_coloring, gen_random, RandomSpec};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::spaces::{solve_basis, SolveConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `size` is the number of vertices `n`.
    Coloring,
    /// `size` is the number of polynomials `m`; the remaining shape is fixed.
    Random { nvars: usize, d: u32, rank: usize, homogeneous: bool },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Coloring => "coloring",
            Family::Random { .. } => "random",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: &'static str,
    pub m: usize,
    pub delta: usize,
    pub seed_count: usize,
    pub mean_primitive_calls: f64,
    pub stddev: f64,
    /// Per-seed sampling query counts, in seed order.
    pub calls: Vec<u64>,
}

/// Runs `solve_basis` for every size and seeds `0..seeds`, recording sampling query counts.
/// For the random family seed `s` drives both the instance and the sampler.
pub fn bench_scaling(family: Family, sizes: &[usize], seeds: usize, field: FieldSpec) -> Result<Vec<BenchRow>> {
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut rows = Vec::with_capacity(sizes.len());
    for size in sizes {
        let runs: Vec<(usize, usize, u64)> = (0..seeds as u64)
            .into_par_iter()
            .map(|seed| {
                let system = match family {
                    Family::Coloring => gen_coloring(size, field)?,
                    Family::Random {
                        nvars,
                        d,
                        rank,
                        homogeneous,
                    } => gen_random(&RandomSpec {
                        nvars,
                        d,
                        m: size,
                        rank,
                        homogeneous,
                        seed,
                        field,
                    })?,
                };
                let mut cfg = SolveConfig::new(system);
                cfg.seed = seed;
                let out = solve_basis(&cfg)?;
                Ok((cfg.system.len(), out.delta_used, out.stats.primitive_calls))
            })
            .collect::<Result<_>>()?;
        let calls: Vec<u64> = runs.iter().map(|r| r.2).collect();
        let n = calls.len().max(1) as f64;
        let mean = calls.iter().sum::<u64>() as f64 / n;
        let var = if calls.len() > 1 {
            calls.iter().map(|&c| (c as f64 - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        rows.push(BenchRow {
            family: family.name(),
            m: runs.first().map_or(size, |r| r.0),
            delta: runs.first().map_or(0, |r| r.1),
            seed_count: seeds,
            mean_primitive_calls: mean,
            stddev: var.sqrt(),
            calls,
        });
    }
    Ok(rows)
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("family,m,delta,seed_count,mean_primitive_calls,stddev\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{:.3},{:.3}",
            r.family, r.m, r.delta, r.seed_count, r.mean_primitive_calls, r.stddev
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_rows() {
        let rows = bench_scaling(Family::Coloring, &[6, 4], 2, FieldSpec::default()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].m, rows[0].delta), (9, 8));
        assert_eq!((rows[1].m, rows[1].delta), (16, 12));
        let csv = bench_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "family,m,delta,seed_count,mean_primitive_calls,stddev");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("coloring,9,8,2,"));
    }
}
