//! Empirical growth of the conjugacy decision on random inputs.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::conjugacy::{tree_size, Solver};
use crate::engine::Engine;
use crate::error::Error;
use crate::random::random_pair;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub sample: usize,
    /// Nodes of the explicit tree `T_{u,v}`.
    pub tree_size: u128,
    /// Distinct non-leaf pairs the memoized solver evaluated.
    pub visited: usize,
    pub millis: f64,
    pub conjugate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub size_exponent: f64,
    pub time_exponent: f64,
}

/// Lengths `8, 16, 32, …` up to `max_len`, always ending at `max_len`.
pub fn geometric_lengths(max_len: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = 8;
    while n < max_len {
        out.push(n);
        n *= 2;
    }
    if max_len > 0 {
        out.push(max_len);
    }
    out
}

/// Least-squares slope of `ln y` against `ln x`; points with non-positive coordinates are ignored.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = logs.len() as f64;
    if logs.len() < 2 {
        return 0.0;
    }
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

fn rng_for(seed: u64, n: usize, sample: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | sample as u64);
    rng
}

/// One record per `(n, sample)`; records are sorted by `(n, sample)`.
pub fn run_bench(engine: &Engine, max_len: usize, samples: usize, seed: u64) -> Result<BenchReport, Error> {
    let jobs: Vec<(usize, usize)> = geometric_lengths(max_len)
        .into_iter()
        .flat_map(|n| (0..samples).map(move |i| (n, i)))
        .collect();
    let records: Vec<BenchRecord> = jobs
        .par_iter()
        .map(|&(n, sample)| {
            let (u, v) = random_pair(&mut rng_for(seed, n, sample), n);
            let start = Instant::now();
            let mut solver = Solver::new(engine);
            let q = solver.q_set(&u, &v)?;
            let millis = start.elapsed().as_secs_f64() * 1e3;
            Ok(BenchRecord {
                n,
                sample,
                tree_size: tree_size(&u, &v),
                visited: solver.visited(),
                millis,
                conjugate: !q.is_empty(),
            })
        })
        .collect::<Result<_, Error>>()?;
    let size_points: Vec<(f64, f64)> = records.iter().map(|r| (r.n as f64, r.tree_size as f64)).collect();
    let time_points: Vec<(f64, f64)> = records.iter().map(|r| (r.n as f64, r.millis)).collect();
    Ok(BenchReport {
        size_exponent: loglog_slope(&size_points),
        time_exponent: loglog_slope(&time_points),
        records,
    })
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,tree_size,visited,millis\n");
        for r in &self.records {
            let _ = writeln!(out, "{},{},{},{:.4}", r.n, r.tree_size, r.visited, r.millis);
        }
        out
    }
}
