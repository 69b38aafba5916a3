//! Wall-clock timings of fixed workloads.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use serde::Serialize;

use gontet::exactnum::BigInt;
use gontet::gon::gon3_uncached;
use gontet::tet::{sixj, tet};
use gontet::triples::TetLabels;

use crate::sample;
use crate::table::gon_inputs;

pub const MIN_RUNS: usize = 20;
pub const SIXJ_BATCH: usize = 10_000;
pub const SIXJ_MAX_LABEL: u32 = 50;
pub const GON_BATCH_MAX: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchCase {
    TetSpeed,
    GonBatch,
    SixjBatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub case: String,
    pub runs: usize,
    pub median_ms: f64,
    pub min_ms: f64,
    pub max_ms: f64,
    /// Exact result of one run, for checking against other commands.
    pub value: String,
}

pub fn speed_tet() -> TetLabels {
    TetLabels::new([50, 30, 76], [92, 48, 84])
}

/// Median of the samples; the mean of the middle two for an even count.
pub fn median(samples: &[Duration]) -> Duration {
    let mut s = samples.to_vec();
    s.sort();
    let n = s.len();
    if n % 2 == 1 {
        s[n / 2]
    } else {
        (s[n / 2 - 1] + s[n / 2]) / 2
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Sum of `gon3` over the sorted admissible triples up to the batch bound,
/// bypassing the memo.
pub fn gon_batch() -> BigInt {
    gon_inputs(GON_BATCH_MAX)
        .iter()
        .map(|t| gon3_uncached(t[0], t[1], t[2]))
        .sum()
}

/// Number of nonzero 6j symbols over the seeded batch.
pub fn sixj_batch(tets: &[TetLabels]) -> usize {
    tets.iter().filter(|t| !sixj(t).is_zero()).count()
}

pub fn sixj_inputs(seed: u64) -> Vec<TetLabels> {
    let mut rng = sample::rng(seed);
    (0..SIXJ_BATCH).map(|_| sample::tet(&mut rng, SIXJ_MAX_LABEL)).collect()
}

pub fn bench(case: BenchCase, runs: usize, seed: u64) -> BenchReport {
    let runs = runs.max(MIN_RUNS);
    let sixj_in = matches!(case, BenchCase::SixjBatch).then(|| sixj_inputs(seed));
    let mut value = String::new();
    let mut samples = Vec::with_capacity(runs);
    for _ in 0..runs {
        let start = Instant::now();
        let v = match case {
            BenchCase::TetSpeed => tet(&speed_tet()).to_string(),
            BenchCase::GonBatch => gon_batch().to_string(),
            BenchCase::SixjBatch => {
                sixj_batch(sixj_in.as_deref().expect("inputs built above")).to_string()
            }
        };
        samples.push(start.elapsed());
        value = v;
    }
    let name = case.to_possible_value().expect("named").get_name().to_string();
    BenchReport {
        case: name,
        runs,
        median_ms: ms(median(&samples)),
        min_ms: ms(*samples.iter().min().expect("runs >= 1")),
        max_ms: ms(*samples.iter().max().expect("runs >= 1")),
        value,
    }
}
