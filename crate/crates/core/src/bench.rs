//! Wall-clock scaling of the maps on staircase inputs.

use std::hint::black_box;
use std::time::Instant;

use serde::Serialize;

use crate::circuits::{MapId, Reduction, Value};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::Tableau;

/// Sizes of the default scaling run.
pub const DEFAULT_KS: [usize; 4] = [32, 64, 128, 256];
pub const DEFAULT_REPETITIONS: usize = 7;

/// Median time at one `k`, and its ratio to the previous row.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub k: usize,
    pub input_bits: u64,
    pub median_secs: f64,
    pub ratio: Option<f64>,
    pub base_calls: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub map: MapId,
    pub via: Option<MapId>,
    pub repetitions: usize,
    pub rows: Vec<BenchRow>,
    pub total_secs: f64,
}

impl BenchReport {
    pub fn ratios(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.ratio).collect()
    }
}

/// The staircase-profile input for `map` at size `k`.
pub fn staircase_input(map: MapId, k: usize) -> Result<Value> {
    let can = Tableau::canonical(&Partition::staircase(k));
    Ok(match map {
        MapId::Psi | MapId::Xi | MapId::XiN | MapId::Chi | MapId::PhiLr | MapId::Rho1 | MapId::Rho2 => {
            Value::Tableau(can)
        }
        MapId::Zeta | MapId::ZetaN => {
            let (low, high) = can.split_at_value(k / 2);
            Value::tableaux(low, high.shift_values(-((k / 2) as i64))?)
        }
        MapId::Phi | MapId::Burge => {
            Value::Matrix(crate::matrix::IntMatrix::from_fn(k, |i, j| i64::from(i + j < k)))
        }
        _ => return Err(Error::WrongValue("map without a staircase benchmark")),
    })
}

/// Each sample batches enough calls to last at least this long.
const MIN_SAMPLE_SECS: f64 = 0.05;

fn time_batch(f: &dyn Fn(&Value) -> Result<Value>, input: &Value, n: usize) -> Result<f64> {
    let t = Instant::now();
    for _ in 0..n {
        black_box(f(black_box(input))?);
    }
    Ok(t.elapsed().as_secs_f64() / n as f64)
}

fn measure(
    map: MapId,
    ks: &[usize],
    repetitions: usize,
    base_calls: Option<usize>,
    f: &dyn Fn(&Value) -> Result<Value>,
) -> Result<BenchReport> {
    let start = Instant::now();
    let reps = repetitions.max(1);
    let mut rows: Vec<BenchRow> = Vec::new();
    for &k in ks {
        let input = staircase_input(map, k)?;
        let once = time_batch(f, &input, 1)?;
        let n = ((MIN_SAMPLE_SECS / once.max(1e-9)).ceil() as usize).clamp(1, 100_000);
        let mut times = (0..reps).map(|_| time_batch(f, &input, n)).collect::<Result<Vec<f64>>>()?;
        times.sort_by(f64::total_cmp);
        let median = times[times.len() / 2];
        let ratio = rows.last().map(|p| median / p.median_secs);
        rows.push(BenchRow { k, input_bits: input.bits(), median_secs: median, ratio, base_calls });
    }
    Ok(BenchReport { map, via: None, repetitions: reps, rows, total_secs: start.elapsed().as_secs_f64() })
}

/// Median per-call time of `map` over `repetitions` samples for each `k`.
pub fn bench(map: MapId, ks: &[usize], repetitions: usize) -> Result<BenchReport> {
    measure(map, ks, repetitions, None, &|v| map.apply(v))
}

/// The same timing with `r.source` computed through the circuit of `r`.
pub fn bench_reduction(r: &Reduction, ks: &[usize], repetitions: usize) -> Result<BenchReport> {
    let mut report = measure(r.source, ks, repetitions, Some(r.declared_cost), &|v| Ok(r.run(v)?.0))?;
    report.via = Some(r.base);
    Ok(report)
}
