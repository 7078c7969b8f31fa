//! The `bench` subcommand: wall-clock medians comparing algorithmic
//! variants, emitted as `{method, size, millis}` rows.

use std::time::Instant;

use serde_json::{json, Map, Value};

use qwave_core::grsum::{sigma_sieved_table, sigma_table};
use qwave_core::oracle::p_dp;
use qwave_core::qpartial::{decompose, gamma_table};
use qwave_core::waves::partition_via_waves_with;

use crate::output::OutputDocument;
use crate::BenchSuite;

struct Row {
    method: &'static str,
    size: u64,
    millis: f64,
}

/// Median wall-clock of `runs` executions, in milliseconds.
fn time_median<F: FnMut()>(runs: usize, mut f: F) -> f64 {
    let mut samples: Vec<f64> = (0..runs)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    samples[samples.len() / 2]
}

const RUNS: usize = 5;

pub fn run(suite: BenchSuite, json_mode: bool) {
    let (name, rows) = match suite {
        BenchSuite::Sigma => ("sigma", bench_sigma()),
        BenchSuite::Decompose => ("decompose", bench_decompose()),
        BenchSuite::Partition => ("partition", bench_partition()),
    };
    let mut results = Map::new();
    let mut out = Vec::new();
    let mut text = String::new();
    for row in &rows {
        let mut obj = Map::new();
        obj.insert("method".into(), json!(row.method));
        obj.insert("size".into(), json!(row.size));
        obj.insert("millis".into(), json!(row.millis));
        out.push(Value::Object(obj));
        text.push_str(&format!(
            "{:<12} size {:>6}: {:>10.3} ms\n",
            row.method, row.size, row.millis
        ));
    }
    results.insert("rows".into(), Value::Array(out));
    let mut params = Map::new();
    params.insert("suite".into(), json!(name));
    OutputDocument::from_parts("bench", params, results, text).emit(json_mode);
}

/// Recurrence (O(k^2)) against the sieved-table oracle (O(k^3)) for the full
/// k x k table.
fn bench_sigma() -> Vec<Row> {
    let mut rows = Vec::new();
    for k in [8u32, 16, 32, 64, 128, 256] {
        rows.push(Row {
            method: "recurrence",
            size: k as u64,
            millis: time_median(RUNS, || {
                std::hint::black_box(sigma_table(k));
            }),
        });
        rows.push(Row {
            method: "sieved",
            size: k as u64,
            millis: time_median(RUNS, || {
                std::hint::black_box(sigma_sieved_table(k));
            }),
        });
    }
    rows
}

fn bench_decompose() -> Vec<Row> {
    let mut rows = Vec::new();
    for n in [4u32, 6, 8, 10, 12] {
        rows.push(Row {
            method: "decompose",
            size: n as u64,
            millis: time_median(RUNS, || {
                std::hint::black_box(decompose(n).unwrap());
            }),
        });
    }
    rows
}

/// Wave-sum evaluation against the DP table, both computing p_8(n).
fn bench_partition() -> Vec<Row> {
    let table = gamma_table(&decompose(8).unwrap());
    let mut rows = Vec::new();
    for n in [1_000u64, 10_000] {
        rows.push(Row {
            method: "waves",
            size: n,
            millis: time_median(RUNS, || {
                std::hint::black_box(partition_via_waves_with(&table, n).unwrap());
            }),
        });
        rows.push(Row {
            method: "dp",
            size: n,
            millis: time_median(RUNS, || {
                std::hint::black_box(p_dp(8, n as usize));
            }),
        });
    }
    rows
}
