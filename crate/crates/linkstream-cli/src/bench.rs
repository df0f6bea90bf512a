//! Wall-clock measurement of transform and enumeration, reported as CSV.

use std::time::Instant;

use linkstream::{enumerate_maximal_cliques, transform, Delta, InstantStream, LinkStream, Result};

pub const CSV_HEADER: &str = "dataset,delta,n,m,clique_count,transform_ms,enum_ms,total_ms";

/// One measurement: a dataset, an optional Δ, and millisecond timings from
/// a monotonic clock.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub dataset: String,
    pub delta: Option<i64>,
    pub n: usize,
    pub m: usize,
    pub clique_count: usize,
    pub transform_ms: u128,
    pub enum_ms: u128,
    pub total_ms: u128,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        let delta = self.delta.map_or_else(|| "n/a".to_owned(), |d| d.to_string());
        format!(
            "{},{},{},{},{},{},{},{}",
            self.dataset,
            delta,
            self.n,
            self.m,
            self.clique_count,
            self.transform_ms,
            self.enum_ms,
            self.total_ms
        )
    }
}

/// Measure clique enumeration on a duration stream: one warm-up run, one
/// measured run.
pub fn bench_duration(dataset: &str, stream: &LinkStream) -> BenchRow {
    let _ = enumerate_maximal_cliques(stream);
    let started = Instant::now();
    let cliques = enumerate_maximal_cliques(stream);
    let enum_ms = started.elapsed().as_millis();
    BenchRow {
        dataset: dataset.to_owned(),
        delta: None,
        n: stream.node_count(),
        m: stream.link_count(),
        clique_count: cliques.len(),
        transform_ms: 0,
        enum_ms,
        total_ms: enum_ms,
    }
}

/// Measure transform plus enumeration for one Δ on an instant stream: one
/// warm-up run of the full pipeline, then one measured run of each stage.
pub fn bench_delta(dataset: &str, instant: &InstantStream, delta: Delta) -> Result<BenchRow> {
    let warm = transform(instant, delta)?;
    let _ = enumerate_maximal_cliques(&warm);
    drop(warm);

    let t0 = Instant::now();
    let derived = transform(instant, delta)?;
    let t1 = Instant::now();
    let cliques = enumerate_maximal_cliques(&derived);
    let t2 = Instant::now();
    Ok(BenchRow {
        dataset: dataset.to_owned(),
        delta: Some(delta.value()),
        n: instant.node_count(),
        m: instant.event_count(),
        clique_count: cliques.len(),
        transform_ms: (t1 - t0).as_millis(),
        enum_ms: (t2 - t1).as_millis(),
        total_ms: (t2 - t0).as_millis(),
    })
}
