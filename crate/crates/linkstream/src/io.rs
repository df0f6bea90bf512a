//! Text formats for streams and cliques, and seeded random instance
//! generation.
//!
//! Stream files are whitespace-separated lines: `b e u v` for links with
//! durations, `t u v` for instantaneous contacts. Lines starting with `#`
//! are comments, except an optional `#horizon α ω` header declaring the
//! time horizon; without it the horizon is inferred from the data. Node
//! labels are opaque whitespace-free tokens.
//!
//! All writers produce a total, deterministic ordering, so equal inputs
//! give byte-identical output and stream files round-trip.

use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clique::Clique;
use crate::error::{Error, Result};
use crate::instant::InstantStream;
use crate::node::NodeTable;
use crate::stream::LinkStream;
use crate::time::{Interval, Time};

const HORIZON_TAG: &str = "#horizon";

/// How [`write_cliques`] renders its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// One clique per line: `x y u1 u2 ... uk`.
    #[default]
    Plain,
    /// One JSON object per line: `{"begin":x,"end":y,"nodes":[...]}`.
    JsonLines,
}

fn parse_time(token: &str, line: usize) -> Result<Time> {
    token.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("expected an integer time, got `{token}`"),
    })
}

fn parse_horizon_header(
    fields: &[&str],
    line: usize,
    previous: &Option<Interval>,
) -> Result<Interval> {
    if previous.is_some() {
        return Err(Error::Parse { line, reason: "duplicate #horizon header".into() });
    }
    let [alpha, omega] = fields else {
        return Err(Error::Parse {
            line,
            reason: format!("expected `#horizon α ω`, got {} fields", fields.len() + 1),
        });
    };
    let alpha = parse_time(alpha, line)?;
    let omega = parse_time(omega, line)?;
    Interval::new(alpha, omega).map_err(|_| Error::Parse {
        line,
        reason: format!("horizon begin {alpha} is after end {omega}"),
    })
}

/// `(begin, end, u, v)` rows of a duration-stream file, in file order,
/// plus the declared horizon if a `#horizon` header was present.
pub type DurationRecords = (Vec<(Time, Time, String, String)>, Option<Interval>);

/// `(t, u, v)` rows of an instant-stream file, in file order, plus the
/// declared horizon if present.
pub type InstantRecords = (Vec<(Time, String, String)>, Option<Interval>);

/// Parse a duration-stream file into `(begin, end, u, v)` records in file
/// order, plus the declared horizon if a `#horizon` header is present.
pub fn parse_duration_stream(input: impl BufRead) -> Result<DurationRecords> {
    let mut records = Vec::new();
    let mut horizon = None;
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let number = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.split_first() {
            None => {}
            Some((&HORIZON_TAG, rest)) => {
                horizon = Some(parse_horizon_header(rest, number, &horizon)?);
            }
            Some((first, _)) if first.starts_with('#') => {}
            Some(_) => {
                let [b, e, u, v] = fields[..] else {
                    return Err(Error::Parse {
                        line: number,
                        reason: format!("expected `begin end u v`, got {} fields", fields.len()),
                    });
                };
                let b = parse_time(b, number)?;
                let e = parse_time(e, number)?;
                if b > e {
                    return Err(Error::Parse {
                        line: number,
                        reason: format!("link begin {b} is after end {e}"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: number,
                        reason: format!("self-loop on node `{u}`"),
                    });
                }
                records.push((b, e, u.to_string(), v.to_string()));
            }
        }
    }
    Ok((records, horizon))
}

/// Parse an instant-stream file into `(t, u, v)` records in file order,
/// plus the declared horizon if present.
pub fn parse_instant_stream(input: impl BufRead) -> Result<InstantRecords> {
    let mut records = Vec::new();
    let mut horizon = None;
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let number = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.split_first() {
            None => {}
            Some((&HORIZON_TAG, rest)) => {
                horizon = Some(parse_horizon_header(rest, number, &horizon)?);
            }
            Some((first, _)) if first.starts_with('#') => {}
            Some(_) => {
                let [t, u, v] = fields[..] else {
                    return Err(Error::Parse {
                        line: number,
                        reason: format!("expected `t u v`, got {} fields", fields.len()),
                    });
                };
                let t = parse_time(t, number)?;
                if u == v {
                    return Err(Error::Parse {
                        line: number,
                        reason: format!("self-loop on node `{u}`"),
                    });
                }
                records.push((t, u.to_string(), v.to_string()));
            }
        }
    }
    Ok((records, horizon))
}

/// Parse and build a duration stream in one step.
pub fn read_duration_stream(input: impl BufRead) -> Result<LinkStream> {
    let (records, horizon) = parse_duration_stream(input)?;
    LinkStream::build(records, horizon)
}

/// Parse and build an instant stream in one step.
pub fn read_instant_stream(input: impl BufRead) -> Result<InstantStream> {
    let (records, horizon) = parse_instant_stream(input)?;
    InstantStream::build(records, horizon)
}

#[derive(Serialize)]
struct CliqueRecord<'a> {
    begin: Time,
    end: Time,
    nodes: Vec<&'a str>,
}

/// Write cliques one per line, nodes in label order, lines sorted by
/// `(begin, end, node list)`.
pub fn write_cliques(
    out: &mut impl Write,
    nodes: &NodeTable,
    cliques: &[Clique],
    format: OutputFormat,
) -> Result<()> {
    let mut rows: Vec<CliqueRecord> = cliques
        .iter()
        .map(|c| {
            let mut labels: Vec<&str> = c.nodes().iter().map(|&id| nodes.label(id)).collect();
            labels.sort_unstable();
            CliqueRecord { begin: c.interval().begin(), end: c.interval().end(), nodes: labels }
        })
        .collect();
    rows.sort_unstable_by(|a, b| (a.begin, a.end, &a.nodes).cmp(&(b.begin, b.end, &b.nodes)));

    for row in rows {
        match format {
            OutputFormat::Plain => {
                write!(out, "{} {}", row.begin, row.end)?;
                for label in &row.nodes {
                    write!(out, " {label}")?;
                }
                writeln!(out)?;
            }
            OutputFormat::JsonLines => {
                // Integers and strings always serialize.
                let json = serde_json::to_string(&row).expect("clique record serializes");
                writeln!(out, "{json}")?;
            }
        }
    }
    Ok(())
}

/// Write a duration stream as a `#horizon` header plus `b e u v` lines,
/// sorted by node labels and then by interval.
pub fn write_duration_stream(out: &mut impl Write, stream: &LinkStream) -> Result<()> {
    let h = stream.horizon();
    writeln!(out, "{HORIZON_TAG} {} {}", h.begin(), h.end())?;
    let mut rows: Vec<(&str, &str, Interval)> = Vec::with_capacity(stream.link_count());
    for ((u, v), intervals) in stream.pairs() {
        let mut labels = (stream.nodes().label(u), stream.nodes().label(v));
        if labels.0 > labels.1 {
            labels = (labels.1, labels.0);
        }
        rows.extend(intervals.iter().map(|&iv| (labels.0, labels.1, iv)));
    }
    rows.sort_unstable();
    for (u, v, iv) in rows {
        writeln!(out, "{} {} {u} {v}", iv.begin(), iv.end())?;
    }
    Ok(())
}

fn validate_generator_params(n: usize, m: usize, horizon: Interval) -> Result<Time> {
    if n < 2 {
        return Err(Error::InvalidParams { reason: format!("need at least 2 nodes, got {n}") });
    }
    if m < 1 {
        return Err(Error::InvalidParams { reason: "need at least 1 link".into() });
    }
    horizon
        .end()
        .checked_sub(horizon.begin())
        .ok_or(Error::TimeOverflow)
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (String, String) {
    let i = rng.random_range(0..n);
    let mut j = rng.random_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    (format!("v{i}"), format!("v{j}"))
}

/// A seeded random duration stream: `m` links with uniformly chosen pairs
/// (out of `n` possible nodes), uniform begins, and uniform lengths clipped
/// to the horizon. Merging may leave fewer than `m` indexed links.
pub fn generate_random_duration_stream(
    n: usize,
    m: usize,
    horizon: Interval,
    seed: u64,
) -> Result<LinkStream> {
    let span = validate_generator_params(n, m, horizon)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut links = Vec::with_capacity(m);
    for _ in 0..m {
        let (u, v) = random_pair(&mut rng, n);
        let begin = horizon.begin() + rng.random_range(0..=span);
        let length = rng.random_range(0..=span);
        let end = begin.saturating_add(length).min(horizon.end());
        links.push((begin, end, u, v));
    }
    LinkStream::build(links, Some(horizon))
}

/// A seeded random instant stream: `m` events with uniformly chosen pairs
/// and uniform times. Duplicate events collapse, so fewer than `m` may
/// remain.
pub fn generate_random_instant_stream(
    n: usize,
    m: usize,
    horizon: Interval,
    seed: u64,
) -> Result<InstantStream> {
    let span = validate_generator_params(n, m, horizon)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut events = Vec::with_capacity(m);
    for _ in 0..m {
        let (u, v) = random_pair(&mut rng, n);
        let t = horizon.begin() + rng.random_range(0..=span);
        events.push((t, u, v));
    }
    InstantStream::build(events, Some(horizon))
}
