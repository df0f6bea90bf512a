//! Discrete timestamps and closed time intervals.
//!
//! All times are signed 64-bit integers in whatever unit the dataset uses
//! (seconds for contact traces). Intervals are closed on both ends, so
//! `[b, e]` contains every `t` with `b <= t <= e` and zero-length intervals
//! (`b == e`) are single points.

use crate::error::{Error, Result};

/// Dataset-native timestamp.
pub type Time = i64;

/// Add a duration to a timestamp, failing instead of wrapping.
pub fn checked_shift(t: Time, by: i64) -> Result<Time> {
    t.checked_add(by).ok_or(Error::TimeOverflow)
}

/// A closed interval `[begin, end]` with `begin <= end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    begin: Time,
    end: Time,
}

impl Interval {
    pub fn new(begin: Time, end: Time) -> Result<Self> {
        if begin > end {
            return Err(Error::InvertedInterval { begin, end });
        }
        Ok(Self { begin, end })
    }

    /// Zero-length interval `[t, t]`.
    pub fn point(t: Time) -> Self {
        Self { begin: t, end: t }
    }

    pub(crate) fn raw(begin: Time, end: Time) -> Self {
        debug_assert!(begin <= end, "raw interval [{begin}, {end}] inverted");
        Self { begin, end }
    }

    pub fn begin(self) -> Time {
        self.begin
    }

    pub fn end(self) -> Time {
        self.end
    }

    /// Duration `end - begin`; zero for point intervals.
    pub fn length(self) -> i64 {
        self.end - self.begin
    }

    pub fn contains(self, t: Time) -> bool {
        self.begin <= t && t <= self.end
    }

    pub fn contains_interval(self, other: Interval) -> bool {
        self.begin <= other.begin && other.end <= self.end
    }

    /// Closed intervals intersect iff neither lies strictly past the other.
    pub fn intersects(self, other: Interval) -> bool {
        self.begin <= other.end && other.begin <= self.end
    }

    /// Intersection as an interval, or `None` when the closed sets are disjoint.
    pub fn intersection(self, other: Interval) -> Option<Interval> {
        let begin = self.begin.max(other.begin);
        let end = self.end.min(other.end);
        (begin <= end).then(|| Interval::raw(begin, end))
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.begin, self.end)
    }
}
