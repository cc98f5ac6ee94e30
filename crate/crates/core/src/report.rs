use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::sink::{CountSummary, SizeHistogram};

/// Outcome of one enumeration run: clique statistics and the
/// ranking / enumeration / total timing split.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub algorithm: String,
    pub ordering: Option<String>,
    pub threads: usize,
    pub n: usize,
    pub m: usize,
    pub clique_count: u64,
    pub max_clique_size: usize,
    pub avg_clique_size: f64,
    /// Empty unless the run collected a histogram.
    pub size_histogram: BTreeMap<usize, u64>,
    pub rt_seconds: f64,
    pub et_seconds: f64,
    pub tt_seconds: f64,
}

impl EnumerationReport {
    /// Fills the clique statistics from a count summary.
    pub fn set_counts(&mut self, summary: CountSummary) {
        self.clique_count = summary.count;
        self.max_clique_size = summary.max_size;
        self.avg_clique_size = if summary.count == 0 {
            0.0
        } else {
            summary.size_sum as f64 / summary.count as f64
        };
    }

    /// Fills the clique statistics from a full histogram.
    pub fn set_histogram(&mut self, histogram: SizeHistogram) {
        let summary = CountSummary {
            count: histogram.values().sum(),
            size_sum: histogram.iter().map(|(&s, &c)| s as u64 * c).sum(),
            max_size: histogram.keys().next_back().copied().unwrap_or(0),
        };
        self.set_counts(summary);
        self.size_histogram = histogram;
    }

    /// `|TT - (RT + ET)| <= max(1% of TT, 10 ms)`.
    pub fn timing_consistent(&self) -> bool {
        let gap = (self.tt_seconds - (self.rt_seconds + self.et_seconds)).abs();
        gap <= (0.01 * self.tt_seconds).max(0.010)
    }

    /// Flat `key=value` lines.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{k}={v}");
        };
        kv("algorithm", &self.algorithm);
        kv("ordering", &self.ordering.as_deref().unwrap_or("-"));
        kv("threads", &self.threads);
        kv("n", &self.n);
        kv("m", &self.m);
        kv("clique_count", &self.clique_count);
        kv("max_clique_size", &self.max_clique_size);
        kv(
            "avg_clique_size",
            &format_args!("{:.4}", self.avg_clique_size),
        );
        for (size, count) in &self.size_histogram {
            kv(&format!("size_{size}"), count);
        }
        kv("rt_seconds", &format_args!("{:.6}", self.rt_seconds));
        kv("et_seconds", &format_args!("{:.6}", self.et_seconds));
        kv("tt_seconds", &format_args!("{:.6}", self.tt_seconds));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
