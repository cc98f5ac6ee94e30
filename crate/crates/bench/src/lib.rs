//! Benchmark fixtures shared by the criterion targets.

use mce_core::testlab::GeneratorSpec;
use mce_core::Graph;

/// Named synthetic inputs, small enough for repeated criterion sampling.
pub const FIXTURES: &[&str] = &["moonmoser:8", "gnp:400,0.1,42", "gnp:120,0.4,7"];

pub fn fixture(spec: &str) -> Graph {
    spec.parse::<GeneratorSpec>()
        .expect("fixture spec parses")
        .build()
}
