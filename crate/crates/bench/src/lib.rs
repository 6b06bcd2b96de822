//! Shared inputs for the benchmarks.

use centra_core::{parse_spec, Group};

/// Groups of increasing size used across benchmarks.
pub const SIZES: &[&str] = &["S(4)", "prod(S(3),D(10))", "S(5)", "PSL2(7)", "A(6)", "PSL2(8)"];

pub fn group(spec: &str) -> Group {
    parse_spec(spec).expect("benchmark spec parses").build().expect("benchmark group builds")
}
