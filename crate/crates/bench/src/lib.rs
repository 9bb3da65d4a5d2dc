//! Criterion benchmarks for the counting routes; see `benches/counting.rs`.
