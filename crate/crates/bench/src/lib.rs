//! Criterion benchmarks for `ladder-core`; see `benches/`.
