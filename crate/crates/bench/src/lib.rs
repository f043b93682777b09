//! Criterion benchmarks for `picchi-core`; see `benches/`.
