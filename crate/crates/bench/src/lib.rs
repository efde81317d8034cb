//! Criterion benchmarks for the `qstirling` engine. See `benches/engine.rs`.
