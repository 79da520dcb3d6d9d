//! Criterion benchmarks for moorops live in `benches/`; this crate has no
//! library code of its own.
