//! Benchmark-only package; see `benches/main.rs`.
