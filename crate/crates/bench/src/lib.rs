//! Benchmark-only crate; see `benches/tables.rs`.
