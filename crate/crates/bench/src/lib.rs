//! Benchmarks for pathcat live under benches/.
