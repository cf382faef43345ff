//! Benchmarks for the noncommutative ideal engine live in `benches/`.
