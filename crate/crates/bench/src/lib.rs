//! Criterion benchmarks for the algebra and geometry kernels; see `benches/`.
