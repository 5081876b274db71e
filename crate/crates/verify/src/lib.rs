//! Test-only package. The checks live in `tests/acceptance.rs`.
