//! Exact chip-firing on regular matroids, with a specialized engine for the
//! matroid R10 and its Gaussian-integer pentagon representation.
//!
//! All arithmetic is on `i128` with overflow checks; nothing is floating point.

pub mod engine;
pub mod linalg;
pub mod matroid;
pub mod r10;
pub mod sandpile;
