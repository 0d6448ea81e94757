//! Command handlers and the JSON-lines protocol used by the CLI and by UI
//! clients.

mod commands;
pub mod protocol;
mod puzzle;
pub mod selftest;

pub use commands::{
    cmd_apply, cmd_bases, cmd_canonicalize, cmd_equivalent, cmd_group, move_table, parse_config,
    parse_config_str, parse_json, parse_matroid, parse_matroid_str, validate_config, BasesOutput,
    CanonicalizeOutput, EquivalentOutput, GroupOutput, MoveTableEntry, MAX_ENTRY,
};
pub use puzzle::{cmd_puzzle, Puzzle, MAX_DIFFICULTY, PUZZLE_RNG};

use crate::linalg::LinalgError;
use crate::matroid::{MatroidError, MinorViolation};
use crate::r10::R10Error;
use crate::sandpile::SandpileError;

/// Errors surfaced to CLI users and protocol clients. Each maps to a stable
/// protocol code and a process exit code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("unknown op `{0}`")]
    UnknownOp(String),
    #[error("not totally unimodular: {0}")]
    NotTotallyUnimodular(MinorViolation),
    #[error("{0}")]
    Math(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl EngineError {
    pub fn code(&self) -> &'static str {
        match self {
            EngineError::Parse(_) => "parse",
            EngineError::Validation(_) => "validation",
            EngineError::UnknownOp(_) => "unknown_op",
            EngineError::NotTotallyUnimodular(_) => "not_totally_unimodular",
            EngineError::Math(_) => "math",
            EngineError::Overflow(_) => "overflow",
            EngineError::Internal(_) => "internal",
        }
    }

    /// 1 for bad input, 2 for mathematical failures, 3 for internal faults.
    pub fn exit_code(&self) -> i32 {
        match self {
            EngineError::Parse(_) | EngineError::Validation(_) | EngineError::UnknownOp(_) => 1,
            EngineError::NotTotallyUnimodular(_) | EngineError::Math(_) => 2,
            EngineError::Overflow(_) | EngineError::Internal(_) => 3,
        }
    }
}

impl From<LinalgError> for EngineError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Overflow(_) => EngineError::Overflow(e.to_string()),
            LinalgError::Dimension(msg) => EngineError::Validation(msg),
            LinalgError::Singular => EngineError::Math(e.to_string()),
            LinalgError::Internal(msg) => EngineError::Internal(msg),
        }
    }
}

impl From<MatroidError> for EngineError {
    fn from(e: MatroidError) -> Self {
        match e {
            MatroidError::NotTotallyUnimodular(v) => EngineError::NotTotallyUnimodular(v),
            MatroidError::InvalidShape(_) | MatroidError::UnsupportedSize { .. } => {
                EngineError::Validation(e.to_string())
            }
            MatroidError::Linalg(e) => e.into(),
        }
    }
}

impl From<SandpileError> for EngineError {
    fn from(e: SandpileError) -> Self {
        match e {
            SandpileError::Length { .. } => EngineError::Validation(e.to_string()),
            SandpileError::Inconsistent(msg) => EngineError::Internal(msg),
            SandpileError::Linalg(e) => e.into(),
        }
    }
}

impl From<R10Error> for EngineError {
    fn from(e: R10Error) -> Self {
        match e {
            R10Error::InvalidNode(_) => EngineError::Validation(e.to_string()),
            R10Error::Overflow(_) => EngineError::Overflow(e.to_string()),
            R10Error::CertificateMismatch => EngineError::Internal(e.to_string()),
        }
    }
}
