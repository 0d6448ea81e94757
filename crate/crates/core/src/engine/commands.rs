use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::linalg::{det, Int};
use crate::matroid::{Basis, MatroidJson, RegularMatroid};
use crate::r10::{
    canonicalize, r10_constants, CanonicalRep, Certificate, FiringMove, MoveKind, PentagonConfig,
};
use crate::sandpile::sandpile_group;

use super::EngineError;

/// Largest absolute chip count accepted at the protocol boundary.
pub const MAX_ENTRY: Int = 1_000_000_000;

/// Parses JSON text, reporting the line and column of a syntax error.
pub fn parse_json(text: &str) -> Result<Value, EngineError> {
    serde_json::from_str(text).map_err(|e| {
        EngineError::Parse(format!("{} at line {} column {}", describe(&e), e.line(), e.column()))
    })
}

fn describe(e: &serde_json::Error) -> String {
    let s = e.to_string();
    // serde_json appends " at line L column C"; keep only the message
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

fn from_value<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T, EngineError> {
    serde_json::from_value(v.clone()).map_err(|e| EngineError::Validation(format!("{what}: {e}")))
}

pub fn validate_config(c: &PentagonConfig) -> Result<(), EngineError> {
    for (k, z) in c.0.iter().enumerate() {
        if z.re.abs() > MAX_ENTRY || z.im.abs() > MAX_ENTRY {
            return Err(EngineError::Validation(format!(
                "node {k} holds {z}, entries are limited to ±{MAX_ENTRY}"
            )));
        }
    }
    Ok(())
}

/// A configuration from its JSON value `[[re, im], …]` with exactly five nodes.
pub fn parse_config(v: &Value) -> Result<PentagonConfig, EngineError> {
    let arr = v.as_array().ok_or_else(|| {
        EngineError::Validation("configuration must be an array of 5 [re, im] pairs".into())
    })?;
    if arr.len() != 5 {
        return Err(EngineError::Validation(format!("configuration has {} nodes, expected 5", arr.len())));
    }
    let c: PentagonConfig = from_value(v, "configuration")?;
    validate_config(&c)?;
    Ok(c)
}

pub fn parse_config_str(text: &str) -> Result<PentagonConfig, EngineError> {
    parse_config(&parse_json(text)?)
}

pub fn parse_matroid(v: &Value) -> Result<RegularMatroid, EngineError> {
    let j: MatroidJson = from_value(v, "matroid")?;
    Ok(RegularMatroid::try_from(&j)?)
}

pub fn parse_matroid_str(text: &str) -> Result<RegularMatroid, EngineError> {
    parse_matroid(&parse_json(text)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalizeOutput {
    pub canonical: CanonicalRep,
    /// Firings taking the input to `canonical`.
    pub certificate: Certificate,
}

pub fn cmd_canonicalize(c: &PentagonConfig) -> Result<CanonicalizeOutput, EngineError> {
    let canonical = canonicalize(c);
    let certificate = r10_constants()
        .solve_firings(c, &canonical.to_config())?
        .ok_or_else(|| EngineError::Internal(format!("{c} is not equivalent to its representative")))?;
    Ok(CanonicalizeOutput { canonical, certificate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalentOutput {
    pub equivalent: bool,
    /// Firings taking `a` to `b`, present when equivalent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

pub fn cmd_equivalent(a: &PentagonConfig, b: &PentagonConfig) -> Result<EquivalentOutput, EngineError> {
    let certificate = r10_constants().solve_firings(a, b)?;
    Ok(EquivalentOutput { equivalent: certificate.is_some(), certificate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOutput {
    pub invariant_factors: Vec<Int>,
    pub order: Int,
}

pub fn cmd_group(m: &RegularMatroid) -> Result<GroupOutput, EngineError> {
    let g = sandpile_group(m)?;
    Ok(GroupOutput { invariant_factors: g.invariant_factors, order: g.order })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasesOutput {
    pub count: usize,
    pub det_k: Int,
    pub bases: Vec<Basis>,
}

pub fn cmd_bases(m: &RegularMatroid) -> Result<BasesOutput, EngineError> {
    let bases = m.enumerate_bases()?;
    let det_k = det(&m.combined_k())?;
    Ok(BasesOutput { count: bases.len(), det_k, bases })
}

pub fn cmd_apply(c: &PentagonConfig, m: FiringMove) -> Result<PentagonConfig, EngineError> {
    let next = c.checked_add(&m.delta()).ok_or_else(|| EngineError::Overflow("chip count".into()))?;
    validate_config(&next)?;
    Ok(next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveTableEntry {
    pub node: usize,
    pub kind: MoveKind,
    pub delta: PentagonConfig,
}

/// The 20 single-move deltas, node-major.
pub fn move_table() -> Vec<MoveTableEntry> {
    FiringMove::all().map(|m| MoveTableEntry { node: m.node, kind: m.kind, delta: m.delta() }).collect()
}
