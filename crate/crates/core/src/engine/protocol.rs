//! Newline-delimited JSON request/response protocol.
//!
//! Each input line is one request `{"op": .., "params": {..}, "id": ..}` and
//! produces exactly one output line `{"id": .., "ok": true, "result": ..}` or
//! `{"id": .., "ok": false, "error": {"code": .., "message": ..}}`. The `id` is
//! echoed verbatim; it is `null` when a line could not be parsed at all.
//!
//! Ops and their params:
//!
//! | op             | params                                      |
//! |----------------|---------------------------------------------|
//! | `canonicalize` | `{"config": C}`                             |
//! | `equivalent`   | `{"a": C, "b": C}`                          |
//! | `group`        | `{"preset": "r10"}` or `{"matroid": M}`     |
//! | `bases`        | `{"preset": "r10"}` or `{"matroid": M}`     |
//! | `puzzle`       | `{"seed": u64, "difficulty": n}`            |
//! | `apply`        | `{"config": C, "move": {"node": k, "kind": "A"}}` |
//! | `moves`        | none                                        |
//! | `selftest`     | none                                        |
//!
//! `C` is `[[re, im] × 5]`, `M` is `{"r", "n", "D"}`. Certificates map from the
//! first configuration to the second (input to canonical for `canonicalize`).

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::matroid::RegularMatroid;
use crate::r10::{r10_matroid, FiringMove};

use super::commands::{
    cmd_apply, cmd_bases, cmd_canonicalize, cmd_equivalent, cmd_group, move_table, parse_config, parse_json,
    parse_matroid,
};
use super::selftest::run_selftest;
use super::{cmd_puzzle, EngineError};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EngineRequest {
    pub op: String,
    #[serde(default)]
    pub params: Value,
    #[serde(default)]
    pub id: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

impl From<&EngineError> for ErrorBody {
    fn from(e: &EngineError) -> Self {
        ErrorBody { code: e.code().to_string(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EngineResponse {
    pub id: Value,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

impl EngineResponse {
    pub fn success(id: Value, result: Value) -> Self {
        EngineResponse { id, ok: true, result: Some(result), error: None }
    }

    pub fn failure(id: Value, err: &EngineError) -> Self {
        EngineResponse { id, ok: false, result: None, error: Some(err.into()) }
    }
}

fn field<'a>(params: &'a Value, name: &str) -> Result<&'a Value, EngineError> {
    params.get(name).ok_or_else(|| EngineError::Validation(format!("missing parameter `{name}`")))
}

fn matroid_param(params: &Value) -> Result<RegularMatroid, EngineError> {
    match (params.get("preset"), params.get("matroid")) {
        (Some(p), None) => match p.as_str() {
            Some("r10") => Ok(r10_matroid()),
            _ => Err(EngineError::Validation(format!("unknown preset {p}"))),
        },
        (None, Some(m)) => parse_matroid(m),
        _ => Err(EngineError::Validation("give exactly one of `preset` or `matroid`".into())),
    }
}

fn to_value<T: Serialize>(v: T) -> Result<Value, EngineError> {
    serde_json::to_value(v).map_err(|e| EngineError::Internal(e.to_string()))
}

/// Runs one operation.
pub fn dispatch(op: &str, params: &Value) -> Result<Value, EngineError> {
    match op {
        "canonicalize" => to_value(cmd_canonicalize(&parse_config(field(params, "config")?)?)?),
        "equivalent" => {
            let a = parse_config(field(params, "a")?)?;
            let b = parse_config(field(params, "b")?)?;
            to_value(cmd_equivalent(&a, &b)?)
        }
        "group" => to_value(cmd_group(&matroid_param(params)?)?),
        "bases" => to_value(cmd_bases(&matroid_param(params)?)?),
        "puzzle" => {
            let seed = field(params, "seed")?
                .as_u64()
                .ok_or_else(|| EngineError::Validation("`seed` must be an unsigned 64-bit integer".into()))?;
            let difficulty = field(params, "difficulty")?.as_u64().ok_or_else(|| {
                EngineError::Validation("`difficulty` must be a nonnegative integer".into())
            })?;
            let difficulty = usize::try_from(difficulty)
                .map_err(|_| EngineError::Validation("`difficulty` is too large".into()))?;
            to_value(cmd_puzzle(seed, difficulty)?)
        }
        "apply" => {
            let config = parse_config(field(params, "config")?)?;
            let m: FiringMove = serde_json::from_value(field(params, "move")?.clone())
                .map_err(|e| EngineError::Validation(format!("move: {e}")))?;
            let m = FiringMove::new(m.node, m.kind)?;
            to_value(cmd_apply(&config, m)?)
        }
        "moves" => to_value(move_table()),
        "selftest" => {
            let report = run_selftest();
            Ok(json!({ "passed": report.passed(), "checks": report.checks }))
        }
        other => Err(EngineError::UnknownOp(other.to_string())),
    }
}

pub fn handle_request(req: &EngineRequest) -> EngineResponse {
    match dispatch(&req.op, &req.params) {
        Ok(v) => EngineResponse::success(req.id.clone(), v),
        Err(e) => EngineResponse::failure(req.id.clone(), &e),
    }
}

/// Handles one protocol line. Never fails: every problem becomes an error
/// response.
pub fn handle_line(line: &str) -> EngineResponse {
    let value = match parse_json(line) {
        Ok(v) => v,
        Err(e) => return EngineResponse::failure(Value::Null, &e),
    };
    let id = value.get("id").cloned().unwrap_or(Value::Null);
    match serde_json::from_value::<EngineRequest>(value) {
        Ok(req) => handle_request(&req),
        Err(e) => EngineResponse::failure(id, &EngineError::Validation(format!("request: {e}"))),
    }
}

/// Reads requests line by line until EOF, answering each in order. Blank
/// lines are skipped.
pub fn serve<R: BufRead, W: Write>(input: R, mut output: W) -> io::Result<()> {
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let resp = handle_line(&line);
        serde_json::to_writer(&mut output, &resp)?;
        output.write_all(b"\n")?;
        output.flush()?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_zero() {
        let r = handle_line(
            r#"{"op":"canonicalize","params":{"config":[[0,0],[0,0],[0,0],[0,0],[0,0]]},"id":"1"}"#,
        );
        assert_eq!(r.id, json!("1"));
        assert!(r.ok);
        assert_eq!(
            r.result.unwrap(),
            json!({"canonical":[0,0,0,0,0],"certificate":[[0,0],[0,0],[0,0],[0,0],[0,0]]})
        );
    }

    #[test]
    fn unknown_op() {
        let r = handle_line(r#"{"op":"frobnicate","id":7}"#);
        assert!(!r.ok);
        assert_eq!(r.id, json!(7));
        assert_eq!(r.error.unwrap().code, "unknown_op");
    }

    #[test]
    fn malformed_line() {
        let r = handle_line("{not json");
        assert!(!r.ok);
        assert_eq!(r.id, Value::Null);
        assert_eq!(r.error.unwrap().code, "parse");
    }

    #[test]
    fn missing_op_keeps_id() {
        let r = handle_line(r#"{"id":"x","params":{}}"#);
        assert_eq!(r.id, json!("x"));
        assert_eq!(r.error.unwrap().code, "validation");
    }

    #[test]
    fn group_preset_and_matrix() {
        let r = dispatch("group", &json!({"preset":"r10"})).unwrap();
        assert_eq!(r, json!({"invariant_factors":[3,3,3,6],"order":162}));
        let r = dispatch("group", &json!({"matroid":{"r":1,"n":2,"D":[[1]]}})).unwrap();
        assert_eq!(r, json!({"invariant_factors":[2],"order":2}));
        let e = dispatch("group", &json!({})).unwrap_err();
        assert_eq!(e.code(), "validation");
    }

    #[test]
    fn apply_move() {
        let r = dispatch(
            "apply",
            &json!({"config":[[0,0],[0,0],[0,0],[0,0],[0,0]],"move":{"node":2,"kind":"A"}}),
        )
        .unwrap();
        assert_eq!(r, json!([[0, 0], [0, -1], [1, 1], [0, -1], [0, 0]]));
        let e = dispatch(
            "apply",
            &json!({"config":[[0,0],[0,0],[0,0],[0,0],[0,0]],"move":{"node":9,"kind":"A"}}),
        )
        .unwrap_err();
        assert_eq!(e.code(), "validation");
    }

    #[test]
    fn serve_survives_errors() {
        let input = concat!(
            "{\"op\":\"nope\",\"id\":1}\n",
            "garbage\n",
            "\n",
            "{\"op\":\"puzzle\",\"params\":{\"seed\":3,\"difficulty\":0},\"id\":2}\n",
            "{\"op\":\"equivalent\",\"params\":{\"a\":[[0,0],[0,0],[0,0],[0,0],[0,0]],\"b\":[[3,0],[0,0],[0,0],[0,0],[0,0]]},\"id\":3}\n",
        );
        let mut out = Vec::new();
        serve(input.as_bytes(), &mut out).unwrap();
        let lines: Vec<EngineResponse> =
            String::from_utf8(out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0].error.as_ref().unwrap().code, "unknown_op");
        assert_eq!(lines[1].error.as_ref().unwrap().code, "parse");
        assert_eq!(lines[2].error.as_ref().unwrap().code, "validation");
        assert_eq!(lines[3].result, Some(json!({"equivalent": false})));
    }
}
