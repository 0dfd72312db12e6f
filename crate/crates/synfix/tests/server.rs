mod common;

use std::time::Instant;

use common::{http, rigged_models, start, MULTIPLICATION};
use serde_json::Value;
use synfix::server::{AppState, FixRequest, FixResponse, MAX_SOURCE_BYTES};
use synfix_core::diagnostics::BuiltinCompiler;

fn ready_state() -> std::sync::Arc<AppState> {
    let s = AppState::new(Box::new(BuiltinCompiler::default()), 4);
    s.install(rigged_models());
    s
}

fn post_fix(addr: std::net::SocketAddr, req: &Value) -> (u16, Value) {
    let (code, body) = http(addr, "POST", "/v1/fix", req.to_string().as_bytes());
    (code, serde_json::from_str(&body).unwrap_or(Value::Null))
}

#[test]
fn health_is_503_until_models_are_installed() {
    let state = AppState::new(Box::new(BuiltinCompiler::default()), 4);
    let addr = start(state.clone());
    let (code, _) = http(addr, "GET", "/v1/health", b"");
    assert_eq!(code, 503);
    let (code, _) = post_fix(addr, &serde_json::json!({ "source": MULTIPLICATION }));
    assert_eq!(code, 503);
    state.install(rigged_models());
    let (code, body) = http(addr, "GET", "/v1/health", b"");
    assert_eq!(code, 200);
    assert_eq!(serde_json::from_str::<Value>(&body).unwrap(), serde_json::json!({ "status": "ok" }));
}

#[test]
fn multiplication_program_is_fixed_on_line_eight() {
    let addr = start(ready_state());
    let (code, v) = post_fix(addr, &serde_json::json!({ "source": MULTIPLICATION }));
    assert_eq!(code, 200);
    let resp: FixResponse = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(resp.status, "fixed");
    assert_eq!(resp.stage, "linefix");
    assert!(resp.compile_ok);
    assert_eq!(resp.fixed_source.as_deref(), Some(MULTIPLICATION.replace("a x b", "a * b").as_str()));
    let diff = resp.diff.unwrap();
    assert_eq!(diff.len(), 1);
    assert_eq!(diff[0].line, 8);
    assert_eq!(diff[0].before.as_deref(), Some("\t\tint res = a x b;"));
    assert_eq!(diff[0].after.as_deref(), Some("\t\tint res = a * b;"));
    // exact wire names
    for key in ["status", "fixed_source", "diff", "stage", "compile_ok", "latency_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn compiling_input_is_unchanged_with_an_empty_diff() {
    let addr = start(ready_state());
    let good = MULTIPLICATION.replace("a x b", "a * b");
    let (code, v) = post_fix(addr, &serde_json::json!({ "source": good }));
    assert_eq!(code, 200);
    assert_eq!(v["status"], "unchanged");
    assert_eq!(v["compile_ok"], true);
    assert_eq!(v["diff"], serde_json::json!([]));
    let (_, v) = post_fix(addr, &serde_json::json!({ "source": good, "want_diff": false }));
    assert!(v.get("diff").is_none());
}

#[test]
fn malformed_and_oversized_requests_are_rejected() {
    let addr = start(ready_state());
    let (code, body) = http(addr, "POST", "/v1/fix", b"{not json");
    assert_eq!(code, 400);
    assert!(body.contains("error"));
    let (code, _) = http(addr, "POST", "/v1/fix", br#"{"timeout_ms": 5}"#);
    assert_eq!(code, 400);
    let big = "x".repeat(MAX_SOURCE_BYTES + 1);
    let (code, _) = post_fix(addr, &serde_json::json!({ "source": big }));
    assert_eq!(code, 413);
}

#[test]
fn a_zero_timeout_reports_an_error() {
    let state = ready_state();
    let resp = state.fix(&FixRequest { source: MULTIPLICATION.into(), timeout_ms: Some(0), want_diff: true }, Instant::now());
    assert_eq!(resp.status, "error");
    assert_eq!(resp.message.as_deref(), Some("timeout"));
    assert!(resp.fixed_source.is_none());
}

#[test]
fn concurrent_requests_share_one_model_load() {
    let state = ready_state();
    let addr = start(state.clone());
    let handles: Vec<_> = (0..8)
        .map(|_| std::thread::spawn(move || post_fix(addr, &serde_json::json!({ "source": MULTIPLICATION }))))
        .collect();
    for h in handles {
        let (code, v) = h.join().unwrap();
        assert_eq!(code, 200);
        assert_eq!(v["status"], "fixed");
    }
    state.install(rigged_models());
    assert_eq!(state.load_count(), 1);
}

#[test]
fn loading_a_directory_without_a_classifier_fails() {
    let dir = tempfile::tempdir().unwrap();
    let mut m = rigged_models();
    m.linefix = None;
    m.save(dir.path()).unwrap();
    let state = AppState::new(Box::new(BuiltinCompiler::default()), 1);
    assert!(state.load_dir(dir.path()).is_err());
    assert!(state.load_dir(&dir.path().join("absent")).is_err());
    assert!(!state.ready());
}
