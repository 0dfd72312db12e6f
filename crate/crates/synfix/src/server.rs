//! The `/v1` HTTP service: models load once, requests run the iterative
//! pipeline under a deadline and a global concurrency limit.

use std::future::IntoFuture;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use synfix_core::diagnostics::{self, Compiler};
use synfix_repair::pipeline::LinePredictor;
use synfix_repair::{Budget, Models, RepairError, Repairer, Status};
use tokio::sync::Semaphore;

use crate::diff::{line_diff, DiffLine};

pub const MAX_SOURCE_BYTES: usize = 1 << 20;
pub const DEFAULT_TIMEOUT_MS: u64 = 10_000;
pub const DEFAULT_CONCURRENCY: usize = 4;

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixRequest {
    pub source: String,
    #[serde(default)]
    pub timeout_ms: Option<u64>,
    #[serde(default = "yes")]
    pub want_diff: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixResponse {
    /// `fixed`, `unchanged`, `best_effort` or `error`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<DiffLine>>,
    pub stage: String,
    pub compile_ok: bool,
    pub latency_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

pub struct AppState {
    models: OnceLock<Models>,
    compiler: Box<dyn Compiler>,
    permits: Semaphore,
    loads: AtomicUsize,
    pub budget: Budget,
}

impl AppState {
    pub fn new(compiler: Box<dyn Compiler>, concurrency: usize) -> Arc<Self> {
        Arc::new(AppState {
            models: OnceLock::new(),
            compiler,
            permits: Semaphore::new(concurrency.max(1)),
            loads: AtomicUsize::new(0),
            budget: Budget::default(),
        })
    }

    /// Install loaded models; later calls are ignored.
    pub fn install(&self, models: Models) {
        if self.models.set(models).is_ok() {
            self.loads.fetch_add(1, Ordering::SeqCst);
        }
    }

    pub fn load_dir(&self, dir: &std::path::Path) -> Result<(), RepairError> {
        let m = Models::load(dir)?;
        if m.linefix.is_none() {
            return Err(RepairError::ModelUnavailable("model directory has no linefix checkpoint"));
        }
        self.install(m);
        Ok(())
    }

    pub fn ready(&self) -> bool {
        self.models.get().is_some()
    }

    /// How many times models were installed; stays at one for a server's life.
    pub fn load_count(&self) -> usize {
        self.loads.load(Ordering::SeqCst)
    }

    /// Run the pipeline synchronously.
    pub fn fix(&self, req: &FixRequest, received: Instant) -> FixResponse {
        let elapsed = |t: Instant| t.elapsed().as_millis() as u64;
        let Some(models) = self.models.get() else {
            return error_response("models are not loaded", elapsed(received));
        };
        let timeout = Duration::from_millis(req.timeout_ms.unwrap_or(DEFAULT_TIMEOUT_MS));
        let line = models.line_predictor();
        let unk = models.token_recoverer();
        let repairer = Repairer {
            compiler: self.compiler.as_ref(),
            line: line.as_ref().map(|l| l as &dyn LinePredictor),
            unk: &unk,
            budget: self.budget,
            deadline: Some(received + timeout),
        };
        let out = repairer.repair_iterative(&req.source);
        if out.timed_out {
            return error_response("timeout", elapsed(received));
        }
        let status = match out.status {
            Status::Fixed => "fixed",
            Status::Unchanged => "unchanged",
            Status::BestEffort => "best_effort",
        };
        FixResponse {
            status: status.into(),
            diff: req.want_diff.then(|| line_diff(&req.source, &out.fixed_source)),
            fixed_source: Some(out.fixed_source),
            stage: out.stage.as_str().into(),
            compile_ok: out.compile_ok,
            latency_ms: elapsed(received),
            message: out.note,
        }
    }
}

fn error_response(message: &str, latency_ms: u64) -> FixResponse {
    FixResponse {
        status: "error".into(),
        fixed_source: None,
        diff: None,
        stage: "none".into(),
        compile_ok: false,
        latency_ms,
        message: Some(message.into()),
    }
}

fn error_body(code: StatusCode, message: impl Into<String>) -> Response {
    (code, Json(json!({ "error": message.into() }))).into_response()
}

async fn health(State(state): State<Arc<AppState>>) -> Response {
    if state.ready() {
        Json(json!({ "status": "ok" })).into_response()
    } else {
        (StatusCode::SERVICE_UNAVAILABLE, Json(json!({ "status": "loading" }))).into_response()
    }
}

async fn fix(State(state): State<Arc<AppState>>, body: Bytes) -> Response {
    let received = Instant::now();
    let req: FixRequest = match serde_json::from_slice(&body) {
        Ok(r) => r,
        Err(e) => return error_body(StatusCode::BAD_REQUEST, format!("invalid request body: {e}")),
    };
    if req.source.len() > MAX_SOURCE_BYTES {
        return error_body(StatusCode::PAYLOAD_TOO_LARGE, "source exceeds 1 MiB");
    }
    if !state.ready() {
        return error_body(StatusCode::SERVICE_UNAVAILABLE, "models are still loading");
    }
    let Ok(_permit) = state.permits.acquire().await else {
        return error_body(StatusCode::SERVICE_UNAVAILABLE, "server is shutting down");
    };
    let st = state.clone();
    match tokio::task::spawn_blocking(move || st.fix(&req, received)).await {
        Ok(resp) => Json(resp).into_response(),
        Err(e) => error_body(StatusCode::INTERNAL_SERVER_ERROR, format!("repair task failed: {e}")),
    }
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/v1/health", get(health))
        .route("/v1/fix", post(fix))
        // JSON escaping can double a source's size; the source itself is checked separately
        .layer(DefaultBodyLimit::max(2 * MAX_SOURCE_BYTES + 4096))
        .with_state(state)
}

#[derive(Debug, Clone)]
pub struct ServeConfig {
    pub model_dir: PathBuf,
    pub concurrency: usize,
}

/// Serve on `listener`, answering 503 until the models in `cfg.model_dir`
/// have loaded. A load failure ends the server with the error.
pub async fn serve(listener: tokio::net::TcpListener, cfg: ServeConfig) -> anyhow::Result<()> {
    let state = AppState::new(diagnostics::default_compiler(), cfg.concurrency);
    let loader = state.clone();
    let dir = cfg.model_dir.clone();
    let load = tokio::task::spawn_blocking(move || loader.load_dir(&dir));
    let server = axum::serve(listener, router(state)).into_future();
    tokio::pin!(server);
    tokio::select! {
        r = &mut server => return Ok(r?),
        loaded = load => {
            loaded?.map_err(|e| anyhow::anyhow!("loading models from {}: {e}", cfg.model_dir.display()))?;
            log::info!("models loaded from {}", cfg.model_dir.display());
        }
    }
    Ok(server.await?)
}
