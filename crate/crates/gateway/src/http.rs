//! Suggestion service.
//!
//! * `GET /api/suggest?q=<word>&top=<n>&threshold=<t>`
//! * `GET /api/health`
//!
//! All state is loaded once at startup and shared read-only.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::Arc;

use anyhow::{Context, Result};
use axum::extract::{Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use swabhasha::pipeline::{Engine, Options};
use tokio::net::TcpListener;
use tokio::sync::oneshot;
use tokio::task::JoinHandle;

use crate::config::ServiceConfig;
use crate::wire::{last_token, suggest, ErrorResponse, HealthResponse};

struct AppState {
    engine: Engine,
    defaults: Options,
}

fn error(status: StatusCode, message: impl Into<String>) -> Response {
    (status, Json(ErrorResponse { error: message.into() })).into_response()
}

fn parse_param<T: std::str::FromStr>(
    params: &HashMap<String, String>,
    name: &str,
    default: T,
    valid: impl Fn(&T) -> bool,
) -> Result<T, Response> {
    match params.get(name) {
        None => Ok(default),
        Some(raw) => raw
            .parse::<T>()
            .ok()
            .filter(|v| valid(v))
            .ok_or_else(|| error(StatusCode::BAD_REQUEST, format!("invalid {name}: {raw:?}"))),
    }
}

async fn suggest_handler(
    State(state): State<Arc<AppState>>,
    Query(params): Query<HashMap<String, String>>,
) -> Response {
    let q = params.get("q").map(String::as_str).unwrap_or("");
    let Some(word) = last_token(q) else {
        return error(StatusCode::BAD_REQUEST, "query has no word to transliterate");
    };
    let opts = match (
        parse_param(&params, "top", state.defaults.top_k, |&k: &usize| k >= 1),
        parse_param(&params, "threshold", state.defaults.threshold, |&t: &u8| t <= 100),
    ) {
        (Ok(top_k), Ok(threshold)) => Options { top_k, threshold },
        (Err(r), _) | (_, Err(r)) => return r,
    };
    match suggest(&state.engine, word, opts) {
        Ok(body) => Json(body).into_response(),
        Err(e) => error(StatusCode::BAD_REQUEST, e.to_string()),
    }
}

async fn health_handler(State(state): State<Arc<AppState>>) -> Json<HealthResponse> {
    Json(HealthResponse { status: "ok".into(), lexicon_entries: state.engine.lexicon.len() })
}

async fn not_found() -> Response {
    error(StatusCode::NOT_FOUND, "not found")
}

pub fn router(engine: Engine, defaults: Options) -> Router {
    let state = Arc::new(AppState { engine, defaults });
    Router::new()
        .route("/api/suggest", get(suggest_handler))
        .route("/api/health", get(health_handler))
        .fallback(not_found)
        .with_state(state)
}

/// A running service. Dropping the handle leaves the server running until
/// the runtime shuts down; call [`ServiceHandle::shutdown`] to stop it.
pub struct ServiceHandle {
    addr: SocketAddr,
    stop: Option<oneshot::Sender<()>>,
    task: JoinHandle<std::io::Result<()>>,
}

impl ServiceHandle {
    pub fn local_addr(&self) -> SocketAddr {
        self.addr
    }

    pub async fn shutdown(mut self) -> Result<()> {
        if let Some(stop) = self.stop.take() {
            let _ = stop.send(());
        }
        self.task.await.context("server task panicked")??;
        Ok(())
    }

    /// Waits until the server exits on its own.
    pub async fn wait(self) -> Result<()> {
        self.task.await.context("server task panicked")??;
        Ok(())
    }
}

/// Loads the configured files, binds, and starts serving in the background.
pub async fn serve(config: &ServiceConfig) -> Result<ServiceHandle> {
    config.validate()?;
    let engine = config.data.engine()?;
    let defaults = Options { top_k: config.top_k_default, threshold: config.threshold_default };
    let addr = SocketAddr::new(config.bind, config.port);
    let listener = TcpListener::bind(addr).await.with_context(|| format!("cannot bind {addr}"))?;
    let addr = listener.local_addr()?;
    let (stop, stopped) = oneshot::channel::<()>();
    let app = router(engine, defaults);
    let task = tokio::spawn(async move {
        axum::serve(listener, app)
            .with_graceful_shutdown(async {
                let _ = stopped.await;
            })
            .await
    });
    Ok(ServiceHandle { addr, stop: Some(stop), task })
}
