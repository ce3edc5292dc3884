//! Stateless HTTP API over the diagram catalog and the press engine.
//!
//! | method | path          | body / query                                  |
//! |--------|---------------|-----------------------------------------------|
//! | GET    | `/families`   |                                               |
//! | GET    | `/diagram`    | `family`, `m`, `n`, `alpha`, `parity`         |
//! | POST   | `/press`      | diagram source, `circling`, `vertex`          |
//! | POST   | `/reduce`     | diagram source, `circling`                    |
//! | POST   | `/related`    | diagram source, `c1`, `c2`                    |
//! | POST   | `/equivalent` | diagram source, `c1`, `c2`                    |
//! | POST   | `/classify`   | diagram source                                |
//! | POST   | `/admissible` | diagram source, `circling`                    |
//! | POST   | `/symmetries` | diagram source                                |
//!
//! A diagram source is either `{"family": "D", "params": {"m": 5, "n": 3}}`
//! or `{"diagram": <canonical diagram JSON>}`, optionally with a `"parity"`
//! override. Failures answer with `{"code": ..., "message": ...}`.

use std::future::Future;

use axum::body::Bytes;
use axum::extract::{Query, State};
use axum::http::{header, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;
use tokio::net::TcpListener;
use tower_http::cors::{Any, CorsLayer};

use vogan_core::catalog::build_preferred_diagram;
use vogan_core::engine::{orbit_cap_from_env, Circling};
use vogan_core::payload::{self, ApiError, DiagramSource};
use vogan_core::{list_families, Error, Family, FamilySpec, NodeId, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest number of circlings `/classify` may enumerate.
    pub orbit_cap: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config { orbit_cap: orbit_cap_from_env() }
    }
}

/// An error on its way to the client.
#[derive(Debug)]
pub struct Failure(Error);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(err)
    }
}

pub fn status_for(err: &Error) -> StatusCode {
    match err {
        Error::NotPressable { .. } | Error::NotAdmissible(_) => StatusCode::UNPROCESSABLE_ENTITY,
        Error::CapExceeded { .. } => StatusCode::PAYLOAD_TOO_LARGE,
        _ => StatusCode::BAD_REQUEST,
    }
}

impl IntoResponse for Failure {
    fn into_response(self) -> Response {
        (status_for(&self.0), Json(ApiError::from(&self.0))).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, Failure>;

fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, Failure> {
    serde_json::from_slice(body).map_err(|e| Failure(Error::from(e)))
}

/// Runs engine work off the async workers.
async fn compute<T, F>(work: F) -> ApiResult<T>
where
    T: Send + 'static,
    F: FnOnce() -> Result<T, Error> + Send + 'static,
{
    match tokio::task::spawn_blocking(work).await {
        Ok(result) => result.map(Json).map_err(Failure),
        Err(join) => Err(Failure(Error::InvalidParams(format!("computation aborted: {join}")))),
    }
}

#[derive(Debug, Deserialize)]
struct PressRequest {
    #[serde(flatten)]
    source: DiagramSource,
    circling: Circling,
    vertex: NodeId,
}

#[derive(Debug, Deserialize)]
struct CirclingRequest {
    #[serde(flatten)]
    source: DiagramSource,
    circling: Circling,
}

#[derive(Debug, Deserialize)]
struct PairRequest {
    #[serde(flatten)]
    source: DiagramSource,
    c1: Circling,
    c2: Circling,
}

#[derive(Debug, Deserialize)]
struct SourceRequest {
    #[serde(flatten)]
    source: DiagramSource,
}

#[derive(Debug, Default, Deserialize)]
struct DiagramQuery {
    family: Option<String>,
    m: Option<u32>,
    n: Option<u32>,
    alpha: Option<String>,
    parity: Option<String>,
}

async fn families() -> Json<Value> {
    Json(serde_json::to_value(list_families()).expect("family list serializes"))
}

/// Answers with the canonical, byte-stable diagram document.
async fn diagram(query: Result<Query<DiagramQuery>, axum::extract::rejection::QueryRejection>) -> Result<Response, Failure> {
    let Query(q) = query.map_err(|e| Failure(Error::InvalidParams(e.body_text())))?;
    let family: Family = q
        .family
        .as_deref()
        .ok_or_else(|| Error::InvalidParams("missing query parameter family".into()))?
        .parse()?;
    let alpha = q.alpha.as_deref().map(vogan_core::family::parse_rational).transpose()?;
    let spec = FamilySpec::from_parts(family, q.m, q.n, alpha)?;
    let mut d = build_preferred_diagram(&spec)?;
    if let Some(p) = q.parity {
        d = d.with_parity_rule(p.parse::<Parity>()?);
    }
    Ok(([(header::CONTENT_TYPE, "application/json")], d.to_json()).into_response())
}

async fn press(body: Bytes) -> ApiResult<payload::PressPayload> {
    let req: PressRequest = parse(&body)?;
    compute(move || payload::press(&req.source.resolve()?, &req.circling, req.vertex)).await
}

async fn reduce(body: Bytes) -> ApiResult<payload::ReducePayload> {
    let req: CirclingRequest = parse(&body)?;
    compute(move || payload::reduce(&req.source.resolve()?, &req.circling)).await
}

async fn admissible(body: Bytes) -> ApiResult<payload::AdmissiblePayload> {
    let req: CirclingRequest = parse(&body)?;
    compute(move || payload::admissible(&req.source.resolve()?, &req.circling)).await
}

async fn related(body: Bytes) -> ApiResult<payload::RelatedPayload> {
    let req: PairRequest = parse(&body)?;
    compute(move || payload::related(&req.source.resolve()?, &req.c1, &req.c2)).await
}

async fn equivalent(body: Bytes) -> ApiResult<payload::EquivalentPayload> {
    let req: PairRequest = parse(&body)?;
    compute(move || payload::equivalent(&req.source.resolve()?, &req.c1, &req.c2)).await
}

async fn classify(State(config): State<Config>, body: Bytes) -> ApiResult<payload::ClassifyPayload> {
    let req: SourceRequest = parse(&body)?;
    compute(move || payload::classify(&req.source.resolve()?, config.orbit_cap)).await
}

async fn symmetries(body: Bytes) -> ApiResult<payload::SymmetriesPayload> {
    let req: SourceRequest = parse(&body)?;
    compute(move || Ok(payload::symmetries(&req.source.resolve()?))).await
}

async fn not_found() -> Response {
    let body = ApiError { code: "not_found".into(), message: "no such endpoint".into() };
    (StatusCode::NOT_FOUND, Json(body)).into_response()
}

pub fn router(config: Config) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST, Method::OPTIONS])
        .allow_headers(Any);
    Router::new()
        .route("/families", get(families))
        .route("/diagram", get(diagram))
        .route("/press", post(press))
        .route("/reduce", post(reduce))
        .route("/related", post(related))
        .route("/equivalent", post(equivalent))
        .route("/classify", post(classify))
        .route("/admissible", post(admissible))
        .route("/symmetries", post(symmetries))
        .fallback(not_found)
        .layer(cors)
        .with_state(config)
}

/// Serves until `shutdown` resolves.
pub async fn serve(
    listener: TcpListener,
    config: Config,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, router(config)).with_graceful_shutdown(shutdown).await
}
