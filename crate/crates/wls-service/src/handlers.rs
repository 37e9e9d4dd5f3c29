//! Request handling: extractor → calculator → lic2rdfa.
//!
//! Every GetLicense request re-reads the layer sidecars, runs the
//! combination fold in request order, and renders the outcome. An
//! incompatible combination is a *successful* answer (HTTP 200 with
//! `"compatible": false` / the bare `X`), distinct from transport and
//! configuration errors.

use serde_json::{json, Value};
use thiserror::Error;
use wls_algebra::{combine_all, CombinationOutcome, LicenseDesignation};
use wls_ccrel::{canonical_uri, emit_ccrel, emit_incompatible_fragment, LicenseDocument};
use wls_sidecar::{find_entry, load_catalog, read_license, CatalogError, DatasetRef, SidecarError};

use crate::config::{LayerEntry, LayerSource, WlsConfig};
use crate::query::{parse_query, QueryError, RequestKind, ResponseFormat, WlsRequest};

/// Protocol version reported by GetCapabilities.
pub const PROTOCOL_VERSION: &str = "1.0.0";

/// A transport-agnostic response.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HttpResponse {
    pub status: u16,
    pub content_type: &'static str,
    pub body: Vec<u8>,
}

impl HttpResponse {
    fn json(status: u16, value: &Value) -> Self {
        HttpResponse {
            status,
            content_type: "application/json",
            body: serde_json::to_vec(value).expect("JSON value serializes"),
        }
    }
}

/// Why a configured layer failed to produce a license document.
#[derive(Debug, Error)]
enum LayerFault {
    #[error(transparent)]
    Sidecar(#[from] SidecarError),

    #[error(transparent)]
    Catalog(#[from] CatalogError),

    #[error("{path}: no catalog entry for dataset id {dataset_id:?}")]
    MissingCatalogId {
        path: std::path::PathBuf,
        dataset_id: String,
    },
}

/// Reads the layer's current license. A missing sidecar is No License,
/// not a fault; broken fragments and catalog problems are faults.
fn resolve_layer(entry: &LayerEntry) -> Result<LicenseDocument, LayerFault> {
    let dataset = match &entry.source {
        LayerSource::Shapefile(base) => DatasetRef::shapefile(base),
        LayerSource::Lic(path) => DatasetRef::lic_file(path),
        LayerSource::Catalog { path, dataset_id } => {
            let entries = load_catalog(path)?;
            let entry = find_entry(&entries, dataset_id).ok_or_else(|| {
                LayerFault::MissingCatalogId {
                    path: path.clone(),
                    dataset_id: dataset_id.clone(),
                }
            })?;
            DatasetRef::lic_file(&entry.lic_path)
        }
    };
    Ok(read_license(&dataset)?)
}

/// Full dispatch for one HTTP exchange: method and path gates, query
/// parsing, then the operation handlers.
pub fn handle_request(config: &WlsConfig, method: &str, path: &str, query: &str) -> HttpResponse {
    if method != "GET" {
        return HttpResponse::json(405, &json!({ "error": "MethodNotAllowed" }));
    }
    if path != "/wls" {
        return HttpResponse::json(404, &json!({ "error": "NotFound" }));
    }
    match parse_query(query) {
        Err(e) => query_error_response(&e),
        Ok(req) => match req.kind {
            RequestKind::GetCapabilities => handle_get_capabilities(config),
            RequestKind::GetLicense => handle_get_license(config, &req),
        },
    }
}

fn query_error_response(error: &QueryError) -> HttpResponse {
    let mut body = json!({ "error": error.code(), "detail": error.to_string() });
    match error {
        QueryError::MissingParameter(name) => {
            body["parameter"] = json!(name);
        }
        QueryError::InvalidParameterValue { name, value } => {
            body["parameter"] = json!(name);
            body["value"] = json!(value);
        }
        _ => {}
    }
    HttpResponse::json(400, &body)
}

/// Service metadata plus the live designation of every layer.
pub fn handle_get_capabilities(config: &WlsConfig) -> HttpResponse {
    let layers: Vec<Value> = config
        .layers
        .iter()
        .map(|entry| match resolve_layer(entry) {
            Ok(doc) => json!({
                "name": entry.name,
                "designation": doc.designation.code(),
                "licenseUri": canonical_uri(doc.designation),
            }),
            Err(fault) => json!({
                "name": entry.name,
                "error": fault.to_string(),
            }),
        })
        .collect();

    HttpResponse::json(
        200,
        &json!({
            "service": "WLS",
            "version": PROTOCOL_VERSION,
            "title": config.title,
            "engines": ["matrix", "or"],
            "modes": ["raw", "symmetrized"],
            "formats": [
                ResponseFormat::Xhtml.mime(),
                ResponseFormat::Json.mime(),
                ResponseFormat::Text.mime(),
            ],
            "layers": layers,
        }),
    )
}

/// The composite license of the requested layers, in request order.
pub fn handle_get_license(config: &WlsConfig, req: &WlsRequest) -> HttpResponse {
    let mut resolved: Vec<(&str, LicenseDesignation)> = Vec::with_capacity(req.layers.len());
    for name in &req.layers {
        let Some(entry) = config.layers.iter().find(|l| &l.name == name) else {
            return HttpResponse::json(404, &json!({ "error": "UnknownLayer", "layer": name }));
        };
        match resolve_layer(entry) {
            Ok(doc) => resolved.push((name, doc.designation)),
            Err(fault) => {
                return HttpResponse::json(
                    500,
                    &json!({
                        "error": "BadLicenseDocument",
                        "layer": name,
                        "detail": fault.to_string(),
                    }),
                );
            }
        }
    }

    let designations: Vec<LicenseDesignation> = resolved.iter().map(|(_, d)| *d).collect();
    let outcome = combine_all(&designations, req.engine, req.mode);

    match req.format {
        ResponseFormat::Json => {
            let layers: Vec<Value> = resolved
                .iter()
                .map(|(name, d)| json!({ "name": name, "designation": d.code() }))
                .collect();
            let mut body = json!({
                "compatible": outcome.is_compatible(),
                "designation": outcome.code(),
                "layers": layers,
                "engine": req.engine.as_str(),
                "mode": req.mode.as_str(),
            });
            if let CombinationOutcome::Compatible(d) = outcome {
                body["licenseUri"] = json!(canonical_uri(d));
            }
            HttpResponse::json(200, &body)
        }
        ResponseFormat::Text => HttpResponse {
            status: 200,
            content_type: ResponseFormat::Text.content_type(),
            body: outcome.code().as_bytes().to_vec(),
        },
        ResponseFormat::Xhtml => {
            let body = match outcome {
                CombinationOutcome::Compatible(d) => {
                    let doc = LicenseDocument::new(d).with_title(req.layers.join(","));
                    emit_ccrel(&doc)
                }
                CombinationOutcome::Incompatible => emit_incompatible_fragment(),
            };
            HttpResponse {
                status: 200,
                content_type: ResponseFormat::Xhtml.content_type(),
                body: body.into_bytes(),
            }
        }
    }
}
