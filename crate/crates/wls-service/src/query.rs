//! OGC-style key-value-pair query parsing.
//!
//! Parameter names are case-insensitive and unknown parameters are
//! ignored, in keeping with how WMS/WFS endpoints treat their query
//! strings. `%XX` escapes are decoded; `+` is left alone (it is
//! meaningful in `FORMAT=application/xhtml+xml`).

use std::str::FromStr;

use thiserror::Error;
use wls_algebra::{Engine, MatrixMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RequestKind {
    GetCapabilities,
    GetLicense,
}

/// Negotiable response body format for GetLicense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseFormat {
    Xhtml,
    Json,
    Text,
}

impl ResponseFormat {
    /// The FORMAT parameter value selecting this format.
    pub fn mime(self) -> &'static str {
        match self {
            ResponseFormat::Xhtml => "application/xhtml+xml",
            ResponseFormat::Json => "application/json",
            ResponseFormat::Text => "text/plain",
        }
    }

    /// The Content-Type header sent with a body of this format.
    pub fn content_type(self) -> &'static str {
        match self {
            ResponseFormat::Xhtml => "application/xhtml+xml",
            ResponseFormat::Json => "application/json",
            ResponseFormat::Text => "text/plain; charset=utf-8",
        }
    }
}

/// A validated WLS request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlsRequest {
    pub kind: RequestKind,
    /// Layer names in request order; empty for GetCapabilities.
    pub layers: Vec<String>,
    pub format: ResponseFormat,
    pub engine: Engine,
    pub mode: MatrixMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("SERVICE parameter missing or not WLS")]
    InvalidService,

    #[error("unknown REQUEST {0:?}")]
    InvalidRequest(String),

    #[error("missing required parameter {0}")]
    MissingParameter(&'static str),

    #[error("invalid value {value:?} for parameter {name}")]
    InvalidParameterValue { name: &'static str, value: String },
}

impl QueryError {
    /// Stable machine-readable code for the JSON error body.
    pub fn code(&self) -> &'static str {
        match self {
            QueryError::InvalidService => "InvalidService",
            QueryError::InvalidRequest(_) => "InvalidRequest",
            QueryError::MissingParameter(_) => "MissingParameter",
            QueryError::InvalidParameterValue { .. } => "InvalidParameterValue",
        }
    }
}

/// Decodes `%XX` escapes; anything malformed stays literal, and `+` is
/// not treated as a space.
pub fn percent_decode(input: &str) -> String {
    fn hex(b: u8) -> Option<u8> {
        (b as char).to_digit(16).map(|v| v as u8)
    }
    let bytes = input.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' && i + 2 < bytes.len() {
            if let (Some(hi), Some(lo)) = (hex(bytes[i + 1]), hex(bytes[i + 2])) {
                out.push(hi * 16 + lo);
                i += 3;
                continue;
            }
        }
        out.push(bytes[i]);
        i += 1;
    }
    String::from_utf8_lossy(&out).into_owned()
}

/// Parses a raw query string into a [`WlsRequest`], applying the
/// defaults `FORMAT=application/xhtml+xml`, `ENGINE=matrix`,
/// `MODE=symmetrized`. When a parameter repeats, the last occurrence
/// wins.
pub fn parse_query(query: &str) -> Result<WlsRequest, QueryError> {
    let params: Vec<(String, String)> = query
        .split('&')
        .filter(|pair| !pair.is_empty())
        .map(|pair| {
            let (key, value) = pair.split_once('=').unwrap_or((pair, ""));
            (percent_decode(key).to_ascii_uppercase(), percent_decode(value))
        })
        .collect();
    let get = |name: &str| {
        params
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    };

    match get("SERVICE") {
        Some(service) if service.eq_ignore_ascii_case("WLS") => {}
        _ => return Err(QueryError::InvalidService),
    }

    let request = get("REQUEST").unwrap_or("");
    let kind = if request.eq_ignore_ascii_case("GetCapabilities") {
        RequestKind::GetCapabilities
    } else if request.eq_ignore_ascii_case("GetLicense") {
        RequestKind::GetLicense
    } else {
        return Err(QueryError::InvalidRequest(request.to_string()));
    };

    let format = match get("FORMAT") {
        None => ResponseFormat::Xhtml,
        Some(v) if v.eq_ignore_ascii_case("application/xhtml+xml") => ResponseFormat::Xhtml,
        Some(v) if v.eq_ignore_ascii_case("application/json") => ResponseFormat::Json,
        Some(v) if v.eq_ignore_ascii_case("text/plain") => ResponseFormat::Text,
        Some(v) => {
            return Err(QueryError::InvalidParameterValue {
                name: "FORMAT",
                value: v.to_string(),
            })
        }
    };

    let engine = match get("ENGINE") {
        None => Engine::Matrix,
        Some(v) => Engine::from_str(&v.to_ascii_lowercase()).map_err(|_| {
            QueryError::InvalidParameterValue {
                name: "ENGINE",
                value: v.to_string(),
            }
        })?,
    };

    let mode = match get("MODE") {
        None => MatrixMode::Symmetrized,
        Some(v) => MatrixMode::from_str(&v.to_ascii_lowercase()).map_err(|_| {
            QueryError::InvalidParameterValue {
                name: "MODE",
                value: v.to_string(),
            }
        })?,
    };

    let layers = if kind == RequestKind::GetLicense {
        let raw = get("LAYERS").unwrap_or("");
        if raw.is_empty() {
            return Err(QueryError::MissingParameter("LAYERS"));
        }
        let layers: Vec<String> = raw.split(',').map(str::to_string).collect();
        if layers.iter().any(String::is_empty) {
            return Err(QueryError::InvalidParameterValue {
                name: "LAYERS",
                value: raw.to_string(),
            });
        }
        layers
    } else {
        Vec::new()
    };

    Ok(WlsRequest {
        kind,
        layers,
        format,
        engine,
        mode,
    })
}
