//! Web License Service (WLS).
//!
//! An HTTP sibling of the OGC map services that serves licenses instead
//! of maps: `GET /wls?SERVICE=WLS&REQUEST=GetLicense&LAYERS=...`
//! extracts the license of each configured layer, combines them with
//! the license algebra, and returns the composite as ccREL XHTML, JSON,
//! or a bare designation code. `REQUEST=GetCapabilities` reflects the
//! configuration and each layer's current designation.
//!
//! Layers come from a line-based config file ([`config`]); sidecars are
//! re-read on every request, so license edits are visible immediately.

pub mod config;
pub mod handlers;
pub mod query;
pub mod server;

pub use config::{load_config, parse_config, ConfigError, LayerEntry, LayerSource, ParsedConfig, WlsConfig};
pub use handlers::{
    handle_get_capabilities, handle_get_license, handle_request, HttpResponse, PROTOCOL_VERSION,
};
pub use query::{parse_query, percent_decode, QueryError, RequestKind, ResponseFormat, WlsRequest};
pub use server::{serve, ServeError, ShutdownHandle, WlsServer};
