//! ccREL license metadata codec.
//!
//! Licenses travel with datasets as small XHTML+RDFa fragments. This
//! crate converts between those fragments and structured
//! [`LicenseDocument`] values in both directions:
//!
//! - [`emit_ccrel`] renders a document as the canonical three-line
//!   fragment, byte-exact and deterministic;
//! - [`parse_ccrel`] extracts a document from a fragment, tolerating
//!   the messier markup users paste from the license chooser.
//!
//! Round-tripping `parse_ccrel(emit_ccrel(doc))` preserves the
//! designation and every present optional field.

mod document;
mod emit;
mod error;
mod parse;
mod uri;

pub use document::LicenseDocument;
pub use emit::{emit_ccrel, emit_incompatible_fragment, escape_xml};
pub use error::CcrelError;
pub use parse::{parse_ccrel, parse_ccrel_bytes, unescape_xml};
pub use uri::{canonical_uri, designation_from_uri, label};
