//! Canonical fragment emission (the lic2rdfa direction).
//!
//! The output grammar is fixed and byte-exact: three LF-terminated
//! lines, double-quoted attributes in a fixed order, XML-escaped text.
//! Golden tests pin one fragment per designation, so any change here is
//! a format break by definition.

use crate::document::LicenseDocument;
use crate::uri::{canonical_uri, label};

pub(crate) const XMLNS_PREAMBLE: &str =
    "<div xmlns:cc=\"http://creativecommons.org/ns#\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\"";

/// Escapes `&`, `<`, `>`, and `"` for use in text content and
/// double-quoted attribute values.
pub fn escape_xml(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            other => out.push(other),
        }
    }
    out
}

/// Renders the canonical three-line ccREL fragment for a document.
///
/// The license URI is always the canonical one for the designation,
/// regardless of what `license_uri` holds, so re-emitting a parsed
/// document normalizes version and scheme. Attribution markup is only
/// emitted for CC-license designations.
pub fn emit_ccrel(doc: &LicenseDocument) -> String {
    let mut out = String::new();

    out.push_str(XMLNS_PREAMBLE);
    if let Some(work_uri) = &doc.work_uri {
        out.push_str(" about=\"");
        out.push_str(&escape_xml(work_uri));
        out.push('"');
    }
    out.push_str(">\n");

    match &doc.title {
        Some(title) => {
            out.push_str("<span property=\"dc:title\">");
            out.push_str(&escape_xml(title));
            out.push_str("</span>");
        }
        None => out.push_str("This work"),
    }
    if doc.designation.is_cc_license() {
        match (&doc.attribution_name, &doc.attribution_url) {
            (Some(name), Some(url)) => {
                out.push_str(" by <a rel=\"cc:attributionURL\" property=\"cc:attributionName\" href=\"");
                out.push_str(&escape_xml(url));
                out.push_str("\">");
                out.push_str(&escape_xml(name));
                out.push_str("</a>");
            }
            (Some(name), None) => {
                out.push_str(" by <span property=\"cc:attributionName\">");
                out.push_str(&escape_xml(name));
                out.push_str("</span>");
            }
            (None, Some(url)) => {
                out.push_str(" by <a rel=\"cc:attributionURL\" href=\"");
                out.push_str(&escape_xml(url));
                out.push_str("\">");
                out.push_str(&escape_xml(url));
                out.push_str("</a>");
            }
            (None, None) => {}
        }
    }
    out.push_str(" is licensed under <a rel=\"license\" href=\"");
    out.push_str(&escape_xml(canonical_uri(doc.designation)));
    out.push_str("\">");
    out.push_str(&escape_xml(label(doc.designation)));
    out.push_str("</a>.\n");

    out.push_str("</div>\n");
    out
}

/// The fragment the license service returns when a combination has no
/// compatible designation.
pub fn emit_incompatible_fragment() -> String {
    format!("{XMLNS_PREAMBLE}>\nThis combination is incompatible (X).\n</div>\n")
}
