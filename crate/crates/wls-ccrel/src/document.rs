use wls_algebra::LicenseDesignation;

use crate::uri::canonical_uri;

/// A parsed or constructed ccREL license statement.
///
/// `designation` and `license_uri` stay consistent under the URI
/// mapping: constructed documents carry the canonical URI, parsed
/// documents carry the URI actually seen (which mapped to the
/// designation). Attribution fields are only rendered for CC licenses;
/// see [`emit_ccrel`](crate::emit_ccrel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LicenseDocument {
    pub designation: LicenseDesignation,
    pub license_uri: String,
    pub work_uri: Option<String>,
    pub title: Option<String>,
    pub attribution_name: Option<String>,
    pub attribution_url: Option<String>,
    /// Original fragment text for parsed documents; `None` for
    /// constructed ones.
    pub raw_fragment: Option<String>,
}

impl LicenseDocument {
    /// A bare document for `designation` with the canonical license URI
    /// and no optional fields.
    pub fn new(designation: LicenseDesignation) -> Self {
        LicenseDocument {
            designation,
            license_uri: canonical_uri(designation).to_string(),
            work_uri: None,
            title: None,
            attribution_name: None,
            attribution_url: None,
            raw_fragment: None,
        }
    }

    pub fn with_title(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn with_work_uri(mut self, work_uri: impl Into<String>) -> Self {
        self.work_uri = Some(work_uri.into());
        self
    }

    pub fn with_attribution_name(mut self, name: impl Into<String>) -> Self {
        self.attribution_name = Some(name.into());
        self
    }

    pub fn with_attribution_url(mut self, url: impl Into<String>) -> Self {
        self.attribution_url = Some(url.into());
        self
    }
}
