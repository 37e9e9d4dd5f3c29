//! Designation ↔ URI mapping.
//!
//! Emission always uses the canonical URI for a designation; parsing is
//! deliberately looser, accepting `http` or `https` and any version
//! segment of a creativecommons.org URI. The four designations with no
//! real-world license URI (the two composite hybrids, ARR and NL) get
//! `urn:wls:license:*` identifiers — a local convention, not an
//! interoperable one.

use wls_algebra::LicenseDesignation;

use crate::error::CcrelError;

/// Canonical emission URI for a designation.
pub fn canonical_uri(designation: LicenseDesignation) -> &'static str {
    use LicenseDesignation::*;
    match designation {
        Pd => "http://creativecommons.org/publicdomain/mark/1.0/",
        Cc0 => "http://creativecommons.org/publicdomain/zero/1.0/",
        By => "http://creativecommons.org/licenses/by/3.0/",
        ByNc => "http://creativecommons.org/licenses/by-nc/3.0/",
        ByNcNd => "http://creativecommons.org/licenses/by-nc-nd/3.0/",
        ByNcSa => "http://creativecommons.org/licenses/by-nc-sa/3.0/",
        ByNd => "http://creativecommons.org/licenses/by-nd/3.0/",
        BySa => "http://creativecommons.org/licenses/by-sa/3.0/",
        ByNdSa => "urn:wls:license:by-nd-sa",
        ByNcNdSa => "urn:wls:license:by-nc-nd-sa",
        Arr => "urn:wls:license:arr",
        Nl => "urn:wls:license:nl",
    }
}

/// Human-readable label used as the link text of emitted fragments.
pub fn label(designation: LicenseDesignation) -> &'static str {
    use LicenseDesignation::*;
    match designation {
        Pd => "Public Domain Mark 1.0",
        Cc0 => "CC0 1.0",
        By => "CC BY 3.0",
        ByNc => "CC BY-NC 3.0",
        ByNcNd => "CC BY-NC-ND 3.0",
        ByNcSa => "CC BY-NC-SA 3.0",
        ByNd => "CC BY-ND 3.0",
        BySa => "CC BY-SA 3.0",
        ByNdSa => "BY-ND-SA (composite, non-standard)",
        ByNcNdSa => "BY-NC-ND-SA (composite, non-standard)",
        Arr => "All Rights Reserved",
        Nl => "No License",
    }
}

/// Maps a license URI to its designation, tolerating scheme and version
/// variation for creativecommons.org URIs.
pub fn designation_from_uri(uri: &str) -> Result<LicenseDesignation, CcrelError> {
    let unknown = || CcrelError::UnknownLicenseUri(uri.to_string());

    if let Some(code) = uri.strip_prefix("urn:wls:license:") {
        return LicenseDesignation::ALL
            .iter()
            .copied()
            .find(|d| d.code().to_ascii_lowercase() == code)
            .ok_or_else(unknown);
    }

    let rest = uri
        .strip_prefix("http://")
        .or_else(|| uri.strip_prefix("https://"))
        .ok_or_else(unknown)?;
    let path = rest
        .strip_prefix("creativecommons.org/")
        .ok_or_else(unknown)?;
    let segments: Vec<&str> = path.trim_end_matches('/').split('/').collect();
    match segments.as_slice() {
        ["publicdomain", "mark", version] if is_version(version) => Ok(LicenseDesignation::Pd),
        ["publicdomain", "zero", version] if is_version(version) => Ok(LicenseDesignation::Cc0),
        ["licenses", code, version] if is_version(version) => LicenseDesignation::ALL
            .iter()
            .copied()
            .filter(|d| d.is_cc_license())
            .find(|d| d.code().to_ascii_lowercase() == *code)
            .ok_or_else(unknown),
        _ => Err(unknown()),
    }
}

/// A version path segment: digits and dots, at least one digit.
fn is_version(segment: &str) -> bool {
    !segment.is_empty()
        && segment.bytes().all(|b| b.is_ascii_digit() || b == b'.')
        && segment.bytes().any(|b| b.is_ascii_digit())
}
