use thiserror::Error;

/// Codec failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CcrelError {
    /// No element carrying `rel="license"` with an `href` was found.
    #[error("no rel=\"license\" element found in fragment")]
    MissingLicense,

    /// The license URI matches no accepted pattern.
    #[error("license URI matches no known license: {0:?}")]
    UnknownLicenseUri(String),

    /// Malformed markup within the recognized subset.
    #[error("markup error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Input bytes are not valid UTF-8.
    #[error("fragment is not valid UTF-8 (error at byte {offset})")]
    InvalidUtf8 { offset: usize },
}

impl CcrelError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        CcrelError::Parse {
            offset,
            message: message.into(),
        }
    }
}
