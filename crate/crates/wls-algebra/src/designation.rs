use std::fmt;
use std::str::FromStr;

/// One of the twelve symbolic license designations the combination
/// algebra is defined over.
///
/// The declaration order is the canonical order (index 0..11) used by
/// the lookup table rows and columns, report sorting, and the golden
/// CSV resource.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LicenseDesignation {
    /// Public Domain mark.
    Pd,
    /// Creative Commons Zero waiver.
    Cc0,
    /// Attribution.
    By,
    /// Attribution-NonCommercial.
    ByNc,
    /// Attribution-NonCommercial-NoDerivatives.
    ByNcNd,
    /// Attribution-NonCommercial-NoDerivatives-ShareAlike (composite,
    /// not part of the real CC suite).
    ByNcNdSa,
    /// Attribution-NonCommercial-ShareAlike.
    ByNcSa,
    /// Attribution-NoDerivatives.
    ByNd,
    /// Attribution-NoDerivatives-ShareAlike (composite, not part of
    /// the real CC suite).
    ByNdSa,
    /// Attribution-ShareAlike.
    BySa,
    /// All Rights Reserved.
    Arr,
    /// No License: no usage rights conveyed at all.
    Nl,
}

impl LicenseDesignation {
    /// All twelve designations in canonical order.
    pub const ALL: [LicenseDesignation; 12] = [
        LicenseDesignation::Pd,
        LicenseDesignation::Cc0,
        LicenseDesignation::By,
        LicenseDesignation::ByNc,
        LicenseDesignation::ByNcNd,
        LicenseDesignation::ByNcNdSa,
        LicenseDesignation::ByNcSa,
        LicenseDesignation::ByNd,
        LicenseDesignation::ByNdSa,
        LicenseDesignation::BySa,
        LicenseDesignation::Arr,
        LicenseDesignation::Nl,
    ];

    pub const COUNT: usize = 12;

    /// Position in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    /// Canonical text code, e.g. `"BY-NC-ND"`.
    pub fn code(self) -> &'static str {
        match self {
            LicenseDesignation::Pd => "PD",
            LicenseDesignation::Cc0 => "CC0",
            LicenseDesignation::By => "BY",
            LicenseDesignation::ByNc => "BY-NC",
            LicenseDesignation::ByNcNd => "BY-NC-ND",
            LicenseDesignation::ByNcNdSa => "BY-NC-ND-SA",
            LicenseDesignation::ByNcSa => "BY-NC-SA",
            LicenseDesignation::ByNd => "BY-ND",
            LicenseDesignation::ByNdSa => "BY-ND-SA",
            LicenseDesignation::BySa => "BY-SA",
            LicenseDesignation::Arr => "ARR",
            LicenseDesignation::Nl => "NL",
        }
    }

    /// Inverse of [`code`](Self::code); exact match only.
    pub fn from_code(code: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|d| d.code() == code)
    }

    /// True for the eight BY-prefixed designations backed by a
    /// Creative Commons license grant.
    pub fn is_cc_license(self) -> bool {
        matches!(
            self,
            LicenseDesignation::By
                | LicenseDesignation::ByNc
                | LicenseDesignation::ByNcNd
                | LicenseDesignation::ByNcNdSa
                | LicenseDesignation::ByNcSa
                | LicenseDesignation::ByNd
                | LicenseDesignation::ByNdSa
                | LicenseDesignation::BySa
        )
    }
}

impl fmt::Display for LicenseDesignation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Error for [`LicenseDesignation::from_str`] on a non-canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownCode(pub String);

impl fmt::Display for UnknownCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown license designation code: {:?}", self.0)
    }
}

impl std::error::Error for UnknownCode {}

impl FromStr for LicenseDesignation {
    type Err = UnknownCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_code(s).ok_or_else(|| UnknownCode(s.to_string()))
    }
}

/// Result of combining two (or more) designations: either a designation
/// both sides can live under, or the incompatibility marker `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombinationOutcome {
    Compatible(LicenseDesignation),
    /// The two licenses can't be combined. Absorbing in n-ary folds.
    Incompatible,
}

impl CombinationOutcome {
    /// Canonical rendering: the designation code, or `"X"`.
    pub fn code(self) -> &'static str {
        match self {
            CombinationOutcome::Compatible(d) => d.code(),
            CombinationOutcome::Incompatible => "X",
        }
    }

    pub fn designation(self) -> Option<LicenseDesignation> {
        match self {
            CombinationOutcome::Compatible(d) => Some(d),
            CombinationOutcome::Incompatible => None,
        }
    }

    pub fn is_compatible(self) -> bool {
        matches!(self, CombinationOutcome::Compatible(_))
    }
}

impl fmt::Display for CombinationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_stable() {
        let codes: Vec<&str> = LicenseDesignation::ALL.iter().map(|d| d.code()).collect();
        assert_eq!(
            codes,
            [
                "PD", "CC0", "BY", "BY-NC", "BY-NC-ND", "BY-NC-ND-SA", "BY-NC-SA", "BY-ND",
                "BY-ND-SA", "BY-SA", "ARR", "NL"
            ]
        );
        for (i, d) in LicenseDesignation::ALL.iter().enumerate() {
            assert_eq!(d.index(), i);
            assert_eq!(LicenseDesignation::from_index(i), Some(*d));
        }
        assert_eq!(LicenseDesignation::from_index(12), None);
    }

    #[test]
    fn code_roundtrip_is_a_bijection() {
        for d in LicenseDesignation::ALL {
            assert_eq!(LicenseDesignation::from_code(d.code()), Some(d));
        }
        assert_eq!(LicenseDesignation::from_code("BY-XYZ"), None);
        assert_eq!(LicenseDesignation::from_code("by"), None, "codes are case-sensitive");
        assert!("BY-XYZ".parse::<LicenseDesignation>().is_err());
    }

    #[test]
    fn incompatible_renders_as_x() {
        assert_eq!(CombinationOutcome::Incompatible.code(), "X");
        assert_eq!(CombinationOutcome::Incompatible.designation(), None);
        assert_eq!(
            CombinationOutcome::Compatible(LicenseDesignation::ByNc).code(),
            "BY-NC"
        );
    }
}
