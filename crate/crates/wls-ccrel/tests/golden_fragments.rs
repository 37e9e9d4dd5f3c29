//! Byte-exact golden fragments, one per designation. The `.lic` files
//! under `tests/golden/` were written out from the fragment grammar by
//! hand; the emitter must reproduce them exactly.

use wls_algebra::LicenseDesignation;
use wls_ccrel::{emit_ccrel, parse_ccrel, LicenseDocument};

const GOLDEN: [(&str, &str); 12] = [
    ("PD", include_str!("golden/pd.lic")),
    ("CC0", include_str!("golden/cc0.lic")),
    ("BY", include_str!("golden/by.lic")),
    ("BY-NC", include_str!("golden/by-nc.lic")),
    ("BY-NC-ND", include_str!("golden/by-nc-nd.lic")),
    ("BY-NC-ND-SA", include_str!("golden/by-nc-nd-sa.lic")),
    ("BY-NC-SA", include_str!("golden/by-nc-sa.lic")),
    ("BY-ND", include_str!("golden/by-nd.lic")),
    ("BY-ND-SA", include_str!("golden/by-nd-sa.lic")),
    ("BY-SA", include_str!("golden/by-sa.lic")),
    ("ARR", include_str!("golden/arr.lic")),
    ("NL", include_str!("golden/nl.lic")),
];

#[test]
fn emitter_matches_all_twelve_golden_fragments() {
    for (code, golden) in GOLDEN {
        let designation = LicenseDesignation::from_code(code).unwrap();
        let doc = LicenseDocument::new(designation).with_title("sample layer");
        assert_eq!(emit_ccrel(&doc), golden, "fragment for {code}");
    }
}

#[test]
fn golden_fragments_parse_back_to_their_designation() {
    for (code, golden) in GOLDEN {
        let parsed = parse_ccrel(golden).unwrap();
        assert_eq!(parsed.designation.code(), code);
        assert_eq!(parsed.title.as_deref(), Some("sample layer"));
    }
}
