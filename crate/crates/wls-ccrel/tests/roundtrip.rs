//! Emit/parse round-trip coverage over the full document space.

use proptest::prelude::*;
use wls_algebra::LicenseDesignation;
use wls_ccrel::{canonical_uri, emit_ccrel, escape_xml, parse_ccrel, unescape_xml, LicenseDocument};

/// Builds a document with the given fields; attribution only applies to
/// CC designations (non-CC documents never carry it).
fn document(
    designation: LicenseDesignation,
    work_uri: Option<&str>,
    title: Option<&str>,
    attribution_name: Option<&str>,
    attribution_url: Option<&str>,
) -> LicenseDocument {
    let mut doc = LicenseDocument::new(designation);
    doc.work_uri = work_uri.map(str::to_string);
    doc.title = title.map(str::to_string);
    doc.attribution_name = attribution_name.map(str::to_string);
    doc.attribution_url = attribution_url.map(str::to_string);
    doc
}

#[test]
fn roundtrip_all_designations_and_field_combinations() {
    let mut cases = 0usize;
    for designation in LicenseDesignation::ALL {
        let attribution_combos: &[(Option<&str>, Option<&str>)] = if designation.is_cc_license() {
            &[
                (None, None),
                (Some("Jane Mapper"), None),
                (None, Some("http://example.org/jane")),
                (Some("Jane Mapper"), Some("http://example.org/jane")),
            ]
        } else {
            &[(None, None)]
        };
        for work_uri in [None, Some("http://example.org/data/roads")] {
            for title in [None, Some("roads & \"trails\" <v2>")] {
                for (name, url) in attribution_combos {
                    let doc = document(designation, work_uri, title, *name, *url);
                    let fragment = emit_ccrel(&doc);
                    let parsed = parse_ccrel(&fragment).unwrap_or_else(|e| {
                        panic!("parse failed for {designation}: {e}\n{fragment}")
                    });
                    assert_eq!(parsed.designation, doc.designation);
                    assert_eq!(parsed.license_uri, canonical_uri(designation));
                    assert_eq!(parsed.work_uri, doc.work_uri, "{fragment}");
                    assert_eq!(parsed.title, doc.title, "{fragment}");
                    assert_eq!(parsed.attribution_name, doc.attribution_name, "{fragment}");
                    assert_eq!(parsed.attribution_url, doc.attribution_url, "{fragment}");
                    assert_eq!(parsed.raw_fragment.as_deref(), Some(fragment.as_str()));
                    cases += 1;
                }
            }
        }
    }
    assert!(cases >= 96, "only {cases} cases enumerated");
}

proptest! {
    /// Round-trip with arbitrary field text, including markup
    /// metacharacters that must be escaped.
    #[test]
    fn roundtrip_with_arbitrary_text(
        designation_ix in 0usize..12,
        title in proptest::option::of("[ -~]{0,40}"),
        work_uri in proptest::option::of("[!-~]{1,40}"),
        name in proptest::option::of("[ -~]{1,30}"),
    ) {
        let designation = LicenseDesignation::ALL[designation_ix];
        let mut doc = LicenseDocument::new(designation);
        doc.title = title;
        doc.work_uri = work_uri;
        if designation.is_cc_license() {
            doc.attribution_name = name;
        }
        let parsed = parse_ccrel(&emit_ccrel(&doc)).unwrap();
        prop_assert_eq!(parsed.designation, doc.designation);
        prop_assert_eq!(parsed.title, doc.title);
        prop_assert_eq!(parsed.work_uri, doc.work_uri);
        prop_assert_eq!(parsed.attribution_name, doc.attribution_name);
    }

    /// Escaping round-trips through unescaping for any string.
    #[test]
    fn escape_unescape_involution(text in ".*") {
        prop_assert_eq!(unescape_xml(&escape_xml(&text)), text);
    }

    /// The parser returns a document or a structured error for any
    /// input, but never panics.
    #[test]
    fn parser_total_on_arbitrary_strings(input in ".*") {
        let _ = parse_ccrel(&input);
    }

    /// Same, with markup-shaped noise more likely to reach the
    /// tokenizer's corners.
    #[test]
    fn parser_total_on_markup_noise(input in "[<>\"'=a-z/ &;%-]{0,200}") {
        let _ = parse_ccrel(&input);
    }
}
