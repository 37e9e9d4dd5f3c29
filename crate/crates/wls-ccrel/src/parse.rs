//! Fragment parsing (the license-extractor direction).
//!
//! This is not an RDFa processor. It recognizes a fixed attribute
//! vocabulary inside a restricted XHTML subset — `rel="license"`,
//! `rel="cc:attributionURL"`, `property="dc:title"`,
//! `property="cc:attributionName"`, and `about` on the outermost
//! element — and ignores everything else, so fragments copied from the
//! license chooser parse even when they carry extra markup. Markup
//! errors only count when they break an element this parser actually
//! extracted data from.
//!
//! The scanner works on raw bytes and only ever splits at ASCII
//! delimiters, so it cannot panic on arbitrary input; fuzz tests hold
//! it to that.

use wls_algebra::LicenseDesignation;

use crate::document::LicenseDocument;
use crate::error::CcrelError;
use crate::uri::designation_from_uri;

#[cfg(test)]
const UTF8_BOM: &[u8] = b"\xef\xbb\xbf";

/// HTML void elements: never pushed on the open-element stack.
const VOID_ELEMENTS: &[&str] = &[
    "area", "base", "br", "col", "embed", "hr", "img", "input", "link", "meta", "param", "source",
    "track", "wbr",
];

/// Reverses [`escape_xml`](crate::escape_xml) on the recognized entity
/// set (`&amp;` `&lt;` `&gt;` `&quot;`); anything else passes through
/// unchanged.
pub fn unescape_xml(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(pos) = rest.find('&') {
        out.push_str(&rest[..pos]);
        let tail = &rest[pos..];
        let mut matched = None;
        for (entity, ch) in [("&amp;", '&'), ("&lt;", '<'), ("&gt;", '>'), ("&quot;", '"')] {
            if tail.starts_with(entity) {
                matched = Some((entity.len(), ch));
                break;
            }
        }
        match matched {
            Some((len, ch)) => {
                out.push(ch);
                rest = &tail[len..];
            }
            None => {
                out.push('&');
                rest = &tail[1..];
            }
        }
    }
    out.push_str(rest);
    out
}

/// Parses a ccREL fragment from raw bytes: validates the encoding,
/// then delegates to [`parse_ccrel`] (which skips a leading byte-order
/// mark; the BOM itself is well-formed UTF-8).
pub fn parse_ccrel_bytes(bytes: &[u8]) -> Result<LicenseDocument, CcrelError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CcrelError::InvalidUtf8 {
        offset: e.valid_up_to(),
    })?;
    parse_ccrel(text)
}

/// Extracts a [`LicenseDocument`] from a fragment.
///
/// The first element carrying `rel="license"` with an `href` decides
/// the designation; if several licenses are present (dual licensing is
/// not modeled) the rest are ignored. `raw_fragment` preserves the
/// input.
pub fn parse_ccrel(fragment: &str) -> Result<LicenseDocument, CcrelError> {
    let stripped = fragment.strip_prefix('\u{feff}').unwrap_or(fragment);
    let base = fragment.len() - stripped.len();

    let mut extractor = Extractor::default();
    scan(stripped.as_bytes(), base, &mut extractor)?;
    extractor.finish(stripped)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CaptureField {
    Title,
    AttributionName,
}

#[derive(Debug)]
struct OpenElement {
    name: String,
    /// Byte offset of the `<` that opened the element.
    offset: usize,
    /// This element contributed extracted data, so it must balance.
    recognized: bool,
    capture: Option<(CaptureField, String)>,
}

#[derive(Debug, Default)]
struct Extractor {
    stack: Vec<OpenElement>,
    outermost_seen: bool,
    work_uri: Option<String>,
    license_uri: Option<String>,
    title: Option<String>,
    title_claimed: bool,
    attribution_name: Option<String>,
    attribution_name_claimed: bool,
    attribution_url: Option<String>,
}

impl Extractor {
    fn text(&mut self, data: &str) {
        for element in &mut self.stack {
            if let Some((_, buffer)) = &mut element.capture {
                buffer.push_str(data);
            }
        }
    }

    fn open(&mut self, tag: Tag) -> Result<(), CcrelError> {
        let mut recognized = false;

        if !self.outermost_seen && self.stack.is_empty() {
            self.outermost_seen = true;
            if let Some(about) = tag.attr("about") {
                self.work_uri = Some(about.to_string());
                recognized = true;
            }
        }

        let href = tag.attr("href");
        if self.license_uri.is_none() && tag.rel_token("license") {
            if let Some(href) = href {
                self.license_uri = Some(href.to_string());
                recognized = true;
            }
        }
        if self.attribution_url.is_none() && tag.rel_token("cc:attributionurl") {
            if let Some(href) = href {
                self.attribution_url = Some(href.to_string());
                recognized = true;
            }
        }

        let mut capture = None;
        if !self.title_claimed && tag.property_token("dc:title") {
            self.title_claimed = true;
            capture = Some(CaptureField::Title);
        } else if !self.attribution_name_claimed && tag.property_token("cc:attributionName") {
            self.attribution_name_claimed = true;
            capture = Some(CaptureField::AttributionName);
        }

        let is_void = VOID_ELEMENTS.contains(&tag.name.as_str());
        if tag.self_closing || is_void {
            // Nothing to balance; an empty capture finalizes at once.
            match capture {
                Some(CaptureField::Title) => self.title = Some(String::new()),
                Some(CaptureField::AttributionName) => self.attribution_name = Some(String::new()),
                None => {}
            }
            return Ok(());
        }

        self.stack.push(OpenElement {
            name: tag.name,
            offset: tag.offset,
            recognized,
            capture: capture.map(|field| (field, String::new())),
        });
        Ok(())
    }

    fn close(&mut self, name: &str, offset: usize) -> Result<(), CcrelError> {
        let Some(depth) = self.stack.iter().rposition(|e| e.name == name) else {
            // Stray closing tag: unrecognized markup, ignored.
            return Ok(());
        };
        // Elements implicitly closed by this tag.
        while self.stack.len() > depth + 1 {
            let abandoned = self.stack.pop().expect("depth bounded");
            if abandoned.recognized || abandoned.capture.is_some() {
                return Err(CcrelError::parse(
                    offset,
                    format!(
                        "<{}> opened at byte {} is closed implicitly by </{}>",
                        abandoned.name, abandoned.offset, name
                    ),
                ));
            }
        }
        let element = self.stack.pop().expect("found by rposition");
        self.finalize(element);
        Ok(())
    }

    fn finalize(&mut self, element: OpenElement) {
        if let Some((field, buffer)) = element.capture {
            let value = Some(unescape_xml(&buffer));
            match field {
                CaptureField::Title => self.title = value,
                CaptureField::AttributionName => self.attribution_name = value,
            }
        }
    }

    fn finish(mut self, fragment: &str) -> Result<LicenseDocument, CcrelError> {
        if let Some(unclosed) = self
            .stack
            .iter()
            .find(|e| e.recognized || e.capture.is_some())
        {
            return Err(CcrelError::parse(
                unclosed.offset,
                format!("<{}> is never closed", unclosed.name),
            ));
        }
        self.stack.clear();

        let license_uri = self.license_uri.ok_or(CcrelError::MissingLicense)?;
        let designation: LicenseDesignation = designation_from_uri(&license_uri)?;
        Ok(LicenseDocument {
            designation,
            license_uri,
            work_uri: self.work_uri,
            title: self.title,
            attribution_name: self.attribution_name,
            attribution_url: self.attribution_url,
            raw_fragment: Some(fragment.to_string()),
        })
    }
}

struct Tag {
    name: String,
    attrs: Vec<(String, String)>,
    self_closing: bool,
    offset: usize,
}

impl Tag {
    fn attr(&self, name: &str) -> Option<&str> {
        self.attrs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    /// `rel` is a whitespace-separated token list, tokens compared
    /// case-insensitively.
    fn rel_token(&self, token: &str) -> bool {
        self.attr("rel")
            .map(|rel| {
                rel.split_ascii_whitespace()
                    .any(|t| t.eq_ignore_ascii_case(token))
            })
            .unwrap_or(false)
    }

    /// `property` tokens are CURIEs and compared exactly.
    fn property_token(&self, token: &str) -> bool {
        self.attr("property")
            .map(|p| p.split_ascii_whitespace().any(|t| t == token))
            .unwrap_or(false)
    }
}

fn lossy(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn find_byte(bytes: &[u8], from: usize, needle: u8) -> Option<usize> {
    bytes[from.min(bytes.len())..]
        .iter()
        .position(|&b| b == needle)
        .map(|i| from + i)
}

fn find_seq(bytes: &[u8], from: usize, needle: &[u8]) -> Option<usize> {
    let start = from.min(bytes.len());
    bytes[start..]
        .windows(needle.len())
        .position(|w| w == needle)
        .map(|i| start + i)
}

/// One pass over the byte stream, feeding the extractor.
fn scan(bytes: &[u8], base: usize, extractor: &mut Extractor) -> Result<(), CcrelError> {
    let mut pos = 0usize;
    let len = bytes.len();
    while pos < len {
        let Some(lt) = find_byte(bytes, pos, b'<') else {
            extractor.text(&lossy(&bytes[pos..]));
            break;
        };
        if lt > pos {
            extractor.text(&lossy(&bytes[pos..lt]));
        }
        match bytes.get(lt + 1) {
            None => {
                // Trailing lone '<': literal text.
                extractor.text("<");
                pos = len;
            }
            Some(b'!') => {
                if bytes[lt..].starts_with(b"<!--") {
                    pos = match find_seq(bytes, lt + 4, b"-->") {
                        Some(end) => end + 3,
                        None => len,
                    };
                } else {
                    pos = match find_byte(bytes, lt + 2, b'>') {
                        Some(gt) => gt + 1,
                        None => len,
                    };
                }
            }
            Some(b'?') => {
                pos = match find_seq(bytes, lt + 2, b"?>") {
                    Some(end) => end + 2,
                    None => match find_byte(bytes, lt + 2, b'>') {
                        Some(gt) => gt + 1,
                        None => len,
                    },
                };
            }
            Some(b'/') => {
                let gt = find_byte(bytes, lt + 2, b'>')
                    .ok_or_else(|| CcrelError::parse(base + lt, "unterminated closing tag"))?;
                let raw = lossy(&bytes[lt + 2..gt]);
                let name = raw
                    .split_ascii_whitespace()
                    .next()
                    .unwrap_or("")
                    .to_ascii_lowercase();
                if !name.is_empty() {
                    extractor.close(&name, base + lt)?;
                }
                pos = gt + 1;
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let (tag, next) = lex_open_tag(bytes, lt, base)?;
                extractor.open(tag)?;
                pos = next;
            }
            Some(_) => {
                // '<' not starting markup: literal text.
                extractor.text("<");
                pos = lt + 1;
            }
        }
    }
    Ok(())
}

/// Lexes an opening tag starting at `bytes[lt] == b'<'`; returns the
/// tag and the position just past its `>`.
fn lex_open_tag(bytes: &[u8], lt: usize, base: usize) -> Result<(Tag, usize), CcrelError> {
    let len = bytes.len();
    let unterminated = || CcrelError::parse(base + lt, "unterminated tag");

    let mut i = lt + 1;
    let name_start = i;
    while i < len && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b':' || bytes[i] == b'-') {
        i += 1;
    }
    let name = lossy(&bytes[name_start..i]).to_ascii_lowercase();

    let mut attrs = Vec::new();
    let mut self_closing = false;
    loop {
        while i < len && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i >= len {
            return Err(unterminated());
        }
        match bytes[i] {
            b'>' => {
                i += 1;
                break;
            }
            b'/' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    self_closing = true;
                    i += 2;
                    break;
                }
                i += 1;
            }
            _ => {
                let attr_start = i;
                while i < len
                    && !bytes[i].is_ascii_whitespace()
                    && bytes[i] != b'='
                    && bytes[i] != b'>'
                    && bytes[i] != b'/'
                {
                    i += 1;
                }
                if i == attr_start {
                    i += 1;
                    continue;
                }
                let attr_name = lossy(&bytes[attr_start..i]).to_ascii_lowercase();
                while i < len && bytes[i].is_ascii_whitespace() {
                    i += 1;
                }
                let mut value = String::new();
                if i < len && bytes[i] == b'=' {
                    i += 1;
                    while i < len && bytes[i].is_ascii_whitespace() {
                        i += 1;
                    }
                    if i >= len {
                        return Err(unterminated());
                    }
                    match bytes[i] {
                        quote @ (b'"' | b'\'') => {
                            let value_start = i + 1;
                            let end = find_byte(bytes, value_start, quote).ok_or_else(|| {
                                CcrelError::parse(base + i, "unterminated attribute value")
                            })?;
                            value = lossy(&bytes[value_start..end]);
                            i = end + 1;
                        }
                        _ => {
                            let value_start = i;
                            while i < len && !bytes[i].is_ascii_whitespace() && bytes[i] != b'>' {
                                i += 1;
                            }
                            value = lossy(&bytes[value_start..i]);
                        }
                    }
                }
                attrs.push((attr_name, unescape_xml(&value)));
            }
        }
    }

    Ok((
        Tag {
            name,
            attrs,
            self_closing,
            offset: base + lt,
        },
        i,
    ))
}
