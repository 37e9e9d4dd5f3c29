//! Service configuration file.
//!
//! Line-based sections:
//!
//! ```text
//! # comment
//! [server]
//! port = 8080
//! bind = 127.0.0.1
//! title = City mash-up licenses
//!
//! [layer roads]
//! shapefile = /data/roads
//!
//! [layer restaurants]
//! lic = /data/restaurants.lic
//!
//! [layer parks]
//! catalog = /data/catalog.tsv:parks
//! ```
//!
//! Each layer names exactly one source. Unknown keys and sections warn
//! rather than fail, so configs stay forward-compatible; structural
//! mistakes (duplicate layers, missing sources, bad names) are errors
//! with line numbers.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Server settings plus the ordered layer list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlsConfig {
    pub port: u16,
    pub bind: String,
    pub title: String,
    pub layers: Vec<LayerEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerEntry {
    pub name: String,
    pub source: LayerSource,
}

/// Where a layer's license comes from. Resolution happens per request,
/// never at startup, so a broken path surfaces as a request error and a
/// fixed one is picked up immediately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayerSource {
    /// Base path of a shapefile set; the sidecar is `<base>.lic`.
    Shapefile(PathBuf),
    /// Direct path to a license fragment file.
    Lic(PathBuf),
    /// A `dataset_id` looked up in a catalog file.
    Catalog { path: PathBuf, dataset_id: String },
}

/// A parsed config plus non-fatal warnings for the caller to log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedConfig {
    pub config: WlsConfig,
    pub warnings: Vec<String>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: duplicate layer name {name:?}")]
    DuplicateLayer { line: usize, name: String },

    #[error("line {line}: invalid layer name {name:?} (allowed characters: A-Z a-z 0-9 _ -)")]
    InvalidLayerName { line: usize, name: String },

    #[error("line {line}: layer {name:?} needs exactly one of shapefile=, lic=, catalog=")]
    MissingSource { line: usize, name: String },

    #[error("line {line}: layer {name:?} already has a source")]
    DuplicateSource { line: usize, name: String },

    #[error("line {line}: invalid port {value:?}")]
    InvalidPort { line: usize, value: String },

    #[error("line {line}: invalid catalog reference {value:?} (expected <path>:<dataset_id>)")]
    InvalidCatalogRef { line: usize, value: String },

    #[error("no layers configured")]
    NoLayers,
}

pub fn load_config(path: &Path) -> Result<ParsedConfig, ConfigError> {
    let text = fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

enum Section {
    None,
    Server,
    Layer { name: String, line: usize, source: Option<LayerSource> },
    /// Unknown section: already warned, keys ignored.
    Ignored,
}

pub fn parse_config(text: &str) -> Result<ParsedConfig, ConfigError> {
    let mut config = WlsConfig {
        port: 8080,
        bind: "127.0.0.1".to_string(),
        title: "Web License Service".to_string(),
        layers: Vec::new(),
    };
    let mut warnings = Vec::new();
    let mut section = Section::None;

    let flush_layer = |section: &mut Section, layers: &mut Vec<LayerEntry>| {
        if let Section::Layer { name, line, source } = std::mem::replace(section, Section::None) {
            match source {
                Some(source) => {
                    layers.push(LayerEntry { name, source });
                    Ok(())
                }
                None => Err(ConfigError::MissingSource { line, name }),
            }
        } else {
            Ok(())
        }
    };

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }

        if let Some(rest) = trimmed.strip_prefix('[') {
            let Some(header) = rest.strip_suffix(']') else {
                return Err(ConfigError::Syntax {
                    line,
                    message: "unterminated section header".to_string(),
                });
            };
            flush_layer(&mut section, &mut config.layers)?;
            let header = header.trim();
            if header == "server" {
                section = Section::Server;
            } else if let Some(name) = header.strip_prefix("layer ") {
                let name = name.trim().to_string();
                if name.is_empty()
                    || !name
                        .bytes()
                        .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
                {
                    return Err(ConfigError::InvalidLayerName { line, name });
                }
                if config.layers.iter().any(|l| l.name == name) {
                    return Err(ConfigError::DuplicateLayer { line, name });
                }
                section = Section::Layer { name, line, source: None };
            } else {
                warnings.push(format!("line {line}: unknown section [{header}] ignored"));
                section = Section::Ignored;
            }
            continue;
        }

        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(ConfigError::Syntax {
                line,
                message: format!("expected key = value, got {trimmed:?}"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        match &mut section {
            Section::None => {
                return Err(ConfigError::Syntax {
                    line,
                    message: format!("key {key:?} outside any section"),
                });
            }
            Section::Ignored => {}
            Section::Server => match key {
                "port" => {
                    config.port = value.parse().map_err(|_| ConfigError::InvalidPort {
                        line,
                        value: value.to_string(),
                    })?;
                }
                "bind" => config.bind = value.to_string(),
                "title" => config.title = value.to_string(),
                other => warnings.push(format!("line {line}: unknown server key {other:?} ignored")),
            },
            Section::Layer { name, source, .. } => {
                let new_source = match key {
                    "shapefile" => LayerSource::Shapefile(PathBuf::from(value)),
                    "lic" => LayerSource::Lic(PathBuf::from(value)),
                    "catalog" => {
                        let Some((path, dataset_id)) = value.rsplit_once(':') else {
                            return Err(ConfigError::InvalidCatalogRef {
                                line,
                                value: value.to_string(),
                            });
                        };
                        if path.is_empty() || dataset_id.is_empty() {
                            return Err(ConfigError::InvalidCatalogRef {
                                line,
                                value: value.to_string(),
                            });
                        }
                        LayerSource::Catalog {
                            path: PathBuf::from(path),
                            dataset_id: dataset_id.to_string(),
                        }
                    }
                    other => {
                        warnings.push(format!("line {line}: unknown layer key {other:?} ignored"));
                        continue;
                    }
                };
                if source.is_some() {
                    return Err(ConfigError::DuplicateSource {
                        line,
                        name: name.clone(),
                    });
                }
                *source = Some(new_source);
            }
        }
    }
    flush_layer(&mut section, &mut config.layers)?;

    if config.layers.is_empty() {
        return Err(ConfigError::NoLayers);
    }
    Ok(ParsedConfig { config, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# demo config
[server]
port = 9090
bind = 0.0.0.0
title = Mash-up licenses

[layer roads]
shapefile = /data/roads

[layer restaurants]
lic = /data/restaurants.lic

[layer parks]
catalog = /data/catalog.tsv:parks
";

    #[test]
    fn parses_a_full_config() {
        let parsed = parse_config(SAMPLE).unwrap();
        assert!(parsed.warnings.is_empty());
        let c = parsed.config;
        assert_eq!((c.port, c.bind.as_str(), c.title.as_str()), (9090, "0.0.0.0", "Mash-up licenses"));
        assert_eq!(c.layers.len(), 3);
        assert_eq!(c.layers[0].name, "roads");
        assert_eq!(c.layers[0].source, LayerSource::Shapefile(PathBuf::from("/data/roads")));
        assert_eq!(c.layers[1].source, LayerSource::Lic(PathBuf::from("/data/restaurants.lic")));
        assert_eq!(
            c.layers[2].source,
            LayerSource::Catalog {
                path: PathBuf::from("/data/catalog.tsv"),
                dataset_id: "parks".to_string()
            }
        );
    }

    #[test]
    fn defaults_apply_without_a_server_section() {
        let parsed = parse_config("[layer a]\nlic = /a.lic\n").unwrap();
        assert_eq!(parsed.config.port, 8080);
        assert_eq!(parsed.config.bind, "127.0.0.1");
    }

    #[test]
    fn duplicate_layer_names_are_rejected() {
        let text = "[layer a]\nlic = /a.lic\n[layer a]\nlic = /b.lic\n";
        match parse_config(text) {
            Err(ConfigError::DuplicateLayer { line, name }) => {
                assert_eq!((line, name.as_str()), (3, "a"));
            }
            other => panic!("expected duplicate layer, got {other:?}"),
        }
    }

    #[test]
    fn layer_names_are_validated() {
        assert!(matches!(
            parse_config("[layer bad name]\nlic = /a.lic\n"),
            Err(ConfigError::InvalidLayerName { .. })
        ));
        assert!(parse_config("[layer ok_name-2]\nlic = /a.lic\n").is_ok());
    }

    #[test]
    fn layer_without_source_is_rejected() {
        assert!(matches!(
            parse_config("[layer a]\n"),
            Err(ConfigError::MissingSource { .. })
        ));
        assert!(matches!(
            parse_config("[layer a]\nlic = /a.lic\nshapefile = /a\n"),
            Err(ConfigError::DuplicateSource { .. })
        ));
    }

    #[test]
    fn unknown_keys_and_sections_warn_but_parse() {
        let text = "[server]\nlog_level = debug\n[widgets]\nsize = 3\n[layer a]\nlic = /a.lic\nstyle = bold\n";
        let parsed = parse_config(text).unwrap();
        assert_eq!(parsed.warnings.len(), 3);
        assert_eq!(parsed.config.layers.len(), 1);
    }

    #[test]
    fn structural_errors_carry_line_numbers() {
        match parse_config("[server]\nport = nine\n[layer a]\nlic = /a.lic\n") {
            Err(ConfigError::InvalidPort { line, value }) => {
                assert_eq!((line, value.as_str()), (2, "nine"));
            }
            other => panic!("expected invalid port, got {other:?}"),
        }
        assert!(matches!(
            parse_config("port = 1\n"),
            Err(ConfigError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_config("[layer a]\ncatalog = nodelimiter\n"),
            Err(ConfigError::InvalidCatalogRef { .. })
        ));
    }

    #[test]
    fn empty_config_has_no_layers() {
        assert!(matches!(parse_config(""), Err(ConfigError::NoLayers)));
    }
}
