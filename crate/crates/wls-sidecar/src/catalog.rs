//! Flat-file catalog mapping dataset ids to license fragment files.
//!
//! Format: UTF-8, one `dataset_id<TAB>lic_path` per LF-terminated line;
//! blank lines and `#` comments are ignored. A deliberately boring
//! stand-in for keeping licenses as rows in a relational table.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// One catalog row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub dataset_id: String,
    pub lic_path: PathBuf,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{path}:{line}: malformed catalog line (expected dataset_id<TAB>lic_path)")]
    Parse { path: PathBuf, line: usize },

    #[error("{path}:{line}: duplicate dataset id {id:?} (first on line {first_line})")]
    DuplicateId {
        path: PathBuf,
        line: usize,
        first_line: usize,
        id: String,
    },
}

/// Loads a catalog file, preserving row order.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })?;

    let mut entries = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let row = raw.strip_suffix('\r').unwrap_or(raw);
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let Some((id, lic_path)) = row.split_once('\t') else {
            return Err(CatalogError::Parse {
                path: path.to_path_buf(),
                line,
            });
        };
        if id.is_empty() || lic_path.is_empty() {
            return Err(CatalogError::Parse {
                path: path.to_path_buf(),
                line,
            });
        }
        if let Some(&first_line) = seen.get(id) {
            return Err(CatalogError::DuplicateId {
                path: path.to_path_buf(),
                line,
                first_line,
                id: id.to_string(),
            });
        }
        seen.insert(id.to_string(), line);
        entries.push(CatalogEntry {
            dataset_id: id.to_string(),
            lic_path: PathBuf::from(lic_path),
        });
    }
    Ok(entries)
}

/// Looks up an entry by id.
pub fn find_entry<'a>(entries: &'a [CatalogEntry], dataset_id: &str) -> Option<&'a CatalogEntry> {
    entries.iter().find(|e| e.dataset_id == dataset_id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn catalog_file(content: &str) -> (tempfile::TempDir, PathBuf) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.tsv");
        let mut f = fs::File::create(&path).unwrap();
        f.write_all(content.as_bytes()).unwrap();
        (dir, path)
    }

    #[test]
    fn loads_rows_in_order() {
        let (_dir, path) = catalog_file("roads\t/data/roads.lic\nrest\t/data/rest.lic\n");
        let entries = load_catalog(&path).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].dataset_id, "roads");
        assert_eq!(entries[0].lic_path, PathBuf::from("/data/roads.lic"));
        assert_eq!(entries[1].dataset_id, "rest");
        assert_eq!(find_entry(&entries, "rest"), Some(&entries[1]));
        assert_eq!(find_entry(&entries, "nope"), None);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let (_dir, path) = catalog_file("# layers\n\nroads\t/data/roads.lic\n\n# end\n");
        assert_eq!(load_catalog(&path).unwrap().len(), 1);
    }

    #[test]
    fn empty_file_is_an_empty_catalog() {
        let (_dir, path) = catalog_file("");
        assert_eq!(load_catalog(&path).unwrap(), vec![]);
    }

    #[test]
    fn duplicate_id_reports_both_lines() {
        let (_dir, path) = catalog_file("a\t/1.lic\nb\t/2.lic\na\t/3.lic\n");
        match load_catalog(&path) {
            Err(CatalogError::DuplicateId { line, first_line, id, .. }) => {
                assert_eq!((line, first_line, id.as_str()), (3, 1, "a"));
            }
            other => panic!("expected duplicate id error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_line_reports_its_number() {
        let (_dir, path) = catalog_file("roads\t/data/roads.lic\nno-tab-here\n");
        match load_catalog(&path) {
            Err(CatalogError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_file_is_an_io_error() {
        assert!(matches!(
            load_catalog(Path::new("/nonexistent/catalog.tsv")),
            Err(CatalogError::Io { .. })
        ));
    }
}
