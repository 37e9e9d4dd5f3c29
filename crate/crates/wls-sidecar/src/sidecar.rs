//! Sidecar reads and writes.
//!
//! A missing sidecar is not an error: it reads as a No License
//! document, since absent metadata conveys no permissions. Writes go
//! through a temporary sibling plus rename so that concurrent readers
//! never observe a torn file.

use std::fs;
use std::io;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;
use wls_algebra::LicenseDesignation;
use wls_ccrel::{emit_ccrel, parse_ccrel_bytes, CcrelError, LicenseDocument};

use crate::dataset::DatasetRef;

#[derive(Debug, Error)]
pub enum SidecarError {
    #[error("sidecar already exists: {path}")]
    AlreadyExists { path: PathBuf },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    /// The sidecar exists but its fragment does not parse.
    #[error("{path}: {source}")]
    Codec {
        path: PathBuf,
        #[source]
        source: CcrelError,
    },
}

/// Reads and parses the dataset's sidecar. A sidecar that does not
/// exist yields a synthetic No License document.
pub fn read_license(dataset: &DatasetRef) -> Result<LicenseDocument, SidecarError> {
    let path = dataset.sidecar_path();
    match fs::read(&path) {
        Ok(bytes) => parse_ccrel_bytes(&bytes).map_err(|source| SidecarError::Codec { path, source }),
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            Ok(LicenseDocument::new(LicenseDesignation::Nl))
        }
        Err(source) => Err(SidecarError::Io { path, source }),
    }
}

/// Emits `doc` and writes it to the dataset's sidecar path, returning
/// the path written. Refuses to clobber an existing sidecar unless
/// `overwrite` is set.
///
/// The write is atomic: bytes land in a temporary sibling which is then
/// renamed over the target, so readers see either the old or the new
/// complete file.
pub fn write_license(
    dataset: &DatasetRef,
    doc: &LicenseDocument,
    overwrite: bool,
) -> Result<PathBuf, SidecarError> {
    let path = dataset.sidecar_path();
    if !overwrite && path.exists() {
        return Err(SidecarError::AlreadyExists { path });
    }
    atomic_write(&path, emit_ccrel(doc).as_bytes()).map_err(|source| SidecarError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

fn atomic_write(path: &PathBuf, bytes: &[u8]) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let file_name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let temp_name = format!(
        ".{}.{}.{}.tmp",
        file_name.to_string_lossy(),
        std::process::id(),
        TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    );
    let temp_path = match dir {
        Some(dir) => dir.join(&temp_name),
        None => PathBuf::from(&temp_name),
    };
    fs::write(&temp_path, bytes)?;
    fs::rename(&temp_path, path).inspect_err(|_| {
        let _ = fs::remove_file(&temp_path);
    })
}
