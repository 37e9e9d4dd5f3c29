use std::ffi::OsString;
use std::path::{Path, PathBuf};

/// What the base path points at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetKind {
    /// An ESRI shapefile set; the main file is `<base>.shp` and the
    /// sidecar `<base>.lic`.
    Shapefile,
    /// Any other dataset addressed by its extension-less base path.
    Generic,
    /// The path *is* the `.lic` file.
    LicDirect,
}

/// A dataset addressed by base path, resolving to its license sidecar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetRef {
    base: PathBuf,
    kind: DatasetKind,
}

impl DatasetRef {
    pub fn shapefile(base: impl Into<PathBuf>) -> Self {
        DatasetRef {
            base: base.into(),
            kind: DatasetKind::Shapefile,
        }
    }

    pub fn generic(base: impl Into<PathBuf>) -> Self {
        DatasetRef {
            base: base.into(),
            kind: DatasetKind::Generic,
        }
    }

    /// A direct reference to a license fragment file.
    pub fn lic_file(path: impl Into<PathBuf>) -> Self {
        DatasetRef {
            base: path.into(),
            kind: DatasetKind::LicDirect,
        }
    }

    /// Sniffs the kind from the extension: `.lic` is taken as the
    /// sidecar itself, `.shp` as a shapefile's main file (the base path
    /// is the name without it), anything else as a generic base path.
    pub fn from_path(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        match path.extension().and_then(|e| e.to_str()) {
            Some("lic") => Self::lic_file(path),
            Some("shp") => Self::shapefile(path.with_extension("")),
            _ => Self::generic(path),
        }
    }

    pub fn kind(&self) -> DatasetKind {
        self.kind
    }

    pub fn base_path(&self) -> &Path {
        &self.base
    }

    /// Where the license sidecar lives: `<base>.lic`, or the path
    /// itself for direct references.
    pub fn sidecar_path(&self) -> PathBuf {
        match self.kind {
            DatasetKind::LicDirect => self.base.clone(),
            _ => append_extension(&self.base, "lic"),
        }
    }

    /// The dataset's main file, where the format defines one.
    pub fn main_file(&self) -> Option<PathBuf> {
        match self.kind {
            DatasetKind::Shapefile => Some(append_extension(&self.base, "shp")),
            _ => None,
        }
    }
}

/// Appends `.ext` to the full file name (unlike `Path::with_extension`,
/// which would replace an existing extension).
pub(crate) fn append_extension(base: &Path, ext: &str) -> PathBuf {
    let mut name = OsString::from(base);
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}
