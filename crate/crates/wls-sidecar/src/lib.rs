//! License sidecar convention for datasets.
//!
//! A dataset's license lives next to its data as `<base>.lic`, a plain
//! UTF-8 ccREL fragment — for a shapefile set `roads.shp`/`roads.dbf`/
//! `roads.shx` that means a fourth file `roads.lic`. Reading a dataset
//! with no sidecar yields the No License designation rather than an
//! error; writing is atomic so live readers never see a torn fragment.
//!
//! [`load_catalog`] adds an indirection layer: a TSV file mapping
//! dataset ids to fragment paths, for deployments that keep licenses
//! somewhere other than next to the data.

mod catalog;
mod dataset;
mod shapefile;
mod sidecar;

pub use catalog::{find_entry, load_catalog, CatalogEntry, CatalogError};
pub use dataset::{DatasetKind, DatasetRef};
pub use shapefile::{validate_shapefile_presence, ShapefileReport, SHAPEFILE_FILE_CODE};
pub use sidecar::{read_license, write_license, SidecarError};
