//! Advisory presence check for shapefile companion files.
//!
//! The license layer never parses geometry; it only reports whether the
//! three mandatory companions of a shapefile set exist and whether the
//! main file starts with the expected header magic.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use crate::dataset::{append_extension, DatasetRef};

/// File code at bytes 0..4 of a `.shp` main file, big-endian.
pub const SHAPEFILE_FILE_CODE: i32 = 9994;

/// Presence report for a shapefile set. Informational only: a partial
/// set is not an error for license purposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapefileReport {
    pub shp_present: bool,
    pub dbf_present: bool,
    pub shx_present: bool,
    /// First four bytes of the `.shp` decode big-endian to the file
    /// code; false when the file is missing, short, or unreadable.
    pub header_ok: bool,
}

/// Checks `<base>.shp`, `<base>.dbf`, `<base>.shx`, and the main-file
/// header. Meaningful for [`DatasetKind::Shapefile`] references; other
/// kinds report on whatever sits next to their base path.
///
/// [`DatasetKind::Shapefile`]: crate::DatasetKind::Shapefile
pub fn validate_shapefile_presence(dataset: &DatasetRef) -> ShapefileReport {
    let base = dataset.base_path();
    let shp = append_extension(base, "shp");
    ShapefileReport {
        shp_present: shp.is_file(),
        dbf_present: append_extension(base, "dbf").is_file(),
        shx_present: append_extension(base, "shx").is_file(),
        header_ok: header_ok(&shp),
    }
}

fn header_ok(shp: &Path) -> bool {
    let mut magic = [0u8; 4];
    match File::open(shp).and_then(|mut f| f.read_exact(&mut magic)) {
        Ok(()) => i32::from_be_bytes(magic) == SHAPEFILE_FILE_CODE,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn write_shp_header(path: &Path, code: i32) {
        // 100-byte header, file code first, rest zeroed.
        let mut header = vec![0u8; 100];
        header[..4].copy_from_slice(&code.to_be_bytes());
        fs::write(path, header).unwrap();
    }

    #[test]
    fn complete_set_with_valid_header() {
        let dir = tempfile::tempdir().unwrap();
        let base = dir.path().join("roads");
        write_shp_header(&append_extension(&base, "shp"), SHAPEFILE_FILE_CODE);
        fs::write(append_extension(&base, "dbf"), b"dbf").unwrap();
        fs::write(append_extension(&base, "shx"), b"shx").unwrap();

        let report = validate_shapefile_presence(&DatasetRef::shapefile(&base));
        assert_eq!(
            report,
            ShapefileReport {
                shp_present: true,
                dbf_present: true,
                shx_present: true,
                header_ok: true,
            }
        );
    }

    #[test]
    fn missing_shx_only_clears_that_flag() {
        let dir = tempfile::tempdir().unwrap();
        let base = dir.path().join("roads");
        write_shp_header(&append_extension(&base, "shp"), SHAPEFILE_FILE_CODE);
        fs::write(append_extension(&base, "dbf"), b"dbf").unwrap();

        let report = validate_shapefile_presence(&DatasetRef::shapefile(&base));
        assert!(report.shp_present && report.dbf_present && report.header_ok);
        assert!(!report.shx_present);
    }

    #[test]
    fn zeroed_header_fails_the_magic_check() {
        let dir = tempfile::tempdir().unwrap();
        let base = dir.path().join("roads");
        write_shp_header(&append_extension(&base, "shp"), 0);

        let report = validate_shapefile_presence(&DatasetRef::shapefile(&base));
        assert!(report.shp_present);
        assert!(!report.header_ok);
    }

    #[test]
    fn short_file_fails_the_magic_check() {
        let dir = tempfile::tempdir().unwrap();
        let base = dir.path().join("roads");
        fs::write(append_extension(&base, "shp"), [0x00, 0x00]).unwrap();
        assert!(!validate_shapefile_presence(&DatasetRef::shapefile(&base)).header_ok);
    }

    #[test]
    fn empty_directory_reports_all_false() {
        let dir = tempfile::tempdir().unwrap();
        let report = validate_shapefile_presence(&DatasetRef::shapefile(dir.path().join("none")));
        assert_eq!(
            report,
            ShapefileReport {
                shp_present: false,
                dbf_present: false,
                shx_present: false,
                header_ok: false,
            }
        );
    }
}
