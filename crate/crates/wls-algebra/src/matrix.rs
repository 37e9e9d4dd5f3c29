//! Lookup-table combination engine.
//!
//! All behavior of the matrix engine flows from one embedded CSV
//! resource, the 12×12 license compatibility table (see
//! `docs/license-matrix.md` at the repository root for the row-by-row
//! audit). The table is order-sensitive in three cells involving
//! BY-NC-ND; `MatrixMode::Symmetrized` resolves those cells with a
//! restrictive-wins rule instead of silently patching the data.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::attributes::{encode_attributes, LicenseClass};
use crate::designation::{CombinationOutcome, LicenseDesignation};

/// The golden CSV the matrix engine is built from.
pub const LICENSE_MATRIX_CSV: &str = include_str!("../resources/license_matrix.csv");

/// How asymmetric cells of the raw table are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixMode {
    /// Use the table exactly as transcribed; `combine(a, b)` may differ
    /// from `combine(b, a)`.
    Raw,
    /// Resolve each asymmetric pair to the more restrictive of the two
    /// cells: `X` beats any designation, and between two designations
    /// the larger flag superset wins (otherwise `X`).
    Symmetrized,
}

impl MatrixMode {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixMode::Raw => "raw",
            MatrixMode::Symmetrized => "symmetrized",
        }
    }
}

impl fmt::Display for MatrixMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw" => Ok(MatrixMode::Raw),
            "symmetrized" => Ok(MatrixMode::Symmetrized),
            other => Err(format!("unknown matrix mode {other:?} (expected raw|symmetrized)")),
        }
    }
}

/// The 12×12 combination table; row = first operand, column = second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LicenseMatrix {
    cells: [[CombinationOutcome; LicenseDesignation::COUNT]; LicenseDesignation::COUNT],
}

/// Parse failure in a matrix CSV document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCsvError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for MatrixCsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix CSV line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for MatrixCsvError {}

static GOLDEN: LazyLock<LicenseMatrix> = LazyLock::new(|| {
    LicenseMatrix::from_csv(LICENSE_MATRIX_CSV).expect("embedded license matrix CSV is well-formed")
});

impl LicenseMatrix {
    /// The embedded golden table.
    pub fn golden() -> &'static LicenseMatrix {
        &GOLDEN
    }

    /// Parses the CSV interchange format: a header line
    /// `code,PD,...,NL` followed by one line per designation in
    /// canonical order, cells being canonical codes or `X`.
    pub fn from_csv(text: &str) -> Result<LicenseMatrix, MatrixCsvError> {
        let err = |line: usize, message: String| MatrixCsvError { line, message };
        let mut lines = text.lines().enumerate();

        let (_, header) = lines
            .next()
            .ok_or_else(|| err(1, "empty document".into()))?;
        let mut expected_header = String::from("code");
        for d in LicenseDesignation::ALL {
            expected_header.push(',');
            expected_header.push_str(d.code());
        }
        if header != expected_header {
            return Err(err(1, format!("bad header (expected {expected_header:?})")));
        }

        let mut cells =
            [[CombinationOutcome::Incompatible; LicenseDesignation::COUNT]; LicenseDesignation::COUNT];
        let mut rows_seen = 0usize;
        for (lineno, line) in lines {
            if line.is_empty() {
                return Err(err(lineno + 1, "blank line".into()));
            }
            let row = LicenseDesignation::from_index(rows_seen)
                .ok_or_else(|| err(lineno + 1, "more than 12 data rows".into()))?;
            let mut fields = line.split(',');
            let code = fields.next().unwrap_or("");
            if code != row.code() {
                return Err(err(
                    lineno + 1,
                    format!("row code {:?}, expected {:?}", code, row.code()),
                ));
            }
            let mut cols = 0usize;
            for field in fields {
                let col = LicenseDesignation::from_index(cols)
                    .ok_or_else(|| err(lineno + 1, "more than 12 cells".into()))?;
                let outcome = if field == "X" {
                    CombinationOutcome::Incompatible
                } else {
                    LicenseDesignation::from_code(field)
                        .map(CombinationOutcome::Compatible)
                        .ok_or_else(|| err(lineno + 1, format!("unknown cell value {field:?}")))?
                };
                cells[row.index()][col.index()] = outcome;
                cols += 1;
            }
            if cols != LicenseDesignation::COUNT {
                return Err(err(lineno + 1, format!("{cols} cells, expected 12")));
            }
            rows_seen += 1;
        }
        if rows_seen != LicenseDesignation::COUNT {
            return Err(err(14, format!("{rows_seen} data rows, expected 12")));
        }
        Ok(LicenseMatrix { cells })
    }

    /// Raw cell lookup: `a` selects the row, `b` the column.
    pub fn cell(&self, a: LicenseDesignation, b: LicenseDesignation) -> CombinationOutcome {
        self.cells[a.index()][b.index()]
    }
}

/// Combines two designations through the lookup table.
pub fn combine_matrix(
    a: LicenseDesignation,
    b: LicenseDesignation,
    mode: MatrixMode,
) -> CombinationOutcome {
    let matrix = LicenseMatrix::golden();
    let forward = matrix.cell(a, b);
    match mode {
        MatrixMode::Raw => forward,
        MatrixMode::Symmetrized => {
            let reverse = matrix.cell(b, a);
            if forward == reverse {
                forward
            } else {
                restrictive(forward, reverse)
            }
        }
    }
}

/// Restrictive-wins resolution for an asymmetric pair of outcomes.
fn restrictive(x: CombinationOutcome, y: CombinationOutcome) -> CombinationOutcome {
    use CombinationOutcome::*;
    match (x, y) {
        (Incompatible, _) | (_, Incompatible) => Incompatible,
        (Compatible(d1), Compatible(d2)) => {
            let (v1, v2) = (encode_attributes(d1), encode_attributes(d2));
            if v1.class == LicenseClass::CcLicense && v2.class == LicenseClass::CcLicense {
                if v1.flags.contains(v2.flags) {
                    Compatible(d1)
                } else if v2.flags.contains(v1.flags) {
                    Compatible(d2)
                } else {
                    Incompatible
                }
            } else {
                // Distinct designations with no flag ordering between them.
                Incompatible
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use LicenseDesignation::*;

    #[test]
    fn golden_csv_parses() {
        let m = LicenseMatrix::golden();
        assert_eq!(m.cell(Pd, BySa), CombinationOutcome::Compatible(BySa));
    }

    #[test]
    fn csv_shape_is_thirteen_lf_lines() {
        assert_eq!(LICENSE_MATRIX_CSV.lines().count(), 13);
        assert!(LICENSE_MATRIX_CSV.ends_with('\n'));
        assert!(!LICENSE_MATRIX_CSV.contains('\r'));
        assert!(!LICENSE_MATRIX_CSV.contains(' '));
    }

    #[test]
    fn from_csv_rejects_bad_documents() {
        assert!(LicenseMatrix::from_csv("").is_err());
        assert!(LicenseMatrix::from_csv("code,PD\nPD,PD\n").is_err());
        let truncated: String = LICENSE_MATRIX_CSV.lines().take(5).collect::<Vec<_>>().join("\n");
        assert!(LicenseMatrix::from_csv(&truncated).is_err());
        let corrupted = LICENSE_MATRIX_CSV.replacen("BY-SA", "BY-XX", 1);
        assert!(LicenseMatrix::from_csv(&corrupted).is_err());
    }

    #[test]
    fn paper_anchored_cells() {
        use CombinationOutcome::*;
        assert_eq!(combine_matrix(Pd, BySa, MatrixMode::Raw), Compatible(BySa));
        assert_eq!(combine_matrix(ByNc, ByNd, MatrixMode::Raw), Incompatible);
        assert_eq!(combine_matrix(By, Arr, MatrixMode::Raw), Incompatible);
        assert_eq!(combine_matrix(Cc0, Cc0, MatrixMode::Raw), Compatible(Cc0));
    }

    #[test]
    fn symmetrized_resolves_restrictively() {
        use CombinationOutcome::*;
        // Raw disagrees on this pair (BY-NC-ND-SA vs X); restrictive picks X.
        assert_eq!(combine_matrix(ByNcNd, ByNcSa, MatrixMode::Raw), Compatible(ByNcNdSa));
        assert_eq!(combine_matrix(ByNcSa, ByNcNd, MatrixMode::Raw), Incompatible);
        assert_eq!(combine_matrix(ByNcNd, ByNcSa, MatrixMode::Symmetrized), Incompatible);
        assert_eq!(combine_matrix(ByNcSa, ByNcNd, MatrixMode::Symmetrized), Incompatible);
    }

    #[test]
    fn restrictive_prefers_flag_superset() {
        use CombinationOutcome::*;
        assert_eq!(restrictive(Compatible(ByNcNd), Compatible(ByNc)), Compatible(ByNcNd));
        assert_eq!(restrictive(Compatible(By), Compatible(ByNdSa)), Compatible(ByNdSa));
        assert_eq!(restrictive(Compatible(ByNc), Compatible(ByNd)), Incompatible);
        assert_eq!(restrictive(Compatible(Arr), Compatible(Nl)), Incompatible);
        assert_eq!(restrictive(Incompatible, Compatible(By)), Incompatible);
    }
}
