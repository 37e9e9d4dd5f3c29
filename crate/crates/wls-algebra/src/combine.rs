//! Engine selection and n-ary composition.

use std::fmt;
use std::str::FromStr;

use crate::designation::{CombinationOutcome, LicenseDesignation};
use crate::matrix::{combine_matrix, MatrixMode};
use crate::or_engine::combine_or;

/// Which pairwise combination engine to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// The transcribed lookup table.
    Matrix,
    /// The bitwise-OR semilattice join.
    Or,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Matrix => "matrix",
            Engine::Or => "or",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "matrix" => Ok(Engine::Matrix),
            "or" => Ok(Engine::Or),
            other => Err(format!("unknown engine {other:?} (expected matrix|or)")),
        }
    }
}

/// Pairwise combination under the selected engine. `mode` only affects
/// the matrix engine.
pub fn combine_pair(
    a: LicenseDesignation,
    b: LicenseDesignation,
    engine: Engine,
    mode: MatrixMode,
) -> CombinationOutcome {
    match engine {
        Engine::Matrix => combine_matrix(a, b, mode),
        Engine::Or => combine_or(a, b),
    }
}

/// Combines a nonempty list of designations by right-recursive descent:
/// `combine_all([a, rest..]) = combine(a, combine_all(rest))`, with a
/// singleton list yielding `Compatible(element)` and `Incompatible`
/// absorbing once it appears.
///
/// The fold direction is part of the contract: the raw matrix is
/// order-sensitive, so `[BY-NC, BY-ND, BY-NC-ND]` combines to
/// `BY-NC-ND` right-to-left where a left fold would hit `X` at the
/// first step.
///
/// # Panics
///
/// Panics if `licenses` is empty.
pub fn combine_all(
    licenses: &[LicenseDesignation],
    engine: Engine,
    mode: MatrixMode,
) -> CombinationOutcome {
    let (last, init) = licenses
        .split_last()
        .expect("combine_all requires at least one license");
    let mut acc = CombinationOutcome::Compatible(*last);
    for &d in init.iter().rev() {
        acc = match acc {
            CombinationOutcome::Incompatible => return CombinationOutcome::Incompatible,
            CombinationOutcome::Compatible(e) => combine_pair(d, e, engine, mode),
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use CombinationOutcome::*;
    use LicenseDesignation::*;

    #[test]
    fn singleton_is_the_element() {
        for d in LicenseDesignation::ALL {
            assert_eq!(combine_all(&[d], Engine::Matrix, MatrixMode::Raw), Compatible(d));
            assert_eq!(combine_all(&[d], Engine::Or, MatrixMode::Raw), Compatible(d));
        }
    }

    #[test]
    fn mashup_scenario_folds_to_by_nc() {
        let layers = [By, ByNc, Pd];
        assert_eq!(
            combine_all(&layers, Engine::Matrix, MatrixMode::Raw),
            Compatible(ByNc)
        );
        assert_eq!(
            combine_all(&layers, Engine::Matrix, MatrixMode::Symmetrized),
            Compatible(ByNc)
        );
    }

    #[test]
    fn or_fold_unions_bits() {
        assert_eq!(
            combine_all(&[ByNc, ByNd, ByNcNd], Engine::Or, MatrixMode::Raw),
            Compatible(ByNcNd)
        );
    }

    #[test]
    fn raw_fold_is_right_recursive() {
        assert_eq!(
            combine_all(&[ByNc, ByNd, ByNcNd], Engine::Matrix, MatrixMode::Raw),
            Compatible(ByNcNd)
        );
    }

    #[test]
    fn incompatibility_absorbs() {
        // BY-NC + BY-ND is X under the raw matrix; anything after stays X.
        let list = [Pd, ByNc, ByNd, Pd, Cc0];
        assert_eq!(combine_all(&list, Engine::Matrix, MatrixMode::Raw), Incompatible);
    }

    #[test]
    #[should_panic(expected = "at least one license")]
    fn empty_list_panics() {
        combine_all(&[], Engine::Or, MatrixMode::Raw);
    }
}
