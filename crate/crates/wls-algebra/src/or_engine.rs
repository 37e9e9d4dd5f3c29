//! Bitwise-OR combination engine.
//!
//! The OR engine is the join of a 13-element semilattice rather than a
//! transcribed table:
//!
//! - `PD` is the bottom element (identity for everything);
//! - `CC0` sits above `PD` and below every CC license;
//! - the eight CC licenses form a cube ordered by flag subset, joined
//!   by bitwise OR of their restriction vectors;
//! - `ARR` and `NL` sit above `CC0`, incomparable to the CC cube and
//!   to each other;
//! - `Incompatible` (`X`) is the absorbing top.
//!
//! Being a semilattice join, the operation is commutative, associative,
//! and idempotent with no exceptions; `tests/algebra_laws.rs` checks
//! all 13² pairs and 13³ triples exhaustively.

use crate::attributes::{decode_attributes, encode_attributes, AttributeVector, LicenseClass};
use crate::designation::{CombinationOutcome, LicenseDesignation};

/// Combines two designations with the OR heuristic.
pub fn combine_or(a: LicenseDesignation, b: LicenseDesignation) -> CombinationOutcome {
    use CombinationOutcome::*;
    use LicenseClass::*;
    if a == b {
        return Compatible(a);
    }
    let (va, vb) = (encode_attributes(a), encode_attributes(b));
    match (va.class, vb.class) {
        (PublicDomain, _) => Compatible(b),
        (_, PublicDomain) => Compatible(a),
        (Waiver, _) => Compatible(b),
        (_, Waiver) => Compatible(a),
        (CcLicense, CcLicense) => {
            let joined = AttributeVector {
                class: CcLicense,
                flags: va.flags | vb.flags,
            };
            // Every 3-bit union decodes to a CC designation.
            Compatible(decode_attributes(joined).expect("CC flag union decodes"))
        }
        // ARR and NL against anything else (including each other).
        _ => Incompatible,
    }
}

/// The same join lifted to outcomes, with `X` absorbing. This is the
/// operation the n-ary fold and the law scans run over.
pub fn or_join(x: CombinationOutcome, y: CombinationOutcome) -> CombinationOutcome {
    use CombinationOutcome::*;
    match (x, y) {
        (Incompatible, _) | (_, Incompatible) => Incompatible,
        (Compatible(a), Compatible(b)) => combine_or(a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CombinationOutcome::*;
    use LicenseDesignation::*;

    #[test]
    fn nc_plus_nd_is_nc_nd() {
        assert_eq!(combine_or(ByNc, ByNd), Compatible(ByNcNd));
    }

    #[test]
    fn identities_and_idempotence() {
        for d in LicenseDesignation::ALL {
            assert_eq!(combine_or(Pd, d), Compatible(d));
            assert_eq!(combine_or(d, Pd), Compatible(d));
            assert_eq!(combine_or(d, d), Compatible(d));
        }
        assert_eq!(combine_or(Cc0, Pd), Compatible(Cc0));
        assert_eq!(combine_or(Cc0, Arr), Compatible(Arr));
        assert_eq!(combine_or(Nl, Cc0), Compatible(Nl));
    }

    #[test]
    fn arr_and_nl_are_isolated() {
        assert_eq!(combine_or(Arr, Nl), Incompatible);
        assert_eq!(combine_or(Arr, By), Incompatible);
        assert_eq!(combine_or(BySa, Nl), Incompatible);
        assert_eq!(combine_or(Arr, Arr), Compatible(Arr));
        assert_eq!(combine_or(Nl, Nl), Compatible(Nl));
    }

    #[test]
    fn x_absorbs_in_the_lifted_join() {
        for d in LicenseDesignation::ALL {
            assert_eq!(or_join(Incompatible, Compatible(d)), Incompatible);
            assert_eq!(or_join(Compatible(d), Incompatible), Incompatible);
        }
        assert_eq!(or_join(Incompatible, Incompatible), Incompatible);
    }
}
