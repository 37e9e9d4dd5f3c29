//! Bit-level attribute encoding of designations.
//!
//! Every designation decomposes into a coarse class plus, for CC
//! licenses, a 3-bit restriction vector (NC, ND, SA). Attribution (BY)
//! is implicit for every CC license, so the eight flag subsets biject
//! with the eight BY-prefixed designations. The OR engine combines CC
//! licenses by taking the bitwise union of these vectors.

use std::fmt;
use std::ops::BitOr;

use crate::designation::LicenseDesignation;

/// Coarse license class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LicenseClass {
    /// Public domain: no rights reserved, nothing to combine.
    PublicDomain,
    /// CC0: rights waived by the holder.
    Waiver,
    /// A Creative Commons attribution license (BY plus optional flags).
    CcLicense,
    AllRightsReserved,
    NoLicense,
}

/// Subset of the restriction flags {NC, ND, SA} as a 3-bit vector.
///
/// Bit layout: NC = 0b001, ND = 0b010, SA = 0b100.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AttributeFlags(u8);

impl AttributeFlags {
    pub const EMPTY: AttributeFlags = AttributeFlags(0b000);
    pub const NC: AttributeFlags = AttributeFlags(0b001);
    pub const ND: AttributeFlags = AttributeFlags(0b010);
    pub const SA: AttributeFlags = AttributeFlags(0b100);

    /// Builds a flag set from raw bits; `None` if bits outside 0b111 are set.
    pub fn from_bits(bits: u8) -> Option<AttributeFlags> {
        (bits <= 0b111).then_some(AttributeFlags(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// True when every flag in `other` is also set in `self`.
    pub fn contains(self, other: AttributeFlags) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn union(self, other: AttributeFlags) -> AttributeFlags {
        AttributeFlags(self.0 | other.0)
    }
}

impl BitOr for AttributeFlags {
    type Output = AttributeFlags;

    fn bitor(self, rhs: AttributeFlags) -> AttributeFlags {
        self.union(rhs)
    }
}

impl fmt::Display for AttributeFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for (flag, name) in [(Self::NC, "NC"), (Self::ND, "ND"), (Self::SA, "SA")] {
            if self.contains(flag) {
                if !first {
                    f.write_str("|")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Class plus restriction flags; the flags are meaningful only for
/// [`LicenseClass::CcLicense`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AttributeVector {
    pub class: LicenseClass,
    pub flags: AttributeFlags,
}

/// A vector that violates the encoding invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedVector {
    pub class: LicenseClass,
    pub flags: AttributeFlags,
}

impl fmt::Display for MalformedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "malformed attribute vector: class {:?} cannot carry flags {}",
            self.class, self.flags
        )
    }
}

impl std::error::Error for MalformedVector {}

/// Encodes a designation as class + flag bits.
pub fn encode_attributes(designation: LicenseDesignation) -> AttributeVector {
    use LicenseDesignation::*;
    let (class, flags) = match designation {
        Pd => (LicenseClass::PublicDomain, AttributeFlags::EMPTY),
        Cc0 => (LicenseClass::Waiver, AttributeFlags::EMPTY),
        By => (LicenseClass::CcLicense, AttributeFlags::EMPTY),
        ByNc => (LicenseClass::CcLicense, AttributeFlags::NC),
        ByNcNd => (LicenseClass::CcLicense, AttributeFlags::NC | AttributeFlags::ND),
        ByNcNdSa => (
            LicenseClass::CcLicense,
            AttributeFlags::NC | AttributeFlags::ND | AttributeFlags::SA,
        ),
        ByNcSa => (LicenseClass::CcLicense, AttributeFlags::NC | AttributeFlags::SA),
        ByNd => (LicenseClass::CcLicense, AttributeFlags::ND),
        ByNdSa => (LicenseClass::CcLicense, AttributeFlags::ND | AttributeFlags::SA),
        BySa => (LicenseClass::CcLicense, AttributeFlags::SA),
        Arr => (LicenseClass::AllRightsReserved, AttributeFlags::EMPTY),
        Nl => (LicenseClass::NoLicense, AttributeFlags::EMPTY),
    };
    AttributeVector { class, flags }
}

/// Inverse of [`encode_attributes`].
///
/// Errors when a non-CC class carries flags, the one way a vector can
/// be malformed.
pub fn decode_attributes(vector: AttributeVector) -> Result<LicenseDesignation, MalformedVector> {
    use LicenseDesignation::*;
    match vector.class {
        LicenseClass::CcLicense => Ok(match vector.flags.bits() {
            0b000 => By,
            0b001 => ByNc,
            0b010 => ByNd,
            0b011 => ByNcNd,
            0b100 => BySa,
            0b101 => ByNcSa,
            0b110 => ByNdSa,
            0b111 => ByNcNdSa,
            // AttributeFlags holds at most three bits.
            _ => unreachable!(),
        }),
        class if vector.flags.is_empty() => Ok(match class {
            LicenseClass::PublicDomain => Pd,
            LicenseClass::Waiver => Cc0,
            LicenseClass::AllRightsReserved => Arr,
            LicenseClass::NoLicense => Nl,
            LicenseClass::CcLicense => unreachable!(),
        }),
        class => Err(MalformedVector {
            class,
            flags: vector.flags,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_is_inverse_of_encode() {
        for d in LicenseDesignation::ALL {
            assert_eq!(decode_attributes(encode_attributes(d)), Ok(d));
        }
    }

    #[test]
    fn cc_flag_subsets_biject_with_by_designations() {
        let mut seen = [false; 8];
        for d in LicenseDesignation::ALL.iter().filter(|d| d.is_cc_license()) {
            let v = encode_attributes(*d);
            assert_eq!(v.class, LicenseClass::CcLicense);
            assert!(!seen[v.flags.bits() as usize], "duplicate bits for {d}");
            seen[v.flags.bits() as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn non_cc_classes_have_empty_flags() {
        use LicenseDesignation::*;
        for d in [Pd, Cc0, Arr, Nl] {
            assert!(encode_attributes(d).flags.is_empty());
        }
    }

    #[test]
    fn known_bit_patterns() {
        assert_eq!(encode_attributes(LicenseDesignation::ByNcNd).flags.bits(), 0b011);
        assert_eq!(encode_attributes(LicenseDesignation::By).flags.bits(), 0b000);
        assert_eq!(
            encode_attributes(LicenseDesignation::ByNcNdSa).flags.bits(),
            0b111
        );
    }

    #[test]
    fn malformed_vector_is_rejected() {
        let v = AttributeVector {
            class: LicenseClass::AllRightsReserved,
            flags: AttributeFlags::NC,
        };
        assert!(decode_attributes(v).is_err());
    }

    #[test]
    fn from_bits_bounds() {
        assert_eq!(AttributeFlags::from_bits(0b111).map(|f| f.bits()), Some(7));
        assert_eq!(AttributeFlags::from_bits(0b1000), None);
    }
}
