//! Consistency validator and engine diff.
//!
//! The table engine ships with two algebraic claims attached to it:
//! that combination is symmetric and that it is associative. Neither is
//! assumed here; `validate_algebra` scans the full domain and reports
//! every counterexample deterministically, and `engines_diff` pins down
//! exactly where the table and the OR heuristic disagree.

use crate::combine::{combine_pair, Engine};
use crate::designation::{CombinationOutcome, LicenseDesignation};
use crate::matrix::{combine_matrix, MatrixMode};
use crate::or_engine::combine_or;

/// A pair combining differently in the two operand orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryViolation {
    pub a: LicenseDesignation,
    pub b: LicenseDesignation,
    pub forward: CombinationOutcome,
    pub reverse: CombinationOutcome,
}

/// An ordered triple where `(a+b)+c` differs from `a+(b+c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssociativityViolation {
    pub a: LicenseDesignation,
    pub b: LicenseDesignation,
    pub c: LicenseDesignation,
    pub left: CombinationOutcome,
    pub right: CombinationOutcome,
}

/// Deterministic audit of the symmetry and associativity claims for one
/// engine/mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub engine: Engine,
    pub mode: MatrixMode,
    /// One entry per violating unordered pair, operands in canonical
    /// order, sorted by canonical index.
    pub symmetry_violations: Vec<SymmetryViolation>,
    /// One entry per violating ordered triple, sorted lexicographically
    /// by canonical index.
    pub associativity_violations: Vec<AssociativityViolation>,
}

impl AlgebraReport {
    pub fn is_clean(&self) -> bool {
        self.symmetry_violations.is_empty() && self.associativity_violations.is_empty()
    }

    /// Plain-text rendering, one violation per line:
    /// `SYM a b forward reverse` then `ASSOC a b c left right`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for v in &self.symmetry_violations {
            out.push_str(&format!(
                "SYM {} {} {} {}\n",
                v.a.code(),
                v.b.code(),
                v.forward.code(),
                v.reverse.code()
            ));
        }
        for v in &self.associativity_violations {
            out.push_str(&format!(
                "ASSOC {} {} {} {} {}\n",
                v.a.code(),
                v.b.code(),
                v.c.code(),
                v.left.code(),
                v.right.code()
            ));
        }
        out
    }
}

/// Scans all ordered pairs for symmetry (recording each violating
/// unordered pair once) and all 1728 ordered triples for associativity,
/// folding with `Incompatible` as the absorbing element.
pub fn validate_algebra(engine: Engine, mode: MatrixMode) -> AlgebraReport {
    let comb = |a, b| combine_pair(a, b, engine, mode);
    let absorb = |x: CombinationOutcome, c: LicenseDesignation| match x {
        CombinationOutcome::Incompatible => CombinationOutcome::Incompatible,
        CombinationOutcome::Compatible(d) => comb(d, c),
    };

    let mut symmetry_violations = Vec::new();
    for (i, &a) in LicenseDesignation::ALL.iter().enumerate() {
        for &b in &LicenseDesignation::ALL[i + 1..] {
            let forward = comb(a, b);
            let reverse = comb(b, a);
            if forward != reverse {
                symmetry_violations.push(SymmetryViolation { a, b, forward, reverse });
            }
        }
    }

    let mut associativity_violations = Vec::new();
    for &a in &LicenseDesignation::ALL {
        for &b in &LicenseDesignation::ALL {
            for &c in &LicenseDesignation::ALL {
                // (a+b)+c
                let left = absorb(comb(a, b), c);
                // a+(b+c)
                let right = match comb(b, c) {
                    CombinationOutcome::Incompatible => CombinationOutcome::Incompatible,
                    CombinationOutcome::Compatible(d) => comb(a, d),
                };
                if left != right {
                    associativity_violations.push(AssociativityViolation { a, b, c, left, right });
                }
            }
        }
    }

    AlgebraReport {
        engine,
        mode,
        symmetry_violations,
        associativity_violations,
    }
}

/// An ordered pair on which the two engines disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineDisagreement {
    pub a: LicenseDesignation,
    pub b: LicenseDesignation,
    pub matrix_outcome: CombinationOutcome,
    pub or_outcome: CombinationOutcome,
}

/// Every ordered pair where the raw table and the OR join differ,
/// sorted canonically. This is where the table's incompatibility rules
/// cut into what the naive bit union would allow.
pub fn engines_diff() -> Vec<EngineDisagreement> {
    let mut diffs = Vec::new();
    for &a in &LicenseDesignation::ALL {
        for &b in &LicenseDesignation::ALL {
            let matrix_outcome = combine_matrix(a, b, MatrixMode::Raw);
            let or_outcome = combine_or(a, b);
            if matrix_outcome != or_outcome {
                diffs.push(EngineDisagreement { a, b, matrix_outcome, or_outcome });
            }
        }
    }
    diffs
}
