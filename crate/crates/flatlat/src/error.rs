//! Error types shared across the crate.
//!
//! Conditions that can legitimately arise at runtime (malformed input, guard
//! limits, calling `counterexample` on a distributive structure, ...) are
//! `LatticeError` variants. Conditions that would indicate a bug in this
//! crate — the three distributivity tests disagreeing, a canonical map
//! failing to be bijective — are asserted with panics instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// A label appears more than once in a declaration.
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    /// The declared order relation contains a cycle through this label.
    #[error("cycle detected through `{0}`")]
    CycleDetected(String),

    /// The declared order has no least element.
    #[error("no least element")]
    NoLeastElement,

    /// Two elements have no (unique) least upper bound.
    #[error("elements `{0}` and `{1}` have no join")]
    JoinMissing(String, String),

    /// A relation references a label that was never declared.
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    /// Unknown builtin structure name.
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    /// A construction exceeds the configured size guard.
    #[error("size {size} exceeds the size guard {guard}")]
    SizeGuardExceeded { size: usize, guard: usize },

    /// A join table fails one of the semilattice laws.
    #[error("not a join-semilattice: {0}")]
    NotASemilattice(String),

    /// A candidate map is not a {∨,0}-homomorphism.
    #[error("not a {{∨,0}}-homomorphism: {0}")]
    NotAHom(String),

    /// A pair set fails one of the bi-ideal conditions.
    #[error("not a bi-ideal: {0}")]
    NotABiIdeal(String),

    /// `counterexample` was asked for a witness on a distributive structure.
    #[error("the structure is distributive; no collapse witness exists")]
    IsDistributive,
}

/// Parse error for the SLF text format, with a 1-based line number where one
/// can be attributed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct SlfError {
    pub line: usize,
    pub kind: SlfErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlfErrorKind {
    #[error("{0}")]
    Syntax(String),
    /// The declared structure is not a well-formed semilattice, or trips the
    /// size guard. Kept distinct so callers can tell guard trips apart from
    /// ordinary bad input.
    #[error(transparent)]
    Lattice(LatticeError),
}

impl SlfError {
    pub fn syntax(line: usize, message: impl Into<String>) -> Self {
        SlfError { line, kind: SlfErrorKind::Syntax(message.into()) }
    }

    pub fn lattice(line: usize, err: LatticeError) -> Self {
        SlfError { line, kind: SlfErrorKind::Lattice(err) }
    }
}
