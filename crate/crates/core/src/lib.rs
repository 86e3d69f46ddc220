//! Finite presentations of fundamental groups of discriminant complements.
//!
//! For generic degree-`d` hypersurfaces in complex projective `n`-space, the
//! discriminant — the locus of singular hypersurfaces — is an irreducible
//! hypersurface in the space of coefficients. Its complement has a finitely
//! presented fundamental group, and that presentation can be written down
//! explicitly: generators are geometric generators associated with a
//! distinguished basis of vanishing cycles of the Fermat polynomial (a
//! Hefez–Lazzeri basis), indexed by multi-indices in `{1, …, d-1}^n`, and the
//! relations are governed by a finite intersection graph on those indices.
//!
//! This crate builds the presentations and everything needed to desk-check
//! them:
//!
//! * [`lattice`] — the index set, its intersection pairing, and the graph
//!   `Γ_{n,d}` whose edges and triangles drive the relation families.
//! * [`word`] — free-group words as sequences of signed generator labels.
//! * [`presentation`] — the affine, projective, and classical braid-monodromy
//!   (Zariski) presentations, plus text/JSON/CAS exports.
//! * [`abelian`] — integer Smith normal form with a verified transformation
//!   certificate, and abelianization of presentations.
//! * [`coset`] — Todd–Coxeter coset enumeration for finite-order checks.
//! * [`tietze`] — generator identification and Tietze simplification.
//! * [`smoothing`] — quotients describing cuspidal and nodal degenerations,
//!   with exact homomorphism certificates for the exceptional small cases.
//! * [`homomorphism`] — checking candidate images (permutations, integer
//!   2×2 matrices) against a presentation's relations.
//! * [`degrees`] — exact degree and Euler-characteristic bookkeeping for the
//!   discriminant polynomial, with cross-identities.
//! * [`critical`] — floating-point critical values of the deformed Fermat
//!   polynomial (circle structure, twist equivariance) and the exact rational
//!   gradient of the core deformation family.
//! * [`checks`] — a structured self-check suite over all of the above.
//!
//! All outputs are deterministic: re-running any construction yields
//! byte-identical results.

pub mod abelian;
pub mod checks;
pub mod coset;
pub mod critical;
pub mod degrees;
pub mod homomorphism;
pub mod lattice;
pub mod presentation;
pub mod smoothing;
pub mod tietze;
pub mod word;

pub use lattice::{Graph, MultiIndex, Params};
pub use presentation::{Presentation, Relation, RelationTag, Variant};
pub use word::Word;

/// Errors reported by this crate.
///
/// The variants separate caller mistakes (`Invalid`, `Parse`, `Unsupported`),
/// resource guards (`TooLarge`), and internal cross-check failures
/// (`Internal`). An `Internal` error always indicates a bug: it is raised when
/// a verification that must hold by construction (an SNF certificate, a
/// homomorphism certificate, …) does not.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
