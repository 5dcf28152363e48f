//! Exact symbolic engine for cohomogeneity one group diagrams over
//! compact Lie groups.
//!
//! A cohomogeneity one action with singular orbits is encoded by a
//! group diagram `H ⊆ K⁻, K⁺ ⊆ G` whose quotients `K±/H` are spheres.
//! This crate validates such diagrams, computes their exact invariants
//! (dimensions, Weyl orders, Euler characteristics, rational homotopy),
//! and classifies the actions realizing prescribed rational cohomology
//! types — truncated polynomial algebras on one even generator, and the
//! products `S² × HPⁿ` — by exhaustive, citation-carrying constraint
//! traces.  All arithmetic is exact and all orderings deterministic.
//!
//! Layer by layer:
//!
//! * [`liegroups`] — compact groups from classification data: exponent
//!   tables, dimensions, Weyl orders, parsing, and the Borel–de
//!   Siebenthal full-rank subalgebra recursion;
//! * [`rht`] — exact rational homotopy bookkeeping: graded dimension
//!   vectors, the d-invariant, long-exact-sequence resolution, and
//!   ellipticity bounds;
//! * [`targets`] — the supported rational targets and their frozen
//!   invariants;
//! * [`cohom1`] — group diagrams, the transitive-sphere catalog,
//!   principal-orbit fiber models, orbit-type normal forms, and the
//!   special-case analyses (non-orientable orbits, codimension-two
//!   pairs);
//! * [`nonprimitive`] — reduction of non-primitive actions through
//!   homogeneous bundle factorizations;
//! * [`classify`] — the classification drivers, the reference table of
//!   primitive pairs, and the exact ratio filter with tail
//!   certificates;
//! * [`report`] — constraint reports: verdicts, steps, citations, and
//!   the text and structured renderings;
//! * [`cli`] — the command-line interface of the `cohomone` binary.

#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod classify;
pub mod cli;
pub mod cohom1;
pub mod error;
pub mod liegroups;
pub mod nonprimitive;
pub mod report;
pub mod rht;
pub mod targets;

pub use error::{Error, Result};

/// The user guide, chapter by chapter; every code example runs as a
/// documentation test.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}

    #[doc = include_str!("../../../book/src/groups.md")]
    pub mod groups {}

    #[doc = include_str!("../../../book/src/rational-homotopy.md")]
    pub mod rational_homotopy {}

    #[doc = include_str!("../../../book/src/diagrams.md")]
    pub mod diagrams {}

    #[doc = include_str!("../../../book/src/fiber-models.md")]
    pub mod fiber_models {}

    #[doc = include_str!("../../../book/src/classification.md")]
    pub mod classification {}

    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
