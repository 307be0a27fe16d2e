//! Twisted products of monoids.
//!
//! A twisting of a finite monoid `S` is a map `Φ: S × S → ℕ` satisfying the
//! cocycle identity `Φ(a,b) + Φ(ab,c) = Φ(a,bc) + Φ(b,c)`. Given an additive
//! commutative monoid `M` and `q ∈ M`, the twisted product `M ×_Φ^q S` is the
//! set `M × S` with `(i,a)(j,b) = (i + j + Φ(a,b)q, ab)`.
//!
//! The crate provides the pieces needed to build and analyse such products:
//!
//! * [`semigroup`]: a generic finite-semigroup engine (Green's relations,
//!   Schützenberger groups, biordered sets, stability, idempotent closures).
//! * [`monoid`]: the additive commutative monoids `M`.
//! * [`diagram`], [`transform`], [`matrix`]: concrete base monoids.
//! * [`twisting`]: twisting constructors and axiom verifiers.
//! * [`product`]: twisted products and the structural predictors for tight
//!   twistings, each cross-checked against the generic engine.
//! * [`eggbox`]: egg-box diagram layout and rendering.

pub mod diagram;
pub mod eggbox;
pub mod equivalence;
pub mod matrix;
pub mod monoid;
pub mod product;
pub mod report;
pub mod semigroup;
pub mod transform;
pub mod twisting;

pub use diagram::{DiagramFamily, Partition};
pub use equivalence::Equivalence;
pub use matrix::Matrix;
pub use monoid::{CommMonoid, MElem};
pub use product::{TwistedElement, TwistedProduct};
pub use report::{VerificationReport, Witness};
pub use semigroup::{FiniteSemigroup, GreenStructure, GroupSummary};
pub use transform::PartialMap;
pub use twisting::Twisting;
