//! Monoidal categories graded by partial commutative monoids.
//!
//! The library is organised around a tower of structures:
//!
//! - [`pcm`]: partial commutative monoids (the grading algebras), their
//!   extension preorder, joins, tops, complements, and law checking.
//! - [`freecat`]: the free graded monoidal category over a graded signature,
//!   with slice-list terms, grade-aware exchange rewriting, and decidable
//!   equality at each grade.
//! - [`globalcat`]: assembling the per-grade categories into a single one via
//!   joins, upper-bounding operations, or the directed quotient.
//! - [`finmodel`]: explicit finite graded models as tables, exhaustive axiom
//!   verification, graded functors, and the effectful-category translations.
//! - [`convolution`]: the promonoidal encoding of a PCM, Day convolution of
//!   finite copresheaves, and the lax-monoidal presentation of graded models.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so the whole library is safe to use from multiple
//! threads without synchronisation.

pub mod acceptance;
pub mod convolution;
pub mod fixtures;
pub mod freecat;
pub mod finmodel;
pub mod globalcat;
pub mod pcm;
pub mod rational;
pub mod report;
pub mod rng;
pub mod unionfind;

pub use pcm::{Grade, Pcm};
pub use rational::Rational;
pub use report::Report;
