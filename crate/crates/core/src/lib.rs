//! Exact computer algebra for weak Hopf quasigroups in finite-dimensional
//! vector spaces over ℚ and 𝔽_p.
//!
//! A weak Hopf quasigroup is a unital magma that is simultaneously a
//! comonoid, equipped with an antipode subject to axioms (a1)–(a4-7); the
//! notion degenerates to a weak Hopf algebra when the product is associative
//! and to a Hopf quasigroup when the target projection Π^L is η∘ε.  This
//! crate represents every structure map as an exact matrix and certifies,
//! by exact linear algebra alone:
//!
//! * the defining axioms and a suite of derived identities,
//! * the base objects H_L/H_R with their monoid and Frobenius-separable
//!   structure,
//! * right-right Hopf modules, coinvariants, the fundamental theorem
//!   M ≅ M^{coH}×H,
//! * the equivalence between strong Hopf modules and right H_L-modules
//!   (induction and coinvariants functors, unit, counit, triangle laws).
//!
//! All verdicts are exact: there is no floating point anywhere, and every
//! elimination uses a deterministic pivot rule so that derived objects are
//! reproducible bit for bit.

pub mod error;
pub mod exactlin;
pub mod generators;
pub mod hopfmod;
pub mod modcat;
pub mod report;
pub mod structures;
pub mod whq;

pub use error::Error;
pub use exactlin::{
    coequalizer, equalizer, split_idempotent, CoequalizerDatum, Composite, EqualizerDatum,
    FieldSpec, Mor, Scalar, SplitIdempotent,
};
pub use report::{LawCheck, LawReport, Witness};
