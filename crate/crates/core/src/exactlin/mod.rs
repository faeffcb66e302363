//! Exact linear algebra over ℚ and 𝔽_p.
//!
//! Everything downstream is built from one carrier type: [`Mor`], an exact
//! matrix with explicit source and target dimensions.  The conventions fixed
//! here and relied on everywhere else are:
//!
//! * composition `g.compose(&f)` is the matrix product `g∘f`, defined iff
//!   `f.dst == g.src`;
//! * tensor products use row-major basis ordering with the **left factor
//!   major**: the basis vector `e_a ⊗ e_b` of a tensor of dimensions
//!   `m ⊗ n` has index `a·n + b`;
//! * all eliminations pick pivots deterministically (leftmost column,
//!   topmost row), so split idempotents, kernels and quotients are
//!   reproducible across runs.
//!
//! Dimension 0 is legal everywhere; empty matrices compose as expected.

mod factor;
mod mor;
mod pipeline;
mod scalar;
mod solve;

pub use factor::{
    coequalizer, equalizer, split_idempotent, CoequalizerDatum, EqualizerDatum, SplitIdempotent,
};
pub use mor::Mor;
pub use pipeline::Composite;
pub use scalar::{FieldSpec, Scalar};
pub use solve::{inverse, kernel_basis, rank, right_inverse, solve_left, solve_right};
