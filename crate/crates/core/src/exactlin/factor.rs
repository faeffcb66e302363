//! Split idempotents, equalizers and coequalizers.
//!
//! Splittings are unique only up to isomorphism; a single representative is
//! fixed by the deterministic pivot rule of the eliminations below.

use crate::error::{Error, Result};

use super::mor::Mor;
use super::solve::{pivot_columns, rref, solve_right};

/// A chosen splitting `e = i ∘ p`, `p ∘ i = id` of an idempotent on the
/// ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIdempotent {
    pub ambient: usize,
    pub rank: usize,
    /// Projection `ambient → rank`.
    pub p: Mor,
    /// Inclusion `rank → ambient`.
    pub i: Mor,
}

/// Split an idempotent `e` through its image.  The inclusion's columns are
/// the pivot columns of `e` (a column-space basis in first-nonzero-pivot
/// order), so the result is reproducible.
pub fn split_idempotent(e: &Mor) -> Result<SplitIdempotent> {
    if e.src() != e.dst() {
        return Err(Error::DimMismatch {
            op: "split_idempotent",
            lhs_dst: e.dst(),
            lhs_src: e.src(),
            rhs_dst: e.src(),
            rhs_src: e.dst(),
        });
    }
    if &e.compose(e)? != e {
        return Err(Error::NotIdempotent);
    }
    let pivots = pivot_columns(e);
    let i = e.select_columns(&pivots);
    // Columns of e lie in the column space of i, so this solve succeeds.
    let p = solve_right(&i, e).expect("image basis spans the idempotent's columns");
    debug_assert_eq!(&i.compose(&p).expect("dims"), e);
    debug_assert!(p.compose(&i).expect("dims").is_identity());
    Ok(SplitIdempotent {
        ambient: e.src(),
        rank: pivots.len(),
        p,
        i,
    })
}

/// The equalizer of a parallel pair, presented as the kernel inclusion of
/// `f − g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualizerDatum {
    pub dim: usize,
    /// Inclusion `dim → f.src`.
    pub include: Mor,
}

pub fn equalizer(f: &Mor, g: &Mor) -> Result<EqualizerDatum> {
    let diff = f.sub(g)?;
    let include = super::solve::kernel_basis(&diff);
    Ok(EqualizerDatum {
        dim: include.src(),
        include,
    })
}

/// The coequalizer of a parallel pair: the cokernel projection of `f − g`,
/// with quotient coordinates the non-pivot coordinates of the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoequalizerDatum {
    /// Dimension of the object being quotiented (`f.dst`).
    pub src: usize,
    pub quotient_dim: usize,
    /// Surjection `src → quotient_dim`.
    pub n: Mor,
    /// A section of `n` (`n ∘ section = id`), used to factor maps through
    /// the quotient.
    section: Mor,
}

pub fn coequalizer(f: &Mor, g: &Mor) -> Result<CoequalizerDatum> {
    let diff = f.sub(g)?;
    let field = diff.field();
    let ambient = diff.dst();
    // Row-reduce the transpose: its rows span the image of f − g.
    let mut rows = diff.transpose().rows();
    let pivots = rref(field, &mut rows, ambient);
    let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
    let qdim = free.len();
    let mut n = Mor::zero(field, qdim, ambient);
    let mut section = Mor::zero(field, ambient, qdim);
    for (k, &fc) in free.iter().enumerate() {
        n.set(k, fc, field.one());
        section.set(fc, k, field.one());
    }
    // Each pivot coordinate is congruent, modulo the image, to minus the
    // free part of its echelon row.
    for (r, &pc) in pivots.iter().enumerate() {
        for (k, &fc) in free.iter().enumerate() {
            let v = &rows[r][fc];
            if !v.is_zero() {
                n.set(k, pc, field.neg(v));
            }
        }
    }
    debug_assert!(n.compose(&diff).expect("dims").is_zero());
    Ok(CoequalizerDatum {
        src: ambient,
        quotient_dim: qdim,
        n,
        section,
    })
}

impl CoequalizerDatum {
    pub fn section(&self) -> &Mor {
        &self.section
    }

    /// Factor `t` through the quotient: the unique `t'` with `t' ∘ n = t`,
    /// re-verified after solving.  Fails when `t` does not coequalize the
    /// defining pair.
    pub fn factor_through(&self, t: &Mor) -> Result<Mor> {
        let t1 = t.compose(&self.section)?;
        if t1.compose(&self.n)? == *t {
            Ok(t1)
        } else {
            Err(Error::NoSolution)
        }
    }
}
