//! Staged evaluation of tensor composites.
//!
//! The laws verified by this crate are equalities of composites such as
//! `(μ⊗μ)∘(H⊗c⊗H)∘(δ⊗δ)`, whose intermediate spaces reach `H⊗H⊗H⊗H`.
//! Materializing such composites as dense matrices is hopeless already at
//! modest dimensions, but checking an equality of linear maps only needs
//! their values on source basis vectors.  A [`Composite`] is a chain of
//! stages, each of the form `id_pre ⊗ f ⊗ id_post` for a dense [`Mor`]
//! `f`; it is applied column by column, with columns kept as sparse
//! vectors.  `Mor` itself stays dense — the sparsity lives only in this
//! transient evaluation.

use crate::report::Witness;

use super::mor::Mor;
use super::scalar::{FieldSpec, Scalar};

struct Stage<'a> {
    f: &'a Mor,
    post: usize,
}

/// A composite `stage_k ∘ … ∘ stage_1` of tensor-shaped stages, borrowing
/// the stage morphisms.
pub struct Composite<'a> {
    field: FieldSpec,
    src: usize,
    cur: usize,
    stages: Vec<Stage<'a>>,
}

/// Sparse column: strictly increasing indices, no explicit zeros.
type SparseCol = Vec<(usize, Scalar)>;

impl<'a> Composite<'a> {
    pub fn new(field: FieldSpec, src: usize) -> Self {
        Composite {
            field,
            src,
            cur: src,
            stages: Vec::new(),
        }
    }

    /// Append the stage `id_pre ⊗ f ⊗ id_post`.  Panics if the stage does
    /// not accept the current target dimension — composite shapes are fixed
    /// by the callers' formulas, so a mismatch is a bug, not input error.
    pub fn stage(mut self, pre: usize, f: &'a Mor, post: usize) -> Self {
        assert_eq!(
            pre * f.src() * post,
            self.cur,
            "stage id_{pre} x ({}x{}) x id_{post} does not accept dimension {}",
            f.dst(),
            f.src(),
            self.cur
        );
        assert_eq!(f.field(), self.field, "stage over a different field");
        self.cur = pre * f.dst() * post;
        self.stages.push(Stage { f, post });
        self
    }

    /// Append a plain morphism as a stage.
    pub fn then(self, f: &'a Mor) -> Self {
        self.stage(1, f, 1)
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.cur
    }

    fn column_tables(&self) -> Vec<Vec<Vec<(usize, Scalar)>>> {
        self.stages
            .iter()
            .map(|s| {
                (0..s.f.src())
                    .map(|j| {
                        (0..s.f.dst())
                            .filter_map(|i| {
                                let v = s.f.at(i, j);
                                if v.is_zero() {
                                    None
                                } else {
                                    Some((i, v.clone()))
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn apply(&self, tables: &[Vec<Vec<(usize, Scalar)>>], col: usize) -> SparseCol {
        let field = self.field;
        let mut v: SparseCol = vec![(col, field.one())];
        for (s, table) in self.stages.iter().zip(tables) {
            let in_block = s.f.src() * s.post;
            let out_block = s.f.dst() * s.post;
            let mut next: Vec<(usize, Scalar)> = Vec::new();
            for (idx, coeff) in &v {
                let x = idx / in_block;
                let rem = idx % in_block;
                let y = rem / s.post;
                let z = rem % s.post;
                for (w, fv) in &table[y] {
                    next.push((x * out_block + w * s.post + z, field.mul(fv, coeff)));
                }
            }
            next.sort_by_key(|(i, _)| *i);
            // Merge duplicate indices and drop zeros.
            let mut merged: SparseCol = Vec::with_capacity(next.len());
            for (i, val) in next {
                match merged.last_mut() {
                    Some((li, lv)) if *li == i => *lv = field.add(lv, &val),
                    _ => merged.push((i, val)),
                }
            }
            merged.retain(|(_, val)| !val.is_zero());
            v = merged;
        }
        v
    }

    /// Evaluate on the `col`-th source basis vector, densely.
    pub fn eval_basis(&self, col: usize) -> Vec<Scalar> {
        let tables = self.column_tables();
        let sparse = self.apply(&tables, col);
        let mut out = vec![self.field.zero(); self.cur];
        for (i, v) in sparse {
            out[i] = v;
        }
        out
    }

    /// Materialize the composite as a dense morphism.
    pub fn materialize(&self) -> Mor {
        let tables = self.column_tables();
        let mut out = Mor::zero(self.field, self.cur, self.src);
        for j in 0..self.src {
            for (i, v) in self.apply(&tables, j) {
                out.set(i, j, v);
            }
        }
        out
    }

    /// True iff the composite is the zero map.
    pub fn is_zero(&self) -> bool {
        let tables = self.column_tables();
        (0..self.src).all(|j| self.apply(&tables, j).is_empty())
    }

    /// True iff the composite is the identity, checked column by column
    /// without materializing anything dense.
    pub fn is_identity(&self) -> bool {
        if self.src != self.cur {
            return false;
        }
        let tables = self.column_tables();
        (0..self.src).all(|j| {
            let col = self.apply(&tables, j);
            col.len() == 1 && col[0].0 == j && col[0].1.is_one()
        })
    }

    /// Exact equality with another composite, checked basis column by basis
    /// column.  Returns the first differing entry `(row, col)` in
    /// deterministic order, or `None` when the composites agree.
    pub fn agrees(&self, other: &Composite) -> Option<Witness> {
        assert_eq!(self.src, other.src, "parallel composites expected");
        assert_eq!(self.cur, other.cur, "parallel composites expected");
        let ta = self.column_tables();
        let tb = other.column_tables();
        for j in 0..self.src {
            let a = self.apply(&ta, j);
            let b = other.apply(&tb, j);
            if let Some(row) = first_difference(&a, &b) {
                return Some(Witness { row, col: j });
            }
        }
        None
    }
}

fn first_difference(a: &SparseCol, b: &SparseCol) -> Option<usize> {
    let (mut ia, mut ib) = (0usize, 0usize);
    loop {
        match (a.get(ia), b.get(ib)) {
            (None, None) => return None,
            (Some((i, _)), None) => return Some(*i),
            (None, Some(i2)) => return Some(i2.0),
            (Some((i, va)), Some((i2, vb))) => {
                if i < i2 {
                    return Some(*i);
                }
                if i2 < i {
                    return Some(*i2);
                }
                if va != vb {
                    return Some(*i);
                }
                ia += 1;
                ib += 1;
            }
        }
    }
}
