//! `Mor`: an exact matrix with typed source and target dimensions.

use std::fmt;

use crate::error::{Error, Result};

use super::scalar::{FieldSpec, Scalar};

/// A linear map `src → dst`, stored as a dense `dst × src` matrix in
/// row-major order.  Equality is bit-exact equality of field, dimensions
/// and entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Mor {
    field: FieldSpec,
    src: usize,
    dst: usize,
    entries: Vec<Scalar>,
}

impl Mor {
    /// Build from explicit entries (`dst × src`, row-major).  Every entry
    /// must belong to `field`.
    pub fn from_entries(
        field: FieldSpec,
        dst: usize,
        src: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        if entries.len() != dst * src {
            return Err(Error::DimMismatch {
                op: "from_entries",
                lhs_dst: dst,
                lhs_src: src,
                rhs_dst: entries.len(),
                rhs_src: 1,
            });
        }
        if !entries.iter().all(|s| field.contains(s)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Mor {
            field,
            src,
            dst,
            entries,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        dst: usize,
        src: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(dst * src);
        for i in 0..dst {
            for j in 0..src {
                let s = f(i, j);
                debug_assert!(field.contains(&s));
                entries.push(s);
            }
        }
        Mor {
            field,
            src,
            dst,
            entries,
        }
    }

    pub fn zero(field: FieldSpec, dst: usize, src: usize) -> Self {
        Mor {
            field,
            src,
            dst,
            entries: vec![field.zero(); dst * src],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| {
            if i == j {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// The braiding of the symmetric monoidal structure: the permutation
    /// `m·n → n·m` sending `e_a ⊗ e_b` to `e_b ⊗ e_a`.
    pub fn swap(field: FieldSpec, m: usize, n: usize) -> Self {
        let mut out = Self::zero(field, n * m, m * n);
        for a in 0..m {
            for b in 0..n {
                out.set(b * m + a, a * n + b, field.one());
            }
        }
        out
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.src + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.src + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst
            && (0..self.dst).all(|i| {
                (0..self.src).all(|j| {
                    let e = self.at(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    fn same_field(&self, other: &Mor) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Composition `self ∘ f`, defined iff `f.dst == self.src`.
    pub fn compose(&self, f: &Mor) -> Result<Mor> {
        self.same_field(f)?;
        if f.dst != self.src {
            return Err(Error::DimMismatch {
                op: "compose",
                lhs_dst: self.dst,
                lhs_src: self.src,
                rhs_dst: f.dst,
                rhs_src: f.src,
            });
        }
        let fld = self.field;
        let mut out = Mor::zero(fld, self.dst, f.src);
        for i in 0..self.dst {
            for k in 0..self.src {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..f.src {
                    let b = f.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j);
                    let v = fld.add(cur, &fld.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, left factor major: entry
    /// `(i_f·g.dst + i_g, j_f·g.src + j_g) = f[i_f,j_f] · g[i_g,j_g]`.
    pub fn kron(&self, g: &Mor) -> Result<Mor> {
        self.same_field(g)?;
        let fld = self.field;
        let mut out = Mor::zero(fld, self.dst * g.dst, self.src * g.src);
        for i_f in 0..self.dst {
            for j_f in 0..self.src {
                let a = self.at(i_f, j_f);
                if a.is_zero() {
                    continue;
                }
                for i_g in 0..g.dst {
                    for j_g in 0..g.src {
                        let b = g.at(i_g, j_g);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i_f * g.dst + i_g, j_f * g.src + j_g, fld.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mor) -> Result<Mor> {
        self.same_field(other)?;
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::DimMismatch {
                op: "add",
                lhs_dst: self.dst,
                lhs_src: self.src,
                rhs_dst: other.dst,
                rhs_src: other.src,
            });
        }
        let fld = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| fld.add(a, b))
            .collect();
        Ok(Mor {
            field: fld,
            src: self.src,
            dst: self.dst,
            entries,
        })
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor> {
        self.same_field(other)?;
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::DimMismatch {
                op: "sub",
                lhs_dst: self.dst,
                lhs_src: self.src,
                rhs_dst: other.dst,
                rhs_src: other.src,
            });
        }
        let fld = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| fld.sub(a, b))
            .collect();
        Ok(Mor {
            field: fld,
            src: self.src,
            dst: self.dst,
            entries,
        })
    }

    pub fn transpose(&self) -> Mor {
        Mor::from_fn(self.field, self.src, self.dst, |i, j| self.at(j, i).clone())
    }

    /// Rows as owned vectors; handy for elimination routines.
    pub(crate) fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dst)
            .map(|i| (0..self.src).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    /// The submatrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Mor {
        Mor::from_fn(self.field, self.dst, cols.len(), |i, j| {
            self.at(i, cols[j]).clone()
        })
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mor {}x{} over {}", self.dst, self.src, self.field)?;
        for i in 0..self.dst {
            let row: Vec<String> = (0..self.src).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
