//! The text-based structure file format.
//!
//! Scalars are serialized as strings — canonical `a/b` rationals or decimal
//! residues mod `p` — so fixtures are diffable and the save→load round trip
//! is bit-exact.  A structure file stores the multiplication as full
//! 3-index structure constants `c[i][j][k]` (meaning `e_i·e_j = Σ_k
//! c[i][j][k]·e_k`) and the comultiplication as `d[i][j][k]` (meaning
//! `δ(e_i) = Σ_{j,k} d[i][j][k]·e_j⊗e_k`).

use serde::{Deserialize, Serialize};

use whq_core::exactlin::{FieldSpec, Mor};
use whq_core::hopfmod::HopfModule;
use whq_core::structures::{Comonoid, UnitalMagma};
use whq_core::whq::{Braiding, WeakHopfQuasigroup};

use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FieldDto {
    Q,
    Fp(u64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BraidingDto {
    pub c: Vec<Vec<String>>,
    pub c_inv: Vec<Vec<String>>,
}

/// A weak Hopf quasigroup candidate on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureFile {
    pub field: FieldDto,
    pub dim: usize,
    /// Coordinates of the unit η(1).
    pub unit: Vec<String>,
    /// `mul[i][j][k]`: coefficient of `e_k` in `e_i·e_j`.
    pub mul: Vec<Vec<Vec<String>>>,
    /// `counit[i] = ε(e_i)`.
    pub counit: Vec<String>,
    /// `comul[i][j][k]`: coefficient of `e_j⊗e_k` in `δ(e_i)`.
    pub comul: Vec<Vec<Vec<String>>>,
    /// `antipode[i][j]`: coefficient of `e_i` in `λ(e_j)` (rows × columns).
    pub antipode: Vec<Vec<String>>,
    /// Optional braiding pair on `H⊗H` (`dim²×dim²` matrices); the default
    /// is the symmetric swap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<BraidingDto>,
}

/// A Hopf module on disk: dense action and coaction matrices over the same
/// field as its structure file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub field: FieldDto,
    pub dim: usize,
    /// `action`: `dim × (dim·n)` matrix of `φ`.
    pub action: Vec<Vec<String>>,
    /// `coaction`: `(dim·n) × dim` matrix of `ρ`.
    pub coaction: Vec<Vec<String>>,
}

pub fn field_of(dto: &FieldDto) -> Result<FieldSpec, String> {
    match dto {
        FieldDto::Q => Ok(FieldSpec::Q),
        FieldDto::Fp(p) => FieldSpec::fp(*p).map_err(|e| e.to_string()),
    }
}

fn field_dto(f: FieldSpec) -> FieldDto {
    match f {
        FieldSpec::Q => FieldDto::Q,
        FieldSpec::Fp(p) => FieldDto::Fp(p),
    }
}

fn parse_matrix(
    field: FieldSpec,
    rows: &[Vec<String>],
    dst: usize,
    src: usize,
    what: &str,
) -> Result<Mor, String> {
    if rows.len() != dst || rows.iter().any(|r| r.len() != src) {
        return Err(format!("{what}: expected a {dst}x{src} matrix"));
    }
    let mut entries = Vec::with_capacity(dst * src);
    for row in rows {
        for cell in row {
            entries.push(field.parse(cell).map_err(|e| format!("{what}: {e}"))?);
        }
    }
    Mor::from_entries(field, dst, src, entries).map_err(|e| format!("{what}: {e}"))
}

fn render_matrix(m: &Mor) -> Vec<Vec<String>> {
    (0..m.dst())
        .map(|i| (0..m.src()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

impl StructureFile {
    /// Decode into an (unchecked) weak Hopf quasigroup; shape errors and
    /// malformed scalars are reported, law checking is the caller's job.
    pub fn to_whq(&self) -> Result<WeakHopfQuasigroup, String> {
        let field = field_of(&self.field)?;
        let n = self.dim;
        if self.unit.len() != n {
            return Err(format!("unit: expected {n} coordinates"));
        }
        let mut unit = Mor::zero(field, n, 1);
        for (i, cell) in self.unit.iter().enumerate() {
            let v = field.parse(cell).map_err(|e| format!("unit: {e}"))?;
            unit.set(i, 0, v);
        }
        let shape3 = |t: &Vec<Vec<Vec<String>>>, what: &str| -> Result<(), String> {
            if t.len() != n || t.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n)) {
                Err(format!("{what}: expected {n}x{n}x{n} structure constants"))
            } else {
                Ok(())
            }
        };
        shape3(&self.mul, "mul")?;
        let mut mul = Mor::zero(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = field
                        .parse(&self.mul[i][j][k])
                        .map_err(|e| format!("mul[{i}][{j}][{k}]: {e}"))?;
                    mul.set(k, i * n + j, v);
                }
            }
        }
        if self.counit.len() != n {
            return Err(format!("counit: expected {n} coordinates"));
        }
        let mut counit = Mor::zero(field, 1, n);
        for (i, cell) in self.counit.iter().enumerate() {
            let v = field.parse(cell).map_err(|e| format!("counit: {e}"))?;
            counit.set(0, i, v);
        }
        shape3(&self.comul, "comul")?;
        let mut comul = Mor::zero(field, n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = field
                        .parse(&self.comul[i][j][k])
                        .map_err(|e| format!("comul[{i}][{j}][{k}]: {e}"))?;
                    comul.set(j * n + k, i, v);
                }
            }
        }
        let antipode = parse_matrix(field, &self.antipode, n, n, "antipode")?;
        let braiding = match &self.braiding {
            None => None,
            Some(b) => Some(Braiding {
                c: parse_matrix(field, &b.c, n * n, n * n, "braiding.c")?,
                c_inv: parse_matrix(field, &b.c_inv, n * n, n * n, "braiding.c_inv")?,
            }),
        };
        WeakHopfQuasigroup::new_unchecked(
            UnitalMagma::new_unchecked(n, unit, mul),
            Comonoid::new_unchecked(n, counit, comul),
            antipode,
            braiding,
        )
        .map_err(|e| e.to_string())
    }

    /// Encode a weak Hopf quasigroup.  The braiding is stored only when it
    /// differs from the default swap.
    pub fn from_whq(h: &WeakHopfQuasigroup) -> Self {
        let n = h.dim();
        let field = h.field();
        let unit = (0..n).map(|i| h.unit().at(i, 0).to_string()).collect();
        let mul = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| h.mul().at(k, i * n + j).to_string())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let counit = (0..n).map(|i| h.counit().at(0, i).to_string()).collect();
        let comul = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| h.comul().at(j * n + k, i).to_string())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let antipode = render_matrix(h.antipode());
        let default = Braiding::swap(field, n);
        let braiding = if h.braiding() == &default {
            None
        } else {
            Some(BraidingDto {
                c: render_matrix(&h.braiding().c),
                c_inv: render_matrix(&h.braiding().c_inv),
            })
        };
        StructureFile {
            field: field_dto(field),
            dim: n,
            unit,
            mul,
            counit,
            comul,
            antipode,
            braiding,
        }
    }
}

impl ModuleFile {
    pub fn to_module(
        &self,
        h: &Arc<WeakHopfQuasigroup>,
    ) -> Result<HopfModule, String> {
        let field = field_of(&self.field)?;
        if field != h.field() {
            return Err("module and structure use different fields".into());
        }
        let (m, n) = (self.dim, h.dim());
        let action = parse_matrix(field, &self.action, m, m * n, "action")?;
        let coaction = parse_matrix(field, &self.coaction, m * n, m, "coaction")?;
        HopfModule::new_unchecked(Arc::clone(h), m, action, coaction).map_err(|e| e.to_string())
    }

    pub fn from_module(m: &HopfModule) -> Self {
        ModuleFile {
            field: field_dto(m.h().field()),
            dim: m.dim(),
            action: render_matrix(m.action()),
            coaction: render_matrix(m.coaction()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use whq_core::generators::{group_algebra, CayleyTable};

    #[test]
    fn structure_round_trip_is_bit_exact() {
        let h = group_algebra(&CayleyTable::cyclic(3), FieldSpec::Q).unwrap();
        let doc = StructureFile::from_whq(&h);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back: StructureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
        let h2 = back.to_whq().unwrap();
        assert_eq!(h2, h);
    }

    #[test]
    fn fp_field_round_trips() {
        let f = FieldSpec::fp(7).unwrap();
        let h = group_algebra(&CayleyTable::cyclic(2), f).unwrap();
        let doc = StructureFile::from_whq(&h);
        assert_eq!(doc.field, FieldDto::Fp(7));
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back: StructureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_whq().unwrap(), h);
    }

    #[test]
    fn malformed_scalars_are_rejected() {
        let h = group_algebra(&CayleyTable::cyclic(2), FieldSpec::Q).unwrap();
        let mut doc = StructureFile::from_whq(&h);
        doc.unit[0] = "2/4".into();
        assert!(doc.to_whq().is_err());
    }
}
