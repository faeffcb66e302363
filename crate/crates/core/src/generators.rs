//! Factories for concrete instances: group algebras, inverse-property loop
//! algebras (with Chein doubling as the stock source of nonassociative
//! examples), groupoid algebras, tensor-composite candidates, and the
//! module fixtures built on them.
//!
//! Every constructor post-validates its output through the axiom checker
//! and never hands back an unvalidated structure.  The one deliberate
//! exception is [`tensor_whq`]: whether a tensor composite of two weak Hopf
//! quasigroups is again one is decided empirically, so the candidate is
//! returned together with its axiom report and callers must branch on it.

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mor};
use crate::hopfmod::HopfModule;
use crate::modcat::RightHLModule;
use crate::report::LawReport;
use crate::structures::{tensor_comonoid, tensor_magma, Comonoid, UnitalMagma};
use crate::whq::{BaseObject, WeakHopfQuasigroup};

use std::sync::Arc;

/// A finite multiplication table: rows and columns are permutations (a
/// quasigroup) and a two-sided identity exists (a loop).  The inverse map
/// is recorded when every element has a two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Option<Vec<usize>>,
}

impl CayleyTable {
    /// Validate a table: latin property, in-range entries, a two-sided
    /// identity.  Inverses are derived when present.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let k = table.len();
        for row in &table {
            if row.len() != k {
                return Err(Error::InvalidTable("table is not square".into()));
            }
            if row.iter().any(|&v| v >= k) {
                return Err(Error::InvalidTable("entry out of range".into()));
            }
        }
        for i in 0..k {
            let mut seen_row = vec![false; k];
            let mut seen_col = vec![false; k];
            for j in 0..k {
                if seen_row[table[i][j]] {
                    return Err(Error::InvalidTable(format!("row {i} repeats an entry")));
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(Error::InvalidTable(format!("column {i} repeats an entry")));
                }
                seen_col[table[j][i]] = true;
            }
        }
        let identity = (0..k)
            .find(|&e| (0..k).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        let mut inverse = Vec::with_capacity(k);
        let mut total = true;
        for x in 0..k {
            match (0..k).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => inverse.push(y),
                None => {
                    total = false;
                    break;
                }
            }
        }
        Ok(CayleyTable {
            order: k,
            table,
            identity,
            inverse: if total { Some(inverse) } else { None },
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self) -> Option<&[usize]> {
        self.inverse.as_deref()
    }

    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let k = self.order;
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    if self.table[self.table[i][j]][l] != self.table[i][self.table[j][l]] {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Exhaustive inverse-property check: the first `(x, y)` violating
    /// `x^{-1}(xy) = y = (yx)x^{-1}`, if any.  Requires total inverses.
    pub fn inverse_property_witness(&self) -> Result<Option<(usize, usize)>> {
        let inv = match &self.inverse {
            Some(v) => v,
            None => {
                let x = (0..self.order)
                    .find(|&x| {
                        !(0..self.order)
                            .any(|y| self.table[x][y] == self.identity && self.table[y][x] == self.identity)
                    })
                    .expect("an element without a two-sided inverse exists");
                return Err(Error::NoInverse(x));
            }
        };
        for x in 0..self.order {
            for y in 0..self.order {
                if self.table[inv[x]][self.table[x][y]] != y
                    || self.table[self.table[y][x]][inv[x]] != y
                {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }

    /// The cyclic group of order `k`.
    pub fn cyclic(k: usize) -> Self {
        let table = (0..k)
            .map(|i| (0..k).map(|j| (i + j) % k).collect())
            .collect();
        Self::new(table).expect("cyclic tables are groups")
    }

    /// The symmetric group on `n` letters, elements ordered
    /// lexicographically as permutation words, identity first.
    pub fn symmetric_group(n: usize) -> Self {
        assert!(n <= 5, "factorial table would be enormous");
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..n)
                        .filter(|v| !p.contains(v))
                        .map(|v| {
                            let mut q = p.clone();
                            q.push(v);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        perms.sort();
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("permutation present");
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&(0..n).map(|x| p[q[x]]).collect()))
                    .collect()
            })
            .collect();
        Self::new(table).expect("symmetric group tables are groups")
    }

    /// Direct product, indexed with the left factor major so that the
    /// result's group algebra matches the tensor of the factors' algebras
    /// entry for entry.
    pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> Self {
        let (ka, kb) = (a.order, b.order);
        let table = (0..ka * kb)
            .map(|x| {
                (0..ka * kb)
                    .map(|y| a.table[x / kb][y / kb] * kb + b.table[x % kb][y % kb])
                    .collect()
            })
            .collect();
        Self::new(table).expect("product of loops is a loop")
    }
}

/// The Chein double of a group `G`: the order-`2|G|` loop on `G ∪ Gu` with
/// `g·h = gh`, `g·(hu) = (hg)u`, `(gu)·h = (gh^{-1})u`, `(gu)·(hu) = h^{-1}g`.
/// The result always satisfies the inverse property and is nonassociative
/// exactly when `G` is nonabelian.
pub fn chein_double(g: &CayleyTable) -> Result<CayleyTable> {
    if let Some((i, j, k)) = g.associativity_witness() {
        return Err(Error::NotAssociative(i, j, k));
    }
    let inv = g
        .inverse()
        .ok_or(Error::NoInverse(0))?
        .to_vec();
    let n = g.order();
    let mut t = vec![vec![0usize; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            t[i][j] = g.mul(i, j);
            t[i][n + j] = n + g.mul(j, i);
            t[n + i][j] = n + g.mul(i, inv[j]);
            t[n + i][n + j] = g.mul(inv[j], i);
        }
    }
    let table = CayleyTable::new(t)?;
    debug_assert_eq!(table.identity(), g.identity());
    if let Some((x, y)) = table.inverse_property_witness()? {
        return Err(Error::NotIPLoop(x, y));
    }
    Ok(table)
}

/// A finite groupoid presented by arrows with explicit source/target, a
/// partial composition table, identities and inverses all validated at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    n_objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    /// `compose[i][j] = i∘j`, defined iff `source[i] == target[j]`.
    compose: Vec<Vec<Option<usize>>>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn new(
        n_objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let m = source.len();
        let bad = |msg: &str| Error::InvalidGroupoid(msg.into());
        if target.len() != m || compose.len() != m || compose.iter().any(|r| r.len() != m) {
            return Err(bad("inconsistent arrow data"));
        }
        if source.iter().chain(&target).any(|&o| o >= n_objects) {
            return Err(bad("object index out of range"));
        }
        for i in 0..m {
            for j in 0..m {
                match compose[i][j] {
                    Some(k) => {
                        if source[i] != target[j] {
                            return Err(bad("composition defined for non-composable arrows"));
                        }
                        if k >= m || source[k] != source[j] || target[k] != target[i] {
                            return Err(bad("composite has wrong endpoints"));
                        }
                    }
                    None => {
                        if source[i] == target[j] {
                            return Err(bad("composition missing for composable arrows"));
                        }
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if let (Some(ij), Some(jk)) = (compose[i][j], compose[j][k]) {
                        if compose[ij][k] != compose[i][jk] {
                            return Err(bad("composition is not associative"));
                        }
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(n_objects);
        for a in 0..n_objects {
            let id = (0..m)
                .find(|&e| {
                    source[e] == a
                        && target[e] == a
                        && (0..m).all(|f| {
                            (source[f] != a || compose[f][e] == Some(f))
                                && (target[f] != a || compose[e][f] == Some(f))
                        })
                })
                .ok_or_else(|| bad("an object has no identity arrow"))?;
            identities.push(id);
        }
        let mut inverses = Vec::with_capacity(m);
        for f in 0..m {
            let g = (0..m)
                .find(|&g| {
                    compose[g][f] == Some(identities[source[f]])
                        && compose[f][g] == Some(identities[target[f]])
                })
                .ok_or_else(|| bad("an arrow has no inverse"))?;
            inverses.push(g);
        }
        Ok(FiniteGroupoid {
            n_objects,
            source,
            target,
            compose,
            identities,
            inverses,
        })
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_arrows(&self) -> usize {
        self.source.len()
    }

    /// The discrete groupoid on `k` objects: identity arrows only.
    pub fn discrete(k: usize) -> Self {
        let compose = (0..k)
            .map(|i| (0..k).map(|j| if i == j { Some(i) } else { None }).collect())
            .collect();
        Self::new(k, (0..k).collect(), (0..k).collect(), compose)
            .expect("discrete data is a groupoid")
    }

    /// The pair groupoid on `k` objects: one arrow `i → j` for every pair,
    /// indexed `i·k + j`.
    pub fn pair(k: usize) -> Self {
        let m = k * k;
        let source: Vec<usize> = (0..m).map(|a| a / k).collect();
        let target: Vec<usize> = (0..m).map(|a| a % k).collect();
        let compose = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        if source[x] == target[y] {
                            Some(source[y] * k + target[x])
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(k, source, target, compose).expect("pair data is a groupoid")
    }

    /// A group viewed as a one-object groupoid.
    pub fn one_object(g: &CayleyTable) -> Result<Self> {
        if let Some((i, j, k)) = g.associativity_witness() {
            return Err(Error::NotAssociative(i, j, k));
        }
        let m = g.order();
        let compose = (0..m)
            .map(|i| (0..m).map(|j| Some(g.mul(i, j))).collect())
            .collect();
        Self::new(1, vec![0; m], vec![0; m], compose)
    }
}

fn grouplike_comonoid(field: FieldSpec, n: usize) -> Comonoid {
    let counit = Mor::from_fn(field, 1, n, |_, _| field.one());
    let comul = Mor::from_fn(field, n * n, n, |jk, i| {
        if jk == i * n + i {
            field.one()
        } else {
            field.zero()
        }
    });
    Comonoid::new(n, counit, comul).expect("grouplike comonoid laws hold")
}

fn table_magma(field: FieldSpec, t: &CayleyTable) -> UnitalMagma {
    let n = t.order();
    let mut unit = Mor::zero(field, n, 1);
    unit.set(t.identity(), 0, field.one());
    let mul = Mor::from_fn(field, n, n * n, |k, ij| {
        if t.mul(ij / n, ij % n) == k {
            field.one()
        } else {
            field.zero()
        }
    });
    UnitalMagma::new(n, unit, mul).expect("loop tables satisfy the unit law")
}

fn permutation_mor(field: FieldSpec, perm: &[usize]) -> Mor {
    let n = perm.len();
    let mut m = Mor::zero(field, n, n);
    for (j, &i) in perm.iter().enumerate() {
        m.set(i, j, field.one());
    }
    m
}

/// The group algebra of an associative table with two-sided inverses:
/// basis the elements, grouplike coproduct, antipode the inverse map.
pub fn group_algebra(t: &CayleyTable, field: FieldSpec) -> Result<WeakHopfQuasigroup> {
    if let Some((i, j, k)) = t.associativity_witness() {
        return Err(Error::NotAssociative(i, j, k));
    }
    let inv = match t.inverse() {
        Some(v) => v.to_vec(),
        None => {
            let x = (0..t.order())
                .find(|&x| {
                    !(0..t.order())
                        .any(|y| t.mul(x, y) == t.identity() && t.mul(y, x) == t.identity())
                })
                .expect("some element lacks an inverse");
            return Err(Error::NoInverse(x));
        }
    };
    WeakHopfQuasigroup::new(
        table_magma(field, t),
        grouplike_comonoid(field, t.order()),
        permutation_mor(field, &inv),
        None,
    )
}

/// The quasigroup algebra of an inverse-property loop; same formulas as the
/// group algebra but without requiring associativity.
pub fn loop_algebra(t: &CayleyTable, field: FieldSpec) -> Result<WeakHopfQuasigroup> {
    if let Some((x, y)) = t.inverse_property_witness()? {
        return Err(Error::NotIPLoop(x, y));
    }
    let inv = t.inverse().expect("inverse-property loops have inverses").to_vec();
    WeakHopfQuasigroup::new(
        table_magma(field, t),
        grouplike_comonoid(field, t.order()),
        permutation_mor(field, &inv),
        None,
    )
}

/// The groupoid algebra: basis the arrows, `μ(e_f ⊗ e_g) = e_{f∘g}` when
/// composable and `0` otherwise, unit the sum of identity arrows,
/// grouplike coproduct, antipode the arrow inverse.
pub fn groupoid_algebra(g: &FiniteGroupoid, field: FieldSpec) -> Result<WeakHopfQuasigroup> {
    let n = g.n_arrows();
    let mut unit = Mor::zero(field, n, 1);
    for &e in &g.identities {
        unit.set(e, 0, field.one());
    }
    let mul = Mor::from_fn(field, n, n * n, |k, ij| {
        if g.compose[ij / n][ij % n] == Some(k) {
            field.one()
        } else {
            field.zero()
        }
    });
    let magma = UnitalMagma::new(n, unit, mul)
        .map_err(|_| Error::InvalidGroupoid("identity arrows do not act as a unit".into()))?;
    WeakHopfQuasigroup::new(
        magma,
        grouplike_comonoid(field, n),
        permutation_mor(field, &g.inverses),
        None,
    )
}

/// A tensor composite candidate together with its axiom report.
#[derive(Debug, Clone)]
pub struct TensorProbe {
    pub candidate: WeakHopfQuasigroup,
    pub report: LawReport,
}

impl TensorProbe {
    pub fn passes(&self) -> bool {
        self.report.all_pass()
    }
}

/// Tensor composite of two weak Hopf quasigroups: tensor magma and tensor
/// comonoid with `λ = λ_1⊗λ_2` and the default swap braiding.  Whether the
/// axioms hold for the composite is exactly what the attached report
/// records; callers must branch on it.
pub fn tensor_whq(h1: &WeakHopfQuasigroup, h2: &WeakHopfQuasigroup) -> Result<TensorProbe> {
    let magma = tensor_magma(h1.magma(), h2.magma())?;
    let comonoid = tensor_comonoid(h1.comonoid(), h2.comonoid())?;
    let antipode = h1.antipode().kron(h2.antipode())?;
    let candidate = WeakHopfQuasigroup::new_unchecked(magma, comonoid, antipode, None)?;
    let report = candidate.check_axioms();
    Ok(TensorProbe { candidate, report })
}

/// The regular right-right Hopf module `(H, φ = μ, ρ = δ)`.
pub fn regular_hopf_module(h: &Arc<WeakHopfQuasigroup>) -> Result<HopfModule> {
    HopfModule::new(
        Arc::clone(h),
        h.dim(),
        h.mul().clone(),
        h.comul().clone(),
    )
}

/// The `k`-fold direct sum of the regular right `H_L`-module.
pub fn free_hl_module(
    h: &Arc<WeakHopfQuasigroup>,
    base: &BaseObject,
    k: usize,
) -> Result<RightHLModule> {
    let f = h.field();
    let r = base.rank();
    let mul_b = base.monoid.mul();
    let action = Mor::from_fn(f, k * r, k * r * r, |out, input| {
        let (block, a, b) = (input / (r * r), (input / r) % r, input % r);
        if out / r == block {
            mul_b.at(out % r, a * r + b).clone()
        } else {
            f.zero()
        }
    });
    RightHLModule::new(Arc::clone(h), base.clone(), k * r, action)
}

/// `H` itself as a right `H_L`-module via `ψ_H = μ∘(H⊗i_L)`.
pub fn hl_module_on_h(h: &Arc<WeakHopfQuasigroup>, base: &BaseObject) -> Result<RightHLModule> {
    let n = h.dim();
    let action = crate::exactlin::Composite::new(h.field(), n * base.rank())
        .stage(n, base.i(), 1)
        .then(h.mul())
        .materialize();
    RightHLModule::new(Arc::clone(h), base.clone(), n, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::whq::Side;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    /// An order-5 loop with two-sided inverses that violates the inverse
    /// property (found by exhaustive search; first violation at (1, 2)).
    fn non_ip_loop() -> CayleyTable {
        CayleyTable::new(vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ])
        .unwrap()
    }

    #[test]
    fn table_validation() {
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 0], vec![1, 1]]),
            Err(Error::InvalidTable(_))
        ));
        // Latin square without a two-sided identity.
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]),
            Err(Error::InvalidTable(_))
        ));
        let c4 = CayleyTable::cyclic(4);
        assert_eq!(c4.identity(), 0);
        assert_eq!(c4.inverse().unwrap(), &[0, 3, 2, 1]);
    }

    #[test]
    fn trivial_group_algebra() {
        let h = group_algebra(&CayleyTable::cyclic(1), q()).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.mul().is_identity());
        assert!(h.antipode().is_identity());
    }

    #[test]
    fn s3_group_algebra_passes() {
        let s3 = CayleyTable::symmetric_group(3);
        assert!(s3.is_associative());
        let h = group_algebra(&s3, q()).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(h.check_axioms().all_pass());
    }

    #[test]
    fn group_algebra_rejects_nonassociative_table() {
        assert!(matches!(
            group_algebra(&non_ip_loop(), q()),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn loop_algebra_agrees_with_group_algebra_on_groups() {
        let c6 = CayleyTable::cyclic(6);
        assert_eq!(
            loop_algebra(&c6, q()).unwrap(),
            group_algebra(&c6, q()).unwrap()
        );
    }

    #[test]
    fn loop_algebra_rejects_non_ip_loop() {
        assert_eq!(
            loop_algebra(&non_ip_loop(), q()),
            Err(Error::NotIPLoop(1, 2))
        );
    }

    #[test]
    fn chein_double_of_abelian_group_is_a_group() {
        let d = chein_double(&CayleyTable::cyclic(2)).unwrap();
        assert_eq!(d.order(), 4);
        assert_eq!(d.identity(), 0);
        assert!(d.is_associative());
    }

    #[test]
    fn chein_double_of_s3_is_nonassociative_ip_loop() {
        let d = chein_double(&CayleyTable::symmetric_group(3)).unwrap();
        assert_eq!(d.order(), 12);
        assert!(!d.is_associative());
        assert_eq!(d.inverse_property_witness().unwrap(), None);
        let h = loop_algebra(&d, q()).unwrap();
        assert!(h.check_axioms().all_pass());
        assert!(h.associativity_witness().is_some());
        // Hopf quasigroup degeneration: the base inclusion is the unit.
        let b = h.base_object(Side::Left).unwrap();
        assert_eq!(b.rank(), 1);
        assert_eq!(b.i(), h.unit());
        let e = h.unit().compose(h.counit()).unwrap();
        assert_eq!(h.projections().unwrap().pi_l, e);
        assert_eq!(h.projections().unwrap().pi_r, e);
    }

    #[test]
    fn discrete_groupoid_algebra() {
        let h = groupoid_algebra(&FiniteGroupoid::discrete(3), q()).unwrap();
        assert_eq!(h.dim(), 3);
        let pro = h.projections().unwrap();
        assert!(pro.pi_l.is_identity());
        assert_eq!(h.base_object(Side::Left).unwrap().rank(), 3);
        // The Casimir morphism is the sum of e_i ⊗ e_i.
        let b = h.base_object(Side::Left).unwrap();
        let expect = Mor::from_fn(q(), 9, 1, |i, _| {
            if i % 4 == 0 {
                q().one()
            } else {
                q().zero()
            }
        });
        assert_eq!(b.casimir, expect);
    }

    #[test]
    fn pair_groupoid_algebra() {
        let g = FiniteGroupoid::pair(2);
        assert_eq!(g.n_arrows(), 4);
        let h = groupoid_algebra(&g, q()).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.base_object(Side::Left).unwrap().rank(), 2);
        assert!(h.check_axioms().all_pass());
    }

    #[test]
    fn one_object_groupoid_matches_group_algebra() {
        let s3 = CayleyTable::symmetric_group(3);
        let via_groupoid =
            groupoid_algebra(&FiniteGroupoid::one_object(&s3).unwrap(), q()).unwrap();
        let direct = group_algebra(&s3, q()).unwrap();
        assert_eq!(via_groupoid, direct);
    }

    #[test]
    fn invalid_groupoid_is_rejected() {
        // Composition missing for composable arrows.
        let bad = FiniteGroupoid::new(
            1,
            vec![0, 0],
            vec![0, 0],
            vec![vec![Some(0), None], vec![None, Some(1)]],
        );
        assert!(matches!(bad, Err(Error::InvalidGroupoid(_))));
    }

    #[test]
    fn tensor_of_cyclic_groups_is_the_product_group_algebra() {
        let c2 = group_algebra(&CayleyTable::cyclic(2), q()).unwrap();
        let probe = tensor_whq(&c2, &c2).unwrap();
        assert!(probe.passes());
        let klein = CayleyTable::direct_product(&CayleyTable::cyclic(2), &CayleyTable::cyclic(2));
        let expect = group_algebra(&klein, q()).unwrap();
        assert_eq!(probe.candidate, expect);
    }

    #[test]
    fn tensor_with_trivial_factor_copies_the_input() {
        let s3 = group_algebra(&CayleyTable::symmetric_group(3), q()).unwrap();
        let triv = group_algebra(&CayleyTable::cyclic(1), q()).unwrap();
        let probe = tensor_whq(&s3, &triv).unwrap();
        assert!(probe.passes());
        assert_eq!(probe.candidate.mul(), s3.mul());
        assert_eq!(probe.candidate.comul(), s3.comul());
        assert_eq!(probe.candidate.antipode(), s3.antipode());
    }

    #[test]
    fn flagship_tensor_probe_passes() {
        // Chein loop algebra (dim 12, nonassociative) tensored with the
        // discrete groupoid algebra on two objects: dim 24, expected weak
        // (Π^L of rank 2) and nonassociative.  This is a computed claim.
        let loop12 = loop_algebra(
            &chein_double(&CayleyTable::symmetric_group(3)).unwrap(),
            q(),
        )
        .unwrap();
        let k2 = groupoid_algebra(&FiniteGroupoid::discrete(2), q()).unwrap();
        let probe = tensor_whq(&loop12, &k2).unwrap();
        assert!(probe.passes(), "failures: {}", probe.report);
        let h = probe.candidate;
        assert_eq!(h.dim(), 24);
        assert!(h.associativity_witness().is_some());
        assert_eq!(h.base_object(Side::Left).unwrap().rank(), 2);
    }
}
