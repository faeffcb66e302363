//! Unital magmas, comonoids, convolution products and morphism predicates.

use crate::error::{Error, Result};
use crate::exactlin::{Composite, FieldSpec, Mor};
use crate::report::Witness;

/// A unital magma `(A, η, μ)`: `μ∘(A⊗η) = id = μ∘(η⊗A)`.  The product is
/// not assumed associative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalMagma {
    dim: usize,
    unit: Mor,
    mul: Mor,
}

/// A comonoid `(D, ε, δ)`: counital and coassociative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comonoid {
    dim: usize,
    counit: Mor,
    comul: Mor,
}

fn check_shape(
    op: &'static str,
    m: &Mor,
    dst: usize,
    src: usize,
) -> Result<()> {
    if m.dst() == dst && m.src() == src {
        Ok(())
    } else {
        Err(Error::DimMismatch {
            op,
            lhs_dst: dst,
            lhs_src: src,
            rhs_dst: m.dst(),
            rhs_src: m.src(),
        })
    }
}

impl UnitalMagma {
    /// Validated constructor: checks shapes and the unit law.
    pub fn new(dim: usize, unit: Mor, mul: Mor) -> Result<Self> {
        check_shape("magma unit", &unit, dim, 1)?;
        check_shape("magma product", &mul, dim, dim * dim)?;
        if unit.field() != mul.field() {
            return Err(Error::FieldMismatch);
        }
        let m = Self::new_unchecked(dim, unit, mul);
        if m.unit_law().is_some() {
            return Err(Error::LawFailure {
                label: "(magma-unit)".into(),
            });
        }
        Ok(m)
    }

    /// No law checking; for deliberately broken fixtures and probes.
    pub fn new_unchecked(dim: usize, unit: Mor, mul: Mor) -> Self {
        UnitalMagma { dim, unit, mul }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    pub fn unit(&self) -> &Mor {
        &self.unit
    }

    pub fn mul(&self) -> &Mor {
        &self.mul
    }

    /// First failure of `μ∘(A⊗η) = id = μ∘(η⊗A)`, if any.
    pub fn unit_law(&self) -> Option<Witness> {
        let (f, n) = (self.field(), self.dim);
        let id = Composite::new(f, n);
        let right = Composite::new(f, n).stage(n, &self.unit, 1).then(&self.mul);
        let left = Composite::new(f, n).stage(1, &self.unit, n).then(&self.mul);
        right.agrees(&id).or_else(|| left.agrees(&id))
    }

    /// Associativity probe: a witness basis triple `(a, b, c)` with
    /// `(e_a e_b) e_c ≠ e_a (e_b e_c)`, or `None` for a monoid.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let (f, n) = (self.field(), self.dim);
        let lhs = Composite::new(f, n * n * n)
            .stage(1, &self.mul, n)
            .then(&self.mul);
        let rhs = Composite::new(f, n * n * n)
            .stage(n, &self.mul, 1)
            .then(&self.mul);
        lhs.agrees(&rhs)
            .map(|w| (w.col / (n * n), (w.col / n) % n, w.col % n))
    }

    pub fn is_monoid(&self) -> bool {
        self.associativity_witness().is_none()
    }
}

impl Comonoid {
    /// Validated constructor: checks shapes, counit law and coassociativity.
    pub fn new(dim: usize, counit: Mor, comul: Mor) -> Result<Self> {
        check_shape("counit", &counit, 1, dim)?;
        check_shape("coproduct", &comul, dim * dim, dim)?;
        if counit.field() != comul.field() {
            return Err(Error::FieldMismatch);
        }
        let c = Self::new_unchecked(dim, counit, comul);
        if c.counit_law().is_some() {
            return Err(Error::LawFailure {
                label: "(comonoid-counit)".into(),
            });
        }
        if c.coassociativity_witness().is_some() {
            return Err(Error::LawFailure {
                label: "(comonoid-coassoc)".into(),
            });
        }
        Ok(c)
    }

    pub fn new_unchecked(dim: usize, counit: Mor, comul: Mor) -> Self {
        Comonoid { dim, counit, comul }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.comul.field()
    }

    pub fn counit(&self) -> &Mor {
        &self.counit
    }

    pub fn comul(&self) -> &Mor {
        &self.comul
    }

    pub fn counit_law(&self) -> Option<Witness> {
        let (f, n) = (self.field(), self.dim);
        let id = Composite::new(f, n);
        let l = Composite::new(f, n)
            .then(&self.comul)
            .stage(1, &self.counit, n);
        let r = Composite::new(f, n)
            .then(&self.comul)
            .stage(n, &self.counit, 1);
        l.agrees(&id).or_else(|| r.agrees(&id))
    }

    pub fn coassociativity_witness(&self) -> Option<Witness> {
        let (f, n) = (self.field(), self.dim);
        let l = Composite::new(f, n)
            .then(&self.comul)
            .stage(1, &self.comul, n);
        let r = Composite::new(f, n)
            .then(&self.comul)
            .stage(n, &self.comul, 1);
        l.agrees(&r)
    }
}

/// Convolution `f ∗ g = μ∘(f⊗g)∘δ` of parallel maps from a comonoid to a
/// unital magma.
pub fn convolution(f: &Mor, g: &Mor, src: &Comonoid, dst: &UnitalMagma) -> Result<Mor> {
    for m in [f, g] {
        check_shape("convolution factor", m, dst.dim(), src.dim())?;
    }
    dst.mul()
        .compose(&f.kron(g)?)?
        .compose(src.comul())
}

/// `μ_B∘(f⊗f) = f∘μ_A` and `f∘η_A = η_B`.
pub fn is_magma_morphism(f: &Mor, a: &UnitalMagma, b: &UnitalMagma) -> Result<bool> {
    check_shape("magma morphism", f, b.dim(), a.dim())?;
    let fld = f.field();
    let lhs = Composite::new(fld, a.dim() * a.dim())
        .stage(1, f, a.dim())
        .stage(b.dim(), f, 1)
        .then(b.mul());
    let rhs = Composite::new(fld, a.dim() * a.dim())
        .then(a.mul())
        .then(f);
    Ok(lhs.agrees(&rhs).is_none() && f.compose(a.unit())? == *b.unit())
}

/// `(f⊗f)∘δ_D = δ_E∘f` and `ε_E∘f = ε_D`.
pub fn is_comonoid_morphism(f: &Mor, d: &Comonoid, e: &Comonoid) -> Result<bool> {
    check_shape("comonoid morphism", f, e.dim(), d.dim())?;
    let fld = f.field();
    let lhs = Composite::new(fld, d.dim())
        .then(d.comul())
        .stage(1, f, d.dim())
        .stage(e.dim(), f, 1);
    let rhs = Composite::new(fld, d.dim()).then(f).then(e.comul());
    Ok(lhs.agrees(&rhs).is_none() && e.counit().compose(f)? == *d.counit())
}

/// Tensor product of unital magmas:
/// `η = η_A⊗η_B`, `μ = (μ_A⊗μ_B)∘(A⊗c_{B,A}⊗B)` with `c` the swap.
pub fn tensor_magma(a: &UnitalMagma, b: &UnitalMagma) -> Result<UnitalMagma> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let fld = a.field();
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let unit = a.unit().kron(b.unit())?;
    let swap = Mor::swap(fld, db, da);
    let mul = Composite::new(fld, n * n)
        .stage(da, &swap, db)
        .stage(da * da, b.mul(), 1)
        .stage(1, a.mul(), db)
        .materialize();
    UnitalMagma::new(n, unit, mul)
}

/// Tensor product of comonoids:
/// `ε = ε_D⊗ε_E`, `δ = (D⊗c_{D,E}⊗E)∘(δ_D⊗δ_E)`.
pub fn tensor_comonoid(d: &Comonoid, e: &Comonoid) -> Result<Comonoid> {
    if d.field() != e.field() {
        return Err(Error::FieldMismatch);
    }
    let fld = d.field();
    let (dd, de) = (d.dim(), e.dim());
    let n = dd * de;
    let counit = d.counit().kron(e.counit())?;
    let swap = Mor::swap(fld, dd, de);
    let comul = Composite::new(fld, n)
        .stage(dd, e.comul(), 1)
        .stage(1, d.comul(), de * de)
        .stage(dd, &swap, de)
        .materialize();
    Comonoid::new(n, counit, comul)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    /// The group algebra of Z/k as a bare magma+comonoid pair, built by
    /// hand so these tests do not depend on the generators module.
    fn cyclic_magma(k: usize) -> (UnitalMagma, Comonoid) {
        let f = q();
        let mut unit = Mor::zero(f, k, 1);
        unit.set(0, 0, f.one());
        let mul = Mor::from_fn(f, k, k * k, |t, ij| {
            let (i, j) = (ij / k, ij % k);
            if (i + j) % k == t {
                f.one()
            } else {
                f.zero()
            }
        });
        let counit = Mor::from_fn(f, 1, k, |_, _| f.one());
        let comul = Mor::from_fn(f, k * k, k, |jk, i| {
            if jk == i * k + i {
                f.one()
            } else {
                f.zero()
            }
        });
        (
            UnitalMagma::new(k, unit, mul).unwrap(),
            Comonoid::new(k, counit, comul).unwrap(),
        )
    }

    #[test]
    fn validated_constructors_reject_broken_laws() {
        let f = q();
        let unit = Mor::from_entries(f, 2, 1, vec![f.one(), f.one()]).unwrap();
        let mul = Mor::zero(f, 2, 4);
        assert!(matches!(
            UnitalMagma::new(2, unit, mul),
            Err(Error::LawFailure { .. })
        ));
        let counit = Mor::zero(f, 1, 2);
        let comul = Mor::zero(f, 4, 2);
        assert!(matches!(
            Comonoid::new(2, counit, comul),
            Err(Error::LawFailure { .. })
        ));
    }

    #[test]
    fn convolution_unit_acts_neutrally_on_group_algebra() {
        let (a, c) = cyclic_magma(2);
        let e = a.unit().compose(c.counit()).unwrap();
        let id = Mor::identity(q(), 2);
        assert_eq!(convolution(&e, &id, &c, &a).unwrap(), id);
        assert_eq!(convolution(&id, &e, &c, &a).unwrap(), id);
    }

    #[test]
    fn convolution_of_identity_with_inverse_map_is_unit_counit() {
        let (a, c) = cyclic_magma(2);
        // The group-inverse map of Z/2 is the identity permutation swap of
        // nothing: g ↦ -g, here the identity on index 0 and 1↦1.
        let lam = Mor::from_fn(q(), 2, 2, |i, j| {
            if (i + j) % 2 == 0 {
                q().one()
            } else {
                q().zero()
            }
        });
        let conv = convolution(&Mor::identity(q(), 2), &lam, &c, &a).unwrap();
        let e = a.unit().compose(c.counit()).unwrap();
        assert_eq!(conv, e);
    }

    #[test]
    fn convolution_is_associative_over_a_monoid() {
        let (a, c) = cyclic_magma(3);
        let f = Mor::from_fn(q(), 3, 3, |i, j| q().from_i64((i * j) as i64 % 4 - 1));
        let g = Mor::from_fn(q(), 3, 3, |i, j| q().from_i64((i + 2 * j) as i64 % 3));
        let h = Mor::from_fn(q(), 3, 3, |i, j| q().from_i64(if i == j { 2 } else { 1 }));
        let fg = convolution(&f, &g, &c, &a).unwrap();
        let gh = convolution(&g, &h, &c, &a).unwrap();
        assert_eq!(
            convolution(&fg, &h, &c, &a).unwrap(),
            convolution(&f, &gh, &c, &a).unwrap()
        );
    }

    #[test]
    fn morphism_predicates() {
        let (a, c) = cyclic_magma(2);
        let id = Mor::identity(q(), 2);
        assert!(is_magma_morphism(&id, &a, &a).unwrap());
        assert!(is_comonoid_morphism(&id, &c, &c).unwrap());
        // The zero map misses the unit whenever the target is nonzero.
        let z = Mor::zero(q(), 2, 2);
        assert!(!is_magma_morphism(&z, &a, &a).unwrap());
        // ε is a comonoid morphism onto the trivial comonoid.
        let triv = Comonoid::new(1, Mor::identity(q(), 1), Mor::identity(q(), 1)).unwrap();
        assert!(is_comonoid_morphism(c.counit(), &c, &triv).unwrap());
        // The inverse map of an abelian group algebra is a coalgebra map.
        let lam = Mor::from_fn(q(), 2, 2, |i, j| {
            if (i + j) % 2 == 0 {
                q().one()
            } else {
                q().zero()
            }
        });
        assert!(is_comonoid_morphism(&lam, &c, &c).unwrap());
    }

    #[test]
    fn tensor_with_trivial_factor_is_the_input() {
        let (a, c) = cyclic_magma(3);
        let ta = UnitalMagma::new(1, Mor::identity(q(), 1), Mor::identity(q(), 1)).unwrap();
        let tc = Comonoid::new(1, Mor::identity(q(), 1), Mor::identity(q(), 1)).unwrap();
        let prod = tensor_magma(&a, &ta).unwrap();
        assert_eq!(prod.mul(), a.mul());
        assert_eq!(prod.unit(), a.unit());
        let cop = tensor_comonoid(&c, &tc).unwrap();
        assert_eq!(cop.comul(), c.comul());
    }

    #[test]
    fn tensor_of_cyclic_groups_matches_product_group() {
        let (a2, _) = cyclic_magma(2);
        let t = tensor_magma(&a2, &a2).unwrap();
        // Structure constants of Z/2 × Z/2 with index (i,j) ↦ 2i+j.
        let f = q();
        let expect = Mor::from_fn(f, 4, 16, |t_, xy| {
            let (x, y) = (xy / 4, xy % 4);
            let ((x0, x1), (y0, y1)) = ((x / 2, x % 2), (y / 2, y % 2));
            if t_ == ((x0 + y0) % 2) * 2 + (x1 + y1) % 2 {
                f.one()
            } else {
                f.zero()
            }
        });
        assert_eq!(t.mul(), &expect);
        // The validated constructor has already re-checked the unit law.
        assert!(t.unit_law().is_none());
    }

    #[test]
    fn fp_structures_validate() {
        let f = FieldSpec::fp(7).unwrap();
        let unit = Mor::from_entries(f, 1, 1, vec![Scalar::Fp(1)]).unwrap();
        let mul = Mor::from_entries(f, 1, 1, vec![Scalar::Fp(1)]).unwrap();
        assert!(UnitalMagma::new(1, unit, mul).is_ok());
    }
}
