//! Right-right Hopf modules over a weak Hopf quasigroup: the module axioms,
//! coinvariants, the cross object `M^{coH}×H`, the twisted action `φ^α`,
//! strongness, and the fundamental theorem `M ≅ M^{coH}×H`.
//!
//! A module is always paired with its `H` by reference; operations over two
//! modules insist on pointer-identical `H` and fail with `HMismatch`
//! otherwise, since every law quantifies over one fixed structure.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exactlin::{equalizer, split_idempotent, Composite, Mor, SplitIdempotent};
use crate::report::LawReport;
use crate::whq::{BaseObject, Side, WeakHopfQuasigroup};

/// A right-right `H`-Hopf module `(M, φ, ρ)`.
///
/// The coinvariants splitting and the twisted action `φ^α` are derived
/// deterministically from the module data, so they are memoized; clones
/// share the memo.
#[derive(Debug, Clone)]
pub struct HopfModule {
    over: Arc<WeakHopfQuasigroup>,
    dim: usize,
    /// Action `M⊗H → M`.
    action: Mor,
    /// Coaction `M → M⊗H`.
    coaction: Mor,
    cache: Arc<ModuleCache>,
}

#[derive(Debug, Default)]
struct ModuleCache {
    coinv: OnceLock<Result<CoinvariantSplit>>,
    phi_alpha: OnceLock<Result<Mor>>,
    cross: OnceLock<Result<CrossObject>>,
}

impl HopfModule {
    /// Validated constructor: checks shapes and axioms (b1)–(b5), failing
    /// with the first violated label.
    pub fn new(over: Arc<WeakHopfQuasigroup>, dim: usize, action: Mor, coaction: Mor) -> Result<Self> {
        let m = Self::new_unchecked(over, dim, action, coaction)?;
        let rep = check_hopf_module(&m);
        match rep.first_failure() {
            None => Ok(m),
            Some(c) => Err(Error::LawFailure {
                label: c.label.clone(),
            }),
        }
    }

    /// Shape-checked only; for mutation fixtures.
    pub fn new_unchecked(
        over: Arc<WeakHopfQuasigroup>,
        dim: usize,
        action: Mor,
        coaction: Mor,
    ) -> Result<Self> {
        let n = over.dim();
        if action.src() != dim * n
            || action.dst() != dim
            || coaction.src() != dim
            || coaction.dst() != dim * n
        {
            return Err(Error::DimMismatch {
                op: "Hopf module",
                lhs_dst: dim,
                lhs_src: dim * n,
                rhs_dst: action.dst(),
                rhs_src: action.src(),
            });
        }
        if action.field() != over.field() || coaction.field() != over.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(HopfModule {
            over,
            dim,
            action,
            coaction,
            cache: Arc::new(ModuleCache::default()),
        })
    }

    pub fn h(&self) -> &Arc<WeakHopfQuasigroup> {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &Mor {
        &self.action
    }

    pub fn coaction(&self) -> &Mor {
        &self.coaction
    }

    pub fn same_h(&self, other: &HopfModule) -> bool {
        Arc::ptr_eq(&self.over, &other.over)
    }
}

/// The coinvariants of a Hopf module: the idempotent `q_M = φ∘(M⊗λ)∘ρ`
/// and its chosen splitting `q = i ∘ p`.
#[derive(Debug, Clone)]
pub struct CoinvariantSplit {
    pub q: Mor,
    pub split: SplitIdempotent,
}

impl CoinvariantSplit {
    pub fn rank(&self) -> usize {
        self.split.rank
    }

    pub fn p(&self) -> &Mor {
        &self.split.p
    }

    pub fn i(&self) -> &Mor {
        &self.split.i
    }
}

/// The cross object `M^{coH}×H`: the image of the idempotent `∇_M` on
/// `M^{coH}⊗H`, with its Hopf module structure and the isomorphism `α_M`.
#[derive(Debug, Clone)]
pub struct CrossObject {
    pub nabla: Mor,
    pub split: SplitIdempotent,
    /// Action of the cross object, `(M^{coH}×H)⊗H → M^{coH}×H`.
    pub action: Mor,
    /// Coaction of the cross object.
    pub coaction: Mor,
    /// `α_M : M → M^{coH}×H`.
    pub alpha: Mor,
    /// `α_M^{-1} = ω_M ∘ i`.
    pub alpha_inv: Mor,
}

impl CrossObject {
    pub fn dim(&self) -> usize {
        self.split.rank
    }
}

/// A certified isomorphism: the maps plus the list of exactly verified
/// displays backing the certificate.
#[derive(Debug, Clone)]
pub struct CertifiedIso {
    pub forward: Mor,
    pub inverse: Mor,
    pub evidence: LawReport,
}

/// Axioms (b1)–(b5), the equivalent form of (b5), and the derived identity
/// `φ∘(M⊗Π^R)∘ρ = id` obtained from (b2-2).
pub fn check_hopf_module(m: &HopfModule) -> LawReport {
    let mut rep = LawReport::new();
    let h = m.h();
    let (f, n, md) = (h.field(), h.dim(), m.dim());
    let (phi, rho) = (m.action(), m.coaction());
    let (mu, delta, eps, lam) = (h.mul(), h.comul(), h.counit(), h.antipode());
    let c = &h.braiding().c;
    let (pl, pr) = (h.pi_l(), h.pi_r());

    // (b1)  (M⊗ε)∘ρ = id and (ρ⊗H)∘ρ = (M⊗δ)∘ρ
    let id_m = || Composite::new(f, md);
    let counit_part = Composite::new(f, md).then(rho).stage(md, eps, 1);
    let coassoc_l = Composite::new(f, md).then(rho).stage(1, rho, n);
    let coassoc_r = Composite::new(f, md).then(rho).stage(md, delta, 1);
    rep.record(
        "(b1)",
        counit_part
            .agrees(&id_m())
            .or_else(|| coassoc_l.agrees(&coassoc_r)),
    );

    // (b2-1)  φ∘(M⊗η) = id
    let l = Composite::new(f, md).stage(md, h.unit(), 1).then(phi);
    rep.record("(b2-1)", l.agrees(&id_m()));

    // (b2-2)  ρ∘φ = (φ⊗μ)∘(M⊗c⊗H)∘(ρ⊗δ)
    let l = Composite::new(f, md * n).then(phi).then(rho);
    let r = Composite::new(f, md * n)
        .stage(md, delta, 1)
        .stage(1, rho, n * n)
        .stage(md, c, n)
        .stage(1, phi, n * n)
        .stage(md, mu, 1);
    rep.record("(b2-2)", l.agrees(&r));

    // (b3)  φ∘(φ⊗λ)∘(M⊗δ) = φ∘(M⊗Π^L)
    let l = Composite::new(f, md * n)
        .stage(md, delta, 1)
        .stage(md * n, lam, 1)
        .stage(1, phi, n)
        .then(phi);
    let r = Composite::new(f, md * n).stage(md, &pl, 1).then(phi);
    rep.record("(b3)", l.agrees(&r));

    // (b4)  φ∘(φ⊗H)∘(M⊗λ⊗H)∘(M⊗δ) = φ∘(M⊗Π^R)
    let l = Composite::new(f, md * n)
        .stage(md, delta, 1)
        .stage(md, lam, n)
        .stage(1, phi, n)
        .then(phi);
    let r = Composite::new(f, md * n).stage(md, &pr, 1).then(phi);
    rep.record("(b4)", l.agrees(&r));

    // (b5)  φ∘(φ⊗H)∘(M⊗Π^L⊗H)∘(M⊗δ) = φ
    let phi_pipe = || Composite::new(f, md * n).then(phi);
    let l = Composite::new(f, md * n)
        .stage(md, delta, 1)
        .stage(md, &pl, n)
        .stage(1, phi, n)
        .then(phi);
    rep.record("(b5)", l.agrees(&phi_pipe()));

    // Equivalent form of (b5):  φ∘(φ⊗Π^R)∘(M⊗δ) = φ
    let l = Composite::new(f, md * n)
        .stage(md, delta, 1)
        .stage(md * n, &pr, 1)
        .stage(1, phi, n)
        .then(phi);
    rep.record("(b5-equivalent)", l.agrees(&phi_pipe()));

    // Derived from (b2-2):  φ∘(M⊗Π^R)∘ρ = id
    let l = Composite::new(f, md)
        .then(rho)
        .stage(md, &pr, 1)
        .then(phi);
    rep.record("(b2-2-derived)", l.agrees(&id_m()));

    rep
}

/// Compute and split the coinvariants idempotent, re-verifying both
/// equalizer presentations of `M^{coH}` and the associated displays.
/// Memoized per module instance.
pub fn coinvariants(m: &HopfModule) -> Result<CoinvariantSplit> {
    m.cache
        .coinv
        .get_or_init(|| compute_coinvariants(m))
        .clone()
}

fn compute_coinvariants(m: &HopfModule) -> Result<CoinvariantSplit> {
    let h = m.h();
    let (f, n, md) = (h.field(), h.dim(), m.dim());
    let (phi, rho) = (m.action(), m.coaction());
    let lam = h.antipode();
    let pro = h.projections()?;
    let fail = |label: &str| Error::LawFailure {
        label: label.into(),
    };

    let q = Composite::new(f, md)
        .then(rho)
        .stage(md, lam, 1)
        .then(phi)
        .materialize();

    // ρ∘q = (M⊗Π^L)∘ρ∘q, which forces q idempotent.
    let l = Composite::new(f, md).then(&q).then(rho);
    let r = Composite::new(f, md)
        .then(&q)
        .then(rho)
        .stage(md, &pro.pi_l, 1);
    if l.agrees(&r).is_some() {
        return Err(fail("(q-coaction)"));
    }
    if q.compose(&q)? != q {
        return Err(fail("(q-idempotent)"));
    }
    let split = split_idempotent(&q)?;
    let r_dim = split.rank;
    let (p, i) = (&split.p, &split.i);

    // Both equalizer presentations must carve out the same subspace.
    for (label, pi) in [
        ("(coinvariants-equalizer-pi-l)", &pro.pi_l),
        ("(coinvariants-equalizer-pi-bar-r)", &pro.pi_bar_r),
    ] {
        let second = Composite::new(f, md)
            .then(rho)
            .stage(md, pi, 1)
            .materialize();
        let eq = equalizer(rho, &second)?;
        if eq.dim != r_dim || rho.compose(i)? != second.compose(i)? {
            return Err(fail(label));
        }
    }

    // (new-c5-2-1)  φ∘(q⊗H)∘ρ = id
    let l = Composite::new(f, md).then(rho).stage(1, &q, n).then(phi);
    if l.agrees(&Composite::new(f, md)).is_some() {
        return Err(fail("(new-c5-2-1)"));
    }
    // (new-c5-2-2)  ρ∘φ∘(i⊗H) = (φ⊗H)∘(i⊗δ)
    let l = Composite::new(f, r_dim * n)
        .stage(1, i, n)
        .then(phi)
        .then(rho);
    let r = Composite::new(f, r_dim * n)
        .stage(r_dim, h.comul(), 1)
        .stage(1, i, n * n)
        .stage(1, phi, n);
    if l.agrees(&r).is_some() {
        return Err(fail("(new-c5-2-2)"));
    }
    // (new-c5-2-3)  p∘φ∘(i⊗H) = p∘φ∘(i⊗Π^L)
    let l = Composite::new(f, r_dim * n)
        .stage(1, i, n)
        .then(phi)
        .then(p);
    let r = Composite::new(f, r_dim * n)
        .stage(r_dim, &pro.pi_l, 1)
        .stage(1, i, n)
        .then(phi)
        .then(p);
    if l.agrees(&r).is_some() {
        return Err(fail("(new-c5-2-3)"));
    }

    Ok(CoinvariantSplit { q, split })
}

/// Build `∇_M`, split it, equip the image with its Hopf module structure
/// and produce the isomorphism `α_M`, re-verifying every display involved.
/// Memoized per module instance.
pub fn cross_object(m: &HopfModule, coinv: &CoinvariantSplit) -> Result<CrossObject> {
    m.cache
        .cross
        .get_or_init(|| compute_cross_object(m, coinv))
        .clone()
}

fn compute_cross_object(m: &HopfModule, coinv: &CoinvariantSplit) -> Result<CrossObject> {
    let h = m.h();
    let (f, n, md) = (h.field(), h.dim(), m.dim());
    let (phi, rho) = (m.action(), m.coaction());
    let (mu, delta) = (h.mul(), h.comul());
    let r = coinv.rank();
    let (p, i) = (coinv.p(), coinv.i());
    let fail = |label: &str| Error::LawFailure {
        label: label.into(),
    };

    let nabla_pipe = || {
        Composite::new(f, r * n)
            .stage(1, i, n)
            .then(phi)
            .then(rho)
            .stage(1, p, n)
    };
    let nabla = nabla_pipe().materialize();

    // (tensor-idempotent-1)  ∇ = ((p∘φ)⊗H)∘(i⊗δ)
    let alt = Composite::new(f, r * n)
        .stage(r, delta, 1)
        .stage(1, i, n * n)
        .stage(1, phi, n)
        .stage(1, p, n);
    if nabla_pipe().agrees(&alt).is_some() {
        return Err(fail("(tensor-idempotent-1)"));
    }
    // (tensor-idempotent-2)  (M^{coH}⊗δ)∘∇ = (∇⊗H)∘(M^{coH}⊗δ)
    let l = Composite::new(f, r * n).then(&nabla).stage(r, delta, 1);
    let rr = Composite::new(f, r * n)
        .stage(r, delta, 1)
        .stage(1, &nabla, n);
    if l.agrees(&rr).is_some() {
        return Err(fail("(tensor-idempotent-2)"));
    }
    if nabla.compose(&nabla)? != nabla {
        return Err(fail("(nabla-idempotent)"));
    }

    let omega = Composite::new(f, r * n)
        .stage(1, i, n)
        .then(phi)
        .materialize();
    let omega_prime = Composite::new(f, md)
        .then(rho)
        .stage(1, p, n)
        .materialize();
    if !omega.compose(&omega_prime)?.is_identity() {
        return Err(fail("(omega-retraction)"));
    }
    if omega_prime.compose(&omega)? != nabla {
        return Err(fail("(nabla-factorization)"));
    }

    let split = split_idempotent(&nabla)?;
    let (px, ix, x) = (&split.p, &split.i, split.rank);
    let alpha = px.compose(&omega_prime)?;
    let alpha_inv = omega.compose(ix)?;
    if !alpha.compose(&alpha_inv)?.is_identity() || !alpha_inv.compose(&alpha)?.is_identity() {
        return Err(fail("(alpha-iso)"));
    }

    // Structure maps of the cross object.
    let coaction = Composite::new(f, x)
        .then(ix)
        .stage(r, delta, 1)
        .stage(1, px, n)
        .materialize();
    let action = Composite::new(f, x * n)
        .stage(1, ix, n)
        .stage(r, mu, 1)
        .then(px)
        .materialize();

    // α is a morphism of right H-comodules onto the induced coaction.
    let l = Composite::new(f, md).then(&alpha).then(&coaction);
    let rr = Composite::new(f, md).then(rho).stage(1, &alpha, n);
    if l.agrees(&rr).is_some() {
        return Err(fail("(alpha-comodule)"));
    }

    // The cross object is itself a Hopf module.
    let cross_mod = HopfModule::new_unchecked(Arc::clone(h), x, action.clone(), coaction.clone())?;
    let rep = check_hopf_module(&cross_mod);
    if let Some(c) = rep.first_failure() {
        return Err(fail(&format!("(cross-module {})", c.label)));
    }

    Ok(CrossObject {
        nabla,
        split,
        action,
        coaction,
        alpha,
        alpha_inv,
    })
}

/// The twisted action `φ^α = φ∘(q⊗μ)∘(ρ⊗H)`, re-verifying `q^α = q`,
/// `∇^α = ∇`, `(φ^α)^α = φ^α` and `φ∘(i⊗H) = φ^α∘(i⊗H)`.
/// Memoized per module instance.
pub fn phi_alpha(m: &HopfModule, coinv: &CoinvariantSplit) -> Result<Mor> {
    m.cache
        .phi_alpha
        .get_or_init(|| compute_phi_alpha(m, coinv))
        .clone()
}

fn compute_phi_alpha(m: &HopfModule, coinv: &CoinvariantSplit) -> Result<Mor> {
    let h = m.h();
    let (f, n, md) = (h.field(), h.dim(), m.dim());
    let (phi, rho) = (m.action(), m.coaction());
    let mu = h.mul();
    let (q, p, i, r) = (&coinv.q, coinv.p(), coinv.i(), coinv.rank());
    let fail = |label: &str| Error::LawFailure {
        label: label.into(),
    };

    let pa_pipe = || {
        Composite::new(f, md * n)
            .stage(1, rho, n)
            .stage(1, q, n * n)
            .stage(md, mu, 1)
            .then(phi)
    };
    let pa = pa_pipe().materialize();

    // (idemp-m-alfa)  q^α = q
    let qa = Composite::new(f, md)
        .then(rho)
        .stage(md, h.antipode(), 1)
        .then(&pa)
        .materialize();
    if &qa != q {
        return Err(fail("(idemp-m-alfa)"));
    }
    // ∇^α = ∇
    let nabla = Composite::new(f, r * n)
        .stage(1, i, n)
        .then(phi)
        .then(rho)
        .stage(1, p, n);
    let nabla_a = Composite::new(f, r * n)
        .stage(1, i, n)
        .then(&pa)
        .then(rho)
        .stage(1, p, n);
    if nabla.agrees(&nabla_a).is_some() {
        return Err(fail("(nabla-alfa)"));
    }
    // (φ^α)^α = φ^α
    let paa = Composite::new(f, md * n)
        .stage(1, rho, n)
        .stage(1, &qa, n * n)
        .stage(md, mu, 1)
        .then(&pa);
    if paa.agrees(&pa_pipe()).is_some() {
        return Err(fail("(phi-alfa-idempotent)"));
    }
    // (coinv-morphism-2)  φ∘(i⊗H) = φ^α∘(i⊗H)
    let l = Composite::new(f, r * n).stage(1, i, n).then(phi);
    let rr = Composite::new(f, r * n).stage(1, i, n).then(&pa);
    if l.agrees(&rr).is_some() {
        return Err(fail("(coinv-morphism-2)"));
    }

    Ok(pa)
}

pub(crate) fn is_strong_with_base(m: &HopfModule, base_l: &BaseObject) -> bool {
    let h = m.h();
    let (f, n, md) = (h.field(), h.dim(), m.dim());
    let phi = m.action();
    let il = base_l.i();
    let rl = base_l.rank();
    // (c1)  φ∘((φ∘(M⊗i_L))⊗H) = φ∘(M⊗(μ∘(i_L⊗H)))
    let l = Composite::new(f, md * rl * n)
        .stage(md, il, n)
        .stage(1, phi, n)
        .then(phi);
    let r = Composite::new(f, md * rl * n)
        .stage(md, il, n)
        .stage(md, h.mul(), 1)
        .then(phi);
    l.agrees(&r).is_none()
}

/// The strongness test (c1).
pub fn is_strong(m: &HopfModule) -> Result<bool> {
    let base_l = m.h().base_object(Side::Left)?;
    Ok(is_strong_with_base(m, &base_l))
}

/// `φ∘(i_M⊗μ) = φ∘(i_M⊗μ)∘(∇_M⊗H)`, which holds for every Hopf module.
pub fn check_c2(m: &HopfModule) -> Result<bool> {
    let coinv = coinvariants(m)?;
    let cross = cross_object(m, &coinv)?;
    Ok(check_c2_with(m, &coinv, &cross))
}

pub(crate) fn check_c2_with(m: &HopfModule, coinv: &CoinvariantSplit, cross: &CrossObject) -> bool {
    let h = m.h();
    let (f, n) = (h.field(), h.dim());
    let r = coinv.rank();
    let l = Composite::new(f, r * n * n)
        .stage(r, h.mul(), 1)
        .stage(1, coinv.i(), n)
        .then(m.action());
    let rr = Composite::new(f, r * n * n)
        .stage(1, &cross.nabla, n)
        .stage(r, h.mul(), 1)
        .stage(1, coinv.i(), n)
        .then(m.action());
    l.agrees(&rr).is_none()
}

fn require_same_h(a: &HopfModule, b: &HopfModule) -> Result<()> {
    if a.same_h(b) {
        Ok(())
    } else {
        Err(Error::HMismatch)
    }
}

/// `ρ_N∘f = (f⊗H)∘ρ_M`.
pub fn is_comodule_morphism(f: &Mor, m: &HopfModule, n_mod: &HopfModule) -> Result<bool> {
    require_same_h(m, n_mod)?;
    let h = m.h();
    let (fld, n) = (h.field(), h.dim());
    let l = Composite::new(fld, m.dim()).then(f).then(n_mod.coaction());
    let r = Composite::new(fld, m.dim())
        .then(m.coaction())
        .stage(1, f, n);
    Ok(l.agrees(&r).is_none())
}

/// `φ_N^{α_N}∘(f⊗H) = f∘φ_M^{α_M}`.
pub fn is_quasilinear(f: &Mor, m: &HopfModule, n_mod: &HopfModule) -> Result<bool> {
    require_same_h(m, n_mod)?;
    let h = m.h();
    let (fld, n) = (h.field(), h.dim());
    let pa_m = phi_alpha(m, &coinvariants(m)?)?;
    let pa_n = phi_alpha(n_mod, &coinvariants(n_mod)?)?;
    let l = Composite::new(fld, m.dim() * n)
        .stage(1, f, n)
        .then(&pa_n);
    let r = Composite::new(fld, m.dim() * n).then(&pa_m).then(f);
    Ok(l.agrees(&r).is_none())
}

/// A Hopf module morphism is a right comodule morphism that is quasilinear.
pub fn is_hopf_module_morphism(f: &Mor, m: &HopfModule, n_mod: &HopfModule) -> Result<bool> {
    Ok(is_comodule_morphism(f, m, n_mod)? && is_quasilinear(f, m, n_mod)?)
}

/// The fundamental theorem: `α_M : M → M^{coH}×H` as a certified two-sided
/// isomorphism of Hopf modules, with the checked evidence attached.
pub fn fundamental_theorem(m: &HopfModule) -> Result<CertifiedIso> {
    let coinv = coinvariants(m)?;
    let cross = cross_object(m, &coinv)?;
    let h = m.h();
    let cross_mod = HopfModule::new_unchecked(
        Arc::clone(h),
        cross.dim(),
        cross.action.clone(),
        cross.coaction.clone(),
    )?;

    let mut evidence = LawReport::new();
    evidence.record_bool(
        "(alpha-right-inverse)",
        cross.alpha.compose(&cross.alpha_inv)?.is_identity(),
    );
    evidence.record_bool(
        "(alpha-left-inverse)",
        cross.alpha_inv.compose(&cross.alpha)?.is_identity(),
    );
    evidence.record_bool(
        "(alpha-comodule)",
        is_comodule_morphism(&cross.alpha, m, &cross_mod)?,
    );
    evidence.record_bool(
        "(alpha-inv-comodule)",
        is_comodule_morphism(&cross.alpha_inv, &cross_mod, m)?,
    );
    evidence.record_bool(
        "(alpha-quasilinear)",
        is_quasilinear(&cross.alpha, m, &cross_mod)?,
    );
    evidence.record_bool(
        "(alpha-inv-quasilinear)",
        is_quasilinear(&cross.alpha_inv, &cross_mod, m)?,
    );

    match evidence.first_failure() {
        None => Ok(CertifiedIso {
            forward: cross.alpha.clone(),
            inverse: cross.alpha_inv.clone(),
            evidence,
        }),
        Some(c) => Err(Error::LawFailure {
            label: c.label.clone(),
        }),
    }
}
