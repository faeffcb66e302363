//! Right `H_L`-modules, the coequalizer tensor `N⊗_{H_L}H`, the induction
//! and coinvariants functors, and the certified equivalence between strong
//! Hopf modules and right `H_L`-modules.
//!
//! Every morphism defined here "as the unique morphism such that …" is
//! obtained by solving through a section and then re-verified against its
//! defining display, so a returned map is always a machine-checked witness.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{coequalizer, CoequalizerDatum, Composite, Mor};
use crate::hopfmod::{
    check_hopf_module, coinvariants, cross_object, is_hopf_module_morphism, is_strong_with_base,
    phi_alpha, CoinvariantSplit, CrossObject, HopfModule,
};
use crate::report::LawReport;
use crate::whq::{BaseObject, Side, WeakHopfQuasigroup};

/// A right module `(N, ψ)` over the base monoid `H_L` of a fixed `H`.
#[derive(Debug, Clone)]
pub struct RightHLModule {
    over: Arc<WeakHopfQuasigroup>,
    base: BaseObject,
    dim: usize,
    /// Action `N⊗H_L → N`.
    action: Mor,
}

impl RightHLModule {
    /// Validated constructor: requires the left base object and the module
    /// laws `ψ∘(N⊗μ_{H_L}) = ψ∘(ψ⊗H_L)`, `ψ∘(N⊗η_{H_L}) = id`.
    pub fn new(
        over: Arc<WeakHopfQuasigroup>,
        base: BaseObject,
        dim: usize,
        action: Mor,
    ) -> Result<Self> {
        let n = Self::new_unchecked(over, base, dim, action)?;
        if !check_right_module(&n) {
            return Err(Error::LawFailure {
                label: "(right-module)".into(),
            });
        }
        Ok(n)
    }

    pub fn new_unchecked(
        over: Arc<WeakHopfQuasigroup>,
        base: BaseObject,
        dim: usize,
        action: Mor,
    ) -> Result<Self> {
        if base.side != Side::Left {
            return Err(Error::LawFailure {
                label: "(base-side)".into(),
            });
        }
        let r = base.rank();
        if action.src() != dim * r || action.dst() != dim {
            return Err(Error::DimMismatch {
                op: "right module action",
                lhs_dst: dim,
                lhs_src: dim * r,
                rhs_dst: action.dst(),
                rhs_src: action.src(),
            });
        }
        if action.field() != over.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(RightHLModule {
            over,
            base,
            dim,
            action,
        })
    }

    pub fn h(&self) -> &Arc<WeakHopfQuasigroup> {
        &self.over
    }

    pub fn base(&self) -> &BaseObject {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &Mor {
        &self.action
    }
}

/// Exact check of the right `H_L`-module laws.
pub fn check_right_module(n: &RightHLModule) -> bool {
    let f = n.over.field();
    let (d, r) = (n.dim, n.base.rank());
    let psi = &n.action;
    let mul_b = n.base.monoid.mul();
    let unit_b = n.base.monoid.unit();
    let assoc_l = Composite::new(f, d * r * r).stage(d, mul_b, 1).then(psi);
    let assoc_r = Composite::new(f, d * r * r).stage(1, psi, r).then(psi);
    let unit = Composite::new(f, d).stage(d, unit_b, 1).then(psi);
    assoc_l.agrees(&assoc_r).is_none() && unit.agrees(&Composite::new(f, d)).is_none()
}

/// The induced Hopf module `N⊗_{H_L}H`: the coequalizer of `ψ_N⊗H` and
/// `N⊗(μ∘(i_L⊗H))`, carrying the unique action and coaction factored
/// through the quotient.
#[derive(Debug, Clone)]
pub struct InducedModule {
    pub base: RightHLModule,
    pub coeq: CoequalizerDatum,
    pub hopf: HopfModule,
}

impl InducedModule {
    pub fn quotient_dim(&self) -> usize {
        self.coeq.quotient_dim
    }

    /// The quotient surjection `n_N : N⊗H → N⊗_{H_L}H`.
    pub fn n(&self) -> &Mor {
        &self.coeq.n
    }
}

fn law(label: &str) -> Error {
    Error::LawFailure {
        label: label.into(),
    }
}

/// The induction functor on objects.  Builds the coequalizer, factors the
/// coaction and action through it, and re-verifies: the defining displays,
/// that tensoring with `H` preserves the coequalizer, axioms (b1)–(b5),
/// strongness, `q∘n_N = n_N∘(N⊗Π^L)` and `φ^α = φ`.
pub fn induce(n_mod: &RightHLModule) -> Result<InducedModule> {
    let h = n_mod.h();
    let (f, nh, d) = (h.field(), h.dim(), n_mod.dim());
    let base = n_mod.base();
    let r = base.rank();
    let (mu, delta, eta) = (h.mul(), h.comul(), h.unit());
    let psi = n_mod.action();

    // φ_H = μ∘(i_L⊗H) and the defining parallel pair on N⊗H_L⊗H.
    let phi_h = Composite::new(f, r * nh)
        .stage(1, base.i(), nh)
        .then(mu)
        .materialize();
    let id_h = Mor::identity(f, nh);
    let id_n = Mor::identity(f, d);
    let pair_l = psi.kron(&id_h)?;
    let pair_r = id_n.kron(&phi_h)?;
    let coeq = coequalizer(&pair_l, &pair_r)?;
    let t = coeq.quotient_dim;
    let nn = &coeq.n;
    let sec = coeq.section();
    if nn.compose(&pair_l)? != nn.compose(&pair_r)? {
        return Err(law("(coequalizer-1)"));
    }

    // Tensoring with H preserves this coequalizer: n_N⊗H still kills the
    // tensored pair and splits, which is exactly what the factorization of
    // the action below uses.
    let diff = pair_l.sub(&pair_r)?;
    let killed = Composite::new(f, d * r * nh * nh)
        .stage(1, &diff, nh)
        .stage(1, nn, nh);
    if !killed.is_zero() {
        return Err(law("(coequalizer-tensored)"));
    }
    let split_witness = Composite::new(f, t * nh)
        .stage(1, sec, nh)
        .stage(1, nn, nh);
    if !split_witness.is_identity() {
        return Err(law("(coequalizer-tensored-section)"));
    }

    // (comodule)  ρ∘n_N = (n_N⊗H)∘(N⊗δ)
    let rho = Composite::new(f, t)
        .then(sec)
        .stage(d, delta, 1)
        .stage(1, nn, nh)
        .materialize();
    let disp_l = Composite::new(f, d * nh).then(nn).then(&rho);
    let disp_r = Composite::new(f, d * nh)
        .stage(d, delta, 1)
        .stage(1, nn, nh);
    if disp_l.agrees(&disp_r).is_some() {
        return Err(law("(comodule)"));
    }

    // (quasi-module)  φ∘(n_N⊗H) = n_N∘(N⊗μ)
    let phi = Composite::new(f, t * nh)
        .stage(1, sec, nh)
        .stage(d, mu, 1)
        .then(nn)
        .materialize();
    let disp_l = Composite::new(f, d * nh * nh)
        .stage(1, nn, nh)
        .then(&phi);
    let disp_r = Composite::new(f, d * nh * nh)
        .stage(d, mu, 1)
        .then(nn);
    if disp_l.agrees(&disp_r).is_some() {
        return Err(law("(quasi-module)"));
    }

    // (b1)–(b5) for the quotient.
    let hopf = HopfModule::new(Arc::clone(h), t, phi, rho)?;

    // Induced modules are strong and their action is α-invariant.
    if !is_strong_with_base(&hopf, base) {
        return Err(law("(c1)"));
    }
    let coinv = coinvariants(&hopf)?;
    let pro = h.projections()?;
    let idem_l = Composite::new(f, d * nh).then(nn).then(&coinv.q);
    let idem_r = Composite::new(f, d * nh)
        .stage(d, &pro.pi_l, 1)
        .then(nn);
    if idem_l.agrees(&idem_r).is_some() {
        return Err(law("(idem-strong)"));
    }
    let pa = phi_alpha(&hopf, &coinv)?;
    if &pa != hopf.action() {
        return Err(law("(action-induction)"));
    }

    let _ = eta;
    Ok(InducedModule {
        base: n_mod.clone(),
        coeq,
        hopf,
    })
}

/// The induction functor on morphisms: the unique `f⊗_{H_L}H` with
/// `n_P∘(f⊗H) = (f⊗_{H_L}H)∘n_N`, verified to be a Hopf module morphism.
pub fn induce_morphism(f: &Mor, from: &InducedModule, to: &InducedModule) -> Result<Mor> {
    let h = from.base.h();
    if !Arc::ptr_eq(h, to.base.h()) {
        return Err(Error::HMismatch);
    }
    let (fld, nh) = (h.field(), h.dim());
    let (n_mod, p_mod) = (&from.base, &to.base);
    if f.src() != n_mod.dim() || f.dst() != p_mod.dim() {
        return Err(Error::DimMismatch {
            op: "induce_morphism",
            lhs_dst: p_mod.dim(),
            lhs_src: n_mod.dim(),
            rhs_dst: f.dst(),
            rhs_src: f.src(),
        });
    }
    // f must be H_L-linear.
    let r = n_mod.base().rank();
    let equiv_l = Composite::new(fld, n_mod.dim() * r)
        .stage(1, f, r)
        .then(p_mod.action());
    let equiv_r = Composite::new(fld, n_mod.dim() * r)
        .then(n_mod.action())
        .then(f);
    if equiv_l.agrees(&equiv_r).is_some() {
        return Err(Error::NotEquivariant);
    }

    let induced = Composite::new(fld, from.quotient_dim())
        .then(from.coeq.section())
        .stage(1, f, nh)
        .then(to.n())
        .materialize();
    // (mor-induction)  n_P∘(f⊗H) = (f⊗_{H_L}H)∘n_N
    let disp_l = Composite::new(fld, n_mod.dim() * nh)
        .stage(1, f, nh)
        .then(to.n());
    let disp_r = Composite::new(fld, n_mod.dim() * nh)
        .then(from.n())
        .then(&induced);
    if disp_l.agrees(&disp_r).is_some() {
        return Err(law("(mor-induction)"));
    }
    if !is_hopf_module_morphism(&induced, &from.hopf, &to.hopf)? {
        return Err(Error::NotMorphism);
    }
    Ok(induced)
}

/// The coinvariants functor on objects: `(M^{coH}, ψ = p∘φ∘(i⊗i_L))`,
/// defined for strong modules only.
pub fn coinv_functor(m: &HopfModule) -> Result<RightHLModule> {
    let base = m.h().base_object(Side::Left)?;
    if !is_strong_with_base(m, &base) {
        return Err(Error::NotStrong);
    }
    coinv_functor_with(m, &base, &coinvariants(m)?)
}

pub(crate) fn coinv_functor_with(
    m: &HopfModule,
    base: &BaseObject,
    coinv: &CoinvariantSplit,
) -> Result<RightHLModule> {
    if !is_strong_with_base(m, base) {
        return Err(Error::NotStrong);
    }
    let h = m.h();
    let (f, nh) = (h.field(), h.dim());
    let (r, rl) = (coinv.rank(), base.rank());
    let psi = Composite::new(f, r * rl)
        .stage(r, base.i(), 1)
        .stage(1, coinv.i(), nh)
        .then(m.action())
        .then(coinv.p())
        .materialize();
    RightHLModule::new(Arc::clone(h), base.clone(), r, psi)
}

/// The coinvariants functor on morphisms: the unique `g^{coH}` with
/// `i_T∘g^{coH} = g∘i_M`, verified `H_L`-linear.
pub fn coinv_morphism(g: &Mor, m: &HopfModule, t: &HopfModule) -> Result<Mor> {
    if !m.same_h(t) {
        return Err(Error::HMismatch);
    }
    if !is_hopf_module_morphism(g, m, t)? {
        return Err(Error::NotMorphism);
    }
    let base = m.h().base_object(Side::Left)?;
    let (cm, ct) = (coinvariants(m)?, coinvariants(t)?);
    coinv_morphism_with(g, m, t, &base, &cm, &ct)
}

pub(crate) fn coinv_morphism_with(
    g: &Mor,
    m: &HopfModule,
    t: &HopfModule,
    base: &BaseObject,
    cm: &CoinvariantSplit,
    ct: &CoinvariantSplit,
) -> Result<Mor> {
    let g_co = ct.p().compose(g)?.compose(cm.i())?;
    // (coinv-morphism)  i_T∘g^{coH} = g∘i_M
    if ct.i().compose(&g_co)? != g.compose(cm.i())? {
        return Err(law("(coinv-morphism)"));
    }
    // (coinv-morphism-1)  g^{coH}∘p_M = p_T∘g
    if g_co.compose(cm.p())? != ct.p().compose(g)? {
        return Err(law("(coinv-morphism-1)"));
    }
    // H_L-linearity against the coinvariant actions.
    let (gm, gt) = (
        coinv_functor_with(m, base, cm)?,
        coinv_functor_with(t, base, ct)?,
    );
    let f = m.h().field();
    let rl = base.rank();
    let lin_l = Composite::new(f, cm.rank() * rl)
        .stage(1, &g_co, rl)
        .then(gt.action());
    let lin_r = Composite::new(f, cm.rank() * rl)
        .then(gm.action())
        .then(&g_co);
    if lin_l.agrees(&lin_r).is_some() {
        return Err(law("(coinv-morphism-linearity)"));
    }
    Ok(g_co)
}

/// Everything the counit side of the equivalence needs for one strong
/// Hopf module.
pub(crate) struct StrongAnalysis {
    /// `F(G(M))`.
    pub fgm: InducedModule,
    pub s: Mor,
    pub v: Mor,
}

/// Analyze a strong Hopf module: coinvariants, cross object, `s_M`, and
/// the counit `v_M = α^{-1}∘s_M`, with every display re-verified and the
/// verified labels reported.
pub(crate) fn analyze_strong_module(
    m: &HopfModule,
    base: &BaseObject,
) -> Result<(StrongAnalysis, LawReport)> {
    let mut rep = LawReport::new();
    let h = m.h();
    let (f, nh) = (h.field(), h.dim());
    if !is_strong_with_base(m, base) {
        return Err(Error::NotStrong);
    }
    rep.record_bool("(c1)", true);

    let coinv = coinvariants(m)?;
    let cross = cross_object(m, &coinv)?;
    if !check_c2_with_parts(m, &coinv, &cross) {
        return Err(law("(c2)"));
    }
    rep.record_bool("(c2)", true);

    let gm = coinv_functor_with(m, base, &coinv)?;
    let r = coinv.rank();
    let rl = base.rank();

    // p_{M^{coH}⊗H} coequalizes the defining pair of G(M)⊗_{H_L}H.
    let px = &cross.split.p;
    let pre_l = Composite::new(f, r * rl * nh)
        .stage(1, gm.action(), nh)
        .then(px);
    let phi_h = Composite::new(f, rl * nh)
        .stage(1, base.i(), nh)
        .then(h.mul())
        .materialize();
    let pre_r = Composite::new(f, r * rl * nh)
        .stage(r, &phi_h, 1)
        .then(px);
    if pre_l.agrees(&pre_r).is_some() {
        return Err(law("(s-coequalizes)"));
    }
    rep.record_bool("(s-coequalizes)", true);

    let fgm = induce(&gm)?;
    // (iso-aux)  s∘n_{M^{coH}} = p_{M^{coH}⊗H}
    let s = fgm
        .coeq
        .factor_through(px)
        .map_err(|_| law("(iso-aux)"))?;
    rep.record_bool("(iso-aux)", true);
    let s_inv = fgm.n().compose(&cross.split.i)?;
    if !s.compose(&s_inv)?.is_identity() || !s_inv.compose(&s)?.is_identity() {
        return Err(law("(s-iso)"));
    }
    rep.record_bool("(s-iso)", true);
    let cross_mod = HopfModule::new_unchecked(
        Arc::clone(h),
        cross.dim(),
        cross.action.clone(),
        cross.coaction.clone(),
    )?;
    if !is_hopf_module_morphism(&s, &fgm.hopf, &cross_mod)? {
        return Err(law("(s-morphism)"));
    }
    rep.record_bool("(s-morphism)", true);

    // Counit v = α^{-1}∘s and its defining display.
    let v = cross.alpha_inv.compose(&s)?;
    let v_inv = s_inv.compose(&cross.alpha)?;
    let counit_l = Composite::new(f, r * nh).then(fgm.n()).then(&v);
    let counit_r = Composite::new(f, r * nh)
        .stage(1, coinv.i(), nh)
        .then(m.action());
    if counit_l.agrees(&counit_r).is_some() {
        return Err(law("(counit)"));
    }
    rep.record_bool("(counit)", true);
    if !v.compose(&v_inv)?.is_identity() || !v_inv.compose(&v)?.is_identity() {
        return Err(law("(v-iso)"));
    }
    rep.record_bool("(v-iso)", true);
    if !is_hopf_module_morphism(&v, &fgm.hopf, m)? {
        return Err(law("(v-morphism)"));
    }
    rep.record_bool("(v-morphism)", true);

    Ok((StrongAnalysis { fgm, s, v }, rep))
}

fn check_c2_with_parts(m: &HopfModule, coinv: &CoinvariantSplit, cross: &CrossObject) -> bool {
    crate::hopfmod::check_c2_with(m, coinv, cross)
}

/// `s_M : M^{coH}⊗_{H_L}H → M^{coH}×H`, certified.
pub fn s_iso(m: &HopfModule) -> Result<Mor> {
    let base = m.h().base_object(Side::Left)?;
    Ok(analyze_strong_module(m, &base)?.0.s)
}

/// Everything the unit side of the equivalence needs for one right module.
pub(crate) struct UnitAnalysis {
    pub induced: InducedModule,
    /// Coinvariants of `F(N)`.
    pub coinv: CoinvariantSplit,
    /// `u_N : N → GF(N)`.
    pub u: Mor,
}

pub(crate) fn analyze_right_module(n_mod: &RightHLModule) -> Result<(UnitAnalysis, LawReport)> {
    let mut rep = LawReport::new();
    if !check_right_module(n_mod) {
        return Err(law("(right-module)"));
    }
    rep.record_bool("(right-module)", true);
    let induced = induce(n_mod)?;
    rep.record_bool("(comodule)", true);
    rep.record_bool("(quasi-module)", true);
    rep.record_bool("(idem-strong)", true);
    rep.record_bool("(action-induction)", true);
    let (coinv, u, inner) = unit_maps(&induced)?;
    rep.merge("", inner);
    Ok((UnitAnalysis { induced, coinv, u }, rep))
}

/// Build and certify the unit `u_N` for an already induced module:
/// the (unit) and (mn) displays, the two-sided inverse `x_N = m_N∘i`, and
/// `H_L`-linearity of `u_N`.
fn unit_maps(induced: &InducedModule) -> Result<(CoinvariantSplit, Mor, LawReport)> {
    let mut rep = LawReport::new();
    let n_mod = &induced.base;
    let h = n_mod.h();
    let (f, nh, d) = (h.field(), h.dim(), n_mod.dim());
    let base = n_mod.base();
    let coinv = coinvariants(&induced.hopf)?;

    // (unit)  i_{N⊗_{H_L}H}∘u_N = n_N∘(N⊗η)
    let eta_insert = Composite::new(f, d)
        .stage(d, h.unit(), 1)
        .then(induced.n())
        .materialize();
    let u = coinv.p().compose(&eta_insert)?;
    if coinv.i().compose(&u)? != eta_insert {
        return Err(law("(unit)"));
    }
    rep.record_bool("(unit)", true);

    // (mn)  m_N∘n_N = ψ_N∘(N⊗p_L)
    let mn_rhs = Composite::new(f, d * nh)
        .stage(d, base.p(), 1)
        .then(n_mod.action())
        .materialize();
    let m_map = induced
        .coeq
        .factor_through(&mn_rhs)
        .map_err(|_| law("(mn)"))?;
    rep.record_bool("(mn)", true);

    let x = m_map.compose(coinv.i())?;
    if !u.compose(&x)?.is_identity() || !x.compose(&u)?.is_identity() {
        return Err(law("(u-iso)"));
    }
    rep.record_bool("(u-iso)", true);

    // u is a morphism of right H_L-modules.
    let gfn = coinv_functor_with(&induced.hopf, base, &coinv)?;
    let rl = base.rank();
    let lin_l = Composite::new(f, d * rl).stage(1, &u, rl).then(gfn.action());
    let lin_r = Composite::new(f, d * rl).then(n_mod.action()).then(&u);
    if lin_l.agrees(&lin_r).is_some() {
        return Err(law("(unit-linearity)"));
    }
    rep.record_bool("(unit-linearity)", true);

    Ok((coinv, u, rep))
}

/// An `H_L`-linear morphism between two of the sampled right modules,
/// used to certify naturality of the unit.
#[derive(Debug, Clone)]
pub struct HlMorphismSample {
    pub from: usize,
    pub to: usize,
    pub map: Mor,
}

/// The per-sample evidence of the equivalence between strong Hopf modules
/// and right `H_L`-modules.
#[derive(Debug, Clone)]
pub struct EquivalenceCertificate {
    pub report: LawReport,
}

impl EquivalenceCertificate {
    pub fn pass(&self) -> bool {
        self.report.all_pass()
    }
}

/// Certify the equivalence on a finite family: for each sampled right
/// module the unit `u_N` is a two-sided isomorphism (natural with respect
/// to the supplied morphisms), for each sampled strong Hopf module the
/// counit `v_M` is a two-sided isomorphism of Hopf modules, and both
/// triangle identities hold exactly.  Any failed display aborts with its
/// label.
pub fn certify_equivalence(
    h: &Arc<WeakHopfQuasigroup>,
    samples_n: &[RightHLModule],
    morphisms: &[HlMorphismSample],
    samples_m: &[HopfModule],
) -> Result<EquivalenceCertificate> {
    let base = h.base_object(Side::Left)?;
    let mut report = LawReport::new();
    let mut unit_data = Vec::with_capacity(samples_n.len());

    for (k, n_mod) in samples_n.iter().enumerate() {
        if !Arc::ptr_eq(n_mod.h(), h) {
            return Err(Error::HMismatch);
        }
        let (data, rep) = analyze_right_module(n_mod)?;
        report.merge(&format!("[N{k}] "), rep);

        // Triangle 1: v_{F(N)}∘F(u_N) = id_{F(N)}.
        let (strong, _) = analyze_strong_module(&data.induced.hopf, &base)?;
        let f_u = induce_morphism(&data.u, &data.induced, &strong.fgm)?;
        if !strong.v.compose(&f_u)?.is_identity() {
            return Err(law("(triangle-1)"));
        }
        report.record_bool(format!("[N{k}] (triangle-1)"), true);
        unit_data.push(data);
    }

    for hm in morphisms {
        let (from, to) = (hm.from, hm.to);
        let (df, dt) = (&unit_data[from], &unit_data[to]);
        let f_f = induce_morphism(&hm.map, &df.induced, &dt.induced)?;
        let f_f_co = coinv_morphism_with(
            &f_f,
            &df.induced.hopf,
            &dt.induced.hopf,
            &base,
            &df.coinv,
            &dt.coinv,
        )?;
        // (unit-naturality)  (f⊗_{H_L}H)^{coH}∘u_N = u_P∘f
        if f_f_co.compose(&df.u)? != dt.u.compose(&hm.map)? {
            return Err(law("(unit-naturality)"));
        }
        report.record_bool(format!("[N{from}->N{to}] (unit-naturality)"), true);
    }

    for (k, m) in samples_m.iter().enumerate() {
        if !Arc::ptr_eq(m.h(), h) {
            return Err(Error::HMismatch);
        }
        // Strongness is the membership condition of the certified
        // subcategory, so it is checked before anything else.
        if !is_strong_with_base(m, &base) {
            return Err(Error::NotStrong);
        }
        let axioms = check_hopf_module(m);
        if let Some(c) = axioms.first_failure() {
            return Err(law(&c.label));
        }
        report.record_bool(format!("[M{k}] (b1)-(b5)"), true);
        let (strong, rep) = analyze_strong_module(m, &base)?;
        report.merge(&format!("[M{k}] "), rep);

        // Triangle 2: v_M^{coH}∘u_{G(M)} = id_{G(M)}, with F(G(M)) reused
        // from the counit analysis.
        let ct = coinvariants(m)?;
        let v_co = coinv_morphism_with(
            &strong.v,
            &strong.fgm.hopf,
            m,
            &base,
            &coinvariants(&strong.fgm.hopf)?,
            &ct,
        )?;
        let (_, u_gm, _) = unit_maps(&strong.fgm)?;
        if !v_co.compose(&u_gm)?.is_identity() {
            return Err(law("(triangle-2)"));
        }
        report.record_bool(format!("[M{k}] (triangle-2)"), true);
    }

    Ok(EquivalenceCertificate { report })
}
