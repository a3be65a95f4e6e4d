use crate::spanv::{Mismatch, SpanV, SpanVError, VCell1, VCell2, VFam};
use crate::vbackend::VBackend;

use super::bimonoid::normalize_cells;
use super::kit::{expect_cell, fit, record_using};
use super::{CheckReport, Counterexample, MonoidData, OplaxBimonoidData, OplaxModuleData, StructError};

/// An oplax module morphism `(f, φ)` with φ: ρ_X;f ⇒ (f⊗1);ρ_Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphismData<B: VBackend> {
    pub source: OplaxModuleData<B>,
    pub target: OplaxModuleData<B>,
    pub f: VCell1<B>,
    pub phi: VCell2<B>,
}

/// 1-cells built from a module action over one monoid.
struct Act<'a, B: VBackend> {
    e: &'a SpanV<B>,
    mon: &'a MonoidData<B>,
}

impl<B: VBackend> Act<'_, B> {
    fn idm(&self) -> VCell1<B> {
        self.e.identity_cell(&self.mon.carrier)
    }

    fn t(&self, cells: &[&VCell1<B>]) -> VCell1<B> {
        self.e.tensor_all(cells)
    }

    fn c(&self, cells: &[&VCell1<B>]) -> Result<VCell1<B>, SpanVError> {
        self.e.compose_all(cells)
    }

    fn shape(&self, name: &str, x: &OplaxModuleData<B>) -> Result<(), StructError> {
        let xm = self.e.tensor_fam(&x.carrier, &self.mon.carrier);
        expect_cell(name, &x.rho, &xm, &x.carrier)
    }

    /// ξ: (1⊗m);ρ ⇒ (ρ⊗1);ρ and ξ₀: (1⊗j);ρ ⇒ 1_X.
    fn bounds(&self, x: &OplaxModuleData<B>) -> Result<[(VCell1<B>, VCell1<B>); 2], SpanVError> {
        let ix = self.e.identity_cell(&x.carrier);
        let rho = &x.rho;
        Ok([
            (self.c(&[&self.t(&[&ix, &self.mon.mlt]), rho])?, self.c(&[&self.t(&[rho, &self.idm()]), rho])?),
            (self.c(&[&self.t(&[&ix, &self.mon.uni]), rho])?, ix),
        ])
    }

    #[allow(clippy::type_complexity)]
    fn fit_module(
        &self,
        name: &str,
        x: &OplaxModuleData<B>,
    ) -> Result<[(VCell2<B>, Option<Counterexample>); 2], StructError> {
        self.shape(name, x)?;
        let [(s, t), (s0, t0)] = self.bounds(x)?;
        Ok([fit(self.e, &format!("{name}.xi"), &x.xi, &s, &t)?, fit(self.e, &format!("{name}.xi0"), &x.xi0, &s0, &t0)?])
    }
}

/// `mod1` (associativity of ξ on X⊗M⊗M⊗M) and `mod2` (unit of ξ against
/// ξ₀). A structure cell that is not a valid 2-cell fails both.
pub fn check_oplax_module<B: VBackend>(
    e: &SpanV<B>,
    x: &OplaxModuleData<B>,
    over: &MonoidData<B>,
) -> Result<CheckReport, StructError> {
    let a = Act { e, mon: over };
    let [(xi, bad), (xi0, bad0)] = a.fit_module("module", x)?;
    let (ix, im, rho, m, j) = (&e.identity_cell(&x.carrier), &a.idm(), &x.rho, &over.mlt, &over.uni);
    let mut report = CheckReport::new();
    record_using(&mut report, "mod1", &[&bad], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&a.t(&[ix, m, im])), &xi, None)?,
            e.whisker(None, &e.tensor_2cells(&xi, &e.identity_2cell(im)), Some(rho))?,
        ])?;
        let r = e.vcompose_chain(&[
            e.whisker(Some(&a.t(&[ix, im, m])), &xi, None)?,
            e.whisker(Some(&a.t(&[rho, im, im])), &xi, None)?,
        ])?;
        e.cells2_equal(&l, &r)
    });
    record_using(&mut report, "mod2", &[&bad, &bad0], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&a.t(&[ix, j, im])), &xi, None)?,
            e.whisker(None, &e.tensor_2cells(&xi0, &e.identity_2cell(im)), Some(rho))?,
        ])?;
        e.cells2_equal(&l, &e.identity_2cell(rho))
    });
    Ok(report)
}

/// The monoid acting on itself by multiplication, with identity structure
/// cells.
pub fn regular_module<B: VBackend>(e: &SpanV<B>, mon: &MonoidData<B>) -> Result<OplaxModuleData<B>, StructError> {
    let a = Act { e, mon };
    let x = OplaxModuleData {
        carrier: mon.carrier.clone(),
        rho: mon.mlt.clone(),
        xi: e.identity_2cell(&mon.mlt),
        xi0: e.identity_2cell(&mon.mlt),
    };
    a.shape("multiplication", &x)?;
    let [(s, t), (s0, t0)] = a.bounds(&x)?;
    let iso = |s: &VCell1<B>, t: &VCell1<B>, law: &str| {
        e.cells_isomorphic(s, t)?.ok_or_else(|| StructError::ShapeMismatch(format!("monoid fails {law}")))
    };
    Ok(OplaxModuleData { xi: iso(&s, &t, "associativity")?, xi0: iso(&s0, &t0, "the right unit law")?, ..x })
}

/// The unit object with action ε and structure cells ξ = χ, ξ₀ = χ₀.
pub fn unit_module<B: VBackend>(e: &SpanV<B>, bi: &OplaxBimonoidData<B>) -> Result<OplaxModuleData<B>, StructError> {
    let a = Act { e, mon: &bi.monoid };
    let x = OplaxModuleData {
        carrier: e.unit_fam(),
        rho: bi.comonoid.lcu.clone(),
        xi: bi.chi.clone(),
        xi0: bi.chi0.clone(),
    };
    a.shape("counit", &x)?;
    let [(s, t), (s0, t0)] = a.bounds(&x)?;
    let xi = e.coerce(&x.xi, &s, &t).map_err(|err| StructError::ShapeMismatch(format!("chi: {err}")))?;
    let xi0 = e.coerce(&x.xi0, &s0, &t0).map_err(|err| StructError::ShapeMismatch(format!("chi0: {err}")))?;
    Ok(OplaxModuleData { xi, xi0, ..x })
}

/// `1_X ⊗ σ_{Y,M} ⊗ 1_M`.
fn inner_swap<B: VBackend>(e: &SpanV<B>, x: &VFam<B::Obj>, y: &VFam<B::Obj>, m: &VFam<B::Obj>) -> VCell1<B> {
    e.tensor_all(&[&e.identity_cell(x), &e.braiding_cell(y, m), &e.identity_cell(m)])
}

/// `(1⊗1⊗δ);(1⊗σ⊗1)`: split the acting element and route one copy to each
/// factor.
fn split_action<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    x: &VFam<B::Obj>,
    y: &VFam<B::Obj>,
) -> Result<VCell1<B>, SpanVError> {
    let (ix, iy) = (e.identity_cell(x), e.identity_cell(y));
    e.compose(&e.tensor_all(&[&ix, &iy, &bi.comonoid.lcm]), &inner_swap(e, x, y, &bi.monoid.carrier))
}

/// `X⊗Y` with action `(1⊗1⊗δ);(1⊗σ⊗1);(ρ_X⊗ρ_Y)`; ξ pastes `1⊗1⊗θ` over
/// `ξ_X⊗ξ_Y`, and ξ₀ pastes `1⊗1⊗θ₀` over `ξ₀_X⊗ξ₀_Y`.
pub fn tensor_modules<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    x: &OplaxModuleData<B>,
    y: &OplaxModuleData<B>,
) -> Result<OplaxModuleData<B>, StructError> {
    let a = Act { e, mon: &bi.monoid };
    a.shape("left module", x)?;
    a.shape("right module", y)?;
    let [(theta, _), (theta0, _), _, _] = normalize_cells(e, bi)?;
    let mc = &bi.monoid.carrier;
    let (ix, iy, im) = (e.identity_cell(&x.carrier), e.identity_cell(&y.carrier), a.idm());
    let d = &bi.comonoid.lcm;
    let act = e.tensor(&x.rho, &y.rho);
    let swap_act = e.compose(&inner_swap(e, &x.carrier, &y.carrier, mc), &act)?;
    let rho = e.compose(&split_action(e, bi, &x.carrier, &y.carrier)?, &act)?;
    let out = OplaxModuleData {
        carrier: e.tensor_fam(&x.carrier, &y.carrier),
        rho: rho.clone(),
        xi: e.identity_2cell(&rho),
        xi0: e.identity_2cell(&rho),
    };
    let [(s, t), (s0, t0)] = a.bounds(&out)?;
    // x,y,a1,a2,b1,b2 -> x,a1,b1,y,a2,b2
    let mm = e.tensor_fam(mc, mc);
    let shuffle = e.compose(
        &e.tensor_all(&[&ix, &e.braiding_cell(&y.carrier, mc), &e.identity_cell(&mm), &im]),
        &e.tensor_all(&[&ix, &im, &e.braiding_cell(&e.tensor_fam(&y.carrier, mc), mc), &im]),
    )?;
    let pre = e.compose(&e.tensor_all(&[&ix, &iy, d, d]), &shuffle)?;
    let xi = e.vcompose_chain(&[
        e.whisker(
            None,
            &e.tensor_2cells_all(&[&e.identity_2cell(&ix), &e.identity_2cell(&iy), &theta]),
            Some(&swap_act),
        )?,
        e.whisker(Some(&pre), &e.tensor_2cells(&x.xi, &y.xi), None)?,
    ])?;
    let xi0 = e.vcompose_chain(&[
        e.whisker(
            None,
            &e.tensor_2cells_all(&[&e.identity_2cell(&ix), &e.identity_2cell(&iy), &theta0]),
            Some(&swap_act),
        )?,
        e.tensor_2cells(&x.xi0, &y.xi0),
    ])?;
    Ok(OplaxModuleData { xi: e.coerce(&xi, &s, &t)?, xi0: e.coerce(&xi0, &s0, &t0)?, ..out })
}

fn morphism_shape<B: VBackend>(
    a: &Act<'_, B>,
    d: &ModuleMorphismData<B>,
) -> Result<(VCell1<B>, VCell1<B>), StructError> {
    a.shape("source", &d.source)?;
    a.shape("target", &d.target)?;
    expect_cell("morphism", &d.f, &d.source.carrier, &d.target.carrier)?;
    let e = a.e;
    Ok((e.compose(&d.source.rho, &d.f)?, e.compose(&e.tensor(&d.f, &a.idm()), &d.target.rho)?))
}

/// `morph1` (φ against ξ) and `morph2` (φ against ξ₀).
pub fn check_module_morphism<B: VBackend>(
    e: &SpanV<B>,
    over: &MonoidData<B>,
    d: &ModuleMorphismData<B>,
) -> Result<CheckReport, StructError> {
    let a = Act { e, mon: over };
    let (s, t) = morphism_shape(&a, d)?;
    let [(xi_x, bx), (xi0_x, bx0)] = a.fit_module("source", &d.source)?;
    let [(xi_y, by), (xi0_y, by0)] = a.fit_module("target", &d.target)?;
    let (phi, bphi) = fit(e, "phi", &d.phi, &s, &t)?;
    let (ix, im, f) = (&e.identity_cell(&d.source.carrier), &a.idm(), &d.f);
    let mut report = CheckReport::new();
    record_using(&mut report, "morph1", &[&bx, &by, &bphi], || {
        let l = e.vcompose_chain(&[
            e.whisker(None, &xi_x, Some(f))?,
            e.whisker(Some(&a.t(&[&d.source.rho, im])), &phi, None)?,
            e.whisker(None, &e.tensor_2cells(&phi, &e.identity_2cell(im)), Some(&d.target.rho))?,
        ])?;
        let r = e.vcompose_chain(&[
            e.whisker(Some(&a.t(&[ix, &over.mlt])), &phi, None)?,
            e.whisker(Some(&a.t(&[f, im, im])), &xi_y, None)?,
        ])?;
        e.cells2_equal(&l, &r)
    });
    record_using(&mut report, "morph2", &[&bx0, &by0, &bphi], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&a.t(&[ix, &over.uni])), &phi, None)?,
            e.whisker(Some(f), &xi0_y, None)?,
        ])?;
        let r = e.whisker(None, &xi0_x, Some(f))?;
        e.cells2_equal(&l, &r)
    });
    Ok(report)
}

/// `transformation`: α: f ⇒ g is compatible with φ and ψ.
pub fn check_module_transformation<B: VBackend>(
    e: &SpanV<B>,
    over: &MonoidData<B>,
    from: &ModuleMorphismData<B>,
    to: &ModuleMorphismData<B>,
    alpha: &VCell2<B>,
) -> Result<CheckReport, StructError> {
    if from.source != to.source || from.target != to.target {
        return Err(StructError::ShapeMismatch("module morphisms have different endpoints".into()));
    }
    let a = Act { e, mon: over };
    let (s, t) = morphism_shape(&a, from)?;
    let (s2, t2) = morphism_shape(&a, to)?;
    let (phi, bphi) = fit(e, "phi", &from.phi, &s, &t)?;
    let (psi, bpsi) = fit(e, "psi", &to.phi, &s2, &t2)?;
    let (alpha, balpha) = fit(e, "alpha", alpha, &from.f, &to.f)?;
    let mut report = CheckReport::new();
    record_using(&mut report, "transformation", &[&bphi, &bpsi, &balpha], || {
        let l = e.vcompose_chain(&[
            phi.clone(),
            e.whisker(None, &e.tensor_2cells(&alpha, &e.identity_2cell(&a.idm())), Some(&to.target.rho))?,
        ])?;
        let r = e.vcompose_chain(&[e.whisker(Some(&from.source.rho), &alpha, None)?, psi.clone()])?;
        e.cells2_equal(&l, &r)
    });
    Ok(report)
}

/// `(f⊗g, τ)` where τ whiskers `φ⊗ψ` by `(1⊗1⊗δ);(1⊗σ⊗1)`.
pub fn tensor_module_morphisms<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    a: &ModuleMorphismData<B>,
    b: &ModuleMorphismData<B>,
) -> Result<ModuleMorphismData<B>, StructError> {
    let act = Act { e, mon: &bi.monoid };
    morphism_shape(&act, a)?;
    morphism_shape(&act, b)?;
    let source = tensor_modules(e, bi, &a.source, &b.source)?;
    let target = tensor_modules(e, bi, &a.target, &b.target)?;
    let f = e.tensor(&a.f, &b.f);
    let tau = e.whisker(
        Some(&split_action(e, bi, &a.source.carrier, &b.source.carrier)?),
        &e.tensor_2cells(&a.phi, &b.phi),
        None,
    )?;
    let out = ModuleMorphismData { source, target, f, phi: tau.clone() };
    let (s, t) = morphism_shape(&act, &out)?;
    Ok(ModuleMorphismData { phi: e.coerce(&tau, &s, &t)?, ..out })
}

/// Whether `φ` is the canonical comparison `ρ_X;f ≅ (f⊗1);ρ_Y`.
pub fn is_strict_morphism<B: VBackend>(
    e: &SpanV<B>,
    over: &MonoidData<B>,
    d: &ModuleMorphismData<B>,
) -> Result<Option<Mismatch>, StructError> {
    let (s, t) = morphism_shape(&Act { e, mon: over }, d)?;
    let iso = e
        .cells_isomorphic(&s, &t)?
        .ok_or_else(|| StructError::ShapeMismatch("ρ_X;f and (f⊗1);ρ_Y are not isomorphic".into()))?;
    Ok(e.cells2_equal(&d.phi, &iso)?)
}
