use crate::spanv::{SpanV, VCell1};
use crate::vbackend::VBackend;

use super::bimonoid::check_oplax_bimonoid;
use super::convolution::Convolution;
use super::kit::{expect_cell, Kit};
use super::morita::{check_oplax_inverse, Composition, MoritaCheck};
use super::{AntipodeData, CheckReport, Counterexample, MoritaContextData, OplaxBimonoidData, StructError};

/// The context `(1_M, s, τ₁, τ₂)` in the convolution category.
pub fn convolution_context<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    atp: &AntipodeData<B>,
) -> MoritaContextData<B> {
    MoritaContextData {
        p: e.identity_cell(&bi.monoid.carrier),
        q: atp.s.clone(),
        mu: atp.tau1.clone(),
        tau: atp.tau2.clone(),
    }
}

/// τ₁: 1⊙s ⇒ ε;j and τ₂: s⊙1 ⇒ ε;j when they exist uniquely.
pub fn infer_antipode<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    s: &VCell1<B>,
) -> Result<Option<AntipodeData<B>>, StructError> {
    let conv = Convolution::new(e, &bi.comonoid, &bi.monoid);
    let one = e.identity_cell(&bi.monoid.carrier);
    let unit = conv.unit()?;
    let t1 = e.unique_2cell(&conv.tensor(&one, s)?, &unit)?;
    let t2 = e.unique_2cell(&conv.tensor(s, &one)?, &unit)?;
    Ok(t1.zip(t2).map(|(tau1, tau2)| AntipodeData { s: s.clone(), tau1, tau2 }))
}

/// Bimonoid records followed by the oplax-inverse records of the
/// antipode context, prefixed `antipode.`.
pub fn check_oplax_hopf<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    atp: &AntipodeData<B>,
) -> Result<CheckReport, StructError> {
    let mut report = check_oplax_bimonoid(e, bi)?;
    expect_cell("antipode", &atp.s, &bi.monoid.carrier, &bi.monoid.carrier)?;
    let conv = Convolution::new(e, &bi.comonoid, &bi.monoid);
    let MoritaCheck { report: inv, .. } = check_oplax_inverse(&conv, &convolution_context(e, bi, atp))?;
    report.extend_prefixed("antipode", inv);
    Ok(report)
}

/// `(1⊗δ);(m⊗1)` on `M⊗M`.
pub fn fusion_cell<B: VBackend>(e: &SpanV<B>, bi: &OplaxBimonoidData<B>) -> Result<VCell1<B>, StructError> {
    let k = Kit::new(e, &bi.monoid.carrier);
    let i1 = k.id(1);
    Ok(k.c(&[&k.t(&[&i1, &bi.comonoid.lcm]), &k.t(&[&bi.monoid.mlt, &i1])])?)
}

/// Left `M`-linearity along `m⊗1` and right `M`-colinearity along `1⊗δ`,
/// each as an isomorphism of composite 1-cells.
pub fn check_bimodule_morphism<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    g: &VCell1<B>,
) -> Result<CheckReport, StructError> {
    let k = Kit::new(e, &bi.monoid.carrier);
    expect_cell("endomorphism", g, &k.pow(2), &k.pow(2))?;
    let i1 = k.id(1);
    let act = k.t(&[&bi.monoid.mlt, &i1]);
    let coact = k.t(&[&i1, &bi.comonoid.lcm]);
    let mut r = CheckReport::new();
    let l = k.c(&[&k.t(&[&i1, g]), &act])?;
    let rr = k.c(&[&act, g])?;
    r.record("linear", e.iso_mismatch(&l, &rr).map(Into::into));
    let l = k.c(&[g, &coact])?;
    let rr = k.c(&[&coact, &k.t(&[g, &i1])])?;
    r.record("colinear", e.iso_mismatch(&l, &rr).map(Into::into));
    Ok(r)
}

/// The candidate must be a bimodule-bicomodule endomorphism of `M⊗M`
/// forming an oplax inverse of the fusion cell under composition, with
/// μ: fusion;candidate ⇒ 1 and τ: candidate;fusion ⇒ 1 the unique maps.
pub fn check_fusion_inverse<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    candidate: &VCell1<B>,
) -> Result<CheckReport, StructError> {
    let mut report = CheckReport::new();
    let bimod = check_bimodule_morphism(e, bi, candidate)?;
    if !bimod.passed() {
        let why = bimod.failing_ids().join(", ");
        return Err(StructError::NotBimodule(format!("candidate is not {why}")));
    }
    report.extend_prefixed("candidate", bimod);
    let c = fusion_cell(e, bi)?;
    report.extend_prefixed("fusion", check_bimodule_morphism(e, bi, &c)?);
    let obj = e.tensor_fam(&bi.monoid.carrier, &bi.monoid.carrier);
    let one = e.identity_cell(&obj);
    let mu = e.unique_2cell(&e.compose(&c, candidate)?, &one)?;
    let tau = e.unique_2cell(&e.compose(candidate, &c)?, &one)?;
    let missing =
        |what: &str| Counterexample { element: Vec::new(), feet: None, detail: format!("no 2-cell {what} ⇒ 1") };
    match (mu, tau) {
        (Some(mu), Some(tau)) => {
            let comp = Composition { e, obj };
            let ctx = MoritaContextData { p: c, q: candidate.clone(), mu, tau };
            report.extend_prefixed("inverse", check_oplax_inverse(&comp, &ctx)?.report);
        }
        (mu, _) => {
            let what = if mu.is_none() { "fusion;candidate" } else { "candidate;fusion" };
            report.fail("inverse.mu", missing(what));
        }
    }
    Ok(report)
}

/// `F(f) = (1⊗δ);(1⊗f⊗1);(m⊗1)`.
pub fn convolution_to_endo<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    f: &VCell1<B>,
) -> Result<VCell1<B>, StructError> {
    let k = Kit::new(e, &bi.monoid.carrier);
    expect_cell("convolution argument", f, &k.pow(1), &k.pow(1))?;
    let i1 = k.id(1);
    Ok(k.c(&[&k.t(&[&i1, &bi.comonoid.lcm]), &k.t(&[&i1, f, &i1]), &k.t(&[&bi.monoid.mlt, &i1])])?)
}

/// `G(g) = (j⊗1);g;(1⊗ε)` for a bimodule-bicomodule endomorphism `g`.
pub fn endo_to_convolution<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    g: &VCell1<B>,
) -> Result<VCell1<B>, StructError> {
    let bimod = check_bimodule_morphism(e, bi, g)?;
    if !bimod.passed() {
        return Err(StructError::NotBimodule(format!("fails {}", bimod.failing_ids().join(", "))));
    }
    let k = Kit::new(e, &bi.monoid.carrier);
    let i1 = k.id(1);
    Ok(k.c(&[&k.t(&[&bi.monoid.uni, &i1]), g, &k.t(&[&i1, &bi.comonoid.lcu])])?)
}
