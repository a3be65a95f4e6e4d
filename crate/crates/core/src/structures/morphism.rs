use crate::spanv::{SpanV, VCell1, VCell2, VFam};
use crate::vbackend::VBackend;

use super::bimonoid::normalize_cells;
use super::kit::{expect_cell, fit, record_using};
use super::{CheckReport, ComonoidData, Counterexample, MonoidData, OplaxBimonoidData, OplaxMorphismData, StructError};

type Fitted<B> = (VCell2<B>, Option<Counterexample>);

fn required<'a, B: VBackend>(name: &str, c: &'a Option<VCell2<B>>) -> Result<&'a VCell2<B>, StructError> {
    c.as_ref().ok_or_else(|| StructError::ShapeMismatch(format!("{name} is missing")))
}

fn endpoints<B: VBackend>(f: &VCell1<B>, a: &VFam<B::Obj>, b: &VFam<B::Obj>) -> Result<(), StructError> {
    expect_cell("morphism", f, a, b)
}

/// φ and φ₀ on their boundaries `m;f ⇒ (f⊗f);m` and `j;f ⇒ j`.
fn fit_monoid_part<B: VBackend>(
    e: &SpanV<B>,
    a: &MonoidData<B>,
    b: &MonoidData<B>,
    d: &OplaxMorphismData<B>,
) -> Result<[Fitted<B>; 2], StructError> {
    endpoints(&d.f, &a.carrier, &b.carrier)?;
    let f = &d.f;
    let phi = fit(e, "phi", required("phi", &d.phi)?, &e.compose(&a.mlt, f)?, &e.compose(&e.tensor(f, f), &b.mlt)?)?;
    let phi0 = fit(e, "phi0", required("phi0", &d.phi0)?, &e.compose(&a.uni, f)?, &b.uni)?;
    Ok([phi, phi0])
}

/// ψ and ψ₀ on their boundaries `δ;(f⊗f) ⇒ f;δ` and `ε ⇒ f;ε`.
fn fit_comonoid_part<B: VBackend>(
    e: &SpanV<B>,
    a: &ComonoidData<B>,
    b: &ComonoidData<B>,
    d: &OplaxMorphismData<B>,
) -> Result<[Fitted<B>; 2], StructError> {
    endpoints(&d.f, &a.carrier, &b.carrier)?;
    let f = &d.f;
    let psi = fit(e, "psi", required("psi", &d.psi)?, &e.compose(&a.lcm, &e.tensor(f, f))?, &e.compose(f, &b.lcm)?)?;
    let psi0 = fit(e, "psi0", required("psi0", &d.psi0)?, &a.lcu, &e.compose(f, &b.lcu)?)?;
    Ok([psi, psi0])
}

fn monoid_axioms<B: VBackend>(
    e: &SpanV<B>,
    a: &MonoidData<B>,
    b: &MonoidData<B>,
    f: &VCell1<B>,
    [(phi, bad), (phi0, bad0)]: &[Fitted<B>; 2],
) -> CheckReport {
    let ia = e.identity_cell(&a.carrier);
    let idf = e.identity_2cell(f);
    let mut r = CheckReport::new();
    record_using(&mut r, "phi_assoc", &[bad], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&e.tensor(&a.mlt, &ia)), phi, None)?,
            e.whisker(None, &e.tensor_2cells(phi, &idf), Some(&b.mlt))?,
        ])?;
        let rr = e.vcompose_chain(&[
            e.whisker(Some(&e.tensor(&ia, &a.mlt)), phi, None)?,
            e.whisker(None, &e.tensor_2cells(&idf, phi), Some(&b.mlt))?,
        ])?;
        e.cells2_equal(&l, &rr)
    });
    record_using(&mut r, "phi_unit_left", &[bad, bad0], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&e.tensor(&a.uni, &ia)), phi, None)?,
            e.whisker(None, &e.tensor_2cells(phi0, &idf), Some(&b.mlt))?,
        ])?;
        e.cells2_equal(&l, &idf)
    });
    record_using(&mut r, "phi_unit_right", &[bad, bad0], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&e.tensor(&ia, &a.uni)), phi, None)?,
            e.whisker(None, &e.tensor_2cells(&idf, phi0), Some(&b.mlt))?,
        ])?;
        e.cells2_equal(&l, &idf)
    });
    r
}

fn comonoid_axioms<B: VBackend>(
    e: &SpanV<B>,
    a: &ComonoidData<B>,
    b: &ComonoidData<B>,
    f: &VCell1<B>,
    [(psi, bad), (psi0, bad0)]: &[Fitted<B>; 2],
) -> CheckReport {
    let ib = e.identity_cell(&b.carrier);
    let idf = e.identity_2cell(f);
    let mut r = CheckReport::new();
    record_using(&mut r, "psi_coassoc", &[bad], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&a.lcm), &e.tensor_2cells(psi, &idf), None)?,
            e.whisker(None, psi, Some(&e.tensor(&b.lcm, &ib)))?,
        ])?;
        let rr = e.vcompose_chain(&[
            e.whisker(Some(&a.lcm), &e.tensor_2cells(&idf, psi), None)?,
            e.whisker(None, psi, Some(&e.tensor(&ib, &b.lcm)))?,
        ])?;
        e.cells2_equal(&l, &rr)
    });
    record_using(&mut r, "psi_counit_left", &[bad, bad0], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&a.lcm), &e.tensor_2cells(psi0, &idf), None)?,
            e.whisker(None, psi, Some(&e.tensor(&b.lcu, &ib)))?,
        ])?;
        e.cells2_equal(&l, &idf)
    });
    record_using(&mut r, "psi_counit_right", &[bad, bad0], || {
        let l = e.vcompose_chain(&[
            e.whisker(Some(&a.lcm), &e.tensor_2cells(&idf, psi0), None)?,
            e.whisker(None, psi, Some(&e.tensor(&ib, &b.lcu)))?,
        ])?;
        e.cells2_equal(&l, &idf)
    });
    r
}

/// Associativity and both unit compatibilities of φ, φ₀.
pub fn check_oplax_monoid_morphism<B: VBackend>(
    e: &SpanV<B>,
    a: &MonoidData<B>,
    b: &MonoidData<B>,
    d: &OplaxMorphismData<B>,
) -> Result<CheckReport, StructError> {
    let fitted = fit_monoid_part(e, a, b, d)?;
    Ok(monoid_axioms(e, a, b, &d.f, &fitted))
}

/// Coassociativity and both counit compatibilities of ψ, ψ₀.
pub fn check_oplax_comonoid_morphism<B: VBackend>(
    e: &SpanV<B>,
    a: &ComonoidData<B>,
    b: &ComonoidData<B>,
    d: &OplaxMorphismData<B>,
) -> Result<CheckReport, StructError> {
    let fitted = fit_comonoid_part(e, a, b, d)?;
    Ok(comonoid_axioms(e, a, b, &d.f, &fitted))
}

/// Monoid and comonoid morphism axioms, then `bi1` to `bi4`: ψ and ψ₀ are
/// 2-cells between oplax monoid morphisms, pasted against θ, θ₀, χ, χ₀ of
/// both ends.
pub fn check_oplax_bimonoid_morphism<B: VBackend>(
    e: &SpanV<B>,
    a: &OplaxBimonoidData<B>,
    b: &OplaxBimonoidData<B>,
    d: &OplaxMorphismData<B>,
) -> Result<CheckReport, StructError> {
    let mon = fit_monoid_part(e, &a.monoid, &b.monoid, d)?;
    let com = fit_comonoid_part(e, &a.comonoid, &b.comonoid, d)?;
    let mut report = CheckReport::new();
    report.extend_prefixed("monoid", monoid_axioms(e, &a.monoid, &b.monoid, &d.f, &mon));
    report.extend_prefixed("comonoid", comonoid_axioms(e, &a.comonoid, &b.comonoid, &d.f, &com));
    let [(th_a, bta), (th0_a, bt0a), (chi_a, bca), (chi0_a, bc0a)] = normalize_cells(e, a)?;
    let [(th_b, btb), (th0_b, bt0b), (chi_b, bcb), (chi0_b, bc0b)] = normalize_cells(e, b)?;
    let [(phi, bphi), (phi0, bphi0)] = &mon;
    let [(psi, bpsi), (psi0, bpsi0)] = &com;
    let f = &d.f;
    let ff = e.tensor(f, f);
    let (ma, ja) = (&a.monoid.mlt, &a.monoid.uni);
    let (mb, db, ub) = (&b.monoid.mlt, &b.comonoid.lcm, &b.comonoid.lcu);
    let swap = |c: &VFam<B::Obj>| {
        let i = e.identity_cell(c);
        e.tensor_all(&[&i, &e.braiding_cell(c, c), &i])
    };
    let (swap_a, swap_b) = (swap(&a.monoid.carrier), swap(&b.monoid.carrier));
    record_using(&mut report, "bi1", &[&bta, &btb, bphi, bpsi], || {
        let da = &a.comonoid.lcm;
        let dd_swap_a = e.compose(&e.tensor(da, da), &swap_a)?;
        let l = e.vcompose_chain(&[
            e.whisker(None, &th_a, Some(&ff))?,
            e.whisker(Some(&dd_swap_a), &e.tensor_2cells(phi, phi), None)?,
            e.whisker(None, &e.tensor_2cells(psi, psi), Some(&e.compose(&swap_b, &e.tensor(mb, mb))?))?,
        ])?;
        let r = e.vcompose_chain(&[
            e.whisker(Some(ma), psi, None)?,
            e.whisker(None, phi, Some(db))?,
            e.whisker(Some(&ff), &th_b, None)?,
        ])?;
        e.cells2_equal(&l, &r)
    });
    record_using(&mut report, "bi2", &[&bt0a, &bt0b, bphi0, bpsi], || {
        let l = e.vcompose_chain(&[e.whisker(None, &th0_a, Some(&ff))?, e.tensor_2cells(phi0, phi0)])?;
        let r =
            e.vcompose_chain(&[e.whisker(Some(ja), psi, None)?, e.whisker(None, phi0, Some(db))?, th0_b.clone()])?;
        e.cells2_equal(&l, &r)
    });
    record_using(&mut report, "bi3", &[&bca, &bcb, bphi, bpsi0], || {
        let l = e.vcompose_chain(&[chi_a.clone(), e.tensor_2cells(psi0, psi0)])?;
        let r = e.vcompose_chain(&[
            e.whisker(Some(ma), psi0, None)?,
            e.whisker(None, phi, Some(ub))?,
            e.whisker(Some(&ff), &chi_b, None)?,
        ])?;
        e.cells2_equal(&l, &r)
    });
    record_using(&mut report, "bi4", &[&bc0a, &bc0b, bphi0, bpsi0], || {
        let r =
            e.vcompose_chain(&[e.whisker(Some(ja), psi0, None)?, e.whisker(None, phi0, Some(ub))?, chi0_b.clone()])?;
        e.cells2_equal(&chi0_a, &r)
    });
    Ok(report)
}

/// The identity 1-cell with the canonical comparison cells for whichever
/// structures are given.
pub fn identity_morphism<B: VBackend>(
    e: &SpanV<B>,
    monoid: Option<&MonoidData<B>>,
    comonoid: Option<&ComonoidData<B>>,
) -> Result<OplaxMorphismData<B>, StructError> {
    let carrier = monoid
        .map(|m| &m.carrier)
        .or(comonoid.map(|c| &c.carrier))
        .ok_or_else(|| StructError::ShapeMismatch("no structure given".into()))?;
    let f = e.identity_cell(carrier);
    let iso = |s: VCell1<B>, t: VCell1<B>| -> Result<Option<VCell2<B>>, StructError> {
        e.cells_isomorphic(&s, &t)?
            .map(Some)
            .ok_or_else(|| StructError::ShapeMismatch("identity comparison is not an isomorphism".into()))
    };
    let ff = e.tensor(&f, &f);
    let mut out = OplaxMorphismData { f: f.clone(), phi: None, phi0: None, psi: None, psi0: None };
    if let Some(m) = monoid {
        out.phi = iso(e.compose(&m.mlt, &f)?, e.compose(&ff, &m.mlt)?)?;
        out.phi0 = iso(e.compose(&m.uni, &f)?, m.uni.clone())?;
    }
    if let Some(c) = comonoid {
        out.psi = iso(e.compose(&c.lcm, &ff)?, e.compose(&f, &c.lcm)?)?;
        out.psi0 = iso(c.lcu.clone(), e.compose(&f, &c.lcu)?)?;
    }
    Ok(out)
}
