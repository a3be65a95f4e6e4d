//! Enriched categories on objects `X` as structures on `X²` in Span|V, and
//! back. One-cells sit on the spans of [`X2`], so apex elements are tuples
//! of objects and generic counterexamples come out in `X`-coordinates.

use crate::finset::FinFn;
use crate::span::{spans_isomorphic, unique_map_to_monic, Span};
use crate::spanv::{SpanV, VCell1, VCell2, VFam};
use crate::structures::{
    structure_boundaries, AntipodeData, ComonoidData, Convolution, FrobeniusData, MonoidData, OplaxBimonoidData,
    OplaxMorphismData,
};
use crate::vbackend::{OpBackend, VBackend};

use super::vcat::{frob_shape, hopf_shape, opcategory_shape, FrobVCat, HopfVCat, Ops, VFunctorData};
use super::x2::X2;
use super::HopfCatError;

/// The family `(H_{x,y})` over `X²`.
fn carrier<B: VBackend>(e: &SpanV<B>, x: X2, homs: &[B::Obj]) -> Result<VFam<B::Obj>, HopfCatError> {
    Ok(e.fam(x.pow(2), homs.to_vec())?)
}

/// A 1-cell on a template span with components listed in apex order.
fn on_template<B: VBackend>(
    e: &SpanV<B>,
    dom: &VFam<B::Obj>,
    cod: &VFam<B::Obj>,
    span: Span,
    alpha: &[B::Mor],
) -> Result<VCell1<B>, HopfCatError> {
    Ok(e.cell(dom.clone(), cod.clone(), span, alpha.to_vec())?)
}

/// `cell` moved onto an isomorphic template span, components carried along.
fn lift<B: VBackend>(e: &SpanV<B>, cell: &VCell1<B>, template: &Span) -> Result<VCell1<B>, HopfCatError> {
    let iso = spans_isomorphic(template, &cell.span)
        .map_err(|s| HopfCatError::ShapeMismatch(s.to_string()))?
        .ok_or_else(|| HopfCatError::ShapeMismatch("composite does not match its template span".into()))?;
    let alpha = (0..template.size()).map(|k| cell.alpha[iso.u.apply(k)].clone()).collect();
    Ok(e.cell(cell.dom.clone(), cell.cod.clone(), template.clone(), alpha)?)
}

/// 2-cell with the template's apex map between the lifted boundaries,
/// left unvalidated for the checkers to judge.
fn lifted_2cell<B: VBackend>(
    e: &SpanV<B>,
    (src, tgt): (&VCell1<B>, &VCell1<B>),
    template: &VCell2<crate::vbackend::TrivialBackend>,
) -> Result<VCell2<B>, HopfCatError> {
    Ok(VCell2::unchecked(lift(e, src, &template.src.span)?, lift(e, tgt, &template.tgt.span)?, template.u.clone()))
}

/// The V-category `(homs, m, u)` as a monoid on `X²` over the spans μ and η.
pub fn vcat_monoid<B: VBackend>(
    e: &SpanV<B>,
    objects: usize,
    homs: &[B::Obj],
    m: &[B::Mor],
    u: &[B::Mor],
) -> Result<MonoidData<B>, HopfCatError> {
    let x = X2::new(objects);
    let c = carrier(e, x, homs)?;
    Ok(MonoidData {
        mlt: on_template(e, &e.tensor_fam(&c, &c), &c, x.mu(), m)?,
        uni: on_template(e, &e.unit_fam(), &c, x.eta(), u)?,
        carrier: c,
    })
}

/// The groupoid monoid on `X²` with components `m` and `u`, the trivial
/// comonoid with components δ and ε, and the comparison cells θ, θ₀, χ, χ₀
/// of the codiscrete groupoid. With an antipode, also `s` on `(id, sw)` and
/// τ₁, τ₂. The structure cells are not validated here; a failing
/// compatibility law shows up as a cell whose components do not factor.
pub fn hopfcat_to_spanv<B: VBackend>(
    v: &B,
    h: &HopfVCat<B>,
) -> Result<(OplaxBimonoidData<B>, Option<AntipodeData<B>>), HopfCatError> {
    let o = Ops::new(v, &h.objects)?;
    hopf_shape(&o, h)?;
    let (e, x) = (SpanV::new(v.clone()), o.x);
    let monoid = vcat_monoid(&e, x.n, &h.homs, &h.m, &h.u)?;
    let c = monoid.carrier.clone();
    let comonoid = ComonoidData {
        lcm: on_template(&e, &c, &e.tensor_fam(&c, &c), x.zeta(), &h.delta)?,
        lcu: on_template(&e, &c, &e.unit_fam(), x.nu(), &h.eps)?,
        carrier: c.clone(),
    };
    let [t, t0, ch, ch0] = structure_boundaries(&e, &monoid, &comonoid)?;
    let tb = x.bimonoid();
    let bi = OplaxBimonoidData {
        theta: lifted_2cell(&e, (&t.0, &t.1), &tb.theta)?,
        theta0: lifted_2cell(&e, (&t0.0, &t0.1), &tb.theta0)?,
        chi: lifted_2cell(&e, (&ch.0, &ch.1), &tb.chi)?,
        chi0: lifted_2cell(&e, (&ch0.0, &ch0.1), &tb.chi0)?,
        monoid,
        comonoid,
    };
    let Some(s) = &h.s else { return Ok((bi, None)) };
    let s = on_template(&e, &c, &c, x.s(), s)?;
    let conv = Convolution::new(&e, &bi.comonoid, &bi.monoid);
    let one = e.identity_cell(&c);
    let unit = conv.unit()?;
    let ta = x.antipode();
    let atp = AntipodeData {
        tau1: lifted_2cell(&e, (&conv.tensor(&one, &s)?, &unit), &ta.tau1)?,
        tau2: lifted_2cell(&e, (&conv.tensor(&s, &one)?, &unit), &ta.tau2)?,
        s,
    };
    Ok((bi, Some(atp)))
}

/// Size of `X` when `fam` lives over `X²` as [`X2`] encodes it.
fn objects_of<O>(fam: &VFam<O>) -> Result<X2, HopfCatError> {
    let size = fam.index.size();
    let n = (1..=size).find(|n| n * n >= size).unwrap_or(0);
    if n == 0 || n * n != size || fam.index != X2::new(n).pow(2) {
        return Err(HopfCatError::NotOverX2(format!("carrier indexed by {}", fam.index)));
    }
    Ok(X2::new(n))
}

/// Components of `cell` read off in the apex order of `template`.
fn read<B: VBackend>(name: &str, cell: &VCell1<B>, template: &Span) -> Result<Vec<B::Mor>, HopfCatError> {
    let not_over = || HopfCatError::NotOverX2(format!("{name} does not sit on the expected span"));
    let iso = spans_isomorphic(template, &cell.span).map_err(|_| not_over())?.ok_or_else(not_over)?;
    Ok((0..template.size()).map(|k| cell.alpha[iso.u.apply(k)].clone()).collect())
}

fn read_monoid<B: VBackend>(mon: &MonoidData<B>) -> Result<(X2, Vec<B::Obj>, Vec<B::Mor>, Vec<B::Mor>), HopfCatError> {
    let x = objects_of(&mon.carrier)?;
    Ok((x, mon.carrier.objs.clone(), read("multiplication", &mon.mlt, &x.mu())?, read("unit", &mon.uni, &x.eta())?))
}

/// Inverse of [`hopfcat_to_spanv`] on its image: the monoid must sit on
/// μ and η and the comonoid on the trivial spans. The structure cells carry
/// no data beyond their spans and are not read.
pub fn spanv_to_hopfcat<B: VBackend>(
    bi: &OplaxBimonoidData<B>,
    atp: Option<&AntipodeData<B>>,
) -> Result<HopfVCat<B>, HopfCatError> {
    let (x, homs, m, u) = read_monoid(&bi.monoid)?;
    if bi.comonoid.carrier != bi.monoid.carrier {
        return Err(HopfCatError::NotOverX2("monoid and comonoid carriers differ".into()));
    }
    let s = atp.map(|a| read("antipode", &a.s, &x.s())).transpose()?;
    Ok(HopfVCat {
        objects: x.pow(1),
        homs,
        m,
        u,
        delta: read("comultiplication", &bi.comonoid.lcm, &x.zeta())?,
        eps: read("counit", &bi.comonoid.lcu, &x.nu())?,
        s,
    })
}

/// Monoid on μ and η, comonoid on their reverses with components Δ and ε.
pub fn frobcat_to_spanv<B: VBackend>(v: &B, c: &FrobVCat<B>) -> Result<FrobeniusData<B>, HopfCatError> {
    let o = Ops::new(v, &c.objects)?;
    frob_shape(&o, c)?;
    let e = SpanV::new(v.clone());
    let x = o.x;
    let monoid = vcat_monoid(&e, x.n, &c.homs, &c.m, &c.u)?;
    Ok(FrobeniusData { monoid, comonoid: vopcat_as_comonoid(v, c)? })
}

pub fn spanv_to_frobcat<B: VBackend>(d: &FrobeniusData<B>) -> Result<FrobVCat<B>, HopfCatError> {
    let (x, homs, m, u) = read_monoid(&d.monoid)?;
    if d.comonoid.carrier != d.monoid.carrier {
        return Err(HopfCatError::NotOverX2("monoid and comonoid carriers differ".into()));
    }
    Ok(FrobVCat {
        objects: x.pow(1),
        homs,
        m,
        u,
        comlt: read("comultiplication", &d.comonoid.lcm, &x.mu().reverse())?,
        couni: read("counit", &d.comonoid.lcu, &x.eta().reverse())?,
    })
}

/// The opcategory part `(Δ, ε)` of `c` as a comonoid on `X²` over the
/// reversed spans of μ and η.
pub fn vopcat_as_comonoid<B: VBackend>(v: &B, c: &FrobVCat<B>) -> Result<ComonoidData<B>, HopfCatError> {
    let o = Ops::new(v, &c.objects)?;
    opcategory_shape(&o, &c.homs, &c.comlt, &c.couni)?;
    let (e, x) = (SpanV::new(v.clone()), o.x);
    let cr = carrier(&e, x, &c.homs)?;
    Ok(ComonoidData {
        lcm: on_template(&e, &cr, &e.tensor_fam(&cr, &cr), x.mu().reverse(), &c.comlt)?,
        lcu: on_template(&e, &cr, &e.unit_fam(), x.eta().reverse(), &c.couni)?,
        carrier: cr,
    })
}

/// The opcategory part `(Δ, ε)` of `c` read in `V^op`, where it is a
/// V^op-category and hence a monoid on `X²` in Span|V^op.
pub fn opcategory_as_monoid<B: VBackend>(v: &B, c: &FrobVCat<B>) -> Result<MonoidData<OpBackend<B>>, HopfCatError> {
    let o = Ops::new(v, &c.objects)?;
    opcategory_shape(&o, &c.homs, &c.comlt, &c.couni)?;
    let e = SpanV::new(OpBackend(v.clone()));
    vcat_monoid(&e, o.n(), &c.homs, &c.comlt, &c.couni)
}

/// `f` on the span `(id, f×f)` with components `F_{xy}`, and the four
/// comparison cells given by the only maps of spans between their
/// boundaries, unvalidated. `a` and `b` come from [`hopfcat_to_spanv`].
pub fn vfunctor_to_spanv<B: VBackend>(
    v: &B,
    a: &OplaxBimonoidData<B>,
    b: &OplaxBimonoidData<B>,
    f: &VFunctorData<B>,
) -> Result<OplaxMorphismData<B>, HopfCatError> {
    let (xa, xb) = (objects_of(&a.monoid.carrier)?, objects_of(&b.monoid.carrier)?);
    if f.f.dom() != &xa.pow(1) || f.f.cod() != &xb.pow(1) {
        return Err(HopfCatError::ShapeMismatch(format!("object map {} -> {}", f.f.dom(), f.f.cod())));
    }
    let e = SpanV::new(v.clone());
    let ff = FinFn::from_fn(xa.pow(2), xb.pow(2), |k| {
        let t = xa.dec(2, k);
        xb.enc(&[f.f.apply(t[0]), f.f.apply(t[1])])
    });
    let span = Span::from_legs(FinFn::identity(&xa.pow(2)), ff).expect("legs share the apex");
    let cell = e.cell(a.monoid.carrier.clone(), b.monoid.carrier.clone(), span, f.components.clone())?;
    let only = |src: VCell1<B>, tgt: VCell1<B>| -> Result<VCell2<B>, HopfCatError> {
        let u = unique_map_to_monic(&src.span, &tgt.span)
            .map_err(|s| HopfCatError::ShapeMismatch(s.to_string()))?
            .ok_or_else(|| HopfCatError::ShapeMismatch("no map of spans between the boundaries".into()))?
            .u;
        Ok(VCell2::unchecked(src, tgt, u))
    };
    let ft = e.tensor(&cell, &cell);
    Ok(OplaxMorphismData {
        phi: Some(only(e.compose(&a.monoid.mlt, &cell)?, e.compose(&ft, &b.monoid.mlt)?)?),
        phi0: Some(only(e.compose(&a.monoid.uni, &cell)?, b.monoid.uni.clone())?),
        psi: Some(only(e.compose(&a.comonoid.lcm, &ft)?, e.compose(&cell, &b.comonoid.lcm)?)?),
        psi0: Some(only(a.comonoid.lcu.clone(), e.compose(&cell, &b.comonoid.lcu)?)?),
        f: cell,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcat::groupoid::GroupoidData;
    use crate::vbackend::MatBackend;

    #[test]
    fn codiscrete_set_hopf_category_round_trips() {
        let g = GroupoidData::codiscrete(2);
        let h = g.set_hopf_vcat();
        let (bi, atp) = hopfcat_to_spanv(&crate::vbackend::FinSetBackend, &h).unwrap();
        assert_eq!(spanv_to_hopfcat(&bi, atp.as_ref()).unwrap(), h);
    }

    #[test]
    fn non_square_carrier_is_not_over_x2() {
        let v = MatBackend::fp(2);
        let e = SpanV::new(v);
        let fam = e.fam(crate::finset::FinSet::atom(3), vec![1, 1, 1]).unwrap();
        assert!(matches!(objects_of(&fam), Err(HopfCatError::NotOverX2(_))));
    }
}
