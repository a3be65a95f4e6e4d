//! Source and target of every structure 2-cell a file may carry. Cells
//! are stored as apex maps between exactly these composites.

use oplax_core::spanv::{SpanV, VCell1, VFam};
use oplax_core::structures::{Convolution, MonoidData, OplaxBimonoidData, StructError};
use oplax_core::vbackend::VBackend;

pub type Bounds<B> = (VCell1<B>, VCell1<B>);

/// τ₁: 1⊙s ⇒ ε;j and τ₂: s⊙1 ⇒ ε;j.
pub fn antipode_bounds<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    s: &VCell1<B>,
) -> Result<[Bounds<B>; 2], StructError> {
    let conv = Convolution::new(e, &bi.comonoid, &bi.monoid);
    let (one, unit) = (e.identity_cell(&bi.monoid.carrier), conv.unit()?);
    Ok([(conv.tensor(&one, s)?, unit.clone()), (conv.tensor(s, &one)?, unit)])
}

/// ξ: (1⊗m);ρ ⇒ (ρ⊗1);ρ and ξ₀: (1⊗j);ρ ⇒ 1_X.
pub fn module_bounds<B: VBackend>(
    e: &SpanV<B>,
    mon: &MonoidData<B>,
    x: &VFam<B::Obj>,
    rho: &VCell1<B>,
) -> Result<[Bounds<B>; 2], StructError> {
    let (ix, im) = (e.identity_cell(x), e.identity_cell(&mon.carrier));
    Ok([
        (e.compose(&e.tensor(&ix, &mon.mlt), rho)?, e.compose(&e.tensor(rho, &im), rho)?),
        (e.compose(&e.tensor(&ix, &mon.uni), rho)?, ix),
    ])
}

/// φ: m;f ⇒ (f⊗f);m, φ₀: j;f ⇒ j, ψ: δ;(f⊗f) ⇒ f;δ and ψ₀: ε ⇒ f;ε.
pub fn morphism_bounds<B: VBackend>(
    e: &SpanV<B>,
    a: &OplaxBimonoidData<B>,
    b: &OplaxBimonoidData<B>,
    f: &VCell1<B>,
) -> Result<[Bounds<B>; 4], StructError> {
    let ff = e.tensor(f, f);
    Ok([
        (e.compose(&a.monoid.mlt, f)?, e.compose(&ff, &b.monoid.mlt)?),
        (e.compose(&a.monoid.uni, f)?, b.monoid.uni.clone()),
        (e.compose(&a.comonoid.lcm, &ff)?, e.compose(f, &b.comonoid.lcm)?),
        (a.comonoid.lcu.clone(), e.compose(f, &b.comonoid.lcu)?),
    ])
}
