use crate::spanv::SpanV;
use crate::vbackend::VBackend;

use super::kit::{expect_cell, Kit};
use super::{CheckReport, ComonoidData, MonoidData, StructError};

fn monoid_shape<B: VBackend>(k: &Kit<'_, B>, d: &MonoidData<B>) -> Result<(), StructError> {
    expect_cell("multiplication", &d.mlt, &k.pow(2), &k.pow(1))?;
    expect_cell("unit", &d.uni, &k.pow(0), &k.pow(1))
}

fn comonoid_shape<B: VBackend>(k: &Kit<'_, B>, d: &ComonoidData<B>) -> Result<(), StructError> {
    expect_cell("comultiplication", &d.lcm, &k.pow(1), &k.pow(2))?;
    expect_cell("counit", &d.lcu, &k.pow(1), &k.pow(0))
}

/// Associativity and both unit laws, each as an isomorphism of 1-cells.
pub fn check_strict_monoid<B: VBackend>(e: &SpanV<B>, d: &MonoidData<B>) -> Result<CheckReport, StructError> {
    let k = Kit::new(e, &d.carrier);
    monoid_shape(&k, d)?;
    let (m, j, id) = (&d.mlt, &d.uni, &k.id(1));
    let mut r = CheckReport::new();
    let lhs = k.c(&[&k.t(&[m, id]), m])?;
    let rhs = k.c(&[&k.t(&[id, m]), m])?;
    r.record("assoc", e.iso_mismatch(&lhs, &rhs).map(Into::into));
    let left = k.c(&[&k.t(&[j, id]), m])?;
    r.record("unit_left", e.iso_mismatch(&left, id).map(Into::into));
    let right = k.c(&[&k.t(&[id, j]), m])?;
    r.record("unit_right", e.iso_mismatch(&right, id).map(Into::into));
    Ok(r)
}

pub fn check_strict_comonoid<B: VBackend>(e: &SpanV<B>, d: &ComonoidData<B>) -> Result<CheckReport, StructError> {
    let k = Kit::new(e, &d.carrier);
    comonoid_shape(&k, d)?;
    let (c, u, id) = (&d.lcm, &d.lcu, &k.id(1));
    let mut r = CheckReport::new();
    let lhs = k.c(&[c, &k.t(&[c, id])])?;
    let rhs = k.c(&[c, &k.t(&[id, c])])?;
    r.record("coassoc", e.iso_mismatch(&lhs, &rhs).map(Into::into));
    let left = k.c(&[c, &k.t(&[u, id])])?;
    r.record("counit_left", e.iso_mismatch(&left, id).map(Into::into));
    let right = k.c(&[c, &k.t(&[id, u])])?;
    r.record("counit_right", e.iso_mismatch(&right, id).map(Into::into));
    Ok(r)
}

/// Monoid on `A⊗B` with multiplication `(1⊗σ⊗1);(m⊗m)` and unit `j⊗j`.
pub fn tensor_monoid<B: VBackend>(
    e: &SpanV<B>,
    a: &MonoidData<B>,
    b: &MonoidData<B>,
) -> Result<MonoidData<B>, StructError> {
    monoid_shape(&Kit::new(e, &a.carrier), a)?;
    monoid_shape(&Kit::new(e, &b.carrier), b)?;
    let swap = e.tensor_all(&[
        &e.identity_cell(&a.carrier),
        &e.braiding_cell(&b.carrier, &a.carrier),
        &e.identity_cell(&b.carrier),
    ]);
    Ok(MonoidData {
        carrier: e.tensor_fam(&a.carrier, &b.carrier),
        mlt: e.compose(&swap, &e.tensor(&a.mlt, &b.mlt))?,
        uni: e.tensor(&a.uni, &b.uni),
    })
}

/// Comonoid on `A⊗B` with comultiplication `(δ⊗δ);(1⊗σ⊗1)` and counit `ε⊗ε`.
pub fn tensor_comonoid<B: VBackend>(
    e: &SpanV<B>,
    a: &ComonoidData<B>,
    b: &ComonoidData<B>,
) -> Result<ComonoidData<B>, StructError> {
    comonoid_shape(&Kit::new(e, &a.carrier), a)?;
    comonoid_shape(&Kit::new(e, &b.carrier), b)?;
    let swap = e.tensor_all(&[
        &e.identity_cell(&a.carrier),
        &e.braiding_cell(&a.carrier, &b.carrier),
        &e.identity_cell(&b.carrier),
    ]);
    Ok(ComonoidData {
        carrier: e.tensor_fam(&a.carrier, &b.carrier),
        lcm: e.compose(&e.tensor(&a.lcm, &b.lcm), &swap)?,
        lcu: e.tensor(&a.lcu, &b.lcu),
    })
}
