use crate::spanv::{SpanV, VCell1, VCell2};
use crate::vbackend::VBackend;

use super::kit::Kit;
use super::monoid::{check_strict_comonoid, check_strict_monoid};
use super::{CheckReport, FrobeniusData, StructError};

/// `m;δ`, `(δ⊗1);(1⊗m)` and `(1⊗δ);(m⊗1)`.
fn squares<B: VBackend>(e: &SpanV<B>, d: &FrobeniusData<B>) -> Result<[VCell1<B>; 3], StructError> {
    if d.monoid.carrier != d.comonoid.carrier {
        return Err(StructError::ShapeMismatch("monoid and comonoid live on different carriers".into()));
    }
    let k = Kit::new(e, &d.monoid.carrier);
    let (m, dl, id) = (&d.monoid.mlt, &d.comonoid.lcm, &k.id(1));
    Ok([k.c(&[m, dl])?, k.c(&[&k.t(&[dl, id]), &k.t(&[id, m])])?, k.c(&[&k.t(&[id, dl]), &k.t(&[m, id])])?])
}

/// Strict monoid and comonoid laws, then `frob_left`:
/// `(δ⊗1);(1⊗m) ≅ m;δ` and `frob_right`: `(1⊗δ);(m⊗1) ≅ m;δ`.
pub fn check_frobenius<B: VBackend>(e: &SpanV<B>, d: &FrobeniusData<B>) -> Result<CheckReport, StructError> {
    let mut report = CheckReport::new();
    report.extend_prefixed("monoid", check_strict_monoid(e, &d.monoid)?);
    report.extend_prefixed("comonoid", check_strict_comonoid(e, &d.comonoid)?);
    let [mid, left, right] = squares(e, d)?;
    report.record("frob_left", e.iso_mismatch(&left, &mid).map(Into::into));
    report.record("frob_right", e.iso_mismatch(&right, &mid).map(Into::into));
    Ok(report)
}

/// Invertible 2-cells `m;δ ⇒ (δ⊗1);(1⊗m)` and `m;δ ⇒ (1⊗δ);(m⊗1)`, if
/// both laws hold.
pub fn frobenius_witness<B: VBackend>(
    e: &SpanV<B>,
    d: &FrobeniusData<B>,
) -> Result<Option<[VCell2<B>; 2]>, StructError> {
    let [mid, left, right] = squares(e, d)?;
    match (e.cells_isomorphic(&mid, &left)?, e.cells_isomorphic(&mid, &right)?) {
        (Some(l), Some(r)) => Ok(Some([l, r])),
        _ => Ok(None),
    }
}
