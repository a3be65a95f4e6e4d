use crate::spanv::{Mismatch, SpanV, SpanVError, VCell1, VCell2, VFam};
use crate::vbackend::VBackend;

use super::report::error_counterexample;
use super::{CheckReport, Counterexample, StructError};

/// Shorthand for building pastings over one carrier `M`: tensor powers,
/// identities, the middle swap `1⊗σ⊗1`, and diagrammatic composites.
pub struct Kit<'a, B: VBackend> {
    pub e: &'a SpanV<B>,
    pub carrier: VFam<B::Obj>,
}

impl<'a, B: VBackend> Kit<'a, B> {
    pub fn new(e: &'a SpanV<B>, carrier: &VFam<B::Obj>) -> Self {
        Kit { e, carrier: carrier.clone() }
    }

    pub fn pow(&self, n: usize) -> VFam<B::Obj> {
        let fams = vec![&self.carrier; n];
        self.e.tensor_fams(&fams)
    }

    pub fn id(&self, n: usize) -> VCell1<B> {
        self.e.identity_cell(&self.pow(n))
    }

    pub fn unit_cell(&self) -> VCell1<B> {
        self.e.identity_cell(&self.e.unit_fam())
    }

    pub fn t(&self, cells: &[&VCell1<B>]) -> VCell1<B> {
        self.e.tensor_all(cells)
    }

    /// Diagrammatic composite: the first cell runs first.
    pub fn c(&self, cells: &[&VCell1<B>]) -> Result<VCell1<B>, SpanVError> {
        self.e.compose_all(cells)
    }

    pub fn sigma(&self) -> VCell1<B> {
        self.e.braiding_cell(&self.carrier, &self.carrier)
    }

    /// `1⊗σ⊗1` on `M⊗M⊗M⊗M`.
    pub fn mid_swap(&self) -> VCell1<B> {
        self.t(&[&self.id(1), &self.sigma(), &self.id(1)])
    }

    pub fn id2(&self, c: &VCell1<B>) -> VCell2<B> {
        self.e.identity_2cell(c)
    }

    pub fn t2(&self, cells: &[&VCell2<B>]) -> VCell2<B> {
        self.e.tensor_2cells_all(cells)
    }

    pub fn w(
        &self,
        pre: Option<&VCell1<B>>,
        phi: &VCell2<B>,
        post: Option<&VCell1<B>>,
    ) -> Result<VCell2<B>, SpanVError> {
        self.e.whisker(pre, phi, post)
    }

    pub fn chain(&self, cells: &[VCell2<B>]) -> Result<VCell2<B>, SpanVError> {
        self.e.vcompose_chain(cells)
    }
}

pub(crate) fn expect_cell<B: VBackend>(
    name: &str,
    c: &VCell1<B>,
    dom: &VFam<B::Obj>,
    cod: &VFam<B::Obj>,
) -> Result<(), StructError> {
    if &c.dom != dom || &c.cod != cod {
        return Err(StructError::ShapeMismatch(format!(
            "{name} runs {} -> {}, expected {} -> {}",
            c.dom.index, c.cod.index, dom.index, cod.index
        )));
    }
    Ok(())
}

/// Why `cell` is not a valid 2-cell, located at a source element of the
/// cell as supplied.
pub(crate) fn invalid_cell<B: VBackend>(e: &SpanV<B>, name: &str, cell: &VCell2<B>) -> Option<Counterexample> {
    let err = e.validate_2cell(cell).err()?;
    let cx = error_counterexample(&err);
    let feet = (0..cell.src.size()).find(|&k| cell.src.element(k) == cx.element).map(|k| cell.src.feet(k));
    Some(Counterexample { detail: format!("{name} is not a 2-cell: {}", cx.detail), feet, ..cx })
}

/// Transport a supplied structure cell onto its expected boundaries. A
/// cell on the wrong boundaries is a shape error; a cell that is not a
/// valid 2-cell comes back with the counterexample that fails every axiom
/// pasting it, in the coordinates of the cell as supplied.
pub(crate) fn fit<B: VBackend>(
    e: &SpanV<B>,
    name: &str,
    cell: &VCell2<B>,
    src: &VCell1<B>,
    tgt: &VCell1<B>,
) -> Result<(VCell2<B>, Option<Counterexample>), StructError> {
    let c = e.coerce(cell, src, tgt).map_err(|err| match err {
        SpanVError::BoundaryMismatch(s) => StructError::ShapeMismatch(format!("{name}: {s}")),
        SpanVError::Span(s) => StructError::ShapeMismatch(format!("{name}: {s}")),
        other => StructError::Engine(other),
    })?;
    let invalid = invalid_cell(e, name, cell).or_else(|| invalid_cell(e, name, &c));
    Ok((c, invalid))
}

/// Record `id` as failed by the first invalid cell it uses, else by
/// evaluating the comparison.
pub(crate) fn record_using(
    report: &mut CheckReport,
    id: impl Into<String>,
    uses: &[&Option<Counterexample>],
    eval: impl FnOnce() -> Result<Option<Mismatch>, SpanVError>,
) {
    match uses.iter().find_map(|c| (*c).clone()) {
        Some(cx) => report.fail(id, cx),
        None => report.record_eval(id, eval()),
    }
}
