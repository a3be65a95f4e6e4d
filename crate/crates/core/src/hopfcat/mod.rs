//! Enriched categories with comonoidal homs, their direct axiom checkers,
//! example generators, and the translations into structures on `X²` in
//! Span|V.

use thiserror::Error;

use crate::finset::FinFn;
use crate::span::Span;
use crate::spanv::{SpanV, SpanVError, VCell1, VCell2};
use crate::structures::StructError;
use crate::vbackend::{TrivialBackend, VError};

pub mod bridge;
pub mod groupoid;
pub mod vcat;
pub mod x2;

pub use bridge::*;
pub use groupoid::*;
pub use vcat::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfCatError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a structure on X²: {0}")]
    NotOverX2(String),
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error(transparent)]
    Struct(#[from] StructError),
    #[error(transparent)]
    Engine(#[from] SpanVError),
    #[error(transparent)]
    V(#[from] VError),
}

/// Span|V over the trivial backend is plain Span.
pub type Plain = SpanV<TrivialBackend>;

pub fn plain() -> Plain {
    SpanV::new(TrivialBackend)
}

/// A span as a 1-cell of Span|1.
pub fn plain_cell(span: Span) -> VCell1<TrivialBackend> {
    let e = plain();
    let dom = e.constant_fam(span.left(), ());
    let cod = e.constant_fam(span.right(), ());
    let n = span.size();
    e.cell(dom, cod, span, vec![(); n]).expect("trivial components")
}

/// A map of spans as a 2-cell of Span|1, apex map given on apex indices.
pub fn plain_2cell(src: Span, tgt: Span, u: impl Fn(usize) -> usize) -> VCell2<TrivialBackend> {
    let u = FinFn::from_fn(src.carrier(), tgt.carrier(), u);
    VCell2::unchecked(plain_cell(src), plain_cell(tgt), u)
}
