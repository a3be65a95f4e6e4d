//! Inputs shared by the benchmarks.

use oplax_core::finset::{FinFn, FinSet};
use oplax_core::span::Span;

/// The span `n ← n×n → n` given by the two projections.
pub fn projections(n: usize) -> Span {
    let x = FinSet::atom(n);
    let apex = FinSet::new([n, n]);
    let f = FinFn::from_fn(apex.clone(), x.clone(), |k| k / n);
    let g = FinFn::from_fn(apex, x, |k| k % n);
    Span::from_legs(f, g).expect("legs share a domain")
}
