//! Span|V over finite backends, with exhaustive checkers for oplax bimonoids,
//! oplax Hopf monoids, Frobenius monoids and their enriched counterparts.

pub mod finset;
pub mod hopfcat;
pub mod span;
pub mod spanv;
pub mod structures;
pub mod vbackend;
