//! Algebraic structures in Span|V and their exhaustive checkers.
//!
//! Every structure is carried by a strict monoid and/or comonoid; axioms
//! are evaluated by pasting 2-cells with [`SpanV`](crate::spanv::SpanV) and
//! comparing the resulting apex maps. Each checker returns a
//! [`CheckReport`] with one record per axiom, in a fixed order.

use thiserror::Error;

use crate::spanv::{SpanVError, VCell1, VCell2, VFam};
use crate::vbackend::VBackend;

mod bimonoid;
mod convolution;
mod frobenius;
mod hopf;
mod kit;
mod module;
mod monoid;
mod morita;
mod morphism;
pub mod report;

pub use bimonoid::{check_oplax_bimonoid, infer_unique_structure_cells, structure_boundaries, StructureCells};
pub use convolution::{convolution, convolution_unit, convolve_2cells, Convolution};
pub use frobenius::{check_frobenius, frobenius_witness};
pub use hopf::{
    check_bimodule_morphism, check_fusion_inverse, check_oplax_hopf, convolution_context, convolution_to_endo,
    endo_to_convolution, fusion_cell, infer_antipode,
};
pub use kit::Kit;
pub use module::{
    check_module_morphism, check_module_transformation, check_oplax_module, is_strict_morphism, regular_module,
    tensor_module_morphisms, tensor_modules, unit_module, ModuleMorphismData,
};
pub use monoid::{check_strict_comonoid, check_strict_monoid, tensor_comonoid, tensor_monoid};
pub use morita::{check_oplax_inverse, morita_uniqueness_iso, Composition, HomMonoidal, MoritaCheck, MoritaIso};
pub use morphism::{
    check_oplax_bimonoid_morphism, check_oplax_comonoid_morphism, check_oplax_monoid_morphism, identity_morphism,
};
pub use report::{AxiomRecord, CheckReport, Counterexample};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructError {
    #[error(transparent)]
    Engine(#[from] SpanVError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("Morita context is not firm: {0}")]
    NotFirm(String),
    #[error("not a bimodule-bicomodule morphism: {0}")]
    NotBimodule(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidData<B: VBackend> {
    pub carrier: VFam<B::Obj>,
    pub mlt: VCell1<B>,
    pub uni: VCell1<B>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonoidData<B: VBackend> {
    pub carrier: VFam<B::Obj>,
    pub lcm: VCell1<B>,
    pub lcu: VCell1<B>,
}

/// θ: m;δ ⇒ (δ⊗δ);(1⊗σ⊗1);(m⊗m), θ₀: j;δ ⇒ j⊗j, χ: m;ε ⇒ ε⊗ε and
/// χ₀: j;ε ⇒ 1_I, composites written in diagrammatic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplaxBimonoidData<B: VBackend> {
    pub monoid: MonoidData<B>,
    pub comonoid: ComonoidData<B>,
    pub theta: VCell2<B>,
    pub theta0: VCell2<B>,
    pub chi: VCell2<B>,
    pub chi0: VCell2<B>,
}

/// τ₁: 1 ⊙ s ⇒ ε;j and τ₂: s ⊙ 1 ⇒ ε;j in the convolution category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeData<B: VBackend> {
    pub s: VCell1<B>,
    pub tau1: VCell2<B>,
    pub tau2: VCell2<B>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData<B: VBackend> {
    pub monoid: MonoidData<B>,
    pub comonoid: ComonoidData<B>,
}

/// A wide Morita context over one object of a monoidal hom-category:
/// `p: A → B`, `q: B → A` with μ: q·p ⇒ 1 and τ: p·q ⇒ 1, where `·` is the
/// tensor of the ambient monoidal category (convolution for antipodes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoritaContextData<B: VBackend> {
    pub p: VCell1<B>,
    pub q: VCell1<B>,
    pub mu: VCell2<B>,
    pub tau: VCell2<B>,
}

/// Right oplax module: ρ: X⊗M → X with ξ: (1⊗m);ρ ⇒ (ρ⊗1);ρ and
/// ξ₀: (1⊗j);ρ ⇒ 1_X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplaxModuleData<B: VBackend> {
    pub carrier: VFam<B::Obj>,
    pub rho: VCell1<B>,
    pub xi: VCell2<B>,
    pub xi0: VCell2<B>,
}

/// A 1-cell `f` with comparison cells: φ: m;f ⇒ (f⊗f);m and φ₀: j;f ⇒ j
/// for the monoid part, ψ: δ;(f⊗f) ⇒ f;δ and ψ₀: ε ⇒ f;ε for the comonoid
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplaxMorphismData<B: VBackend> {
    pub f: VCell1<B>,
    pub phi: Option<VCell2<B>>,
    pub phi0: Option<VCell2<B>>,
    pub psi: Option<VCell2<B>>,
    pub psi0: Option<VCell2<B>>,
}
