//! On-disk structure descriptions.
//!
//! Sets are given by their factor sizes, tuples are encoded row-major, and
//! morphisms of V are flat integer arrays: function tables for `finset`,
//! row-major matrices for `mat`, empty for `trivial`.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub schema_version: u32,
    pub backend: BackendSpec,
    pub structure: Structure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Finset,
    Mat,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BackendSpec {
    pub kind: BackendKind,
    /// Characteristic of the prime field for `mat`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
#[allow(clippy::large_enum_variant)]
pub enum Structure {
    Bimonoid(SpanBimonoid),
    Hopf(SpanBimonoid),
    Frobenius(SpanFrobenius),
    Hopfcat(VCatFile),
    Frobcat(FrobCatFile),
    Module(ModuleFile),
    Morphism(MorphismFile),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Bimonoid(_) => "bimonoid",
            Structure::Hopf(_) => "hopf",
            Structure::Frobenius(_) => "frobenius",
            Structure::Hopfcat(_) => "hopfcat",
            Structure::Frobcat(_) => "frobcat",
            Structure::Module(_) => "module",
            Structure::Morphism(_) => "morphism",
        }
    }
}

/// An index set with one V-object per element. `objs` may be omitted for
/// the trivial backend.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Family {
    pub shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objs: Option<Vec<usize>>,
}

/// A product of factor sizes, or the listed rows of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Apex {
    pub shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<usize>>>,
}

/// A 1-cell of Span|V. Feet are implied by the role of the cell; `left`
/// and `right` are the leg tables, `alpha` one component per apex element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cell {
    pub apex: Apex,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<i64>>>,
}

/// A 2-cell is the apex map from its source to its target, both of which
/// are the composites fixed by its role. Omitted cells are inferred.
pub type CellMap = Option<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanBimonoid {
    pub carrier: Family,
    pub mlt: Cell,
    pub uni: Cell,
    pub lcm: Cell,
    pub lcu: Cell,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta0: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi0: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<AntipodeFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AntipodeFile {
    pub s: Cell,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau1: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau2: CellMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanFrobenius {
    pub carrier: Family,
    pub mlt: Cell,
    pub uni: Cell,
    pub lcm: Cell,
    pub lcu: Cell,
}

/// Hom objects and structure morphisms indexed row-major by object
/// tuples: `homs[x,y]`, `m[x,y,z]`, `u[x]`, `delta[x,y]`, `eps[x,y]`,
/// `s[x,y]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VCatFile {
    pub objects: usize,
    pub homs: Vec<usize>,
    pub m: Vec<Vec<i64>>,
    pub u: Vec<Vec<i64>>,
    pub delta: Vec<Vec<i64>>,
    pub eps: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<i64>>>,
}

/// `comlt[x,y,z]: H[x,z] → H[x,y]⊗H[y,z]` and `couni[x]: H[x,x] → I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobCatFile {
    pub objects: usize,
    pub homs: Vec<usize>,
    pub m: Vec<Vec<i64>>,
    pub u: Vec<Vec<i64>>,
    pub comlt: Vec<Vec<i64>>,
    pub couni: Vec<Vec<i64>>,
}

/// A right oplax module `ρ: X⊗M → X` over the monoid `(mlt, uni)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub carrier: Family,
    pub mlt: Cell,
    pub uni: Cell,
    pub module: Family,
    pub rho: Cell,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi0: CellMap,
}

/// An oplax bimonoid morphism `f: source → target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source: SpanBimonoid,
    pub target: SpanBimonoid,
    pub f: Cell,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi0: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: CellMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi0: CellMap,
}
