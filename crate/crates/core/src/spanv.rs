//! The monoidal 2-category Span|V.
//!
//! 0-cells are families of V-objects indexed by a finite set, 1-cells are
//! spans with one V-morphism per apex element, and 2-cells are maps of spans
//! along which those components factor. [`SpanV`] holds the backend and
//! implements every operation; the cell types are plain data.

use std::collections::HashMap;

use thiserror::Error;

use crate::finset::{compose_fn, FinFn, FinSet};
use crate::span::{
    braiding_span, compose_spans_with_projections, identity_span, tensor_spans, triangle_failure, Span, SpanError,
    SpanMap,
};
use crate::vbackend::{VBackend, VError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpanVError {
    #[error(transparent)]
    Span(#[from] SpanError),
    #[error(transparent)]
    V(#[from] VError),
    #[error("families do not match: {0}")]
    FamMismatch(String),
    #[error("component at {element:?} has the wrong domain or codomain")]
    ComponentShapeError { element: Vec<usize> },
    #[error("map of spans breaks a leg triangle at {element:?}")]
    TriangleViolation { element: Vec<usize> },
    #[error("component at {element:?} does not factor through the target")]
    FactorizationViolation { element: Vec<usize> },
    #[error("boundaries do not match: {0}")]
    BoundaryMismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VFam<O> {
    pub index: FinSet,
    pub objs: Vec<O>,
}

impl<O> VFam<O> {
    pub fn size(&self) -> usize {
        self.objs.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCell1<B: VBackend> {
    pub dom: VFam<B::Obj>,
    pub cod: VFam<B::Obj>,
    pub span: Span,
    pub alpha: Vec<B::Mor>,
}

impl<B: VBackend> VCell1<B> {
    pub fn size(&self) -> usize {
        self.span.size()
    }

    pub fn element(&self, k: usize) -> Vec<usize> {
        self.span.element(k)
    }

    /// Decoded images of apex element `k` under both legs.
    pub fn feet(&self, k: usize) -> (Vec<usize>, Vec<usize>) {
        (self.dom.index.decode(self.span.f().apply(k)), self.cod.index.decode(self.span.g().apply(k)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCell2<B: VBackend> {
    pub src: VCell1<B>,
    pub tgt: VCell1<B>,
    pub u: FinFn,
}

impl<B: VBackend> VCell2<B> {
    /// Assemble without checking; see [`SpanV::validate_2cell`].
    pub fn unchecked(src: VCell1<B>, tgt: VCell1<B>, u: FinFn) -> Self {
        VCell2 { src, tgt, u }
    }
}

/// A failed 2-cell comparison: the first source element on which the two
/// sides disagree, decoded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub element: Vec<usize>,
    /// Leg images of `element`, when it is an apex element of a 1-cell.
    pub feet: Option<(Vec<usize>, Vec<usize>)>,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct SpanV<B> {
    pub v: B,
}

type Key<'a, M> = (usize, usize, &'a M);

/// Sorted fiber sizes of the apex map over each target group.
fn fiber_profile<B: VBackend>(c: &VCell2<B>) -> HashMap<Key<'_, B::Mor>, Vec<usize>> {
    let mut hits = vec![0usize; c.tgt.size()];
    for &t in c.u.table() {
        hits[t] += 1;
    }
    groups(&c.tgt)
        .into_iter()
        .map(|(key, ts)| {
            let mut sizes: Vec<usize> = ts.iter().map(|&t| hits[t]).collect();
            sizes.sort_unstable();
            (key, sizes)
        })
        .collect()
}

fn groups<B: VBackend>(c: &VCell1<B>) -> HashMap<Key<'_, B::Mor>, Vec<usize>> {
    let mut out: HashMap<Key<'_, B::Mor>, Vec<usize>> = HashMap::new();
    for k in 0..c.size() {
        out.entry((c.span.f().apply(k), c.span.g().apply(k), &c.alpha[k])).or_default().push(k);
    }
    out
}

impl<B: VBackend> SpanV<B> {
    pub fn new(v: B) -> Self {
        SpanV { v }
    }

    pub fn fam(&self, index: FinSet, objs: Vec<B::Obj>) -> Result<VFam<B::Obj>, SpanVError> {
        if objs.len() != index.size() {
            return Err(SpanVError::FamMismatch(format!("{} objects over {index}", objs.len())));
        }
        Ok(VFam { index, objs })
    }

    pub fn constant_fam(&self, index: &FinSet, obj: B::Obj) -> VFam<B::Obj> {
        VFam { index: index.clone(), objs: vec![obj; index.size()] }
    }

    pub fn unit_fam(&self) -> VFam<B::Obj> {
        VFam { index: FinSet::unit(), objs: vec![self.v.unit()] }
    }

    pub fn tensor_fam(&self, m: &VFam<B::Obj>, n: &VFam<B::Obj>) -> VFam<B::Obj> {
        let objs = m.objs.iter().flat_map(|a| n.objs.iter().map(move |b| (a, b)));
        VFam {
            index: crate::finset::product(&[m.index.clone(), n.index.clone()]),
            objs: objs.map(|(a, b)| self.v.tensor_obj(a, b)).collect(),
        }
    }

    pub fn tensor_fams(&self, fams: &[&VFam<B::Obj>]) -> VFam<B::Obj> {
        fams.iter().fold(self.unit_fam(), |acc, m| self.tensor_fam(&acc, m))
    }

    /// A checked 1-cell.
    pub fn cell(
        &self,
        dom: VFam<B::Obj>,
        cod: VFam<B::Obj>,
        span: Span,
        alpha: Vec<B::Mor>,
    ) -> Result<VCell1<B>, SpanVError> {
        if span.left() != &dom.index || span.right() != &cod.index {
            return Err(SpanVError::FamMismatch(format!(
                "span {} -> {} between families over {} and {}",
                span.left(),
                span.right(),
                dom.index,
                cod.index
            )));
        }
        if alpha.len() != span.size() {
            return Err(SpanVError::FamMismatch(format!(
                "{} components for an apex of size {}",
                alpha.len(),
                span.size()
            )));
        }
        for (k, a) in alpha.iter().enumerate() {
            if self.v.dom(a) != dom.objs[span.f().apply(k)] || self.v.cod(a) != cod.objs[span.g().apply(k)] {
                return Err(SpanVError::ComponentShapeError { element: span.element(k) });
            }
        }
        Ok(VCell1 { dom, cod, span, alpha })
    }

    /// Cell over `span` whose components are produced by `comp(k)`.
    pub fn cell_from_fn(
        &self,
        dom: VFam<B::Obj>,
        cod: VFam<B::Obj>,
        span: Span,
        comp: impl Fn(usize) -> B::Mor,
    ) -> Result<VCell1<B>, SpanVError> {
        let alpha = (0..span.size()).map(comp).collect();
        self.cell(dom, cod, span, alpha)
    }

    pub fn identity_cell(&self, m: &VFam<B::Obj>) -> VCell1<B> {
        VCell1 {
            dom: m.clone(),
            cod: m.clone(),
            span: identity_span(&m.index),
            alpha: m.objs.iter().map(|o| self.v.id(o)).collect(),
        }
    }

    pub fn is_identity_cell(&self, c: &VCell1<B>) -> bool {
        c.dom == c.cod
            && c.span.is_identity_span()
            && c.alpha.iter().zip(&c.dom.objs).all(|(a, o)| self.v.mor_eq(a, &self.v.id(o)))
    }

    pub fn compose(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<VCell1<B>, SpanVError> {
        self.compose_with_projections(a, b).map(|(c, _, _)| c)
    }

    pub fn compose_all(&self, cells: &[&VCell1<B>]) -> Result<VCell1<B>, SpanVError> {
        let (first, rest) = cells.split_first().expect("at least one cell");
        rest.iter().try_fold((*first).clone(), |acc, c| self.compose(&acc, c))
    }

    pub fn compose_with_projections(
        &self,
        a: &VCell1<B>,
        b: &VCell1<B>,
    ) -> Result<(VCell1<B>, FinFn, FinFn), SpanVError> {
        if a.cod != b.dom {
            return Err(SpanVError::FamMismatch(format!(
                "codomain over {} against domain over {}",
                a.cod.index, b.dom.index
            )));
        }
        let (span, p1, p2) = compose_spans_with_projections(&a.span, &b.span)?;
        if self.is_identity_cell(b) {
            return Ok((a.clone(), p1, p2));
        }
        if self.is_identity_cell(a) {
            return Ok((b.clone(), p1, p2));
        }
        let mut alpha = Vec::with_capacity(span.size());
        for k in 0..span.size() {
            let c = self
                .v
                .compose(&a.alpha[p1.apply(k)], &b.alpha[p2.apply(k)])
                .map_err(|_| SpanVError::ComponentShapeError { element: span.element(k) })?;
            alpha.push(c);
        }
        Ok((VCell1 { dom: a.dom.clone(), cod: b.cod.clone(), span, alpha }, p1, p2))
    }

    pub fn tensor(&self, a: &VCell1<B>, b: &VCell1<B>) -> VCell1<B> {
        let alpha = a.alpha.iter().flat_map(|x| b.alpha.iter().map(move |y| (x, y)));
        VCell1 {
            dom: self.tensor_fam(&a.dom, &b.dom),
            cod: self.tensor_fam(&a.cod, &b.cod),
            span: tensor_spans(&a.span, &b.span),
            alpha: alpha.map(|(x, y)| self.v.tensor_mor(x, y)).collect(),
        }
    }

    pub fn tensor_all(&self, cells: &[&VCell1<B>]) -> VCell1<B> {
        let unit = self.identity_cell(&self.unit_fam());
        cells.iter().fold(unit, |acc, c| self.tensor(&acc, c))
    }

    pub fn braiding_cell(&self, m: &VFam<B::Obj>, n: &VFam<B::Obj>) -> VCell1<B> {
        let alpha = m.objs.iter().flat_map(|a| n.objs.iter().map(move |b| (a, b)));
        VCell1 {
            dom: self.tensor_fam(m, n),
            cod: self.tensor_fam(n, m),
            span: braiding_span(&m.index, &n.index),
            alpha: alpha.map(|(a, b)| self.v.braiding(a, b)).collect(),
        }
    }

    fn check_boundary(&self, src: &VCell1<B>, tgt: &VCell1<B>) -> Result<(), SpanVError> {
        if src.dom != tgt.dom || src.cod != tgt.cod {
            return Err(SpanVError::BoundaryMismatch(format!(
                "2-cell between 1-cells {} -> {} and {} -> {}",
                src.dom.index, src.cod.index, tgt.dom.index, tgt.cod.index
            )));
        }
        Ok(())
    }

    pub fn make_2cell(&self, src: VCell1<B>, tgt: VCell1<B>, u: FinFn) -> Result<VCell2<B>, SpanVError> {
        let c = VCell2 { src, tgt, u };
        self.validate_2cell(&c)?;
        Ok(c)
    }

    pub fn validate_2cell(&self, c: &VCell2<B>) -> Result<(), SpanVError> {
        self.check_boundary(&c.src, &c.tgt)?;
        if c.u.dom() != &c.src.span.carrier() || c.u.cod() != &c.tgt.span.carrier() {
            return Err(SpanVError::BoundaryMismatch(format!(
                "apex map {} -> {} between apexes {} and {}",
                c.u.dom(),
                c.u.cod(),
                c.src.span.carrier(),
                c.tgt.span.carrier()
            )));
        }
        if let Some(k) = triangle_failure(&c.src.span, &c.tgt.span, &c.u) {
            return Err(SpanVError::TriangleViolation { element: c.src.element(k) });
        }
        if let Some(k) = (0..c.src.size()).find(|&k| !self.v.mor_eq(&c.src.alpha[k], &c.tgt.alpha[c.u.apply(k)])) {
            return Err(SpanVError::FactorizationViolation { element: c.src.element(k) });
        }
        Ok(())
    }

    pub fn identity_2cell(&self, a: &VCell1<B>) -> VCell2<B> {
        VCell2 { src: a.clone(), tgt: a.clone(), u: FinFn::identity(&a.span.carrier()) }
    }

    /// `φ` then `ψ`, with literally matching middle boundary.
    pub fn vcompose(&self, phi: &VCell2<B>, psi: &VCell2<B>) -> Result<VCell2<B>, SpanVError> {
        if phi.tgt != psi.src {
            return Err(SpanVError::BoundaryMismatch("vertical composite of non-matching 2-cells".into()));
        }
        Ok(VCell2 {
            src: phi.src.clone(),
            tgt: psi.tgt.clone(),
            u: compose_fn(&phi.u, &psi.u).map_err(SpanError::from)?,
        })
    }

    /// `φ` then `ψ`, inserting the canonical isomorphism when the middle
    /// boundaries agree only up to isomorphism.
    pub fn vcompose_iso(&self, phi: &VCell2<B>, psi: &VCell2<B>) -> Result<VCell2<B>, SpanVError> {
        if phi.tgt == psi.src {
            return self.vcompose(phi, psi);
        }
        let k = self
            .canonical_iso(&phi.tgt, &psi.src)?
            .ok_or_else(|| SpanVError::BoundaryMismatch("middle boundaries are not isomorphic".into()))?;
        let u = compose_fn(&compose_fn(&phi.u, &k).map_err(SpanError::from)?, &psi.u).map_err(SpanError::from)?;
        Ok(VCell2 { src: phi.src.clone(), tgt: psi.tgt.clone(), u })
    }

    pub fn vcompose_chain(&self, cells: &[VCell2<B>]) -> Result<VCell2<B>, SpanVError> {
        let (first, rest) = cells.split_first().expect("at least one 2-cell");
        rest.iter().try_fold(first.clone(), |acc, c| self.vcompose_iso(&acc, c))
    }

    pub fn hcompose(&self, phi: &VCell2<B>, psi: &VCell2<B>) -> Result<VCell2<B>, SpanVError> {
        let (src, p1, p2) = self.compose_with_projections(&phi.src, &psi.src)?;
        let (tgt, q1, q2) = self.compose_with_projections(&phi.tgt, &psi.tgt)?;
        let index: HashMap<(usize, usize), usize> = (0..tgt.size()).map(|k| ((q1.apply(k), q2.apply(k)), k)).collect();
        let mut table = Vec::with_capacity(src.size());
        for k in 0..src.size() {
            match index.get(&(phi.u.apply(p1.apply(k)), psi.u.apply(p2.apply(k)))) {
                Some(&t) => table.push(t),
                None => return Err(SpanVError::TriangleViolation { element: src.element(k) }),
            }
        }
        let u = FinFn::new(src.span.carrier(), tgt.span.carrier(), table).map_err(SpanError::from)?;
        Ok(VCell2 { src, tgt, u })
    }

    pub fn hcompose_all(&self, cells: &[&VCell2<B>]) -> Result<VCell2<B>, SpanVError> {
        let (first, rest) = cells.split_first().expect("at least one 2-cell");
        rest.iter().try_fold((*first).clone(), |acc, c| self.hcompose(&acc, c))
    }

    /// `pre ; φ ; post` with identity 2-cells on the whiskering 1-cells.
    pub fn whisker(
        &self,
        pre: Option<&VCell1<B>>,
        phi: &VCell2<B>,
        post: Option<&VCell1<B>>,
    ) -> Result<VCell2<B>, SpanVError> {
        let mut out = phi.clone();
        if let Some(p) = post {
            out = self.hcompose(&out, &self.identity_2cell(p))?;
        }
        if let Some(p) = pre {
            out = self.hcompose(&self.identity_2cell(p), &out)?;
        }
        Ok(out)
    }

    pub fn tensor_2cells(&self, phi: &VCell2<B>, psi: &VCell2<B>) -> VCell2<B> {
        let n = psi.tgt.size();
        let src = self.tensor(&phi.src, &psi.src);
        let tgt = self.tensor(&phi.tgt, &psi.tgt);
        let table: Vec<usize> =
            phi.u.table().iter().flat_map(|&a| psi.u.table().iter().map(move |&b| a * n + b)).collect();
        let u = FinFn::new(src.span.carrier(), tgt.span.carrier(), table).expect("product of apex maps");
        VCell2 { src, tgt, u }
    }

    pub fn tensor_2cells_all(&self, cells: &[&VCell2<B>]) -> VCell2<B> {
        let unit = self.identity_2cell(&self.identity_cell(&self.unit_fam()));
        cells.iter().fold(unit, |acc, c| self.tensor_2cells(&acc, c))
    }

    /// Inverse 2-cell when the apex map is a bijection.
    pub fn invert_2cell(&self, phi: &VCell2<B>) -> Option<VCell2<B>> {
        Some(VCell2 { src: phi.tgt.clone(), tgt: phi.src.clone(), u: phi.u.inverse()? })
    }

    pub fn forget_cell(&self, c: &VCell1<B>) -> Span {
        c.span.clone()
    }

    pub fn forget_2cell(&self, c: &VCell2<B>) -> SpanMap {
        SpanMap { src: c.src.span.clone(), tgt: c.tgt.span.clone(), u: c.u.clone() }
    }

    /// Canonical isomorphism `a → b`: within each group of apex elements
    /// sharing legs and component, the k-th element goes to the k-th.
    pub fn canonical_iso(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<Option<FinFn>, SpanVError> {
        if a.dom != b.dom || a.cod != b.cod {
            return Err(SpanVError::Span(SpanError::FeetMismatch {
                left: a.dom.index.clone(),
                right: b.dom.index.clone(),
            }));
        }
        if a.size() != b.size() {
            return Ok(None);
        }
        if a == b {
            return Ok(Some(FinFn::identity(&a.span.carrier())));
        }
        let gb = groups(b);
        let mut table = vec![0; a.size()];
        for (key, xs) in groups(a) {
            match gb.get(&key) {
                Some(ys) if ys.len() == xs.len() => {
                    for (x, &y) in xs.into_iter().zip(ys) {
                        table[x] = y;
                    }
                }
                _ => return Ok(None),
            }
        }
        Ok(Some(FinFn::new(a.span.carrier(), b.span.carrier(), table).map_err(SpanError::from)?))
    }

    pub fn cells_isomorphic(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<Option<VCell2<B>>, SpanVError> {
        Ok(self.canonical_iso(a, b)?.map(|u| VCell2 { src: a.clone(), tgt: b.clone(), u }))
    }

    /// Transport `φ` to isomorphic boundaries.
    pub fn coerce(&self, phi: &VCell2<B>, src: &VCell1<B>, tgt: &VCell1<B>) -> Result<VCell2<B>, SpanVError> {
        let i = self
            .canonical_iso(src, &phi.src)?
            .ok_or_else(|| SpanVError::BoundaryMismatch("source is not isomorphic".into()))?;
        let j = self
            .canonical_iso(&phi.tgt, tgt)?
            .ok_or_else(|| SpanVError::BoundaryMismatch("target is not isomorphic".into()))?;
        let u = compose_fn(&compose_fn(&i, &phi.u).map_err(SpanError::from)?, &j).map_err(SpanError::from)?;
        Ok(VCell2 { src: src.clone(), tgt: tgt.clone(), u })
    }

    /// Equality of 2-cells whose boundaries agree up to isomorphism. With
    /// literally equal boundaries the apex maps are compared directly;
    /// otherwise through the canonical isomorphisms, and failing that by
    /// asking for any pair of boundary isomorphisms relating the two maps.
    /// Returns the first source element where they differ.
    pub fn cells2_equal(&self, phi: &VCell2<B>, psi: &VCell2<B>) -> Result<Option<Mismatch>, SpanVError> {
        if phi.src == psi.src && phi.tgt == psi.tgt {
            return Ok((0..phi.src.size()).find(|&k| phi.u.apply(k) != psi.u.apply(k)).map(|k| Mismatch {
                element: phi.src.element(k),
                feet: Some(phi.src.feet(k)),
                detail: format!(
                    "sent to {:?} on one side and {:?} on the other",
                    phi.tgt.element(phi.u.apply(k)),
                    psi.tgt.element(psi.u.apply(k))
                ),
            }));
        }
        let i = self
            .canonical_iso(&phi.src, &psi.src)?
            .ok_or_else(|| SpanVError::BoundaryMismatch("sources are not isomorphic".into()))?;
        let j = self
            .canonical_iso(&phi.tgt, &psi.tgt)?
            .ok_or_else(|| SpanVError::BoundaryMismatch("targets are not isomorphic".into()))?;
        let first_bad = (0..phi.src.size()).find(|&k| j.apply(phi.u.apply(k)) != psi.u.apply(i.apply(k)));
        if first_bad.is_none() {
            return Ok(None);
        }

        // Components are constant on groups, so any boundary isomorphism
        // preserves groups and the two maps must agree group by group up to
        // relabelling: same multiset of fiber sizes over each target group.
        let (pl, pr) = (fiber_profile(phi), fiber_profile(psi));
        let key_of = |k: usize| {
            let t = phi.u.apply(k);
            (phi.tgt.span.f().apply(t), phi.tgt.span.g().apply(t), &phi.tgt.alpha[t])
        };
        let bad = (0..phi.src.size()).find(|&k| {
            let key = key_of(k);
            pl.get(&key) != pr.get(&key)
        });
        Ok(bad.map(|k| Mismatch {
            element: phi.src.element(k),
            feet: Some(phi.src.feet(k)),
            detail: format!(
                "sent to {:?} on one side and {:?} on the other",
                phi.tgt.element(phi.u.apply(k)),
                psi.tgt.element(psi.u.apply(i.apply(k)))
            ),
        }))
    }

    /// First apex element witnessing that `a` and `b` are not isomorphic:
    /// an element of `a` whose group has a different size in `b`, or failing
    /// that an element of `b` with no counterpart in `a`.
    pub fn iso_mismatch(&self, a: &VCell1<B>, b: &VCell1<B>) -> Option<Mismatch> {
        if a.dom != b.dom || a.cod != b.cod {
            return Some(Mismatch {
                element: Vec::new(),
                feet: None,
                detail: format!("1-cells {} -> {} and {} -> {}", a.dom.index, a.cod.index, b.dom.index, b.cod.index),
            });
        }
        let (ga, gb) = (groups(a), groups(b));
        let count = |g: &HashMap<Key<'_, B::Mor>, Vec<usize>>, k: &Key<'_, B::Mor>| g.get(k).map_or(0, Vec::len);
        let describe = |c: &VCell1<B>, k: usize, n: usize, m: usize| Mismatch {
            element: c.element(k),
            feet: Some(c.feet(k)),
            detail: format!(
                "legs ({:?}, {:?}) occur {n} times on one side and {m} on the other",
                c.dom.index.decode(c.span.f().apply(k)),
                c.cod.index.decode(c.span.g().apply(k))
            ),
        };
        for k in 0..a.size() {
            let key = (a.span.f().apply(k), a.span.g().apply(k), &a.alpha[k]);
            let (n, m) = (count(&ga, &key), count(&gb, &key));
            if n != m {
                return Some(describe(a, k, n, m));
            }
        }
        (0..b.size()).find_map(|k| {
            let key = (b.span.f().apply(k), b.span.g().apply(k), &b.alpha[k]);
            let (n, m) = (count(&ga, &key), count(&gb, &key));
            (n != m).then(|| describe(b, k, n, m))
        })
    }

    /// Every map of spans `a → b` that factors the components.
    pub fn all_2cells(&self, a: &VCell1<B>, b: &VCell1<B>) -> Vec<VCell2<B>> {
        crate::span::span_maps(&a.span, &b.span)
            .map(|u| VCell2 { src: a.clone(), tgt: b.clone(), u })
            .filter(|c| self.validate_2cell(c).is_ok())
            .collect()
    }

    /// The only candidate 2-cell `a ⇒ b` when `b` has a monic leg.
    pub fn unique_2cell(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<Option<VCell2<B>>, SpanVError> {
        let Some(m) = crate::span::unique_map_to_monic(&a.span, &b.span)? else { return Ok(None) };
        let c = VCell2 { src: a.clone(), tgt: b.clone(), u: m.u };
        Ok(self.validate_2cell(&c).ok().map(|_| c))
    }
}
