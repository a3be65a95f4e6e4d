//! Spans of finite sets: composition by pullback, tensor, braiding, maps of
//! spans and isomorphism search.

use std::collections::HashMap;

use thiserror::Error;

use crate::finset::{compose_fn, product, pullback_pairs, FinError, FinFn, FinSet, SubsetApex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpanError {
    #[error("feet do not match: {left} vs {right}")]
    FeetMismatch { left: FinSet, right: FinSet },
    #[error("the legs of the target span are not jointly injective")]
    NotMonic,
    #[error("map of spans breaks a leg triangle at apex element {element:?}")]
    TriangleViolation { element: Vec<usize> },
    #[error(transparent)]
    Fin(#[from] FinError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Co,
    Contra,
}

/// `left ← apex → right`, with the legs defined on `apex.carrier()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    apex: SubsetApex,
    f: FinFn,
    g: FinFn,
}

impl Span {
    pub fn new(apex: SubsetApex, f: FinFn, g: FinFn) -> Result<Self, SpanError> {
        let carrier = apex.carrier();
        for leg in [&f, &g] {
            if leg.dom() != &carrier {
                return Err(SpanError::FeetMismatch { left: leg.dom().clone(), right: carrier });
            }
        }
        Ok(Span { apex, f, g })
    }

    /// Span whose apex is the whole common domain of the legs.
    pub fn from_legs(f: FinFn, g: FinFn) -> Result<Self, SpanError> {
        Self::new(SubsetApex::full(f.dom().clone()), f, g)
    }

    pub(crate) fn from_tables(apex: SubsetApex, left: FinSet, right: FinSet, f: Vec<usize>, g: Vec<usize>) -> Self {
        let c = apex.carrier();
        let f = FinFn::new(c.clone(), left, f).expect("leg table");
        let g = FinFn::new(c, right, g).expect("leg table");
        Span { apex, f, g }
    }

    pub fn left(&self) -> &FinSet {
        self.f.cod()
    }

    pub fn right(&self) -> &FinSet {
        self.g.cod()
    }

    pub fn apex(&self) -> &SubsetApex {
        &self.apex
    }

    pub fn carrier(&self) -> FinSet {
        self.apex.carrier()
    }

    pub fn size(&self) -> usize {
        self.apex.len()
    }

    pub fn f(&self) -> &FinFn {
        &self.f
    }

    pub fn g(&self) -> &FinFn {
        &self.g
    }

    pub fn element(&self, k: usize) -> Vec<usize> {
        self.apex.row(k)
    }

    pub fn is_identity(&self) -> bool {
        self.f.is_identity() && self.g.is_identity()
    }

    /// Swap the legs.
    pub fn reverse(&self) -> Span {
        Span { apex: self.apex.clone(), f: self.g.clone(), g: self.f.clone() }
    }

    /// Same legs over a new apex of the same size.
    pub fn with_apex(&self, apex: SubsetApex) -> Span {
        assert_eq!(apex.len(), self.apex.len());
        let c = apex.carrier();
        Span { f: self.f.recarrier(c.clone(), self.left().clone()), g: self.g.recarrier(c, self.right().clone()), apex }
    }

    /// Literally `identity_span(x)`.
    pub fn is_identity_span(&self) -> bool {
        self.apex.is_full() && self.is_identity()
    }
}

pub fn identity_span(x: &FinSet) -> Span {
    Span { apex: SubsetApex::full(x.clone()), f: FinFn::identity(x), g: FinFn::identity(x) }
}

pub fn from_function(h: &FinFn, direction: Direction) -> Span {
    let id = FinFn::identity(h.dom());
    match direction {
        Direction::Co => Span { apex: SubsetApex::full(h.dom().clone()), f: id, g: h.clone() },
        Direction::Contra => Span { apex: SubsetApex::full(h.dom().clone()), f: h.clone(), g: id },
    }
}

pub fn compose_spans(a: &Span, b: &Span) -> Result<Span, SpanError> {
    compose_spans_with_projections(a, b).map(|(s, _, _)| s)
}

/// Composite `a ; b` together with the projections of its apex onto the
/// apexes of `a` and `b`. Identity spans are absorbed; every other composite
/// is the pullback, with apex rows formed by concatenating the rows of the
/// two factors.
pub fn compose_spans_with_projections(a: &Span, b: &Span) -> Result<(Span, FinFn, FinFn), SpanError> {
    if a.right() != b.left() {
        return Err(SpanError::FeetMismatch { left: a.right().clone(), right: b.left().clone() });
    }
    let (ca, cb) = (a.carrier(), b.carrier());
    if b.is_identity_span() {
        let p2 = a.g.recarrier(ca.clone(), cb);
        return Ok((a.clone(), FinFn::identity(&ca), p2));
    }
    if a.is_identity_span() {
        let p1 = b.f.recarrier(cb.clone(), ca);
        return Ok((b.clone(), p1, FinFn::identity(&cb)));
    }
    let pairs = pullback_pairs(a.g.table(), b.f.table());
    let apex = SubsetApex::pairs(&a.apex, &b.apex, &pairs);
    let f: Vec<usize> = pairs.iter().map(|&(s, _)| a.f.apply(s)).collect();
    let g: Vec<usize> = pairs.iter().map(|&(_, q)| b.g.apply(q)).collect();
    let span = Span::from_tables(apex, a.left().clone(), b.right().clone(), f, g);
    let c = span.carrier();
    let p1 = FinFn::new(c.clone(), ca, pairs.iter().map(|p| p.0).collect())?;
    let p2 = FinFn::new(c, cb, pairs.iter().map(|p| p.1).collect())?;
    Ok((span, p1, p2))
}

pub fn tensor_spans(a: &Span, b: &Span) -> Span {
    let apex = SubsetApex::product(&a.apex, &b.apex);
    let c = apex.carrier();
    let f = a.f.tensor(&b.f);
    let g = a.g.tensor(&b.g);
    Span { f: f.recarrier(c.clone(), f.cod().clone()), g: g.recarrier(c, g.cod().clone()), apex }
}

pub fn tensor_all(spans: &[&Span]) -> Span {
    spans.iter().fold(identity_span(&FinSet::unit()), |acc, s| tensor_spans(&acc, s))
}

/// `X×Y ← X×Y → Y×X` with the swap on the right.
pub fn braiding_span(x: &FinSet, y: &FinSet) -> Span {
    let xy = product(&[x.clone(), y.clone()]);
    Span { apex: SubsetApex::full(xy.clone()), f: FinFn::identity(&xy), g: FinFn::swap(x, y) }
}

/// A map of spans `u: src → tgt` over common feet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanMap {
    pub src: Span,
    pub tgt: Span,
    pub u: FinFn,
}

impl SpanMap {
    pub fn new(src: Span, tgt: Span, u: FinFn) -> Result<Self, SpanError> {
        check_feet(&src, &tgt)?;
        if u.dom() != &src.carrier() || u.cod() != &tgt.carrier() {
            return Err(SpanError::FeetMismatch { left: u.dom().clone(), right: src.carrier() });
        }
        if let Some(k) = triangle_failure(&src, &tgt, &u) {
            return Err(SpanError::TriangleViolation { element: src.element(k) });
        }
        Ok(SpanMap { src, tgt, u })
    }

    pub fn identity(s: &Span) -> Self {
        SpanMap { src: s.clone(), tgt: s.clone(), u: FinFn::identity(&s.carrier()) }
    }
}

pub(crate) fn triangle_failure(src: &Span, tgt: &Span, u: &FinFn) -> Option<usize> {
    (0..src.size()).find(|&k| {
        let t = u.apply(k);
        tgt.f.apply(t) != src.f.apply(k) || tgt.g.apply(t) != src.g.apply(k)
    })
}

pub(crate) fn check_feet(a: &Span, b: &Span) -> Result<(), SpanError> {
    if a.left() != b.left() {
        return Err(SpanError::FeetMismatch { left: a.left().clone(), right: b.left().clone() });
    }
    if a.right() != b.right() {
        return Err(SpanError::FeetMismatch { left: a.right().clone(), right: b.right().clone() });
    }
    Ok(())
}

/// Apex elements grouped by leg values, each group in increasing order.
pub(crate) fn fibers(s: &Span) -> HashMap<(usize, usize), Vec<usize>> {
    let mut out: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for k in 0..s.size() {
        out.entry((s.f.apply(k), s.g.apply(k))).or_default().push(k);
    }
    out
}

/// A leg-preserving bijection `a → b`, matching the k-th element of each
/// fiber of `a` with the k-th element of the same fiber of `b`.
pub fn spans_isomorphic(a: &Span, b: &Span) -> Result<Option<SpanMap>, SpanError> {
    check_feet(a, b)?;
    if a.size() != b.size() {
        return Ok(None);
    }
    let fa = fibers(a);
    let fb = fibers(b);
    let mut table = vec![0; a.size()];
    for (key, xs) in &fa {
        match fb.get(key) {
            Some(ys) if ys.len() == xs.len() => {
                for (&x, &y) in xs.iter().zip(ys) {
                    table[x] = y;
                }
            }
            _ => return Ok(None),
        }
    }
    let u = FinFn::new(a.carrier(), b.carrier(), table)?;
    Ok(Some(SpanMap { src: a.clone(), tgt: b.clone(), u }))
}

/// The only possible map of spans into a span whose legs are jointly
/// injective (in particular, one with an injective leg).
pub fn unique_map_to_monic(a: &Span, b: &Span) -> Result<Option<SpanMap>, SpanError> {
    check_feet(a, b)?;
    let mut back: HashMap<(usize, usize), usize> = HashMap::with_capacity(b.size());
    for t in 0..b.size() {
        if back.insert((b.f.apply(t), b.g.apply(t)), t).is_some() {
            return Err(SpanError::NotMonic);
        }
    }
    let mut table = Vec::with_capacity(a.size());
    for k in 0..a.size() {
        match back.get(&(a.f.apply(k), a.g.apply(k))) {
            Some(&t) => table.push(t),
            None => return Ok(None),
        }
    }
    let u = FinFn::new(a.carrier(), b.carrier(), table)?;
    Ok(Some(SpanMap { src: a.clone(), tgt: b.clone(), u }))
}

/// Number of maps of spans `a → b`, or `None` on overflow.
pub fn span_map_count(a: &Span, b: &Span) -> Option<usize> {
    if a.left() != b.left() || a.right() != b.right() {
        return Some(0);
    }
    let fb = fibers(b);
    (0..a.size()).try_fold(1usize, |acc, k| {
        let n = fb.get(&(a.f.apply(k), a.g.apply(k))).map_or(0, Vec::len);
        acc.checked_mul(n)
    })
}

/// Every map of spans `a → b`, in lexicographic order of tables.
pub fn span_maps(a: &Span, b: &Span) -> impl Iterator<Item = FinFn> {
    let feet_ok = a.left() == b.left() && a.right() == b.right();
    let fb = fibers(b);
    let choices: Vec<Vec<usize>> =
        (0..a.size()).map(|k| fb.get(&(a.f.apply(k), a.g.apply(k))).cloned().unwrap_or_default()).collect();
    let empty = !feet_ok || choices.iter().any(Vec::is_empty);
    let (dom, cod) = (a.carrier(), b.carrier());
    let mut cursor = if empty { None } else { Some(vec![0usize; choices.len()]) };
    std::iter::from_fn(move || {
        let cur = cursor.as_mut()?;
        let table: Vec<usize> = cur.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                cursor = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < choices[pos].len() {
                break;
            }
            cur[pos] = 0;
        }
        Some(FinFn::new(dom.clone(), cod.clone(), table).expect("fiber choice"))
    })
}

/// Vertical composite of two maps of spans.
pub fn vcompose_maps(a: &SpanMap, b: &SpanMap) -> Result<SpanMap, SpanError> {
    if a.tgt != b.src {
        return Err(SpanError::FeetMismatch { left: a.tgt.carrier(), right: b.src.carrier() });
    }
    Ok(SpanMap { src: a.src.clone(), tgt: b.tgt.clone(), u: compose_fn(&a.u, &b.u)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize) -> FinSet {
        FinSet::atom(n)
    }

    /// Codiscrete groupoid multiplication on X²: (a,b,c) ↦ ((a,b,b,c), (a,c)).
    fn mu(n: usize) -> Span {
        let f = FinFn::rearrange(&[x(n), x(n), x(n)], &[0, 1, 1, 2]);
        let g = FinFn::rearrange(&[x(n), x(n), x(n)], &[0, 2]);
        Span::from_legs(f, g).unwrap()
    }

    /// Groupoid unit X² ← X → I followed by nothing; here η : I → X² is (!, Δ).
    fn eta(n: usize) -> Span {
        Span::from_legs(FinFn::terminal(&x(n)), FinFn::diagonal(&x(n))).unwrap()
    }

    /// Trivial counit ν : X² → I with apex X², legs (id, !).
    fn nu(n: usize) -> Span {
        let xx = x(n).power(2);
        Span::from_legs(FinFn::identity(&xx), FinFn::terminal(&xx)).unwrap()
    }

    #[test]
    fn identity_absorbed_literally() {
        let m = mu(2);
        let id2 = identity_span(&x(2).power(2));
        let id4 = identity_span(&x(2).power(4));
        assert_eq!(compose_spans(&id4, &m).unwrap(), m);
        assert_eq!(compose_spans(&m, &id2).unwrap(), m);
    }

    #[test]
    fn counit_then_unit_on_x2() {
        let s = compose_spans(&nu(2), &eta(2)).unwrap();
        assert_eq!(s.size(), 8);
        for k in 0..8 {
            let (a, b, c) = (k / 4, (k / 2) % 2, k % 2);
            assert_eq!(s.f().apply(k), a * 2 + b);
            assert_eq!(s.g().apply(k), c * 2 + c);
        }
    }

    #[test]
    fn associated_multiplication_has_sixteen_elements() {
        let m1 = tensor_spans(&mu(2), &identity_span(&x(2).power(2)));
        let s = compose_spans(&m1, &mu(2)).unwrap();
        assert_eq!(s.size(), 16);
    }

    #[test]
    fn braiding_index() {
        let b = braiding_span(&x(2), &x(3));
        assert_eq!(b.g().apply(2), 4);
        let bb = compose_spans(&b, &braiding_span(&x(3), &x(2))).unwrap();
        assert!(spans_isomorphic(&bb, &identity_span(&product(&[x(2), x(3)]))).unwrap().is_some());
    }

    #[test]
    fn tensor_of_identities() {
        let t = tensor_spans(&identity_span(&x(2)), &identity_span(&x(3)));
        assert_eq!(t, identity_span(&product(&[x(2), x(3)])));
    }

    #[test]
    fn tensor_with_identity_apex() {
        let t = tensor_spans(&mu(2), &identity_span(&x(2).power(2)));
        assert_eq!(t.apex().ambient().shape(), &[2, 2, 2, 2, 2]);
        assert_eq!(t.left().shape(), &[2; 6]);
    }

    #[test]
    fn function_spans() {
        let d = FinFn::diagonal(&x(2));
        let s = from_function(&d, Direction::Co);
        assert!(s.f().is_identity());
        assert_eq!(s.g(), &d);
        assert_eq!(from_function(&FinFn::identity(&x(3)), Direction::Co), identity_span(&x(3)));
        let r = from_function(&d, Direction::Contra);
        assert!(spans_isomorphic(&s.reverse(), &r).unwrap().is_some());
    }

    #[test]
    fn fiber_profile_mismatch() {
        let d = FinFn::diagonal(&x(2));
        let a = from_function(&d, Direction::Co);
        let b = from_function(&d, Direction::Contra);
        assert!(matches!(spans_isomorphic(&a, &b), Err(SpanError::FeetMismatch { .. })));
        let xx = x(2).power(2);
        let a = Span::from_legs(FinFn::identity(&xx), FinFn::swap(&x(2), &x(2))).unwrap();
        let b = identity_span(&xx);
        assert!(spans_isomorphic(&a, &b).unwrap().is_none());
    }

    #[test]
    fn unique_map_recovers_diagonal() {
        let n = 3;
        let xx = x(n).power(2);
        let d = Span::from_legs(FinFn::identity(&xx), FinFn::rearrange(&[x(n), x(n)], &[0, 1, 0, 1])).unwrap();
        let src = compose_spans(&eta(n), &d).unwrap();
        let tgt = tensor_spans(&eta(n), &eta(n));
        let w = unique_map_to_monic(&src, &tgt).unwrap().unwrap();
        assert_eq!(w.u, FinFn::diagonal(&x(n)));
    }

    #[test]
    fn unique_map_needs_monic_leg() {
        let bang = Span::from_legs(FinFn::terminal(&x(2)), FinFn::terminal(&x(2))).unwrap();
        assert_eq!(unique_map_to_monic(&bang, &bang), Err(SpanError::NotMonic));
        let id = identity_span(&x(2));
        let w = unique_map_to_monic(&id, &id).unwrap().unwrap();
        assert!(w.u.is_identity());
        let other = Span::from_legs(FinFn::identity(&x(2)), FinFn::constant(&x(2), &x(2), 0)).unwrap();
        assert!(unique_map_to_monic(&other, &id).unwrap().is_none());
    }

    #[test]
    fn map_enumeration() {
        let xx = x(2);
        let two_points = Span::from_legs(FinFn::terminal(&x(2)), FinFn::terminal(&x(2))).unwrap();
        let one = identity_span(&FinSet::unit());
        assert_eq!(span_maps(&two_points, &two_points).count(), 4);
        assert_eq!(span_map_count(&two_points, &two_points), Some(4));
        assert_eq!(span_maps(&one, &two_points).count(), 2);
        assert_eq!(span_maps(&two_points, &identity_span(&xx)).count(), 0);
    }

    #[test]
    fn feet_mismatch() {
        assert!(matches!(
            compose_spans(&identity_span(&x(2)), &identity_span(&x(3))),
            Err(SpanError::FeetMismatch { .. })
        ));
    }

    #[test]
    fn triangle_checked() {
        let id = identity_span(&x(2));
        let bad = FinFn::new(x(2), x(2), vec![1, 0]).unwrap();
        assert!(
            matches!(SpanMap::new(id.clone(), id, bad), Err(SpanError::TriangleViolation { element }) if element == vec![0])
        );
    }
}
