use oplax_core::finset::{FinFn, FinSet};
use oplax_core::span::{compose_spans, tensor_spans, Span};
use oplax_core::spanv::{SpanV, VCell1, VCell2, VFam};
use oplax_core::vbackend::{Mat, MatBackend, TrivialBackend, VBackend};
use proptest::prelude::*;

type E = SpanV<MatBackend>;

fn engine() -> E {
    SpanV::new(MatBackend::fp(2))
}

fn fam(n: usize) -> impl Strategy<Value = VFam<usize>> {
    prop::collection::vec(1usize..3, n).prop_map(move |objs| VFam { index: FinSet::atom(n), objs })
}

fn random_mat(rows: usize, cols: usize, seed: u64) -> Mat {
    let v = MatBackend::fp(2);
    v.from_fn(rows, cols, |i, j| ((seed >> ((i * 3 + j) % 60)) & 1) as i64)
}

fn cell_over(m: VFam<usize>, n: VFam<usize>) -> impl Strategy<Value = VCell1<MatBackend>> {
    let (l, r) = (m.size(), n.size());
    (0usize..5)
        .prop_flat_map(move |k| {
            (prop::collection::vec(0..l, k), prop::collection::vec(0..r, k), prop::collection::vec(any::<u64>(), k))
        })
        .prop_map(move |(f, g, seeds)| {
            let k = f.len();
            let span = Span::from_legs(
                FinFn::new(FinSet::atom(k), m.index.clone(), f.clone()).unwrap(),
                FinFn::new(FinSet::atom(k), n.index.clone(), g.clone()).unwrap(),
            )
            .unwrap();
            let alpha = (0..k).map(|i| random_mat(m.objs[f[i]], n.objs[g[i]], seeds[i])).collect();
            engine().cell(m.clone(), n.clone(), span, alpha).unwrap()
        })
}

/// A 2-cell into `b` obtained by pulling `b` back along a random apex map.
fn two_cell_into(b: VCell1<MatBackend>) -> impl Strategy<Value = VCell2<MatBackend>> {
    let nb = b.size();
    let len = if nb == 0 { 0usize..1 } else { 0usize..5 };
    len.prop_flat_map(move |k| prop::collection::vec(0..nb.max(1), k)).prop_map(move |u| {
        let k = u.len();
        let dom = FinSet::atom(k);
        let f = FinFn::new(dom.clone(), b.dom.index.clone(), u.iter().map(|&t| b.span.f().apply(t)).collect()).unwrap();
        let g = FinFn::new(dom.clone(), b.cod.index.clone(), u.iter().map(|&t| b.span.g().apply(t)).collect()).unwrap();
        let alpha = u.iter().map(|&t| b.alpha[t].clone()).collect();
        let a = engine().cell(b.dom.clone(), b.cod.clone(), Span::from_legs(f, g).unwrap(), alpha).unwrap();
        let uu = FinFn::new(dom, b.span.carrier(), u).unwrap();
        engine().make_2cell(a, b.clone(), uu).unwrap()
    })
}

/// φ: a ⇒ a′ and φ′: a′ ⇒ a″ between the given families.
fn chain(m: VFam<usize>, n: VFam<usize>) -> impl Strategy<Value = (VCell2<MatBackend>, VCell2<MatBackend>)> {
    cell_over(m, n)
        .prop_flat_map(two_cell_into)
        .prop_flat_map(|second| (two_cell_into(second.src.clone()), Just(second)))
}

fn three_fams() -> impl Strategy<Value = (VFam<usize>, VFam<usize>, VFam<usize>)> {
    (1usize..3, 1usize..3, 1usize..3).prop_flat_map(|(a, b, c)| (fam(a), fam(b), fam(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn interchange_law(((p1, p2), (q1, q2)) in three_fams()
        .prop_flat_map(|(m, n, o)| (chain(m, n.clone()), chain(n, o))))
    {
        let e = engine();
        let lhs = e.hcompose(&e.vcompose(&p1, &p2).unwrap(), &e.vcompose(&q1, &q2).unwrap()).unwrap();
        let rhs = e.vcompose(&e.hcompose(&p1, &q1).unwrap(), &e.hcompose(&p2, &q2).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(e.validate_2cell(&lhs).is_ok());
    }

    #[test]
    fn pasting_preserves_factorization(((p1, _), (q1, _)) in three_fams()
        .prop_flat_map(|(m, n, o)| (chain(m, n.clone()), chain(n, o))))
    {
        let e = engine();
        prop_assert!(e.validate_2cell(&e.hcompose(&p1, &q1).unwrap()).is_ok());
        prop_assert!(e.validate_2cell(&e.tensor_2cells(&p1, &q1)).is_ok());
        prop_assert!(e.validate_2cell(&e.whisker(Some(&p1.src), &q1, None).unwrap()).is_ok());
        prop_assert!(e.validate_2cell(&e.whisker(None, &p1, Some(&q1.tgt)).unwrap()).is_ok());
    }

    #[test]
    fn forgetful_is_strict((a, b) in three_fams().prop_flat_map(|(m, n, o)| (cell_over(m, n.clone()), cell_over(n, o)))) {
        let e = engine();
        prop_assert_eq!(e.compose(&a, &b).unwrap().span, compose_spans(&a.span, &b.span).unwrap());
        prop_assert_eq!(e.tensor(&a, &b).span, tensor_spans(&a.span, &b.span));
        prop_assert_eq!(e.tensor_fam(&a.dom, &b.dom).index, oplax_core::finset::product(&[a.dom.index.clone(), b.dom.index.clone()]));
    }

    #[test]
    fn trivial_backend_round_trip((a, b) in three_fams().prop_flat_map(|(m, n, o)| (cell_over(m, n.clone()), cell_over(n, o)))) {
        let t = SpanV::new(TrivialBackend);
        let lift = |c: &VCell1<MatBackend>| {
            let dom = t.constant_fam(&c.dom.index, ());
            let cod = t.constant_fam(&c.cod.index, ());
            t.cell(dom, cod, c.span.clone(), vec![(); c.size()]).unwrap()
        };
        let (ta, tb) = (lift(&a), lift(&b));
        prop_assert_eq!(t.compose(&ta, &tb).unwrap().span, compose_spans(&a.span, &b.span).unwrap());
        prop_assert_eq!(t.tensor(&ta, &tb).span, tensor_spans(&a.span, &b.span));
    }

    #[test]
    fn identity_cells_are_units(a in three_fams().prop_flat_map(|(m, n, _)| cell_over(m, n))) {
        let e = engine();
        prop_assert_eq!(e.compose(&e.identity_cell(&a.dom), &a).unwrap(), a.clone());
        prop_assert_eq!(e.compose(&a, &e.identity_cell(&a.cod)).unwrap(), a.clone());
        let id2 = e.identity_2cell(&a);
        prop_assert_eq!(e.hcompose(&id2, &e.identity_2cell(&e.identity_cell(&a.cod))).unwrap(), id2);
    }

    #[test]
    fn relabelled_cells_are_isomorphic(a in three_fams().prop_flat_map(|(m, n, _)| cell_over(m, n)), seed in any::<u64>()) {
        let e = engine();
        let n = a.size();
        let mut perm: Vec<usize> = (0..n).collect();
        if n > 1 {
            perm.rotate_left((seed as usize) % n);
        }
        let c = FinSet::atom(n);
        let f = FinFn::new(c.clone(), a.dom.index.clone(), perm.iter().map(|&k| a.span.f().apply(k)).collect()).unwrap();
        let g = FinFn::new(c, a.cod.index.clone(), perm.iter().map(|&k| a.span.g().apply(k)).collect()).unwrap();
        let alpha = perm.iter().map(|&k| a.alpha[k].clone()).collect();
        let b = e.cell(a.dom.clone(), a.cod.clone(), Span::from_legs(f, g).unwrap(), alpha).unwrap();
        let w = e.cells_isomorphic(&a, &b).unwrap().expect("relabelling");
        prop_assert!(e.validate_2cell(&w).is_ok());
        let inv = e.invert_2cell(&w).unwrap();
        prop_assert!(e.validate_2cell(&inv).is_ok());
    }
}

#[test]
fn changed_component_breaks_isomorphism() {
    let e = engine();
    let m = VFam { index: FinSet::atom(1), objs: vec![2] };
    let span = oplax_core::span::identity_span(&FinSet::unit());
    let a = e.cell(m.clone(), m.clone(), span.clone(), vec![e.v.id(&2)]).unwrap();
    let b = e.cell(m.clone(), m, span, vec![e.v.braiding(&1, &2).clone()]).unwrap();
    assert_eq!(a, b);
    let c = VCell1 { alpha: vec![e.v.mat(2, 2, &[0, 1, 1, 0]).unwrap()], ..a.clone() };
    assert!(e.cells_isomorphic(&a, &c).unwrap().is_none());
}

#[test]
fn multiplication_then_counit_components() {
    // One-object Hopf algebra F3[Z/2]: composing multiplication with the
    // counit gives ε∘m with components indexed by X³ (here X = 1).
    let e = SpanV::new(MatBackend::fp(3));
    let one = FinSet::unit();
    let h = VFam { index: one.clone(), objs: vec![2] };
    let hh = e.tensor_fam(&h, &h);
    let id_span = oplax_core::span::identity_span(&one);
    let m = e.v.from_fn(4, 2, |r, c| i64::from((r / 2 + r % 2) % 2 == c));
    let eps = e.v.mat(2, 1, &[1, 1]).unwrap();
    let mc = e.cell(hh, h.clone(), id_span.clone(), vec![m.clone()]).unwrap();
    let ec = e.cell(h, e.unit_fam(), id_span, vec![eps.clone()]).unwrap();
    let c = e.compose(&mc, &ec).unwrap();
    assert_eq!(c.alpha, vec![e.v.compose(&m, &eps).unwrap()]);
    assert_eq!(c.alpha[0], e.v.mat(4, 1, &[1, 1, 1, 1]).unwrap());
}
