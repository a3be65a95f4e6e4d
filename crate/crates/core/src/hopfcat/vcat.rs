//! Enriched categories given hom by hom, and their axioms checked directly
//! in V. Families are indexed row-major: `H_{x,y}` sits at `x·|X| + y`,
//! `m_{xyz}` at `(x·|X| + y)·|X| + z`.

use crate::finset::{FinFn, FinSet};
use crate::structures::{CheckReport, Counterexample};
use crate::vbackend::{MatBackend, VBackend, VError};

use super::x2::X2;
use super::HopfCatError;

/// A semi-Hopf V-category: a V-category whose homs are comonoids and whose
/// composition and identities are comonoid maps. With `s` present it is a
/// Hopf V-category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfVCat<B: VBackend> {
    pub objects: FinSet,
    pub homs: Vec<B::Obj>,
    /// `m_{xyz}: H_{x,y}⊗H_{y,z} → H_{x,z}`.
    pub m: Vec<B::Mor>,
    /// `u_x: I → H_{x,x}`.
    pub u: Vec<B::Mor>,
    /// `δ_{xy}: H_{x,y} → H_{x,y}⊗H_{x,y}`.
    pub delta: Vec<B::Mor>,
    /// `ε_{xy}: H_{x,y} → I`.
    pub eps: Vec<B::Mor>,
    /// `s_{xy}: H_{x,y} → H_{y,x}`.
    pub s: Option<Vec<B::Mor>>,
}

/// A V-category that is also a V-opcategory on the same homs. The
/// Frobenius laws are checked separately, so this also carries plain
/// opcategories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobVCat<B: VBackend> {
    pub objects: FinSet,
    pub homs: Vec<B::Obj>,
    pub m: Vec<B::Mor>,
    pub u: Vec<B::Mor>,
    /// `Δ_{xyz}: H_{x,z} → H_{x,y}⊗H_{y,z}`.
    pub comlt: Vec<B::Mor>,
    /// `ε_x: H_{x,x} → I`.
    pub couni: Vec<B::Mor>,
}

/// Object map `f` and components `F_{xy}: A_{x,y} → B_{fx,fy}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VFunctorData<B: VBackend> {
    pub f: FinFn,
    pub components: Vec<B::Mor>,
}

/// Index arithmetic and composites in V for one object set.
pub(crate) struct Ops<'a, B: VBackend> {
    pub v: &'a B,
    pub x: X2,
}

impl<'a, B: VBackend> Ops<'a, B> {
    pub fn new(v: &'a B, objects: &FinSet) -> Result<Self, HopfCatError> {
        match objects.size() {
            0 => Err(HopfCatError::ShapeMismatch("the object set is empty".into())),
            n => Ok(Ops { v, x: X2::new(n) }),
        }
    }

    pub fn n(&self) -> usize {
        self.x.n
    }

    pub fn i(&self, t: &[usize]) -> usize {
        self.x.enc(t)
    }

    pub fn c(&self, fs: &[&B::Mor]) -> Result<B::Mor, VError> {
        let (first, rest) = fs.split_first().expect("at least one morphism");
        rest.iter().try_fold((*first).clone(), |acc, g| self.v.compose(&acc, g))
    }

    pub fn t(&self, fs: &[&B::Mor]) -> B::Mor {
        let (first, rest) = fs.split_first().expect("at least one morphism");
        rest.iter().fold((*first).clone(), |acc, g| self.v.tensor_mor(&acc, g))
    }

    pub fn id(&self, o: &B::Obj) -> B::Mor {
        self.v.id(o)
    }

    pub fn unit(&self) -> B::Obj {
        self.v.unit()
    }

    pub fn eq(&self, a: &B::Mor, b: &B::Mor) -> bool {
        self.v.dom(a) == self.v.dom(b) && self.v.cod(a) == self.v.cod(b) && self.v.mor_eq(a, b)
    }

    pub fn tensor(&self, a: &B::Obj, b: &B::Obj) -> B::Obj {
        self.v.tensor_obj(a, b)
    }

    /// Records `id`, failing it at the first tuple of `X^arity` where
    /// `holds` is false.
    pub fn law(
        &self,
        report: &mut CheckReport,
        id: &str,
        arity: usize,
        holds: impl Fn(&[usize]) -> Result<bool, VError>,
    ) -> Result<(), HopfCatError> {
        for k in 0..self.x.pow(arity).size() {
            let t = self.x.dec(arity, k);
            if !holds(&t)? {
                let detail = "the two composites differ".to_string();
                report.fail(id, Counterexample { element: t, feet: None, detail });
                return Ok(());
            }
        }
        report.pass(id);
        Ok(())
    }

    pub fn expect(&self, what: &str, at: &[usize], f: &B::Mor, dom: &B::Obj, cod: &B::Obj) -> Result<(), HopfCatError> {
        let (d, c) = (self.v.dom(f), self.v.cod(f));
        if &d != dom || &c != cod {
            return Err(HopfCatError::ShapeMismatch(format!(
                "{what} at {at:?} runs {d:?} -> {c:?}, expected {dom:?} -> {cod:?}"
            )));
        }
        Ok(())
    }

    pub fn expect_len<T>(&self, what: &str, xs: &[T], arity: usize) -> Result<(), HopfCatError> {
        let want = self.x.pow(arity).size();
        if xs.len() != want {
            return Err(HopfCatError::ShapeMismatch(format!("{what} has {} entries, expected {want}", xs.len())));
        }
        Ok(())
    }
}

/// Shapes of `homs`, `m` and `u`.
pub(crate) fn category_shape<B: VBackend>(
    o: &Ops<'_, B>,
    homs: &[B::Obj],
    m: &[B::Mor],
    u: &[B::Mor],
) -> Result<(), HopfCatError> {
    o.expect_len("homs", homs, 2)?;
    o.expect_len("m", m, 3)?;
    o.expect_len("u", u, 1)?;
    let n = o.n();
    let h = |x: usize, y: usize| &homs[o.i(&[x, y])];
    for x in 0..n {
        o.expect("u", &[x], &u[x], &o.unit(), h(x, x))?;
        for y in 0..n {
            for z in 0..n {
                o.expect("m", &[x, y, z], &m[o.i(&[x, y, z])], &o.tensor(h(x, y), h(y, z)), h(x, z))?;
            }
        }
    }
    Ok(())
}

/// `monoid.assoc` on `(x,y,z,w)`, `monoid.unit_left` and
/// `monoid.unit_right` on `(x,y)`.
pub(crate) fn category_laws<B: VBackend>(
    o: &Ops<'_, B>,
    r: &mut CheckReport,
    homs: &[B::Obj],
    m: &[B::Mor],
    u: &[B::Mor],
) -> Result<(), HopfCatError> {
    let h = |x: usize, y: usize| &homs[o.i(&[x, y])];
    let mm = |x: usize, y: usize, z: usize| &m[o.i(&[x, y, z])];
    o.law(r, "monoid.assoc", 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let l = o.c(&[&o.t(&[mm(x, y, z), &o.id(h(z, w))]), mm(x, z, w)])?;
        let rr = o.c(&[&o.t(&[&o.id(h(x, y)), mm(y, z, w)]), mm(x, y, w)])?;
        Ok(o.eq(&l, &rr))
    })?;
    o.law(r, "monoid.unit_left", 2, |t| {
        let (x, y) = (t[0], t[1]);
        Ok(o.eq(&o.c(&[&o.t(&[&u[x], &o.id(h(x, y))]), mm(x, x, y)])?, &o.id(h(x, y))))
    })?;
    o.law(r, "monoid.unit_right", 2, |t| {
        let (x, y) = (t[0], t[1]);
        Ok(o.eq(&o.c(&[&o.t(&[&o.id(h(x, y)), &u[y]]), mm(x, y, y)])?, &o.id(h(x, y))))
    })
}

pub(crate) fn hopf_shape<B: VBackend>(o: &Ops<'_, B>, h: &HopfVCat<B>) -> Result<(), HopfCatError> {
    category_shape(o, &h.homs, &h.m, &h.u)?;
    o.expect_len("delta", &h.delta, 2)?;
    o.expect_len("eps", &h.eps, 2)?;
    for (k, hom) in h.homs.iter().enumerate() {
        let at = o.x.dec(2, k);
        o.expect("delta", &at, &h.delta[k], hom, &o.tensor(hom, hom))?;
        o.expect("eps", &at, &h.eps[k], hom, &o.unit())?;
    }
    if let Some(s) = &h.s {
        o.expect_len("s", s, 2)?;
        for (k, hom) in h.homs.iter().enumerate() {
            let at = o.x.dec(2, k);
            o.expect("s", &at, &s[k], hom, &h.homs[o.i(&[at[1], at[0]])])?;
        }
    }
    Ok(())
}

/// V-category laws, comonoid laws of every hom (`comonoid.*` on `(x,y)`),
/// and the compatibilities `hax1` (`m` preserves δ, on `(x,y,z)`), `hax2`
/// (`u` preserves δ, on `x`), `hax3` (`m` preserves ε, on `(x,y,z)`) and
/// `hax4` (`u` preserves ε, on `x`).
pub fn check_semi_hopf_vcat<B: VBackend>(v: &B, h: &HopfVCat<B>) -> Result<CheckReport, HopfCatError> {
    let o = Ops::new(v, &h.objects)?;
    hopf_shape(&o, h)?;
    let mut r = CheckReport::new();
    category_laws(&o, &mut r, &h.homs, &h.m, &h.u)?;
    let hom = |x: usize, y: usize| &h.homs[o.i(&[x, y])];
    let d = |x: usize, y: usize| &h.delta[o.i(&[x, y])];
    let e = |x: usize, y: usize| &h.eps[o.i(&[x, y])];
    let m = |x: usize, y: usize, z: usize| &h.m[o.i(&[x, y, z])];
    o.law(&mut r, "comonoid.coassoc", 2, |t| {
        let (x, y, i) = (t[0], t[1], &o.id(hom(t[0], t[1])));
        Ok(o.eq(&o.c(&[d(x, y), &o.t(&[d(x, y), i])])?, &o.c(&[d(x, y), &o.t(&[i, d(x, y)])])?))
    })?;
    o.law(&mut r, "comonoid.counit_left", 2, |t| {
        let (x, y, i) = (t[0], t[1], &o.id(hom(t[0], t[1])));
        Ok(o.eq(&o.c(&[d(x, y), &o.t(&[e(x, y), i])])?, i))
    })?;
    o.law(&mut r, "comonoid.counit_right", 2, |t| {
        let (x, y, i) = (t[0], t[1], &o.id(hom(t[0], t[1])));
        Ok(o.eq(&o.c(&[d(x, y), &o.t(&[i, e(x, y)])])?, i))
    })?;
    o.law(&mut r, "hax1", 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (a, b) = (hom(x, y), hom(y, z));
        let swap = o.t(&[&o.id(a), &v.braiding(a, b), &o.id(b)]);
        let l = o.c(&[&o.t(&[d(x, y), d(y, z)]), &swap, &o.t(&[m(x, y, z), m(x, y, z)])])?;
        Ok(o.eq(&l, &o.c(&[m(x, y, z), d(x, z)])?))
    })?;
    o.law(&mut r, "hax2", 1, |t| {
        let x = t[0];
        Ok(o.eq(&o.c(&[&h.u[x], d(x, x)])?, &o.t(&[&h.u[x], &h.u[x]])))
    })?;
    o.law(&mut r, "hax3", 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        Ok(o.eq(&o.c(&[m(x, y, z), e(x, z)])?, &o.t(&[e(x, y), e(y, z)])))
    })?;
    o.law(&mut r, "hax4", 1, |t| {
        let x = t[0];
        Ok(o.eq(&o.c(&[&h.u[x], e(x, x)])?, &o.id(&o.unit())))
    })?;
    Ok(r)
}

/// [`check_semi_hopf_vcat`] followed by `antipode_left`:
/// `δ;(1⊗s);m_{xyx} = ε;u_x` and `antipode_right`:
/// `δ;(s⊗1);m_{yxy} = ε;u_y`, both on `(x,y)`.
pub fn check_hopf_vcat<B: VBackend>(v: &B, h: &HopfVCat<B>) -> Result<CheckReport, HopfCatError> {
    let mut r = check_semi_hopf_vcat(v, h)?;
    let s = h.s.as_ref().ok_or_else(|| HopfCatError::ShapeMismatch("no antipode".into()))?;
    let o = Ops::new(v, &h.objects)?;
    let at = |x: usize, y: usize| o.i(&[x, y]);
    let m = |x: usize, y: usize, z: usize| &h.m[o.i(&[x, y, z])];
    o.law(&mut r, "antipode_left", 2, |t| {
        let (x, y) = (t[0], t[1]);
        let i = o.id(&h.homs[at(x, y)]);
        let l = o.c(&[&h.delta[at(x, y)], &o.t(&[&i, &s[at(x, y)]]), m(x, y, x)])?;
        Ok(o.eq(&l, &o.c(&[&h.eps[at(x, y)], &h.u[x]])?))
    })?;
    o.law(&mut r, "antipode_right", 2, |t| {
        let (x, y) = (t[0], t[1]);
        let i = o.id(&h.homs[at(x, y)]);
        let l = o.c(&[&h.delta[at(x, y)], &o.t(&[&s[at(x, y)], &i]), m(y, x, y)])?;
        Ok(o.eq(&l, &o.c(&[&h.eps[at(x, y)], &h.u[y]])?))
    })?;
    Ok(r)
}

/// `H^op_{x,y} = H_{y,x}`, composition through the braiding.
pub fn opposite_vcat<B: VBackend>(v: &B, h: &HopfVCat<B>) -> Result<HopfVCat<B>, HopfCatError> {
    let o = Ops::new(v, &h.objects)?;
    hopf_shape(&o, h)?;
    let n = o.n();
    let flip = |k: usize| {
        let t = o.x.dec(2, k);
        o.i(&[t[1], t[0]])
    };
    let pairs = 0..n * n;
    let mut m = Vec::with_capacity(n * n * n);
    for k in 0..n * n * n {
        let t = o.x.dec(3, k);
        let (x, y, z) = (t[0], t[1], t[2]);
        let sw = v.braiding(&h.homs[o.i(&[y, x])], &h.homs[o.i(&[z, y])]);
        m.push(o.c(&[&sw, &h.m[o.i(&[z, y, x])]])?);
    }
    Ok(HopfVCat {
        objects: h.objects.clone(),
        homs: pairs.clone().map(|k| h.homs[flip(k)].clone()).collect(),
        m,
        u: h.u.clone(),
        delta: pairs.clone().map(|k| h.delta[flip(k)].clone()).collect(),
        eps: pairs.clone().map(|k| h.eps[flip(k)].clone()).collect(),
        s: h.s.as_ref().map(|s| pairs.map(|k| s[flip(k)].clone()).collect()),
    })
}

pub(crate) fn frob_shape<B: VBackend>(o: &Ops<'_, B>, c: &FrobVCat<B>) -> Result<(), HopfCatError> {
    category_shape(o, &c.homs, &c.m, &c.u)?;
    opcategory_shape(o, &c.homs, &c.comlt, &c.couni)
}

pub(crate) fn opcategory_shape<B: VBackend>(
    o: &Ops<'_, B>,
    homs: &[B::Obj],
    comlt: &[B::Mor],
    couni: &[B::Mor],
) -> Result<(), HopfCatError> {
    o.expect_len("comlt", comlt, 3)?;
    o.expect_len("couni", couni, 1)?;
    let h = |x: usize, y: usize| &homs[o.i(&[x, y])];
    let n = o.n();
    for x in 0..n {
        o.expect("couni", &[x], &couni[x], h(x, x), &o.unit())?;
        for y in 0..n {
            for z in 0..n {
                o.expect("comlt", &[x, y, z], &comlt[o.i(&[x, y, z])], h(x, z), &o.tensor(h(x, y), h(y, z)))?;
            }
        }
    }
    Ok(())
}

/// `comonoid.coassoc` on `(x,y,z,w)`: `Δ_{xzw};(Δ_{xyz}⊗1) = Δ_{xyw};(1⊗Δ_{yzw})`,
/// `comonoid.counit_left` and `comonoid.counit_right` on `(x,y)`.
pub(crate) fn opcategory_laws<B: VBackend>(
    o: &Ops<'_, B>,
    r: &mut CheckReport,
    homs: &[B::Obj],
    comlt: &[B::Mor],
    couni: &[B::Mor],
) -> Result<(), HopfCatError> {
    let h = |x: usize, y: usize| &homs[o.i(&[x, y])];
    let d = |x: usize, y: usize, z: usize| &comlt[o.i(&[x, y, z])];
    o.law(r, "comonoid.coassoc", 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let l = o.c(&[d(x, z, w), &o.t(&[d(x, y, z), &o.id(h(z, w))])])?;
        let rr = o.c(&[d(x, y, w), &o.t(&[&o.id(h(x, y)), d(y, z, w)])])?;
        Ok(o.eq(&l, &rr))
    })?;
    o.law(r, "comonoid.counit_left", 2, |t| {
        let (x, y) = (t[0], t[1]);
        Ok(o.eq(&o.c(&[d(x, x, y), &o.t(&[&couni[x], &o.id(h(x, y))])])?, &o.id(h(x, y))))
    })?;
    o.law(r, "comonoid.counit_right", 2, |t| {
        let (x, y) = (t[0], t[1]);
        Ok(o.eq(&o.c(&[d(x, y, y), &o.t(&[&o.id(h(x, y)), &couni[y]])])?, &o.id(h(x, y))))
    })
}

/// Category and opcategory laws, then on `(x,y,z,w)`:
/// `frob_left`: `(Δ_{xwy}⊗1);(1⊗m_{wyz}) = m_{xyz};Δ_{xwz}` and
/// `frob_right`: `(1⊗Δ_{ywz});(m_{xyw}⊗1) = m_{xyz};Δ_{xwz}`.
pub fn check_frobenius_vcat<B: VBackend>(v: &B, c: &FrobVCat<B>) -> Result<CheckReport, HopfCatError> {
    let o = Ops::new(v, &c.objects)?;
    frob_shape(&o, c)?;
    let mut r = CheckReport::new();
    category_laws(&o, &mut r, &c.homs, &c.m, &c.u)?;
    opcategory_laws(&o, &mut r, &c.homs, &c.comlt, &c.couni)?;
    let h = |x: usize, y: usize| &c.homs[o.i(&[x, y])];
    let m = |x: usize, y: usize, z: usize| &c.m[o.i(&[x, y, z])];
    let d = |x: usize, y: usize, z: usize| &c.comlt[o.i(&[x, y, z])];
    o.law(&mut r, "frob_left", 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let l = o.c(&[&o.t(&[d(x, w, y), &o.id(h(y, z))]), &o.t(&[&o.id(h(x, w)), m(w, y, z)])])?;
        Ok(o.eq(&l, &o.c(&[m(x, y, z), d(x, w, z)])?))
    })?;
    o.law(&mut r, "frob_right", 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let l = o.c(&[&o.t(&[&o.id(h(x, y)), d(y, w, z)]), &o.t(&[m(x, y, w), &o.id(h(w, z))])])?;
        Ok(o.eq(&l, &o.c(&[m(x, y, z), d(x, w, z)])?))
    })?;
    Ok(r)
}

/// Object map and component shapes of `F: A → B`.
fn functor_shape<B: VBackend>(
    oa: &Ops<'_, B>,
    ob: &Ops<'_, B>,
    a: &[B::Obj],
    b: &[B::Obj],
    f: &VFunctorData<B>,
) -> Result<(), HopfCatError> {
    if f.f.dom().size() != oa.n() || f.f.cod().size() != ob.n() {
        return Err(HopfCatError::ShapeMismatch(format!(
            "object map {} -> {} between {} and {} objects",
            f.f.dom(),
            f.f.cod(),
            oa.n(),
            ob.n()
        )));
    }
    oa.expect_len("components", &f.components, 2)?;
    for (k, c) in f.components.iter().enumerate() {
        let t = oa.x.dec(2, k);
        oa.expect("F", &t, c, &a[k], &b[ob.i(&[f.f.apply(t[0]), f.f.apply(t[1])])])?;
    }
    Ok(())
}

/// `functor.mult` on `(x,y,z)` and `functor.unit` on `x`.
fn functor_monoid_laws<B: VBackend>(
    oa: &Ops<'_, B>,
    ob: &Ops<'_, B>,
    r: &mut CheckReport,
    (am, au): (&[B::Mor], &[B::Mor]),
    (bm, bu): (&[B::Mor], &[B::Mor]),
    f: &VFunctorData<B>,
) -> Result<(), HopfCatError> {
    let fx = |x: usize| f.f.apply(x);
    let fc = |x: usize, y: usize| &f.components[oa.i(&[x, y])];
    oa.law(r, "functor.mult", 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let l = oa.c(&[&am[oa.i(&[x, y, z])], fc(x, z)])?;
        let rr = oa.c(&[&oa.t(&[fc(x, y), fc(y, z)]), &bm[ob.i(&[fx(x), fx(y), fx(z)])]])?;
        Ok(oa.eq(&l, &rr))
    })?;
    oa.law(r, "functor.unit", 1, |t| {
        let x = t[0];
        Ok(oa.eq(&oa.c(&[&au[x], fc(x, x)])?, &bu[fx(x)]))
    })
}

/// `functor.mult`, `functor.unit`, then `functor.comult`:
/// `δ;(F⊗F) = F;δ` and `functor.counit`: `F;ε = ε`, both on `(x,y)`.
pub fn check_vfunctor<B: VBackend>(
    v: &B,
    a: &HopfVCat<B>,
    b: &HopfVCat<B>,
    f: &VFunctorData<B>,
) -> Result<CheckReport, HopfCatError> {
    let (oa, ob) = (Ops::new(v, &a.objects)?, Ops::new(v, &b.objects)?);
    hopf_shape(&oa, a)?;
    hopf_shape(&ob, b)?;
    functor_shape(&oa, &ob, &a.homs, &b.homs, f)?;
    let mut r = CheckReport::new();
    functor_monoid_laws(&oa, &ob, &mut r, (&a.m, &a.u), (&b.m, &b.u), f)?;
    let img = |t: &[usize]| ob.i(&[f.f.apply(t[0]), f.f.apply(t[1])]);
    oa.law(&mut r, "functor.comult", 2, |t| {
        let (k, c) = (oa.i(t), &f.components[oa.i(t)]);
        Ok(oa.eq(&oa.c(&[&a.delta[k], &oa.t(&[c, c])])?, &oa.c(&[c, &b.delta[img(t)]])?))
    })?;
    oa.law(&mut r, "functor.counit", 2, |t| {
        let k = oa.i(t);
        Ok(oa.eq(&oa.c(&[&f.components[k], &b.eps[img(t)]])?, &a.eps[k]))
    })?;
    Ok(r)
}

/// `antipode_natural` on `(x,y)`: `s_{xy};F_{yx} = F_{xy};s_{fx,fy}`.
pub fn check_commutes_with_antipode<B: VBackend>(
    v: &B,
    a: &HopfVCat<B>,
    b: &HopfVCat<B>,
    f: &VFunctorData<B>,
) -> Result<CheckReport, HopfCatError> {
    let (oa, ob) = (Ops::new(v, &a.objects)?, Ops::new(v, &b.objects)?);
    hopf_shape(&oa, a)?;
    hopf_shape(&ob, b)?;
    functor_shape(&oa, &ob, &a.homs, &b.homs, f)?;
    let (Some(sa), Some(sb)) = (&a.s, &b.s) else {
        return Err(HopfCatError::ShapeMismatch("both categories need an antipode".into()));
    };
    let mut r = CheckReport::new();
    oa.law(&mut r, "antipode_natural", 2, |t| {
        let (x, y) = (t[0], t[1]);
        let l = oa.c(&[&sa[oa.i(&[x, y])], &f.components[oa.i(&[y, x])]])?;
        let rr = oa.c(&[&f.components[oa.i(&[x, y])], &sb[ob.i(&[f.f.apply(x), f.f.apply(y)])]])?;
        Ok(oa.eq(&l, &rr))
    })?;
    Ok(r)
}

/// `functor.mult`, `functor.unit`, then `functor.comult`:
/// `Δ_{xyz};(F_{xy}⊗F_{yz}) = F_{xz};Δ_{fx,fy,fz}` on `(x,y,z)` and
/// `functor.counit`: `F_{xx};ε_{fx} = ε_x` on `x`.
pub fn check_frobenius_vfunctor<B: VBackend>(
    v: &B,
    a: &FrobVCat<B>,
    b: &FrobVCat<B>,
    f: &VFunctorData<B>,
) -> Result<CheckReport, HopfCatError> {
    let (oa, ob) = (Ops::new(v, &a.objects)?, Ops::new(v, &b.objects)?);
    frob_shape(&oa, a)?;
    frob_shape(&ob, b)?;
    functor_shape(&oa, &ob, &a.homs, &b.homs, f)?;
    let mut r = CheckReport::new();
    functor_monoid_laws(&oa, &ob, &mut r, (&a.m, &a.u), (&b.m, &b.u), f)?;
    let fx = |x: usize| f.f.apply(x);
    let fc = |x: usize, y: usize| &f.components[oa.i(&[x, y])];
    oa.law(&mut r, "functor.comult", 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let l = oa.c(&[&a.comlt[oa.i(&[x, y, z])], &oa.t(&[fc(x, y), fc(y, z)])])?;
        Ok(oa.eq(&l, &oa.c(&[fc(x, z), &b.comlt[ob.i(&[fx(x), fx(y), fx(z)])]])?))
    })?;
    oa.law(&mut r, "functor.counit", 1, |t| {
        let x = t[0];
        Ok(oa.eq(&oa.c(&[fc(x, x), &b.couni[fx(x)]])?, &a.couni[x]))
    })?;
    Ok(r)
}

/// Matrices over `F_p` on objects `1..=max_n`: `H_{n,m}` has the
/// elementary matrices `e_{ij}` as basis (index `i·m + j`), composition is
/// matrix product, `Δ_{n,p,m}(e_{ij}) = Σ_t e_{it}⊗e_{tj}` and
/// `ε_n(e_{ij}) = δ_{ij}`.
pub fn mat_frobenius_example(p: u32, max_n: usize) -> FrobVCat<MatBackend> {
    assert!(max_n >= 1, "at least one object");
    let v = MatBackend::fp(p);
    let x = X2::new(max_n);
    let dim = |a: usize, b: usize| (a + 1) * (b + 1);
    let mut homs = Vec::new();
    for k in 0..max_n * max_n {
        let t = x.dec(2, k);
        homs.push(dim(t[0], t[1]));
    }
    let (mut m, mut comlt) = (Vec::new(), Vec::new());
    for k in 0..max_n.pow(3) {
        let t = x.dec(3, k);
        let (a, b, c) = (t[0] + 1, t[1] + 1, t[2] + 1);
        // e_{it} ⊗ e_{t'j} at row (i·b + t)·(b·c) + t'·c + j.
        m.push(v.from_fn(a * b * b * c, a * c, |row, col| {
            let (l, r) = (row / (b * c), row % (b * c));
            let (i, t1, t2, j) = (l / b, l % b, r / c, r % c);
            i64::from(t1 == t2 && col == i * c + j)
        }));
        comlt.push(v.from_fn(a * c, a * b * b * c, |row, col| {
            let (i, j) = (row / c, row % c);
            let (l, r) = (col / (b * c), col % (b * c));
            let (i2, t1, t2, j2) = (l / b, l % b, r / c, r % c);
            i64::from(i == i2 && j == j2 && t1 == t2)
        }));
    }
    let u = (1..=max_n).map(|a| v.from_fn(1, a * a, |_, col| i64::from(col / a == col % a))).collect();
    let couni = (1..=max_n).map(|a| v.from_fn(a * a, 1, |row, _| i64::from(row / a == row % a))).collect();
    FrobVCat { objects: x.pow(1), homs, m, u, comlt, couni }
}
