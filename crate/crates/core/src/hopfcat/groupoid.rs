//! Finite groupoids, the structures they induce on their morphism set in
//! Span, and their set-like and linear Hopf categories.

use crate::finset::{product, FinFn, FinSet, SubsetApex};
use crate::span::Span;
use crate::structures::{AntipodeData, ComonoidData, FrobeniusData, MonoidData, OplaxBimonoidData};
use crate::vbackend::{FinSetBackend, MatBackend, TrivialBackend, VBackend};

use super::vcat::{FrobVCat, HopfVCat};
use super::x2::X2;
use super::{plain, plain_2cell, plain_cell, HopfCatError};

type T = TrivialBackend;

/// A finite groupoid. Morphisms are indices into `morphisms`, composition
/// is diagrammatic: `comp(f, g)` is `f` then `g`, defined when
/// `tgt f = src g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidData {
    pub objects: FinSet,
    pub morphisms: FinSet,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// Composable pairs `(f, g)`, sorted, as a subset of `G₁×G₁`.
    pub pairs: SubsetApex,
    /// Composite of each composable pair, in the order of `pairs`.
    pub comp: Vec<usize>,
    pub e: Vec<usize>,
    pub inv: Vec<usize>,
    dense: Vec<Option<usize>>,
}

impl GroupoidData {
    /// Tabulates `comp` on composable pairs and validates the groupoid laws.
    pub fn new(
        objects: FinSet,
        morphisms: FinSet,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
        e: Vec<usize>,
        inv: Vec<usize>,
    ) -> Result<Self, HopfCatError> {
        let (n0, n1) = (objects.size(), morphisms.size());
        if src.len() != n1 || tgt.len() != n1 || e.len() != n0 || inv.len() != n1 {
            return Err(HopfCatError::NotAGroupoid("table lengths do not match the sets".into()));
        }
        if src.iter().chain(&tgt).any(|&x| x >= n0) || e.iter().chain(&inv).any(|&f| f >= n1) {
            return Err(HopfCatError::NotAGroupoid("table entry out of range".into()));
        }
        let ambient = product(&[morphisms.clone(), morphisms.clone()]);
        let mut rows = Vec::new();
        let mut table = Vec::new();
        let mut dense = vec![None; n1 * n1];
        for f in 0..n1 {
            for g in (0..n1).filter(|&g| tgt[f] == src[g]) {
                let h = comp(f, g);
                if h >= n1 {
                    return Err(HopfCatError::NotAGroupoid(format!("composite of ({f}, {g}) out of range")));
                }
                rows.push(ambient.decode(f * n1 + g));
                table.push(h);
                dense[f * n1 + g] = Some(h);
            }
        }
        let pairs = if rows.len() == ambient.size() {
            SubsetApex::full(ambient)
        } else {
            SubsetApex::from_rows(ambient, &rows)
        };
        let g = GroupoidData { objects, morphisms, src, tgt, pairs, comp: table, e, inv, dense };
        g.validate()?;
        Ok(g)
    }

    pub fn n_objects(&self) -> usize {
        self.objects.size()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.size()
    }

    /// `f` then `g`, if composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.dense[f * self.n_morphisms() + g]
    }

    pub fn validate(&self) -> Result<(), HopfCatError> {
        let bad = |m: String| Err(HopfCatError::NotAGroupoid(m));
        let n1 = self.n_morphisms();
        for f in 0..n1 {
            for g in 0..n1 {
                let Some(h) = self.compose(f, g) else { continue };
                if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                    return bad(format!("composite of ({f}, {g}) has the wrong endpoints"));
                }
                for k in 0..n1 {
                    let l = self.compose(h, k);
                    let r = self.compose(g, k).and_then(|gk| self.compose(f, gk));
                    if l != r {
                        return bad(format!("composition is not associative at ({f}, {g}, {k})"));
                    }
                }
            }
        }
        for (x, &ex) in self.e.iter().enumerate() {
            if self.src[ex] != x || self.tgt[ex] != x {
                return bad(format!("identity of {x} is not a loop at {x}"));
            }
        }
        for f in 0..n1 {
            if self.compose(self.e[self.src[f]], f) != Some(f) || self.compose(f, self.e[self.tgt[f]]) != Some(f) {
                return bad(format!("identities do not act trivially on {f}"));
            }
            let i = self.inv[f];
            if self.compose(f, i) != Some(self.e[self.src[f]]) || self.compose(i, f) != Some(self.e[self.tgt[f]]) {
                return bad(format!("{i} is not inverse to {f}"));
            }
        }
        Ok(())
    }

    /// One arrow `a → b` for every pair, indexed `a·n + b` in `X²`.
    pub fn codiscrete(n: usize) -> Self {
        let x = X2::new(n);
        let n1 = n * n;
        let (src, tgt) = ((0..n1).map(|f| f / n).collect(), (0..n1).map(|f| f % n).collect());
        let e = (0..n).map(|a| a * n + a).collect();
        let inv = (0..n1).map(|f| (f % n) * n + f / n).collect();
        Self::new(x.pow(1), x.pow(2), src, tgt, |f, g| (f / n) * n + g % n, e, inv).expect("codiscrete groupoid")
    }

    /// One-object groupoid from a multiplication table.
    pub fn group(table: &[Vec<usize>]) -> Result<Self, HopfCatError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(HopfCatError::NotAGroupoid("the table is not square".into()));
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| HopfCatError::NotAGroupoid("no identity element".into()))?;
        let mut inv = Vec::with_capacity(n);
        for (g, row) in table.iter().enumerate() {
            match (0..n).find(|&h| row[h] == unit) {
                Some(h) => inv.push(h),
                None => return Err(HopfCatError::NotAGroupoid(format!("{g} has no inverse"))),
            }
        }
        if table.iter().flatten().any(|&h| h >= n) {
            return Err(HopfCatError::NotAGroupoid("table entry out of range".into()));
        }
        Self::new(FinSet::unit(), FinSet::atom(n), vec![0; n], vec![0; n], |f, g| table[f][g], vec![unit], inv)
    }

    pub fn cyclic(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::group(&table).expect("cyclic group")
    }

    /// Symmetries of a `k`-gon, `r^i s^j` at index `i + k·j`.
    pub fn dihedral(k: usize) -> Self {
        let n = 2 * k;
        let mul = |a: usize, b: usize| {
            let ((i1, j1), (i2, j2)) = ((a % k, a / k), (b % k, b / k));
            let i = if j1 == 0 { (i1 + i2) % k } else { (i1 + k - i2) % k };
            i + k * ((j1 + j2) % 2)
        };
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::group(&table).expect("dihedral group")
    }

    /// Disjoint union: objects and morphisms of `b` come after those of `a`.
    pub fn sum(a: &Self, b: &Self) -> Self {
        let (o, m) = (a.n_objects(), a.n_morphisms());
        let n1 = m + b.n_morphisms();
        let cat = |x: &[usize], y: &[usize], shift: usize| {
            x.iter().copied().chain(y.iter().map(|&v| v + shift)).collect::<Vec<_>>()
        };
        let comp = |f: usize, g: usize| match (f < m, g < m) {
            (true, true) => a.compose(f, g).expect("composable"),
            _ => b.compose(f - m, g - m).expect("composable") + m,
        };
        Self::new(
            FinSet::atom(o + b.n_objects()),
            FinSet::atom(n1),
            cat(&a.src, &b.src, o),
            cat(&a.tgt, &b.tgt, o),
            comp,
            cat(&a.e, &b.e, m),
            cat(&a.inv, &b.inv, m),
        )
        .expect("a sum of groupoids is a groupoid")
    }

    fn pair(&self, k: usize) -> (usize, usize) {
        let n1 = self.n_morphisms();
        let ambient = self.pairs.ambient();
        let flat = ambient.encode(&self.pairs.row(k));
        (flat / n1, flat % n1)
    }

    fn fun(&self, dom: FinSet, cod: FinSet, f: impl Fn(usize) -> usize) -> FinFn {
        FinFn::from_fn(dom, cod, f)
    }

    fn g2(&self) -> FinSet {
        product(&[self.morphisms.clone(), self.morphisms.clone()])
    }

    /// Span over the composable pairs.
    fn pair_span(
        &self,
        left: FinSet,
        right: FinSet,
        f: impl Fn(usize, usize) -> usize,
        g: impl Fn(usize, usize) -> usize,
    ) -> Span {
        let c = self.pairs.carrier();
        let (fl, fr) = (
            self.fun(c.clone(), left, |k| {
                let (a, b) = self.pair(k);
                f(a, b)
            }),
            self.fun(c, right, |k| {
                let (a, b) = self.pair(k);
                g(a, b)
            }),
        );
        Span::new(self.pairs.clone(), fl, fr).expect("legs on the pairs")
    }

    /// Composition `G₁×G₁ ← pairs → G₁` and identities `1 ← G₀ → G₁`.
    pub fn monoid(&self) -> MonoidData<T> {
        let n1 = self.n_morphisms();
        let mu =
            self.pair_span(self.g2(), self.morphisms.clone(), |a, b| a * n1 + b, |a, b| self.compose(a, b).unwrap());
        let eta = Span::from_legs(
            FinFn::terminal(&self.objects),
            self.fun(self.objects.clone(), self.morphisms.clone(), |x| self.e[x]),
        )
        .expect("legs share the apex");
        MonoidData { carrier: plain().constant_fam(&self.morphisms, ()), mlt: plain_cell(mu), uni: plain_cell(eta) }
    }

    /// The monoid with its spans reversed.
    pub fn comonoid(&self) -> ComonoidData<T> {
        let m = self.monoid();
        ComonoidData {
            carrier: m.carrier,
            lcm: plain_cell(m.mlt.span.reverse()),
            lcu: plain_cell(m.uni.span.reverse()),
        }
    }

    /// `(id, Δ)` and `(id, !)` on `G₁`.
    pub fn trivial_comonoid(&self) -> ComonoidData<T> {
        let g1 = &self.morphisms;
        let id = FinFn::identity(g1);
        ComonoidData {
            carrier: plain().constant_fam(g1, ()),
            lcm: plain_cell(Span::from_legs(id.clone(), FinFn::diagonal(g1)).expect("legs share the apex")),
            lcu: plain_cell(Span::from_legs(id, FinFn::terminal(g1)).expect("legs share the apex")),
        }
    }

    /// Groupoid monoid, trivial comonoid, and the comparison cells: θ the
    /// identity on composable pairs, θ₀ the diagonal of `G₀`, χ the
    /// inclusion of composable pairs, χ₀ the terminal map.
    pub fn bimonoid(&self) -> OplaxBimonoidData<T> {
        let (g0, n1) = (&self.objects, self.n_morphisms());
        let h = |a, b| self.compose(a, b).unwrap();
        let theta = self.pair_span(self.g2(), self.g2(), |a, b| a * n1 + b, |a, b| h(a, b) * n1 + h(a, b));
        let theta = plain_2cell(theta.clone(), theta, |k| k);
        let ee = |x: usize, y: usize| self.e[x] * n1 + self.e[y];
        let t0_src = Span::from_legs(FinFn::terminal(g0), self.fun(g0.clone(), self.g2(), |x| ee(x, x)))
            .expect("legs share the apex");
        let g0sq = product(&[g0.clone(), g0.clone()]);
        let n0 = self.n_objects();
        let t0_tgt = Span::from_legs(FinFn::terminal(&g0sq), self.fun(g0sq.clone(), self.g2(), |k| ee(k / n0, k % n0)))
            .expect("legs share the apex");
        let theta0 = plain_2cell(t0_src, t0_tgt, |x| x * n0 + x);
        let chi_src = self.pair_span(self.g2(), FinSet::unit(), |a, b| a * n1 + b, |_, _| 0);
        let chi_tgt = Span::from_legs(FinFn::identity(&self.g2()), FinFn::terminal(&self.g2())).expect("legs");
        let chi = plain_2cell(chi_src, chi_tgt, |k| {
            let (a, b) = self.pair(k);
            a * n1 + b
        });
        let c0_src = Span::from_legs(FinFn::terminal(g0), FinFn::terminal(g0)).expect("legs");
        let c0_tgt = Span::from_legs(FinFn::identity(&FinSet::unit()), FinFn::identity(&FinSet::unit())).expect("legs");
        let chi0 = plain_2cell(c0_src, c0_tgt, |_| 0);
        OplaxBimonoidData { monoid: self.monoid(), comonoid: self.trivial_comonoid(), theta, theta0, chi, chi0 }
    }

    /// `s = (id, inv)` with τ₁: f ↦ (f, src f) and τ₂: f ↦ (f, tgt f) into
    /// the convolution unit `G₁ ← G₁×G₀ → G₁`, legs `π₁` and `e∘π₂`.
    pub fn antipode(&self) -> AntipodeData<T> {
        let (g1, g0, n0) = (&self.morphisms, &self.objects, self.n_objects());
        let s = Span::from_legs(FinFn::identity(g1), self.fun(g1.clone(), g1.clone(), |f| self.inv[f])).expect("legs");
        let g10 = product(&[g1.clone(), g0.clone()]);
        let unit = Span::from_legs(
            self.fun(g10.clone(), g1.clone(), |k| k / n0),
            self.fun(g10, g1.clone(), |k| self.e[k % n0]),
        )
        .expect("legs");
        let side = |end: &[usize]| {
            Span::from_legs(FinFn::identity(g1), self.fun(g1.clone(), g1.clone(), |f| self.e[end[f]])).expect("legs")
        };
        AntipodeData {
            s: plain_cell(s),
            tau1: plain_2cell(side(&self.src), unit.clone(), |f| f * n0 + self.src[f]),
            tau2: plain_2cell(side(&self.tgt), unit, |f| f * n0 + self.tgt[f]),
        }
    }

    pub fn frobenius(&self) -> FrobeniusData<T> {
        FrobeniusData { monoid: self.monoid(), comonoid: self.comonoid() }
    }

    /// Morphisms `x → y`, ascending, for every `(x, y)` row-major.
    pub fn hom_lists(&self) -> Vec<Vec<usize>> {
        let n0 = self.n_objects();
        let mut homs = vec![Vec::new(); n0 * n0];
        for f in 0..self.n_morphisms() {
            homs[self.src[f] * n0 + self.tgt[f]].push(f);
        }
        homs
    }

    /// Position of every morphism inside its hom list.
    fn hom_position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n_morphisms()];
        for list in self.hom_lists() {
            for (i, &f) in list.iter().enumerate() {
                pos[f] = i;
            }
        }
        pos
    }

    /// Shared tabulation: for each `(x,y,z)` the composition as a map of
    /// basis indices `H_{x,y}×H_{y,z} → H_{x,z}`.
    fn tables(&self) -> (usize, Vec<Vec<usize>>, Vec<usize>) {
        (self.n_objects(), self.hom_lists(), self.hom_position())
    }

    /// Homs as sets, composition, δ = diagonal, ε = terminal, s = inverse.
    pub fn set_hopf_vcat(&self) -> HopfVCat<FinSetBackend> {
        let (n0, homs, pos) = self.tables();
        let v = FinSetBackend;
        let obj: Vec<FinSet> = homs.iter().map(|h| FinSet::atom(h.len())).collect();
        let mut m = Vec::new();
        for k in 0..n0 * n0 * n0 {
            let (x, y, z) = (k / (n0 * n0), (k / n0) % n0, k % n0);
            let (a, b) = (&homs[x * n0 + y], &homs[y * n0 + z]);
            let dom = v.tensor_obj(&obj[x * n0 + y], &obj[y * n0 + z]);
            m.push(FinFn::from_fn(dom, obj[x * n0 + z].clone(), |i| {
                pos[self.compose(a[i / b.len()], b[i % b.len()]).unwrap()]
            }));
        }
        let u = (0..n0).map(|x| FinFn::from_fn(FinSet::unit(), obj[x * n0 + x].clone(), |_| pos[self.e[x]])).collect();
        let s = (0..n0 * n0)
            .map(|k| {
                let (x, y) = (k / n0, k % n0);
                FinFn::from_fn(obj[k].clone(), obj[y * n0 + x].clone(), |i| pos[self.inv[homs[k][i]]])
            })
            .collect();
        HopfVCat {
            objects: self.objects.clone(),
            delta: obj.iter().map(FinFn::diagonal).collect(),
            eps: obj.iter().map(FinFn::terminal).collect(),
            homs: obj,
            m,
            u,
            s: Some(s),
        }
    }

    /// Linearization: homs spanned by morphisms, grouplike δ(f) = f⊗f,
    /// ε(f) = 1, s = inverse.
    pub fn linear_hopf_vcat(&self, v: &MatBackend) -> HopfVCat<MatBackend> {
        let (n0, homs, pos) = self.tables();
        let dims: Vec<usize> = homs.iter().map(Vec::len).collect();
        let m = self.linear_composition(v, &homs, &pos);
        let u = (0..n0).map(|x| v.from_fn(1, dims[x * n0 + x], |_, c| i64::from(c == pos[self.e[x]]))).collect();
        let s = (0..n0 * n0)
            .map(|k| {
                let (x, y) = (k / n0, k % n0);
                v.from_fn(dims[k], dims[y * n0 + x], |r, c| i64::from(c == pos[self.inv[homs[k][r]]]))
            })
            .collect();
        HopfVCat {
            objects: self.objects.clone(),
            delta: dims.iter().map(|&d| v.from_fn(d, d * d, |r, c| i64::from(c == r * d + r))).collect(),
            eps: dims.iter().map(|&d| v.from_fn(d, 1, |_, _| 1)).collect(),
            homs: dims,
            m,
            u,
            s: Some(s),
        }
    }

    /// Linearization with the deconcatenation comultiplication
    /// `Δ_{xyz}(h) = Σ_{a;b = h} a⊗b` and `ε_x(f) = [f = e_x]`.
    pub fn linear_frobenius_vcat(&self, v: &MatBackend) -> FrobVCat<MatBackend> {
        let (n0, homs, pos) = self.tables();
        let dims: Vec<usize> = homs.iter().map(Vec::len).collect();
        let m = self.linear_composition(v, &homs, &pos);
        let mut comlt = Vec::new();
        for k in 0..n0 * n0 * n0 {
            let (x, y, z) = (k / (n0 * n0), (k / n0) % n0, k % n0);
            let (a, b) = (&homs[x * n0 + y], &homs[y * n0 + z]);
            comlt.push(v.from_fn(dims[x * n0 + z], a.len() * b.len(), |r, c| {
                i64::from(pos[self.compose(a[c / b.len()], b[c % b.len()]).unwrap()] == r)
            }));
        }
        let u = (0..n0).map(|x| v.from_fn(1, dims[x * n0 + x], |_, c| i64::from(c == pos[self.e[x]]))).collect();
        let couni = (0..n0).map(|x| v.from_fn(dims[x * n0 + x], 1, |r, _| i64::from(r == pos[self.e[x]]))).collect();
        FrobVCat { objects: self.objects.clone(), homs: dims, m, u, comlt, couni }
    }

    fn linear_composition(&self, v: &MatBackend, homs: &[Vec<usize>], pos: &[usize]) -> Vec<crate::vbackend::Mat> {
        let n0 = self.n_objects();
        (0..n0 * n0 * n0)
            .map(|k| {
                let (x, y, z) = (k / (n0 * n0), (k / n0) % n0, k % n0);
                let (a, b) = (&homs[x * n0 + y], &homs[y * n0 + z]);
                v.from_fn(a.len() * b.len(), homs[x * n0 + z].len(), |r, c| {
                    i64::from(pos[self.compose(a[r / b.len()], b[r % b.len()]).unwrap()] == c)
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_groupoids() {
        for g in [GroupoidData::codiscrete(3), GroupoidData::cyclic(4), GroupoidData::dihedral(3)] {
            g.validate().unwrap();
        }
        let s = GroupoidData::sum(&GroupoidData::codiscrete(2), &GroupoidData::cyclic(2));
        assert_eq!((s.n_objects(), s.n_morphisms()), (3, 6));
        assert_eq!(s.compose(5, 5), Some(4));
        assert_eq!(s.compose(0, 4), None);
    }

    #[test]
    fn dihedral_is_not_abelian() {
        let d = GroupoidData::dihedral(3);
        let (r, s) = (1, 3);
        assert_ne!(d.compose(r, s), d.compose(s, r));
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(GroupoidData::group(&[vec![0, 1], vec![1, 1]]).is_err());
        let r = GroupoidData::new(
            FinSet::atom(2),
            FinSet::atom(2),
            vec![0, 1],
            vec![0, 1],
            |f, _| f,
            vec![0, 0],
            vec![0, 1],
        );
        assert!(matches!(r, Err(HopfCatError::NotAGroupoid(_))));
    }

    #[test]
    fn codiscrete_pairs_and_hom_sizes() {
        let g = GroupoidData::codiscrete(2);
        assert_eq!(g.pairs.len(), 8);
        assert!(g.hom_lists().iter().all(|h| h.len() == 1));
        assert_eq!(g.compose(1, 2), Some(0));
    }
}
