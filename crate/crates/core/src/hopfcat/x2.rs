//! Structures on `X²` in Span for the codiscrete groupoid on `X`, written
//! out span by span. Tuples are encoded row-major, `(x, y) ↦ x·|X| + y`.

use crate::finset::{FinFn, FinSet};
use crate::span::Span;
use crate::spanv::{VCell1, VCell2};
use crate::structures::{AntipodeData, ComonoidData, MonoidData, OplaxBimonoidData};
use crate::vbackend::TrivialBackend;

use super::{plain, plain_2cell, plain_cell};

type T = TrivialBackend;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct X2 {
    pub n: usize,
}

impl X2 {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "X must be non-empty");
        X2 { n }
    }

    /// `X^k`.
    pub fn pow(&self, k: usize) -> FinSet {
        FinSet::new(vec![self.n; k])
    }

    pub fn enc(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &c| acc * self.n + c)
    }

    pub fn dec(&self, k: usize, mut i: usize) -> Vec<usize> {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = i % self.n;
            i /= self.n;
        }
        t
    }

    /// Function `X^a → X^b` given on tuples.
    pub fn fun(&self, a: usize, b: usize, f: impl Fn(&[usize]) -> Vec<usize>) -> FinFn {
        FinFn::from_fn(self.pow(a), self.pow(b), |i| self.enc(&f(&self.dec(a, i))))
    }

    /// Span `X^l ← X^a → X^r`.
    pub fn span(
        &self,
        a: usize,
        l: usize,
        r: usize,
        f: impl Fn(&[usize]) -> Vec<usize>,
        g: impl Fn(&[usize]) -> Vec<usize>,
    ) -> Span {
        Span::from_legs(self.fun(a, l, f), self.fun(a, r, g)).expect("legs share the apex")
    }

    /// Map of spans over full apexes `X^a → X^b`, given on tuples.
    pub fn map(&self, src: Span, tgt: Span, a: usize, u: impl Fn(&[usize]) -> Vec<usize>) -> VCell2<T> {
        plain_2cell(src, tgt, |i| self.enc(&u(&self.dec(a, i))))
    }

    pub fn mu(&self) -> Span {
        self.span(3, 4, 2, |t| vec![t[0], t[1], t[1], t[2]], |t| vec![t[0], t[2]])
    }

    pub fn eta(&self) -> Span {
        self.span(1, 0, 2, |_| vec![], |t| vec![t[0], t[0]])
    }

    pub fn zeta(&self) -> Span {
        self.span(2, 2, 4, |t| t.to_vec(), |t| vec![t[0], t[1], t[0], t[1]])
    }

    pub fn nu(&self) -> Span {
        self.span(2, 2, 0, |t| t.to_vec(), |_| vec![])
    }

    /// The antipode `X² ← X² → X²`, legs `(id, sw)`.
    pub fn s(&self) -> Span {
        self.span(2, 2, 2, |t| t.to_vec(), |t| vec![t[1], t[0]])
    }

    pub fn cell(&self, span: Span) -> VCell1<T> {
        plain_cell(span)
    }

    pub fn groupoid_monoid(&self) -> MonoidData<T> {
        MonoidData {
            carrier: plain().constant_fam(&self.pow(2), ()),
            mlt: plain_cell(self.mu()),
            uni: plain_cell(self.eta()),
        }
    }

    pub fn groupoid_comonoid(&self) -> ComonoidData<T> {
        ComonoidData {
            carrier: plain().constant_fam(&self.pow(2), ()),
            lcm: plain_cell(self.mu().reverse()),
            lcu: plain_cell(self.eta().reverse()),
        }
    }

    pub fn trivial_comonoid(&self) -> ComonoidData<T> {
        ComonoidData {
            carrier: plain().constant_fam(&self.pow(2), ()),
            lcm: plain_cell(self.zeta()),
            lcu: plain_cell(self.nu()),
        }
    }

    pub fn trivial_monoid(&self) -> MonoidData<T> {
        MonoidData {
            carrier: plain().constant_fam(&self.pow(2), ()),
            mlt: plain_cell(self.zeta().reverse()),
            uni: plain_cell(self.nu().reverse()),
        }
    }

    /// Trivial monoid `((Δ, id), (!, id))` on `X` itself and its reverse.
    pub fn trivial_on_x(&self) -> (MonoidData<T>, ComonoidData<T>) {
        let m = self.span(1, 2, 1, |t| vec![t[0], t[0]], |t| t.to_vec());
        let j = self.span(1, 0, 1, |_| vec![], |t| t.to_vec());
        let carrier = plain().constant_fam(&self.pow(1), ());
        (
            MonoidData { carrier: carrier.clone(), mlt: plain_cell(m.clone()), uni: plain_cell(j.clone()) },
            ComonoidData { carrier, lcm: plain_cell(m.reverse()), lcu: plain_cell(j.reverse()) },
        )
    }

    /// θ = id on `X³`.
    pub fn theta(&self) -> VCell2<T> {
        let sp = self.span(3, 4, 4, |t| vec![t[0], t[1], t[1], t[2]], |t| vec![t[0], t[2], t[0], t[2]]);
        self.map(sp.clone(), sp, 3, |t| t.to_vec())
    }

    /// θ₀ = Δ: `X → X²`.
    pub fn theta0(&self) -> VCell2<T> {
        let src = self.span(1, 0, 4, |_| vec![], |t| vec![t[0]; 4]);
        let tgt = self.span(2, 0, 4, |_| vec![], |t| vec![t[0], t[0], t[1], t[1]]);
        self.map(src, tgt, 1, |t| vec![t[0], t[0]])
    }

    /// χ = 1×Δ×1: `X³ → X⁴`.
    pub fn chi(&self) -> VCell2<T> {
        let src = self.span(3, 4, 0, |t| vec![t[0], t[1], t[1], t[2]], |_| vec![]);
        let tgt = self.span(4, 4, 0, |t| t.to_vec(), |_| vec![]);
        self.map(src, tgt, 3, |t| vec![t[0], t[1], t[1], t[2]])
    }

    /// χ₀ = !: `X → 1`.
    pub fn chi0(&self) -> VCell2<T> {
        let src = self.span(1, 0, 0, |_| vec![], |_| vec![]);
        let tgt = self.span(0, 0, 0, |_| vec![], |_| vec![]);
        self.map(src, tgt, 1, |_| vec![])
    }

    /// Groupoid monoid, trivial comonoid, and the cells θ, θ₀, χ, χ₀.
    pub fn bimonoid(&self) -> OplaxBimonoidData<T> {
        OplaxBimonoidData {
            monoid: self.groupoid_monoid(),
            comonoid: self.trivial_comonoid(),
            theta: self.theta(),
            theta0: self.theta0(),
            chi: self.chi(),
            chi0: self.chi0(),
        }
    }

    /// `s = (id, sw)` with τ₁: (a,b) ↦ (a,b,a) and τ₂: (a,b) ↦ (a,b,b) into
    /// the convolution unit `X² ← X³ → X²`, legs `π₁₂` and `Δ∘π₃`.
    pub fn antipode(&self) -> AntipodeData<T> {
        let unit = self.span(3, 2, 2, |t| vec![t[0], t[1]], |t| vec![t[2], t[2]]);
        let src1 = self.span(2, 2, 2, |t| t.to_vec(), |t| vec![t[0], t[0]]);
        let src2 = self.span(2, 2, 2, |t| t.to_vec(), |t| vec![t[1], t[1]]);
        AntipodeData {
            s: plain_cell(self.s()),
            tau1: self.map(src1, unit.clone(), 2, |t| vec![t[0], t[1], t[0]]),
            tau2: self.map(src2, unit, 2, |t| vec![t[0], t[1], t[1]]),
        }
    }

    /// Fusion span `(a,b,b,c) ↤ (a,b,c) ↦ (a,c,b,c)`.
    pub fn fusion_template(&self) -> Span {
        self.span(3, 4, 4, |t| vec![t[0], t[1], t[1], t[2]], |t| vec![t[0], t[2], t[1], t[2]])
    }

    /// Middle composite `δ∘m` for the groupoid Frobenius structure:
    /// `(a,b,b,d) ↤ (a,b,c,d) ↦ (a,c,c,d)`.
    pub fn frobenius_middle(&self) -> Span {
        self.span(4, 4, 4, |t| vec![t[0], t[1], t[1], t[3]], |t| vec![t[0], t[2], t[2], t[3]])
    }
}
