use crate::spanv::{SpanV, VCell1, VCell2};
use crate::vbackend::VBackend;

use super::kit::expect_cell;
use super::{ComonoidData, MonoidData, StructError};

/// The hom-category from a comonoid `C` to a monoid `M` with the
/// convolution tensor `f ⊙ g = δ;(f⊗g);m` and unit `ε;j`.
#[derive(Clone, Debug)]
pub struct Convolution<'a, B: VBackend> {
    pub e: &'a SpanV<B>,
    pub comonoid: &'a ComonoidData<B>,
    pub monoid: &'a MonoidData<B>,
}

impl<'a, B: VBackend> Convolution<'a, B> {
    pub fn new(e: &'a SpanV<B>, comonoid: &'a ComonoidData<B>, monoid: &'a MonoidData<B>) -> Self {
        Convolution { e, comonoid, monoid }
    }

    fn expect_hom(&self, name: &str, f: &VCell1<B>) -> Result<(), StructError> {
        expect_cell(name, f, &self.comonoid.carrier, &self.monoid.carrier)
    }

    pub fn tensor(&self, f: &VCell1<B>, g: &VCell1<B>) -> Result<VCell1<B>, StructError> {
        self.expect_hom("left factor", f)?;
        self.expect_hom("right factor", g)?;
        Ok(self.e.compose_all(&[&self.comonoid.lcm, &self.e.tensor(f, g), &self.monoid.mlt])?)
    }

    pub fn tensor_all(&self, fs: &[&VCell1<B>]) -> Result<VCell1<B>, StructError> {
        let (first, rest) = fs.split_first().expect("at least one factor");
        rest.iter().try_fold((*first).clone(), |acc, f| self.tensor(&acc, f))
    }

    pub fn unit(&self) -> Result<VCell1<B>, StructError> {
        Ok(self.e.compose(&self.comonoid.lcu, &self.monoid.uni)?)
    }

    /// `α ⊙ β`: the tensor `α⊗β` whiskered by δ and m.
    pub fn tensor_2cells(&self, a: &VCell2<B>, b: &VCell2<B>) -> Result<VCell2<B>, StructError> {
        self.expect_hom("left factor", &a.src)?;
        self.expect_hom("right factor", &b.src)?;
        let t = self.e.tensor_2cells(a, b);
        Ok(self.e.whisker(Some(&self.comonoid.lcm), &t, Some(&self.monoid.mlt))?)
    }

    pub fn tensor_2cells_all(&self, cells: &[&VCell2<B>]) -> Result<VCell2<B>, StructError> {
        let (first, rest) = cells.split_first().expect("at least one factor");
        rest.iter().try_fold((*first).clone(), |acc, c| self.tensor_2cells(&acc, c))
    }

    pub fn id2(&self, f: &VCell1<B>) -> VCell2<B> {
        self.e.identity_2cell(f)
    }
}

pub fn convolution<B: VBackend>(
    e: &SpanV<B>,
    comonoid: &ComonoidData<B>,
    monoid: &MonoidData<B>,
    f: &VCell1<B>,
    g: &VCell1<B>,
) -> Result<VCell1<B>, StructError> {
    Convolution::new(e, comonoid, monoid).tensor(f, g)
}

pub fn convolution_unit<B: VBackend>(
    e: &SpanV<B>,
    comonoid: &ComonoidData<B>,
    monoid: &MonoidData<B>,
) -> Result<VCell1<B>, StructError> {
    Convolution::new(e, comonoid, monoid).unit()
}

pub fn convolve_2cells<B: VBackend>(
    e: &SpanV<B>,
    comonoid: &ComonoidData<B>,
    monoid: &MonoidData<B>,
    a: &VCell2<B>,
    b: &VCell2<B>,
) -> Result<VCell2<B>, StructError> {
    Convolution::new(e, comonoid, monoid).tensor_2cells(a, b)
}
