//! Finite symmetric monoidal categories with decidable equality of morphisms.
//!
//! Three backends ship: finite sets and functions ([`FinSetBackend`]),
//! matrices over a finite semiring ([`MatBackend`]) and the one-object,
//! one-morphism category ([`TrivialBackend`]). [`OpBackend`] reverses
//! composition and braiding of any of them.

use std::fmt::{self, Debug};
use std::hash::Hash;

use thiserror::Error;

use crate::finset::{compose_fn, FinFn, FinSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("backend {0} has no direct sums")]
    UnsupportedBackend(String),
}

pub trait VBackend: Clone + Debug + PartialEq + Eq {
    type Obj: Clone + Debug + Eq + Ord + Hash;
    type Mor: Clone + Debug + Eq + Hash;

    fn name(&self) -> String;
    fn unit(&self) -> Self::Obj;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    /// `f` then `g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, VError>;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// `σ: a⊗b → b⊗a`.
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f == g
    }

    /// Coproduct object with its injections, when the backend has one.
    fn direct_sum(&self, _objs: &[Self::Obj]) -> Option<(Self::Obj, Vec<Self::Mor>)> {
        None
    }

    fn tensor_objs(&self, objs: &[Self::Obj]) -> Self::Obj {
        objs.iter().fold(self.unit(), |acc, o| self.tensor_obj(&acc, o))
    }
}

/// Fiberwise direct sum of an `S`-indexed family along `g: S → Y`. Returns
/// the `Y`-indexed family and, for every `s`, the injection of `A_s` into
/// the summand at `g(s)`.
pub fn left_kan_along_function<B: VBackend>(
    v: &B,
    g: &FinFn,
    fam: &[B::Obj],
) -> Result<(Vec<B::Obj>, Vec<B::Mor>), VError> {
    if fam.len() != g.dom().size() {
        return Err(VError::ShapeMismatch(format!(
            "family of length {} over a domain of size {}",
            fam.len(),
            g.dom().size()
        )));
    }
    let ny = g.cod().size();
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); ny];
    for (s, &y) in g.table().iter().enumerate() {
        fibers[y].push(s);
    }
    let mut out = Vec::with_capacity(ny);
    let mut inj: Vec<Option<B::Mor>> = vec![None; fam.len()];
    for fiber in &fibers {
        let objs: Vec<B::Obj> = fiber.iter().map(|&s| fam[s].clone()).collect();
        let (sum, injections) = v.direct_sum(&objs).ok_or_else(|| VError::UnsupportedBackend(v.name()))?;
        for (&s, i) in fiber.iter().zip(injections) {
            inj[s] = Some(i);
        }
        out.push(sum);
    }
    Ok((out, inj.into_iter().map(|i| i.expect("every element lies in a fiber")).collect()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrivialBackend;

impl VBackend for TrivialBackend {
    type Obj = ();
    type Mor = ();

    fn name(&self) -> String {
        "trivial".into()
    }
    fn unit(&self) {}
    fn id(&self, _: &()) {}
    fn dom(&self, _: &()) {}
    fn cod(&self, _: &()) {}
    fn compose(&self, _: &(), _: &()) -> Result<(), VError> {
        Ok(())
    }
    fn tensor_obj(&self, _: &(), _: &()) {}
    fn tensor_mor(&self, _: &(), _: &()) {}
    fn braiding(&self, _: &(), _: &()) {}
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FinSetBackend;

impl VBackend for FinSetBackend {
    type Obj = FinSet;
    type Mor = FinFn;

    fn name(&self) -> String {
        "finset".into()
    }
    fn unit(&self) -> FinSet {
        FinSet::unit()
    }
    fn id(&self, a: &FinSet) -> FinFn {
        FinFn::identity(a)
    }
    fn dom(&self, f: &FinFn) -> FinSet {
        f.dom().clone()
    }
    fn cod(&self, f: &FinFn) -> FinSet {
        f.cod().clone()
    }
    fn compose(&self, f: &FinFn, g: &FinFn) -> Result<FinFn, VError> {
        compose_fn(f, g).map_err(|e| VError::ShapeMismatch(e.to_string()))
    }
    fn tensor_obj(&self, a: &FinSet, b: &FinSet) -> FinSet {
        crate::finset::product(&[a.clone(), b.clone()])
    }
    fn tensor_mor(&self, f: &FinFn, g: &FinFn) -> FinFn {
        f.tensor(g)
    }
    fn braiding(&self, a: &FinSet, b: &FinSet) -> FinFn {
        FinFn::swap(a, b)
    }
    fn direct_sum(&self, objs: &[FinSet]) -> Option<(FinSet, Vec<FinFn>)> {
        let total: usize = objs.iter().map(FinSet::size).sum();
        let sum = FinSet::atom(total);
        let mut offset = 0;
        let inj = objs
            .iter()
            .map(|o| {
                let start = offset;
                offset += o.size();
                FinFn::from_fn(o.clone(), sum.clone(), |i| start + i)
            })
            .collect();
        Some((sum, inj))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// Integers modulo a prime.
    Fp(u32),
    Bool,
}

impl Semiring {
    pub fn reduce(&self, x: i64) -> u32 {
        match *self {
            Semiring::Fp(p) => x.rem_euclid(p as i64) as u32,
            Semiring::Bool => u32::from(x != 0),
        }
    }
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match *self {
            Semiring::Fp(p) => ((a as u64 + b as u64) % p as u64) as u32,
            Semiring::Bool => a | b,
        }
    }
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match *self {
            Semiring::Fp(p) => ((a as u64 * b as u64) % p as u64) as u32,
            Semiring::Bool => a & b,
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semiring::Fp(p) => write!(f, "F{p}"),
            Semiring::Bool => write!(f, "bool"),
        }
    }
}

/// An `rows × cols` matrix, stored row-major. As a morphism it goes from
/// `rows` to `cols`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}{:?}", self.rows, self.cols, self.data)
    }
}

impl Mat {
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatBackend {
    pub semiring: Semiring,
}

impl MatBackend {
    pub fn fp(p: u32) -> Self {
        MatBackend { semiring: Semiring::Fp(p) }
    }

    pub fn boolean() -> Self {
        MatBackend { semiring: Semiring::Bool }
    }

    /// Entries are reduced into the semiring.
    pub fn mat(&self, rows: usize, cols: usize, data: &[i64]) -> Result<Mat, VError> {
        if data.len() != rows * cols {
            return Err(VError::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Mat { rows, cols, data: data.iter().map(|&x| self.semiring.reduce(x)).collect() })
    }

    pub fn zero(&self, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_fn(&self, rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Mat {
        let data = (0..rows * cols).map(|k| self.semiring.reduce(f(k / cols, k % cols))).collect();
        Mat { rows, cols, data }
    }

    pub fn add(&self, a: &Mat, b: &Mat) -> Result<Mat, VError> {
        if (a.rows, a.cols) != (b.rows, b.cols) {
            return Err(VError::ShapeMismatch(format!("adding {a:?} and {b:?}")));
        }
        let data = a.data.iter().zip(&b.data).map(|(&x, &y)| self.semiring.add(x, y)).collect();
        Ok(Mat { rows: a.rows, cols: a.cols, data })
    }

    pub fn scale(&self, c: u32, a: &Mat) -> Mat {
        Mat { rows: a.rows, cols: a.cols, data: a.data.iter().map(|&x| self.semiring.mul(c, x)).collect() }
    }

    pub fn transpose(&self, a: &Mat) -> Mat {
        self.from_fn(a.cols, a.rows, |i, j| a.get(j, i) as i64)
    }
}

impl VBackend for MatBackend {
    type Obj = usize;
    type Mor = Mat;

    fn name(&self) -> String {
        format!("mat-{}", self.semiring)
    }
    fn unit(&self) -> usize {
        1
    }
    fn id(&self, &n: &usize) -> Mat {
        self.from_fn(n, n, |i, j| i64::from(i == j))
    }
    fn dom(&self, f: &Mat) -> usize {
        f.rows
    }
    fn cod(&self, f: &Mat) -> usize {
        f.cols
    }
    fn compose(&self, a: &Mat, b: &Mat) -> Result<Mat, VError> {
        if a.cols != b.rows {
            return Err(VError::ShapeMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                a.rows, a.cols, b.rows, b.cols
            )));
        }
        let mut data = vec![0u32; a.rows * b.cols];
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let cell = &mut data[i * b.cols + j];
                    *cell = self.semiring.add(*cell, self.semiring.mul(x, b.get(k, j)));
                }
            }
        }
        Ok(Mat { rows: a.rows, cols: b.cols, data })
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }
    fn tensor_mor(&self, a: &Mat, b: &Mat) -> Mat {
        self.from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
            let (i1, i2) = (r / b.rows, r % b.rows);
            let (j1, j2) = (c / b.cols, c % b.cols);
            self.semiring.mul(a.get(i1, j1), b.get(i2, j2)) as i64
        })
    }
    fn braiding(&self, &n: &usize, &m: &usize) -> Mat {
        self.from_fn(n * m, m * n, |r, c| {
            let (i, j) = (r / m, r % m);
            i64::from(c == j * n + i)
        })
    }
    fn direct_sum(&self, objs: &[usize]) -> Option<(usize, Vec<Mat>)> {
        let total: usize = objs.iter().sum();
        let mut offset = 0;
        let inj = objs
            .iter()
            .map(|&n| {
                let start = offset;
                offset += n;
                self.from_fn(n, total, |i, j| i64::from(j == start + i))
            })
            .collect();
        Some((total, inj))
    }
}

/// The opposite category: composition, domains and braidings reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OpBackend<B>(pub B);

impl<B: VBackend> VBackend for OpBackend<B> {
    type Obj = B::Obj;
    type Mor = B::Mor;

    fn name(&self) -> String {
        format!("op({})", self.0.name())
    }
    fn unit(&self) -> B::Obj {
        self.0.unit()
    }
    fn id(&self, a: &B::Obj) -> B::Mor {
        self.0.id(a)
    }
    fn dom(&self, f: &B::Mor) -> B::Obj {
        self.0.cod(f)
    }
    fn cod(&self, f: &B::Mor) -> B::Obj {
        self.0.dom(f)
    }
    fn compose(&self, f: &B::Mor, g: &B::Mor) -> Result<B::Mor, VError> {
        self.0.compose(g, f)
    }
    fn tensor_obj(&self, a: &B::Obj, b: &B::Obj) -> B::Obj {
        self.0.tensor_obj(a, b)
    }
    fn tensor_mor(&self, f: &B::Mor, g: &B::Mor) -> B::Mor {
        self.0.tensor_mor(f, g)
    }
    fn braiding(&self, a: &B::Obj, b: &B::Obj) -> B::Mor {
        self.0.braiding(b, a)
    }
    fn mor_eq(&self, f: &B::Mor, g: &B::Mor) -> bool {
        self.0.mor_eq(f, g)
    }
}
