//! Translation between file records and library values, per backend.

use oplax_core::finset::{FinFn, FinSet, SubsetApex};
use oplax_core::hopfcat::x2::X2;
use oplax_core::span::Span;
use oplax_core::spanv::{SpanV, VCell1, VCell2, VFam};
use oplax_core::vbackend::{FinSetBackend, MatBackend, Semiring, TrivialBackend, VBackend};

use crate::error::CliError;
use crate::schema::{Apex, Cell, Family};

/// File representation of the objects and morphisms of one backend.
pub trait Codec: VBackend {
    /// Objects and components may be left out of the file.
    const IMPLICIT: bool = false;

    fn obj_in(&self, n: usize) -> Result<Self::Obj, String>;
    fn obj_out(&self, o: &Self::Obj) -> usize;
    fn mor_in(&self, dom: &Self::Obj, cod: &Self::Obj, data: &[i64]) -> Result<Self::Mor, String>;
    fn mor_out(&self, f: &Self::Mor) -> Vec<i64>;
}

impl Codec for TrivialBackend {
    const IMPLICIT: bool = true;

    fn obj_in(&self, n: usize) -> Result<(), String> {
        if n == 1 {
            Ok(())
        } else {
            Err(format!("trivial objects are written as 1, found {n}"))
        }
    }
    fn obj_out(&self, _: &()) -> usize {
        1
    }
    fn mor_in(&self, _: &(), _: &(), data: &[i64]) -> Result<(), String> {
        if data.is_empty() {
            Ok(())
        } else {
            Err("trivial morphisms are written as []".into())
        }
    }
    fn mor_out(&self, _: &()) -> Vec<i64> {
        Vec::new()
    }
}

impl Codec for FinSetBackend {
    fn obj_in(&self, n: usize) -> Result<FinSet, String> {
        Ok(FinSet::atom(n))
    }
    fn obj_out(&self, o: &FinSet) -> usize {
        o.size()
    }
    fn mor_in(&self, dom: &FinSet, cod: &FinSet, data: &[i64]) -> Result<FinFn, String> {
        let table = data
            .iter()
            .map(|&x| usize::try_from(x).map_err(|_| format!("negative function value {x}")))
            .collect::<Result<Vec<_>, _>>()?;
        FinFn::new(dom.clone(), cod.clone(), table).map_err(|e| e.to_string())
    }
    fn mor_out(&self, f: &FinFn) -> Vec<i64> {
        f.table().iter().map(|&x| x as i64).collect()
    }
}

impl Codec for MatBackend {
    fn obj_in(&self, n: usize) -> Result<usize, String> {
        Ok(n)
    }
    fn obj_out(&self, o: &usize) -> usize {
        *o
    }
    fn mor_in(&self, &rows: &usize, &cols: &usize, data: &[i64]) -> Result<Self::Mor, String> {
        if data.len() != rows * cols {
            return Err(format!("a {rows}x{cols} matrix needs {} entries, found {}", rows * cols, data.len()));
        }
        let top = match self.semiring {
            Semiring::Fp(p) => p as i64,
            Semiring::Bool => 2,
        };
        if let Some(x) = data.iter().find(|&&x| !(0..top).contains(&x)) {
            return Err(format!("entry {x} is not a reduced element of {}", self.semiring));
        }
        self.mat(rows, cols, data).map_err(|e| e.to_string())
    }
    fn mor_out(&self, f: &Self::Mor) -> Vec<i64> {
        f.data().iter().map(|&x| x as i64).collect()
    }
}

fn schema(what: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Schema(format!("{what}: {msg}"))
}

/// Reads file records into cells of `Span|B`, refusing anything larger
/// than `bound` elements.
pub struct Decoder<B: Codec> {
    pub e: SpanV<B>,
    pub bound: usize,
}

impl<B: Codec> Decoder<B> {
    pub fn new(v: B, bound: usize) -> Self {
        Decoder { e: SpanV::new(v), bound }
    }

    pub fn v(&self) -> &B {
        &self.e.v
    }

    pub fn within(&self, what: &str, n: Option<usize>) -> Result<usize, CliError> {
        match n {
            Some(n) if n <= self.bound => Ok(n),
            Some(n) => Err(CliError::OutOfBounds(format!("{what} has {n} elements, the bound is {}", self.bound))),
            None => Err(CliError::OutOfBounds(format!("{what} is too large to index"))),
        }
    }

    fn set(&self, what: &str, shape: &[usize]) -> Result<FinSet, CliError> {
        let s = FinSet::new(shape.iter().copied());
        self.within(what, s.checked_size())?;
        Ok(s)
    }

    pub fn obj(&self, what: &str, n: usize) -> Result<B::Obj, CliError> {
        self.within(what, Some(n))?;
        self.v().obj_in(n).map_err(|m| schema(what, m))
    }

    pub fn fam(&self, what: &str, f: &Family) -> Result<VFam<B::Obj>, CliError> {
        let index = self.set(what, &f.shape)?;
        let objs = match &f.objs {
            Some(objs) => objs
                .iter()
                .enumerate()
                .map(|(i, &n)| self.obj(&format!("{what}.objs[{i}]"), n))
                .collect::<Result<_, _>>()?,
            None if B::IMPLICIT => {
                (0..index.size()).map(|_| self.v().obj_in(1)).collect::<Result<_, _>>().map_err(|m| schema(what, m))?
            }
            None => return Err(schema(what, "objs are required for this backend")),
        };
        self.e.fam(index, objs).map_err(|e| schema(what, e))
    }

    fn apex(&self, what: &str, a: &Apex) -> Result<SubsetApex, CliError> {
        let ambient = self.set(what, &a.shape)?;
        let Some(rows) = &a.rows else { return Ok(SubsetApex::full(ambient)) };
        self.within(what, Some(rows.len()))?;
        let shape = ambient.shape();
        for (k, r) in rows.iter().enumerate() {
            if r.len() != shape.len() || r.iter().zip(shape).any(|(&c, &n)| c >= n) {
                return Err(schema(what, format!("row {k} {r:?} does not lie in {shape:?}")));
            }
            if k > 0 && rows[k - 1] >= *r {
                return Err(schema(what, "rows must be strictly increasing"));
            }
        }
        Ok(SubsetApex::from_rows(ambient, rows))
    }

    pub fn cell(&self, what: &str, c: &Cell, dom: &VFam<B::Obj>, cod: &VFam<B::Obj>) -> Result<VCell1<B>, CliError> {
        let apex = self.apex(&format!("{what}.apex"), &c.apex)?;
        let carrier = apex.carrier();
        let f = FinFn::new(carrier.clone(), dom.index.clone(), c.left.clone())
            .map_err(|e| schema(&format!("{what}.left"), e))?;
        let g =
            FinFn::new(carrier, cod.index.clone(), c.right.clone()).map_err(|e| schema(&format!("{what}.right"), e))?;
        let span = Span::new(apex, f, g).map_err(|e| schema(what, e))?;
        let n = span.size();
        let alpha = match &c.alpha {
            Some(alpha) if alpha.len() == n => alpha
                .iter()
                .enumerate()
                .map(|(k, data)| {
                    let (l, r) = (span.f().apply(k), span.g().apply(k));
                    self.v()
                        .mor_in(&dom.objs[l], &cod.objs[r], data)
                        .map_err(|m| schema(&format!("{what}.alpha[{k}]"), m))
                })
                .collect::<Result<_, _>>()?,
            Some(alpha) => return Err(schema(what, format!("{} components for an apex of size {n}", alpha.len()))),
            None if B::IMPLICIT => {
                let unit = self.v().unit();
                (0..n)
                    .map(|_| self.v().mor_in(&unit, &unit, &[]))
                    .collect::<Result<_, _>>()
                    .map_err(|m| schema(what, m))?
            }
            None => return Err(schema(what, "alpha is required for this backend")),
        };
        self.e.cell(dom.clone(), cod.clone(), span, alpha).map_err(|e| schema(what, e))
    }

    /// The 2-cell `src ⇒ tgt` with apex map `table`, not yet validated.
    pub fn map2(&self, what: &str, table: &[usize], src: &VCell1<B>, tgt: &VCell1<B>) -> Result<VCell2<B>, CliError> {
        let u = FinFn::new(src.span.carrier(), tgt.span.carrier(), table.to_vec()).map_err(|e| schema(what, e))?;
        Ok(VCell2::unchecked(src.clone(), tgt.clone(), u))
    }

    /// The supplied 2-cell, or the unique one when it is omitted.
    pub fn map2_or_infer(
        &self,
        what: &str,
        table: &Option<Vec<usize>>,
        src: &VCell1<B>,
        tgt: &VCell1<B>,
    ) -> Result<Option<VCell2<B>>, CliError> {
        self.within(&format!("source of {what}"), Some(src.size()))?;
        self.within(&format!("target of {what}"), Some(tgt.size()))?;
        match table {
            Some(t) => self.map2(what, t, src, tgt).map(Some),
            None => self.e.unique_2cell(src, tgt).map_err(|e| schema(what, e)),
        }
    }

    /// Morphisms indexed row-major by `arity`-tuples of `n` objects, with
    /// the ends of each given by `ends`.
    pub fn indexed(
        &self,
        what: &str,
        n: usize,
        arity: usize,
        data: &[Vec<i64>],
        ends: impl Fn(&[usize]) -> (B::Obj, B::Obj),
    ) -> Result<Vec<B::Mor>, CliError> {
        let x = X2::new(n);
        let count = n.pow(arity as u32);
        if data.len() != count {
            return Err(schema(what, format!("expected {count} entries, found {}", data.len())));
        }
        data.iter()
            .enumerate()
            .map(|(i, d)| {
                let (a, b) = ends(&x.dec(arity, i));
                self.v().mor_in(&a, &b, d).map_err(|m| schema(&format!("{what}[{i}]"), m))
            })
            .collect()
    }
}

/// Writes library values back into file records.
pub struct Encoder<B: Codec> {
    pub e: SpanV<B>,
}

impl<B: Codec> Encoder<B> {
    pub fn new(v: B) -> Self {
        Encoder { e: SpanV::new(v) }
    }

    pub fn fam(&self, f: &VFam<B::Obj>) -> Family {
        Family {
            shape: f.index.shape().to_vec(),
            objs: (!B::IMPLICIT).then(|| f.objs.iter().map(|o| self.e.v.obj_out(o)).collect()),
        }
    }

    pub fn cell(&self, c: &VCell1<B>) -> Cell {
        let apex = c.span.apex();
        Cell {
            apex: Apex {
                shape: apex.ambient().shape().to_vec(),
                rows: (!apex.is_full()).then(|| apex.rows().collect()),
            },
            left: c.span.f().table().to_vec(),
            right: c.span.g().table().to_vec(),
            alpha: (!B::IMPLICIT).then(|| c.alpha.iter().map(|a| self.e.v.mor_out(a)).collect()),
        }
    }

    /// The apex map of `c` once moved onto the boundaries `src ⇒ tgt`.
    pub fn map2(&self, what: &str, c: &VCell2<B>, src: &VCell1<B>, tgt: &VCell1<B>) -> Result<Vec<usize>, CliError> {
        let c = self.e.coerce(c, src, tgt).map_err(|e| schema(what, e))?;
        Ok(c.u.table().to_vec())
    }

    pub fn mors(&self, ms: &[B::Mor]) -> Vec<Vec<i64>> {
        ms.iter().map(|m| self.e.v.mor_out(m)).collect()
    }
}
