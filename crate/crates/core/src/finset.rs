//! Finite sets with flat tuple encodings, total functions between them,
//! products and pullbacks.
//!
//! A [`FinSet`] is a list of atomic sizes. Its elements are tuples encoded
//! row-major, so `product([2],[3])` sends `(1,2)` to `5`. Atomic factors of
//! size one carry no information and are dropped when a shape is built, which
//! makes `I ⊗ X` and `X ⊗ I` literally equal to `X`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinError {
    #[error("codomain {found} does not match domain {expected}")]
    CodMismatch { expected: FinSet, found: FinSet },
    #[error("table has length {found}, domain has size {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("entry {value} at position {index} is outside a codomain of size {size}")]
    OutOfRange { index: usize, value: usize, size: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinSet {
    shape: Vec<usize>,
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSet{:?}", self.shape)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.shape)
    }
}

impl FinSet {
    pub fn new(shape: impl IntoIterator<Item = usize>) -> Self {
        FinSet { shape: shape.into_iter().filter(|&n| n != 1).collect() }
    }

    pub fn atom(n: usize) -> Self {
        Self::new([n])
    }

    pub fn unit() -> Self {
        FinSet { shape: Vec::new() }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn arity(&self) -> usize {
        self.shape.len()
    }

    pub fn checked_size(&self) -> Option<usize> {
        self.shape.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n))
    }

    /// Number of elements. Panics if the product overflows `usize`.
    pub fn size(&self) -> usize {
        self.checked_size().unwrap_or_else(|| panic!("finite set {self} is too large to enumerate"))
    }

    pub fn is_unit(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn power(&self, k: usize) -> FinSet {
        product(&vec![self.clone(); k])
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.shape.len(), "tuple arity mismatch for {self}");
        tuple.iter().zip(&self.shape).fold(0, |acc, (&t, &n)| {
            assert!(t < n, "coordinate {t} out of range for {self}");
            acc * n + t
        })
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        let mut out = vec![0; self.shape.len()];
        self.decode_into(index, &mut out);
        out
    }

    pub fn decode_into(&self, mut index: usize, out: &mut [usize]) {
        for (slot, &n) in out.iter_mut().zip(&self.shape).rev() {
            *slot = index % n;
            index /= n;
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.size()).map(move |i| self.decode(i))
    }
}

/// Flat product of finite sets; unit factors disappear.
pub fn product(factors: &[FinSet]) -> FinSet {
    FinSet { shape: factors.iter().flat_map(|f| f.shape.iter().copied()).collect() }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFn {
    dom: FinSet,
    cod: FinSet,
    table: Vec<usize>,
}

impl FinFn {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self, FinError> {
        if table.len() != dom.size() {
            return Err(FinError::TableLength { expected: dom.size(), found: table.len() });
        }
        let size = cod.size();
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(FinError::OutOfRange { index, value, size });
        }
        Ok(FinFn { dom, cod, table })
    }

    pub fn from_fn(dom: FinSet, cod: FinSet, f: impl Fn(usize) -> usize) -> Self {
        let table = (0..dom.size()).map(f).collect();
        Self::new(dom, cod, table).expect("generated table out of range")
    }

    pub fn identity(x: &FinSet) -> Self {
        FinFn { dom: x.clone(), cod: x.clone(), table: (0..x.size()).collect() }
    }

    pub fn terminal(x: &FinSet) -> Self {
        FinFn { dom: x.clone(), cod: FinSet::unit(), table: vec![0; x.size()] }
    }

    pub fn empty_to(cod: &FinSet) -> Self {
        FinFn { dom: FinSet::atom(0), cod: cod.clone(), table: Vec::new() }
    }

    pub fn constant(dom: &FinSet, cod: &FinSet, value: usize) -> Self {
        Self::new(dom.clone(), cod.clone(), vec![value; dom.size()]).expect("constant out of range")
    }

    /// Rearrangement between flat products: coordinate block `i` of the
    /// output copies block `pick[i]` of the input. Covers diagonals,
    /// projections, swaps and maps such as `1×Δ×1`.
    pub fn rearrange(factors: &[FinSet], pick: &[usize]) -> Self {
        let dom = product(factors);
        let cod_factors: Vec<FinSet> = pick.iter().map(|&i| factors[i].clone()).collect();
        let cod = product(&cod_factors);
        let sizes: Vec<usize> = factors.iter().map(FinSet::size).collect();
        let mut parts = vec![0; factors.len()];
        let table = (0..dom.size())
            .map(|mut idx| {
                for (slot, &n) in parts.iter_mut().zip(&sizes).rev() {
                    *slot = idx % n;
                    idx /= n;
                }
                pick.iter().zip(&cod_factors).fold(0, |acc, (&i, f)| acc * f.size() + parts[i])
            })
            .collect();
        FinFn { dom, cod, table }
    }

    pub fn diagonal(x: &FinSet) -> Self {
        Self::rearrange(std::slice::from_ref(x), &[0, 0])
    }

    pub fn swap(x: &FinSet, y: &FinSet) -> Self {
        Self::rearrange(&[x.clone(), y.clone()], &[1, 0])
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.table.len() == self.cod.size() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<FinFn> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.table.len()];
        for (i, &v) in self.table.iter().enumerate() {
            table[v] = i;
        }
        Some(FinFn { dom: self.cod.clone(), cod: self.dom.clone(), table })
    }

    /// Cartesian product `f × g` on flat products.
    pub fn tensor(&self, other: &FinFn) -> FinFn {
        let n = other.cod.size();
        let table = self.table.iter().flat_map(|&a| other.table.iter().map(move |&b| a * n + b)).collect();
        FinFn {
            dom: product(&[self.dom.clone(), other.dom.clone()]),
            cod: product(&[self.cod.clone(), other.cod.clone()]),
            table,
        }
    }

    /// Same table read against different but equally sized carriers.
    pub fn recarrier(&self, dom: FinSet, cod: FinSet) -> FinFn {
        assert_eq!(dom.size(), self.dom.size());
        assert_eq!(cod.size(), self.cod.size());
        FinFn { dom, cod, table: self.table.clone() }
    }
}

/// `f` then `g`: `table[a] = g[f[a]]`.
pub fn compose_fn(f: &FinFn, g: &FinFn) -> Result<FinFn, FinError> {
    if f.cod != g.dom {
        return Err(FinError::CodMismatch { expected: g.dom.clone(), found: f.cod.clone() });
    }
    Ok(FinFn { dom: f.dom.clone(), cod: g.cod.clone(), table: f.table.iter().map(|&b| g.table[b]).collect() })
}

/// A subset of a flat product, kept as lexicographically sorted coordinate
/// rows. Pullback apexes are built this way, so iterated pullbacks of the
/// same data produce identical row lists whatever the bracketing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetApex {
    ambient: FinSet,
    len: usize,
    rows: Option<Vec<u32>>,
}

impl SubsetApex {
    pub fn full(ambient: FinSet) -> Self {
        SubsetApex { len: ambient.size(), ambient, rows: None }
    }

    /// Rows must be strictly increasing; each row has `ambient.arity()` coordinates.
    pub fn from_rows(ambient: FinSet, rows: &[Vec<usize>]) -> Self {
        let mut flat = Vec::with_capacity(rows.len() * ambient.arity());
        for r in rows {
            assert_eq!(r.len(), ambient.arity());
            for (&c, &n) in r.iter().zip(ambient.shape()) {
                assert!(c < n, "row coordinate out of range");
                flat.push(c as u32);
            }
        }
        let apex = SubsetApex { ambient, len: rows.len(), rows: Some(flat) };
        assert!(apex.is_sorted(), "subset rows must be strictly increasing");
        apex
    }

    fn is_sorted(&self) -> bool {
        (1..self.len).all(|k| self.row(k - 1) < self.row(k))
    }

    pub fn ambient(&self) -> &FinSet {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.rows.is_none()
    }

    /// The index set the legs of a span are defined on.
    pub fn carrier(&self) -> FinSet {
        match self.rows {
            None => self.ambient.clone(),
            Some(_) => FinSet::atom(self.len),
        }
    }

    /// Decoded coordinates of member `k`.
    pub fn row(&self, k: usize) -> Vec<usize> {
        match &self.rows {
            None => self.ambient.decode(k),
            Some(flat) => {
                let w = self.ambient.arity();
                flat[k * w..(k + 1) * w].iter().map(|&c| c as usize).collect()
            }
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len).map(move |k| self.row(k))
    }

    /// Index of member `k` in the ambient product, when that fits a `usize`.
    pub fn member_index(&self, k: usize) -> Option<usize> {
        self.ambient.checked_size()?;
        Some(self.ambient.encode(&self.row(k)))
    }

    pub fn position(&self, row: &[usize]) -> Option<usize> {
        match &self.rows {
            None => {
                let ok =
                    row.len() == self.ambient.arity() && row.iter().zip(self.ambient.shape()).all(|(&c, &n)| c < n);
                ok.then(|| self.ambient.encode(row))
            }
            Some(_) => {
                let (mut lo, mut hi) = (0, self.len);
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    match self.row(mid).as_slice().cmp(row) {
                        std::cmp::Ordering::Less => lo = mid + 1,
                        std::cmp::Ordering::Greater => hi = mid,
                        std::cmp::Ordering::Equal => return Some(mid),
                    }
                }
                None
            }
        }
    }

    /// Members `(a_i, b_j)` for the listed pairs, which must be sorted.
    pub fn pairs(a: &SubsetApex, b: &SubsetApex, pairs: &[(usize, usize)]) -> SubsetApex {
        let ambient = product(&[a.ambient.clone(), b.ambient.clone()]);
        let w = ambient.arity();
        let mut flat = Vec::with_capacity(pairs.len() * w);
        for &(i, j) in pairs {
            flat.extend(a.row(i).into_iter().map(|c| c as u32));
            flat.extend(b.row(j).into_iter().map(|c| c as u32));
        }
        SubsetApex { ambient, len: pairs.len(), rows: Some(flat) }
    }

    pub fn product(a: &SubsetApex, b: &SubsetApex) -> SubsetApex {
        if a.is_full() && b.is_full() {
            return SubsetApex::full(product(&[a.ambient.clone(), b.ambient.clone()]));
        }
        let pairs: Vec<(usize, usize)> = (0..a.len).flat_map(|i| (0..b.len).map(move |j| (i, j))).collect();
        SubsetApex::pairs(a, b, &pairs)
    }

    pub fn same_members(&self, other: &SubsetApex) -> bool {
        self.ambient == other.ambient
            && self.len == other.len
            && (self.rows == other.rows || (0..self.len).all(|k| self.row(k) == other.row(k)))
    }
}

/// Pairs `(s, q)` with `g(s) = m(q)`, in lexicographic order.
pub fn pullback_pairs(g: &[usize], m: &[usize]) -> Vec<(usize, usize)> {
    let mut by_value: Vec<(usize, usize)> = m.iter().enumerate().map(|(q, &y)| (y, q)).collect();
    by_value.sort_unstable();
    let mut out = Vec::new();
    for (s, &y) in g.iter().enumerate() {
        let start = by_value.partition_point(|&(v, _)| v < y);
        out.extend(by_value[start..].iter().take_while(|&&(v, _)| v == y).map(|&(_, q)| (s, q)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub apex: SubsetApex,
    pub p1: FinFn,
    pub p2: FinFn,
}

/// Pullback of `g: S → Y` and `m: Q → Y` as a subset of `S × Q`.
pub fn pullback(g: &FinFn, m: &FinFn) -> Result<Pullback, FinError> {
    if g.cod != m.cod {
        return Err(FinError::CodMismatch { expected: g.cod.clone(), found: m.cod.clone() });
    }
    let pairs = pullback_pairs(&g.table, &m.table);
    let apex = SubsetApex::pairs(&SubsetApex::full(g.dom.clone()), &SubsetApex::full(m.dom.clone()), &pairs);
    let carrier = apex.carrier();
    let p1 = FinFn::new(carrier.clone(), g.dom.clone(), pairs.iter().map(|p| p.0).collect())?;
    let p2 = FinFn::new(carrier, m.dom.clone(), pairs.iter().map(|p| p.1).collect())?;
    Ok(Pullback { apex, p1, p2 })
}
