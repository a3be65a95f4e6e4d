use crate::spanv::{Mismatch, SpanV, SpanVError, VCell1, VCell2};
use crate::vbackend::VBackend;

use super::convolution::Convolution;
use super::kit::invalid_cell;
use super::{CheckReport, Counterexample, MoritaContextData, StructError};

/// A monoidal category of 1-cells and 2-cells in Span|V: the convolution
/// category `(K(C, M), ⊙)` or an endo-hom under composition. The tensor
/// is written in diagrammatic order, so the composite `q p` of a context
/// is `p ⊗ q`.
pub trait HomMonoidal<B: VBackend> {
    fn engine(&self) -> &SpanV<B>;
    fn tensor(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<VCell1<B>, StructError>;
    fn tensor_2cells(&self, a: &VCell2<B>, b: &VCell2<B>) -> Result<VCell2<B>, StructError>;
    fn unit(&self) -> Result<VCell1<B>, StructError>;

    fn tensor_all(&self, cells: &[&VCell1<B>]) -> Result<VCell1<B>, StructError> {
        let (first, rest) = cells.split_first().expect("at least one factor");
        rest.iter().try_fold((*first).clone(), |acc, c| self.tensor(&acc, c))
    }

    fn tensor_2cells_all(&self, cells: &[&VCell2<B>]) -> Result<VCell2<B>, StructError> {
        let (first, rest) = cells.split_first().expect("at least one factor");
        rest.iter().try_fold((*first).clone(), |acc, c| self.tensor_2cells(&acc, c))
    }
}

impl<B: VBackend> HomMonoidal<B> for Convolution<'_, B> {
    fn engine(&self) -> &SpanV<B> {
        self.e
    }
    fn tensor(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<VCell1<B>, StructError> {
        Convolution::tensor(self, a, b)
    }
    fn tensor_2cells(&self, a: &VCell2<B>, b: &VCell2<B>) -> Result<VCell2<B>, StructError> {
        Convolution::tensor_2cells(self, a, b)
    }
    fn unit(&self) -> Result<VCell1<B>, StructError> {
        Convolution::unit(self)
    }
}

/// Endo 1-cells of one 0-cell under diagrammatic composition.
pub struct Composition<'a, B: VBackend> {
    pub e: &'a SpanV<B>,
    pub obj: crate::spanv::VFam<B::Obj>,
}

impl<B: VBackend> HomMonoidal<B> for Composition<'_, B> {
    fn engine(&self) -> &SpanV<B> {
        self.e
    }
    fn tensor(&self, a: &VCell1<B>, b: &VCell1<B>) -> Result<VCell1<B>, StructError> {
        Ok(self.e.compose(a, b)?)
    }
    fn tensor_2cells(&self, a: &VCell2<B>, b: &VCell2<B>) -> Result<VCell2<B>, StructError> {
        Ok(self.e.hcompose(a, b)?)
    }
    fn unit(&self) -> Result<VCell1<B>, StructError> {
        Ok(self.e.identity_cell(&self.obj))
    }
}

/// Outcome of [`check_oplax_inverse`]: the report, and when the context
/// is firm the inverses α of `μ ⊗ 1_p` and β of `τ ⊗ 1_q`.
#[derive(Clone, Debug)]
pub struct MoritaCheck<B: VBackend> {
    pub report: CheckReport,
    pub alpha: Option<VCell2<B>>,
    pub beta: Option<VCell2<B>>,
}

fn shape(e: SpanVError, what: &str) -> StructError {
    match e {
        SpanVError::BoundaryMismatch(s) => StructError::ShapeMismatch(format!("{what}: {s}")),
        SpanVError::Span(s) => StructError::ShapeMismatch(format!("{what}: {s}")),
        other => StructError::Engine(other),
    }
}

/// First witness that the apex map of `c` is not a bijection.
pub(crate) fn bijection_failure<B: VBackend>(c: &VCell2<B>) -> Option<Counterexample> {
    let mut seen = vec![usize::MAX; c.tgt.size()];
    for k in 0..c.src.size() {
        let t = c.u.apply(k);
        if seen[t] != usize::MAX {
            return Some(Counterexample {
                element: c.src.element(k),
                feet: Some(c.src.feet(k)),
                detail: format!("shares its image {:?} with {:?}", c.tgt.element(t), c.src.element(seen[t])),
            });
        }
        seen[t] = k;
    }
    seen.iter().position(|&s| s == usize::MAX).map(|t| Counterexample {
        element: c.tgt.element(t),
        feet: Some(c.tgt.feet(t)),
        detail: "target element not in the image".into(),
    })
}

fn outcome(r: Result<Option<Mismatch>, StructError>) -> Result<Option<Mismatch>, SpanVError> {
    match r {
        Ok(m) => Ok(m),
        Err(StructError::Engine(e)) => Err(e),
        Err(other) => Err(SpanVError::BoundaryMismatch(other.to_string())),
    }
}

struct Ctx<'a, B: VBackend, H: HomMonoidal<B>> {
    h: &'a H,
    p: VCell1<B>,
    q: VCell1<B>,
    mu: VCell2<B>,
    tau: VCell2<B>,
}

impl<'a, B: VBackend, H: HomMonoidal<B>> Ctx<'a, B, H> {
    fn new(h: &'a H, ctx: &MoritaContextData<B>) -> Result<Self, StructError> {
        let e = h.engine();
        let unit = h.unit()?;
        let pq = h.tensor(&ctx.p, &ctx.q)?;
        let qp = h.tensor(&ctx.q, &ctx.p)?;
        let mu = e.coerce(&ctx.mu, &pq, &unit).map_err(|err| shape(err, "mu"))?;
        let tau = e.coerce(&ctx.tau, &qp, &unit).map_err(|err| shape(err, "tau"))?;
        Ok(Ctx { h, p: ctx.p.clone(), q: ctx.q.clone(), mu, tau })
    }

    /// `μ ⊗ 1_p` and `1_p ⊗ τ`, both moved onto `(p q) p ⇒ p`.
    fn p_sides(&self) -> Result<Sides<B>, StructError> {
        let idp = self.h.engine().identity_2cell(&self.p);
        let a = self.h.tensor_2cells(&self.mu, &idp)?;
        let b = self.h.tensor_2cells(&idp, &self.tau)?;
        self.onto(a, b, &self.p, "p")
    }

    /// `τ ⊗ 1_q` and `1_q ⊗ μ`, both moved onto `(q p) q ⇒ q`.
    fn q_sides(&self) -> Result<Sides<B>, StructError> {
        let idq = self.h.engine().identity_2cell(&self.q);
        let a = self.h.tensor_2cells(&self.tau, &idq)?;
        let b = self.h.tensor_2cells(&idq, &self.mu)?;
        self.onto(a, b, &self.q, "q")
    }

    /// Both sides moved onto `a.src ⇒ x`. When the unit does not act
    /// trivially on `x` there is nothing to compare and the counterexample
    /// says where the unitor breaks.
    fn onto(&self, a: VCell2<B>, b: VCell2<B>, x: &VCell1<B>, name: &str) -> Result<Sides<B>, StructError> {
        let e = self.h.engine();
        for side in [&a, &b] {
            if e.canonical_iso(&side.tgt, x)?.is_none() {
                let detail = format!("the unit does not act trivially on {name}");
                let cx = match e.iso_mismatch(&side.tgt, x) {
                    Some(m) => Counterexample { detail: format!("{detail}: {}", m.detail), ..Counterexample::from(m) },
                    None => Counterexample { element: vec![], feet: None, detail },
                };
                return Ok(Err(cx));
            }
        }
        let what = format!("unit law for {name}");
        let a2 = e.coerce(&a, &a.src, x).map_err(|err| shape(err, &what))?;
        let b2 = e.coerce(&b, &a.src, x).map_err(|err| shape(err, &what))?;
        Ok(Ok((a2, b2)))
    }
}

type Sides<B> = Result<(VCell2<B>, VCell2<B>), Counterexample>;

/// Morita axioms `μ⊗1_p ≅ 1_p⊗τ` and `τ⊗1_q ≅ 1_q⊗μ`, firmness of both
/// composites, and the identities relating their inverses α and β:
/// `α⊗1_q = 1_p⊗β`, `β⊗1_p = 1_q⊗α`, and `(1_{pq}⊗α)∘α = (α⊗1_{qp})∘α`.
pub fn check_oplax_inverse<B: VBackend, H: HomMonoidal<B>>(
    h: &H,
    ctx: &MoritaContextData<B>,
) -> Result<MoritaCheck<B>, StructError> {
    let e = h.engine();
    let c = Ctx::new(h, ctx)?;
    let mut report = CheckReport::new();
    for (name, raw, cell) in [("mu", &ctx.mu, &c.mu), ("tau", &ctx.tau, &c.tau)] {
        report.record(name, invalid_cell(e, name, raw).or_else(|| invalid_cell(e, name, cell)));
    }
    if !report.passed() {
        return Ok(MoritaCheck { report, alpha: None, beta: None });
    }
    let (pa, pb, qa, qb) = match (c.p_sides()?, c.q_sides()?) {
        (Ok((pa, pb)), Ok((qa, qb))) => (pa, pb, qa, qb),
        (p, q) => {
            for (law, side) in [("morita_p", &p), ("morita_q", &q)] {
                report.record(law, side.as_ref().err().cloned());
            }
            for (law, side) in [("firm_p", &p), ("firm_q", &q)] {
                report.record(law, side.as_ref().err().cloned());
            }
            return Ok(MoritaCheck { report, alpha: None, beta: None });
        }
    };
    report.record_eval("morita_p", e.cells2_equal(&pa, &pb));
    report.record_eval("morita_q", e.cells2_equal(&qa, &qb));
    let fp = bijection_failure(&pa);
    let fq = bijection_failure(&qa);
    report.record("firm_p", fp.clone());
    report.record("firm_q", fq.clone());
    if fp.is_some() || fq.is_some() {
        return Ok(MoritaCheck { report, alpha: None, beta: None });
    }
    let alpha = e.invert_2cell(&pa).expect("bijective");
    let beta = e.invert_2cell(&qa).expect("bijective");
    let idp = e.identity_2cell(&c.p);
    let idq = e.identity_2cell(&c.q);
    let lemma_i = (|| {
        let l = h.tensor_2cells(&alpha, &idq)?;
        let r = h.tensor_2cells(&idp, &beta)?;
        Ok(e.cells2_equal(&l, &r)?)
    })();
    report.record_eval("lemma_i", outcome(lemma_i));
    let lemma_ii = (|| {
        let l = h.tensor_2cells(&beta, &idp)?;
        let r = h.tensor_2cells(&idq, &alpha)?;
        Ok(e.cells2_equal(&l, &r)?)
    })();
    report.record_eval("lemma_ii", outcome(lemma_ii));
    report.record_eval("lemma_iii", outcome(lemma_iii(h, &c.p, &c.q, &c.q, &alpha, &alpha)));
    Ok(MoritaCheck { report, alpha: Some(alpha), beta: Some(beta) })
}

/// `(1_{pq}⊗α′)∘α = (α⊗1_{q′p})∘α′` for two contexts sharing `p`.
fn lemma_iii<B: VBackend, H: HomMonoidal<B>>(
    h: &H,
    p: &VCell1<B>,
    q: &VCell1<B>,
    q2: &VCell1<B>,
    alpha: &VCell2<B>,
    alpha2: &VCell2<B>,
) -> Result<Option<Mismatch>, StructError> {
    let e = h.engine();
    let pq = h.tensor(p, q)?;
    let q2p = h.tensor(q2, p)?;
    let l = e.vcompose_iso(alpha, &h.tensor_2cells(&e.identity_2cell(&pq), alpha2)?)?;
    let r = e.vcompose_iso(alpha2, &h.tensor_2cells(alpha, &e.identity_2cell(&q2p))?)?;
    Ok(e.cells2_equal(&l, &r)?)
}

/// The isomorphism `q ≅ q′` between two firm contexts on the same `p`:
/// φ = β; (1_q⊗α′⊗1_q); (τ⊗1_{q′}⊗μ) and ψ symmetrically, with records
/// for `φ;ψ = 1_q`, `ψ;φ = 1_{q′}` and the mixed lemma identity.
#[derive(Clone, Debug)]
pub struct MoritaIso<B: VBackend> {
    pub phi: VCell2<B>,
    pub psi: VCell2<B>,
    pub report: CheckReport,
}

pub fn morita_uniqueness_iso<B: VBackend, H: HomMonoidal<B>>(
    h: &H,
    ctx1: &MoritaContextData<B>,
    ctx2: &MoritaContextData<B>,
) -> Result<MoritaIso<B>, StructError> {
    let e = h.engine();
    if ctx1.p != ctx2.p {
        return Err(StructError::ShapeMismatch("contexts do not share p".into()));
    }
    let firm = |ctx: &MoritaContextData<B>, name: &str| -> Result<(VCell2<B>, VCell2<B>), StructError> {
        let m = check_oplax_inverse(h, ctx)?;
        match (m.alpha, m.beta) {
            (Some(a), Some(b)) if m.report.passed() => Ok((a, b)),
            _ => Err(StructError::NotFirm(format!("{name} fails {}", m.report.failing_ids().join(", ")))),
        }
    };
    let (a1, b1) = firm(ctx1, "first context")?;
    let (a2, b2) = firm(ctx2, "second context")?;
    let c1 = Ctx::new(h, ctx1)?;
    let c2 = Ctx::new(h, ctx2)?;
    let build = |c: &Ctx<'_, B, H>, other: &Ctx<'_, B, H>, beta: &VCell2<B>, alpha_other: &VCell2<B>| {
        let idq = e.identity_2cell(&c.q);
        let idq2 = e.identity_2cell(&other.q);
        let mid = h.tensor_2cells_all(&[&idq, alpha_other, &idq])?;
        let last = h.tensor_2cells_all(&[&c.tau, &idq2, &c.mu])?;
        let chain = e.vcompose_chain(&[beta.clone(), mid, last])?;
        Ok::<_, StructError>(e.coerce(&chain, &c.q, &other.q)?)
    };
    let phi = build(&c1, &c2, &b1, &a2)?;
    let psi = build(&c2, &c1, &b2, &a1)?;
    let mut report = CheckReport::new();
    report
        .record_eval("phi_then_psi", e.vcompose(&phi, &psi).and_then(|c| e.cells2_equal(&c, &e.identity_2cell(&c1.q))));
    report
        .record_eval("psi_then_phi", e.vcompose(&psi, &phi).and_then(|c| e.cells2_equal(&c, &e.identity_2cell(&c2.q))));
    report.record_eval("lemma_iii", outcome(lemma_iii(h, &c1.p, &c1.q, &c2.q, &a1, &a2)));
    Ok(MoritaIso { phi, psi, report })
}
