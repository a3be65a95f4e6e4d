//! Decoding a structure file and running the matching checker.

use std::fmt::Display;

use oplax_core::finset::FinSet;
use oplax_core::hopfcat::x2::X2;
use oplax_core::hopfcat::{check_frobenius_vcat, check_hopf_vcat, check_semi_hopf_vcat, FrobVCat, HopfVCat};
use oplax_core::spanv::{VCell1, VCell2, VFam};
use oplax_core::structures::{
    check_frobenius, check_oplax_bimonoid, check_oplax_bimonoid_morphism, check_oplax_hopf, check_oplax_module,
    structure_boundaries, AntipodeData, CheckReport, ComonoidData, Counterexample, FrobeniusData, MonoidData,
    OplaxBimonoidData, OplaxModuleData, OplaxMorphismData,
};
use oplax_core::vbackend::{FinSetBackend, MatBackend, TrivialBackend, VBackend};

use crate::bounds::{antipode_bounds, module_bounds, morphism_bounds};
use crate::codec::{Codec, Decoder};
use crate::error::CliError;
use crate::schema::{
    AntipodeFile, BackendKind, BackendSpec, Cell, CellMap, FrobCatFile, ModuleFile, MorphismFile, SpanBimonoid,
    SpanFrobenius, Structure, StructureFile, VCatFile, SCHEMA_VERSION,
};

/// Largest set the checker will build when neither `--bounds` nor
/// `OHL_MAX_APEX` says otherwise.
pub const DEFAULT_BOUND: usize = 1 << 16;

fn core_err(e: impl Display) -> CliError {
    CliError::Schema(e.to_string())
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn mat_backend(p: Option<u32>) -> Result<MatBackend, CliError> {
    match p {
        Some(p) if is_prime(p) => Ok(MatBackend::fp(p)),
        Some(p) => Err(CliError::Schema(format!("backend.p = {p} is not prime"))),
        None => Err(CliError::Schema("backend.p is required for mat".into())),
    }
}

pub fn backend_name(b: &BackendSpec) -> String {
    match (b.kind, b.p) {
        (BackendKind::Trivial, _) => TrivialBackend.name(),
        (BackendKind::Finset, _) => FinSetBackend.name(),
        (BackendKind::Mat, Some(p)) => MatBackend::fp(p).name(),
        (BackendKind::Mat, None) => "mat".into(),
    }
}

/// Runs the checker for `file.structure`. Structure cells that are
/// omitted and cannot be inferred show up as failed `infer.*` records.
pub fn check_structure(file: &StructureFile, bound: usize) -> Result<CheckReport, CliError> {
    if file.schema_version != SCHEMA_VERSION {
        return Err(CliError::Schema(format!(
            "schema_version {} is not supported (expected {SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    let s = &file.structure;
    match file.backend.kind {
        BackendKind::Mat => run(&Decoder::new(mat_backend(file.backend.p)?, bound), s),
        _ if file.backend.p.is_some() => Err(CliError::Schema("backend.p only applies to mat".into())),
        BackendKind::Trivial => run(&Decoder::new(TrivialBackend, bound), s),
        BackendKind::Finset => run(&Decoder::new(FinSetBackend, bound), s),
    }
}

/// Structure cells, or the report naming the ones that could not be
/// inferred.
type Built<T> = Result<T, CheckReport>;

struct Cells<'a, B: Codec> {
    d: &'a Decoder<B>,
    missing: CheckReport,
}

impl<'a, B: Codec> Cells<'a, B> {
    fn new(d: &'a Decoder<B>) -> Self {
        Cells { d, missing: CheckReport::new() }
    }

    fn get(
        &mut self,
        name: &str,
        table: &CellMap,
        (src, tgt): &(VCell1<B>, VCell1<B>),
    ) -> Result<Option<VCell2<B>>, CliError> {
        let c = self.d.map2_or_infer(name, table, src, tgt)?;
        if c.is_none() {
            self.missing.fail(
                format!("infer.{name}"),
                Counterexample {
                    element: Vec::new(),
                    feet: None,
                    detail: format!("{name} was omitted and there is no unique 2-cell between its boundaries"),
                },
            );
        }
        Ok(c)
    }

    fn finish<T>(self, f: impl FnOnce() -> T) -> Built<T> {
        if self.missing.records.is_empty() {
            Ok(f())
        } else {
            Err(self.missing)
        }
    }
}

fn monoid<B: Codec>(d: &Decoder<B>, c: &VFam<B::Obj>, mlt: &Cell, uni: &Cell) -> Result<MonoidData<B>, CliError> {
    let cc = d.e.tensor_fam(c, c);
    Ok(MonoidData {
        mlt: d.cell("mlt", mlt, &cc, c)?,
        uni: d.cell("uni", uni, &d.e.unit_fam(), c)?,
        carrier: c.clone(),
    })
}

fn comonoid<B: Codec>(d: &Decoder<B>, c: &VFam<B::Obj>, lcm: &Cell, lcu: &Cell) -> Result<ComonoidData<B>, CliError> {
    let cc = d.e.tensor_fam(c, c);
    Ok(ComonoidData {
        lcm: d.cell("lcm", lcm, c, &cc)?,
        lcu: d.cell("lcu", lcu, c, &d.e.unit_fam())?,
        carrier: c.clone(),
    })
}

fn bimonoid<B: Codec>(d: &Decoder<B>, f: &SpanBimonoid) -> Result<Built<OplaxBimonoidData<B>>, CliError> {
    let c = d.fam("carrier", &f.carrier)?;
    let (monoid, comonoid) = (monoid(d, &c, &f.mlt, &f.uni)?, comonoid(d, &c, &f.lcm, &f.lcu)?);
    let [b, b0, x, x0] = structure_boundaries(&d.e, &monoid, &comonoid).map_err(core_err)?;
    let mut cells = Cells::new(d);
    let theta = cells.get("theta", &f.theta, &b)?;
    let theta0 = cells.get("theta0", &f.theta0, &b0)?;
    let chi = cells.get("chi", &f.chi, &x)?;
    let chi0 = cells.get("chi0", &f.chi0, &x0)?;
    Ok(cells.finish(|| OplaxBimonoidData {
        monoid,
        comonoid,
        theta: theta.unwrap(),
        theta0: theta0.unwrap(),
        chi: chi.unwrap(),
        chi0: chi0.unwrap(),
    }))
}

fn antipode<B: Codec>(
    d: &Decoder<B>,
    bi: &OplaxBimonoidData<B>,
    a: &AntipodeFile,
) -> Result<Built<AntipodeData<B>>, CliError> {
    let c = &bi.monoid.carrier;
    let s = d.cell("antipode.s", &a.s, c, c)?;
    let [t1, t2] = antipode_bounds(&d.e, bi, &s).map_err(core_err)?;
    let mut cells = Cells::new(d);
    let tau1 = cells.get("tau1", &a.tau1, &t1)?;
    let tau2 = cells.get("tau2", &a.tau2, &t2)?;
    Ok(cells.finish(|| AntipodeData { s, tau1: tau1.unwrap(), tau2: tau2.unwrap() }))
}

fn frobenius<B: Codec>(d: &Decoder<B>, f: &SpanFrobenius) -> Result<FrobeniusData<B>, CliError> {
    let c = d.fam("carrier", &f.carrier)?;
    Ok(FrobeniusData { monoid: monoid(d, &c, &f.mlt, &f.uni)?, comonoid: comonoid(d, &c, &f.lcm, &f.lcu)? })
}

fn homs<B: Codec>(d: &Decoder<B>, n: usize, homs: &[usize]) -> Result<Vec<B::Obj>, CliError> {
    if n == 0 {
        return Err(CliError::Schema("objects must be positive".into()));
    }
    d.within("objects", Some(n))?;
    if homs.len() != n * n {
        return Err(CliError::Schema(format!("homs: expected {} entries, found {}", n * n, homs.len())));
    }
    homs.iter().enumerate().map(|(i, &k)| d.obj(&format!("homs[{i}]"), k)).collect()
}

fn hopf_vcat<B: Codec>(d: &Decoder<B>, f: &VCatFile) -> Result<HopfVCat<B>, CliError> {
    let n = f.objects;
    let homs = homs(d, n, &f.homs)?;
    let (v, x) = (d.v(), X2::new(n));
    let h = |a: usize, b: usize| homs[x.enc(&[a, b])].clone();
    let hh = |a: usize, b: usize, c: usize| v.tensor_obj(&h(a, b), &h(b, c));
    let m = d.indexed("m", n, 3, &f.m, |t| (hh(t[0], t[1], t[2]), h(t[0], t[2])))?;
    let u = d.indexed("u", n, 1, &f.u, |t| (v.unit(), h(t[0], t[0])))?;
    let delta =
        d.indexed("delta", n, 2, &f.delta, |t| (h(t[0], t[1]), v.tensor_obj(&h(t[0], t[1]), &h(t[0], t[1]))))?;
    let eps = d.indexed("eps", n, 2, &f.eps, |t| (h(t[0], t[1]), v.unit()))?;
    let s = match &f.s {
        Some(s) => Some(d.indexed("s", n, 2, s, |t| (h(t[0], t[1]), h(t[1], t[0])))?),
        None => None,
    };
    Ok(HopfVCat { objects: FinSet::atom(n), homs: homs.clone(), m, u, delta, eps, s })
}

fn frob_vcat<B: Codec>(d: &Decoder<B>, f: &FrobCatFile) -> Result<FrobVCat<B>, CliError> {
    let n = f.objects;
    let homs = homs(d, n, &f.homs)?;
    let (v, x) = (d.v(), X2::new(n));
    let h = |a: usize, b: usize| homs[x.enc(&[a, b])].clone();
    let hh = |a: usize, b: usize, c: usize| v.tensor_obj(&h(a, b), &h(b, c));
    let m = d.indexed("m", n, 3, &f.m, |t| (hh(t[0], t[1], t[2]), h(t[0], t[2])))?;
    let u = d.indexed("u", n, 1, &f.u, |t| (v.unit(), h(t[0], t[0])))?;
    let comlt = d.indexed("comlt", n, 3, &f.comlt, |t| (h(t[0], t[2]), hh(t[0], t[1], t[2])))?;
    let couni = d.indexed("couni", n, 1, &f.couni, |t| (h(t[0], t[0]), v.unit()))?;
    Ok(FrobVCat { objects: FinSet::atom(n), homs: homs.clone(), m, u, comlt, couni })
}

fn module<B: Codec>(d: &Decoder<B>, f: &ModuleFile) -> Result<Built<(OplaxModuleData<B>, MonoidData<B>)>, CliError> {
    let e = &d.e;
    let c = d.fam("carrier", &f.carrier)?;
    let mon = monoid(d, &c, &f.mlt, &f.uni)?;
    let x = d.fam("module", &f.module)?;
    let rho = d.cell("rho", &f.rho, &e.tensor_fam(&x, &c), &x)?;
    let [b, b0] = module_bounds(e, &mon, &x, &rho).map_err(core_err)?;
    let mut cells = Cells::new(d);
    let xi = cells.get("xi", &f.xi, &b)?;
    let xi0 = cells.get("xi0", &f.xi0, &b0)?;
    Ok(cells.finish(|| (OplaxModuleData { carrier: x, rho, xi: xi.unwrap(), xi0: xi0.unwrap() }, mon)))
}

type MorphismParts<B> = (OplaxBimonoidData<B>, OplaxBimonoidData<B>, OplaxMorphismData<B>);

fn morphism<B: Codec>(d: &Decoder<B>, f: &MorphismFile) -> Result<Built<MorphismParts<B>>, CliError> {
    if f.source.antipode.is_some() || f.target.antipode.is_some() {
        return Err(CliError::Schema("morphism endpoints are bimonoids and carry no antipode".into()));
    }
    let a = match bimonoid(d, &f.source)? {
        Ok(a) => a,
        Err(r) => return Ok(Err(r)),
    };
    let b = match bimonoid(d, &f.target)? {
        Ok(b) => b,
        Err(r) => return Ok(Err(r)),
    };
    let cell = d.cell("f", &f.f, &a.monoid.carrier, &b.monoid.carrier)?;
    let [p, p0, q, q0] = morphism_bounds(&d.e, &a, &b, &cell).map_err(core_err)?;
    let mut cells = Cells::new(d);
    let phi = cells.get("phi", &f.phi, &p)?;
    let phi0 = cells.get("phi0", &f.phi0, &p0)?;
    let psi = cells.get("psi", &f.psi, &q)?;
    let psi0 = cells.get("psi0", &f.psi0, &q0)?;
    Ok(cells.finish(|| (a, b, OplaxMorphismData { f: cell, phi, phi0, psi, psi0 })))
}

fn run<B: Codec>(d: &Decoder<B>, s: &Structure) -> Result<CheckReport, CliError> {
    let e = &d.e;
    Ok(match s {
        Structure::Bimonoid(f) => {
            if f.antipode.is_some() {
                return Err(CliError::Schema("a bimonoid carries no antipode; use kind hopf".into()));
            }
            match bimonoid(d, f)? {
                Ok(bi) => check_oplax_bimonoid(e, &bi).map_err(core_err)?,
                Err(r) => r,
            }
        }
        Structure::Hopf(f) => {
            let a = f.antipode.as_ref().ok_or_else(|| CliError::Schema("hopf requires an antipode".into()))?;
            match bimonoid(d, f)? {
                Ok(bi) => match antipode(d, &bi, a)? {
                    Ok(atp) => check_oplax_hopf(e, &bi, &atp).map_err(core_err)?,
                    Err(r) => r,
                },
                Err(r) => r,
            }
        }
        Structure::Frobenius(f) => check_frobenius(e, &frobenius(d, f)?).map_err(core_err)?,
        Structure::Hopfcat(f) => {
            let h = hopf_vcat(d, f)?;
            match h.s {
                Some(_) => check_hopf_vcat(d.v(), &h),
                None => check_semi_hopf_vcat(d.v(), &h),
            }
            .map_err(core_err)?
        }
        Structure::Frobcat(f) => check_frobenius_vcat(d.v(), &frob_vcat(d, f)?).map_err(core_err)?,
        Structure::Module(f) => match module(d, f)? {
            Ok((x, mon)) => check_oplax_module(e, &x, &mon).map_err(core_err)?,
            Err(r) => r,
        },
        Structure::Morphism(f) => match morphism(d, f)? {
            Ok((a, b, m)) => check_oplax_bimonoid_morphism(e, &a, &b, &m).map_err(core_err)?,
            Err(r) => r,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_agree_with_trial_division_by_everything() {
        for p in 0..2000u32 {
            let naive = p >= 2 && (2..p).all(|d| !p.is_multiple_of(d));
            assert_eq!(is_prime(p), naive, "{p}");
        }
    }

    #[test]
    fn mat_needs_a_prime() {
        assert!(mat_backend(Some(7)).is_ok());
        assert!(matches!(mat_backend(Some(1)), Err(CliError::Schema(_))));
        assert!(matches!(mat_backend(None), Err(CliError::Schema(_))));
    }
}
