//! Generators for the shipped example structures.

use clap::ValueEnum;
use oplax_core::hopfcat::groupoid::GroupoidData;
use oplax_core::hopfcat::x2::X2;
use oplax_core::hopfcat::{mat_frobenius_example, FrobVCat, HopfVCat};
use oplax_core::structures::{
    structure_boundaries, AntipodeData, FrobeniusData, MonoidData, OplaxBimonoidData, OplaxModuleData,
    OplaxMorphismData, StructError,
};
use oplax_core::vbackend::{MatBackend, TrivialBackend};

use crate::bounds::{antipode_bounds, module_bounds, morphism_bounds};
use crate::check::is_prime;
use crate::codec::{Codec, Encoder};
use crate::error::CliError;
use crate::schema::{
    AntipodeFile, BackendKind, BackendSpec, FrobCatFile, ModuleFile, MorphismFile, SpanBimonoid, SpanFrobenius,
    Structure, StructureFile, VCatFile, SCHEMA_VERSION,
};

pub const MAX_SIZE: usize = 4;
pub const MAX_DIM: usize = 4;
pub const MAX_P: u32 = 97;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    /// The oplax Hopf monoid on X² in Span, for `--size` = |X|.
    X2,
    /// The oplax Hopf monoid of a groupoid in Span (`--group`, `--size`).
    Groupoid,
    /// A group algebra over F_p as a one-object Hopf V-category.
    GroupHopf,
    /// Matrix algebras over F_p on objects 1..=max-n as a Frobenius V-category.
    Mat,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DemoParams {
    pub size: Option<usize>,
    pub group: Option<String>,
    pub p: Option<u32>,
    pub max_n: Option<usize>,
}

fn core_err(e: StructError) -> CliError {
    CliError::Schema(e.to_string())
}

fn oob(msg: String) -> CliError {
    CliError::OutOfBounds(msg)
}

fn unused(name: &str, flags: &[(&str, bool)]) -> Result<(), CliError> {
    match flags.iter().find(|(_, set)| *set) {
        Some((flag, _)) => Err(CliError::Schema(format!("--{flag} does not apply to demo {name}"))),
        None => Ok(()),
    }
}

fn size(n: Option<usize>, default: usize, what: &str) -> Result<usize, CliError> {
    let n = n.unwrap_or(default);
    if (1..=MAX_SIZE).contains(&n) {
        Ok(n)
    } else {
        Err(oob(format!("{what} = {n} is outside 1..={MAX_SIZE}")))
    }
}

fn prime(p: Option<u32>, default: u32) -> Result<u32, CliError> {
    match p.unwrap_or(default) {
        p if p > MAX_P => Err(oob(format!("p = {p} exceeds {MAX_P}"))),
        p if !is_prime(p) => Err(CliError::Schema(format!("p = {p} is not prime"))),
        p => Ok(p),
    }
}

/// Groups with at most [`MAX_DIM`] elements, by name.
fn small_group(name: &str) -> Result<GroupoidData, CliError> {
    if name == "klein" {
        return Ok(GroupoidData::dihedral(2));
    }
    match name.strip_prefix('z').and_then(|k| k.parse::<usize>().ok()) {
        Some(k) if (1..=MAX_DIM).contains(&k) => Ok(GroupoidData::cyclic(k)),
        Some(k) => Err(oob(format!("z{k} has {k} elements, the bound is {MAX_DIM}"))),
        None => Err(CliError::Schema(format!("unknown group {name:?}; expected z1..z{MAX_DIM} or klein"))),
    }
}

fn groupoid(name: &str, n: Option<usize>) -> Result<(String, GroupoidData), CliError> {
    match name {
        "codiscrete" => {
            let n = size(n, 2, "size")?;
            Ok((format!("codiscrete{n}"), GroupoidData::codiscrete(n)))
        }
        "s3" if n.is_none() => Ok(("s3".into(), GroupoidData::dihedral(3))),
        _ if n.is_some() => Err(CliError::Schema("--size only applies to the codiscrete groupoid".into())),
        _ => Ok((name.into(), small_group(name)?)),
    }
}

/// Generates the named structure; the first component is a file stem.
pub fn generate(name: DemoName, p: &DemoParams) -> Result<(String, StructureFile), CliError> {
    let trivial = BackendSpec { kind: BackendKind::Trivial, p: None };
    let file = |backend: BackendSpec, structure: Structure| StructureFile {
        schema_version: SCHEMA_VERSION,
        backend,
        structure,
    };
    match name {
        DemoName::X2 => {
            unused("x2", &[("group", p.group.is_some()), ("p", p.p.is_some()), ("max-n", p.max_n.is_some())])?;
            let n = size(p.size, 2, "size")?;
            let x = X2::new(n);
            let s = span_hopf(&Encoder::new(TrivialBackend), &x.bimonoid(), &x.antipode())?;
            Ok((format!("x2-hopf-{n}"), file(trivial, Structure::Hopf(s))))
        }
        DemoName::Groupoid => {
            unused("groupoid", &[("p", p.p.is_some()), ("max-n", p.max_n.is_some())])?;
            let (label, g) = groupoid(p.group.as_deref().unwrap_or("codiscrete"), p.size)?;
            let s = span_hopf(&Encoder::new(TrivialBackend), &g.bimonoid(), &g.antipode())?;
            Ok((format!("groupoid-hopf-{label}"), file(trivial, Structure::Hopf(s))))
        }
        DemoName::GroupHopf => {
            unused("group-hopf", &[("size", p.size.is_some()), ("max-n", p.max_n.is_some())])?;
            let label = p.group.as_deref().unwrap_or("z2");
            let q = prime(p.p, 3)?;
            let v = MatBackend::fp(q);
            let h = small_group(label)?.linear_hopf_vcat(&v);
            let backend = BackendSpec { kind: BackendKind::Mat, p: Some(q) };
            Ok((format!("group-hopf-{label}-p{q}"), file(backend, Structure::Hopfcat(vcat(&Encoder::new(v), &h)))))
        }
        DemoName::Mat => {
            unused("mat", &[("size", p.size.is_some()), ("group", p.group.is_some())])?;
            let q = prime(p.p, 2)?;
            let n = size(p.max_n, 2, "max-n")?;
            let c = mat_frobenius_example(q, n);
            let backend = BackendSpec { kind: BackendKind::Mat, p: Some(q) };
            let f = frobcat(&Encoder::new(MatBackend::fp(q)), &c);
            Ok((format!("mat-frobenius-p{q}-n{n}"), file(backend, Structure::Frobcat(f))))
        }
    }
}

/// A bimonoid with antipode in file form, every 2-cell moved onto the
/// boundaries the checker computes.
pub fn span_hopf<B: Codec>(
    en: &Encoder<B>,
    bi: &OplaxBimonoidData<B>,
    atp: &AntipodeData<B>,
) -> Result<SpanBimonoid, CliError> {
    let mut s = span_bimonoid(en, bi)?;
    let [(left, unit), (right, _)] = antipode_bounds(&en.e, bi, &atp.s).map_err(core_err)?;
    s.antipode = Some(AntipodeFile {
        s: en.cell(&atp.s),
        tau1: Some(en.map2("tau1", &atp.tau1, &left, &unit)?),
        tau2: Some(en.map2("tau2", &atp.tau2, &right, &unit)?),
    });
    Ok(s)
}

pub fn span_bimonoid<B: Codec>(en: &Encoder<B>, bi: &OplaxBimonoidData<B>) -> Result<SpanBimonoid, CliError> {
    let [b, b0, x, x0] = structure_boundaries(&en.e, &bi.monoid, &bi.comonoid).map_err(core_err)?;
    Ok(SpanBimonoid {
        carrier: en.fam(&bi.monoid.carrier),
        mlt: en.cell(&bi.monoid.mlt),
        uni: en.cell(&bi.monoid.uni),
        lcm: en.cell(&bi.comonoid.lcm),
        lcu: en.cell(&bi.comonoid.lcu),
        theta: Some(en.map2("theta", &bi.theta, &b.0, &b.1)?),
        theta0: Some(en.map2("theta0", &bi.theta0, &b0.0, &b0.1)?),
        chi: Some(en.map2("chi", &bi.chi, &x.0, &x.1)?),
        chi0: Some(en.map2("chi0", &bi.chi0, &x0.0, &x0.1)?),
        antipode: None,
    })
}

pub fn vcat<B: Codec>(en: &Encoder<B>, h: &HopfVCat<B>) -> VCatFile {
    VCatFile {
        objects: h.objects.size(),
        homs: h.homs.iter().map(|o| en.e.v.obj_out(o)).collect(),
        m: en.mors(&h.m),
        u: en.mors(&h.u),
        delta: en.mors(&h.delta),
        eps: en.mors(&h.eps),
        s: h.s.as_ref().map(|s| en.mors(s)),
    }
}

pub fn frobcat<B: Codec>(en: &Encoder<B>, c: &FrobVCat<B>) -> FrobCatFile {
    FrobCatFile {
        objects: c.objects.size(),
        homs: c.homs.iter().map(|o| en.e.v.obj_out(o)).collect(),
        m: en.mors(&c.m),
        u: en.mors(&c.u),
        comlt: en.mors(&c.comlt),
        couni: en.mors(&c.couni),
    }
}

pub fn span_frobenius<B: Codec>(en: &Encoder<B>, d: &FrobeniusData<B>) -> SpanFrobenius {
    SpanFrobenius {
        carrier: en.fam(&d.monoid.carrier),
        mlt: en.cell(&d.monoid.mlt),
        uni: en.cell(&d.monoid.uni),
        lcm: en.cell(&d.comonoid.lcm),
        lcu: en.cell(&d.comonoid.lcu),
    }
}

pub fn module_file<B: Codec>(
    en: &Encoder<B>,
    x: &OplaxModuleData<B>,
    over: &MonoidData<B>,
) -> Result<ModuleFile, CliError> {
    let [b, b0] = module_bounds(&en.e, over, &x.carrier, &x.rho).map_err(core_err)?;
    Ok(ModuleFile {
        carrier: en.fam(&over.carrier),
        mlt: en.cell(&over.mlt),
        uni: en.cell(&over.uni),
        module: en.fam(&x.carrier),
        rho: en.cell(&x.rho),
        xi: Some(en.map2("xi", &x.xi, &b.0, &b.1)?),
        xi0: Some(en.map2("xi0", &x.xi0, &b0.0, &b0.1)?),
    })
}

/// Comparison cells that are absent are left for the checker to infer.
pub fn morphism_file<B: Codec>(
    en: &Encoder<B>,
    a: &OplaxBimonoidData<B>,
    b: &OplaxBimonoidData<B>,
    d: &OplaxMorphismData<B>,
) -> Result<MorphismFile, CliError> {
    let bounds = morphism_bounds(&en.e, a, b, &d.f).map_err(core_err)?;
    let cells = [("phi", &d.phi), ("phi0", &d.phi0), ("psi", &d.psi), ("psi0", &d.psi0)];
    let mut maps = Vec::new();
    for ((name, c), (src, tgt)) in cells.into_iter().zip(&bounds) {
        maps.push(c.as_ref().map(|c| en.map2(name, c, src, tgt)).transpose()?);
    }
    let [phi, phi0, psi, psi0]: [Option<Vec<usize>>; 4] = maps.try_into().expect("four cells");
    Ok(MorphismFile {
        source: span_bimonoid(en, a)?,
        target: span_bimonoid(en, b)?,
        f: en.cell(&d.f),
        phi,
        phi0,
        psi,
        psi0,
    })
}
