//! Every structure kind through the file format: encode a library
//! structure, check the bytes, and compare with the direct checker.

use oplax_cli::app::{check_bytes, parse_structure, structure_json};
use oplax_cli::codec::Encoder;
use oplax_cli::demo::{frobcat, module_file, morphism_file, span_bimonoid, span_frobenius, span_hopf, vcat};
use oplax_cli::report::{ReportFile, Status};
use oplax_cli::schema::{BackendKind, BackendSpec, Structure, StructureFile, SCHEMA_VERSION};
use oplax_cli::CliError;
use oplax_core::hopfcat::groupoid::GroupoidData;
use oplax_core::hopfcat::x2::X2;
use oplax_core::hopfcat::{check_hopf_vcat, mat_frobenius_example, plain};
use oplax_core::structures::{check_oplax_hopf, identity_morphism, regular_module, unit_module};
use oplax_core::vbackend::{FinSetBackend, MatBackend, TrivialBackend, VBackend};

const BOUND: usize = 1 << 16;

fn file(kind: BackendKind, p: Option<u32>, structure: Structure) -> StructureFile {
    StructureFile { schema_version: SCHEMA_VERSION, backend: BackendSpec { kind, p }, structure }
}

fn trivial(structure: Structure) -> StructureFile {
    file(BackendKind::Trivial, None, structure)
}

fn run(f: &StructureFile) -> ReportFile {
    check_bytes(structure_json(f).as_bytes(), BOUND).unwrap()
}

fn ids(r: &ReportFile, status: Status) -> Vec<&str> {
    r.records.iter().filter(|x| x.status == status).map(|x| x.id.as_str()).collect()
}

#[test]
fn files_round_trip_through_json() {
    let x = X2::new(2);
    let f = trivial(Structure::Hopf(span_hopf(&Encoder::new(TrivialBackend), &x.bimonoid(), &x.antipode()).unwrap()));
    assert_eq!(parse_structure(structure_json(&f).as_bytes()).unwrap(), f);
}

#[test]
fn x2_hopf_matches_the_direct_checker() {
    for n in 1..=3 {
        let x = X2::new(n);
        let (bi, atp) = (x.bimonoid(), x.antipode());
        let direct = check_oplax_hopf(&plain(), &bi, &atp).unwrap();
        let r = run(&trivial(Structure::Hopf(span_hopf(&Encoder::new(TrivialBackend), &bi, &atp).unwrap())));
        assert_eq!(r.summary.status, Status::Pass, "n = {n}");
        let direct_ids: Vec<&str> = direct.records.iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids(&r, Status::Pass), direct_ids);
    }
}

#[test]
fn omitted_cells_are_inferred() {
    let x = X2::new(2);
    let mut s = span_hopf(&Encoder::new(TrivialBackend), &x.bimonoid(), &x.antipode()).unwrap();
    let full = run(&trivial(Structure::Hopf(s.clone())));
    (s.theta, s.theta0, s.chi, s.chi0) = (None, None, None, None);
    let a = s.antipode.as_mut().unwrap();
    (a.tau1, a.tau2) = (None, None);
    assert_eq!(run(&trivial(Structure::Hopf(s))).records, full.records);
}

#[test]
fn cells_that_cannot_be_inferred_are_reported() {
    // With s collapsing X² onto (0, 0), 1⊙s relates (1, 0) to (1, 0), which
    // ε;j does not.
    let x = X2::new(2);
    let mut s = span_hopf(&Encoder::new(TrivialBackend), &x.bimonoid(), &x.antipode()).unwrap();
    let a = s.antipode.as_mut().unwrap();
    a.s.right = vec![0, 0, 0, 0];
    (a.tau1, a.tau2) = (None, None);
    let r = run(&trivial(Structure::Hopf(s)));
    assert_eq!(r.summary.status, Status::Fail);
    assert_eq!(ids(&r, Status::Fail), ["infer.tau1", "infer.tau2"]);
}

#[test]
fn bimonoid_kind_refuses_an_antipode() {
    let x = X2::new(2);
    let s = span_hopf(&Encoder::new(TrivialBackend), &x.bimonoid(), &x.antipode()).unwrap();
    let bytes = structure_json(&trivial(Structure::Bimonoid(s)));
    assert!(matches!(check_bytes(bytes.as_bytes(), BOUND), Err(CliError::Schema(_))));
    let b = span_bimonoid(&Encoder::new(TrivialBackend), &x.bimonoid()).unwrap();
    let r = run(&trivial(Structure::Bimonoid(b)));
    assert_eq!((r.summary.total, r.summary.status), (16, Status::Pass));
}

#[test]
fn groupoid_structures_pass_as_files() {
    let en = Encoder::new(TrivialBackend);
    for g in [GroupoidData::dihedral(3), GroupoidData::sum(&GroupoidData::codiscrete(2), &GroupoidData::cyclic(2))] {
        let r = run(&trivial(Structure::Hopf(span_hopf(&en, &g.bimonoid(), &g.antipode()).unwrap())));
        assert_eq!(r.summary.status, Status::Pass);
        let r = run(&trivial(Structure::Frobenius(span_frobenius(&en, &g.frobenius()))));
        assert_eq!((r.summary.status, r.summary.total), (Status::Pass, 8));
    }
}

#[test]
fn modules_pass_as_files() {
    let (e, x) = (plain(), X2::new(2));
    let bi = x.bimonoid();
    let en = Encoder::new(TrivialBackend);
    for m in [regular_module(&e, &bi.monoid).unwrap(), unit_module(&e, &bi).unwrap()] {
        let r = run(&trivial(Structure::Module(module_file(&en, &m, &bi.monoid).unwrap())));
        assert_eq!(ids(&r, Status::Pass), ["mod1", "mod2"]);
    }
}

#[test]
fn identity_morphism_passes_and_a_broken_one_fails() {
    let (e, x) = (plain(), X2::new(2));
    let bi = x.bimonoid();
    let id = identity_morphism(&e, Some(&bi.monoid), Some(&bi.comonoid)).unwrap();
    let en = Encoder::new(TrivialBackend);
    let mut f = morphism_file(&en, &bi, &bi, &id).unwrap();
    let r = run(&trivial(Structure::Morphism(f.clone())));
    assert_eq!(r.summary.status, Status::Pass, "{r}");
    let phi0 = f.phi0.as_mut().unwrap();
    phi0[0] = 1;
    let r = run(&trivial(Structure::Morphism(f)));
    assert!(ids(&r, Status::Fail).contains(&"monoid.phi_unit_left"), "{r}");
}

#[test]
fn set_and_linear_hopf_categories_pass_as_files() {
    let g = GroupoidData::dihedral(3);
    let r = run(&file(
        BackendKind::Finset,
        None,
        Structure::Hopfcat(vcat(&Encoder::new(FinSetBackend), &g.set_hopf_vcat())),
    ));
    assert_eq!(r.summary.status, Status::Pass);
    let v = MatBackend::fp(2);
    let h = GroupoidData::cyclic(3).linear_hopf_vcat(&v);
    let direct = check_hopf_vcat(&v, &h).unwrap();
    let mut vf = vcat(&Encoder::new(v), &h);
    let r = run(&file(BackendKind::Mat, Some(2), Structure::Hopfcat(vf.clone())));
    assert_eq!(r.summary.total, direct.records.len());
    assert_eq!(r.summary.status, Status::Pass);
    vf.s = None;
    let semi = run(&file(BackendKind::Mat, Some(2), Structure::Hopfcat(vf.clone())));
    assert_eq!(semi.summary.total, direct.records.len() - 2);
    // s = identity on every hom.
    vf.s = Some(h.homs.iter().map(|d| Encoder::new(v).mors(&[v.id(d)])[0].clone()).collect());
    let r = run(&file(BackendKind::Mat, Some(2), Structure::Hopfcat(vf)));
    assert_eq!(ids(&r, Status::Fail), ["antipode_left", "antipode_right"]);
}

#[test]
fn matrix_frobenius_category_passes_as_a_file() {
    let r = run(&file(
        BackendKind::Mat,
        Some(2),
        Structure::Frobcat(frobcat(&Encoder::new(MatBackend::fp(2)), &mat_frobenius_example(2, 3))),
    ));
    assert_eq!((r.summary.status, r.summary.total), (Status::Pass, 8));
}

#[test]
fn malformed_inputs_are_input_errors() {
    let x = X2::new(2);
    let good =
        trivial(Structure::Hopf(span_hopf(&Encoder::new(TrivialBackend), &x.bimonoid(), &x.antipode()).unwrap()));
    let json = structure_json(&good);
    let cases: Vec<(String, fn(&CliError) -> bool)> = vec![
        (json.replacen("\"schema_version\": 1", "\"schema_version\": 7", 1), |e| matches!(e, CliError::Schema(_))),
        (json.replacen("\"kind\": \"hopf\"", "\"kind\": \"quantale\"", 1), |e| matches!(e, CliError::Schema(_))),
        (json.replacen("\"kind\": \"trivial\"", "\"kind\": \"mat\"", 1), |e| matches!(e, CliError::Schema(_))),
        (json.replacen("\"kind\": \"trivial\"", "\"kind\": \"mat\", \"p\": 4", 1), |e| {
            matches!(e, CliError::Schema(_))
        }),
        (json[..json.len() / 2].to_string(), |e| matches!(e, CliError::Parse(_))),
        (json.replacen("\"schema_version\"", "\"extra\": 0, \"schema_version\"", 1), |e| {
            matches!(e, CliError::Schema(_))
        }),
    ];
    for (bytes, ok) in cases {
        let err = check_bytes(bytes.as_bytes(), BOUND).unwrap_err();
        assert!(ok(&err), "{err}");
    }
    assert!(matches!(check_bytes(json.as_bytes(), 4), Err(CliError::OutOfBounds(_))));
}

#[test]
fn matrix_entries_must_be_reduced() {
    let v = MatBackend::fp(3);
    let mut f = vcat(&Encoder::new(v), &GroupoidData::cyclic(2).linear_hopf_vcat(&v));
    f.m[0][0] = 3;
    let bytes = structure_json(&file(BackendKind::Mat, Some(3), Structure::Hopfcat(f)));
    let err = check_bytes(bytes.as_bytes(), BOUND).unwrap_err();
    assert!(err.to_string().contains("m[0]"), "{err}");
}

#[test]
fn backend_names_in_reports() {
    let v = MatBackend::fp(3);
    let f = vcat(&Encoder::new(v), &GroupoidData::cyclic(2).linear_hopf_vcat(&v));
    let r = run(&file(BackendKind::Mat, Some(3), Structure::Hopfcat(f)));
    assert_eq!((r.kind.as_str(), r.backend.as_str()), ("hopfcat", v.name().as_str()));
}
