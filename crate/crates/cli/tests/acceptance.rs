//! End-to-end acceptance criteria. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Stdio};
use std::time::Instant;

use oplax_cli::app::check_bytes;
use oplax_cli::report::Status;
use oplax_core::finset::{FinFn, FinSet};
use oplax_core::hopfcat::groupoid::GroupoidData;
use oplax_core::hopfcat::x2::X2;
use oplax_core::hopfcat::{
    check_frobenius_vcat, check_hopf_vcat, frobcat_to_spanv, hopfcat_to_spanv, mat_frobenius_example, plain,
    plain_cell, spanv_to_frobcat, spanv_to_hopfcat,
};
use oplax_core::span::{spans_isomorphic, Span};
use oplax_core::spanv::{SpanV, VCell1, VFam};
use oplax_core::structures::{
    check_frobenius, check_fusion_inverse, check_module_morphism, check_oplax_bimonoid, check_oplax_hopf,
    check_oplax_module, convolution_context, convolution_to_endo, endo_to_convolution, frobenius_witness, fusion_cell,
    infer_antipode, infer_unique_structure_cells, is_strict_morphism, morita_uniqueness_iso, regular_module,
    structure_boundaries, tensor_module_morphisms, tensor_modules, unit_module, Convolution, FrobeniusData,
    ModuleMorphismData, OplaxBimonoidData,
};
use oplax_core::vbackend::{left_kan_along_function, FinSetBackend, MatBackend, TrivialBackend, VBackend};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type T = TrivialBackend;
type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<V, E: std::fmt::Debug>(r: Result<V, E>, what: &str) -> Result<V, String> {
    r.map_err(|e| format!("{what}: {e:?}"))
}

fn x2_bimonoid_laws() -> Outcome {
    let e = plain();
    for n in 1..=3 {
        let x = X2::new(n);
        let d = x.bimonoid();
        let r = ok(check_oplax_bimonoid(&e, &d), "check")?;
        ensure!(r.passed() && r.records.len() == 16, "|X| = {n}\n{r}");
        let cells = ok(infer_unique_structure_cells(&e, &d.monoid, &d.comonoid), "infer")?
            .ok_or(format!("|X| = {n}: structure cells not inferred"))?;
        let bounds = ok(structure_boundaries(&e, &d.monoid, &d.comonoid), "boundaries")?;
        let given = [&d.theta, &d.theta0, &d.chi, &d.chi0];
        let inferred = [&cells.theta, &cells.theta0, &cells.chi, &cells.chi0];
        for ((g, i), (src, tgt)) in given.into_iter().zip(inferred).zip(bounds) {
            let moved = ok(e.coerce(g, &src, &tgt), "coerce")?;
            ensure!(moved.u == i.u, "|X| = {n}: explicit and inferred cells differ");
        }
    }
    Ok(())
}

fn x2_antipode() -> Outcome {
    let e = plain();
    for n in 1..=3 {
        let x = X2::new(n);
        let bi = x.bimonoid();
        let atp = x.antipode();
        let r = ok(check_oplax_hopf(&e, &bi, &atp), "check")?;
        ensure!(r.passed() && r.records.len() == 25, "|X| = {n}\n{r}");
        for id in ["antipode.firm_p", "antipode.firm_q"] {
            ensure!(r.get(id).is_some_and(|a| a.passed), "|X| = {n}: {id}");
        }
        for (tau, last) in [(&atp.tau1, 0), (&atp.tau2, 1)] {
            for k in 0..tau.src.size() {
                let ab = x.dec(2, k);
                let img = x.dec(3, tau.u.apply(k));
                ensure!(img == vec![ab[0], ab[1], ab[last]], "|X| = {n}: τ sends {ab:?} to {img:?}");
            }
        }
        let got = ok(infer_antipode(&e, &bi, &atp.s), "infer")?.ok_or(format!("|X| = {n}: no inferred antipode"))?;
        ensure!(ok(check_oplax_hopf(&e, &bi, &got), "check")?.passed(), "|X| = {n}: inferred antipode fails");
        for (g, want) in [(&got.tau1, &atp.tau1), (&got.tau2, &atp.tau2)] {
            let moved = ok(e.coerce(g, &want.src, &want.tgt), "coerce")?;
            ensure!(moved.u == want.u, "|X| = {n}: inferred τ differs from the explicit one");
        }
    }
    Ok(())
}

fn x2_fusion() -> Outcome {
    let e = plain();
    for n in 1..=3 {
        let x = X2::new(n);
        let bi = x.bimonoid();
        let c = ok(fusion_cell(&e, &bi), "fusion")?;
        ensure!(ok(spans_isomorphic(&c.span, &x.fusion_template()), "iso")?.is_some(), "|X| = {n}: not the template");
        let invertible = c.span.f().is_bijective() && c.span.g().is_bijective();
        ensure!(invertible == (n == 1), "|X| = {n}: fusion invertible = {invertible}");
        let r = ok(check_fusion_inverse(&e, &bi, &plain_cell(c.span.reverse())), "inverse")?;
        ensure!(r.passed(), "|X| = {n}: reversed fusion\n{r}");
    }
    Ok(())
}

fn x2_frobenius() -> Outcome {
    let e = plain();
    for n in 1..=3 {
        let x = X2::new(n);
        let (monoid, comonoid) = x.trivial_on_x();
        let r = ok(check_frobenius(&e, &FrobeniusData { monoid, comonoid }), "trivial")?;
        ensure!(r.passed(), "|X| = {n}: trivial\n{r}");
        let d = FrobeniusData { monoid: x.groupoid_monoid(), comonoid: x.groupoid_comonoid() };
        let r = ok(check_frobenius(&e, &d), "groupoid")?;
        ensure!(r.passed(), "|X| = {n}: groupoid\n{r}");
        let [left, right] = ok(frobenius_witness(&e, &d), "witness")?.ok_or("no witness")?;
        let mid = x.cell(x.frobenius_middle());
        for w in [&left, &right] {
            ensure!(w.u.is_bijective(), "|X| = {n}: witness not invertible");
            let a = ok(e.canonical_iso(&mid, &w.src), "iso")?.ok_or("source is not the middle template")?;
            let b = ok(e.canonical_iso(&mid, &w.tgt), "iso")?.ok_or("target is not the middle template")?;
            for k in 0..mid.size() {
                ensure!(w.u.apply(a.apply(k)) == b.apply(k), "|X| = {n}: witness moves {:?}", mid.element(k));
            }
        }
    }
    Ok(())
}

fn bridge() -> Outcome {
    let mut cases: Vec<(String, Box<dyn Fn() -> Outcome>)> = Vec::new();
    for k in 1..=3 {
        cases.push((
            format!("codiscrete{k}"),
            Box::new(move || hopf_bridge(&FinSetBackend, &GroupoidData::codiscrete(k).set_hopf_vcat())),
        ));
    }
    for p in [2, 3] {
        for g in [2, 3] {
            let v = MatBackend::fp(p);
            cases.push((
                format!("F{p}[Z/{g}]"),
                Box::new(move || hopf_bridge(&v, &GroupoidData::cyclic(g).linear_hopf_vcat(&v))),
            ));
        }
        cases.push((format!("Mat(F{p}, 3)"), Box::new(move || frob_bridge(p, 3))));
    }
    for (name, run) in cases {
        run().map_err(|m| format!("{name}: {m}"))?;
    }
    Ok(())
}

fn hopf_bridge<B: VBackend>(v: &B, h: &oplax_core::hopfcat::HopfVCat<B>) -> Outcome {
    let direct = ok(check_hopf_vcat(v, h), "direct")?;
    ensure!(direct.passed(), "direct\n{direct}");
    let (bi, atp) = ok(hopfcat_to_spanv(v, h), "to Span")?;
    let atp = atp.ok_or("no antipode")?;
    let r = ok(check_oplax_hopf(&SpanV::new(v.clone()), &bi, &atp), "generic")?;
    ensure!(r.passed(), "generic\n{r}");
    ensure!(ok(spanv_to_hopfcat(&bi, Some(&atp)), "back")? == *h, "round trip is not the identity");
    Ok(())
}

fn frob_bridge(p: u32, max_n: usize) -> Outcome {
    let v = MatBackend::fp(p);
    let c = mat_frobenius_example(p, max_n);
    let direct = ok(check_frobenius_vcat(&v, &c), "direct")?;
    ensure!(direct.passed(), "direct\n{direct}");
    let d = ok(frobcat_to_spanv(&v, &c), "to Span")?;
    let r = ok(check_frobenius(&SpanV::new(v), &d), "generic")?;
    ensure!(r.passed(), "generic\n{r}");
    ensure!(ok(spanv_to_frobcat(&d), "back")? == c, "round trip is not the identity");
    Ok(())
}

/// `s` with its apex permuted by `k ↦ k + 1 mod |apex|`.
fn relabel(s: &VCell1<T>) -> VCell1<T> {
    let n = s.size();
    let c = FinSet::atom(n);
    let f = FinFn::from_fn(c.clone(), s.span.left().clone(), |k| s.span.f().apply((k + 1) % n));
    let g = FinFn::from_fn(c, s.span.right().clone(), |k| s.span.g().apply((k + 1) % n));
    plain_cell(Span::from_legs(f, g).expect("legs share the apex"))
}

fn morita_iso() -> Outcome {
    let e = plain();
    for n in 1..=2 {
        let x = X2::new(n);
        let bi = x.bimonoid();
        let conv = Convolution::new(&e, &bi.comonoid, &bi.monoid);
        let ctx = convolution_context(&e, &bi, &x.antipode());
        let atp2 = ok(infer_antipode(&e, &bi, &relabel(&x.antipode().s)), "infer")?
            .ok_or("relabelled copy is not an antipode")?;
        let ctx2 = convolution_context(&e, &bi, &atp2);
        let iso = ok(morita_uniqueness_iso(&conv, &ctx, &ctx2), "iso")?;
        ensure!(iso.report.passed(), "|X| = {n}\n{}", iso.report);
        let there = ok(e.vcompose(&iso.phi, &iso.psi), "φ;ψ")?;
        let back = ok(e.vcompose(&iso.psi, &iso.phi), "ψ;φ")?;
        ensure!(ok(e.cells2_equal(&there, &e.identity_2cell(&iso.phi.src)), "cmp")?.is_none(), "|X| = {n}: ψ∘φ ≠ 1");
        ensure!(ok(e.cells2_equal(&back, &e.identity_2cell(&iso.psi.src)), "cmp")?.is_none(), "|X| = {n}: φ∘ψ ≠ 1");
    }
    Ok(())
}

/// A random endo-1-cell on `m` with at most three apex elements.
fn random_endo<B: VBackend>(
    e: &SpanV<B>,
    m: &VFam<B::Obj>,
    rng: &mut ChaCha8Rng,
    comp: &mut impl FnMut(&B::Obj, &B::Obj, &mut ChaCha8Rng) -> B::Mor,
) -> VCell1<B> {
    let k = rng.gen_range(0..4);
    let size = m.index.size();
    let c = FinSet::atom(k);
    let fs: Vec<usize> = (0..k).map(|_| rng.gen_range(0..size)).collect();
    let gs: Vec<usize> = (0..k).map(|_| rng.gen_range(0..size)).collect();
    let alpha = fs.iter().zip(&gs).map(|(&a, &b)| comp(&m.objs[a], &m.objs[b], rng)).collect();
    let f = FinFn::new(c.clone(), m.index.clone(), fs).expect("in range");
    let g = FinFn::new(c, m.index.clone(), gs).expect("in range");
    e.cell(m.clone(), m.clone(), Span::from_legs(f, g).expect("legs share the apex"), alpha).expect("well-shaped")
}

fn translation_samples<B: VBackend>(
    e: &SpanV<B>,
    bi: &OplaxBimonoidData<B>,
    rng: &mut ChaCha8Rng,
    mut comp: impl FnMut(&B::Obj, &B::Obj, &mut ChaCha8Rng) -> B::Mor,
) -> Outcome {
    let conv = Convolution::new(e, &bi.comonoid, &bi.monoid);
    let to = |f: &VCell1<B>| ok(convolution_to_endo(e, bi, f), "translate");
    let one = e.identity_cell(&bi.monoid.carrier);
    ensure!(
        ok(e.cells_isomorphic(&to(&one)?, &ok(fusion_cell(e, bi), "fusion")?), "iso")?.is_some(),
        "F(1) is not the fusion cell"
    );
    for i in 0..100 {
        let f = random_endo(e, &bi.monoid.carrier, rng, &mut comp);
        let g = random_endo(e, &bi.monoid.carrier, rng, &mut comp);
        let lhs = to(&ok(conv.tensor(&f, &g), "convolve")?)?;
        let rhs = ok(e.compose(&to(&f)?, &to(&g)?), "compose")?;
        ensure!(ok(e.cells_isomorphic(&lhs, &rhs), "iso")?.is_some(), "sample {i}: F(f⊙g) ≇ F(f);F(g)");
        let back = ok(endo_to_convolution(e, bi, &to(&f)?), "untranslate")?;
        ensure!(ok(e.cells_isomorphic(&back, &f), "iso")?.is_some(), "sample {i}: G(F(f)) ≇ f");
    }
    Ok(())
}

fn translation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    translation_samples(&plain(), &X2::new(2).bimonoid(), &mut rng, |_, _, _| ()).map_err(|m| format!("X²: {m}"))?;
    let v = MatBackend::fp(3);
    let (bi, _) = ok(hopfcat_to_spanv(&v, &GroupoidData::cyclic(2).linear_hopf_vcat(&v)), "to Span")?;
    translation_samples(&SpanV::new(v), &bi, &mut rng, |&r, &c, rng| {
        let data: Vec<i64> = (0..r * c).map(|_| rng.gen_range(0..3)).collect();
        v.mat(r, c, &data).expect("sized")
    })
    .map_err(|m| format!("F3[Z/2]: {m}"))
}

fn modules() -> Outcome {
    let e = plain();
    for n in 1..=2 {
        let bi = X2::new(n).bimonoid();
        let reg = ok(regular_module(&e, &bi.monoid), "regular")?;
        let unit = ok(unit_module(&e, &bi), "unit")?;
        let ten = ok(tensor_modules(&e, &bi, &reg, &reg), "tensor")?;
        for (name, m) in [("regular", &reg), ("unit", &unit), ("tensor", &ten)] {
            let r = ok(check_oplax_module(&e, m, &bi.monoid), name)?;
            ensure!(r.passed(), "|X| = {n}: {name}\n{r}");
        }
        let id = e.identity_cell(&reg.carrier);
        let src = ok(e.compose(&reg.rho, &id), "compose")?;
        let tgt = ok(e.compose(&e.tensor(&id, &e.identity_cell(&bi.monoid.carrier)), &reg.rho), "compose")?;
        let phi = ok(e.cells_isomorphic(&src, &tgt), "iso")?.ok_or("identity is not a morphism")?;
        let m = ModuleMorphismData { source: reg.clone(), target: reg.clone(), f: id, phi };
        ensure!(ok(check_module_morphism(&e, &bi.monoid, &m), "morphism")?.passed(), "|X| = {n}: identity morphism");
        ensure!(ok(is_strict_morphism(&e, &bi.monoid, &m), "strict")?.is_none(), "|X| = {n}: identity is not strict");
        let t = ok(tensor_module_morphisms(&e, &bi, &m, &m), "tensor morphism")?;
        let r = ok(check_module_morphism(&e, &bi.monoid, &t), "morphism")?;
        ensure!(r.passed(), "|X| = {n}: tensor morphism\n{r}");
        ensure!(ok(is_strict_morphism(&e, &bi.monoid, &t), "strict")?.is_none(), "|X| = {n}: tensor is not strict");
    }
    Ok(())
}

/// Every function `S → Y` for `|S|, |Y| ≤ 5`, with random dimensions.
fn kan_dimensions() -> Outcome {
    let v = MatBackend::fp(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in 0..=5usize {
        for y in 0..=5usize {
            if y == 0 && s > 0 {
                continue;
            }
            for code in 0..y.pow(s as u32) {
                let table: Vec<usize> = (0..s).map(|i| code / y.pow(i as u32) % y).collect();
                let g = FinFn::new(FinSet::atom(s), FinSet::atom(y), table.clone()).expect("in range");
                let dims: Vec<usize> = (0..s).map(|_| rng.gen_range(0..=4)).collect();
                let (out, inj) = ok(left_kan_along_function(&v, &g, &dims), "kan")?;
                ensure!(out.len() == y && inj.len() == s, "shape for {table:?}");
                for (t, &got) in out.iter().enumerate() {
                    let fiber: Vec<usize> = (0..s).filter(|&i| table[i] == t).collect();
                    let want: usize = fiber.iter().map(|&i| dims[i]).sum();
                    ensure!(got == want, "{table:?} with {dims:?}: dimension {got} at {t}, want {want}");
                    let mut row = 0;
                    for &i in &fiber {
                        let m = &inj[i];
                        ensure!(m.rows() == dims[i] && m.cols() == want, "{table:?}: injection shape at {i}");
                        for a in 0..dims[i] {
                            for b in 0..want {
                                ensure!(
                                    m.get(a, b) == u32::from(row + a == b),
                                    "{table:?}: injection {i} is not a coordinate inclusion"
                                );
                            }
                        }
                        row += dims[i];
                    }
                }
            }
        }
    }
    Ok(())
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

/// Single-point edits of the shipped X² Hopf file: `(path, index, value)`.
const MUTATIONS: [(&str, usize, u64); 12] = [
    ("/structure/theta", 1, 0),
    ("/structure/theta0", 0, 1),
    ("/structure/chi", 2, 7),
    ("/structure/chi", 5, 3),
    ("/structure/mlt/right", 1, 0),
    ("/structure/mlt/left", 0, 6),
    ("/structure/uni/right", 1, 2),
    ("/structure/lcm/right", 0, 5),
    ("/structure/lcm/left", 1, 2),
    ("/structure/lcu/left", 1, 2),
    ("/structure/antipode/tau1", 1, 3),
    ("/structure/antipode/tau2", 2, 5),
];

fn mutations() -> Outcome {
    let bytes = ok(std::fs::read(fixture("x2-hopf")), "read")?;
    let base: serde_json::Value = ok(serde_json::from_slice(&bytes), "parse")?;
    ensure!(ok(check_bytes(&bytes, 1 << 16), "check")?.summary.status == Status::Pass, "unmutated file fails");
    for (path, i, value) in MUTATIONS {
        let mut m = base.clone();
        let slot = m.pointer_mut(path).and_then(|a| a.get_mut(i)).ok_or(format!("no {path}[{i}]"))?;
        ensure!(slot.as_u64() != Some(value), "{path}[{i}] already holds {value}");
        *slot = value.into();
        let r = ok(check_bytes(&ok(serde_json::to_vec(&m), "serialize")?, 1 << 16), &format!("{path}[{i}]"))?;
        let witness = r
            .records
            .iter()
            .filter(|a| a.status == Status::Fail)
            .find_map(|a| a.counterexample.as_ref().filter(|c| !c.tuple.is_empty()));
        ensure!(r.summary.status == Status::Fail, "{path}[{i}] = {value} goes undetected");
        ensure!(witness.is_some(), "{path}[{i}] = {value} fails without a counterexample tuple");
    }
    Ok(())
}

fn golden_cli() -> Outcome {
    let dir = ok(tempfile::tempdir(), "tempdir")?;
    let cases = [
        ("x2-hopf", 0),
        ("mat-frobenius", 0),
        ("group-hopf-z2-f3", 0),
        ("x2-hopf-bad-theta0", 1),
        ("x2-hopf-bad-leg", 2),
        ("truncated", 2),
    ];
    for (name, code) in cases {
        let out = dir.path().join(format!("{name}.report.json"));
        let status = ok(
            Command::new(env!("CARGO_BIN_EXE_ohl"))
                .args(["check", "--quiet", "--report"])
                .arg(&out)
                .arg(fixture(name))
                .env_remove("OHL_MAX_APEX")
                .stderr(Stdio::null())
                .status(),
            "run ohl",
        )?;
        ensure!(status.code() == Some(code), "{name}: exit {:?}, want {code}", status.code());
        if code != 2 {
            let got = ok(std::fs::read(&out), "report")?;
            let golden =
                Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/golden").join(format!("{name}.report.json"));
            ensure!(got == ok(std::fs::read(golden), "golden")?, "{name}: report differs from the stored one");
        } else {
            ensure!(!out.exists(), "{name}: report written for unusable input");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("X² oplax bimonoid and inferred structure cells", x2_bimonoid_laws),
        ("X² antipode, τ formulas and inference", x2_antipode),
        ("fusion cell shape, non-invertibility, reversed inverse", x2_fusion),
        ("trivial and groupoid Frobenius with middle witness", x2_frobenius),
        ("Hopf and Frobenius V-category bridge", bridge),
        ("antipode uniqueness via the Morita iso", morita_iso),
        ("convolution/endomorphism translation on random cells", translation),
        ("regular, unit and tensor modules; strict tensor morphisms", modules),
        ("left Kan extension dimension law", kan_dimensions),
        ("single-point mutations are detected", mutations),
        ("CLI reports match golden files", golden_cli),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  [{:>2}] {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  [{:>2}] {name} ({ms} ms)\n      {}", i + 1, why.replace('\n', "\n      "));
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
