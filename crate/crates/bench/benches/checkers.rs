use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oplax_bench::projections;
use oplax_core::hopfcat::groupoid::GroupoidData;
use oplax_core::hopfcat::x2::X2;
use oplax_core::hopfcat::{check_frobenius_vcat, check_hopf_vcat, hopfcat_to_spanv, mat_frobenius_example, plain};
use oplax_core::span::compose_spans;
use oplax_core::structures::{check_oplax_bimonoid, check_oplax_hopf};
use oplax_core::vbackend::MatBackend;

fn span_composition(c: &mut Criterion) {
    let mut g = c.benchmark_group("compose_spans");
    for n in [4, 8, 16] {
        let s = projections(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &s, |b, s| b.iter(|| compose_spans(s, s).unwrap()));
    }
    g.finish();
}

fn x2_suites(c: &mut Criterion) {
    let e = plain();
    let mut g = c.benchmark_group("x2");
    for n in [1, 2, 3] {
        let x = X2::new(n);
        let (bi, atp) = (x.bimonoid(), x.antipode());
        g.bench_with_input(BenchmarkId::new("bimonoid", n), &bi, |b, bi| {
            b.iter(|| check_oplax_bimonoid(&e, bi).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("hopf", n), &n, |b, _| b.iter(|| check_oplax_hopf(&e, &bi, &atp).unwrap()));
    }
    g.finish();
}

fn enriched(c: &mut Criterion) {
    let mut g = c.benchmark_group("enriched");
    for p in [2, 3] {
        let v = MatBackend::fp(p);
        let h = GroupoidData::cyclic(3).linear_hopf_vcat(&v);
        g.bench_function(BenchmarkId::new("hopf_vcat_z3", p), |b| b.iter(|| check_hopf_vcat(&v, &h).unwrap()));
        g.bench_function(BenchmarkId::new("bridge_z3", p), |b| b.iter(|| hopfcat_to_spanv(&v, &h).unwrap()));
        let m = mat_frobenius_example(p, 3);
        g.bench_function(BenchmarkId::new("mat_frobenius_3", p), |b| b.iter(|| check_frobenius_vcat(&v, &m).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, span_composition, x2_suites, enriched);
criterion_main!(benches);
