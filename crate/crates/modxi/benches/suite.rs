use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use modxi::identities::{run_suite, CheckParams, IdentityId};
use modxi::parallel;
use std::hint::black_box;

fn grid() -> Vec<(IdentityId, CheckParams)> {
    let ids = [
        IdentityId::KoshLambda,
        IdentityId::LambdaZ,
        IdentityId::PhiZ,
        IdentityId::PhiZ0,
        IdentityId::Ferrar,
        IdentityId::FerrarZ,
        IdentityId::FerrarZ0,
        IdentityId::OmegaLaplace,
        IdentityId::RamanujanGauss,
        IdentityId::HardyPsi,
    ];
    ids.iter().map(|&id| (id, CheckParams::defaults_for(id))).collect()
}

fn suite(c: &mut Criterion) {
    let g = grid();
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    let modes: &[(&str, bool)] =
        if parallel::enabled() { &[("sequential", false), ("parallel", true)] } else { &[("sequential", false)] };
    for &(name, par) in modes {
        group.bench_with_input(BenchmarkId::new(name, g.len()), &par, |b, &par| {
            b.iter(|| {
                let grid: Vec<_> = g.iter().map(|(id, p)| (*id, CheckParams { parallel: par, ..*p })).collect();
                black_box(run_suite(&grid, par))
            })
        });
    }
    group.finish();
}

criterion_group!(benches, suite);
criterion_main!(benches);
