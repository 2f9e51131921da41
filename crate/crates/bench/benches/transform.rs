use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ladders_bench::{level_three_inputs, multisegments};
use ladders_core::oracle::{brute_permissible, dilworth_width};
use ladders_core::{is_permissible_pair, knuth_viennot, rsk_transform, specht_rsk_verify};
use std::hint::black_box;

fn rsk(c: &mut Criterion) {
    let mut g = c.benchmark_group("rsk_transform");
    for n in [4, 6, 8] {
        let inputs = multisegments(n, 200);
        g.bench_with_input(BenchmarkId::from_parameter(n), &inputs, |b, inputs| {
            b.iter(|| {
                for m in inputs {
                    black_box(rsk_transform(m).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn width(c: &mut Criterion) {
    let inputs = multisegments(6, 200);
    c.bench_function("dilworth_width/6", |b| {
        b.iter(|| {
            for m in &inputs {
                black_box(dilworth_width(m));
            }
        })
    });
}

fn permissibility(c: &mut Criterion) {
    let pairs: Vec<_> = multisegments(6, 200)
        .into_iter()
        .filter(|m| !m.is_ladder())
        .map(|m| knuth_viennot(&m).unwrap())
        .collect();
    let mut g = c.benchmark_group("permissibility/6");
    g.bench_function("maximal_chains", |b| {
        b.iter(|| {
            for (l, rest) in &pairs {
                black_box(is_permissible_pair(l, rest).unwrap());
            }
        })
    });
    g.bench_function("exhaustive", |b| {
        b.iter(|| {
            for (l, rest) in &pairs {
                black_box(brute_permissible(l, rest).unwrap());
            }
        })
    });
    g.finish();
}

fn specht(c: &mut Criterion) {
    let inputs = level_three_inputs();
    c.bench_function("specht_rsk_verify/level3", |b| {
        b.iter(|| {
            for (k, mu) in &inputs {
                black_box(specht_rsk_verify(k, mu).unwrap());
            }
        })
    });
}

criterion_group!(benches, rsk, width, permissibility, specht);
criterion_main!(benches);
