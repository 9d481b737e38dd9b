use criterion::{black_box, criterion_group, criterion_main, Criterion};

use modesum::eddy::{eddy_energy_t0, eddy_free_energy_high_t};
use modesum::lifshitz::{casimir_energy_t0, free_energy_t};
use modesum::plasmon::plasmon_energy;
use modesum::reflection::{cut_im_log, Polarization};
use modesum_bench::{classical_temperature, cutoff, geometry, gold_like, quad};

fn bench_cut_im_log(c: &mut Criterion) {
    let m = gold_like();
    let g = geometry(1.0);
    c.bench_function("cut_im_log TE", |b| {
        b.iter(|| {
            cut_im_log(
                Polarization::TE,
                black_box(5e-4),
                black_box(0.05),
                g,
                &m,
            )
            .unwrap()
        })
    });
}

fn bench_plasmon_energy(c: &mut Criterion) {
    let m = gold_like();
    let g = geometry(0.01);
    let lam = cutoff();
    let cfg = quad();
    c.bench_function("plasmon_energy L=0.01 lambda_p", |b| {
        b.iter(|| plasmon_energy(black_box(g), &m, lam, &cfg).unwrap())
    });
}

fn bench_eddy_t0(c: &mut Criterion) {
    let m = gold_like();
    let g = geometry(1.0);
    let lam = cutoff();
    let cfg = quad();
    c.bench_function("eddy_energy_t0 TE L=lambda_p", |b| {
        b.iter(|| eddy_energy_t0(Polarization::TE, black_box(g), &m, lam, &cfg).unwrap())
    });
}

fn bench_eddy_high_t(c: &mut Criterion) {
    let m = gold_like();
    let g = geometry(10.0);
    let t = classical_temperature(g);
    let cfg = quad();
    c.bench_function("eddy_free_energy_high_t TE", |b| {
        b.iter(|| eddy_free_energy_high_t(Polarization::TE, black_box(g), &m, t, &cfg).unwrap())
    });
}

fn bench_lifshitz_t0(c: &mut Criterion) {
    let m = gold_like();
    let g = geometry(1.0);
    let cfg = quad();
    c.bench_function("casimir_energy_t0 L=lambda_p", |b| {
        b.iter(|| casimir_energy_t0(black_box(g), &m, &cfg).unwrap())
    });
}

fn bench_matsubara(c: &mut Criterion) {
    let m = gold_like();
    let g = geometry(10.0);
    let t = classical_temperature(g);
    let cfg = quad();
    c.bench_function("free_energy_t classical", |b| {
        b.iter(|| free_energy_t(black_box(g), &m, t, &cfg).unwrap())
    });
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(20);
    targets = bench_cut_im_log, bench_plasmon_energy, bench_eddy_t0,
              bench_eddy_high_t, bench_lifshitz_t0, bench_matsubara
}
criterion_main!(kernels);
