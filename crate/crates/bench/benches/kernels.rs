use criterion::{criterion_group, criterion_main, Criterion};
use gpac_core::godel::{enumerate_entangled_dimension, separability_test};
use gpac_core::pac::{run_pac_simulation, PacConfig, PacInstance};
use gpac_core::{complexity, CardinalScale, CoefficientMatrix, Spectrum, TAU_RANK};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> CoefficientMatrix {
    let entries = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    CoefficientMatrix::from_rows(entries).expect("valid matrix")
}

fn bench_separability(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let small = random_matrix(&mut rng, 2);
    let large = random_matrix(&mut rng, 8);
    c.bench_function("separability_test_2x2", |b| {
        b.iter(|| separability_test(black_box(&small), TAU_RANK))
    });
    c.bench_function("separability_test_8x8", |b| {
        b.iter(|| separability_test(black_box(&large), TAU_RANK))
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_entangled_dimension_n8", |b| {
        b.iter(|| enumerate_entangled_dimension(black_box(8)).expect("within budget"))
    });
}

fn bench_pac(c: &mut Criterion) {
    let inst = PacInstance::bernoulli_half();
    let cfg = PacConfig::new(0.2, 0.1, 4).expect("valid config");
    c.bench_function("pac_simulation_m55_t200", |b| {
        b.iter(|| run_pac_simulation(black_box(&inst), &cfg, 55, 200, 42).expect("runs"))
    });
}

fn bench_entropy(c: &mut Criterion) {
    let k = 4096usize;
    let scale = CardinalScale::new((1..=k).map(|s| s as f64).collect()).expect("increasing");
    let mass = vec![1.0 / k as f64; k];
    let sp = Spectrum::new(scale, mass).expect("valid spectrum");
    c.bench_function("shannon_entropy_4096", |b| {
        b.iter(|| complexity::shannon_entropy(black_box(&sp)).expect("positive mass"))
    });
}

criterion_group!(
    kernels,
    bench_separability,
    bench_enumeration,
    bench_pac,
    bench_entropy
);
criterion_main!(kernels);
