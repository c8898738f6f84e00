use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use posetcon::checks::{run_checks, Suite};
use posetcon::congruence::DEFAULT_BRUTE_FORCE_LIMIT;
use posetcon::random::random_bounded_poset;
use posetcon::{corpus, enumerate_congruences, enumerate_congruences_bruteforce};

fn bundled(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval-search");
    for name in ["fig1", "fig3", "fig4", "fig6"] {
        let p = corpus::load(name).unwrap().poset;
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| b.iter(|| enumerate_congruences(p)));
    }
    group.finish();
}

fn search_vs_bruteforce(c: &mut Criterion) {
    let mut group = c.benchmark_group("random-bounded");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for inner in [4, 6, 8] {
        let p = random_bounded_poset(&mut rng, inner, 0.3);
        group.bench_with_input(BenchmarkId::new("interval", p.len()), &p, |b, p| b.iter(|| enumerate_congruences(p)));
        group.bench_with_input(BenchmarkId::new("bruteforce", p.len()), &p, |b, p| {
            b.iter(|| enumerate_congruences_bruteforce(p, DEFAULT_BRUTE_FORCE_LIMIT).unwrap())
        });
    }
    group.finish();
}

fn check_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("check-suite");
    group.sample_size(10);
    for name in ["fig1", "fig6"] {
        let p = corpus::load(name).unwrap().poset;
        group
            .bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| b.iter(|| run_checks(name, p, Suite::All)));
    }
    group.finish();
}

criterion_group!(benches, bundled, search_vs_bruteforce, check_suite);
criterion_main!(benches);
