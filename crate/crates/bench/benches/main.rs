use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperoct::{rank, unrank, HyperNumeral};
use hyperoct_bench::{random_big_decimal, random_signed_permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn numeral_conversion(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeral");
    for digits in [64usize, 256, 1024] {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = random_big_decimal(digits, &mut rng);
        group.bench_with_input(BenchmarkId::new("from_integer", digits), &n, |b, n| {
            b.iter(|| HyperNumeral::from_integer(black_box(n)))
        });
        let numeral = HyperNumeral::from_integer(&n);
        group.bench_with_input(
            BenchmarkId::new("to_integer", digits),
            &numeral,
            |b, numeral| b.iter(|| black_box(numeral).to_integer()),
        );
    }
    group.finish();
}

fn successor_chain(c: &mut Criterion) {
    c.bench_function("successor_4096_steps", |b| {
        b.iter(|| {
            let mut numeral = HyperNumeral::zero();
            for _ in 0..4096 {
                numeral = numeral.successor();
            }
            numeral
        })
    });
}

fn ranking(c: &mut Criterion) {
    let mut group = c.benchmark_group("ranking");
    for n in [16usize, 64] {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = random_signed_permutation(n, &mut rng);
        group.bench_with_input(BenchmarkId::new("rank", n), &p, |b, p| {
            b.iter(|| rank(black_box(p)))
        });
        let k = rank(&p);
        group.bench_with_input(BenchmarkId::new("unrank", n), &k, |b, k| {
            b.iter(|| unrank(black_box(k), n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("code", n), &p, |b, p| {
            b.iter(|| black_box(p).code())
        });
    }
    group.finish();
}

criterion_group!(benches, numeral_conversion, successor_chain, ranking);
criterion_main!(benches);
