use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use moorops::abgroup::{smith_normal_form, IntMatrix};
use moorops::chains::kunneth_check;
use moorops::functors::{ext, hom, tensor, tor};
use moorops::moorecalc::{MooreExpr, StemTable};
use moorops::opsclassify::{classify, OperationType};
use moorops::oracle::{oracle_hom, oracle_tensor, OracleConfig};
use moorops::pointmaps::{check_identities, GridConfig};
use moorops::sweep::{finite_groups, random_moore_pairs};
use moorops::FgAbGroup;

fn g(s: &str) -> FgAbGroup {
    s.parse().unwrap()
}

fn smith(c: &mut Criterion) {
    let m = IntMatrix::from_rows(
        6,
        &[
            [2, 4, 4, -6, 8, 1],
            [-6, 6, 12, 10, 3, 7],
            [10, -4, -16, 9, 2, -5],
            [3, 1, 7, -2, 11, 4],
            [5, 9, -3, 8, 6, 12],
            [7, -8, 2, 4, -1, 9],
        ],
    )
    .unwrap();
    c.bench_function("smith_normal_form 6x6", |b| {
        b.iter(|| smith_normal_form(black_box(&m)))
    });
}

fn functors(c: &mut Criterion) {
    let groups = finite_groups(2, 12);
    c.bench_function("closed-form functors, 2-factor family", |b| {
        b.iter(|| {
            for x in &groups {
                for y in &groups {
                    black_box((hom(x, y), ext(x, y), tensor(x, y), tor(x, y)));
                }
            }
        })
    });
    let config = OracleConfig::default();
    let (x, y) = (g("Z/4 + Z/12"), g("Z/6 + Z/6"));
    c.bench_function("oracle hom Z/4+Z/12 -> Z/6+Z/6", |b| {
        b.iter(|| oracle_hom(black_box(&x), &y, &config))
    });
    c.bench_function("oracle tensor Z/4+Z/12, Z/6+Z/6", |b| {
        b.iter(|| oracle_tensor(black_box(&x), &y, &config))
    });
}

fn chains(c: &mut Criterion) {
    let pairs = random_moore_pairs(20, 1);
    c.bench_function("kunneth_check x20", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(kunneth_check(&x.group, x.degree, &y.group, y.degree).unwrap());
            }
        })
    });
    let a: MooreExpr = "Z/3@3 | Z/9@4".parse().unwrap();
    let b2: MooreExpr = "Z/6@3 | Z@5".parse().unwrap();
    c.bench_function("smash of two wedges", |b| {
        b.iter(|| black_box(&a).smash(&b2).unwrap())
    });
}

fn ops(c: &mut Criterion) {
    let table = StemTable::builtin();
    let t: OperationType = "Z/3 + Z/9,Z/9,Z/3 + Z/9;4,4,7".parse().unwrap();
    c.bench_function("classify", |b| b.iter(|| classify(black_box(&t), &table)));
    let grid = GridConfig {
        max_denominator: 4,
        random_samples: 10,
        ..GridConfig::default()
    };
    c.bench_function("pointmap identities, denominators <= 4", |b| {
        b.iter(|| check_identities(black_box(&grid)))
    });
}

criterion_group!(benches, smith, functors, chains, ops);
criterion_main!(benches);
