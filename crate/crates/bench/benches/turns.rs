use criterion::{criterion_group, criterion_main, Criterion};
use ladder_core::ainv::{one_sided, two_sided};
use ladder_core::{gf_families, slalom, FamilyConstraint, LadderRegion, Minor, OracleLimits, Point};
use std::hint::black_box;

fn pts(raw: &[(i64, i64)]) -> Vec<Point> {
    raw.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

fn scan(c: &mut Criterion) {
    let se = pts(&[(2, 2), (4, 3), (2, 5), (8, 9), (10, 10), (11, 11)]);
    let nw = pts(&[(4, 1), (5, 1), (6, 1), (5, 2), (5, 5), (5, 6), (8, 7), (11, 9), (13, 10)]);
    let (from, to) = (Point::new(0, 1), Point::new(12, 14));
    c.bench_function("slalom/fifteen_gates", |b| {
        b.iter(|| slalom(black_box(from), black_box(to), &se, &nw).unwrap())
    });
}

fn formulas(c: &mut Criterion) {
    let minor = Minor::new(vec![3, 5, 6], vec![1, 2, 4]).unwrap();
    let upper = LadderRegion::from_corners(15, 13, &pts(&[(4, 6), (8, 9), (10, 13)]), &[]).unwrap();
    c.bench_function("a_invariant/one_sided", |b| {
        b.iter(|| one_sided(black_box(&upper), &minor).unwrap())
    });

    let minor = Minor::new(vec![3, 5, 6], vec![3, 4, 6]).unwrap();
    let both = LadderRegion::from_corners(
        15,
        13,
        &pts(&[(4, 6), (7, 11), (8, 12)]),
        &pts(&[(6, 8), (10, 11)]),
    )
    .unwrap();
    c.bench_function("a_invariant/two_sided", |b| {
        b.iter(|| two_sided(black_box(&both), &minor).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let minor = Minor::new(vec![1, 2], vec![1, 2]).unwrap();
    let region = LadderRegion::from_corners(5, 5, &pts(&[(2, 2)]), &[]).unwrap();
    let (constraint, _) = FamilyConstraint::for_ladder(&region, &minor).unwrap();
    let limits = OracleLimits::default();
    c.bench_function("oracle/two_paths_6x6", |b| {
        b.iter(|| gf_families(black_box(&constraint), &limits).unwrap())
    });
}

criterion_group!(benches, scan, formulas, oracle);
criterion_main!(benches);
