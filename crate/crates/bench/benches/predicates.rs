use criterion::{black_box, criterion_group, criterion_main, Criterion};
use polysurf::geometry::{classify_contact, cut_polygon_by_halfspace, orient3d, frac, Plane, Point3, Side};
use polysurf_bench::parabola_polygon;

fn predicates(c: &mut Criterion) {
    let pts = [
        Point3::from_ints(0, 0, 0),
        Point3::from_ints(7, 1, -3),
        Point3::new(frac(1, 3), frac(5, 7), frac(-2, 9)),
        Point3::from_ints(2, -4, 11),
    ];
    c.bench_function("orient3d", |b| b.iter(|| orient3d(black_box(&pts[0]), &pts[1], &pts[2], &pts[3])));

    let p = parabola_polygon(0, 8, 0);
    let q = parabola_polygon(1, 8, 3);
    c.bench_function("classify_contact 8-gons", |b| b.iter(|| classify_contact(black_box(&p), black_box(&q))));

    let plane = Plane::through(&Point3::from_ints(0, 0, 2), &Point3::from_ints(1, 0, 2), &Point3::from_ints(0, 1, 2))
        .expect("three independent points");
    c.bench_function("cut 8-gon", |b| {
        b.iter(|| cut_polygon_by_halfspace(black_box(&p), &plane, Side::NonNegative).unwrap())
    });
}

criterion_group!(benches, predicates);
criterion_main!(benches);
