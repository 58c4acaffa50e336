//! Acceptance suite: one PASS/FAIL line per criterion. Exact arithmetic
//! throughout, so every comparison has zero tolerance; the only tolerances
//! are the runtime limits, pinned below.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polysurf::constructions::{
    density_family, density_report, k35_certificates, k44_raw, k44_slab_clipped, realize_comb, realize_hypercube,
    realize_k35, realize_k44, realize_planar_flat, realize_subdivision_cylinder,
};
use polysurf::geometry::{classify_contact, cut_polygon_by_halfspace, orient3d, Contact, Plane, Point3, Polygon, PolygonId, Side};
use polysurf::graphs::{
    complete, complete_bipartite, contains_subgraph, find_isomorphism, gnp, hypercube, is_planar, obstruction_scan,
    petersen, random_planar, random_three_tree, subdivide_graph, triple_stacked_triangle, ObstructionKind,
};
use polysurf::surface::halfspace_violations;
use polysurf::{Graph, Mode, Surface};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const K44_LIMIT: Duration = Duration::from_secs(1);
const HYPERCUBE_D5_LIMIT: Duration = Duration::from_secs(60);
const CYLINDER_LIMIT: Duration = Duration::from_secs(10);
const DENSITY_L2_LIMIT: Duration = Duration::from_secs(600);
const PREDICATE_SAMPLES: usize = 1000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

fn adjacency(s: &Surface) -> Result<Graph, String> {
    let report = s.validate();
    ensure(report.valid, || format!("invalid surface: {}", report.summary()))?;
    Ok(report.adjacency)
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| g.neighbors(u).iter().any(|w| g.has_edge(v, *w)))
}

fn criterion_1() -> Outcome {
    let raw = k44_raw().validate();
    ensure(!raw.valid, || "raw table validated".into())?;
    let involves = |a: u32, b: u32| {
        raw.violations.iter().any(|v| v.polygons.contains(&PolygonId(a)) && v.polygons.contains(&PolygonId(b)))
    };
    ensure(raw.violations.len() >= 2, || format!("only {} violations", raw.violations.len()))?;
    ensure(involves(6, 0) && involves(7, 1), || "missing diagonal/top or diagonal/bottom violation".into())?;
    let literal = k44_slab_clipped().validate();
    let start = Instant::now();
    let result = realize_k44().map_err(|e| e.to_string())?;
    let g = adjacency(&result.surface)?;
    let elapsed = start.elapsed();
    ensure(g.n() == 8 && g.m() == 16 && isomorphic(&g, &complete_bipartite(4, 4)), || "not K4,4".into())?;
    ensure(elapsed < K44_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "raw: {} violations; literal slab clip valid={} (side-trim repair used, see README); repaired: 8 vertices, 16 edges in {elapsed:.2?}",
        raw.violations.len(),
        literal.valid
    ))
}

fn realized_hypercubes() -> Result<Vec<(u32, Graph, Duration)>, String> {
    (0..=5)
        .map(|d| {
            let start = Instant::now();
            let r = realize_hypercube(d).map_err(|e| format!("d={d}: {e}"))?;
            let g = adjacency(&r.surface)?;
            let elapsed = start.elapsed();
            ensure(r.surface.mode() == Mode::Convex, || format!("d={d}: not convex mode"))?;
            ensure(r.surface.len() == 1 << d, || format!("d={d}: {} polygons", r.surface.len()))?;
            ensure(r.surface.polygons().iter().all(|p| p.len() == d as usize + 4), || format!("d={d}: corner count"))?;
            ensure(isomorphic(&g, &hypercube(d)), || format!("d={d}: adjacency is not Q_d"))?;
            Ok((d, g, elapsed))
        })
        .collect()
}

fn criterion_2(cubes: &[(u32, Graph, Duration)]) -> Outcome {
    let d5 = cubes.last().map(|c| c.2).unwrap_or_default();
    ensure(d5 <= HYPERCUBE_D5_LIMIT, || format!("d=5 took {d5:?}"))?;
    Ok(format!("d=0..5 valid, (d+4)-gons, adjacency Q_d; d=5 in {d5:.2?}"))
}

fn criterion_3(cubes: &[(u32, Graph, Duration)]) -> Outcome {
    for (d, g, _) in cubes {
        let n = g.n();
        let expected = n * (*d as usize) / 2;
        ensure(g.m() == expected, || format!("d={d}: {} edges, expected {expected}", g.m()))?;
    }
    Ok("|E| = n log2(n) / 2 for n = 1..32".into())
}

fn criterion_4() -> Outcome {
    let mut slowest = Duration::ZERO;
    for (name, g) in [("K5", complete(5)), ("K6", complete(6)), ("Petersen", petersen())] {
        for k in 1..=2 {
            let start = Instant::now();
            let r = realize_subdivision_cylinder(&g, k).map_err(|e| format!("{name}, k={k}: {e}"))?;
            let adj = adjacency(&r.surface)?;
            let elapsed = start.elapsed();
            let target = subdivide_graph(&g, k).map_err(|e| e.to_string())?;
            ensure(isomorphic(&adj, &target), || format!("{name}, k={k}: adjacency differs"))?;
            ensure(elapsed < CYLINDER_LIMIT, || format!("{name}, k={k}: took {elapsed:?}"))?;
            slowest = slowest.max(elapsed);
        }
    }
    Ok(format!("K5, K6, Petersen with k=1,2; slowest {slowest:.2?}"))
}

fn criterion_5() -> Outcome {
    let mut largest = 0;
    for seed in 0..100u64 {
        let n = 3 + (seed as usize * 7) % 38;
        let g = random_planar(n, seed);
        let r = realize_planar_flat(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let adj = adjacency(&r.surface)?;
        let plane = r.surface.polygon(0).plane().clone();
        let flat = r.surface.polygons().iter().flat_map(|p| p.corners()).all(|c| plane.contains(c));
        ensure(flat, || format!("seed {seed}: not flat"))?;
        ensure(r.surface.polygons().iter().all(|p| p.is_strictly_convex()), || format!("seed {seed}: nonconvex"))?;
        ensure(isomorphic(&adj, &g), || format!("seed {seed}: adjacency differs"))?;
        largest = largest.max(n);
    }
    Ok(format!("100 graphs, up to {largest} vertices"))
}

/// The twenty surfaces used for the closure and halfspace checks.
fn fixtures() -> Result<Vec<(String, Surface)>, String> {
    let mut out = Vec::new();
    for seed in 0..12u64 {
        let g = random_planar(5 + seed as usize, 100 + seed);
        out.push((format!("planar seed {}", 100 + seed), realize_planar_flat(&g).map_err(|e| e.to_string())?.surface));
    }
    for d in 2..=4 {
        out.push((format!("hypercube {d}"), realize_hypercube(d).map_err(|e| e.to_string())?.surface));
    }
    out.push(("k44".into(), realize_k44().map_err(|e| e.to_string())?.surface));
    out.push(("k35".into(), realize_k35().map_err(|e| e.to_string())?.surface));
    out.push(("cylinder K4".into(), realize_subdivision_cylinder(&complete(4), 1).map_err(|e| e.to_string())?.surface));
    out.push(("cylinder K5".into(), realize_subdivision_cylinder(&complete(5), 1).map_err(|e| e.to_string())?.surface));
    out.push(("density 1".into(), density_family(1).map_err(|e| e.to_string())?.surface));
    Ok(out)
}

fn index_of(s: &Surface, id: PolygonId) -> usize {
    s.polygons().iter().position(|p| p.id() == id).expect("id present")
}

fn criterion_6(fixtures: &[(String, Surface)]) -> Outcome {
    for (name, s) in fixtures {
        let report = s.validate();
        ensure(report.valid, || format!("{name}: fixture invalid"))?;
        let before = report.adjacency;
        let ((u, v), (a, b)) = report
            .contacts
            .iter()
            .find_map(|(&pair, c)| match c {
                Contact::SharedSide(a, b) => Some((pair, (a.clone(), b.clone()))),
                _ => None,
            })
            .ok_or_else(|| format!("{name}: no shared side"))?;
        let (iu, iv) = (index_of(s, u), index_of(s, v));

        let trimmed = s.side_trim(&a, &b).map_err(|e| format!("{name}: side trim: {e}"))?;
        let mut expected = before.clone();
        expected.remove_edge(iu, iv);
        ensure(adjacency(&trimmed)? == expected, || format!("{name}: side trim changed more than {u}-{v}"))?;

        let (split, w) = s.subdivide_side(&a, &b).map_err(|e| format!("{name}: subdivide: {e}"))?;
        let after = adjacency(&split)?;
        // Rebuild the expected graph in the new surface's order.
        let mut expected = Graph::empty(split.len());
        for (x, y) in before.edges() {
            if (x, y) != (iu.min(iv), iu.max(iv)) {
                let (px, py) = (s.polygon(x).id(), s.polygon(y).id());
                expected.add_edge(index_of(&split, px), index_of(&split, py)).map_err(|e| e.to_string())?;
            }
        }
        let iw = index_of(&split, w);
        expected.add_edge(iw, index_of(&split, u)).map_err(|e| e.to_string())?;
        expected.add_edge(iw, index_of(&split, v)).map_err(|e| e.to_string())?;
        ensure(after == expected, || format!("{name}: subdivide did not replace {u}-{v} by a path"))?;

        let corner = s.polygon(0).corner(0).clone();
        let eps = polysurf::surface::safe_corner_eps(s, &corner).map_err(|e| format!("{name}: {e}"))?;
        let cut = s.corner_trim(&corner, &eps).map_err(|e| format!("{name}: corner trim: {e}"))?;
        ensure(adjacency(&cut)? == before, || format!("{name}: corner trim changed the adjacency"))?;
    }
    Ok(format!("{} fixture surfaces", fixtures.len()))
}

fn criterion_7() -> Outcome {
    let has = |g: &Graph, kind: ObstructionKind| obstruction_scan(g).iter().any(|o| o.kind == kind && o.certifies(g));
    ensure(has(&complete(5), ObstructionKind::K5), || "K5 not found in K5".into())?;
    ensure(has(&complete_bipartite(5, 81), ObstructionKind::K5_81), || "K5,81 not found".into())?;
    ensure(!has(&complete_bipartite(5, 80), ObstructionKind::K5_81), || "K5,81 found in K5,80".into())?;
    let pattern = triple_stacked_triangle();
    let mut planar = 0;
    for seed in 0..200u64 {
        let n = 4 + (seed as usize) % 27;
        let g = random_three_tree(n, seed).map_err(|e| e.to_string())?;
        let found = contains_subgraph(&g, &pattern).map_err(|e| e.to_string())?.is_some();
        let p = is_planar(&g);
        ensure(p != found, || format!("3-tree seed {seed}: planar={p}, pattern found={found}"))?;
        planar += usize::from(p);
    }
    let sub = subdivide_graph(&complete(5), 1).map_err(|e| e.to_string())?;
    ensure(!has(&sub, ObstructionKind::K5), || "K5 found in its subdivision".into())?;
    ensure(contains_subgraph(&sub, &complete(5)).map_err(|e| e.to_string())?.is_none(), || "K5 subgraph in subdivision".into())?;
    Ok(format!("K5, K5,81 found; K5,80 clean; 200 3-trees ({planar} planar) agree; subdivided K5 clean"))
}

fn criterion_8() -> Outcome {
    let r = realize_k35().map_err(|e| e.to_string())?;
    let g = adjacency(&r.surface)?;
    ensure(r.surface.len() == 8, || format!("{} polygons", r.surface.len()))?;
    ensure(isomorphic(&g, &complete_bipartite(3, 5)), || "adjacency is not K3,5".into())?;
    let certificates = k35_certificates(&r.surface);
    ensure(certificates.len() == 10, || format!("{} certificates", certificates.len()))?;
    ensure(certificates.iter().all(|c| c.disjoint), || "a colorful pair overlaps on its common line".into())?;
    Ok("8 polygons, K3,5, all 10 colorful-pair section certificates disjoint".into())
}

fn criterion_9() -> Outcome {
    for seed in 0..20u64 {
        let g = gnp(12, 0.5, seed);
        let r = realize_comb(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(r.surface.mode() == Mode::General, || format!("seed {seed}: not general mode"))?;
        let adj = adjacency(&r.surface)?;
        ensure(isomorphic(&adj, &g), || format!("seed {seed}: adjacency differs"))?;
    }
    Ok("20 graphs G(12, 1/2)".into())
}

fn criterion_10() -> Outcome {
    let one = density_family(1).map_err(|e| e.to_string())?;
    adjacency(&one.surface)?;
    let r1 = density_report(1, &one);
    ensure(r1.inner_octagons_with_eight == r1.inner_octagons, || "an inner octagon lacks 8 neighbors".into())?;
    ensure(r1.six_per_inner_octagon, || format!("{} adjacencies < 6 * {}", r1.adjacencies, r1.inner_octagons))?;
    let start = Instant::now();
    let r2 = density_report(2, &density_family(2).map_err(|e| e.to_string())?);
    let elapsed = start.elapsed();
    ensure(elapsed < DENSITY_L2_LIMIT, || format!("l=2 took {elapsed:?}"))?;
    ensure(r2.average_degree > r1.average_degree, || "average degree did not grow".into())?;
    Ok(format!(
        "l=1: {} polygons, {} adjacencies >= 6*{}, average degree {:.3} (limit 12); l=2: {:.3} in {elapsed:.2?}",
        r1.polygons, r1.adjacencies, r1.inner_octagons, r1.average_degree, r2.average_degree
    ))
}

fn criterion_11(fixtures: &[(String, Surface)]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut zero = 0;
    for i in 0..PREDICATE_SAMPLES {
        let pts: Vec<Point3> = (0..4).map(|_| common::random_point(&mut rng, 3)).collect();
        let got = orient3d(&pts[0], &pts[1], &pts[2], &pts[3]);
        ensure(got == common::orient3d_oracle(&pts[0], &pts[1], &pts[2], &pts[3]), || format!("orient3d sample {i}"))?;
        zero += usize::from(got == 0);
    }

    let mut tags = std::collections::BTreeMap::new();
    for i in 0..PREDICATE_SAMPLES {
        let a = common::random_convex(&mut rng, 3);
        let b = common::random_partner(&mut rng, &a, 3);
        let (p, q) = (Polygon::new(PolygonId(0), a.clone()), Polygon::new(PolygonId(1), b.clone()));
        let (p, q) = (p.map_err(|e| e.to_string())?, q.map_err(|e| e.to_string())?);
        let got = classify_contact(&p, &q).tag();
        let want = common::contact_oracle(&a, &b);
        ensure(got == want, || format!("contact sample {i}: {got:?} vs oracle {want:?} for {a:?} / {b:?}"))?;
        *tags.entry(format!("{got:?}")).or_insert(0) += 1;
    }

    let mut emptied = 0;
    for i in 0..PREDICATE_SAMPLES {
        let corners = common::random_convex_polygon(&mut rng);
        let poly = Polygon::new(PolygonId(0), corners.clone()).map_err(|e| e.to_string())?;
        let plane = loop {
            let (x, y, z) = (common::random_point(&mut rng, 6), common::random_point(&mut rng, 6), common::random_point(&mut rng, 6));
            if let Some(plane) = Plane::through(&x, &y, &z) {
                break plane;
            }
        };
        let keep = if rng.gen_bool(0.5) { Side::NonNegative } else { Side::NonPositive };
        let got = cut_polygon_by_halfspace(&poly, &plane, keep).map_err(|e| format!("cut sample {i}: {e}"))?;
        // Oracle: kept corners plus the crossing point of every side whose
        // ends lie strictly on opposite sides, then their hull.
        let normal = plane.normal();
        let offset = plane.eval(&Point3::origin());
        let value = |c: &Point3| normal.dot(c) + &offset;
        let kept = |v: &polysurf::ExactScalar| match keep {
            Side::NonNegative => v >= &polysurf::ExactScalar::from_integer(0.into()),
            Side::NonPositive => v <= &polysurf::ExactScalar::from_integer(0.into()),
        };
        let mut candidates = Vec::new();
        for k in 0..corners.len() {
            let (a, b) = (&corners[k], &corners[(k + 1) % corners.len()]);
            let (va, vb) = (value(a), value(b));
            if kept(&va) {
                candidates.push(a.clone());
            }
            let zero = polysurf::ExactScalar::from_integer(0.into());
            if (va > zero && vb < zero) || (va < zero && vb > zero) {
                let t = &va / (&va - &vb);
                candidates.push(a.lerp(b, &t));
            }
        }
        let hull = common::planar_hull(&candidates, &poly.plane().normal());
        let axis = poly.drop_axis();
        let area = if hull.len() >= 3 { common::projected_double_area(&hull, axis) } else { Default::default() };
        match got {
            None => ensure(hull.len() < 3 || area == Default::default(), || format!("cut sample {i}: empty result, oracle has area"))?,
            Some(r) => {
                let mut a: Vec<String> = r.corners().iter().map(|c| c.to_string()).collect();
                let mut b: Vec<String> = hull.iter().map(|c| c.to_string()).collect();
                a.sort();
                b.sort();
                ensure(a == b, || format!("cut sample {i}: corners {a:?} vs oracle {b:?}"))?;
                ensure(common::projected_double_area(r.corners(), axis) == area, || format!("cut sample {i}: area"))?;
            }
        }
        emptied += usize::from(hull.len() < 3);
    }

    let mut condition_checked = 0;
    for (name, s) in fixtures {
        if s.mode() != Mode::Convex {
            continue;
        }
        let g = adjacency(s)?;
        if !has_triangle(&g) {
            continue;
        }
        let bad = halfspace_violations(s, &g);
        ensure(bad.is_empty(), || format!("{name}: halfspace condition fails for {:?}", bad[0]))?;
        condition_checked += 1;
    }
    ensure(condition_checked > 0, || "no convex fixture with a triangle".into())?;
    Ok(format!(
        "{n} samples each; orient3d ({zero} degenerate), contact tags {tags:?}, cut ({emptied} empty); halfspace condition on {condition_checked} fixtures",
        n = PREDICATE_SAMPLES
    ))
}

fn run(number: usize, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let elapsed = start.elapsed();
    match &outcome {
        Ok(detail) => println!("criterion {number:>2} PASS  {title}: {detail} [{elapsed:.2?}]"),
        Err(why) => println!("criterion {number:>2} FAIL  {title}: {why} [{elapsed:.2?}]"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= run(1, "K4,4 table", criterion_1);
    let cubes = realized_hypercubes();
    ok &= run(2, "hypercubes", || criterion_2(cubes.as_ref().map_err(|e| e.clone())?));
    ok &= run(3, "hypercube edge counts", || criterion_3(cubes.as_ref().map_err(|e| e.clone())?));
    ok &= run(4, "cylinder subdivisions", criterion_4);
    ok &= run(5, "planar flat realizations", criterion_5);
    let fixtures = fixtures();
    ok &= run(6, "closure operations", || criterion_6(fixtures.as_ref().map_err(|e| e.clone())?));
    ok &= run(7, "obstruction scan", criterion_7);
    ok &= run(8, "K3,5 prism", criterion_8);
    ok &= run(9, "comb construction", criterion_9);
    ok &= run(10, "density family", criterion_10);
    ok &= run(11, "predicate oracles", || criterion_11(fixtures.as_ref().map_err(|e| e.clone())?));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
