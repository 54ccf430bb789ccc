//! Acceptance criteria 1 to 10, one PASS/FAIL line each.
//!
//! Runs without the test harness so the lines always print. Exits nonzero
//! if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{base_type_compositions, compositions_up_to, even_fractions, inverse_mod, Plat};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;
use twobridge::farey::x10_in_tree;
use twobridge::{
    ball_with_face_count, build_ball, classify, convex_hull, even_cf, iterated_family,
    linking_number, minkowski_sum, polar_dual, ratio, satellite_ball, satellite_ball_minkowski,
    support_value, t10_tree_build, vertex_norms, vertex_norms_of_diagram, ContinuedFraction,
    FamilyStep, FareyVertex, Fraction, PolarBody, RationalDiagram, RationalPoint,
    SatelliteInput, Shape,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn slopes(v: &[&str]) -> Vec<Fraction> {
    let mut out: Vec<Fraction> = v.iter().map(|s| s.parse().unwrap()).collect();
    out.sort();
    out
}

/// Octagon theorem and shape coverage.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let fractions = even_fractions(200);
    let results: Vec<_> = fractions
        .par_iter()
        .map(|f| classify(f).map(|c| (f.clone(), c.faces, c.shape)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let t = within(Duration::from_secs(10), start)?;
    if let Some((f, faces, _)) = results.iter().find(|r| r.1 > 8) {
        return Err(format!("{f} has {faces} faces"));
    }
    let seen: BTreeSet<String> = results.iter().map(|r| r.2.to_string()).collect();
    let witnesses = [
        ((1, 2), Shape::Plane),
        ((1, 4), Shape::Strip),
        ((7, 16), Shape::QuadrilateralAxes),
        ((7, 24), Shape::QuadrilateralBisectors),
        ((5, 14), Shape::Hexagon),
        ((5, 24), Shape::Octagon),
    ];
    for ((p, q), shape) in witnesses {
        let got = classify(&ratio(p, q)).map_err(|e| e.to_string())?.shape;
        ensure(got == shape, || format!("{p}/{q} is {got}, expected {shape}"))?;
    }
    Ok(format!(
        "{} links, max {} faces, shapes {:?}, {t:.2?}",
        results.len(),
        results.iter().map(|r| r.1).max().unwrap_or(0),
        seen
    ))
}

/// Tangle-sum x(l1) against the Farey path length.
fn criterion_2() -> Outcome {
    let start = Instant::now();
    let tree = t10_tree_build(200);
    let fractions = even_fractions(200);
    for f in &fractions {
        let a = vertex_norms(f).map_err(|e| e.to_string())?.x10;
        let b = x10_in_tree(&tree, f).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{f}: tangle sum {a}, Farey {b}"))?;
    }
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!("{} links agree exactly, {t:.2?}", fractions.len()))
}

/// The worked example L_{7/16}.
fn criterion_3() -> Outcome {
    let f = ratio(7, 16);
    let c = classify(&f).map_err(|e| e.to_string())?;
    let v = c.vertex_norms;
    ensure((v.x10, v.x01, v.x11, v.x1m1) == (1, 1, 2, 2), || format!("norms {v}"))?;
    ensure(c.rays == slopes(&["0", "inf"]), || format!("rays {:?}", c.rays))?;
    ensure(c.shape == Shape::QuadrilateralAxes, || format!("shape {}", c.shape))?;
    let e = even_cf(&f).map_err(|e| e.to_string())?;
    ensure(e.coefficients() == [2, 4, -2], || format!("even expansion {e}"))?;
    Ok("norms (1,1,2,2), rays {0,inf}, square, even expansion [2,4,-2]".into())
}

/// Additivity on the cones over (1,0),(1,+-1).
fn criterion_4() -> Outcome {
    let fractions = even_fractions(200);
    let n = |a: i64, b: i64| (Fraction::from(a), Fraction::from(b));
    for f in &fractions {
        let ball = build_ball(&vertex_norms(f).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let x = |(a, b): (Fraction, Fraction)| ball.evaluate(&a, &b);
        ensure(x(n(2, 1)) == x(n(1, 0)) + x(n(1, 1)), || format!("{f}: x(2,1)"))?;
        ensure(x(n(2, -1)) == x(n(1, 0)) + x(n(1, -1)), || format!("{f}: x(2,-1)"))?;
    }
    Ok(format!("{} links, both identities exact", fractions.len()))
}

/// Base-type iff rays inside {1,-1}.
fn criterion_5() -> Outcome {
    let fractions = even_fractions(200);
    let pm1 = [Fraction::one(), -Fraction::one()];
    let mut base = 0;
    for f in &fractions {
        let c = classify(f).map_err(|e| e.to_string())?;
        let by_rays = c.rays.iter().all(|r| pm1.contains(r));
        ensure(c.base_type == by_rays, || {
            format!("{f}: base_type {} but rays {:?}", c.base_type, c.rays)
        })?;
        base += usize::from(c.base_type);
    }
    Ok(format!("{} links, {base} base-type, zero exceptions", fractions.len()))
}

/// Schubert's classification: p and its inverse mod q give the same link.
fn criterion_6() -> Outcome {
    let fractions = even_fractions(100);
    let unordered = |f: &Fraction| -> Result<(u64, u64, u64), String> {
        let v = vertex_norms(f).map_err(|e| e.to_string())?;
        Ok((v.x10, v.x11.min(v.x1m1), v.x11.max(v.x1m1)))
    };
    let mut pairs = 0;
    for f in &fractions {
        let (p, q) = (f.numer().to_i64().unwrap(), f.denom().to_i64().unwrap());
        let inv = inverse_mod(p, q).ok_or_else(|| format!("{f} has no inverse"))?;
        let (a, b) = (unordered(f)?, unordered(&ratio(inv, q))?);
        ensure(a == b, || format!("{p}/{q} {a:?} vs {inv}/{q} {b:?}"))?;
        pairs += usize::from(inv != p);
    }
    Ok(format!("{} links, {pairs} with p^-1 != p", fractions.len()))
}

/// T_{1/0} is a tree below 512, and paths do not change when the bound grows.
fn criterion_7() -> Outcome {
    let tree = t10_tree_build(512);
    ensure(tree.is_acyclic(), || "cycle found".into())?;
    ensure(tree.is_connected(), || "not connected".into())?;
    ensure(tree.edges().len() + 1 == tree.vertex_count(), || "edge count".into())?;
    let wider = t10_tree_build(1024);
    ensure(wider.is_acyclic(), || "cycle below 1024".into())?;
    let fractions = even_fractions(512);
    for f in &fractions {
        let v = FareyVertex::from_fraction(f).map_err(|e| e.to_string())?;
        let path = tree.path(&v).ok_or_else(|| format!("{f} unreachable"))?;
        ensure(wider.path(&v).as_ref() == Some(&path), || format!("{f}: path changed"))?;
    }
    Ok(format!(
        "{} vertices, {} edges, {} paths unique",
        tree.vertex_count(),
        tree.edges().len(),
        fractions.len()
    ))
}

/// The iterated satellite family and the complexity theorem.
fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mirrored = RationalDiagram::new(ContinuedFraction::new(vec![2, 1, 4]).unwrap(), true)
        .map_err(|e| e.to_string())?;
    let seed = FamilyStep {
        ball: build_ball(&vertex_norms_of_diagram(&mirrored).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?,
        lk: 3,
        provenance: "mirrored L_{5/14}, lambda = 3".into(),
    };
    let family = iterated_family(&seed, 8).map_err(|e| e.to_string())?;
    for (i, step) in family.iter().enumerate() {
        let mut expected = vec![Fraction::zero(), Fraction::infinity()];
        let i = i as i64;
        for e in (-i..=i).step_by(2) {
            let p = Fraction::from(3i64.pow(e.unsigned_abs() as u32));
            expected.push(if e < 0 { p.recip() } else { p });
        }
        expected.sort();
        let rays = step.ball.rays();
        ensure(rays == expected, || format!("L_{i}: rays {rays:?}"))?;
        let faces = step.ball.face_count();
        ensure(faces == 2 * (i as usize + 3), || format!("L_{i}: {faces} faces"))?;
        ensure(step.lk == 3i64.pow(i as u32 + 1), || format!("L_{i}: lk {}", step.lk))?;
    }
    for n in 0..=12 {
        let faces = ball_with_face_count(n).map_err(|e| e.to_string())?.0.face_count();
        ensure(faces as i64 == 2 * n, || format!("n = {n}: {faces} faces"))?;
    }
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!("L_0..L_8 match, 2n faces for n = 0..12, {t:.2?}"))
}

fn small_fraction() -> impl Strategy<Value = Fraction> {
    (-40i64..=40, 1i64..=25).prop_map(|(p, q)| ratio(p, q))
}

fn point() -> impl Strategy<Value = RationalPoint> {
    (small_fraction(), small_fraction()).prop_map(|(x, y)| RationalPoint::new(x, y))
}

/// Double dual, Minkowski support additivity, and the two satellite routes.
fn criterion_9() -> Outcome {
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };
    let symmetric = prop::collection::vec(point(), 2..8)
        .prop_map(|v| {
            let all: Vec<RationalPoint> = v.iter().flat_map(|p| [p.clone(), p.neg()]).collect();
            convex_hull(&all)
        })
        .prop_filter("full-dimensional", |p| p.len() >= 4);
    TestRunner::new(config.clone())
        .run(&symmetric, |p| {
            let back = match polar_dual(&p) {
                Ok(PolarBody::Polygon(q)) => polar_dual(&q),
                other => return Err(TestCaseError::fail(format!("{other:?}"))),
            };
            prop_assert_eq!(back.ok(), Some(PolarBody::Polygon(p)));
            Ok(())
        })
        .map_err(|e| format!("double dual: {e}"))?;

    let polygon = || prop::collection::vec(point(), 1..10).prop_map(|v| convex_hull(&v));
    let pair = (polygon(), polygon(), prop::collection::vec(point(), 100));
    TestRunner::new(config)
        .run(&pair, |(a, b, dirs)| {
            let s = minkowski_sum(&a, &b);
            for v in &dirs {
                prop_assert_eq!(support_value(&s, v), support_value(&a, v) + support_value(&b, v));
            }
            Ok(())
        })
        .map_err(|e| format!("Minkowski support: {e}"))?;

    let mut steps = 0;
    let mut chains: Vec<Vec<FamilyStep>> = Vec::new();
    for n in 4..=12 {
        chains.push(twobridge::satellite::face_count_chain(n).map_err(|e| e.to_string())?);
    }
    let mirrored = RationalDiagram::new(ContinuedFraction::new(vec![2, 1, 4]).unwrap(), true)
        .map_err(|e| e.to_string())?;
    let seed = FamilyStep {
        ball: build_ball(&vertex_norms_of_diagram(&mirrored).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?,
        lk: 3,
        provenance: String::new(),
    };
    chains.push(iterated_family(&seed, 8).map_err(|e| e.to_string())?);
    for chain in &chains {
        let seed = &chain[0];
        for w in chain.windows(2) {
            let s = SatelliteInput {
                companion: w[0].ball.clone(),
                lk_companion: w[0].lk,
                pattern: seed.ball.clone(),
                lk_pattern: seed.lk,
            };
            let by_rays = satellite_ball(&s).map_err(|e| e.to_string())?;
            let by_duals = satellite_ball_minkowski(&s).map_err(|e| e.to_string())?;
            ensure(by_rays == by_duals && by_rays == w[1].ball, || {
                format!("routes disagree after {}", w[0].provenance)
            })?;
            steps += 1;
        }
    }
    Ok(format!("1000 double-dual cases, 1000 Minkowski cases, {steps} family steps agree"))
}

/// Traced linking numbers against the Gauss sum, and |lk| on base-type diagrams.
fn criterion_10() -> Outcome {
    let mut gauss = 0;
    for c in compositions_up_to(14) {
        let Ok(cf) = ContinuedFraction::new(c.clone()) else { continue };
        for mirror in [false, true] {
            let Ok(d) = RationalDiagram::new(cf.clone(), mirror) else { continue };
            let traced = linking_number(&d).map_err(|e| e.to_string())?;
            let oracle = Plat::new(&c).linking_number(mirror).ok_or("oracle saw a knot")?;
            ensure(traced == oracle, || format!("{d}: traced {traced}, Gauss {oracle}"))?;
            gauss += 1;
        }
    }
    let mut base = 0;
    for c in base_type_compositions(24) {
        let d = RationalDiagram::new(ContinuedFraction::new(c.clone()).unwrap(), false)
            .map_err(|e| e.to_string())?;
        let lk = linking_number(&d).map_err(|e| e.to_string())?;
        let half = c.iter().sum::<i64>() / 2;
        ensure(lk.abs() == half, || format!("{d}: |lk| = {}, expected {half}", lk.abs()))?;
        base += 1;
    }
    Ok(format!("{gauss} diagrams match the Gauss sum, {base} base-type diagrams"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "octagon theorem", criterion_1),
        (2, "dual-route agreement", criterion_2),
        (3, "example L_{7/16}", criterion_3),
        (4, "additivity", criterion_4),
        (5, "base-type equivalence", criterion_5),
        (6, "Schubert invariance", criterion_6),
        (7, "tree property", criterion_7),
        (8, "satellite family", criterion_8),
        (9, "geometry oracles", criterion_9),
        (10, "linking-number oracle", criterion_10),
    ];
    let mut failed = 0;
    for (n, name, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {n} ({name}): PASS - {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL - {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
