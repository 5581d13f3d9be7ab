//! One pass/fail line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture --test-threads 1` to see them in order.

mod common;

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::time::{Duration, Instant};

use rand::Rng;

use spanner_core::bounds::{f_bound, scan_max, BoundDomain, G_BOUND};
use spanner_core::convex::{build_convex_spanner, chain_stretch, double_chain_spanner, Chain};
use spanner_core::gen::{generate, regular_ngon, InstanceSpec};
use spanner_core::geom::{
    closest_pair, convex_hull, diametral_pair, is_centrally_symmetric_default, Point, PointSet,
};
use spanner_core::grid::{build_grid_spanner, missing_edge_detours, Grid};
use spanner_core::steiner::augment_to_degree3;
use spanner_core::verify::{max_degree, stretch_factor, verify_planarity};
use spanner_core::GeometricGraph;

use common::*;

const CONVEX_BOUND: f64 = 5.188790205;
const TOL: f64 = 1e-9;

fn verdict(id: u32, name: &str, failures: &[String], detail: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {id}: {name} ({detail})");
    assert!(failures.is_empty(), "criterion {id} failed:\n{}", failures.join("\n"));
}

fn stretch(g: &GeometricGraph) -> f64 {
    stretch_factor(g, None).expect("connected").0
}

#[test]
fn c01_convex_spanner_plane_degree3_bounded_stretch() {
    let start = Instant::now();
    let sizes: Vec<usize> = (1..=64).map(|k| 4 * k).collect();
    let mut failures = Vec::new();
    let mut worst = 1.0f64;
    for seed in 0..200u64 {
        let n = sizes[(seed as usize * 13) % sizes.len()];
        let set = convex_set(n, seed);
        let (g, pair) = build_convex_spanner(&set).unwrap();
        let deg = g.degrees();
        let (p, q) = pair.unwrap();
        let t = stretch(&g);
        worst = worst.max(t);
        if !verify_planarity(&g).0 {
            failures.push(format!("seed {seed}: not plane"));
        }
        if max_degree(&g) > 3 || deg[p] > 2 || deg[q] > 2 {
            failures.push(format!("seed {seed}: degree {} / ends {} {}", max_degree(&g), deg[p], deg[q]));
        }
        if t > CONVEX_BOUND + TOL {
            failures.push(format!("seed {seed}: stretch {t}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        failures.push(format!("took {elapsed:?}"));
    }
    verdict(1, "convex spanner", &failures, &format!("200 sets, worst stretch {worst:.6}, {elapsed:.1?}"));
}

#[test]
fn c02_symmetric_convex_stretch() {
    let mut failures = Vec::new();
    let mut worst = 1.0f64;
    for seed in 0..100u64 {
        let n = 4 + 2 * (seed as usize % 60);
        let set = symmetric_set(n, 1000 + seed);
        assert!(is_centrally_symmetric_default(&set));
        let (g, _) = build_convex_spanner(&set).unwrap();
        let t = stretch(&g);
        worst = worst.max(t);
        if t > PI + 1.0 + TOL {
            failures.push(format!("seed {seed} n {n}: stretch {t}"));
        }
        if max_degree(&g) > 3 || !verify_planarity(&g).0 {
            failures.push(format!("seed {seed}: not a plane degree-3 graph"));
        }
    }
    verdict(2, "centrally symmetric stretch", &failures, &format!("100 sets, worst {worst:.6} <= pi+1"));
}

#[test]
fn c03_double_chain_matching() {
    let mut rng = rng(3);
    let mut failures = Vec::new();
    let mut worst_ratio = 0.0f64;
    for k in 0..200u64 {
        let (set, c1, c2) = random_double_chain(&mut rng, 2000 + k);
        let (g, m) = double_chain_spanner(&c1, &c2, &set).unwrap();
        // a single-vertex chain has stretch 1
        let tau_of = |c: &Chain| if c.len() < 2 { 1.0 } else { chain_stretch(c, &set).unwrap().0 };
        let tau = tau_of(&c1).max(tau_of(&c2));
        let t = stretch(&g);
        worst_ratio = worst_ratio.max(t / (2.0 * tau + 1.0));
        if t > 2.0 * tau + 1.0 + TOL {
            failures.push(format!("case {k}: stretch {t} > 2*{tau}+1"));
        }
        // a matching between the chains
        let mut seen = vec![false; set.len()];
        for &(a, b) in &m {
            if !c1.vertices.contains(&a) || !c2.vertices.contains(&b) || seen[a] || seen[b] {
                failures.push(format!("case {k}: bad matching edge ({a}, {b})"));
            }
            seen[a] = true;
            seen[b] = true;
        }
        let deg = g.degrees();
        for c in [&c1, &c2] {
            for (i, &v) in c.vertices.iter().enumerate() {
                let cap = if i == 0 || i + 1 == c.len() { 2 } else { 3 };
                if deg[v] > cap {
                    failures.push(format!("case {k}: vertex {v} degree {} > {cap}", deg[v]));
                }
            }
        }
        if !verify_planarity(&g).0 {
            failures.push(format!("case {k}: not plane"));
        }
    }
    verdict(3, "double-chain spanner", &failures, &format!("200 pairs, worst t/(2tau+1) {worst_ratio:.4}"));
}

#[test]
fn c04_confined_chain_stretch() {
    let mut rng = rng(4);
    let mut failures = Vec::new();
    let (mut worst_lune, mut worst_disk) = (1.0f64, 1.0f64);
    for k in 0..200 {
        let (set, chain) = confined_chain(&mut rng, Region::Lune);
        let t = chain_stretch(&chain, &set).unwrap().0;
        worst_lune = worst_lune.max(t);
        if t > 2.0 * PI / 3.0 + TOL {
            failures.push(format!("lune {k}: {t}"));
        }
        let (set, chain) = confined_chain(&mut rng, Region::Disk);
        let t = chain_stretch(&chain, &set).unwrap().0;
        worst_disk = worst_disk.max(t);
        if t > FRAC_PI_2 + TOL {
            failures.push(format!("disk {k}: {t}"));
        }
    }
    let n = 1000;
    let half: Vec<Point> = (0..n)
        .map(|i| {
            let a = PI * (1.0 - i as f64 / (n - 1) as f64);
            Point::new(0.5 + 0.5 * a.cos(), 0.5 * a.sin())
        })
        .collect();
    let set = PointSet::new(half).unwrap();
    let tight = chain_stretch(&Chain::new((0..n).collect()), &set).unwrap().0;
    if tight < FRAC_PI_2 - 1e-3 {
        failures.push(format!("half circle only reaches {tight}"));
    }
    verdict(
        4,
        "chains in lune and disk",
        &failures,
        &format!("lune {worst_lune:.6} <= 2pi/3, disk {worst_disk:.6} <= pi/2, half circle {tight:.6}"),
    );
}

#[test]
fn c05_grid_spanner() {
    let mut rng = rng(5);
    let mut failures = Vec::new();
    let (mut worst, mut worst_detour, mut worst_lattice) = (1.0f64, 0.0f64, 1.0f64);
    for k in 0..100u64 {
        let (rows, cols) = if k < 3 { (40, 40) } else { (rng.gen_range(1..=40), rng.gen_range(1..=40)) };
        let grid = generate(&InstanceSpec::grid(rows, cols, 5000 + k)).unwrap().into_grid().unwrap();
        let g = build_grid_spanner(&grid);
        if !verify_planarity(&g).0 || max_degree(&g) > 3 {
            failures.push(format!("{rows}x{cols}: not a plane degree-3 graph"));
        }
        let t = stretch(&g);
        worst = worst.max(t);
        if t > 3.0 * SQRT_2 + TOL {
            failures.push(format!("{rows}x{cols}: stretch {t}"));
        }
        if rows >= 3 && cols >= 3 {
            for ((u, v), d) in missing_edge_detours(&grid, &g).unwrap() {
                worst_detour = worst_detour.max(d);
                if d > 3.0 + TOL {
                    failures.push(format!("{rows}x{cols}: detour {d} for ({u}, {v})"));
                }
            }
        }
        let tl = stretch(&grid.lattice());
        worst_lattice = worst_lattice.max(tl);
        if tl > SQRT_2 + TOL {
            failures.push(format!("{rows}x{cols}: lattice stretch {tl}"));
        }
    }
    verdict(
        5,
        "grid spanner",
        &failures,
        &format!("100 grids, stretch {worst:.6}, detour {worst_detour:.6}, lattice {worst_lattice:.6}"),
    );
}

#[test]
fn c06_steiner_degree3() {
    let mut failures = Vec::new();
    let eps = 0.1;
    let mut inputs: Vec<GeometricGraph> = Vec::new();
    for k in 0..25u64 {
        inputs.push(build_convex_spanner(&convex_set(4 + 4 * k as usize, 6000 + k)).unwrap().0);
        let grid = Grid::uniform(3 + (k as usize % 8), 3 + (k as usize * 3 % 8)).unwrap();
        inputs.push(grid.lattice());
    }
    let mut worst_excess = f64::NEG_INFINITY;
    for (k, g) in inputs.iter().enumerate() {
        let n = g.num_vertices();
        let t_in = stretch(g);
        let out = match augment_to_degree3(g, eps) {
            Ok(out) => out,
            Err(e) => {
                failures.push(format!("input {k}: {e}"));
                continue;
            }
        };
        let steiner = out.num_vertices() - n;
        if steiner > 7 * n - 12 {
            failures.push(format!("input {k}: {steiner} Steiner points for n = {n}"));
        }
        if !verify_planarity(&out).0 || max_degree(&out) > 3 {
            failures.push(format!("input {k}: not a plane degree-3 graph"));
        }
        let originals = out.original_vertices();
        let t_out = stretch_factor(&out, Some(&originals)).unwrap().0;
        worst_excess = worst_excess.max(t_out - t_in);
        if t_out > t_in + eps + TOL {
            failures.push(format!("input {k}: stretch {t_out} > {t_in} + {eps}"));
        }
    }
    verdict(6, "Steiner degree-3 augmentation", &failures, &format!("50 inputs, worst increase {worst_excess:.3e}"));
}

#[test]
fn c07_f_bound_scan() {
    let start = Instant::now();
    let r = scan_max(&BoundDomain::f(2000));
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    if !(r.max >= 2.0473 && r.max <= 2.047381) {
        failures.push(format!("max {}", r.max));
    }
    if !r.satisfied || r.bound != f_bound() {
        failures.push(format!("{r:?}"));
    }
    if elapsed > Duration::from_secs(30) {
        failures.push(format!("took {elapsed:?}"));
    }
    verdict(7, "f bound scan", &failures, &format!("max {:.7} at ({:.5}, {:.5}), {elapsed:.1?}", r.max, r.argmax_x, r.argmax_alpha));
}

#[test]
fn c08_g_bound_scan() {
    let r = scan_max(&BoundDomain::g(2000));
    let mut failures = Vec::new();
    if !(r.max >= 2.0943 && r.max <= G_BOUND + TOL) {
        failures.push(format!("max {}", r.max));
    }
    if !r.satisfied {
        failures.push(format!("{r:?}"));
    }
    verdict(8, "g bound scan", &failures, &format!("max {:.9} vs 2pi/3 = {:.9}", r.max, G_BOUND));
}

#[test]
fn c09_regular_polygons() {
    let mut failures = Vec::new();
    let (sq, _) = build_convex_spanner(&regular_ngon(4, 1.0)).unwrap();
    let ts = stretch(&sq);
    if (ts - SQRT_2).abs() > 1e-12 {
        failures.push(format!("square stretch {ts}"));
    }
    let (g23, _) = build_convex_spanner(&regular_ngon(23, 1.0)).unwrap();
    let t23 = stretch(&g23);
    if !(1.4308..=CONVEX_BOUND + TOL).contains(&t23) {
        failures.push(format!("23-gon stretch {t23}"));
    }
    verdict(9, "regular polygons", &failures, &format!("square {ts:.12}, 23-gon {t23:.6}"));
}

#[test]
fn c10_oracles_agree() {
    let mut rng = rng(10);
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for k in 0..100 {
        let n = rng.gen_range(2..=12);
        let g = random_connected_graph(&mut rng, n);
        let fast = stretch(&g);
        let slow = floyd_warshall_stretch(&g);
        worst = worst.max((fast - slow).abs());
        if (fast - slow).abs() > 1e-12 {
            failures.push(format!("graph {k}: {fast} vs {slow}"));
        }
    }
    for k in 0..500 {
        let n = rng.gen_range(2..=40);
        let set = if k % 5 == 0 { lattice_points(&mut rng, n) } else { random_points(&mut rng, n) };
        let mut hull = convex_hull(&set);
        hull.sort_unstable();
        if hull != brute_hull_vertices(&set) {
            failures.push(format!("set {k}: hull {hull:?}"));
        }
        let (d, c) = (diametral_pair(&set).unwrap(), closest_pair(&set).unwrap());
        let p = set.points();
        let (bd, bc) = (brute_diametral(&set), brute_closest(&set));
        // compare by distance: ties may legitimately pick different pairs
        if p[d.0].dist(p[d.1]) != p[bd.0].dist(p[bd.1]) {
            failures.push(format!("set {k}: diametral {d:?} vs {bd:?}"));
        }
        if p[c.0].dist(p[c.1]) != p[bc.0].dist(p[bc.1]) {
            failures.push(format!("set {k}: closest {c:?} vs {bc:?}"));
        }
    }
    verdict(10, "oracle agreement", &failures, &format!("100 graphs (max diff {worst:.1e}), 500 point sets"));
}
