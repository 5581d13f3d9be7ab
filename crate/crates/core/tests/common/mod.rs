//! Independent oracles and corpus builders shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spanner_core::convex::Chain;
use spanner_core::gen::{generate, InstanceKind, InstanceSpec};
use spanner_core::geom::{convex_hull, Disk, Lune, Point, PointSet};
use spanner_core::GeometricGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_points(rng: &mut impl Rng, n: usize) -> PointSet {
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        if let Ok(s) = PointSet::new(pts) {
            return s;
        }
    }
}

/// Points on a small integer lattice: lots of collinear triples and ties.
pub fn lattice_points(rng: &mut impl Rng, n: usize) -> PointSet {
    let mut all: Vec<(i32, i32)> = (0..6).flat_map(|x| (0..6).map(move |y| (x, y))).collect();
    all.shuffle(rng);
    PointSet::new(all[..n.min(36)].iter().map(|&(x, y)| Point::new(x as f64, y as f64)).collect()).unwrap()
}

/// O(n^3) hull: (i, j) is a counterclockwise hull edge iff every other
/// point is strictly left of i->j or strictly inside the segment. Returns
/// the sorted vertex indices.
pub fn brute_hull_vertices(set: &PointSet) -> Vec<usize> {
    let p = set.points();
    let n = p.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let cross = |a: Point, b: Point, c: Point| (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    let mut verts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let edge = (0..n).filter(|&k| k != i && k != j).all(|k| {
                let c = cross(p[i], p[j], p[k]);
                if c > 0.0 {
                    return true;
                }
                if c < 0.0 {
                    return false;
                }
                // collinear: must lie strictly between i and j
                let t = (p[k].x - p[i].x) * (p[j].x - p[i].x) + (p[k].y - p[i].y) * (p[j].y - p[i].y);
                t > 0.0 && t < p[i].dist2(p[j])
            });
            if edge {
                verts.push(i);
                verts.push(j);
            }
        }
    }
    if verts.is_empty() {
        // all collinear: the two extremes
        let lex = |a: &usize, b: &usize| p[*a].x.total_cmp(&p[*b].x).then(p[*a].y.total_cmp(&p[*b].y));
        let lo = (0..n).min_by(lex).unwrap();
        let hi = (0..n).max_by(lex).unwrap();
        verts = vec![lo, hi];
    }
    verts.sort_unstable();
    verts.dedup();
    verts
}

fn brute_pair(set: &PointSet, max: bool) -> (usize, usize) {
    let p = set.points();
    let mut best: Option<(f64, (usize, usize))> = None;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let d = (p[i].x - p[j].x).hypot(p[i].y - p[j].y);
            let better = match best {
                None => true,
                Some((b, _)) => if max { d > b } else { d < b },
            };
            if better {
                best = Some((d, (i, j)));
            }
        }
    }
    best.unwrap().1
}

pub fn brute_diametral(set: &PointSet) -> (usize, usize) {
    brute_pair(set, true)
}

pub fn brute_closest(set: &PointSet) -> (usize, usize) {
    brute_pair(set, false)
}

/// All-pairs shortest paths by Floyd-Warshall, then the maximum ratio.
pub fn floyd_warshall_stretch(g: &GeometricGraph) -> f64 {
    let n = g.num_vertices();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for &(u, v) in g.edges() {
        let w = g.point(u).dist(g.point(v));
        d[u][v] = w;
        d[v][u] = w;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut best = 1.0f64;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(d[i][j] / g.point(i).dist(g.point(j)));
        }
    }
    best
}

/// Random connected graph: a random spanning tree plus extra random edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> GeometricGraph {
    let pts = random_points(rng, n);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for _ in 0..rng.gen_range(0..=n) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    GeometricGraph::new(pts, edges).unwrap()
}

pub fn convex_set(n: usize, seed: u64) -> PointSet {
    generate(&InstanceSpec::points(InstanceKind::ConvexRandom, n, seed))
        .unwrap()
        .into_points()
        .unwrap()
}

pub fn symmetric_set(n: usize, seed: u64) -> PointSet {
    generate(&InstanceSpec::points(InstanceKind::SymmetricConvex, n, seed))
        .unwrap()
        .into_points()
        .unwrap()
}

/// Two disjoint arcs of a random convex polygon, re-indexed into their own
/// point set: chain 1 is `0..a`, chain 2 is `a..a+b`.
pub fn random_double_chain(rng: &mut impl Rng, seed: u64) -> (PointSet, Chain, Chain) {
    let n = rng.gen_range(4..=48);
    let poly = convex_set(n, seed);
    let hull = convex_hull(&poly);
    // cut points 0 <= s1 < e1 < s2 < e2 <= n along the hull
    let mut cuts: Vec<usize> = (0..=n).collect::<Vec<_>>().choose_multiple(rng, 4).copied().collect();
    cuts.sort_unstable();
    let (s1, e1, s2, e2) = (cuts[0], cuts[1], cuts[2], cuts[3]);
    let arc1: Vec<usize> = hull[s1..e1].to_vec();
    let arc2: Vec<usize> = hull[s2..e2].to_vec();
    let pts: Vec<Point> = arc1.iter().chain(&arc2).map(|&i| poly[i]).collect();
    let a = arc1.len();
    let set = PointSet::new(pts).unwrap();
    let c1 = Chain::new((0..a).collect());
    let mut c2: Vec<usize> = (a..set.len()).collect();
    if rng.gen_bool(0.5) {
        c2.reverse();
    }
    (set, c1, Chain::new(c2))
}

pub enum Region {
    Lune,
    Disk,
}

/// A convex chain from p = (0, 0) to q = (1, 0) inside the upper half of
/// the region: the upper hull of p, q and random points in it, some of
/// them on the region's boundary.
pub fn confined_chain(rng: &mut impl Rng, region: Region) -> (PointSet, Chain) {
    let p = Point::new(0.0, 0.0);
    let q = Point::new(1.0, 0.0);
    let inside = |c: Point| match region {
        Region::Lune => Lune::new(p, q).contains(c),
        Region::Disk => Disk::new(p, q).contains(c),
    };
    let k = rng.gen_range(1..=40);
    let mut pts = vec![p, q];
    while pts.len() < k + 2 {
        let c = if rng.gen_bool(0.5) {
            // on the boundary
            let t = rng.gen_range(0.0..1.0f64);
            match region {
                Region::Lune => {
                    let a = t * std::f64::consts::FRAC_PI_3;
                    if rng.gen_bool(0.5) {
                        Point::new(a.cos(), a.sin())
                    } else {
                        Point::new(1.0 - a.cos(), a.sin())
                    }
                }
                Region::Disk => {
                    let a = t * std::f64::consts::PI;
                    Point::new(0.5 + 0.5 * a.cos(), 0.5 * a.sin())
                }
            }
        } else {
            Point::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..0.9))
        };
        if c.y > 0.0 && inside(c) && !pts.contains(&c) {
            pts.push(c);
        }
    }
    let set = PointSet::new(pts).unwrap();
    let hull = convex_hull(&set);
    // hull starts at p (lexicographically smallest), then q, then the
    // upper chain back towards p
    assert_eq!(hull[0], 0);
    assert_eq!(hull[1], 1);
    let mut chain = vec![0];
    chain.extend(hull[2..].iter().rev());
    chain.push(1);
    (set, Chain::new(chain))
}
