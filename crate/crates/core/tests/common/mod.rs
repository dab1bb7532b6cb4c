#![allow(dead_code)]

use std::collections::BTreeMap;

use arborescent::diagram::PDCode;
use arborescent::surface_index::{FatGraph, SurfacePiece};
use arborescent::tangle::{bottom_twist, tangle_sum, TangleExpr};
use arborescent::Slope;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Closure of a braid on `strands` strands, strands running upward.
///
/// Letter `i > 0` is `σ_i` (the left strand crosses over, a positive crossing),
/// `-i` its inverse. Untouched strands become crossingless loops.
pub fn braid_closure(strands: usize, word: &[i32]) -> PDCode {
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let start: Vec<usize> = (0..strands).map(|_| fresh()).collect();
    let mut cur = start.clone();
    let mut crossings = Vec::new();
    for &letter in word {
        let i = letter.unsigned_abs() as usize - 1;
        assert!(i + 1 < strands, "letter {letter} needs {} strands", i + 2);
        let (a, b) = (cur[i], cur[i + 1]);
        let (out_left, out_right) = (fresh(), fresh());
        crossings.push(if letter > 0 { [b, out_right, out_left, a] } else { [a, b, out_right, out_left] });
        cur[i] = out_left;
        cur[i + 1] = out_right;
    }
    let mut loops = 0;
    let mut rename = BTreeMap::new();
    for j in 0..strands {
        if cur[j] == start[j] {
            loops += 1;
        } else {
            rename.insert(cur[j], start[j]);
        }
    }
    // Closing arcs can chain through several positions.
    let resolve = |mut a: usize| {
        while let Some(&b) = rename.get(&a) {
            a = b;
        }
        a
    };
    let crossings = crossings.into_iter().map(|c: [usize; 4]| c.map(resolve)).collect();
    PDCode { crossings, open_ends: None, loops }.renumbered()
}

pub fn right_trefoil() -> PDCode {
    braid_closure(2, &[1, 1, 1])
}

pub fn left_trefoil() -> PDCode {
    braid_closure(2, &[-1, -1, -1])
}

fn slope_leaf() -> impl Strategy<Value = TangleExpr> {
    prop_oneof![
        Just(TangleExpr::Rational(Slope::ZERO)),
        Just(TangleExpr::Rational(Slope::INFINITY)),
        (1i64..6, 2i64..8).prop_filter_map("reduced with q >= 2", |(p, q)| {
            let s = Slope::new(p, q).ok()?;
            (s.denominator() >= 2).then_some(TangleExpr::Rational(s))
        }),
        (1i64..6, 2i64..8).prop_filter_map("reduced with q >= 2", |(p, q)| {
            let s = Slope::new(-p, q).ok()?;
            (s.denominator() >= 2).then_some(TangleExpr::Rational(s))
        }),
    ]
}

/// Small random tangle expressions.
pub fn tangle_expr() -> impl Strategy<Value = TangleExpr> {
    slope_leaf().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| tangle_sum(a, b)),
            (inner.clone(), -4i64..=4).prop_map(|(t, k)| bottom_twist(t, k)),
            inner.prop_map(TangleExpr::mirror),
        ]
    })
}

/// Faces of a rotation system: half-edge `h` belongs to vertex `h / 4` at slot `h % 4`,
/// `pair[h]` is the other end of its edge. Returns the face cycles as half-edge lists.
fn trace_faces(pair: &[usize]) -> Vec<Vec<usize>> {
    let next_around = |h: usize| 4 * (h / 4) + (h % 4 + 1) % 4;
    let mut seen = vec![false; pair.len()];
    let mut faces = Vec::new();
    for start in 0..pair.len() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            face.push(h);
            h = next_around(pair[h]);
        }
        faces.push(face);
    }
    faces
}

fn connected(v: usize, pair: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for h in 0..pair.len() {
        let (a, b) = (find(&mut parent, h / 4), find(&mut parent, pair[h] / 4));
        parent[a] = b;
    }
    (0..v).all(|x| find(&mut parent, x) == find(&mut parent, 0))
}

/// Builds the graph record from a rotation system that embeds on the torus.
///
/// Each vertex disk meets `U` in its corners between slots 0–1 and 2–3, so
/// every vertex contributes two `U` corners. Circle edges are dropped into
/// random faces, each splitting off an annulus.
fn fat_graph_from(v: usize, pair: &[usize], circles: usize, rng: &mut impl Rng) -> FatGraph {
    let mut arc_edges = Vec::new();
    for h in 0..pair.len() {
        if h < pair[h] {
            arc_edges.push((h / 4, pair[h] / 4));
        }
    }
    let mut faces: Vec<SurfacePiece> = trace_faces(pair)
        .into_iter()
        .map(|f| {
            // The corner following half-edge h at its vertex is on U when its slot is even.
            let corners = f.iter().filter(|&&h| pair[h] % 2 == 0).count() as u64;
            SurfacePiece::new(1).with_arcs("U", corners)
        })
        .collect();
    for _ in 0..circles {
        let i = rng.gen_range(0..faces.len().max(1));
        if faces.is_empty() {
            faces.push(SurfacePiece::new(0));
            faces.push(SurfacePiece::new(0));
            continue;
        }
        // Cutting a face along an inner circle leaves it with the same χ plus an annulus or disk pair.
        let outer = faces[i].clone();
        let (keep, split) = if rng.gen_bool(0.5) {
            (outer.clone(), SurfacePiece::new(0))
        } else {
            let mut annulus = outer.clone();
            annulus.euler_char -= 1;
            (annulus, SurfacePiece::new(1))
        };
        faces[i] = keep;
        faces.push(split);
    }
    FatGraph { vertex_count: v, arc_edges, circle_edge_count: circles, faces }
}

/// `p × q` square grid on the torus with each row shifted by `shift`.
pub fn torus_grid(p: usize, q: usize, shift: usize) -> Vec<usize> {
    let v = p * q;
    let id = |i: usize, j: usize| (i % p) * q + (j % q);
    // Slots: 0 east, 1 north, 2 west, 3 south.
    let mut pair = vec![0; 4 * v];
    for i in 0..p {
        for j in 0..q {
            let here = id(i, j);
            let east = id(i, j + 1);
            let north = if i + 1 == p { id(0, j + shift) } else { id(i + 1, j) };
            pair[4 * here] = 4 * east + 2;
            pair[4 * east + 2] = 4 * here;
            pair[4 * here + 1] = 4 * north + 3;
            pair[4 * north + 3] = 4 * here + 1;
        }
    }
    pair
}

/// A random valence-4 graph cellularly embedded on the torus.
pub fn random_torus_graph(rng: &mut impl Rng) -> FatGraph {
    let circles = rng.gen_range(0..3);
    if rng.gen_bool(0.5) {
        let (p, q) = (rng.gen_range(1..5), rng.gen_range(1..5));
        let shift = rng.gen_range(0..q);
        return fat_graph_from(p * q, &torus_grid(p, q, shift), circles, rng);
    }
    let v = rng.gen_range(1..5);
    for _ in 0..10_000 {
        let mut halves: Vec<usize> = (0..4 * v).collect();
        halves.shuffle(rng);
        let mut pair = vec![0; 4 * v];
        for c in halves.chunks(2) {
            pair[c[0]] = c[1];
            pair[c[1]] = c[0];
        }
        // Torus: V - E + F = 0 with E = 2V.
        if connected(v, &pair) && trace_faces(&pair).len() == v {
            return fat_graph_from(v, &pair, circles, rng);
        }
    }
    fat_graph_from(v, &torus_grid(1, v, 0), circles, rng)
}
