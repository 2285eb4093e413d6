//! Exact geometry on the base simplex Σ x_i = 1.
//!
//! Planar work happens in the chart that drops the last coordinate; the chart
//! sends M ∩ {Σ x = 0} onto Z^{n-1}.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactmath::lattice::{coordinates, intersect_with_subspace};
use crate::exactmath::{Rat, RatMat};

pub type Point = Vec<Rat>;

/// Order in which lattice points are inserted when refining a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InsertionOrder {
    #[default]
    Lexicographic,
    ReverseLexicographic,
}

impl InsertionOrder {
    pub fn all() -> [Self; 2] {
        [Self::Lexicographic, Self::ReverseLexicographic]
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Lexicographic => "lex",
            Self::ReverseLexicographic => "revlex",
        }
    }
}

fn sub(a: &[Rat], b: &[Rat]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Edge vectors in the chart (last coordinate dropped).
fn chart_edges(vertices: &[Point]) -> Vec<Vec<Rat>> {
    let v0 = &vertices[0];
    vertices[1..]
        .iter()
        .map(|v| {
            let mut e = sub(v, v0);
            e.pop();
            e
        })
        .collect()
}

/// Normalized volume of a full-dimensional simplex of the base, relative to N,
/// where `index` = [N : M].
pub fn normalized_volume(vertices: &[Point], index: &BigInt) -> Rat {
    let edges = chart_edges(vertices);
    if edges.is_empty() {
        return Rat::from_integer(index.clone());
    }
    let d = RatMat::from_rows(&edges).determinant();
    d.abs() * Rat::from_integer(index.clone())
}

/// Normalized volume of a simplex of any dimension relative to the lattice that
/// `lattice` induces on the direction space of its affine span. Points get 1.
pub fn relative_volume(vertices: &[Point], lattice: &[Point]) -> Rat {
    if vertices.len() <= 1 {
        return Rat::from_integer(1.into());
    }
    let n = vertices[0].len();
    let edges: Vec<Point> = vertices[1..].iter().map(|v| sub(v, &vertices[0])).collect();
    if RatMat::from_rows(&edges).rank() < edges.len() {
        return Rat::zero();
    }
    let sublattice = intersect_with_subspace(n, lattice, &edges);
    let coords: Vec<Vec<Rat>> = edges
        .iter()
        .map(|e| coordinates(&sublattice, e).expect("edge lies in its span"))
        .collect();
    RatMat::from_rows(&coords).determinant().abs()
}

/// Twice the signed area of (a, b, c) in the chart.
pub fn orient(a: &[Rat], b: &[Rat], c: &[Rat]) -> Rat {
    let (ab0, ab1) = (&b[0] - &a[0], &b[1] - &a[1]);
    let (ac0, ac1) = (&c[0] - &a[0], &c[1] - &a[1]);
    ab0 * ac1 - ab1 * ac0
}

/// Closed containment in a triangle given in either orientation.
pub fn in_triangle(p: &[Rat], t: &[Point; 3]) -> bool {
    let s = orient(&t[0], &t[1], &t[2]).signum();
    (0..3).all(|i| {
        let o = orient(&t[i], &t[(i + 1) % 3], p);
        o.is_zero() || o.signum() == s
    })
}

/// True iff the closed segments [a,b] and [c,d] intersect.
pub fn segments_intersect(a: &[Rat], b: &[Rat], c: &[Rat], d: &[Rat]) -> bool {
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    if o1 != o2 && o3 != o4 && !(o1.is_zero() && o2.is_zero()) {
        return true;
    }
    let on = |p: &[Rat], q: &[Rat], r: &[Rat]| {
        orient(p, q, r).is_zero()
            && (0..2).all(|i| {
                r[i] >= p[i].clone().min(q[i].clone()) && r[i] <= p[i].clone().max(q[i].clone())
            })
    };
    on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b)
}

/// True iff the polygon's edges meet only at shared consecutive endpoints.
pub fn is_simple_polygon(poly: &[Point]) -> bool {
    let k = poly.len();
    if k < 3 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let adjacent = j == i + 1 || (i == 0 && j == k - 1);
            let (a, b) = (&poly[i], &poly[(i + 1) % k]);
            let (c, d) = (&poly[j], &poly[(j + 1) % k]);
            if adjacent {
                // Consecutive edges may only share their common vertex.
                let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                if orient(p, shared, q).is_zero() {
                    let back = (0..2).all(|t| {
                        let u = &p[t] - &shared[t];
                        let w = &q[t] - &shared[t];
                        !(u * w).is_negative()
                    });
                    if back {
                        return false;
                    }
                }
            } else if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

pub fn signed_area2(poly: &[Point]) -> Rat {
    let k = poly.len();
    (1..k.saturating_sub(1))
        .map(|i| orient(&poly[0], &poly[i], &poly[i + 1]))
        .sum()
}

/// Drops repeated and collinear vertices.
fn clean_polygon(poly: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for p in poly {
        if out.last() != Some(p) {
            out.push(p.clone());
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    loop {
        let k = out.len();
        if k < 3 {
            return out;
        }
        let drop =
            (0..k).find(|&i| orient(&out[(i + k - 1) % k], &out[i], &out[(i + 1) % k]).is_zero());
        match drop {
            Some(i) => {
                out.remove(i);
            }
            None => return out,
        }
    }
}

/// Ear clipping of a simple polygon; triangles come out counterclockwise in the chart.
pub fn ear_clip(poly: &[Point]) -> Vec<[Point; 3]> {
    let mut p = clean_polygon(poly);
    if p.len() < 3 {
        return Vec::new();
    }
    if signed_area2(&p).is_negative() {
        p.reverse();
    }
    let mut out = Vec::new();
    while p.len() > 3 {
        let k = p.len();
        let ear = (0..k).find(|&i| {
            let (a, b, c) = (&p[(i + k - 1) % k], &p[i], &p[(i + 1) % k]);
            if !orient(a, b, c).is_positive() {
                return false;
            }
            let tri = [a.clone(), b.clone(), c.clone()];
            (0..k)
                .filter(|&j| j != i && j != (i + k - 1) % k && j != (i + 1) % k)
                .all(|j| !in_triangle(&p[j], &tri))
        });
        let i = ear.expect("simple polygon has an ear");
        let k = p.len();
        out.push([
            p[(i + k - 1) % k].clone(),
            p[i].clone(),
            p[(i + 1) % k].clone(),
        ]);
        p.remove(i);
        p = clean_polygon(&p);
        if p.len() < 3 {
            return out;
        }
    }
    out.push([p[0].clone(), p[1].clone(), p[2].clone()]);
    out
}

/// Every way to cut a simple polygon of at most four (cleaned) vertices into
/// triangles: one for a triangle, one per valid diagonal for a quadrilateral.
pub fn polygon_splits(poly: &[Point]) -> Vec<Vec<[Point; 3]>> {
    let p = clean_polygon(poly);
    match p.len() {
        0..=2 => vec![Vec::new()],
        3 => vec![vec![[p[0].clone(), p[1].clone(), p[2].clone()]]],
        4 => {
            let sign = signed_area2(&p).signum();
            let mut out = Vec::new();
            for d in 0..2 {
                let t1 = [p[d].clone(), p[d + 1].clone(), p[d + 2].clone()];
                let t2 = [p[d].clone(), p[d + 2].clone(), p[(d + 3) % 4].clone()];
                let ok = [&t1, &t2]
                    .iter()
                    .all(|t| orient(&t[0], &t[1], &t[2]).signum() == sign);
                if ok {
                    out.push(vec![t1, t2]);
                }
            }
            out
        }
        _ => vec![ear_clip(&p)],
    }
}

fn insertion_cmp(order: InsertionOrder, a: &Point, b: &Point) -> Ordering {
    match order {
        InsertionOrder::Lexicographic => a.cmp(b),
        InsertionOrder::ReverseLexicographic => b.cmp(a),
    }
}

/// Refines a triangle by inserting every point of `lattice_points` lying in it.
/// A point strictly inside splits its triangle in three; a point on an edge
/// splits both triangles sharing that edge. Once every point is a vertex, each
/// triangle is an empty lattice triangle, hence of normalized area 1.
pub fn refine_triangle(
    triangle: &[Point; 3],
    lattice_points: &[Point],
    order: InsertionOrder,
) -> Vec<[Point; 3]> {
    if orient(&triangle[0], &triangle[1], &triangle[2]).is_zero() {
        return Vec::new();
    }
    let mut start = triangle.clone();
    if orient(&start[0], &start[1], &start[2]).is_negative() {
        start.swap(1, 2);
    }
    let mut pts: Vec<Point> = lattice_points
        .iter()
        .filter(|p| in_triangle(p, triangle) && !triangle.contains(p))
        .cloned()
        .collect();
    pts.sort_by(|a, b| insertion_cmp(order, a, b));
    pts.dedup();

    let mut tris = vec![start];
    for p in pts {
        let mut next = Vec::with_capacity(tris.len() + 2);
        for t in tris {
            if !in_triangle(&p, &t) || t.contains(&p) {
                next.push(t);
                continue;
            }
            for i in 0..3 {
                let (a, b) = (&t[i], &t[(i + 1) % 3]);
                if orient(a, b, &p).is_positive() {
                    next.push([a.clone(), b.clone(), p.clone()]);
                }
            }
        }
        tris = next;
    }
    tris
}

/// Distance squared in the ambient coordinates.
pub fn distance2(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat::{int, rat};

    fn p(v: &[i64], d: i64) -> Point {
        v.iter().map(|&x| rat(x, d)).collect()
    }

    #[test]
    fn refinement_of_unit_triangle_with_all_points() {
        // Triangle of normalized area 4 (in Z^2 chart coordinates, with a dummy third coordinate).
        let t = [p(&[0, 0, 1], 1), p(&[2, 0, -1], 1), p(&[0, 2, -1], 1)];
        let mut pts = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 - x {
                pts.push(p(&[x, y, 1 - x - y], 1));
            }
        }
        for order in InsertionOrder::all() {
            let tris = refine_triangle(&t, &pts, order);
            assert_eq!(tris.len(), 4);
            for tri in &tris {
                assert_eq!(orient(&tri[0], &tri[1], &tri[2]), int(1));
            }
        }
    }

    #[test]
    fn ear_clipping_quadrilateral() {
        let q = vec![
            p(&[0, 0, 0], 1),
            p(&[2, 0, 0], 1),
            p(&[2, 1, 0], 1),
            p(&[0, 2, 0], 1),
        ];
        assert!(is_simple_polygon(&q));
        let tris = ear_clip(&q);
        assert_eq!(tris.len(), 2);
        let area: Rat = tris.iter().map(|t| orient(&t[0], &t[1], &t[2])).sum();
        assert_eq!(area, signed_area2(&q).abs());
        let bow = vec![
            p(&[0, 0, 0], 1),
            p(&[2, 2, 0], 1),
            p(&[2, 0, 0], 1),
            p(&[0, 2, 0], 1),
        ];
        assert!(!is_simple_polygon(&bow));
    }

    #[test]
    fn relative_volumes() {
        let lattice = crate::exactmath::lattice::standard_basis(3);
        let seg = vec![p(&[1, 0, 0], 1), p(&[0, 1, 0], 1)];
        assert_eq!(relative_volume(&seg, &lattice), int(1));
        let half = vec![p(&[0, 0, 0], 1), p(&[1, 1, 1], 3)];
        assert_eq!(relative_volume(&half, &lattice), rat(1, 3));
        assert_eq!(relative_volume(&[p(&[1, 0, 0], 1)], &lattice), int(1));
    }
}
