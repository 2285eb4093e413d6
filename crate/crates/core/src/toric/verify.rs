use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactmath::rat::format_rat;
use crate::exactmath::{Rat, RatMat};

use super::geometry::{normalized_volume, orient, Point};
use super::lattice_pair::LatticePair;
use super::lp::max_common_weight;
use super::triangulation::Triangulation;

/// Outcome of the crepancy check, with reasons on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrepantReport {
    pub ok: bool,
    pub simplex_count: usize,
    pub expected_count: String,
    pub volume_sum: String,
    pub failures: Vec<String>,
    /// Vertices lying on another simplex without being one of its vertices.
    pub non_face_to_face: Vec<String>,
}

pub fn verify_crepant(t: &Triangulation, lp: &LatticePair) -> CrepantReport {
    let n = lp.n();
    let index = lp.index();
    let mut failures = Vec::new();
    if t.n() != n {
        failures.push(format!(
            "triangulation has n = {}, lattice pair has n = {n}",
            t.n()
        ));
    }
    for v in t.vertices() {
        if !lp.is_base_point(v) {
            failures.push(format!(
                "vertex {} is not in N on the base simplex",
                fmt_point(v)
            ));
        }
    }
    let points: Vec<Vec<Point>> = t.simplices().iter().map(|s| t.points_of(s)).collect();
    let mut sum = Rat::zero();
    for (i, p) in points.iter().enumerate() {
        if p.len() != n {
            failures.push(format!(
                "simplex {i} has {} vertices, expected {n}",
                p.len()
            ));
            continue;
        }
        let vol = normalized_volume(p, &index);
        if !vol.is_one() {
            failures.push(format!(
                "simplex {i} has normalized volume {}",
                format_rat(&vol)
            ));
        }
        sum += vol;
    }
    let expected = Rat::from_integer(index.clone());
    if sum != expected {
        failures.push(format!(
            "normalized volumes sum to {}, expected {}",
            format_rat(&sum),
            format_rat(&expected)
        ));
    }
    if failures.is_empty() {
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if interiors_overlap(&points[i], &points[j]) {
                    failures.push(format!("simplices {i} and {j} have overlapping interiors"));
                }
            }
        }
    }
    let mut non_face_to_face = Vec::new();
    for (vi, v) in t.vertices().iter().enumerate() {
        for (si, s) in t.simplices().iter().enumerate() {
            if !s.contains(&vi) && points[si].len() == n && in_closed_simplex(v, &points[si]) {
                non_face_to_face.push(format!("vertex {vi} lies on simplex {si}"));
            }
        }
    }
    CrepantReport {
        ok: failures.is_empty(),
        simplex_count: t.len(),
        expected_count: index.to_string(),
        volume_sum: format_rat(&sum),
        failures,
        non_face_to_face,
    }
}

fn fmt_point(p: &[Rat]) -> String {
    let parts: Vec<String> = p.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

fn bounding_boxes_meet(a: &[Point], b: &[Point]) -> bool {
    (0..a[0].len()).all(|k| {
        let amin = a.iter().map(|p| &p[k]).min().unwrap();
        let amax = a.iter().map(|p| &p[k]).max().unwrap();
        let bmin = b.iter().map(|p| &p[k]).min().unwrap();
        let bmax = b.iter().map(|p| &p[k]).max().unwrap();
        amin < bmax && bmin < amax
    })
}

/// True iff two full-dimensional simplices of the base have intersecting interiors.
pub fn interiors_overlap(a: &[Point], b: &[Point]) -> bool {
    if !bounding_boxes_meet(a, b) {
        return false;
    }
    match a[0].len() {
        2 => true,
        3 => !separated_planar(a, b),
        _ => interiors_overlap_lp(a, b),
    }
}

/// Exact LP test valid in every dimension.
pub fn interiors_overlap_lp(a: &[Point], b: &[Point]) -> bool {
    let n = a[0].len();
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(u8::from(i == j).into()))
                .collect()
        })
        .collect();
    max_common_weight(&[(a, true), (b, false)], &rows).is_some_and(|t| t.is_positive())
}

/// Separating-axis test on the edge normals of two triangles in the chart.
fn separated_planar(a: &[Point], b: &[Point]) -> bool {
    for poly in [a, b] {
        for i in 0..3 {
            let (p, q) = (&poly[i], &poly[(i + 1) % 3]);
            let normal = [&p[1] - &q[1], &q[0] - &p[0]];
            let project = |pts: &[Point]| {
                let vals: Vec<Rat> = pts
                    .iter()
                    .map(|x| &x[0] * &normal[0] + &x[1] * &normal[1])
                    .collect();
                let lo = vals.iter().min().unwrap().clone();
                let hi = vals.iter().max().unwrap().clone();
                (lo, hi)
            };
            let (alo, ahi) = project(a);
            let (blo, bhi) = project(b);
            if ahi <= blo || bhi <= alo {
                return true;
            }
        }
    }
    false
}

/// Closed containment in a full-dimensional simplex of the base.
pub fn in_closed_simplex(p: &[Rat], simplex: &[Point]) -> bool {
    let n = p.len();
    if n == 3 {
        let s = orient(&simplex[0], &simplex[1], &simplex[2]).signum();
        return (0..3).all(|i| {
            let o = orient(&simplex[i], &simplex[(i + 1) % 3], p);
            o.is_zero() || o.signum() == s
        });
    }
    // Barycentric coordinates: the simplex vertices form a basis of R^n.
    let m = RatMat::from_columns(n, simplex);
    m.solve(p)
        .is_some_and(|lambda| lambda.iter().all(|x| !x.is_negative()))
}
