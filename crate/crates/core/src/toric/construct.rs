//! σ-adjusted unimodular triangulations of the base simplex for n = 2, 3.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::lattice::standard_basis;
use crate::exactmath::Rat;

use super::geometry::{
    distance2, is_simple_polygon, normalized_volume, orient, polygon_splits, refine_triangle,
    signed_area2, InsertionOrder, Point,
};
use super::lattice_pair::LatticePair;
use super::perm::PermSymmetry;
use super::triangulation::Triangulation;
use super::verify::verify_crepant;
use super::ToricError;

/// Choices that lead to different valid adjusted triangulations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConstructionOptions {
    pub order: InsertionOrder,
    /// Which valid coarse layout to use (taken modulo the number available):
    /// the diagonal cutting each quadrilateral piece and, for a 3-cycle, the
    /// sector boundaries.
    pub layout: usize,
}

pub fn adjusted_triangulation(
    lp: &LatticePair,
    s: &PermSymmetry,
) -> Result<Triangulation, ToricError> {
    adjusted_triangulation_with(lp, s, ConstructionOptions::default())
}

pub fn adjusted_triangulation_with(
    lp: &LatticePair,
    s: &PermSymmetry,
    options: ConstructionOptions,
) -> Result<Triangulation, ToricError> {
    let n = lp.n();
    if s.n() != n {
        return Err(ToricError::DimensionMismatch {
            expected: n,
            found: s.n(),
        });
    }
    if !(2..=3).contains(&n) {
        return Err(ToricError::UnsupportedDimension(n));
    }
    if !s.preserves(lp) {
        return Err(ToricError::NotPreserved);
    }
    if n == 2 {
        return Ok(segment_subdivision(lp));
    }
    let e = standard_basis(3);
    match s.order() {
        1 => Ok(assemble(lp, s, &[tri(&e[0], &e[1], &e[2])], options.order)),
        2 => involution(lp, s, options.order, options.layout),
        3 => three_cycle(lp, s, options),
        k => Err(ToricError::UnsupportedOrder(k)),
    }
}

fn tri(a: &Point, b: &Point, c: &Point) -> [Point; 3] {
    [a.clone(), b.clone(), c.clone()]
}

fn segment_subdivision(lp: &LatticePair) -> Triangulation {
    let pts = lp.base_points();
    let fine: Vec<Vec<Point>> = pts.windows(2).map(|w| w.to_vec()).collect();
    let e = standard_basis(2);
    let coarse = vec![vec![e[0].clone(), e[1].clone()]];
    let assign = vec![0; fine.len()];
    Triangulation::from_points(2, lp.generators().to_vec(), &fine, Some((&coarse, &assign)))
}

/// Refines one representative per σ-orbit of coarse triangles and transports the
/// refinement along the orbit, so the result is σ-invariant by construction.
fn assemble(
    lp: &LatticePair,
    s: &PermSymmetry,
    representatives: &[[Point; 3]],
    order: InsertionOrder,
) -> Triangulation {
    let pts = lp.base_points();
    let mut coarse: Vec<Vec<Point>> = Vec::new();
    let mut fine: Vec<Vec<Point>> = Vec::new();
    let mut assign = Vec::new();
    for rep in representatives {
        let mut key: Vec<Point> = rep.to_vec();
        key.sort();
        let size = (1..=s.order())
            .find(|&j| {
                let mut img: Vec<Point> = rep.iter().map(|p| s.power(j).apply(p)).collect();
                img.sort();
                img == key
            })
            .unwrap_or(1);
        let refined = refine_triangle(rep, &pts, order);
        for j in 0..size {
            let g = s.power(j);
            coarse.push(rep.iter().map(|p| g.apply(p)).collect());
            let c = coarse.len() - 1;
            for t in &refined {
                fine.push(t.iter().map(|p| g.apply(p)).collect());
                assign.push(c);
            }
        }
    }
    Triangulation::from_points(3, lp.generators().to_vec(), &fine, Some((&coarse, &assign)))
}

fn nonzero_area(t: &[Point; 3]) -> bool {
    !orient(&t[0], &t[1], &t[2]).is_zero()
}

fn involution(
    lp: &LatticePair,
    s: &PermSymmetry,
    order: InsertionOrder,
    layout: usize,
) -> Result<Triangulation, ToricError> {
    let cycles = s.cycles();
    let k = cycles
        .iter()
        .find(|c| c.len() == 1)
        .expect("a fixed coordinate")[0];
    let pair = cycles
        .iter()
        .find(|c| c.len() == 2)
        .expect("a transposition");
    let (a, b) = (pair[0], pair[1]);
    let e = standard_basis(3);
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let mut mid = vec![Rat::zero(); 3];
    mid[a] = half.clone();
    mid[b] = half;

    if lp.contains(&mid) {
        let t = tri(&e[k], &e[a], &mid);
        return Ok(assemble(lp, s, &[t], order));
    }
    let pts = lp.base_points();
    // Point of L ∩ N closest to the opposite side: smallest positive x_k.
    let q = pts
        .iter()
        .filter(|p| p[a] == p[b] && p[k].is_positive())
        .min_by(|x, y| x[k].cmp(&y[k]))
        .expect("the fixed vertex lies on L")
        .clone();
    // Nearest N-point to the midpoint on the opposite side with x_a > x_b.
    let u = pts
        .iter()
        .filter(|p| p[k].is_zero() && p[a] > p[b])
        .min_by(|x, y| x[a].cmp(&y[a]))
        .expect("the vertex e_a qualifies")
        .clone();
    let su = s.apply(&u);
    let t1 = tri(&q, &u, &su);
    if normalized_volume(&t1, &lp.index()) != Rat::one() {
        return Err(ToricError::DegenerateOrbit(format!(
            "straddling triangle through {q:?} is not unimodular"
        )));
    }
    let quad = vec![e[k].clone(), e[a].clone(), u, q];
    let splits = polygon_splits(&quad);
    let mut reps = vec![t1];
    reps.extend(
        splits[layout % splits.len()]
            .iter()
            .filter(|&x| nonzero_area(x))
            .cloned(),
    );
    Ok(assemble(lp, s, &reps, order))
}

fn three_cycle(
    lp: &LatticePair,
    s: &PermSymmetry,
    options: ConstructionOptions,
) -> Result<Triangulation, ToricError> {
    let e = standard_basis(3);
    let third = Rat::new(BigInt::one(), BigInt::from(3));
    let center = vec![third; 3];
    if lp.contains(&center) {
        let t = tri(&center, &e[0], &s.apply(&e[0]));
        return Ok(assemble(lp, s, &[t], options.order));
    }
    let pts = lp.base_points();
    let p0 = pts
        .iter()
        .min_by(|x, y| {
            distance2(x, &center)
                .cmp(&distance2(y, &center))
                .then(x.cmp(y))
        })
        .expect("base points exist")
        .clone();
    let core = tri(&p0, &s.apply(&p0), &s.power(2).apply(&p0));
    let index = lp.index();
    if normalized_volume(&core, &index) != Rat::one() {
        return Err(ToricError::DegenerateOrbit(format!(
            "orbit of the point {p0:?} nearest the center is not unimodular"
        )));
    }
    let total = Rat::from_integer(index.clone());
    let mut valid = Vec::new();
    for tau in [s.clone(), s.inverse()] {
        for ej in &e {
            // When the core touches the boundary a sector collapses to a triangle.
            let triangle = vec![p0.clone(), ej.clone(), tau.apply(&p0)];
            let quad = vec![p0.clone(), ej.clone(), tau.apply(ej), tau.apply(&p0)];
            for quad in [triangle, quad] {
                let area = signed_area2(&quad).abs() * Rat::from_integer(index.clone());
                if &area * Rat::from_integer(3.into()) + Rat::one() != total {
                    continue;
                }
                if !area.is_zero() && !is_simple_polygon(&quad) {
                    continue;
                }
                for split in polygon_splits(&quad) {
                    let mut reps = vec![core.clone()];
                    reps.extend(split.into_iter().filter(nonzero_area));
                    let t = assemble(lp, s, &reps, options.order);
                    if t.is_invariant(s) && verify_crepant(&t, lp).ok && !valid.contains(&t) {
                        valid.push(t);
                    }
                }
            }
        }
    }
    if valid.is_empty() {
        return Err(ToricError::DegenerateOrbit(
            "no sector layout around the invariant core tiles the base".into(),
        ));
    }
    let pick = options.layout % valid.len();
    Ok(valid.swap_remove(pick))
}

/// Number of distinct triangulations reachable through the layout option.
pub fn layout_count(lp: &LatticePair, s: &PermSymmetry) -> usize {
    let mut seen: Vec<Triangulation> = Vec::new();
    for layout in 0..6 {
        let Ok(t) = adjusted_triangulation_with(
            lp,
            s,
            ConstructionOptions {
                order: InsertionOrder::Lexicographic,
                layout,
            },
        ) else {
            return 0;
        };
        if !seen.contains(&t) {
            seen.push(t);
        }
    }
    seen.len()
}

/// Triangulations obtained by flipping one σ-orbit of interior edges at a time.
/// Each result is re-verified and carries itself as its coarse certificate, so
/// its invariant simplices are checked directly by the adjustedness test.
pub fn equivariant_flips(
    t: &Triangulation,
    lp: &LatticePair,
    s: &PermSymmetry,
) -> Vec<Triangulation> {
    if t.n() != 3 {
        return Vec::new();
    }
    let Some(perm) = t.vertex_permutation(s) else {
        return Vec::new();
    };
    let mut edges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, x) in t.simplices().iter().enumerate() {
        for skip in 0..3 {
            let e: Vec<usize> = (0..3).filter(|&j| j != skip).map(|j| x[j]).collect();
            edges.entry(e).or_default().push(i);
        }
    }
    let v = t.vertices();
    let mut done: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out: Vec<Triangulation> = Vec::new();
    for edge in edges.keys() {
        if done.contains(edge) {
            continue;
        }
        let mut orbit = vec![edge.clone()];
        loop {
            let next = Triangulation::map_simplex(&perm, orbit.last().unwrap());
            if next == orbit[0] {
                break;
            }
            orbit.push(next);
        }
        done.extend(orbit.iter().cloned());
        let mut removed: BTreeSet<usize> = BTreeSet::new();
        let mut added: Vec<Vec<Point>> = Vec::new();
        let mut ok = true;
        for e in &orbit {
            let Some(tris) = edges.get(e).filter(|x| x.len() == 2) else {
                ok = false;
                break;
            };
            let apex: Vec<usize> = tris
                .iter()
                .map(|&i| *t.simplices()[i].iter().find(|x| !e.contains(x)).unwrap())
                .collect();
            let (a, b, c, d) = (&v[e[0]], &v[e[1]], &v[apex[0]], &v[apex[1]]);
            let strictly_convex =
                orient(c, d, a).signum() == -orient(c, d, b).signum() && !orient(c, d, a).is_zero();
            if !strictly_convex || !tris.iter().all(|i| removed.insert(*i)) {
                ok = false;
                break;
            }
            added.push(vec![c.clone(), d.clone(), a.clone()]);
            added.push(vec![c.clone(), d.clone(), b.clone()]);
        }
        if !ok {
            continue;
        }
        let mut fine: Vec<Vec<Point>> = t
            .simplices()
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, x)| t.points_of(x))
            .collect();
        fine.extend(added);
        let assign: Vec<usize> = (0..fine.len()).collect();
        let flipped =
            Triangulation::from_points(3, lp.generators().to_vec(), &fine, Some((&fine, &assign)));
        if flipped.is_invariant(s) && verify_crepant(&flipped, lp).ok && !out.contains(&flipped) {
            out.push(flipped);
        }
    }
    out
}
