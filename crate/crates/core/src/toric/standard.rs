//! Standard pairs and the g-standard / g-adjusted conditions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactmath::rat::format_rat;
use crate::exactmath::{Rat, RatMat};

use super::geometry::{relative_volume, Point};
use super::lp::max_common_weight;
use super::perm::PermSymmetry;
use super::triangulation::Triangulation;
use super::ToricError;

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Model pair (Δ, Δ ∩ L) of type (l_1,…,l_s | m_1,…,m_t) with its triangulation
/// by the simplices Δ(r_1,…,r_s).
#[derive(Debug, Clone)]
pub struct StandardPair {
    pub ls: Vec<usize>,
    pub ms: Vec<usize>,
    /// Cyclic shift inside each l-block; m-coordinates are left alone.
    pub symmetry: PermSymmetry,
    /// Δ(r) for every choice of omitted index r_i in each l-block.
    pub simplices: Vec<Vec<Point>>,
    /// The r-tuples labelling `simplices`.
    pub labels: Vec<Vec<usize>>,
    /// Vertices of Δ ∩ L: the origin, the l-block barycenters, the m-vertices.
    pub fixed_vertices: Vec<Point>,
    /// Normalized volume of Δ ∩ L relative to Z^D ∩ L.
    pub fixed_normalized_volume: Rat,
}

impl StandardPair {
    pub fn dim(&self) -> usize {
        self.ls.iter().sum::<usize>() + self.ms.iter().sum::<usize>()
    }

    pub fn fixed_dim(&self) -> usize {
        self.fixed_vertices.len() - 1
    }

    /// Normalized volume divided by (dim Δ ∩ L)!.
    pub fn fixed_volume(&self) -> Rat {
        &self.fixed_normalized_volume / Rat::from_integer(factorial(self.fixed_dim()))
    }

    /// 1/(l_1⋯l_s) · 1/(dim Δ ∩ L)!.
    pub fn expected_fixed_volume(&self) -> Rat {
        let prod: usize = self.ls.iter().product();
        Rat::new(
            BigInt::one(),
            BigInt::from(prod) * factorial(self.fixed_dim()),
        )
    }

    /// Index of g(Δ(r)) among the simplices.
    pub fn image_of(&self, index: usize) -> usize {
        let shifted: Vec<usize> = self.labels[index]
            .iter()
            .zip(&self.ls)
            .map(|(&r, &l)| (r + 1) % l)
            .collect();
        self.labels
            .iter()
            .position(|x| *x == shifted)
            .expect("labels are closed under the shift")
    }
}

pub fn standard_pair(ls: &[usize], ms: &[usize]) -> StandardPair {
    assert!(
        ls.iter().chain(ms).all(|&x| x >= 1),
        "block sizes are positive"
    );
    let d: usize = ls.iter().sum::<usize>() + ms.iter().sum::<usize>();
    let unit = |i: usize| -> Point {
        (0..d)
            .map(|j| if i == j { Rat::one() } else { Rat::zero() })
            .collect()
    };
    let mut blocks = Vec::new();
    let mut offset = 0;
    for &l in ls {
        blocks.push((offset..offset + l).collect::<Vec<_>>());
        offset += l;
    }
    let m_coords: Vec<usize> = (offset..d).collect();
    let symmetry = PermSymmetry::from_cycles(d, &blocks).expect("disjoint blocks");

    let origin = vec![Rat::zero(); d];
    let barycenters: Vec<Point> = blocks
        .iter()
        .map(|b| {
            let w = Rat::new(BigInt::one(), BigInt::from(b.len()));
            (0..d)
                .map(|j| {
                    if b.contains(&j) {
                        w.clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    let m_vertices: Vec<Point> = m_coords.iter().map(|&i| unit(i)).collect();

    let mut labels: Vec<Vec<usize>> = vec![Vec::new()];
    for &l in ls {
        labels = labels
            .into_iter()
            .flat_map(|x| {
                (0..l).map(move |r| {
                    let mut y = x.clone();
                    y.push(r);
                    y
                })
            })
            .collect();
    }
    let simplices = labels
        .iter()
        .map(|r| {
            let mut pts: Vec<Point> = Vec::new();
            for (b, &ri) in blocks.iter().zip(r) {
                pts.extend(
                    b.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != ri)
                        .map(|(_, &i)| unit(i)),
                );
            }
            pts.extend(m_vertices.iter().cloned());
            pts.push(origin.clone());
            pts.extend(barycenters.iter().cloned());
            pts
        })
        .collect();

    let mut fixed_vertices = vec![origin];
    fixed_vertices.extend(barycenters);
    fixed_vertices.extend(m_vertices);
    let lattice = crate::exactmath::lattice::standard_basis(d);
    let fixed_normalized_volume = relative_volume(&fixed_vertices, &lattice);
    StandardPair {
        ls: ls.to_vec(),
        ms: ms.to_vec(),
        symmetry,
        simplices,
        labels,
        fixed_vertices,
        fixed_normalized_volume,
    }
}

/// Outcome of the g-standard test on one invariant simplex, in the cone picture
/// Σ̂ = conv(0, Σ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GStandardReport {
    /// (a) cycle lengths of σ on the vertices, descending.
    pub vertex_cycle_type: Vec<usize>,
    pub vertices_independent: bool,
    /// (b) codimension of Σ̂ ∩ L in Σ̂ against Σ(l_i − 1).
    pub codim: usize,
    pub codim_expected: usize,
    /// (c) the refinement inside Σ is σ-invariant and covers Σ.
    pub refinement_invariant: bool,
    pub refinement_covers: bool,
    /// (c) cycle lengths of σ on refinement faces of dimension dim(Σ̂ ∩ L) + 1
    /// meeting L.
    pub m_type: Vec<usize>,
    /// (d) volume of Σ̂ ∩ L in the lattice spanned by the vertices.
    pub fixed_volume: String,
    pub expected_volume: String,
    pub standard: bool,
}

fn cycle_type_of(perm: &BTreeMap<usize, usize>) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in perm.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while seen.insert(i) {
            len += 1;
            i = perm[&i];
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Barycentric containment of `p` in the closed simplex spanned by linearly
/// independent `vertices`.
fn in_hull(p: &[Rat], vertices: &[Point]) -> bool {
    RatMat::from_columns(p.len(), vertices)
        .solve(p)
        .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
}

pub fn is_g_standard(
    sigma: &[Point],
    t: &Triangulation,
    s: &PermSymmetry,
) -> Result<GStandardReport, ToricError> {
    let key: BTreeSet<&Point> = sigma.iter().collect();
    let images: Vec<Point> = sigma.iter().map(|v| s.apply(v)).collect();
    if images.iter().any(|v| !key.contains(v)) {
        return Err(ToricError::NotInvariant);
    }
    let n = s.n();
    let nv = sigma.len();
    let local: BTreeMap<usize, usize> = (0..nv)
        .map(|i| (i, sigma.iter().position(|v| *v == images[i]).unwrap()))
        .collect();
    let vertex_cycle_type = cycle_type_of(&local);
    let k = vertex_cycle_type.len();
    let vertices_independent = RatMat::from_rows(sigma).rank() == nv;

    // (b) dim(span Σ ∩ Fix σ) = rank V + rank L − rank(V ∪ L).
    let fixed = s.fixed_subspace();
    let mut both = sigma.to_vec();
    both.extend(fixed.iter().cloned());
    let rank_v = RatMat::from_rows(sigma).rank();
    let rank_l = fixed.len();
    let fixed_dim = rank_v + rank_l - RatMat::from_rows(&both).rank();
    let codim = nv - fixed_dim.min(nv);
    let codim_expected: usize = vertex_cycle_type.iter().map(|l| l - 1).sum();

    // (c) refinement restricted to Σ.
    let perm = t.vertex_permutation(s);
    let inside: Vec<usize> = (0..t.vertices().len())
        .filter(|&i| vertices_independent && in_hull(&t.vertices()[i], sigma))
        .collect();
    let faces: BTreeSet<Vec<usize>> = t
        .faces()
        .into_iter()
        .filter(|f| f.iter().all(|i| inside.contains(i)))
        .collect();
    let pieces: Vec<&Vec<usize>> = faces.iter().filter(|f| f.len() == nv).collect();
    let refinement_invariant = perm.as_ref().is_some_and(|p| {
        pieces
            .iter()
            .all(|f| faces.contains(&Triangulation::map_simplex(p, f)))
    });
    let sigma_vol = relative_volume(sigma, sigma);
    let covered: Rat = pieces
        .iter()
        .map(|f| relative_volume(&t.points_of(f), sigma))
        .sum();
    let refinement_covers = vertices_independent && covered == sigma_vol;

    let rows: Vec<Vec<Rat>> = {
        let p = RatMat::from_int(&s.matrix());
        RatMat::identity(n).sub(&p).transpose().columns()
    };
    let meeting: Vec<&Vec<usize>> = faces
        .iter()
        .filter(|f| f.len() == k + 1)
        .filter(|f| {
            let pts = t.points_of(f);
            max_common_weight(&[(&pts, true)], &rows).is_some()
        })
        .collect();
    let m_type = match &perm {
        Some(p) => {
            let index: BTreeMap<&Vec<usize>, usize> =
                meeting.iter().enumerate().map(|(i, f)| (*f, i)).collect();
            let images: Option<BTreeMap<usize, usize>> = meeting
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    index
                        .get(&Triangulation::map_simplex(p, f))
                        .map(|&j| (i, j))
                })
                .collect();
            images.map(|m| cycle_type_of(&m)).unwrap_or_default()
        }
        None => Vec::new(),
    };

    // (d) Σ̂ ∩ L = conv(0, orbit barycenters).
    let mut orbit_points = vec![vec![Rat::zero(); n]];
    let mut seen = BTreeSet::new();
    for start in 0..nv {
        if !seen.insert(start) {
            continue;
        }
        let mut orbit = vec![start];
        let mut i = local[&start];
        while i != start {
            seen.insert(i);
            orbit.push(i);
            i = local[&i];
        }
        let w = Rat::new(BigInt::one(), BigInt::from(orbit.len()));
        let mut b = vec![Rat::zero(); n];
        for &j in &orbit {
            for (x, y) in b.iter_mut().zip(&sigma[j]) {
                *x += y * &w;
            }
        }
        orbit_points.push(b);
    }
    let fixed_volume = relative_volume(&orbit_points, sigma) / Rat::from_integer(factorial(k));
    let prod: usize = vertex_cycle_type.iter().product();
    let expected_volume = Rat::new(BigInt::one(), BigInt::from(prod) * factorial(k));

    let standard = vertices_independent
        && codim == codim_expected
        && refinement_invariant
        && refinement_covers
        && fixed_volume == expected_volume;
    Ok(GStandardReport {
        vertex_cycle_type,
        vertices_independent,
        codim,
        codim_expected,
        refinement_invariant,
        refinement_covers,
        m_type,
        fixed_volume: format_rat(&fixed_volume),
        expected_volume: format_rat(&expected_volume),
        standard,
    })
}

/// Adjustedness against the stored certificate: the coarse triangulation is
/// σ-invariant, every fine simplex lies in its assigned coarse simplex, and each
/// σ-invariant coarse face is g-standard.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjustedReport {
    pub has_certificate: bool,
    pub coarse_invariant: bool,
    pub assignment_consistent: bool,
    pub invariant_coarse_faces: usize,
    pub nonstandard_faces: Vec<Vec<usize>>,
    pub adjusted: bool,
}

pub fn check_adjusted(t: &Triangulation, s: &PermSymmetry) -> AdjustedReport {
    let Some(cert) = t.certificate() else {
        return AdjustedReport {
            has_certificate: false,
            coarse_invariant: false,
            assignment_consistent: false,
            invariant_coarse_faces: 0,
            nonstandard_faces: Vec::new(),
            adjusted: false,
        };
    };
    let perm = t.vertex_permutation(s);
    let coarse: BTreeSet<&Vec<usize>> = cert.coarse.iter().collect();
    let coarse_invariant = perm.as_ref().is_some_and(|p| {
        cert.coarse
            .iter()
            .all(|c| coarse.contains(&Triangulation::map_simplex(p, c)))
    });
    let assignment_consistent = t.simplices().iter().zip(&cert.assignment).all(|(f, &c)| {
        let hull = t.points_of(&cert.coarse[c]);
        t.points_of(f).iter().all(|p| in_hull(p, &hull))
    });
    let mut faces = BTreeSet::new();
    for c in &cert.coarse {
        for mask in 1u32..(1 << c.len()) {
            let f: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            faces.insert(f);
        }
    }
    let mut invariant_coarse_faces = 0;
    let mut nonstandard_faces = Vec::new();
    if let Some(p) = &perm {
        for f in faces {
            if Triangulation::map_simplex(p, &f) != f {
                continue;
            }
            invariant_coarse_faces += 1;
            let ok = is_g_standard(&t.points_of(&f), t, s).is_ok_and(|r| r.standard);
            if !ok {
                nonstandard_faces.push(f);
            }
        }
    }
    let adjusted = coarse_invariant && assignment_consistent && nonstandard_faces.is_empty();
    AdjustedReport {
        has_certificate: true,
        coarse_invariant,
        assignment_consistent,
        invariant_coarse_faces,
        nonstandard_faces,
        adjusted,
    }
}
