use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::exactmath::rat::{format_rat, parse_rat};

use super::geometry::Point;
use super::lattice_pair::HGenerator;
use super::perm::PermSymmetry;
use super::ToricError;

/// Coarse triangulation that the fine one refines, with each fine simplex
/// assigned to the coarse simplex containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub coarse: Vec<Vec<usize>>,
    pub assignment: Vec<usize>,
}

/// Maximal simplices of a triangulation of the base simplex, as sorted index
/// tuples into a sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    n: usize,
    generators: Vec<HGenerator>,
    vertices: Vec<Point>,
    simplices: Vec<Vec<usize>>,
    certificate: Option<Certificate>,
}

impl Triangulation {
    /// Builds from simplices given by their vertex coordinates. `coarse` carries
    /// coarse simplices and, for each fine simplex in input order, its coarse index.
    pub fn from_points(
        n: usize,
        generators: Vec<HGenerator>,
        simplices: &[Vec<Point>],
        coarse: Option<(&[Vec<Point>], &[usize])>,
    ) -> Self {
        let mut all: BTreeSet<Point> = simplices.iter().flatten().cloned().collect();
        if let Some((c, _)) = coarse {
            all.extend(c.iter().flatten().cloned());
        }
        let vertices: Vec<Point> = all.into_iter().collect();
        let index: BTreeMap<&Point, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let key = |s: &[Point]| {
            let mut k: Vec<usize> = s.iter().map(|p| index[p]).collect();
            k.sort_unstable();
            k
        };
        let mut keyed: Vec<(Vec<usize>, usize)> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (key(s), i))
            .collect();
        keyed.sort();
        keyed.dedup_by(|a, b| a.0 == b.0);
        let certificate = coarse.map(|(c, assign)| {
            let coarse_keys: Vec<Vec<usize>> = c.iter().map(|s| key(s)).collect();
            let mut order: Vec<usize> = (0..coarse_keys.len()).collect();
            order.sort_by(|&a, &b| coarse_keys[a].cmp(&coarse_keys[b]));
            let mut rank = vec![0; order.len()];
            for (r, &i) in order.iter().enumerate() {
                rank[i] = r;
            }
            Certificate {
                coarse: order.iter().map(|&i| coarse_keys[i].clone()).collect(),
                assignment: keyed.iter().map(|(_, i)| rank[assign[*i]]).collect(),
            }
        });
        Self {
            n,
            generators,
            vertices,
            simplices: keyed.into_iter().map(|(k, _)| k).collect(),
            certificate,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[HGenerator] {
        &self.generators
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn points_of(&self, simplex: &[usize]) -> Vec<Point> {
        simplex.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    /// All faces of all maximal simplices, including the empty face.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for s in &self.simplices {
            for mask in 0u32..(1 << s.len()) {
                out.insert(
                    s.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        out
    }

    /// Induced permutation of vertex indices, if σ maps the vertex set to itself.
    pub fn vertex_permutation(&self, s: &PermSymmetry) -> Option<Vec<usize>> {
        self.vertices
            .iter()
            .map(|v| self.vertex_index(&s.apply(v)))
            .collect()
    }

    pub fn map_simplex(perm: &[usize], simplex: &[usize]) -> Vec<usize> {
        let mut k: Vec<usize> = simplex.iter().map(|&i| perm[i]).collect();
        k.sort_unstable();
        k
    }

    /// True iff σ maps the set of maximal simplices to itself.
    pub fn is_invariant(&self, s: &PermSymmetry) -> bool {
        let Some(perm) = self.vertex_permutation(s) else {
            return false;
        };
        let set: BTreeSet<&Vec<usize>> = self.simplices.iter().collect();
        self.simplices
            .iter()
            .all(|x| set.contains(&Self::map_simplex(&perm, x)))
    }

    pub fn to_document(&self) -> TriangulationDocument {
        TriangulationDocument {
            n: self.n,
            generators: self.generators.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(format_rat).collect())
                .collect(),
            simplices: self.simplices.clone(),
            certificate: self.certificate.clone(),
        }
    }

    pub fn from_document(doc: &TriangulationDocument) -> Result<Self, ToricError> {
        let bad = |m: String| ToricError::Document(m);
        let mut vertices = Vec::with_capacity(doc.vertices.len());
        for (i, v) in doc.vertices.iter().enumerate() {
            if v.len() != doc.n {
                return Err(bad(format!(
                    "vertex {i} has {} coordinates, expected {}",
                    v.len(),
                    doc.n
                )));
            }
            let p: Point = v
                .iter()
                .map(|s| parse_rat(s).map_err(|e| bad(format!("vertex {i}: {e}"))))
                .collect::<Result<_, _>>()?;
            vertices.push(p);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("vertices must be strictly sorted".into()));
        }
        let check = |s: &Vec<usize>, what: &str| -> Result<(), ToricError> {
            if s.iter().any(|&i| i >= vertices.len()) || s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad(format!(
                    "{what} {s:?} is not a sorted tuple of vertex indices"
                )));
            }
            Ok(())
        };
        for s in &doc.simplices {
            check(s, "simplex")?;
        }
        if let Some(c) = &doc.certificate {
            for s in &c.coarse {
                check(s, "coarse simplex")?;
            }
            if c.assignment.len() != doc.simplices.len()
                || c.assignment.iter().any(|&a| a >= c.coarse.len())
            {
                return Err(bad(
                    "certificate assignment does not match the simplices".into()
                ));
            }
        }
        Ok(Self {
            n: doc.n,
            generators: doc.generators.clone(),
            vertices,
            simplices: doc.simplices.clone(),
            certificate: doc.certificate.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ToricError> {
        let doc: TriangulationDocument =
            serde_json::from_str(text).map_err(|e| ToricError::Document(e.to_string()))?;
        Self::from_document(&doc)
    }
}

/// Serialized form: rationals as "p/q" strings, simplices as index tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationDocument {
    pub n: usize,
    pub generators: Vec<HGenerator>,
    pub vertices: Vec<Vec<String>>,
    pub simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}
