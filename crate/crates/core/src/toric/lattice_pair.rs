use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::lattice::{basis_from_generators, contains, standard_basis};
use crate::exactmath::rat::frac;
use crate::exactmath::{IntMat, Rat, RatMat};

use super::ToricError;

/// Generator `(1/m)·a` of H ⊂ (Q/Z)^n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HGenerator {
    pub exponents: Vec<i64>,
    pub modulus: u64,
}

impl HGenerator {
    pub fn new(exponents: Vec<i64>, modulus: u64) -> Self {
        Self { exponents, modulus }
    }

    pub fn vector(&self) -> Vec<Rat> {
        self.exponents
            .iter()
            .map(|&a| Rat::new(BigInt::from(a), BigInt::from(self.modulus)))
            .collect()
    }
}

/// M = Z^n inside N = M + Σ (1/m_j) a_j Z, with H = N / M.
#[derive(Debug, Clone)]
pub struct LatticePair {
    n: usize,
    generators: Vec<HGenerator>,
    basis: Vec<Vec<Rat>>,
    invariant_factors: Vec<BigInt>,
    elements: Vec<Vec<Rat>>,
    element_set: HashSet<Vec<Rat>>,
}

impl LatticePair {
    pub fn new(n: usize, generators: Vec<HGenerator>) -> Result<Self, ToricError> {
        for (index, g) in generators.iter().enumerate() {
            if g.exponents.len() != n {
                return Err(ToricError::DimensionMismatch {
                    expected: n,
                    found: g.exponents.len(),
                });
            }
            if g.modulus == 0 {
                return Err(ToricError::BadModulus { index });
            }
            if g.exponents.iter().sum::<i64>().rem_euclid(g.modulus as i64) != 0 {
                return Err(ToricError::NotSpecialLinear { index });
            }
        }
        let mut gens = standard_basis(n);
        gens.extend(generators.iter().map(HGenerator::vector));
        let basis = basis_from_generators(n, &gens);

        // M in N coordinates; its Smith form gives the invariant factors of H.
        let b = RatMat::from_columns(n, &basis);
        let mut coords = IntMat::zeros(n, n);
        for (j, e) in standard_basis(n).iter().enumerate() {
            let c = b.solve(e).expect("N has full rank");
            for (i, x) in c.into_iter().enumerate() {
                assert!(x.is_integer(), "M is contained in N");
                coords.set(i, j, x.to_integer());
            }
        }
        let invariant_factors = coords
            .smith_normal_form()
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();

        let elements = enumerate_h(n, &generators);
        let element_set = elements.iter().cloned().collect();
        Ok(Self {
            n,
            generators,
            basis,
            invariant_factors,
            elements,
            element_set,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[HGenerator] {
        &self.generators
    }

    /// Hermite-reduced basis of N.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Invariant factors (> 1) of H from the Smith form of M in N coordinates.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// [N : M] = |H|, from the Smith form.
    pub fn index(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn order(&self) -> usize {
        self.index().to_usize().expect("desk-scale group")
    }

    /// Elements of H as fractional-part vectors in [0,1)^n, sorted.
    pub fn elements(&self) -> &[Vec<Rat>] {
        &self.elements
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let f: Vec<Rat> = v.iter().map(frac).collect();
        self.element_set.contains(&f)
    }

    /// Slow-path membership through the basis; used as a cross-check.
    pub fn contains_by_basis(&self, v: &[Rat]) -> bool {
        contains(&self.basis, v)
    }

    /// N ∩ bΔ: the unit vectors together with the elements of H of coordinate sum 1.
    pub fn base_points(&self) -> Vec<Vec<Rat>> {
        let mut pts: BTreeSet<Vec<Rat>> = standard_basis(self.n).into_iter().collect();
        for h in &self.elements {
            if h.iter().sum::<Rat>().is_one() {
                pts.insert(h.clone());
            }
        }
        pts.into_iter().collect()
    }

    /// N ∩ bΔ restricted to the points with at least one zero... all points, as a
    /// quick predicate for base-simplex membership.
    pub fn is_base_point(&self, v: &[Rat]) -> bool {
        v.len() == self.n
            && v.iter().all(|x| *x >= Rat::zero())
            && v.iter().sum::<Rat>().is_one()
            && self.contains(v)
    }
}

fn enumerate_h(n: usize, generators: &[HGenerator]) -> Vec<Vec<Rat>> {
    let steps: Vec<Vec<Rat>> = generators.iter().map(HGenerator::vector).collect();
    let zero = vec![Rat::zero(); n];
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for s in &steps {
            let y: Vec<Rat> = x.iter().zip(s).map(|(a, b)| frac(&(a + b))).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}
