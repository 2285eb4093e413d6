//! Seeded random abelian subgroups of the diagonal torus of SL_3 together with
//! a coordinate permutation preserving them.

use mckay_core::toric::{HGenerator, LatticePair, PermSymmetry};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SYMMETRIES: [&str; 5] = ["(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"];

/// Largest modulus; with at most two independent directions |H| <= 49.
pub const MAX_MODULUS: u64 = 7;

#[derive(Debug, Clone)]
pub struct Instance {
    pub lattice: LatticePair,
    pub symmetry: PermSymmetry,
}

impl Instance {
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self
            .lattice
            .generators()
            .iter()
            .map(|g| {
                let parts: Vec<String> = g.exponents.iter().map(i64::to_string).collect();
                format!("{}@{}", parts.join(","), g.modulus)
            })
            .collect();
        format!(
            "--gen \"{}\" --perm \"{}\"",
            gens.join(";"),
            self.symmetry.to_cycle_string()
        )
    }
}

/// The σ-orbits of the vectors (a, b, -a-b) mod m.
pub fn symmetric_generators(s: &PermSymmetry, m: u64, vectors: &[(i64, i64)]) -> Vec<HGenerator> {
    let mi = m as i64;
    let mut gens = Vec::new();
    for &(a, b) in vectors {
        let v = [
            a.rem_euclid(mi),
            b.rem_euclid(mi),
            (-(a + b)).rem_euclid(mi),
        ];
        for j in 0..s.order() {
            let p = s.power(j);
            let mut image = vec![0; 3];
            for (i, x) in v.iter().enumerate() {
                image[p.images()[i]] = *x;
            }
            gens.push(HGenerator::new(image, m));
        }
    }
    gens
}

/// `count` nontrivial instances, reproducible from `seed`.
pub fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = PermSymmetry::parse_cycles(3, SYMMETRIES.choose(&mut rng).expect("nonempty"))
            .expect("valid cycle");
        let m = rng.gen_range(2..=MAX_MODULUS);
        let k = rng.gen_range(1..=2);
        let vectors: Vec<(i64, i64)> = (0..k)
            .map(|_| (rng.gen_range(0..m as i64), rng.gen_range(0..m as i64)))
            .collect();
        let lattice = LatticePair::new(3, symmetric_generators(&s, m, &vectors))
            .expect("coordinate sums vanish mod m");
        if lattice.order() > 1 {
            out.push(Instance {
                lattice,
                symmetry: s,
            });
        }
    }
    out
}
