//! Concrete groups and outer actions used throughout the examples.

use crate::exactmath::CycloInt;

use super::action::OuterAction;
use super::element::GroupElement;
use super::group::{ClosureOptions, FiniteMatrixGroup, DEFAULT_CAP};
use super::GroupError;

/// Generators, closure mode and the normalizing matrix `h`.
#[derive(Debug, Clone)]
pub struct GroupFixture {
    pub name: String,
    pub generators: Vec<GroupElement>,
    pub projective: bool,
    pub h: GroupElement,
}

impl GroupFixture {
    pub fn build(&self, cap: usize) -> Result<(FiniteMatrixGroup, OuterAction), GroupError> {
        let g = FiniteMatrixGroup::close(
            &self.generators,
            ClosureOptions {
                cap,
                projective: self.projective,
            },
        )?;
        let a = OuterAction::new(&g, &self.h)?;
        Ok((g, a))
    }

    pub fn build_default(&self) -> Result<(FiniteMatrixGroup, OuterAction), GroupError> {
        self.build(DEFAULT_CAP)
    }
}

fn int(v: i64) -> CycloInt {
    CycloInt::from_int(1, v)
}

fn gauss(re: i64, im: i64) -> CycloInt {
    CycloInt::from_terms(4, &[(re, 0), (im, 1)])
}

fn mat2(a: CycloInt, b: CycloInt, c: CycloInt, d: CycloInt) -> GroupElement {
    GroupElement::from_rows(vec![vec![a, b], vec![c, d]])
}

/// The rotation [[0,1],[-1,0]].
pub fn rotation_quarter() -> GroupElement {
    mat2(int(0), int(1), int(-1), int(0))
}

/// The reflection [[0,1],[1,0]].
pub fn coordinate_swap() -> GroupElement {
    mat2(int(0), int(1), int(1), int(0))
}

/// Generator diag(ω_n, ω_n⁻¹) of the cyclic subgroup of the SL_2 torus.
pub fn cyclic_generator(n: u64) -> GroupElement {
    GroupElement::diagonal_roots(n, &[1, -1])
}

/// Which normalizer acts on the cyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicAction {
    /// [[0,1],[-1,0]]
    Rotation,
    /// [[0,1],[1,0]]
    Swap,
}

pub fn cyclic(n: u64, action: CyclicAction) -> GroupFixture {
    let h = match action {
        CyclicAction::Rotation => rotation_quarter(),
        CyclicAction::Swap => coordinate_swap(),
    };
    GroupFixture {
        name: format!("cyclic-{n}"),
        generators: vec![cyclic_generator(n)],
        projective: false,
        h,
    }
}

/// Binary dihedral group of order 4(r-2) with the outer action of
/// diag(ω_{4(r-2)}, ω_{4(r-2)}⁻¹).
pub fn binary_dihedral(r: u64) -> GroupFixture {
    assert!(r >= 3, "binary dihedral D_r needs r >= 3");
    let k = 2 * (r - 2);
    GroupFixture {
        name: format!("binary-dihedral-{r}"),
        generators: vec![cyclic_generator(k), rotation_quarter()],
        projective: false,
        h: GroupElement::diagonal_roots(2 * k, &[1, -1]),
    }
}

/// Quaternion group with the order-3 automorphism (an integral multiple of a
/// normalizer in SL_2, which induces the same conjugation).
pub fn d4_triality() -> GroupFixture {
    GroupFixture {
        name: "d4-triality".into(),
        generators: vec![cyclic_generator(4), rotation_quarter()],
        projective: false,
        h: mat2(gauss(0, 1), gauss(0, 1), gauss(-1, 0), gauss(1, 0)),
    }
}

/// Binary tetrahedral group realized over Z[i], with an order-2 outer action.
pub fn binary_tetrahedral() -> GroupFixture {
    GroupFixture {
        name: "binary-tetrahedral".into(),
        generators: vec![
            mat2(gauss(0, 1), gauss(-1, 1), gauss(0, 0), gauss(0, -1)),
            mat2(int(0), int(-1), int(1), int(1)),
        ],
        projective: false,
        h: mat2(gauss(1, 1), gauss(-1, 1), gauss(0, 0), gauss(1, -1)),
    }
}

/// Which coordinate involution acts on the quintic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuinticVariant {
    /// x_0 ↔ x_1
    Swap,
    /// x_0 ↔ x_1 and x_3 ↔ x_4
    SwapTwoPairs,
}

impl QuinticVariant {
    pub fn permutation(self) -> Vec<usize> {
        match self {
            Self::Swap => vec![1, 0, 2, 3, 4],
            Self::SwapTwoPairs => vec![1, 0, 2, 4, 3],
        }
    }
}

/// Exponent vectors generating {α ∈ Z_5^5 : Σα ≡ 0}.
pub fn quintic_exponent_generators() -> Vec<[i64; 5]> {
    vec![
        [1, 4, 0, 0, 0],
        [0, 1, 4, 0, 0],
        [0, 0, 1, 4, 0],
        [0, 0, 0, 1, 4],
    ]
}

/// Diagonal quintic symmetries modulo scalars (order 125).
pub fn quintic(variant: QuinticVariant) -> GroupFixture {
    GroupFixture {
        name: match variant {
            QuinticVariant::Swap => "quintic-swap".into(),
            QuinticVariant::SwapTwoPairs => "quintic-swap-two-pairs".into(),
        },
        generators: quintic_exponent_generators()
            .iter()
            .map(|e| GroupElement::diagonal_roots(5, e))
            .collect(),
        projective: true,
        h: GroupElement::permutation(&variant.permutation()),
    }
}

/// diag(ζ_3^{α1} ζ_9^μ, ζ_3^{α2} ζ_9^μ, ζ_9^μ, ζ_3^{α4} ζ_9^{-μ}, ζ_3^{α5} ζ_9^{-μ}, ζ_9^{-μ})
/// as exponents of ζ_9.
pub fn lt_exponents(a1: i64, a2: i64, a4: i64, a5: i64, mu: i64) -> [i64; 6] {
    [3 * a1 + mu, 3 * a2 + mu, mu, 3 * a4 - mu, 3 * a5 - mu, -mu]
}

/// The order-81 group acting on the pair of cubics in P^5, with the
/// involution x1 ↔ x2, x4 ↔ x5.
pub fn lt_group() -> GroupFixture {
    let gens = [
        lt_exponents(1, 0, 1, 0, 1),
        lt_exponents(1, 2, 0, 0, 0),
        lt_exponents(0, 0, 1, 2, 0),
    ];
    GroupFixture {
        name: "lt-complete-intersection".into(),
        generators: gens
            .iter()
            .map(|e| GroupElement::diagonal_roots(9, e))
            .collect(),
        projective: false,
        h: GroupElement::permutation(&[1, 0, 2, 4, 3, 5]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(binary_dihedral(4).build_default().unwrap().0.order(), 8);
        assert_eq!(binary_tetrahedral().build_default().unwrap().0.order(), 24);
        assert_eq!(lt_group().build_default().unwrap().0.order(), 81);
    }
}
