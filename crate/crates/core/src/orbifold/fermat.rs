//! Euler numbers of fixed loci on the Fermat pencil
//! Σ x_i^d − d·λ·Π x_i = 0 in P^{d-1}, λ generic.
//!
//! Points are sorted by support J (the set of nonzero coordinates). The open
//! stratum V_J is a Fermat hypersurface in the torus of P^{|J|-1}, except for the
//! full support, where the product term survives; that does not change the Newton
//! polytope, so the Euler number is the same for generic λ.

/// Bitmask of nonzero coordinates.
pub type Support = u32;

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// Euler number of a smooth degree-d hypersurface in P^{k-1}.
pub fn euler_smooth_hypersurface(k: u32, d: i64) -> i64 {
    if k == 0 {
        return 0;
    }
    ((1 - d).pow(k) - 1) / d + i64::from(k)
}

/// Euler number of a smooth degree-d Fermat hypersurface inside the torus of P^{k-1}.
pub fn euler_torus_part(k: u32, d: i64) -> i64 {
    (0..=k)
        .map(|j| {
            let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
            sign * binomial(k, j) * euler_smooth_hypersurface(j, d)
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FermatPencil {
    degree: i64,
}

impl FermatPencil {
    /// The Calabi–Yau member of degree d in P^{d-1}; d must be odd.
    pub fn new(degree: i64) -> Self {
        assert!(
            degree >= 3 && degree % 2 == 1,
            "degree must be odd and at least 3"
        );
        Self { degree }
    }

    pub fn quintic() -> Self {
        Self::new(5)
    }

    pub fn vars(&self) -> usize {
        self.degree as usize
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Diagonal symmetries modulo scalars: exponent vectors α with α_0 = 0 and
    /// Σ α ≡ 0 mod d, in lexicographic order.
    pub fn symmetries(&self) -> Vec<Vec<i64>> {
        let n = self.vars();
        let d = self.degree;
        let mut out = Vec::new();
        let mut alpha = vec![0i64; n];
        loop {
            if alpha.iter().sum::<i64>() % d == 0 {
                out.push(alpha.clone());
            }
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return out;
                }
                alpha[i] += 1;
                if alpha[i] < d {
                    break;
                }
                alpha[i] = 0;
                i -= 1;
            }
        }
    }

    /// Supports with a nonempty stratum (at least two coordinates).
    pub fn supports(&self) -> Vec<Support> {
        (0..(1u32 << self.vars()))
            .filter(|m| m.count_ones() >= 2)
            .collect()
    }

    /// True iff α is constant on J, i.e. fixes every point with support J.
    pub fn fixes_support(alpha: &[i64], support: Support) -> bool {
        let mut values = (0..alpha.len())
            .filter(|&i| support >> i & 1 == 1)
            .map(|i| alpha[i]);
        match values.next() {
            Some(first) => values.all(|v| v == first),
            None => true,
        }
    }

    /// e(V_J).
    pub fn euler_stratum(&self, support: Support) -> i64 {
        euler_torus_part(support.count_ones(), self.degree)
    }

    /// e(V_J ∩ Fix(c∘h)) where h swaps the coordinate `pairs` and c = diag(ω^α).
    ///
    /// Fixed points of c∘h are the projectivized eigenspaces. With eigenvalue μ a
    /// 2d-th root of unity, an unpaired coordinate j contributes when μ = ω^{α_j};
    /// a pair (a, b) contributes one eigen-coordinate when μ² = ω^{α_a+α_b}, on
    /// which x_a^d + x_b^d restricts to (1 + μ^d)·t^d.
    pub fn euler_twisted(&self, c: &[i64], support: Support, pairs: &[(usize, usize)]) -> i64 {
        let d = self.degree;
        let n = self.vars();
        let inside = |i: usize| support >> i & 1 == 1;
        if pairs.iter().any(|&(a, b)| inside(a) != inside(b)) {
            return 0;
        }
        let paired: Vec<bool> = (0..n)
            .map(|i| pairs.iter().any(|&(a, b)| a == i || b == i))
            .collect();
        let mut total = 0;
        for m in 0..2 * d {
            // (support bits, coefficient vanishes)
            let mut coords: Vec<(Support, bool)> = Vec::new();
            for &(a, b) in pairs {
                if (2 * m - 2 * (c[a] + c[b])).rem_euclid(2 * d) == 0 {
                    coords.push((1 << a | 1 << b, m % 2 == 1));
                }
            }
            for j in (0..n).filter(|&j| !paired[j]) {
                if (m - 2 * c[j]).rem_euclid(2 * d) == 0 {
                    coords.push((1 << j, false));
                }
            }
            coords.retain(|(s, _)| s & !support == 0);
            let covered = coords.iter().fold(0, |acc, (s, _)| acc | s);
            if covered != support {
                continue;
            }
            let k = coords.len() as u32;
            if coords.iter().any(|(_, vanishes)| *vanishes) {
                // Unpaired coordinates force μ to be an even power, so the full
                // support (where the product term lives) never gets here.
                assert!(support.count_ones() < n as u32);
                // A vanishing coefficient leaves a free C*-factor unless the
                // eigenspace is a single point, which then lies on V.
                if k == 1 {
                    total += 1;
                }
            } else {
                total += euler_torus_part(k, d);
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersurface_euler_numbers() {
        assert_eq!(euler_smooth_hypersurface(2, 5), 5);
        assert_eq!(euler_smooth_hypersurface(3, 5), -10);
        assert_eq!(euler_smooth_hypersurface(4, 5), 55);
        assert_eq!(euler_smooth_hypersurface(5, 5), -200);
        assert_eq!(euler_smooth_hypersurface(3, 3), 0);
    }

    #[test]
    fn torus_parts_add_up() {
        let f = FermatPencil::quintic();
        let total: i64 = f.supports().iter().map(|&s| f.euler_stratum(s)).sum();
        assert_eq!(total, -200);
        assert_eq!(f.symmetries().len(), 125);
    }

    #[test]
    fn untwisted_fixed_locus_is_the_stratum() {
        let f = FermatPencil::quintic();
        let id = vec![0; 5];
        for s in f.supports() {
            // Identity: the whole space is one eigenspace.
            assert_eq!(f.euler_twisted(&id, s, &[]), f.euler_stratum(s));
        }
    }
}
