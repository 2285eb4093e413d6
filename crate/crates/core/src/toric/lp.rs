//! Small exact linear programs: two-phase simplex over the rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::exactmath::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, x: Vec<Rat> },
}

/// Maximizes `c·x` subject to `a·x = b`, `x ≥ 0`.
pub fn maximize(c: &[Rat], a: &[Vec<Rat>], b: &[Rat]) -> LpOutcome {
    let nvars = c.len();
    let m = a.len();
    let width = nvars + m;
    // Tableau rows: [x | artificials | rhs], rhs made nonnegative.
    let mut tab: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            let flip = rhs.is_negative();
            let mut r: Vec<Rat> = row
                .iter()
                .map(|x| if flip { -x } else { x.clone() })
                .collect();
            r.extend((0..m).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r.push(if flip { -rhs } else { rhs.clone() });
            r
        })
        .collect();
    let mut basis: Vec<usize> = (nvars..width).collect();

    let phase1: Vec<Rat> = (0..width)
        .map(|j| if j < nvars { Rat::zero() } else { -Rat::one() })
        .collect();
    run(&mut tab, &mut basis, &phase1, width);
    let infeasibility: Rat = basis
        .iter()
        .zip(&tab)
        .filter(|(&j, _)| j >= nvars)
        .map(|(_, r)| r[width].clone())
        .sum();
    if !infeasibility.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tab.len() {
        if basis[i] >= nvars {
            match (0..nvars).find(|&j| !tab[i][j].is_zero()) {
                Some(j) => pivot(&mut tab, &mut basis, i, j),
                None => {
                    tab.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut cost: Vec<Rat> = c.to_vec();
    cost.extend((0..m).map(|_| Rat::zero()));
    if !run(&mut tab, &mut basis, &cost, nvars) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); nvars];
    for (row, &j) in tab.iter().zip(&basis) {
        if j < nvars {
            x[j] = row[width].clone();
        }
    }
    let value = c.iter().zip(&x).map(|(a, b)| a * b).sum();
    LpOutcome::Optimal { value, x }
}

/// Simplex iterations restricted to entering columns `< allowed`; false if unbounded.
fn run(tab: &mut [Vec<Rat>], basis: &mut [usize], cost: &[Rat], allowed: usize) -> bool {
    loop {
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let z: Rat = tab
                .iter()
                .zip(basis.iter())
                .map(|(r, &b)| &cost[b] * &r[j])
                .sum();
            (&cost[j] - z).is_positive()
        });
        let Some(j) = entering else { return true };
        let rhs = tab.first().map_or(0, |r| r.len() - 1);
        let mut best: Option<(Rat, usize, usize)> = None;
        for (i, r) in tab.iter().enumerate() {
            if r[j].is_positive() {
                let ratio = &r[rhs] / &r[j];
                let better = match &best {
                    None => true,
                    Some((q, _, bi)) => ratio < *q || (ratio == *q && basis[i] < *bi),
                };
                if better {
                    best = Some((ratio, i, basis[i]));
                }
            }
        }
        let Some((_, i, _)) = best else { return false };
        pivot(tab, basis, i, j);
    }
}

fn pivot(tab: &mut [Vec<Rat>], basis: &mut [usize], i: usize, j: usize) {
    let p = tab[i][j].clone();
    for x in tab[i].iter_mut() {
        *x /= &p;
    }
    let prow = tab[i].clone();
    for (k, row) in tab.iter_mut().enumerate() {
        if k != i && !row[j].is_zero() {
            let f = row[j].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
    }
    basis[i] = j;
}

/// Largest t such that there are convex weights, all ≥ t, on each group of points
/// with `rows · Σ_g sign_g Σ_i λ_{g,i} p_{g,i} = 0`. None if no such weights exist.
pub fn max_common_weight(groups: &[(&[Vec<Rat>], bool)], rows: &[Vec<Rat>]) -> Option<Rat> {
    // Variables: t, then λ'_{g,i} with λ = t + λ'.
    let sizes: Vec<usize> = groups.iter().map(|(g, _)| g.len()).collect();
    let nvars = 1 + sizes.iter().sum::<usize>();
    let mut a: Vec<Vec<Rat>> = Vec::new();
    let mut b: Vec<Rat> = Vec::new();
    for r in rows {
        let mut row = vec![Rat::zero(); nvars];
        let mut col = 1;
        for (pts, positive) in groups {
            for p in pts.iter() {
                let mut v: Rat = r.iter().zip(p).map(|(x, y)| x * y).sum();
                if !positive {
                    v = -v;
                }
                row[0] += &v;
                row[col] = v;
                col += 1;
            }
        }
        a.push(row);
        b.push(Rat::zero());
    }
    let mut col = 1;
    for &k in &sizes {
        let mut row = vec![Rat::zero(); nvars];
        row[0] = Rat::from_integer(k.into());
        for x in &mut row[col..col + k] {
            *x = Rat::one();
        }
        col += k;
        a.push(row);
        b.push(Rat::one());
    }
    let mut c = vec![Rat::zero(); nvars];
    c[0] = Rat::one();
    match maximize(&c, &a, &b) {
        LpOutcome::Optimal { value, .. } => Some(value),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("weights are bounded by the normalization rows"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat::{int, rat};

    #[test]
    fn small_program() {
        // max x + y, x + 2y + s = 4, 3x + y + u = 6
        let c = vec![int(1), int(1), int(0), int(0)];
        let a = vec![
            vec![int(1), int(2), int(1), int(0)],
            vec![int(3), int(1), int(0), int(1)],
        ];
        let b = vec![int(4), int(6)];
        match maximize(&c, &a, &b) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(14, 5)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = vec![vec![int(1), int(1)]];
        assert_eq!(
            maximize(&[int(0), int(0)], &a, &[int(-1)]),
            LpOutcome::Infeasible
        );
        let a = vec![vec![int(1), int(-1)]];
        assert_eq!(
            maximize(&[int(1), int(0)], &a, &[int(0)]),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn overlapping_segments() {
        let id = vec![vec![int(1)]];
        let s1 = vec![vec![int(0)], vec![int(2)]];
        let s2 = vec![vec![int(1)], vec![int(3)]];
        let s3 = vec![vec![int(2)], vec![int(3)]];
        let t = max_common_weight(&[(&s1, true), (&s2, false)], &id).unwrap();
        assert!(t.is_positive());
        let t = max_common_weight(&[(&s1, true), (&s3, false)], &id).unwrap();
        assert!(t.is_zero());
    }
}
