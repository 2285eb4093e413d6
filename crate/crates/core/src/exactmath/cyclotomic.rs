//! Elements of Z[ζ_m] with canonical coefficient vectors modulo Φ_m.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type Poly = Vec<BigInt>;

fn poly_cache() -> &'static Mutex<HashMap<u64, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Φ_m, lowest degree first.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Poly> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    if let Some(p) = poly_cache().lock().expect("poisoned cache").get(&m) {
        return Arc::clone(p);
    }
    let mut num: Poly = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = div_monic(&num, &cyclotomic_polynomial(d));
    }
    let p = Arc::new(num);
    poly_cache()
        .lock()
        .expect("poisoned cache")
        .insert(m, Arc::clone(&p));
    p
}

/// Exact quotient by a monic divisor; panics on a nonzero remainder.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Poly {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (dn..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dn] = c.clone();
        for (j, d) in den.iter().enumerate() {
            rem[i - dn + j] -= &c * d;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// Euler phi via the degree of Φ_m.
pub fn totient(m: u64) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

/// Reduce a polynomial in ζ modulo Φ_m in place, returning exactly φ(m) coefficients.
fn reduce(mut v: Poly, m: u64) -> Poly {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    for i in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[i]);
        if c.is_zero() {
            continue;
        }
        for j in 0..deg {
            v[i - deg + j] -= &c * &phi[j];
        }
    }
    v.resize(deg, BigInt::zero());
    v
}

/// Exact element of the cyclotomic ring Z[ζ_m].
///
/// Stored at its construction conductor; comparisons lift to a common one.
#[derive(Clone)]
pub struct CycloInt {
    conductor: u64,
    coeffs: Poly,
}

impl CycloInt {
    pub fn zero(m: u64) -> Self {
        Self {
            conductor: m,
            coeffs: vec![BigInt::zero(); totient(m)],
        }
    }

    pub fn from_int(m: u64, value: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = value.into();
        z
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// ζ_m^k for any integer k.
    pub fn zeta(m: u64, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self {
            conductor: m,
            coeffs: reduce(v, m),
        }
    }

    /// Σ c_j ζ_m^{k_j}.
    pub fn from_terms(m: u64, terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(m), |acc, &(c, k)| {
            &acc + &(&Self::zeta(m, k) * &Self::from_int(m, c))
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|x| x.is_one())
    }

    /// Same value written at conductor `target`, a multiple of the current one.
    pub fn lift(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {}",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut v = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Self {
            conductor: target,
            coeffs: reduce(v, target),
        }
    }

    /// Coefficient vector at conductor `target`; used as an ordering key.
    pub fn key_at(&self, target: u64) -> Poly {
        self.lift(target).coeffs
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.conductor.lcm(&other.conductor);
        (self.lift(m), other.lift(m))
    }

    /// Galois conjugate ζ ↦ ζ^k, with gcd(k, m) = 1.
    pub fn galois(&self, k: u64) -> Self {
        let m = self.conductor;
        debug_assert!(k.gcd(&m) == 1);
        let mut v = vec![BigInt::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(i as u64 * k % m) as usize] += c;
            }
        }
        Self {
            conductor: m,
            coeffs: reduce(v, m),
        }
    }

    fn units(m: u64) -> impl Iterator<Item = u64> {
        (1..=m.max(1)).filter(move |k| k.gcd(&m) == 1)
    }

    /// Field norm down to Q, a rational integer.
    pub fn norm(&self) -> BigInt {
        let n = Self::units(self.conductor)
            .fold(Self::one(self.conductor), |acc, k| &acc * &self.galois(k));
        n.as_integer().expect("norm is rational")
    }

    /// Exact quotient `self / other` in the ring, if it exists.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (a, b) = self.common(other);
        if b.is_zero() {
            return None;
        }
        let m = a.conductor;
        let co = Self::units(m)
            .filter(|&k| k != 1)
            .fold(Self::one(m), |acc, k| &acc * &b.galois(k));
        let n = (&b * &co).as_integer().expect("norm is rational");
        let num = &a * &co;
        let mut coeffs = Vec::with_capacity(num.coeffs.len());
        for c in &num.coeffs {
            let (q, r) = c.div_rem(&n);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Self {
            conductor: m,
            coeffs,
        })
    }

    /// If the value is a root of unity, returns `(n, e)` with value = ζ_n^e,
    /// where n is the conductor (or twice it, for odd conductors).
    pub fn root_of_unity_exponent(&self) -> Option<(u64, u64)> {
        let m = self.conductor;
        for k in 0..m {
            let z = Self::zeta(m, k as i64);
            if z == *self {
                return Some((m, k));
            }
            if -&z == *self {
                return if m.is_multiple_of(2) {
                    Some((m, (k + m / 2) % m))
                } else {
                    Some((2 * m, (2 * k + m) % (2 * m)))
                };
            }
        }
        None
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.conductor), |acc, _| &acc * self)
    }
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloInt {}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as a signed sum of `z<m>^<k>` terms (plain integers at k = 0).
impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let term = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => format!("z{}^{}", self.conductor, k),
                (_, false) => format!("{}*z{}^{}", mag, self.conductor, k),
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: &CycloInt) -> CycloInt {
        let (a, b) = self.common(rhs);
        CycloInt {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: &CycloInt) -> CycloInt {
        self + &(-rhs)
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        CycloInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: &CycloInt) -> CycloInt {
        let (a, b) = self.common(rhs);
        if a.is_zero() || b.is_zero() {
            return CycloInt::zero(a.conductor);
        }
        let mut v = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        CycloInt {
            conductor: a.conductor,
            coeffs: reduce(v, a.conductor),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Poly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn root_products() {
        assert!((&CycloInt::zeta(5, 1) * &CycloInt::zeta(5, 4)).is_one());
        assert_eq!(
            &CycloInt::zeta(4, 1) * &CycloInt::zeta(4, 1),
            CycloInt::from_int(4, -1)
        );
        assert_eq!(
            &CycloInt::zeta(3, 1) * &CycloInt::zeta(9, 1),
            CycloInt::zeta(9, 4)
        );
    }

    #[test]
    fn lifting_preserves_value() {
        let a = CycloInt::zeta(3, 1);
        assert_eq!(a, CycloInt::zeta(9, 3));
        assert_eq!(a, CycloInt::zeta(6, 2));
        assert_eq!(CycloInt::from_int(1, 7), CycloInt::from_int(10, 7));
    }

    #[test]
    fn exact_division() {
        let i = CycloInt::zeta(4, 1);
        let one_plus_i = &CycloInt::one(4) + &i;
        let two = CycloInt::from_int(4, 2);
        let q = two.div_exact(&one_plus_i).unwrap();
        assert_eq!(q, &CycloInt::one(4) - &i);
        assert!(CycloInt::one(4).div_exact(&one_plus_i).is_none());
        assert_eq!(one_plus_i.norm(), BigInt::from(2));
    }

    #[test]
    fn root_exponents() {
        assert_eq!(CycloInt::zeta(9, 4).root_of_unity_exponent(), Some((9, 4)));
        assert_eq!(
            CycloInt::from_int(3, -1).root_of_unity_exponent(),
            Some((6, 3))
        );
        assert_eq!(
            CycloInt::from_int(4, -1).root_of_unity_exponent(),
            Some((4, 2))
        );
        assert_eq!(CycloInt::from_int(4, 2).root_of_unity_exponent(), None);
    }

    #[test]
    fn display() {
        assert_eq!(
            CycloInt::from_terms(4, &[(-1, 0), (1, 1)]).to_string(),
            "-1+z4^1"
        );
        assert_eq!(CycloInt::zero(5).to_string(), "0");
    }
}
