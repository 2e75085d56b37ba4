//! Exact arithmetic in the cyclotomic integers `Z[ζ_N]`.
//!
//! Elements are kept in canonical form: a coefficient vector of length
//! `φ(N)` holding the remainder modulo the cyclotomic polynomial `Φ_N`.
//! The coefficient type is generic so the same code runs over `i64` for
//! speed or `i128` when sums get large.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{PrimInt, Signed};
use serde::{Deserialize, Serialize};

use crate::arith;

/// Coefficient ring for cyclotomic integers.
pub trait Coeff: PrimInt + Signed + fmt::Debug {}

impl<T: PrimInt + Signed + fmt::Debug> Coeff for T {}

/// Coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial<T: Coeff>(n: usize) -> Vec<T> {
    assert!(n >= 1);
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut poly = vec![T::zero(); n + 1];
    poly[0] = -T::one();
    poly[n] = T::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div(&poly, &cyclotomic_polynomial::<T>(d));
    }
    poly
}

/// Quotient of an exact division by a monic polynomial.
fn exact_div<T: Coeff>(num: &[T], den: &[T]) -> Vec<T> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![T::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != T::zero() {
            for (j, &a) in den.iter().enumerate() {
                rem[i + j] = rem[i + j] - c * a;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == T::zero()));
    quot
}

/// The ring `Z[ζ_N]` with its reduction modulus.
#[derive(Debug, Clone)]
pub struct CyclotomicRing<T> {
    order: usize,
    /// Nonzero `(degree, coefficient)` terms of `Φ_N` below the leading one.
    modulus_terms: Vec<(usize, T)>,
    degree: usize,
}

impl<T: Coeff> CyclotomicRing<T> {
    pub fn new(order: usize) -> Self {
        let phi = cyclotomic_polynomial::<T>(order);
        let degree = phi.len() - 1;
        let modulus_terms = phi[..degree]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != T::zero())
            .map(|(d, &c)| (d, c))
            .collect();
        CyclotomicRing {
            order,
            modulus_terms,
            degree,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `φ(N)`
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical form of `Σ_j v[j] ζ_N^j`, where `v` has length `N`.
    pub fn reduce(&self, mut v: Vec<T>) -> Cyclotomic<T> {
        assert_eq!(v.len(), self.order);
        for i in (self.degree..self.order).rev() {
            let c = v[i];
            if c == T::zero() {
                continue;
            }
            v[i] = T::zero();
            let shift = i - self.degree;
            for &(d, a) in &self.modulus_terms {
                v[shift + d] = v[shift + d] - c * a;
            }
        }
        v.truncate(self.degree);
        Cyclotomic {
            order: self.order,
            coeffs: v,
        }
    }

    pub fn integer(&self, n: T) -> Cyclotomic<T> {
        let mut v = vec![T::zero(); self.order];
        v[0] = n;
        self.reduce(v)
    }

    /// `ζ_N^k`
    pub fn root(&self, k: usize) -> Cyclotomic<T> {
        let mut v = vec![T::zero(); self.order];
        v[k % self.order] = T::one();
        self.reduce(v)
    }
}

/// A canonical element of `Z[ζ_N]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Coeff> Cyclotomic<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == T::zero())
    }

    /// The integer value, if the element is rational.
    pub fn as_integer(&self) -> Option<T> {
        match self.coeffs.split_first() {
            None => Some(T::zero()),
            Some((&c0, rest)) => rest.iter().all(|&c| c == T::zero()).then_some(c0),
        }
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self, ring: &CyclotomicRing<T>) -> Self {
        let n = self.order;
        let mut v = vec![T::zero(); n];
        for (j, &c) in self.coeffs.iter().enumerate() {
            v[(n - j) % n] = v[(n - j) % n] + c;
        }
        ring.reduce(v)
    }

    pub fn mul_in(&self, other: &Self, ring: &CyclotomicRing<T>) -> Self {
        let n = self.order;
        let mut v = vec![T::zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == T::zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[(i + j) % n] = v[(i + j) % n] + a * b;
            }
        }
        ring.reduce(v)
    }
}

impl<T: Coeff> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Cyclotomic<T> {
        assert_eq!(self.order, rhs.order);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Coeff> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        assert_eq!(self.order, rhs.order);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Coeff> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&a| -a).collect(),
        }
    }
}

impl<T: Coeff> Mul<T> for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, k: T) -> Cyclotomic<T> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&a| a * k).collect(),
        }
    }
}

impl<T: Coeff> fmt::Debug for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != T::zero())
            .map(|(j, c)| match j {
                0 => format!("{c:?}"),
                _ => format!("{c:?}*z{}^{j}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A value `Σ_j m_j ζ_m^j` with non-negative multiplicities, as produced by
/// eigenvalue counting for a character value on an element of order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub order: usize,
    pub multiplicities: Vec<u32>,
}

impl CyclotomicValue {
    pub fn integer(n: u32) -> Self {
        CyclotomicValue {
            order: 1,
            multiplicities: vec![n],
        }
    }

    pub fn total(&self) -> u64 {
        self.multiplicities.iter().map(|&m| m as u64).sum()
    }

    /// True iff the value is the integer `d` read off directly from the
    /// multiplicities (all mass on `ζ^0`).
    pub fn equals_degree(&self, d: u64) -> bool {
        self.multiplicities[0] as u64 == d && self.total() == d
    }

    /// Group-ring vector in `Z[C_N]` for `N` a multiple of `order`.
    pub fn lift<T: Coeff>(&self, n: usize) -> Vec<T> {
        assert_eq!(n % self.order, 0);
        let step = n / self.order;
        let mut v = vec![T::zero(); n];
        for (j, &m) in self.multiplicities.iter().enumerate() {
            v[j * step] = T::from(m).unwrap();
        }
        v
    }

    /// Exact element of `Z[ζ_N]`.
    pub fn to_cyclotomic<T: Coeff>(&self, ring: &CyclotomicRing<T>) -> Cyclotomic<T> {
        ring.reduce(self.lift(ring.order()))
    }

    /// Promote to a vector over the larger root order `n`.
    pub fn promote(&self, n: usize) -> CyclotomicValue {
        let step = n / self.order;
        let mut multiplicities = vec![0; n];
        for (j, &m) in self.multiplicities.iter().enumerate() {
            multiplicities[j * step] = m;
        }
        CyclotomicValue {
            order: n,
            multiplicities,
        }
    }
}

/// `φ(n)` via the arithmetic helpers, for cross-checking ring degrees.
pub fn totient(n: usize) -> usize {
    arith::euler_phi(n as u64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial::<i64>(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial::<i64>(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial::<i64>(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial::<i64>(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        let phi105 = cyclotomic_polynomial::<i64>(105);
        assert_eq!(phi105.len() - 1, 48);
        assert!(phi105.contains(&-2));
        for n in 1..60 {
            assert_eq!(cyclotomic_polynomial::<i32>(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for n in [3usize, 5, 6, 12, 30] {
            let ring = CyclotomicRing::<i64>::new(n);
            let v = vec![1i64; n];
            assert!(ring.reduce(v).is_zero(), "n = {n}");
        }
        // 1 + ζ_3 + ζ_3^2 = 0 seen inside Z[ζ_6]
        let ring = CyclotomicRing::<i64>::new(6);
        let val = CyclotomicValue {
            order: 3,
            multiplicities: vec![1, 1, 1],
        };
        assert!(val.to_cyclotomic(&ring).is_zero());
    }

    #[test]
    fn conjugation_and_norm() {
        let ring = CyclotomicRing::<i64>::new(3);
        let z = ring.root(1);
        // |ζ_3|^2 = 1, and ζ + conj(ζ) = -1
        assert_eq!(z.mul_in(&z.conj(&ring), &ring).as_integer(), Some(1));
        assert_eq!((&z + &z.conj(&ring)).as_integer(), Some(-1));
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_distributive(
            a in proptest::collection::vec(-5i64..5, 12),
            b in proptest::collection::vec(-5i64..5, 12),
            c in proptest::collection::vec(-5i64..5, 12),
        ) {
            let ring = CyclotomicRing::<i64>::new(12);
            let (a, b, c) = (ring.reduce(a), ring.reduce(b), ring.reduce(c));
            prop_assert_eq!(a.mul_in(&b, &ring), b.mul_in(&a, &ring));
            let lhs = a.mul_in(&(&b + &c), &ring);
            let rhs = &a.mul_in(&b, &ring) + &a.mul_in(&c, &ring);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn i64_and_i128_agree(v in proptest::collection::vec(-100i64..100, 20)) {
            let r64 = CyclotomicRing::<i64>::new(20);
            let r128 = CyclotomicRing::<i128>::new(20);
            let a = r64.reduce(v.clone());
            let b = r128.reduce(v.iter().map(|&x| x as i128).collect());
            let widened: Vec<i128> = a.coeffs().iter().map(|&x| x as i128).collect();
            prop_assert_eq!(widened.as_slice(), b.coeffs());
        }
    }
}
