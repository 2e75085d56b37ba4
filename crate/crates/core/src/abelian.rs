//! Structure of finite abelian groups from element-order counts.

use std::collections::BTreeMap;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    /// `d_1 | d_2 | … | d_r`, each at least 2.
    pub invariant_factors: Vec<u64>,
    /// Prime power `q` ↦ number of cyclic factors `Z/q` (primary decomposition).
    pub primary: BTreeMap<u64, u32>,
}

impl AbelianInvariants {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Invariants of an abelian subgroup.
///
/// For each prime `p`, the number of elements with order dividing `p^k` is
/// `p^(Σ min(k, e_i))`, which pins down the exponents `e_i` of the p-primary
/// part.
pub fn abelian_invariants(g: &FiniteGroup, sub: &Subgroup) -> Result<AbelianInvariants> {
    if !sub.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    let order = sub.order() as u64;
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    let mut primary = BTreeMap::new();
    for (p, a) in arith::factorize(order) {
        let counts: Vec<u32> = (0..=a)
            .map(|k| {
                let pk = p.pow(k);
                let c = sub
                    .members()
                    .iter()
                    .filter(|&&x| pk % g.element_order(x) == 0)
                    .count() as u64;
                arith::ilog(c, p)
            })
            .collect();
        // at_least[k] = number of cyclic factors of order ≥ p^k
        let at_least: Vec<u32> = (1..=a as usize).map(|k| counts[k] - counts[k - 1]).collect();
        let mut exps = Vec::new();
        for k in 1..=a as usize {
            let next = at_least.get(k).copied().unwrap_or(0);
            let exactly = at_least[k - 1] - next;
            if exactly > 0 {
                primary.insert(p.pow(k as u32), exactly);
                exps.extend(std::iter::repeat_n(k as u32, exactly as usize));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push((p, exps));
    }
    let rank = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..rank)
        .map(|t| {
            per_prime
                .iter()
                .map(|(p, e)| e.get(t).map_or(1, |&k| p.pow(k)))
                .product()
        })
        .collect();
    factors.reverse();
    Ok(AbelianInvariants {
        invariant_factors: factors,
        primary,
    })
}

/// Canonical invariant factors of `Z/n_1 × … × Z/n_r`.
pub fn invariant_factors_of_product(orders: &[u64]) -> Vec<u64> {
    let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &n in orders {
        for (p, a) in arith::factorize(n) {
            per_prime.entry(p).or_default().push(a);
        }
    }
    let rank = per_prime.values().map(Vec::len).max().unwrap_or(0);
    for exps in per_prime.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut factors: Vec<u64> = (0..rank)
        .map(|t| {
            per_prime
                .iter()
                .map(|(p, e)| e.get(t).map_or(1, |&k| p.pow(k)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}
