//! Minimal degree of a faithful representation.
//!
//! A sum of irreducibles is faithful iff the intersection of their kernels
//! contains no minimal normal subgroup, so the minimum is an exact weighted
//! set cover: every minimal normal subgroup must be moved by some chosen
//! constituent. The search keeps the running kernel intersection as a
//! class mask and bounds the remaining degree from below by the rank of the
//! elementary abelian socle left inside that kernel.

use serde::{Deserialize, Serialize};

use crate::abelian;
use crate::arith;
use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Oracle limit for exhaustive subset enumeration.
pub const BRUTE_FORCE_MAX_IRREDUCIBLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdimCertificate {
    pub total_degree: u64,
    /// Indices into the character table, ascending.
    pub constituents: Vec<usize>,
}

type Mask = Vec<u64>;

fn mask_from(classes: impl Iterator<Item = bool>, words: usize) -> Mask {
    let mut m = vec![0u64; words];
    for (i, b) in classes.enumerate() {
        if b {
            m[i / 64] |= 1 << (i % 64);
        }
    }
    m
}

fn is_subset(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn and(a: &Mask, b: &Mask) -> Mask {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

struct Search<'a> {
    degrees: &'a [u64],
    kernels: Vec<Mask>,
    minimal_normals: Vec<Mask>,
    nonabelian_minimal: Vec<bool>,
    /// Per prime `p`: `(p, class mask of the p-part of the abelian socle)`.
    socles: Vec<(u64, Mask)>,
    class_sizes: Vec<u64>,
    best: u64,
    best_set: Vec<usize>,
}

impl Search<'_> {
    fn count(&self, mask: &Mask) -> u64 {
        self.class_sizes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask[i / 64] >> (i % 64) & 1 == 1)
            .map(|(_, &s)| s)
            .sum()
    }

    /// Lower bound on the degree still needed to make `kernel` trivial.
    fn lower_bound(&self, kernel: &Mask) -> u64 {
        let mut lb = 0;
        for (n, nonabelian) in self.minimal_normals.iter().zip(&self.nonabelian_minimal) {
            if is_subset(n, kernel) {
                lb = lb.max(if *nonabelian { 2 } else { 1 });
            }
        }
        for (p, socle) in &self.socles {
            let inside = self.count(&and(socle, kernel));
            lb = lb.max(arith::ilog(inside, *p) as u64);
        }
        lb
    }

    fn run(&mut self, kernel: Mask, partial: u64, chosen: &mut Vec<usize>) {
        let Some(target) = self
            .minimal_normals
            .iter()
            .position(|n| is_subset(n, &kernel))
        else {
            if partial < self.best {
                self.best = partial;
                self.best_set = chosen.clone();
                self.best_set.sort_unstable();
            }
            return;
        };
        if partial + self.lower_bound(&kernel) >= self.best {
            return;
        }
        for i in 0..self.degrees.len() {
            if chosen.contains(&i) || is_subset(&self.minimal_normals[target], &self.kernels[i]) {
                continue;
            }
            if partial + self.degrees[i] >= self.best {
                // degrees are ascending
                break;
            }
            chosen.push(i);
            let next = and(&kernel, &self.kernels[i]);
            self.run(next, partial + self.degrees[i], chosen);
            chosen.pop();
        }
    }
}

/// `rdim(G)`, computing the character table on the way.
pub fn rdim(g: &FiniteGroup) -> Result<RdimCertificate> {
    let table = character_table(g)?;
    rdim_with_table(g, &table)
}

/// `rdim(G)` from a precomputed table of `g`.
pub fn rdim_with_table(g: &FiniteGroup, table: &CharacterTable) -> Result<RdimCertificate> {
    if g.order() == 1 {
        return Ok(RdimCertificate {
            total_degree: 0,
            constituents: vec![],
        });
    }
    let classes = g.classes();
    let k = classes.len();
    let words = k.div_ceil(64);
    let class_mask = |s: &Subgroup| {
        let mut inside = vec![false; k];
        for &x in s.members() {
            inside[classes.class_of[x]] = true;
        }
        mask_from(inside.into_iter(), words)
    };
    let minimal = g.minimal_normal_subgroups()?;
    let minimal_normals: Vec<Mask> = minimal.iter().map(class_mask).collect();
    let nonabelian_minimal: Vec<bool> = minimal.iter().map(|n| !n.is_abelian(g)).collect();

    let mut socles = Vec::new();
    for p in arith::prime_divisors(g.order() as u64) {
        let gens: Vec<usize> = minimal
            .iter()
            .filter(|n| {
                arith::prime_power(n.order() as u64).is_some_and(|(q, _)| q == p) && n.is_abelian(g)
            })
            .flat_map(|n| n.members().iter().copied())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let gens = Subgroup::from_members(gens);
        let socle = g.subgroup_generated(gens.members());
        socles.push((p, class_mask(&socle)));
    }

    let degrees = table.degrees();
    let kernels: Vec<Mask> = (0..table.irreducibles.len())
        .map(|i| mask_from(table.kernel_classes(i).into_iter(), words))
        .collect();
    let all = mask_from(std::iter::repeat_n(true, k), words);
    let mut search = Search {
        degrees: &degrees,
        kernels,
        minimal_normals,
        nonabelian_minimal,
        socles,
        class_sizes: classes.classes.iter().map(|c| c.len() as u64).collect(),
        best: u64::MAX,
        best_set: vec![],
    };
    search.run(all, 0, &mut Vec::new());
    Ok(RdimCertificate {
        total_degree: search.best,
        constituents: search.best_set,
    })
}

/// Independent check that the constituents' kernels meet trivially, by
/// intersecting the kernels element by element.
pub fn certificate_is_faithful(table: &CharacterTable, cert: &RdimCertificate) -> bool {
    let n = table.group_order;
    let mut in_all = vec![true; n];
    for &i in &cert.constituents {
        let ker = table.kernel_classes(i);
        for (c, class) in table.classes.iter().enumerate() {
            if !ker[c] {
                for &x in class {
                    in_all[x] = false;
                }
            }
        }
    }
    in_all.iter().filter(|&&b| b).count() == 1
}

/// Full certificate check: degree sum, faithfulness, and that dropping any
/// single constituent breaks faithfulness.
pub fn verify_certificate(table: &CharacterTable, cert: &RdimCertificate) -> bool {
    let sum: u64 = cert
        .constituents
        .iter()
        .map(|&i| table.irreducibles[i].degree)
        .sum();
    if sum != cert.total_degree || !certificate_is_faithful(table, cert) {
        return false;
    }
    (0..cert.constituents.len()).all(|drop| {
        let smaller = RdimCertificate {
            total_degree: 0,
            constituents: cert
                .constituents
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &c)| c)
                .collect(),
        };
        !certificate_is_faithful(table, &smaller)
    })
}

/// `rdim` of `Z/d_1 × … × Z/d_r` in invariant-factor form: one faithful
/// character per cyclic factor suffices and is needed.
pub fn rdim_abelian(invariant_factors: &[u64]) -> Result<usize> {
    if let Some(&f) = invariant_factors.iter().find(|&&f| f < 2) {
        return Err(Error::InvalidFactors(format!("factor {f} is below 2")));
    }
    if let Some(w) = invariant_factors.windows(2).find(|w| w[1] % w[0] != 0) {
        return Err(Error::InvalidFactors(format!("{} does not divide {}", w[0], w[1])));
    }
    Ok(invariant_factors.len())
}

/// `rdim` of an abelian subgroup, via its invariant factors.
pub fn rdim_of_abelian_subgroup(g: &FiniteGroup, sub: &Subgroup) -> Result<usize> {
    rdim_abelian(&abelian::abelian_invariants(g, sub)?.invariant_factors)
}

/// Minimal total degree over all faithful subsets of irreducibles, by
/// enumerating every subset. Test oracle.
pub fn brute_force_rdim(table: &CharacterTable) -> Result<u64> {
    let r = table.irreducibles.len();
    if r > BRUTE_FORCE_MAX_IRREDUCIBLES {
        return Err(Error::TooManyIrreducibles(r));
    }
    if table.group_order == 1 {
        return Ok(0);
    }
    let n = table.group_order;
    // kernel membership per element, per character, as bitsets over characters
    let mut outside: Vec<u32> = vec![0; n];
    for i in 0..r {
        let ker = table.kernel_classes(i);
        for (c, class) in table.classes.iter().enumerate() {
            if !ker[c] {
                for &x in class {
                    outside[x] |= 1 << i;
                }
            }
        }
    }
    let degrees = table.degrees();
    let mut best = u64::MAX;
    for subset in 1u32..(1 << r) {
        let faithful = outside
            .iter()
            .enumerate()
            .all(|(x, &o)| x == 0 || o & subset != 0);
        if faithful {
            let d: u64 = (0..r).filter(|i| subset >> i & 1 == 1).map(|i| degrees[i]).sum();
            best = best.min(d);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct, GroupSpec};

    fn rdim_of(spec: GroupSpec) -> u64 {
        rdim(&construct(&spec).unwrap()).unwrap().total_degree
    }

    fn brute_of(spec: GroupSpec) -> u64 {
        let g = construct(&spec).unwrap();
        brute_force_rdim(&character_table(&g).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        for n in 2..=12 {
            assert_eq!(rdim_of(GroupSpec::Cyclic { n }), 1);
        }
        assert_eq!(rdim_of(GroupSpec::Abelian { factors: vec![2, 2] }), 2);
        assert_eq!(brute_of(GroupSpec::Abelian { factors: vec![2, 2] }), 2);
        let g73 = GroupSpec::SemidirectCyclic { n: 7, units: vec![2] };
        assert_eq!(rdim_of(g73.clone()), 3);
        assert_eq!(brute_of(g73), 3);
        assert_eq!(rdim_of(GroupSpec::Cyclic { n: 1 }), 0);
        assert_eq!(brute_of(GroupSpec::Cyclic { n: 1 }), 0);
        assert_eq!(brute_of(GroupSpec::Symmetric { n: 3 }), 2);
        assert_eq!(brute_of(GroupSpec::SemidirectCyclic { n: 5, units: vec![2] }), 4);
        assert_eq!(rdim_of(GroupSpec::Abelian { factors: vec![2, 4, 4] }), 3);
    }

    #[test]
    fn abelian_formula() {
        assert_eq!(rdim_abelian(&[7]).unwrap(), 1);
        assert_eq!(rdim_abelian(&[2, 2]).unwrap(), 2);
        assert_eq!(rdim_abelian(&[2, 4, 4]).unwrap(), 3);
        assert_eq!(rdim_abelian(&[]).unwrap(), 0);
        assert!(matches!(rdim_abelian(&[2, 3]), Err(Error::InvalidFactors(_))));
        assert!(matches!(rdim_abelian(&[1, 4]), Err(Error::InvalidFactors(_))));
    }

    #[test]
    fn certificates_are_faithful_and_minimal() {
        for spec in [
            GroupSpec::Symmetric { n: 4 },
            GroupSpec::Abelian { factors: vec![2, 2, 2, 2] },
            GroupSpec::Dihedral { n: 4 },
            GroupSpec::Abelian { factors: vec![6, 6] },
        ] {
            let g = construct(&spec).unwrap();
            let t = character_table(&g).unwrap();
            let cert = rdim_with_table(&g, &t).unwrap();
            assert!(verify_certificate(&t, &cert), "{spec:?}");
            if t.irreducibles.len() <= BRUTE_FORCE_MAX_IRREDUCIBLES {
                assert_eq!(cert.total_degree, brute_force_rdim(&t).unwrap(), "{spec:?}");
            }
        }
    }

    #[test]
    fn large_elementary_abelian_is_fast() {
        let g = construct(&GroupSpec::Abelian { factors: vec![2; 9] }).unwrap();
        assert_eq!(rdim(&g).unwrap().total_degree, 9);
    }

    #[test]
    fn too_many_irreducibles() {
        let g = construct(&GroupSpec::Cyclic { n: 21 }).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(brute_force_rdim(&t), Err(Error::TooManyIrreducibles(21)));
    }
}
