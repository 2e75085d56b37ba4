//! Standard group constructors.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::edbounds;
use crate::error::{Error, Result};
use crate::group::{generate_group, FiniteGroup, Limits};
use crate::perm::Permutation;

/// Declarative description of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: u64 },
    /// Direct product of cyclic groups of the given orders.
    Abelian { factors: Vec<u64> },
    /// Dihedral group of order `2n`.
    Dihedral { n: u64 },
    Symmetric { n: u64 },
    /// `Z/n ⋊ H` for `H ≤ (Z/n)^*` generated by `units`, acting by
    /// multiplication.
    SemidirectCyclic { n: u64, units: Vec<u64> },
    /// `Z/q ⋊ Z/p^n` with `q` the smallest prime `≡ 1 (mod p^n)`.
    Gamma { p: u64, n: u32 },
    Explicit { degree: usize, generators: Vec<Vec<u32>> },
}

impl GroupSpec {
    /// The semidirect product with the full unit group.
    pub fn full_units(n: u64) -> GroupSpec {
        GroupSpec::SemidirectCyclic {
            n,
            units: (1..=n.max(1)).filter(|&u| arith::gcd(u, n) == 1).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic { n } | GroupSpec::Dihedral { n } | GroupSpec::Symmetric { n } => {
                if *n == 0 {
                    return bad(format!("{}: n must be at least 1", self.kind()));
                }
            }
            GroupSpec::Abelian { factors } => {
                if let Some(f) = factors.iter().find(|&&f| f < 2) {
                    return bad(format!("abelian: factor {f} is below 2"));
                }
            }
            GroupSpec::SemidirectCyclic { n, units } => {
                if *n == 0 {
                    return bad("semidirect_cyclic: n must be at least 1".into());
                }
                if let Some(u) = units.iter().find(|&&u| arith::gcd(u % n, *n) != 1 && *n > 1) {
                    return bad(format!("semidirect_cyclic: unit {u} is not coprime to {n}"));
                }
            }
            GroupSpec::Gamma { p, n } => {
                if !arith::is_prime(*p) {
                    return bad(format!("gamma: {p} is not prime"));
                }
                if *n == 0 || p.checked_pow(*n).is_none() {
                    return bad(format!("gamma: exponent {n} out of range"));
                }
            }
            GroupSpec::Explicit { degree, generators } => {
                if *degree == 0 {
                    return bad("explicit: degree must be at least 1".into());
                }
                for g in generators {
                    if g.len() != *degree {
                        return bad(format!(
                            "explicit: generator of length {} for degree {degree}",
                            g.len()
                        ));
                    }
                    Permutation::from_images(g.clone())?;
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::Abelian { .. } => "abelian",
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::Symmetric { .. } => "symmetric",
            GroupSpec::SemidirectCyclic { .. } => "semidirect_cyclic",
            GroupSpec::Gamma { .. } => "gamma",
            GroupSpec::Explicit { .. } => "explicit",
        }
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            GroupSpec::Cyclic { n } => format!("C{n}"),
            GroupSpec::Abelian { factors } => format!("Ab[{}]", join(factors)),
            GroupSpec::Dihedral { n } => format!("D{}", 2 * n),
            GroupSpec::Symmetric { n } => format!("S{n}"),
            GroupSpec::SemidirectCyclic { n, units } => {
                let h = unit_subgroup(*n, units);
                format!("C{n}:H{}<{}>", h.len(), join(&generating_units(*n, units)))
            }
            GroupSpec::Gamma { p, n } => format!("Gamma({p},{n})"),
            GroupSpec::Explicit { degree, generators } => {
                format!("Perm({degree};{} gens)", generators.len())
            }
        }
    }
}

/// Elements of the subgroup of `(Z/n)^*` generated by `units`, sorted.
pub fn unit_subgroup(n: u64, units: &[u64]) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let mut members = vec![1 % n];
    let mut head = 0;
    while head < members.len() {
        let x = members[head];
        for &u in units {
            let y = arith::mul_mod(x, u % n, n);
            if !members.contains(&y) {
                members.push(y);
            }
        }
        head += 1;
    }
    members.sort_unstable();
    members
}

/// Greedy generating subset of `units`, dropping any unit already in the
/// subgroup generated by its predecessors.
pub fn generating_units(n: u64, units: &[u64]) -> Vec<u64> {
    let mut gens: Vec<u64> = Vec::new();
    let mut current = unit_subgroup(n, &[]);
    for &u in units {
        let u = if n == 1 { 0 } else { u % n };
        if current.binary_search(&u).is_err() {
            gens.push(u);
            current = unit_subgroup(n, &gens);
        }
    }
    gens
}

pub fn construct(spec: &GroupSpec) -> Result<FiniteGroup> {
    construct_with(spec, &Limits::default())
}

/// Faithful permutation realisation of `spec`.
pub fn construct_with(spec: &GroupSpec, limits: &Limits) -> Result<FiniteGroup> {
    spec.validate()?;
    let limit = limits.max_order;
    match spec {
        GroupSpec::Cyclic { n } => abelian(&[*n], limit),
        GroupSpec::Abelian { factors } => abelian(factors, limit),
        GroupSpec::Dihedral { n } => match n {
            1 => abelian(&[2], limit),
            2 => abelian(&[2, 2], limit),
            _ => {
                let n = *n as usize;
                let rotation = affine(n, 1, 1);
                let reflection = affine(n, n as u64 - 1, 0);
                generate_group(&[rotation, reflection], n, limit)
            }
        },
        GroupSpec::Symmetric { n } => {
            let n = *n as usize;
            let gens = match n {
                1 => vec![],
                2 => vec![Permutation::from_images(vec![1, 0])?],
                _ => vec![affine(n, 1, 1), Permutation::from_images(transposition(n))?],
            };
            generate_group(&gens, n, limit)
        }
        GroupSpec::SemidirectCyclic { n, units } => semidirect(*n, units, limit),
        GroupSpec::Gamma { p, n } => {
            let (q, u) = gamma_parameters(*p, *n, limits.prime_cap)?;
            semidirect(q, &[u], limit)
        }
        GroupSpec::Explicit { degree, generators } => {
            let gens = generators
                .iter()
                .map(|g| Permutation::from_images(g.clone()))
                .collect::<Result<Vec<_>>>()?;
            generate_group(&gens, *degree, limit)
        }
    }
}

/// `(q, u)` where `q ≡ 1 (mod p^n)` is the smallest such prime and `u`
/// generates the order-`p^n` subgroup of `(Z/q)^*`.
pub fn gamma_parameters(p: u64, n: u32, prime_cap: u64) -> Result<(u64, u64)> {
    let q = edbounds::dirichlet_prime_with_cap(p, n, prime_cap)?;
    let g = arith::primitive_root(q);
    let u = arith::pow_mod(g, (q - 1) / p.pow(n), q);
    Ok((q, u))
}

fn transposition(n: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n as u32).collect();
    v.swap(0, 1);
    v
}

/// `x ↦ a·x + b` on `Z/n`.
fn affine(n: usize, a: u64, b: u64) -> Permutation {
    let images = (0..n as u64)
        .map(|x| ((a * x + b) % n as u64) as u32)
        .collect();
    Permutation::from_images(images).expect("affine map with unit multiplier")
}

fn abelian(factors: &[u64], limit: usize) -> Result<FiniteGroup> {
    let order = factors.iter().try_fold(1u64, |acc, &f| acc.checked_mul(f));
    if order.is_none_or(|o| o > limit as u64) {
        return Err(Error::OrderLimitExceeded {
            what: "group order".into(),
            limit,
        });
    }
    let degree: usize = factors.iter().map(|&f| f as usize).sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for &f in factors {
        let cycle: Vec<u32> = (offset..offset + f as u32).collect();
        gens.push(Permutation::from_cycles(degree, &[&cycle])?);
        offset += f as u32;
    }
    generate_group(&gens, degree, limit)
}

fn semidirect(n: u64, units: &[u64], limit: usize) -> Result<FiniteGroup> {
    let h = unit_subgroup(n, units);
    if n.saturating_mul(h.len() as u64) > limit as u64 {
        return Err(Error::OrderLimitExceeded {
            what: "group order".into(),
            limit,
        });
    }
    let degree = n as usize;
    let mut gens = Vec::new();
    if n > 1 {
        gens.push(affine(degree, 1, 1));
    }
    for u in generating_units(n, units) {
        if n > 1 && u != 1 {
            gens.push(affine(degree, u, 0));
        }
    }
    generate_group(&gens, degree, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_defining_data() {
        let cases = [
            (GroupSpec::Cyclic { n: 12 }, 12),
            (GroupSpec::Cyclic { n: 1 }, 1),
            (GroupSpec::Abelian { factors: vec![2, 4, 4] }, 32),
            (GroupSpec::Abelian { factors: vec![] }, 1),
            (GroupSpec::Dihedral { n: 1 }, 2),
            (GroupSpec::Dihedral { n: 2 }, 4),
            (GroupSpec::Dihedral { n: 7 }, 14),
            (GroupSpec::Symmetric { n: 1 }, 1),
            (GroupSpec::Symmetric { n: 4 }, 24),
            (GroupSpec::SemidirectCyclic { n: 5, units: vec![2] }, 20),
            (GroupSpec::SemidirectCyclic { n: 8, units: vec![3, 5] }, 32),
            (GroupSpec::full_units(1), 1),
            (GroupSpec::full_units(2), 2),
            (GroupSpec::full_units(12), 48),
            (GroupSpec::Gamma { p: 2, n: 1 }, 6),
            (GroupSpec::Gamma { p: 2, n: 2 }, 20),
            (GroupSpec::Gamma { p: 2, n: 3 }, 136),
        ];
        for (spec, order) in cases {
            let g = construct(&spec).unwrap();
            assert_eq!(g.order(), order, "{spec:?}");
            assert!(g.acts_faithfully());
        }
    }

    #[test]
    fn cyclic_has_one_cycle_generator() {
        let g = construct(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert_eq!(g.generators().len(), 1);
        assert_eq!(g.generators()[0].order(), 12);
    }

    #[test]
    fn unit_subgroup_closure() {
        // brute force: powers and products inside (Z/8)^*
        assert_eq!(unit_subgroup(8, &[3, 5]), vec![1, 3, 5, 7]);
        assert_eq!(unit_subgroup(5, &[2]).len(), arith::multiplicative_order(2, 5) as usize);
        assert_eq!(generating_units(8, &[3, 5, 7]), vec![3, 5]);
    }

    #[test]
    fn invalid_specs() {
        for spec in [
            GroupSpec::SemidirectCyclic { n: 6, units: vec![2] },
            GroupSpec::Cyclic { n: 0 },
            GroupSpec::Abelian { factors: vec![1] },
            GroupSpec::Gamma { p: 4, n: 1 },
            GroupSpec::Explicit { degree: 3, generators: vec![vec![0, 0, 1]] },
        ] {
            assert!(construct(&spec).is_err(), "{spec:?}");
        }
        assert!(matches!(
            construct(&GroupSpec::Symmetric { n: 8 }),
            Err(Error::OrderLimitExceeded { .. })
        ));
    }

    #[test]
    fn spec_json_shape() {
        let text = r#"{"kind":"semidirect_cyclic","params":{"n":8,"units":[3,5]}}"#;
        let spec: GroupSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec, GroupSpec::SemidirectCyclic { n: 8, units: vec![3, 5] });
        assert_eq!(serde_json::to_string(&spec).unwrap(), text);
    }
}
