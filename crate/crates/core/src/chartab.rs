//! Exact complex character tables via the Dixon–Schneider method.
//!
//! The central characters `ω_χ(C) = |C|·χ(g_C)/χ(1)` are the common
//! eigenvectors of the class-multiplication matrices. We compute them over a
//! prime field `F_P` with `P ≡ 1 (mod exp G)`, recover the degrees from the
//! standard norm relation, and lift each value to the exact multiset of
//! eigenvalues of `ρ(g)` by a discrete Fourier inversion over the powers of
//! `g`.

use std::cmp::Reverse;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclotomic::{CyclotomicRing, CyclotomicValue};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::modp::{Matrix, PrimeField};

const PRIME_SEARCH_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub degree: u64,
    /// One value per conjugacy class, over the root order of the class
    /// representative.
    pub values: Vec<CyclotomicValue>,
}

impl Character {
    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: usize,
    pub exponent: u64,
    /// Prime used for the modular computation.
    pub prime: u64,
    pub classes: Vec<Vec<usize>>,
    pub class_reps: Vec<usize>,
    pub rep_orders: Vec<u64>,
    pub irreducibles: Vec<Character>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree).collect()
    }

    /// Classes on which `χ_i` takes the value `χ_i(1)`.
    pub fn kernel_classes(&self, i: usize) -> Vec<bool> {
        let chi = &self.irreducibles[i];
        chi.values.iter().map(|v| v.equals_degree(chi.degree)).collect()
    }
}

/// Smallest prime `P ≡ 1 (mod e)` with `P > 2⌈√n⌉`.
pub fn choose_prime(exponent: u64, order: u64) -> Result<u64> {
    let r = arith::isqrt(order);
    let ceil_sqrt = if r * r == order { r } else { r + 1 };
    let floor = 2 * ceil_sqrt;
    (1..=PRIME_SEARCH_CAP)
        .map(|k| 1 + k * exponent)
        .find(|&p| p > floor && arith::is_prime(p))
        .ok_or_else(|| {
            Error::InternalPrimeSearchFailure(format!(
                "no prime 1 mod {exponent} above {floor} within {PRIME_SEARCH_CAP} steps"
            ))
        })
}

/// Sparse rows of the class matrix `M_i`: entry `(j, k)` counts the
/// `x ∈ C_i` with `x^{-1} z_k ∈ C_j`, where `z_k` represents class `k`.
fn class_matrix(g: &FiniteGroup, i: usize, field: &PrimeField) -> Vec<Vec<(usize, u64)>> {
    let classes = g.classes();
    let k = classes.len();
    let mut rows: Vec<HashMap<usize, u64>> = vec![HashMap::new(); k];
    for (col, class) in classes.classes.iter().enumerate() {
        let z = class[0];
        for &x in &classes.classes[i] {
            let y = g.mult(g.inverse(x), z);
            *rows[classes.class_of[y]].entry(col).or_insert(0) += 1;
        }
    }
    rows.into_iter()
        .map(|row| {
            let mut row: Vec<(usize, u64)> = row
                .into_iter()
                .map(|(c, v)| (c, field.reduce(v)))
                .filter(|&(_, v)| v != 0)
                .collect();
            row.sort_unstable();
            row
        })
        .collect()
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `m` restricted to it.
fn split_space(space: &Matrix, m: &[Vec<(usize, u64)>], field: &PrimeField) -> Result<Vec<Matrix>> {
    let r = space.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    // restricted[t][s] = coordinate t of M·b_s, which for a basis in reduced
    // echelon form is the entry of M·b_s at pivot t
    let restricted: Matrix = pivots
        .iter()
        .map(|&pt| {
            space
                .iter()
                .map(|b| {
                    m[pt]
                        .iter()
                        .fold(0, |acc, &(c, v)| field.add(acc, field.mul(v, b[c])))
                })
                .collect()
        })
        .collect();
    let roots = field.roots(&field.charpoly(&restricted));
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Matrix = (0..r)
            .map(|t| {
                (0..r)
                    .map(|s| {
                        let d = if s == t { lambda } else { 0 };
                        field.sub(restricted[t][s], d)
                    })
                    .collect()
            })
            .collect();
        let mut vectors: Matrix = field
            .nullspace(&shifted)
            .into_iter()
            .map(|coords| {
                let mut v = vec![0u64; space[0].len()];
                for (s, &c) in coords.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for (x, &b) in v.iter_mut().zip(&space[s]) {
                        *x = field.add(*x, field.mul(c, b));
                    }
                }
                v
            })
            .collect();
        field.rref(&mut vectors);
        total += vectors.len();
        out.push(vectors);
    }
    if total != r {
        return Err(Error::InternalPrimeSearchFailure(format!(
            "class matrix not diagonalisable mod {} ({} of {} dimensions)",
            field.modulus(),
            total,
            r
        )));
    }
    Ok(out)
}

/// The complete table of irreducible characters of `g`.
///
/// Characters are sorted by degree, then by value data in descending
/// lexicographic order (which puts the trivial character first).
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = g.classes();
    let k = classes.len();
    let order = g.order() as u64;
    let exponent = g.exponent();
    let prime = choose_prime(exponent, order)?;
    let field = PrimeField::new(prime);

    let identity: Matrix = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(g, i, &field);
        let mut next = Vec::with_capacity(k);
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split_space(&space, &m, &field)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::InternalPrimeSearchFailure(format!(
            "class matrices did not separate the characters mod {prime}"
        )));
    }

    let sizes: Vec<u64> = classes.classes.iter().map(|c| c.len() as u64).collect();
    let reps: Vec<usize> = (0..k).map(|c| classes.representative(c)).collect();
    let inverse_class: Vec<usize> = reps
        .iter()
        .map(|&x| classes.class_of[g.inverse(x)])
        .collect();
    let rep_orders: Vec<u64> = reps.iter().map(|&x| g.element_order(x)).collect();
    let power_classes: Vec<Vec<usize>> = reps
        .iter()
        .zip(&rep_orders)
        .map(|(&x, &m)| {
            let mut y = 0;
            (0..m)
                .map(|_| {
                    let c = classes.class_of[y];
                    y = g.mult(y, x);
                    c
                })
                .collect()
        })
        .collect();
    let root = arith::primitive_root(prime);
    let max_degree = arith::isqrt(order);

    let mut irreducibles = Vec::with_capacity(k);
    for space in &spaces {
        let w = &space[0];
        if w[0] == 0 {
            return Err(Error::InternalPrimeSearchFailure(
                "central character vanishes on the identity class".into(),
            ));
        }
        let norm = field.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| field.mul(x, norm)).collect();
        let s = (0..k).fold(0, |acc, j| {
            let t = field.mul(omega[j], omega[inverse_class[j]]);
            field.add(acc, field.mul(t, field.inv(field.reduce(sizes[j]))))
        });
        if s == 0 {
            return Err(Error::InternalPrimeSearchFailure("degree norm vanished".into()));
        }
        let d_squared = field.mul(field.reduce(order), field.inv(s));
        let degree = (1..=max_degree)
            .find(|&d| field.reduce(d * d) == d_squared)
            .ok_or_else(|| {
                Error::InternalPrimeSearchFailure(format!(
                    "no degree with square {d_squared} mod {prime}"
                ))
            })?;
        let values_mod: Vec<u64> = (0..k)
            .map(|j| {
                let t = field.mul(omega[j], field.reduce(degree));
                field.mul(t, field.inv(field.reduce(sizes[j])))
            })
            .collect();
        let values = (0..k)
            .map(|j| lift_value(&values_mod, &power_classes[j], degree, root, &field))
            .collect::<Result<Vec<_>>>()?;
        irreducibles.push(Character { degree, values });
    }
    irreducibles.sort_by(|a, b| (a.degree, Reverse(&a.values)).cmp(&(b.degree, Reverse(&b.values))));

    Ok(CharacterTable {
        group_order: g.order(),
        exponent,
        prime,
        classes: classes.classes.clone(),
        class_reps: reps,
        rep_orders,
        irreducibles,
    })
}

/// Eigenvalue multiplicities of `ρ(g)` from `χ(g^t) mod P`:
/// `μ_l = (1/m) Σ_t χ(g^t) ζ^{-lt}`.
fn lift_value(
    values_mod: &[u64],
    power_classes: &[usize],
    degree: u64,
    root: u64,
    field: &PrimeField,
) -> Result<CyclotomicValue> {
    let m = power_classes.len() as u64;
    let p = field.modulus();
    let zeta_inv = field.inv(field.pow(root, (p - 1) / m));
    let m_inv = field.inv(field.reduce(m));
    let mut multiplicities = Vec::with_capacity(m as usize);
    for l in 0..m {
        let step = field.pow(zeta_inv, l);
        let mut acc = 0;
        let mut z = 1;
        for &c in power_classes {
            acc = field.add(acc, field.mul(values_mod[c], z));
            z = field.mul(z, step);
        }
        let mu = field.mul(acc, m_inv);
        if mu > degree {
            return Err(Error::InternalPrimeSearchFailure(format!(
                "eigenvalue multiplicity {mu} exceeds degree {degree}"
            )));
        }
        multiplicities.push(mu as u32);
    }
    let value = CyclotomicValue {
        order: m as usize,
        multiplicities,
    };
    if value.total() != degree {
        return Err(Error::InternalPrimeSearchFailure(
            "eigenvalue multiplicities do not sum to the degree".into(),
        ));
    }
    Ok(value)
}

/// `{g : χ_i(g) = χ_i(1)}`.
pub fn kernel(table: &CharacterTable, i: usize) -> Subgroup {
    let members = table
        .kernel_classes(i)
        .iter()
        .zip(&table.classes)
        .filter(|(&inside, _)| inside)
        .flat_map(|(_, class)| class.iter().copied())
        .collect();
    Subgroup::from_members(members)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityViolation {
    /// `row`, `column`, `degree_sum`, `class_count` or `identity_value`.
    pub kind: &'static str,
    pub i: usize,
    pub j: usize,
    pub expected: i64,
    /// Canonical coefficients of the computed value in `Z[ζ_e]`.
    pub found: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub passed: bool,
    pub witness: Option<OrthogonalityViolation>,
}

/// Checks both orthogonality relations and `Σ d² = |G|` in exact arithmetic.
pub fn verify_orthogonality(table: &CharacterTable) -> OrthogonalityReport {
    match check_orthogonality(table) {
        Ok(()) => OrthogonalityReport {
            passed: true,
            witness: None,
        },
        Err(v) => OrthogonalityReport {
            passed: false,
            witness: Some(v),
        },
    }
}

fn check_orthogonality(table: &CharacterTable) -> Result<(), OrthogonalityViolation> {
    let k = table.num_classes();
    let order = table.group_order as i64;
    let violation = |kind, i, j, expected, found| OrthogonalityViolation {
        kind,
        i,
        j,
        expected,
        found,
    };
    if table.irreducibles.len() != k {
        return Err(violation("class_count", 0, 0, k as i64, vec![table.irreducibles.len() as i64]));
    }
    let degree_sum: i64 = table.irreducibles.iter().map(|c| (c.degree * c.degree) as i64).sum();
    if degree_sum != order {
        return Err(violation("degree_sum", 0, 0, order, vec![degree_sum]));
    }
    for (i, chi) in table.irreducibles.iter().enumerate() {
        if !chi.values[0].equals_degree(chi.degree) {
            return Err(violation("identity_value", i, 0, chi.degree as i64, vec![]));
        }
    }

    let n = table.exponent as usize;
    let ring = CyclotomicRing::<i64>::new(n);
    // sparse (exponent over ζ_n, multiplicity) terms for each χ_i(g_c)
    let sparse: Vec<Vec<Vec<(usize, i64)>>> = table
        .irreducibles
        .iter()
        .map(|chi| {
            chi.values
                .iter()
                .map(|v| {
                    let step = n / v.order;
                    v.multiplicities
                        .iter()
                        .enumerate()
                        .filter(|(_, &m)| m != 0)
                        .map(|(j, &m)| (j * step, m as i64))
                        .collect()
                })
                .collect()
        })
        .collect();
    let sizes: Vec<i64> = table.classes.iter().map(|c| c.len() as i64).collect();

    let accumulate = |acc: &mut Vec<i64>, a: &[(usize, i64)], b: &[(usize, i64)], w: i64| {
        for &(ea, ma) in a {
            for &(eb, mb) in b {
                acc[(ea + n - eb) % n] += w * ma * mb;
            }
        }
    };

    // Σ_c |C_c| χ_a(c) conj χ_b(c) = |G| δ_ab
    for a in 0..k {
        for b in a..k {
            let mut acc = vec![0i64; n];
            for c in 0..k {
                accumulate(&mut acc, &sparse[a][c], &sparse[b][c], sizes[c]);
            }
            let expected = if a == b { order } else { 0 };
            acc[0] -= expected;
            let z = ring.reduce(acc);
            if !z.is_zero() {
                let mut found = z.coeffs().to_vec();
                found[0] += expected;
                return Err(violation("row", a, b, expected, found));
            }
        }
    }
    // Σ_χ χ(c) conj χ(c') = δ_cc' |G| / |C_c|
    for c in 0..k {
        for d in c..k {
            let mut acc = vec![0i64; n];
            for row in &sparse {
                accumulate(&mut acc, &row[c], &row[d], 1);
            }
            let expected = if c == d { order / sizes[c] } else { 0 };
            acc[0] -= expected;
            let z = ring.reduce(acc);
            if !z.is_zero() {
                let mut found = z.coeffs().to_vec();
                found[0] += expected;
                return Err(violation("column", c, d, expected, found));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct, GroupSpec};

    fn degrees_of(spec: GroupSpec) -> Vec<u64> {
        let g = construct(&spec).unwrap();
        character_table(&g).unwrap().degrees()
    }

    #[test]
    fn prime_choice() {
        // e = 6, |G| = 6: need P > 2·3 = 6 and P ≡ 1 mod 6
        assert_eq!(choose_prime(6, 6).unwrap(), 7);
        assert_eq!(choose_prime(1, 1).unwrap(), 3);
        assert_eq!(choose_prime(20, 20).unwrap(), 41);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degrees_of(GroupSpec::Cyclic { n: 1 }), vec![1]);
        assert_eq!(degrees_of(GroupSpec::Symmetric { n: 3 }), vec![1, 1, 2]);
        assert_eq!(
            degrees_of(GroupSpec::SemidirectCyclic { n: 7, units: vec![2] }),
            vec![1, 1, 1, 3, 3]
        );
        assert_eq!(degrees_of(GroupSpec::Symmetric { n: 4 }), vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees_of(GroupSpec::Symmetric { n: 5 }), vec![1, 1, 4, 4, 5, 5, 6]);
    }

    #[test]
    fn s3_values() {
        let g = construct(&GroupSpec::Symmetric { n: 3 }).unwrap();
        let t = character_table(&g).unwrap();
        // trivial character first
        assert!(t.irreducibles[0].values.iter().all(|v| v.equals_degree(1)));
        // the 2-dimensional character: 2, −1 on 3-cycles, 0 on transpositions
        let chi = &t.irreducibles[2];
        let ring = CyclotomicRing::<i64>::new(6);
        for (c, v) in chi.values.iter().enumerate() {
            let exact = v.to_cyclotomic(&ring).as_integer().unwrap();
            let expected = match t.rep_orders[c] {
                1 => 2,
                2 => 0,
                3 => -1,
                _ => unreachable!(),
            };
            assert_eq!(exact, expected);
        }
        assert!(kernel(&t, 2).is_trivial());
        assert_eq!(kernel(&t, 0).order(), 6);
        assert_eq!(kernel(&t, 1).order(), 3);
    }

    #[test]
    fn klein_four_kernels() {
        let g = construct(&GroupSpec::Abelian { factors: vec![2, 2] }).unwrap();
        let t = character_table(&g).unwrap();
        let mut kernels: Vec<Subgroup> = (1..4).map(|i| kernel(&t, i)).collect();
        kernels.sort();
        kernels.dedup();
        assert_eq!(kernels.len(), 3);
        assert!(kernels.iter().all(|k| k.order() == 2));
    }

    #[test]
    fn orthogonality_passes_and_detects_faults() {
        for spec in [
            GroupSpec::Symmetric { n: 4 },
            GroupSpec::SemidirectCyclic { n: 9, units: vec![2] },
            GroupSpec::Dihedral { n: 6 },
        ] {
            let g = construct(&spec).unwrap();
            let mut t = character_table(&g).unwrap();
            assert!(verify_orthogonality(&t).passed);
            let last = t.irreducibles.len() - 1;
            t.irreducibles[last].values[1].multiplicities[0] += 1;
            let report = verify_orthogonality(&t);
            assert!(!report.passed);
            assert!(report.witness.is_some());
        }
    }

    #[test]
    fn cyclic_six_against_direct_linear_characters() {
        let g = construct(&GroupSpec::Cyclic { n: 6 }).unwrap();
        let t = character_table(&g).unwrap();
        assert!(verify_orthogonality(&t).passed);
        assert_eq!(t.degrees(), vec![1; 6]);
        // oracle: χ_a(x^j) = ζ_6^{aj}; compare the multisets of value rows
        // as exponents over ζ_6 indexed by the element's power of the generator
        let gen = g.generator_indices()[0];
        let mut oracle: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|j| a * j % 6).collect()).collect();
        let mut got: Vec<Vec<usize>> = t
            .irreducibles
            .iter()
            .map(|chi| {
                (0..6)
                    .map(|j| {
                        let x = g.pow(gen, j as u64);
                        let c = t.classes.iter().position(|cl| cl.contains(&x)).unwrap();
                        let v = chi.values[c].promote(6);
                        v.multiplicities.iter().position(|&m| m == 1).unwrap()
                    })
                    .collect()
            })
            .collect();
        oracle.sort();
        got.sort();
        assert_eq!(got, oracle);
    }
}
