//! Monomial embeddings `G ↪ μ_e^{ds} ⋊ S_{ds}` induced from a faithful
//! diagonal representation of an abelian subgroup.
//!
//! With coset representatives `g_1, …, g_s` of `A` and characters
//! `χ_1, …, χ_d` of `A`, the lines spanned by `g_i e_j` are permuted by `G`:
//! writing `g g_i = g_{i'} a` with `a ∈ A`, the element `g` sends `g_i e_j`
//! to `χ_j(a) · g_{i'} e_j`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::Permutation;
use crate::repdim::{rdim_of_abelian_subgroup, rdim_with_table};

pub const DEFAULT_SIZE_LIMIT: usize = 4096;
/// Full pairwise homomorphism checks up to this order; sampling above it.
pub const FULL_CHECK_ORDER: usize = 512;

/// `M e_x = ζ_e^{exponents[x]} e_{π(x)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialMatrix {
    #[serde(serialize_with = "serialize_perm")]
    pub line_permutation: Permutation,
    pub exponents: Vec<u64>,
    pub root_order: u64,
}

fn serialize_perm<S: serde::Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(p.images())
}

impl MonomialMatrix {
    pub fn identity(size: usize, root_order: u64) -> Self {
        MonomialMatrix {
            line_permutation: Permutation::identity(size),
            exponents: vec![0; size],
            root_order,
        }
    }

    pub fn size(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_identity(&self) -> bool {
        self.line_permutation.is_identity() && self.exponents.iter().all(|&x| x == 0)
    }

    pub fn is_valid(&self) -> bool {
        self.line_permutation.degree() == self.exponents.len()
            && self.root_order >= 1
            && self.exponents.iter().all(|&x| x < self.root_order)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &MonomialMatrix) -> MonomialMatrix {
        let e = self.root_order;
        let exponents = (0..other.size())
            .map(|x| (other.exponents[x] + self.exponents[other.line_permutation.apply(x)]) % e)
            .collect();
        MonomialMatrix {
            line_permutation: self.line_permutation.compose(&other.line_permutation),
            exponents,
            root_order: e,
        }
    }
}

/// A linear character of an abelian subgroup, as exponents of `ζ_{root_order}`
/// aligned with the subgroup's sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    pub root_order: u64,
    pub values: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct MonomialRep {
    pub subgroup: Subgroup,
    pub coset_reps: Vec<usize>,
    /// `(coset index i, character index j)` for each line.
    pub basis_labels: Vec<(usize, usize)>,
    pub images: Vec<MonomialMatrix>,
    pub root_order: u64,
}

impl MonomialRep {
    pub fn size(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn characters_used(&self) -> usize {
        if self.coset_reps.is_empty() {
            0
        } else {
            self.size() / self.coset_reps.len()
        }
    }
}

/// A minimal set of linear characters of the abelian subgroup `a` whose
/// kernels meet trivially.
pub fn minimal_faithful_characters(g: &FiniteGroup, a: &Subgroup) -> Result<Vec<LinearCharacter>> {
    if !a.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    if a.is_trivial() {
        return Ok(vec![]);
    }
    let h = g.subgroup_as_group(a)?;
    let table = character_table(&h)?;
    let cert = rdim_with_table(&h, &table)?;
    let e_a = h.exponent();
    let classes = h.classes();
    let local: Vec<usize> = a
        .members()
        .iter()
        .map(|&x| h.index_of(g.element(x)).expect("member of the subgroup"))
        .collect();
    Ok(cert
        .constituents
        .iter()
        .map(|&i| {
            let chi = &table.irreducibles[i];
            let values = local
                .iter()
                .map(|&y| {
                    let v = &chi.values[classes.class_of[y]];
                    let l = v.multiplicities.iter().position(|&m| m == 1).expect("linear");
                    l as u64 * (e_a / v.order as u64)
                })
                .collect();
            LinearCharacter {
                root_order: e_a,
                values,
            }
        })
        .collect())
}

/// `Ind_A^G` of the sum of `chars`, as monomial matrices over `μ_e`,
/// `e = exp(G)`. An empty character list on the trivial subgroup induces
/// from the trivial character, giving the regular representation.
pub fn induce_monomial(
    g: &FiniteGroup,
    a: &Subgroup,
    chars: &[LinearCharacter],
    size_limit: usize,
) -> Result<MonomialRep> {
    let trivial_char;
    let chars = if chars.is_empty() && a.is_trivial() {
        trivial_char = [LinearCharacter {
            root_order: 1,
            values: vec![0],
        }];
        &trivial_char[..]
    } else {
        chars
    };
    let position: HashMap<usize, usize> =
        a.members().iter().enumerate().map(|(p, &x)| (x, p)).collect();
    for chi in chars {
        if chi.values.len() != a.order() {
            return Err(Error::InvalidInput("character length differs from |A|".into()));
        }
    }
    let faithful = (1..a.order()).all(|p| chars.iter().any(|chi| chi.values[p] != 0));
    if !faithful || chars.is_empty() {
        return Err(Error::UnfaithfulCharacters);
    }

    let e = g.exponent();
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut coset_reps = Vec::new();
    for x in 0..n {
        if coset_of[x] == usize::MAX {
            for &y in a.members() {
                coset_of[g.mult(x, y)] = coset_reps.len();
            }
            coset_reps.push(x);
        }
    }
    let s = coset_reps.len();
    let d = chars.len();
    if s * d > size_limit {
        return Err(Error::SizeLimitExceeded {
            size: s * d,
            limit: size_limit,
        });
    }
    let scaled: Vec<Vec<u64>> = chars
        .iter()
        .map(|chi| {
            let f = e / chi.root_order;
            chi.values.iter().map(|&v| v * f % e).collect()
        })
        .collect();
    let basis_labels: Vec<(usize, usize)> =
        (0..s).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
    let images = (0..n)
        .map(|x| {
            let mut images = vec![0u32; s * d];
            let mut exponents = vec![0u64; s * d];
            for (i, &gi) in coset_reps.iter().enumerate() {
                let y = g.mult(x, gi);
                let i2 = coset_of[y];
                let elt = g.mult(g.inverse(coset_reps[i2]), y);
                let p = position[&elt];
                for j in 0..d {
                    images[i * d + j] = (i2 * d + j) as u32;
                    exponents[i * d + j] = scaled[j][p];
                }
            }
            MonomialMatrix {
                line_permutation: Permutation::from_images(images)
                    .expect("cosets are permuted bijectively"),
                exponents,
                root_order: e,
            }
        })
        .collect();
    Ok(MonomialRep {
        subgroup: a.clone(),
        coset_reps,
        basis_labels,
        images,
        root_order: e,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub passed: bool,
    /// `validity`, `homomorphism`, `kernel`, `dimension` or `block_structure`.
    pub failed_check: Option<String>,
    pub witness: Option<(usize, usize)>,
    pub size: usize,
    pub bound: usize,
    pub pairs_checked: usize,
}

/// Independent recheck of an induced monomial representation.
pub fn verify_embedding(g: &FiniteGroup, rep: &MonomialRep) -> EmbeddingReport {
    let a = &rep.subgroup;
    let rdim_a = rdim_of_abelian_subgroup(g, a).unwrap_or(usize::MAX).max(1);
    let bound = (g.order() / a.order()).saturating_mul(rdim_a);
    let mut report = EmbeddingReport {
        passed: false,
        failed_check: None,
        witness: None,
        size: rep.size(),
        bound,
        pairs_checked: 0,
    };
    let fail = |mut r: EmbeddingReport, check: &str, witness: Option<(usize, usize)>| {
        r.failed_check = Some(check.to_string());
        r.witness = witness;
        r
    };

    if rep.images.len() != g.order() {
        return fail(report, "validity", None);
    }
    if let Some(x) = rep
        .images
        .iter()
        .position(|m| !m.is_valid() || m.size() != rep.size() || m.root_order != rep.root_order)
    {
        return fail(report, "validity", Some((x, x)));
    }

    let n = g.order();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if n <= FULL_CHECK_ORDER {
        pairs.extend((0..n).flat_map(|x| (0..n).map(move |y| (x, y))));
    } else {
        let gens = g.generator_indices();
        pairs.extend(gens.iter().flat_map(|&x| gens.iter().map(move |&y| (x, y))));
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6e6f);
        for _ in 0..10 * n {
            pairs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
    }
    for &(x, y) in &pairs {
        report.pairs_checked += 1;
        if rep.images[g.mult(x, y)] != rep.images[x].mul(&rep.images[y]) {
            return fail(report, "homomorphism", Some((x, y)));
        }
    }

    if let Some(x) = (1..n).find(|&x| rep.images[x].is_identity()) {
        return fail(report, "kernel", Some((x, x)));
    }
    if !rep.images[0].is_identity() {
        return fail(report, "homomorphism", Some((0, 0)));
    }

    if rep.size() > bound {
        return fail(report, "dimension", None);
    }

    if a.is_normal(g) {
        // elements of a normal A fix every line and act by scalars on it
        if let Some(&x) = a
            .members()
            .iter()
            .find(|&&x| !rep.images[x].line_permutation.is_identity())
        {
            return fail(report, "block_structure", Some((x, x)));
        }
    }
    report.passed = true;
    report
}

/// JSON shape for external checking.
#[derive(Debug, Clone, Serialize)]
pub struct MonomialRepJson {
    pub size: usize,
    pub root_order: u64,
    pub subgroup_order: usize,
    pub basis_labels: Vec<(usize, usize)>,
    pub elements: Vec<MonomialElementJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonomialElementJson {
    /// Point images of the group element itself.
    pub element: Vec<u32>,
    pub permutation: Vec<u32>,
    pub exponents: Vec<u64>,
}

impl MonomialRepJson {
    pub fn new(g: &FiniteGroup, rep: &MonomialRep) -> Self {
        MonomialRepJson {
            size: rep.size(),
            root_order: rep.root_order,
            subgroup_order: rep.subgroup.order(),
            basis_labels: rep.basis_labels.clone(),
            elements: rep
                .images
                .iter()
                .enumerate()
                .map(|(x, m)| MonomialElementJson {
                    element: g.element(x).images().to_vec(),
                    permutation: m.line_permutation.images().to_vec(),
                    exponents: m.exponents.clone(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct, GroupSpec};
    use crate::repdim::{rdim, rdim_abelian};

    #[test]
    fn minimal_characters() {
        let c7 = construct(&GroupSpec::Cyclic { n: 7 }).unwrap();
        assert_eq!(minimal_faithful_characters(&c7, &c7.whole()).unwrap().len(), 1);
        let v4 = construct(&GroupSpec::Abelian { factors: vec![2, 2] }).unwrap();
        let chars = minimal_faithful_characters(&v4, &v4.whole()).unwrap();
        assert_eq!(chars.len(), 2);
        // kernels meet trivially
        for p in 1..4 {
            assert!(chars.iter().any(|c| c.values[p] != 0));
        }
        assert!(minimal_faithful_characters(&v4, &Subgroup::trivial()).unwrap().is_empty());
        let g = construct(&GroupSpec::Abelian { factors: vec![2, 4, 4] }).unwrap();
        assert_eq!(
            minimal_faithful_characters(&g, &g.whole()).unwrap().len(),
            rdim_abelian(&[2, 4, 4]).unwrap()
        );
        let s3 = construct(&GroupSpec::Symmetric { n: 3 }).unwrap();
        assert_eq!(minimal_faithful_characters(&s3, &s3.whole()), Err(Error::NotAbelian));
    }

    #[test]
    fn abelian_group_gives_diagonal_rep() {
        let g = construct(&GroupSpec::Abelian { factors: vec![2, 6] }).unwrap();
        let a = g.whole();
        let chars = minimal_faithful_characters(&g, &a).unwrap();
        let rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(rep.size(), 2);
        assert!(rep.images.iter().all(|m| m.line_permutation.is_identity()));
        assert!(verify_embedding(&g, &rep).passed);
    }

    #[test]
    fn s3_from_a3() {
        let g = construct(&GroupSpec::Symmetric { n: 3 }).unwrap();
        let a = g.sylow(3).unwrap();
        let chars = minimal_faithful_characters(&g, &a).unwrap();
        assert_eq!(chars.len(), 1);
        let rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(rep.size(), 2);
        assert_eq!(rep.root_order, 6);
        // entries lie in μ_3 ⊂ μ_6: even exponents only
        assert!(rep.images.iter().all(|m| m.exponents.iter().all(|&x| x % 2 == 0)));
        let report = verify_embedding(&g, &rep);
        assert!(report.passed, "{report:?}");
        assert_eq!(report.pairs_checked, 36);
    }

    #[test]
    fn affine_group_of_order_20() {
        let g = construct(&GroupSpec::SemidirectCyclic { n: 5, units: vec![2] }).unwrap();
        let a = g.sylow(5).unwrap();
        let chars = minimal_faithful_characters(&g, &a).unwrap();
        let rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(rep.size(), 4);
        assert_eq!(rdim(&g).unwrap().total_degree, 4);
        assert!(verify_embedding(&g, &rep).passed);
    }

    #[test]
    fn corrupted_exponent_is_caught() {
        let g = construct(&GroupSpec::Symmetric { n: 3 }).unwrap();
        let a = g.sylow(3).unwrap();
        let chars = minimal_faithful_characters(&g, &a).unwrap();
        let mut rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
        rep.images[1].exponents[0] = (rep.images[1].exponents[0] + 1) % rep.root_order;
        let report = verify_embedding(&g, &rep);
        assert!(!report.passed);
        assert_eq!(report.failed_check.as_deref(), Some("homomorphism"));
        assert!(report.witness.is_some());
    }

    #[test]
    fn trivial_group_is_vacuous() {
        let g = construct(&GroupSpec::Cyclic { n: 1 }).unwrap();
        let a = g.whole();
        let chars = minimal_faithful_characters(&g, &a).unwrap();
        let rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
        assert!(verify_embedding(&g, &rep).passed);
    }

    #[test]
    fn unfaithful_and_oversize() {
        let g = construct(&GroupSpec::Abelian { factors: vec![2, 2] }).unwrap();
        let a = g.whole();
        let mut chars = minimal_faithful_characters(&g, &a).unwrap();
        chars.pop();
        assert!(matches!(
            induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT),
            Err(Error::UnfaithfulCharacters)
        ));
        let s4 = construct(&GroupSpec::Symmetric { n: 4 }).unwrap();
        let t = Subgroup::trivial();
        assert!(matches!(
            induce_monomial(&s4, &t, &[], 10),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
