use std::collections::BTreeSet;

use edim_core::arith;
use edim_core::construct::{construct, GroupSpec};
use edim_core::edbounds::{edbounds_report, hn_claim_check_subgroup};
use edim_core::jordan::jordan_certificate;
use edim_core::monomial::{induce_monomial, minimal_faithful_characters, verify_embedding, DEFAULT_SIZE_LIMIT};
use edim_core::{rdim, FiniteGroup, Subgroup};

/// Conjugation orbits by brute force.
fn orbit_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..g.order()).map(|s| g.conjugate(x, s)).collect();
        for &y in &orbit {
            seen[y] = true;
        }
        sizes.push(orbit.len());
    }
    sizes.sort_unstable();
    sizes
}

#[test]
fn affine_group_of_order_20() {
    let g = construct(&GroupSpec::SemidirectCyclic { n: 5, units: vec![2] }).unwrap();
    assert_eq!(g.order(), 20);
    assert_eq!(orbit_sizes(&g), vec![1, 4, 5, 5, 5]);
    let mut sizes = g.classes().sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, orbit_sizes(&g));
    let lcm = (0..g.order()).fold(1, |acc, x| arith::lcm(acc, g.element_order(x)));
    assert_eq!(g.exponent(), lcm);
    assert_eq!(g.exponent(), 20);
    let sylow2 = g.sylow(2).unwrap();
    assert_eq!(sylow2.order(), 4);
    assert!(sylow2.members().iter().any(|&x| g.element_order(x) == 4));
    let gamma = construct(&GroupSpec::Gamma { p: 2, n: 2 }).unwrap();
    assert_eq!(gamma.order(), 20);
    assert_eq!(rdim(&g).unwrap().total_degree, rdim(&gamma).unwrap().total_degree);
}

#[test]
fn odd_dihedral_centers_are_trivial() {
    for n in (3..=25).step_by(2) {
        let g = construct(&GroupSpec::Dihedral { n }).unwrap();
        let brute: Vec<usize> = (0..g.order())
            .filter(|&x| (0..g.order()).all(|y| g.commute(x, y)))
            .collect();
        assert_eq!(brute, vec![0]);
        assert!(g.center().is_trivial());
    }
}

#[test]
fn full_units_family_jordan_indices() {
    for n in 2..=30 {
        let g = construct(&GroupSpec::full_units(n)).unwrap();
        let cert = jordan_certificate(&n.to_string(), &g, 1024).unwrap();
        // the translation subgroup Z/n is normal abelian of index φ(n)
        assert!(cert.strong_index as u64 <= arith::euler_phi(n), "n = {n}");
        assert!(cert.weak_index <= cert.strong_index);
        assert!(cert.square_relation_holds());
        assert!(cert.witnesses_valid(&g));
    }
}

#[test]
fn claim_on_the_unit_group_itself() {
    // (Z/n)^* for n = 16 is Z/2 × Z/4
    let g = construct(&GroupSpec::full_units(16)).unwrap();
    let h = Subgroup::from_members((0..g.order()).filter(|&x| g.element(x).apply(0) == 0).collect());
    assert_eq!(h.order(), 8);
    let claim = hn_claim_check_subgroup(&g, &h, 4).unwrap();
    assert_eq!(claim.decomposition, vec![(2, 1), (4, 1)]);
    assert!(claim.holds());
}

#[test]
fn monomial_root_orders_divide_the_exponent() {
    for spec in [
        GroupSpec::Symmetric { n: 4 },
        GroupSpec::full_units(9),
        GroupSpec::Dihedral { n: 6 },
        GroupSpec::Gamma { p: 3, n: 1 },
    ] {
        let g = construct(&spec).unwrap();
        let a = jordan_certificate("g", &g, 512).unwrap().strong_witness;
        let chars = minimal_faithful_characters(&g, &a).unwrap();
        for chi in &chars {
            assert_eq!(g.exponent() % chi.root_order, 0);
            assert!(chi.values.iter().all(|&v| v < chi.root_order));
        }
        let rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(rep.root_order, g.exponent());
        assert_eq!(rep.size(), g.order() / a.order() * chars.len().max(1));
        // A is normal, so its elements act diagonally
        for &x in a.members() {
            assert!(rep.images[x].line_permutation.is_identity());
        }
        assert!(verify_embedding(&g, &rep).passed);
    }
}

#[test]
fn non_normal_subgroup_still_embeds() {
    let g = construct(&GroupSpec::Symmetric { n: 4 }).unwrap();
    // ⟨(0 1 2 3)⟩ is abelian and not normal
    let four_cycle = (0..g.order()).find(|&x| g.element_order(x) == 4).unwrap();
    let a = g.subgroup_generated(&[four_cycle]);
    assert!(!a.is_normal(&g));
    let chars = minimal_faithful_characters(&g, &a).unwrap();
    let rep = induce_monomial(&g, &a, &chars, DEFAULT_SIZE_LIMIT).unwrap();
    assert_eq!(rep.size(), 6);
    assert!(verify_embedding(&g, &rep).passed);
}

#[test]
fn reports_are_consistent_across_kinds() {
    for spec in [
        GroupSpec::Cyclic { n: 1 },
        GroupSpec::Cyclic { n: 12 },
        GroupSpec::Abelian { factors: vec![2, 4, 4] },
        GroupSpec::Symmetric { n: 4 },
        GroupSpec::SemidirectCyclic { n: 7, units: vec![2] },
        GroupSpec::Dihedral { n: 8 },
    ] {
        let g = construct(&spec).unwrap();
        let r = edbounds_report(&spec.label(), &g, None).unwrap();
        assert!(r.consistent(), "{r:?}");
        assert!(r.roots_of_unity_assumed);
        if g.order() > 1 {
            assert!(r.ed_lower >= 1);
        }
    }
}
