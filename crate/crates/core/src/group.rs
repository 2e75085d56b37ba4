//! Explicitly enumerated permutation groups.
//!
//! Elements are indexed in the breadth-first order in which they are reached
//! from the identity by right multiplication with the generators, so the
//! indexing is a deterministic function of the generator sequence. Index 0 is
//! always the identity.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_LIMIT: usize = 4096;
pub const DEFAULT_JORDAN_LIMIT: usize = 512;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_jordan_order: usize,
    pub prime_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_ORDER_LIMIT,
            max_jordan_order: DEFAULT_JORDAN_LIMIT,
            prime_cap: crate::edbounds::DEFAULT_PRIME_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    /// Sorted element indices of each class, classes ordered by their
    /// smallest element (so class 0 is `{identity}`).
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    table: Option<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
}

/// A subgroup of some [`FiniteGroup`], stored as a sorted set of element
/// indices of that group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Wraps an index set; the caller guarantees closure.
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let gens = g.generating_set(&self.members);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commute(a, b)))
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        let gens = g.generating_set(&self.members);
        g.gen_indices
            .iter()
            .all(|&s| gens.iter().all(|&h| self.contains(g.conjugate(h, s))))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }
}

/// Closure of `generators` under composition, indexed breadth-first.
pub fn generate_group(
    generators: &[Permutation],
    degree: usize,
    limit: usize,
) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::InvalidSpec("degree must be at least 1".into()));
    }
    for s in generators {
        if s.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: s.degree(),
            });
        }
        Permutation::from_images(s.images().to_vec())?;
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut head = 0;
    while head < elements.len() {
        for s in generators {
            let y = elements[head].compose(s);
            if !index.contains_key(&y) {
                if elements.len() >= limit {
                    return Err(Error::OrderLimitExceeded {
                        what: "group order".into(),
                        limit,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        head += 1;
    }
    let gen_indices = generators.iter().map(|s| index[s]).collect();
    let inverses = elements.iter().map(|x| index[&x.inverse()]).collect();
    let orders = elements.iter().map(Permutation::order).collect();
    let n = elements.len();
    let table = (n <= TABLE_LIMIT).then(|| {
        let mut t = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                t.push(index[&a.compose(b)] as u32);
            }
        }
        t
    });
    Ok(FiniteGroup {
        degree,
        generators: generators.to_vec(),
        gen_indices,
        elements,
        index,
        inverses,
        orders,
        table,
        classes: OnceLock::new(),
    })
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mult(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `s a s^{-1}`
    pub fn conjugate(&self, a: usize, s: usize) -> usize {
        self.mult(self.mult(s, a), self.inverses[s])
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mult(a, b) == self.mult(b, a)
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut acc = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mult(acc, base);
            }
            base = self.mult(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| arith::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_indices;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                for &s in &self.gen_indices {
                    let y = self.conjugate(x, s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        orbit.push(y);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        self.classes().classes.clone()
    }

    /// The subgroup generated by the given elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &s in gens {
                let y = self.mult(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        Subgroup::from_members(members)
    }

    /// A small generating set for the subgroup with the given members, chosen
    /// greedily in index order.
    pub fn generating_set(&self, members: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial();
        for &x in members {
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
                if current.order() == members.len() {
                    break;
                }
            }
        }
        gens
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, elements: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = elements.to_vec();
        loop {
            let sub = self.subgroup_generated(&gens);
            let mut extra = Vec::new();
            for &h in &gens {
                for &s in &self.gen_indices {
                    let c = self.conjugate(h, s);
                    if !sub.contains(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return sub;
            }
            gens.extend(extra);
        }
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mult(a, b);
        let ba = self.mult(b, a);
        self.mult(ab, self.inverse(ba))
    }

    /// Derived subgroup, as the normal closure of generator commutators.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let g = &self.gen_indices;
        let mut comms = Vec::new();
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.order())
            .filter(|&x| self.gen_indices.iter().all(|&s| self.commute(x, s)))
            .collect();
        Subgroup { members }
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &[usize]) -> Subgroup {
        let gens = self.generating_set(set);
        let members = (0..self.order())
            .filter(|&x| gens.iter().all(|&a| self.commute(x, a)))
            .collect();
        Subgroup { members }
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generating_set(h.members());
        let members = (0..self.order())
            .filter(|&x| gens.iter().all(|&a| h.contains(self.conjugate(a, x))))
            .collect();
        Subgroup { members }
    }

    /// A Sylow `p`-subgroup.
    ///
    /// Starts from the cyclic group of a p-element of maximal order and keeps
    /// adjoining p-elements from the normaliser until the full p-part of the
    /// order is reached.
    pub fn sylow(&self, p: u64) -> Result<Subgroup> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = arith::p_part(self.order() as u64, p) as usize;
        if target == 1 {
            return Ok(Subgroup::trivial());
        }
        let is_p_element = |x: usize| arith::p_part(self.orders[x], p) == self.orders[x];
        let start = (0..self.order())
            .filter(|&x| is_p_element(x))
            .max_by_key(|&x| (self.orders[x], std::cmp::Reverse(x)))
            .expect("identity is a p-element");
        let mut gens = vec![start];
        let mut current = self.subgroup_generated(&gens);
        while current.order() < target {
            let normalizer = self.normalizer(&current);
            let next = normalizer
                .members()
                .iter()
                .copied()
                .find(|&y| !current.contains(y) && is_p_element(y))
                .ok_or_else(|| {
                    Error::InvalidInput("normaliser contains no new p-element".into())
                })?;
            gens.push(next);
            current = self.subgroup_generated(&gens);
        }
        Ok(current)
    }

    /// Minimal normal subgroups, in order of their smallest nonidentity element.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.order() == 1 {
            return Err(Error::TrivialGroup);
        }
        // A minimal normal subgroup is the normal closure of any of its
        // nonidentity elements, in particular of one of prime order.
        let classes = self.classes();
        let mut candidates: Vec<Subgroup> = Vec::new();
        for class in classes.classes.iter().skip(1) {
            let x = class[0];
            if !arith::is_prime(self.orders[x]) {
                continue;
            }
            let closure = self.normal_closure(&[x]);
            if !candidates.contains(&closure) {
                candidates.push(closure);
            }
        }
        let minimal: Vec<Subgroup> = candidates
            .iter()
            .filter(|n| {
                !candidates
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subset_of(n))
            })
            .cloned()
            .collect();
        let mut minimal = minimal;
        minimal.sort_by_key(|s| s.members()[1]);
        Ok(minimal)
    }

    /// The subgroup as a group in its own right, acting on the same points.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> Result<FiniteGroup> {
        let gens: Vec<Permutation> = self
            .generating_set(sub.members())
            .into_iter()
            .map(|x| self.elements[x].clone())
            .collect();
        generate_group(&gens, self.degree, usize::MAX)
    }

    /// Whether the action on points is faithful, i.e. only the identity fixes
    /// every point.
    pub fn acts_faithfully(&self) -> bool {
        self.elements.iter().skip(1).all(|p| !p.is_identity())
    }
}
